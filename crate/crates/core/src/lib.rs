//! Exact, finite-scale computations for frames, prime spectra and locally
//! small spaces.
//!
//! The crate is organised bottom-up:
//!
//! * [`lattice`] and [`poset`]: validated finite lattices, distributivity,
//!   the frame law, primes, the way-below relation, and the Birkhoff
//!   downset-lattice generator.
//! * [`topology`] and [`spectrum`]: finite topological spaces (T0, sobriety,
//!   local compactness) and the hull-kernel spectrum of a frame.
//! * [`space`]: locally small spaces (smopologies) and bounded / continuous /
//!   weakly continuous maps.
//! * [`frame_pair`]: pairs `(L, L_s)`, frame homomorphisms, the dominating and
//!   compatible conditions, and right Galois adjoints.
//! * [`duality`]: the functors Ω and Σ, the unit λ and counit σ, and the law
//!   suites for the spectral adjunction and the two dualities.
//! * [`realline`]: an exact symbolic model of the real line with the smopology
//!   of finite unions of bounded-above open intervals.
//! * [`io`] and [`generate`]: JSON instance formats and deterministic
//!   generators.
//!
//! Every check is exact. Finite instances make several notions collapse
//! (weakly open sets equal smops, every map is bounded, every validated frame
//! pair designates the whole frame); the test suites assert these collapses
//! explicitly rather than relying on them.

pub mod bits;
pub mod bounds;
pub mod duality;
pub mod error;
pub mod frame_pair;
pub mod generate;
pub mod io;
pub mod lattice;
pub mod poset;
pub mod realline;
pub mod space;
pub mod spectrum;
pub mod topology;

pub use bounds::Bounds;
pub use error::{Error, LimitError};
pub use frame_pair::{FrameHom, FramePair, SpecialLocalicMap};
pub use lattice::FiniteLattice;
pub use poset::Poset;
pub use space::{LocallySmallSpace, SpaceMap};
pub use topology::TopSpace;
