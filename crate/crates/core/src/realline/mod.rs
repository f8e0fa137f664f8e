//! An exact symbolic model of `(ℝ, 𝓛_{l⁺om})`, where `𝓛_{l⁺om}` is the
//! smopology of finite unions of bounded-above open intervals, together with
//! a catalog of four self-maps and their classification.
//!
//! Only this smopology is modelled; other smopologies on ℝ sharing the natural
//! topology as weakly open sets would slot in as further membership tests.

mod catalog;
mod real;
mod set;

pub use catalog::{
    catalog, classification_table, classify_map, frame_hom_verdict, CatalogMap, Classification,
    FrameHomVerdict, TableRow, Witness,
};
pub use real::{Atom, Real, Q};
pub use set::{Endpoint, Interval, Periodic, SymbolicRealSet};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RealLineError {
    #[error("outside the domain: {0}")]
    Domain(String),
    #[error("could not separate {0} within the precision cap")]
    Incomparable(String),
    #[error("unsupported shape: {0}")]
    UnsupportedShape(String),
    #[error("{0} is not weakly continuous")]
    NotWeaklyContinuous(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("internal inconsistency: {0}")]
    Internal(String),
}

/// `S ∈ 𝓛_{l⁺om}`.
pub fn lplusom_membership(s: &SymbolicRealSet) -> bool {
    s.lplusom_membership()
}
