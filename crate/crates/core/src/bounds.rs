//! Enumeration bounds for the brute-force oracles.
//!
//! None of these limits is mathematical; they only keep exhaustive
//! enumerations at desk scale. Each can be overridden through an environment
//! variable (see [`Bounds::from_env`]).

use std::env;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Largest lattice on which the way-below relation is decided by
    /// enumerating every directed subset.
    pub directed_subsets: usize,
    /// Largest lattice on which joins of *all* subsets are checked (frame law,
    /// join preservation of homomorphisms and of Δ).
    pub subset_joins: usize,
    /// Number of random subsets sampled by the frame-law tripwire above
    /// `subset_joins`.
    pub frame_law_samples: usize,
    /// Largest poset turned into a downset lattice.
    pub downset_poset: usize,
    /// Largest `n` for labeled poset enumeration.
    pub poset_enumeration: usize,
    /// Largest carrier for closed-set and cover enumerations.
    pub space_points: usize,
    /// Largest number of opens meeting a set whose covers are all enumerated
    /// by the compactness check.
    pub compact_cover_opens: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            directed_subsets: 12,
            subset_joins: 12,
            frame_law_samples: 256,
            downset_poset: 16,
            poset_enumeration: 5,
            space_points: 16,
            compact_cover_opens: 12,
        }
    }
}

impl Bounds {
    /// Defaults overridden by `LSS_DIRECTED_SUBSET_BOUND`, `LSS_SUBSET_JOIN_BOUND`,
    /// `LSS_FRAME_LAW_SAMPLES`, `LSS_DOWNSET_POSET_BOUND`,
    /// `LSS_POSET_ENUM_BOUND`, `LSS_SPACE_POINT_BOUND` and
    /// `LSS_COMPACT_COVER_BOUND`. Unparsable values are ignored.
    pub fn from_env() -> Self {
        let mut b = Bounds::default();
        let read = |key: &str, slot: &mut usize| {
            if let Some(v) = env::var(key).ok().and_then(|s| s.trim().parse().ok()) {
                *slot = v;
            }
        };
        read("LSS_DIRECTED_SUBSET_BOUND", &mut b.directed_subsets);
        read("LSS_SUBSET_JOIN_BOUND", &mut b.subset_joins);
        read("LSS_FRAME_LAW_SAMPLES", &mut b.frame_law_samples);
        read("LSS_DOWNSET_POSET_BOUND", &mut b.downset_poset);
        read("LSS_POSET_ENUM_BOUND", &mut b.poset_enumeration);
        read("LSS_SPACE_POINT_BOUND", &mut b.space_points);
        read("LSS_COMPACT_COVER_BOUND", &mut b.compact_cover_opens);
        b
    }
}
