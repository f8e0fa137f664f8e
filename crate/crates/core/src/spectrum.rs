//! The prime spectrum of a finite frame with its hull-kernel topology.
//!
//! Points of the spectrum are indexed by their position in
//! [`FiniteLattice::primes`]; `Δ(a)` is the set of primes `p` with `a ≰ p`,
//! stored as a [`PointSet`] over those indices.

use serde::Serialize;

use crate::bits::{self, PointSet, MAX_POINTS};
use crate::bounds::Bounds;
use crate::error::LimitError;
use crate::lattice::{Elem, FiniteLattice};
use crate::topology::{TopSpace, TopologyError};

/// Primes of a lattice and the Δ table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    primes: Vec<Elem>,
    delta: Vec<PointSet>,
}

impl Spectrum {
    pub fn new(lattice: &FiniteLattice) -> Result<Self, LimitError> {
        let primes = lattice.primes();
        LimitError::check("spectrum points", primes.len(), MAX_POINTS)?;
        let delta = lattice
            .elements()
            .map(|a| {
                primes
                    .iter()
                    .enumerate()
                    .filter(|&(_, &p)| !lattice.leq(a, p))
                    .fold(0, |m, (i, _)| m | bits::singleton(i))
            })
            .collect();
        Ok(Spectrum { primes, delta })
    }

    pub fn primes(&self) -> &[Elem] {
        &self.primes
    }

    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.primes.is_empty()
    }

    /// `Δ(a)` over spectrum indices.
    pub fn delta(&self, a: Elem) -> PointSet {
        self.delta[a]
    }

    pub fn delta_table(&self) -> &[PointSet] {
        &self.delta
    }

    /// Spectrum index of a prime element.
    pub fn index_of(&self, prime: Elem) -> Option<usize> {
        self.primes.iter().position(|&p| p == prime)
    }

    /// `Δ(a)` as lattice elements.
    pub fn delta_elements(&self, a: Elem) -> Vec<Elem> {
        bits::points(self.delta[a]).map(|i| self.primes[i]).collect()
    }
}

/// `Δ_L(a) = {p ∈ Spec(L) : a ≰ p}` as a list of prime elements.
pub fn delta(lattice: &FiniteLattice, a: Elem) -> Vec<Elem> {
    lattice
        .primes()
        .into_iter()
        .filter(|&p| !lattice.leq(a, p))
        .collect()
}

/// The spectrum with its hull-kernel topology `Δ_L(L)` and the designated
/// family `Δ_L(S)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectrumSpace {
    pub spectrum: Spectrum,
    pub topology: TopSpace,
    pub designated: Vec<PointSet>,
}

pub fn spectrum_space(
    lattice: &FiniteLattice,
    designated: &[Elem],
) -> Result<SpectrumSpace, SpectrumError> {
    let spectrum = Spectrum::new(lattice)?;
    let labels = spectrum.primes().iter().map(|&p| lattice.label(p)).collect();
    let topology = TopSpace::new(labels, spectrum.delta_table().to_vec())?;
    let mut family: Vec<PointSet> = designated.iter().map(|&a| spectrum.delta(a)).collect();
    bits::canonicalize(&mut family);
    Ok(SpectrumSpace {
        spectrum,
        topology,
        designated: family,
    })
}

#[derive(Debug, thiserror::Error)]
pub enum SpectrumError {
    #[error(transparent)]
    SizeLimitExceeded(#[from] LimitError),
    #[error("Δ(L) is not a topology: {0}")]
    NotATopology(#[from] TopologyError),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "law", rename_all = "kebab-case")]
pub enum DeltaViolation {
    Bottom { delta: Vec<Elem> },
    Top { delta: Vec<Elem>, spectrum: Vec<Elem> },
    Join { subset: Vec<Elem>, delta_of_join: Vec<Elem>, union: Vec<Elem> },
    Meet { a: Elem, b: Elem, delta_of_meet: Vec<Elem>, intersection: Vec<Elem> },
    NotSurjective { missing: Vec<Elem> },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DeltaHomReport {
    /// All subsets were checked for join preservation (otherwise pairs only).
    pub exhaustive_joins: bool,
    pub joins_checked: usize,
    pub meets_checked: usize,
    pub violations: Vec<DeltaViolation>,
}

impl DeltaHomReport {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Checks that `Δ` sends `0` to `∅`, `1` to the spectrum, joins to unions,
/// meets to intersections, and is onto the hull-kernel topology. Joins of
/// all subsets are checked up to `bounds.subset_joins` elements, binary joins
/// above that.
pub fn check_delta_frame_hom(
    lattice: &FiniteLattice,
    bounds: &Bounds,
) -> Result<DeltaHomReport, SpectrumError> {
    let spec = Spectrum::new(lattice)?;
    let as_elems = |s: PointSet| -> Vec<Elem> { bits::points(s).map(|i| spec.primes()[i]).collect() };
    let mut violations = Vec::new();
    let all = bits::full(spec.len());

    if spec.delta(lattice.bottom()) != 0 {
        violations.push(DeltaViolation::Bottom {
            delta: as_elems(spec.delta(lattice.bottom())),
        });
    }
    if spec.delta(lattice.top()) != all {
        violations.push(DeltaViolation::Top {
            delta: as_elems(spec.delta(lattice.top())),
            spectrum: spec.primes().to_vec(),
        });
    }

    let n = lattice.size();
    let exhaustive_joins = n <= bounds.subset_joins;
    let subsets: Box<dyn Iterator<Item = Vec<Elem>>> = if exhaustive_joins {
        Box::new((0u64..1 << n).map(|m| bits::points(m).collect()))
    } else {
        Box::new((0..n).flat_map(move |a| (a..n).map(move |b| vec![a, b])))
    };
    let mut joins_checked = 0;
    for subset in subsets {
        joins_checked += 1;
        let lhs = spec.delta(lattice.join_all(subset.iter().copied()));
        let rhs = subset.iter().fold(0, |m, &a| m | spec.delta(a));
        if lhs != rhs {
            violations.push(DeltaViolation::Join {
                subset,
                delta_of_join: as_elems(lhs),
                union: as_elems(rhs),
            });
        }
    }

    let mut meets_checked = 0;
    for a in lattice.elements() {
        for b in lattice.elements() {
            meets_checked += 1;
            let lhs = spec.delta(lattice.meet(a, b));
            let rhs = spec.delta(a) & spec.delta(b);
            if lhs != rhs {
                violations.push(DeltaViolation::Meet {
                    a,
                    b,
                    delta_of_meet: as_elems(lhs),
                    intersection: as_elems(rhs),
                });
            }
        }
    }

    // Onto Δ(L): the image must already be a topology (closed under unions
    // and intersections), i.e. nothing is generated beyond it.
    let image: std::collections::BTreeSet<PointSet> = spec.delta_table().iter().copied().collect();
    let missing: Vec<PointSet> = image
        .iter()
        .flat_map(|&u| image.iter().flat_map(move |&v| [u | v, u & v]))
        .filter(|s| !image.contains(s))
        .collect();
    if let Some(&m) = missing.first() {
        violations.push(DeltaViolation::NotSurjective { missing: as_elems(m) });
    }

    Ok(DeltaHomReport {
        exhaustive_joins,
        joins_checked,
        meets_checked,
        violations,
    })
}

/// `a ↦ Δ(a)` is injective. For a spatial lattice this certifies that `Δ` is a
/// frame isomorphism onto the hull-kernel topology.
pub fn delta_iso_check(lattice: &FiniteLattice) -> Result<bool, LimitError> {
    let spec = Spectrum::new(lattice)?;
    let mut seen: Vec<PointSet> = spec.delta_table().to_vec();
    bits::canonicalize(&mut seen);
    Ok(seen.len() == lattice.size())
}
