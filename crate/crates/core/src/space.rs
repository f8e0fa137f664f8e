//! Finite locally small spaces and their maps.
//!
//! A smopology on a finite carrier is a family of subsets containing `∅`,
//! closed under binary unions and intersections, and covering the carrier.
//! On a finite carrier the weakly open sets (unions of subfamilies of smops)
//! coincide with the smops themselves; [`LocallySmallSpace::weakly_open`]
//! still computes the union closure rather than assuming it.

use serde::Serialize;
use thiserror::Error;

use crate::bits::{self, PointSet, MAX_POINTS};
use crate::bounds::Bounds;
use crate::error::LimitError;
use crate::lattice::FiniteLattice;
use crate::topology::TopSpace;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SpaceError {
    #[error("carrier has {0} points; at most 64 are supported")]
    TooManyPoints(usize),
    #[error("set {0:#b} mentions points outside the carrier")]
    OutOfCarrier(PointSet),
    #[error("the empty set is not a smop")]
    MissingEmpty,
    #[error("smops {0:#b} and {1:#b} have an intersection that is not a smop")]
    NotIntersectionClosed(PointSet, PointSet),
    #[error("smops {0:#b} and {1:#b} have a union that is not a smop")]
    NotUnionClosed(PointSet, PointSet),
    #[error("point {0} lies in no smop")]
    DoesNotCover(usize),
    #[error("map table has {got} entries for a carrier of {expected} points")]
    MapLength { got: usize, expected: usize },
    #[error("point {point} is sent to {image}, outside the target carrier")]
    MapOutOfRange { point: usize, image: usize },
    #[error("set {0:#b} is not open in the given topology or fails to generate it")]
    NotABasis(PointSet),
    #[error("basis is not a sublattice with zero: {0:#b} and {1:#b}")]
    NotSublattice(PointSet, PointSet),
    #[error("ext of point {point} is {ext:#b}, which is not prime among weakly open sets")]
    NotPrime { point: usize, ext: PointSet },
    #[error("maps are not composable: middle spaces differ")]
    NotComposable,
}

/// A finite carrier with a validated smopology. Smops are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LocallySmallSpace {
    labels: Vec<String>,
    smops: Vec<PointSet>,
}

impl LocallySmallSpace {
    /// Checks (LS1) `∅` is a smop, (LS2) binary unions and intersections of
    /// smops are smops, (LS3) every point lies in some smop — in that order.
    /// The empty carrier with smops `{∅}` is accepted.
    pub fn new(labels: Vec<String>, mut smops: Vec<PointSet>) -> Result<Self, SpaceError> {
        let n = labels.len();
        if n > MAX_POINTS {
            return Err(SpaceError::TooManyPoints(n));
        }
        let all = bits::full(n);
        if let Some(&bad) = smops.iter().find(|&&u| !bits::is_subset(u, all)) {
            return Err(SpaceError::OutOfCarrier(bad));
        }
        bits::canonicalize(&mut smops);
        if smops.binary_search(&0).is_err() {
            return Err(SpaceError::MissingEmpty);
        }
        for (i, &u) in smops.iter().enumerate() {
            for &v in &smops[i + 1..] {
                if smops.binary_search(&(u & v)).is_err() {
                    return Err(SpaceError::NotIntersectionClosed(u, v));
                }
                if smops.binary_search(&(u | v)).is_err() {
                    return Err(SpaceError::NotUnionClosed(u, v));
                }
            }
        }
        let covered = smops.iter().fold(0, |m, &u| m | u);
        if let Some(x) = (0..n).find(|&x| !bits::contains(covered, x)) {
            return Err(SpaceError::DoesNotCover(x));
        }
        Ok(LocallySmallSpace { labels, smops })
    }

    pub fn unlabeled(n: usize, smops: Vec<PointSet>) -> Result<Self, SpaceError> {
        Self::new((0..n).map(|i| i.to_string()).collect(), smops)
    }

    pub fn discrete(n: usize) -> Self {
        Self::unlabeled(n, (0..=bits::full(n)).collect()).expect("discrete smopology")
    }

    /// `{0, .., n-1}` with smops `∅, {0}, {0,1}, ..`.
    pub fn chain(n: usize) -> Self {
        Self::unlabeled(n, (0..=n).map(bits::full).collect()).expect("chain smopology")
    }

    pub fn points(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn smops(&self) -> &[PointSet] {
        &self.smops
    }

    pub fn carrier(&self) -> PointSet {
        bits::full(self.points())
    }

    pub fn is_smop(&self, set: PointSet) -> bool {
        self.smops.binary_search(&set).is_ok()
    }

    /// The weakly open sets: unions of subfamilies of smops, computed by
    /// closing under binary unions until nothing new appears.
    pub fn weakly_open_sets(&self) -> Vec<PointSet> {
        let mut family = self.smops.clone();
        loop {
            let mut next = family.clone();
            for (i, &u) in family.iter().enumerate() {
                for &v in &family[i + 1..] {
                    next.push(u | v);
                }
            }
            bits::canonicalize(&mut next);
            if next.len() == family.len() {
                return family;
            }
            family = next;
        }
    }

    /// The topology of weakly open sets.
    pub fn weakly_open(&self) -> TopSpace {
        let mut opens = self.weakly_open_sets();
        // the carrier is the union of all smops (LS3)
        opens.push(self.carrier());
        TopSpace::new(self.labels.clone(), opens).expect("union closure of a smopology is a topology")
    }

    /// The smops separate points.
    pub fn is_t0(&self) -> bool {
        let n = self.points();
        (0..n).all(|x| {
            (x + 1..n).all(|y| {
                self.smops
                    .iter()
                    .any(|&u| bits::contains(u, x) != bits::contains(u, y))
            })
        })
    }

    /// `ext{x}`: the union of all weakly open sets not containing `x`. Checked
    /// to be prime in the frame of weakly open sets.
    pub fn ext_point(&self, x: usize) -> Result<PointSet, SpaceError> {
        let opens = self.weakly_open_sets();
        let ext = opens
            .iter()
            .filter(|&&w| !bits::contains(w, x))
            .fold(0, |m, &w| m | w);
        let frame = FiniteLattice::from_sets(&opens).expect("weakly open sets form a lattice");
        let idx = opens.binary_search(&ext).expect("finite unions of weakly open sets are weakly open");
        if frame.primes().contains(&idx) {
            Ok(ext)
        } else {
            Err(SpaceError::NotPrime { point: x, ext })
        }
    }

    /// The topological space of weakly open sets is sober.
    pub fn is_topologically_sober(&self, bounds: &Bounds) -> Result<bool, LimitError> {
        self.weakly_open().is_sober(bounds)
    }

    /// The topological space of weakly open sets is locally compact.
    pub fn is_topologically_locally_compact(&self, bounds: &Bounds) -> Result<bool, LimitError> {
        self.weakly_open().is_locally_compact(bounds)
    }

    /// Expands a topology to a locally small space by choosing a basis that is
    /// a sublattice containing `∅` and covering the carrier.
    pub fn from_topology_basis(top: &TopSpace, basis: &[PointSet]) -> Result<Self, SpaceError> {
        let mut basis = basis.to_vec();
        bits::canonicalize(&mut basis);
        if let Some(&b) = basis.iter().find(|&&b| !top.is_open(b)) {
            return Err(SpaceError::NotABasis(b));
        }
        if basis.binary_search(&0).is_err() {
            return Err(SpaceError::NotSublattice(0, 0));
        }
        for (i, &u) in basis.iter().enumerate() {
            for &v in &basis[i + 1..] {
                if basis.binary_search(&(u & v)).is_err() || basis.binary_search(&(u | v)).is_err() {
                    return Err(SpaceError::NotSublattice(u, v));
                }
            }
        }
        let covered = basis.iter().fold(0, |m, &u| m | u);
        if let Some(x) = (0..top.points()).find(|&x| !bits::contains(covered, x)) {
            return Err(SpaceError::DoesNotCover(x));
        }
        for &open in top.opens() {
            let generated = basis
                .iter()
                .filter(|&&b| bits::is_subset(b, open))
                .fold(0, |m, &b| m | b);
            if generated != open {
                return Err(SpaceError::NotABasis(open));
            }
        }
        Self::new(top.labels().to_vec(), basis)
    }

    /// Renders a point set with the carrier labels, e.g. `{a,b}`.
    pub fn set_label(&self, set: PointSet) -> String {
        let names: Vec<&str> = bits::points(set).map(|i| self.labels[i].as_str()).collect();
        format!("{{{}}}", names.join(","))
    }
}

/// `{u ∩ v : u ∈ U, v ∈ V}`, sorted and deduplicated.
pub fn family_intersection(u: &[PointSet], v: &[PointSet]) -> Vec<PointSet> {
    let mut out: Vec<PointSet> = u.iter().flat_map(|&a| v.iter().map(move |&b| a & b)).collect();
    bits::canonicalize(&mut out);
    out
}

/// A total function between the carriers of two locally small spaces.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SpaceMap {
    source: LocallySmallSpace,
    target: LocallySmallSpace,
    map: Vec<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MapClassification {
    pub bounded: bool,
    pub continuous: bool,
    pub weakly_continuous: bool,
}

impl SpaceMap {
    pub fn new(
        source: LocallySmallSpace,
        target: LocallySmallSpace,
        map: Vec<usize>,
    ) -> Result<Self, SpaceError> {
        if map.len() != source.points() {
            return Err(SpaceError::MapLength {
                got: map.len(),
                expected: source.points(),
            });
        }
        if let Some((point, &image)) = map.iter().enumerate().find(|&(_, &y)| y >= target.points()) {
            return Err(SpaceError::MapOutOfRange { point, image });
        }
        Ok(SpaceMap { source, target, map })
    }

    pub fn identity(space: &LocallySmallSpace) -> Self {
        SpaceMap {
            source: space.clone(),
            target: space.clone(),
            map: (0..space.points()).collect(),
        }
    }

    pub fn source(&self) -> &LocallySmallSpace {
        &self.source
    }

    pub fn target(&self) -> &LocallySmallSpace {
        &self.target
    }

    pub fn table(&self) -> &[usize] {
        &self.map
    }

    pub fn apply(&self, x: usize) -> usize {
        self.map[x]
    }

    pub fn preimage(&self, set: PointSet) -> PointSet {
        bits::preimage(&self.map, set)
    }

    /// `other ∘ self`.
    pub fn then(&self, other: &SpaceMap) -> Result<SpaceMap, SpaceError> {
        if self.target != other.source {
            return Err(SpaceError::NotComposable);
        }
        Ok(SpaceMap {
            source: self.source.clone(),
            target: other.target.clone(),
            map: self.map.iter().map(|&y| other.map[y]).collect(),
        })
    }

    /// A source smop contained in no preimage of a target smop.
    pub fn boundedness_failure(&self) -> Option<PointSet> {
        let pre: Vec<PointSet> = self.target.smops.iter().map(|&v| self.preimage(v)).collect();
        self.source
            .smops
            .iter()
            .copied()
            .find(|&w| !pre.iter().any(|&p| bits::is_subset(w, p)))
    }

    /// Every source smop refines into the preimage of some target smop.
    pub fn is_bounded(&self) -> bool {
        self.boundedness_failure().is_none()
    }

    /// A pair `(V, W)` with `f⁻¹(V) ∩ W` not a source smop.
    pub fn continuity_failure(&self) -> Option<(PointSet, PointSet)> {
        for &v in &self.target.smops {
            let pre = self.preimage(v);
            for &w in &self.source.smops {
                if !self.source.is_smop(pre & w) {
                    return Some((v, w));
                }
            }
        }
        None
    }

    /// `f⁻¹(𝓛_Y) ∩₁ 𝓛_X ⊆ 𝓛_X`.
    pub fn is_continuous(&self) -> bool {
        self.continuity_failure().is_none()
    }

    /// A weakly open target set whose preimage is not weakly open.
    pub fn weak_continuity_failure(&self) -> Option<PointSet> {
        let source_wo = self.source.weakly_open_sets();
        self.target
            .weakly_open_sets()
            .into_iter()
            .find(|&v| source_wo.binary_search(&self.preimage(v)).is_err())
    }

    pub fn is_weakly_continuous(&self) -> bool {
        self.weak_continuity_failure().is_none()
    }

    pub fn classify(&self) -> MapClassification {
        MapClassification {
            bounded: self.is_bounded(),
            continuous: self.is_continuous(),
            weakly_continuous: self.is_weakly_continuous(),
        }
    }

    /// Bijection `g` with `g(𝓛_X) = 𝓛_Y` and `g⁻¹(𝓛_Y) = 𝓛_X`.
    pub fn is_isomorphism(&self) -> bool {
        let n = self.source.points();
        if n != self.target.points() {
            return false;
        }
        let image = self.map.iter().fold(0, |m, &y| m | bits::singleton(y));
        if image != self.target.carrier() {
            return false;
        }
        let mut forward: Vec<PointSet> =
            self.source.smops.iter().map(|&w| bits::image(&self.map, w)).collect();
        bits::canonicalize(&mut forward);
        let mut backward: Vec<PointSet> = self.target.smops.iter().map(|&v| self.preimage(v)).collect();
        bits::canonicalize(&mut backward);
        forward == self.target.smops && backward == self.source.smops
    }
}
