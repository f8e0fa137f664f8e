//! Finite topological spaces given by their explicit family of opens.

use serde::Serialize;
use thiserror::Error;

use crate::bits::{self, PointSet, MAX_POINTS};
use crate::bounds::Bounds;
use crate::error::LimitError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TopologyError {
    #[error("carrier has {0} points; at most 64 are supported")]
    TooManyPoints(usize),
    #[error("open set {0:#b} mentions points outside the carrier")]
    OutOfCarrier(PointSet),
    #[error("the empty set is not open")]
    MissingEmpty,
    #[error("the carrier is not open")]
    MissingCarrier,
    #[error("opens {0:#b} and {1:#b} have a non-open intersection")]
    NotIntersectionClosed(PointSet, PointSet),
    #[error("opens {0:#b} and {1:#b} have a non-open union")]
    NotUnionClosed(PointSet, PointSet),
    #[error(transparent)]
    SizeLimitExceeded(#[from] LimitError),
}

/// A finite topological space. Points are `0..points`; `opens` is sorted and
/// deduplicated.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TopSpace {
    labels: Vec<String>,
    opens: Vec<PointSet>,
}

impl TopSpace {
    /// Validates that `opens` contains `∅` and the carrier and is closed under
    /// binary unions and intersections (which suffices on a finite carrier).
    pub fn new(labels: Vec<String>, mut opens: Vec<PointSet>) -> Result<Self, TopologyError> {
        let n = labels.len();
        if n > MAX_POINTS {
            return Err(TopologyError::TooManyPoints(n));
        }
        let all = bits::full(n);
        if let Some(&bad) = opens.iter().find(|&&u| !bits::is_subset(u, all)) {
            return Err(TopologyError::OutOfCarrier(bad));
        }
        bits::canonicalize(&mut opens);
        if opens.binary_search(&0).is_err() {
            return Err(TopologyError::MissingEmpty);
        }
        if opens.binary_search(&all).is_err() {
            return Err(TopologyError::MissingCarrier);
        }
        for (i, &u) in opens.iter().enumerate() {
            for &v in &opens[i + 1..] {
                if opens.binary_search(&(u & v)).is_err() {
                    return Err(TopologyError::NotIntersectionClosed(u, v));
                }
                if opens.binary_search(&(u | v)).is_err() {
                    return Err(TopologyError::NotUnionClosed(u, v));
                }
            }
        }
        Ok(TopSpace { labels, opens })
    }

    /// Points labeled `0..n`.
    pub fn unlabeled(n: usize, opens: Vec<PointSet>) -> Result<Self, TopologyError> {
        Self::new((0..n).map(|i| i.to_string()).collect(), opens)
    }

    pub fn discrete(n: usize) -> Self {
        Self::unlabeled(n, (0..=bits::full(n)).collect()).expect("discrete topology")
    }

    pub fn indiscrete(n: usize) -> Self {
        Self::unlabeled(n, vec![0, bits::full(n)]).expect("indiscrete topology")
    }

    /// `{x, y}` with opens `∅, {x}, {x, y}`.
    pub fn sierpinski() -> Self {
        Self::new(vec!["x".into(), "y".into()], vec![0b00, 0b01, 0b11]).expect("Sierpinski space")
    }

    pub fn points(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn opens(&self) -> &[PointSet] {
        &self.opens
    }

    pub fn carrier(&self) -> PointSet {
        bits::full(self.points())
    }

    pub fn is_open(&self, set: PointSet) -> bool {
        self.opens.binary_search(&set).is_ok()
    }

    /// Closed sets in increasing order of the complementary open.
    pub fn closed_sets(&self) -> Vec<PointSet> {
        let all = self.carrier();
        let mut closed: Vec<PointSet> = self.opens.iter().map(|&u| all & !u).collect();
        bits::canonicalize(&mut closed);
        closed
    }

    /// Smallest closed set containing `x`.
    pub fn closure_of_point(&self, x: usize) -> PointSet {
        let all = self.carrier();
        self.opens
            .iter()
            .filter(|&&u| !bits::contains(u, x))
            .fold(all, |acc, &u| acc & !u)
    }

    /// Distinct points have distinct families of open neighbourhoods.
    pub fn is_t0(&self) -> bool {
        let n = self.points();
        (0..n).all(|x| {
            (x + 1..n).all(|y| {
                self.opens
                    .iter()
                    .any(|&u| bits::contains(u, x) != bits::contains(u, y))
            })
        })
    }

    /// Irreducible closed sets: nonempty and not the union of two proper
    /// closed subsets.
    pub fn irreducible_closed_sets(&self, bounds: &Bounds) -> Result<Vec<PointSet>, LimitError> {
        LimitError::check("closed-set enumeration", self.points(), bounds.space_points)?;
        let closed = self.closed_sets();
        Ok(closed
            .iter()
            .copied()
            .filter(|&c| c != 0)
            .filter(|&c| {
                let proper: Vec<PointSet> = closed
                    .iter()
                    .copied()
                    .filter(|&a| a != c && bits::is_subset(a, c))
                    .collect();
                !proper
                    .iter()
                    .any(|&a| proper.iter().any(|&b| a | b == c))
            })
            .collect())
    }

    /// Every irreducible closed set is the closure of exactly one point.
    /// Uniqueness of the generic point builds T0 into the notion.
    pub fn is_sober(&self, bounds: &Bounds) -> Result<bool, LimitError> {
        Ok(self.sobriety_failure(bounds)?.is_none())
    }

    /// An irreducible closed set together with its generic points, when that
    /// list does not have exactly one member.
    pub fn sobriety_failure(
        &self,
        bounds: &Bounds,
    ) -> Result<Option<(PointSet, Vec<usize>)>, LimitError> {
        let closures: Vec<PointSet> = (0..self.points()).map(|x| self.closure_of_point(x)).collect();
        for c in self.irreducible_closed_sets(bounds)? {
            let generic: Vec<usize> = (0..self.points()).filter(|&x| closures[x] == c).collect();
            if generic.len() != 1 {
                return Ok(Some((c, generic)));
            }
        }
        Ok(None)
    }

    /// `set` is compact: every cover of it by opens has a subcover with at most
    /// `|set|` members. Covers are enumerated among the opens meeting `set`
    /// when there are at most `bounds.compact_cover_opens` of them; otherwise
    /// only the cover by all of them is examined.
    pub fn is_compact(&self, set: PointSet, bounds: &Bounds) -> bool {
        let meeting: Vec<PointSet> = self.opens.iter().copied().filter(|&u| u & set != 0).collect();
        let has_small_subcover = |cover: &[PointSet]| {
            // choose, for each point, the first member containing it
            let picked: Vec<PointSet> = bits::points(set)
                .filter_map(|x| cover.iter().copied().find(|&u| bits::contains(u, x)))
                .collect();
            picked.len() <= set.count_ones() as usize
                && bits::is_subset(set, picked.iter().fold(0, |m, &u| m | u))
        };
        let covers = |cover: &[PointSet]| bits::is_subset(set, cover.iter().fold(0, |m, &u| m | u));
        if meeting.len() <= bounds.compact_cover_opens {
            (0u64..1 << meeting.len()).all(|mask| {
                let cover: Vec<PointSet> = bits::points(mask).map(|i| meeting[i]).collect();
                !covers(&cover) || has_small_subcover(&cover)
            })
        } else {
            !covers(&meeting) || has_small_subcover(&meeting)
        }
    }

    /// For every point `x` and open `U ∋ x` there are an open `V` and a
    /// compact `K` with `x ∈ V ⊆ K ⊆ U`.
    pub fn is_locally_compact(&self, bounds: &Bounds) -> Result<bool, LimitError> {
        Ok(self.local_compactness_failure(bounds)?.is_none())
    }

    /// A point and an open neighbourhood admitting no `V ⊆ K` pair.
    pub fn local_compactness_failure(
        &self,
        bounds: &Bounds,
    ) -> Result<Option<(usize, PointSet)>, LimitError> {
        LimitError::check("cover enumeration", self.points(), bounds.space_points)?;
        for x in 0..self.points() {
            for &u in self.opens.iter().filter(|&&u| bits::contains(u, x)) {
                let found = self
                    .opens
                    .iter()
                    .filter(|&&v| bits::contains(v, x) && bits::is_subset(v, u))
                    .any(|&v| {
                        // candidate compact sets between V and U
                        let free = u & !v;
                        subsets_of(free).any(|extra| self.is_compact(v | extra, bounds))
                    });
                if !found {
                    return Ok(Some((x, u)));
                }
            }
        }
        Ok(None)
    }

    /// Summary of the separation and compactness properties.
    pub fn profile(&self, bounds: &Bounds) -> Result<SpaceProfile, LimitError> {
        Ok(SpaceProfile {
            points: self.points(),
            opens: self.opens.len(),
            t0: self.is_t0(),
            sober: self.is_sober(bounds)?,
            locally_compact: self.is_locally_compact(bounds)?,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpaceProfile {
    pub points: usize,
    pub opens: usize,
    pub t0: bool,
    pub sober: bool,
    pub locally_compact: bool,
}

/// All subsets of `set`, starting with the empty set.
fn subsets_of(set: PointSet) -> impl Iterator<Item = PointSet> {
    let mut next = Some(0u64);
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == set { None } else { Some((cur.wrapping_sub(set)) & set) };
        Some(cur)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn validation_errors() {
        assert_eq!(
            TopSpace::unlabeled(2, vec![0b01, 0b11]).unwrap_err(),
            TopologyError::MissingEmpty
        );
        assert_eq!(
            TopSpace::unlabeled(2, vec![0, 0b01]).unwrap_err(),
            TopologyError::MissingCarrier
        );
        assert_eq!(
            TopSpace::unlabeled(2, vec![0, 0b01, 0b10, 0b11]).unwrap().opens().len(),
            4
        );
        assert_eq!(
            TopSpace::unlabeled(3, vec![0, 0b011, 0b110, 0b111]).unwrap_err(),
            TopologyError::NotIntersectionClosed(0b011, 0b110)
        );
        assert_eq!(
            TopSpace::unlabeled(3, vec![0, 0b001, 0b010, 0b111]).unwrap_err(),
            TopologyError::NotUnionClosed(0b001, 0b010)
        );
        assert_eq!(
            TopSpace::unlabeled(1, vec![0, 0b11]).unwrap_err(),
            TopologyError::OutOfCarrier(0b11)
        );
    }

    #[test]
    fn t0_examples() {
        assert!(TopSpace::sierpinski().is_t0());
        assert!(!TopSpace::indiscrete(2).is_t0());
        assert!(TopSpace::discrete(3).is_t0());
    }

    #[test]
    fn sober_examples() {
        let b = Bounds::default();
        let s = TopSpace::sierpinski();
        assert_eq!(s.irreducible_closed_sets(&b).unwrap(), vec![0b10, 0b11]);
        assert!(s.is_sober(&b).unwrap());
        let ind = TopSpace::indiscrete(2);
        assert!(!ind.is_sober(&b).unwrap());
        assert_eq!(ind.sobriety_failure(&b).unwrap(), Some((0b11, vec![0, 1])));
        assert!(TopSpace::discrete(3).is_sober(&b).unwrap());
    }

    #[test]
    fn sober_bound() {
        let b = Bounds {
            space_points: 1,
            ..Bounds::default()
        };
        assert!(TopSpace::sierpinski().is_sober(&b).is_err());
        assert!(TopSpace::sierpinski().is_locally_compact(&b).is_err());
    }

    #[test]
    fn locally_compact_examples() {
        let b = Bounds::default();
        for t in [
            TopSpace::sierpinski(),
            TopSpace::discrete(2),
            TopSpace::indiscrete(3),
            TopSpace::discrete(0),
        ] {
            assert!(t.is_locally_compact(&b).unwrap());
            for k in 0..=t.carrier() {
                assert!(t.is_compact(k, &b));
            }
        }
    }

    #[test]
    fn subset_enumeration() {
        let subs: Vec<_> = subsets_of(0b101).collect();
        assert_eq!(subs, vec![0, 0b001, 0b100, 0b101]);
        assert_eq!(subsets_of(0).collect::<Vec<_>>(), vec![0]);
    }
}
