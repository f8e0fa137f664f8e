//! Finite lattices given by an order matrix.
//!
//! Elements are indices `0..size`. Construction validates the partial order and
//! precomputes meet and join tables, so every [`FiniteLattice`] value is a
//! bounded lattice. Finite lattices are complete, hence a finite lattice is a
//! frame exactly when it is distributive.

use std::fmt;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use thiserror::Error;

use crate::bits::PointSet;
use crate::bounds::Bounds;
use crate::error::LimitError;

pub type Elem = usize;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OrderViolation {
    Reflexivity,
    Antisymmetry,
    Transitivity,
}

impl fmt::Display for OrderViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderViolation::Reflexivity => "reflexivity",
            OrderViolation::Antisymmetry => "antisymmetry",
            OrderViolation::Transitivity => "transitivity",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("order matrix is not square: row {row} has {len} entries, expected {size}")]
    NotSquare { row: usize, len: usize, size: usize },
    #[error("not a partial order: {violation} fails at ({a}, {b})")]
    NotAPartialOrder {
        a: Elem,
        b: Elem,
        violation: OrderViolation,
    },
    #[error("elements {0} and {1} have no meet")]
    MissingMeet(Elem, Elem),
    #[error("elements {0} and {1} have no join")]
    MissingJoin(Elem, Elem),
    #[error("no bottom element")]
    NoBottom,
    #[error("no top element")]
    NoTop,
    #[error("label count {labels} does not match lattice size {size}")]
    LabelCount { labels: usize, size: usize },
    #[error(transparent)]
    SizeLimitExceeded(#[from] LimitError),
}

/// A validated finite bounded lattice.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteLattice {
    size: usize,
    leq: Vec<bool>,
    meet: Vec<Elem>,
    join: Vec<Elem>,
    bottom: Elem,
    top: Elem,
    labels: Option<Vec<String>>,
}

/// How a verdict was reached.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    /// Every object named by the definition was enumerated.
    Exhaustive,
    /// The instance exceeded the oracle bound and the finite-lattice
    /// equivalence was used instead.
    Shortcut,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decision {
    pub holds: bool,
    pub method: Method,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "method", rename_all = "kebab-case")]
pub enum FrameLawMethod {
    /// `a ∧ ⋁S = ⋁(a ∧ s)` checked for every element and every subset.
    Exhaustive { subsets: usize },
    /// Binary distributivity (equivalent for finite lattices) plus a
    /// deterministic sample of subsets as a tripwire.
    BinaryReduction { sampled: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FrameLawCheck {
    pub holds: bool,
    #[serde(flatten)]
    pub method: FrameLawMethod,
    /// An element and a subset on which the law fails.
    pub counterexample: Option<(Elem, Vec<Elem>)>,
}

impl FiniteLattice {
    /// Validates an order matrix (`leq[i][j]` means `i <= j`).
    pub fn new(leq: Vec<Vec<bool>>) -> Result<Self, LatticeError> {
        let size = leq.len();
        for (row, r) in leq.iter().enumerate() {
            if r.len() != size {
                return Err(LatticeError::NotSquare {
                    row,
                    len: r.len(),
                    size,
                });
            }
        }
        Self::from_flat(size, leq.into_iter().flatten().collect())
    }

    /// Validates a row-major `size × size` order relation.
    pub fn from_flat(size: usize, leq: Vec<bool>) -> Result<Self, LatticeError> {
        assert_eq!(leq.len(), size * size, "flat order relation has wrong length");
        check_partial_order(size, &leq)?;
        let at = |a: usize, b: usize| leq[a * size + b];

        let mut meet = vec![0; size * size];
        let mut join = vec![0; size * size];
        for a in 0..size {
            for b in a..size {
                let m = (0..size)
                    .filter(|&c| at(c, a) && at(c, b))
                    .find(|&c| (0..size).all(|d| !(at(d, a) && at(d, b)) || at(d, c)))
                    .ok_or(LatticeError::MissingMeet(a, b))?;
                let j = (0..size)
                    .filter(|&c| at(a, c) && at(b, c))
                    .find(|&c| (0..size).all(|d| !(at(a, d) && at(b, d)) || at(c, d)))
                    .ok_or(LatticeError::MissingJoin(a, b))?;
                meet[a * size + b] = m;
                meet[b * size + a] = m;
                join[a * size + b] = j;
                join[b * size + a] = j;
            }
        }
        let bottom = (0..size)
            .find(|&c| (0..size).all(|d| at(c, d)))
            .ok_or(LatticeError::NoBottom)?;
        let top = (0..size)
            .find(|&c| (0..size).all(|d| at(d, c)))
            .ok_or(LatticeError::NoTop)?;
        Ok(FiniteLattice {
            size,
            leq,
            meet,
            join,
            bottom,
            top,
            labels: None,
        })
    }

    /// The lattice of `sets` ordered by inclusion. The family must be a
    /// lattice under inclusion (for instance any finite topology).
    pub fn from_sets(sets: &[PointSet]) -> Result<Self, LatticeError> {
        let n = sets.len();
        let mut leq = Vec::with_capacity(n * n);
        for &a in sets {
            for &b in sets {
                leq.push(a & !b == 0);
            }
        }
        Self::from_flat(n, leq)
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self, LatticeError> {
        if labels.len() != self.size {
            return Err(LatticeError::LabelCount {
                labels: labels.len(),
                size: self.size,
            });
        }
        self.labels = Some(labels);
        Ok(self)
    }

    /// A chain `0 < 1 < .. < n-1`.
    pub fn chain(n: usize) -> Self {
        let leq = (0..n * n).map(|k| k / n <= k % n).collect();
        Self::from_flat(n, leq).expect("chains are lattices")
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size
    }

    #[inline]
    pub fn leq(&self, a: Elem, b: Elem) -> bool {
        self.leq[a * self.size + b]
    }

    #[inline]
    pub fn meet(&self, a: Elem, b: Elem) -> Elem {
        self.meet[a * self.size + b]
    }

    #[inline]
    pub fn join(&self, a: Elem, b: Elem) -> Elem {
        self.join[a * self.size + b]
    }

    pub fn bottom(&self) -> Elem {
        self.bottom
    }

    pub fn top(&self) -> Elem {
        self.top
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn label(&self, a: Elem) -> String {
        match &self.labels {
            Some(l) => l[a].clone(),
            None => a.to_string(),
        }
    }

    /// Row-major order relation.
    pub fn order_matrix(&self) -> Vec<Vec<bool>> {
        self.leq.chunks(self.size).map(<[bool]>::to_vec).collect()
    }

    pub fn join_all<I: IntoIterator<Item = Elem>>(&self, elems: I) -> Elem {
        elems.into_iter().fold(self.bottom, |acc, e| self.join(acc, e))
    }

    pub fn meet_all<I: IntoIterator<Item = Elem>>(&self, elems: I) -> Elem {
        elems.into_iter().fold(self.top, |acc, e| self.meet(acc, e))
    }

    /// Join of the elements whose bits are set in `mask` (sizes ≤ 64).
    pub fn join_mask(&self, mask: u64) -> Elem {
        self.join_all(crate::bits::points(mask))
    }

    /// A triple violating `a∧(b∨c) = (a∧b)∨(a∧c)`, if any.
    pub fn distributivity_counterexample(&self) -> Option<(Elem, Elem, Elem)> {
        for a in self.elements() {
            for b in self.elements() {
                for c in self.elements() {
                    let lhs = self.meet(a, self.join(b, c));
                    let rhs = self.join(self.meet(a, b), self.meet(a, c));
                    if lhs != rhs {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }

    pub fn is_distributive(&self) -> bool {
        self.distributivity_counterexample().is_none()
    }

    /// Checks `a ∧ ⋁S = ⋁{a ∧ s : s ∈ S}` for every `a` and every subset `S`
    /// when the lattice has at most `bounds.subset_joins` elements. Larger
    /// lattices are checked through binary distributivity (to which the law
    /// reduces for finite lattices) plus `bounds.frame_law_samples` random
    /// subsets drawn from a fixed seed.
    pub fn check_frame_law(&self, bounds: &Bounds) -> FrameLawCheck {
        let law_fails = |a: Elem, subset: &[Elem]| {
            let lhs = self.meet(a, self.join_all(subset.iter().copied()));
            let rhs = self.join_all(subset.iter().map(|&s| self.meet(a, s)));
            lhs != rhs
        };
        if self.size <= bounds.subset_joins {
            let subsets = 1usize << self.size;
            for mask in 0..subsets as u64 {
                let subset: Vec<Elem> = crate::bits::points(mask).collect();
                if let Some(a) = self.elements().find(|&a| law_fails(a, &subset)) {
                    return FrameLawCheck {
                        holds: false,
                        method: FrameLawMethod::Exhaustive { subsets },
                        counterexample: Some((a, subset)),
                    };
                }
            }
            return FrameLawCheck {
                holds: true,
                method: FrameLawMethod::Exhaustive { subsets },
                counterexample: None,
            };
        }

        let sampled = bounds.frame_law_samples;
        let method = FrameLawMethod::BinaryReduction { sampled };
        if let Some((a, b, c)) = self.distributivity_counterexample() {
            return FrameLawCheck {
                holds: false,
                method,
                counterexample: Some((a, vec![b, c])),
            };
        }
        let mut rng = ChaCha8Rng::seed_from_u64(0x5eed_f4a3);
        let mut pool: Vec<Elem> = self.elements().collect();
        for _ in 0..sampled {
            pool.shuffle(&mut rng);
            let k = rng.gen_range(0..=self.size);
            let subset = &pool[..k];
            let a = rng.gen_range(0..self.size);
            if law_fails(a, subset) {
                return FrameLawCheck {
                    holds: false,
                    method,
                    counterexample: Some((a, subset.to_vec())),
                };
            }
        }
        FrameLawCheck {
            holds: true,
            method,
            counterexample: None,
        }
    }

    /// Non-unit primes: `p ≠ 1` such that `p = a∧b` forces `p = a` or `p = b`.
    /// Brute force over all pairs.
    pub fn primes(&self) -> Vec<Elem> {
        self.elements()
            .filter(|&p| p != self.top)
            .filter(|&p| {
                self.elements().all(|a| {
                    self.elements()
                        .all(|b| self.meet(a, b) != p || a == p || b == p)
                })
            })
            .collect()
    }

    /// True iff every element is the meet of the primes above it (the empty
    /// meet being the top).
    pub fn is_spatial(&self) -> bool {
        let primes = self.primes();
        self.elements().all(|a| {
            let m = self.meet_all(primes.iter().copied().filter(|&p| self.leq(a, p)));
            m == a
        })
    }

    /// `b ≪ a`, decided by enumerating every directed subset. Fails when the
    /// lattice has more than `bounds.directed_subsets` elements.
    pub fn way_below(&self, b: Elem, a: Elem, bounds: &Bounds) -> Result<bool, LimitError> {
        Ok(WayBelowOracle::new(self, bounds.directed_subsets)?.way_below(b, a))
    }

    /// The whole way-below relation as a row-major matrix (`[b * size + a]`
    /// means `b ≪ a`). Above the oracle bound the finite-lattice identity
    /// `b ≪ a ⇔ b ≤ a` is used and the result is marked as a shortcut.
    pub fn way_below_relation(&self, bounds: &Bounds) -> (Vec<bool>, Method) {
        match WayBelowOracle::new(self, bounds.directed_subsets) {
            Ok(oracle) => {
                let rel = (0..self.size * self.size)
                    .map(|k| oracle.way_below(k / self.size, k % self.size))
                    .collect();
                (rel, Method::Exhaustive)
            }
            Err(_) => (self.leq.clone(), Method::Shortcut),
        }
    }

    /// Every element is the join of the elements way below it. Errors above
    /// the directed-subset bound; see [`FiniteLattice::continuity`] for the
    /// variant that falls back to the shortcut.
    pub fn is_continuous_frame(&self, bounds: &Bounds) -> Result<bool, LimitError> {
        let oracle = WayBelowOracle::new(self, bounds.directed_subsets)?;
        Ok(self.continuity_from(|b, a| oracle.way_below(b, a)))
    }

    pub fn continuity(&self, bounds: &Bounds) -> Decision {
        let (rel, method) = self.way_below_relation(bounds);
        let n = self.size;
        Decision {
            holds: self.continuity_from(|b, a| rel[b * n + a]),
            method,
        }
    }

    fn continuity_from(&self, way_below: impl Fn(Elem, Elem) -> bool) -> bool {
        self.elements()
            .all(|a| self.join_all(self.elements().filter(|&b| way_below(b, a))) == a)
    }
}

fn check_partial_order(size: usize, leq: &[bool]) -> Result<(), LatticeError> {
    let at = |a: usize, b: usize| leq[a * size + b];
    for a in 0..size {
        if !at(a, a) {
            return Err(LatticeError::NotAPartialOrder {
                a,
                b: a,
                violation: OrderViolation::Reflexivity,
            });
        }
    }
    for a in 0..size {
        for b in 0..size {
            if a != b && at(a, b) && at(b, a) {
                return Err(LatticeError::NotAPartialOrder {
                    a,
                    b,
                    violation: OrderViolation::Antisymmetry,
                });
            }
            if at(a, b) {
                if let Some(c) = (0..size).find(|&c| at(b, c) && !at(a, c)) {
                    return Err(LatticeError::NotAPartialOrder {
                        a,
                        b: c,
                        violation: OrderViolation::Transitivity,
                    });
                }
            }
        }
    }
    Ok(())
}

/// All directed subsets of a lattice, each with its join, enumerated once so
/// that many way-below queries can share the work.
pub struct WayBelowOracle<'a> {
    lattice: &'a FiniteLattice,
    directed: Vec<(u64, Elem)>,
}

impl<'a> WayBelowOracle<'a> {
    pub fn new(lattice: &'a FiniteLattice, bound: usize) -> Result<Self, LimitError> {
        LimitError::check("directed-subset enumeration", lattice.size, bound.min(63))?;
        let n = lattice.size;
        // up[x]: elements above x
        let up: Vec<u64> = (0..n)
            .map(|x| (0..n).filter(|&y| lattice.leq(x, y)).fold(0, |m, y| m | 1 << y))
            .collect();
        let directed = (1u64..1 << n)
            .filter(|&d| {
                crate::bits::points(d).all(|x| {
                    crate::bits::points(d).all(|y| up[x] & up[y] & d != 0)
                })
            })
            .map(|d| (d, lattice.join_mask(d)))
            .collect();
        Ok(WayBelowOracle { lattice, directed })
    }

    pub fn directed_subsets(&self) -> usize {
        self.directed.len()
    }

    /// `b ≪ a`: every directed `D` with `a ≤ ⋁D` has a member above `b`.
    pub fn way_below(&self, b: Elem, a: Elem) -> bool {
        let l = self.lattice;
        self.directed
            .iter()
            .filter(|&&(_, sup)| l.leq(a, sup))
            .all(|&(d, _)| crate::bits::points(d).any(|x| l.leq(b, x)))
    }
}
