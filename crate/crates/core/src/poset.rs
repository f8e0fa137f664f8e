//! Finite posets, their labeled enumeration, and Birkhoff downset lattices.

use crate::bits::{self, PointSet};
use crate::bounds::Bounds;
use crate::error::LimitError;
use crate::lattice::{FiniteLattice, LatticeError, OrderViolation};

/// A finite partial order on `0..size`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Poset {
    size: usize,
    leq: Vec<bool>,
}

impl Poset {
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
        let flat: Vec<bool> = leq.into_iter().flatten().collect();
        let at = |a: usize, b: usize| flat[a * size + b];
        for a in 0..size {
            if !at(a, a) {
                return Err(LatticeError::NotAPartialOrder {
                    a,
                    b: a,
                    violation: OrderViolation::Reflexivity,
                });
            }
            for b in 0..size {
                if a != b && at(a, b) && at(b, a) {
                    return Err(LatticeError::NotAPartialOrder {
                        a,
                        b,
                        violation: OrderViolation::Antisymmetry,
                    });
                }
                for c in 0..size {
                    if at(a, b) && at(b, c) && !at(a, c) {
                        return Err(LatticeError::NotAPartialOrder {
                            a,
                            b: c,
                            violation: OrderViolation::Transitivity,
                        });
                    }
                }
            }
        }
        Ok(Poset { size, leq: flat })
    }

    pub fn antichain(n: usize) -> Self {
        Poset {
            size: n,
            leq: (0..n * n).map(|k| k / n == k % n).collect(),
        }
    }

    pub fn chain(n: usize) -> Self {
        Poset {
            size: n,
            leq: (0..n * n).map(|k| k / n <= k % n).collect(),
        }
    }

    pub fn size(&self) -> usize {
        self.size
    }

    #[inline]
    pub fn leq(&self, a: usize, b: usize) -> bool {
        self.leq[a * self.size + b]
    }

    pub fn order_matrix(&self) -> Vec<Vec<bool>> {
        self.leq.chunks(self.size.max(1)).take(self.size).map(<[bool]>::to_vec).collect()
    }

    /// Elements below `x` (including `x`).
    pub fn down(&self, x: usize) -> PointSet {
        (0..self.size).filter(|&y| self.leq(y, x)).fold(0, |m, y| m | bits::singleton(y))
    }

    /// Elements above `x` (including `x`).
    pub fn up(&self, x: usize) -> PointSet {
        (0..self.size).filter(|&y| self.leq(x, y)).fold(0, |m, y| m | bits::singleton(y))
    }

    pub fn is_downset(&self, set: PointSet) -> bool {
        bits::points(set).all(|x| bits::is_subset(self.down(x), set))
    }

    /// All down-closed subsets, in increasing numeric order of their masks.
    pub fn downsets(&self) -> Vec<PointSet> {
        let downs: Vec<PointSet> = (0..self.size).map(|x| self.down(x)).collect();
        (0..=bits::full(self.size))
            .filter(|&s| bits::points(s).all(|x| bits::is_subset(downs[x], s)))
            .collect()
    }

    /// Monotone maps `self -> other` are those preserving `≤`.
    pub fn is_monotone_into(&self, other: &Poset, map: &[usize]) -> bool {
        (0..self.size).all(|a| {
            (0..self.size).all(|b| !self.leq(a, b) || other.leq(map[a], map[b]))
        })
    }

    /// The poset obtained by adding a new maximal-index point `n` with the
    /// given strict down-set and up-set.
    fn extend(&self, below: PointSet, above: PointSet) -> Poset {
        let n = self.size + 1;
        let mut leq = vec![false; n * n];
        for a in 0..self.size {
            for b in 0..self.size {
                leq[a * n + b] = self.leq(a, b);
            }
        }
        leq[self.size * n + self.size] = true;
        for a in bits::points(below) {
            leq[a * n + self.size] = true;
        }
        for b in bits::points(above) {
            leq[self.size * n + b] = true;
        }
        Poset { size: n, leq }
    }
}

/// All labeled partial orders on `n` points, each exactly once, in a fixed
/// order. The count is `posets.len()` (1, 1, 3, 19, 219, 4231 for n = 0..5).
///
/// Point `n-1` is added to every poset on `n-1` points in all consistent ways:
/// its strict down-set `D` must be down-closed, its strict up-set `U`
/// up-closed, `D ∩ U = ∅`, and every member of `D` below every member of `U`.
pub fn enumerate_posets(n: usize, bounds: &Bounds) -> Result<Vec<Poset>, LimitError> {
    LimitError::check("poset enumeration", n, bounds.poset_enumeration.min(8))?;
    let mut layer = vec![Poset::antichain(0)];
    for k in 0..n {
        let mut next = Vec::new();
        for p in &layer {
            let all = bits::full(k);
            let downs = p.downsets();
            for &d in &downs {
                let above_d: PointSet = bits::points(d).fold(all, |m, x| m & p.up(x));
                for &complement in &downs {
                    let u = all & !complement;
                    if u & d == 0 && bits::is_subset(u, above_d) {
                        next.push(p.extend(d, u));
                    }
                }
            }
        }
        layer = next;
    }
    Ok(layer)
}

/// The lattice of down-closed subsets of `poset` ordered by inclusion, labeled
/// by its members. Always distributive, hence a frame.
pub fn downset_lattice(poset: &Poset, bounds: &Bounds) -> Result<(FiniteLattice, Vec<PointSet>), LatticeError> {
    LimitError::check("downset lattice", poset.size, bounds.downset_poset.min(20))?;
    let downsets = poset.downsets();
    let labels = downsets.iter().map(|&d| set_label(d)).collect();
    let lattice = FiniteLattice::from_sets(&downsets)?.with_labels(labels)?;
    Ok((lattice, downsets))
}

pub(crate) fn set_label(set: PointSet) -> String {
    let inner: Vec<String> = bits::points(set).map(|x| x.to_string()).collect();
    format!("{{{}}}", inner.join(","))
}
