//! Deterministic instance generators.
//!
//! Exhaustive modes enumerate in a fixed order; random modes are driven by a
//! seeded ChaCha8 stream, so every output is a pure function of its
//! parameters.

use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::bits::{self, PointSet};
use crate::bounds::Bounds;
use crate::error::LimitError;
use crate::frame_pair::{FrameHom, FramePair, SpecialLocalicMap};
use crate::lattice::{FiniteLattice, LatticeError};
use crate::poset::{downset_lattice, enumerate_posets, Poset};
use crate::space::{LocallySmallSpace, SpaceMap};

/// Largest carrier enumerated exhaustively by [`exhaustive_spaces`].
pub const EXHAUSTIVE_SPACE_POINTS: usize = 3;
/// Largest carrier drawn by the random space generators.
pub const RANDOM_SPACE_POINTS: usize = 6;
/// Largest poset behind an exhaustively enumerated frame.
pub const EXHAUSTIVE_POSET_POINTS: usize = 4;
/// Largest poset behind a random frame.
pub const RANDOM_POSET_POINTS: usize = 8;

fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn pair_of(poset: &Poset, bounds: &Bounds) -> Result<(FramePair, Vec<PointSet>), LatticeError> {
    let (lattice, downsets) = downset_lattice(poset, bounds)?;
    let pair = FramePair::full(Arc::new(lattice)).expect("downset lattices designate themselves");
    Ok((pair, downsets))
}

/// Downset frames of every labeled poset on exactly `n` points, paired with
/// the whole frame as designated part.
pub fn exhaustive_frames(n: usize, bounds: &Bounds) -> Result<Vec<FramePair>, LatticeError> {
    LimitError::check("exhaustive frames", n, EXHAUSTIVE_POSET_POINTS)?;
    enumerate_posets(n, bounds)?
        .iter()
        .map(|p| pair_of(p, bounds).map(|(pair, _)| pair))
        .collect()
}

/// The frame suite: every labeled poset on `1..=max_n` points, in order.
pub fn frame_suite(max_n: usize, bounds: &Bounds) -> Result<Vec<FramePair>, LatticeError> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(exhaustive_frames(n, bounds)?);
    }
    Ok(out)
}

/// A random poset on `n` points: random relations `i < j` for `i < j`
/// (probability `density`), transitively closed.
pub fn random_poset<R: Rng>(rng: &mut R, n: usize, density: f64) -> Poset {
    let mut leq = vec![vec![false; n]; n];
    for i in 0..n {
        leq[i][i] = true;
        for j in i + 1..n {
            leq[i][j] = rng.gen_bool(density);
        }
    }
    // Relations only point upwards in index, so one pass in order closes them.
    for j in 0..n {
        for i in (0..j).rev() {
            if leq[i][j] {
                continue;
            }
            leq[i][j] = (i + 1..j).any(|k| leq[i][k] && leq[k][j]);
        }
    }
    Poset::new(leq).expect("upward relations closed transitively form a poset")
}

/// `count` random downset frames on posets of `size` points.
pub fn random_frames(seed: u64, count: usize, size: usize, bounds: &Bounds) -> Result<Vec<FramePair>, LatticeError> {
    LimitError::check("random frames", size, RANDOM_POSET_POINTS)?;
    let mut r = rng(seed);
    (0..count)
        .map(|_| {
            let density = r.gen_range(0.1..0.7);
            let poset = random_poset(&mut r, size, density);
            pair_of(&poset, bounds).map(|(pair, _)| pair)
        })
        .collect()
}

/// Closes `seeds ∪ {∅, carrier}` under binary union and intersection.
pub fn close_family(n: usize, seeds: &[PointSet]) -> Vec<PointSet> {
    let full = bits::full(n);
    let mut present = vec![false; 1usize << n];
    let mut family = Vec::new();
    for s in [0, full].into_iter().chain(seeds.iter().map(|&s| s & full)) {
        if !present[s as usize] {
            present[s as usize] = true;
            family.push(s);
        }
    }
    let mut i = 0;
    while i < family.len() {
        for j in 0..i {
            for s in [family[i] | family[j], family[i] & family[j]] {
                if !present[s as usize] {
                    present[s as usize] = true;
                    family.push(s);
                }
            }
        }
        i += 1;
    }
    family.sort_unstable();
    family
}

/// Every labeled topology on `n` points, as a smopology, in increasing order
/// of the membership mask over proper nonempty subsets.
pub fn exhaustive_spaces(n: usize) -> Result<Vec<LocallySmallSpace>, LimitError> {
    LimitError::check("exhaustive spaces", n, EXHAUSTIVE_SPACE_POINTS)?;
    let full = bits::full(n);
    let middle: Vec<PointSet> = (1..full).collect();
    let mut out = Vec::new();
    for mask in 0u64..1 << middle.len() {
        let mut family = vec![0];
        family.extend(bits::points(mask).map(|k| middle[k]));
        if n > 0 {
            family.push(full);
        }
        let closed = family.iter().all(|&a| {
            family
                .iter()
                .all(|&b| family.contains(&(a | b)) && family.contains(&(a & b)))
        });
        if closed {
            out.push(LocallySmallSpace::unlabeled(n, family).expect("closed families are smopologies"));
        }
    }
    Ok(out)
}

/// The space suite: every labeled topology on `0..=max_n` points.
pub fn space_suite(max_n: usize) -> Result<Vec<LocallySmallSpace>, LimitError> {
    let mut out = Vec::new();
    for n in 0..=max_n {
        out.extend(exhaustive_spaces(n)?);
    }
    Ok(out)
}

fn random_space_with<R: Rng>(r: &mut R, n: usize, extra: &[PointSet]) -> LocallySmallSpace {
    let full = bits::full(n);
    let k = r.gen_range(0..=2 * n + 1);
    let mut seeds: Vec<PointSet> = (0..k).map(|_| r.gen::<u64>() & full).collect();
    seeds.extend_from_slice(extra);
    LocallySmallSpace::unlabeled(n, close_family(n, &seeds)).expect("closed families are smopologies")
}

/// `count` random smopologies on `n` points (closures of random subsets).
pub fn random_spaces(seed: u64, count: usize, n: usize) -> Result<Vec<LocallySmallSpace>, LimitError> {
    LimitError::check("random spaces", n, RANDOM_SPACE_POINTS)?;
    let mut r = rng(seed);
    Ok((0..count).map(|_| random_space_with(&mut r, n, &[])).collect())
}

/// A random continuous map into `target`: the source smopology is seeded with
/// the preimages of the target's smops, which forces continuity.
fn random_map_into<R: Rng>(r: &mut R, source_points: usize, target: &LocallySmallSpace) -> SpaceMap {
    let m = target.points();
    let table: Vec<usize> = if m == 0 {
        Vec::new()
    } else {
        (0..source_points).map(|_| r.gen_range(0..m)).collect()
    };
    let n = if m == 0 { 0 } else { source_points };
    let pulled: Vec<PointSet> = target.smops().iter().map(|&v| bits::preimage(&table, v)).collect();
    let source = random_space_with(r, n, &pulled);
    SpaceMap::new(source, target.clone(), table).expect("tables index the target")
}

fn random_points<R: Rng>(r: &mut R, max: usize) -> usize {
    r.gen_range(1..=max)
}

/// `count` random continuous maps between spaces of at most `max_points`
/// points.
pub fn random_space_maps(seed: u64, count: usize, max_points: usize) -> Result<Vec<SpaceMap>, LimitError> {
    LimitError::check("random space maps", max_points, RANDOM_SPACE_POINTS)?;
    let mut r = rng(seed);
    Ok((0..count)
        .map(|_| {
            let m = random_points(&mut r, max_points);
            let target = random_space_with(&mut r, m, &[]);
            let n = random_points(&mut r, max_points);
            random_map_into(&mut r, n, &target)
        })
        .collect())
}

/// A composable chain `X_0 → X_1 → … → X_len` of continuous maps.
pub fn random_space_chain(seed: u64, len: usize, max_points: usize) -> Result<Vec<SpaceMap>, LimitError> {
    LimitError::check("random space chain", max_points, RANDOM_SPACE_POINTS)?;
    let mut r = rng(seed);
    let m = random_points(&mut r, max_points);
    let mut target = random_space_with(&mut r, m, &[]);
    let mut chain = Vec::with_capacity(len);
    for _ in 0..len {
        let n = random_points(&mut r, max_points);
        let f = random_map_into(&mut r, n, &target);
        target = f.source().clone();
        chain.push(f);
    }
    chain.reverse();
    Ok(chain)
}

/// A random monotone map `from → to`, assigned in index order (a linear
/// extension of `from`); falls back to a constant map when the partial
/// assignment has no common upper bound.
fn random_monotone<R: Rng>(r: &mut R, from: &Poset, to: &Poset) -> Vec<usize> {
    let (n, m) = (from.size(), to.size());
    let mut g: Vec<usize> = Vec::with_capacity(n);
    for j in 0..n {
        let candidates: Vec<usize> = (0..m)
            .filter(|&q| (0..j).all(|i| !from.leq(i, j) || to.leq(g[i], q)))
            .collect();
        if candidates.is_empty() {
            let c = r.gen_range(0..m);
            return vec![c; n];
        }
        g.push(candidates[r.gen_range(0..candidates.len())]);
    }
    g
}

/// The localic map `D(from) → D(to)` induced by a monotone `g : from → to`:
/// the right adjoint of the frame hom `D(to) → D(from)`, `D ↦ g⁻¹(D)`.
fn localic_from_monotone(
    from: &(FramePair, Vec<PointSet>),
    to: &(FramePair, Vec<PointSet>),
    g: &[usize],
    bounds: &Bounds,
) -> SpecialLocalicMap {
    let table = to
        .1
        .iter()
        .map(|&d| {
            let pre = bits::preimage(g, d);
            from.1.binary_search(&pre).expect("preimages of downsets are downsets")
        })
        .collect();
    FrameHom::new(to.0.clone(), from.0.clone(), table, bounds)
        .and_then(|h| h.right_adjoint())
        .expect("preimage maps of monotone maps are frame homs")
}

fn random_pair<R: Rng>(r: &mut R, max_points: usize, bounds: &Bounds) -> (Poset, (FramePair, Vec<PointSet>)) {
    let n = random_points(r, max_points);
    let density = r.gen_range(0.1..0.7);
    let p = random_poset(r, n, density);
    let pair = pair_of(&p, bounds).expect("bounded posets give downset frames");
    (p, pair)
}

/// `count` random special localic maps between downset frames of posets on
/// at most `max_points` points.
pub fn random_localic_maps(
    seed: u64,
    count: usize,
    max_points: usize,
    bounds: &Bounds,
) -> Result<Vec<SpecialLocalicMap>, LimitError> {
    LimitError::check("random localic maps", max_points, RANDOM_POSET_POINTS)?;
    let mut r = rng(seed);
    Ok((0..count)
        .map(|_| {
            let (p, dp) = random_pair(&mut r, max_points, bounds);
            let (q, dq) = random_pair(&mut r, max_points, bounds);
            let g = random_monotone(&mut r, &p, &q);
            localic_from_monotone(&dp, &dq, &g, bounds)
        })
        .collect())
}

/// A composable chain of `len` special localic maps.
pub fn random_localic_chain(
    seed: u64,
    len: usize,
    max_points: usize,
    bounds: &Bounds,
) -> Result<Vec<SpecialLocalicMap>, LimitError> {
    LimitError::check("random localic chain", max_points, RANDOM_POSET_POINTS)?;
    let mut r = rng(seed);
    let (mut p, mut dp) = random_pair(&mut r, max_points, bounds);
    let mut chain = Vec::with_capacity(len);
    for _ in 0..len {
        let (q, dq) = random_pair(&mut r, max_points, bounds);
        let g = random_monotone(&mut r, &p, &q);
        chain.push(localic_from_monotone(&dp, &dq, &g, bounds));
        (p, dp) = (q, dq);
    }
    Ok(chain)
}

/// Rebuilds a lattice from its order matrix alone (drops labels); handy for
/// comparing generated frames up to labeling.
pub fn unlabeled(l: &FiniteLattice) -> FiniteLattice {
    FiniteLattice::new(l.order_matrix()).expect("a lattice's own order is a lattice")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn b() -> Bounds {
        Bounds::default()
    }

    #[test]
    fn exhaustive_frame_counts() {
        let one = exhaustive_frames(1, &b()).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(unlabeled(one[0].frame()), FiniteLattice::chain(2));
        let two = exhaustive_frames(2, &b()).unwrap();
        let sizes: Vec<usize> = two.iter().map(|p| p.frame().size()).collect();
        let mut sorted = sizes.clone();
        sorted.sort();
        assert_eq!(sorted, vec![3, 3, 4]);
        let chains = two.iter().filter(|p| unlabeled(p.frame()) == FiniteLattice::chain(3)).count();
        assert_eq!(chains, 2);
        assert_eq!(frame_suite(4, &b()).unwrap().len(), 1 + 3 + 19 + 219);
        assert!(exhaustive_frames(5, &b()).is_err());
    }

    /// Oracle: every family of subsets of an `n`-set, filtered by the
    /// topology axioms directly.
    fn brute_topologies(n: usize) -> (usize, usize) {
        let subsets = 1usize << n;
        let full = subsets - 1;
        let (mut all, mut t0) = (0, 0);
        for fam in 0u64..1 << subsets {
            let has = |s: usize| fam >> s & 1 == 1;
            if !has(0) || !has(full) {
                continue;
            }
            let closed = (0..subsets).all(|a| {
                (0..subsets).all(|c| !(has(a) && has(c)) || (has(a | c) && has(a & c)))
            });
            if !closed {
                continue;
            }
            all += 1;
            let separated = (0..n).all(|x| {
                (0..n).all(|y| x == y || (0..subsets).any(|s| has(s) && ((s >> x) & 1 != (s >> y) & 1)))
            });
            if separated {
                t0 += 1;
            }
        }
        (all, t0)
    }

    #[test]
    fn exhaustive_space_counts() {
        assert_eq!(exhaustive_spaces(0).unwrap().len(), 1);
        assert_eq!(exhaustive_spaces(1).unwrap().len(), 1);
        assert_eq!(exhaustive_spaces(2).unwrap().len(), 4);
        let three = exhaustive_spaces(3).unwrap();
        assert_eq!(three.len(), 29);
        assert_eq!(three.iter().filter(|x| x.is_t0()).count(), 19);
        for n in 1..=3 {
            let (all, t0) = brute_topologies(n);
            let ours = exhaustive_spaces(n).unwrap();
            assert_eq!(ours.len(), all);
            assert_eq!(ours.iter().filter(|x| x.is_t0()).count(), t0);
        }
    }

    #[test]
    fn random_frames_are_deterministic() {
        let a = random_frames(7, 10, 4, &b()).unwrap();
        let c = random_frames(7, 10, 4, &b()).unwrap();
        assert_eq!(a.len(), 10);
        assert_eq!(a, c);
        assert!(a.iter().all(|p| p.frame().is_distributive()));
        assert_ne!(random_frames(8, 10, 4, &b()).unwrap(), a);
    }

    #[test]
    fn random_spaces_validate() {
        let xs = random_spaces(3, 40, 6).unwrap();
        assert_eq!(xs, random_spaces(3, 40, 6).unwrap());
        assert!(xs.iter().all(|x| x.points() == 6));
        assert!(random_spaces(3, 1, 7).is_err());
    }

    #[test]
    fn random_maps_are_continuous_and_chains_compose() {
        for f in random_space_maps(11, 100, 5).unwrap() {
            assert!(f.is_continuous() && f.is_bounded());
        }
        let chain = random_space_chain(5, 4, 4).unwrap();
        assert_eq!(chain.len(), 4);
        let composite = chain.iter().skip(1).try_fold(chain[0].clone(), |acc, f| acc.then(f));
        assert!(composite.is_ok());
    }

    #[test]
    fn random_localic_maps_satisfy_galois() {
        for m in random_localic_maps(2, 60, 4, &b()).unwrap() {
            assert_eq!(m.galois_failure(), None);
        }
        let chain = random_localic_chain(9, 3, 4, &b()).unwrap();
        let composite = chain.iter().skip(1).try_fold(chain[0].clone(), |acc, m| acc.then(m));
        assert!(composite.is_ok());
    }

    #[test]
    fn closure_is_union_and_intersection_closed() {
        let fam = close_family(4, &[0b0011, 0b0110]);
        assert_eq!(fam, vec![0, 0b0010, 0b0011, 0b0110, 0b0111, 0b1111]);
    }

    #[test]
    fn random_posets_are_transitive() {
        let mut r = rng(1);
        for _ in 0..50 {
            let p = random_poset(&mut r, 6, 0.4);
            for a in 0..6 {
                for c in 0..6 {
                    for d in 0..6 {
                        assert!(!(p.leq(a, c) && p.leq(c, d)) || p.leq(a, d));
                    }
                }
            }
        }
    }
}
