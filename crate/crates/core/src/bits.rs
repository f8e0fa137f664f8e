//! Point sets over carriers of at most 64 points, stored as machine words.

/// A subset of a carrier `{0, .., n-1}` with `n <= 64`; bit `i` is point `i`.
pub type PointSet = u64;

pub const MAX_POINTS: usize = 64;

#[inline]
pub fn full(n: usize) -> PointSet {
    debug_assert!(n <= MAX_POINTS);
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

#[inline]
pub fn singleton(i: usize) -> PointSet {
    1u64 << i
}

#[inline]
pub fn contains(set: PointSet, i: usize) -> bool {
    set >> i & 1 == 1
}

#[inline]
pub fn is_subset(a: PointSet, b: PointSet) -> bool {
    a & !b == 0
}

/// Members of `set` in increasing order.
pub fn points(set: PointSet) -> impl Iterator<Item = usize> {
    let mut rest = set;
    std::iter::from_fn(move || {
        if rest == 0 {
            None
        } else {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            Some(i)
        }
    })
}

pub fn from_points<I: IntoIterator<Item = usize>>(pts: I) -> PointSet {
    pts.into_iter().fold(0, |acc, i| acc | singleton(i))
}

/// Sorts and deduplicates a family of sets in place (the canonical form).
pub fn canonicalize(family: &mut Vec<PointSet>) {
    family.sort_unstable();
    family.dedup();
}

/// Preimage of `set` under `map` (a total function given as a table).
pub fn preimage(map: &[usize], set: PointSet) -> PointSet {
    map.iter()
        .enumerate()
        .filter(|&(_, &y)| contains(set, y))
        .fold(0, |acc, (x, _)| acc | singleton(x))
}

/// Image of `set` under `map`.
pub fn image(map: &[usize], set: PointSet) -> PointSet {
    points(set).fold(0, |acc, x| acc | singleton(map[x]))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn points_roundtrip() {
        let s = from_points([0, 3, 63]);
        assert_eq!(points(s).collect::<Vec<_>>(), vec![0, 3, 63]);
        assert_eq!(full(64), u64::MAX);
        assert_eq!(full(0), 0);
    }

    #[test]
    fn preimage_and_image() {
        let map = [1, 1, 0];
        assert_eq!(preimage(&map, 0b10), 0b011);
        assert_eq!(image(&map, 0b101), 0b11);
    }
}
