//! Finite unions of open intervals with exact endpoints, optionally joined
//! with a periodic family `⋃_k (base + k·period) ∩ window`.

use std::cmp::Ordering;
use std::fmt;

use num_traits::Signed;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::real::{Real, Q};
use super::RealLineError;

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Endpoint {
    NegInf,
    Fin(Real),
    PosInf,
}

impl Endpoint {
    pub fn rat(r: Q) -> Self {
        Endpoint::Fin(Real::rational(r))
    }

    pub fn int(n: i64) -> Self {
        Endpoint::Fin(Real::int(n))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Endpoint::Fin(_))
    }

    pub fn real(&self) -> Option<&Real> {
        match self {
            Endpoint::Fin(r) => Some(r),
            _ => None,
        }
    }

    pub fn cmp_checked(&self, other: &Endpoint) -> Result<Ordering, RealLineError> {
        use Endpoint::*;
        Ok(match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (_, NegInf) | (PosInf, _) => Ordering::Greater,
            (Fin(a), Fin(b)) => a.cmp_checked(b)?,
        })
    }

    fn lt(&self, other: &Endpoint) -> Result<bool, RealLineError> {
        Ok(self.cmp_checked(other)? == Ordering::Less)
    }

    fn max(self, other: Endpoint) -> Result<Endpoint, RealLineError> {
        Ok(if self.lt(&other)? { other } else { self })
    }

    fn min(self, other: Endpoint) -> Result<Endpoint, RealLineError> {
        Ok(if other.lt(&self)? { other } else { self })
    }

    fn translate(&self, by: &Real) -> Result<Endpoint, RealLineError> {
        Ok(match self {
            Endpoint::Fin(r) => Endpoint::Fin(r.add(by)?),
            e => e.clone(),
        })
    }

    pub fn to_tag(&self) -> String {
        match self {
            Endpoint::NegInf => "-inf".into(),
            Endpoint::PosInf => "+inf".into(),
            Endpoint::Fin(r) => r.to_tag(),
        }
    }

    pub fn parse(s: &str) -> Result<Self, RealLineError> {
        match s.trim() {
            "-inf" => Ok(Endpoint::NegInf),
            "+inf" | "inf" => Ok(Endpoint::PosInf),
            other => Ok(Endpoint::Fin(other.parse()?)),
        }
    }
}

impl fmt::Display for Endpoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Endpoint::NegInf => write!(f, "−∞"),
            Endpoint::PosInf => write!(f, "+∞"),
            Endpoint::Fin(r) => write!(f, "{r}"),
        }
    }
}

impl Serialize for Endpoint {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_tag())
    }
}

impl<'de> Deserialize<'de> for Endpoint {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        Endpoint::parse(&s).map_err(D::Error::custom)
    }
}

/// The open interval `(lo, hi)`; may be empty until normalized.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(from = "(Endpoint, Endpoint)", into = "(Endpoint, Endpoint)")]
pub struct Interval {
    pub lo: Endpoint,
    pub hi: Endpoint,
}

impl From<(Endpoint, Endpoint)> for Interval {
    fn from((lo, hi): (Endpoint, Endpoint)) -> Self {
        Interval { lo, hi }
    }
}

impl From<Interval> for (Endpoint, Endpoint) {
    fn from(i: Interval) -> Self {
        (i.lo, i.hi)
    }
}

impl Interval {
    pub fn new(lo: Endpoint, hi: Endpoint) -> Self {
        Interval { lo, hi }
    }

    pub fn reals() -> Self {
        Interval::new(Endpoint::NegInf, Endpoint::PosInf)
    }

    /// `(−∞, a)`.
    pub fn below(a: Real) -> Self {
        Interval::new(Endpoint::NegInf, Endpoint::Fin(a))
    }

    pub fn is_empty(&self) -> Result<bool, RealLineError> {
        Ok(!self.lo.lt(&self.hi)?)
    }

    pub fn is_bounded(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    pub fn intersect(&self, other: &Interval) -> Result<Interval, RealLineError> {
        Ok(Interval::new(
            self.lo.clone().max(other.lo.clone())?,
            self.hi.clone().min(other.hi.clone())?,
        ))
    }

    /// `self ⊆ other`.
    pub fn within(&self, other: &Interval) -> Result<bool, RealLineError> {
        Ok(!self.lo.lt(&other.lo)? && !other.hi.lt(&self.hi)?)
    }

    fn translate(&self, by: &Real) -> Result<Interval, RealLineError> {
        Ok(Interval::new(self.lo.translate(by)?, self.hi.translate(by)?))
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.lo, self.hi)
    }
}

/// `⋃_{k∈ℤ} (base + k·period) ∩ window`, kept symbolic only while the window
/// is unbounded.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Periodic {
    pub base: Vec<Interval>,
    pub period: Real,
    pub window: Interval,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SymbolicRealSet {
    pieces: Vec<Interval>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    periodic: Option<Periodic>,
}

/// Sorts and merges overlapping open intervals, dropping empty ones.
/// `(0,1) ∪ (1,2)` stays split: the point 1 is missing.
fn normalize_pieces(pieces: Vec<Interval>) -> Result<Vec<Interval>, RealLineError> {
    let mut sorted: Vec<Interval> = Vec::with_capacity(pieces.len());
    for p in pieces {
        if p.is_empty()? {
            continue;
        }
        let mut at = sorted.len();
        while at > 0 && p.lo.lt(&sorted[at - 1].lo)? {
            at -= 1;
        }
        sorted.insert(at, p);
    }
    let mut out: Vec<Interval> = Vec::with_capacity(sorted.len());
    for p in sorted {
        match out.last_mut() {
            Some(last) if p.lo.lt(&last.hi)? => {
                if last.hi.lt(&p.hi)? {
                    last.hi = p.hi;
                }
            }
            _ => out.push(p),
        }
    }
    Ok(out)
}

impl SymbolicRealSet {
    pub fn empty() -> Self {
        SymbolicRealSet {
            pieces: Vec::new(),
            periodic: None,
        }
    }

    pub fn reals() -> Self {
        SymbolicRealSet {
            pieces: vec![Interval::reals()],
            periodic: None,
        }
    }

    pub fn interval(i: Interval) -> Result<Self, RealLineError> {
        SymbolicRealSet::from_pieces(vec![i])
    }

    /// `(lo, hi)` for rational endpoints.
    pub fn open(lo: Endpoint, hi: Endpoint) -> Result<Self, RealLineError> {
        SymbolicRealSet::from_pieces(vec![Interval::new(lo, hi)])
    }

    pub fn from_pieces(pieces: Vec<Interval>) -> Result<Self, RealLineError> {
        Ok(SymbolicRealSet {
            pieces: normalize_pieces(pieces)?,
            periodic: None,
        })
    }

    /// A periodic family. Base pieces must be bounded and each shorter than
    /// the period, so the family always has gaps; the period must be a
    /// positive atom-free real.
    pub fn periodic(base: Vec<Interval>, period: Real, window: Interval) -> Result<Self, RealLineError> {
        if !period.is_atom_free() || period.cmp_checked(&Real::zero())? != Ordering::Greater {
            return Err(RealLineError::UnsupportedShape(format!("period {period}")));
        }
        let base = normalize_pieces(base)?;
        // Total length at most one period guarantees gaps: disjoint open
        // intervals cannot cover the line, and overlapping translates lose
        // measure.
        let mut total = Real::zero();
        let mut exact = true;
        let mut approx_hi = Q::from_integer(0.into());
        for b in &base {
            let (Some(lo), Some(hi)) = (b.lo.real(), b.hi.real()) else {
                return Err(RealLineError::UnsupportedShape(format!("unbounded periodic base piece {b}")));
            };
            let (_, h) = hi.enclosure(40);
            let (l, _) = lo.enclosure(40);
            approx_hi += h - l;
            match hi.sub(lo).and_then(|len| total.add(&len)) {
                Ok(t) if exact => total = t,
                _ => exact = false,
            }
        }
        let fits = if exact {
            total.cmp_checked(&period)? != Ordering::Greater
        } else {
            approx_hi < period.enclosure(40).0
        };
        if !fits {
            return Err(RealLineError::UnsupportedShape(
                "periodic base is longer than its period".into(),
            ));
        }
        SymbolicRealSet {
            pieces: Vec::new(),
            periodic: Some(Periodic { base, period, window }),
        }
        .normalized()
    }

    pub fn pieces(&self) -> &[Interval] {
        &self.pieces
    }

    pub fn periodic_part(&self) -> Option<&Periodic> {
        self.periodic.as_ref()
    }

    pub fn is_empty(&self) -> bool {
        self.pieces.is_empty() && self.periodic.is_none()
    }

    /// Brings the set to normal form: a bounded or empty periodic window is
    /// expanded into pieces, and a periodic part covered by a single piece is
    /// dropped.
    fn normalized(mut self) -> Result<Self, RealLineError> {
        if let Some(p) = self.periodic.take() {
            if p.base.is_empty() || p.window.is_empty()? {
                // nothing
            } else if p.window.is_bounded() {
                self.pieces.extend(expand(&p)?);
            } else {
                let mut covered = false;
                for piece in &self.pieces {
                    if p.window.within(piece)? {
                        covered = true;
                    }
                }
                if !covered {
                    self.periodic = Some(p);
                }
            }
        }
        self.pieces = normalize_pieces(std::mem::take(&mut self.pieces))?;
        Ok(self)
    }

    pub fn union(&self, other: &SymbolicRealSet) -> Result<SymbolicRealSet, RealLineError> {
        let mut pieces = self.pieces.clone();
        pieces.extend(other.pieces.iter().cloned());
        let periodic = match (&self.periodic, &other.periodic) {
            (None, None) => None,
            (Some(p), None) | (None, Some(p)) => Some(p.clone()),
            (Some(p), Some(r)) => Some(union_periodic(p, r)?),
        };
        SymbolicRealSet { pieces, periodic }.normalized()
    }

    pub fn intersection(&self, other: &SymbolicRealSet) -> Result<SymbolicRealSet, RealLineError> {
        let mut pieces = Vec::new();
        for a in &self.pieces {
            for b in &other.pieces {
                pieces.push(a.intersect(b)?);
            }
        }
        let mut result = SymbolicRealSet::from_pieces(pieces)?;
        let cross = [(&self.periodic, &other.pieces), (&other.periodic, &self.pieces)];
        for (periodic, pieces) in cross {
            let Some(p) = periodic else { continue };
            for piece in pieces {
                let restricted = SymbolicRealSet {
                    pieces: Vec::new(),
                    periodic: Some(Periodic {
                        window: p.window.intersect(piece)?,
                        ..p.clone()
                    }),
                }
                .normalized()?;
                result = result.union(&restricted)?;
            }
        }
        if self.periodic.is_some() && other.periodic.is_some() {
            return Err(RealLineError::UnsupportedShape(
                "intersection of two periodic families".into(),
            ));
        }
        Ok(result)
    }

    /// `self ⊆ other`; `self` must have no periodic part.
    pub fn is_subset(&self, other: &SymbolicRealSet) -> Result<bool, RealLineError> {
        if self.periodic.is_some() {
            return Err(RealLineError::UnsupportedShape("subset test on a periodic family".into()));
        }
        for piece in &self.pieces {
            let part = SymbolicRealSet::interval(piece.clone())?.intersection(other)?;
            if part.periodic.is_some() || part.pieces.len() != 1 || part.pieces[0] != *piece {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Membership in the smopology of finite unions of bounded-above open
    /// intervals.
    pub fn lplusom_membership(&self) -> bool {
        self.periodic.is_none() && self.pieces.iter().all(|p| p.hi.is_finite())
    }

    pub fn is_bounded_above(&self) -> bool {
        let pieces = self.pieces.last().is_none_or(|p| p.hi.is_finite());
        let periodic = self.periodic.as_ref().is_none_or(|p| p.window.hi.is_finite());
        pieces && periodic
    }
}

fn union_periodic(p: &Periodic, r: &Periodic) -> Result<Periodic, RealLineError> {
    if p.period != r.period {
        return Err(RealLineError::UnsupportedShape("union of families with different periods".into()));
    }
    if p.window == r.window {
        let mut base = p.base.clone();
        base.extend(r.base.iter().cloned());
        return Ok(Periodic {
            base: normalize_pieces(base)?,
            ..p.clone()
        });
    }
    if p.base == r.base && (p.window.lo.lt(&r.window.hi)? && r.window.lo.lt(&p.window.hi)?) {
        return Ok(Periodic {
            window: Interval::new(
                p.window.lo.clone().min(r.window.lo.clone())?,
                p.window.hi.clone().max(r.window.hi.clone())?,
            ),
            ..p.clone()
        });
    }
    Err(RealLineError::UnsupportedShape("union of two unrelated periodic families".into()))
}

/// The finitely many translates meeting a bounded window.
fn expand(p: &Periodic) -> Result<Vec<Interval>, RealLineError> {
    let (Some(wl), Some(wh)) = (p.window.lo.real(), p.window.hi.real()) else {
        unreachable!("expand is only called on bounded windows")
    };
    let bits = 32;
    let (per_lo, _) = p.period.enclosure(bits);
    let (wl_lo, _) = wl.enclosure(bits);
    let (_, wh_hi) = wh.enclosure(bits);
    let mut out = Vec::new();
    for b in &p.base {
        let (Some(lo), Some(hi)) = (b.lo.real(), b.hi.real()) else {
            unreachable!("periodic bases are bounded")
        };
        let (_, hi_hi) = hi.enclosure(bits);
        let (lo_lo, _) = lo.enclosure(bits);
        // translate k meets the window only if wl < hi + kP and lo + kP < wh
        let k_min = ((wl_lo.clone() - hi_hi.clone() - Q::from_integer(1.into())) / &per_lo).floor();
        let k_max = ((wh_hi.clone() - lo_lo.clone() + Q::from_integer(1.into())) / &per_lo).ceil();
        let (k_min, k_max) = if per_lo.is_positive() {
            (k_min.to_integer(), k_max.to_integer())
        } else {
            return Err(RealLineError::UnsupportedShape("degenerate period".into()));
        };
        let mut k = k_min;
        while k <= k_max {
            let shift = p.period.scale(&Q::from_integer(k.clone()));
            let t = b.translate(&shift)?.intersect(&p.window)?;
            if !t.is_empty()? {
                out.push(t);
            }
            k += 1;
        }
    }
    Ok(out)
}

impl fmt::Display for SymbolicRealSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self.pieces.iter().map(|p| p.to_string()).collect();
        if let Some(p) = &self.periodic {
            let base: Vec<String> = p.base.iter().map(|b| b.to_string()).collect();
            let base = if base.is_empty() { "∅".to_string() } else { base.join(" ∪ ") };
            let mut s = format!("⋃ₖ({base} + k·{})", p.period);
            if p.window != Interval::reals() {
                s = format!("{s} ∩ {}", p.window);
            }
            parts.push(s);
        }
        if parts.is_empty() {
            write!(f, "∅")
        } else {
            write!(f, "{}", parts.join(" ∪ "))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::realline::real::q;

    fn iv(a: i64, b: i64) -> Interval {
        Interval::new(Endpoint::int(a), Endpoint::int(b))
    }

    fn set(ps: &[(i64, i64)]) -> SymbolicRealSet {
        SymbolicRealSet::from_pieces(ps.iter().map(|&(a, b)| iv(a, b)).collect()).unwrap()
    }

    #[test]
    fn normalization() {
        assert_eq!(set(&[(2, 3), (0, 1)]).pieces(), &[iv(0, 1), iv(2, 3)]);
        assert_eq!(set(&[(0, 2), (1, 3)]).pieces(), &[iv(0, 3)]);
        assert_eq!(set(&[(0, 1), (1, 2)]).pieces().len(), 2);
        assert!(set(&[(1, 1), (3, 2)]).is_empty());
        assert_eq!(set(&[(0, 5), (1, 2)]).pieces(), &[iv(0, 5)]);
    }

    #[test]
    fn membership() {
        assert!(set(&[(0, 1), (2, 3)]).lplusom_membership());
        assert!(!SymbolicRealSet::open(Endpoint::int(0), Endpoint::PosInf).unwrap().lplusom_membership());
        assert!(SymbolicRealSet::open(Endpoint::NegInf, Endpoint::int(5)).unwrap().lplusom_membership());
        assert!(SymbolicRealSet::empty().lplusom_membership());
    }

    #[test]
    fn intersections_and_subsets() {
        let a = set(&[(0, 4), (6, 9)]);
        let b = set(&[(3, 7)]);
        assert_eq!(a.intersection(&b).unwrap(), set(&[(3, 4), (6, 7)]));
        assert!(set(&[(1, 2)]).is_subset(&a).unwrap());
        assert!(!set(&[(3, 7)]).is_subset(&a).unwrap());
        assert!(!set(&[(0, 1), (1, 2)]).is_subset(&set(&[(0, 1)])).unwrap());
    }

    fn two_pi() -> Real {
        Real::pi_times(q(2, 1))
    }

    fn pi_iv(a: i64, b: i64) -> Interval {
        Interval::new(
            Endpoint::Fin(Real::pi_times(q(a, 1))),
            Endpoint::Fin(Real::pi_times(q(b, 1))),
        )
    }

    #[test]
    fn periodic_expansion() {
        // ⋃ (π + 2kπ, 2π + 2kπ) ∩ (−3π, 3π) = (−3π,−2π) ∪ (−π,0) ∪ (π,2π)
        let p = SymbolicRealSet::periodic(vec![pi_iv(1, 2)], two_pi(), pi_iv(-3, 3)).unwrap();
        assert!(p.periodic_part().is_none());
        assert_eq!(p.pieces(), &[pi_iv(-3, -2), pi_iv(-1, 0), pi_iv(1, 2)]);
        // cut mid-piece
        let w = Interval::new(Endpoint::int(0), Endpoint::int(4));
        let p = SymbolicRealSet::periodic(vec![pi_iv(1, 2)], two_pi(), w).unwrap();
        assert_eq!(
            p.pieces(),
            &[Interval::new(Endpoint::Fin(Real::pi_times(q(1, 1))), Endpoint::int(4))]
        );
    }

    #[test]
    fn unbounded_periodic_stays_symbolic() {
        let below = SymbolicRealSet::open(Endpoint::NegInf, Endpoint::int(0)).unwrap();
        let p = SymbolicRealSet::periodic(vec![pi_iv(1, 2)], two_pi(), Interval::reals()).unwrap();
        let cut = p.intersection(&below).unwrap();
        assert!(cut.periodic_part().is_some());
        assert!(!cut.lplusom_membership());
        assert!(cut.is_bounded_above());
        assert!(!p.is_bounded_above());
        // bounded slice of it is a finite union
        let slice = cut.intersection(&set(&[(-10, 0)])).unwrap();
        assert!(slice.lplusom_membership());
        assert_eq!(slice.pieces().len(), 2);
        // covered by a piece: periodic part dropped
        let covered = p.union(&SymbolicRealSet::reals()).unwrap();
        assert_eq!(covered, SymbolicRealSet::reals());
        assert!(!below.is_subset(&p).unwrap());
    }

    #[test]
    fn periodic_base_too_long_is_rejected() {
        let r = SymbolicRealSet::periodic(vec![pi_iv(0, 3)], two_pi(), Interval::reals());
        assert!(matches!(r, Err(RealLineError::UnsupportedShape(_))));
        let r = SymbolicRealSet::periodic(vec![pi_iv(0, 1), pi_iv(2, 4)], two_pi(), Interval::reals());
        assert!(matches!(r, Err(RealLineError::UnsupportedShape(_))));
        // a full period leaves single-point gaps and is accepted
        let r = SymbolicRealSet::periodic(vec![pi_iv(0, 2)], two_pi(), Interval::reals()).unwrap();
        assert!(r.periodic_part().is_some());
    }

    #[test]
    fn serde_shape() {
        let s = set(&[(0, 1), (2, 3)]);
        let v = serde_json::to_value(&s).unwrap();
        assert_eq!(
            v,
            serde_json::json!({ "pieces": [["rat:0/1", "rat:1/1"], ["rat:2/1", "rat:3/1"]] })
        );
        let back: SymbolicRealSet = serde_json::from_value(v).unwrap();
        assert_eq!(back, s);
        let h = SymbolicRealSet::open(Endpoint::NegInf, Endpoint::Fin(Real::half_pi())).unwrap();
        let v = serde_json::to_value(&h).unwrap();
        assert_eq!(v, serde_json::json!({ "pieces": [["-inf", "tag:half_pi"]] }));
        let p = SymbolicRealSet::periodic(vec![pi_iv(1, 2)], two_pi(), Interval::reals()).unwrap();
        let back: SymbolicRealSet = serde_json::from_str(&serde_json::to_string(&p).unwrap()).unwrap();
        assert_eq!(back, p);
    }
}
