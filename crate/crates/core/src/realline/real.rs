//! Exact reals of the form `r + s·π + c·atom` with rational `r, s, c`.
//!
//! Values are never approximated by floats. Ordering is decided by rational
//! enclosures that are refined until they separate; values that stay
//! inseparable up to the precision cap are reported as incomparable.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::RealLineError;

pub type Q = BigRational;

/// A transcendental building block.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Atom {
    Arcsin(Q),
    Tan(Q),
    /// `−ln(q)`.
    NegLn(Q),
    Arctan(Q),
    Exp(Q),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Real {
    rat: Q,
    pi: Q,
    atom: Option<(Q, Atom)>,
}

pub(crate) fn q(n: i64, d: i64) -> Q {
    Q::new(BigInt::from(n), BigInt::from(d))
}

impl Real {
    pub fn zero() -> Self {
        Real::rational(Q::zero())
    }

    pub fn rational(r: Q) -> Self {
        Real {
            rat: r,
            pi: Q::zero(),
            atom: None,
        }
    }

    pub fn int(n: i64) -> Self {
        Real::rational(q(n, 1))
    }

    pub fn pi_times(s: Q) -> Self {
        Real {
            rat: Q::zero(),
            pi: s,
            atom: None,
        }
    }

    pub fn half_pi() -> Self {
        Real::pi_times(q(1, 2))
    }

    fn from_parts(rat: Q, pi: Q, atom: Option<(Q, Atom)>) -> Self {
        let atom = atom.filter(|(c, _)| !c.is_zero());
        Real { rat, pi, atom }
    }

    /// `arcsin(x)` for `|x| ≤ 1`, with the special values resolved.
    pub fn arcsin(x: &Q) -> Result<Real, RealLineError> {
        if x.abs() > Q::one() {
            return Err(RealLineError::Domain(format!("arcsin({x})")));
        }
        let special = [(q(0, 1), q(0, 1)), (q(1, 1), q(1, 2)), (q(1, 2), q(1, 6))];
        for (arg, pis) in special {
            if *x == arg {
                return Ok(Real::pi_times(pis));
            }
            if *x == -arg.clone() {
                return Ok(Real::pi_times(-pis));
            }
        }
        Ok(Real::from_atom(Atom::Arcsin(x.clone())))
    }

    /// `tan(x)` for rational `|x| < π/2`.
    pub fn tan(x: &Q) -> Result<Real, RealLineError> {
        if x.is_zero() {
            return Ok(Real::zero());
        }
        if Real::rational(x.abs()).cmp_checked(&Real::half_pi())? != Ordering::Less {
            return Err(RealLineError::Domain(format!("tan({x})")));
        }
        Ok(Real::from_atom(Atom::Tan(x.clone())))
    }

    /// `−ln(x)` for `x > 0`.
    pub fn neg_ln(x: &Q) -> Result<Real, RealLineError> {
        if !x.is_positive() {
            return Err(RealLineError::Domain(format!("ln({x})")));
        }
        if x.is_one() {
            return Ok(Real::zero());
        }
        Ok(Real::from_atom(Atom::NegLn(x.clone())))
    }

    pub fn arctan(x: &Q) -> Real {
        if x.is_zero() {
            Real::zero()
        } else if x.abs().is_one() {
            Real::pi_times(q(1, 4) * x.signum())
        } else {
            Real::from_atom(Atom::Arctan(x.clone()))
        }
    }

    pub fn exp(x: &Q) -> Real {
        if x.is_zero() {
            Real::int(1)
        } else {
            Real::from_atom(Atom::Exp(x.clone()))
        }
    }

    fn from_atom(a: Atom) -> Real {
        Real::from_parts(Q::zero(), Q::zero(), Some((Q::one(), a)))
    }

    pub fn rational_part(&self) -> &Q {
        &self.rat
    }

    pub fn pi_coefficient(&self) -> &Q {
        &self.pi
    }

    pub fn atom(&self) -> Option<(&Q, &Atom)> {
        self.atom.as_ref().map(|(c, a)| (c, a))
    }

    /// The value if it is rational.
    pub fn as_rational(&self) -> Option<&Q> {
        (self.pi.is_zero() && self.atom.is_none()).then_some(&self.rat)
    }

    pub fn is_atom_free(&self) -> bool {
        self.atom.is_none()
    }

    pub fn neg(&self) -> Real {
        self.scale(&-Q::one())
    }

    pub fn scale(&self, k: &Q) -> Real {
        Real::from_parts(
            &self.rat * k,
            &self.pi * k,
            self.atom.as_ref().map(|(c, a)| (c * k, a.clone())),
        )
    }

    pub fn add_rational(&self, r: &Q) -> Real {
        Real {
            rat: &self.rat + r,
            ..self.clone()
        }
    }

    /// Exact sum; fails when both summands carry different atoms.
    pub fn add(&self, other: &Real) -> Result<Real, RealLineError> {
        let atom = match (&self.atom, &other.atom) {
            (None, None) => None,
            (Some(a), None) | (None, Some(a)) => Some(a.clone()),
            (Some((c, a)), Some((d, b))) if a == b => Some((c + d, a.clone())),
            _ => {
                return Err(RealLineError::UnsupportedShape(format!(
                    "sum of {self} and {other} mixes two transcendental atoms"
                )))
            }
        };
        Ok(Real::from_parts(&self.rat + &other.rat, &self.pi + &other.pi, atom))
    }

    pub fn sub(&self, other: &Real) -> Result<Real, RealLineError> {
        self.add(&other.neg())
    }

    /// An interval of width at most about `2^-bits` containing the value.
    pub fn enclosure(&self, bits: u32) -> (Q, Q) {
        let guard = bits + 8 + magnitude_bits(&self.pi) + self.atom.as_ref().map_or(0, |(c, _)| magnitude_bits(c));
        let mut acc = Iv::point(self.rat.clone());
        if !self.pi.is_zero() {
            acc = acc.add(&pi_iv(guard).scale(&self.pi));
        }
        if let Some((c, a)) = &self.atom {
            acc = acc.add(&atom_iv(a, guard).scale(c));
        }
        (acc.lo, acc.hi)
    }

    /// Exact comparison, refining enclosures up to a fixed cap.
    pub fn cmp_checked(&self, other: &Real) -> Result<Ordering, RealLineError> {
        if self == other {
            return Ok(Ordering::Equal);
        }
        if let Ok(d) = self.sub(other) {
            if let Some(r) = d.as_rational() {
                return Ok(r.cmp(&Q::zero()));
            }
        }
        for bits in [24, 64, 160, 400] {
            let (a_lo, a_hi) = self.enclosure(bits);
            let (b_lo, b_hi) = other.enclosure(bits);
            if a_hi < b_lo {
                return Ok(Ordering::Less);
            }
            if a_lo > b_hi {
                return Ok(Ordering::Greater);
            }
        }
        Err(RealLineError::Incomparable(format!("{self} vs {other}")))
    }

    /// Serialized form: `rat:p/q` for rationals, `tag:<expr>` otherwise.
    pub fn to_tag(&self) -> String {
        if let Some(r) = self.as_rational() {
            return format!("rat:{}/{}", r.numer(), r.denom());
        }
        if self.rat.is_zero() && self.atom.is_none() {
            for (name, k) in NAMED_PI {
                if self.pi == q(k.0, k.1) {
                    return format!("tag:{name}");
                }
            }
        }
        let mut terms = Vec::new();
        if !self.rat.is_zero() {
            terms.push(rat_str(&self.rat));
        }
        if !self.pi.is_zero() {
            terms.push(format!("{}*pi", rat_str(&self.pi)));
        }
        if let Some((c, a)) = &self.atom {
            terms.push(format!("{}*{}", rat_str(c), atom_str(a)));
        }
        format!("tag:{}", terms.join(" + "))
    }
}

const NAMED_PI: [(&str, (i64, i64)); 5] = [
    ("half_pi", (1, 2)),
    ("neg_half_pi", (-1, 2)),
    ("pi", (1, 1)),
    ("neg_pi", (-1, 1)),
    ("two_pi", (2, 1)),
];

fn rat_str(r: &Q) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

fn atom_str(a: &Atom) -> String {
    match a {
        Atom::Arcsin(x) => format!("arcsin({})", rat_str(x)),
        Atom::Tan(x) => format!("tan({})", rat_str(x)),
        Atom::NegLn(x) => format!("negln({})", rat_str(x)),
        Atom::Arctan(x) => format!("arctan({})", rat_str(x)),
        Atom::Exp(x) => format!("exp({})", rat_str(x)),
    }
}

pub(crate) fn parse_rational(s: &str) -> Result<Q, RealLineError> {
    let bad = || RealLineError::Parse(format!("not a rational: {s:?}"));
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n: BigInt = n.trim().parse().map_err(|_| bad())?;
            let d: BigInt = d.trim().parse().map_err(|_| bad())?;
            if d.is_zero() {
                return Err(bad());
            }
            Ok(Q::new(n, d))
        }
        None => Ok(Q::from_integer(s.parse().map_err(|_| bad())?)),
    }
}

impl FromStr for Real {
    type Err = RealLineError;

    /// Accepts `rat:p/q`, `rat:p`, `tag:<name or expr>`, and bare rationals.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(r) = s.strip_prefix("rat:") {
            return Ok(Real::rational(parse_rational(r)?));
        }
        let Some(expr) = s.strip_prefix("tag:") else {
            return Ok(Real::rational(parse_rational(s)?));
        };
        if let Some((_, k)) = NAMED_PI.iter().find(|(name, _)| *name == expr) {
            return Ok(Real::pi_times(q(k.0, k.1)));
        }
        let mut total = Real::zero();
        for term in expr.split(" + ") {
            let value = match term.split_once('*') {
                None => Real::rational(parse_rational(term)?),
                Some((c, name)) => {
                    let c = parse_rational(c)?;
                    let base = parse_atom(name.trim())?;
                    base.scale(&c)
                }
            };
            total = total.add(&value)?;
        }
        Ok(total)
    }
}

fn parse_atom(name: &str) -> Result<Real, RealLineError> {
    if name == "pi" {
        return Ok(Real::pi_times(Q::one()));
    }
    let bad = || RealLineError::Parse(format!("unknown symbol {name:?}"));
    let (f, rest) = name.split_once('(').ok_or_else(bad)?;
    let arg = parse_rational(rest.strip_suffix(')').ok_or_else(bad)?)?;
    match f {
        "arcsin" => Real::arcsin(&arg),
        "tan" => Real::tan(&arg),
        "negln" => Real::neg_ln(&arg),
        "arctan" => Ok(Real::arctan(&arg)),
        "exp" => Ok(Real::exp(&arg)),
        _ => Err(bad()),
    }
}

impl serde::Serialize for Real {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_tag())
    }
}

impl<'de> serde::Deserialize<'de> for Real {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Real {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.rat.is_zero() || (self.pi.is_zero() && self.atom.is_none()) {
            parts.push(self.rat.to_string());
        }
        if !self.pi.is_zero() {
            parts.push(if self.pi.is_one() {
                "π".to_string()
            } else {
                format!("({})π", self.pi)
            });
        }
        if let Some((c, a)) = &self.atom {
            let name = match a {
                Atom::Arcsin(x) => format!("arcsin({x})"),
                Atom::Tan(x) => format!("tan({x})"),
                Atom::NegLn(x) => format!("-ln({x})"),
                Atom::Arctan(x) => format!("arctan({x})"),
                Atom::Exp(x) => format!("e^({x})"),
            };
            parts.push(if c.is_one() { name } else { format!("({c})·{name}") });
        }
        write!(f, "{}", parts.join(" + "))
    }
}

fn magnitude_bits(c: &Q) -> u32 {
    (c.abs().ceil().to_integer().bits() as u32) + 1
}

// ---------------------------------------------------------------------------
// Rational interval arithmetic and series enclosures.

#[derive(Debug, Clone)]
struct Iv {
    lo: Q,
    hi: Q,
}

fn pow2(bits: u32) -> Q {
    Q::from_integer(BigInt::one() << bits)
}

impl Iv {
    fn point(x: Q) -> Iv {
        Iv { lo: x.clone(), hi: x }
    }

    fn new(a: Q, b: Q) -> Iv {
        if a <= b {
            Iv { lo: a, hi: b }
        } else {
            Iv { lo: b, hi: a }
        }
    }

    fn add(&self, o: &Iv) -> Iv {
        Iv {
            lo: &self.lo + &o.lo,
            hi: &self.hi + &o.hi,
        }
    }

    fn neg(&self) -> Iv {
        Iv {
            lo: -self.hi.clone(),
            hi: -self.lo.clone(),
        }
    }

    fn scale(&self, k: &Q) -> Iv {
        Iv::new(&self.lo * k, &self.hi * k)
    }

    fn mul(&self, o: &Iv) -> Iv {
        let c = [&self.lo * &o.lo, &self.lo * &o.hi, &self.hi * &o.lo, &self.hi * &o.hi];
        let lo = c.iter().min().unwrap().clone();
        let hi = c.iter().max().unwrap().clone();
        Iv { lo, hi }
    }

    fn contains_zero(&self) -> bool {
        !self.lo.is_positive() && !self.hi.is_negative()
    }

    /// Requires `o` not to contain zero.
    fn div(&self, o: &Iv) -> Iv {
        let inv = Iv::new(o.hi.recip(), o.lo.recip());
        self.mul(&inv)
    }

    fn widen(&self, e: &Q) -> Iv {
        Iv {
            lo: &self.lo - e,
            hi: &self.hi + e,
        }
    }

    /// Rounds outward to dyadic endpoints with `bits` fractional bits.
    fn round(&self, bits: u32) -> Iv {
        let s = pow2(bits);
        Iv {
            lo: (&self.lo * &s).floor() / &s,
            hi: (&self.hi * &s).ceil() / &s,
        }
    }
}

/// `arctan(x)` for `|x| ≤ 1/2` by its alternating series.
fn arctan_small(x: &Q, bits: u32) -> Iv {
    let eps = pow2(bits + 2).recip();
    let x2 = x * x;
    let mut power = x.clone();
    let mut sum = Q::zero();
    let mut n: i64 = 0;
    loop {
        let term = &power / Q::from_integer(BigInt::from(2 * n + 1));
        let term = if n % 2 == 0 { term } else { -term };
        if term.abs() < eps {
            return Iv::new(sum.clone(), sum + term).round(bits + 2);
        }
        sum += term;
        power = (&power * &x2 * pow2(bits + 8)).round() / pow2(bits + 8);
        // Rounding `power` perturbs later terms by at most 2^-(bits+8) each.
        n += 1;
        if n > 4 * bits as i64 + 16 {
            return Iv::point(sum).widen(&eps);
        }
    }
}

fn arctan_iv(x: &Q, bits: u32) -> Iv {
    if x.is_negative() {
        return arctan_iv(&-x.clone(), bits).neg();
    }
    let half = q(1, 2);
    let widened = |iv: Iv| iv.widen(&pow2(bits + 2).recip());
    if *x > Q::one() {
        let quarter_turn = pi_iv(bits + 2).scale(&half);
        widened(quarter_turn.add(&arctan_iv(&x.recip(), bits + 2).neg()))
    } else if *x > half {
        let eighth = pi_iv(bits + 2).scale(&q(1, 4));
        let y = (Q::one() - x) / (Q::one() + x);
        widened(eighth.add(&arctan_small(&y, bits + 2).neg()))
    } else {
        widened(arctan_small(x, bits))
    }
}

fn compute_pi(bits: u32) -> Iv {
    let a = arctan_small(&q(1, 5), bits + 6).scale(&q(16, 1));
    let b = arctan_small(&q(1, 239), bits + 6).scale(&q(-4, 1));
    a.add(&b).widen(&pow2(bits + 8).recip()).round(bits + 2)
}

const PI_CACHE_BITS: u32 = 1024;

fn pi_iv(bits: u32) -> Iv {
    static CACHE: OnceLock<Iv> = OnceLock::new();
    if bits <= PI_CACHE_BITS {
        CACHE.get_or_init(|| compute_pi(PI_CACHE_BITS)).clone()
    } else {
        compute_pi(bits)
    }
}

fn sqrt_iv(r: &Q, bits: u32) -> Iv {
    let scaled = (r * Q::from_integer(BigInt::one() << (2 * bits))).floor().to_integer();
    let s = scaled.sqrt();
    let d = pow2(bits);
    Iv::new(Q::from_integer(s.clone()) / &d, Q::from_integer(s + 1) / d)
}

fn arcsin_iv(x: &Q, bits: u32) -> Iv {
    // arcsin x = arctan(x / √(1 − x²)); arctan is increasing.
    let r = Q::one() - x * x;
    let mut extra = 4;
    loop {
        let s = sqrt_iv(&r, bits + extra);
        if s.lo.is_positive() {
            let t = Iv::point(x.clone()).div(&s);
            let lo = arctan_iv(&t.lo, bits + 2).lo;
            let hi = arctan_iv(&t.hi, bits + 2).hi;
            return Iv { lo, hi };
        }
        extra += 16;
    }
}

/// `(sin y, cos y)` by Taylor series with the Lagrange remainder.
fn sin_cos_iv(y: &Q, bits: u32) -> (Iv, Iv) {
    let eps = pow2(bits + 2).recip();
    let (mut s, mut c) = (Q::zero(), Q::zero());
    let mut term = Q::one(); // y^k / k!
    let mut k: u32 = 0;
    loop {
        match k % 4 {
            0 => c += &term,
            1 => s += &term,
            2 => c -= &term,
            _ => s -= &term,
        }
        k += 1;
        term = (&term * y / Q::from_integer(BigInt::from(k)) * pow2(bits + 16)).round() / pow2(bits + 16);
        if term.abs() < eps && k > 2 {
            let r = term.abs() + pow2(bits + 8).recip() * Q::from_integer(BigInt::from(k));
            return (Iv::point(s).widen(&r), Iv::point(c).widen(&r));
        }
    }
}

fn tan_iv(y: &Q, bits: u32) -> Iv {
    let mut extra = 4;
    loop {
        let (s, c) = sin_cos_iv(y, bits + extra);
        if !c.contains_zero() {
            let t = s.div(&c);
            if &t.hi - &t.lo < pow2(bits).recip() || extra > 600 {
                return t;
            }
        }
        extra += 24;
    }
}

/// `atanh(z)` for `0 ≤ z ≤ 1/3`; all terms positive, tail ≤ next·9/8.
fn atanh_small(z: &Q, bits: u32) -> Iv {
    let eps = pow2(bits + 2).recip();
    let z2 = z * z;
    let mut power = z.clone();
    let mut sum = Q::zero();
    let mut n: i64 = 0;
    loop {
        let term = &power / Q::from_integer(BigInt::from(2 * n + 1));
        if term < eps {
            let tail = term * q(9, 8) + pow2(bits + 6).recip();
            return Iv::new(sum.clone() - pow2(bits + 6).recip(), sum + tail);
        }
        sum += term;
        power = (&power * &z2 * pow2(bits + 10)).round() / pow2(bits + 10);
        n += 1;
    }
}

fn ln_iv(x: &Q, bits: u32) -> Iv {
    // x = 2^k · y with y in (1/2, 2]
    let k = x.numer().bits() as i64 - x.denom().bits() as i64;
    let y = if k >= 0 {
        x / Q::from_integer(BigInt::one() << k as u32)
    } else {
        x * Q::from_integer(BigInt::one() << (-k) as u32)
    };
    let guard = bits + 4 + (k.unsigned_abs().max(1) as f64).log2().ceil() as u32;
    let ln2 = atanh_small(&q(1, 3), guard).scale(&q(2, 1));
    let z = (&y - Q::one()) / (&y + Q::one());
    let ln_y = if z.is_negative() {
        atanh_small(&-z, guard).scale(&q(-2, 1))
    } else {
        atanh_small(&z, guard).scale(&q(2, 1))
    };
    ln2.scale(&Q::from_integer(BigInt::from(k))).add(&ln_y)
}

fn exp_iv(x: &Q, bits: u32) -> Iv {
    // e^x = (e^{x/2^m})^{2^m} with |x/2^m| ≤ 1/2
    let mut m = 0u32;
    let mut r = x.clone();
    while r.abs() > q(1, 2) {
        r /= q(2, 1);
        m += 1;
    }
    let growth = x.abs().ceil().to_integer().to_u32().unwrap_or(u32::MAX / 4).saturating_mul(2);
    let guard = bits + 8 + m + growth;
    let eps = pow2(guard).recip();
    let mut sum = Q::zero();
    let mut term = Q::one();
    let mut k: u32 = 0;
    while term.abs() >= eps {
        sum += &term;
        k += 1;
        term = (&term * &r / Q::from_integer(BigInt::from(k)) * pow2(guard + 8)).round() / pow2(guard + 8);
    }
    let err = term.abs() * q(2, 1) + pow2(guard + 4).recip() * Q::from_integer(BigInt::from(k + 1));
    let mut iv = Iv::point(sum).widen(&err);
    if !iv.lo.is_positive() {
        iv.lo = Q::zero();
    }
    for _ in 0..m {
        iv = iv.mul(&iv).round(guard + 2);
    }
    iv
}

fn atom_iv(a: &Atom, bits: u32) -> Iv {
    match a {
        Atom::Arcsin(x) => arcsin_iv(x, bits),
        Atom::Tan(x) => tan_iv(x, bits),
        Atom::NegLn(x) => ln_iv(x, bits).neg(),
        Atom::Arctan(x) => arctan_iv(x, bits),
        Atom::Exp(x) => exp_iv(x, bits),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Reference values computed independently with a multiprecision library.
    fn dec(s: &str) -> Q {
        let (int, frac) = s.split_once('.').unwrap();
        let neg = int.starts_with('-');
        let digits = format!("{}{}", int.trim_start_matches('-'), frac);
        let v = Q::new(digits.parse().unwrap(), BigInt::from(10).pow(frac.len() as u32));
        if neg {
            -v
        } else {
            v
        }
    }

    fn assert_encloses(r: &Real, expected: &str) {
        let (lo, hi) = r.enclosure(80);
        let e = dec(expected);
        let tol = q(1, 10).pow(25);
        assert!(lo <= &e + &tol && &e - &tol <= hi, "{r}: [{lo}, {hi}] vs {expected}");
        assert!(&hi - &lo < q(1, 1) / pow2(60), "{r}: enclosure too wide");
    }

    #[test]
    fn enclosures_match_known_constants() {
        assert_encloses(&Real::pi_times(q(1, 1)), "3.14159265358979323846264338328");
        assert_encloses(&Real::arcsin(&q(1, 3)).unwrap(), "0.339836909454121937096392513392");
        assert_encloses(&Real::arcsin(&q(-9, 10)).unwrap(), "-1.11976951499863418668667705585");
        assert_encloses(&Real::arcsin(&q(999, 1000)).unwrap(), "1.52607123962616318798162545897");
        assert_encloses(&Real::tan(&q(1, 1)).unwrap(), "1.55740772465490223050697480746");
        assert_encloses(&Real::tan(&q(-3, 2)).unwrap(), "-14.101419947171719387646083652");
        assert_encloses(&Real::neg_ln(&q(2, 1)).unwrap(), "-0.693147180559945309417232121458");
        assert_encloses(&Real::neg_ln(&q(1, 10)).unwrap(), "2.30258509299404568401799145468");
        assert_encloses(&Real::arctan(&q(2, 1)), "1.10714871779409050301706546018");
        assert_encloses(&Real::arctan(&q(-3, 4)), "-0.643501108793284386802809228717");
        assert_encloses(&Real::exp(&q(-1, 1)), "0.367879441171442321595523770161");
        assert_encloses(&Real::exp(&q(5, 2)), "12.1824939607034734380701759512");
    }

    #[test]
    fn special_values_simplify() {
        assert_eq!(Real::arcsin(&q(1, 1)).unwrap(), Real::half_pi());
        assert_eq!(Real::arcsin(&q(-1, 2)).unwrap(), Real::pi_times(q(-1, 6)));
        assert_eq!(Real::arcsin(&q(0, 1)).unwrap(), Real::zero());
        assert_eq!(Real::tan(&q(0, 1)).unwrap(), Real::zero());
        assert_eq!(Real::neg_ln(&q(1, 1)).unwrap(), Real::zero());
        assert_eq!(Real::arctan(&q(-1, 1)), Real::pi_times(q(-1, 4)));
        assert_eq!(Real::exp(&q(0, 1)), Real::int(1));
        assert!(Real::arcsin(&q(3, 2)).is_err());
        assert!(Real::tan(&q(8, 5)).is_err());
        assert!(Real::neg_ln(&q(0, 1)).is_err());
    }

    #[test]
    fn comparisons() {
        let half_pi = Real::half_pi();
        assert_eq!(Real::rational(q(157, 100)).cmp_checked(&half_pi).unwrap(), Ordering::Less);
        assert_eq!(Real::rational(q(1571, 1000)).cmp_checked(&half_pi).unwrap(), Ordering::Greater);
        let a = Real::pi_times(q(1, 1)).sub(&Real::arcsin(&q(1, 3)).unwrap()).unwrap();
        assert_eq!(a.cmp_checked(&Real::int(3)).unwrap(), Ordering::Less);
        assert_eq!(a.cmp_checked(&a.clone()).unwrap(), Ordering::Equal);
        let b = a.add_rational(&q(1, 1)).add(&Real::rational(q(-1, 1))).unwrap();
        assert_eq!(a.cmp_checked(&b).unwrap(), Ordering::Equal);
        assert!(Real::add(&Real::arctan(&q(2, 1)), &Real::exp(&q(1, 1))).is_err());
    }

    #[test]
    fn tag_roundtrip() {
        let samples = [
            Real::rational(q(-3, 7)),
            Real::half_pi(),
            Real::half_pi().neg(),
            Real::pi_times(q(2, 1)),
            Real::pi_times(q(3, 5)),
            Real::pi_times(q(1, 1)).sub(&Real::arcsin(&q(1, 3)).unwrap()).unwrap(),
            Real::neg_ln(&q(5, 2)).unwrap().add_rational(&q(1, 1)),
            Real::arctan(&q(2, 1)).scale(&q(-2, 1)),
        ];
        for r in samples {
            let s = r.to_tag();
            assert_eq!(s.parse::<Real>().unwrap(), r, "{s}");
        }
        assert_eq!(Real::half_pi().to_tag(), "tag:half_pi");
        assert_eq!(Real::rational(q(2, 1)).to_tag(), "rat:2/1");
        assert_eq!("rat:5".parse::<Real>().unwrap(), Real::int(5));
        assert_eq!("-1/2".parse::<Real>().unwrap(), Real::rational(q(-1, 2)));
        assert!("tag:sinh(1)".parse::<Real>().is_err());
    }
}
