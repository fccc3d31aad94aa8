//! Exact scalars for the supported rings.
//!
//! Every scalar carries enough information to identify its ring: rationals,
//! Gaussian rationals, residues modulo `m`, and plain integers. Binary
//! operations between different kinds are a programming error and panic;
//! the matrix layer checks contexts before it ever combines entries.

use alloc::string::{String, ToString};
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Which ring a scalar lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum ScalarKind {
    /// ℚ, involution is the identity on scalars.
    Rational,
    /// ℚ(i), involution is complex conjugation.
    GaussianRational,
    /// ℤ/mℤ with the given modulus (m ≥ 2).
    ModInt(u64),
    /// ℤ.
    Integer,
}

impl ScalarKind {
    pub fn is_finite(self) -> bool {
        matches!(self, ScalarKind::ModInt(_))
    }

    pub fn modulus(self) -> Option<u64> {
        match self {
            ScalarKind::ModInt(m) => Some(m),
            _ => None,
        }
    }

    /// Scalars form a field: ℚ, ℚ(i), or ℤ/pℤ for prime p.
    pub fn is_field(self) -> bool {
        match self {
            ScalarKind::Rational | ScalarKind::GaussianRational => true,
            ScalarKind::ModInt(m) => is_prime(m),
            ScalarKind::Integer => false,
        }
    }

    /// Stable ring identifier used by the file formats: `QQ`, `QI`, `Zm:<m>`, `ZZ`.
    pub fn ring_id(self) -> String {
        match self {
            ScalarKind::Rational => "QQ".to_string(),
            ScalarKind::GaussianRational => "QI".to_string(),
            ScalarKind::ModInt(m) => alloc::format!("Zm:{m}"),
            ScalarKind::Integer => "ZZ".to_string(),
        }
    }

    pub fn from_ring_id(id: &str) -> Result<Self, ParseScalarError> {
        match id {
            "QQ" => Ok(ScalarKind::Rational),
            "QI" => Ok(ScalarKind::GaussianRational),
            "ZZ" => Ok(ScalarKind::Integer),
            _ => {
                let m = id
                    .strip_prefix("Zm:")
                    .and_then(|m| m.parse::<u64>().ok())
                    .ok_or_else(|| ParseScalarError::UnknownRing(id.to_string()))?;
                if m < 2 {
                    return Err(ParseScalarError::BadModulus(m));
                }
                Ok(ScalarKind::ModInt(m))
            }
        }
    }
}

pub(crate) fn is_prime(m: u64) -> bool {
    if m < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= m {
        if m.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, thiserror::Error)]
pub enum ParseScalarError {
    #[error("unknown ring identifier `{0}` (expected QQ, QI, Zm:<m> or ZZ)")]
    UnknownRing(String),
    #[error("modulus must be at least 2, got {0}")]
    BadModulus(u64),
    #[error("malformed scalar `{text}` for ring {ring}")]
    Malformed { text: String, ring: String },
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
    #[error("residue `{text}` is outside [0, {modulus})")]
    OutOfRange { text: String, modulus: u64 },
}

/// An element of ℚ(i), stored as a pair of reduced rationals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    pub re: BigRational,
    pub im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        GaussianRational { re, im }
    }

    pub fn i() -> Self {
        GaussianRational::new(BigRational::zero(), BigRational::one())
    }

    pub fn conj(&self) -> Self {
        GaussianRational::new(self.re.clone(), -&self.im)
    }

    pub fn norm(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }
}

/// A residue in `[0, modulus)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ModInt {
    value: u64,
    modulus: u64,
}

impl ModInt {
    /// Reduces `value` modulo `modulus`.
    ///
    /// # Panics
    /// If `modulus < 2`.
    pub fn new(value: i128, modulus: u64) -> Self {
        assert!(modulus >= 2, "modulus must be at least 2");
        let v = value.rem_euclid(modulus as i128) as u64;
        ModInt { value: v, modulus }
    }

    pub fn value(self) -> u64 {
        self.value
    }

    pub fn modulus(self) -> u64 {
        self.modulus
    }

    fn check(self, rhs: ModInt) {
        assert_eq!(self.modulus, rhs.modulus, "modulus mismatch");
    }

    fn inverse(self) -> Option<ModInt> {
        let (g, x) = ext_gcd(self.value as i128, self.modulus as i128);
        (g == 1).then(|| ModInt::new(x, self.modulus))
    }
}

/// Returns (gcd(a, b), x) with a·x ≡ gcd (mod b).
fn ext_gcd(a: i128, b: i128) -> (i128, i128) {
    let (mut old_r, mut r) = (a, b);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    (old_r, old_s)
}

/// An exact ring scalar.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rational(BigRational),
    Gaussian(GaussianRational),
    Mod(ModInt),
    Integer(BigInt),
}

impl Scalar {
    pub fn kind(&self) -> ScalarKind {
        match self {
            Scalar::Rational(_) => ScalarKind::Rational,
            Scalar::Gaussian(_) => ScalarKind::GaussianRational,
            Scalar::Mod(x) => ScalarKind::ModInt(x.modulus),
            Scalar::Integer(_) => ScalarKind::Integer,
        }
    }

    pub fn from_i64(kind: ScalarKind, v: i64) -> Scalar {
        match kind {
            ScalarKind::Rational => Scalar::Rational(BigRational::from_integer(v.into())),
            ScalarKind::GaussianRational => Scalar::Gaussian(GaussianRational::new(
                BigRational::from_integer(v.into()),
                BigRational::zero(),
            )),
            ScalarKind::ModInt(m) => Scalar::Mod(ModInt::new(v as i128, m)),
            ScalarKind::Integer => Scalar::Integer(v.into()),
        }
    }

    /// `num/den` in ℚ or ℚ(i).
    ///
    /// # Panics
    /// If `den == 0` or `kind` has no fractions.
    pub fn ratio(kind: ScalarKind, num: i64, den: i64) -> Scalar {
        let q = BigRational::new(num.into(), den.into());
        match kind {
            ScalarKind::Rational => Scalar::Rational(q),
            ScalarKind::GaussianRational => {
                Scalar::Gaussian(GaussianRational::new(q, BigRational::zero()))
            }
            _ => panic!("fractions are only available over QQ and QI"),
        }
    }

    pub fn zero(kind: ScalarKind) -> Scalar {
        Scalar::from_i64(kind, 0)
    }

    pub fn one(kind: ScalarKind) -> Scalar {
        Scalar::from_i64(kind, 1)
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rational(q) => q.is_zero(),
            Scalar::Gaussian(z) => z.re.is_zero() && z.im.is_zero(),
            Scalar::Mod(x) => x.value == 0,
            Scalar::Integer(z) => z.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        *self == Scalar::one(self.kind())
    }

    /// Scalar part of the involution: conjugation over ℚ(i), identity otherwise.
    pub fn conj(&self) -> Scalar {
        match self {
            Scalar::Gaussian(z) => Scalar::Gaussian(z.conj()),
            other => other.clone(),
        }
    }

    /// Multiplicative inverse, if this scalar is a unit of its ring.
    pub fn inverse(&self) -> Option<Scalar> {
        match self {
            Scalar::Rational(q) => (!q.is_zero()).then(|| Scalar::Rational(q.recip())),
            Scalar::Gaussian(z) => {
                let n = z.norm();
                if n.is_zero() {
                    return None;
                }
                Some(Scalar::Gaussian(GaussianRational::new(
                    &z.re / &n,
                    -&z.im / &n,
                )))
            }
            Scalar::Mod(x) => x.inverse().map(Scalar::Mod),
            Scalar::Integer(z) => (z.abs().is_one()).then(|| Scalar::Integer(z.clone())),
        }
    }

    pub fn is_unit(&self) -> bool {
        self.inverse().is_some()
    }

    /// Division that is exact by construction (fields, or ℤ with zero remainder).
    ///
    /// # Panics
    /// If the quotient does not exist in the ring.
    pub(crate) fn exact_div(&self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Integer(a), Scalar::Integer(b)) => {
                let (q, r) = a.div_rem(b);
                assert!(r.is_zero(), "inexact integer division");
                Scalar::Integer(q)
            }
            _ => self * &rhs.inverse().expect("division by a non-unit"),
        }
    }

    /// The integer lift of a residue or integer; `None` for fractional kinds.
    pub(crate) fn to_bigint(&self) -> Option<BigInt> {
        match self {
            Scalar::Mod(x) => Some(BigInt::from(x.value)),
            Scalar::Integer(z) => Some(z.clone()),
            Scalar::Rational(q) if q.is_integer() => Some(q.to_integer()),
            _ => None,
        }
    }

    /// Maps an integer into the ring of `kind`.
    pub(crate) fn from_bigint(kind: ScalarKind, z: &BigInt) -> Scalar {
        match kind {
            ScalarKind::Rational => Scalar::Rational(BigRational::from_integer(z.clone())),
            ScalarKind::GaussianRational => Scalar::Gaussian(GaussianRational::new(
                BigRational::from_integer(z.clone()),
                BigRational::zero(),
            )),
            ScalarKind::ModInt(m) => {
                let r = z.mod_floor(&BigInt::from(m));
                Scalar::Mod(ModInt::new(r.to_i128().unwrap_or(0), m))
            }
            ScalarKind::Integer => Scalar::Integer(z.clone()),
        }
    }

    /// Parses the textual scalar syntax for rings of `kind`.
    pub fn parse(kind: ScalarKind, text: &str) -> Result<Scalar, ParseScalarError> {
        let s = text.trim();
        let malformed = || ParseScalarError::Malformed {
            text: text.to_string(),
            ring: kind.ring_id(),
        };
        match kind {
            ScalarKind::Rational => parse_rational(s, text).map(Scalar::Rational),
            ScalarKind::GaussianRational => {
                parse_gaussian(s, text)
                    .map(Scalar::Gaussian)
                    .map_err(|e| match e {
                        ParseScalarError::ZeroDenominator(_) => e,
                        _ => malformed(),
                    })
            }
            ScalarKind::ModInt(m) => {
                let v = BigInt::from_str(s).map_err(|_| malformed())?;
                if v.is_negative() || v >= BigInt::from(m) {
                    return Err(ParseScalarError::OutOfRange {
                        text: text.to_string(),
                        modulus: m,
                    });
                }
                Ok(Scalar::Mod(ModInt::new(v.to_i128().unwrap_or(0), m)))
            }
            ScalarKind::Integer => BigInt::from_str(s)
                .map(Scalar::Integer)
                .map_err(|_| malformed()),
        }
    }
}

fn parse_rational(s: &str, original: &str) -> Result<BigRational, ParseScalarError> {
    let malformed = || ParseScalarError::Malformed {
        text: original.to_string(),
        ring: "QQ".to_string(),
    };
    if s.is_empty() {
        return Err(malformed());
    }
    match s.split_once('/') {
        None => BigInt::from_str(s)
            .map(BigRational::from_integer)
            .map_err(|_| malformed()),
        Some((n, d)) => {
            let n = BigInt::from_str(n).map_err(|_| malformed())?;
            // Denominators carry no sign of their own in the canonical syntax,
            // but accept one and normalize.
            let d = BigInt::from_str(d).map_err(|_| malformed())?;
            if d.is_zero() {
                return Err(ParseScalarError::ZeroDenominator(original.to_string()));
            }
            Ok(BigRational::new(n, d))
        }
    }
}

fn parse_gaussian(s: &str, original: &str) -> Result<GaussianRational, ParseScalarError> {
    let Some(body) = s.strip_suffix('i') else {
        return parse_rational(s, original)
            .map(|re| GaussianRational::new(re, BigRational::zero()));
    };
    // Split at the last sign that is not the leading one: "a/b+c/d" + "i".
    let split = body
        .char_indices()
        .filter(|&(i, c)| i > 0 && (c == '+' || c == '-'))
        .map(|(i, _)| i)
        .next_back();
    let (re_text, im_text) = match split {
        Some(i) => (&body[..i], &body[i..]),
        None => ("", body),
    };
    let re = if re_text.is_empty() {
        BigRational::zero()
    } else {
        parse_rational(re_text, original)?
    };
    let im = match im_text {
        "" | "+" => BigRational::one(),
        "-" => -BigRational::one(),
        t => parse_rational(t.strip_prefix('+').unwrap_or(t), original)?,
    };
    Ok(GaussianRational::new(re, im))
}

impl FromStr for ScalarKind {
    type Err = ParseScalarError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        ScalarKind::from_ring_id(s)
    }
}

impl fmt::Display for ScalarKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.ring_id())
    }
}

fn fmt_rational(q: &BigRational, f: &mut fmt::Formatter<'_>) -> fmt::Result {
    if q.is_integer() {
        write!(f, "{}", q.numer())
    } else {
        write!(f, "{}/{}", q.numer(), q.denom())
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let re_zero = self.re.is_zero();
        if self.im.is_zero() {
            return fmt_rational(&self.re, f);
        }
        if !re_zero {
            fmt_rational(&self.re, f)?;
            if self.im.is_positive() {
                f.write_str("+")?;
            }
        }
        if self.im.is_one() {
            f.write_str("i")
        } else if (-&self.im).is_one() {
            f.write_str("-i")
        } else {
            fmt_rational(&self.im, f)?;
            f.write_str("i")
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rational(q) => fmt_rational(q, f),
            Scalar::Gaussian(z) => z.fmt(f),
            Scalar::Mod(x) => write!(f, "{}", x.value),
            Scalar::Integer(z) => write!(f, "{z}"),
        }
    }
}

fn kind_mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar kind mismatch: {} vs {}", a.kind(), b.kind())
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a + b),
            (Scalar::Gaussian(a), Scalar::Gaussian(b)) => {
                Scalar::Gaussian(GaussianRational::new(&a.re + &b.re, &a.im + &b.im))
            }
            (Scalar::Mod(a), Scalar::Mod(b)) => {
                a.check(*b);
                Scalar::Mod(ModInt::new(a.value as i128 + b.value as i128, a.modulus))
            }
            (Scalar::Integer(a), Scalar::Integer(b)) => Scalar::Integer(a + b),
            _ => kind_mismatch(self, rhs),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a - b),
            (Scalar::Gaussian(a), Scalar::Gaussian(b)) => {
                Scalar::Gaussian(GaussianRational::new(&a.re - &b.re, &a.im - &b.im))
            }
            (Scalar::Mod(a), Scalar::Mod(b)) => {
                a.check(*b);
                Scalar::Mod(ModInt::new(a.value as i128 - b.value as i128, a.modulus))
            }
            (Scalar::Integer(a), Scalar::Integer(b)) => Scalar::Integer(a - b),
            _ => kind_mismatch(self, rhs),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (self, rhs) {
            (Scalar::Rational(a), Scalar::Rational(b)) => Scalar::Rational(a * b),
            (Scalar::Gaussian(a), Scalar::Gaussian(b)) => Scalar::Gaussian(GaussianRational::new(
                &a.re * &b.re - &a.im * &b.im,
                &a.re * &b.im + &a.im * &b.re,
            )),
            (Scalar::Mod(a), Scalar::Mod(b)) => {
                a.check(*b);
                let p = (a.value as u128 * b.value as u128) % a.modulus as u128;
                Scalar::Mod(ModInt {
                    value: p as u64,
                    modulus: a.modulus,
                })
            }
            (Scalar::Integer(a), Scalar::Integer(b)) => Scalar::Integer(a * b),
            _ => kind_mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rational(a) => Scalar::Rational(-a),
            Scalar::Gaussian(a) => Scalar::Gaussian(GaussianRational::new(-&a.re, -&a.im)),
            Scalar::Mod(a) => Scalar::Mod(ModInt::new(-(a.value as i128), a.modulus)),
            Scalar::Integer(a) => Scalar::Integer(-a),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Scalar {
        Scalar::parse(ScalarKind::Rational, s).unwrap()
    }

    fn gi(s: &str) -> Scalar {
        Scalar::parse(ScalarKind::GaussianRational, s).unwrap()
    }

    #[test]
    fn rationals_are_normalized() {
        assert_eq!(q("2/4"), q("1/2"));
        assert_eq!(q("2/4").to_string(), "1/2");
        assert_eq!(q("3/-6").to_string(), "-1/2");
        assert_eq!(q("4/2").to_string(), "2");
        match q("-3/-9") {
            Scalar::Rational(r) => assert!(r.denom().is_positive()),
            _ => unreachable!(),
        }
    }

    #[test]
    fn zero_denominator_rejected() {
        assert!(matches!(
            Scalar::parse(ScalarKind::Rational, "1/0"),
            Err(ParseScalarError::ZeroDenominator(_))
        ));
    }

    #[test]
    fn gaussian_syntax() {
        assert_eq!(gi("i").to_string(), "i");
        assert_eq!(gi("-i").to_string(), "-i");
        assert_eq!(gi("1/2+3/4i").to_string(), "1/2+3/4i");
        assert_eq!(gi("1/2-i").to_string(), "1/2-i");
        assert_eq!(gi("-2/3i").to_string(), "-2/3i");
        assert_eq!(gi("5").to_string(), "5");
        assert_eq!(gi("+i"), gi("i"));
        assert_eq!(gi("2/4+2/4i").to_string(), "1/2+1/2i");
        let i = gi("i");
        assert_eq!(&i * &i, gi("-1"));
        assert_eq!(i.conj(), gi("-i"));
        assert!(Scalar::parse(ScalarKind::GaussianRational, "1+i+i").is_err());
    }

    #[test]
    fn modint_range_and_units() {
        let k = ScalarKind::ModInt(6);
        assert!(Scalar::parse(k, "6").is_err());
        assert!(Scalar::parse(k, "-1").is_err());
        let two = Scalar::parse(k, "2").unwrap();
        assert!(two.inverse().is_none());
        let five = Scalar::parse(k, "5").unwrap();
        assert_eq!(five.inverse(), Some(five.clone()));
        assert_eq!(&two * &five, Scalar::parse(k, "4").unwrap());
        assert_eq!(-&two, Scalar::parse(k, "4").unwrap());
    }

    #[test]
    fn integer_units() {
        assert!(Scalar::from_i64(ScalarKind::Integer, 2).inverse().is_none());
        assert!(Scalar::from_i64(ScalarKind::Integer, -1).is_unit());
        assert!(Scalar::from_i64(ScalarKind::Integer, 0).inverse().is_none());
    }

    #[test]
    fn ring_ids_round_trip() {
        for id in ["QQ", "QI", "ZZ", "Zm:2", "Zm:12"] {
            assert_eq!(ScalarKind::from_ring_id(id).unwrap().ring_id(), id);
        }
        assert!(ScalarKind::from_ring_id("Zm:1").is_err());
        assert!(ScalarKind::from_ring_id("RR").is_err());
    }

    #[test]
    #[should_panic(expected = "modulus mismatch")]
    fn mixed_moduli_panic() {
        let _ = &Scalar::from_i64(ScalarKind::ModInt(3), 1)
            + &Scalar::from_i64(ScalarKind::ModInt(5), 1);
    }

    #[test]
    fn primality() {
        let primes: alloc::vec::Vec<u64> = (0..30).filter(|&m| is_prime(m)).collect();
        assert_eq!(primes, [2, 3, 5, 7, 11, 13, 17, 19, 23, 29]);
    }
}
