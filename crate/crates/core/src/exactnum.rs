//! Exact scalars: rationals and elements of a single real quadratic field Q(√d).
//!
//! A [`Scalar`] is `a + b·√d` with rational `a`, `b`. Rationals carry `d = 1`
//! and `b = 0`; any result whose √d coefficient cancels is normalized back to
//! that form, so equality and hashing are structural. Combining two irrational
//! scalars over different radicands is an error rather than an implicit tower.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub type Rational = BigRational;

/// Builds the rational `num/den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[derive(Clone, Debug)]
pub struct Scalar {
    a: Rational,
    b: Rational,
    d: u64,
}

impl Scalar {
    pub fn zero() -> Self {
        Self::from_rational(Rational::zero())
    }

    pub fn one() -> Self {
        Self::from_rational(Rational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_rational(rat(num, den))
    }

    pub fn from_rational(a: Rational) -> Self {
        Scalar { a, b: Rational::zero(), d: 1 }
    }

    /// `a + b·√d`. `d` must be a square-free integer greater than 1.
    pub fn quadratic(a: Rational, b: Rational, d: u64) -> Result<Self> {
        if d < 2 || !is_square_free(d) {
            return Err(Error::InvalidRadicand(d));
        }
        Ok(Self::normalized(a, b, d))
    }

    /// `√d` itself.
    pub fn sqrt(d: u64) -> Result<Self> {
        Self::quadratic(Rational::zero(), Rational::one(), d)
    }

    fn normalized(a: Rational, b: Rational, d: u64) -> Self {
        if b.is_zero() {
            Scalar { a, b, d: 1 }
        } else {
            Scalar { a, b, d }
        }
    }

    /// Rational part `a`.
    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    /// Coefficient `b` of √d.
    pub fn irrational_part(&self) -> &Rational {
        &self.b
    }

    /// Radicand, or `None` for a rational value.
    pub fn radicand(&self) -> Option<u64> {
        (self.d > 1).then_some(self.d)
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.b.is_zero() && self.a.is_one()
    }

    /// True iff the √d coefficient is exactly zero.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    pub fn to_rational(&self) -> Option<Rational> {
        self.is_rational().then(|| self.a.clone())
    }

    /// Galois conjugate `a − b·√d`.
    pub fn conjugate(&self) -> Self {
        Scalar { a: self.a.clone(), b: -self.b.clone(), d: self.d }
    }

    /// Field norm `a² − b²d`, always rational.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - &self.b * &self.b * Rational::from_integer(BigInt::from(self.d))
    }

    fn common_radicand(&self, other: &Scalar) -> Result<u64> {
        match (self.d, other.d) {
            (1, d) | (d, 1) => Ok(d),
            (d, e) if d == e => Ok(d),
            (d, e) => Err(Error::MixedExtensions(d, e)),
        }
    }

    pub fn checked_add(&self, other: &Scalar) -> Result<Scalar> {
        let d = self.common_radicand(other)?;
        Ok(Self::normalized(&self.a + &other.a, &self.b + &other.b, d))
    }

    pub fn checked_sub(&self, other: &Scalar) -> Result<Scalar> {
        let d = self.common_radicand(other)?;
        Ok(Self::normalized(&self.a - &other.a, &self.b - &other.b, d))
    }

    pub fn checked_mul(&self, other: &Scalar) -> Result<Scalar> {
        let d = self.common_radicand(other)?;
        let dd = Rational::from_integer(BigInt::from(d));
        let a = &self.a * &other.a + &self.b * &other.b * dd;
        let b = &self.a * &other.b + &self.b * &other.a;
        Ok(Self::normalized(a, b, d))
    }

    pub fn checked_inv(&self) -> Result<Scalar> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        // 1/(a + b√d) = (a − b√d)/(a² − b²d); the norm is nonzero since √d is irrational.
        let n = self.norm();
        Ok(Self::normalized(&self.a / &n, -&self.b / &n, self.d))
    }

    pub fn checked_div(&self, other: &Scalar) -> Result<Scalar> {
        self.common_radicand(other)?;
        self.checked_mul(&other.checked_inv()?)
    }

    /// Exact sign: −1, 0 or 1.
    pub fn signum(&self) -> i32 {
        let sa = sign_of(&self.a);
        let sb = sign_of(&self.b);
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // Mixed signs: compare a² with b²d.
        let a2 = &self.a * &self.a;
        let b2d = &self.b * &self.b * Rational::from_integer(BigInt::from(self.d));
        match a2.cmp(&b2d) {
            Ordering::Greater => sa,
            Ordering::Less => sb,
            Ordering::Equal => 0,
        }
    }

    pub fn is_positive(&self) -> bool {
        self.signum() > 0
    }

    pub fn is_negative(&self) -> bool {
        self.signum() < 0
    }

    pub fn abs(&self) -> Scalar {
        if self.is_negative() {
            -self.clone()
        } else {
            self.clone()
        }
    }

    /// Nearest double. Mixed-sign values are evaluated as `(a² − b²d)/(a − b√d)`
    /// so that cancellation does not destroy relative accuracy.
    pub fn to_f64(&self) -> f64 {
        let a = rational_to_f64(&self.a);
        if self.b.is_zero() {
            return a;
        }
        let b = rational_to_f64(&self.b);
        let root = (self.d as f64).sqrt();
        if sign_of(&self.a) * sign_of(&self.b) >= 0 {
            a + b * root
        } else {
            rational_to_f64(&self.norm()) / (a - b * root)
        }
    }

    /// Integer `k` with `k·self` having integral components, minimal positive.
    pub fn denominator_lcm(&self) -> BigInt {
        self.a.denom().lcm(self.b.denom())
    }
}

fn sign_of(q: &Rational) -> i32 {
    match q.numer().sign() {
        Sign::Minus => -1,
        Sign::NoSign => 0,
        Sign::Plus => 1,
    }
}

fn rational_to_f64(q: &Rational) -> f64 {
    q.to_f64().unwrap_or_else(|| {
        // Ratio::to_f64 only fails on overflow of both parts; fall back to a scaled quotient.
        let n = q.numer().to_f64().unwrap_or(f64::INFINITY);
        let d = q.denom().to_f64().unwrap_or(f64::INFINITY);
        n / d
    })
}

pub fn is_square_free(d: u64) -> bool {
    if d == 0 {
        return false;
    }
    let mut k = 2u64;
    while k.saturating_mul(k) <= d {
        if d.is_multiple_of(k * k) {
            return false;
        }
        k += 1;
    }
    true
}

/// Least `q > 0` such that `q·x` is an integer for every `x`.
pub fn lcm_denominators<'a, I>(xs: I) -> Result<BigInt>
where
    I: IntoIterator<Item = &'a Rational>,
{
    let mut it = xs.into_iter().peekable();
    if it.peek().is_none() {
        return Err(Error::EmptyInput("lcm_denominators"));
    }
    Ok(it.fold(BigInt::one(), |acc, x| acc.lcm(x.denom())))
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.a == other.a && self.b == other.b && self.d == other.d
    }
}

impl Eq for Scalar {}

impl Hash for Scalar {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.a.hash(state);
        self.b.hash(state);
        self.d.hash(state);
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Total order by exact value. Panics when comparing over distinct radicands.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self - other).signum() {
            -1 => Ordering::Less,
            0 => Ordering::Equal,
            _ => Ordering::Greater,
        }
    }
}

impl Default for Scalar {
    fn default() -> Self {
        Scalar::zero()
    }
}

impl From<i64> for Scalar {
    fn from(n: i64) -> Self {
        Scalar::from_int(n)
    }
}

impl From<Rational> for Scalar {
    fn from(q: Rational) -> Self {
        Scalar::from_rational(q)
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a> $trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }
        impl $trait<Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl<'a> $trait<&'a Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
        impl<'a> $trait<Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                self.$method(&rhs)
            }
        }
    };
}

// Operator sugar panics where the checked forms return errors.
forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);
forward_binop!(Div, div, checked_div);

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        Scalar { a: -self.a, b: -self.b, d: self.d }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -self.clone()
    }
}

impl std::iter::Sum for Scalar {
    fn sum<I: Iterator<Item = Scalar>>(iter: I) -> Scalar {
        iter.fold(Scalar::zero(), |acc, x| acc + x)
    }
}

fn fmt_rational(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

/// Canonical text: `p/q`, `sqrt(d)`, `-1/3*sqrt(2)`, `1/2+3*sqrt(5)`, `1-sqrt(2)`.
impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return f.write_str(&fmt_rational(&self.a));
        }
        let mag = self.b.abs();
        let radical = if mag.is_one() {
            format!("sqrt({})", self.d)
        } else {
            format!("{}*sqrt({})", fmt_rational(&mag), self.d)
        };
        let neg = self.b.is_negative();
        if self.a.is_zero() {
            if neg {
                write!(f, "-{radical}")
            } else {
                f.write_str(&radical)
            }
        } else {
            write!(f, "{}{}{}", fmt_rational(&self.a), if neg { "-" } else { "+" }, radical)
        }
    }
}

fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.strip_prefix('+').unwrap_or(num).parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() || den.is_negative() {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// Parses `[coef*]sqrt(d)` with an optional leading sign; returns (coef, d).
fn parse_radical(s: &str) -> Option<(Rational, u64)> {
    let s = s.trim();
    let (sign, body) = match s.as_bytes().first()? {
        b'-' => (-1, &s[1..]),
        b'+' => (1, &s[1..]),
        _ => (1, s),
    };
    let idx = body.find("sqrt(")?;
    let coef_txt = body[..idx].trim();
    let coef = if coef_txt.is_empty() {
        Rational::one()
    } else {
        parse_rational(coef_txt.strip_suffix('*')?)?
    };
    let d: u64 = body[idx + 5..].strip_suffix(')')?.trim().parse().ok()?;
    let coef = if sign < 0 { -coef } else { coef };
    Some((coef, d))
}

impl FromStr for Scalar {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(s.to_string());
        let t = s.trim();
        if !t.contains("sqrt") {
            return parse_rational(t).map(Scalar::from_rational).ok_or_else(bad);
        }
        // The rational part, if present, is the longest prefix before a sign that parses.
        let bytes = t.as_bytes();
        let split = (1..bytes.len()).find_map(|i| {
            if bytes[i] != b'+' && bytes[i] != b'-' {
                return None;
            }
            parse_rational(&t[..i]).map(|q| (q, &t[i..]))
        });
        let (rational, radical) = split.unwrap_or((Rational::zero(), t));
        let (coef, d) = parse_radical(radical).ok_or_else(bad)?;
        Scalar::quadratic(rational, coef, d)
    }
}

impl serde::Serialize for Scalar {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> serde::Deserialize<'de> for Scalar {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(serde::Deserialize)]
        #[serde(untagged)]
        enum Repr {
            Int(i64),
            Text(String),
        }
        match Repr::deserialize(d)? {
            Repr::Int(n) => Ok(Scalar::from_int(n)),
            Repr::Text(t) => t.parse().map_err(serde::de::Error::custom),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(txt: &str) -> Scalar {
        txt.parse().unwrap()
    }

    #[test]
    fn arithmetic_examples() {
        assert_eq!(Scalar::from_ratio(1, 2) + Scalar::from_ratio(1, 3), Scalar::from_ratio(5, 6));
        assert_eq!(s("1+sqrt(2)") * s("1-sqrt(2)"), Scalar::from_int(-1));
        assert_eq!(Scalar::from_ratio(3, 4) / Scalar::from_ratio(3, 4), Scalar::one());
    }

    #[test]
    fn division_by_zero_and_mixed_extensions() {
        assert!(matches!(Scalar::one().checked_div(&Scalar::zero()), Err(Error::DivisionByZero)));
        let r2 = Scalar::sqrt(2).unwrap();
        let r3 = Scalar::sqrt(3).unwrap();
        assert!(matches!(r2.checked_add(&r3), Err(Error::MixedExtensions(2, 3))));
        // A rational operand never conflicts.
        assert!(r2.checked_mul(&Scalar::from_int(5)).is_ok());
    }

    #[test]
    fn rationality() {
        assert!(Scalar::from_ratio(5, 6).is_rational());
        assert!(s("1+0*sqrt(2)").is_rational());
        assert!(!Scalar::sqrt(2).unwrap().is_rational());
    }

    #[test]
    fn lcm_examples() {
        assert_eq!(lcm_denominators(&[rat(1, 2), rat(1, 3)]).unwrap(), BigInt::from(6));
        assert_eq!(lcm_denominators(&[rat(1, 1), rat(-1, 1), rat(0, 1)]).unwrap(), BigInt::from(1));
        assert!(lcm_denominators(std::iter::empty()).is_err());
    }

    #[test]
    fn lcm_matches_brute_force() {
        let xs = [rat(-1, 2), rat(-1, 3), rat(1, 1)];
        let brute = (1..=60i64)
            .find(|q| xs.iter().all(|x| (x * rat(*q, 1)).is_integer()))
            .unwrap();
        assert_eq!(brute, 6);
        assert_eq!(lcm_denominators(&xs).unwrap(), BigInt::from(brute));
    }

    #[test]
    fn exact_sign() {
        assert_eq!(s("1-sqrt(2)").signum(), -1);
        assert_eq!(s("3/2-sqrt(2)").signum(), 1);
        assert_eq!(s("-3/2+sqrt(2)").signum(), -1);
        assert_eq!(s("-1+sqrt(2)").signum(), 1);
        assert_eq!(Scalar::zero().signum(), 0);
    }

    #[test]
    fn text_forms() {
        for txt in ["0", "-7", "5/6", "sqrt(2)", "-sqrt(3)", "1/2+3*sqrt(5)", "1-sqrt(2)", "-2/3-1/7*sqrt(6)"] {
            assert_eq!(s(txt).to_string(), txt);
        }
        assert_eq!(s(" 2/4 ").to_string(), "1/2");
        assert_eq!(s("1/2+-1/3*sqrt(2)").to_string(), "1/2-1/3*sqrt(2)");
        assert!("sqrt(4)".parse::<Scalar>().is_err());
        assert!("1/0".parse::<Scalar>().is_err());
        assert!("abc".parse::<Scalar>().is_err());
    }

    #[test]
    fn float_export_under_cancellation() {
        // 99/70 − √2 ≈ 7.2e-5; naive subtraction loses about 5 digits.
        let x = s("99/70-sqrt(2)");
        let exact = 1.0 / (70.0 * (99.0 + 70.0 * 2f64.sqrt()));
        assert!(((x.to_f64() - exact) / exact).abs() < 1e-14);
    }
}
