//! Field abstraction shared by every geometric routine.
//!
//! Two backends implement [`Scalar`]: [`Rational`] (arbitrary precision, all
//! predicates are decisions) and [`Approx`] (`f64` with a relative tolerance).
//! [`QuadExt`](super::QuadExt) lifts either of them to a quadratic extension.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact backend.
pub type Rational = BigRational;

/// Relative tolerance used by [`Approx`] when none was configured.
pub const DEFAULT_TOL: f64 = 1e-9;

/// An ordered field element.
///
/// Equality and sign tests go through [`Scalar::same`], [`Scalar::signum`]
/// and [`Scalar::vanishes`]; for the exact backend they are exact, for the
/// float backend they apply `|a-b| <= tol * max(|a|, |b|)` or fall within the
/// propagated rounding error (see [`Approx`]).
pub trait Scalar:
    Clone
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Div<Output = Self>
    + Neg<Output = Self>
{
    /// True when arithmetic never rounds.
    const EXACT: bool;

    fn zero() -> Self;
    fn one() -> Self;
    fn from_i64(n: i64) -> Self;
    fn from_rational(q: &Rational) -> Self;
    fn to_f64(&self) -> f64;

    /// -1, 0 or 1.
    fn signum(&self) -> i32;

    /// Field equality under the backend's policy.
    fn same(&self, other: &Self) -> bool;

    /// Whether `terms` sums to zero, judged relative to the size of the
    /// individual terms.
    fn vanishes(terms: &[Self]) -> bool;

    /// Square root inside the field, if one exists.
    fn sqrt(&self) -> Option<Self>;

    /// Scales a coefficient vector to a canonical representative of its
    /// projective class. The first nonzero entry becomes positive.
    fn normalize(coeffs: &[Self]) -> Vec<Self>;

    fn with_tolerance(self, _tol: f64) -> Self {
        self
    }

    /// The same value with its rounding history dropped, as if it were
    /// input data.
    fn fresh(&self) -> Self {
        self.clone()
    }

    fn is_zero(&self) -> bool {
        self.signum() == 0
    }

    fn from_ratio(num: i64, den: i64) -> Self {
        Self::from_i64(num) / Self::from_i64(den)
    }

    fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self.clone()
        } else {
            self.clone()
        }
    }

    fn square(&self) -> Self {
        self.clone() * self.clone()
    }
}

fn first_nonzero_sign<F: Scalar>(coeffs: &[F]) -> i32 {
    coeffs
        .iter()
        .map(Scalar::signum)
        .find(|s| *s != 0)
        .unwrap_or(0)
}

impl Scalar for Rational {
    const EXACT: bool = true;

    fn zero() -> Self {
        Zero::zero()
    }

    fn one() -> Self {
        One::one()
    }

    fn from_i64(n: i64) -> Self {
        BigRational::from_integer(BigInt::from(n))
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }

    fn to_f64(&self) -> f64 {
        ToPrimitive::to_f64(self).unwrap_or(f64::NAN)
    }

    fn signum(&self) -> i32 {
        if Zero::is_zero(self) {
            0
        } else if self.is_positive() {
            1
        } else {
            -1
        }
    }

    fn same(&self, other: &Self) -> bool {
        self == other
    }

    fn vanishes(terms: &[Self]) -> bool {
        let sum: Rational = terms.iter().cloned().fold(Zero::zero(), |acc, t| acc + t);
        Zero::is_zero(&sum)
    }

    fn sqrt(&self) -> Option<Self> {
        if self.is_negative() {
            return None;
        }
        let n = exact_isqrt(self.numer())?;
        let d = exact_isqrt(self.denom())?;
        Some(BigRational::new(n, d))
    }

    fn normalize(coeffs: &[Self]) -> Vec<Self> {
        let lcm = coeffs
            .iter()
            .fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
        let ints: Vec<BigInt> = coeffs
            .iter()
            .map(|q| q.numer() * (&lcm / q.denom()))
            .collect();
        let gcd = ints.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
        if gcd.is_zero() {
            return coeffs.to_vec();
        }
        let sign = if first_nonzero_sign(coeffs) < 0 { -1 } else { 1 };
        ints.into_iter()
            .map(|n| BigRational::from_integer(n * sign / &gcd))
            .collect()
    }

    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
}

fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    if &(&r * &r) == n {
        Some(r)
    } else {
        None
    }
}

/// Float backend. The tolerance travels with the value; binary operations
/// keep the larger of the two, and `0.0` means "not configured".
///
/// Each value also carries `scale`, the size of the operands of the last
/// operation, and `mag`, a first-order estimate of its accumulated rounding
/// error divided by the unit roundoff, with independent contributions
/// combined as a root sum of squares. A freshly converted value has
/// `scale = mag = |value|`. A value is zero when `|value| <= tol * scale`,
/// or when it is within [`ROUNDING_SLACK`] times its estimated rounding
/// error.
#[derive(Clone, Copy, Debug)]
pub struct Approx {
    pub value: f64,
    scale: f64,
    mag: f64,
    tol: f64,
}

/// Multiple of the estimated rounding error below which a value is zero.
pub const ROUNDING_SLACK: f64 = 1024.0;

impl PartialEq for Approx {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}

impl Approx {
    pub fn new(value: f64) -> Self {
        Approx {
            value,
            scale: value.abs(),
            mag: value.abs(),
            tol: 0.0,
        }
    }

    pub fn with_tol(value: f64, tol: f64) -> Self {
        Approx {
            tol,
            ..Approx::new(value)
        }
    }

    pub fn tol(&self) -> f64 {
        if self.tol > 0.0 {
            self.tol
        } else {
            DEFAULT_TOL
        }
    }

    /// The magnitude the value's rounding error is measured against.
    pub fn magnitude(&self) -> f64 {
        self.mag
    }

    /// The size of the operands the value was computed from.
    pub fn scale(&self) -> f64 {
        self.scale
    }

    fn join(self, other: Approx, value: f64, scale: f64, mag: f64) -> Approx {
        Approx {
            value,
            scale: scale.max(value.abs()),
            mag: mag.max(value.abs()),
            tol: self.tol.max(other.tol),
        }
    }

    fn negligible(&self) -> bool {
        let v = self.value.abs();
        v <= self.tol() * self.scale || v <= ROUNDING_SLACK * f64::EPSILON / 2.0 * self.mag
    }
}

impl fmt::Display for Approx {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

impl Add for Approx {
    type Output = Approx;
    fn add(self, rhs: Approx) -> Approx {
        let scale = self.value.abs().max(rhs.value.abs());
        self.join(rhs, self.value + rhs.value, scale, self.mag.hypot(rhs.mag))
    }
}

impl Sub for Approx {
    type Output = Approx;
    fn sub(self, rhs: Approx) -> Approx {
        let scale = self.value.abs().max(rhs.value.abs());
        self.join(rhs, self.value - rhs.value, scale, self.mag.hypot(rhs.mag))
    }
}

impl Mul for Approx {
    type Output = Approx;
    fn mul(self, rhs: Approx) -> Approx {
        let mag = (self.value.abs() * rhs.mag).hypot(rhs.value.abs() * self.mag);
        let value = self.value * rhs.value;
        self.join(rhs, value, value.abs(), mag)
    }
}

impl Div for Approx {
    type Output = Approx;
    fn div(self, rhs: Approx) -> Approx {
        let value = self.value / rhs.value;
        let den = rhs.value.abs();
        let mag = if den > 0.0 {
            self.mag.hypot(value.abs() * rhs.mag) / den
        } else {
            f64::INFINITY
        };
        self.join(rhs, value, value.abs(), mag)
    }
}

impl Neg for Approx {
    type Output = Approx;
    fn neg(self) -> Approx {
        Approx {
            value: -self.value,
            ..self
        }
    }
}

impl Scalar for Approx {
    const EXACT: bool = false;

    fn zero() -> Self {
        Approx::new(0.0)
    }

    fn one() -> Self {
        Approx::new(1.0)
    }

    fn from_i64(n: i64) -> Self {
        Approx::new(n as f64)
    }

    fn from_rational(q: &Rational) -> Self {
        Approx::new(ToPrimitive::to_f64(q).unwrap_or(f64::NAN))
    }

    fn to_f64(&self) -> f64 {
        self.value
    }

    fn signum(&self) -> i32 {
        if self.negligible() {
            0
        } else if self.value > 0.0 {
            1
        } else {
            -1
        }
    }

    fn same(&self, other: &Self) -> bool {
        (*self - *other).negligible()
    }

    fn vanishes(terms: &[Self]) -> bool {
        let sum = terms.iter().copied().fold(Approx::zero(), |acc, t| acc + t);
        let scale = terms.iter().map(|t| t.value.abs()).fold(0.0, f64::max);
        Approx { scale, ..sum }.negligible()
    }

    fn sqrt(&self) -> Option<Self> {
        match self.signum() {
            -1 => None,
            0 => Some(Approx {
                value: 0.0,
                scale: self.scale.sqrt(),
                mag: self.mag.sqrt(),
                tol: self.tol,
            }),
            _ => {
                let value = self.value.sqrt();
                Some(Approx {
                    value,
                    scale: value,
                    mag: value.max(self.mag / (2.0 * value)),
                    tol: self.tol,
                })
            }
        }
    }

    fn normalize(coeffs: &[Self]) -> Vec<Self> {
        let Some(max) = coeffs.iter().copied().max_by(|a, b| a.value.abs().total_cmp(&b.value.abs())) else {
            return Vec::new();
        };
        if max.value == 0.0 {
            return coeffs.to_vec();
        }
        let max = if first_nonzero_sign(coeffs) < 0 { -max.abs() } else { max.abs() };
        coeffs.iter().map(|c| *c / max).collect()
    }

    fn with_tolerance(self, tol: f64) -> Self {
        Approx { tol, ..self }
    }

    fn fresh(&self) -> Self {
        Approx {
            scale: self.value.abs(),
            mag: self.value.abs(),
            ..*self
        }
    }
}

/// Parses `p/q`, an integer or a finite decimal into an exact rational.
pub fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    if let Some((n, d)) = text.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(BigRational::new(n, d));
    }
    if let Some((int, frac)) = text.split_once('.') {
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = int.starts_with('-');
        let int_digits = int.trim_start_matches(['-', '+']);
        if !int_digits.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let digits: BigInt = format!("{int_digits}{frac}").parse().ok()?;
        let den = num_traits::pow(BigInt::from(10), frac.len());
        let q = BigRational::new(digits, den);
        return Some(if negative { -q } else { q });
    }
    let n: BigInt = text.parse().ok()?;
    Some(BigRational::from_integer(n))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn rational_sqrt_only_for_squares() {
        assert_eq!(q(9, 4).sqrt(), Some(q(3, 2)));
        assert_eq!(q(2, 1).sqrt(), None);
        assert_eq!(q(-4, 1).sqrt(), None);
        assert_eq!(q(0, 1).sqrt(), Some(q(0, 1)));
    }

    #[test]
    fn rational_normalize_to_primitive_integers() {
        let v = Rational::normalize(&[q(-1, 2), q(1, 3), q(0, 1)]);
        assert_eq!(v, vec![q(3, 1), q(-2, 1), q(0, 1)]);
    }

    #[test]
    fn approx_relative_equality() {
        let a = Approx::with_tol(1e6, 1e-9);
        let b = Approx::with_tol(1e6 + 1e-4, 1e-9);
        assert!(a.same(&b));
        let c = Approx::with_tol(1e6 + 1.0, 1e-9);
        assert!(!a.same(&c));
        assert!(Approx::vanishes(&[Approx::new(1e8), Approx::new(-1e8 + 1e-3)]));
        assert!(!Approx::vanishes(&[Approx::new(1.0), Approx::new(-1.0 + 1e-6)]));
    }

    #[test]
    fn approx_tolerance_propagates() {
        let a = Approx::with_tol(1.0, 1e-3);
        let b = Approx::from_i64(2);
        let c = a + b;
        assert!(c.same(&Approx::new(3.0005)));
    }

    #[test]
    fn approx_zero_tests_follow_cancellation() {
        // small values are not zero on their own
        assert_eq!(Approx::new(1e-12).signum(), 1);
        // a difference of large products is judged against the products
        let x = Approx::new(1e5 + 0.1);
        let d = x * x - Approx::new((1e5 + 0.1) * (1e5 + 0.1));
        assert_eq!(d.signum(), 0);
        assert!(d.magnitude() > 1e9);
        // fresh values forget how they were computed
        assert_eq!(d.fresh().magnitude(), d.value.abs());
        assert_eq!(Rational::from_i64(3).fresh(), Rational::from_i64(3));
    }

    #[test]
    fn approx_division_amplifies_cancelled_denominators() {
        let one = Approx::one();
        let tiny = (Approx::new(1.0 + 1e-6) - one) * Approx::new(1e6);
        let q = one / tiny;
        assert!(q.magnitude() > 1e5 * q.value.abs());
    }

    #[test]
    fn parses_rationals() {
        assert_eq!(parse_rational("3/5"), Some(q(3, 5)));
        assert_eq!(parse_rational("-0.25"), Some(q(-1, 4)));
        assert_eq!(parse_rational("12"), Some(q(12, 1)));
        assert_eq!(parse_rational("1/0"), None);
        assert_eq!(parse_rational("x"), None);
    }
}
