use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use super::scalar::{Rational, Scalar};

/// An element `a + b·√d` of a quadratic extension of `F`.
///
/// Values whose `b` part is zero are "pure" and mix freely with any
/// extension. Two values with nonzero `b` must share the same extension
/// (their radicands may differ by a square factor); mixing unrelated
/// extensions panics, the same way dividing by zero does.
#[derive(Clone, Debug, PartialEq)]
pub struct QuadExt<F> {
    pub a: F,
    pub b: F,
    pub d: F,
}

impl<F: Scalar> QuadExt<F> {
    pub fn new(a: F, b: F, d: F) -> Self {
        if b.is_zero() {
            return QuadExt::pure(a);
        }
        match d.sqrt() {
            Some(root) => QuadExt::pure(a + b * root),
            None => QuadExt { a, b, d },
        }
    }

    pub fn pure(a: F) -> Self {
        QuadExt {
            a,
            b: F::zero(),
            d: F::zero(),
        }
    }

    /// `√d`, collapsed to a pure value when `d` is a square in `F`.
    pub fn sqrt_of(d: F) -> Self {
        QuadExt::new(F::zero(), F::one(), d)
    }

    pub fn is_pure(&self) -> bool {
        self.b.is_zero()
    }

    /// The value as an element of `F`, when it lies there.
    pub fn as_base(&self) -> Option<F> {
        if self.is_pure() {
            Some(self.a.clone())
        } else {
            None
        }
    }

    pub fn conj(&self) -> Self {
        QuadExt {
            a: self.a.clone(),
            b: -self.b.clone(),
            d: self.d.clone(),
        }
    }

    /// Rewrites both operands over a common radicand.
    fn align(self, other: Self) -> (F, F, F, F, F) {
        if other.b.is_zero() {
            return (self.a, self.b, other.a, F::zero(), self.d);
        }
        if self.b.is_zero() {
            return (self.a, F::zero(), other.a, other.b, other.d);
        }
        if self.d.same(&other.d) {
            return (self.a, self.b, other.a, other.b, self.d);
        }
        let ratio = self.d.clone() / other.d.clone();
        match ratio.sqrt() {
            Some(r) => (self.a, self.b * r, other.a, other.b, other.d),
            None => panic!(
                "incompatible quadratic extensions: sqrt({}) and sqrt({})",
                self.d, other.d
            ),
        }
    }

    fn norm(&self) -> F {
        self.a.square() - self.b.square() * self.d.clone()
    }
}

impl<F: Scalar> Add for QuadExt<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (a1, b1, a2, b2, d) = self.align(rhs);
        QuadExt::new(a1 + a2, b1 + b2, d)
    }
}

impl<F: Scalar> Sub for QuadExt<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let (a1, b1, a2, b2, d) = self.align(rhs);
        QuadExt::new(a1 - a2, b1 - b2, d)
    }
}

impl<F: Scalar> Mul for QuadExt<F> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let (a1, b1, a2, b2, d) = self.align(rhs);
        let a = a1.clone() * a2.clone() + b1.clone() * b2.clone() * d.clone();
        let b = a1 * b2 + a2 * b1;
        QuadExt::new(a, b, d)
    }
}

impl<F: Scalar> Div for QuadExt<F> {
    type Output = Self;
    fn div(self, rhs: Self) -> Self {
        let norm = rhs.norm();
        let num = self * rhs.conj();
        QuadExt::new(num.a / norm.clone(), num.b / norm, num.d)
    }
}

impl<F: Scalar> Neg for QuadExt<F> {
    type Output = Self;
    fn neg(self) -> Self {
        QuadExt {
            a: -self.a,
            b: -self.b,
            d: self.d,
        }
    }
}

impl<F: Scalar> fmt::Display for QuadExt<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_pure() {
            write!(f, "{}", self.a)
        } else {
            write!(f, "{} + {}*sqrt({})", self.a, self.b, self.d)
        }
    }
}

impl<F: Scalar> Scalar for QuadExt<F> {
    const EXACT: bool = F::EXACT;

    fn zero() -> Self {
        QuadExt::pure(F::zero())
    }

    fn one() -> Self {
        QuadExt::pure(F::one())
    }

    fn from_i64(n: i64) -> Self {
        QuadExt::pure(F::from_i64(n))
    }

    fn from_rational(q: &Rational) -> Self {
        QuadExt::pure(F::from_rational(q))
    }

    fn to_f64(&self) -> f64 {
        if self.is_pure() {
            self.a.to_f64()
        } else {
            self.a.to_f64() + self.b.to_f64() * self.d.to_f64().sqrt()
        }
    }

    fn signum(&self) -> i32 {
        let sa = self.a.signum();
        let sb = self.b.signum();
        if sb == 0 {
            return sa;
        }
        if sa == 0 || sa == sb {
            return sb;
        }
        // Opposite signs: compare a² with b²d.
        let lhs = self.a.square();
        let rhs = self.b.square() * self.d.clone();
        match (lhs - rhs).signum() {
            1 => sa,
            -1 => sb,
            _ => 0,
        }
    }

    fn same(&self, other: &Self) -> bool {
        let diff = self.clone() - other.clone();
        diff.a.is_zero() && diff.b.is_zero()
    }

    fn vanishes(terms: &[Self]) -> bool {
        let sum = terms.iter().cloned().fold(Self::zero(), |acc, t| acc + t);
        if sum.is_pure() && !F::EXACT {
            let parts: Vec<F> = terms.iter().map(|t| t.a.clone()).collect();
            return F::vanishes(&parts);
        }
        sum.a.is_zero() && sum.b.is_zero()
    }

    fn sqrt(&self) -> Option<Self> {
        self.as_base()?.sqrt().map(QuadExt::pure)
    }

    fn normalize(coeffs: &[Self]) -> Vec<Self> {
        match coeffs.iter().find(|c| !c.is_zero()) {
            None => coeffs.to_vec(),
            Some(lead) => {
                let lead = lead.clone();
                coeffs.iter().map(|c| c.clone() / lead.clone()).collect()
            }
        }
    }

    fn with_tolerance(self, tol: f64) -> Self {
        QuadExt {
            a: self.a.with_tolerance(tol),
            b: self.b.with_tolerance(tol),
            d: self.d.with_tolerance(tol),
        }
    }

    fn fresh(&self) -> Self {
        QuadExt {
            a: self.a.fresh(),
            b: self.b.fresh(),
            d: self.d.fresh(),
        }
    }

    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    #[test]
    fn arithmetic_in_sqrt2() {
        let s2 = QuadExt::sqrt_of(q(2));
        let prod = s2.clone() * s2.clone();
        assert_eq!(prod.as_base(), Some(q(2)));
        let x = QuadExt::pure(q(1)) + s2.clone();
        let inv = QuadExt::one() / x.clone();
        // 1/(1+√2) = √2 - 1
        assert!(inv.same(&(s2 - QuadExt::one())));
        assert!((x * inv).same(&QuadExt::one()));
    }

    #[test]
    fn square_radicands_collapse() {
        let r = QuadExt::sqrt_of(q(9));
        assert!(r.is_pure());
        assert_eq!(r.as_base(), Some(q(3)));
    }

    #[test]
    fn aligns_radicands_differing_by_squares() {
        let a = QuadExt::sqrt_of(q(2));
        let b = QuadExt::sqrt_of(q(8));
        let sum = a + b;
        assert!(sum.same(&QuadExt::new(q(0), q(3), q(2))));
    }

    #[test]
    #[should_panic(expected = "incompatible")]
    fn unrelated_extensions_panic() {
        let _ = QuadExt::sqrt_of(q(2)) + QuadExt::sqrt_of(q(3));
    }

    #[test]
    fn sign_of_surds() {
        // 3 - 2√2 > 0, 1 - √2 < 0
        assert_eq!(QuadExt::new(q(3), q(-2), q(2)).signum(), 1);
        assert_eq!(QuadExt::new(q(1), q(-1), q(2)).signum(), -1);
        assert_eq!(QuadExt::new(q(-1), q(1), q(2)).signum(), 1);
    }
}
