use std::fmt;

use super::quad::QuadExt;
use super::scalar::Scalar;

/// A real root of a quadratic over `F`.
#[derive(Clone, Debug, PartialEq)]
pub enum Root<F> {
    Exact(F),
    /// `rational + coeff·√disc`, with `disc` not a square in `F`.
    Surd { rational: F, coeff: F, disc: F },
}

impl<F: Scalar> Root<F> {
    pub fn to_quad(&self) -> QuadExt<F> {
        match self {
            Root::Exact(v) => QuadExt::pure(v.clone()),
            Root::Surd {
                rational,
                coeff,
                disc,
            } => QuadExt::new(rational.clone(), coeff.clone(), disc.clone()),
        }
    }

    pub fn exact(&self) -> Option<&F> {
        match self {
            Root::Exact(v) => Some(v),
            Root::Surd { .. } => None,
        }
    }

    pub fn to_f64(&self) -> f64 {
        self.to_quad().to_f64()
    }
}

impl<F: Scalar> fmt::Display for Root<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Root::Exact(v) => write!(f, "{v}"),
            Root::Surd {
                rational,
                coeff,
                disc,
            } => write!(f, "{rational} + {coeff}*sqrt({disc})"),
        }
    }
}

/// Solution set of `a·t² + b·t + c = 0` on the projective line.
#[derive(Clone, Debug, PartialEq)]
pub enum RootSet<F> {
    All,
    None,
    One(Root<F>),
    /// Smaller root first.
    Two(Root<F>, Root<F>),
    /// A finite root together with `t = ∞` (the leading coefficient vanished).
    OnePlusInfinity(Root<F>),
}

impl<F: Scalar> RootSet<F> {
    pub fn finite_roots(&self) -> Vec<Root<F>> {
        match self {
            RootSet::One(r) | RootSet::OnePlusInfinity(r) => vec![r.clone()],
            RootSet::Two(r, s) => vec![r.clone(), s.clone()],
            RootSet::All | RootSet::None => Vec::new(),
        }
    }

    pub fn has_infinity(&self) -> bool {
        matches!(self, RootSet::OnePlusInfinity(_))
    }
}

/// Real roots of `a·t² + b·t + c`. The discriminant sign is decided with
/// [`Scalar::vanishes`] on `b²` and `-4ac`.
pub fn solve_quadratic<F: Scalar>(a: &F, b: &F, c: &F) -> RootSet<F> {
    if a.is_zero() {
        if b.is_zero() {
            return if c.is_zero() {
                RootSet::All
            } else {
                RootSet::None
            };
        }
        return RootSet::OnePlusInfinity(Root::Exact(-c.clone() / b.clone()));
    }
    let b2 = b.square();
    let four_ac = F::from_i64(4) * a.clone() * c.clone();
    let two_a = F::from_i64(2) * a.clone();
    let vertex = -b.clone() / two_a.clone();
    if F::vanishes(&[b2.clone(), -four_ac.clone()]) {
        return RootSet::One(Root::Exact(vertex));
    }
    let disc = b2 - four_ac;
    if disc.signum() < 0 {
        return RootSet::None;
    }
    let (lo, hi) = match disc.sqrt() {
        Some(s) => {
            let h = s / two_a;
            (
                Root::Exact(vertex.clone() - h.clone()),
                Root::Exact(vertex + h),
            )
        }
        None => {
            let coeff = F::one() / two_a;
            (
                Root::Surd {
                    rational: vertex.clone(),
                    coeff: -coeff.clone(),
                    disc: disc.clone(),
                },
                Root::Surd {
                    rational: vertex,
                    coeff,
                    disc,
                },
            )
        }
    };
    if a.signum() > 0 {
        RootSet::Two(lo, hi)
    } else {
        RootSet::Two(hi, lo)
    }
}

/// Dense univariate polynomial, lowest degree first, used for small
/// resultant and discriminant computations.
#[derive(Clone, Debug, PartialEq)]
pub struct Poly<F> {
    pub coeffs: Vec<F>,
}

impl<F: Scalar> Poly<F> {
    pub fn new(mut coeffs: Vec<F>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, with `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval(&self, x: &F) -> F {
        self.coeffs
            .iter()
            .rev()
            .fold(F::zero(), |acc, c| acc * x.clone() + c.clone())
    }

    pub fn derivative(&self) -> Self {
        Poly::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c.clone() * F::from_i64(i as i64))
                .collect(),
        )
    }

    /// Remainder of division by a nonzero `divisor`.
    pub fn rem(&self, divisor: &Self) -> Self {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let lead = divisor.coeffs[dd].clone();
        let mut r = self.coeffs.clone();
        while r.len() > dd {
            let k = r.len() - 1 - dd;
            let q = r[r.len() - 1].clone() / lead.clone();
            for (i, c) in divisor.coeffs.iter().enumerate() {
                r[k + i] = r[k + i].clone() - q.clone() * c.clone();
            }
            r.pop();
            while r.last().is_some_and(|c| c.is_zero()) {
                r.pop();
            }
        }
        Poly::new(r)
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        match a.coeffs.last().cloned() {
            None => a,
            Some(lead) => Poly::new(a.coeffs.into_iter().map(|c| c / lead.clone()).collect()),
        }
    }

    /// Interpolates the polynomial of degree `< xs.len()` through the samples.
    pub fn interpolate(xs: &[F], ys: &[F]) -> Self {
        let n = xs.len();
        let mut out = vec![F::zero(); n];
        for i in 0..n {
            // basis polynomial for node i
            let mut basis = vec![F::one()];
            let mut denom = F::one();
            for (j, xj) in xs.iter().enumerate() {
                if i == j {
                    continue;
                }
                let mut next = vec![F::zero(); basis.len() + 1];
                for (k, c) in basis.iter().enumerate() {
                    next[k + 1] = next[k + 1].clone() + c.clone();
                    next[k] = next[k].clone() - c.clone() * xj.clone();
                }
                basis = next;
                denom = denom * (xs[i].clone() - xj.clone());
            }
            let scale = ys[i].clone() / denom;
            for (k, c) in basis.into_iter().enumerate() {
                out[k] = out[k].clone() + c * scale.clone();
            }
        }
        Poly::new(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::{Approx, Rational};

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    #[test]
    fn linear_with_infinity() {
        let r = solve_quadratic(&q(0, 1), &q(-2, 1), &q(1, 1));
        assert_eq!(r, RootSet::OnePlusInfinity(Root::Exact(q(1, 2))));
    }

    #[test]
    fn no_real_roots_and_all() {
        assert_eq!(solve_quadratic(&q(1, 1), &q(0, 1), &q(1, 1)), RootSet::None);
        assert_eq!(solve_quadratic(&q(0, 1), &q(0, 1), &q(0, 1)), RootSet::All);
        assert_eq!(solve_quadratic(&q(0, 1), &q(0, 1), &q(3, 1)), RootSet::None);
    }

    #[test]
    fn rational_and_double_roots() {
        // (t-1)(t-3), and -(t-1)(t-3) keeps the order
        let expect = RootSet::Two(Root::Exact(q(1, 1)), Root::Exact(q(3, 1)));
        assert_eq!(solve_quadratic(&q(1, 1), &q(-4, 1), &q(3, 1)), expect);
        assert_eq!(solve_quadratic(&q(-1, 1), &q(4, 1), &q(-3, 1)), expect);
        assert_eq!(
            solve_quadratic(&q(4, 1), &q(-4, 1), &q(1, 1)),
            RootSet::One(Root::Exact(q(1, 2)))
        );
    }

    #[test]
    fn irrational_roots_stay_symbolic() {
        // t² - 2
        let r = solve_quadratic(&q(1, 1), &q(0, 1), &q(-2, 1));
        let RootSet::Two(lo, hi) = r else {
            panic!("expected two roots")
        };
        assert!(lo.exact().is_none());
        for root in [&lo, &hi] {
            let t = root.to_quad();
            assert!((t.clone() * t).same(&QuadExt::from_i64(2)));
        }
        assert!(lo.to_f64() < hi.to_f64());
    }

    #[test]
    fn float_backend_roots() {
        let r = solve_quadratic(&Approx::new(1.0), &Approx::new(0.0), &Approx::new(-2.0));
        let RootSet::Two(lo, hi) = r else {
            panic!("expected two roots")
        };
        assert!((lo.to_f64() + 2f64.sqrt()).abs() < 1e-12);
        assert!((hi.to_f64() - 2f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn poly_gcd_finds_double_root() {
        // (x-2)²(x+1)
        let p = Poly::new(vec![q(4, 1), q(0, 1), q(-3, 1), q(1, 1)]);
        let g = p.gcd(&p.derivative());
        assert_eq!(g, Poly::new(vec![q(-2, 1), q(1, 1)]));
    }

    #[test]
    fn interpolation_recovers_cubic() {
        let p = Poly::new(vec![q(1, 1), q(-2, 1), q(0, 1), q(5, 3)]);
        let xs: Vec<Rational> = (0..4).map(|i| q(i, 1)).collect();
        let ys: Vec<Rational> = xs.iter().map(|x| p.eval(x)).collect();
        assert_eq!(Poly::interpolate(&xs, &ys), p);
    }
}
