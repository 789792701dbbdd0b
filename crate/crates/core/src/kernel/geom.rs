use std::ops::{Add, Neg, Sub};

use super::scalar::Scalar;
use super::KernelError;

/// A plane vector, also used for finite positions.
#[derive(Clone, Debug, PartialEq)]
pub struct Vec2<F> {
    pub x: F,
    pub y: F,
}

/// A finite point of the plane.
pub type Point<F> = Vec2<F>;

impl<F: Scalar> Vec2<F> {
    pub fn new(x: F, y: F) -> Self {
        Vec2 { x, y }
    }

    pub fn from_i64(x: i64, y: i64) -> Self {
        Vec2::new(F::from_i64(x), F::from_i64(y))
    }

    pub fn zero() -> Self {
        Vec2::new(F::zero(), F::zero())
    }

    pub fn dot(&self, other: &Self) -> F {
        self.x.clone() * other.x.clone() + self.y.clone() * other.y.clone()
    }

    pub fn cross(&self, other: &Self) -> F {
        self.x.clone() * other.y.clone() - self.y.clone() * other.x.clone()
    }

    /// Rotation by +90°.
    pub fn perp(&self) -> Self {
        Vec2::new(-self.y.clone(), self.x.clone())
    }

    pub fn scale(&self, k: &F) -> Self {
        Vec2::new(self.x.clone() * k.clone(), self.y.clone() * k.clone())
    }

    pub fn norm2(&self) -> F {
        self.dot(self)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero()
    }

    pub fn same(&self, other: &Self) -> bool {
        self.x.same(&other.x) && self.y.same(&other.y)
    }

    pub fn is_parallel(&self, other: &Self) -> bool {
        F::vanishes(&[
            self.x.clone() * other.y.clone(),
            -(self.y.clone() * other.x.clone()),
        ])
    }

    pub fn is_perpendicular(&self, other: &Self) -> bool {
        F::vanishes(&[
            self.x.clone() * other.x.clone(),
            self.y.clone() * other.y.clone(),
        ])
    }

    /// `(1-t)·self + t·other`.
    pub fn lerp(&self, other: &Self, t: &F) -> Self {
        self.clone() + (other.clone() - self.clone()).scale(t)
    }

    pub fn midpoint(&self, other: &Self) -> Self {
        (self.clone() + other.clone()).scale(&F::from_ratio(1, 2))
    }

    /// Rotation by the angle whose direction is `(c, s)`, scaled by `|(c, s)|`.
    pub fn rotate_by(&self, c: &F, s: &F) -> Self {
        Vec2::new(
            c.clone() * self.x.clone() - s.clone() * self.y.clone(),
            s.clone() * self.x.clone() + c.clone() * self.y.clone(),
        )
    }

    pub fn map<G, M: Fn(&F) -> G>(&self, f: M) -> Vec2<G> {
        Vec2 {
            x: f(&self.x),
            y: f(&self.y),
        }
    }

    pub fn to_hpoint(&self) -> HPoint<F> {
        HPoint::finite(self)
    }
}

impl<F: Scalar> Add for Vec2<F> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Vec2::new(self.x + rhs.x, self.y + rhs.y)
    }
}

impl<F: Scalar> Sub for Vec2<F> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Vec2::new(self.x - rhs.x, self.y - rhs.y)
    }
}

impl<F: Scalar> Neg for Vec2<F> {
    type Output = Self;
    fn neg(self) -> Self {
        Vec2::new(-self.x, -self.y)
    }
}

/// A projective point `(x : y : w)`; `w = 0` is a point at infinity.
#[derive(Clone, Debug, PartialEq)]
pub struct HPoint<F> {
    pub x: F,
    pub y: F,
    pub w: F,
}

impl<F: Scalar> HPoint<F> {
    pub fn new(x: F, y: F, w: F) -> Result<Self, KernelError> {
        if x.is_zero() && y.is_zero() && w.is_zero() {
            return Err(KernelError::ZeroVector);
        }
        Ok(HPoint { x, y, w })
    }

    pub fn finite(p: &Vec2<F>) -> Self {
        HPoint {
            x: p.x.clone(),
            y: p.y.clone(),
            w: F::one(),
        }
    }

    /// The point at infinity in direction `dir`.
    pub fn at_infinity(dir: &Vec2<F>) -> Self {
        HPoint {
            x: dir.x.clone(),
            y: dir.y.clone(),
            w: F::zero(),
        }
    }

    pub fn is_finite(&self) -> bool {
        !self.w.is_zero()
    }

    pub fn to_point(&self) -> Option<Vec2<F>> {
        if self.is_finite() {
            Some(Vec2::new(
                self.x.clone() / self.w.clone(),
                self.y.clone() / self.w.clone(),
            ))
        } else {
            None
        }
    }

    /// Direction of a point at infinity.
    pub fn direction(&self) -> Option<Vec2<F>> {
        if self.is_finite() {
            None
        } else {
            Some(Vec2::new(self.x.clone(), self.y.clone()))
        }
    }

    pub fn coords(&self) -> [F; 3] {
        [self.x.clone(), self.y.clone(), self.w.clone()]
    }

    /// Projective equality.
    pub fn same(&self, other: &Self) -> bool {
        F::vanishes(&[
            self.y.clone() * other.w.clone(),
            -(self.w.clone() * other.y.clone()),
        ]) && F::vanishes(&[
            self.w.clone() * other.x.clone(),
            -(self.x.clone() * other.w.clone()),
        ]) && F::vanishes(&[
            self.x.clone() * other.y.clone(),
            -(self.y.clone() * other.x.clone()),
        ])
    }

    pub fn map<G, M: Fn(&F) -> G>(&self, f: M) -> HPoint<G> {
        HPoint {
            x: f(&self.x),
            y: f(&self.y),
            w: f(&self.w),
        }
    }
}

/// The line `a·x + b·y + c = 0`, with `(a, b) ≠ (0, 0)`.
#[derive(Clone, Debug, PartialEq)]
pub struct Line<F> {
    pub a: F,
    pub b: F,
    pub c: F,
}

impl<F: Scalar> Line<F> {
    pub fn new(a: F, b: F, c: F) -> Result<Self, KernelError> {
        if a.is_zero() && b.is_zero() {
            return Err(KernelError::NotALine);
        }
        Ok(Line { a, b, c })
    }

    pub fn through(p: &Vec2<F>, q: &Vec2<F>) -> Result<Self, KernelError> {
        Line::join(&HPoint::finite(p), &HPoint::finite(q))
    }

    /// Line through two projective points; fails when they coincide or
    /// both lie at infinity.
    pub fn join(p: &HPoint<F>, q: &HPoint<F>) -> Result<Self, KernelError> {
        let [a, b, c] = cross3(&p.coords(), &q.coords());
        if a.is_zero() && b.is_zero() {
            return Err(if c.is_zero() {
                KernelError::CoincidentPoints
            } else {
                KernelError::NotALine
            });
        }
        Ok(Line { a, b, c })
    }

    pub fn through_with_direction(p: &Vec2<F>, dir: &Vec2<F>) -> Result<Self, KernelError> {
        if dir.is_zero() {
            return Err(KernelError::ZeroVector);
        }
        let normal = dir.perp();
        let c = -normal.dot(p);
        Ok(Line {
            a: normal.x,
            b: normal.y,
            c,
        })
    }

    pub fn normal(&self) -> Vec2<F> {
        Vec2::new(self.a.clone(), self.b.clone())
    }

    pub fn direction(&self) -> Vec2<F> {
        Vec2::new(-self.b.clone(), self.a.clone())
    }

    pub fn coords(&self) -> [F; 3] {
        [self.a.clone(), self.b.clone(), self.c.clone()]
    }

    pub fn contains(&self, p: &HPoint<F>) -> bool {
        F::vanishes(&[
            self.a.clone() * p.x.clone(),
            self.b.clone() * p.y.clone(),
            self.c.clone() * p.w.clone(),
        ])
    }

    pub fn contains_point(&self, p: &Vec2<F>) -> bool {
        self.contains(&HPoint::finite(p))
    }

    /// Projective equality.
    pub fn same(&self, other: &Self) -> bool {
        let p = HPoint {
            x: self.a.clone(),
            y: self.b.clone(),
            w: self.c.clone(),
        };
        let q = HPoint {
            x: other.a.clone(),
            y: other.b.clone(),
            w: other.c.clone(),
        };
        p.same(&q)
    }

    pub fn is_parallel(&self, other: &Self) -> bool {
        self.normal().is_parallel(&other.normal())
    }

    pub fn is_perpendicular(&self, other: &Self) -> bool {
        self.normal().is_perpendicular(&other.normal())
    }

    /// Orthogonal projection of `p` onto the line.
    pub fn foot(&self, p: &Vec2<F>) -> Vec2<F> {
        let n = self.normal();
        let k = (n.dot(p) + self.c.clone()) / n.norm2();
        p.clone() - n.scale(&k)
    }

    pub fn reflect(&self, p: &Vec2<F>) -> Vec2<F> {
        let f = self.foot(p);
        f.clone() + f - p.clone()
    }

    pub fn normalized(&self) -> Self {
        let v = F::normalize(&self.coords());
        Line {
            a: v[0].clone(),
            b: v[1].clone(),
            c: v[2].clone(),
        }
    }

    pub fn map<G, M: Fn(&F) -> G>(&self, f: M) -> Line<G> {
        Line {
            a: f(&self.a),
            b: f(&self.b),
            c: f(&self.c),
        }
    }
}

pub(crate) fn cross3<F: Scalar>(u: &[F; 3], v: &[F; 3]) -> [F; 3] {
    [
        u[1].clone() * v[2].clone() - u[2].clone() * v[1].clone(),
        u[2].clone() * v[0].clone() - u[0].clone() * v[2].clone(),
        u[0].clone() * v[1].clone() - u[1].clone() * v[0].clone(),
    ]
}

/// Intersection of two lines; a point at infinity when they are parallel.
pub fn intersect<F: Scalar>(l1: &Line<F>, l2: &Line<F>) -> Result<HPoint<F>, KernelError> {
    let [x, y, w] = cross3(&l1.coords(), &l2.coords());
    if l1.same(l2) {
        return Err(KernelError::CoincidentLines);
    }
    Ok(HPoint { x, y, w })
}

/// The line through `p` perpendicular to `l`.
pub fn perpendicular_from<F: Scalar>(p: &HPoint<F>, l: &Line<F>) -> Result<Line<F>, KernelError> {
    let p = p.to_point().ok_or(KernelError::InfinitePoint)?;
    Line::through_with_direction(&p, &l.normal())
}

/// Whether three lines pass through one (possibly infinite) point, decided
/// by the determinant of their coefficients.
pub fn concurrent<F: Scalar>(l1: &Line<F>, l2: &Line<F>, l3: &Line<F>) -> bool {
    F::vanishes(&det3_terms(&[l1.coords(), l2.coords(), l3.coords()]))
}

/// Whether three projective points are collinear.
pub fn collinear<F: Scalar>(p: &HPoint<F>, q: &HPoint<F>, r: &HPoint<F>) -> bool {
    F::vanishes(&det3_terms(&[p.coords(), q.coords(), r.coords()]))
}

pub fn collinear_points<F: Scalar>(p: &Vec2<F>, q: &Vec2<F>, r: &Vec2<F>) -> bool {
    collinear(&p.to_hpoint(), &q.to_hpoint(), &r.to_hpoint())
}

/// The six signed products of the Leibniz expansion of a 3×3 determinant.
pub fn det3_terms<F: Scalar>(m: &[[F; 3]; 3]) -> [F; 6] {
    let t = |i: usize, j: usize, k: usize| m[0][i].clone() * m[1][j].clone() * m[2][k].clone();
    [t(0, 1, 2), t(1, 2, 0), t(2, 0, 1), -t(2, 1, 0), -t(0, 2, 1), -t(1, 0, 2)]
}

pub fn det3<F: Scalar>(m: &[[F; 3]; 3]) -> F {
    det3_terms(m)
        .into_iter()
        .fold(F::zero(), |acc, t| acc + t)
}
