//! Vector pairs as points of `ℝ⁴ = ℝ² × ℝ²`: the operator `φ` with
//! `φ(b_t) = c_t`, the skew form `(b, c) * (b', c') = b·c' - b'·c` and
//! Lagrangian planes.

use thiserror::Error;

use crate::family::{HomothetClass, LinearFamily, VectorPair};
use crate::kernel::linalg::{null_space, rref};
use crate::kernel::{solve_quadratic, QuadExt, RootSet, Scalar, Vec2};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OperatorError {
    #[error("the vectors do not form a basis")]
    NotABasis,
    #[error("expected a subspace of dimension {expected}, got {actual}")]
    WrongDimension { expected: usize, actual: usize },
    #[error(transparent)]
    Family(#[from] crate::family::FamilyError),
}

/// A 2×2 matrix acting on column vectors.
#[derive(Clone, Debug, PartialEq)]
pub struct LinOp2<F> {
    pub m11: F,
    pub m12: F,
    pub m21: F,
    pub m22: F,
}

/// Eigen decomposition of a [`LinOp2`].
#[derive(Clone, Debug, PartialEq)]
pub enum Eigen<F> {
    /// A multiple of the identity: every vector is an eigenvector.
    All(F),
    Pairs(Vec<(QuadExt<F>, Vec2<QuadExt<F>>)>),
}

impl<F: Scalar> LinOp2<F> {
    pub fn new(m11: F, m12: F, m21: F, m22: F) -> Self {
        LinOp2 { m11, m12, m21, m22 }
    }

    pub fn from_i64(m: [[i64; 2]; 2]) -> Self {
        LinOp2::new(
            F::from_i64(m[0][0]),
            F::from_i64(m[0][1]),
            F::from_i64(m[1][0]),
            F::from_i64(m[1][1]),
        )
    }

    /// The matrix whose columns are `u` and `v`.
    pub fn from_columns(u: &Vec2<F>, v: &Vec2<F>) -> Self {
        LinOp2::new(u.x.clone(), v.x.clone(), u.y.clone(), v.y.clone())
    }

    pub fn identity() -> Self {
        LinOp2::from_columns(&Vec2::new(F::one(), F::zero()), &Vec2::new(F::zero(), F::one()))
    }

    pub fn apply(&self, v: &Vec2<F>) -> Vec2<F> {
        Vec2::new(
            self.m11.clone() * v.x.clone() + self.m12.clone() * v.y.clone(),
            self.m21.clone() * v.x.clone() + self.m22.clone() * v.y.clone(),
        )
    }

    pub fn det(&self) -> F {
        self.m11.clone() * self.m22.clone() - self.m12.clone() * self.m21.clone()
    }

    pub fn trace(&self) -> F {
        self.m11.clone() + self.m22.clone()
    }

    pub fn compose(&self, other: &Self) -> Self {
        let c1 = self.apply(&Vec2::new(other.m11.clone(), other.m21.clone()));
        let c2 = self.apply(&Vec2::new(other.m12.clone(), other.m22.clone()));
        LinOp2::from_columns(&c1, &c2)
    }

    pub fn inverse(&self) -> Option<Self> {
        let d = self.det();
        if d.is_zero() {
            return None;
        }
        Some(LinOp2::new(
            self.m22.clone() / d.clone(),
            -self.m12.clone() / d.clone(),
            -self.m21.clone() / d.clone(),
            self.m11.clone() / d,
        ))
    }

    pub fn sub(&self, other: &Self) -> Self {
        LinOp2::new(
            self.m11.clone() - other.m11.clone(),
            self.m12.clone() - other.m12.clone(),
            self.m21.clone() - other.m21.clone(),
            self.m22.clone() - other.m22.clone(),
        )
    }

    /// Symmetry in the standard orthonormal frame.
    pub fn is_self_adjoint(&self) -> bool {
        F::vanishes(&[self.m12.clone(), -self.m21.clone()])
    }

    pub fn is_scalar(&self) -> bool {
        self.m12.is_zero()
            && self.m21.is_zero()
            && F::vanishes(&[self.m11.clone(), -self.m22.clone()])
    }

    /// Rotation-scaling matrix `[[p, -q], [q, p]]`.
    pub fn is_similarity(&self) -> bool {
        F::vanishes(&[self.m11.clone(), -self.m22.clone()])
            && F::vanishes(&[self.m12.clone(), self.m21.clone()])
    }

    pub fn eigenpairs(&self) -> Eigen<F> {
        if self.is_scalar() {
            return Eigen::All(self.m11.clone());
        }
        let roots = solve_quadratic(&F::one(), &-self.trace(), &self.det());
        let values: Vec<QuadExt<F>> = match roots {
            RootSet::One(r) => vec![r.to_quad()],
            RootSet::Two(r, s) => vec![r.to_quad(), s.to_quad()],
            _ => Vec::new(),
        };
        let lift = |x: &F| QuadExt::pure(x.clone());
        let pairs = values
            .into_iter()
            .map(|l| {
                let first = Vec2::new(lift(&self.m12), l.clone() - lift(&self.m11));
                let v = if first.is_zero() {
                    Vec2::new(l.clone() - lift(&self.m22), lift(&self.m21))
                } else {
                    first
                };
                (l, v)
            })
            .collect();
        Eigen::Pairs(pairs)
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> LinOp2<G> {
        LinOp2::new(f(&self.m11), f(&self.m12), f(&self.m21), f(&self.m22))
    }
}

/// The unique `φ` with `φ(b0) = c0` and `φ(b1) = c1`, where `(b_i, c_i)`
/// represent `K_i`. Requires both `(b0, b1)` and `(c0, c1)` to be bases.
pub fn operator_from_classes<F: Scalar>(
    k0: &HomothetClass<F>,
    k1: &HomothetClass<F>,
) -> Result<LinOp2<F>, OperatorError> {
    operator_from_pairs(k0.rep(), k1.rep())
}

pub fn operator_from_pairs<F: Scalar>(
    p0: &VectorPair<F>,
    p1: &VectorPair<F>,
) -> Result<LinOp2<F>, OperatorError> {
    if p0.b.is_parallel(&p1.b) || p0.c.is_parallel(&p1.c) {
        return Err(OperatorError::NotABasis);
    }
    let b = LinOp2::from_columns(&p0.b, &p1.b);
    let c = LinOp2::from_columns(&p0.c, &p1.c);
    Ok(c.compose(&b.inverse().ok_or(OperatorError::NotABasis)?))
}

pub fn operator_of_family<F: Scalar>(fam: &LinearFamily<F>) -> Result<LinOp2<F>, OperatorError> {
    operator_from_pairs(&fam.t0.pair(), &fam.t1.pair())
}

/// A vector `(b, c)` of `ℝ⁴`.
#[derive(Clone, Debug, PartialEq)]
pub struct Vec4<F>(pub [F; 4]);

impl<F: Scalar> Vec4<F> {
    pub fn from_pair(p: &VectorPair<F>) -> Self {
        Vec4(p.coords())
    }

    pub fn from_i64(v: [i64; 4]) -> Self {
        Vec4(v.map(F::from_i64))
    }

    pub fn pair(&self) -> VectorPair<F> {
        let [x1, x2, x3, x4] = self.0.clone();
        VectorPair::new(Vec2::new(x1, x2), Vec2::new(x3, x4))
    }

    /// On the quadric `x1·x4 - x2·x3 = 0` of degenerate classes.
    pub fn is_degenerate(&self) -> bool {
        self.pair().is_degenerate()
    }
}

/// `(b, c) * (b', c') = b·c' - b'·c`.
pub fn skew_product<F: Scalar>(u: &Vec4<F>, v: &Vec4<F>) -> F {
    skew_terms(u, v).into_iter().fold(F::zero(), |a, t| a + t)
}

fn skew_terms<F: Scalar>(u: &Vec4<F>, v: &Vec4<F>) -> [F; 4] {
    let (u, v) = (&u.0, &v.0);
    [
        u[0].clone() * v[2].clone(),
        u[1].clone() * v[3].clone(),
        -(v[0].clone() * u[2].clone()),
        -(v[1].clone() * u[3].clone()),
    ]
}

pub fn skew_vanishes<F: Scalar>(u: &Vec4<F>, v: &Vec4<F>) -> bool {
    F::vanishes(&skew_terms(u, v))
}

/// A linear subspace of `ℝ⁴`, stored by its reduced row echelon basis so
/// that equal subspaces have equal representations.
#[derive(Clone, Debug, PartialEq)]
pub struct Subspace4<F> {
    basis: Vec<Vec4<F>>,
}

impl<F: Scalar> Subspace4<F> {
    pub fn span(vectors: &[Vec4<F>]) -> Self {
        let rows: Vec<Vec<F>> = vectors.iter().map(|v| v.0.to_vec()).collect();
        if rows.is_empty() {
            return Subspace4 { basis: Vec::new() };
        }
        let (m, pivots) = rref(&rows);
        let basis = m
            .into_iter()
            .take(pivots.len())
            .map(|r| Vec4([r[0].clone(), r[1].clone(), r[2].clone(), r[3].clone()]))
            .collect();
        Subspace4 { basis }
    }

    pub fn basis(&self) -> &[Vec4<F>] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn contains(&self, v: &Vec4<F>) -> bool {
        let mut vs = self.basis.clone();
        vs.push(v.clone());
        Subspace4::span(&vs).dim() == self.dim()
    }

    pub fn sum(&self, other: &Self) -> Self {
        let mut vs = self.basis.clone();
        vs.extend(other.basis.iter().cloned());
        Subspace4::span(&vs)
    }

    pub fn intersection_dim(&self, other: &Self) -> usize {
        self.dim() + other.dim() - self.sum(other).dim()
    }

    /// `U^⊥ = {v : u * v = 0 for all u ∈ U}`, of dimension `4 - dim U`.
    pub fn skew_complement(&self) -> Self {
        let rows: Vec<Vec<F>> = self
            .basis
            .iter()
            .map(|u| {
                let u = &u.0;
                vec![-u[2].clone(), -u[3].clone(), u[0].clone(), u[1].clone()]
            })
            .collect();
        let ns: Vec<Vec4<F>> = null_space(&rows, 4)
            .into_iter()
            .map(|v| Vec4([v[0].clone(), v[1].clone(), v[2].clone(), v[3].clone()]))
            .collect();
        Subspace4::span(&ns)
    }

    /// A plane on which the skew form vanishes identically.
    pub fn is_lagrangian(&self) -> Result<bool, OperatorError> {
        if self.dim() != 2 {
            return Err(OperatorError::WrongDimension {
                expected: 2,
                actual: self.dim(),
            });
        }
        Ok(skew_vanishes(&self.basis[0], &self.basis[1]))
    }

    /// The graph `{(v, φ(v))}`.
    pub fn graph(phi: &LinOp2<F>) -> Self {
        let e1 = Vec2::new(F::one(), F::zero());
        let e2 = Vec2::new(F::zero(), F::one());
        Subspace4::span(&[
            Vec4::from_pair(&VectorPair::new(e1.clone(), phi.apply(&e1))),
            Vec4::from_pair(&VectorPair::new(e2.clone(), phi.apply(&e2))),
        ])
    }

    /// The plane spanned by the base pairs of a family.
    pub fn of_family(fam: &LinearFamily<F>) -> Self {
        Subspace4::span(&[
            Vec4::from_pair(&fam.t0.pair()),
            Vec4::from_pair(&fam.t1.pair()),
        ])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::Triangle;
    use crate::kernel::Rational;

    fn q(n: i64) -> Rational {
        Rational::from_i64(n)
    }

    fn f_star() -> LinearFamily<Rational> {
        LinearFamily::new(
            Triangle::from_i64([(0, 0), (1, 0), (0, 1)]),
            Triangle::from_i64([(0, 0), (0, 1), (1, 0)]),
        )
    }

    #[test]
    fn worked_family_operator() {
        let phi = operator_of_family(&f_star()).unwrap();
        assert_eq!(phi, LinOp2::from_i64([[0, 1], [1, 0]]));
        assert!(phi.is_self_adjoint());
    }

    #[test]
    fn spiral_similar_family_gives_similarity() {
        // T1 is T0 rotated by 90° about the origin and scaled by 2
        let t0 = Triangle::<Rational>::from_i64([(1, 0), (3, 1), (2, 4)]);
        let t1 = t0.map_vertices(|p| Vec2::new(-p.y.clone() * q(2), p.x.clone() * q(2)));
        let phi = operator_of_family(&LinearFamily::new(t0, t1)).unwrap();
        assert!(phi.is_similarity());
        assert!(!phi.is_self_adjoint());
    }

    #[test]
    fn dependent_sides_are_not_a_basis() {
        let fam = LinearFamily::new(
            Triangle::<Rational>::from_i64([(0, 0), (1, 0), (1, 1)]),
            Triangle::from_i64([(0, 0), (0, 1), (2, 2)]),
        );
        assert_eq!(operator_of_family(&fam), Err(OperatorError::NotABasis));
    }

    #[test]
    fn self_adjointness() {
        assert!(LinOp2::<Rational>::from_i64([[0, 1], [1, 0]]).is_self_adjoint());
        assert!(!LinOp2::<Rational>::from_i64([[0, -1], [1, 0]]).is_self_adjoint());
        assert!(LinOp2::<Rational>::identity().is_self_adjoint());
    }

    #[test]
    fn eigen_decompositions() {
        let Eigen::Pairs(p) = LinOp2::<Rational>::from_i64([[0, 1], [1, 0]]).eigenpairs() else {
            panic!("expected eigenpairs")
        };
        assert_eq!(p.len(), 2);
        let lift = |v: Vec2<Rational>| v.map(|x| QuadExt::pure(x.clone()));
        assert_eq!(p[0].0.as_base(), Some(q(-1)));
        assert!(p[0].1.is_parallel(&lift(Vec2::from_i64(1, -1))));
        assert_eq!(p[1].0.as_base(), Some(q(1)));
        assert!(p[1].1.is_parallel(&lift(Vec2::from_i64(1, 1))));

        assert_eq!(LinOp2::<Rational>::from_i64([[2, 0], [0, 2]]).eigenpairs(), Eigen::All(q(2)));

        let Eigen::Pairs(p) = LinOp2::<Rational>::from_i64([[1, 1], [0, 1]]).eigenpairs() else {
            panic!("expected eigenpairs")
        };
        assert_eq!(p.len(), 1);
        assert!(p[0].1.is_parallel(&lift(Vec2::from_i64(1, 0))));
    }

    #[test]
    fn irrational_eigenvalues() {
        let phi = LinOp2::<Rational>::from_i64([[1, 1], [1, 0]]);
        let Eigen::Pairs(p) = phi.eigenpairs() else {
            panic!("expected eigenpairs")
        };
        let lifted = phi.map(|x| QuadExt::pure(x.clone()));
        for (l, v) in &p {
            assert!(lifted.apply(v).same(&v.scale(l)));
        }
        assert!(p[0].1.is_perpendicular(&p[1].1));
    }

    #[test]
    fn skew_products() {
        let u = Vec4::<Rational>::from_i64([1, 0, 0, 1]);
        let v = Vec4::from_i64([0, 1, 1, 0]);
        assert_eq!(skew_product(&u, &v), q(0));
        assert_eq!(skew_product(&u, &u), q(0));
        let e1 = Vec4::<Rational>::from_i64([1, 0, 0, 0]);
        let e3 = Vec4::from_i64([0, 0, 1, 0]);
        assert_eq!(skew_product(&e1, &e3), q(1));
    }

    #[test]
    fn complements() {
        let u = Subspace4::<Rational>::span(&[Vec4::from_i64([1, 0, 0, 1]), Vec4::from_i64([0, 1, 1, 0])]);
        assert_eq!(u.skew_complement(), u);
        assert!(u.is_lagrangian().unwrap());

        let e1 = Vec4::<Rational>::from_i64([1, 0, 0, 0]);
        let line = Subspace4::span(std::slice::from_ref(&e1));
        let c = line.skew_complement();
        assert_eq!(c.dim(), 3);
        assert!(c.contains(&e1));
        assert_eq!(
            line.is_lagrangian(),
            Err(OperatorError::WrongDimension { expected: 2, actual: 1 })
        );

        let w = Subspace4::span(&[e1, Vec4::from_i64([0, 0, 1, 0])]);
        assert!(!w.is_lagrangian().unwrap());
        assert_eq!(w.intersection_dim(&w.skew_complement()), 0);
    }

    #[test]
    fn graphs_of_symmetric_operators_are_lagrangian() {
        let phi = LinOp2::<Rational>::from_i64([[3, -2], [-2, 7]]);
        assert!(Subspace4::graph(&phi).is_lagrangian().unwrap());
        let psi = LinOp2::<Rational>::from_i64([[3, -2], [5, 7]]);
        assert!(!Subspace4::graph(&psi).is_lagrangian().unwrap());
    }
}
