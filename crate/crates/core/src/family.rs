//! Triangles, their translation and homothety classes, and linear families
//! `X_t = (1-t)·X_0 + t·X_1`.

use std::fmt;

use thiserror::Error;

use crate::kernel::{
    linalg::proportional, solve_quadratic, HPoint, KernelError, Line, QuadExt, Root, RootSet,
    Scalar, Vec2,
};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FamilyError {
    #[error("the pair of moving points is singular")]
    SingularPair,
    #[error("the two parameters are equal")]
    EqualParameters,
    #[error("homogeneous coordinates (0, 0)")]
    ZeroCoordinates,
    #[error("the two classes coincide")]
    EqualClasses,
    #[error("the zero vector pair has no class")]
    ZeroClass,
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

/// An ordered vertex triple.
#[derive(Clone, Debug, PartialEq)]
pub struct Triangle<F> {
    pub a: Vec2<F>,
    pub b: Vec2<F>,
    pub c: Vec2<F>,
}

impl<F: Scalar> Triangle<F> {
    pub fn new(a: Vec2<F>, b: Vec2<F>, c: Vec2<F>) -> Self {
        Triangle { a, b, c }
    }

    pub fn from_i64(pts: [(i64, i64); 3]) -> Self {
        let [a, b, c] = pts.map(|(x, y)| Vec2::from_i64(x, y));
        Triangle { a, b, c }
    }

    pub fn from_array(v: [Vec2<F>; 3]) -> Self {
        let [a, b, c] = v;
        Triangle { a, b, c }
    }

    pub fn vertices(&self) -> [Vec2<F>; 3] {
        [self.a.clone(), self.b.clone(), self.c.clone()]
    }

    pub fn vertex(&self, i: usize) -> &Vec2<F> {
        match i % 3 {
            0 => &self.a,
            1 => &self.b,
            _ => &self.c,
        }
    }

    /// `(AB, AC)`.
    pub fn pair(&self) -> VectorPair<F> {
        VectorPair {
            b: self.b.clone() - self.a.clone(),
            c: self.c.clone() - self.a.clone(),
        }
    }

    pub fn is_degenerate(&self) -> bool {
        self.pair().is_degenerate()
    }

    /// Sign of the oriented area.
    pub fn orientation(&self) -> i32 {
        let p = self.pair();
        if p.is_degenerate() {
            0
        } else {
            p.b.cross(&p.c).signum()
        }
    }

    /// The side line opposite vertex `i` (0 → BC, 1 → CA, 2 → AB).
    pub fn side_line(&self, i: usize) -> Result<Line<F>, KernelError> {
        Line::through(self.vertex(i + 1), self.vertex(i + 2))
    }

    /// Direction of the side opposite vertex `i`, oriented `X_{i+1} → X_{i+2}`.
    pub fn side_dir(&self, i: usize) -> Vec2<F> {
        self.vertex(i + 2).clone() - self.vertex(i + 1).clone()
    }

    pub fn centroid(&self) -> Vec2<F> {
        (self.a.clone() + self.b.clone() + self.c.clone()).scale(&F::from_ratio(1, 3))
    }

    pub fn translate(&self, v: &Vec2<F>) -> Self {
        Triangle::from_array(self.vertices().map(|p| p + v.clone()))
    }

    /// Image under the homothety with center `o` and ratio `k`.
    pub fn homothety(&self, o: &Vec2<F>, k: &F) -> Self {
        Triangle::from_array(
            self.vertices()
                .map(|p| o.clone() + (p - o.clone()).scale(k)),
        )
    }

    /// Applies `f` to each vertex.
    pub fn map_vertices(&self, f: impl Fn(&Vec2<F>) -> Vec2<F>) -> Self {
        Triangle::new(f(&self.a), f(&self.b), f(&self.c))
    }

    pub fn same(&self, other: &Self) -> bool {
        self.a.same(&other.a) && self.b.same(&other.b) && self.c.same(&other.c)
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Triangle<G> {
        Triangle {
            a: self.a.map(&f),
            b: self.b.map(&f),
            c: self.c.map(&f),
        }
    }

    /// Line containing a degenerate triangle, if its vertices are not all equal.
    pub fn carrier(&self) -> Option<Line<F>> {
        if !self.is_degenerate() {
            return None;
        }
        let [a, b, c] = self.vertices();
        Line::through(&a, &b)
            .or_else(|_| Line::through(&a, &c))
            .or_else(|_| Line::through(&b, &c))
            .ok()
    }
}

impl<F: Scalar> fmt::Display for Triangle<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "({}, {}) ({}, {}) ({}, {})",
            self.a.x, self.a.y, self.b.x, self.b.y, self.c.x, self.c.y
        )
    }
}

/// A triangle up to translation: `(b, c) = (AB, AC)`.
#[derive(Clone, Debug, PartialEq)]
pub struct VectorPair<F> {
    pub b: Vec2<F>,
    pub c: Vec2<F>,
}

impl<F: Scalar> VectorPair<F> {
    pub fn new(b: Vec2<F>, c: Vec2<F>) -> Self {
        VectorPair { b, c }
    }

    pub fn is_degenerate(&self) -> bool {
        self.b.is_parallel(&self.c)
    }

    pub fn is_zero(&self) -> bool {
        self.b.is_zero() && self.c.is_zero()
    }

    pub fn coords(&self) -> [F; 4] {
        [
            self.b.x.clone(),
            self.b.y.clone(),
            self.c.x.clone(),
            self.c.y.clone(),
        ]
    }

    pub fn scale(&self, k: &F) -> Self {
        VectorPair::new(self.b.scale(k), self.c.scale(k))
    }

    pub fn add(&self, other: &Self) -> Self {
        VectorPair::new(
            self.b.clone() + other.b.clone(),
            self.c.clone() + other.c.clone(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        VectorPair::new(
            self.b.clone() - other.b.clone(),
            self.c.clone() - other.c.clone(),
        )
    }

    /// The triangle with `A` at `origin`.
    pub fn place(&self, origin: &Vec2<F>) -> Triangle<F> {
        Triangle::new(
            origin.clone(),
            origin.clone() + self.b.clone(),
            origin.clone() + self.c.clone(),
        )
    }

    /// Common direction of a degenerate pair (`None` when both vectors vanish).
    pub fn carrier_dir(&self) -> Option<Vec2<F>> {
        if !self.b.is_zero() {
            Some(self.b.clone())
        } else if !self.c.is_zero() {
            Some(self.c.clone())
        } else {
            None
        }
    }

    /// Third side vector `BC = c - b`.
    pub fn bc(&self) -> Vec2<F> {
        self.c.clone() - self.b.clone()
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> VectorPair<G> {
        VectorPair {
            b: self.b.map(&f),
            c: self.c.map(&f),
        }
    }
}

/// A triangle up to translation and homothety: a point of the projective
/// space of vector pairs.
#[derive(Clone, Debug)]
pub struct HomothetClass<F> {
    rep: VectorPair<F>,
}

impl<F: Scalar> HomothetClass<F> {
    pub fn new(rep: VectorPair<F>) -> Result<Self, FamilyError> {
        if rep.is_zero() {
            return Err(FamilyError::ZeroClass);
        }
        Ok(HomothetClass { rep })
    }

    pub fn of(t: &Triangle<F>) -> Result<Self, FamilyError> {
        HomothetClass::new(t.pair())
    }

    pub fn rep(&self) -> &VectorPair<F> {
        &self.rep
    }

    pub fn is_degenerate(&self) -> bool {
        self.rep.is_degenerate()
    }

    /// Projective equality.
    pub fn same(&self, other: &Self) -> bool {
        proportional(&self.rep.coords(), &other.rep.coords())
    }
}

impl<F: Scalar> PartialEq for HomothetClass<F> {
    fn eq(&self, other: &Self) -> bool {
        self.same(other)
    }
}

/// The class `[x0·K0 + x1·K1]` of the pencil spanned by two classes;
/// `x0 + x1 = 0` gives the class at infinity when `K0`, `K1` are the ends
/// of a family.
pub fn class_at<F: Scalar>(
    k0: &HomothetClass<F>,
    k1: &HomothetClass<F>,
    x0: &F,
    x1: &F,
) -> Result<HomothetClass<F>, FamilyError> {
    if x0.is_zero() && x1.is_zero() {
        return Err(FamilyError::ZeroCoordinates);
    }
    if k0.same(k1) {
        return Err(FamilyError::EqualClasses);
    }
    HomothetClass::new(k0.rep.scale(x0).add(&k1.rep.scale(x1)))
}

/// A family parameter on the projective line.
#[derive(Clone, Debug, PartialEq)]
pub enum Param<F> {
    Finite(F),
    Infinity,
}

impl<F: Scalar> Param<F> {
    pub fn finite(&self) -> Option<&F> {
        match self {
            Param::Finite(t) => Some(t),
            Param::Infinity => None,
        }
    }

    pub fn same(&self, other: &Self) -> bool {
        match (self, other) {
            (Param::Finite(a), Param::Finite(b)) => a.same(b),
            (Param::Infinity, Param::Infinity) => true,
            _ => false,
        }
    }
}

impl<F: Scalar> fmt::Display for Param<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Param::Finite(t) => write!(f, "{t}"),
            Param::Infinity => write!(f, "inf"),
        }
    }
}

/// A member of a family: a positioned triangle, or the triangle at
/// infinity, which only has a vector pair.
#[derive(Clone, Debug, PartialEq)]
pub enum Member<F> {
    Triangle(Triangle<F>),
    AtInfinity(VectorPair<F>),
}

impl<F: Scalar> Member<F> {
    pub fn pair(&self) -> VectorPair<F> {
        match self {
            Member::Triangle(t) => t.pair(),
            Member::AtInfinity(p) => p.clone(),
        }
    }

    pub fn triangle(&self) -> Option<&Triangle<F>> {
        match self {
            Member::Triangle(t) => Some(t),
            Member::AtInfinity(_) => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum VertexPair {
    AB,
    BC,
    CA,
}

impl VertexPair {
    pub const ALL: [VertexPair; 3] = [VertexPair::AB, VertexPair::BC, VertexPair::CA];

    pub fn indices(self) -> (usize, usize) {
        match self {
            VertexPair::AB => (0, 1),
            VertexPair::BC => (1, 2),
            VertexPair::CA => (2, 0),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Singularity {
    Nonsingular,
    Singular(Vec<VertexPair>),
}

/// Degenerate members of a family.
#[derive(Clone, Debug, PartialEq)]
pub enum Degeneracies<F> {
    /// Every member is degenerate.
    All,
    Isolated {
        finite: Vec<Root<F>>,
        at_infinity: bool,
    },
}

impl<F: Scalar> Degeneracies<F> {
    /// Number of isolated degenerate members, `None` for a degenerate family.
    pub fn count(&self) -> Option<usize> {
        match self {
            Degeneracies::All => None,
            Degeneracies::Isolated {
                finite,
                at_infinity,
            } => Some(finite.len() + usize::from(*at_infinity)),
        }
    }

    pub fn params(&self) -> Vec<DegenerateParam<F>> {
        match self {
            Degeneracies::All => Vec::new(),
            Degeneracies::Isolated {
                finite,
                at_infinity,
            } => {
                let mut out: Vec<_> = finite.iter().cloned().map(DegenerateParam::Finite).collect();
                if *at_infinity {
                    out.push(DegenerateParam::Infinity);
                }
                out
            }
        }
    }
}

/// A degenerate parameter, possibly irrational.
#[derive(Clone, Debug, PartialEq)]
pub enum DegenerateParam<F> {
    Finite(Root<F>),
    Infinity,
}

/// `T_t` with vertices moving linearly between the base triangles.
#[derive(Clone, Debug, PartialEq)]
pub struct LinearFamily<F> {
    pub t0: Triangle<F>,
    pub t1: Triangle<F>,
}

impl<F: Scalar> LinearFamily<F> {
    pub fn new(t0: Triangle<F>, t1: Triangle<F>) -> Self {
        LinearFamily { t0, t1 }
    }

    /// Family with base `t0` and vertex velocities `v`.
    pub fn from_velocities(t0: Triangle<F>, v: [Vec2<F>; 3]) -> Self {
        let [va, vb, vc] = v;
        let t1 = Triangle::new(
            t0.a.clone() + va,
            t0.b.clone() + vb,
            t0.c.clone() + vc,
        );
        LinearFamily { t0, t1 }
    }

    pub fn velocities(&self) -> [Vec2<F>; 3] {
        [
            self.t1.a.clone() - self.t0.a.clone(),
            self.t1.b.clone() - self.t0.b.clone(),
            self.t1.c.clone() - self.t0.c.clone(),
        ]
    }

    pub fn at(&self, t: &F) -> Triangle<F> {
        Triangle::new(
            self.t0.a.lerp(&self.t1.a, t),
            self.t0.b.lerp(&self.t1.b, t),
            self.t0.c.lerp(&self.t1.c, t),
        )
    }

    pub fn triangle_at(&self, t: &Param<F>) -> Member<F> {
        match t {
            Param::Finite(t) => Member::Triangle(self.at(t)),
            Param::Infinity => Member::AtInfinity(self.pair_at_infinity()),
        }
    }

    pub fn pair_at(&self, t: &Param<F>) -> VectorPair<F> {
        self.triangle_at(t).pair()
    }

    /// `(b1 - b0, c1 - c0)`.
    pub fn pair_at_infinity(&self) -> VectorPair<F> {
        self.t1.pair().sub(&self.t0.pair())
    }

    /// Position of vertex `i` at parameter `t`.
    pub fn vertex_at(&self, i: usize, t: &F) -> Vec2<F> {
        self.t0.vertex(i).lerp(self.t1.vertex(i), t)
    }

    /// The trajectory of vertex `i`; `None` for a fixed vertex.
    pub fn trajectory(&self, i: usize) -> Option<Line<F>> {
        Line::through(self.t0.vertex(i), self.t1.vertex(i)).ok()
    }

    pub fn is_singular(&self) -> Singularity {
        let v = self.velocities();
        let singular: Vec<VertexPair> = VertexPair::ALL
            .into_iter()
            .filter(|p| {
                let (i, j) = p.indices();
                let side = self.t0.vertex(j).clone() - self.t0.vertex(i).clone();
                let dv = v[j].clone() - v[i].clone();
                side.is_parallel(&dv)
            })
            .collect();
        if singular.is_empty() {
            Singularity::Nonsingular
        } else {
            Singularity::Singular(singular)
        }
    }

    pub fn is_nonsingular(&self) -> bool {
        self.is_singular() == Singularity::Nonsingular
    }

    /// Coefficients `[k0, k1, k2]` of `cross(b_t, c_t) = k0 + k1·t + k2·t²`.
    /// Under the float backend a coefficient whose terms cancel is
    /// reported as exactly zero.
    pub fn degeneracy_poly(&self) -> [F; 3] {
        let p0 = self.t0.pair();
        let d = self.pair_at_infinity();
        let prod = |u: &Vec2<F>, v: &Vec2<F>| {
            [u.x.clone() * v.y.clone(), -(u.y.clone() * v.x.clone())]
        };
        let clean = |terms: Vec<F>| {
            if F::vanishes(&terms) {
                F::zero()
            } else {
                terms.into_iter().fold(F::zero(), |a, t| a + t)
            }
        };
        let k0 = clean(prod(&p0.b, &p0.c).to_vec());
        let mut t1 = prod(&p0.b, &d.c).to_vec();
        t1.extend(prod(&d.b, &p0.c));
        let k1 = clean(t1);
        let k2 = clean(prod(&d.b, &d.c).to_vec());
        [k0, k1, k2]
    }

    /// Parameters of the degenerate members. At most two are isolated
    /// unless every member is degenerate.
    pub fn degenerate_parameters(&self) -> Degeneracies<F> {
        let [k0, k1, k2] = self.degeneracy_poly();
        let at_inf_pair = !self.pair_at_infinity().is_zero();
        match solve_quadratic(&k2, &k1, &k0) {
            RootSet::All => Degeneracies::All,
            RootSet::None => Degeneracies::Isolated {
                finite: Vec::new(),
                at_infinity: k2.is_zero() && at_inf_pair,
            },
            RootSet::One(r) => Degeneracies::Isolated {
                finite: vec![r],
                at_infinity: false,
            },
            RootSet::Two(r, s) => Degeneracies::Isolated {
                finite: vec![r, s],
                at_infinity: false,
            },
            RootSet::OnePlusInfinity(r) => Degeneracies::Isolated {
                finite: vec![r],
                at_infinity: at_inf_pair,
            },
        }
    }

    /// Whether every member is degenerate.
    pub fn is_degenerate(&self) -> bool {
        matches!(self.degenerate_parameters(), Degeneracies::All)
    }

    /// The family with base pair `(T_λ, T_μ)`. A single infinite parameter
    /// uses the chart `t ↦ λ + t` (resp. `t ↦ μ - 1 + t`), whose value at
    /// `∞` is still `T_∞`.
    pub fn reparametrize(&self, lambda: &Param<F>, mu: &Param<F>) -> Result<Self, FamilyError> {
        let (l, m) = match (lambda, mu) {
            (Param::Finite(l), Param::Finite(m)) => {
                if l.same(m) {
                    return Err(FamilyError::EqualParameters);
                }
                (l.clone(), m.clone())
            }
            (Param::Finite(l), Param::Infinity) => (l.clone(), l.clone() + F::one()),
            (Param::Infinity, Param::Finite(m)) => (m.clone() - F::one(), m.clone()),
            (Param::Infinity, Param::Infinity) => return Err(FamilyError::EqualParameters),
        };
        Ok(LinearFamily::new(self.at(&l), self.at(&m)))
    }

    pub fn classes(&self) -> Result<(HomothetClass<F>, HomothetClass<F>), FamilyError> {
        Ok((HomothetClass::of(&self.t0)?, HomothetClass::of(&self.t1)?))
    }

    pub fn translate(&self, v0: &Vec2<F>, v1: &Vec2<F>) -> Self {
        LinearFamily::new(self.t0.translate(v0), self.t1.translate(v1))
    }

    pub fn lift(&self) -> LinearFamily<QuadExt<F>> {
        LinearFamily {
            t0: self.t0.map(|x| QuadExt::pure(x.clone())),
            t1: self.t1.map(|x| QuadExt::pure(x.clone())),
        }
    }

    /// The member at a possibly irrational parameter.
    pub fn at_root(&self, r: &Root<F>) -> Triangle<QuadExt<F>> {
        self.lift().at(&r.to_quad())
    }

    /// Carrier directions of the isolated degenerate members, `T_∞`
    /// included. `None` for a degenerate family or a member whose vertices
    /// all coincide.
    pub fn degenerate_directions(&self) -> Option<Vec<Vec2<QuadExt<F>>>> {
        let Degeneracies::Isolated { finite, at_infinity } = self.degenerate_parameters() else {
            return None;
        };
        let mut dirs = finite
            .iter()
            .map(|r| self.at_root(r).pair().carrier_dir())
            .collect::<Option<Vec<_>>>()?;
        if at_infinity {
            dirs.push(self.lift().pair_at_infinity().carrier_dir()?);
        }
        Some(dirs)
    }

    /// Lines carrying the finite degenerate members.
    pub fn degenerate_carriers(&self) -> Vec<Line<QuadExt<F>>> {
        let Degeneracies::Isolated { finite, .. } = self.degenerate_parameters() else {
            return Vec::new();
        };
        finite.iter().filter_map(|r| self.at_root(r).carrier()).collect()
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> LinearFamily<G> {
        LinearFamily {
            t0: self.t0.map(&f),
            t1: self.t1.map(&f),
        }
    }
}

/// Result of [`spiral_center`].
#[derive(Clone, Debug, PartialEq)]
pub enum PairCenter<F> {
    /// Center of the spiral similarities between the segments `A_sB_s`.
    Spiral(HPoint<F>),
    /// Parallel nonzero velocities: every line `A_tB_t` passes through this
    /// point (at infinity when the velocities are equal).
    Concurrence(HPoint<F>),
}

impl<F: Scalar> PairCenter<F> {
    pub fn point(&self) -> &HPoint<F> {
        match self {
            PairCenter::Spiral(p) | PairCenter::Concurrence(p) => p,
        }
    }
}

/// Spiral (Miquel) center of a pair moving from `A0, B0` to `A1, B1`.
///
/// Computed as the complex number `(B0·v_a - A0·v_b) / (v_a - v_b)`.
pub fn spiral_center<F: Scalar>(
    a0: &Vec2<F>,
    a1: &Vec2<F>,
    b0: &Vec2<F>,
    b1: &Vec2<F>,
) -> Result<PairCenter<F>, FamilyError> {
    let va = a1.clone() - a0.clone();
    let vb = b1.clone() - b0.clone();
    let side = b0.clone() - a0.clone();
    let dv = vb.clone() - va.clone();
    if !va.is_zero() && va.same(&vb) && !side.is_zero() {
        return Ok(PairCenter::Concurrence(HPoint::at_infinity(&side)));
    }
    if side.is_parallel(&dv) {
        return Err(FamilyError::SingularPair);
    }
    let parallel = !va.is_zero() && !vb.is_zero() && va.is_parallel(&vb);
    let num = cmul(b0, &va) - cmul(a0, &vb);
    let den = va - vb;
    let m = cdiv(&num, &den);
    let p = HPoint::finite(&m);
    Ok(if parallel {
        PairCenter::Concurrence(p)
    } else {
        PairCenter::Spiral(p)
    })
}

pub(crate) fn cmul<F: Scalar>(u: &Vec2<F>, v: &Vec2<F>) -> Vec2<F> {
    Vec2::new(
        u.x.clone() * v.x.clone() - u.y.clone() * v.y.clone(),
        u.x.clone() * v.y.clone() + u.y.clone() * v.x.clone(),
    )
}

pub(crate) fn cdiv<F: Scalar>(u: &Vec2<F>, v: &Vec2<F>) -> Vec2<F> {
    let n = v.norm2();
    let conj = Vec2::new(v.x.clone(), -v.y.clone());
    let p = cmul(u, &conj);
    Vec2::new(p.x / n.clone(), p.y / n)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kernel::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn v(x: i64, y: i64) -> Vec2<Rational> {
        Vec2::from_i64(x, y)
    }

    fn f_star() -> LinearFamily<Rational> {
        LinearFamily::new(
            Triangle::from_i64([(0, 0), (1, 0), (0, 1)]),
            Triangle::from_i64([(0, 0), (0, 1), (1, 0)]),
        )
    }

    #[test]
    fn worked_family_members() {
        let f = f_star();
        assert_eq!(f.at(&q(0, 1)), Triangle::from_i64([(0, 0), (1, 0), (0, 1)]));
        let half = f.at(&q(1, 2));
        assert_eq!(half.pair().b, Vec2::new(q(1, 2), q(1, 2)));
        assert_eq!(half.pair().c, Vec2::new(q(1, 2), q(1, 2)));
        assert!(half.is_degenerate());
        let inf = f.pair_at(&Param::Infinity);
        assert_eq!(inf, VectorPair::new(v(-1, 1), v(1, -1)));
        assert!(inf.is_degenerate());
    }

    #[test]
    fn worked_family_has_colliding_bc() {
        // B_t = (1-t, t) and C_t = (t, 1-t) meet at t = 1/2
        assert_eq!(f_star().is_singular(), Singularity::Singular(vec![VertexPair::BC]));
        let f = f_star();
        let (a, b) = (f.t0.pair().b, f.t1.pair().b);
        assert_eq!(a.cross(&(b - a.clone())), q(1, 1));
    }

    #[test]
    fn translation_family_is_singular_everywhere() {
        let t = Triangle::from_i64([(0, 0), (3, 1), (1, 2)]);
        let f = LinearFamily::new(t.clone(), t.translate(&v(5, -2)));
        assert_eq!(f.is_singular(), Singularity::Singular(VertexPair::ALL.to_vec()));
    }

    #[test]
    fn constant_side_is_singular() {
        let f: LinearFamily<Rational> = LinearFamily::new(
            Triangle::from_i64([(0, 0), (1, 0), (0, 1)]),
            Triangle::from_i64([(2, 3), (3, 3), (5, -4)]),
        );
        assert_eq!(f.is_singular(), Singularity::Singular(vec![VertexPair::AB]));
    }

    #[test]
    fn worked_family_degenerate_parameters() {
        let d = f_star().degenerate_parameters();
        assert_eq!(
            d,
            Degeneracies::Isolated {
                finite: vec![Root::Exact(q(1, 2))],
                at_infinity: true
            }
        );
        assert_eq!(d.count(), Some(2));
    }

    #[test]
    fn translate_family_degeneracies() {
        let t = Triangle::from_i64([(0, 0), (3, 1), (1, 2)]);
        let f = LinearFamily::new(t.clone(), t.translate(&v(1, 1)));
        assert_eq!(
            f.degenerate_parameters(),
            Degeneracies::Isolated {
                finite: vec![],
                at_infinity: false
            }
        );
        let flat = Triangle::from_i64([(0, 0), (1, 1), (2, 2)]);
        let f = LinearFamily::new(flat.clone(), flat.translate(&v(1, 0)));
        assert_eq!(f.degenerate_parameters(), Degeneracies::All);
    }

    #[test]
    fn equal_side_vectors_are_all_degenerate() {
        let f: LinearFamily<Rational> = LinearFamily::new(
            Triangle::from_i64([(0, 0), (1, 2), (1, 2)]),
            Triangle::from_i64([(1, 0), (0, 3), (0, 3)]),
        );
        assert_eq!(f.degenerate_parameters(), Degeneracies::All);
    }

    #[test]
    fn reparametrizations() {
        let f = f_star();
        let same = f.reparametrize(&Param::Finite(q(0, 1)), &Param::Finite(q(1, 1))).unwrap();
        assert_eq!(same, f);
        let rev = f.reparametrize(&Param::Finite(q(1, 1)), &Param::Finite(q(0, 1))).unwrap();
        for t in [q(0, 1), q(1, 3), q(2, 1)] {
            assert_eq!(rev.at(&t), f.at(&(q(1, 1) - t.clone())));
        }
        let half = f.reparametrize(&Param::Finite(q(0, 1)), &Param::Finite(q(1, 2))).unwrap();
        assert_eq!(half.at(&q(1, 1)), f.at(&q(1, 2)));
        assert_eq!(
            f.reparametrize(&Param::Finite(q(1, 1)), &Param::Finite(q(1, 1))),
            Err(FamilyError::EqualParameters)
        );
        let chart = f.reparametrize(&Param::Finite(q(2, 1)), &Param::Infinity).unwrap();
        assert!(HomothetClass::new(chart.pair_at_infinity())
            .unwrap()
            .same(&HomothetClass::new(f.pair_at_infinity()).unwrap()));
    }

    #[test]
    fn homogeneous_classes() {
        let (k0, k1) = f_star().classes().unwrap();
        assert!(class_at(&k0, &k1, &q(1, 1), &q(0, 1)).unwrap().same(&k0));
        let inf = class_at(&k0, &k1, &q(1, 1), &q(-1, 1)).unwrap();
        assert!(inf.same(&HomothetClass::new(VectorPair::new(v(1, -1), v(-1, 1))).unwrap()));
        assert!(inf.same(&HomothetClass::new(f_star().pair_at_infinity()).unwrap()));
        let mid = class_at(&k0, &k1, &q(1, 1), &q(1, 1)).unwrap();
        assert!(mid.same(&HomothetClass::new(VectorPair::new(v(1, 1), v(1, 1))).unwrap()));
        assert!(mid.is_degenerate());
        assert_eq!(
            class_at(&k0, &k1, &q(0, 1), &q(0, 1)),
            Err(FamilyError::ZeroCoordinates)
        );
        assert_eq!(
            class_at(&k0, &k0, &q(1, 1), &q(2, 1)),
            Err(FamilyError::EqualClasses)
        );
    }

    #[test]
    fn spiral_center_of_axis_pair() {
        // A_t = (t, 0), B_t = (0, 1 - t)
        let m = spiral_center(&v(0, 0), &v(1, 0), &v(0, 1), &v(0, 0)).unwrap();
        let PairCenter::Spiral(m) = m else {
            panic!("expected a spiral center")
        };
        let m = m.to_point().unwrap();
        assert_eq!(m, Vec2::new(q(1, 2), q(1, 2)));
        // oracle: MA_t / MB_t is the same complex ratio for t = 0, 1, 2
        let ratio = |t: i64| {
            let a = v(t, 0) - m.clone();
            let b = v(0, 1 - t) - m.clone();
            cdiv(&a, &b)
        };
        assert_eq!(ratio(0), ratio(1));
        assert_eq!(ratio(0), ratio(2));
    }

    #[test]
    fn spiral_center_parallel_velocities() {
        let r = spiral_center(&v(0, 0), &v(1, 1), &v(3, 0), &v(4, 1)).unwrap();
        assert_eq!(r, PairCenter::Concurrence(HPoint::at_infinity(&v(3, 0))));
        // opposite velocities: lines A_tB_t all pass through the midpoint
        let r = spiral_center(&v(0, 0), &v(0, 1), &v(4, 0), &v(4, -1)).unwrap();
        let PairCenter::Concurrence(p) = r else {
            panic!("expected concurrence")
        };
        assert_eq!(p.to_point(), Some(v(2, 0)));
    }

    #[test]
    fn spiral_center_fixed_vertex() {
        let r = spiral_center(&v(2, 3), &v(2, 3), &v(0, 0), &v(1, 5)).unwrap();
        assert_eq!(r.point().to_point(), Some(v(2, 3)));
    }

    #[test]
    fn spiral_center_singular_pair() {
        assert_eq!(
            spiral_center(&v(0, 0), &v(1, 0), &v(1, 0), &v(3, 0)),
            Err(FamilyError::SingularPair)
        );
    }
}
