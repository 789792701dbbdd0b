//! Plane conics `ax² + bxy + cy² + dx + ey + f = 0`: fitting, classification,
//! asymptotes, tangency, dual envelopes and foci.

use std::fmt;

use thiserror::Error;

use crate::family::{Degeneracies, FamilyError, LinearFamily, PairCenter, VertexPair};
use crate::kernel::linalg::{adjugate3, bilinear3, bilinear3_terms, null_space, proportional, rank, Mat3};
use crate::kernel::{det3, det3_terms, HPoint, Line, Poly, QuadExt, Scalar, Vec2};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ConicError {
    #[error("the points do not determine a unique conic")]
    DegenerateConfiguration,
    #[error("no conic satisfies the constraints")]
    NoSolution,
    #[error("the constraints admit a pencil of conics")]
    NotUnique,
    #[error("coefficients a..e all vanish")]
    NotAConic,
    #[error("the conic is not a hyperbola")]
    NotHyperbola,
    #[error("the conic is not a parabola")]
    NotParabola,
    #[error("the lines do not envelope a proper conic")]
    DegenerateDual,
    #[error("the family needs exactly two degenerate members")]
    DegenerateCount,
    #[error("a vertex of the family does not move")]
    FixedVertex,
    #[error(transparent)]
    Family(#[from] FamilyError),
}

/// Two directions over the quadratic extension.
pub type DirectionPair<F> = (Vec2<QuadExt<F>>, Vec2<QuadExt<F>>);

#[derive(Clone, Debug, PartialEq)]
pub struct Conic<F> {
    pub a: F,
    pub b: F,
    pub c: F,
    pub d: F,
    pub e: F,
    pub f: F,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ConicClass {
    Ellipse,
    Parabola,
    Hyperbola,
    RectangularHyperbola,
    LinePair { perpendicular: bool },
    OtherDegenerate,
}

impl ConicClass {
    pub fn is_hyperbola(self) -> bool {
        matches!(self, ConicClass::Hyperbola | ConicClass::RectangularHyperbola)
    }
}

impl fmt::Display for ConicClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ConicClass::Ellipse => "ellipse",
            ConicClass::Parabola => "parabola",
            ConicClass::Hyperbola => "hyperbola",
            ConicClass::RectangularHyperbola => "rectangular_hyperbola",
            ConicClass::LinePair {
                perpendicular: true,
            } => "perpendicular_line_pair",
            ConicClass::LinePair {
                perpendicular: false,
            } => "line_pair",
            ConicClass::OtherDegenerate => "other_degenerate",
        };
        f.write_str(s)
    }
}

fn monomials<F: Scalar>(p: &HPoint<F>) -> Vec<F> {
    let (x, y, w) = (p.x.clone(), p.y.clone(), p.w.clone());
    vec![
        x.clone() * x.clone(),
        x.clone() * y.clone(),
        y.clone() * y.clone(),
        x * w.clone(),
        y * w.clone(),
        w.clone() * w,
    ]
}

impl<F: Scalar> Conic<F> {
    pub fn new(coeffs: [F; 6]) -> Result<Self, ConicError> {
        if coeffs[..5].iter().all(Scalar::is_zero) {
            return Err(ConicError::NotAConic);
        }
        let [a, b, c, d, e, f] = coeffs;
        Ok(Conic { a, b, c, d, e, f })
    }

    pub fn from_i64(c: [i64; 6]) -> Self {
        Conic::new(c.map(F::from_i64)).expect("not a conic")
    }

    pub fn coeffs(&self) -> [F; 6] {
        [
            self.a.clone(),
            self.b.clone(),
            self.c.clone(),
            self.d.clone(),
            self.e.clone(),
            self.f.clone(),
        ]
    }

    /// Symmetric matrix `S` with `pᵀ·S·p = 2·C(p)`.
    pub fn matrix(&self) -> Mat3<F> {
        let two = F::from_i64(2);
        [
            [two.clone() * self.a.clone(), self.b.clone(), self.d.clone()],
            [self.b.clone(), two.clone() * self.c.clone(), self.e.clone()],
            [self.d.clone(), self.e.clone(), two * self.f.clone()],
        ]
    }

    pub fn from_matrix(m: &Mat3<F>) -> Result<Self, ConicError> {
        let half = F::from_ratio(1, 2);
        Conic::new([
            m[0][0].clone() * half.clone(),
            m[0][1].clone(),
            m[1][1].clone() * half.clone(),
            m[0][2].clone(),
            m[1][2].clone(),
            m[2][2].clone() * half,
        ])
    }

    pub fn eval(&self, p: &Vec2<F>) -> F {
        self.terms(&HPoint::finite(p))
            .into_iter()
            .fold(F::zero(), |acc, t| acc + t)
    }

    fn terms(&self, p: &HPoint<F>) -> Vec<F> {
        monomials(p)
            .into_iter()
            .zip(self.coeffs())
            .map(|(m, k)| m * k)
            .collect()
    }

    pub fn contains(&self, p: &HPoint<F>) -> bool {
        F::vanishes(&self.terms(p))
    }

    pub fn contains_point(&self, p: &Vec2<F>) -> bool {
        self.contains(&HPoint::finite(p))
    }

    /// `a·x² + b·xy + c·y²` at `v`.
    pub fn quadratic_part(&self, v: &Vec2<F>) -> F {
        self.a.clone() * v.x.square()
            + self.b.clone() * v.x.clone() * v.y.clone()
            + self.c.clone() * v.y.square()
    }

    fn quadratic_terms(&self, v: &Vec2<F>) -> [F; 3] {
        [
            self.a.clone() * v.x.square(),
            self.b.clone() * v.x.clone() * v.y.clone(),
            self.c.clone() * v.y.square(),
        ]
    }

    /// Whether `v` is an asymptotic direction.
    pub fn annihilates(&self, v: &Vec2<F>) -> bool {
        F::vanishes(&self.quadratic_terms(v))
    }

    /// Projective equality of coefficient vectors.
    pub fn same(&self, other: &Self) -> bool {
        proportional(&self.coeffs(), &other.coeffs())
    }

    /// Canonical scaling: primitive integers (exact) or unit max-norm (float).
    pub fn normalized(&self) -> Self {
        let v = F::normalize(&self.coeffs());
        Conic {
            a: v[0].clone(),
            b: v[1].clone(),
            c: v[2].clone(),
            d: v[3].clone(),
            e: v[4].clone(),
            f: v[5].clone(),
        }
    }

    pub fn discriminant(&self) -> F {
        self.b.square() - F::from_i64(4) * self.a.clone() * self.c.clone()
    }

    fn disc_sign(&self) -> i32 {
        let b2 = self.b.square();
        let ac4 = F::from_i64(4) * self.a.clone() * self.c.clone();
        if F::vanishes(&[b2.clone(), -ac4.clone()]) {
            0
        } else {
            (b2 - ac4).signum()
        }
    }

    fn trace_vanishes(&self) -> bool {
        F::vanishes(&[self.a.clone(), self.c.clone()])
    }

    pub fn classify(&self) -> ConicClass {
        let m = self.matrix();
        let disc = self.disc_sign();
        if !F::vanishes(&det3_terms(&m)) {
            return match disc {
                -1 => ConicClass::Ellipse,
                0 => ConicClass::Parabola,
                _ if self.trace_vanishes() => ConicClass::RectangularHyperbola,
                _ => ConicClass::Hyperbola,
            };
        }
        let rows: Vec<Vec<F>> = m.iter().map(|r| r.to_vec()).collect();
        if rank(&rows) == 2 && disc >= 0 {
            ConicClass::LinePair {
                perpendicular: disc > 0 && self.trace_vanishes(),
            }
        } else {
            ConicClass::OtherDegenerate
        }
    }

    /// The two real asymptotic directions, i.e. the roots of the quadratic
    /// part, in the quadratic extension they require.
    pub fn asymptote_directions(&self) -> Result<DirectionPair<F>, ConicError> {
        if self.disc_sign() <= 0 {
            return Err(ConicError::NotHyperbola);
        }
        let lift = |x: &F| QuadExt::pure(x.clone());
        if self.a.is_zero() {
            let d1 = Vec2::new(F::one(), F::zero());
            let d2 = Vec2::new(self.c.clone(), -self.b.clone());
            return Ok((d1.map(lift), d2.map(lift)));
        }
        let root = QuadExt::sqrt_of(self.discriminant());
        let minus_b = lift(&-self.b.clone());
        let two_a = lift(&(F::from_i64(2) * self.a.clone()));
        Ok((
            Vec2::new(minus_b.clone() + root.clone(), two_a.clone()),
            Vec2::new(minus_b - root, two_a),
        ))
    }

    /// Adjugate of [`Conic::matrix`]: the dual conic on line coordinates.
    pub fn dual_matrix(&self) -> Mat3<F> {
        adjugate3(&self.matrix())
    }

    /// Tangency of a line, `lᵀ·adj(S)·l = 0`. For a line pair this means the
    /// line passes through the double point.
    pub fn is_tangent(&self, l: &Line<F>) -> bool {
        let lc = l.coords();
        F::vanishes(&bilinear3_terms(&self.dual_matrix(), &lc, &lc))
    }

    pub fn map<G: Scalar>(&self, f: impl Fn(&F) -> G) -> Conic<G> {
        Conic {
            a: f(&self.a),
            b: f(&self.b),
            c: f(&self.c),
            d: f(&self.d),
            e: f(&self.e),
            f: f(&self.f),
        }
    }

    pub fn lift(&self) -> Conic<QuadExt<F>> {
        self.map(|x| QuadExt::pure(x.clone()))
    }

    /// Image under the affine map `p ↦ M·p + t`, with `M` invertible.
    pub fn transform_affine(&self, m: [[F; 2]; 2], t: &Vec2<F>) -> Result<Self, ConicError> {
        // C'(q) = C(M⁻¹(q - t)); substitute through the 3×3 inverse
        let det = m[0][0].clone() * m[1][1].clone() - m[0][1].clone() * m[1][0].clone();
        let inv = [
            [m[1][1].clone() / det.clone(), -m[0][1].clone() / det.clone()],
            [-m[1][0].clone() / det.clone(), m[0][0].clone() / det],
        ];
        let shift = [
            -(inv[0][0].clone() * t.x.clone() + inv[0][1].clone() * t.y.clone()),
            -(inv[1][0].clone() * t.x.clone() + inv[1][1].clone() * t.y.clone()),
        ];
        let n: Mat3<F> = [
            [inv[0][0].clone(), inv[0][1].clone(), shift[0].clone()],
            [inv[1][0].clone(), inv[1][1].clone(), shift[1].clone()],
            [F::zero(), F::zero(), F::one()],
        ];
        let s = self.matrix();
        let out: Mat3<F> = std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                let ci = [n[0][i].clone(), n[1][i].clone(), n[2][i].clone()];
                let cj = [n[0][j].clone(), n[1][j].clone(), n[2][j].clone()];
                bilinear3(&s, &ci, &cj)
            })
        });
        Conic::from_matrix(&out)
    }
}

impl<F: Scalar> Conic<QuadExt<F>> {
    /// The conic over the base field, when its coefficients are proportional
    /// to base-field values.
    pub fn collapse(&self) -> Option<Conic<F>> {
        let n = QuadExt::normalize(&self.coeffs());
        let v: Option<Vec<F>> = n.iter().map(QuadExt::as_base).collect();
        let v = v?;
        Conic::new([
            v[0].clone(),
            v[1].clone(),
            v[2].clone(),
            v[3].clone(),
            v[4].clone(),
            v[5].clone(),
        ])
        .ok()
    }
}

impl<F: Scalar> fmt::Display for Conic<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[{}, {}, {}, {}, {}, {}]",
            self.a, self.b, self.c, self.d, self.e, self.f
        )
    }
}

/// The unique conic through the given points.
pub fn conic_through_points<F: Scalar>(pts: &[HPoint<F>]) -> Result<Conic<F>, ConicError> {
    let rows: Vec<Vec<F>> = pts.iter().map(monomials).collect();
    let ns = null_space(&rows, 6);
    match ns.as_slice() {
        [v] => Conic::new([
            v[0].clone(),
            v[1].clone(),
            v[2].clone(),
            v[3].clone(),
            v[4].clone(),
            v[5].clone(),
        ])
        .map_err(|_| ConicError::DegenerateConfiguration),
        [] => Err(ConicError::NoSolution),
        _ => Err(ConicError::DegenerateConfiguration),
    }
}

pub fn conic_through_5<F: Scalar>(pts: [HPoint<F>; 5]) -> Result<Conic<F>, ConicError> {
    conic_through_points(&pts)
}

/// The conic through three points whose quadratic part is a multiple of
/// `q = [qa, qb, qc]`.
pub fn conic_with_quadratic_form<F: Scalar>(
    q: [F; 3],
    pts: [&HPoint<F>; 3],
) -> Result<Conic<F>, ConicError> {
    let rows: Vec<Vec<F>> = pts
        .iter()
        .map(|p| {
            let m = monomials(p);
            let quad = q[0].clone() * m[0].clone() + q[1].clone() * m[1].clone() + q[2].clone() * m[2].clone();
            vec![quad, m[3].clone(), m[4].clone(), m[5].clone()]
        })
        .collect();
    let ns = null_space(&rows, 4);
    match ns.as_slice() {
        [v] => Conic::new([
            v[0].clone() * q[0].clone(),
            v[0].clone() * q[1].clone(),
            v[0].clone() * q[2].clone(),
            v[1].clone(),
            v[2].clone(),
            v[3].clone(),
        ])
        .map_err(|_| ConicError::NoSolution),
        [] => Err(ConicError::NoSolution),
        _ => Err(ConicError::NotUnique),
    }
}

/// The quadratic form `cross(d1, v)·cross(d2, v)` vanishing on both directions.
pub fn form_from_directions<F: Scalar>(d1: &Vec2<F>, d2: &Vec2<F>) -> [F; 3] {
    [
        d1.y.clone() * d2.y.clone(),
        -(d1.x.clone() * d2.y.clone() + d1.y.clone() * d2.x.clone()),
        d1.x.clone() * d2.x.clone(),
    ]
}

/// The conic through three points with asymptotes parallel to `d1` and
/// `d2`. Collinear points yield a degenerate conic (their line together
/// with the line at infinity), which [`Conic::classify`] reports.
pub fn hyperbola_with_asymptote_dirs<F: Scalar>(
    d1: &Vec2<F>,
    d2: &Vec2<F>,
    p1: &HPoint<F>,
    p2: &HPoint<F>,
    p3: &HPoint<F>,
) -> Result<Conic<F>, ConicError> {
    if d1.is_parallel(d2) {
        return Err(ConicError::NotUnique);
    }
    conic_with_quadratic_form(form_from_directions(d1, d2), [p1, p2, p3])
}

/// `γ_λ`: the conic through the vertices of `T_λ` with asymptotes parallel
/// to the two degenerate carriers of the family.
pub fn gamma_conic<F: Scalar>(fam: &LinearFamily<F>, lambda: &F) -> Result<Conic<F>, ConicError> {
    let dirs = fam.degenerate_directions().ok_or(ConicError::DegenerateCount)?;
    if dirs.len() != 2 {
        return Err(ConicError::DegenerateCount);
    }
    let [a, b, c] = fam
        .at(lambda)
        .vertices()
        .map(|p| HPoint::finite(&p.map(|x| QuadExt::pure(x.clone()))));
    let g = hyperbola_with_asymptote_dirs(&dirs[0], &dirs[1], &a, &b, &c)?;
    g.collapse().ok_or(ConicError::NoSolution)
}

fn line_coords_as_point<F: Scalar>(l: &Line<F>) -> HPoint<F> {
    HPoint {
        x: l.a.clone(),
        y: l.b.clone(),
        w: l.c.clone(),
    }
}

/// The conic tangent to the given lines, fitted in line coordinates and
/// converted back through the adjugate.
pub fn conic_tangent_to<F: Scalar>(lines: &[Line<F>]) -> Result<Conic<F>, ConicError> {
    let pts: Vec<HPoint<F>> = lines.iter().map(line_coords_as_point).collect();
    let dual = conic_through_points(&pts).map_err(|_| ConicError::DegenerateDual)?;
    let m = dual.matrix();
    if F::vanishes(&det3_terms(&m)) {
        return Err(ConicError::DegenerateDual);
    }
    Conic::from_matrix(&adjugate3(&m)).map_err(|_| ConicError::DegenerateDual)
}

/// Parameters used when sampling family members for fits.
pub fn sample_params<F: Scalar>() -> Vec<F> {
    [
        (0, 1),
        (1, 1),
        (-1, 1),
        (2, 1),
        (1, 2),
        (3, 1),
        (-2, 1),
        (1, 3),
        (-1, 2),
        (4, 1),
        (3, 2),
        (-3, 1),
        (2, 3),
        (5, 1),
    ]
    .into_iter()
    .map(|(n, d)| F::from_ratio(n, d))
    .collect()
}

/// Envelope of the lines `X_tY_t` for a nonsingular vertex pair of `F`,
/// fitted through five sampled lines. It is a parabola when the two
/// velocities are not parallel; parallel velocities make the lines
/// concurrent and yield [`ConicError::DegenerateDual`].
pub fn envelope_conic<F: Scalar>(
    fam: &LinearFamily<F>,
    pair: VertexPair,
) -> Result<Conic<F>, ConicError> {
    let (i, j) = pair.indices();
    let center = crate::family::spiral_center(
        fam.t0.vertex(i),
        fam.t1.vertex(i),
        fam.t0.vertex(j),
        fam.t1.vertex(j),
    )?;
    if let PairCenter::Concurrence(_) = center {
        return Err(ConicError::DegenerateDual);
    }
    let mut lines: Vec<Line<F>> = Vec::new();
    for t in sample_params::<F>() {
        let l = Line::through(&fam.vertex_at(i, &t), &fam.vertex_at(j, &t))
            .map_err(|_| ConicError::DegenerateDual)?;
        if !lines.iter().any(|m| m.same(&l)) {
            lines.push(l);
        }
        if lines.len() == 5 {
            break;
        }
    }
    conic_tangent_to(&lines)
}

/// The conic `ε` tangent to the vertex trajectories `a, b, c` and to the
/// two degenerate carriers `x, y` of `F` (the line at infinity standing in
/// for a degenerate `T_∞`). It is the envelope of the lines joining points
/// of `y` to their images on `x` under the cross-ratio preserving map.
pub fn correspondence_envelope<F: Scalar>(fam: &LinearFamily<F>) -> Result<Conic<F>, ConicError> {
    let lifted = fam.lift();
    let mut lines: Vec<Line<QuadExt<F>>> = Vec::with_capacity(5);
    for i in 0..3 {
        lines.push(lifted.trajectory(i).ok_or(ConicError::FixedVertex)?);
    }
    let params = match fam.degenerate_parameters() {
        Degeneracies::Isolated { .. } => fam.degenerate_parameters().params(),
        Degeneracies::All => return Err(ConicError::DegenerateCount),
    };
    if params.len() != 2 {
        return Err(ConicError::DegenerateCount);
    }
    for p in params {
        match p {
            crate::family::DegenerateParam::Finite(r) => {
                let t = fam.at_root(&r);
                lines.push(t.carrier().ok_or(ConicError::DegenerateDual)?);
            }
            crate::family::DegenerateParam::Infinity => lines.push(Line {
                a: QuadExt::zero(),
                b: QuadExt::zero(),
                c: QuadExt::one(),
            }),
        }
    }
    let eps = conic_tangent_to(&lines)?;
    eps.collapse().ok_or(ConicError::DegenerateDual)
}

/// Whether two conics touch each other at two distinct points: the pencil
/// `S1 - k·S2` must contain a double line (the chord of contact) that is
/// not itself tangent.
pub fn are_bitangent<F: Scalar>(c1: &Conic<F>, c2: &Conic<F>) -> bool {
    let (s1, s2) = (c1.matrix(), c2.matrix());
    let member = |k: &F| -> Mat3<F> {
        std::array::from_fn(|i| std::array::from_fn(|j| s1[i][j].clone() - k.clone() * s2[i][j].clone()))
    };
    let ks: Vec<F> = (0..4).map(F::from_i64).collect();
    let ys: Vec<F> = ks.iter().map(|k| det3(&member(k))).collect();
    let p = Poly::interpolate(&ks, &ys);
    if p.is_zero() {
        return false;
    }
    let g = p.gcd(&p.derivative());
    let k0 = match g.degree() {
        Some(1) => -g.coeffs[0].clone() / g.coeffs[1].clone(),
        Some(2) => -g.coeffs[1].clone() / F::from_i64(2),
        _ => return false,
    };
    let m = member(&k0);
    let rows: Vec<Vec<F>> = m.iter().map(|r| r.to_vec()).collect();
    if rank(&rows) != 1 {
        return false;
    }
    let Some(row) = rows.iter().find(|r| r.iter().any(|x| !x.is_zero())) else {
        return false;
    };
    // the chord may be the line at infinity, so skip the finite-line check
    let chord = Line {
        a: row[0].clone(),
        b: row[1].clone(),
        c: row[2].clone(),
    };
    !c2.is_tangent(&chord)
}

/// Focus of a parabola. With `C*` the dual matrix, the focus `z = x + iy`
/// satisfies `z = (C*11 - C*22 + 2i·C*12) / (2·(C*13 + i·C*23))`, so it is
/// always rational over the coefficient field.
pub fn parabola_focus<F: Scalar>(c: &Conic<F>) -> Result<HPoint<F>, ConicError> {
    if c.classify() != ConicClass::Parabola {
        return Err(ConicError::NotParabola);
    }
    let d = c.dual_matrix();
    let num = Vec2::new(
        d[0][0].clone() - d[1][1].clone(),
        F::from_i64(2) * d[0][1].clone(),
    );
    let two = F::from_i64(2);
    let den = Vec2::new(two.clone() * d[0][2].clone(), two * d[1][2].clone());
    Ok(HPoint::finite(&crate::family::cdiv(&num, &den)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::{spiral_center, Triangle};
    use crate::kernel::Rational;

    fn q(n: i64, d: i64) -> Rational {
        Rational::from_ratio(n, d)
    }

    fn p(x: Rational, y: Rational) -> HPoint<Rational> {
        HPoint::finite(&Vec2::new(x, y))
    }

    fn pi(x: i64, y: i64) -> HPoint<Rational> {
        p(q(x, 1), q(y, 1))
    }

    #[test]
    fn unit_circle_through_five_points() {
        let c = conic_through_5([pi(1, 0), pi(-1, 0), pi(0, 1), pi(0, -1), p(q(3, 5), q(4, 5))]).unwrap();
        assert!(c.same(&Conic::from_i64([1, 0, 1, 0, 0, -1])));
        assert_eq!(c.classify(), ConicClass::Ellipse);
    }

    #[test]
    fn hyperbola_through_five_points() {
        let c = conic_through_5([
            pi(1, 1),
            p(q(2, 1), q(1, 2)),
            pi(-1, -1),
            p(q(4, 1), q(1, 4)),
            p(q(1, 2), q(2, 1)),
        ])
        .unwrap();
        assert!(c.same(&Conic::from_i64([0, 1, 0, 0, 0, -1])));
        assert_eq!(c.normalized(), Conic::from_i64([0, 1, 0, 0, 0, -1]));
    }

    #[test]
    fn three_collinear_points_give_line_pair() {
        let c = conic_through_5([pi(0, 0), pi(1, 1), pi(2, 2), pi(1, 0), pi(0, 3)]).unwrap();
        assert!(matches!(c.classify(), ConicClass::LinePair { .. }));
        for pt in [pi(0, 0), pi(1, 1), pi(2, 2), pi(1, 0), pi(0, 3)] {
            assert!(c.contains(&pt));
        }
    }

    #[test]
    fn four_collinear_points_are_a_pencil() {
        assert_eq!(
            conic_through_5([pi(0, 0), pi(1, 1), pi(2, 2), pi(3, 3), pi(1, 0)]),
            Err(ConicError::DegenerateConfiguration)
        );
    }

    #[test]
    fn asymptote_constrained_fit() {
        let d1 = Vec2::from_i64(1, 0);
        let d2 = Vec2::from_i64(0, 1);
        let c = hyperbola_with_asymptote_dirs(&d1, &d2, &pi(1, 1), &p(q(2, 1), q(1, 2)), &p(q(4, 1), q(1, 4)))
            .unwrap();
        assert!(c.same(&Conic::from_i64([0, 1, 0, 0, 0, -1])));
        let flat = hyperbola_with_asymptote_dirs(&d1, &d2, &pi(0, 0), &pi(1, 1), &pi(2, 2)).unwrap();
        assert!(matches!(flat.classify(), ConicClass::LinePair { .. }));
    }

    #[test]
    fn classification() {
        assert_eq!(Conic::<Rational>::from_i64([0, 1, 0, 0, 0, -1]).classify(), ConicClass::RectangularHyperbola);
        assert_eq!(Conic::<Rational>::from_i64([1, 0, 1, 0, 0, -1]).classify(), ConicClass::Ellipse);
        assert_eq!(
            Conic::<Rational>::from_i64([1, 0, -1, 0, 0, 0]).classify(),
            ConicClass::LinePair { perpendicular: true }
        );
        assert_eq!(Conic::<Rational>::from_i64([1, 0, 0, 0, -1, 0]).classify(), ConicClass::Parabola);
        assert_eq!(Conic::<Rational>::from_i64([1, 0, -4, 0, 0, -1]).classify(), ConicClass::Hyperbola);
        assert_eq!(Conic::<Rational>::from_i64([1, 0, 0, 0, 0, 0]).classify(), ConicClass::OtherDegenerate);
    }

    #[test]
    fn asymptotes() {
        let c = Conic::<Rational>::from_i64([0, 1, 0, 0, 0, -1]);
        let (u, v) = c.asymptote_directions().unwrap();
        let ex = Vec2::from_i64(1, 0).map(|x: &Rational| QuadExt::pure(x.clone()));
        let ey = Vec2::from_i64(0, 1).map(|x: &Rational| QuadExt::pure(x.clone()));
        assert!(u.is_parallel(&ex) && v.is_parallel(&ey));

        let c = Conic::<Rational>::from_i64([1, 0, -1, 0, 0, -1]);
        let (u, v) = c.asymptote_directions().unwrap();
        let d1 = Vec2::from_i64(1, 1).map(|x: &Rational| QuadExt::pure(x.clone()));
        let d2 = Vec2::from_i64(1, -1).map(|x: &Rational| QuadExt::pure(x.clone()));
        assert!(u.is_parallel(&d2) || u.is_parallel(&d1));
        assert!(!u.is_parallel(&v));
        assert!(v.is_parallel(&d1) || v.is_parallel(&d2));

        // irrational asymptotes of x² - 2y² = 1
        let c = Conic::<Rational>::from_i64([1, 0, -2, 0, 0, -1]);
        let (u, v) = c.asymptote_directions().unwrap();
        assert!(c.lift().annihilates(&u) && c.lift().annihilates(&v));
        assert!(!u.x.is_pure() || !u.y.is_pure());

        assert_eq!(
            Conic::<Rational>::from_i64([1, 0, 1, 0, 0, -1]).asymptote_directions().unwrap_err(),
            ConicError::NotHyperbola
        );
    }

    #[test]
    fn tangency() {
        let parabola = Conic::<Rational>::from_i64([1, 0, 0, 0, -1, 0]);
        assert!(parabola.is_tangent(&Line::new(q(0, 1), q(1, 1), q(0, 1)).unwrap()));
        let circle = Conic::<Rational>::from_i64([1, 0, 1, 0, 0, -1]);
        assert!(!circle.is_tangent(&Line::new(q(1, 1), q(0, 1), q(0, 1)).unwrap()));
        assert!(circle.is_tangent(&Line::new(q(1, 1), q(0, 1), q(-1, 1)).unwrap()));
    }

    #[test]
    fn foci() {
        let c = Conic::<Rational>::from_i64([1, 0, 0, 0, -1, 0]);
        assert_eq!(parabola_focus(&c).unwrap().to_point(), Some(Vec2::new(q(0, 1), q(1, 4))));
        let c = Conic::<Rational>::from_i64([1, 0, 0, 0, -4, 0]);
        assert_eq!(parabola_focus(&c).unwrap().to_point(), Some(Vec2::from_i64(0, 1)));
        assert_eq!(
            parabola_focus(&Conic::<Rational>::from_i64([1, 0, 1, 0, 0, -1])),
            Err(ConicError::NotParabola)
        );
    }

    #[test]
    fn envelope_of_axis_pair_is_parabola_with_miquel_focus() {
        // A_t = (t, 0), B_t = (0, 1 - t)
        let fam = LinearFamily::new(
            Triangle::from_i64([(0, 0), (0, 1), (5, 5)]),
            Triangle::from_i64([(1, 0), (0, 0), (7, 4)]),
        );
        let env = envelope_conic(&fam, VertexPair::AB).unwrap();
        assert_eq!(env.classify(), ConicClass::Parabola);
        let t = q(7, 3);
        let sixth = Line::through(&fam.vertex_at(0, &t), &fam.vertex_at(1, &t)).unwrap();
        assert!(env.is_tangent(&sixth));
        let m = spiral_center(&fam.t0.a, &fam.t1.a, &fam.t0.b, &fam.t1.b).unwrap();
        assert!(parabola_focus(&env).unwrap().same(m.point()));
        assert_eq!(m.point().to_point(), Some(Vec2::new(q(1, 2), q(1, 2))));
    }

    #[test]
    fn envelope_of_concurrent_lines_is_flagged() {
        let fam: LinearFamily<Rational> = LinearFamily::new(
            Triangle::from_i64([(0, 0), (4, 0), (5, 5)]),
            Triangle::from_i64([(0, 1), (4, -1), (7, 4)]),
        );
        assert_eq!(envelope_conic(&fam, VertexPair::AB), Err(ConicError::DegenerateDual));
    }

    #[test]
    fn bitangent_conics() {
        // x² + y² = 1 and x²/4 + y² = 1 touch at (0, ±1)
        let c1 = Conic::<Rational>::from_i64([1, 0, 1, 0, 0, -1]);
        let c2 = Conic::<Rational>::from_i64([1, 0, 4, 0, 0, -4]);
        assert!(are_bitangent(&c1, &c2));
        // concentric circles touch at the two circular points
        let c3 = Conic::<Rational>::from_i64([1, 0, 1, 0, 0, -4]);
        assert!(are_bitangent(&c1, &c3));
        // generic pair
        let c4 = Conic::<Rational>::from_i64([1, 1, 3, -2, 0, -5]);
        assert!(!are_bitangent(&c1, &c4));
    }

    #[test]
    fn affine_transport() {
        let c = Conic::<Rational>::from_i64([0, 1, 0, 0, 0, -1]);
        let img = c.transform_affine([[q(2, 1), q(0, 1)], [q(0, 1), q(3, 1)]], &Vec2::from_i64(1, 0)).unwrap();
        // (1,1) ↦ (3,3)
        assert!(img.contains_point(&Vec2::from_i64(3, 3)));
        assert!(img.contains_point(&Vec2::new(q(5, 1), q(3, 2))));
    }
}
