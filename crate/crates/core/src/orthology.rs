//! Orthology of triangles: the Carnot sum, orthology centers, harmonicity
//! and α-orthology, Rideau's affine correspondence, and the loci traced by
//! orthology centers along a linear family.

use std::fmt;

use thiserror::Error;

use crate::conics::{conic_through_points, sample_params, Conic, ConicError};
use crate::family::{Degeneracies, FamilyError, LinearFamily, Param, Triangle, VectorPair};
use crate::kernel::{
    concurrent, intersect, solve_quadratic, HPoint, KernelError, Line, QuadExt, RootSet, Scalar, Vec2,
};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum OrthologyError {
    #[error("the triangles are not orthologic")]
    NotOrthologic,
    #[error("the target triangle is degenerate")]
    DegenerateTarget,
    #[error("the orthology center of two degenerate triangles is not defined")]
    NotDefined,
    #[error("a degenerate triangle where a nondegenerate one was required")]
    DegenerateInput,
    #[error("the three lines do not concur")]
    NoSuchPoint,
    #[error("the vertex trajectories are not concurrent")]
    NonConcurrent,
    #[error("the member at infinity is degenerate")]
    DegenerateAtInfinity,
    #[error("the family must have exactly two isolated degenerate members")]
    DegenerateCount,
    #[error("the linear fractional map is degenerate")]
    DegenerateMap,
    #[error("a sampled center is off the fitted conic")]
    InconsistentSamples,
    #[error("the triangles are not perspective")]
    NotPerspective,
    #[error(transparent)]
    Conic(#[from] ConicError),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

/// `A′B² - A′C² + B′C² - B′A² + C′A² - C′B²`.
pub fn carnot_sum<F: Scalar>(t: &Triangle<F>, tp: &Triangle<F>) -> F {
    let d2 = |p: &Vec2<F>, q: &Vec2<F>| (p.clone() - q.clone()).norm2();
    let [a, b, c] = t.vertices();
    let [ap, bp, cp] = tp.vertices();
    d2(&ap, &b) - d2(&ap, &c) + d2(&bp, &c) - d2(&bp, &a) + d2(&cp, &a) - d2(&cp, &b)
}

/// The vector form `b·c′ - b′·c` of the orthology condition.
pub fn orthology_form<F: Scalar>(p: &VectorPair<F>, pp: &VectorPair<F>) -> F {
    p.b.dot(&pp.c) - pp.b.dot(&p.c)
}

pub fn is_orthologic<F: Scalar>(p: &VectorPair<F>, pp: &VectorPair<F>) -> bool {
    F::vanishes(&[
        p.b.x.clone() * pp.c.x.clone(),
        p.b.y.clone() * pp.c.y.clone(),
        -(pp.b.x.clone() * p.c.x.clone()),
        -(pp.b.y.clone() * p.c.y.clone()),
    ])
}

pub fn triangles_orthologic<F: Scalar>(t: &Triangle<F>, tp: &Triangle<F>) -> bool {
    is_orthologic(&t.pair(), &tp.pair())
}

/// An oriented angle `α` given by a direction `(c, s) ~ (cos α, sin α)`.
#[derive(Clone, Debug, PartialEq)]
pub struct AngleParam<F> {
    pub c: F,
    pub s: F,
}

impl<F: Scalar> AngleParam<F> {
    pub fn new(c: F, s: F) -> Result<Self, KernelError> {
        if c.is_zero() && s.is_zero() {
            return Err(KernelError::ZeroVector);
        }
        Ok(AngleParam { c, s })
    }

    pub fn from_i64(c: i64, s: i64) -> Result<Self, KernelError> {
        AngleParam::new(F::from_i64(c), F::from_i64(s))
    }

    /// `α = π/2`.
    pub fn right() -> Self {
        AngleParam {
            c: F::zero(),
            s: F::one(),
        }
    }

    /// `α = 0`.
    pub fn zero() -> Self {
        AngleParam {
            c: F::one(),
            s: F::zero(),
        }
    }

    /// Rotates `v` by `-α` (up to a positive factor).
    pub fn rotate_back(&self, v: &Vec2<F>) -> Vec2<F> {
        Vec2::new(
            self.c.clone() * v.x.clone() + self.s.clone() * v.y.clone(),
            self.c.clone() * v.y.clone() - self.s.clone() * v.x.clone(),
        )
    }

    /// Rotates `v` by `α` (up to a positive factor).
    pub fn rotate(&self, v: &Vec2<F>) -> Vec2<F> {
        v.rotate_by(&self.c, &self.s)
    }

    /// Same angle: positively proportional direction pairs.
    pub fn same(&self, other: &Self) -> bool {
        let u = Vec2::new(self.c.clone(), self.s.clone());
        let v = Vec2::new(other.c.clone(), other.s.clone());
        u.is_parallel(&v) && u.dot(&v).signum() > 0
    }
}

/// The common point of the lines through the vertices of `t` with the
/// given directions.
fn concurrence<F: Scalar>(t: &Triangle<F>, dirs: [Vec2<F>; 3]) -> Result<HPoint<F>, OrthologyError> {
    let lines: Vec<Line<F>> = (0..3)
        .map(|i| Line::through_with_direction(t.vertex(i), &dirs[i]))
        .collect::<Result<_, _>>()?;
    let pair = [(0, 1), (1, 2), (2, 0)]
        .into_iter()
        .find(|&(i, j)| !dirs[i].is_parallel(&dirs[j]));
    let Some((i, j)) = pair else {
        return Ok(HPoint::at_infinity(&dirs[0]));
    };
    let p = intersect(&lines[i], &lines[j])?;
    if lines.iter().all(|l| l.contains(&p)) {
        Ok(p)
    } else {
        Err(OrthologyError::NoSuchPoint)
    }
}

fn check_target<F: Scalar>(t: &Triangle<F>, tp: &Triangle<F>) -> Result<(), OrthologyError> {
    match (t.is_degenerate(), tp.is_degenerate()) {
        (true, true) => Err(OrthologyError::NotDefined),
        (false, true) => Err(OrthologyError::DegenerateTarget),
        _ => Ok(()),
    }
}

/// `O_{T,T′}`: the common point of the perpendiculars from the vertices of
/// `T` to the corresponding sides of `T′`. Finite whenever `T′` is
/// nondegenerate.
pub fn orthology_center<F: Scalar>(t: &Triangle<F>, tp: &Triangle<F>) -> Result<HPoint<F>, OrthologyError> {
    check_target(t, tp)?;
    concurrence(t, [0, 1, 2].map(|i| tp.side_dir(i).perp()))
        .map_err(|e| match e {
            OrthologyError::NoSuchPoint => OrthologyError::NotOrthologic,
            e => e,
        })
}

/// Lines through `A, B, C` parallel to `B′C′, C′A′, A′B′` concur.
pub fn is_harmonic<F: Scalar>(t: &Triangle<F>, tp: &Triangle<F>) -> Result<bool, OrthologyError> {
    match harmonic_center(t, tp) {
        Ok(_) => Ok(true),
        Err(OrthologyError::NoSuchPoint) => Ok(false),
        Err(e) => Err(e),
    }
}

pub fn harmonic_center<F: Scalar>(t: &Triangle<F>, tp: &Triangle<F>) -> Result<HPoint<F>, OrthologyError> {
    if t.is_degenerate() || tp.is_degenerate() {
        return Err(OrthologyError::DegenerateInput);
    }
    concurrence(t, [0, 1, 2].map(|i| tp.side_dir(i)))
}

/// The point `P` with `∠(AP, B′C′) = ∠(BP, C′A′) = ∠(CP, A′B′) = α`.
pub fn alpha_orthology_center<F: Scalar>(
    t: &Triangle<F>,
    tp: &Triangle<F>,
    alpha: &AngleParam<F>,
) -> Result<HPoint<F>, OrthologyError> {
    check_target(t, tp)?;
    concurrence(t, [0, 1, 2].map(|i| alpha.rotate_back(&tp.side_dir(i))))
}

/// Barycentric coordinates of `p` with respect to a nondegenerate `t`.
pub fn barycentric<F: Scalar>(t: &Triangle<F>, p: &Vec2<F>) -> [F; 3] {
    let [a, b, c] = t.vertices();
    let area = (b.clone() - a.clone()).cross(&(c.clone() - a.clone()));
    let wa = (b.clone() - p.clone()).cross(&(c.clone() - p.clone())) / area.clone();
    let wb = (c - p.clone()).cross(&(a - p.clone())) / area;
    let wc = F::one() - wa.clone() - wb.clone();
    [wa, wb, wc]
}

pub fn from_barycentric<F: Scalar>(t: &Triangle<F>, w: &[F; 3]) -> Vec2<F> {
    let [a, b, c] = t.vertices();
    a.scale(&w[0]) + b.scale(&w[1]) + c.scale(&w[2])
}

/// Image of `p` under the affine map sending `t` to `tp` vertex by vertex.
pub fn affine_image<F: Scalar>(t: &Triangle<F>, tp: &Triangle<F>, p: &Vec2<F>) -> Vec2<F> {
    from_barycentric(tp, &barycentric(t, p))
}

/// Whether the affine map `A, B, C ↦ A′, B′, C′` sends `O_{T,T′}` to
/// `O_{T′,T}`.
pub fn rideau_check<F: Scalar>(t: &Triangle<F>, tp: &Triangle<F>) -> Result<bool, OrthologyError> {
    if t.is_degenerate() || tp.is_degenerate() {
        return Err(OrthologyError::DegenerateInput);
    }
    if !triangles_orthologic(t, tp) {
        return Err(OrthologyError::NotOrthologic);
    }
    let o1 = orthology_center(t, tp)?.to_point().ok_or(KernelError::InfinitePoint)?;
    let o2 = orthology_center(tp, t)?.to_point().ok_or(KernelError::InfinitePoint)?;
    Ok(affine_image(t, tp, &o1).same(&o2))
}

pub fn is_orthologic_family<F: Scalar>(fam: &LinearFamily<F>) -> bool {
    is_orthologic(&fam.t0.pair(), &fam.t1.pair())
}

/// Trajectory of a moving orthology center.
#[derive(Clone, Debug, PartialEq)]
pub enum CenterLocus<F> {
    Line(Line<F>),
    Point(Vec2<F>),
}

/// The locus of `O_{T_t,T′}`, which moves linearly in `t`.
pub fn center_line<F: Scalar>(fam: &LinearFamily<F>, tp: &Triangle<F>) -> Result<CenterLocus<F>, OrthologyError> {
    if tp.is_degenerate() {
        return Err(OrthologyError::DegenerateTarget);
    }
    if !triangles_orthologic(&fam.t0, tp) || !triangles_orthologic(&fam.t1, tp) {
        return Err(OrthologyError::NotOrthologic);
    }
    let finite = |t: &Triangle<F>| -> Result<Vec2<F>, OrthologyError> {
        Ok(orthology_center(t, tp)?.to_point().ok_or(KernelError::InfinitePoint)?)
    };
    let o0 = finite(&fam.t0)?;
    let o1 = finite(&fam.t1)?;
    if o0.same(&o1) {
        Ok(CenterLocus::Point(o0))
    } else {
        Ok(CenterLocus::Line(Line::through(&o0, &o1)?))
    }
}

/// The conic traced by `O_{T′,T_t}`, fitted through sampled centers and
/// checked against a further sample and the vertices of `T′`.
pub fn center_conic<F: Scalar>(tp: &Triangle<F>, fam: &LinearFamily<F>) -> Result<Conic<F>, OrthologyError> {
    if !triangles_orthologic(tp, &fam.t0) || !triangles_orthologic(tp, &fam.t1) {
        return Err(OrthologyError::NotOrthologic);
    }
    let mut centers: Vec<HPoint<F>> = Vec::new();
    for t in sample_params::<F>() {
        let member = fam.at(&t);
        if member.is_degenerate() {
            continue;
        }
        let o = orthology_center(tp, &member)?;
        if !centers.iter().any(|c| c.same(&o)) {
            centers.push(o);
        }
        if centers.len() == 6 {
            break;
        }
    }
    let vertices: Vec<HPoint<F>> = tp.vertices().iter().map(HPoint::finite).collect();
    let conic = match centers.get(..5).map(conic_through_points) {
        Some(Ok(c)) => c,
        _ => {
            let mut pts = centers.clone();
            for v in &vertices {
                if !pts.iter().any(|p| p.same(v)) {
                    pts.push(v.clone());
                }
            }
            conic_through_points(&pts)?
        }
    };
    if centers.iter().chain(vertices.iter()).all(|p| conic.contains(p)) {
        Ok(conic)
    } else {
        Err(OrthologyError::InconsistentSamples)
    }
}

/// `λ ↦ (pλ + q) / (rλ + s)` on the projective line.
#[derive(Clone, Debug, PartialEq)]
pub struct MoebiusMap<F> {
    pub p: F,
    pub q: F,
    pub r: F,
    pub s: F,
}

impl<F: Scalar> MoebiusMap<F> {
    pub fn new(p: F, q: F, r: F, s: F) -> Result<Self, OrthologyError> {
        if F::vanishes(&[p.clone() * s.clone(), -(q.clone() * r.clone())]) {
            return Err(OrthologyError::DegenerateMap);
        }
        Ok(MoebiusMap { p, q, r, s })
    }

    pub fn identity() -> Self {
        MoebiusMap {
            p: F::one(),
            q: F::zero(),
            r: F::zero(),
            s: F::one(),
        }
    }

    pub fn apply(&self, x: &Param<F>) -> Param<F> {
        let (num, den) = match x {
            Param::Finite(l) => (
                self.p.clone() * l.clone() + self.q.clone(),
                self.r.clone() * l.clone() + self.s.clone(),
            ),
            Param::Infinity => (self.p.clone(), self.r.clone()),
        };
        if den.is_zero() {
            Param::Infinity
        } else {
            Param::Finite(num / den)
        }
    }

    pub fn apply_finite(&self, l: &F) -> Param<F> {
        self.apply(&Param::Finite(l.clone()))
    }

    /// The parameter sent to `∞`.
    pub fn pole(&self) -> Param<F> {
        if self.r.is_zero() {
            Param::Infinity
        } else {
            Param::Finite(-self.s.clone() / self.r.clone())
        }
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        let m = |a: &F, b: &F, c: &F, d: &F| a.clone() * b.clone() + c.clone() * d.clone();
        MoebiusMap {
            p: m(&self.p, &other.p, &self.q, &other.r),
            q: m(&self.p, &other.q, &self.q, &other.s),
            r: m(&self.r, &other.p, &self.s, &other.r),
            s: m(&self.r, &other.q, &self.s, &other.s),
        }
    }

    pub fn inverse(&self) -> Self {
        MoebiusMap {
            p: self.s.clone(),
            q: -self.q.clone(),
            r: -self.r.clone(),
            s: self.p.clone(),
        }
    }

    /// Equal as maps: proportional coefficient vectors.
    pub fn same(&self, other: &Self) -> bool {
        crate::kernel::linalg::proportional(
            &[self.p.clone(), self.q.clone(), self.r.clone(), self.s.clone()],
            &[other.p.clone(), other.q.clone(), other.r.clone(), other.s.clone()],
        )
    }

    pub fn is_involution(&self) -> bool {
        self.compose(self).same(&MoebiusMap::identity())
    }

    /// Solutions of `λ = map(λ)`; `OnePlusInfinity` when `∞` is fixed.
    pub fn fixed_points(&self) -> RootSet<F> {
        solve_quadratic(&self.r, &(self.s.clone() - self.p.clone()), &-self.q.clone())
    }
}

impl<F: Scalar> fmt::Display for MoebiusMap<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}·t + {}) / ({}·t + {})", self.p, self.q, self.r, self.s)
    }
}

fn collapse_point<F: Scalar>(p: &HPoint<QuadExt<F>>) -> Option<Vec2<F>> {
    let v = p.to_point()?;
    Some(Vec2::new(v.x.as_base()?, v.y.as_base()?))
}

/// The intersection `O` of the two degenerate carriers of a family whose
/// degenerate members are both finite.
pub fn carrier_intersection<F: Scalar>(fam: &LinearFamily<F>) -> Result<Vec2<F>, OrthologyError> {
    let (finite, at_infinity) = match fam.degenerate_parameters() {
        Degeneracies::All => return Err(OrthologyError::DegenerateCount),
        Degeneracies::Isolated { finite, at_infinity } => (finite, at_infinity),
    };
    if at_infinity {
        return Err(OrthologyError::DegenerateAtInfinity);
    }
    if finite.len() != 2 {
        return Err(OrthologyError::DegenerateCount);
    }
    let carriers: Vec<Line<QuadExt<F>>> = finite
        .iter()
        .map(|r| fam.at_root(r).carrier().ok_or(OrthologyError::DegenerateCount))
        .collect::<Result<_, _>>()?;
    let o = intersect(&carriers[0], &carriers[1]).map_err(|_| OrthologyError::DegenerateCount)?;
    collapse_point(&o).ok_or(OrthologyError::DegenerateCount)
}

/// The common point `H` of the vertex trajectories.
pub fn trajectory_concurrence<F: Scalar>(fam: &LinearFamily<F>) -> Result<HPoint<F>, OrthologyError> {
    let lines: Vec<Line<F>> = (0..3)
        .map(|i| fam.trajectory(i).ok_or(OrthologyError::NonConcurrent))
        .collect::<Result<_, _>>()?;
    if !concurrent(&lines[0], &lines[1], &lines[2]) {
        return Err(OrthologyError::NonConcurrent);
    }
    let p = [(0, 1), (1, 2), (0, 2)]
        .into_iter()
        .find_map(|(i, j)| intersect(&lines[i], &lines[j]).ok());
    p.ok_or(OrthologyError::NonConcurrent)
}

/// The map `λ ↦ μ` for which `O = x ∩ y` is the common orthology center
/// `O_{T_λ,T_μ} = O_{T_μ,T_λ}`, built from `(A_λ - O)·(C_μ - B_μ) = 0`.
pub fn common_center_correspondence<F: Scalar>(fam: &LinearFamily<F>) -> Result<MoebiusMap<F>, OrthologyError> {
    if !is_orthologic_family(fam) {
        return Err(OrthologyError::NotOrthologic);
    }
    let o = carrier_intersection(fam)?;
    trajectory_concurrence(fam)?;
    let v = fam.velocities();
    for (i, vi) in v.iter().enumerate() {
        let x0 = fam.t0.vertex(i).clone() - o.clone();
        let w0 = fam.t0.side_dir(i);
        let dw = fam.t1.side_dir(i) - w0.clone();
        let map = MoebiusMap::new(-vi.dot(&w0), -x0.dot(&w0), vi.dot(&dw), x0.dot(&dw));
        if map.is_ok() {
            return map;
        }
    }
    Err(OrthologyError::DegenerateMap)
}

/// The parameter `h` with `A_hB_h ⊥ c`, `B_hC_h ⊥ a`, `C_hA_h ⊥ b`, where
/// `a, b, c` are the vertex trajectories.
pub fn unique_h<F: Scalar>(fam: &LinearFamily<F>) -> Result<Param<F>, OrthologyError> {
    let v = fam.velocities();
    if v.iter().any(Vec2::is_zero) {
        return Err(OrthologyError::NonConcurrent);
    }
    let coeffs = |i: usize| {
        let w0 = fam.t0.side_dir(i);
        let dw = fam.t1.side_dir(i) - w0.clone();
        (w0.dot(&v[i]), dw.dot(&v[i]))
    };
    let holds = |h: &Param<F>| {
        (0..3).all(|i| {
            let (k0, k1) = coeffs(i);
            match h {
                Param::Finite(t) => (k0 + k1 * t.clone()).is_zero(),
                Param::Infinity => k1.is_zero(),
            }
        })
    };
    for i in 0..3 {
        let (k0, k1) = coeffs(i);
        let h = if !k1.is_zero() {
            Param::Finite(-k0 / k1)
        } else if !k0.is_zero() {
            Param::Infinity
        } else {
            continue;
        };
        return if holds(&h) {
            Ok(h)
        } else {
            Err(OrthologyError::NoSuchPoint)
        };
    }
    Err(OrthologyError::NoSuchPoint)
}

/// Common point of `AA′, BB′, CC′`.
pub fn perspector<F: Scalar>(t: &Triangle<F>, tp: &Triangle<F>) -> Result<HPoint<F>, OrthologyError> {
    let lines: Vec<Line<F>> = (0..3)
        .map(|i| Line::through(t.vertex(i), tp.vertex(i)))
        .collect::<Result<_, _>>()
        .map_err(|_| OrthologyError::DegenerateInput)?;
    if !concurrent(&lines[0], &lines[1], &lines[2]) {
        return Err(OrthologyError::NotPerspective);
    }
    [(0, 1), (1, 2), (0, 2)]
        .into_iter()
        .find_map(|(i, j)| intersect(&lines[i], &lines[j]).ok())
        .ok_or(OrthologyError::NotPerspective)
}

/// The line through the intersections of corresponding side lines.
pub fn desargues_axis<F: Scalar>(t: &Triangle<F>, tp: &Triangle<F>) -> Result<Line<F>, OrthologyError> {
    let pts: Vec<HPoint<F>> = (0..3)
        .map(|i| {
            let l = t.side_line(i).map_err(|_| OrthologyError::DegenerateInput)?;
            let m = tp.side_line(i).map_err(|_| OrthologyError::DegenerateInput)?;
            intersect(&l, &m).map_err(|_| OrthologyError::NotPerspective)
        })
        .collect::<Result<_, _>>()?;
    if pts.iter().all(|p| !p.is_finite()) {
        return Ok(Line {
            a: F::zero(),
            b: F::zero(),
            c: F::one(),
        });
    }
    let axis = [(0, 1), (1, 2), (0, 2)]
        .into_iter()
        .find_map(|(i, j)| Line::join(&pts[i], &pts[j]).ok())
        .ok_or(OrthologyError::NotPerspective)?;
    if pts.iter().all(|p| axis.contains(p)) {
        Ok(axis)
    } else {
        Err(OrthologyError::NotPerspective)
    }
}
