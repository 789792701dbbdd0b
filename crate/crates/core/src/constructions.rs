//! Classical constructions on a reference triangle.

use thiserror::Error;

use crate::family::{LinearFamily, Triangle};
use crate::kernel::{intersect, HPoint, KernelError, Line, Scalar, Vec2};
use crate::orthology::{orthology_center, AngleParam, OrthologyError};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("the reference triangle is degenerate")]
    DegenerateInput,
    #[error("the point is not on the circumcircle")]
    NotOnCircumcircle,
    #[error("a side length is not in the scalar field")]
    IrrationalLength,
    #[error("the line through the point is parallel to a side")]
    ParallelToSide,
    #[error("the point lies on a side line")]
    OnSideLine,
    #[error(transparent)]
    Orthology(#[from] OrthologyError),
    #[error(transparent)]
    Kernel(#[from] KernelError),
}

/// A nondegenerate triangle with its circumcenter, orthocenter and centroid.
#[derive(Clone, Debug, PartialEq)]
pub struct ReferenceTriangle<F> {
    pub t: Triangle<F>,
    pub circumcenter: Vec2<F>,
    pub orthocenter: Vec2<F>,
    pub centroid: Vec2<F>,
    sides: [Line<F>; 3],
}

impl<F: Scalar> ReferenceTriangle<F> {
    pub fn new(t: Triangle<F>) -> Result<Self, ConstructionError> {
        if t.is_degenerate() {
            return Err(ConstructionError::DegenerateInput);
        }
        let [a, b, c] = t.vertices();
        let u = b.clone() - a.clone();
        let v = c.clone() - a.clone();
        let d = F::from_i64(2) * u.cross(&v);
        let (nu, nv) = (u.norm2(), v.norm2());
        let o = Vec2::new(
            a.x.clone() + (v.y.clone() * nu.clone() - u.y.clone() * nv.clone()) / d.clone(),
            a.y.clone() + (u.x.clone() * nv - v.x.clone() * nu) / d,
        );
        let h = a.clone() + b.clone() + c.clone() - o.scale(&F::from_i64(2));
        let centroid = t.centroid();
        let sides = [t.side_line(0)?, t.side_line(1)?, t.side_line(2)?];
        Ok(ReferenceTriangle {
            t,
            circumcenter: o,
            orthocenter: h,
            centroid,
            sides,
        })
    }

    pub fn from_i64(p: [(i64, i64); 3]) -> Result<Self, ConstructionError> {
        ReferenceTriangle::new(Triangle::from_i64(p))
    }

    pub fn circumradius2(&self) -> F {
        (self.t.a.clone() - self.circumcenter.clone()).norm2()
    }

    pub fn on_circumcircle(&self, p: &Vec2<F>) -> bool {
        (p.clone() - self.circumcenter.clone()).norm2().same(&self.circumradius2())
    }

    /// Squared lengths `a², b², c²` of the sides opposite `A, B, C`.
    pub fn side_lengths2(&self) -> [F; 3] {
        [0, 1, 2].map(|i| self.t.side_dir(i).norm2())
    }

    pub fn side_lengths(&self) -> Result<[F; 3], ConstructionError> {
        let [a, b, c] = self.side_lengths2().map(|l| l.sqrt());
        match (a, b, c) {
            (Some(a), Some(b), Some(c)) => Ok([a, b, c]),
            _ => Err(ConstructionError::IrrationalLength),
        }
    }

    pub fn incenter(&self) -> Result<Vec2<F>, ConstructionError> {
        let [a, b, c] = self.side_lengths()?;
        let [pa, pb, pc] = self.t.vertices();
        let s = a.clone() + b.clone() + c.clone();
        let p = pa.scale(&a) + pb.scale(&b) + pc.scale(&c);
        Ok(p.scale(&(F::one() / s)))
    }

    pub fn side_line(&self, i: usize) -> Line<F> {
        self.sides[i % 3].clone()
    }

    /// Midpoints of `BC, CA, AB`.
    pub fn medial(&self) -> Triangle<F> {
        Triangle::from_array([0, 1, 2].map(|i| self.t.vertex(i + 1).midpoint(self.t.vertex(i + 2))))
    }

    /// Barycentric coordinates of `p` (summing to one).
    pub fn barycentric(&self, p: &Vec2<F>) -> [F; 3] {
        crate::orthology::barycentric(&self.t, p)
    }

    /// Isogonal conjugate `(a²/u : b²/v : c²/w)` of `p = (u : v : w)`.
    pub fn isogonal_conjugate(&self, p: &Vec2<F>) -> Result<Vec2<F>, ConstructionError> {
        let w = self.barycentric(p);
        if w.iter().any(Scalar::is_zero) {
            return Err(ConstructionError::OnSideLine);
        }
        let l2 = self.side_lengths2();
        let c: [F; 3] = [0, 1, 2].map(|i| l2[i].clone() / w[i].clone());
        let sum = c[0].clone() + c[1].clone() + c[2].clone();
        if sum.is_zero() {
            return Err(KernelError::InfinitePoint.into());
        }
        let norm = c.map(|x| x / sum.clone());
        Ok(crate::orthology::from_barycentric(&self.t, &norm))
    }
}

/// Feet of the perpendiculars from `p` to the side lines.
pub fn pedal_triangle<F: Scalar>(p: &Vec2<F>, r: &ReferenceTriangle<F>) -> Triangle<F> {
    Triangle::from_array([0, 1, 2].map(|i| r.side_line(i).foot(p)))
}

/// Points `X` on the side lines with `∠(PX, side) = α`.
pub fn alpha_pedal_triangle<F: Scalar>(
    p: &Vec2<F>,
    r: &ReferenceTriangle<F>,
    alpha: &AngleParam<F>,
) -> Result<Triangle<F>, ConstructionError> {
    let mut out = Vec::with_capacity(3);
    for i in 0..3 {
        let side = r.side_line(i);
        let l = Line::through_with_direction(p, &alpha.rotate_back(&r.t.side_dir(i)))?;
        let x = intersect(&l, &side).map_err(|_| ConstructionError::ParallelToSide)?;
        out.push(x.to_point().ok_or(ConstructionError::ParallelToSide)?);
    }
    let [a, b, c]: [Vec2<F>; 3] = out.try_into().expect("three vertices");
    Ok(Triangle::new(a, b, c))
}

/// The line through the feet of the perpendiculars from a point of the
/// circumcircle.
pub fn simson_line<F: Scalar>(p: &Vec2<F>, r: &ReferenceTriangle<F>) -> Result<Line<F>, ConstructionError> {
    if !r.on_circumcircle(p) {
        return Err(ConstructionError::NotOnCircumcircle);
    }
    let feet = pedal_triangle(p, r).vertices();
    [(0, 1), (1, 2), (0, 2)]
        .into_iter()
        .find_map(|(i, j)| Line::through(&feet[i], &feet[j]).ok())
        .ok_or(ConstructionError::DegenerateInput)
}

/// Orthogonal projection of the vertices onto `l`.
pub fn projection_triangle<F: Scalar>(t: &Triangle<F>, l: &Line<F>) -> Triangle<F> {
    t.map_vertices(|p| l.foot(p))
}

pub fn reflection_triangle<F: Scalar>(t: &Triangle<F>, l: &Line<F>) -> Triangle<F> {
    t.map_vertices(|p| l.reflect(p))
}

/// Center of orthology of the projection of `r` onto `l` with respect to `r`.
pub fn orthopole<F: Scalar>(r: &Triangle<F>, l: &Line<F>) -> Result<HPoint<F>, ConstructionError> {
    if r.is_degenerate() {
        return Err(ConstructionError::DegenerateInput);
    }
    Ok(orthology_center(&projection_triangle(r, l), r)?)
}

/// Tangency points of the incircle (`K_a, K_b, K_c`) and of the excircles
/// (`X_a, X_b, X_c`) with the sides `BC, CA, AB`.
pub fn contact_triangles<F: Scalar>(
    r: &ReferenceTriangle<F>,
) -> Result<(Triangle<F>, Triangle<F>), ConstructionError> {
    let l = r.side_lengths()?;
    let s = (l[0].clone() + l[1].clone() + l[2].clone()) / F::from_i64(2);
    let on_side = |i: usize, tangent: &F| {
        let from = r.t.vertex(i + 1).clone();
        let d = r.t.side_dir(i);
        from + d.scale(&(tangent.clone() / l[i].clone()))
    };
    // tangent length from X_{i+1} to the incircle is s - l[i+1]
    let k = [0, 1, 2].map(|i| on_side(i, &(s.clone() - l[(i + 1) % 3].clone())));
    let x = [0, 1, 2].map(|i| on_side(i, &(s.clone() - l[(i + 2) % 3].clone())));
    Ok((Triangle::from_array(k), Triangle::from_array(x)))
}

/// Centers of the squares erected outward on `BC, CA, AB`.
pub fn outer_square_centers<F: Scalar>(r: &ReferenceTriangle<F>) -> Triangle<F> {
    let half = F::from_ratio(1, 2);
    Triangle::from_array([0, 1, 2].map(|i| {
        let m = r.t.vertex(i + 1).midpoint(r.t.vertex(i + 2));
        let mut n = r.t.side_dir(i).perp();
        if n.dot(&(r.t.vertex(i).clone() - m.clone())).signum() > 0 {
            n = -n;
        }
        m + n.scale(&half)
    }))
}

/// Apexes of similar isosceles triangles on the sides: the medial triangle
/// at `t = 0` and the outer square centers at `t = 1`.
pub fn kiepert_family<F: Scalar>(r: &ReferenceTriangle<F>) -> LinearFamily<F> {
    LinearFamily::new(r.medial(), outer_square_centers(r))
}

/// Altitude feet `DEF` and altitude midpoints `XYZ`.
pub fn altitude_configuration<F: Scalar>(r: &ReferenceTriangle<F>) -> (Triangle<F>, Triangle<F>) {
    let feet = pedal_triangle(&r.orthocenter, r);
    let mids = Triangle::from_array([0, 1, 2].map(|i| r.t.vertex(i).midpoint(feet.vertex(i))));
    (feet, mids)
}

/// The triangle circumscribed about the circle `(center, radius)` whose
/// sides touch it at the points with half-angle tangents `m`. Its side
/// lengths are rational.
pub fn triangle_from_tangent_params<F: Scalar>(
    center: &Vec2<F>,
    radius: &F,
    m: [F; 3],
) -> Result<Triangle<F>, ConstructionError> {
    let touch = m.map(|m| {
        let d = F::one() + m.square();
        Vec2::new((F::one() - m.square()) / d.clone(), F::from_i64(2) * m / d)
    });
    let mut verts = Vec::with_capacity(3);
    for i in 0..3 {
        let (u, v) = (&touch[(i + 1) % 3], &touch[(i + 2) % 3]);
        let den = F::one() + u.dot(v);
        if den.is_zero() {
            return Err(ConstructionError::ParallelToSide);
        }
        let p = (u.clone() + v.clone()).scale(&(radius.clone() / den));
        verts.push(center.clone() + p);
    }
    let [a, b, c]: [Vec2<F>; 3] = verts.try_into().expect("three vertices");
    let t = Triangle::new(a, b, c);
    if t.is_degenerate() {
        return Err(ConstructionError::DegenerateInput);
    }
    Ok(t)
}
