//! Scalars, plane primitives and small algebra.

mod geom;
pub mod linalg;
mod quad;
mod roots;
mod scalar;

pub use geom::{
    collinear, collinear_points, concurrent, det3, det3_terms, intersect, perpendicular_from,
    HPoint, Line, Point, Vec2,
};
pub use quad::QuadExt;
pub use roots::{solve_quadratic, Poly, Root, RootSet};
pub use scalar::{parse_rational, Approx, Rational, Scalar, DEFAULT_TOL, ROUNDING_SLACK};

use thiserror::Error;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum KernelError {
    #[error("zero vector where a direction or projective point was required")]
    ZeroVector,
    #[error("coefficients do not describe a line")]
    NotALine,
    #[error("the two points coincide")]
    CoincidentPoints,
    #[error("the two lines coincide")]
    CoincidentLines,
    #[error("point at infinity where a finite point was required")]
    InfinitePoint,
}

pub fn dot<F: Scalar>(u: &Vec2<F>, v: &Vec2<F>) -> F {
    u.dot(v)
}

pub fn cross<F: Scalar>(u: &Vec2<F>, v: &Vec2<F>) -> F {
    u.cross(v)
}
