//! Linear families of triangles, orthology and its loci.

pub mod conics;
pub mod constructions;
pub mod family;
pub mod kernel;
pub mod operator4;
pub mod orthology;

pub use kernel::{Approx, HPoint, Line, QuadExt, Rational, Scalar, Vec2};
