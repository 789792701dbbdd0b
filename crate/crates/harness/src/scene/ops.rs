//! Signatures of the functions and queries of the scene language.

use super::Kind;
use super::Kind::{Conic as C, Family as F, Line as L, Point as P, Scalar as S, Triangle as T};

/// A named operation. Functions have a result kind and may appear in
/// declarations and queries; query-only operations have none.
#[derive(Clone, Copy, Debug)]
pub struct Op {
    pub name: &'static str,
    pub params: &'static [Kind],
    pub result: Option<Kind>,
}

const fn f(name: &'static str, params: &'static [Kind], result: Kind) -> Op {
    Op {
        name,
        params,
        result: Some(result),
    }
}

const fn q(name: &'static str, params: &'static [Kind]) -> Op {
    Op {
        name,
        params,
        result: None,
    }
}

pub const FUNCTIONS: &[Op] = &[
    f("midpoint", &[P, P], P),
    f("centroid", &[T], P),
    f("circumcenter", &[T], P),
    f("orthocenter", &[T], P),
    f("incenter", &[T], P),
    f("isogonal", &[P, T], P),
    f("orthology_center", &[T, T], P),
    f("harmonic_center", &[T, T], P),
    // the angle is given by its cosine and sine, up to a positive factor
    f("alpha_center", &[T, T, S, S], P),
    f("perspector", &[T, T], P),
    f("orthopole", &[T, L], P),
    f("meet", &[L, L], P),
    f("foot", &[P, L], P),
    f("spiral_center", &[F], P),
    f("carrier_meet", &[F], P),
    f("trajectory_meet", &[F], P),
    f("focus", &[C], P),
    f("join", &[P, P], L),
    f("perpendicular", &[P, L], L),
    f("parallel", &[P, L], L),
    f("simson", &[P, T], L),
    f("desargues_axis", &[T, T], L),
    f("center_line", &[F, T], L),
    f("trajectory", &[F, S], L),
    f("side", &[T, S], L),
    f("pedal", &[P, T], T),
    f("alpha_pedal", &[P, T, S, S], T),
    f("projection", &[T, L], T),
    f("reflection", &[T, L], T),
    f("member", &[F, S], T),
    f("medial", &[T], T),
    f("contact", &[T], T),
    f("excontact", &[T], T),
    f("altitude_feet", &[T], T),
    f("altitude_mids", &[T], T),
    f("square_centers", &[T], T),
    f("rotate90", &[T], T),
    f("tangent_triangle", &[P, S, S, S, S], T),
    f("kiepert", &[T], F),
    f("flies", &[T, S, S, S], F),
    f("center_conic", &[T, F], C),
    f("gamma", &[F, S], C),
    f("epsilon", &[F], C),
    f("envelope", &[F], C),
    f("circumcircle", &[T], C),
];

pub const QUERIES: &[Op] = &[
    q("orthologic", &[T, T]),
    q("harmonic", &[T, T]),
    q("carnot", &[T, T]),
    q("rideau", &[T, T]),
    q("degenerate", &[T]),
    q("collinear", &[P, P, P]),
    q("concurrent", &[L, L, L]),
    q("orthogonal", &[L, L]),
    q("on", &[C, P]),
    q("incident", &[L, P]),
    q("tangent", &[C, L]),
    q("classify", &[C]),
    q("degenerate_params", &[F]),
    q("orthologic_family", &[F]),
    q("singular", &[F]),
    q("operator", &[F]),
    q("eigen", &[F]),
    q("unique_h", &[F]),
    q("correspondence", &[F]),
];

pub fn function(name: &str) -> Option<&'static Op> {
    FUNCTIONS.iter().find(|o| o.name == name)
}

pub fn query(name: &str) -> Option<&'static Op> {
    QUERIES.iter().chain(FUNCTIONS).find(|o| o.name == name)
}

pub fn is_reserved(name: &str) -> bool {
    name == "query" || Kind::from_keyword(name).is_some() || function(name).is_some()
}
