#![allow(dead_code)]

use orthokit::family::{LinearFamily, Triangle, VectorPair};
use orthokit::operator4::LinOp2;
use orthokit::{Rational, Scalar, Vec2};
use proptest::prelude::*;

pub fn q(n: i64, d: i64) -> Rational {
    Rational::from_ratio(n, d)
}

pub fn rational() -> impl Strategy<Value = Rational> {
    (-100i64..=100, 1i64..=10).prop_map(|(n, d)| q(n, d))
}

pub fn small() -> impl Strategy<Value = Rational> {
    (-12i64..=12, 1i64..=4).prop_map(|(n, d)| q(n, d))
}

pub fn nonzero() -> impl Strategy<Value = Rational> {
    small().prop_filter("nonzero", |x| !x.is_zero())
}

pub fn point() -> impl Strategy<Value = Vec2<Rational>> {
    (rational(), rational()).prop_map(|(x, y)| Vec2::new(x, y))
}

pub fn vector() -> impl Strategy<Value = Vec2<Rational>> {
    point().prop_filter("nonzero", |v| !v.is_zero())
}

pub fn triangle() -> impl Strategy<Value = Triangle<Rational>> {
    [point(), point(), point()].prop_map(Triangle::from_array)
}

pub fn nondegenerate_triangle() -> impl Strategy<Value = Triangle<Rational>> {
    triangle().prop_filter("nondegenerate", |t| !t.is_degenerate())
}

pub fn family() -> impl Strategy<Value = LinearFamily<Rational>> {
    (triangle(), triangle()).prop_map(|(a, b)| LinearFamily::new(a, b))
}

pub fn symmetric_op() -> impl Strategy<Value = LinOp2<Rational>> {
    (small(), small(), small()).prop_map(|(p, r, s)| LinOp2::new(p, r.clone(), r, s))
}

/// A family whose base pairs lie on the graph of a symmetric operator,
/// hence an orthologic family.
pub fn orthologic_family() -> impl Strategy<Value = LinearFamily<Rational>> {
    (point(), point(), vector(), vector(), symmetric_op()).prop_map(|(a0, a1, b0, b1, phi)| {
        let t0 = VectorPair::new(b0.clone(), phi.apply(&b0)).place(&a0);
        let t1 = VectorPair::new(b1.clone(), phi.apply(&b1)).place(&a1);
        LinearFamily::new(t0, t1)
    })
}

pub fn orthologic_pair() -> impl Strategy<Value = (Triangle<Rational>, Triangle<Rational>)> {
    orthologic_family()
        .prop_map(|f| (f.t0, f.t1))
        .prop_filter("nondegenerate", |(a, b)| !a.is_degenerate() && !b.is_degenerate())
}

/// `(cos, sin)` of a rational rotation.
pub fn rotation(m: &Rational) -> (Rational, Rational) {
    let d = Rational::one() + m.square();
    ((Rational::one() - m.square()) / d.clone(), q(2, 1) * m.clone() / d)
}

pub fn rotate90(t: &Triangle<Rational>) -> Triangle<Rational> {
    t.map_vertices(Vec2::perp)
}

/// A concurrent orthologic family in the frame of its degenerate members:
/// `A_t = (t·x_a, (1-t)·y_a)` with the lines `a, b, c` through `h`.
pub fn axes_family(h: &Vec2<Rational>, xs: [Rational; 3]) -> Option<LinearFamily<Rational>> {
    let mut t0 = Vec::new();
    let mut t1 = Vec::new();
    for x in xs {
        if x.is_zero() || x.same(&h.x) {
            return None;
        }
        // h.x / x + h.y / y = 1
        let y = h.y.clone() / (Rational::one() - h.x.clone() / x.clone());
        t0.push(Vec2::new(Rational::zero(), y));
        t1.push(Vec2::new(x, Rational::zero()));
    }
    let t0 = Triangle::new(t0[0].clone(), t0[1].clone(), t0[2].clone());
    let t1 = Triangle::new(t1[0].clone(), t1[1].clone(), t1[2].clone());
    let fam = LinearFamily::new(t0, t1);
    (fam.is_nonsingular() && !fam.is_degenerate()).then_some(fam)
}

pub fn axes_family_strategy() -> impl Strategy<Value = (Vec2<Rational>, LinearFamily<Rational>)> {
    (nonzero(), nonzero(), [nonzero(), nonzero(), nonzero()])
        .prop_filter_map("admissible", |(hx, hy, xs)| {
            let h = Vec2::new(hx, hy);
            axes_family(&h, xs).map(|f| (h, f))
        })
}

/// Moves a family by a rational rotation and a translation.
pub fn place_family(f: &LinearFamily<Rational>, m: &Rational, shift: &Vec2<Rational>) -> LinearFamily<Rational> {
    let (c, s) = rotation(m);
    let g = |p: &Vec2<Rational>| p.rotate_by(&c, &s) + shift.clone();
    LinearFamily::new(f.t0.map_vertices(g), f.t1.map_vertices(g))
}
