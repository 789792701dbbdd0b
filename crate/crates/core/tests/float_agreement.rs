//! The float backend decides predicates like the exact backend on inputs
//! of magnitude at most 10³, up to a 0.1% allowance near degeneracies.

mod common;

use std::collections::BTreeMap;

use common::q;
use orthokit::conics::{conic_through_points, Conic, ConicClass};
use orthokit::family::{Degeneracies, LinearFamily, Triangle, VectorPair};
use orthokit::kernel::{collinear, concurrent, det3, DEFAULT_TOL};
use orthokit::operator4::LinOp2;
use orthokit::orthology::{is_harmonic, is_orthologic_family, triangles_orthologic};
use orthokit::{Approx, HPoint, Line, Rational, Scalar, Vec2};
use proptest::prelude::*;
use proptest::strategy::ValueTree;
use proptest::test_runner::TestRunner;

const TRIALS: usize = 2000;

fn wide() -> impl Strategy<Value = Rational> {
    (-1000i64..=1000, 1i64..=10).prop_map(|(n, d)| q(n, d))
}

fn unit() -> impl Strategy<Value = Rational> {
    (-10i64..=10, 1i64..=10).prop_map(|(n, d)| q(n, d))
}

fn pt() -> impl Strategy<Value = Vec2<Rational>> {
    (wide(), wide()).prop_map(|(x, y)| Vec2::new(x, y))
}

fn tri() -> impl Strategy<Value = Triangle<Rational>> {
    [pt(), pt(), pt()].prop_map(Triangle::from_array)
}

#[derive(Debug, Clone)]
struct Case {
    p: [Vec2<Rational>; 3],
    k: Rational,
    t: Triangle<Rational>,
    u: Triangle<Rational>,
    dirs: [Vec2<Rational>; 2],
    sym: [Rational; 3],
    hyperbola: (Rational, [Rational; 5]),
    conic_pts: [Vec2<Rational>; 5],
}

fn case() -> impl Strategy<Value = Case> {
    (
        [pt(), pt(), pt()],
        unit(),
        (tri(), tri()),
        [pt(), pt()],
        [unit(), unit(), unit()],
        ((-50i64..=50).prop_map(|n| q(n, 1)), [unit(), unit(), unit(), unit(), unit()]),
        [pt(), pt(), pt(), pt(), pt()],
    )
        .prop_map(|(p, k, (t, u), dirs, sym, hyperbola, conic_pts)| Case {
            p,
            k,
            t,
            u,
            dirs,
            sym,
            hyperbola,
            conic_pts,
        })
}

fn count<F: Scalar>(d: Degeneracies<F>) -> Option<usize> {
    d.count()
}

fn class<F: Scalar, E>(c: Result<Conic<F>, E>) -> Option<ConicClass> {
    c.map(|c| c.classify()).ok()
}

fn fl<T, U>(x: &T, f: impl Fn(&T, &dyn Fn(&Rational) -> Approx) -> U) -> U {
    f(x, &|r: &Rational| Approx::from_rational(r))
}

/// |det M| over the cube of the largest coefficient, computed exactly.
fn relative_det(c: &Conic<Rational>) -> f64 {
    let scale = c.coeffs().iter().map(|x| x.abs()).max().unwrap_or_else(Rational::zero);
    if scale.is_zero() {
        return 0.0;
    }
    (det3(&c.matrix()).abs() / (scale.clone() * scale.clone() * scale)).to_f64()
}

/// (exact, float, exactly within tol of a degeneracy) decisions for one case.
fn decisions(c: &Case) -> Vec<(&'static str, bool, bool, bool)> {
    let mut out = Vec::new();
    let mut both = |name, e: bool, f: bool| out.push((name, e, f, false));
    let tf = |t: &Triangle<Rational>| t.map(Approx::from_rational);
    let hp = |v: &Vec2<Rational>| HPoint::finite(v);
    let hpf = |v: &Vec2<Rational>| HPoint::finite(&v.map(Approx::from_rational));

    // collinear: a generic triple and one with the third point on the line
    let [a, b, r] = &c.p;
    let on = a.lerp(b, &c.k);
    for (name, z) in [("collinear generic", r), ("collinear constructed", &on)] {
        both(name, collinear(&hp(a), &hp(b), &hp(z)), collinear(&hpf(a), &hpf(b), &hpf(z)));
    }

    // concurrent: three lines through a common point, and three generic lines
    let l = |p: &Vec2<Rational>, d: &Vec2<Rational>| Line::through_with_direction(p, d);
    if let (Ok(l1), Ok(l2), Ok(l3)) = (l(a, &(b.clone() - a.clone())), l(a, &c.dirs[0]), l(a, &c.dirs[1])) {
        let lf = |x: &Line<Rational>| x.map(Approx::from_rational);
        both(
            "concurrent constructed",
            concurrent(&l1, &l2, &l3),
            concurrent(&lf(&l1), &lf(&l2), &lf(&l3)),
        );
        if let Ok(l4) = l(r, &c.dirs[1]) {
            both("concurrent generic", concurrent(&l1, &l2, &l4), concurrent(&lf(&l1), &lf(&l2), &lf(&l4)));
        }
    }

    // orthology: generic pairs and pairs on the graph of a symmetric map
    both("orthologic generic", triangles_orthologic(&c.t, &c.u), triangles_orthologic(&tf(&c.t), &tf(&c.u)));
    let [s0, s1, s2] = c.sym.clone();
    let phi = LinOp2::new(s0, s1.clone(), s1, s2);
    let pair = c.t.pair();
    let ortho = VectorPair::new(pair.b.clone(), phi.apply(&pair.b)).place(c.u.vertex(0));
    let graph = VectorPair::new(pair.c.clone(), phi.apply(&pair.c)).place(c.t.vertex(0));
    if !ortho.is_degenerate() && !graph.is_degenerate() {
        both(
            "orthologic constructed",
            triangles_orthologic(&graph, &ortho),
            triangles_orthologic(&tf(&graph), &tf(&ortho)),
        );
        let rotated = ortho.map_vertices(Vec2::perp);
        if let (Ok(e), Ok(f)) = (is_harmonic(&graph, &rotated), is_harmonic(&tf(&graph), &tf(&rotated))) {
            both("harmonic constructed", e, f);
        }
        let fam = LinearFamily::new(graph.clone(), ortho.clone());
        both("orthologic family", is_orthologic_family(&fam), is_orthologic_family(&fam.map(Approx::from_rational)));
    }
    if let (Ok(e), Ok(f)) = (is_harmonic(&c.t, &c.u), is_harmonic(&tf(&c.t), &tf(&c.u))) {
        both("harmonic generic", e, f);
    }

    // degenerate member counts
    let fam = LinearFamily::new(c.t.clone(), c.u.clone());
    let ef = fam.map(Approx::from_rational);
    both(
        "degenerate count generic",
        count(fam.degenerate_parameters()) == Some(2),
        count(ef.degenerate_parameters()) == Some(2),
    );
    let flat = Triangle::from_array([a.clone(), b.clone(), on.clone()]);
    let through = LinearFamily::new(c.t.clone(), flat);
    both(
        "degenerate member constructed",
        through.at(&Rational::one()).is_degenerate(),
        fl(&through, |f, m| f.map(|x| m(x))).at(&Approx::one()).is_degenerate(),
    );

    // conic classes: five generic points, and five points of x·y = k moved by
    // a rational rotation and a translation; shifted far from the origin the
    // hyperbola is within tol of degenerate, so only the disagreements there
    // are checked against the exact distance to degeneracy
    let fit = |pts: &[Vec2<Rational>]| conic_through_points(&pts.iter().map(HPoint::finite).collect::<Vec<_>>());
    let fitf = |pts: &[Vec2<Rational>]| {
        conic_through_points(&pts.iter().map(|v| HPoint::finite(&v.map(Approx::from_rational))).collect::<Vec<_>>())
    };
    both("conic class generic", true, class(fit(&c.conic_pts)) == class(fitf(&c.conic_pts)));
    let (k, xs) = &c.hyperbola;
    if !k.is_zero() && xs.iter().all(|x| !x.is_zero()) {
        let (cs, sn) = (q(3, 5), q(4, 5));
        let near = a.scale(&q(1, 100));
        let far = a.scale(&q(1, 2));
        for (name, shift) in [("rectangular hyperbola", &near), ("rectangular hyperbola far", &far)] {
            let pts: Vec<Vec2<Rational>> = xs
                .iter()
                .map(|x| Vec2::new(x.clone(), k.clone() / x.clone()).rotate_by(&cs, &sn) + shift.clone())
                .collect();
            let distinct = (0..5).all(|i| (0..i).all(|j| pts[i] != pts[j]));
            if distinct {
                let rect = |c: Option<ConicClass>| c == Some(ConicClass::RectangularHyperbola);
                let exact = fit(&pts);
                let near_degenerate = exact.as_ref().map_or(true, |c| relative_det(c) <= DEFAULT_TOL);
                out.push((name, rect(class(exact)), rect(class(fitf(&pts))), near_degenerate));
            }
        }
    }
    out
}

#[test]
fn float_predicates_agree_with_exact() {
    let mut runner = TestRunner::deterministic();
    let strategy = case();
    let mut tally: BTreeMap<&str, (usize, usize)> = BTreeMap::new();
    let mut positives: BTreeMap<&str, usize> = BTreeMap::new();
    let mut far_from_degenerate: Vec<String> = Vec::new();
    for _ in 0..TRIALS {
        let c = strategy.new_tree(&mut runner).expect("case").current();
        for (name, exact, float, near_degenerate) in decisions(&c) {
            let e = tally.entry(name).or_default();
            e.0 += 1;
            if exact == float {
                e.1 += 1;
            } else if !near_degenerate && name.ends_with("far") {
                far_from_degenerate.push(format!("{name}: {c:?}"));
            }
            *positives.entry(name).or_default() += usize::from(exact);
        }
    }
    for (name, (total, agree)) in &tally {
        let rate = *agree as f64 / *total as f64;
        println!("{name}: {agree}/{total} agree, {} exact positives", positives[name]);
        assert!(*total >= TRIALS / 4, "{name}: too few cases ({total})");
        if !name.ends_with("far") {
            assert!(rate >= 0.999, "{name}: agreement {rate} below 0.999");
        }
    }
    assert!(far_from_degenerate.is_empty(), "disagreements away from degeneracy: {far_from_degenerate:?}");
}
