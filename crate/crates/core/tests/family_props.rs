mod common;

use common::*;
use orthokit::family::{class_at, spiral_center, Degeneracies, HomothetClass, LinearFamily, PairCenter, Triangle};
use orthokit::{Rational, Scalar, Vec2};
use proptest::prelude::*;

fn cmul(u: &Vec2<Rational>, v: &Vec2<Rational>) -> Vec2<Rational> {
    Vec2::new(
        u.x.clone() * v.x.clone() - u.y.clone() * v.y.clone(),
        u.x.clone() * v.y.clone() + u.y.clone() * v.x.clone(),
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn pairs_interpolate(f in family(), t in small()) {
        let expected = f.t0.pair().scale(&(Rational::one() - t.clone())).add(&f.t1.pair().scale(&t));
        prop_assert_eq!(f.at(&t).pair(), expected);
    }

    #[test]
    fn at_most_two_degenerate_members(f in family()) {
        if let Some(n) = f.degenerate_parameters().count() {
            prop_assert!(n <= 2);
        }
    }

    #[test]
    fn built_degenerate_families_are_all_degenerate(
        a in point(), b in point(), s in small(), k in nonzero(), v in point()
    ) {
        let c = a.clone() + (b.clone() - a.clone()).scale(&s);
        let t0 = Triangle::new(a, b, c);
        let t1 = t0.homothety(&Vec2::zero(), &k).translate(&v);
        let f = LinearFamily::new(t0, t1);
        prop_assert!(matches!(f.degenerate_parameters(), Degeneracies::All));
    }

    #[test]
    fn translates_keep_pairs(f in family(), v0 in point(), v1 in point(), t in small()) {
        let g = f.translate(&v0, &v1);
        prop_assert_eq!(g.at(&t).pair(), f.at(&t).pair());
    }

    #[test]
    fn homothets_keep_classes(
        f in family(), k0 in nonzero(), k1 in nonzero(), o0 in point(), o1 in point(), t in small()
    ) {
        let (Ok(c0), Ok(c1)) = (HomothetClass::of(&f.t0), HomothetClass::of(&f.t1)) else {
            return Ok(());
        };
        prop_assume!(!c0.same(&c1));
        let g = LinearFamily::new(f.t0.homothety(&o0, &k0), f.t1.homothety(&o1, &k1));
        let x0 = (Rational::one() - t.clone()) * k0;
        let x1 = t.clone() * k1;
        match (HomothetClass::of(&g.at(&t)), class_at(&c0, &c1, &x0, &x1)) {
            (Ok(a), Ok(b)) => prop_assert!(a.same(&b)),
            (Err(_), Err(_)) => {}
            _ => prop_assert!(false, "class mismatch"),
        }
    }

    #[test]
    fn spiral_similarity_is_constant(a0 in point(), a1 in point(), b0 in point(), b1 in point()) {
        let Ok(PairCenter::Spiral(m)) = spiral_center(&a0, &a1, &b0, &b1) else {
            return Ok(());
        };
        let m = m.to_point().unwrap();
        let at = |p0: &Vec2<Rational>, p1: &Vec2<Rational>, t: i64| p0.lerp(p1, &q(t, 1)) - m.clone();
        // (B_s - M)(A_t - M) = (B_t - M)(A_s - M) as complex numbers
        for (s, t) in [(0, 1), (1, 2), (0, 3)] {
            let lhs = cmul(&at(&b0, &b1, s), &at(&a0, &a1, t));
            let rhs = cmul(&at(&b0, &b1, t), &at(&a0, &a1, s));
            prop_assert_eq!(lhs, rhs);
        }
    }
}
