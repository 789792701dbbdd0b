mod common;

use common::*;
use orthokit::family::{DegenerateParam, LinearFamily, Singularity, VertexPair};
use orthokit::operator4::*;
use orthokit::orthology::is_orthologic_family;
use orthokit::{QuadExt, Rational, Scalar, Vec2};
use proptest::prelude::*;

fn base_plane(f: &LinearFamily<Rational>) -> Subspace4<Rational> {
    Subspace4::span(&[Vec4::from_pair(&f.t0.pair()), Vec4::from_pair(&f.t1.pair())])
}

fn lift(v: &Vec2<Rational>) -> Vec2<QuadExt<Rational>> {
    v.map(|x| QuadExt::pure(x.clone()))
}

/// Families that may or may not be orthologic, with both bases spanning.
fn spanning_family() -> impl Strategy<Value = LinearFamily<Rational>> {
    prop_oneof![family(), orthologic_family()]
        .prop_filter("bases", |f| operator_of_family(f).is_ok())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn orthologic_self_adjoint_lagrangian(f in spanning_family()) {
        let phi = operator_of_family(&f).unwrap();
        let orth = is_orthologic_family(&f);
        prop_assert_eq!(orth, phi.is_self_adjoint());
        let u = base_plane(&f);
        prop_assert_eq!(u.dim(), 2);
        prop_assert_eq!(orth, u.is_lagrangian().unwrap());
        prop_assert!(u.intersection_dim(&Subspace4::graph(&phi)) == 2);
    }

    #[test]
    fn eigenvectors_are_degenerate_classes(f in spanning_family()) {
        let phi = operator_of_family(&f).unwrap();
        let degs = f.degenerate_parameters();
        let params = degs.params();
        let b0 = f.t0.pair().b;
        let db = f.pair_at_infinity().b;
        // the b-vector of each degenerate member is an eigenvector
        let b_at = |p: &DegenerateParam<Rational>| match p {
            DegenerateParam::Finite(r) => {
                let t = r.to_quad();
                lift(&b0) + lift(&db).scale(&t)
            }
            DegenerateParam::Infinity => lift(&db),
        };
        let phi_q = phi.map(|x| QuadExt::pure(x.clone()));
        for p in &params {
            let b = b_at(p);
            prop_assert!(!b.is_zero());
            prop_assert!(b.is_parallel(&phi_q.apply(&b)));
        }
        match phi.eigenpairs() {
            Eigen::All(_) => prop_assert!(f.is_degenerate()),
            Eigen::Pairs(pairs) => {
                prop_assert_eq!(degs.count(), Some(pairs.len()));
                // each eigenvector is hit by exactly one member
                for (l, e) in &pairs {
                    prop_assert!(phi_q.apply(e).same(&e.scale(l)));
                    let hits = params.iter().filter(|p| b_at(p).is_parallel(e)).count();
                    prop_assert_eq!(hits, 1);
                }
            }
        }
    }

    #[test]
    fn symmetric_eigenbasis_is_orthogonal(phi in symmetric_op()) {
        match phi.eigenpairs() {
            Eigen::All(_) => prop_assert!(phi.is_scalar()),
            Eigen::Pairs(pairs) => {
                prop_assert_eq!(pairs.len(), 2);
                prop_assert!(pairs[0].1.dot(&pairs[1].1).is_zero());
            }
        }
    }

    #[test]
    fn unit_eigenvalue_iff_singular_bc(f in spanning_family()) {
        let phi = operator_of_family(&f).unwrap();
        let unit = phi.sub(&LinOp2::identity()).det().is_zero();
        let bc = match f.is_singular() {
            Singularity::Singular(pairs) => pairs.contains(&VertexPair::BC),
            Singularity::Nonsingular => false,
        };
        prop_assert_eq!(unit, bc);
    }

    #[test]
    fn lagrangian_planes_are_maximal(f in orthologic_family(), v in [small(), small(), small(), small()]) {
        let u = base_plane(&f);
        prop_assume!(u.dim() == 2);
        let perp = u.skew_complement();
        prop_assert_eq!(perp.dim(), 2);
        prop_assert_eq!(perp.intersection_dim(&u), 2);
        let w = Vec4(v);
        let orthogonal = u.basis().iter().all(|b| skew_vanishes(b, &w));
        prop_assert_eq!(orthogonal, u.contains(&w));
        let [p, q, _, _] = w.0.clone();
        let (u0, u1) = (&u.basis()[0].0, &u.basis()[1].0);
        let inside = Vec4(std::array::from_fn(|k| p.clone() * u0[k].clone() + q.clone() * u1[k].clone()));
        prop_assert!(perp.contains(&inside));
    }
}
