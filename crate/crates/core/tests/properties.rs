use std::sync::Arc;

use proptest::prelude::*;

use braidcoh_core::algebra::{Algebra, AlgebraElement};
use braidcoh_core::bar::BarComplex;
use braidcoh_core::braided::{
    braid, braid_at, braid_blocks, braid_blocks_inverse, braided_square_multiply, coproduct, tensor_of,
};
use braidcoh_core::cup::{ComparisonOptions, CupEngine};
use braidcoh_core::lifting::LiftStrategy;
use braidcoh_core::resolution::{validate, FreeBimoduleResolution};
use braidcoh_core::scalar::int;

fn algebra(super_jordan: bool) -> Algebra {
    if super_jordan {
        Algebra::super_jordan(16)
    } else {
        Algebra::jordan(16)
    }
}

/// A homogeneous element of degree ≤ 4 with small integer coefficients on the normal basis.
fn element(alg: &Algebra) -> impl Strategy<Value = AlgebraElement> {
    let bases: Vec<_> = (0..=4).map(|d| alg.graded_basis(d).unwrap()).collect();
    (0..=4usize, prop::collection::vec(-3i64..=3, 5)).prop_map(move |(d, coeffs)| {
        bases[d]
            .iter()
            .zip(coeffs)
            .filter(|(_, c)| *c != 0)
            .map(|(w, c)| (w.clone(), int(c)))
            .collect()
    })
}

fn triple(sj: bool) -> impl Strategy<Value = (bool, [AlgebraElement; 3])> {
    let alg = algebra(sj);
    (element(&alg), element(&alg), element(&alg)).prop_map(move |(a, b, c)| (sj, [a, b, c]))
}

fn any_triple() -> impl Strategy<Value = (bool, [AlgebraElement; 3])> {
    prop_oneof![triple(false), triple(true)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(256))]

    #[test]
    fn braid_equation((sj, f) in any_triple()) {
        let alg = algebra(sj);
        let e = tensor_of(&f);
        let b = |e, i| braid_at(&alg, &e, i).unwrap();
        prop_assert_eq!(b(b(b(e.clone(), 0), 1), 0), b(b(b(e, 1), 0), 1));
    }

    #[test]
    fn hexagons((sj, f) in any_triple()) {
        let alg = algebra(sj);
        let e = tensor_of(&f);
        let b = |e, i| braid_at(&alg, &e, i).unwrap();
        prop_assert_eq!(braid_blocks(&alg, &e, 2).unwrap(), b(b(e.clone(), 1), 0));
        prop_assert_eq!(braid_blocks(&alg, &e, 1).unwrap(), b(b(e, 0), 1));
    }

    #[test]
    fn braiding_is_invertible((sj, f) in any_triple()) {
        let alg = algebra(sj);
        let e = tensor_of(&f);
        for p in 0..=3 {
            let moved = braid_blocks(&alg, &e, p).unwrap();
            prop_assert_eq!(braid_blocks_inverse(&alg, &moved, 3 - p).unwrap(), e.clone());
        }
    }

    #[test]
    fn multiplication_is_associative((sj, [a, b, c]) in any_triple()) {
        let alg = algebra(sj);
        let m = |u: &AlgebraElement, v: &AlgebraElement| alg.multiply(u, v).unwrap();
        prop_assert_eq!(m(&m(&a, &b), &c), m(&a, &m(&b, &c)));
    }

    #[test]
    fn t_acts_by_automorphisms((sj, [a, b, _]) in any_triple(), k in -3i64..=3) {
        let alg = algebra(sj);
        let t = |u: &AlgebraElement| alg.act(k, u).unwrap();
        prop_assert_eq!(t(&alg.multiply(&a, &b).unwrap()), alg.multiply(&t(&a), &t(&b)).unwrap());
        prop_assert_eq!(alg.act(-k, &t(&a)).unwrap(), a);
    }

    #[test]
    fn coproduct_is_multiplicative((sj, [a, b, _]) in any_triple()) {
        let alg = algebra(sj);
        let lhs = coproduct(&alg, &alg.multiply(&a, &b).unwrap()).unwrap();
        let rhs = braided_square_multiply(
            &alg,
            &coproduct(&alg, &a).unwrap(),
            &coproduct(&alg, &b).unwrap(),
        )
        .unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn braiding_is_natural_for_t((sj, [a, b, _]) in any_triple(), k in -2i64..=2) {
        let alg = algebra(sj);
        let e = tensor_of(&[a.clone(), b.clone()]);
        let te = tensor_of(&[alg.act(k, &a).unwrap(), alg.act(k, &b).unwrap()]);
        let c = braid(&alg, &e).unwrap();
        let tc = braidcoh_core::braided::map_factor(&c, 0, |w| alg.act_word(k, w)).unwrap();
        let tc = braidcoh_core::braided::map_factor(&tc, 1, |w| alg.act_word(k, w)).unwrap();
        prop_assert_eq!(braid(&alg, &te).unwrap(), tc);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn tables_do_not_depend_on_the_g_lift(seed in any::<u64>(), sj in any::<bool>()) {
        let res = if sj {
            FreeBimoduleResolution::builtin_super_jordan(Arc::new(Algebra::super_jordan(6)), 4).unwrap()
        } else {
            FreeBimoduleResolution::builtin_jordan(Arc::new(Algebra::jordan(6))).unwrap()
        };
        let bar = BarComplex::new(res.algebra_arc());
        let plain = CupEngine::new(&res, &bar, ComparisonOptions::default());
        let other = CupEngine::new(
            &res,
            &bar,
            ComparisonOptions { seed_paper_maps: false, g_strategy: LiftStrategy::Perturbed { seed } },
        );
        for (p, q) in [(1, 1), (1, 2), (2, 1), (2, 2)] {
            let a = plain.verify_braided_commutativity(p, q).unwrap();
            let b = other.verify_braided_commutativity(p, q).unwrap();
            prop_assert!(b.passed());
            prop_assert_eq!(a.rows, b.rows);
        }
    }
}

#[test]
fn presentations_are_confluent() {
    for alg in [Algebra::jordan(8), Algebra::super_jordan(8)] {
        let report = alg.complete_overlaps(8);
        assert!(report.confluent);
        assert!(report.ambiguities.iter().all(|a| a.resolves()));
    }
    assert_eq!(Algebra::super_jordan(8).complete_overlaps(8).ambiguities.len(), 2);
}

#[test]
fn bimonoid_axioms_through_degree_five() {
    for alg in [Algebra::jordan(10), Algebra::super_jordan(10)] {
        let report = braidcoh_core::braided::check_bimonoid_axioms(&alg, 5).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
    }
}

#[test]
fn resolutions_through_internal_degree_eight() {
    let resolutions = [
        FreeBimoduleResolution::builtin_jordan(Arc::new(Algebra::jordan(8))).unwrap(),
        FreeBimoduleResolution::builtin_super_jordan(Arc::new(Algebra::super_jordan(8)), 9).unwrap(),
    ];
    for res in &resolutions {
        let report = validate(res, 8).unwrap();
        assert!(report.passed(), "{}: {:?}", res.name(), report.failures);
        for check in ["d^2 = 0", "t-equivariance", "exactness"] {
            assert!(!report.failed(check));
        }
    }
}

#[test]
fn broken_t_action_is_caught() {
    let res = FreeBimoduleResolution::builtin_super_jordan(Arc::new(Algebra::super_jordan(6)), 3).unwrap();
    let mut file = res.to_file();
    let terms = &mut file.degrees[1].generators[0].t_action;
    terms[0].coeff = format!("{}", terms[0].coeff.parse::<i64>().unwrap() * 2);
    let bad = FreeBimoduleResolution::from_file(res.algebra_arc().clone(), "bad", &file).unwrap();
    assert!(validate(&bad, 6).unwrap().failed("t-equivariance"));
}
