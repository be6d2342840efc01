use std::time::Instant;

use dirac_core::exactnum::Rat;
use dirac_core::powers::PowerKind;
use dirac_core::quat::*;

fn alg(a: i64, b: i64) -> QuatAlgebra {
    QuatAlgebra::from_ints(a, b).unwrap()
}

fn q(s: &str) -> Rat {
    let (n, d) = s.split_once('/').unwrap_or((s, "1"));
    Rat::new(n.parse().unwrap(), d.parse().unwrap()).unwrap()
}

#[test]
fn minus_idempotent_frozen_coordinates() {
    // basis order 1∨1, 1∨i, 1∨j, 1∨k, i∨i, i∨j, i∨k, j∨j, j∨k, k∨k
    let split: Vec<Rat> = ["1/4", "0", "0", "0", "-1/4", "0", "0", "-1/4", "0", "1/4"].map(q).to_vec();
    let hamilton: Vec<Rat> = ["1/4", "0", "0", "0", "1/4", "0", "0", "1/4", "0", "1/4"].map(q).to_vec();
    assert_eq!(minus_idempotent(&alg(1, 1)).unwrap().sym_coords, split);
    assert_eq!(minus_idempotent(&alg(-1, -1)).unwrap().sym_coords, hamilton);
}

#[test]
fn flavors_of_the_regular_objects() {
    assert_eq!(regular_object(&alg(1, 1)).kind(), PowerKind::Alt);
    assert_eq!(odd_regular_object(&alg(1, 1)).kind(), PowerKind::Sym);
}

#[test]
fn motive_dimensions_up_to_weight_seven() {
    for (a, b) in [(1, 1), (-1, -1), (-1, -3)] {
        let start = Instant::now();
        let s = motive_suite(&regular_object(&alg(a, b))).unwrap();
        let samples = s.alg().sample_units(3);
        for n in 1..=3 {
            assert!(s.restriction_checks(n).unwrap().iter().all(|c| c.pass), "({a},{b}) n={n}");
            let even = s.motive_model(2 * n).unwrap();
            let odd = s.motive_model(2 * n + 1).unwrap();
            assert_eq!(even.dim(), 2 * n + 1, "({a},{b}) M_{}", 2 * n);
            assert_eq!(odd.dim(), 4 * n + 4, "({a},{b}) M_{}", 2 * n + 1);
            for m in [&even, &odd] {
                assert!(m.matches_nullspace());
                assert!(s.equivariance_check(&m.projector, &m.factors, &m.factors, &samples).unwrap());
            }
            let quad = s.minus.quadruple_on(n, s.minus.flavor()).unwrap();
            let mut cod = vec![Factor::MinusPower(n - 1), Factor::VDual, Factor::Line];
            assert!(s.equivariance_check(&quad.d_low, &odd.factors, &cod, &samples).unwrap());
            if let Some(lap) = quad.laplace {
                cod = vec![Factor::MinusPower(n - 2), Factor::Line];
                assert!(s.equivariance_check(&lap, &even.factors, &cod, &samples).unwrap());
            }
        }
        assert!(start.elapsed().as_secs() < 120);
    }
}

#[test]
fn odd_object_gives_the_same_dimensions() {
    let s = motive_suite(&odd_regular_object(&alg(-1, -3))).unwrap();
    for k in 1..=5 {
        let expected = if k % 2 == 0 { k + 1 } else { 2 * k + 2 };
        assert_eq!(s.motive_model(k).unwrap().dim(), expected);
    }
}

#[test]
fn split_weights_up_to_weight_seven() {
    let s = split_suite().unwrap();
    for n in 1..=3 {
        let r = split_compare(&s, n).unwrap();
        assert!(r.pass(), "n={n}: {:?} / {:?}", r.even.measured, r.odd.measured);
    }
}

#[test]
fn minus_part_is_the_trace_zero_representation() {
    for (a, b) in [(1, 1), (-1, -1), (-1, -3)] {
        let s = motive_suite(&regular_object(&alg(a, b))).unwrap();
        let e = minus_idempotent(s.alg()).unwrap();
        assert_eq!(e.block_ranks, (9, 1));
        assert_eq!((s.pm.minus.image.dim(), s.pm.plus.image.dim()), (3, 3));
        assert!(s.minus_to_trace_zero(&s.alg().sample_units(4)).unwrap().is_some());
    }
}

#[test]
fn division_algebra_commutant_of_m3() {
    let s = motive_suite(&regular_object(&alg(-1, -3))).unwrap();
    let c = s.intertwiner_algebra(&s.motive_model(3).unwrap()).unwrap();
    assert_eq!(c.dim, 4);
    assert!(!c.splits());
    assert!(!c.ramified.is_empty());
}
