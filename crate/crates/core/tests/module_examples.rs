//! Hand-derived values, one or two per module, through the public API only.

use dirac_core::dirac::build_pairings;
use dirac_core::exactnum::{mat_kernel, mat_mul, solve_left_inverse, Rat, RatMatrix};
use dirac_core::functor::{measure_signs, parity_shift};
use dirac_core::gvect::SpaceObj;
use dirac_core::laplace::{casimir, Pairing};
use dirac_core::powers::PowerKind;
use dirac_core::quat::{Quat, QuatAlgebra};
use dirac_core::symalg::{averager, coset_reps_pair, split_idempotent, AveragerSpec, Character, Perm};

fn int(n: i64) -> Rat {
    Rat::from_int(n)
}

#[test]
fn dense_matrix_examples() {
    let a = RatMatrix::from_i64_rows(&[&[1, 2], &[3, 4]]);
    let col = RatMatrix::from_i64_rows(&[&[0], &[1]]);
    assert_eq!(mat_mul(&a, &col).unwrap(), RatMatrix::from_i64_rows(&[&[2], &[4]]));

    let kernel = mat_kernel(&RatMatrix::from_i64_rows(&[&[1, 2], &[2, 4]]));
    assert_eq!(kernel.len(), 1);
    assert_eq!(kernel[0].get(0, 0), &(kernel[0].get(1, 0) * &int(-2)));

    let ones = RatMatrix::from_i64_rows(&[&[1], &[1]]);
    assert_eq!(solve_left_inverse(&ones).unwrap(), RatMatrix::from_i64_rows(&[&[1, 0]]));
}

#[test]
fn coset_representatives_for_two_points() {
    let reps = coset_reps_pair(2);
    assert_eq!(reps.len(), 2);
    assert!(reps[&(1, 2)].is_identity());
    assert_eq!(reps[&(2, 1)], Perm::transposition(2, 1, 2));
}

#[test]
fn symmetrizer_and_antisymmetrizer_traces() {
    let x = SpaceObj::even("X", "x", 2);
    for (character, trace) in [(Character::Trivial, 3), (Character::Sign, 1)] {
        let e = averager(&AveragerSpec::full(2, character), &x, 2).unwrap();
        assert_eq!(e.mat().trace().unwrap(), int(trace));
        assert_eq!(split_idempotent(&e, "image").unwrap().image.dim(), trace as usize);
    }
}

#[test]
fn casimir_contractions() {
    let cases = [
        (SpaceObj::even("X", "x", 2), RatMatrix::from_i64_rows(&[&[0, 1], &[-1, 0]]), -2),
        (SpaceObj::even("X", "x", 3), RatMatrix::identity(3), 3),
        (SpaceObj::even("X", "x", 2), RatMatrix::from_i64_rows(&[&[0, 1], &[1, 0]]), 2),
    ];
    for (x, gram, expected) in cases {
        let psi = Pairing::from_gram(&x, &gram).unwrap();
        let c = casimir(&psi).unwrap();
        let contracted = psi.mor().compose(&c).unwrap();
        assert_eq!(contracted.as_scalar(), Some(int(expected)));
    }
}

#[test]
fn laplace_kernel_on_the_even_middle_power() {
    let suite = build_pairings(&SpaceObj::even("V", "v", 4), 2, PowerKind::Alt).unwrap();
    let kernels = suite.kernel_suite(2).unwrap();
    let laplace = kernels.laplace.expect("degree 2 has a Laplace kernel");
    assert_eq!(laplace.domain_dim, 21);
    assert_eq!(laplace.dim(), 20);
    assert!(laplace.kernel.matches_nullspace);
}

#[test]
fn reduced_norms() {
    let split = QuatAlgebra::from_ints(1, 1).unwrap();
    assert_eq!(split.norm(&Quat::from_ints([1, 1, 0, 0])), int(0));
    let hamilton = QuatAlgebra::from_ints(-1, -1).unwrap();
    assert_eq!(hamilton.norm(&Quat::from_ints([1, 1, 1, 1])), int(4));
    assert!(split.is_split().unwrap());
    assert!(!hamilton.is_split().unwrap());
}

#[test]
fn parity_shift_signs_on_an_even_plane() {
    let signs = measure_signs(&parity_shift(), &SpaceObj::even("V", "v", 2)).unwrap();
    assert_eq!((signs.epsilon, signs.eta), (int(-1), int(-1)));
}
