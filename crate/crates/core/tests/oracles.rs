//! Exact values frozen from an independent computer-algebra evaluation.
//!
//! The triangle table was produced by evaluating the binomial scalar formulas
//! with falling-factorial binomials in sympy. The engine side is the actual
//! composite of the duality maps, not the formula.

use dirac_core::dirac::rho_constant;
use dirac_core::exactnum::Rat;
use dirac_core::gvect::SpaceObj;
use dirac_core::powers::{power, verify_duality_scalar, PowerKind};

fn rat(s: &str) -> Rat {
    s.parse().unwrap()
}

fn kind(s: &str) -> PowerKind {
    match s {
        "alt" => PowerKind::Alt,
        _ => PowerKind::Sym,
    }
}

/// (parity, dim, kind, g, i, first scalar, second scalar)
const TRIANGLES: &[(&str, usize, &str, usize, usize, &str, &str)] = &[
    ("even", 1, "alt", 1, 0, "1", "1"),
    ("even", 1, "alt", 1, 1, "1", "1"),
    ("even", 1, "alt", 2, 0, "0", "1"),
    ("even", 1, "alt", 2, 1, "0", "0"),
    ("even", 1, "alt", 2, 2, "1", "0"),
    ("even", 1, "alt", 3, 0, "0", "1"),
    ("even", 1, "alt", 3, 1, "0", "-1/3"),
    ("even", 1, "alt", 3, 2, "-1/3", "0"),
    ("even", 1, "alt", 3, 3, "1", "0"),
    ("even", 1, "sym", 1, 0, "1", "1"),
    ("even", 1, "sym", 1, 1, "1", "1"),
    ("even", 1, "sym", 2, 0, "1", "1"),
    ("even", 1, "sym", 2, 1, "1", "1"),
    ("even", 1, "sym", 2, 2, "1", "1"),
    ("even", 1, "sym", 3, 0, "1", "1"),
    ("even", 1, "sym", 3, 1, "1", "1"),
    ("even", 1, "sym", 3, 2, "1", "1"),
    ("even", 1, "sym", 3, 3, "1", "1"),
    ("even", 2, "alt", 1, 0, "2", "1"),
    ("even", 2, "alt", 1, 1, "1", "2"),
    ("even", 2, "alt", 2, 0, "1", "1"),
    ("even", 2, "alt", 2, 1, "-1/2", "-1/2"),
    ("even", 2, "alt", 2, 2, "1", "1"),
    ("even", 2, "alt", 3, 0, "0", "1"),
    ("even", 2, "alt", 3, 1, "0", "0"),
    ("even", 2, "alt", 3, 2, "0", "0"),
    ("even", 2, "alt", 3, 3, "1", "0"),
    ("even", 2, "sym", 1, 0, "2", "1"),
    ("even", 2, "sym", 1, 1, "1", "2"),
    ("even", 2, "sym", 2, 0, "3", "1"),
    ("even", 2, "sym", 2, 1, "3/2", "3/2"),
    ("even", 2, "sym", 2, 2, "1", "3"),
    ("even", 2, "sym", 3, 0, "4", "1"),
    ("even", 2, "sym", 3, 1, "2", "4/3"),
    ("even", 2, "sym", 3, 2, "4/3", "2"),
    ("even", 2, "sym", 3, 3, "1", "4"),
    ("even", 3, "alt", 1, 0, "3", "1"),
    ("even", 3, "alt", 1, 1, "1", "3"),
    ("even", 3, "alt", 2, 0, "3", "1"),
    ("even", 3, "alt", 2, 1, "-1", "-1"),
    ("even", 3, "alt", 2, 2, "1", "3"),
    ("even", 3, "alt", 3, 0, "1", "1"),
    ("even", 3, "alt", 3, 1, "1/3", "1/3"),
    ("even", 3, "alt", 3, 2, "1/3", "1/3"),
    ("even", 3, "alt", 3, 3, "1", "1"),
    ("even", 3, "sym", 1, 0, "3", "1"),
    ("even", 3, "sym", 1, 1, "1", "3"),
    ("even", 3, "sym", 2, 0, "6", "1"),
    ("even", 3, "sym", 2, 1, "2", "2"),
    ("even", 3, "sym", 2, 2, "1", "6"),
    ("even", 3, "sym", 3, 0, "10", "1"),
    ("even", 3, "sym", 3, 1, "10/3", "5/3"),
    ("even", 3, "sym", 3, 2, "5/3", "10/3"),
    ("even", 3, "sym", 3, 3, "1", "10"),
    ("odd", 1, "alt", 1, 0, "-1", "1"),
    ("odd", 1, "alt", 1, 1, "1", "-1"),
    ("odd", 1, "alt", 2, 0, "1", "1"),
    ("odd", 1, "alt", 2, 1, "1", "1"),
    ("odd", 1, "alt", 2, 2, "1", "1"),
    ("odd", 1, "alt", 3, 0, "-1", "1"),
    ("odd", 1, "alt", 3, 1, "1", "-1"),
    ("odd", 1, "alt", 3, 2, "-1", "1"),
    ("odd", 1, "alt", 3, 3, "1", "-1"),
    ("odd", 1, "sym", 1, 0, "-1", "1"),
    ("odd", 1, "sym", 1, 1, "1", "-1"),
    ("odd", 1, "sym", 2, 0, "0", "1"),
    ("odd", 1, "sym", 2, 1, "0", "0"),
    ("odd", 1, "sym", 2, 2, "1", "0"),
    ("odd", 1, "sym", 3, 0, "0", "1"),
    ("odd", 1, "sym", 3, 1, "0", "1/3"),
    ("odd", 1, "sym", 3, 2, "1/3", "0"),
    ("odd", 1, "sym", 3, 3, "1", "0"),
    ("odd", 2, "alt", 1, 0, "-2", "1"),
    ("odd", 2, "alt", 1, 1, "1", "-2"),
    ("odd", 2, "alt", 2, 0, "3", "1"),
    ("odd", 2, "alt", 2, 1, "3/2", "3/2"),
    ("odd", 2, "alt", 2, 2, "1", "3"),
    ("odd", 2, "alt", 3, 0, "-4", "1"),
    ("odd", 2, "alt", 3, 1, "2", "-4/3"),
    ("odd", 2, "alt", 3, 2, "-4/3", "2"),
    ("odd", 2, "alt", 3, 3, "1", "-4"),
    ("odd", 2, "sym", 1, 0, "-2", "1"),
    ("odd", 2, "sym", 1, 1, "1", "-2"),
    ("odd", 2, "sym", 2, 0, "1", "1"),
    ("odd", 2, "sym", 2, 1, "-1/2", "-1/2"),
    ("odd", 2, "sym", 2, 2, "1", "1"),
    ("odd", 2, "sym", 3, 0, "0", "1"),
    ("odd", 2, "sym", 3, 1, "0", "0"),
    ("odd", 2, "sym", 3, 2, "0", "0"),
    ("odd", 2, "sym", 3, 3, "1", "0"),
    ("odd", 3, "alt", 1, 0, "-3", "1"),
    ("odd", 3, "alt", 1, 1, "1", "-3"),
    ("odd", 3, "alt", 2, 0, "6", "1"),
    ("odd", 3, "alt", 2, 1, "2", "2"),
    ("odd", 3, "alt", 2, 2, "1", "6"),
    ("odd", 3, "alt", 3, 0, "-10", "1"),
    ("odd", 3, "alt", 3, 1, "10/3", "-5/3"),
    ("odd", 3, "alt", 3, 2, "-5/3", "10/3"),
    ("odd", 3, "alt", 3, 3, "1", "-10"),
    ("odd", 3, "sym", 1, 0, "-3", "1"),
    ("odd", 3, "sym", 1, 1, "1", "-3"),
    ("odd", 3, "sym", 2, 0, "3", "1"),
    ("odd", 3, "sym", 2, 1, "-1", "-1"),
    ("odd", 3, "sym", 2, 2, "1", "3"),
    ("odd", 3, "sym", 3, 0, "-1", "1"),
    ("odd", 3, "sym", 3, 1, "1/3", "-1/3"),
    ("odd", 3, "sym", 3, 2, "-1/3", "1/3"),
    ("odd", 3, "sym", 3, 3, "1", "-1"),
];

#[test]
fn duality_triangles_match_the_frozen_table() {
    let mut checked = 0;
    for &(parity, dim, k, g, i, first, second) in TRIANGLES {
        let v = if parity == "even" { SpaceObj::even("V", "v", dim) } else { SpaceObj::odd("V", "v", dim) };
        let report = verify_duality_scalar(&v, i, g, kind(k)).unwrap();
        let label = format!("{parity} dim {dim} {k} g={g} i={i}");
        for (check, frozen) in [(&report.first, first), (&report.second, second)] {
            assert_eq!(check.predicted, rat(frozen), "{label}: predicted scalar");
            if !check.vacuous {
                assert_eq!(check.computed, Some(rat(frozen)), "{label}: composite");
                checked += 1;
            }
        }
    }
    assert!(checked > 150, "only {checked} non-vacuous composites");
}

#[test]
fn rho_matches_the_frozen_values() {
    let cases: [(PowerKind, usize, usize, Rat, Rat, Rat); 8] = [
        (PowerKind::Alt, 2, 1, rat("2"), rat("1"), rat("1/2")),
        (PowerKind::Alt, 2, 1, rat("2"), rat("-1"), rat("-1/2")),
        (PowerKind::Alt, 4, 2, rat("4"), rat("1"), rat("-1/12")),
        (PowerKind::Sym, 4, 2, rat("-4"), rat("1"), rat("-1/12")),
        (PowerKind::Sym, 2, 1, rat("-2"), rat("1"), rat("1/2")),
        (PowerKind::Alt, 6, 3, rat("6"), rat("1"), rat("1/60")),
        (PowerKind::Sym, 6, 3, rat("-6"), rat("1"), rat("1/60")),
        (PowerKind::Alt, 4, 2, rat("5/2"), rat("3"), rat("-1/512")),
    ];
    for (k, g, i, r, rl, expected) in cases {
        assert_eq!(rho_constant(g, i, &r, &rl, k), expected, "{k:?} g={g} i={i} r={r}");
    }
}

/// (even count, odd count, (dim ∧ⁿ, dim ∨ⁿ) for n = 0..5)
type PowerDims = (usize, usize, [(usize, usize); 5]);

#[test]
fn super_power_dimensions() {
    let table: &[PowerDims] = &[
        (2, 0, [(1, 1), (2, 2), (1, 3), (0, 4), (0, 5)]),
        (0, 2, [(1, 1), (2, 2), (3, 1), (4, 0), (5, 0)]),
        (1, 1, [(1, 1), (2, 2), (2, 2), (2, 2), (2, 2)]),
        (2, 1, [(1, 1), (3, 3), (4, 5), (4, 7), (4, 9)]),
        (3, 2, [(1, 1), (5, 5), (12, 13), (20, 25), (28, 41)]),
    ];
    for &(p, q, dims) in table {
        let parities: Vec<u8> = std::iter::repeat_n(0, p).chain(std::iter::repeat_n(1, q)).collect();
        let v = SpaceObj::with_parities("V", "v", &parities);
        for (n, (alt, sym)) in dims.into_iter().enumerate() {
            assert_eq!(power(&v, n, PowerKind::Alt).dim(), alt, "∧^{n} of ({p}|{q})");
            assert_eq!(power(&v, n, PowerKind::Sym).dim(), sym, "∨^{n} of ({p}|{q})");
        }
    }
}
