//! Acceptance criteria 1 to 10, exact arithmetic throughout.
//!
//! Each criterion prints one PASS or FAIL line. Criteria listed in
//! `KNOWN_RED` are expected to fail for a documented sign discrepancy; they
//! are reported but do not fail the target. Any other failure does.

use std::time::{Duration, Instant};

use dirac_core::dirac::{build_pairings, ScaledCheck};
use dirac_core::exactnum::Rat;
use dirac_core::exec;
use dirac_core::functor::{parity_shift, verify_functor_duality, verify_functor_motives, verify_functor_operators};
use dirac_core::gvect::SpaceObj;
use dirac_core::laplace::Symmetry;
use dirac_core::powers::{check_triangles, triangle_scalars, verify_pairing_diagrams, Duality, PowerKind};
use dirac_core::quat::{minus_idempotent, motive_suite, regular_object, split_compare, split_pm, split_suite, QuatAlgebra};
use dirac_core::runner::{PairingSpec, Profile};

/// Criteria that are red, with the discrepancy recorded in the decisions ledger.
const KNOWN_RED: [usize; 2] = [5, 9];

const RUN_SEEDS: [u64; 2] = [2024, 7];

const ALGEBRAS: [(i64, i64); 3] = [(1, 1), (-1, -1), (-1, -3)];

/// Write past the test harness capture so the lines show in a plain `cargo test`.
fn report(line: &str) {
    use std::io::Write;
    let _ = writeln!(std::io::stdout().lock(), "{line}");
}

struct Verdict {
    pass: bool,
    detail: String,
}

impl Verdict {
    fn new(failures: Vec<String>, summary: String) -> Verdict {
        if failures.is_empty() {
            Verdict { pass: true, detail: summary }
        } else {
            Verdict { pass: false, detail: format!("{summary}; failing: {}", failures.join("; ")) }
        }
    }
}

fn q(n: i64, d: i64) -> Rat {
    Rat::new(n, d).unwrap()
}

fn alg(a: i64, b: i64) -> QuatAlgebra {
    QuatAlgebra::from_ints(a, b).unwrap()
}

fn pairings() -> Vec<PairingSpec> {
    let mut out = Vec::new();
    for seed in RUN_SEEDS {
        for dim in 2..=6 {
            for profile in [Profile::Even, Profile::Odd, Profile::Mixed] {
                for symmetry in [Symmetry::Alternating, Symmetry::Symmetric] {
                    let p = PairingSpec::derive(seed, dim, profile, symmetry);
                    if p.feasible() {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

fn describe(p: &PairingSpec) -> String {
    format!("dim {} {} {} seed {}", p.dim, p.profile.name(), p.kind().as_str(), p.seed)
}

fn casimir_commutator() -> Verdict {
    let start = Instant::now();
    let specs = pairings();
    let results = exec::map_slice(&specs, |p| {
        let fam = p.family(6).unwrap();
        let mut bad = Vec::new();
        for n in 0..=4 {
            let c = fam.commutator(n).unwrap();
            // the measured scalar is absent only when the power is zero-dimensional
            if !c.pass() || c.measured.as_ref().is_some_and(|m| *m != c.predicted) {
                bad.push(format!("{} n={n}", describe(p)));
            }
        }
        bad
    });
    let mut failures: Vec<String> = results.into_iter().flatten().collect();
    let elapsed = start.elapsed();
    if elapsed > Duration::from_secs(30) {
        failures.push(format!("took {elapsed:?}"));
    }
    let alt = specs.iter().filter(|p| p.symmetry == Symmetry::Alternating).count();
    let seeds: Vec<String> = specs.iter().map(|p| p.seed.to_string()).collect();
    report(&format!("    pairing seeds: {}", seeds.join(" ")));
    Verdict::new(
        failures,
        format!("{} pairings ({alt} alternating), n = 0..4, {elapsed:.1?}", specs.len()),
    )
}

fn spectrum_positivity() -> Verdict {
    let specs: Vec<PairingSpec> = pairings().into_iter().filter(PairingSpec::positive).collect();
    let results = exec::map_slice(&specs, |p| {
        let fam = p.family(6).unwrap();
        (0..=4)
            .filter_map(|n| {
                let c = fam.spectrum(n).unwrap();
                (!c.pass()).then(|| format!("{} n={n}", describe(p)))
            })
            .collect::<Vec<_>>()
    });
    Verdict::new(results.into_iter().flatten().collect(), format!("{} pairings with νr > 0, n = 0..4", specs.len()))
}

fn poincare_scalars() -> Verdict {
    let mut jobs = Vec::new();
    for g in [2usize, 4] {
        for kind in [PowerKind::Alt, PowerKind::Sym] {
            for odd in [false, true] {
                for i in 0..=g {
                    jobs.push((g, kind, odd, i));
                }
            }
        }
    }
    let results = exec::map_slice(&jobs, |&(g, kind, odd, i)| {
        let v = if odd { SpaceObj::odd("V", "v", g) } else { SpaceObj::even("V", "v", g) };
        let d = Duality::new(&v, g, kind).unwrap();
        let r = check_triangles(&d, i).unwrap();
        let formula = triangle_scalars(kind, g, i, &v.rank());
        let ok = r.pass() && (r.first.predicted.clone(), r.second.predicted.clone()) == formula;
        (!ok).then(|| format!("g={g} {kind} odd={odd} i={i}"))
    });
    let failures: Vec<String> = results.into_iter().flatten().collect();
    Verdict::new(failures, format!("{} triangle pairs", jobs.len()))
}

fn pentagons() -> Verdict {
    let mut jobs = Vec::new();
    for g in [2usize, 4] {
        for (kind, odd) in [(PowerKind::Alt, false), (PowerKind::Sym, true)] {
            for i in 0..=g {
                jobs.push((g, kind, odd, i));
            }
        }
    }
    let results = exec::map_slice(&jobs, |&(g, kind, odd, i)| {
        let v = if odd { SpaceObj::odd("V", "v", g) } else { SpaceObj::even("V", "v", g) };
        let r = verify_pairing_diagrams(&v, i, g, kind).unwrap();
        let bad: Vec<String> = r.checks.iter().filter(|c| !c.pass).map(|c| format!("g={g} {kind} i={i} {}", c.label)).collect();
        (r.checks.len(), bad)
    });
    let count: usize = results.iter().map(|r| r.0).sum();
    Verdict::new(results.into_iter().flat_map(|r| r.1).collect(), format!("{count} diagrams"))
}

fn square_roots() -> Verdict {
    let bases = [
        (PowerKind::Alt, SpaceObj::even("V", "v", 2), 1, q(1, 2)),
        (PowerKind::Alt, SpaceObj::even("V", "v", 4), 2, q(-1, 12)),
        (PowerKind::Sym, SpaceObj::odd("V", "v", 4), 2, q(-1, 12)),
    ];
    let mut failures = Vec::new();
    let mut count = 0;
    for (kind, v, i, rho) in bases {
        let s = build_pairings(&v, i, kind).unwrap();
        if *s.rho() != rho {
            failures.push(format!("{kind} dim {} ρ = {} against {rho}", v.dim(), s.rho()));
        }
        for n in 2..=4 {
            let report = s.verify_square_root(n).unwrap();
            let reading = report.defining();
            let parts: [(&str, Option<&ScaledCheck>); 2] = [("(1)", Some(&reading.first)), ("(2)", reading.second.as_ref())];
            for (part, check) in parts {
                count += 1;
                match check {
                    Some(c) if c.pass() => {}
                    Some(c) => failures.push(format!(
                        "{kind} dim {} i={i} n={n} part {part}: measured {} against {}",
                        v.dim(),
                        c.measured.as_ref().map_or("none".into(), |m| m.to_string()),
                        c.predicted
                    )),
                    None => failures.push(format!("{kind} dim {} n={n} part {part} missing", v.dim())),
                }
            }
        }
    }
    Verdict::new(failures, format!("{count} squares"))
}

fn kernel_dimensions() -> Verdict {
    let results = exec::map_slice(&ALGEBRAS, |&(a, b)| {
        let start = Instant::now();
        let s = motive_suite(&regular_object(&alg(a, b))).unwrap();
        let mut bad = Vec::new();
        for n in 1..=3 {
            for (k, expected) in [(2 * n, 2 * n + 1), (2 * n + 1, 4 * n + 4)] {
                match s.motive_model(k) {
                    Ok(m) if m.dim() == expected && m.matches_nullspace() && (k == 2 || m.kernel.is_some()) => {}
                    Ok(m) => bad.push(format!("({a},{b}) M{k} dim {} nullspace {}", m.dim(), m.matches_nullspace())),
                    Err(e) => bad.push(format!("({a},{b}) M{k}: {e}")),
                }
            }
        }
        let elapsed = start.elapsed();
        if elapsed > Duration::from_secs(120) {
            bad.push(format!("({a},{b}) took {elapsed:?}"));
        }
        bad
    });
    Verdict::new(results.into_iter().flatten().collect(), "3 algebras, M2..M7".into())
}

fn split_weights() -> Verdict {
    let s = split_suite().unwrap();
    let failures = (1..=3)
        .filter_map(|n| {
            let r = split_compare(&s, n).unwrap();
            (!r.pass()).then(|| format!("n={n}: {:?} / {:?}", r.even.measured, r.odd.measured))
        })
        .collect();
    Verdict::new(failures, "M2..M7 for (1,1)".into())
}

fn quaternionic_structure() -> Verdict {
    let mut failures = Vec::new();
    for (a, b) in ALGEBRAS {
        let e = minus_idempotent(&alg(a, b)).unwrap();
        if e.block_ranks != (9, 1) || !e.idempotent || !e.chi_multiplicative {
            failures.push(format!("({a},{b}) e₋: ranks {:?}", e.block_ranks));
        }
        let s = motive_suite(&regular_object(&alg(a, b))).unwrap();
        let dims = (s.pm.plus.image.dim(), s.pm.minus.image.dim());
        if dims != (3, 3) {
            failures.push(format!("({a},{b}) ± dims {dims:?}"));
        }
        if !split_pm(&s.object).unwrap().chi_checks(&s.object).unwrap().iter().all(|c| c.pass) {
            failures.push(format!("({a},{b}) χ does not act on X₋ as a scalar"));
        }
        if s.minus_to_trace_zero(&s.alg().sample_units(6)).unwrap().is_none() {
            failures.push(format!("({a},{b}) no equivariant isomorphism X₋ → B₀"));
        }
    }
    Verdict::new(failures, "3 algebras".into())
}

fn functoriality() -> Verdict {
    let f = parity_shift();
    let mut failures = Vec::new();
    let mut rows = 0;
    for i in [1usize, 2] {
        let g = 2 * i;
        let v = SpaceObj::even("V", "v", g);
        let suite = build_pairings(&v, i, PowerKind::Alt).unwrap();
        for n in 1..=3 {
            let r = verify_functor_operators(&f, &suite, n).unwrap();
            rows += r.rows.len();
            for row in r.failures() {
                failures.push(format!("i={i} n={n} {} measured {} predicted {}", row.label, row.measured.as_ref().map_or("no scalar".to_string(), |m| m.to_string()), row.predicted));
            }
        }
        let d = verify_functor_duality(&f, &v, i, g).unwrap();
        for row in d.rows.iter().filter(|r| r.label.contains('·')) {
            rows += 1;
            if !row.pass() {
                failures.push(format!("{} predicted {}", row.label, row.predicted));
            }
        }
    }
    for (a, b) in ALGEBRAS {
        let r = verify_functor_motives(&f, &regular_object(&alg(a, b)), 5, 3).unwrap();
        if !r.models_pass() {
            failures.push(format!("({a},{b}) models {:?} minus part {}", r.models, r.minus_part));
        }
        rows += r.operators.rows.len();
        failures.extend(r.operators.failures().iter().map(|row| format!("({a},{b}) restricted {}", row.label)));
    }
    Verdict::new(failures, format!("{rows} rows, M1..M5 on 3 algebras"))
}

fn non_splitting() -> Verdict {
    let mut failures = Vec::new();
    for (a, b) in [(-1, -1), (1, 1)] {
        let s = motive_suite(&regular_object(&alg(a, b))).unwrap();
        let m3 = s.motive_model(3).unwrap();
        let c = s.intertwiner_algebra(&m3).unwrap();
        if c.dim != 4 {
            failures.push(format!("({a},{b}) commutant has dimension {}", c.dim));
        }
        let division = a < 0 && b < 0;
        if division && (c.splits() || c.ramified.is_empty()) {
            failures.push(format!("({a},{b}) found a splitting"));
        }
        if !division {
            match &c.idempotent {
                Some(e) if e.mul(e).unwrap() == *e && 2 * e.rank() == m3.dim() => {}
                _ => failures.push(format!("({a},{b}) no reduced-rank-1 idempotent")),
            }
        }
    }
    Verdict::new(failures, "(-1,-1) ramified, (1,1) split".into())
}

type Criterion = (&'static str, fn() -> Verdict);

#[test]
fn acceptance_criteria() {
    let criteria: [Criterion; 10] = [
        ("Casimir commutator", casimir_commutator),
        ("spectrum positivity", spectrum_positivity),
        ("duality triangle scalars", poincare_scalars),
        ("pairing pentagons", pentagons),
        ("Dirac square roots", square_roots),
        ("kernel dimensions", kernel_dimensions),
        ("split torus weights", split_weights),
        ("quaternionic structure", quaternionic_structure),
        ("functoriality signs", functoriality),
        ("division algebra does not split", non_splitting),
    ];
    let verdicts = exec::map_slice(&criteria, |(_, f)| {
        let start = Instant::now();
        (f(), start.elapsed())
    });
    let mut unexpected = Vec::new();
    for (k, ((name, _), (v, elapsed))) in criteria.iter().zip(&verdicts).enumerate() {
        let id = k + 1;
        let status = if v.pass { "PASS" } else { "FAIL" };
        let note = if !v.pass && KNOWN_RED.contains(&id) { " [known red]" } else { "" };
        report(&format!("criterion {id:2} {status}{note} {name} ({elapsed:.1?}): {}", v.detail));
        if v.pass && KNOWN_RED.contains(&id) {
            report(&format!("criterion {id:2} is listed as known red but passes"));
        }
        if !v.pass && !KNOWN_RED.contains(&id) {
            unexpected.push(id);
        }
    }
    assert!(unexpected.is_empty(), "criteria failed: {unexpected:?}");
}
