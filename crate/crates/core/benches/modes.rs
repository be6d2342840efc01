//! Parallel against sequential execution on representative exact workloads.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use dirac_core::exec::{self, ExecMode};
use dirac_core::gvect::SpaceObj;
use dirac_core::laplace::Symmetry;
use dirac_core::powers::{check_triangles, Duality, PowerKind};
use dirac_core::runner::{self, PairingSpec, Profile, Suite, SuiteConfig};

const MODES: [(ExecMode, &str); 2] = [(ExecMode::Parallel, "parallel"), (ExecMode::Sequential, "sequential")];

fn commutator(c: &mut Criterion) {
    let spec = PairingSpec::derive(0, 4, Profile::Even, Symmetry::Symmetric);
    let mut group = c.benchmark_group("commutator-sym-dim4-n3");
    group.sample_size(10);
    for (mode, name) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            exec::set_mode(mode);
            b.iter(|| spec.family(5).unwrap().commutator(3).unwrap().pass())
        });
    }
    group.finish();
}

fn triangles(c: &mut Criterion) {
    let v = SpaceObj::even("V", "v", 4);
    let mut group = c.benchmark_group("triangles-alt-dim4-g4");
    group.sample_size(10);
    for (mode, name) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            exec::set_mode(mode);
            b.iter(|| {
                let dual = Duality::new(&v, 4, PowerKind::Alt).unwrap();
                (1..=3).all(|i| check_triangles(&dual, i).unwrap().pass())
            })
        });
    }
    group.finish();
}

fn casimir_suite(c: &mut Criterion) {
    let cfg = SuiteConfig { suites: vec![Suite::Casimir], dims: vec![2, 3], n_max: 3, ..SuiteConfig::default() };
    let mut group = c.benchmark_group("casimir-suite");
    group.sample_size(10);
    for (mode, name) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| {
            exec::set_mode(mode);
            b.iter(|| runner::run(&cfg).unwrap().len())
        });
    }
    group.finish();
}

criterion_group!(benches, commutator, triangles, casimir_suite);
criterion_main!(benches);
