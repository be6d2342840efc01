//! Batch runner: enumerates verification cases from a configuration and
//! executes them on the work pool.
//!
//! Cases are identified by a key such as `casimir/d4/mixed/sym/n2`. The case
//! list is sorted by key, and results come back in that order regardless of
//! which worker finished first.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::check::MapCheck;
use crate::dirac::{build_pairings, DiracSuite, KernelReport};
use crate::error::{Error, Result};
use crate::exactnum::Rat;
use crate::exec;
use crate::functor::{identity_functor, measure_signs, parity_shift, verify_functor_duality, verify_functor_motives, verify_functor_operators, SignRow};
use crate::gvect::{Parity, SpaceObj};
use crate::laplace::{random_perfect_pairing, OperatorFamily, Symmetry};
use crate::powers::{verify_duality_scalar, verify_pairing_diagrams, PowerKind, ScalarCheck};
use crate::quat::{minus_idempotent, motive_suite, odd_regular_object, regular_object, split_compare, split_pm, split_suite, QuatAlgebra, WeightReport};

/// Largest base dimension accepted without `allow_large`.
pub const DIM_GUARD: usize = 6;

/// Largest degree for which the quaternionic and functor suites are run.
const QUAT_N_CAP: usize = 3;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Suite {
    Duality,
    Casimir,
    Spectrum,
    DiracSquare,
    Kernels,
    Quaternion,
    SplitCompare,
    Functoriality,
}

impl Suite {
    pub const ALL: [Suite; 8] = [
        Suite::Duality,
        Suite::Casimir,
        Suite::Spectrum,
        Suite::DiracSquare,
        Suite::Kernels,
        Suite::Quaternion,
        Suite::SplitCompare,
        Suite::Functoriality,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Duality => "duality",
            Suite::Casimir => "casimir",
            Suite::Spectrum => "spectrum",
            Suite::DiracSquare => "dirac-square",
            Suite::Kernels => "kernels",
            Suite::Quaternion => "quaternion",
            Suite::SplitCompare => "split-compare",
            Suite::Functoriality => "functoriality",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Suite::ALL
            .into_iter()
            .find(|x| x.name() == s.trim())
            .ok_or_else(|| Error::Config(format!("unknown suite {s:?}")))
    }
}

/// Structure constants `(a, b)` of a quaternion algebra, both nonzero integers.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct QuatParams {
    pub a: i64,
    pub b: i64,
}

impl QuatParams {
    pub const DEFAULT: [QuatParams; 3] = [
        QuatParams { a: 1, b: 1 },
        QuatParams { a: -1, b: -1 },
        QuatParams { a: -1, b: -3 },
    ];

    fn algebra(self) -> Result<QuatAlgebra> {
        QuatAlgebra::from_ints(self.a, self.b)
    }
}

impl fmt::Display for QuatParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{}", self.a, self.b)
    }
}

impl FromStr for QuatParams {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Config(format!("expected two nonzero integers a,b, got {s:?}"));
        let (a, b) = s.split_once(',').ok_or_else(bad)?;
        let a: i64 = a.trim().parse().map_err(|_| bad())?;
        let b: i64 = b.trim().parse().map_err(|_| bad())?;
        if a == 0 || b == 0 {
            return Err(bad());
        }
        Ok(QuatParams { a, b })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SuiteConfig {
    pub suites: Vec<Suite>,
    pub dims: Vec<usize>,
    pub n_max: usize,
    pub quaternion_params: Vec<QuatParams>,
    pub seed: u64,
    pub allow_large: bool,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            suites: Suite::ALL.to_vec(),
            dims: vec![2, 4],
            n_max: 4,
            quaternion_params: QuatParams::DEFAULT.to_vec(),
            seed: 0,
            allow_large: false,
        }
    }
}

impl SuiteConfig {
    pub fn validate(&self) -> Result<()> {
        if self.suites.is_empty() {
            return Err(Error::Config("no suite selected".into()));
        }
        if self.n_max == 0 {
            return Err(Error::Config("n_max must be at least 1".into()));
        }
        if self.dims.is_empty() {
            return Err(Error::Config("no dimension selected".into()));
        }
        if let Some(d) = self.dims.iter().find(|&&d| d == 0) {
            return Err(Error::Config(format!("dimension {d} is not allowed")));
        }
        if !self.allow_large {
            if let Some(d) = self.dims.iter().find(|&&d| d > DIM_GUARD) {
                return Err(Error::Config(format!("dimension {d} exceeds {DIM_GUARD}; pass allow_large to run it")));
            }
        }
        if self.suites.contains(&Suite::Quaternion) && self.quaternion_params.is_empty() {
            return Err(Error::Config("the quaternion suite needs at least one (a,b)".into()));
        }
        Ok(())
    }

    fn sorted_dims(&self) -> Vec<usize> {
        let mut d = self.dims.clone();
        d.sort_unstable();
        d.dedup();
        d
    }

    fn sorted_quats(&self) -> Vec<QuatParams> {
        let mut q = self.quaternion_params.clone();
        q.sort_unstable();
        q.dedup();
        q
    }
}

/// Parity pattern of a base object.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Profile {
    Even,
    Odd,
    /// Alternating even and odd basis vectors, starting with even.
    Mixed,
}

impl Profile {
    pub fn name(self) -> &'static str {
        match self {
            Profile::Even => "even",
            Profile::Odd => "odd",
            Profile::Mixed => "mixed",
        }
    }

    pub fn space(self, dim: usize) -> SpaceObj {
        let parities: Vec<Parity> = (0..dim)
            .map(|k| match self {
                Profile::Even => 0,
                Profile::Odd => 1,
                Profile::Mixed => (k % 2) as Parity,
            })
            .collect();
        SpaceObj::with_parities("V", "v", &parities)
    }

    fn code(self) -> u64 {
        match self {
            Profile::Even => 0,
            Profile::Odd => 1,
            Profile::Mixed => 2,
        }
    }
}

/// A random perfect pairing, reproducible from its seed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct PairingSpec {
    pub dim: usize,
    pub profile: Profile,
    pub symmetry: Symmetry,
    pub seed: u64,
}

impl PairingSpec {
    /// Seed for the pairing with the given shape under a run seed.
    pub fn derive(run_seed: u64, dim: usize, profile: Profile, symmetry: Symmetry) -> PairingSpec {
        let sym = if symmetry == Symmetry::Alternating { 0 } else { 1 };
        let mut z = run_seed ^ ((dim as u64) << 8 | profile.code() << 4 | sym);
        z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
        PairingSpec { dim, profile, symmetry, seed: z ^ (z >> 31) }
    }

    pub fn kind(&self) -> PowerKind {
        self.symmetry.kind().expect("random pairings are alternating or symmetric")
    }

    /// A perfect pairing of this symmetry exists on the base object.
    pub fn feasible(&self) -> bool {
        let skew = match self.kind() {
            PowerKind::Alt => 0,
            PowerKind::Sym => 1,
        };
        self.profile.space(self.dim).parities().iter().filter(|&&p| p == skew).count() % 2 == 0
    }

    /// `ν·r > 0`, the sign condition for the spectrum certificates.
    pub fn positive(&self) -> bool {
        (self.kind().nu() * self.profile.space(self.dim).rank()).is_positive()
    }

    pub fn family(&self, max_degree: usize) -> Result<OperatorFamily> {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        let psi = random_perfect_pairing(&self.profile.space(self.dim), self.symmetry, &mut rng)?;
        Ok(OperatorFamily::new(&psi, self.kind(), max_degree))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum KernelOp {
    Laplace,
    DiracBarTop,
    DiracLow,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum QuatCheck {
    Idempotent,
    PlusMinus(Profile),
    MinusPart,
    Motive(usize),
    Commutant,
}

#[derive(Clone, Debug)]
enum Task {
    Triangles { dim: usize, profile: Profile, kind: PowerKind, i: usize },
    Pentagons { dim: usize, profile: Profile, kind: PowerKind, i: usize },
    Commutator { pairing: PairingSpec, n: usize },
    Spectrum { pairing: PairingSpec, n: usize },
    Square { dim: usize, profile: Profile, kind: PowerKind, second: bool, n: usize },
    Kernel { dim: usize, profile: Profile, kind: PowerKind, op: KernelOp, n: usize },
    Quat { params: QuatParams, check: QuatCheck },
    Split { n: usize },
    FunctorSigns,
    FunctorDuality { g: usize, i: usize, per_map: bool },
    FunctorOperators { i: usize, n: usize },
    FunctorMotives { params: QuatParams, k_max: usize, n_max: usize },
}

/// One unit of work, not yet executed.
#[derive(Clone, Debug)]
pub struct Case {
    pub suite: Suite,
    pub key: String,
    /// Short label naming the identity being checked.
    pub anchor: &'static str,
    pub params: Vec<(String, String)>,
    task: Task,
}

/// Outcome of one case.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseRecord {
    pub suite: Suite,
    pub key: String,
    pub anchor: &'static str,
    pub params: Vec<(String, String)>,
    pub predicted: String,
    pub computed: String,
    pub pass: bool,
    /// First differing entry, or the reason the case could not be read.
    pub witness: Option<String>,
    pub elapsed: Duration,
}

fn kv(pairs: &[(&str, String)]) -> Vec<(String, String)> {
    pairs.iter().map(|(k, v)| (k.to_string(), v.clone())).collect()
}

fn kind_tag(kind: PowerKind) -> &'static str {
    match kind {
        PowerKind::Alt => "alt",
        PowerKind::Sym => "sym",
    }
}

/// The top power of `V` is one-dimensional: alternating on even `V`, symmetric on odd `V`.
fn invertible_top(profile: Profile, kind: PowerKind) -> bool {
    matches!((profile, kind), (Profile::Even, PowerKind::Alt) | (Profile::Odd, PowerKind::Sym))
}

fn duality_cases(cfg: &SuiteConfig, out: &mut Vec<Case>) {
    for d in cfg.sorted_dims() {
        for profile in [Profile::Even, Profile::Odd] {
            for kind in [PowerKind::Alt, PowerKind::Sym] {
                let invertible = invertible_top(profile, kind);
                // without an invertible top the tensor factors grow too fast past g = 4
                if !invertible && d > 4 {
                    continue;
                }
                for i in 0..=d {
                    let params = kv(&[
                        ("dim", d.to_string()),
                        ("parity", profile.name().into()),
                        ("kind", kind_tag(kind).into()),
                        ("g", d.to_string()),
                        ("i", i.to_string()),
                    ]);
                    let stem = format!("duality/g{d:02}/{}/{}/i{i:02}", profile.name(), kind_tag(kind));
                    out.push(Case {
                        suite: Suite::Duality,
                        key: format!("{stem}/triangles"),
                        anchor: "duality-triangle-scalars",
                        params: params.clone(),
                        task: Task::Triangles { dim: d, profile, kind, i },
                    });
                    if invertible {
                        out.push(Case {
                            suite: Suite::Duality,
                            key: format!("{stem}/pentagons"),
                            anchor: "pairing-squares-and-pentagons",
                            params,
                            task: Task::Pentagons { dim: d, profile, kind, i },
                        });
                    }
                }
            }
        }
    }
}

/// The random pairings used by the Casimir and spectrum suites.
pub fn pairing_specs(cfg: &SuiteConfig) -> Vec<PairingSpec> {
    let mut out = Vec::new();
    for d in cfg.sorted_dims() {
        let profiles: &[Profile] = if d >= 2 { &[Profile::Even, Profile::Odd, Profile::Mixed] } else { &[Profile::Even, Profile::Odd] };
        for &profile in profiles {
            for symmetry in [Symmetry::Alternating, Symmetry::Symmetric] {
                let spec = PairingSpec::derive(cfg.seed, d, profile, symmetry);
                if spec.feasible() {
                    out.push(spec);
                }
            }
        }
    }
    out
}

fn pairing_params(p: &PairingSpec, n: usize) -> Vec<(String, String)> {
    kv(&[
        ("dim", p.dim.to_string()),
        ("parity", p.profile.name().into()),
        ("kind", kind_tag(p.kind()).into()),
        ("pairing_seed", p.seed.to_string()),
        ("n", n.to_string()),
    ])
}

fn pairing_stem(suite: Suite, p: &PairingSpec, n: usize) -> String {
    format!("{suite}/d{:02}/{}/{}/n{n:02}", p.dim, p.profile.name(), kind_tag(p.kind()))
}

fn casimir_cases(cfg: &SuiteConfig, out: &mut Vec<Case>) {
    for p in pairing_specs(cfg) {
        for n in 0..=cfg.n_max {
            out.push(Case {
                suite: Suite::Casimir,
                key: pairing_stem(Suite::Casimir, &p, n),
                anchor: "casimir-commutator",
                params: pairing_params(&p, n),
                task: Task::Commutator { pairing: p, n },
            });
        }
    }
}

fn spectrum_cases(cfg: &SuiteConfig, out: &mut Vec<Case>) {
    for p in pairing_specs(cfg).into_iter().filter(PairingSpec::positive) {
        for n in 0..=cfg.n_max {
            out.push(Case {
                suite: Suite::Spectrum,
                key: pairing_stem(Suite::Spectrum, &p, n),
                anchor: "laplace-casimir-spectrum",
                params: pairing_params(&p, n),
                task: Task::Spectrum { pairing: p, n },
            });
        }
    }
}

/// Base objects with `g = dim = 2i` and an invertible top power, for `i ≤ 2`.
fn dirac_bases(cfg: &SuiteConfig) -> Vec<(usize, Profile, PowerKind)> {
    let mut out = Vec::new();
    for d in cfg.sorted_dims().into_iter().filter(|d| [2, 4].contains(d)) {
        out.push((d, Profile::Even, PowerKind::Alt));
        out.push((d, Profile::Odd, PowerKind::Sym));
    }
    out
}

fn square_cases(cfg: &SuiteConfig, out: &mut Vec<Case>) {
    for (dim, profile, kind) in dirac_bases(cfg) {
        for n in 2..=cfg.n_max.max(2) {
            for second in [false, true] {
                let part = if second { "second" } else { "first" };
                out.push(Case {
                    suite: Suite::DiracSquare,
                    key: format!("dirac-square/d{dim:02}/{}/{}/n{n:02}/{part}", profile.name(), kind_tag(kind)),
                    anchor: if second { "dirac-square-second" } else { "dirac-square-first" },
                    params: kv(&[
                        ("dim", dim.to_string()),
                        ("parity", profile.name().into()),
                        ("kind", kind_tag(kind).into()),
                        ("i", (dim / 2).to_string()),
                        ("n", n.to_string()),
                    ]),
                    task: Task::Square { dim, profile, kind, second, n },
                });
            }
        }
    }
}

fn kernel_cases(cfg: &SuiteConfig, out: &mut Vec<Case>) {
    // in dimension 2 the middle power has the wrong rank sign, so there is no section
    for (dim, profile, kind) in dirac_bases(cfg).into_iter().filter(|b| b.0 == 4) {
        for n in 1..=cfg.n_max {
            for (op, tag) in [(KernelOp::Laplace, "laplace"), (KernelOp::DiracBarTop, "dbar"), (KernelOp::DiracLow, "d")] {
                if op == KernelOp::Laplace && n < 2 {
                    continue;
                }
                out.push(Case {
                    suite: Suite::Kernels,
                    key: format!("kernels/d{dim:02}/{}/{}/n{n:02}/{tag}", profile.name(), kind_tag(kind)),
                    anchor: "operator-kernels",
                    params: kv(&[
                        ("dim", dim.to_string()),
                        ("parity", profile.name().into()),
                        ("kind", kind_tag(kind).into()),
                        ("operator", tag.into()),
                        ("n", n.to_string()),
                    ]),
                    task: Task::Kernel { dim, profile, kind, op, n },
                });
            }
        }
    }
}

fn quat_cases(cfg: &SuiteConfig, out: &mut Vec<Case>) {
    let n_top = cfg.n_max.min(QUAT_N_CAP);
    for params in cfg.sorted_quats() {
        let stem = format!("quaternion/q({params})");
        let mut checks = vec![
            (QuatCheck::Idempotent, "minus-idempotent".to_string(), "quaternionic-idempotent"),
            (QuatCheck::PlusMinus(Profile::Even), "plus-minus/even".into(), "quaternionic-plus-minus"),
            (QuatCheck::PlusMinus(Profile::Odd), "plus-minus/odd".into(), "quaternionic-plus-minus"),
            (QuatCheck::MinusPart, "minus-part".into(), "quaternionic-minus-part"),
            (QuatCheck::Commutant, "commutant-m03".into(), "motive-commutant"),
        ];
        for k in 1..=2 * n_top + 1 {
            checks.push((QuatCheck::Motive(k), format!("motive/m{k:02}"), "motive-model-dimensions"));
        }
        for (check, tag, anchor) in checks {
            out.push(Case {
                suite: Suite::Quaternion,
                key: format!("{stem}/{tag}"),
                anchor,
                params: kv(&[("a", params.a.to_string()), ("b", params.b.to_string())]),
                task: Task::Quat { params, check },
            });
        }
    }
}

fn split_cases(cfg: &SuiteConfig, out: &mut Vec<Case>) {
    for n in 1..=cfg.n_max.min(QUAT_N_CAP) {
        out.push(Case {
            suite: Suite::SplitCompare,
            key: format!("split-compare/q(1,1)/n{n:02}"),
            anchor: "split-torus-weights",
            params: kv(&[("a", "1".into()), ("b", "1".into()), ("n", n.to_string())]),
            task: Task::Split { n },
        });
    }
}

fn functor_cases(cfg: &SuiteConfig, out: &mut Vec<Case>) {
    let n_top = cfg.n_max.min(QUAT_N_CAP);
    out.push(Case {
        suite: Suite::Functoriality,
        key: "functoriality/signs".into(),
        anchor: "functor-signs",
        params: Vec::new(),
        task: Task::FunctorSigns,
    });
    for g in cfg.sorted_dims().into_iter().filter(|&g| g <= 4) {
        for i in 0..=g {
            for per_map in [false, true] {
                let tag = if per_map { "per-map" } else { "composite" };
                out.push(Case {
                    suite: Suite::Functoriality,
                    key: format!("functoriality/duality/g{g:02}/i{i:02}/{tag}"),
                    anchor: if per_map { "functor-duality-per-map" } else { "functor-duality-composite" },
                    params: kv(&[("functor", "parity-shift".into()), ("g", g.to_string()), ("i", i.to_string())]),
                    task: Task::FunctorDuality { g, i, per_map },
                });
            }
        }
    }
    for (dim, profile, kind) in dirac_bases(cfg).into_iter().filter(|b| b.1 == Profile::Even) {
        let i = dim / 2;
        for n in 1..=n_top {
            out.push(Case {
                suite: Suite::Functoriality,
                key: format!("functoriality/operators/i{i:02}/n{n:02}"),
                anchor: "functor-operator-table",
                params: kv(&[
                    ("functor", "parity-shift".into()),
                    ("dim", dim.to_string()),
                    ("parity", profile.name().into()),
                    ("kind", kind_tag(kind).into()),
                    ("i", i.to_string()),
                    ("n", n.to_string()),
                ]),
                task: Task::FunctorOperators { i, n },
            });
        }
    }
    for params in cfg.sorted_quats() {
        out.push(Case {
            suite: Suite::Functoriality,
            key: format!("functoriality/motives/q({params})"),
            anchor: "functor-motive-models",
            params: kv(&[
                ("functor", "parity-shift".into()),
                ("a", params.a.to_string()),
                ("b", params.b.to_string()),
                ("k_max", "5".into()),
                ("n_max", n_top.to_string()),
            ]),
            task: Task::FunctorMotives { params, k_max: 5, n_max: n_top },
        });
    }
}

/// The case matrix for a configuration, sorted by key. Nothing is executed.
pub fn list_cases(cfg: &SuiteConfig) -> Result<Vec<Case>> {
    cfg.validate()?;
    let mut suites = cfg.suites.clone();
    suites.sort_unstable();
    suites.dedup();
    let mut out = Vec::new();
    for s in suites {
        match s {
            Suite::Duality => duality_cases(cfg, &mut out),
            Suite::Casimir => casimir_cases(cfg, &mut out),
            Suite::Spectrum => spectrum_cases(cfg, &mut out),
            Suite::DiracSquare => square_cases(cfg, &mut out),
            Suite::Kernels => kernel_cases(cfg, &mut out),
            Suite::Quaternion => quat_cases(cfg, &mut out),
            Suite::SplitCompare => split_cases(cfg, &mut out),
            Suite::Functoriality => functor_cases(cfg, &mut out),
        }
    }
    out.sort_by(|a, b| a.key.cmp(&b.key));
    Ok(out)
}

/// Run every case of the configuration on the work pool.
pub fn run(cfg: &SuiteConfig) -> Result<Vec<CaseRecord>> {
    let cases = list_cases(cfg)?;
    Ok(exec::map_slice(&cases, run_case))
}

/// What a case predicted and what it found.
struct Reading {
    predicted: String,
    computed: String,
    pass: bool,
    witness: Option<String>,
}

impl Reading {
    fn new(predicted: impl Into<String>, computed: impl Into<String>, pass: bool) -> Reading {
        Reading { predicted: predicted.into(), computed: computed.into(), pass, witness: None }
    }

    fn with_witness(mut self, w: Option<String>) -> Reading {
        if !self.pass {
            self.witness = w;
        }
        self
    }
}

pub fn run_case(case: &Case) -> CaseRecord {
    let start = Instant::now();
    let reading = execute(&case.task).unwrap_or_else(|e| Reading {
        predicted: "-".into(),
        computed: "error".into(),
        pass: false,
        witness: Some(e.to_string()),
    });
    CaseRecord {
        suite: case.suite,
        key: case.key.clone(),
        anchor: case.anchor,
        params: case.params.clone(),
        predicted: reading.predicted,
        computed: reading.computed,
        pass: reading.pass,
        witness: reading.witness,
        elapsed: start.elapsed(),
    }
}

fn pq(r: &Rat) -> String {
    r.to_pq_string()
}

fn pq_opt(r: Option<&Rat>) -> String {
    r.map_or_else(|| "not a scalar".into(), pq)
}

fn pq_list(rs: &[Rat]) -> String {
    format!("[{}]", rs.iter().map(pq).collect::<Vec<_>>().join(", "))
}

fn scalar_pair(a: &ScalarCheck, b: &ScalarCheck) -> (String, String) {
    let computed = |c: &ScalarCheck| if c.vacuous { "vacuous".into() } else { pq_opt(c.computed.as_ref()) };
    (format!("{}; {}", pq(&a.predicted), pq(&b.predicted)), format!("{}; {}", computed(a), computed(b)))
}

fn first_failure(checks: &[MapCheck]) -> Option<String> {
    checks.iter().find(|c| !c.pass).map(|c| format!("{}: {}", c.label, c.describe_failure().unwrap_or_default()))
}

fn dirac_suite(dim: usize, profile: Profile, kind: PowerKind) -> Result<DiracSuite> {
    build_pairings(&profile.space(dim), dim / 2, kind)
}

fn kernel_reading(r: &KernelReport) -> Reading {
    Reading::new(
        "section splits the kernel; image equals the nullspace",
        format!("dim {} of {}; nullspace match {}", r.dim(), r.domain_dim, r.kernel.matches_nullspace),
        r.kernel.matches_nullspace,
    )
}

fn weights(w: &[(i64, usize)]) -> String {
    let items: Vec<String> = w.iter().map(|(a, m)| format!("{a}^{m}")).collect();
    format!("{{{}}}", items.join(" "))
}

fn weight_reading(label: &str, r: &WeightReport) -> (String, String) {
    (format!("{label}: {}", weights(&r.expected)), format!("{label}: {}", weights(&r.measured)))
}

fn row_summary(rows: &[&SignRow]) -> String {
    rows.iter()
        .map(|r| format!("{} [{}→{}] {}", r.label, kind_tag(r.source_kind), kind_tag(r.target_kind), pq_opt(r.measured.as_ref())))
        .collect::<Vec<_>>()
        .join("; ")
}

fn predicted_summary(rows: &[&SignRow]) -> String {
    rows.iter()
        .map(|r| format!("{} [{}→{}] {}", r.label, kind_tag(r.source_kind), kind_tag(r.target_kind), pq(&r.predicted)))
        .collect::<Vec<_>>()
        .join("; ")
}

fn sign_rows(rows: &[&SignRow]) -> Reading {
    let pass = rows.iter().all(|r| r.pass());
    let failing: Vec<&SignRow> = rows.iter().copied().filter(|r| !r.pass()).collect();
    Reading::new(predicted_summary(rows), row_summary(rows), pass)
        .with_witness(Some(format!("rows off: {}", row_summary(&failing))))
}

fn execute(task: &Task) -> Result<Reading> {
    Ok(match *task {
        Task::Triangles { dim, profile, kind, i } => {
            let r = verify_duality_scalar(&profile.space(dim), i, dim, kind)?;
            let (p, c) = scalar_pair(&r.first, &r.second);
            Reading::new(p, c, r.pass())
        }
        Task::Pentagons { dim, profile, kind, i } => {
            let r = verify_pairing_diagrams(&profile.space(dim), i, dim, kind)?;
            let ok = r.checks.iter().filter(|c| c.pass).count();
            Reading::new(format!("{} diagrams commute", r.checks.len()), format!("{ok} commute"), r.pass())
                .with_witness(first_failure(&r.checks))
        }
        Task::Commutator { pairing, n } => {
            let c = pairing.family(n + 2)?.commutator(n)?;
            let computed = match &c.measured {
                Some(m) => pq(m),
                None if c.pass() => "vacuous: the power is zero".into(),
                None => "not a scalar".into(),
            };
            Reading::new(pq(&c.predicted), computed, c.pass()).with_witness(c.check.describe_failure())
        }
        Task::Spectrum { pairing, n } => {
            let c = pairing.family(n + 2)?.spectrum(n)?;
            Reading::new(
                format!("ΔC roots {} > 0; CΔ roots {} ≥ 0", pq_list(&c.forward_roots), pq_list(&c.backward_roots)),
                format!("ΔC annihilated {}; CΔ annihilated {}", c.forward_diagonalizable, c.backward_diagonalizable),
                c.pass(),
            )
        }
        Task::Square { dim, profile, kind, second, n } => {
            let report = dirac_suite(dim, profile, kind)?.verify_square_root(n)?;
            let reading = report.defining();
            let check = if second { reading.second.as_ref() } else { Some(&reading.first) };
            match check {
                Some(c) => Reading::new(pq(&c.predicted), pq_opt(c.measured.as_ref()), c.pass()).with_witness(c.check.describe_failure()),
                None => Reading::new("-", "not defined: the line has rank -1", false),
            }
        }
        Task::Kernel { dim, profile, kind, op, n } => {
            let s = dirac_suite(dim, profile, kind)?;
            kernel_reading(&match op {
                KernelOp::Laplace => s.laplace_kernel(n)?,
                KernelOp::DiracBarTop => s.dbar_kernel(n)?,
                KernelOp::DiracLow => s.d_kernel(n)?,
            })
        }
        Task::Quat { params, check } => quat_reading(params, check)?,
        Task::Split { n } => {
            let r = split_compare(&split_suite()?, n)?;
            let (pe, ce) = weight_reading(&format!("M{}", 2 * n), &r.even);
            let (po, co) = weight_reading(&format!("M{}", 2 * n + 1), &r.odd);
            Reading::new(format!("{pe}; {po}"), format!("{ce}; {co}"), r.pass())
        }
        Task::FunctorSigns => {
            let v = SpaceObj::even("V", "v", 2);
            let id = measure_signs(&identity_functor(), &v)?;
            let shift = measure_signs(&parity_shift(), &v)?;
            let both = measure_signs(&parity_shift().then(&parity_shift()), &v)?;
            let computed = format!(
                "identity ε={} η={}; shift ε={} η={}; shift∘shift ε={} η={}",
                pq(&id.epsilon),
                pq(&id.eta),
                pq(&shift.epsilon),
                pq(&shift.eta),
                pq(&both.epsilon),
                pq(&both.eta)
            );
            let one = Rat::one();
            let pass = id.epsilon.is_one()
                && id.eta.is_one()
                && shift.epsilon == -one.clone()
                && shift.eta == -one
                && both.epsilon == &shift.epsilon * &shift.epsilon
                && both.eta == &shift.eta * &shift.eta;
            Reading::new("identity ε=1 η=1; shift ε=-1 η=-1; composite multiplicative", computed, pass)
        }
        Task::FunctorDuality { g, i, per_map } => {
            let r = verify_functor_duality(&parity_shift(), &SpaceObj::even("V", "v", g), i, g)?;
            let rows: Vec<&SignRow> = r.rows.iter().filter(|row| row.label.contains('·') != per_map).collect();
            sign_rows(&rows)
        }
        Task::FunctorOperators { i, n } => {
            let suite = build_pairings(&SpaceObj::even("V", "v", 2 * i), i, PowerKind::Alt)?;
            let r = verify_functor_operators(&parity_shift(), &suite, n)?;
            sign_rows(&r.rows.iter().collect::<Vec<_>>())
        }
        Task::FunctorMotives { params, k_max, n_max } => {
            let r = verify_functor_motives(&parity_shift(), &regular_object(&params.algebra()?), k_max, n_max)?;
            let bad_models: Vec<String> = r.models.iter().filter(|m| !m.1).map(|m| format!("M{}", m.0)).collect();
            let bad_rows = r.operators.failures();
            let pass = r.models_pass() && bad_rows.is_empty();
            let computed = format!(
                "minus part {}; models equal {}/{}; operator rows {}/{}",
                r.minus_part,
                r.models.iter().filter(|m| m.1).count(),
                r.models.len(),
                r.operators.rows.len() - bad_rows.len(),
                r.operators.rows.len()
            );
            let witness = format!("models off {bad_models:?}; rows off: {}", row_summary(&bad_rows));
            Reading::new(format!("F(X₋) = X₋(F); F(M_k) = M_k(F) for k ≤ {k_max}; all rows"), computed, pass)
                .with_witness(Some(witness))
        }
    })
}

fn quat_reading(params: QuatParams, check: QuatCheck) -> Result<Reading> {
    let alg = params.algebra()?;
    Ok(match check {
        QuatCheck::Idempotent => {
            let e = minus_idempotent(&alg)?;
            let (big, small) = e.block_ranks;
            let pass = e.block_ranks == (9, 1) && e.idempotent && e.chi_multiplicative;
            Reading::new(
                "10 = 9 + 1; e₋ idempotent; s·e₋ = χ(s)e₋",
                format!("10 = {big} + {small}; idempotent {}; χ-eigen {}", e.idempotent, e.chi_multiplicative),
                pass,
            )
        }
        QuatCheck::PlusMinus(profile) => {
            let q = if profile == Profile::Odd { odd_regular_object(&alg) } else { regular_object(&alg) };
            let pm = split_pm(&q)?;
            let mut checks = pm.chi_checks(&q)?;
            checks.extend(pm.norm_checks(&q, &alg.sample_units(4))?);
            let dims = (pm.plus.image.dim(), pm.minus.image.dim());
            let pass = dims == (3, 3) && checks.iter().all(|c| c.pass);
            Reading::new("dims 3/3; χ and Nr act as scalars on X₋", format!("dims {}/{}", dims.0, dims.1), pass)
                .with_witness(first_failure(&checks))
        }
        QuatCheck::MinusPart => {
            let s = motive_suite(&regular_object(&alg))?;
            let t = s.minus_to_trace_zero(&alg.sample_units(6))?;
            let computed = match &t {
                Some(m) => format!("equivariant isomorphism of rank {}", m.rank()),
                None => "no unique equivariant isomorphism".into(),
            };
            Reading::new("X₋ ≅ B₀ equivariantly", computed, t.is_some())
        }
        QuatCheck::Motive(k) => {
            let s = motive_suite(&regular_object(&alg))?;
            let m = s.motive_model(k)?;
            let expected = if k % 2 == 0 { k + 1 } else { 2 * k + 2 };
            let samples = alg.sample_units(3);
            let equivariant = s.equivariance_check(&m.projector, &m.factors, &m.factors, &samples)?;
            let pass = m.dim() == expected && m.matches_nullspace() && equivariant;
            Reading::new(
                format!("dim {expected}; kernel = nullspace; equivariant"),
                format!("dim {}; kernel = nullspace {}; equivariant {equivariant}", m.dim(), m.matches_nullspace()),
                pass,
            )
        }
        QuatCheck::Commutant => {
            let s = motive_suite(&regular_object(&alg))?;
            let c = s.intertwiner_algebra(&s.motive_model(3)?)?;
            let split = alg.is_split()?;
            let places: Vec<String> = c.ramified.iter().map(|p| p.map_or("∞".into(), |p| p.to_string())).collect();
            let pass = c.dim == 4 && c.center_dim == 1 && c.splits() == split;
            Reading::new(
                format!("dim 4; central; {}", if split { "splitting idempotent" } else { "no rational idempotent" }),
                format!(
                    "dim {}; center {}; idempotent {}; ramified [{}]",
                    c.dim,
                    c.center_dim,
                    c.idempotent.is_some(),
                    places.join(", ")
                ),
                pass,
            )
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_names_round_trip() {
        for s in Suite::ALL {
            assert_eq!(s.name().parse::<Suite>().unwrap(), s);
        }
        assert!("nope".parse::<Suite>().is_err());
    }

    #[test]
    fn quat_params_parse() {
        assert_eq!("-1,-3".parse::<QuatParams>().unwrap(), QuatParams { a: -1, b: -3 });
        assert!("0,1".parse::<QuatParams>().is_err());
        assert!("1".parse::<QuatParams>().is_err());
    }

    #[test]
    fn validation() {
        let mut c = SuiteConfig::default();
        assert!(c.validate().is_ok());
        c.dims = vec![7];
        assert!(c.validate().is_err());
        c.allow_large = true;
        assert!(c.validate().is_ok());
        c.suites.clear();
        assert!(matches!(list_cases(&c), Err(Error::Config(_))));
    }

    #[test]
    fn keys_are_sorted_and_unique() {
        let cases = list_cases(&SuiteConfig::default()).unwrap();
        for w in cases.windows(2) {
            assert!(w[0].key < w[1].key, "{} / {}", w[0].key, w[1].key);
        }
    }

    #[test]
    fn pairing_seeds_depend_on_shape_and_run_seed() {
        let a = PairingSpec::derive(0, 4, Profile::Even, Symmetry::Symmetric);
        let b = PairingSpec::derive(0, 4, Profile::Even, Symmetry::Alternating);
        let c = PairingSpec::derive(1, 4, Profile::Even, Symmetry::Symmetric);
        assert_ne!(a.seed, b.seed);
        assert_ne!(a.seed, c.seed);
        assert_eq!(a, PairingSpec::derive(0, 4, Profile::Even, Symmetry::Symmetric));
    }

    #[test]
    fn small_casimir_run_passes() {
        let cfg = SuiteConfig { suites: vec![Suite::Casimir], dims: vec![2, 3], n_max: 2, ..SuiteConfig::default() };
        let records = run(&cfg).unwrap();
        assert!(!records.is_empty());
        assert!(records.iter().all(|r| r.pass), "{:?}", records.iter().find(|r| !r.pass));
    }
}
