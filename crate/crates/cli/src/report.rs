//! Serializable report and its JSON and markdown renderings.

use std::collections::BTreeMap;

use dirac_core::runner::{Case, CaseRecord, SuiteConfig};
use serde::Serialize;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct Stamp {
    pub tool: &'static str,
    pub version: &'static str,
    pub rustc: &'static str,
    pub target: String,
}

impl Stamp {
    pub fn current() -> Stamp {
        Stamp {
            tool: env!("CARGO_PKG_NAME"),
            version: env!("CARGO_PKG_VERSION"),
            rustc: env!("DIRAC_VERIFY_RUSTC"),
            target: format!("{}-{}", std::env::consts::ARCH, std::env::consts::OS),
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct ConfigEcho {
    pub suites: Vec<String>,
    pub dims: Vec<usize>,
    pub n_max: usize,
    pub quaternion_params: Vec<String>,
    pub seed: u64,
    pub allow_large: bool,
}

impl From<&SuiteConfig> for ConfigEcho {
    fn from(c: &SuiteConfig) -> Self {
        ConfigEcho {
            suites: c.suites.iter().map(|s| s.to_string()).collect(),
            dims: c.dims.clone(),
            n_max: c.n_max,
            quaternion_params: c.quaternion_params.iter().map(|q| q.to_string()).collect(),
            seed: c.seed,
            allow_large: c.allow_large,
        }
    }
}

/// One case as written to the report. Rationals are `p/q` strings.
#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct CaseEntry {
    pub suite: String,
    pub key: String,
    pub anchor: String,
    pub params: BTreeMap<String, String>,
    pub predicted: String,
    pub computed: String,
    pub pass: bool,
    pub witness: Option<String>,
    pub elapsed_ms: f64,
}

impl From<&CaseRecord> for CaseEntry {
    fn from(r: &CaseRecord) -> Self {
        CaseEntry {
            suite: r.suite.to_string(),
            key: r.key.clone(),
            anchor: r.anchor.to_string(),
            params: r.params.iter().cloned().collect(),
            predicted: r.predicted.clone(),
            computed: r.computed.clone(),
            pass: r.pass,
            witness: r.witness.clone(),
            elapsed_ms: r.elapsed.as_secs_f64() * 1e3,
        }
    }
}

#[derive(Serialize, Debug, Clone, Default, PartialEq, Eq)]
pub struct Tally {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

impl Tally {
    fn add(&mut self, pass: bool) {
        self.total += 1;
        if pass {
            self.passed += 1;
        } else {
            self.failed += 1;
        }
    }
}

#[derive(Serialize, Debug, Clone, PartialEq, Eq)]
pub struct Summary {
    #[serde(flatten)]
    pub overall: Tally,
    pub by_suite: BTreeMap<String, Tally>,
}

#[derive(Serialize, Debug, Clone, PartialEq)]
pub struct SuiteReport {
    pub schema: u32,
    pub stamp: Stamp,
    pub seed: u64,
    pub config: ConfigEcho,
    pub summary: Summary,
    pub cases: Vec<CaseEntry>,
}

impl SuiteReport {
    pub fn new(config: &SuiteConfig, records: &[CaseRecord]) -> SuiteReport {
        let mut overall = Tally::default();
        let mut by_suite: BTreeMap<String, Tally> = BTreeMap::new();
        for r in records {
            overall.add(r.pass);
            by_suite.entry(r.suite.to_string()).or_default().add(r.pass);
        }
        SuiteReport {
            schema: SCHEMA_VERSION,
            stamp: Stamp::current(),
            seed: config.seed,
            config: config.into(),
            summary: Summary { overall, by_suite },
            cases: records.iter().map(CaseEntry::from).collect(),
        }
    }

    pub fn all_pass(&self) -> bool {
        self.summary.overall.failed == 0
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }

    pub fn to_markdown(&self) -> String {
        let mut s = String::new();
        s.push_str("# dirac-verify report\n\n");
        s.push_str(&format!(
            "- tool: {} {}\n- rustc: {}\n- target: {}\n- seed: {}\n- schema: {}\n\n",
            self.stamp.tool, self.stamp.version, self.stamp.rustc, self.stamp.target, self.seed, self.schema
        ));
        s.push_str("| suite | passed | failed |\n|---|---|---|\n");
        for (name, t) in &self.summary.by_suite {
            s.push_str(&format!("| {name} | {} | {} |\n", t.passed, t.failed));
        }
        s.push_str(&format!("| **total** | {} | {} |\n", self.summary.overall.passed, self.summary.overall.failed));
        let mut anchors: Vec<&str> = self.cases.iter().map(|c| c.anchor.as_str()).collect();
        anchors.sort_unstable();
        anchors.dedup();
        s.push_str("\n## Anchors\n\n");
        for a in anchors {
            s.push_str(&format!("- <a id=\"{a}\"></a>`{a}`: {}\n", anchor_description(a)));
        }
        for name in self.summary.by_suite.keys() {
            s.push_str(&format!("\n## {name}\n\n| case | anchor | predicted | computed | result |\n|---|---|---|---|---|\n"));
            for c in self.cases.iter().filter(|c| &c.suite == name) {
                let result = if c.pass { "pass".to_string() } else { format!("**FAIL** {}", c.witness.as_deref().unwrap_or("")) };
                s.push_str(&format!(
                    "| `{}` | [{}](#{}) | {} | {} | {} |\n",
                    c.key,
                    c.anchor,
                    c.anchor,
                    cell(&c.predicted),
                    cell(&c.computed),
                    cell(&result)
                ));
            }
        }
        s
    }
}

fn cell(text: &str) -> String {
    text.replace('|', "\\|").replace('\n', " ")
}

/// One-line description of what a case anchor checks.
pub fn anchor_description(anchor: &str) -> &'static str {
    match anchor {
        "duality-triangle-scalars" => "the two composites of the duality maps D^{i,g} and D_{g-i,g} are the binomial scalars",
        "pairing-squares-and-pentagons" => "the pairing squares and the three-row pentagons built from the multiplication commute",
        "casimir-commutator" => "Δ∘C and C∘Δ satisfy the commutator identity in each degree",
        "laplace-casimir-spectrum" => "Δ∘C is annihilated by positive roots and C∘Δ by nonnegative ones",
        "dirac-square-first" => "the barred Dirac operator after ∂₁ is ρ/2 times the Laplace operator",
        "dirac-square-second" => "∂_{i-1} after the barred ∂₁ is ρ/2 times the Laplace operator",
        "operator-kernels" => "a certified section splits off the kernel, and it equals the nullspace",
        "quaternionic-idempotent" => "∨²B splits as 9 + 1 and e₋ is an idempotent χ-eigenvector",
        "quaternionic-plus-minus" => "the ± parts of the square of the regular object have dimension 3 each",
        "quaternionic-minus-part" => "the minus part is equivariantly the trace-zero quaternions",
        "motive-model-dimensions" => "dim M_2n = 2n+1, dim M_2n+1 = 4n+4, equivariant projector",
        "motive-commutant" => "the commutant of M_3 is a quaternion algebra, split exactly when B is",
        "split-torus-weights" => "torus weights of M_k for the split algebra",
        "functor-signs" => "ε and η of the identity, the parity shift and their composite",
        "functor-duality-composite" => "sign of F on the composite of a duality pair",
        "functor-duality-per-map" => "sign of F on each individual duality map",
        "functor-operator-table" => "signs of F on the Laplace and Dirac operators",
        "functor-motive-models" => "F preserves the minus part, the motive models and the restricted operators",
        _ => "",
    }
}

/// Dry-run listing: one line per case, or a JSON array.
pub fn list_text(cases: &[Case]) -> String {
    let mut s = String::new();
    for c in cases {
        let params: Vec<String> = c.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        s.push_str(&format!("{}\t{}\t{}\n", c.key, c.anchor, params.join(" ")));
    }
    s
}

#[derive(Serialize)]
struct ListedCase<'a> {
    suite: String,
    key: &'a str,
    anchor: &'a str,
    params: BTreeMap<&'a str, &'a str>,
}

pub fn list_json(cases: &[Case]) -> serde_json::Result<String> {
    let listed: Vec<ListedCase> = cases
        .iter()
        .map(|c| ListedCase {
            suite: c.suite.to_string(),
            key: &c.key,
            anchor: c.anchor,
            params: c.params.iter().map(|(k, v)| (k.as_str(), v.as_str())).collect(),
        })
        .collect();
    serde_json::to_string_pretty(&listed)
}
