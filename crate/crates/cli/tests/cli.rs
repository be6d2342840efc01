use std::path::Path;
use std::process::Command;

use dirac_core::runner::{list_cases, Suite, SuiteConfig};
use dirac_verify::{main_with, run, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};
use serde_json::Value;

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_dirac-verify"))
}

fn read_json(path: &Path) -> Value {
    serde_json::from_str(&std::fs::read_to_string(path).unwrap()).unwrap()
}

fn strip_elapsed(v: &mut Value) {
    for c in v["cases"].as_array_mut().unwrap() {
        c.as_object_mut().unwrap().remove("elapsed_ms");
    }
}

fn is_pq(s: &str) -> bool {
    let Some((p, q)) = s.split_once('/') else { return false };
    p.trim_start_matches('-').chars().all(|c| c.is_ascii_digit()) && q.chars().all(|c| c.is_ascii_digit()) && !p.is_empty()
}

#[test]
fn casimir_on_small_dimensions_passes() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let code = main_with(["dirac-verify", "--suite", "casimir", "--dim", "2,3", "--n-max", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(code, EXIT_PASS);
    let v = read_json(&out);
    assert_eq!(v["schema"], 1);
    assert_eq!(v["seed"], 0);
    assert_eq!(v["summary"]["failed"], 0);
    let cases = v["cases"].as_array().unwrap();
    assert!(!cases.is_empty());
    for c in cases {
        assert_eq!(c["suite"], "casimir");
        assert!(is_pq(c["predicted"].as_str().unwrap()), "{}", c["predicted"]);
        assert!(is_pq(c["computed"].as_str().unwrap()), "{}", c["computed"]);
        assert!(c["witness"].is_null());
    }
}

#[test]
fn report_is_deterministic_up_to_timings() {
    let dir = tempfile::tempdir().unwrap();
    let paths = [dir.path().join("a.json"), dir.path().join("b.json")];
    for p in &paths {
        let code = main_with([
            "dirac-verify",
            "--suite",
            "casimir,spectrum,duality",
            "--dim",
            "2",
            "--n-max",
            "3",
            "--seed",
            "17",
            "--out",
            p.to_str().unwrap(),
        ]);
        assert_eq!(code, EXIT_PASS);
    }
    let (mut a, mut b) = (read_json(&paths[0]), read_json(&paths[1]));
    strip_elapsed(&mut a);
    strip_elapsed(&mut b);
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    let keys: Vec<&str> = a["cases"].as_array().unwrap().iter().map(|c| c["key"].as_str().unwrap()).collect();
    let mut sorted = keys.clone();
    sorted.sort_unstable();
    assert_eq!(keys, sorted);
}

#[test]
fn seed_changes_the_pairings() {
    let cfg = |seed| SuiteConfig { suites: vec![Suite::Casimir], dims: vec![2], seed, ..SuiteConfig::default() };
    let a = list_cases(&cfg(1)).unwrap();
    let b = list_cases(&cfg(2)).unwrap();
    assert_eq!(a.len(), b.len());
    assert_ne!(a[0].params, b[0].params);
}

#[test]
fn empty_suite_list_is_a_usage_error() {
    assert_eq!(main_with(["dirac-verify", "--suite", ""]), EXIT_USAGE);
    assert_eq!(main_with(["dirac-verify", "list-cases", "--suite", ""]), EXIT_USAGE);
}

#[test]
fn bad_flags_are_usage_errors() {
    assert_eq!(main_with(["dirac-verify", "--suite", "nonsense"]), EXIT_USAGE);
    assert_eq!(main_with(["dirac-verify", "--quat", "0,1"]), EXIT_USAGE);
    assert_eq!(main_with(["dirac-verify", "--n-max", "0"]), EXIT_USAGE);
    assert_eq!(main_with(["dirac-verify", "--format", "xml"]), EXIT_USAGE);
    assert_eq!(main_with(["dirac-verify", "--dim", "7", "--suite", "casimir"]), EXIT_USAGE);
}

#[test]
fn large_dimensions_need_the_override() {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("cases.json");
    let args = ["dirac-verify", "list-cases", "--suite", "casimir", "--dim", "8", "--format", "json", "--out"];
    assert_eq!(main_with(args.iter().copied().chain([out.to_str().unwrap()])), EXIT_USAGE);
    let code = main_with(args.iter().copied().chain([out.to_str().unwrap(), "--allow-large"]));
    assert_eq!(code, EXIT_PASS);
    assert!(read_json(&out).as_array().unwrap().iter().all(|c| c["params"]["dim"] == "8"));
}

#[test]
fn list_cases_shapes() {
    let all = list_cases(&SuiteConfig::default()).unwrap();
    for s in Suite::ALL {
        assert!(all.iter().any(|c| c.suite == s), "{s} has no cases");
    }
    let filtered = list_cases(&SuiteConfig { suites: vec![Suite::SplitCompare], ..SuiteConfig::default() }).unwrap();
    let keys: Vec<&str> = filtered.iter().map(|c| c.key.as_str()).collect();
    assert_eq!(keys, ["split-compare/q(1,1)/n01", "split-compare/q(1,1)/n02", "split-compare/q(1,1)/n03"]);
    assert!(list_cases(&SuiteConfig { suites: vec![], ..SuiteConfig::default() }).is_err());
}

#[test]
fn list_cases_binary_prints_one_line_per_case() {
    let out = bin().args(["list-cases", "--suite", "kernels", "--format", "markdown"]).output().unwrap();
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).unwrap();
    let expected = list_cases(&SuiteConfig { suites: vec![Suite::Kernels], ..SuiteConfig::default() }).unwrap();
    assert_eq!(text.lines().count(), expected.len());
    assert!(text.lines().all(|l| l.starts_with("kernels/")));
}

#[test]
fn failing_case_gives_exit_one_and_a_witness() {
    // the second square for odd i measures the opposite sign
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("r.json");
    let code = main_with(["dirac-verify", "--suite", "dirac-square", "--dim", "2", "--n-max", "2", "--out", out.to_str().unwrap()]);
    assert_eq!(code, EXIT_FAIL);
    let v = read_json(&out);
    let failing: Vec<&Value> = v["cases"].as_array().unwrap().iter().filter(|c| c["pass"] == false).collect();
    assert_eq!(failing.len(), 1);
    assert_eq!(failing[0]["key"], "dirac-square/d02/even/alt/n02/second");
    assert_eq!(failing[0]["computed"], "-1/4");
    assert_eq!(failing[0]["predicted"], "1/4");
    assert!(failing[0]["witness"].as_str().unwrap().contains("-1/4 vs 1/4"));
}

#[test]
fn binary_exit_codes() {
    let ok = bin().args(["--suite", "split-compare", "--n-max", "1"]).output().unwrap();
    assert_eq!(ok.status.code(), Some(EXIT_PASS));
    let v: Value = serde_json::from_slice(&ok.stdout).unwrap();
    assert_eq!(v["summary"]["passed"], 1);
    let usage = bin().args(["--suite", ""]).output().unwrap();
    assert_eq!(usage.status.code(), Some(EXIT_USAGE));
    assert!(!usage.stderr.is_empty());
}

#[test]
fn markdown_links_every_case_to_an_anchor() {
    let cfg = SuiteConfig { suites: vec![Suite::Quaternion], quaternion_params: vec!["-1,-1".parse().unwrap()], n_max: 1, ..SuiteConfig::default() };
    let report = run(&cfg).unwrap();
    assert!(report.all_pass());
    let md = report.to_markdown();
    for c in &report.cases {
        assert!(md.contains(&format!("<a id=\"{}\"></a>", c.anchor)));
        assert!(md.contains(&format!("`{}`", c.key)));
    }
    assert!(md.contains("| quaternion |"));
}

#[test]
fn thread_count_comes_from_the_environment() {
    let out = bin()
        .env(dirac_core::exec::THREADS_ENV, "2")
        .args(["--suite", "casimir", "--dim", "2", "--n-max", "1"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(EXIT_PASS));
}
