use std::path::Path;
use std::process::{Command, Output};

use principal_yangian::cli;
use principal_yangian::report::Report;
use principal_yangian::yangian::coproduct::verify_coproduct;
use principal_yangian::yangian::drinfeld::{verify_drinfeld_relations, SampleSet};
use principal_yangian::yangian::{verify_main_theorem, YangianRep};

fn yangian(args: &[&str], dir: &Path) -> Output {
    Command::new(env!("CARGO_BIN_EXE_yangian"))
        .args(args)
        .current_dir(dir)
        .env_remove(cli::REPORT_DIR_ENV)
        .output()
        .expect("binary runs")
}

fn reports_in(dir: &Path) -> Vec<Report> {
    let mut out: Vec<Report> = std::fs::read_dir(dir)
        .unwrap()
        .map(|e| {
            let text = std::fs::read_to_string(e.unwrap().path()).unwrap();
            Report::from_json_str(&text).unwrap()
        })
        .collect();
    out.sort_by_key(|r| (r.suite.clone(), r.n));
    out
}

#[test]
fn verify_all_small_sizes() {
    let tmp = tempfile::tempdir().unwrap();
    let out = tmp.path().join("r");
    let o = yangian(
        &[
            "verify",
            "--n",
            "2..3",
            "--suite",
            "all",
            "--out",
            out.to_str().unwrap(),
        ],
        tmp.path(),
    );
    assert_eq!(
        o.status.code(),
        Some(0),
        "{}",
        String::from_utf8_lossy(&o.stderr)
    );
    let reports = reports_in(&out);
    assert_eq!(reports.len(), 2 * cli::ALL_SUITES.len());
    for r in &reports {
        r.validate().unwrap();
        assert!(r.all_passed(), "{} N={}", r.suite, r.n);
        assert_eq!(r.file_name(), format!("{}-n{}.json", r.suite, r.n));
    }
}

#[test]
fn report_dir_from_environment() {
    let tmp = tempfile::tempdir().unwrap();
    let out = tmp.path().join("from-env");
    let o = Command::new(env!("CARGO_BIN_EXE_yangian"))
        .args(["verify", "--n", "2", "--suite", "bell,ybe"])
        .current_dir(tmp.path())
        .env(cli::REPORT_DIR_ENV, &out)
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(0));
    let names: Vec<String> = reports_in(&out).iter().map(Report::file_name).collect();
    assert_eq!(names, ["bell-n2.json", "ybe-n2.json"]);
}

#[test]
fn large_drinfeld_needs_override() {
    let tmp = tempfile::tempdir().unwrap();
    let o = yangian(&["verify", "--n", "7", "--suite", "drinfeld"], tmp.path());
    assert_eq!(o.status.code(), Some(cli::EXIT_USAGE));
    assert!(!tmp.path().join("reports").exists());
}

#[test]
fn usage_errors() {
    let tmp = tempfile::tempdir().unwrap();
    for args in [
        &["action", "--n", "3", "--i", "1", "--j", "1"][..],
        &["spectrum", "--n", "3", "--a", "0.5", "--b", "0"],
        &["verify", "--n", "2", "--suite", "nope"],
        &["relation-search", "--n", "2", "--pattern", "missing"],
        &["verify", "--n", "1"],
    ] {
        let o = yangian(args, tmp.path());
        assert_eq!(o.status.code(), Some(cli::EXIT_USAGE), "{args:?}");
    }
}

#[test]
fn action_json_lists_every_bell_vector() {
    let tmp = tempfile::tempdir().unwrap();
    let o = yangian(
        &["action", "--n", "2", "--i", "1", "--j", "2", "--json"],
        tmp.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    let text = v.to_string();
    assert!(text.contains('a') && text.contains('b'), "{text}");
}

#[test]
fn spectrum_reports_scalar_point() {
    let tmp = tempfile::tempdir().unwrap();
    let o = yangian(
        &[
            "spectrum", "--n", "2", "--a", "1/2", "--b", "-1/2", "--json",
        ],
        tmp.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["scalar"], serde_json::json!(true), "{v}");
}

#[test]
fn subrep_verdicts_from_cli() {
    let tmp = tempfile::tempdir().unwrap();
    let o = yangian(&["subrep", "--n", "2", "--a", "1", "--b", "0"], tmp.path());
    assert_eq!(o.status.code(), Some(0));
    assert!(String::from_utf8_lossy(&o.stdout).contains("V0 invariant"));
    let o = yangian(
        &["subrep", "--n", "2", "--a", "1/3", "--b", "0"],
        tmp.path(),
    );
    assert!(String::from_utf8_lossy(&o.stdout).contains("irreducible (Burnside 16)"));
}

#[test]
fn relation_search_writes_result() {
    let tmp = tempfile::tempdir().unwrap();
    let file = tmp.path().join("search.json");
    let o = yangian(
        &[
            "relation-search",
            "--n",
            "2..3",
            "--out",
            file.to_str().unwrap(),
        ],
        tmp.path(),
    );
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(file).unwrap()).unwrap();
    assert_eq!(v["outcomes"].as_array().unwrap().len(), 32);
}

#[test]
fn in_process_run_matches_binary() {
    let tmp = tempfile::tempdir().unwrap();
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = cli::run(
        [
            "yangian",
            "relation-search",
            "--n",
            "2",
            "--pattern",
            "as-printed",
        ],
        &mut out,
        &mut err,
    );
    let bin = yangian(
        &["relation-search", "--n", "2", "--pattern", "as-printed"],
        tmp.path(),
    );
    assert_eq!(Some(code), bin.status.code());
    assert_eq!(out, bin.stdout);
}

#[test]
fn corrupted_coproduct_is_caught() {
    let mut rep = YangianRep::new(2);
    assert!(verify_coproduct(&rep).all_passed());
    let t = rep.generators()[1];
    rep.corrupt(t);
    assert!(!verify_coproduct(&rep).all_passed());
    assert!(!verify_main_theorem(&rep).all_passed());
    let samples = SampleSet::exhaustive(&rep);
    assert!(!verify_drinfeld_relations(&rep, &samples).all_passed());
}
