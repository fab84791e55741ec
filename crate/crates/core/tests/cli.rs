use std::process::Command;

use proptest::prelude::*;
use qcongruence::cli::{exit_code, parse_int_list, report, run_with};
use qcongruence::congruence::{PartReport, Status, Verdict, VerificationReport};
use serde_json::Value;

fn run(args: &[&str]) -> (i32, String, String) {
    let mut argv = vec!["qcong".to_string()];
    argv.extend(args.iter().map(|s| s.to_string()));
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run_with(&argv, &mut out, &mut err);
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut a = vec!["--format", "json", "--no-timing"];
    a.extend_from_slice(args);
    let (code, out, _) = run(&a);
    (code, serde_json::from_str(&out).unwrap())
}

#[test]
fn verify_three_passes() {
    let (code, v) = json(&["verify", "T1.1-full", "--n", "5,7,11"]);
    assert_eq!(code, 0);
    let res = v["results"].as_array().unwrap();
    assert_eq!(res.len(), 3);
    assert!(res.iter().all(|r| r["verdict"] == "pass"));
    let ns: Vec<&str> = res.iter().map(|r| r["params"]["n"].as_str().unwrap()).collect();
    assert_eq!(ns, ["5", "7", "11"]);
}

#[test]
fn constraint_skip_exits_zero() {
    let (code, v) = json(&["verify", "T1.1-full", "--n", "3"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"][0]["verdict"], "skipped-constraint");
}

#[test]
fn supercong_range() {
    let (code, v) = json(&["supercong", "S1.2", "--primes", "5..37"]);
    assert_eq!(code, 0);
    let res = v["results"].as_array().unwrap();
    assert_eq!(res.len(), 10);
    assert!(res.iter().all(|r| r["verdict"] == "pass"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["verify", "no-such-id"]).0, 2);
    assert_eq!(run(&["verify", "T1.1-full", "--n", "x"]).0, 2);
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["verify", "T1.1-full", "--a", "2"]).0, 2);
    assert_eq!(run(&["--help"]).0, 0);
}

#[test]
fn json_is_reproducible() {
    let args = ["verify", "T4.4", "--n", "1..7"];
    let (_, mut a) = json(&args);
    let (_, mut b) = json(&args);
    a["run_metadata"]["timestamp"] = Value::Null;
    b["run_metadata"]["timestamp"] = Value::Null;
    assert_eq!(serde_json::to_string(&a).unwrap(), serde_json::to_string(&b).unwrap());
    assert_eq!(a["run_metadata"]["config"]["command"], "verify");
}

#[test]
fn rationals_are_strings() {
    let (_, v) = json(&["verify", "L3.2", "--n", "5", "--a", "1/3"]);
    assert_eq!(v["results"][0]["params"]["a"], "1/3");
}

#[test]
fn empty_results_are_valid_json() {
    let doc = report::to_json(&[], "t", Value::Null);
    assert_eq!(doc["results"], Value::Array(vec![]));
    assert!(doc["run_metadata"].is_object());
}

#[test]
fn csv_columns() {
    let (code, out, _) = run(&["--format", "csv", "--no-timing", "verify", "T4.8", "--n", "1", "--d", "3", "--r", "1"]);
    assert_eq!(code, 0);
    let mut lines = out.lines();
    assert_eq!(lines.next().unwrap(), "id,n,extra_params,trunc,verdict,millis");
    assert_eq!(lines.next().unwrap(), "T4.8,1,a=symbolic;d=3;r=1,full,pass,0");
}

#[test]
fn text_table_and_list() {
    let (code, out, _) = run(&["wz", "--n-max", "2", "--k-max", "2", "--m-max", "5"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("id"));
    assert!(out.contains("WZ-tilde"));
    let (code, out, _) = run(&["list"]);
    assert_eq!(code, 0);
    for id in ["T1.1-full", "C-Guo4-7.1", "S5.Dwork", "B5.4", "q-saalschutz", "WZ-plain"] {
        assert!(out.contains(id), "{}", id);
    }
}

#[test]
fn zeta_and_series() {
    let (code, v) = json(&["zeta", "T1.4-full", "--d", "5,7", "--a", "2"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"].as_array().unwrap().len(), 2);
    let (code, v) = json(&["series", "q-saalschutz", "--big-n", "0..2"]);
    assert_eq!(code, 0);
    assert_eq!(v["results"].as_array().unwrap().len(), 3);
}

#[test]
fn out_dir_from_environment() {
    let dir = tempfile::tempdir().unwrap();
    let st = Command::new(env!("CARGO_BIN_EXE_qcong"))
        .args(["--format", "csv", "verify", "T1.1-full", "--n", "5"])
        .env("QCONG_OUT_DIR", dir.path())
        .stdout(std::process::Stdio::null())
        .status()
        .unwrap();
    assert_eq!(st.code(), Some(0));
    let text = std::fs::read_to_string(dir.path().join("qcong-verify.csv")).unwrap();
    assert!(text.contains("T1.1-full,5,"));
}

#[test]
fn explicit_out_path() {
    let dir = tempfile::tempdir().unwrap();
    let p = dir.path().join("sub").join("r.json");
    let (code, out, _) = run(&["--format", "json", "--out", p.to_str().unwrap(), "verify", "T1.1-half", "--n", "7"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("wrote"));
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&p).unwrap()).unwrap();
    assert_eq!(v["results"][0]["id"], "T1.1-half");
}

#[test]
fn int_lists() {
    assert_eq!(parse_int_list("1..3,7").unwrap(), vec![1, 2, 3, 7]);
    assert_eq!(parse_int_list("2..=4").unwrap(), vec![2, 3, 4]);
    assert!(parse_int_list("").is_err());
}

fn stub(status: Status, verdict: Verdict) -> VerificationReport {
    let mut r = VerificationReport::new("stub", status);
    match verdict {
        Verdict::SkippedConstraint => return VerificationReport::skipped("stub", status, "stub"),
        v => r.push_part(PartReport {
            modulus_part: "m".into(),
            divisible: v == Verdict::Pass,
            coprime: true,
            valuation: None,
        }),
    }
    r
}

fn status() -> impl Strategy<Value = Status> {
    prop_oneof![
        Just(Status::Theorem),
        Just(Status::Conjecture),
        Just(Status::Informational)
    ]
}

fn verdict() -> impl Strategy<Value = Verdict> {
    prop_oneof![
        Just(Verdict::Pass),
        Just(Verdict::Fail),
        Just(Verdict::SkippedConstraint)
    ]
}

proptest! {
    #[test]
    fn exit_code_contract(rs in prop::collection::vec((status(), verdict()), 0..12), strict in any::<bool>()) {
        let reports: Vec<_> = rs.iter().map(|&(s, v)| stub(s, v)).collect();
        let theorem_fail = rs.iter().any(|&(s, v)| s == Status::Theorem && v == Verdict::Fail);
        let conj_fail = rs.iter().any(|&(s, v)| s == Status::Conjecture && v == Verdict::Fail);
        let want = i32::from(theorem_fail || (strict && conj_fail));
        prop_assert_eq!(exit_code(&reports, strict), want);
    }
}
