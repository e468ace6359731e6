mod common;

use std::process::Command;

use degen_appell::rational;
use degen_appell::MultiPoly;
use serde_json::Value;

struct Run {
    code: i32,
    stdout: String,
    stderr: String,
}

fn dmhap(args: &str) -> Run {
    let out = Command::new(env!("CARGO_BIN_EXE_dmhap"))
        .args(args.split_whitespace())
        .output()
        .expect("binary runs");
    Run {
        code: out.status.code().expect("exit code"),
        stdout: String::from_utf8(out.stdout).unwrap(),
        stderr: String::from_utf8(out.stderr).unwrap(),
    }
}

fn json(args: &str) -> Value {
    let run = dmhap(args);
    assert_eq!(run.code, 0, "{args}: {}", run.stderr);
    serde_json::from_str(&run.stdout).unwrap()
}

#[test]
fn gen_identity_json() {
    let v = json("gen --family identity --r 2 --n-max 2 --format json");
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["family"], "identity");
    assert_eq!(v["N"], 2);
    let polys: Vec<&str> = v["entries"].as_array().unwrap().iter().map(|e| e["poly"].as_str().unwrap()).collect();
    assert_eq!(polys, ["1", "L*l1", "L^2*l1^2 + 2*L*l2"]);
}

#[test]
fn gen_small_tables() {
    assert_eq!(dmhap("gen --family bernoulli --n-max 0").stdout, "0: 1\n");
    assert_eq!(dmhap("gen --family genocchi --n-max 1").stdout, "0: 0\n1: 1\n");
}

#[test]
fn gen_json_text_reparses() {
    let v = json("gen --family euler --r 3 --n-max 6 --format json");
    for entry in v["entries"].as_array().unwrap() {
        let text = entry["poly"].as_str().unwrap();
        assert_eq!(MultiPoly::parse(text, 3).unwrap().to_text(), text);
    }
}

#[test]
fn gen_csv_and_latex() {
    let csv = dmhap("gen --r 2 --n-max 2 --format csv").stdout;
    assert_eq!(csv, "n,polynomial_text\n0,1\n1,L*l1\n2,L^2*l1^2 + 2*L*l2\n");
    let tex = dmhap("gen --r 2 --n-max 2 --format latex").stdout;
    assert_eq!(tex.matches("\\begin{aligned}").count(), 3);
    assert!(tex.contains("\\lambda^{2} l_{1}^{2} + 2 \\lambda l_{2}"));
}

#[test]
fn output_flag_writes_file() {
    let path = std::env::temp_dir().join(format!("dmhap-out-{}.txt", std::process::id()));
    let run = dmhap(&format!("gen --n-max 1 --output {}", path.display()));
    assert_eq!(run.code, 0);
    assert!(run.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), "0: 1\n1: L*l1\n");
    std::fs::remove_file(path).unwrap();
}

#[test]
fn check_examples() {
    assert_eq!(dmhap("check all --family identity --r 3 --n-max 8").code, 0);
    assert_eq!(dmhap("check all --n-max 0").code, 0);

    let v = json("check scaling --family bernoulli --I 1 --S 2 --n-max 1 --format json");
    let report = v["reports"].as_array().unwrap().iter().find(|r| r["n"] == 1).unwrap();
    assert_eq!(report["pass"], false);
    assert_eq!(report["residual_text"], "1/2");
    assert_eq!(report["I"], 1);
}

#[test]
fn check_genocchi_operators() {
    let run = dmhap("check monomiality --family genocchi");
    assert_eq!(run.code, 3);
    assert!(run.stderr.contains("operators unsupported for A(0)=0"));
    let v = json("check all --family genocchi --n-max 4 --format json");
    let skipped = v["suites"].as_array().unwrap().iter().find(|s| s["name"] == "monomiality").unwrap();
    assert!(skipped["skipped"].is_string());
}

#[test]
fn exit_codes() {
    let run = dmhap("gen --family hermite");
    assert_eq!(run.code, 2);
    assert!(run.stderr.contains("unknown family"));
    assert_eq!(dmhap("gen --r 0").code, 2);
    assert_eq!(dmhap("eval --ls 1 --kappa -1").code, 2);
    assert_eq!(dmhap("eval --ls 1 --precision 5").code, 2);
    assert_eq!(dmhap("check scaling --I 3 --S 3").code, 2);
    assert_eq!(dmhap("--help").code, 0);
}

#[test]
fn eval_examples() {
    let at_zero = dmhap("eval --r 2 --n-max 2 --ls 1,1 --kappa 0").stdout;
    assert_eq!(at_zero.lines().last().unwrap(), "2: 3");
    let bern = dmhap("eval --family bernoulli --n-max 1 --ls 0 --kappa 0").stdout;
    assert_eq!(bern.lines().last().unwrap(), "1: -0.5");
}

#[test]
fn eval_at_kappa_one_against_series_for_ln2() {
    let ln2 = common::ln2(140);
    let expected = &ln2 * &ln2 + &ln2 * rational::int(2);
    let v = json("eval --r 2 --n-max 2 --ls 1,1 --kappa 1 --format json");
    assert_eq!(v["values"][2]["value"], rational::to_significant(&expected, 30));
    assert_eq!(v["values"][2]["value"], "1.86674737503809204350156676924");
}

#[test]
fn eval_at_kappa_three() {
    // λ = ln 4 / 3
    let lambda = common::ln2(140) * rational::ratio(2, 3);
    let v = json("eval --n-max 3 --ls 1 --kappa 3 --precision 25 --format json");
    let cube = &lambda * &lambda * &lambda;
    assert_eq!(v["values"][3]["value"], rational::to_significant(&cube, 25));
}

#[test]
fn limit_examples() {
    let v = json("limit --family bernoulli --n-max 2 --format json");
    assert_eq!(v["all_match"], true);
    assert_eq!(v["entries"][2]["limit"], "l1^2 - l1 + 1/6");
    let v = json("limit --r 2 --n-max 2 --format json");
    assert_eq!(v["entries"][2]["oracle"], "l1^2 + 2*l2");
    let v = json("limit --n-max 3 --format json");
    assert_eq!(v["entries"][3]["limit"], "l1^3");
}
