use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn fixture(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures").join(name)
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_latroid"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json_of(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is json")
}

fn with_config(name: &str, extra: &[&str]) -> Output {
    let cfg = fixture(name);
    let mut args = vec!["--config", cfg.to_str().unwrap()];
    args.extend_from_slice(extra);
    run(&args)
}

#[test]
fn weights_of_the_z4_fixture() {
    let out = with_config("z4_code.cfg", &[]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["dbar"], serde_json::json!([1, 3]));
    assert_eq!(v["schema_version"], 1);
    assert_eq!(v["command"], "weights");
}

#[test]
fn tutte_of_the_zero_code_is_one_term() {
    let v = json_of(&with_config("zero_code.cfg", &[]));
    assert_eq!(v["w"]["text"], "y^2");
    assert_eq!(v["w"]["polynomial"]["terms"].as_array().unwrap().len(), 1);
    assert_eq!(v["identity"], true);
}

#[test]
fn z6_isometry_projections() {
    let out = with_config("z6_isometry.cfg", &[]);
    assert_eq!(out.status.code(), Some(0));
    let v = json_of(&out);
    assert_eq!(v["isometry"], true);
    let p = v["projections"].as_array().unwrap();
    assert_eq!(p[0]["matrix"], serde_json::json!([[0, 1], [1, 0]]));
    assert_eq!(p[1]["matrix"], serde_json::json!([[2, 0], [0, 2]]));
    assert_eq!(v["invariance"]["big_m"], serde_json::json!([2, 2]));
}

#[test]
fn command_flag_overrides_config() {
    let v = json_of(&with_config("z4_code.cfg", &["--command", "enumerator"]));
    assert_eq!(v["command"], "enumerator");
    assert_eq!(v["homogeneous"]["text"], "2*x^3*y + x*y^3 + y^4");
}

#[test]
fn exit_codes() {
    let lee = with_config("lee.cfg", &[]);
    assert_eq!(lee.status.code(), Some(1));
    assert_eq!(json_of(&lee)["axioms"]["witness"], "r=2, v=1");
    assert_eq!(run(&["--command", "weights"]).status.code(), Some(2));
    assert_eq!(with_config("z4_code.cfg", &["--command", "nope"]).status.code(), Some(2));
    let capped = with_config("z4_code.cfg", &["--cap", "4"]);
    assert_eq!(capped.status.code(), Some(3));
    assert_eq!(json_of(&capped)["error"]["exit_code"], 3);
}

#[test]
fn missing_hypothesis_is_an_input_error() {
    let out = with_config("rank_metric.cfg", &["--command", "crypto-roundtrip"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn output_is_deterministic() {
    for f in ["z4_code.cfg", "pir_code.cfg", "sum_rank.cfg", "rank_metric.cfg"] {
        let a = with_config(f, &[]);
        let b = with_config(f, &[]);
        assert_eq!(a.stdout, b.stdout, "{f}");
    }
}

#[test]
fn out_file_round_trips() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let out = with_config("pir_code.cfg", &["--out", path.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert!(out.stdout.is_empty());
    let v: Value = serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["corollary"]["tutte_identity"], true);
    let again = serde_json::to_string(&v).unwrap();
    assert_eq!(serde_json::from_str::<Value>(&again).unwrap(), v);
    assert_eq!(std::fs::read_dir(dir.path()).unwrap().count(), 1);
}

#[test]
fn text_and_json_agree() {
    let v = json_of(&with_config("z4_code.cfg", &[]));
    let text = String::from_utf8(with_config("z4_code.cfg", &["--format", "text"]).stdout).unwrap();
    for key in ["dbar", "dr", "latroid_dr"] {
        let nums: Vec<String> = v[key].as_array().unwrap().iter().map(|x| x.to_string()).collect();
        assert!(text.contains(&format!("{key}: [{}]", nums.join(", "))), "{text}");
    }
    assert!(text.contains(&format!("lambda: {}", v["lambda"])));
}

#[test]
fn latroid_and_axioms_commands() {
    let v = json_of(&with_config("rank_metric.cfg", &[]));
    assert_eq!(v["validation"]["valid"], true);
    assert_eq!(v["latroid"]["size"], 5);
    let ax = with_config("sum_rank.cfg", &[]);
    assert_eq!(ax.status.code(), Some(0));
    let c = json_of(&with_config("z4_code.cfg", &["--command", "circuits"]));
    assert!(!c["circuits"].as_array().unwrap().is_empty());
}

#[test]
fn selftest_prints_a_table() {
    let out = run(&["--command", "selftest", "--format", "text"]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert_eq!(text.lines().filter(|l| l.starts_with("criterion")).count(), 10, "{text}");
    assert_eq!(out.status.code(), Some(0), "{text}");
}
