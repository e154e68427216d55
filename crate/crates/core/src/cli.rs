//! Batch commands behind the `latroid` binary.
//!
//! Every command turns a [`ProblemConfig`] into a JSON report carrying
//! `schema_version` and `command`; the text format is rendered from the same
//! value so both carry identical numbers.

use std::fmt::Write as _;
use std::str::FromStr;

use serde::Serialize;
use serde_json::{json, Map, Value};

use crate::code_latroids::{
    block_matroid, chain_support_latroid, code_gen_weights_dbar_all, code_gen_weights_dr_all, latroid_from_code,
    latroid_weights_equal_code_weights, rank_metric_latroid, rect_supp_latroid, sum_rank_gen_weights,
    sum_rank_latroid, tilde_polymatroid, validate_q_polymatroid, LengthFn,
};
use crate::codes::{Code, ModuleLattice};
use crate::config::ProblemConfig;
use crate::enumerators::{
    enumerator_from_tutte, generalized_enumerator, homogeneous_enumerator, homogenize, pir_tutte_corollary,
    refined_enumerator, tutte_whitney_r, tutte_whitney_rprime, weight_distribution, ExpPoly,
};
use crate::error::{Error, Result};
use crate::isometries::{
    decompose_chain_isometry, equivalence_invariance_check, factor_support, is_isometry, pir_isometry_projections,
    RingMatrix,
};
use crate::latroid::{axioms_bases, axioms_circuits, axioms_independent, crypto_roundtrip, Latroid};
use crate::limits;
use crate::report::Report;
use crate::ring::Pir;
use crate::selftest;

pub const SCHEMA_VERSION: u32 = 1;
/// Default bound on `|R|^n` for exhaustive commands.
pub const DEFAULT_CAP: u64 = 1 << 16;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    ValidateSupport,
    Latroid,
    Axioms,
    CryptoRoundtrip,
    Weights,
    Enumerator,
    Tutte,
    Circuits,
    Isometry,
    Selftest,
}

impl Command {
    pub const ALL: [Command; 10] = [
        Command::ValidateSupport,
        Command::Latroid,
        Command::Axioms,
        Command::CryptoRoundtrip,
        Command::Weights,
        Command::Enumerator,
        Command::Tutte,
        Command::Circuits,
        Command::Isometry,
        Command::Selftest,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Command::ValidateSupport => "validate-support",
            Command::Latroid => "latroid",
            Command::Axioms => "axioms",
            Command::CryptoRoundtrip => "crypto-roundtrip",
            Command::Weights => "weights",
            Command::Enumerator => "enumerator",
            Command::Tutte => "tutte",
            Command::Circuits => "circuits",
            Command::Isometry => "isometry",
            Command::Selftest => "selftest",
        }
    }
}

impl FromStr for Command {
    type Err = Error;

    fn from_str(s: &str) -> Result<Command> {
        Command::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown command {s:?}")))
    }
}

/// A report and the exit status it calls for (0, or 1 when a check failed).
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub report: Value,
    pub status: i32,
}

fn to_value<T: Serialize>(x: &T) -> Value {
    serde_json::to_value(x).expect("report types serialize")
}

fn poly(p: &ExpPoly) -> Value {
    json!({ "text": p.to_string(), "polynomial": to_value(p) })
}

fn check_cap(ring: &Pir, n: usize, cap: u64) -> Result<()> {
    let size = limits::pow_sat(ring.size() as u64, n);
    if size > cap as u128 {
        return Err(Error::CapExceeded {
            what: "exhaustive enumeration of R^n (raise with --cap)",
            size,
            cap: cap as u128,
        });
    }
    Ok(())
}

fn header(cmd: Command) -> Map<String, Value> {
    let mut m = Map::new();
    m.insert("schema_version".into(), json!(SCHEMA_VERSION));
    m.insert("command".into(), json!(cmd.name()));
    m
}

fn describe_problem(m: &mut Map<String, Value>, cfg: &ProblemConfig) {
    if let Ok(r) = cfg.ring() {
        m.insert("ring".into(), json!(r.to_string()));
    }
    if let Ok(n) = cfg.n() {
        m.insert("n".into(), json!(n));
    }
}

fn is_matrix_lattice(name: &str) -> bool {
    matches!(name, "rank" | "sum-rank" | "tilde")
}

fn build_latroid(cfg: &ProblemConfig) -> Result<Latroid> {
    let name = cfg.lattice_name();
    if is_matrix_lattice(name) {
        let mc = cfg.matrix_code()?;
        return match name {
            "rank" => rank_metric_latroid(&mc),
            "sum-rank" => sum_rank_latroid(&mc, cfg.convention.unwrap_or_default()),
            _ => tilde_polymatroid(&mc),
        };
    }
    let c = cfg.code()?;
    match name {
        "chain" => chain_support_latroid(&c),
        "submodule" => {
            let lat = ModuleLattice::of(&Code::full(c.ring(), c.n())?)?;
            latroid_from_code(&c, &LengthFn::Lambda, &lat)
        }
        "rect" => rect_supp_latroid(&c, &cfg.support_fn(c.n())?),
        "block" => block_matroid(&c),
        other => Err(Error::InvalidArgument(format!(
            "unknown lattice {other:?} (chain, submodule, rect, block, rank, sum-rank, tilde)"
        ))),
    }
}

fn latroid_value(lt: &Latroid) -> Value {
    let lat = lt.lattice();
    let elements: Vec<Value> = (0..lt.size())
        .map(|a| json!({ "label": lat.label(a).to_string(), "rho": lt.rho(a), "len": lt.len(a) }))
        .collect();
    json!({
        "size": lt.size(),
        "u": lt.u(),
        "flags": to_value(&lat.flags()),
        "top_rank": lt.top_rank(),
        "elements": elements,
    })
}

fn labels(lt: &Latroid, items: &[usize]) -> Vec<String> {
    items.iter().map(|&a| lt.lattice().label(a).to_string()).collect()
}

fn status(ok: bool) -> i32 {
    if ok {
        0
    } else {
        1
    }
}

/// Runs `cmd`; failed checks give status 1, errors are returned.
pub fn execute(cmd: Command, cfg: &ProblemConfig, seed: u64, cap: u64) -> Result<Outcome> {
    let mut m = header(cmd);
    if cmd == Command::Selftest {
        let results = selftest::run_all(seed);
        let ok = results.iter().all(|r| r.passed);
        m.insert("seed".into(), json!(seed));
        m.insert("criteria".into(), to_value(&results));
        m.insert("passed".into(), json!(ok));
        return Ok(Outcome {
            report: Value::Object(m),
            status: status(ok),
        });
    }
    describe_problem(&mut m, cfg);
    let ring = cfg.ring()?;
    let n = if cmd == Command::Isometry && cfg.generators.is_empty() && cfg.n.is_none() {
        cfg.matrix.len()
    } else {
        cfg.n()?
    };
    check_cap(&ring, n, cap)?;
    let st = match cmd {
        Command::ValidateSupport => {
            let s = cfg.support_fn(n)?;
            let axioms = s.validate()?;
            m.insert("support".into(), json!(cfg.support_name()));
            m.insert("u".into(), json!(s.u()));
            m.insert("axioms".into(), to_value(&axioms));
            if axioms.is_ok() {
                m.insert("modular".into(), to_value(&s.validate_modular()?));
            }
            status(axioms.is_ok())
        }
        Command::Latroid => {
            let lt = build_latroid(cfg)?;
            let v = lt.validate();
            m.insert("lattice".into(), json!(cfg.lattice_name()));
            m.insert("latroid".into(), latroid_value(&lt));
            m.insert("validation".into(), to_value(&v));
            status(v.is_ok())
        }
        Command::Axioms => {
            let lt = build_latroid(cfg)?;
            let mut ok = true;
            let mut put = |key: &str, r: Report| {
                ok &= r.is_ok();
                m.insert(key.into(), to_value(&r));
            };
            put("latroid", lt.validate());
            if is_matrix_lattice(cfg.lattice_name()) {
                put("q_polymatroid", validate_q_polymatroid(&lt));
            }
            let f = lt.lattice().flags();
            if f.is_complemented && f.is_modular && lt.is_height_latroid() {
                let lat = lt.lattice();
                put("independents", axioms_independent(lat, &lt.independents())?);
                put("bases", axioms_bases(lat, &lt.bases())?);
                put("circuits", axioms_circuits(lat, &lt.circuits())?);
            }
            m.insert("lattice".into(), json!(cfg.lattice_name()));
            status(ok)
        }
        Command::CryptoRoundtrip => {
            let lt = build_latroid(cfg)?;
            let r = crypto_roundtrip(&lt)?;
            m.insert("lattice".into(), json!(cfg.lattice_name()));
            m.insert("roundtrip".into(), to_value(&r));
            m.insert("passed".into(), json!(r.is_ok()));
            status(r.is_ok())
        }
        Command::Circuits => {
            let lt = build_latroid(cfg)?;
            m.insert("lattice".into(), json!(cfg.lattice_name()));
            m.insert("circuits".into(), json!(labels(&lt, &lt.circuits())));
            m.insert("bases".into(), json!(labels(&lt, &lt.bases())));
            m.insert("independents".into(), json!(lt.independents().len()));
            0
        }
        Command::Weights => {
            if cfg.shapes.is_empty() {
                let c = cfg.code()?;
                let s = cfg.support_fn(n)?;
                m.insert("support".into(), json!(cfg.support_name()));
                m.insert("lambda".into(), json!(c.lambda()));
                m.insert("mu".into(), json!(c.mu()));
                m.insert("dr".into(), json!(code_gen_weights_dr_all(&c, &s)?));
                m.insert("dbar".into(), json!(code_gen_weights_dbar_all(&c, &s)?));
                if cfg.support_name() == "chain" {
                    let rows = latroid_weights_equal_code_weights(&c)?;
                    let lw: Vec<i64> = rows.iter().map(|w| w.latroid).collect();
                    m.insert("latroid_dr".into(), json!(lw));
                }
            } else {
                let mc = cfg.matrix_code()?;
                m.insert("shapes".into(), json!(mc.shapes()));
                m.insert("dim".into(), json!(mc.dim()));
                m.insert("sum_rank_weights".into(), json!(sum_rank_gen_weights(&mc)?));
            }
            0
        }
        Command::Enumerator => {
            let c = cfg.code()?;
            let s = cfg.support_fn(n)?;
            m.insert("support".into(), json!(cfg.support_name()));
            m.insert("refined".into(), poly(&refined_enumerator(&c, &s)?));
            m.insert("homogeneous".into(), poly(&homogeneous_enumerator(&c, &s)?));
            m.insert("distribution".into(), json!(weight_distribution(&c, &s)?));
            if let Some((a, b)) = cfg.r {
                let gen = (a..=b)
                    .map(|r| Ok(json!({ "r": r, "enumerator": poly(&generalized_enumerator(&c, &s, r)?) })))
                    .collect::<Result<Vec<_>>>()?;
                m.insert("generalized".into(), Value::Array(gen));
            }
            0
        }
        Command::Tutte => {
            let c = cfg.code()?;
            let lt = chain_support_latroid(&c)?;
            let from_tutte = enumerator_from_tutte(&c)?;
            let refined = refined_enumerator(&c, &crate::supports::SupportFn::chain(&ring, n))?;
            let ok = from_tutte == refined;
            m.insert("r".into(), poly(&tutte_whitney_r(&lt)?));
            m.insert("rprime".into(), poly(&tutte_whitney_rprime(&lt)?));
            m.insert("refined".into(), poly(&from_tutte));
            m.insert("w".into(), poly(&homogenize(&from_tutte)));
            m.insert("identity".into(), json!(ok));
            let mut all = ok;
            if ring.num_factors() > 1 {
                let cor = pir_tutte_corollary(&c)?;
                all &= cor.is_ok();
                m.insert("corollary".into(), to_value(&cor));
            }
            status(all)
        }
        Command::Isometry => isometry(cfg, &ring, n, &mut m)?,
        Command::Selftest => unreachable!("handled above"),
    };
    Ok(Outcome {
        report: Value::Object(m),
        status: st,
    })
}

fn decomposition(mat: &RingMatrix, s: &crate::supports::SupportFn) -> Value {
    match decompose_chain_isometry(mat, s) {
        Ok(d) => to_value(&d),
        Err(e) => json!({ "error": e.to_string() }),
    }
}

fn isometry(cfg: &ProblemConfig, ring: &Pir, n: usize, m: &mut Map<String, Value>) -> Result<i32> {
    let mat = RingMatrix::from_elements(ring, cfg.matrix_rows()?)?;
    if mat.n() != n {
        return Err(Error::DimensionMismatch {
            expected: n,
            got: mat.n(),
        });
    }
    let s = cfg.support_fn(n)?;
    let iso = is_isometry(&mat, &s)?;
    m.insert("support".into(), json!(cfg.support_name()));
    m.insert("matrix".into(), to_value(&mat));
    m.insert("isometry".into(), json!(iso));
    if !iso {
        return Ok(1);
    }
    let mut ok = true;
    if ring.is_chain_ring() {
        m.insert("decomposition".into(), decomposition(&mat, &s));
    } else {
        let proj = pir_isometry_projections(&mat, &s)?
            .into_iter()
            .map(|(i, p)| {
                let fs = factor_support(&s, i)?;
                Ok(json!({
                    "factor": i,
                    "ring": ring.factor_ring(i).to_string(),
                    "matrix": to_value(&p),
                    "decomposition": decomposition(&p, &fs),
                }))
            })
            .collect::<Result<Vec<_>>>()?;
        m.insert("projections".into(), Value::Array(proj));
    }
    if !cfg.generators.is_empty() {
        let r = equivalence_invariance_check(&cfg.code()?, &mat, &s)?;
        ok &= r.is_ok();
        m.insert("invariance".into(), to_value(&r));
    }
    Ok(status(ok))
}

/// Report for a failed run.
pub fn error_report(cmd: Option<&str>, e: &Error) -> Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "command": cmd,
        "error": { "message": e.to_string(), "exit_code": e.exit_code() },
    })
}

fn scalar_text(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("null".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) => {
            let parts: Option<Vec<String>> = items.iter().map(scalar_text).collect();
            parts.map(|p| format!("[{}]", p.join(", ")))
        }
        Value::Object(m) if m.len() == 2 && m.contains_key("polynomial") => m["text"].as_str().map(String::from),
        Value::Object(_) => None,
    }
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match scalar_text(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}{k}: {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}{k}:");
                        render(x, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for x in items {
                match scalar_text(x) {
                    Some(s) => {
                        let _ = writeln!(out, "{pad}- {s}");
                    }
                    None => {
                        let _ = writeln!(out, "{pad}-");
                        render(x, indent + 1, out);
                    }
                }
            }
        }
        _ => {
            let _ = writeln!(out, "{pad}{}", scalar_text(v).unwrap_or_default());
        }
    }
}

/// Human-readable form of a report. Selftest reports become a pass/fail
/// table; everything else is an indented key/value listing.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    if v["command"] == "selftest" {
        if let Value::Array(items) = &v["criteria"] {
            let _ = writeln!(out, "seed {}", v["seed"]);
            for c in items {
                let verdict = if c["passed"] == true { "PASS" } else { "FAIL" };
                let _ = writeln!(
                    out,
                    "criterion {:>2}  {verdict}  {}: {}",
                    c["id"],
                    c["name"].as_str().unwrap_or(""),
                    c["detail"].as_str().unwrap_or("")
                );
            }
            let _ = writeln!(out, "passed: {}", v["passed"]);
            return out;
        }
    }
    render(v, 0, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(s: &str) -> ProblemConfig {
        ProblemConfig::parse(s).unwrap()
    }

    #[test]
    fn weights_fixture() {
        let out = execute(Command::Weights, &cfg("ring = Z_4\ngen = 1 2"), 0, DEFAULT_CAP).unwrap();
        assert_eq!(out.report["dbar"], json!([1, 3]));
        assert_eq!(out.report["schema_version"], json!(SCHEMA_VERSION));
        assert_eq!(out.status, 0);
    }

    #[test]
    fn tutte_on_zero_code() {
        let out = execute(Command::Tutte, &cfg("ring = Z_4\nn = 1"), 0, DEFAULT_CAP).unwrap();
        assert_eq!(out.report["w"]["text"], "y^2");
        assert_eq!(out.report["identity"], true);
    }

    #[test]
    fn cap_is_enforced() {
        let e = execute(Command::Weights, &cfg("ring = Z_4\ngen = 1 2"), 0, 8).unwrap_err();
        assert_eq!(e.exit_code(), 3);
    }

    #[test]
    fn lee_fails_validation() {
        let out = execute(Command::ValidateSupport, &cfg("ring = Z_4\nn = 1\nsupport = lee"), 0, DEFAULT_CAP).unwrap();
        assert_eq!(out.status, 1);
        assert_eq!(out.report["axioms"]["witness"], "r=2, v=1");
    }

    #[test]
    fn command_names_round_trip() {
        for c in Command::ALL {
            assert_eq!(c.name().parse::<Command>().unwrap(), c);
        }
        assert!("frobnicate".parse::<Command>().is_err());
    }

    #[test]
    fn text_renders_same_numbers() {
        let out = execute(Command::Weights, &cfg("ring = Z_4\ngen = 1 2"), 0, DEFAULT_CAP).unwrap();
        let text = render_text(&out.report);
        assert!(text.contains("dbar: [1, 3]"), "{text}");
    }
}
