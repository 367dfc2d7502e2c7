use std::path::{Path, PathBuf};
use std::process::Command;

use pentagon_cli::selftest::corrupt;
use pentagon_cli::{run, Document, Outcome};
use serde_json::Value;

fn p(dir: &Path, name: &str) -> String {
    dir.join(name).to_string_lossy().into_owned()
}

fn pentagon(args: &[&str]) -> (Outcome, Value) {
    let out = run(std::iter::once("pentagon").chain(args.iter().copied()));
    let v = serde_json::from_str(&out.stdout).unwrap_or(Value::Null);
    (out, v)
}

fn example(dir: &Path, name: &str, extra: &[&str]) -> String {
    let file = p(dir, &format!("{name}{}.json", extra.join("")));
    let mut args = vec!["example", "--name", name, "--out", &file];
    args.extend_from_slice(extra);
    let (out, _) = pentagon(&args);
    assert_eq!(out.code, 0, "{}", out.stdout);
    file
}

fn cert_names(v: &Value) -> Vec<String> {
    v["certificates"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap().to_string())
        .collect()
}

#[test]
fn c2_pipeline() {
    let dir = tempfile::tempdir().unwrap();
    let m = example(dir.path(), "c2", &[]);
    let (out, v) = pentagon(&["check-pe", "--in", &m]);
    assert_eq!(out.code, 0);
    assert_eq!(v["command"], "check-pe");
    assert_eq!(v["pass"], true);
    let (out, _) = pentagon(&["check-mpe", "--in", &m]);
    assert_eq!(out.code, 0);
}

#[test]
fn corrupted_phi_exits_one() {
    let dir = tempfile::tempdir().unwrap();
    let m = example(dir.path(), "c2", &[]);
    let mut doc = Document::parse(&std::fs::read_to_string(&m).unwrap()).unwrap();
    let phi = doc.maps.get_mut("phi").unwrap();
    *phi = corrupt(phi);
    let bad = p(dir.path(), "bad.json");
    std::fs::write(&bad, doc.emit()).unwrap();
    let (out, v) = pentagon(&["check-pe", "--in", &bad]);
    assert_eq!(out.code, 1);
    assert_eq!(v["pass"], false);
    assert!(v["certificates"][0]["violations"][0]["count"].as_u64().unwrap() > 0);
}

#[test]
fn reconstruct_multiplicity_three() {
    let dir = tempfile::tempdir().unwrap();
    let m = example(dir.path(), "c2", &["--mult", "3"]);
    let (out, v) = pentagon(&["reconstruct", "--in", &m]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert_eq!(v["summary"]["dim_H"], 2);
    assert_eq!(v["summary"]["dim_coinv"], 3);
    assert_eq!(v["summary"]["dim_M"], 6);
    let outputs = &v["outputs"]["maps"];
    for k in [
        "mu", "unit", "delta", "counit", "antipode", "action", "coaction", "theta",
    ] {
        assert!(outputs.get(k).is_some(), "missing {k}");
    }
}

#[test]
fn usage_errors_exit_two() {
    let (out, _) = pentagon(&["no-such-command"]);
    assert_eq!(out.code, 2);
    let (out, _) = pentagon(&["check-pe", "--in", "/nonexistent/file.json"]);
    assert_eq!(out.code, 2);
    let (out, _) = pentagon(&["example", "--name", "torsor-c3", "--mult", "2"]);
    assert_eq!(out.code, 2);
    let (out, _) = pentagon(&["example", "--name", "c2", "--field", "F6"]);
    assert_eq!(out.code, 2);
}

#[test]
fn help_exits_zero() {
    let (out, _) = pentagon(&["--help"]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("check-pe"));
}

#[test]
fn reports_are_deterministic() {
    let dir = tempfile::tempdir().unwrap();
    let m = example(dir.path(), "sweedler", &[]);
    let (a, _) = pentagon(&["reconstruct", "--in", &m]);
    let (b, _) = pentagon(&["reconstruct", "--in", &m]);
    assert_eq!(a.stdout, b.stdout);
}

#[test]
fn combinators_produce_solutions() {
    let dir = tempfile::tempdir().unwrap();
    let m = example(dir.path(), "c2", &[]);
    let sw = example(dir.path(), "sweedler", &[]);
    for op in ["flip", "op", "mult"] {
        let out_file = p(dir.path(), &format!("{op}.json"));
        let (out, v) = pentagon(&["combine", "--op", op, "--in", &m, "--out", &out_file]);
        assert_eq!(out.code, 0, "{op}: {}", out.stdout);
        assert_eq!(v["pass"], true);
        let doc = Document::parse(&std::fs::read_to_string(&out_file).unwrap()).unwrap();
        let cmd = if op == "mult" { "check-pe" } else { "check-mpe" };
        let (out, _) = pentagon(&[cmd, "--in", &out_file]);
        assert_eq!(out.code, 0, "{op} re-check");
        assert!(doc.get("phi").is_ok());
    }
    let (out, _) = pentagon(&["combine", "--op", "tensor", "--in", &m, "--in2", &sw]);
    assert_eq!(out.code, 0);
    let (out, _) = pentagon(&["combine", "--op", "tensor", "--in", &m]);
    assert_eq!(out.code, 2);
}

#[test]
fn coproduct_and_classification() {
    let dir = tempfile::tempdir().unwrap();
    let m = example(dir.path(), "c2", &[]);
    let delta = p(dir.path(), "delta.json");
    let (out, v) = pentagon(&["coproduct", "--in", &m, "--out", &delta]);
    assert_eq!(out.code, 0);
    assert_eq!(cert_names(&v), ["coproduct"]);
    let (out, v) = pentagon(&["classify-coproduct", "--in", &delta]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert_eq!(v["summary"]["dim_V"], 2);
    let (out, _) = pentagon(&["extract-phi", "--in", &m]);
    assert_eq!(out.code, 0);
}

#[test]
fn hopf_commands() {
    let dir = tempfile::tempdir().unwrap();
    for name in ["c3", "dual-c2", "sweedler"] {
        let m = example(dir.path(), name, &["--mult", "2"]);
        for cmd in ["hopf-axioms", "hopf-module", "hopf-phi", "mpe-reconstruct"] {
            let (out, v) = pentagon(&[cmd, "--in", &m]);
            assert_eq!(out.code, 0, "{name} {cmd}: {}", out.stdout);
            assert_eq!(v["pass"], true);
        }
    }
}

#[test]
fn galois_examples() {
    let dir = tempfile::tempdir().unwrap();
    let t = example(dir.path(), "torsor-c3", &[]);
    let (out, v) = pentagon(&["galois", "--in", &t]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert!(v["outputs"]["maps"].get("F").is_some());
    let (out, _) = pentagon(&["build-fv", "--in", &t]);
    assert_eq!(out.code, 0);
    let n = example(dir.path(), "nongalois-2pt", &[]);
    let (out, v) = pentagon(&["galois", "--in", &n]);
    assert_eq!(out.code, 1);
    assert_eq!(v["pass"], false);
}

#[test]
fn equivalence_by_identity() {
    let dir = tempfile::tempdir().unwrap();
    let m = example(dir.path(), "c2", &[]);
    let doc = Document::parse(&std::fs::read_to_string(&m).unwrap()).unwrap();
    let f = doc.get("F").unwrap();
    let field = doc.field;
    let morph = Document::new(field)
        .with("f", &pentagon_core::LegMap::identity(field, &f.codomain()[..1]))
        .unwrap()
        .with("g", &pentagon_core::LegMap::identity(field, &f.domain()[1..]))
        .unwrap();
    let mf = p(dir.path(), "morph.json");
    std::fs::write(&mf, morph.emit()).unwrap();
    let (out, _) = pentagon(&["equiv", "--in", &m, "--in2", &m, "--morph", &mf]);
    assert_eq!(out.code, 0, "{}", out.stdout);
}

#[test]
fn phi_module_commands() {
    let dir = tempfile::tempdir().unwrap();
    let m = example(dir.path(), "c2", &[]);
    let mut doc = Document::parse(&std::fs::read_to_string(&m).unwrap()).unwrap();
    let phi = doc.get("phi").unwrap().clone();
    doc.insert("psi", &phi).unwrap();
    let with_psi = p(dir.path(), "psi.json");
    std::fs::write(&with_psi, doc.emit()).unwrap();
    let (out, v) = pentagon(&["phimod-check", "--in", &with_psi]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert_eq!(cert_names(&v), ["phi_module"]);
    let (out, v) = pentagon(&["phimod-tensor", "--in", &with_psi, "--in2", &with_psi]);
    assert_eq!(out.code, 0, "{}", out.stdout);
    assert_eq!(v["summary"]["dim_X"], 4);
}

fn binary() -> PathBuf {
    PathBuf::from(env!("CARGO_BIN_EXE_pentagon"))
}

#[test]
fn binary_exit_codes() {
    let dir = tempfile::tempdir().unwrap();
    let m = p(dir.path(), "m.json");
    let st = Command::new(binary())
        .args(["example", "--name", "c2", "--out", &m])
        .output()
        .unwrap();
    assert_eq!(st.status.code(), Some(0));
    let st = Command::new(binary())
        .args(["check-pe", "--in", &m])
        .output()
        .unwrap();
    assert_eq!(st.status.code(), Some(0));
    let broken = p(dir.path(), "broken.json");
    std::fs::write(&broken, "[1, 2").unwrap();
    let out = Command::new(binary())
        .args(["check-pe", "--in", &broken])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(2));
    assert!(!out.stderr.is_empty());
}
