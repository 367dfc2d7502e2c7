use std::path::Path;
use std::process::Command;
use std::time::Instant;

use pentagon_cli::selftest::{self, TITLES};
use pentagon_cli::Document;
use pentagon_core::pentagon::MpeSolution;
use pentagon_core::{CheckReport, FieldSpec, LegMap, Matrix};
use serde_json::Value;

// Dense oracle: Φ12, Φ13, Φ23 as explicit Kronecker products.

fn swap23(f: FieldSpec, a: usize, b: usize, c: usize) -> Matrix {
    // (x, y, z) ↦ (x, z, y) on dims (a, b, c)
    Matrix::from_fn(f, a * b * c, a * b * c, |r, col| {
        let (x, y, z) = (col / (b * c), (col / c) % b, col % c);
        if r == (x * c + z) * b + y {
            f.one()
        } else {
            f.zero()
        }
    })
}

fn legs12(m: &Matrix, third: usize) -> Matrix {
    m.kron(&Matrix::identity(m.field(), third)).unwrap()
}

fn legs23(m: &Matrix, first: usize) -> Matrix {
    Matrix::identity(m.field(), first).kron(m).unwrap()
}

/// `X13` for `X` on dims `(a, b)` inside `a ⊗ c ⊗ b`.
fn legs13(m: &Matrix, a: usize, b: usize, c: usize) -> Matrix {
    let p_in = swap23(m.field(), a, c, b);
    let p_out = swap23(m.field(), a, b, c);
    p_out.mul(&legs12(m, c)).unwrap().mul(&p_in).unwrap()
}

fn dense_mpe_residual(f: &LegMap, phi: &LegMap) -> usize {
    let (v, m) = (f.domain()[0].dim(), f.domain()[1].dim());
    let (fm, pm) = (f.matrix(), phi.matrix());
    let lhs = legs12(fm, v)
        .mul(&legs13(fm, v, v, m))
        .unwrap()
        .mul(&legs23(pm, v))
        .unwrap();
    let rhs = legs23(fm, v).mul(&legs12(fm, m)).unwrap();
    lhs.diff_count(&rhs).unwrap()
}

fn dense_pentagon_residual(phi: &LegMap) -> usize {
    dense_mpe_residual(phi, phi)
}

fn oracle_cross_check(n: usize) -> CheckReport {
    let mut r = CheckReport::new("dense_oracle");
    match n {
        1 => {
            for (label, hm) in selftest::modules() {
                if hm.space().dim() > 8 {
                    continue;
                }
                let phi = pentagon_core::hopf::phi_from_hopf_module(&hm).unwrap();
                r.record(label, dense_pentagon_residual(phi.phi()));
            }
        }
        6 => {
            for (label, s) in selftest::mpe_corpus().unwrap() {
                if s.v().dim() * s.m().dim() > 24 {
                    continue;
                }
                r.record(label, dense_mpe_residual(s.f(), s.phi()));
            }
            // corrupted pairs must be caught by the oracle too; c1 is skipped
            // since a scalar multiple of F is again a solution
            let corpus = selftest::mpe_corpus().unwrap();
            let (label, s) = corpus.iter().find(|(l, _)| l == "c2.flip").unwrap();
            let bad = selftest::corrupt(s.f());
            if bad.is_invertible() {
                r.require(
                    format!("{label} corrupted"),
                    dense_mpe_residual(&bad, s.phi()) > 0,
                );
                let checked = MpeSolution::new(bad, s.phi().clone()).unwrap();
                r.require(format!("{label} corrupted rejected"), !checked.is_verified());
            }
        }
        _ => {}
    }
    r
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_pentagon"))
}

fn run_bin(args: &[&str]) -> (i32, Value) {
    let out = bin().args(args).output().unwrap();
    let code = out.status.code().unwrap();
    let v = serde_json::from_slice(&out.stdout).unwrap_or(Value::Null);
    (code, v)
}

fn binary_checks(dir: &Path) -> CheckReport {
    let mut r = CheckReport::new("binary");
    let p = |name: &str| dir.join(name).to_string_lossy().into_owned();
    let (code, v) = run_bin(&["selftest"]);
    r.require("selftest exit 0", code == 0 && v["pass"] == true);

    let (code, _) = run_bin(&["example", "--name", "c2", "--out", &p("m.json")]);
    r.require("example exit 0", code == 0);
    let (code, _) = run_bin(&["check-pe", "--in", &p("m.json")]);
    r.require("check-pe exit 0", code == 0);

    let text = std::fs::read_to_string(p("m.json")).unwrap();
    let doc = Document::parse(&text).unwrap();
    r.require("written document is canonical", doc.emit() == text);
    let mut bad = doc.clone();
    let phi = bad.maps.get_mut("phi").unwrap();
    *phi = selftest::corrupt(phi);
    std::fs::write(p("bad.json"), bad.emit()).unwrap();
    let (code, v) = run_bin(&["check-pe", "--in", &p("bad.json")]);
    let counted = v["certificates"][0]["violations"][0]["count"]
        .as_u64()
        .unwrap_or(0);
    r.require("corrupted check-pe exit 1", code == 1 && counted > 0);

    std::fs::write(p("broken.json"), "{\"field\": ").unwrap();
    let (code, _) = run_bin(&["check-pe", "--in", &p("broken.json")]);
    r.require("malformed JSON exit 2", code == 2);

    run_bin(&["example", "--name", "c2", "--mult", "3", "--out", &p("m3.json")]);
    let (code, v) = run_bin(&["reconstruct", "--in", &p("m3.json")]);
    r.require(
        "reconstruct c2 x3",
        code == 0 && v["summary"]["dim_H"] == 2 && v["summary"]["dim_coinv"] == 3,
    );
    r
}

fn main() {
    let dir = tempfile::tempdir().unwrap();
    let mut failed = Vec::new();
    for (i, title) in TITLES.iter().enumerate() {
        let n = i + 1;
        let start = Instant::now();
        let mut reports = vec![selftest::criterion(n), oracle_cross_check(n)];
        if n == 11 {
            reports.push(binary_checks(dir.path()));
        }
        let pass = reports.iter().all(CheckReport::pass);
        println!(
            "criterion {n:>2} {title:<26} {} ({:.1}s)",
            if pass { "PASS" } else { "FAIL" },
            start.elapsed().as_secs_f64()
        );
        for r in reports.iter().filter(|r| !r.pass()) {
            println!("    {r}");
        }
        if !pass {
            failed.push(n);
        }
    }
    if !failed.is_empty() {
        eprintln!("failed criteria: {failed:?}");
        std::process::exit(1);
    }
}
