//! End-to-end tests of the binary: exit-code contract, JSON schema
//! round-trips, text/JSON content agreement, and byte-level determinism.

use lpcoh_cli::report::Report;
use std::path::PathBuf;
use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_lpcoh"))
}

fn sample(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../samples").join(name)
}

fn run(args: &[&str]) -> Output {
    bin().args(args).env_remove("LPCOH_TOL").output().expect("binary runs")
}

fn stdout_str(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

#[test]
fn exit_code_contract() {
    // 0: successful classification
    let ok = run(&["classify", sample("aff.json").to_str().unwrap()]);
    assert_eq!(ok.status.code(), Some(0));
    // 1: validation finds violations
    let invalid =
        run(&["validate", sample("bad_antisymmetry.json").to_str().unwrap()]);
    assert_eq!(invalid.status.code(), Some(1));
    assert!(stdout_str(&invalid).contains("antisymmetry violated at (1, 2, 2)"));
    // 2: not solvable
    let sl2 = run(&["classify", sample("sl2.json").to_str().unwrap()]);
    assert_eq!(sl2.status.code(), Some(2));
    // 3: invalid algebra
    let bad = run(&["classify", sample("bad_antisymmetry.json").to_str().unwrap()]);
    assert_eq!(bad.status.code(), Some(3));
    // 4: parse error
    let missing = run(&["classify", "/no/such/file.json"]);
    assert_eq!(missing.status.code(), Some(4));
    // 5: exponent of a non-heintze algebra
    let wrong = run(&["exponent", sample("heisenberg.json").to_str().unwrap()]);
    assert_eq!(wrong.status.code(), Some(5));
}

#[test]
fn validate_accepts_good_files() {
    for name in ["aff.json", "heisenberg.json", "sol.json", "mixed_sign.json", "ch2.json"] {
        let out = run(&["validate", sample(name).to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{name}");
    }
}

#[test]
fn sample_classifications_match_expectations() {
    // The binary itself rejects a mismatch between computed and expected
    // verdicts, so exit 0 is the regression assertion.
    for name in ["aff.json", "heisenberg.json", "sol.json", "mixed_sign.json", "ch2.json"] {
        let out = run(&["classify", sample(name).to_str().unwrap()]);
        assert_eq!(out.status.code(), Some(0), "{name}");
    }
}

#[test]
fn report_round_trips_and_is_exact() {
    let out = run(&["classify", sample("ch2.json").to_str().unwrap(), "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let text = stdout_str(&out);
    let report: Report = serde_json::from_str(&text).unwrap();
    // lossless round-trip through the schema type
    let re = serde_json::to_string(&report).unwrap();
    let report2: Report = serde_json::from_str(&re).unwrap();
    assert_eq!(report, report2);
    assert_eq!(report.schema, "lpcoh-report/v1");
    let e = report.classification.exponent.as_ref().unwrap();
    assert_eq!((e.lo.as_str(), e.hi.as_str()), ("4", "4"));
    // exact fields are rational strings, never decimals
    assert!(!e.lo.contains('.'));
    assert!(report.tol.contains('/'));
    let spectral = report.spectral.as_ref().unwrap();
    assert_eq!(spectral.sum_real_parts, "1");
    assert_eq!(spectral.count_positive, 3);
}

#[test]
fn text_and_json_carry_the_same_numbers() {
    let path = sample("ch2.json");
    let json_out = run(&["classify", path.to_str().unwrap(), "--format", "json"]);
    let text_out = run(&["classify", path.to_str().unwrap(), "--format", "text"]);
    let report: Report = serde_json::from_str(&stdout_str(&json_out)).unwrap();
    let text = stdout_str(&text_out);
    let e = report.classification.exponent.as_ref().unwrap();
    assert!(text.contains(&format!("[{}, {}]", e.lo, e.hi)));
    let sp = report.spectral.as_ref().unwrap();
    assert!(text.contains(&sp.char_poly.join(", ")));
    assert!(text.contains(&format!(
        "{} positive, {} zero, {} negative; sum {}",
        sp.count_positive, sp.count_zero, sp.count_negative, sp.sum_real_parts
    )));
    assert!(text.contains(&report.tol));
}

#[test]
fn whole_catalog_round_trips_through_the_file_format() {
    use lpcoh_cli::input::{AlgebraFile, Expected};
    let dir = std::env::temp_dir().join("lpcoh-catalog-roundtrip");
    std::fs::create_dir_all(&dir).unwrap();
    for entry in lpcoh_core::catalog::entries() {
        let expected = Expected {
            verdict: entry.expected_verdict.to_string(),
            exponent: entry.expected_exponent.as_ref().map(lpcoh_core::rat::format_rat),
        };
        let file = AlgebraFile::from_algebra(entry.name, &entry.algebra, Some(expected));
        let path = dir.join(format!("{}.json", entry.name));
        std::fs::write(&path, serde_json::to_string_pretty(&file).unwrap()).unwrap();
        // classify enforces the stored expectation; exit 0 is the check
        let out = run(&["classify", path.to_str().unwrap(), "--format", "json"]);
        assert_eq!(out.status.code(), Some(0), "{}", entry.name);
        let report: Report = serde_json::from_str(&stdout_str(&out)).unwrap();
        let again: Report =
            serde_json::from_str(&serde_json::to_string(&report).unwrap()).unwrap();
        assert_eq!(report, again, "{}", entry.name);
        if let Some(e) = &entry.expected_exponent {
            let got = report.classification.exponent.as_ref().unwrap();
            let want = lpcoh_core::rat::format_rat(e);
            assert_eq!((got.lo.as_str(), got.hi.as_str()), (want.as_str(), want.as_str()));
        }
    }
}

#[test]
fn consecutive_runs_are_bit_identical() {
    let path = sample("ch2.json");
    let a = run(&["classify", path.to_str().unwrap(), "--format", "json"]);
    let b = run(&["classify", path.to_str().unwrap(), "--format", "json"]);
    assert_eq!(a.stdout, b.stdout);
    let c = run(&["cheeger", "--model", "tree:3", "--radii", "2,3", "--format", "json"]);
    let d = run(&["cheeger", "--model", "tree:3", "--radii", "2,3", "--format", "json"]);
    assert_eq!(c.stdout, d.stdout);
}

#[test]
fn tol_env_and_flag() {
    let path = sample("aff.json");
    let out = bin()
        .args(["classify", path.to_str().unwrap(), "--format", "json"])
        .env("LPCOH_TOL", "1/1024")
        .output()
        .unwrap();
    let report: Report = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(report.tol, "1/1024");
    // flag wins over environment
    let out = bin()
        .args(["classify", path.to_str().unwrap(), "--tol", "1/64", "--format", "json"])
        .env("LPCOH_TOL", "1/1024")
        .output()
        .unwrap();
    let report: Report = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(report.tol, "1/64");
    // garbage tolerance is a parse error
    let out = bin()
        .args(["classify", path.to_str().unwrap(), "--tol", "0.5"])
        .output()
        .unwrap();
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn verify_threshold_scan_flips_once() {
    let out = run(&[
        "verify-threshold",
        "--weights",
        "1,2",
        "--scan",
        "2:4:1/2",
        "--resolution",
        "32",
        "--format",
        "json",
    ]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    assert_eq!(v["critical_exponent"], "3");
    let verdicts: Vec<&str> =
        v["rows"].as_array().unwrap().iter().map(|r| r["verdict"].as_str().unwrap()).collect();
    assert_eq!(verdicts, ["divergent", "divergent", "divergent", "convergent", "convergent"]);
}

#[test]
fn threshold_requires_exactly_one_mode() {
    let neither = run(&["verify-threshold", "--weights", "1,2"]);
    assert_eq!(neither.status.code(), Some(4));
    let both = run(&["verify-threshold", "--weights", "1,2", "--p", "2", "--scan", "2:3:1"]);
    assert_eq!(both.status.code(), Some(4));
}

#[test]
fn cheeger_rejects_bad_models() {
    let out = run(&["cheeger", "--model", "sol:2,0,0,2", "--radii", "2"]);
    assert_eq!(out.status.code(), Some(1));
    let out = run(&["cheeger", "--model", "nonsense"]);
    assert_eq!(out.status.code(), Some(4));
}

#[test]
fn catalog_lists_expected_verdicts() {
    let out = run(&["catalog", "--format", "json"]);
    assert_eq!(out.status.code(), Some(0));
    let rows: serde_json::Value = serde_json::from_str(&stdout_str(&out)).unwrap();
    let rows = rows.as_array().unwrap();
    assert!(rows.len() >= 12);
    let aff = rows.iter().find(|r| r["name"] == "aff-r").unwrap();
    assert_eq!(aff["expected_verdict"], "heintze");
    assert_eq!(aff["expected_exponent"], "1");
}
