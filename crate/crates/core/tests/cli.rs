use std::process::Command;

use isoprod::cli::run;

fn pair_file() -> String {
    concat!(env!("CARGO_MANIFEST_DIR"), "/data/main.pair").to_string()
}

#[test]
fn verify_main_ends_with_odd() {
    let out = run(["isoprod", "verify-main"]);
    assert_eq!(out.code, 0, "{}", out.stderr);
    assert!(out.stdout.trim_end().ends_with("verdict: ODD"));
}

#[test]
fn table_row_json_has_all_flags() {
    let out = run(["isoprod", "table", "--row", "6", "--format", "json"]);
    assert_eq!(out.code, 0);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    for flag in ["free", "d", "h1", "parity_consistent"] {
        assert_eq!(v["matches"][flag], true, "{flag}");
    }
    assert_eq!(run(["isoprod", "table", "--row", "13"]).code, 2);
}

#[test]
fn parity_json_field_names() {
    let out = run(["isoprod", "--format", "json", "parity", "--pair", &pair_file()]);
    assert_eq!(out.code, 0);
    let v: serde_json::Value = serde_json::from_str(&out.stdout).unwrap();
    let mut keys: Vec<&str> = v.as_object().unwrap().keys().map(String::as_str).collect();
    keys.sort_unstable();
    assert_eq!(keys, ["coefficients", "d1", "d2", "evidence", "torsion", "verdict"]);
    assert_eq!(v["verdict"], "odd");
    assert_eq!(v["torsion"], 135);
}

#[test]
fn h1_and_missing_files() {
    let out = run(["isoprod", "h1", "--pair", &pair_file()]);
    assert_eq!(out.code, 0);
    assert!(out.stdout.contains("H1(S, Z) = (Z3)^2 x Z15"));
    let out = run(["isoprod", "h1", "--pair", "/nonexistent.pair"]);
    assert_eq!(out.code, 2);
    assert!(out.stderr.contains("/nonexistent.pair"));
}

#[test]
fn genvec_reports_absence() {
    let out = run(["isoprod", "genvec", "A5", "[2,2,2]"]);
    assert_eq!(out.code, 1);
    assert!(out.stdout.starts_with("0 generating vector(s)"));
    assert_eq!(run(["isoprod", "genvec", "A5", "[1,2]"]).code, 2);
}

#[test]
fn binary_output_is_byte_identical() {
    let bin = env!("CARGO_BIN_EXE_isoprod");
    let runs: Vec<Vec<u8>> = (0..2).map(|_| Command::new(bin).args(["--format", "json", "--seedless", "verify-main"]).output().unwrap().stdout).collect();
    assert!(!runs[0].is_empty());
    assert_eq!(runs[0], runs[1]);
    let status = Command::new(bin).arg("--bogus").output().unwrap();
    assert_eq!(status.status.code(), Some(2));
    assert!(!status.stderr.is_empty());
}
