use std::fs;
use std::path::Path;

use liechain::cli::run;

fn cli(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("liechain").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

fn golden(name: &str) -> String {
    let path = Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name);
    fs::read_to_string(path).unwrap()
}

fn check_golden(args: &[&str], name: &str) {
    let dir = tempfile::tempdir().unwrap();
    let out = dir.path().join("report.json");
    let mut full: Vec<&str> = args.to_vec();
    let out_str = out.to_str().unwrap();
    full.extend(["--out", out_str]);
    let (code, _, err) = cli(&full);
    assert_eq!(code, 0, "{err}");
    assert_eq!(fs::read_to_string(&out).unwrap(), golden(name), "{args:?}");
}

#[test]
fn chain_solve_report_matches_golden() {
    check_golden(
        &["chain", "solve", "--fixture", "h3-tensnil"],
        "chain_solve_h3_tensnil.json",
    );
}

#[test]
fn orbit_check_report_matches_golden() {
    check_golden(
        &[
            "orbit",
            "check",
            "tensnil",
            "--algebra",
            "heisenberg3",
            "--samples",
            "2",
            "--seed",
            "1",
        ],
        "orbit_tensnil_h3_seed1.json",
    );
}

#[test]
fn hw_grid_presentation_matches_golden() {
    check_golden(&["hw", "grid", "--type", "a1", "--range", "-2..3"], "hw_grid_a1.json");
}

#[test]
fn exit_codes() {
    assert_eq!(cli(&["chain", "solve", "--fixture", "a1-delta-grid"]).0, 0);
    // the A2 grid abelianizes to Z/3 while its character image is trivial
    let (code, out, _) = cli(&["chain", "check", "--fixture", "a2-delta-grid"]);
    assert_eq!(code, 1);
    assert!(out.contains("NOT isomorphic"), "{out}");
    assert_eq!(cli(&["chain", "solve", "--fixture", "nope"]).0, 2);
    assert_eq!(cli(&["lie", "center", "--algebra", "nope"]).0, 2);
    assert_eq!(cli(&["orbit", "check", "bogus"]).0, 2);
    assert_eq!(cli(&["hw", "quotient", "--type", "b2", "--weight", "1,1"]).0, 2);
}

#[test]
fn export_then_validate_and_reject_broken_jacobi() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("h3.json");
    let p = path.to_str().unwrap();
    assert_eq!(cli(&["lie", "export", "--algebra", "heisenberg3", "--out", p]).0, 0);
    let (code, out, _) = cli(&["lie", "validate", "--file", p]);
    assert_eq!(code, 0);
    assert!(out.contains("valid, dimension 3"));

    let bad = dir.path().join("bad.json");
    fs::write(
        &bad,
        r#"{"name":"bad","basis":["x","y","z"],"brackets":[
            {"i":"x","j":"y","value":{"x":"1"}},{"i":"x","j":"z","value":{"y":"1"}}]}"#,
    )
    .unwrap();
    let (code, _, err) = cli(&["lie", "validate", "--file", bad.to_str().unwrap()]);
    assert_eq!(code, 2);
    assert!(err.contains("Jacobi"), "{err}");
}

#[test]
fn file_presentation_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("grid.json");
    let p = path.to_str().unwrap();
    assert_eq!(
        cli(&["hw", "grid", "--type", "a1", "--range", "-2..3", "--out", p]).0,
        0
    );
    let (code, out, _) = cli(&["chain", "solve", "--file", p]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().next(), Some("Z/2"));
}
