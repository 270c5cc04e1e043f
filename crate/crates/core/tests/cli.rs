//! Command-line behaviour: exit codes and machine-readable output.

use spherex::cli::run;
use spherex::invariants::InvariantTable;
use spherex::reptheory::CharTable;

fn spherex(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = run(
        std::iter::once("spherex").chain(args.iter().copied()),
        &mut out,
        &mut err,
    );
    (
        code,
        String::from_utf8(out).unwrap(),
        String::from_utf8(err).unwrap(),
    )
}

#[test]
fn group_info_succeeds() {
    let (code, out, _) = spherex(&["group", "info", "D:2,2"]);
    assert_eq!(code, 0);
    assert!(out.contains("40"), "{out}");
}

#[test]
fn malformed_spec_is_a_usage_error() {
    for spec in ["Q:3", "C:4,2", "BTxC:2", "BD:1"] {
        let (code, _, err) = spherex(&["irreps", spec]);
        assert_eq!(code, 2, "{spec}");
        assert!(err.starts_with("error"), "{spec}: {err}");
    }
    let (code, _, _) = spherex(&["no-such-command"]);
    assert_eq!(code, 2);
}

#[test]
fn help_goes_to_stdout() {
    let (code, out, _) = spherex(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("xi-table"));
}

#[test]
fn xi_table_csv_parses_back() {
    let (code, out, _) = spherex(&["--format", "csv", "xi-table", "D:2,2"]);
    assert_eq!(code, 0);
    let table = InvariantTable::from_csv(&out).unwrap();
    assert_eq!(table.rows.len(), 16);
    assert_eq!(table.to_csv().unwrap(), out);
}

#[test]
fn xi_table_rank_filter() {
    let (code, out, _) = spherex(&["--format", "json", "xi-table", "--rank", "2", "BT"]);
    assert_eq!(code, 0);
    let table = InvariantTable::from_json(&out).unwrap();
    assert_eq!(table.rows.len(), 3);
    assert!(table.rows.iter().all(|r| r.rank == 2));
}

#[test]
fn char_table_json_parses_back() {
    let (code, out, _) = spherex(&["--format", "json", "char-table", "BO"]);
    assert_eq!(code, 0);
    let table = CharTable::from_json(&out).unwrap();
    assert_eq!(table.classes.len(), 8);
    assert_eq!(table.rows.len(), 8);
}

#[test]
fn classify_exit_code_reflects_collisions() {
    assert_eq!(spherex(&["classify", "BT"]).0, 0);
    let (code, out, _) = spherex(&["classify", "BD:6"]);
    assert_eq!(code, 1, "{out}");
}

#[test]
fn spin_override_must_be_a_square_root() {
    let (code, _, _) = spherex(&["--spin-character", "x=1/8", "xi-table", "D:2,2"]);
    assert_eq!(code, 0);
    let (code, _, err) = spherex(&["--spin-character", "x=1/3", "xi-table", "D:2,2"]);
    assert_ne!(code, 0);
    assert!(!err.is_empty());
}

#[test]
fn conjecture_scan_json_schema() {
    let (code, out, _) = spherex(&[
        "--format",
        "json",
        "conjecture-scan",
        "--k-max",
        "2",
        "--r-max",
        "2",
    ]);
    assert_eq!(code, 0);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    let records = v.as_array().unwrap();
    assert_eq!(records.len(), 2);
    for r in records {
        assert!(r["params"].is_array());
        assert!(r["orders"].is_u64());
        assert!(r["counterexamples"].as_array().unwrap().is_empty());
        assert_eq!(r["status"], "verified");
    }
}
