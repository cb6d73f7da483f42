//! End-to-end tests of the `qrv` binary: exact reference outputs, exit
//! codes, and byte-level determinism across worker counts.

use std::process::{Command, Output};

fn qrv(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_qrv"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).expect("utf-8")
}

fn stderr(out: &Output) -> String {
    String::from_utf8(out.stderr.clone()).expect("utf-8")
}

#[test]
fn construct_q7_extension_reproduces_reference_matrix() {
    let out = qrv(&[
        "construct",
        "-p",
        "2",
        "-q",
        "7",
        "--code",
        "q1",
        "--extend",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let expected = serde_json::json!([
        "0,1,1+v,1+v,v,1+v,v,v",
        "0,v,1,1+v,1+v,v,1+v,v",
        "0,v,v,1,1+v,1+v,v,1+v",
        "1,1,1,1,1,1,1,1"
    ]);
    assert_eq!(v["generator_matrix"], expected);
    assert_eq!(v["cardinality"]["exponent"], 8);
    assert_eq!(v["length"], 8);
}

#[test]
fn construct_q11_row_space_matches_reference_matrix() {
    // the reference generator matrix for the length-11 ternary family:
    // shifts of the row with 1+2v on residue positions and v elsewhere
    let out = qrv(&["construct", "-p", "3", "-q", "11", "--code", "q2"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let field = qrv_core::PrimeField::new(3).unwrap();
    let cli_rows: Vec<Vec<qrv_core::RingElement>> = v["generator_matrix"]
        .as_array()
        .unwrap()
        .iter()
        .map(|row| {
            qrv_core::parse_ring_poly(field, row.as_str().unwrap())
                .unwrap()
                .coeffs()
                .to_vec()
        })
        .collect();
    let cli_code = qrv_core::LinearCode::from_ring_rows(field, 11, &cli_rows).unwrap();

    let a = qrv_core::parse_ring_element(field, "1+2v").unwrap();
    let vv = qrv_core::parse_ring_element(field, "v").unwrap();
    let z = qrv_core::parse_ring_element(field, "0").unwrap();
    let base = [z, a, vv, a, a, a, vv, vv, vv, a, vv];
    let reference: Vec<Vec<qrv_core::RingElement>> = (0..6)
        .map(|s| (0..11).map(|j| base[(11 + j - s) % 11]).collect())
        .collect();
    let reference_code = qrv_core::LinearCode::from_ring_rows(field, 11, &reference).unwrap();
    assert_eq!(cli_code, reference_code);
}

#[test]
fn invalid_configurations_exit_2_with_named_precondition() {
    let out = qrv(&["construct", "-p", "2", "-q", "4"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("odd prime"));

    let out = qrv(&["construct", "-p", "3", "-q", "7"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("quadratic residue"));

    let out = qrv(&[
        "construct",
        "-p",
        "2",
        "-q",
        "7",
        "--code",
        "q1p",
        "--extend",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("q1 and q2"));

    let out = qrv(&[
        "construct",
        "-p",
        "2",
        "-q",
        "7",
        "--code",
        "q1p",
        "--augment",
        "v",
    ]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("q = 1 mod 8"));

    let out = qrv(&["wenum", "-p", "3", "-q", "11", "--weight", "bachoc"]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("Bachoc"));
}

#[test]
fn construct_augmented_matrix_spans_the_code() {
    let out = qrv(&[
        "construct",
        "-p",
        "2",
        "-q",
        "17",
        "--code",
        "q1p",
        "--augment",
        "v",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let field = qrv_core::PrimeField::new(2).unwrap();
    let rows: Vec<Vec<qrv_core::RingElement>> = v["generator_matrix"]
        .as_array()
        .unwrap()
        .iter()
        .map(|row| {
            qrv_core::parse_ring_poly(field, row.as_str().unwrap())
                .unwrap()
                .coeffs()
                .to_vec()
        })
        .collect();
    let from_rows = qrv_core::LinearCode::from_ring_rows(field, 17, &rows).unwrap();
    let fam = qrv_core::qr_family(2, 17).unwrap();
    let expected = fam
        .hermitian_augment(qrv_core::QrCode::Q1Prime, qrv_core::AugmentUnit::V)
        .unwrap();
    assert_eq!(from_rows, expected);
    assert_eq!(v["cardinality"]["exponent"], 17);
}

#[test]
fn budget_overrun_exits_3() {
    let out = qrv(&[
        "wenum", "-p", "3", "-q", "23", "--code", "q1", "--budget", "1024",
    ]);
    assert_eq!(out.status.code(), Some(3));
    assert!(stderr(&out).contains("budget"));
}

#[test]
fn wenum_q7_extension_lee_csv() {
    let out = qrv(&[
        "wenum", "-p", "2", "-q", "7", "--code", "q1", "--extend", "--weight", "lee", "--format",
        "csv",
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "weight,count\n0,1\n4,28\n8,198\n12,28\n16,1\n"
    );
}

#[test]
fn wenum_q23_extension_lee_matches_reference() {
    let out = qrv(&[
        "wenum", "-p", "2", "-q", "23", "--code", "q1", "--extend", "--weight", "lee", "--format",
        "text",
    ]);
    assert!(out.status.success());
    assert_eq!(
        stdout(&out),
        "1+1518z^8+5152z^12+577599z^16+3910368z^20+7787940z^24+3910368z^28+577599z^32+5152z^36+1518z^40+z^48\n"
    );
}

#[test]
fn mindist_reports_certified_distance() {
    let out = qrv(&[
        "mindist", "-p", "3", "-q", "11", "--code", "q1", "--weight", "lee",
    ]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["d"], 7);
    assert_eq!(v["certified"], true);
}

#[test]
fn verify_passes_and_fails_with_exit_codes() {
    let out = qrv(&["verify", "-p", "5", "-q", "19", "--format", "text"]);
    assert_eq!(out.status.code(), Some(0));
    assert!(stdout(&out).contains("[pass]"));

    let out = qrv(&["verify", "-p", "5", "-q", "7"]);
    assert_eq!(out.status.code(), Some(2)); // 5 is not a residue mod 7
}

#[test]
fn describe_emits_family_data() {
    let out = qrv(&["describe", "-p", "2", "-q", "7"]);
    assert!(out.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["qset"], serde_json::json!([1, 2, 4]));
    assert_eq!(v["cardinalities"]["q1"]["exponent"], 8);
    assert_eq!(v["cardinalities"]["q1p"]["exponent"], 6);
}

#[test]
fn outputs_are_identical_across_worker_counts() {
    let a = qrv(&[
        "wenum",
        "-p",
        "2",
        "-q",
        "17",
        "--code",
        "q1",
        "--extend",
        "--weight",
        "bachoc",
        "--workers",
        "2",
    ]);
    let b = qrv(&[
        "wenum",
        "-p",
        "2",
        "-q",
        "17",
        "--code",
        "q1",
        "--extend",
        "--weight",
        "bachoc",
        "--workers",
        "8",
    ]);
    assert!(a.status.success() && b.status.success());
    assert_eq!(stdout(&a), stdout(&b));
}

#[test]
fn table_1_fast_matches_checked_in_expectation() {
    let out = qrv(&["table", "--which", "1", "--tier", "fast"]);
    assert!(out.status.success());
    let expected = include_str!("data/table1_fast.txt");
    assert_eq!(stdout(&out), expected);
}

#[test]
fn table_2_fast_matches_checked_in_expectation() {
    let out = qrv(&["table", "--which", "2", "--tier", "fast"]);
    assert!(out.status.success());
    let expected = include_str!("data/table2_fast.txt");
    assert_eq!(stdout(&out), expected);
}
