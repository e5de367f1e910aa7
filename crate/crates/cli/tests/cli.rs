//! End-to-end tests against the built binary.

use std::path::Path;
use std::process::{Command, Output};

fn gyroloop(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gyroloop"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout(out: &Output) -> String {
    String::from_utf8(out.stdout.clone()).unwrap()
}

fn exit_code(out: &Output) -> i32 {
    out.status.code().expect("no signal")
}

#[test]
fn classes_of_s3() {
    let out = gyroloop(&["classes", "--group", "S3"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(
        stdout(&out),
        "group S3: order 6, degree 3\n\
         class 0: rep e, size 1, order 1\n\
         class 1: rep (1 2), size 3, order 2\n\
         class 2: rep (0 1 2), size 2, order 3\n"
    );
}

#[test]
fn classes_of_q8_show_inverse_merging() {
    let out = gyroloop(&["classes", "--group", "Q8"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("order 8"));
    // five classes: identity, the central involution, and three merged pairs
    assert_eq!(text.lines().count(), 6);
    assert_eq!(text.matches("size 2, order 4").count(), 3);
}

#[test]
fn unknown_group_is_a_usage_error() {
    let out = gyroloop(&["classes", "--group", "nope"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn oversized_group_reports_cap_exceeded() {
    let out = gyroloop(&["classes", "--group", "S6"]);
    assert_eq!(exit_code(&out), 3);
}

#[test]
fn construct_group_case_exits_zero() {
    let out = gyroloop(&["construct", "--group", "S3"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("right gyrogroup: true"));
    assert!(text.contains("\"gyration_group_order\": 1"));
}

#[test]
fn construct_k_one_has_gyration_group_of_order_three() {
    let out = gyroloop(&["construct", "--group", "S3", "--k", "(0 1):1,(0 1 2):1"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("\"gyration_group_order\": 3"));
}

#[test]
fn construct_rejects_bad_kspecs() {
    for bad in ["(0 1)", "e:2", "(0 1):x", "(0 1):1,(1 2):2"] {
        let out = gyroloop(&["construct", "--group", "S3", "--k", bad]);
        assert_eq!(exit_code(&out), 2, "kspec {bad:?}");
    }
}

#[test]
fn construct_verify_round_trip() {
    let dir = tempfile::tempdir().unwrap();
    let out_dir = dir.path().to_str().unwrap();
    let out = gyroloop(&[
        "construct",
        "--group",
        "S3",
        "--k",
        "(0 1):1,(0 1 2):1",
        "--out",
        out_dir,
    ]);
    assert_eq!(exit_code(&out), 0);

    let loop_path = Path::new(out_dir).join("loop.json");
    let report_path = Path::new(out_dir).join("report.json");
    let verify = gyroloop(&["verify", loop_path.to_str().unwrap()]);
    assert_eq!(exit_code(&verify), 0);
    // re-verifying the exported table reproduces the exported report
    let saved = std::fs::read_to_string(&report_path).unwrap();
    assert_eq!(stdout(&verify).trim_end(), saved.trim_end());
}

#[test]
fn verify_flags_a_non_loop_table() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("bad.json");
    // Latin square with no right identity column: x o y = 2x + y mod 3
    std::fs::write(
        &path,
        r#"{"kind":"right_loop","order":3,"identity":0,"elements":["0","1","2"],
            "table":[[0,1,2],[2,0,1],[1,2,0]]}"#,
    )
    .unwrap();
    let out = gyroloop(&["verify", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 1);
    assert!(stdout(&out).contains("\"ok\": false"));
}

#[test]
fn verify_rejects_malformed_json() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("broken.json");
    std::fs::write(&path, "{").unwrap();
    let out = gyroloop(&["verify", path.to_str().unwrap()]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn enumerate_lists_six_functions_for_s3() {
    let out = gyroloop(&["enumerate", "--group", "S3"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert_eq!(text.lines().count(), 7);
    assert!(text.starts_with("group S3: order 6, canonical class assigned functions: 6\n"));
    assert!(text.contains("(1 2):1,(0 1 2):2\n"));
}

#[test]
fn classify_s3_reports_three_classes() {
    let out = gyroloop(&["classify", "--group", "S3"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("isomorphism classes: 3"));
    assert!(text.contains("gyration group order 3 (C3, abelian true)"));
}

#[test]
fn classify_d4_completes_with_all_loops_verified() {
    let out = gyroloop(&["classify", "--group", "D4"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("canonical class assigned functions: 32"));
    assert!(text.contains("isomorphism classes: 3"));
    assert!(!text.contains("right gyrogroup false"));
}

#[test]
fn classify_trivial_group() {
    let out = gyroloop(&["classify", "--group", "S1"]);
    assert_eq!(exit_code(&out), 0);
    assert!(stdout(&out).contains("isomorphism classes: 1"));
}

#[test]
fn count_values() {
    let out = gyroloop(&["count", "3"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "count(S3) = 6\n");

    let out = gyroloop(&["count", "10"]);
    assert_eq!(
        stdout(&out),
        "count(S10) = 197246951611422595035955200000000\n"
    );
}

#[test]
fn count_brute_cross_check() {
    let out = gyroloop(&["count", "4", "--brute"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(stdout(&out), "count(S4) = 48\nbrute(S4) = 48\n");
}

#[test]
fn count_brute_rejected_beyond_degree_six() {
    let out = gyroloop(&["count", "7", "--brute"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn count_degree_cap() {
    let out = gyroloop(&["count", "51"]);
    assert_eq!(exit_code(&out), 3);
}

#[test]
fn count_verbose_factor_table() {
    let out = gyroloop(&["count", "4", "--verbose"]);
    let text = stdout(&out);
    assert!(text.contains("type (2): lcm 2"));
    assert!(text.contains("type (2,2): lcm 2"));
    assert!(text.contains("type (4): lcm 4"));
    assert!(text.ends_with("count(S4) = 48\n"));
}

#[test]
fn explore_equivariant_s3() {
    let out = gyroloop(&["explore-equivariant", "--group", "S3"]);
    assert_eq!(exit_code(&out), 0);
    assert_eq!(
        stdout(&out),
        "group S3: order 6\n\
         equivariant maps: 6\n\
         class-assigned maps: 6\n\
         surplus maps: 0\n"
    );
}

#[test]
fn explore_equivariant_d4_finds_surplus_maps() {
    let out = gyroloop(&["explore-equivariant", "--group", "D4"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("equivariant maps: 128"));
    assert!(text.contains("class-assigned maps: 32"));
    assert!(text.contains("surplus maps: 96"));
    assert_eq!(text.matches("gyrotransversal true").count(), 96);
    assert!(!text.contains("right gyrogroup false"));
}

#[test]
fn explore_equivariant_c4_all_class_assigned() {
    let out = gyroloop(&["explore-equivariant", "--group", "C4"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("equivariant maps: 8"));
    assert!(text.contains("surplus maps: 0"));
}

#[test]
fn explore_equivariant_respects_the_order_cap() {
    let out = gyroloop(&["explore-equivariant", "--group", "S5"]);
    assert_eq!(exit_code(&out), 3);
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        vec!["classes", "--group", "D4"],
        vec!["classify", "--group", "S3"],
        vec!["enumerate", "--group", "Q8"],
        vec!["explore-equivariant", "--group", "D4"],
        vec!["count", "6", "--verbose"],
    ] {
        let first = gyroloop(&args);
        let second = gyroloop(&args);
        assert_eq!(first.stdout, second.stdout, "{args:?}");
        assert_eq!(exit_code(&first), exit_code(&second));
    }
}

#[test]
fn usage_error_exit_code_from_clap() {
    let out = gyroloop(&["frobnicate"]);
    assert_eq!(exit_code(&out), 2);
    let out = gyroloop(&["count"]);
    assert_eq!(exit_code(&out), 2);
}

#[test]
fn generator_specs_work_end_to_end() {
    let out = gyroloop(&["classes", "--group", "gens:(0 1 2 3)"]);
    assert_eq!(exit_code(&out), 0);
    let text = stdout(&out);
    assert!(text.contains("order 4"));
    // C4: identity, the involution r^2, and the merged pair {r, r^3}
    assert_eq!(text.lines().count(), 4);
}
