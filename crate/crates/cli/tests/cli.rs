//! End-to-end tests that drive the compiled `ginv` binary on fixture files
//! and pin down the report contract: exit codes, verdict strings, produced
//! matrices, identity checks, and the matrix round-trip invariant.

use ginv_core::json::{matrix_from_json, matrix_to_json};
use ginv_core::Matrix;
use serde_json::Value;
use std::path::PathBuf;
use std::process::Command;

fn fixture(name: &str) -> String {
    let p = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/fixtures").join(name);
    p.display().to_string()
}

/// Runs the binary with GINV_SEED scrubbed from the environment and parses
/// the one JSON report it must print on stdout.
fn ginv(args: &[&str]) -> (Value, i32) {
    ginv_env(args, &[])
}

fn ginv_env(args: &[&str], envs: &[(&str, &str)]) -> (Value, i32) {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_ginv"));
    cmd.args(args).env_remove("GINV_SEED");
    for (k, v) in envs {
        cmd.env(k, v);
    }
    let output = cmd.output().expect("binary runs");
    let report: Value = serde_json::from_slice(&output.stdout)
        .unwrap_or_else(|e| panic!("stdout must be one JSON report: {e}\nargs: {args:?}"));
    (report, output.status.code().expect("exit code"))
}

fn all_identities_hold(report: &Value) -> bool {
    report["identities"]
        .as_array()
        .expect("identities array")
        .iter()
        .all(|i| i["holds"] == true)
}

fn report_matrix(report: &Value, name: &str) -> Matrix {
    matrix_from_json(&report["matrices"][name], name).expect("report matrix parses")
}

#[test]
fn solve_two_sided_on_the_worked_example() {
    let (report, code) = ginv(&[
        "solve-two-sided",
        &fixture("example_A.json"),
        &fixture("example_B.json"),
        &fixture("example_C.json"),
        "--params",
        &fixture("params_zero.json"),
        "--oracle",
    ]);
    assert_eq!(code, 0);
    assert_eq!(report["verdict"], "solvable");
    assert_eq!(report["mode"], "rational");
    assert!(all_identities_hold(&report));
    assert_eq!(report["oracle"]["feasible"], true);

    let x0 = report_matrix(&report, "X0");
    let expected_x0 = Matrix::from_i64(&[
        &[-1, -7, -7, 15],
        &[-1, -30, -30, 64],
        &[0, 23, 23, -49],
        &[1, -16, -16, 34],
    ]);
    assert_eq!(x0, expected_x0, "particular X0");

    let y0 = report_matrix(&report, "Y0");
    let expected_y0 = Matrix::from_ratios(&[
        &[(-22, 19), (-50, 19), (-60, 19), (132, 19)],
        &[(-68, 19), (-120, 19), (-144, 19), (332, 19)],
        &[(70, 19), (90, 19), (108, 19), (-268, 19)],
        &[(-46, 19), (-70, 19), (-84, 19), (200, 19)],
    ]);
    assert_eq!(y0, expected_y0, "particular Y0");

    // the whole certificate is in the report
    for name in ["P", "Q", "P_minus", "Q_minus", "U"] {
        assert!(report["matrices"][name].is_object(), "{name} present");
    }
    let names: Vec<&str> = report["identities"]
        .as_array()
        .unwrap()
        .iter()
        .map(|i| i["name"].as_str().unwrap())
        .collect();
    assert!(names.contains(&"U invertible"));
    assert!(names.contains(&"A = P B Q"));

    // Z = Z1 = 0 must evaluate the family back to the particular solution
    assert_eq!(report["matrices"]["X"], report["matrices"]["X0"]);
    assert_eq!(report["matrices"]["Y"], report["matrices"]["Y0"]);
}

#[test]
fn geninv_computes_the_worked_inverse() {
    let (report, code) = ginv(&["geninv", &fixture("example_A.json")]);
    assert_eq!(code, 0);
    assert_eq!(report["verdict"], "exists");
    assert!(all_identities_hold(&report));
    let a_sharp = report_matrix(&report, "A_sharp");
    let expected = Matrix::from_i64(&[
        &[-5, 4, 1, -2],
        &[-21, 17, 4, -9],
        &[16, -13, -3, 7],
        &[-11, 9, 2, -5],
    ]);
    assert_eq!(a_sharp, expected);
}

#[test]
fn geninv_rejects_an_index_two_matrix() {
    let (report, code) = ginv(&["geninv", &fixture("nilpotent.json")]);
    assert_eq!(code, 2);
    assert_eq!(report["verdict"], "nonexistent");
    let detail = report["detail"].as_str().unwrap();
    assert!(
        detail.contains("group inverse does not exist (index > 1)"),
        "detail was: {detail}"
    );
}

#[test]
fn stein_divergence_case_is_reported_honestly() {
    let one = fixture("one.json");
    let (report, code) = ginv(&["solve-stein", &one, &one, &one, "--oracle"]);
    assert_eq!(code, 2);
    assert_eq!(report["verdict"], "unsolvable");
    assert_eq!(report["stein"]["criterion_holds"], true);
    assert_eq!(report["stein"]["verdicts_agree"], false);
    assert_eq!(report["oracle"]["feasible"], false);
}

#[test]
fn solvable_stein_instance_passes_both_routes() {
    let (report, code) = ginv(&[
        "solve-stein",
        &fixture("scalar_A.json"), // A = [2]
        &fixture("one.json"),      // B = [1]
        &fixture("one.json"),      // C = [1]
        "--oracle",
    ]);
    assert_eq!(code, 0);
    assert_eq!(report["verdict"], "solvable");
    assert_eq!(report["stein"]["verdicts_agree"], true);
    assert_eq!(report_matrix(&report, "Y"), Matrix::from_i64(&[&[1]]));
    assert_eq!(report["oracle"]["feasible"], true);
}

#[test]
fn parse_error_names_file_and_position() {
    let (report, code) = ginv(&["geninv", &fixture("broken.json")]);
    assert_eq!(code, 4);
    assert_eq!(report["verdict"], "input-error");
    let detail = report["detail"].as_str().unwrap();
    assert!(detail.contains("broken.json"), "detail was: {detail}");
    assert!(detail.contains("line"), "detail was: {detail}");
}

#[test]
fn missing_file_is_an_input_error() {
    let (report, code) = ginv(&["geninv", "/nonexistent/matrix.json"]);
    assert_eq!(code, 4);
    assert_eq!(report["verdict"], "input-error");
}

#[test]
fn unknown_subcommand_still_prints_a_report() {
    let (report, code) = ginv(&["frobnicate"]);
    assert_eq!(code, 4);
    assert_eq!(report["verdict"], "input-error");
}

#[test]
fn hypothesis_violation_exits_three() {
    let (report, code) = ginv(&[
        "solve-sylvester",
        &fixture("nilpotent.json"),
        &fixture("one.json"),
        &fixture("tall_C.json"),
    ]);
    assert_eq!(code, 3);
    assert_eq!(report["verdict"], "hypothesis-violated");
    assert!(report["detail"].as_str().unwrap().contains("not group invertible"));
}

#[test]
fn sylvester_scalar_instance_round_trips_through_its_witness() {
    let (report, code) = ginv(&[
        "solve-sylvester",
        &fixture("scalar_A.json"),
        &fixture("zero1.json"),
        &fixture("scalar_C.json"),
        "--oracle",
    ]);
    assert_eq!(code, 0);
    assert_eq!(report["verdict"], "solvable");
    assert!(all_identities_hold(&report));
    assert_eq!(report_matrix(&report, "X"), Matrix::from_ratios(&[&[(3, 2)]]));
    assert_eq!(report["oracle"]["null_dim"], 0);

    // every emitted matrix re-parses to an identical JSON value
    for (name, value) in report["matrices"].as_object().unwrap() {
        let parsed = matrix_from_json(value, name).expect("round trip parse");
        assert_eq!(&matrix_to_json(&parsed), value, "round trip of {name}");
    }
}

#[test]
fn sylvester_criterion_ok_but_infeasible_is_unsolvable() {
    let one = fixture("one.json");
    let (report, code) = ginv(&["solve-sylvester", &one, &one, &one]);
    assert_eq!(code, 2);
    assert_eq!(report["verdict"], "unsolvable");
}

#[test]
fn check_block_verdicts() {
    let (report, code) = ginv(&[
        "check-block",
        &fixture("example_A.json"),
        &fixture("example_B.json"),
        &fixture("example_C.json"),
    ]);
    assert_eq!(code, 0);
    assert_eq!(report["verdict"], "exists");
    assert!(all_identities_hold(&report));
    assert!(report["matrices"]["M_sharp"].is_object());

    let zero = fixture("zero1.json");
    let (report, code) = ginv(&["check-block", &zero, &zero, &fixture("one.json")]);
    assert_eq!(code, 2);
    assert_eq!(report["verdict"], "nonexistent");
    assert_eq!(report_matrix(&report, "A_pi_C_B_pi"), Matrix::from_i64(&[&[1]]));
}

#[test]
fn verify_witness_accepts_valid_and_names_the_failure_on_tampered() {
    let (report, code) = ginv(&[
        "verify-witness",
        &fixture("M2.json"),
        &fixture("D2.json"),
        &fixture("witness_valid.json"),
    ]);
    assert_eq!(code, 0);
    assert_eq!(report["verdict"], "valid");
    assert_eq!(report["witness_kind"], "similarity");
    assert_eq!(report["identities"].as_array().unwrap().len(), 12);

    let (report, code) = ginv(&[
        "verify-witness",
        &fixture("M2.json"),
        &fixture("D2.json"),
        &fixture("witness_tampered.json"),
    ]);
    assert_eq!(code, 2);
    assert_eq!(report["verdict"], "invalid");
    assert!(report["detail"].as_str().unwrap().contains("T Tm T = T"));
}

#[test]
fn gen_writes_solvable_instances_and_is_seed_deterministic() {
    let dir = tempfile::tempdir().expect("tempdir");
    let out1 = dir.path().join("first");
    let out2 = dir.path().join("second");
    let out_env = dir.path().join("env");

    let args = |out: &std::path::Path| {
        vec![
            "gen".to_string(),
            "sylvester".to_string(),
            "--n".to_string(),
            "3".to_string(),
            "--rank".to_string(),
            "2".to_string(),
            "--seed".to_string(),
            "7".to_string(),
            "--out".to_string(),
            out.display().to_string(),
        ]
    };
    let argv1 = args(&out1);
    let (report, code) = ginv(&argv1.iter().map(String::as_str).collect::<Vec<_>>());
    assert_eq!(code, 0);
    assert_eq!(report["verdict"], "generated");
    assert_eq!(report["seed"], 7);
    assert!(all_identities_hold(&report));

    // the written files are directly consumable by the solver
    let a = out1.join("A.json").display().to_string();
    let b = out1.join("B.json").display().to_string();
    let c = out1.join("C.json").display().to_string();
    let (solve_report, solve_code) = ginv(&["solve-sylvester", &a, &b, &c]);
    assert_eq!(solve_code, 0);
    assert_eq!(solve_report["verdict"], "solvable");

    // same seed, same bytes
    let argv2 = args(&out2);
    let (_, code) = ginv(&argv2.iter().map(String::as_str).collect::<Vec<_>>());
    assert_eq!(code, 0);
    let bytes1 = std::fs::read(out1.join("A.json")).unwrap();
    let bytes2 = std::fs::read(out2.join("A.json")).unwrap();
    assert_eq!(bytes1, bytes2);

    // --seed wins over GINV_SEED
    let argv3 = args(&out_env);
    let (_, code) = ginv_env(
        &argv3.iter().map(String::as_str).collect::<Vec<_>>(),
        &[("GINV_SEED", "99")],
    );
    assert_eq!(code, 0);
    assert_eq!(std::fs::read(out_env.join("A.json")).unwrap(), bytes1);

    // GINV_SEED is honored when the flag is absent
    let (report_env, code) = ginv_env(
        &["gen", "matrix", "--n", "2", "--rank", "1"],
        &[("GINV_SEED", "7")],
    );
    assert_eq!(code, 0);
    assert_eq!(report_env["seed"], 7);
    let (report_flag, code) = ginv(&["gen", "matrix", "--n", "2", "--rank", "1", "--seed", "7"]);
    assert_eq!(code, 0);
    assert_eq!(report_env["matrices"]["A"], report_flag["matrices"]["A"]);
}

#[test]
fn gen_rejects_rank_above_size() {
    let (report, code) = ginv(&["gen", "matrix", "--n", "2", "--rank", "5"]);
    assert_eq!(code, 4);
    assert_eq!(report["verdict"], "input-error");
}

#[test]
fn mode_mismatch_between_files_is_an_input_error() {
    let dir = tempfile::tempdir().expect("tempdir");
    let float_a = dir.path().join("float_A.json");
    std::fs::write(
        &float_a,
        r#"{ "mode": "float", "rows": 1, "cols": 1, "data": [2.0] }"#,
    )
    .unwrap();
    let fa = float_a.display().to_string();
    let (report, code) = ginv(&["check-block", &fa, &fixture("one.json"), &fixture("one.json")]);
    assert_eq!(code, 4);
    assert_eq!(report["verdict"], "input-error");

    // and --mode must match the files
    let (report, code) = ginv(&["geninv", &fa, "--mode", "rational"]);
    assert_eq!(code, 4);
    assert_eq!(report["verdict"], "input-error");

    // while a consistent float run succeeds
    let (report, code) = ginv(&["geninv", &fa]);
    assert_eq!(code, 0);
    assert_eq!(report["mode"], "float");
    assert_eq!(report["verdict"], "exists");
}
