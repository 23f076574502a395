use std::process::{Command, Output};

use kalman_core::betti::{BettiRow, BettiTable};
use kalman_core::partitions::binomial;
use serde_json::Value;

fn kalman(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_kalman"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(args: &[&str]) -> (i32, Value) {
    let mut all = args.to_vec();
    all.push("--json");
    let out = kalman(&all);
    let value = serde_json::from_slice(&out.stdout).expect("stdout is JSON");
    (out.status.code().unwrap(), value)
}

#[test]
fn m2_output() {
    let out = kalman(&["verify", "m2-output"]);
    assert_eq!(out.status.code(), Some(0));
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.contains("q=4: H^1 310, H^2 145"), "{text}");
}

#[test]
fn koszul_betti_table_round_trips() {
    let (code, value) = json(&["betti", "--s", "2", "--d", "2", "--n", "5"]);
    assert_eq!(code, 0);
    let rows: Vec<BettiRow> = serde_json::from_value(value.clone()).unwrap();
    let table = BettiTable::from_rows(2, 5, &rows);
    for i in 0..=6 {
        assert_eq!(table.term_rank(i), binomial(6, i as u64));
        assert!(table.term(i).all(|(k, _)| k.degree == i));
    }
    assert_eq!(serde_json::to_value(table.to_rows()).unwrap(), value);
    for key in ["i", "degree", "lambdaL", "muW", "mult", "rank"] {
        assert!(value[0].get(key).is_some(), "missing {key}");
    }
}

#[test]
fn conjecture_residual_is_zero() {
    let (code, value) = json(&["conjecture", "--d", "2", "--n", "5"]);
    assert_eq!(code, 0);
    assert_eq!(value["residual"]["numerator"], serde_json::json!([]));
    assert_eq!(value["conjectural"], false);
    let (code, value) = json(&["conjecture", "--d", "4", "--n", "6"]);
    assert_eq!(code, 0);
    assert_eq!(value["conjectural"], true);
    assert!(value["residual"].is_null());
}

#[test]
fn verify_ids() {
    for (id, extra) in [
        ("prop-2-2", vec!["--d", "4", "--n", "8"]),
        ("prop-2-4", vec!["--n", "6"]),
        ("thm-3-3", vec!["--n", "5"]),
        ("thm-3-5", vec!["--n", "6"]),
        ("prop-ndp1", vec!["--d", "3"]),
        ("inductive-d2", vec!["--n", "4"]),
        ("inductive-d3", vec!["--n", "5"]),
    ] {
        let mut args = vec!["verify", id];
        args.extend(extra);
        let out = kalman(&args);
        assert_eq!(
            out.status.code(),
            Some(0),
            "{id}: {}",
            String::from_utf8_lossy(&out.stdout)
        );
    }
}

#[test]
fn mismatch_exits_one() {
    let (code, value) = json(&["verify", "prop-sdm1", "--d", "4"]);
    assert_eq!(code, 1);
    assert_eq!(value["status"], "mismatch");
    assert_eq!(value["differences"].as_array().unwrap().len(), 2);
}

#[test]
fn refusal_exits_three() {
    let out = kalman(&["hf", "--s", "1", "--d", "3", "--n", "5", "--kmax", "6"]);
    assert_eq!(out.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&out.stderr).contains("binomial(29, 5)"));
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(
        kalman(&["betti", "--s", "x", "--d", "2", "--n", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(
        kalman(&["betti", "--s", "3", "--d", "2", "--n", "4"])
            .status
            .code(),
        Some(2)
    );
    assert_eq!(kalman(&["verify", "nonsense"]).status.code(), Some(2));
    assert_eq!(kalman(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn seeded_commands_are_deterministic() {
    let args = [
        "kalman-test",
        "--s",
        "1",
        "--d",
        "2",
        "--n",
        "4",
        "--trials",
        "30",
        "--seed",
        "9",
    ];
    let a = kalman(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, kalman(&args).stdout);
    let (code, value) = json(&["codim", "--s", "2", "--d", "3", "--n", "5", "--seed", "4"]);
    assert_eq!(code, 0);
    assert_eq!(value["jacobian_rank"], 4);
    let (code, value) = json(&["hf", "--s", "1", "--d", "3", "--n", "4", "--kmax", "6"]);
    assert_eq!(code, 0);
    assert_eq!(
        value["ideal_dims"],
        serde_json::json!([0, 0, 0, 0, 0, 0, 1])
    );
}

#[test]
fn cohomology_and_hilbert() {
    let (code, value) = json(&["cohomology", "--s", "2", "--d", "3", "--n", "8", "--q", "5"]);
    assert_eq!(code, 0);
    let h2 = value
        .as_array()
        .unwrap()
        .iter()
        .find(|r| r["j"] == 2)
        .unwrap();
    assert_eq!(h2["rank"], 705);
    let (code, value) = json(&["hilbert", "--s", "3", "--d", "3", "--n", "5"]);
    assert_eq!(code, 0);
    // polynomial ring in 19 variables, written over (1-t)^25
    assert_eq!(
        value["numerator"],
        serde_json::json!([1, -6, 15, -20, 15, -6, 1])
    );
    assert_eq!(value["denominator_exponent"], 25);
}
