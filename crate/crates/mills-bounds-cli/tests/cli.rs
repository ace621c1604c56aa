//! End-to-end checks of the binary: flag grammar, exit codes, output shape,
//! and byte-level determinism across runs and thread counts.

use std::process::{Command, Output};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_mills-bounds"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn constants_csv_shape() {
    let o = run(&["constants", "--k-max", "2", "--csv"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 4);
    assert_eq!(
        lines[0],
        "k,c_star,delta,x_star,x_tilde,slack_lower,slack_mid,slack_upper"
    );
    assert!(lines[1].starts_with("0,6.3661977236758134308e-1,"));
}

#[test]
fn constants_json_parses() {
    let o = run(&["constants", "--k-max", "1", "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v.as_array().unwrap().len(), 2);
    assert_eq!(v[1]["k"], 1);
}

#[test]
fn bound_reports_sides_and_values() {
    let o = run(&["bound", "--family", "sampford", "--x", "1", "--precision", "6"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.contains("h(x)     1.50000e0"), "{out}");
    assert!(out.contains("side     upper"));
}

#[test]
fn bound_domain_error_is_exit_one() {
    let o = run(&["bound", "--family", "pollak", "--x", "-1"]);
    assert_eq!(o.status.code(), Some(1));
    let err = String::from_utf8(o.stderr).unwrap();
    assert!(err.contains("x >= 0"), "{err}");
}

#[test]
fn classic_fraction_rejected_at_origin() {
    let o = run(&["bound", "--family", "classic-cf", "--k", "0", "--x", "0"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn non_finite_x_is_domain_error() {
    let o = run(&["bound", "--family", "pollak", "--x", "nan"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["bound", "--family", "pollak", "--x", "inf"]);
    assert_eq!(o.status.code(), Some(1));
}

#[test]
fn side_flag_validates_order_first() {
    let o = run(&["bound", "--family", "sqrt-star", "--k", "5000", "--x", "1", "--side"]);
    assert_eq!(o.status.code(), Some(1));
    let o = run(&["bound", "--family", "sqrt-star", "--k", "7", "--x", "1", "--side"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).trim(), "lower");
}

#[test]
fn crossover_csv_has_header() {
    let o = run(&["crossover", "--k", "2", "--format", "csv"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("k,threshold\n2,"), "{out}");
}

#[test]
fn usage_errors_are_exit_sixty_four() {
    assert_eq!(run(&["no-such-command"]).status.code(), Some(64));
    assert_eq!(run(&["table1", "--bogus-flag"]).status.code(), Some(64));
    // precision outside [6, 25] is a usage error, never a truncation
    assert_eq!(run(&["table1", "--precision", "30"]).status.code(), Some(64));
    assert_eq!(run(&["bound", "--family", "nope", "--x", "1"]).status.code(), Some(64));
    // chain order past the fraction depth cap
    assert_eq!(run(&["verify", "--k-max", "2000"]).status.code(), Some(64));
    assert_eq!(run(&["constants", "--k-max", "2000000"]).status.code(), Some(64));
}

#[test]
fn table1_csv_matches_reference_row_zero() {
    let o = run(&["table1", "--format", "csv"]);
    assert!(o.status.success());
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 9); // header + 8 rows
    assert_eq!(lines[0], "k,exp_max,sqrt_max,sqrt_from_1,sqrt_from_2,sqrt_from_3");
    assert_eq!(lines[1], "0,2.074e-3,1.571e-2,9.194e-3,9.374e-4,3.550e-5");
    assert_eq!(lines[8], "7,1.082e-5,2.010e-4,1.138e-5,6.616e-8,1.932e-10");
}

#[test]
fn crossover_within_prose_caps() {
    let o = run(&["crossover", "--k", "0", "--precision", "10"]);
    assert!(o.status.success());
    let val: f64 = stdout(&o).trim().replace('e', "E").parse::<f64>().unwrap();
    assert!(val <= 3.2 && val > 2.0, "{val}");
}

#[test]
fn curve_csv_header_and_rows() {
    let o = run(&[
        "curve", "--bounds", "komatu-lower,lb1", "--low", "1", "--high", "2", "--points", "3",
    ]);
    assert!(o.status.success());
    let out = stdout(&o);
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines[0], "x,komatu-lower,lb1");
    assert_eq!(lines.len(), 4);
    // lower bounds carry negative signed error
    assert!(lines[1].split(',').nth(1).unwrap().starts_with('-'));
}

#[test]
fn curve_rejects_unknown_bound() {
    let o = run(&["curve", "--bounds", "wat", "--low", "1", "--high", "2", "--points", "3"]);
    assert_eq!(o.status.code(), Some(64));
}

#[test]
fn output_is_deterministic_across_runs_and_threads() {
    let args = ["table1", "--format", "csv"];
    let a = run(&args);
    let b = run(&args);
    assert_eq!(a.stdout, b.stdout);
    let single = bin()
        .args(args)
        .env("MILLS_BOUNDS_THREADS", "1")
        .output()
        .unwrap();
    assert_eq!(a.stdout, single.stdout);
    let quad = bin()
        .args(args)
        .env("MILLS_BOUNDS_THREADS", "4")
        .output()
        .unwrap();
    assert_eq!(a.stdout, quad.stdout);
}

#[test]
fn bad_thread_env_is_usage_error() {
    let o = bin()
        .args(["crossover", "--k", "1"])
        .env("MILLS_BOUNDS_THREADS", "zero")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(64));
}

#[test]
fn verify_small_run_is_green() {
    let o = run(&["verify", "--k-max", "4"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let out = stdout(&o);
    assert!(out.contains("PASS oracle-dual-method"));
    assert!(!out.contains("FAIL"));
}
