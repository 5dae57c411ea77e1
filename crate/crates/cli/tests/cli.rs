//! End-to-end tests of the binary: byte-exact golden files for the csv/json
//! encodings, exit codes, and file output.

use std::path::PathBuf;
use std::process::{Command, Output};

fn collatz(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_collatz"))
        .args(args)
        .output()
        .expect("failed to run binary")
}

fn golden(name: &str) -> String {
    let mut path = PathBuf::from(env!("CARGO_MANIFEST_DIR"));
    path.extend(["tests", "golden", name]);
    std::fs::read_to_string(&path).unwrap_or_else(|e| panic!("missing fixture {path:?}: {e}"))
}

fn assert_golden(args: &[&str], fixture: &str) {
    let out = collatz(args);
    assert!(out.status.success(), "{args:?} failed: {out:?}");
    let stdout = String::from_utf8(out.stdout).expect("valid utf-8");
    assert_eq!(stdout, golden(fixture), "byte mismatch for {args:?}");
}

#[test]
fn orbit_csv_matches_golden() {
    assert_golden(&["orbit", "9", "--steps", "3", "--format", "csv"], "orbit_9.csv");
}

#[test]
fn orbit_json_matches_golden() {
    assert_golden(&["orbit", "9", "--steps", "3", "--format", "json"], "orbit_9.json");
}

#[test]
fn figure1_default_matches_golden() {
    assert_golden(&["figure1"], "figure1_default.csv");
}

#[test]
fn rhythm_csv_matches_golden() {
    assert_golden(
        &["rhythm", "9", "--n", "3", "--enumerate", "4", "--format", "csv"],
        "rhythm_9.csv",
    );
}

#[test]
fn verify_csv_matches_golden() {
    assert_golden(
        &["verify", "--lo", "1", "--hi", "10", "--format", "csv"],
        "verify_1_10.csv",
    );
}

#[test]
fn construct_csv_matches_golden() {
    assert_golden(
        &["construct", "--direction", "dec", "--n", "3", "--m", "2", "--format", "csv"],
        "construct_dec_3_2.csv",
    );
}

#[test]
fn construct_increasing_csv_ends_at_4373() {
    let out = collatz(&["construct", "--direction", "inc", "--n", "7", "--k", "1", "--format", "csv"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.starts_with("index,value,step_size\n1,255,1\n"));
    assert!(stdout.ends_with("7,2915,1\n8,4373,\n"));
}

#[test]
fn rhythm_of_length_one_has_modulus_four() {
    let out = collatz(&["rhythm", "9", "--n", "1", "--format", "json"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        stdout,
        "{\"base\":\"9\",\"n\":1,\"rhythm\":[2],\"D\":\"4\",\"members\":[\
         {\"r\":0,\"value\":\"9\",\"verified\":true,\"rhythm\":[2]}]}\n"
    );
}

#[test]
fn verify_a_single_start() {
    let out = collatz(&["verify", "--lo", "5", "--hi", "5", "--format", "csv"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        stdout,
        "lo,hi,all_converged,max_excursion,worst_start,total_steps,first_nonconverged\n5,5,true,5,5,1,\n"
    );
}

#[test]
fn orbit_of_one_is_a_single_terminated_row() {
    let out = collatz(&["orbit", "1", "--steps", "5", "--format", "json"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        stdout,
        "{\"start\":\"1\",\"steps\":[{\"value\":\"1\",\"m\":2}],\"terminated\":true}\n"
    );
}

#[test]
fn figure1_minimal_run_has_two_rows() {
    let out = collatz(&["figure1", "--n", "1", "--k-list", "1"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(stdout, "step,k=1\n1,3\n2,5\n");
}

#[test]
fn figure1_single_k_endpoint() {
    let out = collatz(&["figure1", "--n", "7", "--k-list", "2"]);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert!(stdout.lines().last().unwrap().ends_with(",8747"));
}

#[test]
fn json_members_include_verification() {
    let out = collatz(&["rhythm", "9", "--n", "3", "--enumerate", "2", "--format", "json"]);
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        stdout,
        "{\"base\":\"9\",\"n\":3,\"rhythm\":[2,1,1],\"D\":\"32\",\"members\":[\
         {\"r\":0,\"value\":\"9\",\"verified\":true,\"rhythm\":[2,1,1]},\
         {\"r\":1,\"value\":\"41\",\"verified\":true,\"rhythm\":[2,1,1]}]}\n"
    );
}

#[test]
fn cycle_json_is_byte_stable() {
    let out = collatz(&["cycle", "9", "--steps", "100", "--format", "json"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    assert_eq!(
        stdout,
        "{\"start\":\"9\",\"cycle_found\":true,\"is_trivial\":true,\"steps_used\":8,\"members\":[\"1\"]}\n"
    );
}

#[test]
fn census_csv_is_byte_stable() {
    let out = collatz(&["census", "27", "--horizon", "4", "--format", "csv"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    // Elements 27, 41, 31, 47: all but 41 are 3 mod 4.
    assert_eq!(stdout, "index,x,y\n1,27,6\n3,31,7\n4,47,11\n");
}

#[test]
fn zero_start_is_a_domain_error() {
    let out = collatz(&["orbit", "0"]);
    assert_eq!(out.status.code(), Some(2));
    let stderr = String::from_utf8(out.stderr).unwrap();
    assert!(stderr.contains("positive"), "stderr: {stderr}");
}

#[test]
fn decreasing_with_unit_step_is_rejected() {
    let out = collatz(&["construct", "--direction", "dec", "--n", "2", "--m", "1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn short_orbit_is_a_computation_error() {
    let out = collatz(&["rhythm", "1", "--n", "2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn reversed_range_is_a_domain_error() {
    let out = collatz(&["verify", "--lo", "10", "--hi", "5"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn inconclusive_probe_exits_three() {
    let out = collatz(&["cycle", "27", "--steps", "2"]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn non_decimal_arguments_are_usage_errors() {
    for bad in ["-5", "2^64", "12x", ""] {
        let out = collatz(&["orbit", bad]);
        assert_eq!(out.status.code(), Some(2), "arg {bad:?}");
    }
}

#[test]
fn figure1_rejects_other_formats() {
    let out = collatz(&["figure1", "--format", "json"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn out_flag_writes_the_same_bytes_to_a_file() {
    let dir = std::env::temp_dir().join("collatz-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("figure1.csv");
    let out = collatz(&["figure1", "--out", path.to_str().unwrap()]);
    assert!(out.status.success());
    assert!(out.stdout.is_empty());
    assert_eq!(std::fs::read_to_string(&path).unwrap(), golden("figure1_default.csv"));
    std::fs::remove_file(&path).ok();
}

#[test]
fn unbounded_decimals_are_accepted() {
    // 2^130 + 1: even one step is enough to confirm parsing and big output.
    let big = "1361129467683753853853498429727072845825";
    let out = collatz(&["orbit", big, "--steps", "1", "--format", "csv"]);
    assert!(out.status.success());
    let stdout = String::from_utf8(out.stdout).unwrap();
    // 3x + 1 = 2^2 * (3 * 2^128 + 1)
    assert_eq!(stdout, "index,value,step_size\n1,1020847100762815390390123822295304634369,2\n");
}
