//! Golden tests: machine output must be byte-stable and exit codes must
//! follow the 0/1/2 convention (ok / computational error / usage error).

use std::process::{Command, Output};

fn sdual(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_sdual"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn stdout_of(args: &[&str]) -> String {
    let out = sdual(args);
    assert!(
        out.status.success(),
        "expected success for {args:?}, stderr: {}",
        String::from_utf8_lossy(&out.stderr)
    );
    String::from_utf8(out.stdout).expect("utf8")
}

#[test]
fn json_duality_check_is_byte_stable() {
    assert_eq!(
        stdout_of(&["duality", "check", "--n", "4", "--d", "3", "--json"]),
        "{\"lhs\":\"770\",\"rhs\":\"770\",\"orthogonal\":true,\"asserted\":true}\n"
    );
    assert_eq!(
        stdout_of(&["duality", "check", "--n", "7", "--d", "2", "--json"]),
        "{\"lhs\":\"792\",\"rhs\":\"792\",\"orthogonal\":true,\"asserted\":false}\n"
    );
}

#[test]
fn json_series_reconstruct_is_byte_stable() {
    assert_eq!(
        stdout_of(&[
            "series",
            "reconstruct",
            "--dim",
            "9",
            "--delta",
            "2",
            "--q1",
            "3",
            "--sample",
            "0=1",
            "--sample",
            "1=10",
            "--json",
        ]),
        "{\"q\":[\"1\",\"0\",\"1\",\"0\",\"1\"]}\n"
    );
}

#[test]
fn json_kring_pair_is_byte_stable() {
    assert_eq!(
        stdout_of(&["kring", "pair", "--c", "1,0,1", "--u", "1,0,1", "--json"]),
        "{\"value\":\"1\"}\n"
    );
    assert_eq!(
        stdout_of(&["kring", "pair", "--c", "1,0,1", "--u", "1,0,1"]),
        "1\n"
    );
}

#[test]
fn json_kring_orth() {
    assert_eq!(
        stdout_of(&["kring", "orth", "--c", "2,0,-1", "--json"]),
        "{\"u\":{\"rank\":\"0\",\"c1\":\"1\",\"chi\":\"0\"},\"delta\":\"2\"}\n"
    );
}

#[test]
fn json_rep_sym() {
    assert_eq!(
        stdout_of(&["rep", "sym", "--partition", "2,0,0", "--n", "3", "--json"]),
        "{\"dim\":\"56\",\"virtual\":false,\"parts\":[\
         {\"partition\":\"6,0,0\",\"sl3\":\"6,0\",\"coeff\":\"1\"},\
         {\"partition\":\"4,2,0\",\"sl3\":\"4,2\",\"coeff\":\"1\"},\
         {\"partition\":\"2,2,2\",\"sl3\":\"0,0\",\"coeff\":\"1\"}]}\n"
    );
}

#[test]
fn chern_flag_converts_triples() {
    // rank 2, c1 = 0, c2 = 4 has moduli dimension 13
    assert_eq!(
        stdout_of(&["kring", "dim", "--c", "2,0,4", "--chern", "--json"]),
        "{\"value\":\"13\"}\n"
    );
    assert_eq!(
        stdout_of(&["kring", "dim", "--c", "2,0,-2", "--json"]),
        "{\"value\":\"13\"}\n"
    );
}

#[test]
fn series_coeff_expands() {
    assert_eq!(
        stdout_of(&["series", "coeff", "--num", "1,0,1,0,1", "--dim", "9", "--k", "3"]),
        "230\n"
    );
}

#[test]
fn duality_table_covers_grid_and_exits_zero() {
    let out = sdual(&["duality", "table", "--nmax", "5", "--json"]);
    assert!(out.status.success());
    let text = String::from_utf8(out.stdout).expect("utf8");
    assert!(text.contains("\"all_asserted_agree\":true"));
    // 6 values of n, 3 of d
    assert_eq!(text.matches("{\"n\":").count(), 18);
    assert!(text.contains("{\"n\":\"5\",\"d\":\"3\",\"lhs\":\"2222\",\"rhs\":\"2222\",\"equal\":true,\"asserted\":true}"));
}

#[test]
fn usage_errors_exit_two_and_name_the_token() {
    let out = sdual(&["kring", "pair", "--c", "1,0,x", "--u", "1,0,1"]);
    assert_eq!(out.status.code(), Some(2));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("'x'"), "stderr names the offending token: {err}");

    let out = sdual(&["kring", "frobnicate"]);
    assert_eq!(out.status.code(), Some(2));

    let out = sdual(&["series", "reconstruct", "--dim", "9", "--delta", "2", "--q1", "3", "--sample", "0:1"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn computational_errors_exit_one() {
    let out = sdual(&["duality", "check", "--n", "3", "--d", "7"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("unsupported degree"));

    let out = sdual(&["kring", "orth", "--c", "0,1,0"]);
    assert_eq!(out.status.code(), Some(1));

    // underdetermined reconstruction
    let out = sdual(&[
        "series", "reconstruct", "--dim", "9", "--delta", "2", "--q1", "3", "--sample", "0=1",
    ]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("insufficient data"));

    // rep dim of a non-partition
    let out = sdual(&["rep", "dim", "--partition", "1,2,0"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("invalid partition"));
}

#[test]
fn rep_decompose_accepts_explicit_characters() {
    assert_eq!(
        stdout_of(&[
            "rep",
            "decompose",
            "--weights",
            "2,0,0=1;0,2,0=1;0,0,2=1;1,1,0=1;1,0,1=1;0,1,1=1",
            "--json",
        ]),
        "{\"dim\":\"6\",\"virtual\":false,\"parts\":[{\"partition\":\"2,0,0\",\"sl3\":\"2,0\",\"coeff\":\"1\"}]}\n"
    );
    // asymmetric input is a computational error
    let out = sdual(&["rep", "decompose", "--weights", "2,0,0=1"]);
    assert_eq!(out.status.code(), Some(1));
}

#[test]
fn human_output_for_check_and_audit() {
    assert_eq!(
        stdout_of(&["duality", "check", "--n", "4", "--d", "3"]),
        "n=4 d=3: lhs = 770, rhs = 770, orthogonal, asserted\n"
    );
    assert_eq!(
        stdout_of(&["duality", "audit-alpha", "--n", "2"]),
        "audit n=2: ker dim = 56, coker dim = 35 — PASS\n"
    );
    assert_eq!(
        stdout_of(&[
            "series", "reconstruct", "--dim", "13", "--delta", "2", "--q1", "54", "--sample",
            "0=1", "--sample", "1=15", "--sample", "2=126", "--sample", "3=770",
        ]),
        "Q(t) = 1 + t + 7*t^2 + 7*t^3 + 22*t^4 + 7*t^5 + 7*t^6 + t^7 + t^8\nP(t) = Q(t)/(1-t)^14\nQ(1) = 54\n"
    );
}
