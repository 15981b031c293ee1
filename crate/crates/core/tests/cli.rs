use std::process::Command;

fn run(args: &[&str]) -> (i32, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_ll-lab")).args(args).env("LL_LAB_JOBS", "2").output().unwrap();
    (out.status.code().unwrap(), String::from_utf8(out.stdout).unwrap())
}

#[test]
fn verify_single_theorem() {
    let (code, out) = run(&["verify", "--theorem", "BK_even1", "--n", "1..3", "--w", "1..2"]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().count(), 7);
    assert!(out.lines().last().unwrap().contains("\"all_passed\":true"));
}

#[test]
fn verify_everything_small() {
    let (code, _) = run(&["verify", "--theorem", "all", "--n", "1..2", "--w", "1"]);
    assert_eq!(code, 0);
}

#[test]
fn unknown_theorem_is_a_usage_error() {
    assert_eq!(run(&["verify", "--theorem", "BK_even9"]).0, 2);
    assert_eq!(run(&["verify", "--n", "0"]).0, 2);
    assert_eq!(run(&["verify", "--format", "xml"]).0, 2);
    assert_eq!(run(&["table", "bogus"]).0, 2);
}

#[test]
fn table_output() {
    let (code, out) = run(&["table", "walk_counts", "--n", "6", "--w", "1"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l.split_whitespace().eq(["VT_gt", "1", "1,0,1,1,3,6,15"])));
    let (code, out) = run(&["table", "oeis_check", "--n", "3"]);
    assert_eq!(code, 0);
    let cat: Vec<&str> =
        out.lines().filter(|l| l.starts_with("catalan_square")).map(|l| l.split_whitespace().nth(2).unwrap()).collect();
    assert_eq!(cat, ["1", "1", "4", "25"]);
}

#[test]
fn table_format_and_k_filter() {
    let (code, out) = run(&["verify", "--theorem", "G_odd_k", "--n", "2", "--w", "1", "--k", "0,1", "--format", "table"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("theorem"));
    assert_eq!(out.lines().filter(|l| l.starts_with("G_odd_k")).count(), 2);
}
