use std::fs;
use std::path::PathBuf;
use std::process::{Command, Output};

fn gkp(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_gkp")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn scratch(name: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("gkp-cli-test-{}", std::process::id()));
    fs::create_dir_all(&dir).unwrap();
    dir.join(name)
}

#[test]
fn eulerian_csv() {
    let o = gkp(&["gen", "--params", "0,1,1,1,-1,0", "--n", "4", "--format", "csv"]);
    assert!(o.status.success());
    let s = stdout(&o);
    assert_eq!(s.lines().count(), 5);
    assert_eq!(s.lines().last(), Some("1,11,11,1"));
}

#[test]
fn pascal_rows() {
    let o = gkp(&["gen", "--params", "0,0,1,0,0,1", "--n", "2"]);
    assert_eq!(stdout(&o), "1\n1,1\n1,2,1\n");
}

#[test]
fn narayana_normalized_bfile() {
    let o = gkp(&["gen", "--family", "narayana-e", "--args", "2,3,3", "--n", "3", "--normalize", "rising:3", "--format", "bfile"]);
    assert!(o.status.success(), "{}", stderr(&o));
    let vals: Vec<String> = stdout(&o).lines().map(|l| l.split_once(' ').unwrap().1.to_string()).collect();
    assert_eq!(vals.len(), 10);
    assert_eq!(vals[6..], ["1", "6", "6", "1"]);
}

#[test]
fn reversal_reports_new_params() {
    let o = gkp(&["transform", "--params", "0,1,0,1,-1,1", "--elem", "rt", "--n", "4"]);
    assert!(o.status.success(), "{}", stderr(&o));
    assert!(stderr(&o).contains("params 0,1,1,1,-1,0"));
    assert_eq!(stdout(&o).lines().last(), Some("1,11,11,1"));
}

#[test]
fn ubt_is_an_involution() {
    let orig = stdout(&gkp(&["gen", "--params", "1,2,0,0,-2,1", "--n", "6", "--format", "json"]));
    let path = scratch("ubt1.json");
    fs::write(&path, &orig).unwrap();
    let once = gkp(&["transform", "--input", path.to_str().unwrap(), "--elem", "ubt", "--format", "json"]);
    assert!(once.status.success(), "{}", stderr(&once));
    let path2 = scratch("ubt2.json");
    fs::write(&path2, stdout(&once)).unwrap();
    let twice = gkp(&["transform", "--input", path2.to_str().unwrap(), "--elem", "ubt", "--format", "json"]);
    assert!(twice.status.success(), "{}", stderr(&twice));
    assert_eq!(stdout(&twice), orig);
}

#[test]
fn identity_round_trip_is_byte_identical() {
    for (fmt, ext) in [("csv", "csv"), ("json", "json"), ("bfile", "txt")] {
        let first = scratch(&format!("rt-a.{ext}"));
        let second = scratch(&format!("rt-b.{ext}"));
        let gen = gkp(&["gen", "--params", "1/2,1,-1,3,2,1/3", "--n", "7", "--format", fmt, "--out", first.to_str().unwrap()]);
        assert!(gen.status.success(), "{}", stderr(&gen));
        let tr = gkp(&[
            "transform",
            "--input",
            first.to_str().unwrap(),
            "--elem",
            "id",
            "--format",
            fmt,
            "--out",
            second.to_str().unwrap(),
        ]);
        assert!(tr.status.success(), "{fmt}: {}", stderr(&tr));
        assert_eq!(fs::read(&first).unwrap(), fs::read(&second).unwrap(), "{fmt}");
    }
}

#[test]
fn input_is_checked_against_given_params() {
    let path = scratch("check.csv");
    fs::write(&path, stdout(&gkp(&["gen", "--params", "0,1,1,1,-1,0", "--n", "5"]))).unwrap();
    let o = gkp(&["transform", "--input", path.to_str().unwrap(), "--params", "0,0,1,0,0,1", "--elem", "rt"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("does not satisfy"));
}

#[test]
fn errors_exit_with_two() {
    assert_eq!(gkp(&["gen", "--params", "1,x,0,0,0,1"]).status.code(), Some(2));
    assert_eq!(gkp(&["gen", "--family", "nope", "--args", "1"]).status.code(), Some(2));
    assert_eq!(gkp(&["gen", "--params", "1,2,3"]).status.code(), Some(2));
    assert_eq!(gkp(&["verify", "nope"]).status.code(), Some(2));
    assert_eq!(gkp(&["transform", "--params", "0,1,1,1,-1,0", "--elem", "zz"]).status.code(), Some(2));
}

#[test]
fn non_normalized_transform_suggests_scale() {
    let o = gkp(&["transform", "--params", "0,1,1,1,-2,0", "--elem", "ubt"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(stderr(&o).contains("--scale 1,1/2"), "{}", stderr(&o));
    let ok = gkp(&["transform", "--params", "0,1,1,1,-2,0", "--scale", "1,1/2", "--elem", "ubt", "--n", "4"]);
    assert!(ok.status.success(), "{}", stderr(&ok));
}

#[test]
fn verify_worpitzky_passes() {
    let o = gkp(&["verify", "worpitzky", "--n", "6", "--samples", "10", "--seed", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    assert!(!stdout(&o).contains("FAIL"));
}

#[test]
fn verify_is_reproducible() {
    let a = stdout(&gkp(&["verify", "rank1", "--n", "6", "--samples", "3", "--seed", "5"]));
    let b = stdout(&gkp(&["verify", "rank1", "--n", "6", "--samples", "3", "--seed", "5"]));
    assert_eq!(a, b);
}

#[test]
fn verify_group_prints_cayley_table() {
    let o = gkp(&["verify", "s3_group", "--n", "5", "--samples", "2"]);
    assert!(o.status.success());
    assert!(stdout(&o).lines().take(7).all(|l| !l.starts_with("PASS")));
}

#[test]
fn conjecture_scan_reports_no_counterexample() {
    let o = gkp(&["verify", "conjecture", "--p", "2", "--n", "6"]);
    assert!(o.status.success());
    assert!(stdout(&o).contains("no counterexample found"));
}

#[test]
fn egf_of_eulerian_triangle() {
    let o = gkp(&["egf", "--params", "0,1,1,1,-1,0", "--order", "4"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o).lines().nth(3), Some("z^3: 1/6 + 2/3*t + 1/6*t^2"));
}

#[test]
fn closed_form_matches_recurrence() {
    let list = stdout(&gkp(&["closed-form", "--list"]));
    let first = list.lines().next().unwrap().split_whitespace().next().unwrap().to_string();
    let o = gkp(&["closed-form", "--id", &first, "--args", "2", "--n", "6"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o).lines().count(), 7);
}
