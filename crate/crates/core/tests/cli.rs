use std::path::Path;
use std::process::{Command, Output};

fn airyherm(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_airyherm"))
        .args(args)
        .env_remove("AIRYHERM_QUAD_TOL")
        .output()
        .expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn path_str(p: &Path) -> &str {
    p.to_str().unwrap()
}

#[test]
fn lacunary_suite_passes() {
    let o = airyherm(&["verify", "lacunary", "--order", "12", "--points", "40"]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    assert_eq!(stdout(&o), "lacunary: 41/41 passed\n");
}

#[test]
fn gould_hopper_suite_passes() {
    let o = airyherm(&["verify", "gould-hopper"]);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn airy_at_origin_has_ten_digits() {
    let o = airyherm(&["eval", "airy", "--x", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "0.3550280539\n");
}

#[test]
fn impossible_tolerance_fails_every_suite_kind() {
    for args in [
        vec!["--tol-override", "-1", "verify", "gould-hopper"],
        vec!["--tol-override", "-1", "verify", "omega"],
        vec!["--tol-override", "-1", "duality", "scan", "--jmax", "3"],
    ] {
        let o = airyherm(&args);
        assert_eq!(o.status.code(), Some(1), "{args:?}");
        assert!(stderr(&o).starts_with("FAIL "), "{}", stderr(&o));
    }
}

#[test]
fn usage_errors_exit_two() {
    for args in [
        vec![],
        vec!["verify"],
        vec!["verify", "nope"],
        vec!["verify", "cube", "--grid", "q=1"],
        vec!["eval", "airy"],
        vec!["eval", "airy", "--x", "0", "--grid", "x=0"],
        vec!["--quad-tol", "0", "verify", "airy"],
    ] {
        assert_eq!(airyherm(&args).status.code(), Some(2), "{args:?}");
    }
}

#[test]
fn env_tolerance_and_flag_precedence() {
    let bin = env!("CARGO_BIN_EXE_airyherm");
    let with_env = |value: &str, args: &[&str]| {
        Command::new(bin)
            .args(args)
            .env("AIRYHERM_QUAD_TOL", value)
            .output()
            .unwrap()
    };
    assert_eq!(
        with_env("garbage", &["eval", "airy", "--x", "1"])
            .status
            .code(),
        Some(2)
    );
    let o = with_env(
        "garbage",
        &["--quad-tol", "1e-9", "eval", "airy", "--x", "1"],
    );
    assert_eq!(o.status.code(), Some(0));
    let o = with_env("1e-8", &["eval", "airy", "--x", "1"]);
    assert_eq!(stdout(&o), "0.1352924163\n");
}

#[test]
fn csv_grids() {
    let dir = tempfile::tempdir().unwrap();
    let one = dir.path().join("one.csv");
    let o = airyherm(&["eval", "airy", "--x", "0", "--csv", path_str(&one)]);
    assert_eq!(o.status.code(), Some(0));
    let text = std::fs::read_to_string(&one).unwrap();
    assert_eq!(text.lines().count(), 2);
    assert_eq!(text.lines().next(), Some("t,x,value"));
    let v: f64 = text
        .lines()
        .nth(1)
        .unwrap()
        .split(',')
        .nth(2)
        .unwrap()
        .parse()
        .unwrap();
    assert!((v - 0.355_028_053_887_817_2).abs() < 1e-12);

    let nine = dir.path().join("nine.csv");
    let again = dir.path().join("again.csv");
    for p in [&nine, &again] {
        let o = airyherm(&[
            "eval",
            "kernel",
            "--s",
            "1",
            "--grid",
            "t=0.5,1,2;x=-1:1:1",
            "--csv",
            path_str(p),
        ]);
        assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    }
    let text = std::fs::read_to_string(&nine).unwrap();
    assert_eq!(text.lines().count(), 10);
    let second_row: Vec<&str> = text.lines().nth(2).unwrap().split(',').collect();
    assert_eq!(second_row[0].parse::<f64>().unwrap(), 0.5);
    assert_eq!(second_row[1].parse::<f64>().unwrap(), 0.0);
    assert_eq!(
        std::fs::read(&nine).unwrap(),
        std::fs::read(&again).unwrap()
    );
}

#[test]
fn unwritable_csv_exits_one() {
    let o = airyherm(&[
        "eval",
        "airy",
        "--x",
        "0",
        "--csv",
        "/nonexistent-dir/out.csv",
    ]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stderr(&o).contains("cannot write"));
}

#[test]
fn json_report_schema() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("cube.json");
    let o = airyherm(&[
        "verify",
        "cube",
        "--grid",
        "t=1;x=-1,0,1",
        "--json",
        path_str(&path),
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let v: serde_json::Value =
        serde_json::from_str(&std::fs::read_to_string(&path).unwrap()).unwrap();
    assert_eq!(v["suite"], "cube");
    assert_eq!(v["summary"]["total"], 3);
    assert_eq!(v["summary"]["passed"], 3);
    let names: Vec<&str> = v["cases"]
        .as_array()
        .unwrap()
        .iter()
        .map(|c| c["name"].as_str().unwrap())
        .collect();
    let mut sorted = names.clone();
    sorted.sort();
    assert_eq!(names, sorted);
    let case = &v["cases"][0];
    assert!(case["metric"].as_f64().unwrap() < 1e-7);
    assert_eq!(case["pass"], true);
    assert!(case["params"]["lhs"].is_string());
}

#[test]
fn duality_scan_prints_the_curve() {
    let o = airyherm(&[
        "duality", "scan", "--m", "4", "--tau", "50", "--t", "1", "--x", "0.5", "--jmax", "8",
    ]);
    assert_eq!(o.status.code(), Some(0), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.starts_with("oracle "));
    assert_eq!(out.lines().filter(|l| l.starts_with("J=")).count(), 9);
}
