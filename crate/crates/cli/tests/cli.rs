use std::process::{Command, Output};

use yhe_core::braidsties::BraidsTies;
use yhe_core::yokonuma::Yokonuma;

fn yhe(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_yhe")).args(args).env_remove("YHE_BUDGET").output().expect("runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap().trim().to_string()
}

#[test]
fn mul_prints_normal_forms() {
    let o = yhe(&["mul", "--alg", "et", "-n", "2", "e1", "e1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "E{1,2}");

    let o = yhe(&["mul", "--alg", "y", "-r", "2", "-n", "2", "g1", "g1"]);
    let y = Yokonuma::new(2, 2).unwrap();
    let want = y.parse("1 + (q - q^-1)*e1*g1").unwrap();
    assert_eq!(y.parse(&stdout(&o)).unwrap(), want);

    let o = yhe(&["mul", "--alg", "et", "-n", "3", "1", "E{1,3|2}*g[2,1,3] + q^2*e1"]);
    let et = BraidsTies::new(3).unwrap();
    assert_eq!(et.parse(&stdout(&o)).unwrap(), et.parse("E{1,3|2}*g[2,1,3] + q^2*e1").unwrap());
}

#[test]
fn mul_json_round_trips() {
    let o = yhe(&["mul", "--alg", "et", "-n", "3", "--format", "json", "g1^-1", "e2"]);
    let et = BraidsTies::new(3).unwrap();
    let j = serde_json::from_slice(&o.stdout).unwrap();
    let want = et.mul(&et.parse("g1^-1").unwrap(), &et.parse("e2").unwrap());
    assert_eq!(et.from_json(&j).unwrap(), want);
}

#[test]
fn mul_reports_parse_errors() {
    let o = yhe(&["mul", "--alg", "et", "-n", "2", "g1 + t1"]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("byte 5"));
}

#[test]
fn dim_and_shapes() {
    assert_eq!(stdout(&yhe(&["dim", "--alg", "et", "-n", "3", "--alpha", "2,1"])), "18");
    assert_eq!(stdout(&yhe(&["dim", "--alg", "y", "-r", "3", "-n", "3"])), "162");
    let listing = stdout(&yhe(&["dim", "--alg", "et", "-n", "4", "--shapes"]));
    assert_eq!(listing.lines().last(), Some("360"));
    assert_eq!(yhe(&["dim", "--alg", "et", "-n", "3", "--alpha", "2,2"]).status.code(), Some(2));
}

#[test]
fn rep_is_sixteen_square() {
    let o = yhe(&["rep", "-r", "2", "-n", "2", "--elem", "g1", "--format", "json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_slice(&o.stdout).unwrap();
    assert_eq!(v["dim"], 16);
    assert!(!v["entries"].as_array().unwrap().is_empty());
}

#[test]
fn basis_listings() {
    let o = yhe(&["basis", "--alg", "y", "-r", "1", "-n", "1"]);
    let out = stdout(&o);
    assert_eq!(out.lines().count(), 1);
    assert!(out.ends_with("\t1"), "{out}");
    let o = yhe(&["basis", "--alg", "et", "-n", "3"]);
    assert_eq!(stdout(&o).lines().count(), 30);
    let et = BraidsTies::new(3).unwrap();
    for line in stdout(&o).lines() {
        let x = line.split('\t').nth(1).unwrap();
        assert_eq!(et.parse(&et.parse(x).unwrap().to_string()).unwrap(), et.parse(x).unwrap());
    }
}

#[test]
fn verify_exit_codes() {
    let o = yhe(&["verify", "counting", "-n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("360 = 15 * 24"));
    assert!(stdout(&o).starts_with("suite counting (seed 0)"));
    assert_eq!(yhe(&["verify", "relations-y", "-r", "2", "-n", "3"]).status.code(), Some(0));
    assert_eq!(yhe(&["verify", "no-such-suite"]).status.code(), Some(2));
    assert_eq!(yhe(&["verify", "cellular-et", "-n", "4", "--budget", "100"]).status.code(), Some(3));
    assert_eq!(yhe(&["frobnicate"]).status.code(), Some(2));
}

#[test]
fn budget_from_environment() {
    let o = Command::new(env!("CARGO_BIN_EXE_yhe"))
        .args(["basis", "--alg", "et", "-n", "3"])
        .env("YHE_BUDGET", "5")
        .output()
        .unwrap();
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn seeded_runs_are_identical() {
    let args = ["verify", "cellular-et", "psi", "-n", "3", "--seed", "17", "--samples", "10", "--format", "json"];
    let a = yhe(&args);
    let b = yhe(&args);
    assert_eq!(a.status.code(), Some(0));
    assert_eq!(a.stdout, b.stdout);
}
