use std::process::{Command, Output};

use serde_json::Value;

fn akspecht(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_akspecht")).args(args).output().expect("binary runs")
}

fn json(args: &[&str]) -> Value {
    let out = akspecht(args);
    assert!(out.status.success(), "{args:?}: {}", String::from_utf8_lossy(&out.stderr));
    serde_json::from_slice(&out.stdout).expect("valid JSON")
}

fn code(args: &[&str]) -> i32 {
    akspecht(args).status.code().expect("exit code")
}

#[test]
fn semistandard_tableaux_of_the_worked_example() {
    let v = json(&["tableaux", "--shape", "[[5],[2]]", "--type", "[[2,2],[2,1]]"]);
    assert_eq!(v["count"], 2);
    assert_eq!(v["kind"], "semistandard");
    assert_eq!(v["tableaux"].as_array().unwrap().len(), 2);
}

#[test]
fn standard_tableaux_counts() {
    assert_eq!(json(&["tableaux", "--shape", "[[1],[1]]"])["count"], 2);
    // hook length count for ((2,2),(2,1)): binom(7,4) * 2 * 2
    assert_eq!(json(&["tableaux", "--shape", "[[2,2],[2,1]]"])["count"], 140);
}

#[test]
fn shape_parse_errors_report_a_position() {
    let out = akspecht(&["tableaux", "--shape", "[[1],[1x]]"]);
    assert_eq!(out.status.code(), Some(1));
    let err = String::from_utf8_lossy(&out.stderr);
    assert!(err.contains("position 7"), "{err}");
    let out = akspecht(&["--mode", "rational", "--q", "2", "--Q", "1,x", "solve", "--lambda", "[[1],[1]]", "--nu", "[[1],[1]]"]);
    assert_eq!(out.status.code(), Some(1));
    assert!(String::from_utf8_lossy(&out.stderr).contains("position 2"));
}

#[test]
fn generators_print_in_subscript_notation() {
    let v = json(&["generators", "--lambda", "[[2,2],[2,1]]"]);
    assert_eq!(v["d"].as_array().unwrap().len(), 3);
    assert_eq!(v["l"][0]["h"], "L_5 - Q_2");
    let text = String::from_utf8(akspecht(&["generators", "--lambda", "[[2,2],[2,1]]", "--pretty"]).stdout).unwrap();
    assert!(text.contains("d^(2)_{1,1} = 1 + T_6 + T_{6,5}"), "{text}");
    let one = json(&["generators", "--lambda", "[[4]]"]);
    assert!(one["d"].as_array().unwrap().is_empty() && one["l"].as_array().unwrap().is_empty());
}

#[test]
fn solve_identity_case() {
    let v = json(&["--mode", "rational", "--q", "3", "--Q", "1,-2", "solve", "--lambda", "[[2],[1]]", "--nu", "[[2],[1]]"]);
    assert_eq!(v["nullspace"].as_array().unwrap().len(), 1);
    assert_eq!(v["rank"], 0);
    assert!(v["scope"].as_str().unwrap().contains("not necessarily all"));
}

#[test]
fn solver_and_input_errors_have_distinct_codes() {
    assert_eq!(code(&["solve", "--lambda", "[[2],[]]", "--nu", "[[],[2]]"]), 1);
    assert_eq!(code(&["--mode", "rational", "--q", "2", "--Q", "1,3", "solve", "--lambda", "[[],[3]]", "--nu", "[[2,1],[]]"]), 2);
    assert_eq!(code(&["--mode", "rational", "--q", "1", "--Q", "1,3", "element", "--jucys", "1", "--r", "2", "--n", "2"]), 1);
    assert_eq!(code(&["--mode", "generic", "--e", "3", "element", "--jucys", "1", "--r", "2", "--n", "2"]), 1);
    assert_eq!(code(&["--mode", "rational", "verify-ideal", "--lambda", "[[1,1],[1]]", "--max-iter", "1"]), 2);
    assert_eq!(code(&["no-such-command"]), 1);
}

#[test]
fn ideal_equality_for_the_smallest_case() {
    let v = json(&["--n", "2", "verify-ideal", "--lambda", "[[1],[1]]"]);
    assert_eq!(v["equal"], true);
    assert_eq!(v["ideal_dim"], v["intersection_dim"]);
    assert!(v["ideal_dim"].as_u64().unwrap() <= 8);
    let r = json(&["--mode", "rational", "--seed", "5", "verify-ideal", "--lambda", "[[1],[1]]"]);
    assert_eq!(r["equal"], true);
}

#[test]
fn element_json_round_trips() {
    let v = json(&["element", "--name", "m", "--lambda", "[[1],[1,1]]"]);
    assert_eq!(v["n"], 3);
    let again: Value = serde_json::from_str(&serde_json::to_string(&v).unwrap()).unwrap();
    assert_eq!(again, v);
    let alg = akspecht::hecke::Algebra::generic(2, 3).unwrap();
    let x = alg.from_json(&v["terms"], None).unwrap();
    assert_eq!(x, alg.m_of(&akspecht::combinatorics::mc(&[&[1], &[1, 1]])).unwrap());
    let w = json(&["--r", "2", "--n", "3", "element", "--word", "0,1,0,1"]);
    assert_eq!(alg.from_json(&w["terms"], None).unwrap(), alg.t_word(&[0, 1, 0, 1]).unwrap());
}

#[test]
fn fixed_seed_output_is_byte_identical() {
    let args = ["--mode", "rational", "--seed", "11", "solve", "--lambda", "[[1,1],[1]]", "--nu", "[[2],[1]]"];
    let a = akspecht(&args);
    let b = akspecht(&args);
    assert!(a.status.success());
    assert_eq!(a.stdout, b.stdout);
    let other = akspecht(&["--mode", "rational", "--seed", "12", "solve", "--lambda", "[[1,1],[1]]", "--nu", "[[2],[1]]"]);
    assert_ne!(a.stdout, other.stdout);
}

#[test]
fn output_file_matches_stdout() {
    let dir = std::env::temp_dir().join(format!("akspecht-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("t.json");
    let args = ["tableaux", "--shape", "[[2],[1]]"];
    let stdout = akspecht(&args).stdout;
    let mut with_out: Vec<&str> = args.to_vec();
    let p = path.to_str().unwrap().to_string();
    with_out.extend(["--out", &p]);
    assert!(akspecht(&with_out).status.success());
    assert_eq!(std::fs::read(&path).unwrap(), stdout);
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn reproduce_example_reports_the_factor_mismatch() {
    let out = akspecht(&["reproduce-example"]);
    assert_eq!(out.status.code(), Some(3), "{}", String::from_utf8_lossy(&out.stderr));
    let v: Value = serde_json::from_slice(&out.stdout).unwrap();
    let failed: Vec<&str> =
        v["checks"].as_array().unwrap().iter().filter(|c| c["match"] == false).map(|c| c["name"].as_str().unwrap()).collect();
    assert_eq!(failed, ["d^(1)_{1,2} row factor"]);
    let d112 = v["checks"].as_array().unwrap().iter().find(|c| c["name"] == "d^(1)_{1,2} row factor").unwrap();
    assert_eq!(d112["observed"], "(1 + q + q^2)(1 + q^2)");
}
