use std::io::Write;
use std::process::{Command, Stdio};

fn propwheel(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_propwheel"))
        .args(args)
        .output()
        .expect("binary runs");
    (
        out.status.code().unwrap_or(-1),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn golden_dimension_table() {
    let (code, out, _) = propwheel(&["dims", "5"]);
    assert_eq!(code, 0);
    assert_eq!(out, include_str!("golden/dims_q5.txt"));
}

#[test]
fn dims_examples() {
    let (_, out, _) = propwheel(&["dims", "3", "3", "--format", "json"]);
    let rows: serde_json::Value = serde_json::from_str(&out).unwrap();
    let dim = |q: u64, l: u64| {
        rows.as_array()
            .unwrap()
            .iter()
            .find(|r| r["q"] == q && r["l"] == l)
            .map(|r| r["dimension"].as_str().unwrap().to_string())
            .unwrap()
    };
    assert_eq!(dim(3, 1), "10");
    assert_eq!(dim(3, 0), "5");
    assert_eq!(dim(3, 3), "6");
}

#[test]
fn eval_examples() {
    assert_eq!(propwheel(&["eval", "xi(1,1, mu(2))"]).1, "-1 w(1)\n");
    assert_eq!(propwheel(&["eval", "sin[(1 2)] mu(2)"]).1, "-1 mu(2)\n");
    let (code, _, err) = propwheel(&["eval", "mu(2) . mu(2)"]);
    assert_ne!(code, 0);
    assert!(err.contains("arity"), "{err}");
    let (code, _, err) = propwheel(&["eval", "mu(2) +\n mu("]);
    assert_ne!(code, 0);
    assert!(err.contains("line 2"), "{err}");
}

#[test]
fn eval_from_stdin() {
    let mut child = Command::new(env!("CARGO_BIN_EXE_propwheel"))
        .args(["eval", "-", "--format", "json"])
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .spawn()
        .unwrap();
    child
        .stdin
        .take()
        .unwrap()
        .write_all(b"mu(2) . (mu(2)*id(1)) + mu(2) . (id(1)*mu(2))")
        .unwrap();
    let out = child.wait_with_output().unwrap();
    let v: serde_json::Value = serde_json::from_slice(&out.stdout).unwrap();
    assert_eq!(v["q"], 3);
    assert_eq!(v["l"], 1);
    assert_eq!(v["terms"].as_array().unwrap().len(), 0);
}

#[test]
fn dot_output() {
    let (code, out, _) = propwheel(&["eval", "mu(2) * w(1)", "--format", "dot"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("digraph"));
    let (code, out, _) = propwheel(&["basis", "2", "1", "--format", "dot"]);
    assert_eq!(code, 0);
    assert_eq!(out.matches("subgraph").count(), 3);
}

#[test]
fn basis_guard() {
    let (code, _, err) = propwheel(&["basis", "5", "2", "--max-dim", "100"]);
    assert_ne!(code, 0);
    assert!(err.contains("max-dim"), "{err}");
}

#[test]
fn check_exit_status() {
    assert_eq!(propwheel(&["check", "quadratic"]).0, 0);
    assert_eq!(
        propwheel(&["check", "unit_laws", "--seed", "3", "--trials", "20"]).0,
        0
    );
    assert_ne!(propwheel(&["check", "no_such_suite"]).0, 0);
}

#[test]
fn check_is_deterministic_given_seed() {
    let a = propwheel(&["check", "interchange", "--seed", "9", "--format", "json"]).1;
    let b = propwheel(&["check", "interchange", "--seed", "9", "--format", "json"]).1;
    assert_eq!(a, b);
}

#[test]
fn oracle_commands() {
    let (code, out, _) = propwheel(&["oracle", "ext", "1", "3"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("{2: 1}\n"), "{out}");
    let (_, out, _) = propwheel(&["oracle", "lambda", "2", "3", "--format", "json"]);
    let v: serde_json::Value = serde_json::from_str(&out).unwrap();
    assert_eq!(v["dims"]["1"], 3);
    let (code, out, _) = propwheel(&["oracle", "lambdalambda", "2", "4"]);
    assert_eq!(code, 0);
    assert!(out.starts_with("{2: 2}"), "{out}");
    let (code, out, _) = propwheel(&["oracle", "action", "--side", "outputs", "2", "3", "(1 2)"]);
    assert_eq!(code, 0);
    assert!(out.contains("closed form agrees: true"), "{out}");
    assert_eq!(propwheel(&["oracle", "compare", "3", "1"]).0, 0);
    assert_eq!(propwheel(&["oracle", "yoneda", "2", "2", "2"]).0, 0);
    let (code, out, _) = propwheel(&["oracle", "characters", "3", "--format", "json"]);
    assert_eq!(code, 0);
    assert!(out.contains("\"classes\""));
}

#[test]
fn oracle_guard() {
    let (code, _, err) = propwheel(&["oracle", "ext", "1", "6"]);
    assert_ne!(code, 0);
    assert!(err.contains("bound"), "{err}");
}
