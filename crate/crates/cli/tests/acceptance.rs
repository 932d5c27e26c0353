use std::time::Instant;

use propwheel_cli::suites::{run_suite, SuiteConfig};

const CRITERIA: &[(&str, &[&str])] = &[
    ("1 dimension theorems", &["dimensions"]),
    ("2 oracle and theorem agreement", &["oracle"]),
    ("3 sign actions and engine bimodules", &["actions"]),
    ("4 quadratic relation and classes", &["quadratic"]),
    ("5 wheeled PROP axioms", &["axioms", "exhaustive"]),
    ("6 Yoneda products", &["yoneda"]),
    ("7 bar complexes", &["complexes"]),
    ("8 round trips and golden table", &["roundtrip"]),
];

#[test]
fn acceptance() {
    let config = SuiteConfig::default();
    let mut failed = Vec::new();
    for (label, suites) in CRITERIA {
        let start = Instant::now();
        let mut failures = Vec::new();
        for suite in *suites {
            match run_suite(suite, &config) {
                Ok(checks) => failures.extend(
                    checks
                        .into_iter()
                        .filter(|c| !c.passed)
                        .map(|c| format!("{}: {} {}", c.suite, c.name, c.detail)),
                ),
                Err(e) => failures.push(format!("{suite}: {e}")),
            }
        }
        let status = if failures.is_empty() { "PASS" } else { "FAIL" };
        println!("{status} criterion {label} ({:.1?})", start.elapsed());
        for f in &failures {
            println!("    {f}");
        }
        if !failures.is_empty() {
            failed.push(*label);
        }
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
