//! Implementations of the `propwheel` subcommands, returning their output.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use clap::ValueEnum;
use propwheel::diagrams::{dimension, enumerate_basis, to_dot, to_json};
use propwheel::wheeled_prop::GeneratorTable;
use propwheel::{Element, Permutation};
use propwheel_oracle::{
    action_on_cohomology, character_table, closed_form_action, compare_with_engine,
    composition_sign, ext_report, lambda_lambda_report, Limits, OracleReport, Side,
};
use serde::Serialize;
use serde_json::json;

use crate::error::CliError;
use crate::eval::eval;
use crate::parser::parse;
use crate::printer::render_element;
use crate::suites::{run_suite, Check, SuiteConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Dot,
}

/// Output of a command together with its success status.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub text: String,
    pub success: bool,
}

impl Output {
    fn ok(text: String) -> Output {
        Output {
            text,
            success: true,
        }
    }
}

fn pretty<T: Serialize>(value: &T) -> String {
    serde_json::to_string_pretty(value).expect("output serializes") + "\n"
}

fn no_dot(command: &str) -> CliError {
    CliError::Usage(format!(
        "`{command}` has no DOT output; use --format text or json"
    ))
}

/// The table of `dim 𝓔(q, l)` for `q ≤ q_max`, `l ≤ l_max`.
pub fn dims_text(q_max: usize, l_max: usize) -> String {
    let mut s = String::new();
    let _ = write!(s, "{:>4}", "q\\l");
    for l in 0..=l_max {
        let _ = write!(s, " {l:>8}");
    }
    s.push('\n');
    for q in 0..=q_max {
        let _ = write!(s, "{q:>4}");
        for l in 0..=l_max {
            let _ = write!(s, " {:>8}", dimension(q, l));
        }
        s.push('\n');
    }
    s
}

pub fn cmd_dims(q_max: usize, l_max: usize, format: Format) -> Result<Output, CliError> {
    match format {
        Format::Text => Ok(Output::ok(dims_text(q_max, l_max))),
        Format::Json => {
            let rows: Vec<_> = (0..=q_max)
                .flat_map(|q| {
                    (0..=l_max).map(
                        move |l| json!({"q": q, "l": l, "dimension": dimension(q, l).to_string()}),
                    )
                })
                .collect();
            Ok(Output::ok(pretty(&rows)))
        }
        Format::Dot => Err(no_dot("dims")),
    }
}

pub fn cmd_basis(q: usize, l: usize, format: Format, max_dim: usize) -> Result<Output, CliError> {
    let size = dimension(q, l);
    if size > max_dim.into() {
        return Err(CliError::Guard(format!(
            "dim E({q},{l}) = {size} exceeds --max-dim {max_dim}"
        )));
    }
    let basis = enumerate_basis(q, l);
    Ok(Output::ok(match format {
        Format::Text => {
            let mut s = String::new();
            for (k, d) in basis.iter().enumerate() {
                let _ = writeln!(
                    s,
                    "{:>4}  {d}  {}",
                    k + 1,
                    render_element(&Element::basis(d.clone()))
                );
            }
            s
        }
        Format::Json => {
            let rows: Vec<_> = basis
                .iter()
                .map(|d| json!({"fibers": d.fibers(), "wheels": d.wheels(), "degree": d.degree()}))
                .collect();
            pretty(&json!({"q": q, "l": l, "dimension": basis.len(), "basis": rows}))
        }
        Format::Dot => {
            let sum =
                Element::from_terms(q, l, basis.into_iter().map(|d| (d, num_traits::One::one())))?;
            to_dot(&sum)
        }
    }))
}

pub fn cmd_eval(text: &str, format: Format) -> Result<Output, CliError> {
    let e = eval(&parse(text)?)?;
    Ok(Output::ok(match format {
        Format::Text => render_element(&e) + "\n",
        Format::Json => to_json(&e) + "\n",
        Format::Dot => to_dot(&e),
    }))
}

pub fn cmd_check(suite: &str, config: &SuiteConfig, format: Format) -> Result<Output, CliError> {
    let checks = run_suite(suite, config)?;
    let success = checks.iter().all(|c| c.passed);
    let text = match format {
        Format::Text => checks_text(&checks),
        Format::Json => pretty(
            &json!({"suite": suite, "seed": config.seed, "passed": success, "checks": checks}),
        ),
        Format::Dot => return Err(no_dot("check")),
    };
    Ok(Output { text, success })
}

fn checks_text(checks: &[Check]) -> String {
    let mut s = String::new();
    for c in checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        let _ = write!(s, "{status}  {}: {}", c.suite, c.name);
        if !c.detail.is_empty() && !c.passed {
            let _ = write!(s, " ({})", c.detail);
        }
        s.push('\n');
    }
    s
}

/// Oracle computations exposed on the command line.
#[derive(Debug, Clone)]
pub enum OracleQuery {
    /// `Ext*(a^{⊗l} ⊗ Λ^j a, a^{⊗q})`.
    Ext {
        l: usize,
        j: usize,
        q: usize,
    },
    /// `Ext*(Λ^n a, Λ^m a)`.
    LambdaLambda {
        n: usize,
        m: usize,
    },
    /// A permutation acting on `Ext^{q-l}(a^{⊗l}, a^{⊗q})`.
    Action {
        side: Side,
        l: usize,
        q: usize,
        cycles: Vec<Vec<usize>>,
    },
    Characters {
        q: usize,
        max_wheels: usize,
    },
    Compare {
        q: usize,
        l: usize,
    },
    /// The sign of `[π^{⊗m}] ∘_i [π^{⊗n}]`.
    Yoneda {
        m: usize,
        n: usize,
        i: usize,
    },
}

fn dims_map(dims: &BTreeMap<usize, usize>) -> String {
    let entries: Vec<String> = dims.iter().map(|(k, v)| format!("{k}: {v}")).collect();
    format!("{{{}}}", entries.join(", "))
}

fn report_output(r: &OracleReport, format: Format) -> Result<Output, CliError> {
    let text = match format {
        Format::Text => {
            let mut s = format!("{}\n", dims_map(&r.dims));
            for c in &r.checks {
                let status = if c.passed { "PASS" } else { "FAIL" };
                let _ = writeln!(s, "{status}  {}: {}", c.name, c.detail);
            }
            s
        }
        Format::Json => r.to_json() + "\n",
        Format::Dot => return Err(no_dot("oracle")),
    };
    Ok(Output {
        text,
        success: r.passed(),
    })
}

pub fn cmd_oracle(
    query: &OracleQuery,
    format: Format,
    limits: &Limits,
) -> Result<Output, CliError> {
    if format == Format::Dot {
        return Err(no_dot("oracle"));
    }
    let json_or = |value: serde_json::Value, text: String, success: bool| Output {
        text: if format == Format::Json {
            pretty(&value)
        } else {
            text
        },
        success,
    };
    Ok(match query {
        OracleQuery::Ext { l, j, q } => {
            return report_output(&ext_report(*l, *j, *q, limits)?, format)
        }
        OracleQuery::LambdaLambda { n, m } => {
            return report_output(&lambda_lambda_report(*n, *m, limits)?, format)
        }
        OracleQuery::Action { side, l, q, cycles } => {
            let n = if *side == Side::Inputs { *q } else { *l };
            let p = Permutation::from_cycles(n, cycles)?;
            let oracle = action_on_cohomology(&p, *side, *l, *q, limits)?;
            let closed = closed_form_action(&p, *side, *l, *q)?;
            let agree = oracle == closed;
            let value = json!({
                "side": side, "l": l, "q": q, "permutation": p.to_string(),
                "matrix": oracle.to_string(), "closed_form_agrees": agree,
            });
            json_or(
                value,
                format!("{oracle}closed form agrees: {agree}\n"),
                agree,
            )
        }
        OracleQuery::Characters { q, max_wheels } => {
            let t = character_table(*q, *max_wheels, limits)?;
            let mut s = String::new();
            let classes: Vec<String> = t.classes.iter().map(|c| format!("{c:?}")).collect();
            let _ = writeln!(s, "wheels  dim  {}", classes.join(" "));
            for row in &t.rows {
                let _ = writeln!(
                    s,
                    "{:>6}  {:>3}  {}",
                    row.wheels,
                    row.dimension,
                    row.values.join(" ")
                );
            }
            json_or(serde_json::to_value(&t).expect("table serializes"), s, true)
        }
        OracleQuery::Compare { q, l } => {
            let r = compare_with_engine(*q, *l, limits)?;
            let text = format!(
                "dim {} (oracle {}), {} generators, {}\n",
                r.dimension,
                r.oracle_dimension,
                r.generators_checked,
                if r.passed() { "agree" } else { "DISAGREE" }
            );
            json_or(
                serde_json::to_value(&r).expect("report serializes"),
                text,
                r.passed(),
            )
        }
        OracleQuery::Yoneda { m, n, i } => {
            let c = composition_sign(*m, *n, *i, limits)?;
            let expected = GeneratorTable::global().sign(*m, *n, *i).to_i32();
            let agree = c == propwheel_oracle::Rational::from_integer(expected.into());
            let value = json!({"m": m, "n": n, "i": i, "sign": c.to_string(), "generator_table": expected, "agree": agree});
            json_or(value, format!("{c} (generator table {expected})\n"), agree)
        }
    })
}
