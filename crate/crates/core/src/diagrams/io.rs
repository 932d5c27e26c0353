//! JSON serialization and graphviz rendering of elements.

use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use super::{canonical_form, Coefficient, Element};
use crate::error::Error;

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonElement {
    q: usize,
    l: usize,
    terms: Vec<JsonTerm>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct JsonTerm {
    coeff: String,
    fibers: Vec<Vec<usize>>,
    wheels: Vec<Vec<usize>>,
}

/// Parses `p/q` or an integer.
pub fn parse_rational(text: &str) -> Option<Coefficient> {
    let text = text.trim();
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().ok()?;
    let den: BigInt = den.parse().ok()?;
    if den.is_zero() {
        return None;
    }
    Some(Coefficient::new(num, den))
}

pub fn to_json(e: &Element) -> String {
    let doc = JsonElement {
        q: e.q(),
        l: e.l(),
        terms: e
            .terms()
            .map(|(d, c)| JsonTerm {
                coeff: c.to_string(),
                fibers: d.fibers().to_vec(),
                wheels: d.wheels().to_vec(),
            })
            .collect(),
    };
    serde_json::to_string_pretty(&doc).expect("element serializes")
}

/// Parses an element; blocks may be listed in any order and are canonicalized
/// with the corresponding sign.
pub fn from_json(text: &str) -> Result<Element, Error> {
    let doc: JsonElement = serde_json::from_str(text).map_err(|e| Error::Json {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    let mut out = Element::zero(doc.q, doc.l);
    for (k, term) in doc.terms.into_iter().enumerate() {
        let bad = |message: String| Error::Json {
            line: 0,
            column: 0,
            message: format!("term {}: {message}", k + 1),
        };
        let c = parse_rational(&term.coeff)
            .ok_or_else(|| bad(format!("invalid coefficient {:?}", term.coeff)))?;
        if term.fibers.len() != doc.l {
            return Err(bad(format!(
                "{} fibers given for {} outputs",
                term.fibers.len(),
                doc.l
            )));
        }
        let (d, sign) =
            canonical_form(doc.q, term.fibers, term.wheels).map_err(|e| bad(e.to_string()))?;
        out.add_signed(d, &c, sign);
    }
    Ok(out)
}

/// Graphviz rendering: one cluster per term, a vertex per corolla with its
/// input legs and output leg, and a looped vertex per wheel.
pub fn to_dot(e: &Element) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "digraph element {{");
    let _ = writeln!(s, "  rankdir=BT;");
    let _ = writeln!(s, "  label=\"biarity ({}, {})\";", e.q(), e.l());
    for (t, (d, c)) in e.terms().enumerate() {
        let _ = writeln!(s, "  subgraph cluster_{t} {{");
        let _ = writeln!(s, "    label=\"{c}\";");
        for x in 1..=d.q() {
            let _ = writeln!(s, "    t{t}_in{x} [shape=plaintext, label=\"{x}\"];");
        }
        for (j, fiber) in d.fibers().iter().enumerate() {
            let j = j + 1;
            let _ = writeln!(
                s,
                "    t{t}_c{j} [shape=circle, label=\"mu{}\"];",
                fiber.len()
            );
            let _ = writeln!(s, "    t{t}_out{j} [shape=plaintext, label=\"{j}\"];");
            for x in fiber {
                let _ = writeln!(s, "    t{t}_in{x} -> t{t}_c{j};");
            }
            let _ = writeln!(s, "    t{t}_c{j} -> t{t}_out{j};");
        }
        for (k, wheel) in d.wheels().iter().enumerate() {
            let k = k + 1;
            let _ = writeln!(
                s,
                "    t{t}_w{k} [shape=doublecircle, label=\"w{}\"];",
                wheel.len()
            );
            for x in wheel {
                let _ = writeln!(s, "    t{t}_in{x} -> t{t}_w{k};");
            }
            let _ = writeln!(s, "    t{t}_w{k} -> t{t}_w{k};");
        }
        let _ = writeln!(s, "  }}");
    }
    let _ = writeln!(s, "}}");
    s
}
