//! Rendering of expressions and elements as parseable text.

use num_traits::{One, Signed, Zero};
use propwheel::wheeled_prop::act_inputs;
use propwheel::{Coefficient, Element, Permutation, WheeledDiagram};

use crate::eval::eval;
use crate::expr::MorphismExpr;

/// Prints an expression so that `parse(print_expr(e)) == e`.
pub fn print_expr(e: &MorphismExpr) -> String {
    top(e)
}

fn top(e: &MorphismExpr) -> String {
    match e {
        MorphismExpr::Sum(terms) => {
            let mut s = String::new();
            for (k, t) in terms.iter().enumerate() {
                match t {
                    MorphismExpr::Scale(c, inner) if c.is_negative() => {
                        s.push_str(if k == 0 { "-" } else { " - " });
                        s.push_str(&scaled(&-c, inner));
                    }
                    _ => {
                        if k > 0 {
                            s.push_str(" + ");
                        }
                        s.push_str(&term(t));
                    }
                }
            }
            s
        }
        _ => term(e),
    }
}

fn term(e: &MorphismExpr) -> String {
    match e {
        MorphismExpr::Scale(c, inner) => {
            if c.is_negative() {
                format!("-{}", scaled(&-c, inner))
            } else {
                scaled(c, inner)
            }
        }
        _ => chain(e),
    }
}

fn scaled(c: &Coefficient, inner: &MorphismExpr) -> String {
    format!("{c} {}", chain(inner))
}

fn chain(e: &MorphismExpr) -> String {
    match e {
        MorphismExpr::Compose(g, f) => {
            let upper = match **g {
                MorphismExpr::Compose(..) => chain(g),
                _ => product(g),
            };
            format!("{upper} . {}", product(f))
        }
        _ => product(e),
    }
}

fn product(e: &MorphismExpr) -> String {
    match e {
        MorphismExpr::Tensor(a, b) => {
            let left = match **a {
                MorphismExpr::Tensor(..) => product(a),
                _ => factor(a),
            };
            format!("{left} * {}", factor(b))
        }
        _ => factor(e),
    }
}

fn factor(e: &MorphismExpr) -> String {
    match e {
        MorphismExpr::Mu(n) => format!("mu({n})"),
        MorphismExpr::Id(n) => format!("id({n})"),
        MorphismExpr::Wheel(n) => format!("w({n})"),
        MorphismExpr::Zero(q, l) => format!("zero({q},{l})"),
        MorphismExpr::Contract(i, j, inner) => format!("xi({i},{j}, {})", top(inner)),
        MorphismExpr::ActIn(cycles, inner) => {
            format!("sin[{}] {}", cycles_text(cycles), factor(inner))
        }
        MorphismExpr::ActOut(cycles, inner) => {
            format!("sout[{}] {}", cycles_text(cycles), factor(inner))
        }
        MorphismExpr::Compose(..)
        | MorphismExpr::Tensor(..)
        | MorphismExpr::Scale(..)
        | MorphismExpr::Sum(_) => {
            format!("({})", top(e))
        }
    }
}

fn cycles_text(cycles: &[Vec<usize>]) -> String {
    if cycles.is_empty() {
        return "()".into();
    }
    cycles
        .iter()
        .map(|c| {
            let labels: Vec<String> = c.iter().map(ToString::to_string).collect();
            format!("({})", labels.join(" "))
        })
        .collect()
}

/// The expression `± sin[σ] (μ_{|F_1|} * … * μ_{|F_l|} * w_{|X_1|} * …)` equal
/// to the basis element of a diagram, as a pair (expression, sign).
pub fn diagram_expr(d: &WheeledDiagram) -> (MorphismExpr, Coefficient) {
    let blocks: Vec<MorphismExpr> = d
        .fibers()
        .iter()
        .map(|f| MorphismExpr::Mu(f.len()))
        .chain(d.wheels().iter().map(|w| MorphismExpr::Wheel(w.len())))
        .collect();
    let body = blocks
        .into_iter()
        .reduce(MorphismExpr::tensor)
        .unwrap_or(MorphismExpr::Id(0));
    let labels: Vec<usize> = d
        .fibers()
        .iter()
        .chain(d.wheels())
        .flatten()
        .copied()
        .collect();
    let order = Permutation::new(labels).expect("blocks partition the inputs");
    let base = eval(&body).expect("product of generators");
    for p in [order.clone(), order.inverse()] {
        let image = act_inputs(&p, &base).expect("permutation of the inputs");
        let c = image.coefficient(d);
        if !c.is_zero() {
            let e = if p.is_identity() {
                body
            } else {
                MorphismExpr::act_in(p.cycles(), body)
            };
            return (e, c);
        }
    }
    unreachable!("relabelling the standard diagram reaches every diagram")
}

/// An expression evaluating to `e`.
pub fn element_expr(e: &Element) -> MorphismExpr {
    let mut terms: Vec<MorphismExpr> = e
        .terms()
        .map(|(d, c)| {
            let (body, sign) = diagram_expr(d);
            let c = c / sign;
            if c.is_one() {
                body
            } else {
                MorphismExpr::scale(c, body)
            }
        })
        .collect();
    match terms.len() {
        0 => MorphismExpr::Zero(e.q(), e.l()),
        1 => terms.pop().unwrap(),
        _ => MorphismExpr::Sum(terms),
    }
}

/// Text rendering of an element that parses and evaluates back to it.
pub fn render_element(e: &Element) -> String {
    print_expr(&element_expr(e))
}
