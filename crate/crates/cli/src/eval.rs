//! Evaluation of expressions to canonical elements.

use propwheel::wheeled_prop::{
    act_inputs, act_outputs, contract, horizontal, identity, mu, vertical, wheel,
};
use propwheel::{Element, Permutation};

use crate::error::ExprError;
use crate::expr::MorphismExpr;

/// Evaluates an expression in the diagram basis.
pub fn eval(e: &MorphismExpr) -> Result<Element, ExprError> {
    e.biarity()?;
    eval_checked(e)
}

fn eval_checked(e: &MorphismExpr) -> Result<Element, ExprError> {
    use MorphismExpr::*;
    Ok(match e {
        Mu(n) => mu(*n)?,
        Id(n) => identity(*n),
        Wheel(n) => wheel(*n)?,
        Zero(q, l) => Element::zero(*q, *l),
        Tensor(a, b) => horizontal(&eval_checked(a)?, &eval_checked(b)?),
        Compose(g, f) => vertical(&eval_checked(g)?, &eval_checked(f)?)?,
        Contract(i, j, inner) => contract(*i, *j, &eval_checked(inner)?)?,
        ActIn(cycles, inner) => {
            let x = eval_checked(inner)?;
            act_inputs(&Permutation::from_cycles(x.q(), cycles)?, &x)?
        }
        ActOut(cycles, inner) => {
            let x = eval_checked(inner)?;
            act_outputs(&Permutation::from_cycles(x.l(), cycles)?, &x)?
        }
        Scale(c, inner) => eval_checked(inner)?.scale(c),
        Sum(terms) => {
            let (q, l) = e.biarity()?;
            let mut acc = Element::zero(q, l);
            for t in terms {
                acc = acc.add(&eval_checked(t)?)?;
            }
            acc
        }
    })
}

/// Parses and evaluates.
pub fn eval_text(text: &str) -> Result<Element, ExprError> {
    eval(&crate::parser::parse(text)?)
}
