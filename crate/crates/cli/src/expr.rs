//! Abstract syntax of morphism expressions and biarity inference.

use propwheel::Coefficient;

use crate::error::ExprError;
use crate::printer::print_expr;

/// A morphism expression. Biarities are `(inputs, outputs)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MorphismExpr {
    /// The corolla `μ_n`, biarity `(n, 1)`.
    Mu(usize),
    /// The identity, biarity `(n, n)`.
    Id(usize),
    /// The wheel on `n` inputs, biarity `(n, 0)`.
    Wheel(usize),
    /// The zero morphism of the given biarity.
    Zero(usize, usize),
    Tensor(Box<MorphismExpr>, Box<MorphismExpr>),
    /// `Compose(g, f)` is `g` after `f`.
    Compose(Box<MorphismExpr>, Box<MorphismExpr>),
    /// Contraction of input `i` with output `j`.
    Contract(usize, usize, Box<MorphismExpr>),
    /// Input relabelling by a permutation in disjoint cycle notation.
    ActIn(Vec<Vec<usize>>, Box<MorphismExpr>),
    /// Output relabelling by a permutation in disjoint cycle notation.
    ActOut(Vec<Vec<usize>>, Box<MorphismExpr>),
    Scale(Coefficient, Box<MorphismExpr>),
    Sum(Vec<MorphismExpr>),
}

impl MorphismExpr {
    pub fn tensor(a: MorphismExpr, b: MorphismExpr) -> MorphismExpr {
        MorphismExpr::Tensor(Box::new(a), Box::new(b))
    }

    pub fn compose(g: MorphismExpr, f: MorphismExpr) -> MorphismExpr {
        MorphismExpr::Compose(Box::new(g), Box::new(f))
    }

    pub fn contract(i: usize, j: usize, e: MorphismExpr) -> MorphismExpr {
        MorphismExpr::Contract(i, j, Box::new(e))
    }

    pub fn act_in(cycles: Vec<Vec<usize>>, e: MorphismExpr) -> MorphismExpr {
        MorphismExpr::ActIn(cycles, Box::new(e))
    }

    pub fn act_out(cycles: Vec<Vec<usize>>, e: MorphismExpr) -> MorphismExpr {
        MorphismExpr::ActOut(cycles, Box::new(e))
    }

    pub fn scale(c: Coefficient, e: MorphismExpr) -> MorphismExpr {
        MorphismExpr::Scale(c, Box::new(e))
    }

    /// Infers `(inputs, outputs)`, naming the offending subterm on failure.
    pub fn biarity(&self) -> Result<(usize, usize), ExprError> {
        use MorphismExpr::*;
        let fail = |message: String| ExprError::Arity {
            subterm: print_expr(self),
            message,
        };
        match self {
            Mu(n) => {
                if *n == 0 {
                    return Err(fail("a corolla needs at least one input".into()));
                }
                Ok((*n, 1))
            }
            Id(n) => Ok((*n, *n)),
            Wheel(n) => {
                if *n == 0 {
                    return Err(fail("a wheel needs at least one input".into()));
                }
                Ok((*n, 0))
            }
            Zero(q, l) => Ok((*q, *l)),
            Tensor(a, b) => {
                let (qa, la) = a.biarity()?;
                let (qb, lb) = b.biarity()?;
                Ok((qa + qb, la + lb))
            }
            Compose(g, f) => {
                let (qg, lg) = g.biarity()?;
                let (qf, lf) = f.biarity()?;
                if qg != lf {
                    return Err(fail(format!(
                        "the upper morphism has {qg} inputs but the lower one has {lf} outputs"
                    )));
                }
                Ok((qf, lg))
            }
            Contract(i, j, e) => {
                let (q, l) = e.biarity()?;
                if *i == 0 || *i > q {
                    return Err(fail(format!("input {i} does not exist among {q} inputs")));
                }
                if *j == 0 || *j > l {
                    return Err(fail(format!("output {j} does not exist among {l} outputs")));
                }
                Ok((q - 1, l - 1))
            }
            ActIn(cycles, e) => {
                let (q, l) = e.biarity()?;
                check_cycles(cycles, q, "inputs").map_err(fail)?;
                Ok((q, l))
            }
            ActOut(cycles, e) => {
                let (q, l) = e.biarity()?;
                check_cycles(cycles, l, "outputs").map_err(fail)?;
                Ok((q, l))
            }
            Scale(_, e) => e.biarity(),
            Sum(terms) => {
                let mut arities = terms.iter().map(MorphismExpr::biarity);
                let first = arities
                    .next()
                    .ok_or_else(|| fail("an empty sum has no biarity".into()))??;
                for a in arities {
                    let a = a?;
                    if a != first {
                        return Err(fail(format!(
                            "summands of biarity {first:?} and {a:?} cannot be added"
                        )));
                    }
                }
                Ok(first)
            }
        }
    }
}

fn check_cycles(cycles: &[Vec<usize>], n: usize, what: &str) -> Result<(), String> {
    let mut seen = vec![false; n + 1];
    for &x in cycles.iter().flatten() {
        if x == 0 || x > n {
            return Err(format!("label {x} is not among the {n} {what}"));
        }
        if seen[x] {
            return Err(format!("label {x} occurs twice in the permutation"));
        }
        seen[x] = true;
    }
    Ok(())
}
