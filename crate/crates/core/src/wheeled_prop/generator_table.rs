//! Partial-composition signs of the corolla generators.
//!
//! The corollas μ_n span the operadic suspension of the commutative operad.
//! The table is derived by evaluating compositions in the endomorphism operad
//! of a one-dimensional space concentrated in degree 1, and checked against
//! the closed form `sign(m, n, i) = (-1)^{(n-1)(i-1)}`.

use std::collections::HashMap;
use std::sync::OnceLock;

use crate::koszul::Sign;

/// Arity bound for the derived part of the table.
const DERIVED_ARITY: usize = 10;

#[derive(Debug, Clone)]
pub struct GeneratorTable {
    derived: HashMap<(usize, usize, usize), Sign>,
}

/// A homogeneous map between tensor powers of the degree-1 line.
#[derive(Debug, Clone, Copy)]
struct LineMap {
    inputs: usize,
    outputs: usize,
}

impl LineMap {
    fn identity() -> LineMap {
        LineMap {
            inputs: 1,
            outputs: 1,
        }
    }

    fn nu(n: usize) -> LineMap {
        LineMap {
            inputs: n,
            outputs: 1,
        }
    }

    /// Degree of the map: output degree minus input degree.
    fn degree(&self) -> i64 {
        self.outputs as i64 - self.inputs as i64
    }
}

/// Evaluates `f_1 ⊗ ... ⊗ f_k` on `e^{⊗N}` with the Koszul rule
/// `(f ⊗ g)(v ⊗ w) = (-1)^{|g||v|} f(v) ⊗ g(w)`, returning the sign in front
/// of the basis vector of the output.
fn evaluate_tensor(maps: &[LineMap]) -> Sign {
    let mut exponent = 0i64;
    let mut consumed_degree = 0i64;
    for f in maps {
        // f has to move past every input factor that precedes its own inputs
        exponent += f.degree() * consumed_degree;
        consumed_degree += f.inputs as i64;
    }
    Sign::parity(exponent.rem_euclid(2) as usize)
}

/// ν_m ∘_i ν_n evaluated directly; ν_m maps e^{⊗m} to e with sign +1.
fn derive_partial_sign(m: usize, n: usize, i: usize) -> Sign {
    let mut inner: Vec<LineMap> = vec![LineMap::identity(); m];
    inner[i - 1] = LineMap::nu(n);
    // ν_m itself contributes +1; composition of maps introduces no extra sign
    evaluate_tensor(&inner)
}

impl GeneratorTable {
    fn derive(max_arity: usize) -> GeneratorTable {
        let mut derived = HashMap::new();
        for m in 1..=max_arity {
            for n in 1..=max_arity {
                for i in 1..=m {
                    derived.insert((m, n, i), derive_partial_sign(m, n, i));
                }
            }
        }
        GeneratorTable { derived }
    }

    /// The table, derived once and checked against the closed form.
    pub fn global() -> &'static GeneratorTable {
        static TABLE: OnceLock<GeneratorTable> = OnceLock::new();
        TABLE.get_or_init(|| {
            let table = GeneratorTable::derive(DERIVED_ARITY);
            for (&(m, n, i), &s) in &table.derived {
                assert_eq!(s, closed_form(n, i), "generator sign ({m},{n},{i})");
            }
            table
        })
    }

    /// Sign in μ_m ∘_i μ_n = sign · μ_{m+n-1}.
    pub fn sign(&self, m: usize, n: usize, i: usize) -> Sign {
        debug_assert!(i >= 1 && i <= m && n >= 1);
        match self.derived.get(&(m, n, i)) {
            Some(&s) => s,
            None => closed_form(n, i),
        }
    }
}

fn closed_form(n: usize, i: usize) -> Sign {
    Sign::parity((n - 1) * (i - 1))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quadratic_relation_signs() {
        let t = GeneratorTable::global();
        assert_eq!(t.sign(2, 2, 1), Sign::Plus);
        assert_eq!(t.sign(2, 2, 2), Sign::Minus);
    }

    #[test]
    fn derived_table_matches_closed_form() {
        let t = GeneratorTable::derive(7);
        for m in 1..=7 {
            for n in 1..=7 {
                for i in 1..=m {
                    assert_eq!(t.derived[&(m, n, i)], closed_form(n, i));
                }
            }
        }
    }

    #[test]
    fn koszul_evaluation() {
        // (id ⊗ ν_2) on e ⊗ e ⊗ e: ν_2 of degree -1 passes one degree-1 factor
        assert_eq!(
            evaluate_tensor(&[LineMap::identity(), LineMap::nu(2)]),
            Sign::Minus
        );
        assert_eq!(
            evaluate_tensor(&[LineMap::nu(2), LineMap::identity()]),
            Sign::Plus
        );
        assert_eq!(
            evaluate_tensor(&[LineMap::nu(3), LineMap::nu(3)]),
            Sign::Plus
        );
    }
}
