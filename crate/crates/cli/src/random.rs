//! Seeded random expressions for round-trip and evaluation suites.

use propwheel::diagrams::random::{random_coefficient, random_permutation};
use rand::Rng;

use crate::expr::MorphismExpr;

/// Largest arity appearing anywhere in a generated expression.
pub const MAX_ARITY: usize = 5;

/// A random well-formed expression of biarity `(q, l)`, `l ≤ q ≤ MAX_ARITY`,
/// with nesting depth at most `depth`.
pub fn random_expr<R: Rng + ?Sized>(rng: &mut R, q: usize, l: usize, depth: usize) -> MorphismExpr {
    assert!(
        l <= q && q <= MAX_ARITY,
        "biarity ({q}, {l}) is out of range"
    );
    if depth == 0 {
        return base(rng, q, l);
    }
    let d = depth - 1;
    match rng.gen_range(0..8) {
        0 => {
            let q1 = rng.gen_range(0..=q);
            let l1 = rng.gen_range(l.saturating_sub(q - q1)..=l.min(q1));
            MorphismExpr::tensor(
                random_expr(rng, q1, l1, d),
                random_expr(rng, q - q1, l - l1, d),
            )
        }
        1 => {
            let m = rng.gen_range(l..=q);
            MorphismExpr::compose(random_expr(rng, m, l, d), random_expr(rng, q, m, d))
        }
        2 if q < MAX_ARITY => {
            let inner = random_expr(rng, q + 1, l + 1, d);
            MorphismExpr::contract(rng.gen_range(1..=q + 1), rng.gen_range(1..=l + 1), inner)
        }
        3 => MorphismExpr::act_in(
            random_permutation(rng, q).cycles(),
            random_expr(rng, q, l, d),
        ),
        4 => MorphismExpr::act_out(
            random_permutation(rng, l).cycles(),
            random_expr(rng, q, l, d),
        ),
        5 => MorphismExpr::scale(random_coefficient(rng), random_expr(rng, q, l, d)),
        6 => {
            let n = rng.gen_range(2..=3);
            MorphismExpr::Sum((0..n).map(|_| random_expr(rng, q, l, d)).collect())
        }
        _ => base(rng, q, l),
    }
}

/// A tensor product of generators of biarity `(q, l)`.
fn base<R: Rng + ?Sized>(rng: &mut R, q: usize, l: usize) -> MorphismExpr {
    match (q, l) {
        _ if q == l && (q <= 1 || rng.gen_bool(0.5)) => MorphismExpr::Id(q),
        (_, 0) => MorphismExpr::Wheel(q),
        (_, 1) => MorphismExpr::Mu(q),
        _ => {
            let n = rng.gen_range(1..=q - l + 1);
            MorphismExpr::tensor(MorphismExpr::Mu(n), base(rng, q - n, l - 1))
        }
    }
}

/// A random biarity `(q, l)` with `l ≤ q ≤ MAX_ARITY`.
pub fn random_biarity<R: Rng + ?Sized>(rng: &mut R) -> (usize, usize) {
    let q = rng.gen_range(0..=MAX_ARITY);
    (q, rng.gen_range(0..=q))
}
