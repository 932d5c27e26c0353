//! Seeded property suites for the wheeled-PROP axioms.
//!
//! Each suite draws random elements with `q, l ≤ 5` and returns a description
//! of the first counterexample.

use rand::Rng;

use super::{act, contract, double_contract_commutation_check, horizontal, identity, vertical};
use crate::diagrams::random::{random_element, random_permutation};
use crate::diagrams::{from_json, to_json, Coefficient, Element};
use crate::koszul::{remove_point, Sign};

/// Largest arity used by the suites.
pub const MAX_ARITY: usize = 5;
const MAX_TERMS: usize = 4;

type SuiteResult = Result<(), String>;

fn element<R: Rng + ?Sized>(rng: &mut R, q: usize, l: usize) -> Element {
    random_element(rng, q, l, MAX_TERMS)
}

/// A random element with `q` inputs and any admissible number of outputs.
fn element_from<R: Rng + ?Sized>(rng: &mut R, q: usize) -> Element {
    let l = rng.gen_range(0..=q);
    element(rng, q, l)
}

/// A chain of arities `a_0 ≥ a_1 ≥ … ≥ a_len` with `a_0 ≤ max`.
fn decreasing<R: Rng + ?Sized>(rng: &mut R, max: usize, len: usize) -> Vec<usize> {
    let mut out = vec![rng.gen_range(0..=max)];
    for _ in 0..len {
        let last = *out.last().unwrap();
        out.push(rng.gen_range(0..=last));
    }
    out
}

fn expect_eq(name: &str, lhs: &Element, rhs: &Element, context: String) -> SuiteResult {
    if lhs == rhs {
        Ok(())
    } else {
        Err(format!("{name} fails for {context}: {lhs} != {rhs}"))
    }
}

fn ok<T>(r: Result<T, crate::Error>) -> Result<T, String> {
    r.map_err(|e| e.to_string())
}

/// `h ∘ (g ∘ f) = (h ∘ g) ∘ f`.
pub fn vertical_associativity<R: Rng + ?Sized>(rng: &mut R, trials: usize) -> SuiteResult {
    for _ in 0..trials {
        let a = decreasing(rng, MAX_ARITY, 3);
        let f = element(rng, a[0], a[1]);
        let g = element(rng, a[1], a[2]);
        let h = element(rng, a[2], a[3]);
        let lhs = ok(vertical(&h, &ok(vertical(&g, &f))?))?;
        let rhs = ok(vertical(&ok(vertical(&h, &g))?, &f))?;
        expect_eq(
            "vertical associativity",
            &lhs,
            &rhs,
            format!("f={f}, g={g}, h={h}"),
        )?;
    }
    Ok(())
}

/// `(a ⊗ b) ⊗ c = a ⊗ (b ⊗ c)`.
pub fn horizontal_associativity<R: Rng + ?Sized>(rng: &mut R, trials: usize) -> SuiteResult {
    for _ in 0..trials {
        let qa = rng.gen_range(0..=MAX_ARITY);
        let qb = rng.gen_range(0..=MAX_ARITY - qa);
        let qc = rng.gen_range(0..=MAX_ARITY - qa - qb);
        let a = element_from(rng, qa);
        let b = element_from(rng, qb);
        let c = element_from(rng, qc);
        let lhs = horizontal(&horizontal(&a, &b), &c);
        let rhs = horizontal(&a, &horizontal(&b, &c));
        expect_eq(
            "horizontal associativity",
            &lhs,
            &rhs,
            format!("a={a}, b={b}, c={c}"),
        )?;
    }
    Ok(())
}

/// `id ∘ f = f = f ∘ id` and `id_0 ⊗ f = f = f ⊗ id_0`.
pub fn unit_laws<R: Rng + ?Sized>(rng: &mut R, trials: usize) -> SuiteResult {
    for _ in 0..trials {
        let q = rng.gen_range(0..=MAX_ARITY);
        let l = rng.gen_range(0..=q);
        let f = element(rng, q, l);
        expect_eq(
            "left unit",
            &ok(vertical(&identity(l), &f))?,
            &f,
            format!("f={f}"),
        )?;
        expect_eq(
            "right unit",
            &ok(vertical(&f, &identity(q)))?,
            &f,
            format!("f={f}"),
        )?;
        expect_eq(
            "horizontal unit",
            &horizontal(&identity(0), &f),
            &f,
            format!("f={f}"),
        )?;
        expect_eq(
            "horizontal unit",
            &horizontal(&f, &identity(0)),
            &f,
            format!("f={f}"),
        )?;
    }
    Ok(())
}

/// `(a ⊗ b) ∘ (c ⊗ d) = (-1)^{|b||c|} (a ∘ c) ⊗ (b ∘ d)`.
pub fn interchange<R: Rng + ?Sized>(rng: &mut R, trials: usize) -> SuiteResult {
    for _ in 0..trials {
        let qc = rng.gen_range(0..=MAX_ARITY);
        let qd = rng.gen_range(0..=MAX_ARITY - qc);
        let lc = rng.gen_range(0..=qc);
        let ld = rng.gen_range(0..=qd);
        let c = element(rng, qc, lc);
        let d = element(rng, qd, ld);
        let a = element_from(rng, lc);
        let b = element_from(rng, ld);
        let lhs = ok(vertical(&horizontal(&a, &b), &horizontal(&c, &d)))?;
        let sign = Sign::parity(b.degree() * c.degree());
        let rhs = horizontal(&ok(vertical(&a, &c))?, &ok(vertical(&b, &d))?);
        let rhs = if sign.is_plus() { rhs } else { rhs.neg() };
        expect_eq(
            "interchange",
            &lhs,
            &rhs,
            format!("a={a}, b={b}, c={c}, d={d}"),
        )?;
    }
    Ok(())
}

/// `ξ^i_j(τ e σ) = τ' ξ^{σ(i)}_{τ⁻¹(j)}(e) σ'`.
pub fn bi_equivariance<R: Rng + ?Sized>(rng: &mut R, trials: usize) -> SuiteResult {
    for _ in 0..trials {
        let q = rng.gen_range(1..=MAX_ARITY);
        let l = rng.gen_range(1..=q);
        let e = element(rng, q, l);
        let sigma = random_permutation(rng, q);
        let tau = random_permutation(rng, l);
        let i = rng.gen_range(1..=q);
        let j = rng.gen_range(1..=l);
        let lhs = ok(contract(i, j, &ok(act(&sigma, &tau, &e))?))?;
        let j0 = tau.inverse().apply(j);
        let inner = ok(contract(sigma.apply(i), j0, &e))?;
        let rhs = ok(act(
            &ok(remove_point(&sigma, i))?,
            &ok(remove_point(&tau, j0))?,
            &inner,
        ))?;
        expect_eq(
            "bi-equivariance",
            &lhs,
            &rhs,
            format!("e={e}, σ={sigma}, τ={tau}, ({i},{j})"),
        )?;
    }
    Ok(())
}

/// Contractions along disjoint pairs commute.
pub fn double_contraction<R: Rng + ?Sized>(rng: &mut R, trials: usize) -> SuiteResult {
    for _ in 0..trials {
        let q = rng.gen_range(2..=MAX_ARITY);
        let l = rng.gen_range(2..=q);
        let e = element(rng, q, l);
        let i = rng.gen_range(1..=q);
        let k = (i + rng.gen_range(1..q) - 1) % q + 1;
        let j = rng.gen_range(1..=l);
        let m = (j + rng.gen_range(1..l) - 1) % l + 1;
        if !ok(double_contract_commutation_check(&e, (i, j), (k, m)))? {
            return Err(format!(
                "double contraction fails for e={e}, ({i},{j}), ({k},{m})"
            ));
        }
    }
    Ok(())
}

/// `from_json ∘ to_json = id`.
pub fn json_round_trip<R: Rng + ?Sized>(rng: &mut R, trials: usize) -> SuiteResult {
    for _ in 0..trials {
        let q = rng.gen_range(0..=MAX_ARITY);
        let l = rng.gen_range(0..=q);
        let e = element(rng, q, l);
        let back = ok(from_json(&to_json(&e)))?;
        expect_eq("json round trip", &back, &e, format!("e={e}"))?;
    }
    Ok(())
}

/// Linearity of vertical composition in each argument.
pub fn bilinearity<R: Rng + ?Sized>(rng: &mut R, trials: usize) -> SuiteResult {
    for _ in 0..trials {
        let a = decreasing(rng, MAX_ARITY, 2);
        let f = element(rng, a[0], a[1]);
        let f2 = element(rng, a[0], a[1]);
        let g = element(rng, a[1], a[2]);
        let c = Coefficient::from_integer(rng.gen_range(-3..=3i64).into());
        let sum = ok(f.scale(&c).add(&f2))?;
        let lhs = ok(vertical(&g, &sum))?;
        let rhs = ok(ok(vertical(&g, &f))?.scale(&c).add(&ok(vertical(&g, &f2))?))?;
        expect_eq("bilinearity", &lhs, &rhs, format!("f={f}, f'={f2}, g={g}"))?;
    }
    Ok(())
}

/// All suites by name.
pub type Suite<R> = fn(&mut R, usize) -> SuiteResult;

pub fn all_suites<R: Rng>() -> Vec<(&'static str, Suite<R>)> {
    vec![
        ("vertical_associativity", vertical_associativity::<R>),
        ("horizontal_associativity", horizontal_associativity::<R>),
        ("unit_laws", unit_laws::<R>),
        ("interchange", interchange::<R>),
        ("bi_equivariance", bi_equivariance::<R>),
        ("double_contraction", double_contraction::<R>),
        ("json_round_trip", json_round_trip::<R>),
        ("bilinearity", bilinearity::<R>),
    ]
}
