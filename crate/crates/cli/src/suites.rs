//! Named check suites run by `propwheel check` and by the acceptance tests.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use propwheel::diagrams::random::random_element;
use propwheel::diagrams::{
    bell, dimension, enumerate_basis, from_json, partitions_into_parts, stirling2,
    surjection_count, to_json,
};
use propwheel::koszul::{remove_point, signature};
use propwheel::wheeled_prop::{
    act, act_inputs, axioms, class_h, class_hbar, contract, double_contract_commutation_check,
    horizontal, identity, mu, vertical, wheel, GeneratorTable,
};
use propwheel::{Element, Permutation};
use propwheel_oracle::action::generators;
use propwheel_oracle::{
    action_on_cohomology, build_complex, closed_form_action, compare_with_engine, composition_sign,
    ext_dimensions, ext_lambda_dimensions, ext_lambda_lambda, yoneda_product, ExtClass, LiftChoice,
    Limits, Rational, Side,
};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::commands::dims_text;
use crate::error::CliError;
use crate::eval::{eval, eval_text};
use crate::parser::parse;
use crate::printer::{print_expr, render_element};
use crate::random::{random_biarity, random_expr};

/// The dimension table for `q ≤ 5` as committed to the repository.
pub const GOLDEN_DIMS_Q5: &str = include_str!("../tests/golden/dims_q5.txt");

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Check {
    pub suite: String,
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Copy)]
pub struct SuiteConfig {
    pub seed: u64,
    /// Random trials per randomized property.
    pub trials: usize,
    pub limits: Limits,
}

impl Default for SuiteConfig {
    fn default() -> SuiteConfig {
        SuiteConfig {
            seed: 0,
            trials: 200,
            limits: Limits::default(),
        }
    }
}

impl SuiteConfig {
    fn rng(&self, salt: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed.wrapping_mul(0x9e37_79b9).wrapping_add(salt))
    }
}

type SuiteFn = fn(&SuiteConfig) -> Result<Vec<Check>, CliError>;

/// Suite names with their runners, in acceptance order.
pub const SUITES: &[(&str, SuiteFn)] = &[
    ("dimensions", dimensions),
    ("oracle", oracle_theorems),
    ("actions", actions),
    ("quadratic", quadratic),
    ("axioms", axiom_suites),
    ("exhaustive", exhaustive),
    ("yoneda", yoneda),
    ("complexes", complexes),
    ("roundtrip", round_trips),
];

/// Runs one suite, an individual axiom property, or `all`.
pub fn run_suite(name: &str, config: &SuiteConfig) -> Result<Vec<Check>, CliError> {
    if name == "all" {
        let mut out = Vec::new();
        for (_, f) in SUITES {
            out.extend(f(config)?);
        }
        return Ok(out);
    }
    if let Some((_, f)) = SUITES.iter().find(|(n, _)| *n == name) {
        return f(config);
    }
    if let Some((n, f)) = axioms::all_suites::<ChaCha8Rng>()
        .into_iter()
        .find(|(n, _)| *n == name)
    {
        let mut rng = config.rng(5);
        return Ok(vec![outcome("axioms", n, f(&mut rng, config.trials))]);
    }
    Err(CliError::Usage(format!(
        "unknown suite `{name}`; available: all, {}",
        suite_names().join(", ")
    )))
}

pub fn suite_names() -> Vec<&'static str> {
    SUITES
        .iter()
        .map(|(n, _)| *n)
        .chain(
            axioms::all_suites::<ChaCha8Rng>()
                .into_iter()
                .map(|(n, _)| n),
        )
        .collect()
}

fn check(suite: &str, name: impl Into<String>, passed: bool, detail: impl Into<String>) -> Check {
    Check {
        suite: suite.to_string(),
        name: name.into(),
        passed,
        detail: detail.into(),
    }
}

fn outcome(suite: &str, name: &str, r: Result<(), String>) -> Check {
    match r {
        Ok(()) => check(suite, name, true, ""),
        Err(e) => check(suite, name, false, e),
    }
}

fn first_failure(failures: &[String]) -> String {
    match failures.first() {
        None => String::new(),
        Some(f) => format!("{} failure(s), first: {f}", failures.len()),
    }
}

fn single(degree: usize, dim: &BigUint) -> BTreeMap<usize, usize> {
    let dim = dim.to_usize().expect("small dimension");
    if dim == 0 {
        BTreeMap::new()
    } else {
        BTreeMap::from([(degree, dim)])
    }
}

fn factorial(n: usize) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

/// Basis counts against the closed formula, `n!` and Bell numbers, `q ≤ 7`.
pub fn dimensions(_: &SuiteConfig) -> Result<Vec<Check>, CliError> {
    let mut failures = Vec::new();
    for q in 0..=7 {
        for l in 0..=q {
            let formula: BigUint = (l..=q)
                .map(|m| propwheel::diagrams::binomial(q, m) * surjection_count(m, l) * bell(q - m))
                .sum();
            let counted = BigUint::from(enumerate_basis(q, l).len());
            if dimension(q, l) != formula || counted != formula {
                failures.push(format!("({q},{l}): counted {counted}, formula {formula}"));
            }
        }
        if dimension(q, q) != factorial(q) {
            failures.push(format!("dimension({q},{q}) is not {q}!"));
        }
        if dimension(q, 0) != bell(q) {
            failures.push(format!("dimension({q},0) is not Bell({q})"));
        }
    }
    Ok(vec![check(
        "dimensions",
        "basis counts for q <= 7",
        failures.is_empty(),
        first_failure(&failures),
    )])
}

/// Ext dimensions from the bar complexes against the closed formulas.
pub fn oracle_theorems(config: &SuiteConfig) -> Result<Vec<Check>, CliError> {
    let lim = &config.limits;
    let mut tensor = Vec::new();
    let mut lambda = Vec::new();
    let mut lambda_lambda = Vec::new();
    for q in 0..=5 {
        for l in 1..=q {
            let got = ext_dimensions(l, q, lim)?;
            if got != single(q - l, &surjection_count(q, l)) {
                tensor.push(format!("Ext(a^{l}, a^{q}) = {got:?}"));
            }
        }
        for j in 0..=q {
            let got = ext_lambda_dimensions(j, q, lim)?;
            if got != single(q - j, &stirling2(q, j)) {
                lambda.push(format!("Ext(L^{j} a, a^{q}) = {got:?}"));
            }
        }
        for n in 0..=q {
            let expected = if n == 0 {
                BigUint::from(u32::from(q == 0))
            } else {
                partitions_into_parts(q, n)
            };
            let got = ext_lambda_lambda(n, q, lim)?;
            if got != single(q - n, &expected) {
                lambda_lambda.push(format!("Ext(L^{n} a, L^{q} a) = {got:?}"));
            }
        }
    }
    Ok(vec![
        check(
            "oracle",
            "tensor powers",
            tensor.is_empty(),
            first_failure(&tensor),
        ),
        check(
            "oracle",
            "exterior source",
            lambda.is_empty(),
            first_failure(&lambda),
        ),
        check(
            "oracle",
            "exterior source and target",
            lambda_lambda.is_empty(),
            first_failure(&lambda_lambda),
        ),
    ])
}

/// Oracle actions against the closed formulas, and engine bimodules against
/// the oracle, for `q ≤ 4`.
pub fn actions(config: &SuiteConfig) -> Result<Vec<Check>, CliError> {
    let lim = &config.limits;
    let mut closed = Vec::new();
    let mut engine = Vec::new();
    for q in 0..=4 {
        for l in 0..=q {
            if l >= 1 {
                for (side, n) in [(Side::Inputs, q), (Side::Outputs, l)] {
                    for p in generators(n) {
                        let oracle = action_on_cohomology(&p, side, l, q, lim)?;
                        if oracle != closed_form_action(&p, side, l, q)? {
                            closed.push(format!("({l},{q}) {side:?} {p}"));
                        }
                    }
                }
            }
            let r = compare_with_engine(q, l, lim)?;
            if !r.passed() {
                engine.push(format!("({q},{l}): {:?}", r.mismatches.first()));
            }
        }
    }
    Ok(vec![
        check(
            "actions",
            "closed formulas",
            closed.is_empty(),
            first_failure(&closed),
        ),
        check(
            "actions",
            "engine against oracle",
            engine.is_empty(),
            first_failure(&engine),
        ),
    ])
}

/// The quadratic relation and the classes `h_p`, `h̄_p`.
pub fn quadratic(_: &SuiteConfig) -> Result<Vec<Check>, CliError> {
    let relation = eval_text("mu(2) . (mu(2)*id(1)) + mu(2) . (id(1)*mu(2))")?;
    let mut failures = Vec::new();
    for p in 1..=6 {
        let h = class_h(p)?;
        let m = mu(p + 1)?;
        if h != m && h != m.neg() {
            failures.push(format!("h_{p} = {h}"));
        }
        // generators suffice once the action is a homomorphism; small cases are exhaustive
        let perms = if p < 4 {
            Permutation::all(p + 1)
        } else {
            generators(p + 1)
        };
        for s in &perms {
            let expected = if signature(s).is_plus() {
                h.clone()
            } else {
                h.neg()
            };
            if act_inputs(s, &h)? != expected {
                failures.push(format!("{s} on h_{p}"));
            }
        }
        let hbar = class_hbar(p)?;
        if hbar != contract(1, 1, &h)? || hbar.is_zero() {
            failures.push(format!("hbar_{p} = {hbar}"));
        }
    }
    let xi2 = contract(2, 1, &class_h(1)?)?;
    let generators_ok = eval_text("xi(1,1, mu(2))")? == wheel(1)?.neg()
        && eval_text("sin[(1 2)] mu(2)")? == mu(2)?.neg();
    Ok(vec![
        check(
            "quadratic",
            "relation vanishes",
            relation.is_zero(),
            format!("evaluates to {relation}"),
        ),
        check(
            "quadratic",
            "classes h and hbar",
            failures.is_empty(),
            first_failure(&failures),
        ),
        check(
            "quadratic",
            "second contraction of h_1",
            xi2 == class_hbar(1)?.neg(),
            format!("{xi2}"),
        ),
        check("quadratic", "generator examples", generators_ok, ""),
    ])
}

/// The randomized wheeled-PROP axiom suites with `config.trials` trials each.
pub fn axiom_suites(config: &SuiteConfig) -> Result<Vec<Check>, CliError> {
    Ok(axioms::all_suites::<ChaCha8Rng>()
        .into_iter()
        .enumerate()
        .map(|(k, (name, f))| {
            let mut rng = config.rng(100 + k as u64);
            outcome("axioms", name, f(&mut rng, config.trials))
        })
        .collect())
}

fn basis_elements(q: usize, l: usize) -> Vec<Element> {
    enumerate_basis(q, l)
        .into_iter()
        .map(Element::basis)
        .collect()
}

/// Pairs `(q, l)` with `l ≤ q ≤ 3`.
fn small_biarities() -> Vec<(usize, usize)> {
    (0..=3).flat_map(|q| (0..=q).map(move |l| (q, l))).collect()
}

/// The axioms on every basis diagram (or tuple of basis diagrams) with
/// `q, l ≤ 3`.
pub fn exhaustive(_: &SuiteConfig) -> Result<Vec<Check>, CliError> {
    let mut units = Vec::new();
    let mut equivariance = Vec::new();
    let mut double = Vec::new();
    let mut assoc = Vec::new();
    let mut hassoc = Vec::new();
    let mut interchange = Vec::new();
    for (q, l) in small_biarities() {
        for e in basis_elements(q, l) {
            if vertical(&identity(l), &e)? != e
                || vertical(&e, &identity(q))? != e
                || horizontal(&identity(0), &e) != e
                || horizontal(&e, &identity(0)) != e
            {
                units.push(format!("{e}"));
            }
            for sigma in Permutation::all(q) {
                for tau in Permutation::all(l) {
                    let moved = act(&sigma, &tau, &e)?;
                    for i in 1..=q {
                        for j in 1..=l {
                            let j0 = tau.inverse().apply(j);
                            let lhs = contract(i, j, &moved)?;
                            let inner = contract(sigma.apply(i), j0, &e)?;
                            let rhs =
                                act(&remove_point(&sigma, i)?, &remove_point(&tau, j0)?, &inner)?;
                            if lhs != rhs {
                                equivariance.push(format!("{e}, {sigma}, {tau}, ({i},{j})"));
                            }
                        }
                    }
                }
            }
            for i in 1..=q {
                for k in (1..=q).filter(|&k| k != i) {
                    for j in 1..=l {
                        for m in (1..=l).filter(|&m| m != j) {
                            if !double_contract_commutation_check(&e, (i, j), (k, m))? {
                                double.push(format!("{e}, ({i},{j}), ({k},{m})"));
                            }
                        }
                    }
                }
            }
        }
    }
    for a0 in 0..=3 {
        for a1 in 0..=a0 {
            for a2 in 0..=a1 {
                for a3 in 0..=a2 {
                    for f in basis_elements(a0, a1) {
                        for g in basis_elements(a1, a2) {
                            let gf = vertical(&g, &f)?;
                            for h in basis_elements(a2, a3) {
                                if vertical(&h, &gf)? != vertical(&vertical(&h, &g)?, &f)? {
                                    assoc.push(format!("{f}, {g}, {h}"));
                                }
                            }
                        }
                    }
                }
            }
        }
    }
    let pieces: Vec<Element> = small_biarities()
        .into_iter()
        .flat_map(|(q, l)| basis_elements(q, l))
        .collect();
    for a in &pieces {
        for b in pieces.iter().filter(|b| a.q() + b.q() <= 3) {
            let ab = horizontal(a, b);
            for c in pieces.iter().filter(|c| a.q() + b.q() + c.q() <= 3) {
                if horizontal(&ab, c) != horizontal(a, &horizontal(b, c)) {
                    hassoc.push(format!("{a}, {b}, {c}"));
                }
            }
        }
    }
    for c in &pieces {
        for d in pieces.iter().filter(|d| c.q() + d.q() <= 3) {
            let cd = horizontal(c, d);
            for a in pieces.iter().filter(|a| a.q() == c.l()) {
                for b in pieces.iter().filter(|b| b.q() == d.l()) {
                    let lhs = vertical(&horizontal(a, b), &cd)?;
                    let rhs = horizontal(&vertical(a, c)?, &vertical(b, d)?);
                    let rhs = if (b.degree() * c.degree()) % 2 == 0 {
                        rhs
                    } else {
                        rhs.neg()
                    };
                    if lhs != rhs {
                        interchange.push(format!("{a}, {b}, {c}, {d}"));
                    }
                }
            }
        }
    }
    let suite = "exhaustive";
    Ok(vec![
        check(suite, "unit laws", units.is_empty(), first_failure(&units)),
        check(
            suite,
            "bi-equivariance",
            equivariance.is_empty(),
            first_failure(&equivariance),
        ),
        check(
            suite,
            "double contraction",
            double.is_empty(),
            first_failure(&double),
        ),
        check(
            suite,
            "vertical associativity",
            assoc.is_empty(),
            first_failure(&assoc),
        ),
        check(
            suite,
            "horizontal associativity",
            hassoc.is_empty(),
            first_failure(&hassoc),
        ),
        check(
            suite,
            "interchange",
            interchange.is_empty(),
            first_failure(&interchange),
        ),
    ])
}

/// Yoneda products of the classes `[π^{⊗n}]` and the composition sign table.
pub fn yoneda(config: &SuiteConfig) -> Result<Vec<Check>, CliError> {
    let lim = &config.limits;
    let mut products = Vec::new();
    for n in 2..=3 {
        let y = ExtClass::pi(2).tensor(&ExtClass::identity(n - 1));
        for choice in [LiftChoice::Minimal, LiftChoice::Perturbed] {
            let p = yoneda_product(&ExtClass::pi(n), &y, choice, lim)?;
            if !p.cohomologous(&ExtClass::pi(n + 1), lim)? {
                products.push(format!("n = {n}, {choice:?}"));
            }
        }
    }
    let table = GeneratorTable::global();
    let mut signs = Vec::new();
    for m in 1..=4 {
        for n in 1..=5 - m {
            for i in 1..=m {
                let c = composition_sign(m, n, i, lim)?;
                let expected = Rational::from_integer(table.sign(m, n, i).to_i32().into());
                if c != expected {
                    signs.push(format!("({m},{n},{i}): oracle {c}, table {expected}"));
                }
            }
        }
    }
    let unit = yoneda_product(
        &ExtClass::pi(2),
        &ExtClass::identity(2),
        LiftChoice::Minimal,
        lim,
    )?;
    let unit_ok = unit.cohomologous(&ExtClass::pi(2), lim)?;
    let swapped = yoneda_product(
        &ExtClass::pi(2),
        &ExtClass::identity(1).tensor(&ExtClass::pi(2)),
        LiftChoice::Minimal,
        lim,
    )?;
    let swapped_ok = swapped.cohomologous(&ExtClass::pi(3).scale(&-Rational::one()), lim)?;
    Ok(vec![
        check(
            "yoneda",
            "pi products",
            products.is_empty(),
            first_failure(&products),
        ),
        check(
            "yoneda",
            "composition signs",
            signs.is_empty(),
            first_failure(&signs),
        ),
        check("yoneda", "unit and second slot", unit_ok && swapped_ok, ""),
    ])
}

/// `d² = 0` and vanishing above the target arity, `l ≤ 3`, `q ≤ 5`.
pub fn complexes(config: &SuiteConfig) -> Result<Vec<Check>, CliError> {
    let mut square = Vec::new();
    let mut vanishing = Vec::new();
    for l in 1..=3 {
        for q in 0..=5 {
            let c = build_complex(l, q, &config.limits)?;
            if !c.d_squared_is_zero() {
                square.push(format!("({l},{q})"));
            }
            let degrees = c.dimensions().len();
            let bounded = (0..degrees).all(|t| c.basis(t).iter().all(|b| b.slots() <= q))
                && c.top_degree() == q.checked_sub(l);
            if !bounded {
                vanishing.push(format!("({l},{q})"));
            }
        }
    }
    Ok(vec![
        check(
            "complexes",
            "d squared is zero",
            square.is_empty(),
            first_failure(&square),
        ),
        check(
            "complexes",
            "vanishing above the target arity",
            vanishing.is_empty(),
            first_failure(&vanishing),
        ),
    ])
}

/// Parse/print and JSON round trips, and the committed dimension table.
pub fn round_trips(config: &SuiteConfig) -> Result<Vec<Check>, CliError> {
    const SAMPLES: usize = 500;
    let mut rng = config.rng(7);
    let mut exprs = Vec::new();
    for _ in 0..SAMPLES {
        let (q, l) = random_biarity(&mut rng);
        let e = random_expr(&mut rng, q, l, 3);
        let text = print_expr(&e);
        match parse(&text) {
            Ok(back) if back == e => {}
            Ok(back) => exprs.push(format!("{text} reparses as {}", print_expr(&back))),
            Err(err) => exprs.push(format!("{text}: {err}")),
        }
    }
    let mut json = Vec::new();
    let mut rendered = Vec::new();
    for _ in 0..SAMPLES {
        let (q, l) = random_biarity(&mut rng);
        let e = random_element(&mut rng, q, l, 4);
        match from_json(&to_json(&e)) {
            Ok(back) if back == e => {}
            _ => json.push(format!("{e}")),
        }
        let text = render_element(&e);
        match parse(&text)
            .map_err(CliError::from)
            .and_then(|x| Ok(eval(&x)?))
        {
            Ok(back) if back == e => {}
            _ => rendered.push(format!("{e} rendered as {text}")),
        }
    }
    let table = dims_text(5, 5);
    Ok(vec![
        check(
            "roundtrip",
            "expression parse/print",
            exprs.is_empty(),
            first_failure(&exprs),
        ),
        check(
            "roundtrip",
            "element JSON",
            json.is_empty(),
            first_failure(&json),
        ),
        check(
            "roundtrip",
            "element rendering",
            rendered.is_empty(),
            first_failure(&rendered),
        ),
        check(
            "roundtrip",
            "golden dimension table",
            table == GOLDEN_DIMS_Q5,
            "dims 5 differs from tests/golden/dims_q5.txt",
        ),
    ])
}
