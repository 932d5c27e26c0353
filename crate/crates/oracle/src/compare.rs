//! Comparison of the diagram engine with the oracle's bimodules.
//!
//! A diagram with fibers `F_1, …, F_l` and wheels `X_1, …, X_k` corresponds to
//! the map `f_D` sending `F_j` to `j` and `X_i` to `l + i`, and so to the
//! Λ-projected class of `c_{f_D}` in `Ext(a^{⊗l} ⊗ Λ^k a, a^{⊗q})`. The engine
//! and oracle actions must agree up to one diagonal change of basis by signs.

use std::collections::VecDeque;

use num_traits::{One, Zero};
use propwheel::diagrams::enumerate_basis;
use propwheel::wheeled_prop::{act_inputs, act_outputs};
use propwheel::{Element, Permutation, Sign, WheeledDiagram};
use serde::Serialize;

use crate::action::{generators, partitions, representative, ClassSpace, Side};
use crate::complex::Limits;
use crate::error::OracleError;
use crate::matrix::Rational;

/// The map `f_D` of a diagram (1-based values).
pub fn diagram_surjection(d: &WheeledDiagram) -> Vec<usize> {
    let mut f = vec![0; d.q()];
    for (j, fiber) in d.fibers().iter().enumerate() {
        for &x in fiber {
            f[x - 1] = j + 1;
        }
    }
    for (i, wheel) in d.wheels().iter().enumerate() {
        for &x in wheel {
            f[x - 1] = d.l() + i + 1;
        }
    }
    f
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ComparisonReport {
    pub q: usize,
    pub l: usize,
    pub dimension: usize,
    pub oracle_dimension: usize,
    pub generators_checked: usize,
    /// Sign attached to each basis diagram, in `enumerate_basis` order.
    pub basis_change: Vec<i32>,
    pub mismatches: Vec<String>,
}

impl ComparisonReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.dimension == self.oracle_dimension
    }
}

struct Summands {
    basis: Vec<WheeledDiagram>,
    members: Vec<Vec<usize>>,
    spaces: Vec<ClassSpace>,
}

impl Summands {
    fn new(q: usize, l: usize, limits: &Limits) -> Result<Summands, OracleError> {
        let basis = enumerate_basis(q, l);
        let max_wheels = q.saturating_sub(l);
        let mut members = vec![Vec::new(); max_wheels + 1];
        for (n, d) in basis.iter().enumerate() {
            members[d.wheels().len()].push(n);
        }
        let mut spaces = Vec::with_capacity(members.len());
        for (k, ids) in members.iter().enumerate() {
            let maps: Vec<Vec<usize>> =
                ids.iter().map(|&n| diagram_surjection(&basis[n])).collect();
            spaces.push(ClassSpace::from_surjections(l, k, q, &maps, limits)?);
        }
        Ok(Summands {
            basis,
            members,
            spaces,
        })
    }
}

type Column = Vec<(usize, Rational)>;

fn sign_of(c: &Rational) -> Option<Sign> {
    if *c == Rational::one() {
        Some(Sign::Plus)
    } else if *c == -Rational::one() {
        Some(Sign::Minus)
    } else {
        None
    }
}

/// Compares `act_inputs`/`act_outputs` on `enumerate_basis(q, l)` with the
/// oracle's actions on `⊕_k Ext(a^{⊗l} ⊗ Λ^k a, a^{⊗q})`, generator by
/// generator.
pub fn compare_with_engine(
    q: usize,
    l: usize,
    limits: &Limits,
) -> Result<ComparisonReport, OracleError> {
    if l > q {
        return Err(OracleError::InvalidArguments(format!(
            "no diagrams of biarity ({q}, {l})"
        )));
    }
    let s = Summands::new(q, l, limits)?;
    let n = s.basis.len();
    let oracle_dimension = s.spaces.iter().map(ClassSpace::full_dimension).sum();
    let mut mismatches = Vec::new();

    // (generator label, engine columns, oracle columns)
    let mut pairs: Vec<(String, Vec<Column>, Vec<Column>)> = Vec::new();
    let gens: Vec<(Side, Permutation)> = generators(q)
        .into_iter()
        .map(|p| (Side::Inputs, p))
        .chain(generators(l).into_iter().map(|p| (Side::Outputs, p)))
        .collect();
    for (side, p) in &gens {
        let mut engine_cols = Vec::with_capacity(n);
        let mut oracle_cols = vec![Vec::new(); n];
        for d in &s.basis {
            let e = Element::basis(d.clone());
            let image = match side {
                Side::Inputs => act_inputs(p, &e),
                Side::Outputs => act_outputs(p, &e),
            }
            .map_err(|e| OracleError::InvalidArguments(e.to_string()))?;
            let col = image
                .terms()
                .map(|(t, c)| {
                    let m = s.basis.iter().position(|b| b == t).expect("basis diagram");
                    (m, c.clone())
                })
                .collect();
            engine_cols.push(col);
        }
        for (k, space) in s.spaces.iter().enumerate() {
            if space.dimension() == 0 {
                continue;
            }
            let m = space.action_matrix(p, *side)?;
            for (col, &global) in s.members[k].iter().enumerate() {
                oracle_cols[global] = (0..m.rows())
                    .filter_map(|row| {
                        let v = m.get(row, col);
                        (!v.is_zero()).then(|| (s.members[k][row], v))
                    })
                    .collect();
            }
        }
        pairs.push((format!("{side:?} {p}"), engine_cols, oracle_cols));
    }

    // propagate signs δ with E[a][b] = δ(a) O[a][b] δ(b)
    let mut delta: Vec<Option<Sign>> = vec![None; n];
    let mut edges: Vec<Vec<(usize, Sign)>> = vec![Vec::new(); n];
    for (label, engine, oracle) in &pairs {
        for b in 0..n {
            for (a, e) in &engine[b] {
                let o = oracle[b]
                    .iter()
                    .find(|(r, _)| r == a)
                    .map(|(_, v)| v.clone());
                match o.and_then(|o| sign_of(&(e / o))) {
                    Some(ratio) => {
                        edges[*a].push((b, ratio));
                        edges[b].push((*a, ratio));
                    }
                    None => mismatches.push(format!(
                        "{label}: entry ({}, {}) is {e} in the engine without a matching ±{e} in the oracle",
                        s.basis[*a], s.basis[b]
                    )),
                }
            }
        }
    }
    for start in 0..n {
        if delta[start].is_some() {
            continue;
        }
        delta[start] = Some(Sign::Plus);
        let mut queue = VecDeque::from([start]);
        while let Some(a) = queue.pop_front() {
            let da = delta[a].unwrap();
            for &(b, ratio) in &edges[a] {
                if delta[b].is_none() {
                    delta[b] = Some(da * ratio);
                    queue.push_back(b);
                }
            }
        }
    }
    let delta: Vec<Sign> = delta.into_iter().map(Option::unwrap).collect();
    let signed = |v: &Rational, s: Sign| if s.is_plus() { v.clone() } else { -v.clone() };
    for (label, engine, oracle) in &pairs {
        for b in 0..n {
            let mut expected: Vec<(usize, Rational)> = oracle[b]
                .iter()
                .map(|(a, v)| (*a, signed(&signed(v, delta[*a]), delta[b])))
                .collect();
            expected.sort_by_key(|(a, _)| *a);
            let mut actual = engine[b].clone();
            actual.sort_by_key(|(a, _)| *a);
            if expected != actual {
                mismatches.push(format!(
                    "{label}: column {} differs after the change of basis",
                    s.basis[b]
                ));
            }
        }
    }
    Ok(ComparisonReport {
        q,
        l,
        dimension: n,
        oracle_dimension,
        generators_checked: gens.len(),
        basis_change: delta.iter().map(|d| d.to_i32()).collect(),
        mismatches,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CharacterComparison {
    pub q: usize,
    pub classes: Vec<Vec<usize>>,
    /// Per wheel count: engine characters, then oracle characters.
    pub engine: Vec<Vec<String>>,
    pub oracle: Vec<Vec<String>>,
}

impl CharacterComparison {
    pub fn passed(&self) -> bool {
        self.engine == self.oracle
    }
}

/// `𝔖_q`-characters of `E(q, 0)` split by wheel count, from the engine and
/// from the oracle's Λ-summands.
pub fn compare_characters(q: usize, limits: &Limits) -> Result<CharacterComparison, OracleError> {
    let classes = partitions(q);
    let basis = enumerate_basis(q, 0);
    let mut engine = Vec::new();
    let mut oracle = Vec::new();
    for k in 0..=q {
        let space = ClassSpace::new(0, k, q, limits)?;
        let mut e_row = Vec::new();
        let mut o_row = Vec::new();
        for ct in &classes {
            let p = representative(ct);
            let mut trace = Rational::zero();
            for d in basis.iter().filter(|d| d.wheels().len() == k) {
                let image = act_inputs(&p, &Element::basis(d.clone()))
                    .map_err(|e| OracleError::InvalidArguments(e.to_string()))?;
                trace += image.coefficient(d);
            }
            e_row.push(trace.to_string());
            let o = if space.dimension() == 0 {
                Rational::zero()
            } else {
                space.character(&p)?
            };
            o_row.push(o.to_string());
        }
        engine.push(e_row);
        oracle.push(o_row);
    }
    Ok(CharacterComparison {
        q,
        classes,
        engine,
        oracle,
    })
}
