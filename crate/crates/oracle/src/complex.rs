//! Cochain complexes computing Ext(a^{⊗l}, a^{⊗q}) from the normalized bar
//! resolution.
//!
//! The resolution of `a` has `P̄^{⊗d}` in homological degree `d - 1`, and
//! `Hom(P̄^{⊗d}, a^{⊗q})` is the multilinear part of `(ℚ^d)^{⊗q}`, with basis
//! the surjections `g: q ↠ d` (the tensor `e_{g(1)} ⊗ … ⊗ e_{g(q)}`). For `l`
//! source factors we take the total complex of the `l`-fold tensor product: a
//! cochain basis element is a composition `(d_1, …, d_l)` together with a
//! surjection onto `d_1 + … + d_l` slots, slots grouped in consecutive blocks.

use std::collections::{BTreeMap, HashMap};

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use propwheel::diagrams::{binomial, surjection_count};
use propwheel::koszul::{koszul_sign, GradedWord};
use propwheel::{Permutation, Sign};

use crate::error::OracleError;
use crate::matrix::{add_entry, Echelon, Rational, SparseVec};

/// Resource bounds for oracle computations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub max_q: usize,
    pub max_cochain_dim: usize,
}

impl Default for Limits {
    fn default() -> Limits {
        Limits {
            max_q: 5,
            max_cochain_dim: 10_000,
        }
    }
}

impl Limits {
    pub fn check_q(&self, q: usize) -> Result<(), OracleError> {
        if q > self.max_q {
            return Err(OracleError::ResourceGuard(format!(
                "target arity {q} exceeds the bound {}",
                self.max_q
            )));
        }
        Ok(())
    }
}

/// A cochain basis element: block lengths and the slot (0-based) hit by each
/// of the `q` target factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Cochain {
    pub composition: Vec<usize>,
    pub values: Vec<usize>,
}

impl Cochain {
    pub fn slots(&self) -> usize {
        self.composition.iter().sum()
    }

    fn offsets(&self) -> Vec<usize> {
        let mut acc = 0;
        self.composition
            .iter()
            .map(|&c| {
                let o = acc;
                acc += c;
                o
            })
            .collect()
    }
}

/// Compositions of `total` into `parts` positive parts, lexicographic.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(total: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if total == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        for first in 1..=total.saturating_sub(parts - 1) {
            prefix.push(first);
            go(total - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(total, parts, &mut Vec::new(), &mut out);
    out
}

/// Surjections from `q` points onto `d` slots (0-based values), lexicographic.
pub fn surjections(q: usize, d: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if d > q || (d == 0 && q > 0) {
        return out;
    }
    let mut g = vec![0usize; q];
    loop {
        let mut seen = vec![false; d];
        for &v in &g {
            seen[v] = true;
        }
        if seen.iter().all(|&s| s) {
            out.push(g.clone());
        }
        let mut k = q;
        loop {
            if k == 0 {
                return out;
            }
            k -= 1;
            if g[k] + 1 < d {
                g[k] += 1;
                for x in &mut g[k + 1..] {
                    *x = 0;
                }
                break;
            }
        }
    }
}

/// Total cochain dimension of the complex for `(l, q)`.
pub fn cochain_dimension(l: usize, q: usize) -> BigUint {
    if l > q {
        return BigUint::from(0u32);
    }
    if l == 0 {
        return BigUint::from(u32::from(q == 0));
    }
    (l..=q)
        .map(|d| binomial(d - 1, l - 1) * surjection_count(q, d))
        .sum()
}

#[derive(Debug, Clone)]
pub struct BarCochainComplex {
    l: usize,
    q: usize,
    bases: Vec<Vec<Cochain>>,
    index: Vec<HashMap<Cochain, usize>>,
}

impl BarCochainComplex {
    pub fn l(&self) -> usize {
        self.l
    }

    pub fn q(&self) -> usize {
        self.q
    }

    /// Highest cohomological degree carrying cochains, `q - l`, or `None`
    /// when the complex is zero.
    pub fn top_degree(&self) -> Option<usize> {
        self.bases.len().checked_sub(1)
    }

    pub fn dimension(&self, t: usize) -> usize {
        self.bases.get(t).map_or(0, Vec::len)
    }

    pub fn dimensions(&self) -> Vec<usize> {
        self.bases.iter().map(Vec::len).collect()
    }

    pub fn basis(&self, t: usize) -> &[Cochain] {
        self.bases.get(t).map_or(&[], Vec::as_slice)
    }

    pub fn index_of(&self, t: usize, c: &Cochain) -> Option<usize> {
        self.index.get(t)?.get(c).copied()
    }

    fn position(&self, t: usize, c: &Cochain) -> usize {
        self.index[t][c]
    }

    /// Coboundary of the `k`-th basis cochain of degree `t`.
    pub fn differential_of(&self, t: usize, k: usize) -> SparseVec {
        let mut out = SparseVec::new();
        if t + 1 >= self.bases.len() {
            return out;
        }
        let c = &self.bases[t][k];
        let offsets = c.offsets();
        let mut block_exponent = 0usize;
        for (b, &len) in c.composition.iter().enumerate() {
            let mut composition = c.composition.clone();
            composition[b] += 1;
            for r in 1..=len {
                let slot = offsets[b] + r - 1;
                let fiber: Vec<usize> = (0..self.q).filter(|&x| c.values[x] == slot).collect();
                let sign = Sign::parity(block_exponent + r);
                let coeff: Rational = Rational::from_integer(sign.to_i32().into());
                // nonempty proper subsets stay on `slot`, the rest moves up
                for mask in 1..(1usize << fiber.len()) - 1 {
                    let values = c
                        .values
                        .iter()
                        .enumerate()
                        .map(|(x, &v)| {
                            if v < slot {
                                v
                            } else if v > slot {
                                v + 1
                            } else {
                                let k = fiber.iter().position(|&y| y == x).unwrap();
                                if mask >> k & 1 == 1 {
                                    v
                                } else {
                                    v + 1
                                }
                            }
                        })
                        .collect();
                    let target = Cochain {
                        composition: composition.clone(),
                        values,
                    };
                    add_entry(&mut out, self.position(t + 1, &target), coeff.clone());
                }
            }
            block_exponent += len - 1;
        }
        out
    }

    pub fn apply_differential(&self, t: usize, v: &SparseVec) -> SparseVec {
        let mut out = SparseVec::new();
        for (&k, x) in v {
            for (idx, y) in self.differential_of(t, k) {
                add_entry(&mut out, idx, y * x);
            }
        }
        out
    }

    /// Checks `d ∘ d = 0` on every basis cochain.
    pub fn d_squared_is_zero(&self) -> bool {
        (0..self.bases.len()).all(|t| {
            (0..self.dimension(t)).all(|k| {
                let once = self.differential_of(t, k);
                self.apply_differential(t + 1, &once).is_empty()
            })
        })
    }

    /// Rank of `d: C^t → C^{t+1}`.
    pub fn differential_rank(&self, t: usize) -> usize {
        let mut e = Echelon::new();
        for k in 0..self.dimension(t) {
            e.insert(&self.differential_of(t, k));
        }
        e.rank()
    }

    /// Cohomology dimensions, listing only non-zero degrees.
    pub fn cohomology_dims(&self) -> BTreeMap<usize, usize> {
        let ranks: Vec<usize> = (0..self.bases.len())
            .map(|t| self.differential_rank(t))
            .collect();
        let mut out = BTreeMap::new();
        for t in 0..self.bases.len() {
            let below = if t == 0 { 0 } else { ranks[t - 1] };
            let h = self.dimension(t) - ranks[t] - below;
            if h > 0 {
                out.insert(t, h);
            }
        }
        out
    }

    /// Right action of `σ ∈ 𝔖_q` on the target: `e_g . σ = e_{g∘σ}`.
    pub fn act_target(&self, sigma: &Permutation, t: usize, k: usize) -> (usize, Sign) {
        let c = &self.bases[t][k];
        let values = (1..=self.q).map(|x| c.values[sigma.apply(x) - 1]).collect();
        let target = Cochain {
            composition: c.composition.clone(),
            values,
        };
        (self.position(t, &target), Sign::Plus)
    }

    /// Left action of `τ ∈ 𝔖_l` on the source: block `b` moves to position
    /// `τ(b)`, with the Koszul sign of the block degrees `d_b - 1`.
    pub fn act_source(&self, tau: &Permutation, t: usize, k: usize) -> (usize, Sign) {
        let c = &self.bases[t][k];
        let old_offsets = c.offsets();
        let mut composition = vec![0; self.l];
        for (b, &len) in c.composition.iter().enumerate() {
            composition[tau.apply(b + 1) - 1] = len;
        }
        let mut new_offsets = vec![0; self.l];
        for b in 1..self.l {
            new_offsets[b] = new_offsets[b - 1] + composition[b - 1];
        }
        let block_of = |slot: usize| old_offsets.iter().rposition(|&o| o <= slot).unwrap();
        let values = c
            .values
            .iter()
            .map(|&v| {
                let b = block_of(v);
                new_offsets[tau.apply(b + 1) - 1] + v - old_offsets[b]
            })
            .collect();
        let degrees = c.composition.iter().map(|&len| len - 1).collect();
        let sign = koszul_sign(tau, &GradedWord::new(degrees)).expect("arity checked");
        (
            self.position(
                t,
                &Cochain {
                    composition,
                    values,
                },
            ),
            sign,
        )
    }

    pub fn apply_target(&self, sigma: &Permutation, t: usize, v: &SparseVec) -> SparseVec {
        self.apply_basis_map(v, |k| self.act_target(sigma, t, k))
    }

    pub fn apply_source(&self, tau: &Permutation, t: usize, v: &SparseVec) -> SparseVec {
        self.apply_basis_map(v, |k| self.act_source(tau, t, k))
    }

    fn apply_basis_map<F>(&self, v: &SparseVec, f: F) -> SparseVec
    where
        F: Fn(usize) -> (usize, Sign),
    {
        let mut out = SparseVec::new();
        for (&k, x) in v {
            let (idx, sign) = f(k);
            let value = if sign.is_plus() {
                x.clone()
            } else {
                -x.clone()
            };
            add_entry(&mut out, idx, value);
        }
        out
    }

    /// The top-degree cochain `c_f` of a surjection `f: q ↠ l` (1-based
    /// values): block `k` has length `|f⁻¹(k)|` and each point is sent to its
    /// rank within its fiber.
    pub fn surjection_cocycle(&self, f: &[usize]) -> Result<SparseVec, OracleError> {
        let top = self
            .top_degree()
            .ok_or_else(|| OracleError::InvalidArguments("the complex is zero".into()))?;
        if f.len() != self.q || f.iter().any(|&v| v == 0 || v > self.l) {
            return Err(OracleError::InvalidArguments(format!(
                "{f:?} is not a map from {} points to {} points",
                self.q, self.l
            )));
        }
        let mut composition = vec![0; self.l];
        for &v in f {
            composition[v - 1] += 1;
        }
        if composition.contains(&0) {
            return Err(OracleError::InvalidArguments(format!(
                "{f:?} is not surjective"
            )));
        }
        let mut offsets = vec![0; self.l];
        for b in 1..self.l {
            offsets[b] = offsets[b - 1] + composition[b - 1];
        }
        let values = f
            .iter()
            .map(|&v| {
                let slot = offsets[v - 1];
                offsets[v - 1] += 1;
                slot
            })
            .collect();
        let mut out = SparseVec::new();
        out.insert(
            self.position(
                top,
                &Cochain {
                    composition,
                    values,
                },
            ),
            Rational::one(),
        );
        Ok(out)
    }
}

/// Builds the cochain complex for `Ext*(a^{⊗l}, a^{⊗q})`.
pub fn build_complex(
    l: usize,
    q: usize,
    limits: &Limits,
) -> Result<BarCochainComplex, OracleError> {
    limits.check_q(q)?;
    let size = cochain_dimension(l, q);
    if size > BigUint::from(limits.max_cochain_dim) {
        return Err(OracleError::ResourceGuard(format!(
            "cochain dimension {size} exceeds the bound {}",
            limits.max_cochain_dim
        )));
    }
    let mut bases = Vec::new();
    if l <= q {
        for d in l..=q {
            if l == 0 && d > 0 {
                break;
            }
            let mut basis = Vec::new();
            for composition in compositions(d, l) {
                for values in surjections(q, d) {
                    basis.push(Cochain {
                        composition: composition.clone(),
                        values,
                    });
                }
            }
            bases.push(basis);
        }
    }
    debug_assert_eq!(
        bases.iter().map(Vec::len).sum::<usize>(),
        size.to_usize().unwrap_or(usize::MAX)
    );
    let index = bases
        .iter()
        .map(|b| b.iter().cloned().enumerate().map(|(k, c)| (c, k)).collect())
        .collect();
    Ok(BarCochainComplex { l, q, bases, index })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complex(l: usize, q: usize) -> BarCochainComplex {
        build_complex(l, q, &Limits::default()).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(compositions(5, 2).len(), 4);
        assert_eq!(compositions(0, 0), vec![Vec::<usize>::new()]);
        assert!(compositions(2, 3).is_empty());
        assert_eq!(surjections(4, 2).len(), 14);
        assert_eq!(surjections(3, 3).len(), 6);
        assert_eq!(surjections(0, 0).len(), 1);
    }

    #[test]
    fn small_complexes() {
        assert_eq!(complex(1, 1).cohomology_dims(), BTreeMap::from([(0, 1)]));
        assert_eq!(complex(1, 2).cohomology_dims(), BTreeMap::from([(1, 1)]));
        assert!(complex(2, 1).cohomology_dims().is_empty());
        assert_eq!(complex(0, 0).cohomology_dims(), BTreeMap::from([(0, 1)]));
        assert!(complex(0, 2).cohomology_dims().is_empty());
        for l in 0..=3 {
            for q in 0..=4 {
                let c = complex(l, q);
                assert!(c.d_squared_is_zero(), "({l},{q})");
                assert_eq!(
                    BigUint::from(c.dimensions().iter().sum::<usize>()),
                    cochain_dimension(l, q)
                );
            }
        }
    }

    #[test]
    fn actions_are_chain_maps() {
        let c = complex(2, 4);
        for t in 0..c.top_degree().unwrap() {
            for k in 0..c.dimension(t) {
                let mut v = SparseVec::new();
                v.insert(k, Rational::one());
                let dv = c.apply_differential(t, &v);
                let tau = Permutation::new(vec![2, 1]).unwrap();
                assert_eq!(
                    c.apply_source(&tau, t + 1, &dv),
                    c.apply_differential(t, &c.apply_source(&tau, t, &v))
                );
                let sigma = Permutation::new(vec![2, 3, 1, 4]).unwrap();
                assert_eq!(
                    c.apply_target(&sigma, t + 1, &dv),
                    c.apply_differential(t, &c.apply_target(&sigma, t, &v))
                );
            }
        }
    }

    #[test]
    fn guards() {
        let limits = Limits {
            max_q: 5,
            max_cochain_dim: 10,
        };
        assert!(matches!(
            build_complex(1, 3, &limits),
            Err(OracleError::ResourceGuard(_))
        ));
        assert!(matches!(
            build_complex(1, 6, &Limits::default()),
            Err(OracleError::ResourceGuard(_))
        ));
    }
}
