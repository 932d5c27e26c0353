//! Yoneda products of top-degree Ext classes by chain-level lifting.
//!
//! Elements of `P̄^{⊗d}` evaluated on the free group `F_D` are written in the
//! coordinates `x_i = 1 + X_i`; every map that occurs is determined by its
//! value on the universal element `X_1 ⊗ … ⊗ X_D` and stays multilinear, so a
//! chain is a combination of tensors of words in which each letter occurs
//! exactly once. Lifting a class through the resolution solves
//! `d X_{k+1} = X_k ∘ d` degree by degree.

use std::collections::btree_map::Entry;
use std::collections::{BTreeMap, HashMap};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use propwheel::{Permutation, Sign};

use crate::action::{surjection_list, ClassSpace};
use crate::complex::{build_complex, compositions, Cochain, Limits};
use crate::error::OracleError;
use crate::matrix::{add_scaled, LinearSystem, Rational, SparseVec};

/// Target-arity bound for Yoneda products.
pub const YONEDA_MAX_Q: usize = 4;

/// A top-degree class of `Ext^{q-l}(a^{⊗l}, a^{⊗q})`, stored as a cochain.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtClass {
    l: usize,
    q: usize,
    cochain: BTreeMap<Cochain, Rational>,
}

fn add_to<K: Ord>(map: &mut BTreeMap<K, Rational>, key: K, value: Rational) {
    if value.is_zero() {
        return;
    }
    match map.entry(key) {
        Entry::Occupied(mut e) => {
            *e.get_mut() += value;
            if e.get().is_zero() {
                e.remove();
            }
        }
        Entry::Vacant(e) => {
            e.insert(value);
        }
    }
}

impl ExtClass {
    /// A class from top cochains; each key must have `l` blocks filling `q`
    /// slots and a bijective value list.
    pub fn new(
        l: usize,
        q: usize,
        cochain: BTreeMap<Cochain, Rational>,
    ) -> Result<ExtClass, OracleError> {
        for c in cochain.keys() {
            let mut seen = vec![false; q];
            let bijective = c.values.len() == q
                && c.values
                    .iter()
                    .all(|&v| v < q && !std::mem::replace(&mut seen[v], true));
            if c.composition.len() != l
                || c.slots() != q
                || c.composition.contains(&0)
                || !bijective
            {
                return Err(OracleError::InvalidArguments(format!(
                    "{c:?} is not a top cochain for ({l}, {q})"
                )));
            }
        }
        let mut cochain = cochain;
        cochain.retain(|_, v| !v.is_zero());
        Ok(ExtClass { l, q, cochain })
    }

    pub fn zero(l: usize, q: usize) -> ExtClass {
        ExtClass {
            l,
            q,
            cochain: BTreeMap::new(),
        }
    }

    /// `[c_f]` for a surjection `f: q ↠ l` (1-based values).
    pub fn surjection(l: usize, f: &[usize]) -> Result<ExtClass, OracleError> {
        let q = f.len();
        if f.iter().any(|&v| v == 0 || v > l) || (1..=l).any(|k| !f.contains(&k)) {
            return Err(OracleError::InvalidArguments(format!(
                "{f:?} is not a surjection onto {l}"
            )));
        }
        let mut composition = vec![0; l];
        for &v in f {
            composition[v - 1] += 1;
        }
        let mut next = vec![0; l];
        for k in 1..l {
            next[k] = next[k - 1] + composition[k - 1];
        }
        let values = f
            .iter()
            .map(|&v| {
                next[v - 1] += 1;
                next[v - 1] - 1
            })
            .collect();
        let mut cochain = BTreeMap::new();
        cochain.insert(
            Cochain {
                composition,
                values,
            },
            Rational::one(),
        );
        Ok(ExtClass { l, q, cochain })
    }

    /// `[π^{⊗n}] ∈ Ext^{n-1}(a, a^{⊗n})`.
    pub fn pi(n: usize) -> ExtClass {
        ExtClass::surjection(1, &vec![1; n]).expect("constant map")
    }

    /// `[Id] ∈ Ext^0(a^{⊗n}, a^{⊗n})`.
    pub fn identity(n: usize) -> ExtClass {
        ExtClass::surjection(n, &(1..=n).collect::<Vec<_>>()).expect("identity map")
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn degree(&self) -> usize {
        self.q - self.l
    }

    pub fn cochain(&self) -> &BTreeMap<Cochain, Rational> {
        &self.cochain
    }

    pub fn is_zero(&self) -> bool {
        self.cochain.is_empty()
    }

    pub fn scale(&self, c: &Rational) -> ExtClass {
        let mut out = ExtClass::zero(self.l, self.q);
        for (k, v) in &self.cochain {
            add_to(&mut out.cochain, k.clone(), v * c);
        }
        out
    }

    pub fn add(&self, other: &ExtClass) -> Result<ExtClass, OracleError> {
        if (self.l, self.q) != (other.l, other.q) {
            return Err(OracleError::InvalidArguments(
                "adding classes of different arities".into(),
            ));
        }
        let mut out = self.clone();
        for (k, v) in &other.cochain {
            add_to(&mut out.cochain, k.clone(), v.clone());
        }
        Ok(out)
    }

    /// External product `x ⊗ y`, with the Koszul sign `(-1)^{|x||y|}`.
    pub fn tensor(&self, other: &ExtClass) -> ExtClass {
        let sign = Sign::parity(self.degree() * other.degree());
        let sign = Rational::from_integer(sign.to_i32().into());
        let mut out = ExtClass::zero(self.l + other.l, self.q + other.q);
        for (a, x) in &self.cochain {
            for (b, y) in &other.cochain {
                let mut composition = a.composition.clone();
                composition.extend(&b.composition);
                let mut values = a.values.clone();
                values.extend(b.values.iter().map(|&v| v + self.q));
                add_to(
                    &mut out.cochain,
                    Cochain {
                        composition,
                        values,
                    },
                    x * y * &sign,
                );
            }
        }
        out
    }

    /// Coordinates in the basis `[c_f]`, `f ∈ Surj(q, l)` lexicographic.
    pub fn coordinates(&self, limits: &Limits) -> Result<Vec<Rational>, OracleError> {
        let space = ClassSpace::from_surjections(
            self.l,
            0,
            self.q,
            &surjection_list(self.q, self.l),
            limits,
        )?;
        let complex = build_complex(self.l, self.q, limits)?;
        let top = complex
            .top_degree()
            .expect("a non-zero class lives in a non-zero complex");
        let mut v = SparseVec::new();
        for (c, x) in &self.cochain {
            let k = complex.index_of(top, c).expect("validated cochain");
            v.insert(k, x.clone());
        }
        space.coordinates(&v)
    }

    /// The same class with a different representative: adds the coboundary
    /// of `Σ_k (k + 1) e_k` over the basis of the previous degree.
    pub fn shifted_by_coboundary(&self, limits: &Limits) -> Result<ExtClass, OracleError> {
        if self.degree() == 0 {
            return Ok(self.clone());
        }
        let complex = build_complex(self.l, self.q, limits)?;
        let top = self.degree();
        let mut w = SparseVec::new();
        for k in 0..complex.dimension(top - 1) {
            w.insert(k, Rational::from_integer(BigInt::from(k + 1)));
        }
        let mut out = self.clone();
        for (k, v) in complex.apply_differential(top - 1, &w) {
            add_to(&mut out.cochain, complex.basis(top)[k].clone(), v);
        }
        Ok(out)
    }

    /// Whether two classes agree in cohomology.
    pub fn cohomologous(&self, other: &ExtClass, limits: &Limits) -> Result<bool, OracleError> {
        let difference = self.add(&other.scale(&-Rational::one()))?;
        if difference.is_zero() {
            return Ok(true);
        }
        Ok(difference.coordinates(limits)?.iter().all(Zero::is_zero))
    }
}

/// How free variables are chosen when lifting.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LiftChoice {
    /// The solution with all free variables zero.
    Minimal,
    /// Both representatives shifted by fixed coboundaries, and a fixed
    /// combination of kernel vectors added at every step.
    Perturbed,
}

/// A tensor of words: block lengths of the target resolution term, then the
/// word in each slot.
type Term = (Vec<usize>, Vec<Vec<usize>>);
type Chain = BTreeMap<Term, Rational>;

fn sign_value(exponent: usize) -> Rational {
    Rational::from_integer(Sign::parity(exponent).to_i32().into())
}

/// Faces of `d` on a resolution term with the given blocks: `(merged slot,
/// block index, sign exponent)`.
fn faces(composition: &[usize]) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    let mut offset = 0;
    let mut block_exponent = 0;
    for (b, &len) in composition.iter().enumerate() {
        for r in 1..len {
            out.push((offset + r - 1, b, block_exponent + r));
        }
        offset += len;
        block_exponent += len - 1;
    }
    out
}

/// Substitutes `X_s ↦ X_s X_{s+1}` and shifts higher letters up.
fn substitute(chain: &Chain, s: usize) -> Chain {
    let mut out = Chain::new();
    for ((composition, words), c) in chain {
        let words = words
            .iter()
            .map(|w| {
                w.iter()
                    .flat_map(|&h| match h.cmp(&s) {
                        std::cmp::Ordering::Less => vec![h],
                        std::cmp::Ordering::Equal => vec![s, s + 1],
                        std::cmp::Ordering::Greater => vec![h + 1],
                    })
                    .collect()
            })
            .collect();
        add_to(&mut out, (composition.clone(), words), c.clone());
    }
    out
}

/// The unknowns of one lifting step and the differential on them.
struct LiftingStep {
    unknowns: Vec<(Vec<usize>, Vec<usize>)>,
    rows: HashMap<Term, usize>,
    system: LinearSystem,
}

impl LiftingStep {
    /// Single-letter tensors on `slots` slots grouped into `blocks` blocks.
    fn new(blocks: usize, slots: usize) -> LiftingStep {
        let mut unknowns = Vec::new();
        for composition in compositions(slots, blocks) {
            for p in Permutation::all(slots) {
                let letters: Vec<usize> = p.images().iter().map(|&x| x - 1).collect();
                unknowns.push((composition.clone(), letters));
            }
        }
        let mut rows = HashMap::new();
        let mut columns = Vec::with_capacity(unknowns.len());
        for (composition, letters) in &unknowns {
            let mut col = SparseVec::new();
            for (s, b, exponent) in faces(composition) {
                let mut target = composition.clone();
                target[b] -= 1;
                let mut words: Vec<Vec<usize>> = letters.iter().map(|&x| vec![x]).collect();
                let second = words.remove(s + 1);
                words[s].extend(second);
                let next = rows.len();
                let row = *rows.entry((target, words)).or_insert(next);
                add_to(&mut col, row, sign_value(exponent));
            }
            columns.push(col);
        }
        LiftingStep {
            system: LinearSystem::new(&columns),
            unknowns,
            rows,
        }
    }

    fn solve(&self, rhs: &Chain, choice: LiftChoice) -> Result<Chain, OracleError> {
        let mut b = SparseVec::new();
        for (term, c) in rhs {
            let row = self.rows.get(term).ok_or_else(|| {
                OracleError::NoSolution(format!("term {term:?} is not a boundary"))
            })?;
            b.insert(*row, c.clone());
        }
        let mut x = self
            .system
            .solve(&b)
            .ok_or_else(|| OracleError::NoSolution("right-hand side outside the image".into()))?;
        if choice == LiftChoice::Perturbed {
            for (k, v) in self.system.kernel().iter().enumerate() {
                add_scaled(&mut x, v, &Rational::from_integer(BigInt::from(k + 2)));
            }
        }
        let mut out = Chain::new();
        for (k, c) in x {
            let (composition, letters) = &self.unknowns[k];
            let words = letters.iter().map(|&h| vec![h]).collect();
            add_to(&mut out, (composition.clone(), words), c);
        }
        Ok(out)
    }
}

/// `𝒴(x, y)` for `x ∈ Ext(a^{⊗l_A}, a^{⊗l_B})` and `y ∈ Ext(a^{⊗l_B}, a^{⊗m})`,
/// giving a class in `Ext(a^{⊗l_A}, a^{⊗m})`.
pub fn yoneda_product(
    x: &ExtClass,
    y: &ExtClass,
    choice: LiftChoice,
    limits: &Limits,
) -> Result<ExtClass, OracleError> {
    if x.q != y.l {
        return Err(OracleError::InvalidArguments(format!(
            "classes are not composable: target arity {} against source arity {}",
            x.q, y.l
        )));
    }
    let (la, lb, m) = (x.l, x.q, y.q);
    limits.check_q(m)?;
    if m > YONEDA_MAX_Q {
        return Err(OracleError::ResourceGuard(format!(
            "Yoneda products are limited to target arity {YONEDA_MAX_Q}, got {m}"
        )));
    }
    if la == 0 || lb == 0 {
        return Err(OracleError::InvalidArguments(
            "arities must be positive".into(),
        ));
    }
    let (x, y) = match choice {
        LiftChoice::Minimal => (x.clone(), y.clone()),
        LiftChoice::Perturbed => (
            x.shifted_by_coboundary(limits)?,
            y.shifted_by_coboundary(limits)?,
        ),
    };

    // X_0: ε X_0 = x on the universal elements of degree |x|
    let mut lift: HashMap<Vec<usize>, Chain> = HashMap::new();
    for (c, v) in x.cochain.iter() {
        let words = c.values.iter().map(|&h| vec![h]).collect();
        add_to(
            lift.entry(c.composition.clone()).or_default(),
            (vec![1; lb], words),
            v.clone(),
        );
    }

    for k in 0..y.degree() {
        let step = LiftingStep::new(lb, lb + k + 1);
        let mut next = HashMap::new();
        for composition in compositions(lb + k + 1, la) {
            let mut rhs = Chain::new();
            for (s, b, exponent) in faces(&composition) {
                let mut smaller = composition.clone();
                smaller[b] -= 1;
                if let Some(chain) = lift.get(&smaller) {
                    for (term, c) in substitute(chain, s) {
                        add_to(&mut rhs, term, c * sign_value(exponent));
                    }
                }
            }
            let solution = step.solve(&rhs, choice)?;
            if !solution.is_empty() {
                next.insert(composition, solution);
            }
        }
        lift = next;
    }

    let mut by_block: HashMap<&Vec<usize>, Vec<(&Vec<usize>, &Rational)>> = HashMap::new();
    for (c, v) in &y.cochain {
        by_block
            .entry(&c.composition)
            .or_default()
            .push((&c.values, v));
    }
    let mut out = ExtClass::zero(la, m);
    for (composition, chain) in &lift {
        for ((blocks, words), c) in chain {
            let Some(entries) = by_block.get(blocks) else {
                continue;
            };
            let letters: Vec<usize> = words.iter().map(|w| w[0]).collect();
            for (values, v) in entries {
                let values = values.iter().map(|&h| letters[h]).collect();
                add_to(
                    &mut out.cochain,
                    Cochain {
                        composition: composition.clone(),
                        values,
                    },
                    c * *v,
                );
            }
        }
    }
    Ok(out)
}

/// The scalar `c` in `𝒴([π^{⊗m}], Id^{⊗(i-1)} ⊗ [π^{⊗n}] ⊗ Id^{⊗(m-i)}) = c [π^{⊗(m+n-1)}]`.
pub fn composition_sign(
    m: usize,
    n: usize,
    i: usize,
    limits: &Limits,
) -> Result<Rational, OracleError> {
    if i == 0 || i > m || n == 0 {
        return Err(OracleError::InvalidArguments(format!(
            "slot {i} of an arity-{m} operation"
        )));
    }
    let inner = ExtClass::identity(i - 1)
        .tensor(&ExtClass::pi(n))
        .tensor(&ExtClass::identity(m - i));
    let product = yoneda_product(&ExtClass::pi(m), &inner, LiftChoice::Minimal, limits)?;
    let coords = product.coordinates(limits)?;
    Ok(coords[0].clone())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn lim() -> Limits {
        Limits::default()
    }

    fn both(x: &ExtClass, y: &ExtClass) -> ExtClass {
        let a = yoneda_product(x, y, LiftChoice::Minimal, &lim()).unwrap();
        let b = yoneda_product(x, y, LiftChoice::Perturbed, &lim()).unwrap();
        assert!(a.cohomologous(&b, &lim()).unwrap(), "lift dependence");
        a
    }

    #[test]
    fn pi_products() {
        for n in 2..=3 {
            let y = ExtClass::pi(2).tensor(&ExtClass::identity(n - 1));
            let p = both(&ExtClass::pi(n), &y);
            assert!(
                p.cohomologous(&ExtClass::pi(n + 1), &lim()).unwrap(),
                "n = {n}"
            );
        }
        let y = ExtClass::identity(1).tensor(&ExtClass::pi(2));
        let p = both(&ExtClass::pi(2), &y);
        assert!(p
            .cohomologous(&ExtClass::pi(3).scale(&-Rational::one()), &lim())
            .unwrap());
    }

    #[test]
    fn unit_laws() {
        for (l, f) in [
            (1, vec![1, 1, 1]),
            (2, vec![1, 2, 1]),
            (2, vec![2, 1, 1, 2]),
        ] {
            let x = ExtClass::surjection(l, &f).unwrap();
            let right = both(&x, &ExtClass::identity(x.q()));
            assert!(right.cohomologous(&x, &lim()).unwrap());
            let left = both(&ExtClass::identity(l), &x);
            assert!(left.cohomologous(&x, &lim()).unwrap());
        }
    }

    #[test]
    fn sign_table_matches_generators() {
        let table = propwheel::wheeled_prop::GeneratorTable::global();
        for m in 1..=4 {
            for n in 1..=5 - m {
                for i in 1..=m {
                    let c = composition_sign(m, n, i, &lim()).unwrap();
                    let expected = Rational::from_integer(table.sign(m, n, i).to_i32().into());
                    assert_eq!(c, expected, "({m},{n},{i})");
                }
            }
        }
    }

    #[test]
    fn associativity() {
        let x = ExtClass::pi(2);
        let y = ExtClass::pi(2).tensor(&ExtClass::identity(1));
        let z = ExtClass::identity(1)
            .tensor(&ExtClass::pi(2))
            .tensor(&ExtClass::identity(1));
        let left = both(&both(&x, &y), &z);
        let right = both(&x, &both(&y, &z));
        assert!(left.cohomologous(&right, &lim()).unwrap());
        assert!(!left.is_zero());
    }

    #[test]
    fn representatives_change_but_classes_do_not() {
        let x = ExtClass::pi(3);
        let shifted = x.shifted_by_coboundary(&lim()).unwrap();
        assert_ne!(shifted, x);
        assert!(shifted.cohomologous(&x, &lim()).unwrap());
        assert!(!x.cohomologous(&x.scale(&-Rational::one()), &lim()).unwrap());
        let two = Rational::from_integer(2.into());
        let y = ExtClass::pi(2).tensor(&ExtClass::identity(2));
        let z = ExtClass::identity(2).tensor(&ExtClass::pi(2));
        let lhs = both(&x, &y.scale(&two).add(&z).unwrap());
        let rhs = both(&x, &y).scale(&two).add(&both(&x, &z)).unwrap();
        assert!(lhs.cohomologous(&rhs, &lim()).unwrap(), "bilinearity");
    }

    #[test]
    fn rejects_bad_input() {
        assert!(yoneda_product(
            &ExtClass::pi(2),
            &ExtClass::pi(3),
            LiftChoice::Minimal,
            &lim()
        )
        .is_err());
        assert!(ExtClass::surjection(2, &[1, 1]).is_err());
        assert!(matches!(
            yoneda_product(
                &ExtClass::pi(5),
                &ExtClass::identity(5),
                LiftChoice::Minimal,
                &lim()
            ),
            Err(OracleError::ResourceGuard(_))
        ));
    }
}
