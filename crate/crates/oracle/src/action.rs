//! Symmetric-group actions on top cohomology, in bases of surjection classes.

use num_traits::Zero;
use propwheel::koszul::{koszul_sign, sort_signature, GradedWord};
use propwheel::{Permutation, Sign};
use serde::{Deserialize, Serialize};

use crate::cohomology::{ClassBasis, Idempotent, TopCohomology};
use crate::complex::{build_complex, surjections, Limits};
use crate::error::OracleError;
use crate::matrix::{Rational, RationalMatrix, SparseVec};

/// Which side of `Ext(a^{⊗l}, a^{⊗q})` a permutation acts on: `Inputs` is the
/// right `𝔖_q`-action through the target, `Outputs` the left `𝔖_l`-action
/// through the source.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Side {
    Inputs,
    Outputs,
}

/// Surjections `q ↠ n` as 1-based value lists, lexicographic.
pub fn surjection_list(q: usize, n: usize) -> Vec<Vec<usize>> {
    surjections(q, n)
        .into_iter()
        .map(|g| g.into_iter().map(|v| v + 1).collect())
        .collect()
}

/// Embeds `p ∈ 𝔖_k` into `𝔖_n` acting on the first `k` points.
pub fn embed_first(p: &Permutation, n: usize) -> Permutation {
    let mut images = p.images().to_vec();
    images.extend(p.len() + 1..=n);
    Permutation::new(images).expect("embedding of a permutation")
}

/// The top cohomology of `Ext(a^{⊗l} ⊗ Λ^j a, a^{⊗q})` with a basis of
/// classes represented by idempotent images of surjection cocycles.
#[derive(Debug, Clone)]
pub struct ClassSpace {
    l: usize,
    j: usize,
    q: usize,
    cohomology: Option<TopCohomology>,
    idempotent: Idempotent,
    basis: ClassBasis,
    representatives: Vec<SparseVec>,
}

impl ClassSpace {
    fn empty(l: usize, j: usize, q: usize, limits: &Limits) -> Result<ClassSpace, OracleError> {
        let complex = build_complex(l + j, q, limits)?;
        let cohomology = match complex.top_degree() {
            Some(_) => Some(TopCohomology::new(complex)?),
            None => None,
        };
        Ok(ClassSpace {
            l,
            j,
            q,
            cohomology,
            idempotent: Idempotent {
                source_lambda: j,
                target_lambda: false,
            },
            basis: ClassBasis::new(),
            representatives: Vec::new(),
        })
    }

    /// Basis extracted, in order, from the images of all `c_f`, `f: q ↠ l + j`.
    pub fn new(l: usize, j: usize, q: usize, limits: &Limits) -> Result<ClassSpace, OracleError> {
        let mut space = ClassSpace::empty(l, j, q, limits)?;
        if space.cohomology.is_some() {
            for f in surjection_list(q, l + j) {
                let v = space.class_of_surjection(&f)?;
                space.push_if_independent(v);
            }
        }
        Ok(space)
    }

    /// Basis given by the images of `c_f` for the listed surjections, which
    /// must be independent.
    pub fn from_surjections(
        l: usize,
        j: usize,
        q: usize,
        maps: &[Vec<usize>],
        limits: &Limits,
    ) -> Result<ClassSpace, OracleError> {
        let mut space = ClassSpace::empty(l, j, q, limits)?;
        for f in maps {
            let v = space.class_of_surjection(f)?;
            if !space.push_if_independent(v) {
                return Err(OracleError::Inconsistent(format!(
                    "the class of {f:?} is dependent"
                )));
            }
        }
        Ok(space)
    }

    fn push_if_independent(&mut self, v: SparseVec) -> bool {
        let Some(h) = &self.cohomology else {
            return false;
        };
        let reduced = h.reduce(&v);
        if self.basis.try_add(&reduced) {
            self.representatives.push(v);
            true
        } else {
            false
        }
    }

    /// The idempotent image of `c_f` as a top cochain.
    pub fn class_of_surjection(&self, f: &[usize]) -> Result<SparseVec, OracleError> {
        let h = self
            .cohomology
            .as_ref()
            .ok_or_else(|| OracleError::InvalidArguments("the complex is zero".into()))?;
        let c = h.complex();
        let v = c.surjection_cocycle(f)?;
        Ok(self.idempotent.apply_source(c, h.top(), &v))
    }

    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// Dimension of the whole summand, independent of the chosen classes.
    pub fn full_dimension(&self) -> usize {
        let Some(h) = &self.cohomology else {
            return 0;
        };
        let c = h.complex();
        let t = h.top();
        let mut image = crate::matrix::Echelon::new();
        for v in self.idempotent.image_basis(c, t) {
            image.insert(&h.reduce(&v));
        }
        image.rank()
    }

    pub fn representatives(&self) -> &[SparseVec] {
        &self.representatives
    }

    /// Coordinates of a top cochain's class in the basis.
    pub fn coordinates(&self, v: &SparseVec) -> Result<Vec<Rational>, OracleError> {
        let Some(h) = &self.cohomology else {
            return Ok(Vec::new());
        };
        self.basis
            .coordinates(&h.reduce(v))
            .ok_or_else(|| OracleError::Inconsistent("class outside the span of the basis".into()))
    }

    fn act(&self, p: &Permutation, side: Side, v: &SparseVec) -> Result<SparseVec, OracleError> {
        let h = self.cohomology.as_ref().expect("non-empty space");
        let c = h.complex();
        match side {
            Side::Inputs => {
                check_len(p, self.q)?;
                Ok(c.apply_target(p, h.top(), v))
            }
            Side::Outputs => {
                check_len(p, self.l)?;
                Ok(c.apply_source(&embed_first(p, self.l + self.j), h.top(), v))
            }
        }
    }

    /// Matrix of the action; column `k` holds the image of basis class `k`.
    pub fn action_matrix(
        &self,
        p: &Permutation,
        side: Side,
    ) -> Result<RationalMatrix, OracleError> {
        let n = self.dimension();
        let mut columns = Vec::with_capacity(n);
        for v in &self.representatives {
            let image = self.act(p, side, v)?;
            let coords = self.coordinates(&image)?;
            columns.push(
                coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, x)| !x.is_zero())
                    .collect::<SparseVec>(),
            );
        }
        Ok(RationalMatrix::from_columns(n, &columns))
    }

    /// Trace of an input permutation.
    pub fn character(&self, sigma: &Permutation) -> Result<Rational, OracleError> {
        Ok(self.action_matrix(sigma, Side::Inputs)?.trace())
    }
}

fn check_len(p: &Permutation, n: usize) -> Result<(), OracleError> {
    if p.len() != n {
        return Err(OracleError::InvalidArguments(format!(
            "permutation of {} points acting on {n} factors",
            p.len()
        )));
    }
    Ok(())
}

/// Action on `Ext^{q-l}(a^{⊗l}, a^{⊗q})` in the basis of the classes `[c_f]`,
/// `f` running over `Surj(q, l)` lexicographically.
pub fn action_on_cohomology(
    p: &Permutation,
    side: Side,
    l: usize,
    q: usize,
    limits: &Limits,
) -> Result<RationalMatrix, OracleError> {
    let space = ClassSpace::from_surjections(l, 0, q, &surjection_list(q, l), limits)?;
    space.action_matrix(p, side)
}

/// Action predicted by the closed formulas on the surjection basis:
/// `[f].σ = Π_k ε(σ: (fσ)⁻¹(k) → f⁻¹(k)) [f∘σ]` on inputs and
/// `τ.[f] = κ(τ) [τ∘f]` on outputs, where `κ` is the Koszul sign for the
/// degrees `|f⁻¹(k)| - 1`.
pub fn closed_form_action(
    p: &Permutation,
    side: Side,
    l: usize,
    q: usize,
) -> Result<RationalMatrix, OracleError> {
    let maps = surjection_list(q, l);
    let position = |f: &Vec<usize>| maps.iter().position(|g| g == f).expect("surjection");
    let mut columns = Vec::with_capacity(maps.len());
    for f in &maps {
        let (image, sign) = match side {
            Side::Inputs => {
                check_len(p, q)?;
                let g: Vec<usize> = (1..=q).map(|x| f[p.apply(x) - 1]).collect();
                let mut sign = Sign::Plus;
                for k in 1..=l {
                    let moved: Vec<usize> = (1..=q)
                        .filter(|&x| g[x - 1] == k)
                        .map(|x| p.apply(x))
                        .collect();
                    sign *= sort_signature(&moved);
                }
                (g, sign)
            }
            Side::Outputs => {
                check_len(p, l)?;
                let degrees = (1..=l)
                    .map(|k| f.iter().filter(|&&v| v == k).count() - 1)
                    .collect();
                let sign = koszul_sign(p, &GradedWord::new(degrees)).expect("arity checked");
                (f.iter().map(|&v| p.apply(v)).collect(), sign)
            }
        };
        let mut col = SparseVec::new();
        col.insert(
            position(&image),
            Rational::from_integer(sign.to_i32().into()),
        );
        columns.push(col);
    }
    Ok(RationalMatrix::from_columns(maps.len(), &columns))
}

/// The formula for a transposition `τ_{a,b}` on outputs:
/// `(-1)^{(|f⁻¹(a)|-1)(|f⁻¹(b)|-1)} [τ_{a,b}∘f]`.
pub fn transposition_formula(
    a: usize,
    b: usize,
    l: usize,
    q: usize,
) -> Result<RationalMatrix, OracleError> {
    let tau = Permutation::transposition(l, a, b)
        .map_err(|e| OracleError::InvalidArguments(e.to_string()))?;
    let maps = surjection_list(q, l);
    let mut columns = Vec::with_capacity(maps.len());
    for f in &maps {
        let size = |k: usize| f.iter().filter(|&&v| v == k).count();
        let sign = Sign::parity((size(a) - 1) * (size(b) - 1));
        let image: Vec<usize> = f.iter().map(|&v| tau.apply(v)).collect();
        let mut col = SparseVec::new();
        col.insert(
            maps.iter().position(|g| *g == image).unwrap(),
            Rational::from_integer(sign.to_i32().into()),
        );
        columns.push(col);
    }
    Ok(RationalMatrix::from_columns(maps.len(), &columns))
}

/// Adjacent transpositions generating `𝔖_n`.
pub fn generators(n: usize) -> Vec<Permutation> {
    (1..n)
        .map(|a| Permutation::transposition(n, a, a + 1).expect("valid transposition"))
        .collect()
}

/// A permutation with the given cycle type, built from consecutive cycles.
pub fn representative(cycle_type: &[usize]) -> Permutation {
    let n = cycle_type.iter().sum();
    let mut images = vec![0; n];
    let mut start = 1;
    for &len in cycle_type {
        for k in 0..len {
            images[start + k - 1] = start + (k + 1) % len;
        }
        start += len;
    }
    Permutation::new(images).expect("cycle decomposition")
}

/// Partitions of `n` in decreasing lexicographic order.
pub fn partitions(n: usize) -> Vec<Vec<usize>> {
    fn go(n: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(prefix.clone());
            return;
        }
        for part in (1..=n.min(max)).rev() {
            prefix.push(part);
            go(n - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterRow {
    pub wheels: usize,
    pub dimension: usize,
    pub values: Vec<String>,
}

/// `𝔖_q`-characters on `Ext*(Λ^j a, a^{⊗q})` for `j ≤ max_wheels`, one
/// value per conjugacy class.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterTable {
    pub q: usize,
    pub classes: Vec<Vec<usize>>,
    pub rows: Vec<CharacterRow>,
}

impl CharacterTable {
    pub fn total(&self) -> Vec<Rational> {
        let mut out = vec![Rational::zero(); self.classes.len()];
        for row in &self.rows {
            for (acc, v) in out.iter_mut().zip(&row.values) {
                *acc += propwheel::diagrams::parse_rational(v).expect("stored rational");
            }
        }
        out
    }
}

pub fn character_table(
    q: usize,
    max_wheels: usize,
    limits: &Limits,
) -> Result<CharacterTable, OracleError> {
    if q > 4 {
        return Err(OracleError::ResourceGuard(format!(
            "character tables are limited to q <= 4, got {q}"
        )));
    }
    let classes = partitions(q);
    let mut rows = Vec::new();
    for j in 0..=max_wheels.min(q) {
        let space = ClassSpace::new(0, j, q, limits)?;
        let values = classes
            .iter()
            .map(|ct| {
                if space.dimension() == 0 {
                    return Ok(Rational::zero());
                }
                space.character(&representative(ct))
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(CharacterRow {
            wheels: j,
            dimension: space.dimension(),
            values: values.iter().map(ToString::to_string).collect(),
        });
    }
    Ok(CharacterTable { q, classes, rows })
}

/// Whether a matrix is the identity.
pub fn is_identity(m: &RationalMatrix) -> bool {
    m.rows() == m.cols() && *m == RationalMatrix::identity(m.rows())
}
