//! Cohomology of bar complexes and of their images under Λ-idempotents.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::One;
use propwheel::koszul::signature;
use propwheel::Permutation;

use crate::complex::{build_complex, BarCochainComplex, Limits};
use crate::error::OracleError;
use crate::matrix::{add_scaled, Echelon, Rational, SparseVec};

/// Embeds `p ∈ 𝔖_k` into `𝔖_n` acting on the last `k` points.
pub fn embed_last(p: &Permutation, n: usize) -> Permutation {
    let k = p.len();
    let mut images: Vec<usize> = (1..=n - k).collect();
    images.extend(p.images().iter().map(|&x| x + n - k));
    Permutation::new(images).expect("embedding of a permutation")
}

fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Which antisymmetrizers cut out the summand of interest.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Idempotent {
    /// Antisymmetrize the last `source_lambda` source blocks.
    pub source_lambda: usize,
    /// Antisymmetrize all target factors.
    pub target_lambda: bool,
}

impl Idempotent {
    pub fn is_trivial(&self) -> bool {
        self.source_lambda <= 1 && !self.target_lambda
    }

    pub fn apply_source(&self, c: &BarCochainComplex, t: usize, v: &SparseVec) -> SparseVec {
        if self.source_lambda <= 1 {
            return v.clone();
        }
        antisymmetrize(v, self.source_lambda, |p, w| {
            c.apply_source(&embed_last(p, c.l()), t, w)
        })
    }

    pub fn apply_target(&self, c: &BarCochainComplex, t: usize, v: &SparseVec) -> SparseVec {
        if !self.target_lambda || c.q() <= 1 {
            return v.clone();
        }
        antisymmetrize(v, c.q(), |p, w| c.apply_target(p, t, w))
    }

    pub fn apply(&self, c: &BarCochainComplex, t: usize, v: &SparseVec) -> SparseVec {
        self.apply_source(c, t, &self.apply_target(c, t, v))
    }

    /// Basis of the image of the idempotent on `C^t`.
    pub fn image_basis(&self, c: &BarCochainComplex, t: usize) -> Vec<SparseVec> {
        let units = (0..c.dimension(t)).map(|k| {
            let mut v = SparseVec::new();
            v.insert(k, Rational::one());
            v
        });
        if self.is_trivial() {
            return units.collect();
        }
        let mut stage = Echelon::new();
        for v in units {
            stage.insert(&self.apply_target(c, t, &v));
        }
        let mut image = Echelon::new();
        for v in stage.rows() {
            image.insert(&self.apply_source(c, t, v));
        }
        image.rows().to_vec()
    }
}

fn antisymmetrize<F>(v: &SparseVec, k: usize, act: F) -> SparseVec
where
    F: Fn(&Permutation, &SparseVec) -> SparseVec,
{
    let mut out = SparseVec::new();
    let weight = Rational::new(BigInt::one(), factorial(k));
    for p in Permutation::all(k) {
        let coeff = if signature(&p).is_plus() {
            weight.clone()
        } else {
            -weight.clone()
        };
        add_scaled(&mut out, &act(&p, v), &coeff);
    }
    out
}

/// Cohomology dimensions of the image of `e` (non-zero degrees only).
pub fn image_cohomology(c: &BarCochainComplex, e: &Idempotent) -> BTreeMap<usize, usize> {
    let degrees = c.top_degree().map_or(0, |t| t + 1);
    let mut dims = Vec::with_capacity(degrees);
    let mut ranks = Vec::with_capacity(degrees);
    for t in 0..degrees {
        let basis = e.image_basis(c, t);
        let mut image = Echelon::new();
        for v in &basis {
            image.insert(&c.apply_differential(t, v));
        }
        dims.push(basis.len());
        ranks.push(image.rank());
    }
    let mut out = BTreeMap::new();
    for t in 0..degrees {
        let below = if t == 0 { 0 } else { ranks[t - 1] };
        let h = dims[t] - ranks[t] - below;
        if h > 0 {
            out.insert(t, h);
        }
    }
    out
}

/// `Ext*(a^{⊗l}, a^{⊗q})`.
pub fn ext_dimensions(
    l: usize,
    q: usize,
    limits: &Limits,
) -> Result<BTreeMap<usize, usize>, OracleError> {
    Ok(build_complex(l, q, limits)?.cohomology_dims())
}

/// `Ext*(a^{⊗l} ⊗ Λ^j a, a^{⊗q})`.
pub fn ext_mixed_dimensions(
    l: usize,
    j: usize,
    q: usize,
    limits: &Limits,
) -> Result<BTreeMap<usize, usize>, OracleError> {
    let c = build_complex(l + j, q, limits)?;
    Ok(image_cohomology(
        &c,
        &Idempotent {
            source_lambda: j,
            target_lambda: false,
        },
    ))
}

/// `Ext*(Λ^j a, a^{⊗q})`.
pub fn ext_lambda_dimensions(
    j: usize,
    q: usize,
    limits: &Limits,
) -> Result<BTreeMap<usize, usize>, OracleError> {
    ext_mixed_dimensions(0, j, q, limits)
}

/// `Ext*(Λ^n a, Λ^m a)`.
pub fn ext_lambda_lambda(
    n: usize,
    m: usize,
    limits: &Limits,
) -> Result<BTreeMap<usize, usize>, OracleError> {
    let c = build_complex(n, m, limits)?;
    Ok(image_cohomology(
        &c,
        &Idempotent {
            source_lambda: n,
            target_lambda: true,
        },
    ))
}

/// Top-degree cohomology `C^{top} / d C^{top-1}` of a complex, with reduction
/// to normal forms.
#[derive(Debug, Clone)]
pub struct TopCohomology {
    complex: BarCochainComplex,
    top: usize,
    boundaries: Echelon,
}

impl TopCohomology {
    pub fn new(complex: BarCochainComplex) -> Result<TopCohomology, OracleError> {
        let top = complex
            .top_degree()
            .ok_or_else(|| OracleError::InvalidArguments("the complex is zero".into()))?;
        let mut boundaries = Echelon::new();
        if top > 0 {
            for k in 0..complex.dimension(top - 1) {
                boundaries.insert(&complex.differential_of(top - 1, k));
            }
        }
        Ok(TopCohomology {
            complex,
            top,
            boundaries,
        })
    }

    pub fn complex(&self) -> &BarCochainComplex {
        &self.complex
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn dimension(&self) -> usize {
        self.complex.dimension(self.top) - self.boundaries.rank()
    }

    /// Normal form of the class of a top cochain.
    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        self.boundaries.reduce(v)
    }
}

/// A family of linearly independent classes, with coordinates.
#[derive(Debug, Clone, Default)]
pub struct ClassBasis {
    echelon: Echelon,
    len: usize,
}

impl ClassBasis {
    pub fn new() -> ClassBasis {
        ClassBasis::default()
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    /// Adds a reduced class; returns `false` (and leaves the basis unchanged)
    /// when it is dependent on the previous ones.
    pub fn try_add(&mut self, reduced: &SparseVec) -> bool {
        let mut combo = SparseVec::new();
        combo.insert(self.len, Rational::one());
        let independent = self.echelon.insert_tracked(reduced, combo).is_none();
        if independent {
            self.len += 1;
        }
        independent
    }

    /// Coordinates of a reduced class, or `None` outside the span.
    pub fn coordinates(&self, reduced: &SparseVec) -> Option<Vec<Rational>> {
        let (rem, used) = self.echelon.reduce_tracked(reduced);
        if !rem.is_empty() {
            return None;
        }
        let mut out = vec![Rational::from_integer(0.into()); self.len];
        for (k, v) in used {
            out[k] = v;
        }
        Some(out)
    }
}
