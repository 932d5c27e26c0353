//! Seeded random elements for property suites.

use num_bigint::BigInt;
use rand::seq::SliceRandom;
use rand::Rng;

use super::{enumerate_basis, Coefficient, Element, WheeledDiagram};
use crate::koszul::Permutation;

/// A small non-zero rational, mostly integral.
pub fn random_coefficient<R: Rng + ?Sized>(rng: &mut R) -> Coefficient {
    let mut num = rng.gen_range(1..=4i64);
    if rng.gen_bool(0.5) {
        num = -num;
    }
    let den = if rng.gen_bool(0.25) {
        rng.gen_range(2..=3i64)
    } else {
        1
    };
    Coefficient::new(BigInt::from(num), BigInt::from(den))
}

/// A uniformly chosen basis diagram, or `None` when 𝓔(q, l) is zero.
pub fn random_diagram<R: Rng + ?Sized>(rng: &mut R, q: usize, l: usize) -> Option<WheeledDiagram> {
    enumerate_basis(q, l).choose(rng).cloned()
}

/// A random combination of up to `max_terms` basis diagrams.
pub fn random_element<R: Rng + ?Sized>(
    rng: &mut R,
    q: usize,
    l: usize,
    max_terms: usize,
) -> Element {
    let basis = enumerate_basis(q, l);
    let mut e = Element::zero(q, l);
    if basis.is_empty() || max_terms == 0 {
        return e;
    }
    let n = rng.gen_range(1..=max_terms);
    for _ in 0..n {
        let d = basis.choose(rng).unwrap().clone();
        let c = random_coefficient(rng);
        e.add_signed(d, &c, crate::koszul::Sign::Plus);
    }
    e
}

pub fn random_permutation<R: Rng + ?Sized>(rng: &mut R, n: usize) -> Permutation {
    let mut images: Vec<usize> = (1..=n).collect();
    images.shuffle(rng);
    Permutation::new(images).expect("shuffled identity is a permutation")
}
