//! Permutations and graded sign bookkeeping.
//!
//! Every sign produced by the engine is computed here, either as a
//! permutation signature or as a Koszul sign for reordering homogeneous
//! tensor factors.

use std::fmt;
use std::ops::{Mul, MulAssign, Neg};

use crate::error::Error;

/// A sign in {+1, -1}, kept apart from rational coefficients.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    /// `(-1)^n`.
    pub fn parity(n: usize) -> Sign {
        if n.is_multiple_of(2) {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }

    pub fn is_plus(self) -> bool {
        self == Sign::Plus
    }

    pub fn to_i32(self) -> i32 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Plus
        } else {
            Sign::Minus
        }
    }
}

impl MulAssign for Sign {
    fn mul_assign(&mut self, rhs: Sign) {
        *self = *self * rhs;
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        self * Sign::Minus
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Sign::Plus => write!(f, "+1"),
            Sign::Minus => write!(f, "-1"),
        }
    }
}

/// A bijection of {1..n}; `images[i-1]` is the image of `i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<usize>,
}

impl Permutation {
    pub fn new(images: Vec<usize>) -> Result<Permutation, Error> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            if x == 0 || x > n || seen[x - 1] {
                return Err(Error::NotAPermutation(images));
            }
            seen[x - 1] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation {
            images: (1..=n).collect(),
        }
    }

    /// The transposition exchanging `a` and `b` in {1..n}.
    pub fn transposition(n: usize, a: usize, b: usize) -> Result<Permutation, Error> {
        Permutation::from_cycles(n, &[vec![a, b]])
    }

    /// Builds a permutation of {1..n} from disjoint cycles, e.g. `[[1, 2], [3, 4]]`.
    pub fn from_cycles(n: usize, cycles: &[Vec<usize>]) -> Result<Permutation, Error> {
        let mut images: Vec<usize> = (1..=n).collect();
        let mut used = vec![false; n];
        for cycle in cycles {
            for &x in cycle {
                if x == 0 || x > n {
                    return Err(Error::IndexOutOfRange { index: x, bound: n });
                }
                if used[x - 1] {
                    return Err(Error::InvalidCycles(format!(
                        "label {x} appears in more than one cycle position"
                    )));
                }
                used[x - 1] = true;
            }
            for (k, &x) in cycle.iter().enumerate() {
                images[x - 1] = cycle[(k + 1) % cycle.len()];
            }
        }
        Ok(Permutation { images })
    }

    pub fn len(&self) -> usize {
        self.images.len()
    }

    pub fn is_empty(&self) -> bool {
        self.images.is_empty()
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// Image of the 1-based label `i`.
    pub fn apply(&self, i: usize) -> usize {
        self.images[i - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(k, &x)| x == k + 1)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Permutation) -> Result<Permutation, Error> {
        if self.len() != other.len() {
            return Err(Error::ArityMismatch {
                expected: self.len(),
                found: other.len(),
            });
        }
        Ok(Permutation {
            images: other.images.iter().map(|&x| self.images[x - 1]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.len()];
        for (k, &x) in self.images.iter().enumerate() {
            images[x - 1] = k + 1;
        }
        Permutation { images }
    }

    /// Disjoint cycles of length at least two, each starting at its minimum.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.len();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[start - 1] {
                continue;
            }
            let mut cycle = vec![start];
            seen[start - 1] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x - 1] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            if cycle.len() > 1 {
                out.push(cycle);
            }
        }
        out
    }

    /// Cycle lengths (including fixed points) sorted decreasingly.
    pub fn cycle_type(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.cycles().iter().map(Vec::len).collect();
        let moved: usize = lengths.iter().sum();
        lengths.extend(std::iter::repeat_n(1, self.len() - moved));
        lengths.sort_unstable_by(|a, b| b.cmp(a));
        lengths
    }

    /// All permutations of {1..n} in lexicographic order of their image lists.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<usize> = (1..=n).collect();
        loop {
            out.push(Permutation {
                images: current.clone(),
            });
            // next lexicographic permutation
            let Some(k) = (1..n).rev().find(|&k| current[k - 1] < current[k]) else {
                break;
            };
            let k = k - 1;
            let m = (k + 1..n).rev().find(|&m| current[m] > current[k]).unwrap();
            current.swap(k, m);
            current[k + 1..].reverse();
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for cycle in cycles {
            write!(f, "(")?;
            for (k, x) in cycle.iter().enumerate() {
                if k > 0 {
                    write!(f, " ")?;
                }
                write!(f, "{x}")?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// Cohomological degrees of a sequence of tensor factors.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GradedWord {
    pub degrees: Vec<usize>,
}

impl GradedWord {
    pub fn new(degrees: Vec<usize>) -> GradedWord {
        GradedWord { degrees }
    }

    pub fn len(&self) -> usize {
        self.degrees.len()
    }

    pub fn is_empty(&self) -> bool {
        self.degrees.is_empty()
    }
}

/// Parity of a permutation.
pub fn signature(p: &Permutation) -> Sign {
    // n minus the number of cycles (fixed points included)
    let n = p.len();
    let mut seen = vec![false; n];
    let mut cycles = 0;
    for start in 0..n {
        if seen[start] {
            continue;
        }
        cycles += 1;
        let mut x = start;
        while !seen[x] {
            seen[x] = true;
            x = p.images[x] - 1;
        }
    }
    Sign::parity(n - cycles)
}

/// Sign of moving the factor in position `a` to position `p(a)`, for factors
/// of the given degrees: the product of `(-1)^{d_a d_b}` over the pairs whose
/// relative order is inverted by `p`.
pub fn koszul_sign(p: &Permutation, w: &GradedWord) -> Result<Sign, Error> {
    if p.len() != w.len() {
        return Err(Error::ArityMismatch {
            expected: p.len(),
            found: w.len(),
        });
    }
    Ok(koszul_sign_slice(p.images(), &w.degrees))
}

/// [`koszul_sign`] on raw slices; `targets[a]` is the (any totally ordered)
/// target position of factor `a`.
pub(crate) fn koszul_sign_slice<T: Ord>(targets: &[T], degrees: &[usize]) -> Sign {
    let mut odd = 0usize;
    for a in 0..targets.len() {
        if degrees[a].is_multiple_of(2) {
            continue;
        }
        for b in a + 1..targets.len() {
            if degrees[b] % 2 == 1 && targets[a] > targets[b] {
                odd += 1;
            }
        }
    }
    Sign::parity(odd)
}

/// Signature of the permutation that sorts a sequence of distinct values.
pub fn sort_signature<T: Ord>(values: &[T]) -> Sign {
    let mut inversions = 0usize;
    for a in 0..values.len() {
        for b in a + 1..values.len() {
            if values[a] > values[b] {
                inversions += 1;
            }
        }
    }
    Sign::parity(inversions)
}

/// The bijection `S -> p(S)`, with both sides re-enumerated increasingly, as a
/// permutation of {1..|S|}.
pub fn restrict_and_reindex(p: &Permutation, subset: &[usize]) -> Result<Permutation, Error> {
    let n = p.len();
    let mut source: Vec<usize> = subset.to_vec();
    source.sort_unstable();
    if source.windows(2).any(|w| w[0] == w[1]) || source.iter().any(|&x| x == 0 || x > n) {
        return Err(Error::NotASubset {
            subset: subset.to_vec(),
            n,
        });
    }
    let mut target: Vec<usize> = source.iter().map(|&x| p.apply(x)).collect();
    target.sort_unstable();
    let images = source
        .iter()
        .map(|&x| target.binary_search(&p.apply(x)).unwrap() + 1)
        .collect();
    Ok(Permutation { images })
}

/// `σ^{(i)}`: the restriction of `σ` to {1..n}∖{i}, reindexed.
pub fn remove_point(p: &Permutation, i: usize) -> Result<Permutation, Error> {
    let rest: Vec<usize> = (1..=p.len()).filter(|&x| x != i).collect();
    if i == 0 || i > p.len() {
        return Err(Error::IndexOutOfRange {
            index: i,
            bound: p.len(),
        });
    }
    restrict_and_reindex(p, &rest)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, cycles: &[&[usize]]) -> Permutation {
        let cycles: Vec<Vec<usize>> = cycles.iter().map(|c| c.to_vec()).collect();
        Permutation::from_cycles(n, &cycles).unwrap()
    }

    fn brute_inversions(p: &Permutation) -> Sign {
        let mut count = 0;
        for a in 1..=p.len() {
            for b in a + 1..=p.len() {
                if p.apply(a) > p.apply(b) {
                    count += 1;
                }
            }
        }
        Sign::parity(count)
    }

    #[test]
    fn signature_examples() {
        assert_eq!(signature(&Permutation::identity(4)), Sign::Plus);
        assert_eq!(signature(&cyc(2, &[&[1, 2]])), Sign::Minus);
        let c = cyc(3, &[&[1, 2, 3]]);
        assert_eq!(signature(&c), brute_inversions(&c));
        assert_eq!(signature(&c), Sign::Plus);
    }

    #[test]
    fn signature_matches_inversion_count() {
        for n in 0..=6 {
            for p in Permutation::all(n) {
                assert_eq!(signature(&p), brute_inversions(&p));
            }
        }
    }

    #[test]
    fn koszul_examples() {
        let swap = cyc(2, &[&[1, 2]]);
        assert_eq!(
            koszul_sign(&swap, &GradedWord::new(vec![1, 1])).unwrap(),
            Sign::Minus
        );
        assert_eq!(
            koszul_sign(&swap, &GradedWord::new(vec![2, 1])).unwrap(),
            Sign::Plus
        );
        let c = cyc(3, &[&[1, 2, 3]]);
        assert_eq!(
            koszul_sign(&c, &GradedWord::new(vec![1, 1, 1])).unwrap(),
            Sign::Plus
        );
        let err = koszul_sign(&c, &GradedWord::new(vec![1, 1])).unwrap_err();
        assert!(err.to_string().contains("arity mismatch"));
    }

    #[test]
    fn restrict_examples() {
        let id = Permutation::identity(3);
        assert_eq!(
            restrict_and_reindex(&id, &[2, 3]).unwrap(),
            Permutation::identity(2)
        );
        let c = cyc(3, &[&[1, 2, 3]]);
        assert_eq!(
            restrict_and_reindex(&c, &[2, 3]).unwrap(),
            Permutation::new(vec![2, 1]).unwrap()
        );
        assert_eq!(restrict_and_reindex(&c, &[1, 2, 3]).unwrap(), c);
        assert!(restrict_and_reindex(&c, &[4]).is_err());
        assert!(restrict_and_reindex(&c, &[1, 1]).is_err());
    }

    #[test]
    fn reindexing_sign_identity_exhaustive() {
        for n in 1..=6 {
            for p in Permutation::all(n) {
                for i in 1..=n {
                    let r = remove_point(&p, i).unwrap();
                    let lhs = signature(&p) * Sign::parity(p.apply(i));
                    let rhs = signature(&r) * Sign::parity(i);
                    assert_eq!(lhs, rhs, "{p} at {i}");
                }
            }
        }
    }

    #[test]
    fn cycles_round_trip() {
        for p in Permutation::all(5) {
            assert_eq!(Permutation::from_cycles(5, &p.cycles()).unwrap(), p);
            assert_eq!(p.compose(&p.inverse()).unwrap(), Permutation::identity(5));
        }
        assert_eq!(Permutation::all(4).len(), 24);
        assert_eq!(cyc(4, &[&[1, 2], &[3, 4]]).to_string(), "(1 2)(3 4)");
        assert!(Permutation::from_cycles(3, &[vec![1, 2], vec![2, 3]]).is_err());
        assert!(Permutation::new(vec![1, 1]).is_err());
    }
}
