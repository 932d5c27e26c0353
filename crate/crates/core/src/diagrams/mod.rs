//! Basis diagrams of 𝓔(q, l): a partial surjection from inputs to outputs
//! together with a partition of the unused inputs into wheels.

mod counting;
mod element;
mod io;
pub mod random;

use std::fmt;

pub use counting::{bell, binomial, dimension, partitions_into_parts, stirling2, surjection_count};
pub use element::{Coefficient, Element};
pub use io::{from_json, parse_rational, to_dot, to_json};

use crate::error::Error;
use crate::koszul::{koszul_sign_slice, sort_signature, Sign};

/// A basis element of 𝓔(q, l).
///
/// `fibers[j]` is the ascending fiber of output `j + 1`; wheels are ascending
/// blocks listed by increasing minimum. Tensor order of the factors is: the
/// corolla of output 1, ..., the corolla of output l, then the wheels.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WheeledDiagram {
    q: usize,
    l: usize,
    fibers: Vec<Vec<usize>>,
    wheels: Vec<Vec<usize>>,
}

impl WheeledDiagram {
    /// Builds a diagram from blocks that are already canonical.
    pub fn new(
        q: usize,
        fibers: Vec<Vec<usize>>,
        wheels: Vec<Vec<usize>>,
    ) -> Result<WheeledDiagram, Error> {
        let (d, sign) = canonical_form(q, fibers.clone(), wheels.clone())?;
        if sign != Sign::Plus || d.fibers != fibers || d.wheels != wheels {
            return Err(Error::InvalidDiagram(
                "blocks are not in canonical order".to_string(),
            ));
        }
        Ok(d)
    }

    /// Internal constructor for blocks known to be canonical.
    pub(crate) fn from_canonical(
        q: usize,
        fibers: Vec<Vec<usize>>,
        wheels: Vec<Vec<usize>>,
    ) -> WheeledDiagram {
        debug_assert!(is_canonical(q, &fibers, &wheels));
        WheeledDiagram {
            q,
            l: fibers.len(),
            fibers,
            wheels,
        }
    }

    pub fn q(&self) -> usize {
        self.q
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn biarity(&self) -> (usize, usize) {
        (self.q, self.l)
    }

    pub fn fibers(&self) -> &[Vec<usize>] {
        &self.fibers
    }

    pub fn wheels(&self) -> &[Vec<usize>] {
        &self.wheels
    }

    /// Σ(|fiber| - 1) + Σ|wheel|; always equal to q - l.
    pub fn degree(&self) -> usize {
        self.fibers.iter().map(|f| f.len() - 1).sum::<usize>()
            + self.wheels.iter().map(Vec::len).sum::<usize>()
    }

    /// Inputs covered by fibers.
    pub fn fiber_support(&self) -> Vec<usize> {
        let mut j: Vec<usize> = self.fibers.iter().flatten().copied().collect();
        j.sort_unstable();
        j
    }

    /// Output assignment of the inputs in `fiber_support`, in the same order.
    fn fiber_assignment(&self) -> Vec<usize> {
        let mut pairs: Vec<(usize, usize)> = self
            .fibers
            .iter()
            .enumerate()
            .flat_map(|(j, f)| f.iter().map(move |&x| (x, j + 1)))
            .collect();
        pairs.sort_unstable();
        pairs.into_iter().map(|(_, j)| j).collect()
    }
}

impl fmt::Display for WheeledDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let block = |b: &Vec<usize>| {
            b.iter()
                .map(ToString::to_string)
                .collect::<Vec<_>>()
                .join(",")
        };
        let mut parts: Vec<String> = self
            .fibers
            .iter()
            .enumerate()
            .map(|(k, fiber)| format!("{{{}}}->{}", block(fiber), k + 1))
            .collect();
        parts.extend(self.wheels.iter().map(|w| format!("w{{{}}}", block(w))));
        write!(f, "[{}]", parts.join(" "))
    }
}

fn is_canonical(q: usize, fibers: &[Vec<usize>], wheels: &[Vec<usize>]) -> bool {
    let ascending = |b: &Vec<usize>| !b.is_empty() && b.windows(2).all(|w| w[0] < w[1]);
    let mut seen = vec![false; q + 1];
    for b in fibers.iter().chain(wheels) {
        if !ascending(b) {
            return false;
        }
        for &x in b {
            if x == 0 || x > q || seen[x] {
                return false;
            }
            seen[x] = true;
        }
    }
    seen[1..].iter().all(|&s| s) && wheels.windows(2).all(|w| w[0][0] < w[1][0])
}

/// Sorts every block ascending and the wheels by minimum.
///
/// Each block carries the sign representation of its symmetric group, and the
/// wheels are reordered with the Koszul sign for their degrees `|X|`.
pub fn canonical_form(
    q: usize,
    mut fibers: Vec<Vec<usize>>,
    mut wheels: Vec<Vec<usize>>,
) -> Result<(WheeledDiagram, Sign), Error> {
    let mut seen = vec![false; q + 1];
    for b in fibers.iter().chain(&wheels) {
        if b.is_empty() {
            return Err(Error::InvalidDiagram("empty fiber or wheel".to_string()));
        }
        for &x in b {
            if x == 0 || x > q {
                return Err(Error::InvalidDiagram(format!("input {x} outside 1..{q}")));
            }
            if seen[x] {
                return Err(Error::InvalidDiagram(format!("input {x} used twice")));
            }
            seen[x] = true;
        }
    }
    if let Some(x) = (1..=q).find(|&x| !seen[x]) {
        return Err(Error::InvalidDiagram(format!("input {x} is not covered")));
    }
    let mut sign = Sign::Plus;
    for b in fibers.iter_mut().chain(wheels.iter_mut()) {
        sign *= sort_signature(b);
        b.sort_unstable();
    }
    let mins: Vec<usize> = wheels.iter().map(|w| w[0]).collect();
    let degrees: Vec<usize> = wheels.iter().map(Vec::len).collect();
    sign *= koszul_sign_slice(&mins, &degrees);
    wheels.sort_unstable_by_key(|w| w[0]);
    Ok((WheeledDiagram::from_canonical(q, fibers, wheels), sign))
}

/// All basis diagrams of 𝓔(q, l), ordered by decreasing fiber support size and
/// then lexicographically by (fiber support, output assignment, wheel partition).
pub fn enumerate_basis(q: usize, l: usize) -> Vec<WheeledDiagram> {
    let mut out = Vec::new();
    if l > q {
        return out;
    }
    for mask in 0u64..(1u64 << q) {
        let support: Vec<usize> = (1..=q).filter(|&x| mask >> (x - 1) & 1 == 1).collect();
        if support.len() < l {
            continue;
        }
        let rest: Vec<usize> = (1..=q).filter(|&x| mask >> (x - 1) & 1 == 0).collect();
        let partitions = set_partitions(&rest);
        for assignment in surjections(support.len(), l) {
            let mut fibers = vec![Vec::new(); l];
            for (&x, &j) in support.iter().zip(&assignment) {
                fibers[j - 1].push(x);
            }
            for wheels in &partitions {
                out.push(WheeledDiagram::from_canonical(
                    q,
                    fibers.clone(),
                    wheels.clone(),
                ));
            }
        }
    }
    // larger fiber supports first, then lexicographic
    out.sort_by_cached_key(|d| {
        let support = d.fiber_support();
        (
            std::cmp::Reverse(support.len()),
            support,
            d.fiber_assignment(),
            d.wheels.clone(),
        )
    });
    out
}

/// Surjections {1..m} -> {1..l} as image lists, lexicographically.
fn surjections(m: usize, l: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = vec![1; m];
    if l == 0 {
        if m == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    loop {
        let mut hit = vec![false; l];
        for &v in &current {
            hit[v - 1] = true;
        }
        if hit.iter().all(|&h| h) {
            out.push(current.clone());
        }
        let Some(pos) = (0..m).rev().find(|&k| current[k] < l) else {
            break;
        };
        current[pos] += 1;
        for v in &mut current[pos + 1..] {
            *v = 1;
        }
    }
    out
}

/// Set partitions of `items` with blocks ordered by minimum (restricted growth strings).
pub(crate) fn set_partitions(items: &[usize]) -> Vec<Vec<Vec<usize>>> {
    fn go(
        items: &[usize],
        pos: usize,
        blocks: &mut Vec<Vec<usize>>,
        out: &mut Vec<Vec<Vec<usize>>>,
    ) {
        if pos == items.len() {
            out.push(blocks.clone());
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(items[pos]);
            go(items, pos + 1, blocks, out);
            blocks[b].pop();
        }
        blocks.push(vec![items[pos]]);
        go(items, pos + 1, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    go(items, 0, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::koszul::{koszul_sign, signature, GradedWord, Permutation};
    use num_bigint::BigUint;

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate_basis(0, 0).len(), 1);
        assert!(enumerate_basis(0, 1).is_empty());
        let b = enumerate_basis(2, 1);
        let shown: Vec<String> = b.iter().map(ToString::to_string).collect();
        assert_eq!(shown, vec!["[{1,2}->1]", "[{1}->1 w{2}]", "[{2}->1 w{1}]"]);
    }

    #[test]
    fn enumeration_counts_and_degrees() {
        for q in 0..=6 {
            for l in 0..=q + 1 {
                let basis = enumerate_basis(q, l);
                assert_eq!(BigUint::from(basis.len()), dimension(q, l), "{q} {l}");
                let no_wheels = basis.iter().filter(|d| d.wheels().is_empty()).count();
                assert_eq!(BigUint::from(no_wheels), surjection_count(q, l));
                let mut sorted = basis.clone();
                sorted.sort();
                sorted.dedup();
                assert_eq!(sorted.len(), basis.len());
                for d in &basis {
                    assert_eq!(d.degree(), q - l);
                    assert!(is_canonical(q, d.fibers(), d.wheels()));
                }
            }
        }
    }

    #[test]
    fn split_by_wheel_support() {
        // Σ_J |Surj(|J|, l)| S(q - |J|, j), grouped by the number of wheels j
        for q in 0..=6 {
            for l in 0..=q {
                let basis = enumerate_basis(q, l);
                for j in 0..=q {
                    let count = basis.iter().filter(|d| d.wheels().len() == j).count();
                    let expected: BigUint = (0..=q)
                        .map(|m| binomial(q, m) * surjection_count(m, l) * stirling2(q - m, j))
                        .sum();
                    assert_eq!(BigUint::from(count), expected);
                }
            }
        }
    }

    #[test]
    fn canonical_form_examples() {
        let (d, s) = canonical_form(2, vec![vec![1, 2]], vec![]).unwrap();
        assert_eq!((d.fibers().to_vec(), s), (vec![vec![1, 2]], Sign::Plus));
        let (d, s) = canonical_form(2, vec![vec![2, 1]], vec![]).unwrap();
        assert_eq!((d.fibers().to_vec(), s), (vec![vec![1, 2]], Sign::Minus));
        let (d, s) = canonical_form(3, vec![], vec![vec![2, 3], vec![1]]).unwrap();
        assert_eq!(d.wheels(), &[vec![1], vec![2, 3]]);
        assert_eq!(s, Sign::Plus);
        let (_, s) = canonical_form(2, vec![], vec![vec![2], vec![1]]).unwrap();
        assert_eq!(s, Sign::Minus);
        assert!(canonical_form(2, vec![vec![1]], vec![]).is_err());
        assert!(canonical_form(2, vec![vec![1, 2]], vec![vec![2]]).is_err());
        assert!(canonical_form(1, vec![vec![]], vec![vec![1]]).is_err());
        assert!(WheeledDiagram::new(2, vec![vec![2, 1]], vec![]).is_err());
    }

    #[test]
    fn canonical_form_of_presentations() {
        // every shuffled presentation of a basis diagram canonicalizes back,
        // with the sign recomputed from signatures and a Koszul sign
        for d in enumerate_basis(5, 2)
            .into_iter()
            .chain(enumerate_basis(5, 0))
        {
            let k = d.wheels().len();
            for wheel_order in Permutation::all(k) {
                let mut wheels = vec![Vec::new(); k];
                for (a, w) in d.wheels().iter().enumerate() {
                    let mut w = w.clone();
                    w.reverse();
                    wheels[wheel_order.apply(a + 1) - 1] = w;
                }
                let mut fibers = d.fibers().to_vec();
                for f in &mut fibers {
                    f.rotate_left(1);
                }
                let mut expected = Sign::Plus;
                for f in d.fibers() {
                    let n = f.len();
                    let rot =
                        Permutation::new((1..=n).map(|x| (x + n - 2) % n + 1).collect()).unwrap();
                    expected *= signature(&rot);
                }
                for w in d.wheels() {
                    let n = w.len();
                    let rev = Permutation::new((1..=n).rev().collect()).unwrap();
                    expected *= signature(&rev);
                }
                let degrees = GradedWord::new(d.wheels().iter().map(Vec::len).collect());
                expected *= koszul_sign(&wheel_order, &degrees).unwrap();
                let (c, s) = canonical_form(5, fibers, wheels).unwrap();
                assert_eq!(c, d);
                assert_eq!(s, expected, "{d} {wheel_order}");
                let (c2, s2) = canonical_form(5, c.fibers().to_vec(), c.wheels().to_vec()).unwrap();
                assert_eq!((c2, s2), (c, Sign::Plus));
            }
        }
    }
}
