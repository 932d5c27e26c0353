//! Exact sparse linear algebra over ℚ.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::BigRational;
use num_traits::{One, Zero};

pub type Rational = BigRational;

/// A sparse vector: index -> non-zero coefficient.
pub type SparseVec = BTreeMap<usize, Rational>;

pub fn add_scaled(target: &mut SparseVec, source: &SparseVec, factor: &Rational) {
    if factor.is_zero() {
        return;
    }
    for (&k, v) in source {
        let entry = target.entry(k).or_insert_with(Rational::zero);
        *entry += v * factor;
        if entry.is_zero() {
            target.remove(&k);
        }
    }
}

pub fn add_entry(target: &mut SparseVec, index: usize, value: Rational) {
    if value.is_zero() {
        return;
    }
    let entry = target.entry(index).or_insert_with(Rational::zero);
    *entry += value;
    if entry.is_zero() {
        target.remove(&index);
    }
}

pub fn scaled(v: &SparseVec, factor: &Rational) -> SparseVec {
    if factor.is_zero() {
        return SparseVec::new();
    }
    v.iter().map(|(&k, x)| (k, x * factor)).collect()
}

/// Row echelon form built incrementally; each row may carry a record of the
/// input combination that produced it.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: Vec<SparseVec>,
    combos: Vec<SparseVec>,
    pivot_row: HashMap<usize, usize>,
}

impl Echelon {
    pub fn new() -> Echelon {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    /// Reduces `v` against the rows; returns the remainder and the combination
    /// of recorded inputs that was subtracted.
    pub fn reduce_tracked(&self, v: &SparseVec) -> (SparseVec, SparseVec) {
        let mut v = v.clone();
        let mut used = SparseVec::new();
        let mut cursor = 0usize;
        while let Some((&k, _)) = v.range(cursor..).next() {
            cursor = k + 1;
            if let Some(&r) = self.pivot_row.get(&k) {
                let c = v.remove(&k).unwrap();
                let row = &self.rows[r];
                for (&idx, x) in row.range(k + 1..) {
                    add_entry(&mut v, idx, -(x * &c));
                }
                add_scaled(&mut used, &self.combos[r], &c);
            }
        }
        (v, used)
    }

    pub fn reduce(&self, v: &SparseVec) -> SparseVec {
        let mut v = v.clone();
        let mut cursor = 0usize;
        while let Some((&k, _)) = v.range(cursor..).next() {
            cursor = k + 1;
            if let Some(&r) = self.pivot_row.get(&k) {
                let c = v.remove(&k).unwrap();
                for (&idx, x) in self.rows[r].range(k + 1..) {
                    add_entry(&mut v, idx, -(x * &c));
                }
            }
        }
        v
    }

    /// Inserts `v`, recording `combo` as its origin. Returns `None` when `v`
    /// was independent, or the kernel combination when it reduced to zero.
    pub fn insert_tracked(&mut self, v: &SparseVec, combo: SparseVec) -> Option<SparseVec> {
        let (rem, used) = self.reduce_tracked(v);
        let mut origin = combo;
        add_scaled(&mut origin, &used, &-Rational::one());
        if rem.is_empty() {
            return Some(origin);
        }
        let (&pivot, lead) = rem.iter().next().unwrap();
        let inv = lead.recip();
        self.pivot_row.insert(pivot, self.rows.len());
        self.rows.push(scaled(&rem, &inv));
        self.combos.push(scaled(&origin, &inv));
        None
    }

    /// Inserts `v`; returns whether it was independent of the previous rows.
    pub fn insert(&mut self, v: &SparseVec) -> bool {
        let rem = self.reduce(v);
        if rem.is_empty() {
            return false;
        }
        let (&pivot, lead) = rem.iter().next().unwrap();
        let inv = lead.recip();
        self.pivot_row.insert(pivot, self.rows.len());
        self.rows.push(scaled(&rem, &inv));
        self.combos.push(SparseVec::new());
        true
    }
}

/// Solver for `A x = b` where the columns of `A` are given as sparse vectors.
#[derive(Debug, Clone)]
pub struct LinearSystem {
    echelon: Echelon,
    kernel: Vec<SparseVec>,
}

impl LinearSystem {
    pub fn new(columns: &[SparseVec]) -> LinearSystem {
        let mut echelon = Echelon::new();
        let mut kernel = Vec::new();
        for (j, col) in columns.iter().enumerate() {
            let mut combo = SparseVec::new();
            combo.insert(j, Rational::one());
            if let Some(k) = echelon.insert_tracked(col, combo) {
                kernel.push(k);
            }
        }
        LinearSystem { echelon, kernel }
    }

    /// A particular solution, or `None` when `b` is not in the column span.
    pub fn solve(&self, b: &SparseVec) -> Option<SparseVec> {
        let (rem, used) = self.echelon.reduce_tracked(b);
        if rem.is_empty() {
            Some(used)
        } else {
            None
        }
    }

    pub fn kernel(&self) -> &[SparseVec] {
        &self.kernel
    }

    pub fn rank(&self) -> usize {
        self.echelon.rank()
    }
}

/// A dense-shaped rational matrix stored by sparse rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    entries: Vec<SparseVec>,
}

impl RationalMatrix {
    pub fn zero(rows: usize, cols: usize) -> RationalMatrix {
        RationalMatrix {
            rows,
            cols,
            entries: vec![SparseVec::new(); rows],
        }
    }

    pub fn identity(n: usize) -> RationalMatrix {
        let mut m = RationalMatrix::zero(n, n);
        for k in 0..n {
            m.set(k, k, Rational::one());
        }
        m
    }

    /// Builds a matrix whose `j`-th column is `columns[j]`.
    pub fn from_columns(rows: usize, columns: &[SparseVec]) -> RationalMatrix {
        let mut m = RationalMatrix::zero(rows, columns.len());
        for (j, col) in columns.iter().enumerate() {
            for (&i, v) in col {
                assert!(i < rows, "column entry outside the matrix");
                m.set(i, j, v.clone());
            }
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> Rational {
        self.entries[i]
            .get(&j)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn set(&mut self, i: usize, j: usize, v: Rational) {
        if v.is_zero() {
            self.entries[i].remove(&j);
        } else {
            self.entries[i].insert(j, v);
        }
    }

    pub fn row(&self, i: usize) -> &SparseVec {
        &self.entries[i]
    }

    pub fn mul(&self, other: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, other.rows, "matrix shapes");
        let mut out = RationalMatrix::zero(self.rows, other.cols);
        for i in 0..self.rows {
            let mut acc = SparseVec::new();
            for (&k, v) in &self.entries[i] {
                add_scaled(&mut acc, &other.entries[k], v);
            }
            out.entries[i] = acc;
        }
        out
    }

    pub fn transpose(&self) -> RationalMatrix {
        let mut out = RationalMatrix::zero(self.cols, self.rows);
        for i in 0..self.rows {
            for (&j, v) in &self.entries[i] {
                out.entries[j].insert(i, v.clone());
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(BTreeMap::is_empty)
    }

    pub fn trace(&self) -> Rational {
        (0..self.rows.min(self.cols)).map(|k| self.get(k, k)).sum()
    }

    pub fn rank(&self) -> usize {
        let mut e = Echelon::new();
        for row in &self.entries {
            e.insert(row);
        }
        e.rank()
    }

    /// Basis of the null space `{x : A x = 0}`.
    pub fn kernel(&self) -> Vec<SparseVec> {
        let columns: Vec<SparseVec> = self.transpose().entries;
        LinearSystem::new(&columns).kernel().to_vec()
    }

    /// A basis of the column space.
    pub fn image(&self) -> Vec<SparseVec> {
        let mut e = Echelon::new();
        for col in &self.transpose().entries {
            e.insert(col);
        }
        e.rows().to_vec()
    }
}

impl fmt::Display for RationalMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for i in 0..self.rows {
            let row: Vec<String> = (0..self.cols).map(|j| self.get(i, j).to_string()).collect();
            writeln!(f, "[{}]", row.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn r(n: i64) -> Rational {
        Rational::from_integer(BigInt::from(n))
    }

    fn vec_of(entries: &[(usize, i64)]) -> SparseVec {
        entries.iter().map(|&(k, v)| (k, r(v))).collect()
    }

    #[test]
    fn rank_kernel_image() {
        let cols = vec![
            vec_of(&[(0, 1), (1, 2)]),
            vec_of(&[(0, 2), (1, 4)]),
            vec_of(&[(2, 1)]),
        ];
        let m = RationalMatrix::from_columns(3, &cols);
        assert_eq!(m.rank(), 2);
        let ker = m.kernel();
        assert_eq!(ker.len(), 1);
        let x = RationalMatrix::from_columns(3, &ker);
        assert!(m.mul(&x).is_zero());
        assert_eq!(m.image().len(), 2);
        assert_eq!(RationalMatrix::identity(3).trace(), r(3));
        assert_eq!(m.transpose().transpose(), m);
    }

    #[test]
    fn solving() {
        let cols = vec![vec_of(&[(0, 2), (1, 1)]), vec_of(&[(1, 3)])];
        let sys = LinearSystem::new(&cols);
        let b = vec_of(&[(0, 4), (1, 5)]);
        let x = sys.solve(&b).unwrap();
        let m = RationalMatrix::from_columns(2, &cols);
        let xm = RationalMatrix::from_columns(2, &[x]);
        assert_eq!(m.mul(&xm).row(0).get(&0), Some(&r(4)));
        assert_eq!(m.mul(&xm).row(1).get(&0), Some(&r(5)));
        let sys = LinearSystem::new(&[vec_of(&[(0, 1)])]);
        assert!(sys.solve(&vec_of(&[(1, 1)])).is_none());
    }

    #[test]
    fn fractions_stay_exact() {
        let cols = vec![vec_of(&[(0, 3)]), vec_of(&[(0, 1), (1, 7)])];
        let sys = LinearSystem::new(&cols);
        let x = sys.solve(&vec_of(&[(0, 1), (1, 1)])).unwrap();
        // 3 a + b = 1, 7 b = 1
        assert_eq!(x[&1], Rational::new(BigInt::from(1), BigInt::from(7)));
        assert_eq!(x[&0], Rational::new(BigInt::from(2), BigInt::from(7)));
    }
}
