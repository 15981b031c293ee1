//! Dense matrices over a generic commutative ring with division-free
//! determinants and Pfaffians.

use crate::error::{LabError, Result};
use crate::ring::Ring;
use std::collections::HashMap;
use std::fmt;

/// Row/column label drawn from the ordered set `0 < 0' < 1 < 2 < ...`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Zero,
    ZeroPrime,
    Index(usize),
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Zero => write!(f, "0"),
            Label::ZeroPrime => write!(f, "0'"),
            Label::Index(i) => write!(f, "{i}"),
        }
    }
}

/// Labels `1..=n`.
pub fn index_labels(n: usize) -> Vec<Label> {
    (1..=n).map(Label::Index).collect()
}

#[derive(Debug, Clone, PartialEq)]
pub struct RingMatrix<T: Ring> {
    rows: Vec<Label>,
    cols: Vec<Label>,
    entries: Vec<T>,
    // template element for the identity of the ring, used for empty matrices
    unit: T,
}

impl<T: Ring> RingMatrix<T> {
    /// Builds an `r × c` matrix from a closure on 0-based positions.
    pub fn from_fn(r: usize, c: usize, unit: &T, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut entries = Vec::with_capacity(r * c);
        for i in 0..r {
            for j in 0..c {
                entries.push(f(i, j));
            }
        }
        RingMatrix { rows: index_labels(r), cols: index_labels(c), entries, unit: unit.one_like() }
    }

    /// Builds a matrix from a closure on labels.
    pub fn from_labels(rows: Vec<Label>, cols: Vec<Label>, unit: &T, mut f: impl FnMut(Label, Label) -> T) -> Self {
        let mut entries = Vec::with_capacity(rows.len() * cols.len());
        for &a in &rows {
            for &b in &cols {
                entries.push(f(a, b));
            }
        }
        RingMatrix { rows, cols, entries, unit: unit.one_like() }
    }

    pub fn from_rows(rows: Vec<Vec<T>>, unit: &T) -> Result<Self> {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        if let Some(row) = rows.iter().find(|row| row.len() != c) {
            return Err(LabError::DimensionMismatch { expected: c, got: row.len() });
        }
        let entries = rows.into_iter().flatten().collect();
        Ok(RingMatrix { rows: index_labels(r), cols: index_labels(c), entries, unit: unit.one_like() })
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn row_labels(&self) -> &[Label] {
        &self.rows
    }

    pub fn col_labels(&self) -> &[Label] {
        &self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &T {
        &self.entries[i * self.ncols() + j]
    }

    pub fn unit(&self) -> &T {
        &self.unit
    }

    pub fn transpose(&self) -> Self {
        let (r, c) = (self.nrows(), self.ncols());
        let mut entries = Vec::with_capacity(r * c);
        for j in 0..c {
            for i in 0..r {
                entries.push(self.get(i, j).clone());
            }
        }
        RingMatrix { rows: self.cols.clone(), cols: self.rows.clone(), entries, unit: self.unit.clone() }
    }

    pub fn matmul(&self, other: &Self) -> Result<Self> {
        if self.ncols() != other.nrows() {
            return Err(LabError::DimensionMismatch { expected: self.ncols(), got: other.nrows() });
        }
        let zero = self.unit.zero_like();
        let mut out = RingMatrix::from_fn(self.nrows(), other.ncols(), &self.unit, |i, j| {
            let mut acc = zero.clone();
            for k in 0..self.ncols() {
                let a = self.get(i, k);
                if !a.is_zero_elem() {
                    acc = acc.add_ref(&a.mul_ref(other.get(k, j)));
                }
            }
            acc
        });
        out.rows = self.rows.clone();
        out.cols = other.cols.clone();
        Ok(out)
    }

    fn position(labels: &[Label], l: Label) -> Result<usize> {
        labels.iter().position(|&x| x == l).ok_or_else(|| LabError::Unknown(format!("label {l}")))
    }

    /// The submatrix on the given row and column labels, in the given order.
    pub fn submatrix(&self, rows: &[Label], cols: &[Label]) -> Result<Self> {
        let ri = rows.iter().map(|&l| Self::position(&self.rows, l)).collect::<Result<Vec<_>>>()?;
        let ci = cols.iter().map(|&l| Self::position(&self.cols, l)).collect::<Result<Vec<_>>>()?;
        let mut entries = Vec::with_capacity(ri.len() * ci.len());
        for &i in &ri {
            for &j in &ci {
                entries.push(self.get(i, j).clone());
            }
        }
        Ok(RingMatrix { rows: rows.to_vec(), cols: cols.to_vec(), entries, unit: self.unit.clone() })
    }

    /// The principal submatrix on `labels`.
    pub fn principal(&self, labels: &[Label]) -> Result<Self> {
        self.submatrix(labels, labels)
    }

    pub fn is_skew_symmetric(&self) -> bool {
        let n = self.nrows();
        n == self.ncols()
            && (0..n).all(|i| self.get(i, i).is_zero_elem() && (i + 1..n).all(|j| self.get(i, j).add_ref(self.get(j, i)).is_zero_elem()))
    }

    /// Determinant by Laplace expansion along rows, memoized over column
    /// subsets. No division is used.
    pub fn determinant(&self) -> Result<T> {
        let n = self.nrows();
        if n != self.ncols() {
            return Err(LabError::NotSquare { rows: n, cols: self.ncols() });
        }
        if n == 0 {
            return Ok(self.unit.one_like());
        }
        assert!(n < 26, "determinant size {n} too large for subset expansion");
        // dp[mask]: signed sum over placements of rows 0..|mask| into mask
        let mut dp: HashMap<u32, T> = HashMap::new();
        dp.insert(0, self.unit.one_like());
        for r in 0..n {
            let mut next: HashMap<u32, T> = HashMap::new();
            let mut keys: Vec<u32> = dp.keys().copied().collect();
            keys.sort_unstable();
            for mask in keys {
                let val = &dp[&mask];
                for c in 0..n {
                    if mask & (1 << c) != 0 {
                        continue;
                    }
                    let a = self.get(r, c);
                    if a.is_zero_elem() {
                        continue;
                    }
                    let above = (mask >> (c + 1)).count_ones();
                    let mut term = val.mul_ref(a);
                    if above % 2 == 1 {
                        term = term.neg_ref();
                    }
                    let key = mask | (1 << c);
                    let updated = match next.remove(&key) {
                        Some(prev) => prev.add_ref(&term),
                        None => term,
                    };
                    if updated.is_zero_elem() {
                        continue;
                    }
                    next.insert(key, updated);
                }
            }
            dp = next;
        }
        Ok(dp.remove(&((1u32 << n) - 1)).unwrap_or_else(|| self.unit.zero_like()))
    }

    /// Pfaffian by expansion along the first row, memoized over subsets.
    pub fn pfaffian(&self) -> Result<T> {
        let n = self.nrows();
        if n != self.ncols() {
            return Err(LabError::NotSquare { rows: n, cols: self.ncols() });
        }
        if n % 2 == 1 {
            return Err(LabError::OddPfaffian(n));
        }
        if !self.is_skew_symmetric() {
            return Err(LabError::NotSkewSymmetric);
        }
        assert!(n < 64, "pfaffian size {n} too large");
        let mut memo: HashMap<u64, T> = HashMap::new();
        let full = if n == 0 { 0 } else { u64::MAX >> (64 - n) };
        Ok(self.pf_rec(full, &mut memo))
    }

    fn pf_rec(&self, set: u64, memo: &mut HashMap<u64, T>) -> T {
        if set == 0 {
            return self.unit.one_like();
        }
        if let Some(v) = memo.get(&set) {
            return v.clone();
        }
        let i = set.trailing_zeros() as usize;
        let rest = set & !(1 << i);
        let mut acc = self.unit.zero_like();
        let mut between = 0;
        let mut bits = rest;
        while bits != 0 {
            let j = bits.trailing_zeros() as usize;
            bits &= bits - 1;
            let a = self.get(i, j);
            if !a.is_zero_elem() {
                let sub = self.pf_rec(rest & !(1 << j), memo);
                let term = a.mul_ref(&sub);
                acc = if between % 2 == 0 { acc.add_ref(&term) } else { acc.sub_ref(&term) };
            }
            between += 1;
        }
        memo.insert(set, acc.clone());
        acc
    }
}

/// Determinant of the `size × size` matrix with entries `f(i, j)`, 1-based.
pub fn det_of<T: Ring>(size: usize, unit: &T, mut f: impl FnMut(usize, usize) -> T) -> T {
    RingMatrix::from_fn(size, size, unit, |i, j| f(i + 1, j + 1)).determinant().expect("square by construction")
}

/// Determinant with rows and columns ranging over `lo..=hi`.
pub fn det_range<T: Ring>(lo: usize, hi: usize, unit: &T, mut f: impl FnMut(usize, usize) -> T) -> T {
    if hi < lo {
        return unit.one_like();
    }
    det_of(hi - lo + 1, unit, |i, j| f(i + lo - 1, j + lo - 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;
    use proptest::prelude::*;

    fn int_matrix(rows: Vec<Vec<i64>>) -> RingMatrix<BigInt> {
        let rows = rows.into_iter().map(|r| r.into_iter().map(BigInt::from).collect()).collect();
        RingMatrix::from_rows(rows, &BigInt::from(1)).unwrap()
    }

    // permutation-sum oracle
    fn leibniz(m: &[Vec<i64>]) -> i64 {
        fn perms(n: usize) -> Vec<Vec<usize>> {
            if n == 0 {
                return vec![vec![]];
            }
            let mut out = Vec::new();
            for p in perms(n - 1) {
                for pos in 0..=p.len() {
                    let mut q = p.clone();
                    q.insert(pos, n - 1);
                    out.push(q);
                }
            }
            out
        }
        let n = m.len();
        perms(n)
            .into_iter()
            .map(|p| {
                let inv = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).filter(|&(i, j)| p[i] > p[j]).count();
                let prod: i64 = (0..n).map(|i| m[i][p[i]]).product();
                if inv % 2 == 0 {
                    prod
                } else {
                    -prod
                }
            })
            .sum()
    }

    #[test]
    fn small_determinants() {
        assert_eq!(int_matrix(vec![vec![2, 0, 0], vec![0, 3, 0], vec![0, 0, 5]]).determinant().unwrap(), BigInt::from(30));
        assert_eq!(int_matrix(vec![]).determinant().unwrap(), BigInt::from(1));
        assert_eq!(int_matrix(vec![vec![1, 2], vec![3, 4]]).determinant().unwrap(), BigInt::from(-2));
        let nonsq = RingMatrix::from_fn(2, 3, &BigInt::from(1), |_, _| BigInt::from(1));
        assert!(nonsq.determinant().is_err());
    }

    #[test]
    fn small_pfaffians() {
        let m = int_matrix(vec![vec![0, 7], vec![-7, 0]]);
        assert_eq!(m.pfaffian().unwrap(), BigInt::from(7));
        assert_eq!(int_matrix(vec![]).pfaffian().unwrap(), BigInt::from(1));
        assert!(int_matrix(vec![vec![0, 1], vec![1, 0]]).pfaffian().is_err());
        assert!(int_matrix(vec![vec![0, 1, 2], vec![-1, 0, 3], vec![-2, -3, 0]]).pfaffian().is_err());
        // a12 a34 - a13 a24 + a14 a23
        let m = int_matrix(vec![vec![0, 1, 2, 3], vec![-1, 0, 4, 5], vec![-2, -4, 0, 6], vec![-3, -5, -6, 0]]);
        assert_eq!(m.pfaffian().unwrap(), BigInt::from(6 - 2 * 5 + 3 * 4));
    }

    fn skew(n: usize, vals: &[i64]) -> Vec<Vec<i64>> {
        let mut m = vec![vec![0; n]; n];
        let mut k = 0;
        for i in 0..n {
            for j in i + 1..n {
                m[i][j] = vals[k % vals.len()];
                m[j][i] = -m[i][j];
                k += 1;
            }
        }
        m
    }

    proptest! {
        #[test]
        fn det_matches_leibniz(n in 0usize..=5, vals in prop::collection::vec(-4i64..=4, 25)) {
            let m: Vec<Vec<i64>> = (0..n).map(|i| (0..n).map(|j| vals[i * 5 + j]).collect()).collect();
            prop_assert_eq!(int_matrix(m.clone()).determinant().unwrap(), BigInt::from(leibniz(&m)));
        }

        #[test]
        fn pf_squared_is_det(h in 0usize..=4, vals in prop::collection::vec(-5i64..=5, 1..30)) {
            let m = int_matrix(skew(2 * h, &vals));
            let pf = m.pfaffian().unwrap();
            prop_assert_eq!(&pf * &pf, m.determinant().unwrap());
        }

        #[test]
        fn det_alternating_and_multilinear(vals in prop::collection::vec(-4i64..=4, 16), extra in prop::collection::vec(-4i64..=4, 4), c in -3i64..=3) {
            let m: Vec<Vec<i64>> = (0..4).map(|i| vals[i * 4..i * 4 + 4].to_vec()).collect();
            let d = int_matrix(m.clone()).determinant().unwrap();
            let mut swapped = m.clone();
            swapped.swap(0, 2);
            prop_assert_eq!(int_matrix(swapped).determinant().unwrap(), -&d);
            let mut lin = m.clone();
            for j in 0..4 {
                lin[1][j] = c * m[1][j] + extra[j];
            }
            let mut alt = m.clone();
            alt[1] = extra.clone();
            let want = &d * c + int_matrix(alt).determinant().unwrap();
            prop_assert_eq!(int_matrix(lin).determinant().unwrap(), want);
        }

        #[test]
        fn relabelling_changes_pf_by_sign(vals in prop::collection::vec(-5i64..=5, 15), perm in Just(vec![0usize, 1, 2, 3, 4, 5]).prop_shuffle()) {
            let base = int_matrix(skew(6, &vals));
            let permuted: Vec<Vec<i64>> = {
                let m = skew(6, &vals);
                (0..6).map(|i| (0..6).map(|j| m[perm[i]][perm[j]]).collect()).collect()
            };
            let inv = (0..6).flat_map(|i| (i + 1..6).map(move |j| (i, j))).filter(|&(i, j)| perm[i] > perm[j]).count();
            let pf = base.pfaffian().unwrap();
            let want = if inv % 2 == 0 { pf } else { -pf };
            prop_assert_eq!(int_matrix(permuted).pfaffian().unwrap(), want);
        }
    }

    #[test]
    fn label_order() {
        assert!(Label::Zero < Label::ZeroPrime);
        assert!(Label::ZeroPrime < Label::Index(1));
        assert!(Label::Index(1) < Label::Index(2));
    }
}
