//! Integer partitions and the statistics used throughout the crate.

use crate::error::{LabError, Result};
use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;

/// A weakly decreasing sequence of positive integers.
///
/// Trailing zeros are stripped on construction, so equal partitions always
/// compare equal.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<usize>,
}

impl Partition {
    /// Builds a partition from parts that may include trailing zeros.
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(LabError::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        let mut parts = parts;
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    /// Builds a partition from parts in any order.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.sort_unstable_by(|a, b| b.cmp(a));
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Partition { parts }
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    /// The rectangle with `rows` rows of length `cols`.
    pub fn rectangle(rows: usize, cols: usize) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Partition { parts: vec![cols; rows] }
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn size(&self) -> usize {
        self.parts.iter().sum()
    }

    pub fn length(&self) -> usize {
        self.parts.len()
    }

    pub fn width(&self) -> usize {
        self.parts.first().copied().unwrap_or(0)
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// Part `i` (0-based), or 0 past the end.
    pub fn part(&self, i: usize) -> usize {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Parts padded with zeros to length `m`.
    pub fn padded(&self, m: usize) -> Result<Vec<usize>> {
        if self.length() > m {
            return Err(LabError::TooLong { length: self.length(), bound: m });
        }
        let mut v = self.parts.clone();
        v.resize(m, 0);
        Ok(v)
    }

    pub fn conjugate(&self) -> Partition {
        let w = self.width();
        let parts = (1..=w).map(|j| self.parts.iter().filter(|&&p| p >= j).count()).collect();
        Partition { parts }
    }

    /// Number of rows of odd length and number of columns of odd length.
    pub fn odd_counts(&self) -> (usize, usize) {
        let r = self.parts.iter().filter(|&&p| p % 2 == 1).count();
        let c = self.conjugate().parts.iter().filter(|&&p| p % 2 == 1).count();
        (r, c)
    }

    pub fn odd_rows(&self) -> usize {
        self.odd_counts().0
    }

    pub fn odd_columns(&self) -> usize {
        self.odd_counts().1
    }

    /// True when every part of `self` is at most the matching part of `other`.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.length() <= other.length() && self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }

    /// Number of standard Young tableaux of this shape (hook-length formula).
    pub fn hook_count(&self) -> BigInt {
        let n = self.size();
        let conj = self.conjugate();
        let mut num = BigInt::one();
        for k in 2..=n {
            num *= k;
        }
        let mut den = BigInt::one();
        for (i, &row) in self.parts.iter().enumerate() {
            for j in 0..row {
                let arm = row - j - 1;
                let leg = conj.parts[j] - i - 1;
                den *= arm + leg + 1;
            }
        }
        num / den
    }

    /// The strictly increasing sequence `(p_m + 1, p_{m-1} + 2, ..., p_1 + m)`.
    pub fn index_sequence(&self, m: usize) -> Result<Vec<usize>> {
        let padded = self.padded(m)?;
        Ok((1..=m).map(|k| padded[m - k] + k).collect())
    }

    /// Shapes obtained by removing one corner cell.
    pub fn remove_corners(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..self.length() {
            if self.part(i) > self.part(i + 1) {
                let mut parts = self.parts.clone();
                parts[i] -= 1;
                out.push(Partition::from_unsorted(parts));
            }
        }
        out
    }

    /// Shapes obtained by adding one cell.
    pub fn add_corners(&self) -> Vec<Partition> {
        let mut out = Vec::new();
        for i in 0..=self.length() {
            if i == 0 || self.part(i - 1) > self.part(i) {
                let mut parts = self.parts.clone();
                if i == parts.len() {
                    parts.push(1);
                } else {
                    parts[i] += 1;
                }
                out.push(Partition { parts });
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.parts.is_empty() {
            return write!(f, "0");
        }
        let s: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = LabError;

    /// Parses comma-separated parts; `""` and `"0"` denote the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| LabError::InvalidPartition(format!("{t:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = LabError;
    fn try_from(v: Vec<usize>) -> Result<Self> {
        Partition::new(v)
    }
}

/// Shorthand used heavily in tests: panics on invalid input.
pub fn part(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).expect("valid partition")
}

pub fn conjugate(p: &Partition) -> Partition {
    p.conjugate()
}

pub fn odd_counts(p: &Partition) -> (usize, usize) {
    p.odd_counts()
}

pub fn hook_count(p: &Partition) -> BigInt {
    p.hook_count()
}

pub fn index_sequence(p: &Partition, m: usize) -> Result<Vec<usize>> {
    p.index_sequence(m)
}

/// True iff `inner ⊆ outer` and the difference has at most one cell per row.
pub fn is_vertical_strip(inner: &Partition, outer: &Partition) -> bool {
    inner.is_contained_in(outer) && (0..outer.length()).all(|i| outer.part(i) - inner.part(i) <= 1)
}

/// True iff `inner ⊆ outer` and the difference has at most one cell per column.
pub fn is_horizontal_strip(inner: &Partition, outer: &Partition) -> bool {
    is_vertical_strip(&inner.conjugate(), &outer.conjugate())
}

/// All partitions of exactly `n` within the bounds, in lexicographically
/// decreasing order of parts.
pub fn partitions_of(n: usize, width_bound: Option<usize>, length_bound: Option<usize>) -> Vec<Partition> {
    fn rec(rem: usize, max: usize, len_left: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rem == 0 {
            out.push(Partition { parts: cur.clone() });
            return;
        }
        if len_left == 0 {
            return;
        }
        for p in (1..=max.min(rem)).rev() {
            cur.push(p);
            rec(rem - p, p, len_left - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    let mut cur = Vec::new();
    rec(n, width_bound.unwrap_or(n), length_bound.unwrap_or(n), &mut cur, &mut out);
    out
}

/// Every partition of size at most `max_size` within the bounds, graded by
/// size and lexicographically decreasing within a size.
pub fn enumerate_partitions(
    max_size: usize,
    width_bound: Option<usize>,
    length_bound: Option<usize>,
) -> impl Iterator<Item = Partition> {
    (0..=max_size).flat_map(move |n| partitions_of(n, width_bound, length_bound))
}

/// Partitions contained in the `rows × cols` rectangle.
pub fn partitions_in_box(rows: usize, cols: usize) -> Vec<Partition> {
    enumerate_partitions(rows * cols, Some(cols), Some(rows)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn count_syt(p: &Partition) -> u64 {
        if p.is_empty() {
            return 1;
        }
        p.remove_corners().iter().map(count_syt).sum()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(part(&[3, 2, 2]).conjugate(), part(&[3, 3, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(part(&[5]).conjugate(), part(&[1, 1, 1, 1, 1]));
    }

    #[test]
    fn odd_count_examples() {
        assert_eq!(part(&[3, 2, 2]).odd_counts(), (1, 3));
        assert_eq!(Partition::empty().odd_counts(), (0, 0));
        assert_eq!(part(&[2, 2]).odd_counts(), (0, 0));
    }

    #[test]
    fn enumeration_order() {
        let got: Vec<_> = enumerate_partitions(3, Some(2), None).collect();
        let want = vec![
            Partition::empty(),
            part(&[1]),
            part(&[2]),
            part(&[1, 1]),
            part(&[2, 1]),
            part(&[1, 1, 1]),
        ];
        assert_eq!(got, want);
        assert_eq!(enumerate_partitions(0, None, None).collect::<Vec<_>>(), vec![Partition::empty()]);
        assert_eq!(enumerate_partitions(4, None, None).count(), 12);
    }

    #[test]
    fn vertical_strips() {
        assert!(is_vertical_strip(&part(&[1]), &part(&[2, 1])));
        assert!(!is_vertical_strip(&part(&[1]), &part(&[3, 1])));
        assert!(!is_vertical_strip(&part(&[2, 1]), &part(&[1, 1])));
    }

    #[test]
    fn hook_examples() {
        assert_eq!(part(&[2, 1]).hook_count(), BigInt::from(2));
        assert_eq!(Partition::empty().hook_count(), BigInt::from(1));
        assert_eq!(part(&[2, 2]).hook_count(), BigInt::from(2));
    }

    #[test]
    fn hook_matches_enumeration() {
        for p in enumerate_partitions(8, None, None) {
            assert_eq!(p.hook_count(), BigInt::from(count_syt(&p)), "{p}");
        }
    }

    #[test]
    fn index_sequences() {
        assert_eq!(part(&[2, 1]).index_sequence(2).unwrap(), vec![2, 4]);
        assert_eq!(Partition::empty().index_sequence(3).unwrap(), vec![1, 2, 3]);
        assert_eq!(part(&[3]).index_sequence(1).unwrap(), vec![4]);
        assert!(part(&[1, 1]).index_sequence(1).is_err());
    }

    #[test]
    fn involution_and_oddness() {
        for p in enumerate_partitions(10, None, None) {
            assert_eq!(p.conjugate().conjugate(), p);
            assert_eq!(p.odd_counts().0, p.conjugate().odd_counts().1);
            let seq = p.index_sequence(p.length().max(1)).unwrap();
            assert!(seq.windows(2).all(|w| w[0] < w[1]));
            assert_eq!(*seq.last().unwrap(), p.width() + p.length().max(1));
        }
    }

    #[test]
    fn text_round_trip() {
        assert_eq!("3,2,2".parse::<Partition>().unwrap(), part(&[3, 2, 2]));
        assert_eq!("0".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("".parse::<Partition>().unwrap(), Partition::empty());
        assert!("1,2".parse::<Partition>().is_err());
        assert_eq!(part(&[4, 1]).to_string(), "4,1");
    }
}
