//! Symmetric polynomials in finitely many variables: generators, Schur
//! polynomials, and the `f_r = Σ_m e_m e_{m+r}` family.

use crate::matrix::det_of;
use crate::partition::Partition;
use crate::poly::{MultiPoly, PolySpace};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum GeneratorKind {
    Elementary,
    Complete,
    PowerSum,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SchurMethod {
    /// Determinant of complete symmetric polynomials, size `ℓ(λ)`.
    JtH,
    /// Determinant of elementary symmetric polynomials, size `λ_1`.
    JtE,
    /// Sum over semistandard tableaux.
    SsytOracle,
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Exponent vectors of length `n` summing to `k`.
fn compositions(k: usize, n: usize) -> Vec<Vec<i32>> {
    if n == 0 {
        return if k == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in (0..=k).rev() {
        for mut rest in compositions(k - first, n - 1) {
            rest.insert(0, first as i32);
            out.push(rest);
        }
    }
    out
}

pub fn elementary(k: i64, n: usize) -> MultiPoly {
    let space = PolySpace::plain(n);
    if k < 0 || k as usize > n {
        return MultiPoly::zero(space);
    }
    let terms = subsets(n, k as usize).into_iter().map(|s| {
        let mut e = vec![0; n];
        for i in s {
            e[i] = 1;
        }
        (e, BigInt::one())
    });
    MultiPoly::from_terms(space, terms).expect("valid exponents")
}

pub fn complete(k: i64, n: usize) -> MultiPoly {
    let space = PolySpace::plain(n);
    if k < 0 {
        return MultiPoly::zero(space);
    }
    let terms = compositions(k as usize, n).into_iter().map(|e| (e, BigInt::one()));
    MultiPoly::from_terms(space, terms).expect("valid exponents")
}

/// `p_k = Σ x_i^k`; `p_0` is taken to be `n`.
pub fn power_sum(k: i64, n: usize) -> MultiPoly {
    let space = PolySpace::plain(n);
    if k < 0 {
        return MultiPoly::zero(space);
    }
    let mut acc = MultiPoly::zero(space);
    for i in 0..n {
        acc = &acc + &MultiPoly::var(space, i).pow(k as u32);
    }
    acc
}

pub fn generator_basis(kind: GeneratorKind, k: i64, n: usize) -> MultiPoly {
    match kind {
        GeneratorKind::Elementary => elementary(k, n),
        GeneratorKind::Complete => complete(k, n),
        GeneratorKind::PowerSum => power_sum(k, n),
    }
}

/// `det(h_{λ_i - i + j})` of size `size ≥ ℓ(λ)`.
pub fn schur_jt_h(lambda: &Partition, n: usize, size: usize) -> MultiPoly {
    assert!(size >= lambda.length(), "matrix too small for partition");
    let unit = MultiPoly::one(PolySpace::plain(n));
    let h: HashMap<i64, MultiPoly> = (0..=(lambda.width() + size) as i64).map(|k| (k, complete(k, n))).collect();
    det_of(size, &unit, |i, j| {
        let idx = lambda.part(i - 1) as i64 - i as i64 + j as i64;
        h.get(&idx).cloned().unwrap_or_else(|| complete(idx, n))
    })
}

/// `det(e_{λ'_i - i + j})` of size `size ≥ λ_1`.
pub fn schur_jt_e(lambda: &Partition, n: usize, size: usize) -> MultiPoly {
    assert!(size >= lambda.width(), "matrix too small for partition");
    let conj = lambda.conjugate();
    let unit = MultiPoly::one(PolySpace::plain(n));
    let e: Vec<MultiPoly> = (0..=n as i64).map(|k| elementary(k, n)).collect();
    det_of(size, &unit, |i, j| {
        let idx = conj.part(i - 1) as i64 - i as i64 + j as i64;
        if idx < 0 || idx as usize > n {
            MultiPoly::zero(PolySpace::plain(n))
        } else {
            e[idx as usize].clone()
        }
    })
}

/// Sum over semistandard fillings with entries `1..=n`.
pub fn schur_ssyt(lambda: &Partition, n: usize) -> MultiPoly {
    let space = PolySpace::plain(n);
    let cells: Vec<(usize, usize)> =
        (0..lambda.length()).flat_map(|r| (0..lambda.part(r)).map(move |c| (r, c))).collect();
    let mut grid: Vec<Vec<usize>> = lambda.parts().iter().map(|&p| vec![0; p]).collect();
    let mut counts: BTreeMap<Vec<i32>, BigInt> = BTreeMap::new();
    fn rec(
        idx: usize,
        cells: &[(usize, usize)],
        grid: &mut Vec<Vec<usize>>,
        n: usize,
        counts: &mut BTreeMap<Vec<i32>, BigInt>,
    ) {
        if idx == cells.len() {
            let mut e = vec![0i32; n];
            for row in grid.iter() {
                for &v in row {
                    e[v - 1] += 1;
                }
            }
            *counts.entry(e).or_insert_with(BigInt::zero) += 1;
            return;
        }
        let (r, c) = cells[idx];
        let lo_row = if c > 0 { grid[r][c - 1] } else { 1 };
        let lo_col = if r > 0 { grid[r - 1][c] + 1 } else { 1 };
        for v in lo_row.max(lo_col)..=n {
            grid[r][c] = v;
            rec(idx + 1, cells, grid, n, counts);
        }
        grid[r][c] = 0;
    }
    rec(0, &cells, &mut grid, n, &mut counts);
    MultiPoly::from_terms(space, counts).expect("valid exponents")
}

/// Schur polynomial `s_λ(x_1..x_n)`, zero when `ℓ(λ) > n`.
pub fn schur_poly(lambda: &Partition, n: usize, method: SchurMethod) -> MultiPoly {
    if lambda.length() > n {
        return MultiPoly::zero(PolySpace::plain(n));
    }
    match method {
        SchurMethod::JtH => schur_jt_h(lambda, n, lambda.length()),
        SchurMethod::JtE => schur_jt_e(lambda, n, lambda.width()),
        SchurMethod::SsytOracle => schur_ssyt(lambda, n),
    }
}

/// `f_r = Σ_m e_m e_{m+|r|}` in `n` variables.
pub fn f_series(r: i64, n: usize) -> MultiPoly {
    let r = r.unsigned_abs() as i64;
    let mut acc = MultiPoly::zero(PolySpace::plain(n));
    for m in 0..=n as i64 - r {
        acc = &acc + &(&elementary(m, n) * &elementary(m + r, n));
    }
    acc
}

/// `Σ_k e_k` or, when `signed`, `Σ_k (-1)^k e_k`.
pub fn e_sum_series(n: usize, signed: bool) -> MultiPoly {
    let mut acc = MultiPoly::zero(PolySpace::plain(n));
    for k in 0..=n as i64 {
        let e = elementary(k, n);
        acc = if signed && k % 2 == 1 { &acc - &e } else { &acc + &e };
    }
    acc
}

/// Memoizes `e_k`, `f_r` and Schur polynomials for a fixed variable count.
#[derive(Debug, Clone)]
pub struct SymCache {
    n: usize,
    f: HashMap<u64, MultiPoly>,
    schur: HashMap<Partition, MultiPoly>,
}

impl SymCache {
    pub fn new(n: usize) -> Self {
        SymCache { n, f: HashMap::new(), schur: HashMap::new() }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn space(&self) -> PolySpace {
        PolySpace::plain(self.n)
    }

    pub fn f(&mut self, r: i64) -> MultiPoly {
        let n = self.n;
        self.f.entry(r.unsigned_abs()).or_insert_with(|| f_series(r, n)).clone()
    }

    pub fn schur(&mut self, lambda: &Partition) -> MultiPoly {
        let n = self.n;
        self.schur.entry(lambda.clone()).or_insert_with(|| schur_poly(lambda, n, SchurMethod::JtH)).clone()
    }

    /// Realizes a formal combination of `f`'s.
    pub fn materialize(&mut self, comb: &FComb) -> MultiPoly {
        let mut acc = MultiPoly::zero(self.space());
        for (&r, c) in &comb.terms {
            acc = &acc + &self.f(r as i64).scale(c);
        }
        acc
    }
}

/// A finite formal sum `Σ c_r f_r`, with `f_{-r}` folded onto `f_r`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct FComb {
    terms: BTreeMap<u64, BigInt>,
}

impl FComb {
    pub fn zero() -> Self {
        FComb::default()
    }

    pub fn f(r: i64) -> Self {
        let mut c = FComb::zero();
        c.add_term(r, BigInt::one());
        c
    }

    pub fn add_term(&mut self, r: i64, c: BigInt) {
        let key = r.unsigned_abs();
        let v = self.terms.entry(key).or_insert_with(BigInt::zero);
        *v += c;
        if v.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.terms.iter().map(|(&k, v)| (k, v))
    }

    pub fn coefficient(&self, r: i64) -> BigInt {
        self.terms.get(&r.unsigned_abs()).cloned().unwrap_or_default()
    }

    pub fn plus(&self, other: &FComb) -> FComb {
        let mut out = self.clone();
        for (&k, v) in &other.terms {
            out.add_term(k as i64, v.clone());
        }
        out
    }

    pub fn scaled(&self, c: i64) -> FComb {
        let mut out = FComb::zero();
        for (&k, v) in &self.terms {
            out.add_term(k as i64, v * c);
        }
        out
    }

    pub fn minus(&self, other: &FComb) -> FComb {
        self.plus(&other.scaled(-1))
    }

    /// One application of `f_i ↦ f_{i-1} + f_{i+1}`.
    pub fn skew_step(&self) -> FComb {
        let mut out = FComb::zero();
        for (&k, v) in &self.terms {
            let k = k as i64;
            out.add_term(k - 1, v.clone());
            out.add_term(k + 1, v.clone());
        }
        out
    }

    pub fn materialize(&self, n: usize) -> MultiPoly {
        SymCache::new(n).materialize(self)
    }
}

impl fmt::Display for FComb {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(k, v)| if v.is_one() { format!("f_{k}") } else { format!("{v}*f_{k}") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * (n - i) / (i + 1);
    }
    acc
}

/// `Σ_{r=0}^{j} C(j, r) f_{i-j+2r}`: the image of `f_i` under the `j`-th
/// power of the skewing operator.
pub fn f_skew_power(j: u64, i: i64) -> FComb {
    let mut out = FComb::zero();
    for r in 0..=j {
        out.add_term(i - j as i64 + 2 * r as i64, binomial(j, r));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{enumerate_partitions, part};

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(PolySpace::plain(n), i)
    }

    #[test]
    fn generators() {
        let e2 = &(&(&x(3, 0) * &x(3, 1)) + &(&x(3, 0) * &x(3, 2))) + &(&x(3, 1) * &x(3, 2));
        assert_eq!(elementary(2, 3), e2);
        assert!(elementary(4, 3).is_zero());
        let h2 = &(&x(2, 0).pow(2) + &(&x(2, 0) * &x(2, 1))) + &x(2, 1).pow(2);
        assert_eq!(complete(2, 2), h2);
        assert_eq!(generator_basis(GeneratorKind::PowerSum, 3, 2), &x(2, 0).pow(3) + &x(2, 1).pow(3));
        assert!(elementary(-1, 2).is_zero());
        assert_eq!(complete(0, 2), MultiPoly::one(PolySpace::plain(2)));
    }

    #[test]
    fn schur_examples() {
        assert_eq!(schur_poly(&part(&[1, 1]), 2, SchurMethod::JtE), &x(2, 0) * &x(2, 1));
        let want = &(&x(2, 0).pow(2) * &x(2, 1)) + &(&x(2, 0) * &x(2, 1).pow(2));
        assert_eq!(schur_poly(&part(&[2, 1]), 2, SchurMethod::SsytOracle), want);
        assert!(schur_poly(&part(&[1, 1, 1]), 2, SchurMethod::JtH).is_zero());
        let s21 = schur_poly(&part(&[2, 1]), 3, SchurMethod::SsytOracle);
        assert_eq!(s21.squarefree_coefficient(), BigInt::from(2));
    }

    #[test]
    fn schur_methods_agree() {
        for n in 1..=3 {
            for p in enumerate_partitions(6, None, None) {
                let a = schur_poly(&p, n, SchurMethod::JtH);
                let b = schur_poly(&p, n, SchurMethod::JtE);
                let c = schur_poly(&p, n, SchurMethod::SsytOracle);
                assert_eq!(a, b, "{p} n={n}");
                assert_eq!(a, c, "{p} n={n}");
            }
        }
    }

    #[test]
    fn padding_does_not_change_schur() {
        for p in enumerate_partitions(4, None, Some(2)) {
            let base = schur_poly(&p, 2, SchurMethod::JtH);
            assert_eq!(schur_jt_h(&p, 2, p.length() + 2), base);
            assert_eq!(schur_jt_e(&p, 2, p.width() + 2), base);
        }
    }

    #[test]
    fn f_examples() {
        let one = MultiPoly::one(PolySpace::plain(1));
        assert_eq!(f_series(0, 1), &one + &x(1, 0).pow(2));
        assert_eq!(f_series(1, 1), x(1, 0));
        assert!(f_series(3, 2).is_zero());
        for n in 1..=3 {
            for r in 0..=2 * n as i64 {
                assert_eq!(f_series(r, n), f_series(-r, n));
            }
        }
    }

    #[test]
    fn e_sums() {
        let one = MultiPoly::one(PolySpace::plain(1));
        assert_eq!(e_sum_series(1, false), &one + &x(1, 0));
        assert_eq!(e_sum_series(1, true), &one - &x(1, 0));
        for n in 1..=4 {
            let sp = PolySpace::plain(n);
            let mut prod = MultiPoly::one(sp);
            for i in 0..n {
                prod = &prod * &(&MultiPoly::one(sp) - &x(n, i).pow(2));
            }
            assert_eq!(&e_sum_series(n, false) * &e_sum_series(n, true), prod);
        }
    }

    #[test]
    fn skew_power_examples() {
        assert_eq!(f_skew_power(0, 5), FComb::f(5));
        assert_eq!(f_skew_power(1, 0), FComb::f(1).scaled(2));
        assert_eq!(f_skew_power(2, 1), FComb::f(1).scaled(3).plus(&FComb::f(3)));
    }

    #[test]
    fn skew_power_matches_repeated_substitution() {
        for n in 1..=3 {
            for i in -3..=4i64 {
                let mut c = FComb::f(i);
                for j in 0..=4u64 {
                    assert_eq!(f_skew_power(j, i), c);
                    assert_eq!(f_skew_power(j, i).materialize(n), c.materialize(n));
                    c = c.skew_step();
                }
            }
        }
    }
}
