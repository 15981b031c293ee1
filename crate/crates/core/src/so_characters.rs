//! Characters of the even orthogonal Lie algebra `so_{2n}` as Laurent
//! polynomials, from Jacobi–Trudi-type determinants in `e_r(x^{±1})`, and the
//! nearly rectangular character identity.

use crate::error::{LabError, Result};
use crate::matrix::det_of;
use crate::partition::{partitions_in_box, Partition};
use crate::poly::{MultiPoly, PolySpace};
use crate::report::{Params, VerifyReport};
use crate::symfunc::{FComb, SymCache};
use num_bigint::BigInt;
use std::fmt;
use std::str::FromStr;

/// A dominant weight `λ_1 ≥ … ≥ λ_{n-1} ≥ |λ_n|`, all integers or all
/// half-integers. Entries are stored doubled.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct HighestWeight {
    twice: Vec<i64>,
}

impl HighestWeight {
    pub fn from_doubled(twice: Vec<i64>) -> Result<Self> {
        if let Some(first) = twice.first() {
            let parity = first.rem_euclid(2);
            if twice.iter().any(|t| t.rem_euclid(2) != parity) {
                return Err(LabError::InvalidPartition("weight mixes integers and half-integers".into()));
            }
        }
        let n = twice.len();
        let ordered = twice.windows(2).take(n.saturating_sub(2)).all(|p| p[0] >= p[1])
            && (n < 2 || twice[n - 2] >= twice[n - 1].abs());
        if !ordered {
            return Err(LabError::InvalidPartition(format!("weight {twice:?} (doubled) is not dominant")));
        }
        Ok(HighestWeight { twice })
    }

    pub fn integral(parts: &[i64]) -> Result<Self> {
        Self::from_doubled(parts.iter().map(|p| 2 * p).collect())
    }

    /// `(c, …, c, c - k)` with `n` entries and `c = twice_c / 2`.
    pub fn nearly_rectangular(twice_c: i64, k: i64, n: usize) -> Result<Self> {
        let mut t = vec![twice_c; n];
        if let Some(last) = t.last_mut() {
            *last -= 2 * k;
        }
        Self::from_doubled(t)
    }

    pub fn n(&self) -> usize {
        self.twice.len()
    }

    pub fn doubled(&self) -> &[i64] {
        &self.twice
    }

    pub fn is_half_integral(&self) -> bool {
        self.twice.first().is_some_and(|t| t.rem_euclid(2) == 1)
    }

    /// The weight with its last entry negated.
    pub fn sharp(&self) -> Self {
        let mut t = self.twice.clone();
        if let Some(last) = t.last_mut() {
            *last = -*last;
        }
        HighestWeight { twice: t }
    }

    /// The partition `λ` (integral case) or `λ - 1/2` (half-integral case),
    /// valid when the last entry is nonnegative.
    pub fn base_partition(&self) -> Result<Partition> {
        if self.twice.last().is_some_and(|&t| t < 0) {
            return Err(LabError::InvalidPartition("negative last entry".into()));
        }
        let shift = i64::from(self.is_half_integral());
        Ok(Partition::from_unsorted(self.twice.iter().map(|t| ((t - shift) / 2) as usize).collect()))
    }
}

impl fmt::Display for HighestWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .twice
            .iter()
            .map(|t| if t % 2 == 0 { (t / 2).to_string() } else { format!("{t}/2") })
            .collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `e_r(x_1, …, x_n, x_1^{-1}, …, x_n^{-1})` in Laurent mode.
pub fn laurent_elementary(r: i64, n: usize) -> MultiPoly {
    let space = PolySpace::laurent(n);
    if r < 0 || r > 2 * n as i64 {
        return MultiPoly::zero(space);
    }
    // coefficients of t^k in ∏ (1 + t x_i)(1 + t / x_i)
    let mut layers = vec![MultiPoly::one(space)];
    for i in 0..n {
        for sign in [2, -2] {
            let mut e = vec![0; n];
            e[i] = sign;
            let x = MultiPoly::monomial(space, e, 1).expect("dimension matches");
            let mut next = layers.clone();
            next.push(MultiPoly::zero(space));
            for k in 0..layers.len() {
                next[k + 1] = &next[k + 1] + &(&layers[k] * &x);
            }
            layers = next;
        }
    }
    layers.swap_remove(r as usize)
}

fn product_over_vars(n: usize, plus: i32, minus: i32, sign: i64) -> MultiPoly {
    let space = PolySpace::laurent(n);
    let mut acc = MultiPoly::one(space);
    for i in 0..n {
        let mut a = vec![0; n];
        a[i] = plus;
        let mut b = vec![0; n];
        b[i] = minus;
        let factor = MultiPoly::from_terms(space, [(a, BigInt::from(1)), (b, BigInt::from(sign))]).expect("dimension matches");
        acc = &acc * &factor;
    }
    acc
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum OrthKind {
    /// `sorth_λ + sorth_{λ#}`, or `sorth_λ` when the last entry is zero.
    OPlus,
    /// `sorth_λ - sorth_{λ#}`, or zero when the last entry is zero.
    OBar,
    Sorth,
}

impl FromStr for OrthKind {
    type Err = LabError;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "o_plus" => Ok(OrthKind::OPlus),
            "o_bar" => Ok(OrthKind::OBar),
            "sorth" => Ok(OrthKind::Sorth),
            _ => Err(LabError::Unknown(format!("character kind {s}"))),
        }
    }
}

/// The determinant formulas, for `λ` (or `λ + 1/2` when `shift_half`).
pub fn orthogonal_character(lambda: &Partition, n: usize, shift_half: bool, kind: OrthKind) -> Result<MultiPoly> {
    if lambda.length() > n {
        return Err(LabError::TooLong { length: lambda.length(), bound: n });
    }
    let space = PolySpace::laurent(n);
    let unit = MultiPoly::one(space);
    let conj = lambda.conjugate();
    let col = |i: usize| conj.part(i - 1) as i64;
    let e = |r: i64| laurent_elementary(r, n);
    let size = lambda.width();
    match (kind, shift_half) {
        (OrthKind::OPlus, false) => {
            // the first column is 2 e_{λ'_i - i + 1}; halving it absorbs the 1/2
            Ok(det_of(size, &unit, |i, j| {
                let (i, j) = (i as i64, j as i64);
                let a = col(i as usize) - i;
                if j == 1 {
                    e(a + 1)
                } else {
                    &e(a + j) + &e(a - j + 2)
                }
            }))
        }
        (OrthKind::OBar, false) => {
            if lambda.length() < n {
                return Err(LabError::OutOfRange(format!("o_bar of {lambda} needs length {n}")));
            }
            // rows and columns 2..=λ_1; the lower index is shifted by 2 as in o_λ
            let d = det_of(size.saturating_sub(1), &unit, |i, j| {
                let (i, j) = (i as i64 + 1, j as i64 + 1);
                let a = col(i as usize) - i;
                &e(a + j) - &e(a - j + 2)
            });
            Ok(&product_over_vars(n, 2, -2, -1) * &d)
        }
        (OrthKind::OPlus | OrthKind::OBar, true) => {
            let plus = kind == OrthKind::OPlus;
            let d = det_of(size, &unit, |i, j| {
                let (i, j) = (i as i64, j as i64);
                let a = col(i as usize) - i;
                if plus {
                    &e(a + j) - &e(a - j + 1)
                } else {
                    &e(a + j) + &e(a - j + 1)
                }
            });
            Ok(&product_over_vars(n, 1, -1, if plus { 1 } else { -1 }) * &d)
        }
        (OrthKind::Sorth, _) => {
            if !shift_half && lambda.length() < n {
                return orthogonal_character(lambda, n, false, OrthKind::OPlus);
            }
            let o = orthogonal_character(lambda, n, shift_half, OrthKind::OPlus)?;
            let ob = orthogonal_character(lambda, n, shift_half, OrthKind::OBar)?;
            (&o + &ob).div_exact(&BigInt::from(2))
        }
    }
}

/// The irreducible character with highest weight `hw`; a negative last entry
/// is handled through `sorth_λ = (o_{λ#} - ō_{λ#}) / 2`.
pub fn sorth(hw: &HighestWeight) -> Result<MultiPoly> {
    let n = hw.n();
    let half = hw.is_half_integral();
    let last = hw.doubled().last().copied().unwrap_or(0);
    if last >= 0 {
        return orthogonal_character(&hw.base_partition()?, n, half, OrthKind::Sorth);
    }
    let base = hw.sharp().base_partition()?;
    let o = orthogonal_character(&base, n, half, OrthKind::OPlus)?;
    let ob = orthogonal_character(&base, n, half, OrthKind::OBar)?;
    (&o - &ob).div_exact(&BigInt::from(2))
}

/// Number of odd columns of the skew shape `((width)^rows) / λ`.
pub fn complement_odd_columns(lambda: &Partition, rows: usize, width: usize) -> usize {
    let conj = lambda.conjugate();
    (0..width).filter(|&j| (rows - conj.part(j)) % 2 == 1).count()
}

/// `Σ s_λ(x_n)` over `λ ⊆ ((width)^n)` whose complement has `k` odd columns,
/// in Laurent mode.
pub fn rectangle_schur_sum(cache: &mut SymCache, width: usize, k: Option<usize>) -> MultiPoly {
    let n = cache.n();
    let mut acc = MultiPoly::zero(PolySpace::laurent(n));
    for lambda in partitions_in_box(n, width) {
        if k.map_or(true, |k| complement_odd_columns(&lambda, n, width) == k) {
            acc = &acc + &cache.schur(&lambda).to_laurent();
        }
    }
    acc
}

/// `(x_1 ⋯ x_n)^{c}` times `sorth_{(c^{n-1}, c-k)}`, where `c = twice_c / 2`.
pub fn kratt_character_side(twice_c: i64, k: i64, n: usize) -> Result<MultiPoly> {
    let hw = HighestWeight::nearly_rectangular(twice_c, k, n)?;
    sorth(&hw)?.shift(&vec![twice_c as i32; n])
}

/// Checks the nearly rectangular identity for one `(c, k, n)`, plus the
/// specialisation `f_r(x_n) = (x_1 ⋯ x_n) e_{n-r}(x_n^{±1})` for `|r| ≤ n`.
pub fn verify_kratt(twice_c: i64, k: i64, n: usize) -> Vec<VerifyReport> {
    let c_text = if twice_c % 2 == 0 { (twice_c / 2).to_string() } else { format!("{twice_c}/2") };
    let params = || Params::new().with("c", c_text.clone()).with("k", k).with("n", n);
    let mut out = Vec::new();
    if twice_c < 0 || k < 0 || k > twice_c || n == 0 {
        out.push(VerifyReport::new("kratt", params()).texts("parameters outside 0 ≤ k ≤ 2c, n ≥ 1", "").informational());
        return out;
    }
    let mut cache = SymCache::new(n);
    let rhs = rectangle_schur_sum(&mut cache, twice_c as usize, Some(k as usize));
    match kratt_character_side(twice_c, k, n) {
        Ok(lhs) => out.push(VerifyReport::new("kratt", params()).polys(&lhs, &rhs)),
        Err(e) => out.push(VerifyReport::new("kratt", params()).texts(&e.to_string(), &rhs.to_string())),
    }
    out.extend(verify_specialization(n));
    out
}

pub fn verify_specialization(n: usize) -> Vec<VerifyReport> {
    let shift = vec![2; n];
    (-(n as i64)..=n as i64)
        .map(|r| {
            let lhs = FComb::f(r).materialize(n).to_laurent();
            let rhs = laurent_elementary(n as i64 - r, n).shift(&shift).expect("dimension matches");
            VerifyReport::new("f_specialization", Params::new().with("r", r).with("n", n)).polys(&lhs, &rhs)
        })
        .collect()
}

/// All `(c, k)` with `2c ≤ twice_c_max` for each `n ≤ n_max`.
pub fn verify_kratt_grid(twice_c_max: i64, n_max: usize) -> Vec<VerifyReport> {
    let mut out = Vec::new();
    for n in 1..=n_max {
        for twice_c in 0..=twice_c_max {
            for k in 0..=twice_c {
                out.extend(verify_kratt(twice_c, k, n).into_iter().filter(|r| r.theorem == "kratt"));
            }
        }
        out.extend(verify_specialization(n));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::part;

    fn lp(n: usize, terms: &[(&[i32], i64)]) -> MultiPoly {
        MultiPoly::from_terms(PolySpace::laurent(n), terms.iter().map(|(e, c)| (e.to_vec(), BigInt::from(*c)))).unwrap()
    }

    #[test]
    fn elementary_examples() {
        assert_eq!(laurent_elementary(1, 1), lp(1, &[(&[2], 1), (&[-2], 1)]));
        assert_eq!(laurent_elementary(2, 1), lp(1, &[(&[0], 1)]));
        assert_eq!(laurent_elementary(0, 3), MultiPoly::one(PolySpace::laurent(3)));
        assert!(laurent_elementary(3, 1).is_zero());
        assert!(laurent_elementary(-1, 2).is_zero());
    }

    #[test]
    fn half_shift_examples() {
        let e = Partition::empty();
        assert_eq!(orthogonal_character(&e, 1, true, OrthKind::OPlus).unwrap(), lp(1, &[(&[1], 1), (&[-1], 1)]));
        assert_eq!(orthogonal_character(&e, 1, true, OrthKind::OBar).unwrap(), lp(1, &[(&[1], 1), (&[-1], -1)]));
        assert_eq!(orthogonal_character(&e, 1, true, OrthKind::Sorth).unwrap(), lp(1, &[(&[1], 1)]));
    }

    #[test]
    fn trivial_and_rank_one() {
        assert_eq!(orthogonal_character(&Partition::empty(), 2, false, OrthKind::Sorth).unwrap(), MultiPoly::one(PolySpace::laurent(2)));
        // so_2 characters are single monomials
        for a in -3..=3i64 {
            let hw = HighestWeight::integral(&[a]).unwrap();
            assert_eq!(sorth(&hw).unwrap(), lp(1, &[(&[2 * a as i32], 1)]));
        }
        assert!(orthogonal_character(&part(&[1]), 2, false, OrthKind::OBar).is_err());
        assert!(orthogonal_character(&part(&[1, 1, 1]), 2, false, OrthKind::OPlus).is_err());
    }

    #[test]
    fn vector_representation() {
        // the natural representation of so_4 has weights ±x_1, ±x_2
        let v = sorth(&HighestWeight::integral(&[1, 0]).unwrap()).unwrap();
        assert_eq!(v, laurent_elementary(1, 2));
        let spin = sorth(&HighestWeight::from_doubled(vec![1, 1]).unwrap()).unwrap();
        assert_eq!(spin, lp(2, &[(&[1, 1], 1), (&[-1, -1], 1)]));
        let spin_bar = sorth(&HighestWeight::from_doubled(vec![1, -1]).unwrap()).unwrap();
        assert_eq!(spin_bar, lp(2, &[(&[1, -1], 1), (&[-1, 1], 1)]));
    }

    #[test]
    fn o_bar_against_rank_two_characters() {
        // so_4 = sl_2 + sl_2: sorth_(a,b) = χ_{a+b}((x1 x2)^{1/2}) χ_{a-b}((x1/x2)^{1/2})
        let chi = |m: i64, sign: i32| {
            let terms: Vec<(Vec<i32>, BigInt)> =
                (0..=m).map(|t| { let d = (m - 2 * t) as i32; (vec![d, sign * d], BigInt::from(1)) }).collect();
            MultiPoly::from_terms(PolySpace::laurent(2), terms).unwrap()
        };
        for a in 0..=3i64 {
            for b in -a..=a {
                let want = &chi(a + b, 1) * &chi(a - b, -1);
                assert_eq!(sorth(&HighestWeight::integral(&[a, b]).unwrap()).unwrap(), want, "({a},{b})");
            }
        }
    }

    #[test]
    fn weights_validate() {
        assert!(HighestWeight::from_doubled(vec![2, 1]).is_err());
        assert!(HighestWeight::integral(&[1, 2]).is_err());
        assert!(HighestWeight::integral(&[1, -1]).is_ok());
        assert!(HighestWeight::integral(&[1, -2]).is_err());
        assert_eq!(HighestWeight::from_doubled(vec![3, -1]).unwrap().to_string(), "(3/2,-1/2)");
    }

    #[test]
    fn kratt_examples() {
        for r in verify_kratt(1, 0, 1) {
            assert!(r.passed(), "{r:?}");
        }
        for k in 0..=2 {
            for r in verify_kratt(2, k, 2) {
                assert!(r.passed(), "{r:?}");
            }
        }
        let f0 = verify_specialization(1).into_iter().find(|r| r.params["r"] == 0).unwrap();
        assert!(f0.passed());
    }

    #[test]
    fn kratt_grid() {
        for r in verify_kratt_grid(4, 3) {
            assert!(r.passed(), "{r:?}");
        }
    }

    #[test]
    fn kratt_sums_over_k() {
        for n in 1..=2 {
            let mut cache = SymCache::new(n);
            for twice_c in 0..=3 {
                let total = (0..=twice_c).fold(MultiPoly::zero(PolySpace::laurent(n)), |acc, k| {
                    &acc + &kratt_character_side(twice_c, k, n).unwrap()
                });
                assert_eq!(total, rectangle_schur_sum(&mut cache, twice_c as usize, None));
            }
        }
    }

    #[test]
    fn complement_rule() {
        for w in 0..=2 {
            for n in 1..=3 {
                for lambda in partitions_in_box(n, 2 * w) {
                    let want = if n % 2 == 0 { lambda.odd_columns() } else { 2 * w - lambda.odd_columns() };
                    assert_eq!(complement_odd_columns(&lambda, n, 2 * w), want);
                }
            }
        }
    }

    #[test]
    fn sum_of_elementaries_factorises() {
        for n in 1..=3 {
            let total = (0..=n).fold(MultiPoly::zero(PolySpace::plain(n)), |acc, k| &acc + &crate::symfunc::elementary(k as i64, n));
            let rhs = product_over_vars(n, 1, -1, 1).shift(&vec![1; n]).unwrap();
            assert_eq!(total.to_laurent(), rhs);
        }
    }
}
