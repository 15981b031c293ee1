//! The ring of symmetric functions truncated at a total degree, in the Schur
//! basis, with Pieri products, the skewing operator `p_1^⊥` and the Hall
//! inner product.

use crate::error::{LabError, Result};
use crate::partition::{enumerate_partitions, Partition};
use crate::poly::{MultiPoly, PolySpace};
use crate::report::{Params, VerifyReport};
use crate::symfunc::{binomial, SymCache};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// `Σ c_λ s_λ` with every `|λ| ≤ degree`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SchurExpansion {
    degree: usize,
    coeffs: BTreeMap<Partition, BigInt>,
}

impl SchurExpansion {
    pub fn zero(degree: usize) -> Self {
        SchurExpansion { degree, coeffs: BTreeMap::new() }
    }

    pub fn one(degree: usize) -> Self {
        Self::schur(Partition::empty(), degree)
    }

    pub fn schur(lambda: Partition, degree: usize) -> Self {
        let mut s = Self::zero(degree);
        s.add_term(lambda, BigInt::one());
        s
    }

    /// `e_k = s_{(1^k)}`.
    pub fn elementary(k: usize, degree: usize) -> Self {
        Self::schur(Partition::from_unsorted(vec![1; k]), degree)
    }

    /// `h_k = s_{(k)}`.
    pub fn complete(k: usize, degree: usize) -> Self {
        Self::schur(Partition::from_unsorted(vec![k]), degree)
    }

    pub fn add_term(&mut self, lambda: Partition, c: BigInt) {
        if c.is_zero() || lambda.size() > self.degree {
            return;
        }
        let v = self.coeffs.entry(lambda.clone()).or_insert_with(BigInt::zero);
        *v += c;
        if v.is_zero() {
            self.coeffs.remove(&lambda);
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, lambda: &Partition) -> BigInt {
        self.coeffs.get(lambda).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BigInt)> {
        self.coeffs.iter()
    }

    pub fn truncate(&self, degree: usize) -> Self {
        let mut out = Self::zero(degree);
        for (l, c) in &self.coeffs {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn homogeneous_part(&self, d: usize) -> Self {
        let mut out = Self::zero(self.degree);
        for (l, c) in self.coeffs.iter().filter(|(l, _)| l.size() == d) {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.truncate(self.degree.min(other.degree));
        for (l, c) in &other.coeffs {
            out.add_term(l.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = Self::zero(self.degree);
        for (l, v) in &self.coeffs {
            out.add_term(l.clone(), v * c);
        }
        out
    }

    /// Multiplication by `e_k` through the Pieri rule.
    pub fn pieri_mul_e(&self, k: usize) -> Self {
        let mut out = Self::zero(self.degree);
        for (lambda, c) in &self.coeffs {
            if lambda.size() + k > self.degree {
                continue;
            }
            for mu in vertical_strip_extensions(lambda, k) {
                out.add_term(mu, c.clone());
            }
        }
        out
    }

    /// The skewing operator `p_1^⊥`: remove one corner cell in every way.
    pub fn p1_perp(&self) -> Self {
        let mut out = Self::zero(self.degree);
        for (lambda, c) in &self.coeffs {
            for mu in lambda.remove_corners() {
                out.add_term(mu, c.clone());
            }
        }
        out
    }

    pub fn p1_perp_pow(&self, j: usize) -> Self {
        (0..j).fold(self.clone(), |acc, _| acc.p1_perp())
    }

    /// Product in the truncated ring.
    ///
    /// Each `s_μ` of the right factor is written as `det(e_{μ'_i - i + j})`
    /// and that determinant is applied as a commuting operator through Pieri
    /// steps, so only the Pieri rule is ever needed.
    pub fn mul(&self, other: &Self) -> Self {
        let degree = self.degree.min(other.degree);
        let left = self.truncate(degree);
        let mut out = Self::zero(degree);
        for (mu, c) in &other.coeffs {
            out = out.add(&left.mul_schur(mu).scale(c));
        }
        out
    }

    fn mul_schur(&self, mu: &Partition) -> Self {
        let q = mu.width();
        if q == 0 {
            return self.clone();
        }
        let conj = mu.conjugate();
        let index = |r: usize, c: usize| conj.part(r) as i64 - r as i64 + c as i64;
        let mut dp: HashMap<u32, SchurExpansion> = HashMap::new();
        dp.insert(0, self.clone());
        for r in 0..q {
            let mut next: HashMap<u32, SchurExpansion> = HashMap::new();
            let mut keys: Vec<u32> = dp.keys().copied().collect();
            keys.sort_unstable();
            for mask in keys {
                for c in 0..q {
                    if mask & (1 << c) != 0 {
                        continue;
                    }
                    let k = index(r, c);
                    if k < 0 {
                        continue;
                    }
                    let mut term = dp[&mask].pieri_mul_e(k as usize);
                    if (mask >> (c + 1)).count_ones() % 2 == 1 {
                        term = term.scale(&BigInt::from(-1));
                    }
                    let key = mask | (1 << c);
                    let v = match next.remove(&key) {
                        Some(prev) => prev.add(&term),
                        None => term,
                    };
                    next.insert(key, v);
                }
            }
            dp = next;
        }
        dp.remove(&((1u32 << q) - 1)).unwrap_or_else(|| Self::zero(self.degree))
    }

    /// Image in `n` variables: `Σ c_λ s_λ(x_1..x_n)`.
    pub fn specialize(&self, n: usize) -> MultiPoly {
        let mut cache = SymCache::new(n);
        let mut acc = MultiPoly::zero(PolySpace::plain(n));
        for (l, c) in &self.coeffs {
            acc = &acc + &cache.schur(l).scale(c);
        }
        acc
    }
}

impl fmt::Display for SchurExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .coeffs
            .iter()
            .map(|(l, c)| if c.is_one() { format!("s[{l}]") } else { format!("{c}*s[{l}]") })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// All `μ ⊇ λ` with `μ/λ` a vertical strip of `k` cells.
pub fn vertical_strip_extensions(lambda: &Partition, k: usize) -> Vec<Partition> {
    let rows = lambda.length() + k;
    let mut out = Vec::new();
    let mut add = vec![0usize; rows];
    fn rec(i: usize, left: usize, lambda: &Partition, add: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if i == add.len() {
            if left == 0 {
                let parts: Vec<usize> = (0..add.len()).map(|r| lambda.part(r) + add[r]).collect();
                out.push(Partition::new(parts).expect("checked during recursion"));
            }
            return;
        }
        if add.len() - i < left {
            return;
        }
        for a in [0, 1] {
            if a > left {
                continue;
            }
            // keep rows weakly decreasing
            if i > 0 && lambda.part(i) + a > lambda.part(i - 1) + add[i - 1] {
                continue;
            }
            add[i] = a;
            rec(i + 1, left - a, lambda, add, out);
        }
        add[i] = 0;
    }
    rec(0, k, lambda, &mut add, &mut out);
    out
}

pub fn pieri_mul_e(a: &SchurExpansion, k: usize) -> SchurExpansion {
    a.pieri_mul_e(k)
}

pub fn p1_perp(a: &SchurExpansion) -> SchurExpansion {
    a.p1_perp()
}

pub fn hall_inner(a: &SchurExpansion, b: &SchurExpansion) -> Result<BigInt> {
    if a.degree != b.degree {
        return Err(LabError::OutOfRange(format!("truncation degrees differ: {} vs {}", a.degree, b.degree)));
    }
    Ok(a.coeffs.iter().filter_map(|(l, c)| b.coeffs.get(l).map(|d| c * d)).sum())
}

/// `f_i = Σ_m e_m e_{m+|i|}` in the truncated ring.
pub fn f_series_schur(i: i64, degree: usize) -> SchurExpansion {
    let r = i.unsigned_abs() as usize;
    let mut out = SchurExpansion::zero(degree);
    let mut m = 0;
    while 2 * m + r <= degree {
        let t = SchurExpansion::one(degree).pieri_mul_e(m).pieri_mul_e(m + r);
        out = out.add(&t);
        m += 1;
    }
    out
}

/// `Σ_r C(j, r) f_{i-j+2r}` in the truncated ring.
fn skew_power_closed_form(j: usize, i: i64, degree: usize) -> SchurExpansion {
    let mut out = SchurExpansion::zero(degree);
    for r in 0..=j {
        out = out.add(&f_series_schur(i - j as i64 + 2 * r as i64, degree).scale(&binomial(j as u64, r as u64)));
    }
    out
}

/// A random element of the truncated ring with small coefficients.
pub fn random_expansion(rng: &mut ChaCha8Rng, degree: usize, terms: usize) -> SchurExpansion {
    let all: Vec<Partition> = enumerate_partitions(degree, None, None).collect();
    let mut out = SchurExpansion::zero(degree);
    for _ in 0..terms {
        let l = all[rng.gen_range(0..all.len())].clone();
        out.add_term(l, BigInt::from(rng.gen_range(-3i64..=3)));
    }
    out
}

/// Checks the skew-power closed form of `f_i`, the two column-operation
/// forms built from it, and the derivation rule for `p_1^⊥`.
pub fn verify_skew_lemmas(degree: usize, i_range: std::ops::RangeInclusive<i64>, j_max: usize, seed: u64) -> Vec<VerifyReport> {
    let mut out = Vec::new();
    for i in i_range {
        let fi = f_series_schur(i, degree);
        for j in 0..=j_max {
            let d = degree - j;
            let lhs = fi.p1_perp_pow(j).truncate(d);
            let rhs = skew_power_closed_form(j, i, d);
            out.push(
                VerifyReport::new("skew_power", Params::new().with("degree", degree).with("i", i).with("j", j))
                    .texts(&lhs.to_string(), &rhs.to_string()),
            );
            if j == 0 {
                continue;
            }
            let d = degree - (j - 1);
            for sign in [1i64, -1] {
                let s = BigInt::from(sign);
                let name = if sign > 0 { "plus" } else { "minus" };
                // (p⊥)^{j-1}(f_{i-1} ± f_{i+1})
                let lhs = f_series_schur(i - 1, degree)
                    .add(&f_series_schur(i + 1, degree).scale(&s))
                    .p1_perp_pow(j - 1)
                    .truncate(d);
                let mut rhs = f_series_schur(i - j as i64, d).add(&f_series_schur(i + j as i64, d).scale(&s));
                for r in 1..j {
                    let t = j as i64 - 2 * r as i64;
                    let pair = f_series_schur(i - t, d).add(&f_series_schur(i + t, d).scale(&s));
                    rhs = rhs.add(&pair.scale(&binomial(j as u64 - 1, r as u64)));
                }
                out.push(
                    VerifyReport::new(
                        "skew_column_pair",
                        Params::new().with("degree", degree).with("i", i).with("j", j).with("sign", name),
                    )
                    .texts(&lhs.to_string(), &rhs.to_string()),
                );
                // (p⊥)^{j-1}(f_{i-1} ± f_i)
                let lhs = f_series_schur(i - 1, degree)
                    .add(&f_series_schur(i, degree).scale(&s))
                    .p1_perp_pow(j - 1)
                    .truncate(d);
                let mut rhs = f_series_schur(i - j as i64, d).add(&f_series_schur(i + j as i64 - 1, d).scale(&s));
                for r in 1..j {
                    let t = j as i64 - 2 * r as i64;
                    let pair = f_series_schur(i - t, d).add(&f_series_schur(i + t - 1, d).scale(&s));
                    rhs = rhs.add(&pair.scale(&binomial(j as u64 - 1, r as u64)));
                }
                out.push(
                    VerifyReport::new(
                        "skew_column_shifted",
                        Params::new().with("degree", degree).with("i", i).with("j", j).with("sign", name),
                    )
                    .texts(&lhs.to_string(), &rhs.to_string()),
                );
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for trial in 0..5 {
        let f = random_expansion(&mut rng, degree, 4);
        let g = random_expansion(&mut rng, degree, 4);
        out.push(derivation_report(&f, &g, trial, seed));
    }
    for (a, b) in [(2usize, 3usize), (1, 1), (2, 2)] {
        let f = SchurExpansion::elementary(a, degree);
        let g = SchurExpansion::elementary(b, degree);
        let mut r = derivation_report(&f, &g, 0, seed);
        r.params.insert("factors".into(), format!("e{a}*e{b}").into());
        out.push(r);
    }
    out
}

fn derivation_report(f: &SchurExpansion, g: &SchurExpansion, trial: usize, seed: u64) -> VerifyReport {
    let degree = f.degree();
    let lhs = f.mul(g).p1_perp().truncate(degree - 1);
    let rhs = f.p1_perp().mul(g).add(&f.mul(&g.p1_perp())).truncate(degree - 1);
    VerifyReport::new("skew_derivation", Params::new().with("degree", degree).with("trial", trial))
        .texts(&lhs.to_string(), &rhs.to_string())
        .with_seed(seed)
}

/// `⟨p_1^⊥ a, b⟩ = ⟨a, s_1 b⟩` on random pairs.
pub fn verify_adjointness(degree: usize, pairs: usize, seed: u64) -> Vec<VerifyReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..pairs)
        .map(|t| {
            let a = random_expansion(&mut rng, degree, 5);
            let b = random_expansion(&mut rng, degree, 5);
            let lhs = hall_inner(&a.p1_perp(), &b).expect("same degree");
            let rhs = hall_inner(&a, &b.pieri_mul_e(1)).expect("same degree");
            VerifyReport::new("skew_adjoint", Params::new().with("degree", degree).with("trial", t))
                .ints(&lhs, &rhs)
                .with_seed(seed)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::part;
    use crate::report::all_passed;

    fn s(p: &[usize], d: usize) -> SchurExpansion {
        SchurExpansion::schur(part(p), d)
    }

    #[test]
    fn pieri_examples() {
        assert_eq!(SchurExpansion::one(4).pieri_mul_e(2), s(&[1, 1], 4));
        assert_eq!(s(&[1], 4).pieri_mul_e(1), s(&[2], 4).add(&s(&[1, 1], 4)));
        assert_eq!(s(&[2], 4).pieri_mul_e(2), s(&[3, 1], 4).add(&s(&[2, 1, 1], 4)));
        assert!(s(&[2], 3).pieri_mul_e(2).is_zero());
    }

    #[test]
    fn perp_examples() {
        assert!(SchurExpansion::one(3).p1_perp().is_zero());
        assert_eq!(s(&[2, 1], 3).p1_perp(), s(&[1, 1], 3).add(&s(&[2], 3)));
        assert_eq!(s(&[1, 1], 3).p1_perp(), s(&[1], 3));
    }

    #[test]
    fn inner_examples() {
        assert_eq!(hall_inner(&s(&[2, 1], 4), &s(&[2, 1], 4)).unwrap(), BigInt::one());
        assert_eq!(hall_inner(&s(&[2], 4), &s(&[1, 1], 4)).unwrap(), BigInt::zero());
        let e2e1 = SchurExpansion::elementary(2, 4).pieri_mul_e(1);
        assert_eq!(hall_inner(&e2e1, &s(&[2, 1], 4)).unwrap(), BigInt::one());
        assert!(hall_inner(&s(&[1], 3), &s(&[1], 4)).is_err());
    }

    #[test]
    fn f_examples() {
        assert_eq!(f_series_schur(1, 1), s(&[1], 1));
        assert_eq!(f_series_schur(0, 0), SchurExpansion::one(0));
        assert_eq!(f_series_schur(2, 2), s(&[1, 1], 2));
        assert_eq!(f_series_schur(-2, 5), f_series_schur(2, 5));
    }

    #[test]
    fn product_matches_polynomial_model() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..6 {
            let a = random_expansion(&mut rng, 6, 3);
            let b = random_expansion(&mut rng, 6, 3);
            let ab = a.mul(&b);
            assert_eq!(ab, b.mul(&a));
            for n in 1..=3 {
                let prod = &a.specialize(n) * &b.specialize(n);
                assert_eq!(ab.specialize(n), truncate_poly(&prod, 6), "n={n}");
            }
        }
    }

    fn truncate_poly(p: &MultiPoly, d: i64) -> MultiPoly {
        let terms = p.terms().filter(|(e, _)| e.iter().map(|&x| x as i64).sum::<i64>() <= d).map(|(e, c)| (e.to_vec(), c.clone()));
        MultiPoly::from_terms(p.space(), terms).unwrap()
    }

    #[test]
    fn littlewood_richardson_spot_check() {
        // s_{21} s_{1} = s_{31} + s_{22} + s_{211}
        let got = s(&[2, 1], 4).mul(&s(&[1], 4));
        assert_eq!(got, s(&[3, 1], 4).add(&s(&[2, 2], 4)).add(&s(&[2, 1, 1], 4)));
    }

    #[test]
    fn perp_lowers_degree() {
        for l in enumerate_partitions(6, None, None).filter(|l| !l.is_empty()) {
            for (m, _) in s(l.parts(), 6).p1_perp().terms() {
                assert_eq!(m.size() + 1, l.size());
            }
        }
    }

    #[test]
    fn lemmas_hold() {
        let r = verify_skew_lemmas(6, 0..=3, 2, 1);
        assert!(all_passed(&r), "{:?}", r.iter().find(|x| !x.passed()));
        assert!(r.iter().filter(|x| x.params.get("j") == Some(&0.into())).all(|x| x.equal));
    }

    #[test]
    fn adjoint() {
        assert!(all_passed(&verify_adjointness(6, 10, 3)));
    }
}
