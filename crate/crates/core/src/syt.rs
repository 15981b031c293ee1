//! Counting standard Young tableaux of bounded width: direct enumeration,
//! hook sums, exponential generating functions built from Bessel series, and
//! closed multinomial-determinant formulas.

use crate::lambda_ring::SchurExpansion;
use crate::matrix::det_of;
use crate::partition::{partitions_of, Partition};
use crate::poly::egf::factorial;
use crate::poly::EgfSeries;
use crate::report::{Params, VerifyReport};
use crate::symfunc::{binomial, FComb};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum SytFilter {
    OddColumns(usize),
    OddRows(usize),
}

/// Tableaux with `n` cells and at most `width` columns, optionally filtered.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SytQuery {
    pub n: usize,
    pub width: usize,
    pub filter: Option<SytFilter>,
}

impl SytQuery {
    pub fn new(n: usize, width: usize) -> Self {
        SytQuery { n, width, filter: None }
    }

    pub fn odd_columns(n: usize, width: usize, k: usize) -> Self {
        SytQuery { n, width, filter: Some(SytFilter::OddColumns(k)) }
    }

    pub fn odd_rows(n: usize, width: usize, k: usize) -> Self {
        SytQuery { n, width, filter: Some(SytFilter::OddRows(k)) }
    }

    pub fn accepts(&self, shape: &Partition) -> bool {
        shape.width() <= self.width
            && match self.filter {
                None => true,
                Some(SytFilter::OddColumns(k)) => shape.odd_columns() == k,
                Some(SytFilter::OddRows(k)) => shape.odd_rows() == k,
            }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CountMethod {
    BruteForce,
    HookSum,
}

/// Visits every standard tableau, given as its chain of shapes, by placing
/// `1..=n` one cell at a time and never exceeding `width` columns.
pub fn for_each_syt(n: usize, width: usize, mut visit: impl FnMut(&Partition)) {
    fn rec(shape: &Partition, left: usize, width: usize, visit: &mut dyn FnMut(&Partition)) {
        if left == 0 {
            visit(shape);
            return;
        }
        for next in shape.add_corners() {
            if next.width() <= width {
                rec(&next, left - 1, width, visit);
            }
        }
    }
    rec(&Partition::empty(), n, width, &mut visit);
}

pub fn syt_count(q: SytQuery, method: CountMethod) -> BigInt {
    match method {
        CountMethod::BruteForce => {
            let mut count = 0u64;
            for_each_syt(q.n, q.width, |shape| {
                if q.accepts(shape) {
                    count += 1;
                }
            });
            BigInt::from(count)
        }
        CountMethod::HookSum => {
            partitions_of(q.n, Some(q.width), None).iter().filter(|p| q.accepts(p)).map(Partition::hook_count).sum()
        }
    }
}

/// `Cat(q)` for `q = twice_q / 2`; zero unless `q` is a nonnegative integer.
pub fn catalan_half(twice_q: i64) -> BigInt {
    if twice_q < 0 || twice_q % 2 != 0 {
        return BigInt::zero();
    }
    let q = (twice_q / 2) as u64;
    binomial(2 * q, q) / (q + 1)
}

pub fn catalan(q: i64) -> BigInt {
    catalan_half(2 * q)
}

fn binom_i(r: i64, s: i64) -> BigInt {
    if r < 0 || s < 0 || s > r {
        BigInt::zero()
    } else {
        binomial(r as u64, s as u64)
    }
}

/// `F(r, s) = C(r, s) - C(r, s - 1)` with `s = twice_s / 2`; zero when `s`
/// is not an integer.
pub fn ballot_f(r: i64, twice_s: i64) -> BigInt {
    if twice_s % 2 != 0 {
        return BigInt::zero();
    }
    let s = twice_s / 2;
    binom_i(r, s) - binom_i(r, s - 1)
}

pub fn central_binomial(n: u64) -> BigInt {
    binomial(2 * n, n)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Scalar {
    /// `Cat(q)` with `q` given doubled.
    Catalan { twice_q: i64 },
    CentralBinomial { n: u64 },
    /// `F(r, s)` with `s` given doubled.
    BallotF { r: i64, twice_s: i64 },
}

pub fn combinatorial_scalar(kind: Scalar) -> BigInt {
    match kind {
        Scalar::Catalan { twice_q } => catalan_half(twice_q),
        Scalar::CentralBinomial { n } => central_binomial(n),
        Scalar::BallotF { r, twice_s } => ballot_f(r, twice_s),
    }
}

/// `θ(e_k) = x^k / k!`.
pub fn theta_e(k: i64, order: usize) -> EgfSeries {
    if k < 0 {
        return EgfSeries::zero(order);
    }
    EgfSeries::egf_monomial(order, k as usize)
}

/// `θ(f_r)`, the series `I_r(2x) = Σ_m C(2m+|r|, m) x^{2m+|r|} / (2m+|r|)!`.
pub fn theta_f(r: i64, order: usize) -> EgfSeries {
    let r = r.unsigned_abs() as usize;
    let mut b = vec![BigInt::zero(); order + 1];
    let mut m = 0;
    while 2 * m + r <= order {
        b[2 * m + r] = binomial((2 * m + r) as u64, m as u64);
        m += 1;
    }
    EgfSeries::from_egf(order, &b)
}

pub fn theta_fcomb(c: &FComb, order: usize) -> EgfSeries {
    c.terms().fold(EgfSeries::zero(order), |acc, (r, v)| {
        acc.add(&theta_f(r as i64, order).scale(&BigRational::from_integer(v.clone())))
    })
}

/// `θ(s_λ) = f^λ x^{|λ|} / |λ|!`, extended linearly.
pub fn theta_schur(a: &SchurExpansion, order: usize) -> EgfSeries {
    let mut out = EgfSeries::zero(order);
    for (l, c) in a.terms() {
        if l.size() <= order {
            let t = EgfSeries::egf_monomial(order, l.size()).scale(&BigRational::from_integer(c * l.hook_count()));
            out = out.add(&t);
        }
    }
    out
}

pub enum ThetaInput<'a> {
    E(i64),
    F(i64),
    Comb(&'a FComb),
    Schur(&'a SchurExpansion),
}

pub fn theta_map(input: ThetaInput<'_>, order: usize) -> EgfSeries {
    match input {
        ThetaInput::E(k) => theta_e(k, order),
        ThetaInput::F(r) => theta_f(r, order),
        ThetaInput::Comb(c) => theta_fcomb(c, order),
        ThetaInput::Schur(a) => theta_schur(a, order),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    pub fn width(self, w: usize) -> usize {
        match self {
            Parity::Odd => 2 * w + 1,
            Parity::Even => 2 * w,
        }
    }
}

/// `n! [x^n]` of the Bessel determinant for width `2w+1` or `2w`, for
/// `n = 0..=order`.
pub fn gessel_series(w: usize, parity: Parity, order: usize) -> Vec<BigInt> {
    let unit = EgfSeries::one(order);
    let series = match parity {
        Parity::Odd => {
            let d = det_of(w, &unit, |i, j| {
                theta_f(i as i64 - j as i64, order).sub(&theta_f(i as i64 + j as i64, order))
            });
            EgfSeries::exp(order).mul(&d)
        }
        Parity::Even => det_of(w, &unit, |i, j| {
            theta_f(i as i64 - j as i64, order).add(&theta_f(i as i64 + j as i64 - 1, order))
        }),
    };
    series.egf_integers().expect("tableau counts are integral")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum KloVariant {
    KloOdd,
    KloEven,
    RefOdd,
    RefEven,
}

/// All length-`parts` vectors of nonnegative integers summing to `total`, in
/// lexicographic order.
pub fn weak_compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 { vec![vec![]] } else { vec![] };
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in weak_compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

pub fn multinomial(parts: &[usize]) -> BigInt {
    let n: usize = parts.iter().sum();
    parts.iter().fold(factorial(n), |acc, &p| acc / factorial(p))
}

/// Multinomial sums of determinants counting tableaux of bounded width.
///
/// `k` is only read by the refined variants.
pub fn klo_count(variant: KloVariant, n: usize, w: usize, k: usize) -> BigInt {
    let unit = BigInt::one();
    let wi = w as i64;
    let mut total = BigInt::zero();
    match variant {
        KloVariant::KloOdd => {
            for t in weak_compositions(n, w + 1) {
                let d = det_of(w, &unit, |i, j| catalan_half(t[i] as i64 + 2 * wi - i as i64 - j as i64));
                total += multinomial(&t) * d;
            }
        }
        KloVariant::KloEven => {
            for t in weak_compositions(n, w) {
                let d = det_of(w, &unit, |i, j| {
                    let r = t[i - 1] as i64 + 2 * wi - i as i64 - j as i64;
                    binom_i(r, r.div_euclid(2))
                });
                total += multinomial(&t) * d;
            }
        }
        KloVariant::RefOdd => {
            if k > n {
                return total;
            }
            for t in weak_compositions(n - k, w) {
                let d = det_of(w, &unit, |i, j| catalan_half(t[i - 1] as i64 + i as i64 + j as i64 - 2));
                let mut parts = vec![k];
                parts.extend(&t);
                total += multinomial(&parts) * d;
            }
        }
        KloVariant::RefEven => {
            for t in weak_compositions(n, w) {
                let d = det_of(w, &unit, |i, j| {
                    let ti = t[i - 1] as i64;
                    let shift = if i == w { k as i64 } else { 0 };
                    ballot_f(ti + j as i64 - 1, ti - i as i64 - shift + j as i64)
                });
                total += multinomial(&t) * d;
            }
        }
    }
    total
}

/// Cross-checks enumeration, hook sums, Bessel series and the closed
/// formulas for `n ≤ n_max` and every `w` in `ws`.
pub fn verify_syt_counts(n_max: usize, ws: &[usize]) -> Vec<VerifyReport> {
    let mut out = Vec::new();
    for &w in ws {
        for parity in [Parity::Odd, Parity::Even] {
            let width = parity.width(w);
            let gessel = gessel_series(w, parity, n_max);
            let tag = if parity == Parity::Odd { "odd" } else { "even" };
            for n in 0..=n_max {
                let params = || Params::new().with("n", n).with("w", w).with("parity", tag);
                let brute = syt_count(SytQuery::new(n, width), CountMethod::BruteForce);
                let hook = syt_count(SytQuery::new(n, width), CountMethod::HookSum);
                out.push(VerifyReport::new("syt_hook_sum", params()).ints(&brute, &hook));
                out.push(VerifyReport::new("syt_gessel", params()).ints(&brute, &gessel[n]));
                if w >= 1 {
                    let variant = if parity == Parity::Odd { KloVariant::KloOdd } else { KloVariant::KloEven };
                    out.push(VerifyReport::new("syt_klo", params()).ints(&brute, &klo_count(variant, n, w, 0)));
                }
                let variant = if parity == Parity::Odd { KloVariant::RefOdd } else { KloVariant::RefEven };
                for k in 0..=n {
                    let refined = syt_count(SytQuery::odd_rows(n, width, k), CountMethod::BruteForce);
                    out.push(
                        VerifyReport::new("syt_refined", params().with("k", k)).ints(&refined, &klo_count(variant, n, w, k)),
                    );
                }
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lambda_ring::{f_series_schur, SchurExpansion};
    use crate::partition::part;
    use crate::symfunc::f_skew_power;

    #[test]
    fn count_examples() {
        for m in [CountMethod::BruteForce, CountMethod::HookSum] {
            assert_eq!(syt_count(SytQuery::new(3, 3), m), BigInt::from(4));
            assert_eq!(syt_count(SytQuery::new(4, 3), m), BigInt::from(9));
            assert_eq!(syt_count(SytQuery::new(3, 2), m), BigInt::from(3));
            assert_eq!(syt_count(SytQuery::new(4, 2), m), BigInt::from(6));
            // (2,2) and (1,1,1,1) both have only even columns
            assert_eq!(syt_count(SytQuery::odd_columns(4, 2, 0), m), BigInt::from(3));
            assert_eq!(syt_count(SytQuery::odd_rows(4, 2, 0), m), BigInt::from(2));
        }
    }

    #[test]
    fn scalars() {
        assert_eq!(catalan(3), BigInt::from(5));
        assert_eq!(catalan_half(3), BigInt::zero());
        assert_eq!(ballot_f(4, 3), BigInt::zero());
        assert_eq!(ballot_f(4, 2), BigInt::from(3));
        assert_eq!(combinatorial_scalar(Scalar::CentralBinomial { n: 3 }), BigInt::from(20));
        assert_eq!(catalan(-1), BigInt::zero());
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta_e(2, 4), EgfSeries::egf_monomial(4, 2));
        let want = EgfSeries::from_coeffs(
            4,
            vec![1, 0, 1, 0].into_iter().map(|v| BigRational::from_integer(v.into())).chain([BigRational::new(1.into(), 4.into())]).collect(),
        );
        assert_eq!(theta_f(0, 4), want);
        let t = theta_schur(&SchurExpansion::schur(part(&[2, 1]), 3), 4);
        assert_eq!(t, EgfSeries::egf_monomial(4, 3).scale(&BigRational::from_integer(2.into())));
    }

    #[test]
    fn theta_is_multiplicative_on_e() {
        for i in 0..=4 {
            for j in 0..=4 {
                let prod = SchurExpansion::elementary(i, 8).pieri_mul_e(j);
                assert_eq!(theta_schur(&prod, 8), theta_e(i as i64, 8).mul(&theta_e(j as i64, 8)));
            }
        }
    }

    #[test]
    fn theta_of_f_matches_ring_model() {
        for r in 0..=4 {
            assert_eq!(theta_schur(&f_series_schur(r, 8), 8), theta_f(r, 8));
        }
    }

    #[test]
    fn theta_intertwines_skewing() {
        for i in -2..=4i64 {
            let mut d = theta_f(i, 8);
            for j in 0..=4u64 {
                assert_eq!(theta_fcomb(&f_skew_power(j, i), 8 - j as usize), d);
                d = d.derivative();
            }
        }
    }

    #[test]
    fn bessel_closed_forms() {
        let a = theta_f(0, 10).sub(&theta_f(2, 10)).egf_integers().unwrap();
        let b = theta_f(0, 10).add(&theta_f(1, 10)).egf_integers().unwrap();
        for n in 0..=10 {
            assert_eq!(a[n], catalan_half(n as i64));
            assert_eq!(b[n], binomial(n as u64, n as u64 / 2));
        }
    }

    #[test]
    fn gessel_examples() {
        let v = |xs: &[i64]| xs.iter().map(|&x| BigInt::from(x)).collect::<Vec<_>>();
        assert_eq!(gessel_series(1, Parity::Odd, 4), v(&[1, 1, 2, 4, 9]));
        assert_eq!(gessel_series(1, Parity::Even, 4), v(&[1, 1, 2, 3, 6]));
        assert_eq!(gessel_series(0, Parity::Even, 4), v(&[1, 0, 0, 0, 0]));
    }

    #[test]
    fn klo_examples() {
        assert_eq!(klo_count(KloVariant::KloOdd, 3, 1, 0), BigInt::from(4));
        assert_eq!(klo_count(KloVariant::KloEven, 3, 1, 0), BigInt::from(3));
        let brute = syt_count(SytQuery::odd_rows(3, 3, 1), CountMethod::BruteForce);
        assert_eq!(klo_count(KloVariant::RefOdd, 3, 1, 1), brute);
    }

    #[test]
    fn everything_agrees() {
        let r = verify_syt_counts(8, &[1, 2]);
        let bad: Vec<_> = r.iter().filter(|x| !x.passed()).collect();
        assert!(bad.is_empty(), "{bad:#?}");
    }
}
