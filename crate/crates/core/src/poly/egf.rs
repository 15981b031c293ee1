//! Power series truncated at a fixed order, with exact rational coefficients.

use crate::error::{LabError, Result};
use crate::ring::Ring;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

/// `Σ_{k ≤ order} a_k x^k`; products drop every term above `order`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EgfSeries {
    coeffs: Vec<BigRational>,
}

pub fn factorial(n: usize) -> BigInt {
    (2..=n).fold(BigInt::one(), |acc, k| acc * k)
}

impl EgfSeries {
    pub fn zero(order: usize) -> Self {
        EgfSeries { coeffs: vec![BigRational::zero(); order + 1] }
    }

    pub fn one(order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = BigRational::one();
        s
    }

    /// Ordinary coefficients `a_0, a_1, ...`; extra entries are dropped and
    /// missing ones are zero.
    pub fn from_coeffs(order: usize, coeffs: Vec<BigRational>) -> Self {
        let mut s = Self::zero(order);
        for (k, c) in coeffs.into_iter().enumerate().take(order + 1) {
            s.coeffs[k] = c;
        }
        s
    }

    /// The series `Σ b_k x^k / k!` from integer EGF coefficients `b_k`.
    pub fn from_egf(order: usize, b: &[BigInt]) -> Self {
        let coeffs = b.iter().enumerate().map(|(k, v)| BigRational::new(v.clone(), factorial(k))).collect();
        Self::from_coeffs(order, coeffs)
    }

    /// `x^k / k!`.
    pub fn egf_monomial(order: usize, k: usize) -> Self {
        let mut s = Self::zero(order);
        if k <= order {
            s.coeffs[k] = BigRational::new(BigInt::one(), factorial(k));
        }
        s
    }

    pub fn exp(order: usize) -> Self {
        Self::from_egf(order, &vec![BigInt::one(); order + 1])
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, k: usize) -> BigRational {
        self.coeffs.get(k).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    /// `k! a_k` for every `k`, as integers; errors if any is fractional.
    pub fn egf_integers(&self) -> Result<Vec<BigInt>> {
        self.coeffs
            .iter()
            .enumerate()
            .map(|(k, c)| {
                let v = c * BigRational::from_integer(factorial(k));
                if v.is_integer() {
                    Ok(v.to_integer())
                } else {
                    Err(LabError::Evaluation(format!("EGF coefficient {k} is not integral: {v}")))
                }
            })
            .collect()
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::from_coeffs(order, self.coeffs.clone())
    }

    /// Formal derivative; the result has order one less (minimum 0).
    pub fn derivative(&self) -> Self {
        let order = self.order().saturating_sub(1);
        let coeffs = (1..=self.order()).map(|k| &self.coeffs[k] * BigRational::from_integer(k.into())).collect();
        Self::from_coeffs(order, coeffs)
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.order(), other.order(), "series orders must match");
    }

    pub fn add(&self, other: &Self) -> Self {
        self.check(other);
        EgfSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.check(other);
        EgfSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect() }
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.check(other);
        let n = self.order();
        let mut out = Self::zero(n);
        for i in 0..=n {
            if self.coeffs[i].is_zero() {
                continue;
            }
            for j in 0..=n - i {
                out.coeffs[i + j] += &self.coeffs[i] * &other.coeffs[j];
            }
        }
        out
    }

    pub fn neg(&self) -> Self {
        EgfSeries { coeffs: self.coeffs.iter().map(|a| -a).collect() }
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        EgfSeries { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }
}

impl Ring for EgfSeries {
    fn zero_like(&self) -> Self {
        Self::zero(self.order())
    }
    fn one_like(&self) -> Self {
        Self::one(self.order())
    }
    fn is_zero_elem(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self.add(rhs)
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self.sub(rhs)
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self.mul(rhs)
    }
    fn neg_ref(&self) -> Self {
        self.neg()
    }
    fn scale_int(&self, c: i64) -> Self {
        self.scale(&BigRational::from_integer(c.into()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn arb(order: usize) -> impl Strategy<Value = EgfSeries> {
        prop::collection::vec((-9i64..=9, 1i64..=6), order + 1).prop_map(move |v| {
            EgfSeries::from_coeffs(order, v.into_iter().map(|(a, b)| BigRational::new(a.into(), b.into())).collect())
        })
    }

    #[test]
    fn exp_squared_is_exp_2x() {
        let e = EgfSeries::exp(6);
        let sq = e.mul(&e);
        let want: Vec<BigInt> = (0..=6).map(|k| BigInt::from(1u64 << k)).collect();
        assert_eq!(sq.egf_integers().unwrap(), want);
    }

    #[test]
    fn derivative_of_exp() {
        assert_eq!(EgfSeries::exp(5).derivative(), EgfSeries::exp(4));
    }

    proptest! {
        #[test]
        fn product_is_cauchy(f in arb(6), g in arb(6)) {
            let p = f.mul(&g);
            for k in 0..=6 {
                let mut s = BigRational::zero();
                for i in 0..=k {
                    s += f.coeff(i) * g.coeff(k - i);
                }
                prop_assert_eq!(p.coeff(k), s);
            }
        }
    }
}
