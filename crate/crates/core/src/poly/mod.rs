//! Exact sparse multivariate polynomials over the integers.
//!
//! Exponents live in a [`PolySpace`]: `vars` ordinary variables, optionally a
//! trailing central variable `u`, and optionally Laurent mode. In Laurent mode
//! every stored exponent is doubled, so `x^(1/2)` is stored as `1` and
//! `x^(-1)` as `-2`.

pub mod egf;

use crate::error::{LabError, Result};
use crate::ring::Ring;
use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};
use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

pub use egf::EgfSeries;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct PolySpace {
    pub vars: usize,
    pub with_u: bool,
    pub laurent: bool,
}

impl PolySpace {
    pub fn plain(vars: usize) -> Self {
        PolySpace { vars, with_u: false, laurent: false }
    }

    pub fn with_u(vars: usize) -> Self {
        PolySpace { vars, with_u: true, laurent: false }
    }

    pub fn laurent(vars: usize) -> Self {
        PolySpace { vars, with_u: false, laurent: true }
    }

    /// Length of an exponent vector.
    pub fn dim(&self) -> usize {
        self.vars + usize::from(self.with_u)
    }

    /// Stored exponent of a whole power of one variable.
    pub fn unit(&self) -> i32 {
        if self.laurent {
            2
        } else {
            1
        }
    }

    /// Index of `u` in the exponent vector.
    pub fn u_index(&self) -> Option<usize> {
        self.with_u.then_some(self.vars)
    }
}

impl fmt::Display for PolySpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z[x1..x{}", self.vars)?;
        if self.with_u {
            write!(f, ",u")?;
        }
        write!(f, "]")?;
        if self.laurent {
            write!(f, " (laurent, half-unit exponents)")?;
        }
        Ok(())
    }
}

/// Exponent vector ordered by graded reverse lexicographic order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<i32>);

impl Monomial {
    pub fn degree(&self) -> i64 {
        self.0.iter().map(|&e| e as i64).sum()
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        match self.degree().cmp(&other.degree()) {
            Ordering::Equal => {}
            o => return o,
        }
        for (a, b) in self.0.iter().zip(&other.0).rev() {
            if a != b {
                // smaller trailing exponent wins
                return b.cmp(a);
            }
        }
        self.0.len().cmp(&other.0.len())
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    space: PolySpace,
    terms: BTreeMap<Monomial, BigInt>,
}

impl MultiPoly {
    pub fn zero(space: PolySpace) -> Self {
        MultiPoly { space, terms: BTreeMap::new() }
    }

    pub fn one(space: PolySpace) -> Self {
        Self::constant(space, BigInt::one())
    }

    pub fn constant(space: PolySpace, c: impl Into<BigInt>) -> Self {
        let mut p = Self::zero(space);
        p.add_term(vec![0; space.dim()], c.into());
        p
    }

    /// The variable `x_{i+1}` (0-based index; `space.vars` addresses `u`).
    pub fn var(space: PolySpace, i: usize) -> Self {
        let mut e = vec![0; space.dim()];
        e[i] = space.unit();
        let mut p = Self::zero(space);
        p.add_term(e, BigInt::one());
        p
    }

    pub fn u(space: PolySpace) -> Self {
        let idx = space.u_index().expect("space has no u");
        Self::var(space, idx)
    }

    /// A single term with raw (stored-unit) exponents.
    pub fn monomial(space: PolySpace, exps: Vec<i32>, coeff: impl Into<BigInt>) -> Result<Self> {
        if exps.len() != space.dim() {
            return Err(LabError::DimensionMismatch { expected: space.dim(), got: exps.len() });
        }
        if !space.laurent && exps.iter().any(|&e| e < 0) {
            return Err(LabError::Evaluation("negative exponent outside laurent mode".into()));
        }
        let mut p = Self::zero(space);
        p.add_term(exps, coeff.into());
        Ok(p)
    }

    /// Builds a polynomial from raw terms; repeated monomials are summed.
    pub fn from_terms<I>(space: PolySpace, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<i32>, BigInt)>,
    {
        let mut p = Self::zero(space);
        for (e, c) in terms {
            p = p.checked_add(&Self::monomial(space, e, c)?)?;
        }
        Ok(p)
    }

    fn add_term(&mut self, exps: Vec<i32>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        let key = Monomial(exps);
        match self.terms.get_mut(&key) {
            Some(v) => {
                *v += c;
                if v.is_zero() {
                    self.terms.remove(&key);
                }
            }
            None => {
                self.terms.insert(key, c);
            }
        }
    }

    pub fn space(&self) -> PolySpace {
        self.space
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Terms in descending term order.
    pub fn terms(&self) -> impl Iterator<Item = (&[i32], &BigInt)> {
        self.terms.iter().rev().map(|(m, c)| (m.0.as_slice(), c))
    }

    fn check_space(&self, other: &Self) -> Result<()> {
        if self.space != other.space {
            return Err(LabError::SpaceMismatch { left: self.space.to_string(), right: other.space.to_string() });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        let (mut acc, src) = if self.terms.len() >= other.terms.len() { (self.clone(), other) } else { (other.clone(), self) };
        for (m, c) in &src.terms {
            acc.add_term(m.0.clone(), c.clone());
        }
        Ok(acc)
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        let mut acc = self.clone();
        for (m, c) in &other.terms {
            acc.add_term(m.0.clone(), -c);
        }
        Ok(acc)
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_space(other)?;
        let mut out: BTreeMap<Monomial, BigInt> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let e: Vec<i32> = ma.0.iter().zip(&mb.0).map(|(a, b)| a + b).collect();
                *out.entry(Monomial(e)).or_insert_with(BigInt::zero) += ca * cb;
            }
        }
        out.retain(|_, c| !c.is_zero());
        Ok(MultiPoly { space: self.space, terms: out })
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one(self.space);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = &acc * &base;
            }
            k >>= 1;
            if k > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero(self.space);
        }
        let terms = self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect();
        MultiPoly { space: self.space, terms }
    }

    /// Exact division of every coefficient by `d`.
    pub fn div_exact(&self, d: &BigInt) -> Result<Self> {
        if d.is_zero() {
            return Err(LabError::Evaluation("division by zero".into()));
        }
        let mut terms = BTreeMap::new();
        for (m, c) in &self.terms {
            let (q, r) = c.div_rem(d);
            if !r.is_zero() {
                return Err(LabError::Evaluation(format!("coefficient {c} not divisible by {d}")));
            }
            terms.insert(m.clone(), q);
        }
        Ok(MultiPoly { space: self.space, terms })
    }

    /// Multiplies by the monomial with raw exponents `shift`.
    pub fn shift(&self, shift: &[i32]) -> Result<Self> {
        if shift.len() != self.space.dim() {
            return Err(LabError::DimensionMismatch { expected: self.space.dim(), got: shift.len() });
        }
        let mut out = Self::zero(self.space);
        for (m, c) in &self.terms {
            let e: Vec<i32> = m.0.iter().zip(shift).map(|(a, b)| a + b).collect();
            if !self.space.laurent && e.iter().any(|&x| x < 0) {
                return Err(LabError::Evaluation("negative exponent outside laurent mode".into()));
            }
            out.terms.insert(Monomial(e), c.clone());
        }
        Ok(out)
    }

    /// Coefficient of the monomial with raw exponents `exps`.
    pub fn coefficient_of(&self, exps: &[i32]) -> Result<BigInt> {
        if exps.len() != self.space.dim() {
            return Err(LabError::DimensionMismatch { expected: self.space.dim(), got: exps.len() });
        }
        Ok(self.terms.get(&Monomial(exps.to_vec())).cloned().unwrap_or_default())
    }

    /// Coefficient of the square-free monomial `x_1 x_2 ... x_vars` (with `u^0`).
    pub fn squarefree_coefficient(&self) -> BigInt {
        let unit = self.space.unit();
        let mut e = vec![unit; self.space.vars];
        if self.space.with_u {
            e.push(0);
        }
        self.coefficient_of(&e).expect("matching dimension")
    }

    /// Collects the coefficient polynomial of `v^power` for the variable at
    /// index `var` (raw exponent), with that variable removed.
    pub fn coefficient_in(&self, var: usize, power: i32) -> Self {
        let mut out = Self::zero(self.space);
        for (m, c) in &self.terms {
            if m.0[var] == power {
                let mut e = m.0.clone();
                e[var] = 0;
                out.add_term(e, c.clone());
            }
        }
        out
    }

    /// Largest raw exponent of the variable at `var`, if nonzero.
    pub fn degree_in(&self, var: usize) -> Option<i32> {
        self.terms.keys().map(|m| m.0[var]).max()
    }

    pub fn total_degree(&self) -> Option<i64> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|x| x == d),
        }
    }

    /// Substitutes an integer for one variable, staying in the same space.
    ///
    /// Negative or fractional exponents are only allowed when the value is 1.
    pub fn specialize(&self, var: usize, value: &BigInt) -> Result<Self> {
        let unit = self.space.unit();
        let mut out = Self::zero(self.space);
        for (m, c) in &self.terms {
            let e = m.0[var];
            let factor = if value.is_one() {
                BigInt::one()
            } else if e >= 0 && e % unit == 0 {
                num_traits::pow(value.clone(), (e / unit) as usize)
            } else {
                return Err(LabError::Evaluation(format!("cannot substitute {value} into exponent {e}/{unit}")));
            };
            let mut k = m.0.clone();
            k[var] = 0;
            out.add_term(k, c * factor);
        }
        Ok(out)
    }

    /// Evaluates at a rational point with one coordinate per exponent slot.
    pub fn evaluate_at(&self, point: &[BigRational]) -> Result<BigRational> {
        let dim = self.space.dim();
        if point.len() != dim {
            return Err(LabError::DimensionMismatch { expected: dim, got: point.len() });
        }
        let unit = self.space.unit();
        // half powers need exact square roots
        let mut roots: Vec<Option<BigRational>> = vec![None; dim];
        if self.space.laurent {
            for (i, v) in point.iter().enumerate() {
                roots[i] = rational_sqrt(v);
            }
        }
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = BigRational::from_integer(c.clone());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let v = &point[i];
                if v.is_zero() && e < 0 {
                    return Err(LabError::Evaluation(format!("zero substituted into negative exponent of slot {i}")));
                }
                let (base, pw) = if e % unit == 0 {
                    (v.clone(), e / unit)
                } else {
                    let r = roots[i]
                        .clone()
                        .ok_or_else(|| LabError::Evaluation(format!("no rational square root of {v}")))?;
                    if r.is_zero() && e < 0 {
                        return Err(LabError::Evaluation(format!("zero substituted into negative exponent of slot {i}")));
                    }
                    (r, e)
                };
                let mut f = num_traits::pow(base, pw.unsigned_abs() as usize);
                if pw < 0 {
                    f = f.recip();
                }
                t *= f;
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Re-expresses the polynomial in a larger space.
    ///
    /// The target may add variables, add `u`, or switch on Laurent mode; it
    /// may not drop any of them.
    pub fn embed(&self, target: PolySpace) -> Result<Self> {
        let s = self.space;
        if target.vars < s.vars || (s.with_u && !target.with_u) || (s.laurent && !target.laurent) {
            return Err(LabError::SpaceMismatch { left: s.to_string(), right: target.to_string() });
        }
        let factor = if target.laurent && !s.laurent { 2 } else { 1 };
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            let mut e = vec![0; target.dim()];
            for i in 0..s.vars {
                e[i] = m.0[i] * factor;
            }
            if let (Some(si), Some(ti)) = (s.u_index(), target.u_index()) {
                e[ti] = m.0[si] * factor;
            }
            out.terms.insert(Monomial(e), c.clone());
        }
        Ok(out)
    }

    pub fn with_u(&self) -> Self {
        self.embed(PolySpace { with_u: true, ..self.space }).expect("adding u never fails")
    }

    pub fn to_laurent(&self) -> Self {
        self.embed(PolySpace { laurent: true, ..self.space }).expect("switching to laurent never fails")
    }

    /// Leaves Laurent mode when every exponent is a nonnegative whole power.
    pub fn to_plain(&self) -> Result<Self> {
        if !self.space.laurent {
            return Ok(self.clone());
        }
        let target = PolySpace { laurent: false, ..self.space };
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            if m.0.iter().any(|&e| e < 0 || e % 2 != 0) {
                return Err(LabError::Evaluation("polynomial has negative or half exponents".into()));
            }
            out.terms.insert(Monomial(m.0.iter().map(|e| e / 2).collect()), c.clone());
        }
        Ok(out)
    }

    /// Drops `u` after checking the polynomial does not involve it.
    pub fn without_u(&self) -> Result<Self> {
        let Some(ui) = self.space.u_index() else { return Ok(self.clone()) };
        let target = PolySpace { with_u: false, ..self.space };
        let mut out = Self::zero(target);
        for (m, c) in &self.terms {
            if m.0[ui] != 0 {
                return Err(LabError::Evaluation("polynomial involves u".into()));
            }
            out.terms.insert(Monomial(m.0[..ui].to_vec()), c.clone());
        }
        Ok(out)
    }

    /// Hex SHA-256 of the canonical rendering.
    pub fn canonical_hash(&self) -> String {
        let mut h = Sha256::new();
        h.update(self.space.to_string().as_bytes());
        h.update(b"|");
        h.update(self.to_string().as_bytes());
        hex::encode(h.finalize())
    }
}

fn rational_sqrt(v: &BigRational) -> Option<BigRational> {
    if v.is_negative() {
        return None;
    }
    let n = v.numer().sqrt();
    let d = v.denom().sqrt();
    (&n * &n == *v.numer() && &d * &d == *v.denom()).then(|| BigRational::new(n, d))
}

fn write_exp(f: &mut fmt::Formatter<'_>, e: i32, laurent: bool) -> fmt::Result {
    if laurent {
        if e % 2 == 0 {
            write_exp(f, e / 2, false)
        } else {
            write!(f, "^({e}/2)")
        }
    } else if e == 1 {
        Ok(())
    } else if e < 0 {
        write!(f, "^({e})")
    } else {
        write!(f, "^{e}")
    }
}

impl fmt::Display for MultiPoly {
    /// Terms in descending grevlex order, e.g. `x1^2 + 2*x1*x2 - u`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let abs = c.abs();
            let constant = m.0.iter().all(|&e| e == 0);
            let mut first = true;
            if !abs.is_one() || constant {
                write!(f, "{abs}")?;
                first = false;
            }
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                if Some(i) == self.space.u_index() {
                    write!(f, "u")?;
                } else {
                    write!(f, "x{}", i + 1)?;
                }
                write_exp(f, e, self.space.laurent)?;
            }
        }
        Ok(())
    }
}

impl<'a> Add<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.checked_add(rhs).expect("polynomial spaces must match")
    }
}

impl<'a> Sub<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.checked_sub(rhs).expect("polynomial spaces must match")
    }
}

impl<'a> Mul<&'a MultiPoly> for &'a MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &'a MultiPoly) -> MultiPoly {
        self.checked_mul(rhs).expect("polynomial spaces must match")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        let terms = self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect();
        MultiPoly { space: self.space, terms }
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: MultiPoly) -> MultiPoly {
        &self + &rhs
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        &self - &rhs
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        &self * &rhs
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl Ring for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.space)
    }
    fn one_like(&self) -> Self {
        MultiPoly::one(self.space)
    }
    fn is_zero_elem(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale_int(&self, c: i64) -> Self {
        self.scale(&BigInt::from(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn x(n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(PolySpace::plain(n), i)
    }

    fn q(a: i64, b: i64) -> BigRational {
        BigRational::new(a.into(), b.into())
    }

    #[test]
    fn difference_of_squares() {
        let (a, b) = (x(2, 0), x(2, 1));
        let lhs = &(&a + &b) * &(&a - &b);
        let rhs = &a.pow(2) - &b.pow(2);
        assert_eq!(lhs, rhs);
        assert!((&lhs + &(-&lhs)).is_zero());
    }

    #[test]
    fn laurent_square() {
        let s = PolySpace::laurent(1);
        let h = MultiPoly::monomial(s, vec![1], 1).unwrap() + MultiPoly::monomial(s, vec![-1], 1).unwrap();
        let want = MultiPoly::var(s, 0) + MultiPoly::constant(s, 2) + MultiPoly::monomial(s, vec![-2], 1).unwrap();
        assert_eq!(h.pow(2), want);
        assert_eq!(h.to_string(), "x1^(1/2) + x1^(-1/2)");
    }

    #[test]
    fn coefficients() {
        let (a, b) = (x(2, 0), x(2, 1));
        let s2 = &(&a.pow(2) + &(&a * &b)) + &b.pow(2);
        assert_eq!(s2.coefficient_of(&[1, 1]).unwrap(), BigInt::from(1));
        assert_eq!((&a * &b).coefficient_of(&[2, 0]).unwrap(), BigInt::from(0));
        assert!(s2.coefficient_of(&[1]).is_err());
    }

    #[test]
    fn evaluation() {
        let p = &x(2, 0).pow(2) + &x(2, 1);
        assert_eq!(p.evaluate_at(&[q(2, 1), q(3, 1)]).unwrap(), q(7, 1));
        assert_eq!(MultiPoly::zero(PolySpace::plain(2)).evaluate_at(&[q(5, 1), q(1, 3)]).unwrap(), q(0, 1));
        let inv = MultiPoly::monomial(PolySpace::laurent(1), vec![-2], 1).unwrap();
        assert_eq!(inv.evaluate_at(&[q(1, 2)]).unwrap(), q(2, 1));
        assert!(inv.evaluate_at(&[q(0, 1)]).is_err());
        let half = MultiPoly::monomial(PolySpace::laurent(1), vec![1], 1).unwrap();
        assert_eq!(half.evaluate_at(&[q(9, 4)]).unwrap(), q(3, 2));
        assert!(half.evaluate_at(&[q(2, 1)]).is_err());
    }

    #[test]
    fn space_mismatch_is_an_error() {
        assert!(x(2, 0).checked_add(&x(3, 0)).is_err());
        assert!(x(2, 0).checked_mul(&x(2, 0).with_u()).is_err());
    }

    #[test]
    fn rendering_is_grevlex_descending() {
        let s = PolySpace::with_u(2);
        let p = MultiPoly::var(s, 0).pow(2) - MultiPoly::var(s, 0) * MultiPoly::var(s, 1).scale(&2.into())
            + MultiPoly::u(s)
            + MultiPoly::constant(s, 3);
        assert_eq!(p.to_string(), "x1^2 - 2*x1*x2 + u + 3");
        assert_eq!(p.canonical_hash().len(), 64);
    }

    #[test]
    fn specialize_u() {
        let s = PolySpace::with_u(1);
        let p = MultiPoly::u(s).pow(3) * MultiPoly::var(s, 0) - MultiPoly::var(s, 0);
        assert!(p.specialize(1, &BigInt::one()).unwrap().is_zero());
        assert_eq!(p.coefficient_in(1, 3), MultiPoly::var(s, 0));
    }

    fn arb_poly(n: usize) -> impl Strategy<Value = MultiPoly> {
        prop::collection::vec((prop::collection::vec(0i32..=6, n), -5i64..=5), 0..6).prop_map(move |ts| {
            MultiPoly::from_terms(PolySpace::plain(n), ts.into_iter().map(|(e, c)| (e, BigInt::from(c)))).unwrap()
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(100))]

        #[test]
        fn ring_axioms((a, b, c) in (1usize..=4).prop_flat_map(|n| (arb_poly(n), arb_poly(n), arb_poly(n)))) {
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        }

        #[test]
        fn evaluation_is_multiplicative(a in arb_poly(3), b in arb_poly(3), p in prop::collection::vec((-4i64..=4, 1i64..=3), 3)) {
            let pt: Vec<BigRational> = p.iter().map(|&(n, d)| q(n, d)).collect();
            let lhs = (&a * &b).evaluate_at(&pt).unwrap();
            prop_assert_eq!(lhs, a.evaluate_at(&pt).unwrap() * b.evaluate_at(&pt).unwrap());
        }
    }
}
