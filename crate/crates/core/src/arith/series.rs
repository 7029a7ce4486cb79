//! Truncated power series in `t`, stored in the exponential convention:
//! entry `n` is the coefficient of `t^n / n!`. A series of order `T` keeps
//! exactly `T + 1` entries and no operation looks past index `T`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use super::{binomial, BigRational, RationalFunction, XPolynomial};
use crate::error::{Error, Result};

/// Label written next to serialized coefficients.
pub const COEFFICIENT_CONVENTION: &str = "coefficient of t^n/n!";

/// Commutative ring usable as a series coefficient.
pub trait SeriesCoefficient: Clone + PartialEq + fmt::Debug {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn scale_int(&self, c: &BigInt) -> Self;
    /// Multiplicative inverse, when it exists in the ring.
    fn try_inverse(&self) -> Option<Self>;
}

impl SeriesCoefficient for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale_int(&self, c: &BigInt) -> Self {
        self * BigRational::from_integer(c.clone())
    }
    fn try_inverse(&self) -> Option<Self> {
        (!Zero::is_zero(self)).then(|| self.recip())
    }
}

impl SeriesCoefficient for RationalFunction {
    fn zero() -> Self {
        RationalFunction::zero()
    }
    fn one() -> Self {
        RationalFunction::one()
    }
    fn is_zero(&self) -> bool {
        RationalFunction::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale_int(&self, c: &BigInt) -> Self {
        RationalFunction::scale_int(self, c)
    }
    fn try_inverse(&self) -> Option<Self> {
        self.inverse()
    }
}

impl SeriesCoefficient for XPolynomial {
    fn zero() -> Self {
        XPolynomial::zero()
    }
    fn one() -> Self {
        XPolynomial::one()
    }
    fn is_zero(&self) -> bool {
        XPolynomial::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn scale_int(&self, c: &BigInt) -> Self {
        XPolynomial::scale_int(self, c)
    }
    /// Only nonzero constants in `x` are units.
    fn try_inverse(&self) -> Option<Self> {
        if self.is_constant() {
            self.constant_term().inverse().map(XPolynomial::constant)
        } else {
            None
        }
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct TruncatedSeries<C = XPolynomial> {
    coeffs: Vec<C>,
}

impl<C: SeriesCoefficient> TruncatedSeries<C> {
    /// Builds a series of the given order, padding with zeros or dropping
    /// entries past `order`.
    pub fn new(order: usize, mut coeffs: Vec<C>) -> Self {
        coeffs.resize(order + 1, C::zero());
        Self { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Self::new(order, Vec::new())
    }

    pub fn constant(c: C, order: usize) -> Self {
        Self::new(order, vec![c])
    }

    pub fn one(order: usize) -> Self {
        Self::constant(C::one(), order)
    }

    /// `exp(c t)`, i.e. the entries `c^n`.
    pub fn exp_linear(c: &C, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut power = C::one();
        for _ in 0..=order {
            let next = power.mul(c);
            coeffs.push(power);
            power = next;
        }
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    /// The coefficient of `t^n / n!`.
    pub fn coefficient(&self, n: usize) -> Result<&C> {
        self.coeffs.get(n).ok_or_else(|| {
            Error::Precondition(format!("coefficient {n} requested from a series of order {}", self.order()))
        })
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(order, self.coeffs.iter().take(order + 1).cloned().collect())
    }

    pub fn scale(&self, c: &C) -> Self {
        Self { coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect() }
    }

    /// Substitutes `t -> a t`.
    pub fn dilate(&self, a: &BigInt) -> Self {
        let mut power = BigInt::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            coeffs.push(c.scale_int(&power));
            power *= a;
        }
        Self { coeffs }
    }

    /// Multiplicative inverse through the series order.
    pub fn invert(&self) -> Result<Self> {
        let inv0 = self.coeffs[0].try_inverse().ok_or(Error::NonUnitSeries)?;
        let order = self.order();
        let mut out: Vec<C> = Vec::with_capacity(order + 1);
        out.push(inv0.clone());
        for n in 1..=order {
            let mut acc = C::zero();
            for k in 1..=n {
                if self.coeffs[k].is_zero() {
                    continue;
                }
                let term = self.coeffs[k].mul(&out[n - k]).scale_int(&binomial(n as u64, k as u64));
                acc = acc.add(&term);
            }
            out.push(acc.mul(&inv0).neg());
        }
        Ok(Self { coeffs: out })
    }

    pub fn map<D: SeriesCoefficient>(&self, f: impl FnMut(&C) -> D) -> TruncatedSeries<D> {
        TruncatedSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    pub fn try_map<D: SeriesCoefficient>(&self, f: impl FnMut(&C) -> Result<D>) -> Result<TruncatedSeries<D>> {
        Ok(TruncatedSeries { coeffs: self.coeffs.iter().map(f).collect::<Result<_>>()? })
    }

    /// Index and value of the lowest nonzero entry.
    pub fn first_nonzero(&self) -> Option<(usize, &C)> {
        self.coeffs.iter().enumerate().find(|(_, c)| !c.is_zero())
    }
}

impl<C: SeriesCoefficient> fmt::Debug for TruncatedSeries<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("TruncatedSeries").field("order", &self.order()).field("coeffs", &self.coeffs).finish()
    }
}

impl<C: SeriesCoefficient + Serialize> Serialize for TruncatedSeries<C> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = s.serialize_struct("TruncatedSeries", 3)?;
        st.serialize_field("order", &self.order())?;
        st.serialize_field("convention", COEFFICIENT_CONVENTION)?;
        st.serialize_field("coefficients", &self.coeffs)?;
        st.end()
    }
}

impl<'a, C: SeriesCoefficient> Add<&'a TruncatedSeries<C>> for &'a TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;

    fn add(self, rhs: &TruncatedSeries<C>) -> TruncatedSeries<C> {
        TruncatedSeries { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.add(b)).collect() }
    }
}

impl<'a, C: SeriesCoefficient> Sub<&'a TruncatedSeries<C>> for &'a TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;

    fn sub(self, rhs: &TruncatedSeries<C>) -> TruncatedSeries<C> {
        TruncatedSeries { coeffs: self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a.sub(b)).collect() }
    }
}

impl<C: SeriesCoefficient> Neg for &TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;

    fn neg(self) -> TruncatedSeries<C> {
        TruncatedSeries { coeffs: self.coeffs.iter().map(SeriesCoefficient::neg).collect() }
    }
}

/// Binomial convolution; the result has the smaller of the two orders.
impl<'a, C: SeriesCoefficient> Mul<&'a TruncatedSeries<C>> for &'a TruncatedSeries<C> {
    type Output = TruncatedSeries<C>;

    fn mul(self, rhs: &TruncatedSeries<C>) -> TruncatedSeries<C> {
        let order = self.order().min(rhs.order());
        let mut coeffs = Vec::with_capacity(order + 1);
        for n in 0..=order {
            let mut acc = C::zero();
            for k in 0..=n {
                let (a, b) = (&self.coeffs[k], &rhs.coeffs[n - k]);
                if a.is_zero() || b.is_zero() {
                    continue;
                }
                acc = acc.add(&a.mul(b).scale_int(&binomial(n as u64, k as u64)));
            }
            coeffs.push(acc);
        }
        TruncatedSeries { coeffs }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    type Q = BigRational;

    fn q(n: i64) -> Q {
        Q::from_integer(n.into())
    }

    fn qs(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&n| q(n)).collect()
    }

    #[test]
    fn exp_of_t() {
        let e = TruncatedSeries::exp_linear(&q(1), 3);
        assert_eq!(e.coeffs(), qs(&[1, 1, 1, 1]).as_slice());
    }

    #[test]
    fn geometric_inverse() {
        // 1 - t in the t^n/n! convention is [1, -1, 0]
        let s = TruncatedSeries::new(2, qs(&[1, -1]));
        assert_eq!(s.invert().unwrap().coeffs(), qs(&[1, 1, 2]).as_slice());
    }

    #[test]
    fn exp_pair_multiplies_to_one() {
        let p = TruncatedSeries::exp_linear(&q(1), 4);
        let m = TruncatedSeries::exp_linear(&q(-1), 4);
        assert_eq!((&p * &m).coeffs(), qs(&[1, 0, 0, 0, 0]).as_slice());
    }

    #[test]
    fn non_unit_is_rejected() {
        let s = TruncatedSeries::new(3, qs(&[0, 1]));
        assert_eq!(s.invert().unwrap_err(), Error::NonUnitSeries);
        let xs = TruncatedSeries::constant(XPolynomial::x(), 2);
        assert_eq!(xs.invert().unwrap_err(), Error::NonUnitSeries);
    }

    #[test]
    fn coefficient_extraction_bounds() {
        let s = TruncatedSeries::exp_linear(&q(2), 3);
        assert_eq!(s.coefficient(3).unwrap(), &q(8));
        assert!(s.coefficient(4).is_err());
    }

    #[test]
    fn dilation_matches_exp() {
        let e = TruncatedSeries::exp_linear(&q(1), 5).dilate(&BigInt::from(3));
        assert_eq!(e, TruncatedSeries::exp_linear(&q(3), 5));
    }

    #[test]
    fn serialization_names_the_convention() {
        let s = TruncatedSeries::exp_linear(&XPolynomial::one(), 1);
        let v = serde_json::to_value(&s).unwrap();
        assert_eq!(v["convention"], COEFFICIENT_CONVENTION);
        assert_eq!(v["order"], 1);
    }

    fn unit_series() -> impl Strategy<Value = TruncatedSeries<Q>> {
        (1i64..6, prop::collection::vec(-5i64..5, 0..7)).prop_map(|(c0, rest)| {
            let mut v = vec![q(c0)];
            v.extend(rest.into_iter().map(q));
            TruncatedSeries::new(6, v)
        })
    }

    proptest! {
        #[test]
        fn inverse_is_two_sided(s in unit_series()) {
            let inv = s.invert().unwrap();
            let one = TruncatedSeries::one(6);
            prop_assert_eq!(&s * &inv, one.clone());
            prop_assert_eq!(&inv * &s, one);
        }

        #[test]
        fn truncation_is_consistent(a in unit_series(), b in unit_series()) {
            let full = (&a * &b).truncate(3);
            let cut = &a.truncate(3) * &b.truncate(3);
            prop_assert_eq!(full, cut);
        }
    }
}
