use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::intpoly::forward_owned_binop;
use super::{BigRational, RationalFunction};
use crate::error::Result;

/// Polynomial in `x` with coefficients in `Q(q)`, ascending degree, no
/// trailing zero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct XPolynomial {
    coeffs: Vec<RationalFunction>,
}

impl XPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(RationalFunction::one())
    }

    /// The indeterminate `x`.
    pub fn x() -> Self {
        Self::monomial(RationalFunction::one(), 1)
    }

    pub fn constant(c: RationalFunction) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn monomial(c: RationalFunction, degree: usize) -> Self {
        let mut coeffs = vec![RationalFunction::zero(); degree + 1];
        coeffs[degree] = c;
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<RationalFunction>) -> Self {
        while coeffs.last().is_some_and(RationalFunction::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn coeffs(&self) -> &[RationalFunction] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero past the degree.
    pub fn coeff(&self, i: usize) -> RationalFunction {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn constant_term(&self) -> RationalFunction {
        self.coeff(0)
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(RationalFunction::is_one)
    }

    pub fn scale(&self, c: &RationalFunction) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self { coeffs: self.coeffs.iter().map(|a| a * c).collect() }
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a.scale_int(c)).collect())
    }

    /// Value at `x = at`.
    pub fn eval_x(&self, at: &RationalFunction) -> RationalFunction {
        let mut acc = RationalFunction::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * at) + c;
        }
        acc
    }

    /// Formal derivative in `x`.
    pub fn derivative(&self) -> Self {
        Self::from_coeffs(self.coeffs.iter().enumerate().skip(1).map(|(i, c)| c.scale_int(&BigInt::from(i))).collect())
    }

    /// `p(a*x + b)`, expanded.
    pub fn affine_subst(&self, a: &RationalFunction, b: &RationalFunction) -> Self {
        if b.is_zero() {
            return self.scale_x(a);
        }
        let lin = Self::from_coeffs(vec![b.clone(), a.clone()]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &lin) + &Self::constant(c.clone());
        }
        acc
    }

    /// `p(c*x)`.
    pub fn scale_x(&self, c: &RationalFunction) -> Self {
        let mut power = RationalFunction::one();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a * &power);
            power = &power * c;
        }
        Self::from_coeffs(coeffs)
    }

    pub fn try_map_coeffs(&self, f: impl FnMut(&RationalFunction) -> Result<RationalFunction>) -> Result<Self> {
        Ok(Self::from_coeffs(self.coeffs.iter().map(f).collect::<Result<_>>()?))
    }

    /// Specializes every coefficient at `q = q0`.
    pub fn eval_q(&self, q0: &BigRational) -> Result<Self> {
        self.try_map_coeffs(|c| c.eval(q0).map(|v| RationalFunction::from_rational(&v)))
    }

    /// Applies `q -> -q^(-w)` coefficientwise.
    pub fn subst_neg_inv_pow(&self, w: usize) -> Result<Self> {
        self.try_map_coeffs(|c| c.subst_neg_inv_pow(w))
    }
}

impl fmt::Display for XPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "[{c}]")?,
                1 => write!(f, "[{c}]*x")?,
                _ => write!(f, "[{c}]*x^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for XPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XPolynomial({self})")
    }
}

impl Serialize for XPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.coeffs.serialize(s)
    }
}

impl<'de> Deserialize<'de> for XPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Ok(Self::from_coeffs(Vec::deserialize(d)?))
    }
}

impl From<RationalFunction> for XPolynomial {
    fn from(c: RationalFunction) -> Self {
        Self::constant(c)
    }
}

impl<'a> Add<&'a XPolynomial> for &'a XPolynomial {
    type Output = XPolynomial;

    fn add(self, rhs: &XPolynomial) -> XPolynomial {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        XPolynomial::from_coeffs(
            (0..n)
                .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                    (Some(a), Some(b)) => a + b,
                    (Some(a), None) => a.clone(),
                    (None, Some(b)) => b.clone(),
                    (None, None) => unreachable!(),
                })
                .collect(),
        )
    }
}

impl<'a> Sub<&'a XPolynomial> for &'a XPolynomial {
    type Output = XPolynomial;

    fn sub(self, rhs: &XPolynomial) -> XPolynomial {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a XPolynomial> for &'a XPolynomial {
    type Output = XPolynomial;

    fn mul(self, rhs: &XPolynomial) -> XPolynomial {
        if self.is_zero() || rhs.is_zero() {
            return XPolynomial::zero();
        }
        let mut coeffs = vec![RationalFunction::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] = &coeffs[i + j] + &(a * b);
                }
            }
        }
        XPolynomial::from_coeffs(coeffs)
    }
}

impl Neg for &XPolynomial {
    type Output = XPolynomial;

    fn neg(self) -> XPolynomial {
        XPolynomial { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Neg for XPolynomial {
    type Output = XPolynomial;

    fn neg(self) -> XPolynomial {
        XPolynomial { coeffs: self.coeffs.into_iter().map(|c| -c).collect() }
    }
}

forward_owned_binop!(XPolynomial, Add, add);
forward_owned_binop!(XPolynomial, Sub, sub);
forward_owned_binop!(XPolynomial, Mul, mul);
