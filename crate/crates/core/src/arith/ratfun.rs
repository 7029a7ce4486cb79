use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use super::intpoly::forward_owned_binop;
use super::{gcd, BigRational, IntPolynomial};
use crate::error::{Error, Result};

/// Element of `Q(q)` kept as `num/den` over `Z[q]` in canonical form:
/// `gcd(num, den) = 1` in `Z[q]` (contents included), `den` has a positive
/// leading coefficient, and zero is `0/1`. Structural equality is therefore
/// mathematical equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RationalFunction {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl RationalFunction {
    /// Builds the canonical reduced form of `num/den`.
    pub fn new(num: IntPolynomial, den: IntPolynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduce(num, den))
    }

    fn reduce(num: IntPolynomial, den: IntPolynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = gcd(&num, &den);
        let (num, den) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).expect("gcd divides numerator"), den.div_exact(&g).expect("gcd divides denominator"))
        };
        Self::fix_sign(num, den)
    }

    fn fix_sign(num: IntPolynomial, den: IntPolynomial) -> Self {
        if den.leading_coeff().is_some_and(Signed::is_negative) {
            Self { num: -num, den: -den }
        } else {
            Self { num, den }
        }
    }

    /// Divides out a common integer content; the polynomial parts are
    /// already coprime.
    fn from_coprime(num: IntPolynomial, den: IntPolynomial) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let c = num.content().gcd(&den.content());
        Self::fix_sign(num.div_exact_int(&c), den.div_exact_int(&c))
    }

    /// Caller guarantees canonical form.
    pub(crate) fn from_parts_unchecked(num: IntPolynomial, den: IntPolynomial) -> Self {
        let out = Self { num, den };
        debug_assert!(out.is_canonical(), "non-canonical rational function {out}");
        out
    }

    pub fn zero() -> Self {
        Self { num: IntPolynomial::zero(), den: IntPolynomial::one() }
    }

    pub fn one() -> Self {
        Self::from_poly(IntPolynomial::one())
    }

    /// The indeterminate `q`.
    pub fn q() -> Self {
        Self::from_poly(IntPolynomial::q())
    }

    pub fn from_poly(p: IntPolynomial) -> Self {
        Self { num: p, den: IntPolynomial::one() }
    }

    pub fn from_int(c: impl Into<BigInt>) -> Self {
        Self::from_poly(IntPolynomial::constant(c))
    }

    pub fn from_rational(r: &BigRational) -> Self {
        Self { num: IntPolynomial::constant(r.numer().clone()), den: IntPolynomial::constant(r.denom().clone()) }
    }

    pub fn numer(&self) -> &IntPolynomial {
        &self.num
    }

    pub fn denom(&self) -> &IntPolynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    /// The value when `self` does not depend on `q`.
    pub fn as_rational(&self) -> Option<BigRational> {
        self.is_constant().then(|| BigRational::new(self.num.coeff(0), self.den.coeff(0)))
    }

    /// Checks the canonical-form invariants.
    pub fn is_canonical(&self) -> bool {
        if self.den.is_zero() || self.den.leading_coeff().is_some_and(Signed::is_negative) {
            return false;
        }
        if self.num.is_zero() {
            return self.den.is_one();
        }
        gcd(&self.num, &self.den).is_one()
    }

    /// Exact value at `q = q0`.
    pub fn eval(&self, q0: &BigRational) -> Result<BigRational> {
        let d = self.den.eval(q0);
        if d.is_zero() {
            return Err(Error::Pole);
        }
        Ok(self.num.eval(q0) / d)
    }

    /// Substitutes `q -> q^w`. Coprimality survives the substitution, so no
    /// gcd is needed.
    pub fn subst_qpow(&self, w: usize) -> Self {
        Self::from_parts_unchecked(self.num.subst_qpow(w), self.den.subst_qpow(w))
    }

    /// Substitutes `q -> -q^(-w)` and clears the negative powers by
    /// multiplying numerator and denominator by `q^(w * deg)`.
    pub fn subst_neg_inv_pow(&self, w: usize) -> Result<Self> {
        assert!(w >= 1, "substitution exponent must be positive");
        let deg = self.num.degree().unwrap_or(0).max(self.den.degree().unwrap_or(0));
        let flip = |p: &IntPolynomial| {
            let mut coeffs = vec![BigInt::zero(); deg * w + 1];
            for (i, c) in p.coeffs().iter().enumerate() {
                coeffs[(deg - i) * w] = if i % 2 == 1 { -c } else { c.clone() };
            }
            IntPolynomial::from_coeffs(coeffs)
        };
        let den = flip(&self.den);
        if den.is_zero() {
            return Err(Error::FormalPole(w as u32));
        }
        Ok(Self::reduce(flip(&self.num), den))
    }

    pub fn inverse(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        Some(Self::fix_sign(self.den.clone(), self.num.clone()))
    }

    pub fn pow(&self, e: u32) -> Self {
        Self::fix_sign(self.num.pow(e), self.den.pow(e))
    }

    pub fn scale_int(&self, c: &BigInt) -> Self {
        if c.is_zero() || self.is_zero() {
            return Self::zero();
        }
        let dc = self.den.content();
        let g = c.gcd(&dc);
        Self { num: self.num.scale(&(c / &g)), den: self.den.div_exact_int(&g) }
    }
}

impl Default for RationalFunction {
    fn default() -> Self {
        Self::zero()
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "({})/({})", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RationalFunction({self})")
    }
}

#[derive(Serialize, Deserialize)]
struct RawRationalFunction {
    num: IntPolynomial,
    den: IntPolynomial,
}

impl Serialize for RationalFunction {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RawRationalFunction { num: self.num.clone(), den: self.den.clone() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for RationalFunction {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = RawRationalFunction::deserialize(d)?;
        Self::new(raw.num, raw.den).map_err(de::Error::custom)
    }
}

impl From<IntPolynomial> for RationalFunction {
    fn from(p: IntPolynomial) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for RationalFunction {
    fn from(c: i64) -> Self {
        Self::from_int(c)
    }
}

impl<'a> Add<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;

    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RationalFunction::reduce(&self.num + &rhs.num, self.den.clone());
        }
        if self.den.is_one() {
            return RationalFunction::fix_sign(&self.num * &rhs.den + &rhs.num, rhs.den.clone());
        }
        if rhs.den.is_one() {
            return RationalFunction::fix_sign(&rhs.num * &self.den + &self.num, self.den.clone());
        }
        let g = gcd(&self.den, &rhs.den);
        let d1 = self.den.div_exact(&g).unwrap();
        let d2 = rhs.den.div_exact(&g).unwrap();
        let num = &self.num * &d2 + &rhs.num * &d1;
        RationalFunction::reduce(num, &self.den * &d2)
    }
}

impl<'a> Sub<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;

    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl<'a> Mul<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;

    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        if self.is_one() {
            return rhs.clone();
        }
        if rhs.is_one() {
            return self.clone();
        }
        let g1 = gcd(&self.num, &rhs.den);
        let g2 = gcd(&rhs.num, &self.den);
        let cancel = |p: &IntPolynomial, g: &IntPolynomial| {
            if g.is_one() {
                p.clone()
            } else {
                p.div_exact(g).unwrap()
            }
        };
        let num = cancel(&self.num, &g1) * cancel(&rhs.num, &g2);
        let den = cancel(&self.den, &g2) * cancel(&rhs.den, &g1);
        RationalFunction::from_coprime(num, den)
    }
}

impl<'a> Div<&'a RationalFunction> for &'a RationalFunction {
    type Output = RationalFunction;

    /// Panics on division by the zero rational function.
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: &RationalFunction) -> RationalFunction {
        self * &rhs.inverse().expect("division by zero rational function")
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction { num: -&self.num, den: self.den.clone() }
    }
}

impl Neg for RationalFunction {
    type Output = RationalFunction;

    fn neg(self) -> RationalFunction {
        RationalFunction { num: -self.num, den: self.den }
    }
}

forward_owned_binop!(RationalFunction, Add, add);
forward_owned_binop!(RationalFunction, Sub, sub);
forward_owned_binop!(RationalFunction, Mul, mul);
forward_owned_binop!(RationalFunction, Div, div);
