//! Fermionic q-integral moments in `Z/p^M`.
//!
//! The integral of `f` is the limit over `N` of
//! `(1 / [p^N]_{-q}) sum_{x < p^N} f(x) (-q)^x` with
//! `[p^N]_{-q} = (1 + q^(p^N)) / (1 + q)`. For rational `q = 1 (mod p)` and odd
//! `p` every sum is a `p`-integral rational, so it is evaluated directly with
//! machine residues.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::{binomial, BigRational};
use crate::error::{Error, Result};
use crate::frobenius_euler::fe_dual_number;

/// Prime `p` and precision `M`; values live in `Z/p^M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct PAdicContext {
    p: u64,
    precision: u32,
    #[serde(skip)]
    modulus: u64,
}

impl PAdicContext {
    /// Requires an odd prime `p` and `M >= 1` with `p^M < 2^63`.
    pub fn new(p: u64, precision: u32) -> Result<Self> {
        if p < 3 || !is_prime(p) {
            return Err(Error::InvalidContext(format!("p = {p} must be an odd prime")));
        }
        if precision == 0 {
            return Err(Error::InvalidContext("precision must be at least 1".into()));
        }
        let modulus = p
            .checked_pow(precision)
            .filter(|m| *m < 1 << 63)
            .ok_or_else(|| Error::InvalidContext(format!("{p}^{precision} does not fit in 63 bits")))?;
        Ok(Self { p, precision, modulus })
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn precision(&self) -> u32 {
        self.precision
    }

    /// `p^M`.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn zero(&self) -> PAdicNumber {
        PAdicNumber { residue: 0, ctx: *self }
    }

    pub fn one(&self) -> PAdicNumber {
        self.from_u64(1)
    }

    pub fn from_u64(&self, v: u64) -> PAdicNumber {
        PAdicNumber { residue: v % self.modulus, ctx: *self }
    }

    pub fn from_int(&self, v: &BigInt) -> PAdicNumber {
        let r = v.mod_floor(&BigInt::from(self.modulus));
        PAdicNumber { residue: r.to_u64().expect("reduced below modulus"), ctx: *self }
    }
}

impl fmt::Display for PAdicContext {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Z/{}^{}", self.p, self.precision)
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// A residue modulo `p^M`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PAdicNumber {
    residue: u64,
    ctx: PAdicContext,
}

impl PAdicNumber {
    pub fn residue(&self) -> u64 {
        self.residue
    }

    pub fn context(&self) -> &PAdicContext {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.residue == 0
    }

    pub fn is_unit(&self) -> bool {
        !self.residue.is_multiple_of(self.ctx.p)
    }

    /// `p`-adic valuation of the residue, `None` when it is zero to this
    /// precision.
    pub fn valuation(&self) -> Option<u32> {
        if self.residue == 0 {
            return None;
        }
        let mut r = self.residue;
        let mut v = 0;
        while r.is_multiple_of(self.ctx.p) {
            r /= self.ctx.p;
            v += 1;
        }
        Some(v)
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = self.ctx.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse; fails unless the residue is a unit.
    pub fn inverse(&self) -> Result<Self> {
        if !self.is_unit() {
            return Err(Error::NonInvertible);
        }
        let m = self.ctx.modulus as i128;
        let (mut r0, mut r1) = (m, self.residue as i128);
        let (mut s0, mut s1) = (0i128, 1i128);
        while r1 != 0 {
            let k = r0 / r1;
            (r0, r1) = (r1, r0 - k * r1);
            (s0, s1) = (s1, s0 - k * s1);
        }
        debug_assert_eq!(r0, 1);
        Ok(Self { residue: s0.rem_euclid(m) as u64, ctx: self.ctx })
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        self.same_context(&rhs)?;
        Ok(self + rhs)
    }

    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        self.same_context(&rhs)?;
        Ok(self * rhs)
    }

    fn same_context(&self, other: &Self) -> Result<()> {
        if self.ctx == other.ctx {
            Ok(())
        } else {
            Err(Error::ContextMismatch)
        }
    }
}

impl fmt::Display for PAdicNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} mod {}^{}", self.residue, self.ctx.p, self.ctx.precision)
    }
}

impl Serialize for PAdicNumber {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_u64(self.residue)
    }
}

// The operators panic on mixed contexts; use the checked forms when the
// contexts are not known to agree.
impl Add for PAdicNumber {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        assert_eq!(self.ctx, rhs.ctx, "p-adic context mismatch");
        let m = self.ctx.modulus;
        let s = self.residue + rhs.residue;
        Self { residue: if s >= m { s - m } else { s }, ctx: self.ctx }
    }
}

impl Sub for PAdicNumber {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl Neg for PAdicNumber {
    type Output = Self;
    fn neg(self) -> Self {
        let residue = if self.residue == 0 { 0 } else { self.ctx.modulus - self.residue };
        Self { residue, ctx: self.ctx }
    }
}

impl Mul for PAdicNumber {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        assert_eq!(self.ctx, rhs.ctx, "p-adic context mismatch");
        let r = (self.residue as u128 * rhs.residue as u128) % self.ctx.modulus as u128;
        Self { residue: r as u64, ctx: self.ctx }
    }
}

/// Image of a `p`-integral rational in `Z/p^M`.
pub fn rat_to_padic(r: &BigRational, ctx: &PAdicContext) -> Result<PAdicNumber> {
    let den = ctx.from_int(r.denom());
    if !den.is_unit() {
        return Err(Error::NotPAdicInteger);
    }
    Ok(ctx.from_int(r.numer()) * den.inverse()?)
}

pub fn padic_inv(a: &PAdicNumber) -> Result<PAdicNumber> {
    a.inverse()
}

/// Checks that `q` is a `p`-adic integer with `q = 1 (mod p)` and returns its
/// residue.
pub fn validate_q(q: &BigRational, ctx: &PAdicContext) -> Result<PAdicNumber> {
    let qp =
        rat_to_padic(q, ctx).map_err(|_| Error::Precondition(format!("q = {q} is not a {}-adic integer", ctx.p)))?;
    if (qp.residue % ctx.p) != 1 % ctx.p {
        return Err(Error::Precondition(format!("q = {q} must be 1 mod {}", ctx.p)));
    }
    Ok(qp)
}

/// Largest number of terms `p^N` the Riemann-sum evaluator accepts.
pub const MAX_TERMS: u64 = 100_000_000;

/// Riemann sums at level `N` for every moment `x^k`, `k <= n_max`, from one
/// pass over `0 <= x < p^N`.
pub fn fermionic_riemann_sums(
    n_max: usize,
    q: &BigRational,
    level: u32,
    ctx: &PAdicContext,
) -> Result<Vec<PAdicNumber>> {
    let qp = validate_q(q, ctx)?;
    if level == 0 {
        return Err(Error::Precondition("level N must be positive".into()));
    }
    let count = ctx
        .p
        .checked_pow(level)
        .filter(|&c| c <= MAX_TERMS)
        .ok_or_else(|| Error::Precondition(format!("level N = {level} is too large")))?;

    let m = ctx.modulus as u128;
    let step = (-qp).residue as u128;
    let mut sums = vec![0u128; n_max + 1];
    let mut weight = 1u128;
    for x in 0..count {
        let xr = (x % ctx.modulus) as u128;
        let mut term = weight;
        for s in sums.iter_mut() {
            *s += term;
            if *s >= m {
                *s -= m;
            }
            term = term * xr % m;
        }
        weight = weight * step % m;
    }

    // 1 / [p^N]_{-q} = (1 + q) / (1 + q^(p^N)); both factors are 2 mod p.
    let one = ctx.one();
    let normalizer = (one + qp) * (one + qp.pow(count)).inverse()?;
    Ok(sums.into_iter().map(|s| PAdicNumber { residue: s as u64, ctx: *ctx } * normalizer).collect())
}

/// The level-`N` Riemann sum for `x^n`.
pub fn fermionic_riemann_sum(n: usize, q: &BigRational, level: u32, ctx: &PAdicContext) -> Result<PAdicNumber> {
    Ok(fermionic_riemann_sums(n, q, level, ctx)?[n])
}

/// A stabilized moment.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MomentLimit {
    pub value: PAdicNumber,
    /// First `N` from which every sum up to the level cap is equal.
    pub stabilized_level: u32,
    /// Sums at levels `1, 2, ..., level_max`.
    pub sums: Vec<PAdicNumber>,
}

/// Riemann sums of one moment at levels `1..=level_max`.
///
/// Two consecutive sums can agree by accident below level `M` (for `p = 3`,
/// `q = 4`, `M = 4` the fifth moment has `S_1 = S_2 = 64` against a limit of
/// 37), so the stabilized level is the first `N < level_max` after which the
/// sequence stays constant, not the first consecutive agreement.
#[derive(Debug, Clone, PartialEq)]
pub struct MomentScan {
    pub sums: Vec<PAdicNumber>,
}

impl MomentScan {
    pub fn level_max(&self) -> u32 {
        self.sums.len() as u32
    }

    pub fn stabilized_level(&self) -> Option<u32> {
        let last = self.sums.last()?;
        let run = self.sums.iter().rev().take_while(|s| *s == last).count();
        (run >= 2).then(|| (self.sums.len() - run + 1) as u32)
    }

    /// First `N` with `S_N = S_(N+1)`, whether or not the agreement lasts.
    pub fn first_agreement(&self) -> Option<u32> {
        self.sums.windows(2).position(|w| w[0] == w[1]).map(|i| i as u32 + 1)
    }

    pub fn limit(&self) -> Result<MomentLimit> {
        let level = self.stabilized_level().ok_or(Error::DidNotStabilize(self.level_max()))?;
        Ok(MomentLimit { value: self.sums[level as usize - 1], stabilized_level: level, sums: self.sums.clone() })
    }
}

/// Limit of the Riemann sums for `x^n`, judged on levels `1..=level_max`.
pub fn fermionic_moment_limit(n: usize, q: &BigRational, ctx: &PAdicContext, level_max: u32) -> Result<MomentLimit> {
    fermionic_moment_scan(n, q, ctx, level_max)?[n].limit()
}

/// Scans every moment `k <= n_max`, sharing one pass per level.
pub fn fermionic_moment_scan(
    n_max: usize,
    q: &BigRational,
    ctx: &PAdicContext,
    level_max: u32,
) -> Result<Vec<MomentScan>> {
    validate_q(q, ctx)?;
    let mut scans = vec![MomentScan { sums: Vec::new() }; n_max + 1];
    for level in 1..=level_max {
        for (scan, s) in scans.iter_mut().zip(fermionic_riemann_sums(n_max, q, level, ctx)?) {
            scan.sums.push(s);
        }
    }
    Ok(scans)
}

/// `H_n(-q^(-1))` at the rational `q`, reduced mod `p^M`.
pub fn closed_form_moment(n: usize, q: &BigRational, ctx: &PAdicContext) -> Result<PAdicNumber> {
    rat_to_padic(&fe_dual_number(n, 1).eval(q)?, ctx)
}

/// `q I((x+1)^n) + I(x^n) - [2]_q [n = 0]` computed from the stabilized
/// moments; zero when the reflection law holds to this precision.
pub fn reflection_residual(n: usize, q: &BigRational, ctx: &PAdicContext, level_max: u32) -> Result<PAdicNumber> {
    let qp = validate_q(q, ctx)?;
    let limits =
        fermionic_moment_scan(n, q, ctx, level_max)?.iter().map(MomentScan::limit).collect::<Result<Vec<_>>>()?;
    let mut shifted = ctx.zero();
    for (k, lim) in limits.iter().enumerate() {
        shifted = shifted + ctx.from_int(&binomial(n as u64, k as u64)) * lim.value;
    }
    let mut residual = qp * shifted + limits[n].value;
    if n == 0 {
        residual = residual - (ctx.one() + qp);
    }
    Ok(residual)
}

/// Whether a rational is `p`-integral, i.e. has a residue in `Z/p^M`.
pub fn is_p_integral(r: &BigRational, ctx: &PAdicContext) -> bool {
    !(r.denom() % BigInt::from(ctx.p)).is_zero()
}
