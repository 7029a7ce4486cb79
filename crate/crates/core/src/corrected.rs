//! Corrected symmetry and multiplication identities.
//!
//! All three come from one kernel,
//! `e^(w1 w2 x t) (q^(w1 w2) e^(w1 w2 t) + 1) / ((q^w1 e^(w1 t) + 1)(q^w2 e^(w2 t) + 1))`,
//! which is symmetric in `w1, w2`. Expanding it with Frobenius-Euler
//! polynomials at `-q^(-w1)` leaves a factor `1 / [2]_{q^w1}`; the printed
//! forms drop that normalizer and use `-1/q` throughout.

use crate::arith::{RationalFunction, XPolynomial};
use crate::error::Result;
use crate::frobenius_euler::FePolyTable;
use crate::identities::{
    require_odd, shift_sum, symmetry_sum, BuiltCase, Comparison, IdentityId, Mode, Params, VerificationReport,
};
use crate::qsums::two_bracket;

fn bracket(w: usize) -> RationalFunction {
    RationalFunction::from_poly(two_bracket(w))
}

fn dual_table(n: usize, w: usize) -> FePolyTable {
    FePolyTable::new(n).dual(w)
}

pub fn corrected_symmetry(n: usize, w1: usize, w2: usize) -> Result<VerificationReport> {
    build_corrected_symmetry(n, w1, w2)?.report(Mode::SymbolicQ)
}

/// `[2]_{q^w2} sum_i C(n,i) H_i(-q^(-w1), w2 x) S_{n-i,q^w2}(w1-1) w1^i w2^(n-i)`
/// against the same with `w1, w2` swapped.
pub fn build_corrected_symmetry(n: usize, w1: usize, w2: usize) -> Result<BuiltCase> {
    require_odd("w1", w1)?;
    require_odd("w2", w2)?;
    let side = |a: usize, b: usize| symmetry_sum(n, a, b, &dual_table(n, a)).scale(&bracket(b));
    let lhs = side(w1, w2);
    let rhs = if w1 == w2 { lhs.clone() } else { side(w2, w1) };
    Ok(BuiltCase::new(
        IdentityId::CorrectedSymmetry,
        Params::new().with("n", n).with("w1", w1).with("w2", w2),
        Comparison::Sides { lhs, rhs },
    ))
}

pub fn corrected_shift_symmetry(n: usize, w1: usize, w2: usize) -> Result<VerificationReport> {
    build_corrected_shift_symmetry(n, w1, w2)?.report(Mode::SymbolicQ)
}

/// `[2]_{q^w2} w1^n sum_{l<w1} (-1)^l q^(w2 l) H_n(-q^(-w1), w2 x + w2 l / w1)`
/// against the same with `w1, w2` swapped.
pub fn build_corrected_shift_symmetry(n: usize, w1: usize, w2: usize) -> Result<BuiltCase> {
    require_odd("w1", w1)?;
    require_odd("w2", w2)?;
    let side = |a: usize, b: usize| shift_sum(n, a, b, dual_table(n, a).get(n)).scale(&bracket(b));
    let lhs = side(w1, w2);
    let rhs = if w1 == w2 { lhs.clone() } else { side(w2, w1) };
    Ok(BuiltCase::new(
        IdentityId::CorrectedShift,
        Params::new().with("n", n).with("w1", w1).with("w2", w2),
        Comparison::Sides { lhs, rhs },
    ))
}

pub fn corrected_multiplication(n: usize, w: usize) -> Result<VerificationReport> {
    build_corrected_multiplication(n, w)?.report(Mode::SymbolicQ)
}

/// `[2]_q w^n sum_{l<w} (-1)^l q^l H_n(-q^(-w), x + l/w) = [2]_{q^w} H_n(-q^(-1), w x)`.
pub fn build_corrected_multiplication(n: usize, w: usize) -> Result<BuiltCase> {
    require_odd("w", w)?;
    let lhs = shift_sum(n, w, 1, dual_table(n, w).get(n)).scale(&bracket(1));
    let rhs = dual_table(n, 1).get(n).scale_x(&RationalFunction::from_int(w as i64)).scale(&bracket(w));
    Ok(BuiltCase::new(
        IdentityId::CorrectedMult,
        Params::new().with("n", n).with("w", w),
        Comparison::Sides { lhs, rhs },
    ))
}

/// Left side of the corrected symmetry, exposed for property tests.
pub fn corrected_symmetry_side(n: usize, w1: usize, w2: usize) -> Result<XPolynomial> {
    require_odd("w1", w1)?;
    require_odd("w2", w2)?;
    Ok(symmetry_sum(n, w1, w2, &dual_table(n, w1)).scale(&bracket(w2)))
}
