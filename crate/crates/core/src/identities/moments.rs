//! Moment identities of the fermionic measure: the reflection
//! `q H_n(-1/q, 1) + H_n(-1/q) = [2]_q [n = 0]` and its iterates over `n`
//! unit shifts.

use super::{BuiltCase, Comparison, IdentityId, Mode, Params, VerificationReport};
use crate::arith::{IntPolynomial, RationalFunction, XPolynomial};
use crate::error::{Error, Result};
use crate::frobenius_euler::fe_dual_poly;
use crate::qsums::{alt_power_sum, two_bracket};

pub fn verify_reflection_moment(n: usize) -> Result<VerificationReport> {
    build_reflection_moment(n).report(Mode::SymbolicQ)
}

pub fn build_reflection_moment(n: usize) -> BuiltCase {
    let h = fe_dual_poly(n, 1);
    let q = RationalFunction::q();
    let lhs = &(&q * &h.eval_x(&RationalFunction::one())) + &h.constant_term();
    let rhs = if n == 0 { RationalFunction::from_poly(two_bracket(1)) } else { RationalFunction::zero() };
    BuiltCase::new(
        IdentityId::ReflectionMoment,
        Params::new().with("n", n),
        Comparison::Sides { lhs: XPolynomial::constant(lhs), rhs: XPolynomial::constant(rhs) },
    )
}

/// `m`-th moment shifted by `n >= 1`: for odd `n`
/// `[2]_q sum_{l<n} (-1)^l q^l l^m = q^n H_m(-1/q, n) + H_m(-1/q)`,
/// for even `n` `q^n H_m(-1/q, n) - H_m(-1/q) = [2]_q sum_{l<n} (-1)^(l-1) q^l l^m`.
pub fn verify_shift_moment(m: usize, n: usize) -> Result<VerificationReport> {
    build_shift_moment(m, n)?.report(Mode::SymbolicQ)
}

pub fn build_shift_moment(m: usize, n: usize) -> Result<BuiltCase> {
    if n == 0 {
        return Err(Error::Precondition("shift n must be positive".into()));
    }
    let h = fe_dual_poly(m, 1);
    let shifted =
        &RationalFunction::from_poly(IntPolynomial::monomial(1, n)) * &h.eval_x(&RationalFunction::from_int(n as i64));
    let base = h.constant_term();
    let bracket_sum = RationalFunction::from_poly(&two_bracket(1) * &alt_power_sum(m as u32, n - 1, 1));
    let (id, lhs, rhs) = if n % 2 == 1 {
        (IdentityId::OddShiftMoment, bracket_sum, &shifted + &base)
    } else {
        (IdentityId::EvenShiftMoment, &shifted - &base, -bracket_sum)
    };
    Ok(BuiltCase::new(
        id,
        Params::new().with("m", m).with("n", n),
        Comparison::Sides { lhs: XPolynomial::constant(lhs), rhs: XPolynomial::constant(rhs) },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::Status;

    #[test]
    fn reflection_small_cases() {
        for n in 0..=4 {
            let r = verify_reflection_moment(n).unwrap();
            assert_eq!(r.status, Status::Holds, "n = {n}: {}", r.witness);
        }
    }

    #[test]
    fn shift_examples() {
        // both sides (2q^4 + 3q^3 - q)/(1 + q)
        let r = verify_shift_moment(1, 3).unwrap();
        assert_eq!(r.id, IdentityId::OddShiftMoment);
        assert!(r.holds());
        let h = fe_dual_poly(1, 1);
        let rhs = &(&RationalFunction::from_poly(IntPolynomial::monomial(1, 3))
            * &h.eval_x(&RationalFunction::from_int(3)))
            + &h.constant_term();
        let expected =
            RationalFunction::new(IntPolynomial::from_i64s(&[0, -1, 0, 3, 2]), IntPolynomial::from_i64s(&[1, 1]))
                .unwrap();
        assert_eq!(rhs, expected);

        assert!(verify_shift_moment(0, 1).unwrap().holds());
        let r = verify_shift_moment(1, 2).unwrap();
        assert_eq!(r.id, IdentityId::EvenShiftMoment);
        assert!(r.holds());
        assert!(verify_shift_moment(1, 0).is_err());
    }
}
