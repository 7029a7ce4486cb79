//! The symmetry, scaling and multiplication statements exactly as printed,
//! all at the single parameter `-1/q`.

use num_bigint::BigInt;

use super::{require_odd, BuiltCase, Comparison, IdentityId, Mode, Params, VerificationReport};
use crate::arith::{binomial, BigRational, IntPolynomial, RationalFunction, XPolynomial};
use crate::error::{Error, Result};
use crate::frobenius_euler::FePolyTable;
use crate::qsums::alt_power_sum;

/// Both sides of a printed statement, in `Q(q)[x]`.
#[derive(Debug, Clone, PartialEq)]
pub struct PrintedSides {
    pub lhs: XPolynomial,
    pub rhs: XPolynomial,
}

fn int(v: usize) -> BigInt {
    BigInt::from(v)
}

fn pow(base: usize, e: usize) -> BigInt {
    int(base).pow(e as u32)
}

/// `sum_i C(n,i) h_i(b x) S_{n-i,q^b}(a-1) a^i b^(n-i)` where `h_i` is taken
/// from `table`.
pub(crate) fn symmetry_sum(n: usize, a: usize, b: usize, table: &FePolyTable) -> XPolynomial {
    let b_rf = RationalFunction::from_int(b as i64);
    let mut acc = XPolynomial::zero();
    for i in 0..=n {
        let s = RationalFunction::from_poly(alt_power_sum((n - i) as u32, a - 1, b));
        let weight = binomial(n as u64, i as u64) * pow(a, i) * pow(b, n - i);
        let term = table.get(i).scale_x(&b_rf).scale(&s).scale_int(&weight);
        acc = &acc + &term;
    }
    acc
}

/// `a^n sum_{l<a} (-1)^l q^(b l) h(b x + (b/a) l)`.
pub(crate) fn shift_sum(n: usize, a: usize, b: usize, h: &XPolynomial) -> XPolynomial {
    let b_rf = RationalFunction::from_int(b as i64);
    let mut acc = XPolynomial::zero();
    for l in 0..a {
        let shift = RationalFunction::from_rational(&BigRational::new(int(b * l), int(a)));
        let sign = if l % 2 == 1 { -1 } else { 1 };
        let weight = RationalFunction::from_poly(IntPolynomial::monomial(sign, b * l));
        acc = &acc + &h.affine_subst(&b_rf, &shift).scale(&weight);
    }
    acc.scale_int(&pow(a, n))
}

fn check_scales(id: IdentityId, n: usize, w1: usize, w2: usize) -> Result<()> {
    require_odd("w1", w1)?;
    require_odd("w2", w2)?;
    if id.single_scale() && w2 != 1 {
        return Err(Error::Precondition(format!("{id} fixes w2 = 1")));
    }
    if id == IdentityId::PrintedNumberRecurrence && (w1 <= 1 || n == 0) {
        return Err(Error::Precondition(format!("{id} needs w1 > 1 and n >= 1")));
    }
    Ok(())
}

/// Builds both printed sides without comparing them.
pub fn printed_sides(id: IdentityId, n: usize, w1: usize, w2: usize) -> Result<PrintedSides> {
    if !IdentityId::PRINTED.contains(&id) {
        return Err(Error::Precondition(format!("{id} is not a printed statement")));
    }
    check_scales(id, n, w1, w2)?;
    let table = FePolyTable::new(n).dual(1);
    let w1_rf = RationalFunction::from_int(w1 as i64);
    let numbers = |i: usize| XPolynomial::constant(table.get(i).constant_term());

    let (lhs, rhs) = match id {
        IdentityId::PrintedSymmetry => (symmetry_sum(n, w1, w2, &table), symmetry_sum(n, w2, w1, &table)),
        IdentityId::PrintedNumberSymmetry => {
            let side = |a: usize, b: usize| {
                let mut acc = XPolynomial::zero();
                for i in 0..=n {
                    let s = RationalFunction::from_poly(alt_power_sum((n - i) as u32, a - 1, b));
                    let weight = binomial(n as u64, i as u64) * pow(a, i) * pow(b, n - i);
                    acc = &acc + &numbers(i).scale(&s).scale_int(&weight);
                }
                acc
            };
            (side(w1, w2), side(w2, w1))
        }
        IdentityId::PrintedScaling => {
            let mut rhs = XPolynomial::zero();
            for i in 0..=n {
                let s = RationalFunction::from_poly(alt_power_sum((n - i) as u32, w1 - 1, 1));
                let weight = binomial(n as u64, i as u64) * pow(w1, i);
                rhs = &rhs + &table.get(i).scale(&s).scale_int(&weight);
            }
            (table.get(n).scale_x(&w1_rf), rhs)
        }
        IdentityId::PrintedNumberRecurrence => {
            let mut sum = XPolynomial::zero();
            for i in 0..n {
                let s = RationalFunction::from_poly(alt_power_sum((n - i) as u32, w1 - 1, 1));
                let weight = binomial(n as u64, i as u64) * pow(w1, i);
                sum = &sum + &numbers(i).scale(&s).scale_int(&weight);
            }
            let factor = RationalFunction::from_rational(&BigRational::new(1.into(), BigInt::from(1) - pow(w1, n)));
            (numbers(n), sum.scale(&factor))
        }
        IdentityId::PrintedShiftSymmetry => {
            let h = table.get(n);
            (shift_sum(n, w1, w2, h), shift_sum(n, w2, w1, h))
        }
        IdentityId::PrintedMultiplication => {
            let h = table.get(n);
            (h.scale_x(&w1_rf), shift_sum(n, w1, 1, h))
        }
        _ => unreachable!(),
    };
    Ok(PrintedSides { lhs, rhs })
}

/// Verifies a printed statement verbatim in the requested mode.
pub fn verify_printed(id: IdentityId, n: usize, w1: usize, w2: usize, mode: Mode) -> Result<VerificationReport> {
    build_printed(id, n, w1, w2)?.report(mode)
}

pub fn build_printed(id: IdentityId, n: usize, w1: usize, w2: usize) -> Result<BuiltCase> {
    let PrintedSides { lhs, rhs } = printed_sides(id, n, w1, w2)?;
    let mut params = Params::new().with("n", n).with("w1", w1);
    if !id.single_scale() {
        params = params.with("w2", w2);
    }
    let mut case = BuiltCase::new(id, params, Comparison::Sides { lhs, rhs });
    let odd_hypothesis = matches!(
        id,
        IdentityId::PrintedSymmetry
            | IdentityId::PrintedNumberSymmetry
            | IdentityId::PrintedNumberRecurrence
            | IdentityId::PrintedShiftSymmetry
    );
    if odd_hypothesis && n.is_multiple_of(2) {
        case = case.note("n is even; the printed hypothesis asks for odd n");
    }
    Ok(case)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::identities::Status;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn symmetry_witness_n1_w3_w1() {
        let r = verify_printed(IdentityId::PrintedSymmetry, 1, 3, 1, Mode::SymbolicQ).unwrap();
        assert_eq!(r.status, Status::Fails);
        // -q(q-1)(q-3)/(1+q) = (-q^3 + 4q^2 - 3q)/(1+q)
        let slice = RationalFunction::new(p(&[0, -3, 4, -1]), p(&[1, 1])).unwrap();
        assert_eq!(r.witness.coeff(0), slice);
        assert_eq!(r.witness.coeff(1), RationalFunction::from_poly(p(&[0, -3, 3])));
        assert_eq!(r.witness.degree(), Some(1));
    }

    #[test]
    fn symmetry_spot_check_at_two() {
        let sides = printed_sides(IdentityId::PrintedSymmetry, 1, 3, 1).unwrap();
        let two = BigRational::from_integer(2.into());
        let lhs = sides.lhs.eval_q(&two).unwrap().constant_term();
        let rhs = sides.rhs.eval_q(&two).unwrap().constant_term();
        assert_eq!(lhs, RationalFunction::zero());
        assert_eq!(rhs, RationalFunction::from_rational(&BigRational::new((-2).into(), 3.into())));
    }

    #[test]
    fn symmetry_holds_at_one_and_on_diagonal() {
        assert!(verify_printed(IdentityId::PrintedSymmetry, 1, 3, 1, Mode::AtQ1).unwrap().holds());
        assert!(verify_printed(IdentityId::PrintedSymmetry, 4, 5, 5, Mode::SymbolicQ).unwrap().holds());
    }

    #[test]
    fn preconditions() {
        assert!(verify_printed(IdentityId::PrintedSymmetry, 1, 2, 1, Mode::SymbolicQ).is_err());
        assert!(verify_printed(IdentityId::PrintedMultiplication, 1, 3, 3, Mode::SymbolicQ).is_err());
        assert!(verify_printed(IdentityId::PrintedNumberRecurrence, 1, 1, 1, Mode::SymbolicQ).is_err());
        assert!(verify_printed(IdentityId::PrintedNumberRecurrence, 0, 3, 1, Mode::SymbolicQ).is_err());
        assert!(verify_printed(IdentityId::ReflectionMoment, 1, 1, 1, Mode::SymbolicQ).is_err());
    }

    #[test]
    fn even_n_is_annotated() {
        let r = verify_printed(IdentityId::PrintedSymmetry, 2, 3, 1, Mode::AtQ1).unwrap();
        assert_eq!(r.notes.len(), 1);
        let r = verify_printed(IdentityId::PrintedMultiplication, 2, 3, 1, Mode::AtQ1).unwrap();
        assert!(r.notes.is_empty());
    }
}
