//! Generating-function ratio identities, checked as truncated series in `t`.
//!
//! Integrals against the fermionic measure are expanded through their
//! moments: `int e^{(y + X) s} dmu(y) = sum H_n(-1/q, X) s^n/n!`. The weighted
//! integral `int q^{(N-1)y} e^{N y t} dmu(y)` is the same construction for
//! the measure at `q^N`, rescaled by `(1 + q)/(1 + q^N)`, which gives the
//! moment series `(1 + q)/(1 + q^N) sum H_n(-q^-N) N^n t^n/n!`.

use num_bigint::BigInt;

use super::{require_odd, BuiltCase, Comparison, IdentityId, Mode, Params, VerificationReport};
use crate::arith::{IntPolynomial, RationalFunction, TruncatedSeries, XPolynomial};
use crate::error::Result;
use crate::frobenius_euler::{FeNumberTable, FePolyTable};
use crate::qsums::{alt_power_sum, two_bracket};

type Series = TruncatedSeries<XPolynomial>;

fn rf(p: IntPolynomial) -> XPolynomial {
    XPolynomial::constant(RationalFunction::from_poly(p))
}

/// `q^a e^{w t} + 1`.
fn q_exp_plus_one(a: usize, w: usize, order: usize) -> Series {
    let qa = IntPolynomial::monomial(1, a);
    let mut s = Series::exp_linear(&XPolynomial::one(), order).dilate(&BigInt::from(w)).scale(&rf(qa));
    let mut coeffs = s.into_coeffs();
    coeffs[0] = &coeffs[0] + &XPolynomial::one();
    s = Series::new(order, coeffs);
    s
}

/// Moment series of `int q^{(N-1)y} e^{N y t} dmu_{-q}(y)`.
fn weighted_moment_series(numbers: &FeNumberTable, big_n: usize, order: usize) -> Result<Series> {
    let normalizer = RationalFunction::new(two_bracket(1), two_bracket(big_n))?;
    let coeffs = numbers
        .entries()
        .iter()
        .take(order + 1)
        .map(|h| Ok(XPolynomial::constant(&h.subst_neg_inv_pow(big_n)? * &normalizer)))
        .collect::<Result<Vec<_>>>()?;
    Ok(Series::new(order, coeffs).dilate(&BigInt::from(big_n)))
}

/// Double integral ratio: the moment expansion of
/// `int int e^{(w1 y1 + w2 y2 + w1 w2 x) t} / int q^{(w1 w2 - 1) y} e^{w1 w2 y t}`
/// against `[2]_q e^{w1 w2 x t} (q^{w1 w2} e^{w1 w2 t} + 1) / ((q e^{w1 t} + 1)(q e^{w2 t} + 1))`.
pub fn verify_double_integral_ratio(w1: usize, w2: usize, order: usize) -> Result<VerificationReport> {
    build_double_integral_ratio(w1, w2, order)?.report(Mode::SymbolicQ)
}

pub fn build_double_integral_ratio(w1: usize, w2: usize, order: usize) -> Result<BuiltCase> {
    require_odd("w1", w1)?;
    require_odd("w2", w2)?;
    let big_n = w1 * w2;
    let exp_x = Series::exp_linear(&XPolynomial::x().scale_int(&BigInt::from(big_n)), order);
    let closed = &(&(&exp_x * &q_exp_plus_one(big_n, big_n, order)) * &q_exp_plus_one(1, w1, order).invert()?)
        * &q_exp_plus_one(1, w2, order).invert()?;
    let closed = closed.scale(&rf(two_bracket(1)));

    let numbers = FeNumberTable::new(order);
    let duals = FePolyTable::from_numbers(&numbers).dual(1);
    let w2_rf = RationalFunction::from_int(w2 as i64);
    let first =
        Series::new(order, duals.entries().iter().map(|h| h.scale_x(&w2_rf)).collect()).dilate(&BigInt::from(w1));
    let second = Series::new(order, duals.entries().iter().map(|h| XPolynomial::constant(h.constant_term())).collect())
        .dilate(&BigInt::from(w2));
    let moments = &(&first * &second) * &weighted_moment_series(&numbers, big_n, order)?.invert()?;

    Ok(BuiltCase::new(
        IdentityId::DoubleIntegralRatio,
        Params::new().with("w1", w1).with("w2", w2).with("T", order),
        Comparison::Series(vec![&closed - &moments]),
    ))
}

/// `[2]_q (q^w e^{wt} + 1)/(q e^t + 1)` against `[2]_q sum_{l<w} (-1)^l q^l e^{lt}`,
/// against `sum_k [2]_q S_{k,q}(w-1) t^k/k!`, and against the moment
/// expansion of `[2]_q int e^{yt} / int q^{(w-1)y} e^{w y t}`.
pub fn verify_power_sum_ratio(w: usize, order: usize) -> Result<VerificationReport> {
    build_power_sum_ratio(w, order)?.report(Mode::SymbolicQ)
}

pub fn build_power_sum_ratio(w: usize, order: usize) -> Result<BuiltCase> {
    require_odd("w", w)?;
    let bracket = rf(two_bracket(1));
    let closed = (&q_exp_plus_one(w, w, order) * &q_exp_plus_one(1, 1, order).invert()?).scale(&bracket);

    let mut geometric = Series::zero(order);
    for l in 0..w {
        let sign = if l % 2 == 1 { -1 } else { 1 };
        let weight = rf(IntPolynomial::monomial(sign, l));
        let term =
            Series::exp_linear(&XPolynomial::constant(RationalFunction::from_int(l as i64)), order).scale(&weight);
        geometric = &geometric + &term;
    }
    let geometric = geometric.scale(&bracket);

    let power_sums =
        Series::new(order, (0..=order).map(|k| rf(&two_bracket(1) * &alt_power_sum(k as u32, w - 1, 1))).collect());

    let numbers = FeNumberTable::new(order);
    let moments_of_measure = Series::new(
        order,
        numbers
            .entries()
            .iter()
            .map(|h| XPolynomial::constant(h.subst_neg_inv_pow(1).expect("nonzero denominator")))
            .collect(),
    );
    let moments = (&moments_of_measure * &weighted_moment_series(&numbers, w, order)?.invert()?).scale(&bracket);

    Ok(BuiltCase::new(
        IdentityId::PowerSumRatio,
        Params::new().with("w", w).with("T", order),
        Comparison::Series(vec![&closed - &geometric, &geometric - &power_sums, &moments - &closed]),
    ))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn double_ratio_small() {
        assert!(verify_double_integral_ratio(1, 1, 6).unwrap().holds());
        assert!(verify_double_integral_ratio(3, 1, 5).unwrap().holds());
        assert!(verify_double_integral_ratio(2, 1, 5).is_err());
    }

    #[test]
    fn power_sum_ratio_small() {
        assert!(verify_power_sum_ratio(1, 5).unwrap().holds());
        assert!(verify_power_sum_ratio(3, 6).unwrap().holds());
        assert!(verify_power_sum_ratio(4, 6).is_err());
    }

    #[test]
    fn series_helper_shape() {
        let s = q_exp_plus_one(2, 3, 2);
        let q2 = IntPolynomial::monomial(1, 2);
        assert_eq!(s.coeffs()[0], rf(&q2 + &IntPolynomial::one()));
        assert_eq!(s.coeffs()[2], rf(q2.scale(&BigInt::from(9))));
    }
}
