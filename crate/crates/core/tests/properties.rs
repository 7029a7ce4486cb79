use feq_core::corrected::{corrected_multiplication, corrected_shift_symmetry};
use feq_core::frobenius_euler::{eulerian_poly, fe_dual_poly, fe_number, fe_poly, fe_series_oracle};
use feq_core::identities::{classify, printed_sides, Grid};
use feq_core::qsums::alt_power_sum;
use feq_core::{BigRational, IdentityId, IntPolynomial, RationalFunction, TruncatedSeries, XPolynomial};
use num_bigint::BigInt;
use num_traits::{One, Zero};
use proptest::prelude::*;

fn ratio(n: i64, d: i64) -> BigRational {
    BigRational::new(n.into(), d.into())
}

fn x_power(n: usize) -> XPolynomial {
    XPolynomial::monomial(RationalFunction::one(), n)
}

proptest! {
    #[test]
    fn recurrence_matches_generating_function(n in 0usize..=10, a in -20i64..=20, b in 1i64..=9) {
        let u = ratio(a, b);
        prop_assume!(u != BigRational::one());
        let direct = fe_number(n).eval(&u).unwrap();
        prop_assert_eq!(direct, fe_series_oracle(n, &u).unwrap());
    }

    #[test]
    fn polynomials_are_appell(n in 1usize..=9) {
        let derived = fe_poly(n).derivative();
        prop_assert_eq!(derived, fe_poly(n - 1).scale_int(&BigInt::from(n)));
    }

    #[test]
    fn unit_difference_equation(n in 0usize..=9) {
        // H_n(x + 1) - q H_n(x) = (1 - q) x^n
        let h = fe_poly(n);
        let q = RationalFunction::q();
        let shifted = h.affine_subst(&RationalFunction::one(), &RationalFunction::one());
        let lhs = &shifted - &h.scale(&q);
        let rhs = x_power(n).scale(&(&RationalFunction::one() - &q));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn printed_sides_swap_under_scale_exchange(n in 0usize..=4, i in 0usize..3, j in 0usize..3) {
        let (w1, w2) = ([1, 3, 5][i], [1, 3, 5][j]);
        for id in [IdentityId::PrintedSymmetry, IdentityId::PrintedNumberSymmetry, IdentityId::PrintedShiftSymmetry] {
            let a = printed_sides(id, n, w1, w2).unwrap();
            let b = printed_sides(id, n, w2, w1).unwrap();
            prop_assert_eq!(&a.lhs, &b.rhs);
            prop_assert_eq!(&a.rhs, &b.lhs);
        }
    }

    #[test]
    fn alt_power_sums_agree_with_direct_sums(k in 0u32..6, m in 0usize..8, w in 1usize..4, q0 in -5i64..=5) {
        let q0 = BigRational::from_integer(q0.into());
        let mut direct = BigRational::zero();
        for l in 0..=m {
            let sign = if l % 2 == 0 { 1 } else { -1 };
            let term = BigRational::from_integer(BigInt::from(l).pow(k)) * q0.pow((w * l) as i32) * BigRational::from_integer(sign.into());
            direct += term;
        }
        prop_assert_eq!(alt_power_sum(k, m, w).eval(&q0), direct);
    }
}

#[test]
fn eulerian_numerators() {
    let q_minus_one = IntPolynomial::from_i64s(&[-1, 1]);
    for n in 1..=8 {
        let numer = fe_number(n) * RationalFunction::from_poly(q_minus_one.pow(n as u32));
        assert_eq!(numer, RationalFunction::from_poly(eulerian_poly(n).unwrap()), "n = {n}");
    }
}

#[test]
fn classical_euler_polynomials_at_one() {
    // 2 e^(xt) / (e^t + 1) with independent series arithmetic
    let order = 10;
    let one = BigRational::one();
    let denom = &TruncatedSeries::exp_linear(&one, order) + &TruncatedSeries::one(order);
    let euler_numbers = denom.invert().unwrap().scale(&BigRational::from_integer(2.into()));
    for n in 0..order {
        let mut expected = Vec::new();
        for k in 0..=n {
            let c = feq_core::binomial(n as u64, k as u64);
            let e = euler_numbers.coefficient(n - k).unwrap();
            expected.push(RationalFunction::from_rational(&(BigRational::from_integer(c) * e)));
        }
        let at_one = fe_dual_poly(n, 1).eval_q(&one).unwrap();
        assert_eq!(at_one, XPolynomial::from_coeffs(expected), "n = {n}");
    }
}

#[test]
fn printed_failure_witnesses_vanish_at_one() {
    let one = BigRational::one();
    for id in IdentityId::PRINTED {
        for n in 0..=4 {
            for w1 in [1, 3, 5] {
                for w2 in [1, 3, 5] {
                    if id.single_scale() && w2 != 1 || id == IdentityId::PrintedNumberRecurrence && (n == 0 || w1 == 1)
                    {
                        continue;
                    }
                    let s = printed_sides(id, n, w1, w2).unwrap();
                    let witness = &s.lhs - &s.rhs;
                    assert!(witness.eval_q(&one).unwrap().is_zero(), "{id} n={n} w1={w1} w2={w2}");
                }
            }
        }
    }
}

#[test]
fn corrected_multiplication_is_the_unit_shift_case() {
    for n in 0..=5 {
        for w in [1, 3, 5, 7] {
            let shift = corrected_shift_symmetry(n, w, 1).unwrap();
            let mult = corrected_multiplication(n, w).unwrap();
            assert_eq!(shift.witness, mult.witness);
            assert!(mult.holds());
        }
    }
}

#[test]
fn classification_is_deterministic() {
    let grid = Grid::new(3, 5, 6).excluding_degenerate();
    for id in IdentityId::ALL {
        assert_eq!(classify(id, &grid).unwrap(), classify(id, &grid).unwrap(), "{id}");
    }
}

#[test]
fn riemann_sum_differences_gain_a_digit_per_level() {
    use feq_core::padic::{fermionic_moment_scan, PAdicContext};
    for p in [3u64, 5, 7] {
        let ctx = PAdicContext::new(p, 4).unwrap();
        let q = BigRational::from_integer((p + 1).into());
        for scan in fermionic_moment_scan(6, &q, &ctx, 6).unwrap() {
            for (i, w) in scan.sums.windows(2).enumerate() {
                let level = i as u32 + 1;
                assert!((w[1] - w[0]).valuation().is_none_or(|v| v >= level), "p = {p} level {level}");
            }
        }
    }
}
