//! q-brackets and alternating q-power sums.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::arith::{IntPolynomial, RationalFunction};

/// `[x]_q = 1 + q + ... + q^(x-1)`, with `[0]_q = 0`.
pub fn q_bracket(x: usize) -> IntPolynomial {
    IntPolynomial::from_coeffs(vec![BigInt::one(); x])
}

/// `[x]_{-q} = (1 - (-q)^x) / (1 + q)`.
pub fn q_bracket_neg(x: usize) -> RationalFunction {
    let sign = if x % 2 == 1 { 1 } else { -1 };
    let num = &IntPolynomial::one() + &IntPolynomial::monomial(sign, x);
    RationalFunction::new(num, IntPolynomial::from_i64s(&[1, 1])).expect("1 + q is nonzero")
}

/// `[2]_{q^w} = 1 + q^w`.
pub fn two_bracket(w: usize) -> IntPolynomial {
    &IntPolynomial::one() + &IntPolynomial::monomial(1, w)
}

/// `sum_{l=0}^{m} (-1)^l q^(w l) l^k`, with `0^0 = 1`.
pub fn alt_power_sum(k: u32, m: usize, w: usize) -> IntPolynomial {
    assert!(w >= 1, "q-power must be positive");
    let mut coeffs = vec![BigInt::zero(); m * w + 1];
    for l in 0..=m {
        let magnitude = BigInt::from(l).pow(k);
        coeffs[l * w] = if l % 2 == 1 { -magnitude } else { magnitude };
    }
    IntPolynomial::from_coeffs(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> IntPolynomial {
        IntPolynomial::from_i64s(c)
    }

    #[test]
    fn bracket_examples() {
        assert_eq!(q_bracket(3), p(&[1, 1, 1]));
        assert_eq!(q_bracket(0), p(&[]));
        assert_eq!(q_bracket(2), p(&[1, 1]));
    }

    #[test]
    fn negative_bracket_examples() {
        assert_eq!(q_bracket_neg(2), RationalFunction::from_poly(p(&[1, -1])));
        assert_eq!(q_bracket_neg(3), RationalFunction::from_poly(p(&[1, -1, 1])));
        assert_eq!(q_bracket_neg(0), RationalFunction::zero());
        assert_eq!(q_bracket_neg(1), RationalFunction::one());
    }

    #[test]
    fn alternating_sum_examples() {
        assert_eq!(alt_power_sum(1, 2, 1), p(&[0, -1, 2]));
        assert_eq!(alt_power_sum(0, 2, 1), p(&[1, -1, 1]));
        assert_eq!(alt_power_sum(3, 0, 5), p(&[]));
        assert_eq!(alt_power_sum(0, 0, 5), p(&[1]));
    }

    #[test]
    fn odd_length_geometric_sum_closes() {
        // (1 + q^(w m')) / (1 + q^w) for m' = m + 1 odd
        for w in 1..4 {
            for m in [0usize, 2, 4, 6] {
                let s = alt_power_sum(0, m, w);
                assert_eq!(&s * &two_bracket(w), two_bracket(w * (m + 1)));
            }
        }
    }

    proptest! {
        #[test]
        fn telescoping(k in 0u32..6, m in 0usize..8, w in 1usize..4) {
            let step = IntPolynomial::monomial(
                BigInt::from(m + 1).pow(k) * if (m + 1) % 2 == 1 { -1 } else { 1 },
                w * (m + 1),
            );
            prop_assert_eq!(&alt_power_sum(k, m, w) + &step, alt_power_sum(k, m + 1, w));
        }

        #[test]
        fn substitution_coherence(k in 0u32..6, m in 0usize..8, w in 1usize..5) {
            prop_assert_eq!(alt_power_sum(k, m, w), alt_power_sum(k, m, 1).subst_qpow(w));
        }
    }
}
