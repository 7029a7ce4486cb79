//! Frobenius-Euler numbers `H_n(q)` and polynomials `H_n(q, x)`, defined by
//! `sum H_n(q, x) t^n/n! = (1 - q) e^{xt} / (e^t - q)`, their duals at the
//! parameter `-q^(-w)`, and two independent oracles: the truncated series
//! itself and the descent statistic on permutations.
//!
//! The numbers are produced through their Eulerian numerators
//! `A_n(q) = (q - 1)^n H_n(q)`, which satisfy
//! `A_n = sum_{k<n} C(n,k) A_k (q - 1)^(n-1-k)` with `A_0 = 1`.

use num_bigint::BigInt;
use num_traits::One;

use crate::arith::{binomial, BigRational, IntPolynomial, RationalFunction, TruncatedSeries, XPolynomial};
use crate::error::{Error, Result};

/// Largest `n` for which [`eulerian_poly`] enumerates permutations.
pub const EULERIAN_BRUTE_FORCE_CAP: usize = 8;

fn q_minus_one() -> IntPolynomial {
    IntPolynomial::from_i64s(&[-1, 1])
}

/// Memoized `H_0(q), ..., H_max(q)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FeNumberTable {
    numerators: Vec<IntPolynomial>,
    entries: Vec<RationalFunction>,
}

impl FeNumberTable {
    pub fn new(max_n: usize) -> Self {
        let qm1 = q_minus_one();
        let mut numerators: Vec<IntPolynomial> = vec![IntPolynomial::one()];
        for n in 1..=max_n {
            let mut acc = IntPolynomial::zero();
            let mut power = IntPolynomial::one();
            // k runs downward so that (q-1)^(n-1-k) grows one factor per step
            for k in (0..n).rev() {
                acc = &acc + &(&numerators[k] * &power).scale(&binomial(n as u64, k as u64));
                power = &power * &qm1;
            }
            numerators.push(acc);
        }
        let entries = numerators
            .iter()
            .enumerate()
            .map(|(n, a)| RationalFunction::from_parts_unchecked(a.clone(), qm1.pow(n as u32)))
            .collect();
        Self { numerators, entries }
    }

    pub fn max_n(&self) -> usize {
        self.entries.len() - 1
    }

    /// `H_n(q)`.
    pub fn get(&self, n: usize) -> &RationalFunction {
        &self.entries[n]
    }

    /// `(q - 1)^n H_n(q)`, an integer polynomial.
    pub fn numerator(&self, n: usize) -> &IntPolynomial {
        &self.numerators[n]
    }

    pub fn entries(&self) -> &[RationalFunction] {
        &self.entries
    }
}

/// `H_0(q, x), ..., H_max(q, x)` via `H_n(q, x) = sum_l C(n,l) x^(n-l) H_l(q)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FePolyTable {
    entries: Vec<XPolynomial>,
}

impl FePolyTable {
    pub fn new(max_n: usize) -> Self {
        Self::from_numbers(&FeNumberTable::new(max_n))
    }

    pub fn from_numbers(numbers: &FeNumberTable) -> Self {
        let entries = (0..=numbers.max_n())
            .map(|n| {
                let coeffs = (0..=n).map(|j| numbers.get(n - j).scale_int(&binomial(n as u64, j as u64))).collect();
                XPolynomial::from_coeffs(coeffs)
            })
            .collect();
        Self { entries }
    }

    pub fn get(&self, n: usize) -> &XPolynomial {
        &self.entries[n]
    }

    pub fn entries(&self) -> &[XPolynomial] {
        &self.entries
    }

    /// The table with every coefficient sent through `q -> -q^(-w)`.
    pub fn dual(&self, w: usize) -> Self {
        let entries = self.entries.iter().map(|p| p.subst_neg_inv_pow(w).expect("denominators are nonzero")).collect();
        Self { entries }
    }
}

pub fn fe_number(n: usize) -> RationalFunction {
    FeNumberTable::new(n).get(n).clone()
}

pub fn fe_poly(n: usize) -> XPolynomial {
    FePolyTable::new(n).get(n).clone()
}

/// `H_n(-q^(-w))`.
pub fn fe_dual_number(n: usize, w: usize) -> RationalFunction {
    fe_number(n).subst_neg_inv_pow(w).expect("denominator (q-1)^n is nonzero")
}

/// `H_n(-q^(-w), x)`.
pub fn fe_dual_poly(n: usize, w: usize) -> XPolynomial {
    fe_poly(n).subst_neg_inv_pow(w).expect("denominators (q-1)^k are nonzero")
}

/// Coefficient of `t^n/n!` in `(1 - u) / (e^t - u)`, computed by series
/// inversion alone.
pub fn fe_series_oracle(n: usize, u: &BigRational) -> Result<BigRational> {
    if u.is_one() {
        return Err(Error::ExcludedParameter);
    }
    let one = BigRational::one();
    let mut denominator = TruncatedSeries::exp_linear(&one, n).into_coeffs();
    denominator[0] = &one - u;
    let series = TruncatedSeries::new(n, denominator).invert()?;
    Ok(series.coefficient(n)? * (&one - u))
}

/// Descent generating polynomial `sum_sigma q^des(sigma)` over permutations
/// of `n` letters, enumerated exhaustively up to [`EULERIAN_BRUTE_FORCE_CAP`].
pub fn eulerian_poly(n: usize) -> Result<IntPolynomial> {
    eulerian_poly_with_cap(n, EULERIAN_BRUTE_FORCE_CAP)
}

pub fn eulerian_poly_with_cap(n: usize, cap: usize) -> Result<IntPolynomial> {
    if n > cap {
        return Err(Error::BruteForceCap { n, cap });
    }
    let mut counts = vec![0u64; n.max(1)];
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        let descents = perm.windows(2).filter(|w| w[0] > w[1]).count();
        counts[descents] += 1;
        if !next_permutation(&mut perm) {
            break;
        }
    }
    Ok(IntPolynomial::from_coeffs(counts.into_iter().map(BigInt::from).collect()))
}

/// Advances to the next permutation in lexicographic order.
fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = v.windows(2).rposition(|w| w[0] < w[1]) else {
        return false;
    };
    let j = v.iter().rposition(|&x| x > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}
