//! Exact laboratory for Frobenius-Euler numbers and polynomials, alternating
//! q-power sums and fermionic p-adic q-integral moments, together with an
//! identity verifier that classifies symmetry statements as holding for all
//! `q`, only at `q = 1`, or failing, with exact witnesses.

pub mod arith;
pub mod corrected;
pub mod error;
pub mod frobenius_euler;
pub mod identities;
pub mod padic;
pub mod qsums;

pub use arith::{
    binomial, format_rational, parse_rational, BigRational, IntPolynomial, RationalFunction, TruncatedSeries,
    XPolynomial,
};
pub use error::{Error, Result};
pub use identities::{Aggregate, IdentityId, Mode, Status, VerificationReport};
pub use padic::{PAdicContext, PAdicNumber};
