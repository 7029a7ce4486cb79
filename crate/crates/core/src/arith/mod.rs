//! Exact arithmetic: big rationals, integer polynomials in `q`, reduced
//! rational functions in `q`, polynomials in `x` over those, and truncated
//! exponential power series in `t`.

mod gcd;
mod intpoly;
mod ratfun;
mod rational;
mod series;
mod xpoly;

pub use gcd::{gcd, primitive_prs_gcd};
pub use intpoly::IntPolynomial;
pub use ratfun::RationalFunction;
pub use rational::{binomial, format_rational, parse_rational, serde_rational, BigRational};
pub use series::{SeriesCoefficient, TruncatedSeries};
pub use xpoly::XPolynomial;

pub(crate) mod int_serde;
