//! Exact arithmetic in one variable `q`.
//!
//! Coefficients are arbitrary-precision rationals, always kept in lowest terms
//! with a positive denominator. [`TruncatedSeries`] carries a caller-chosen
//! degree cap that every operation respects; [`ExactPolynomial`] is the
//! finite, untruncated counterpart.

mod poly;
mod series;

pub use poly::ExactPolynomial;
pub use series::TruncatedSeries;

use num_bigint::BigInt;
use num_rational::BigRational;

/// An exact rational number, reduced after every operation.
pub type ExactRational = BigRational;

pub fn rational(n: i64) -> ExactRational {
    BigRational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> ExactRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
