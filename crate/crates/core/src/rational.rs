//! Exact rational scalars.
//!
//! Every numeric result in this crate is an arbitrary-precision rational in
//! lowest terms; nothing is ever rounded to floating point.

use num::bigint::BigInt;
use num::One;

pub use num::BigRational as Rational;

/// `numer / denom` in lowest terms. Panics on a zero denominator.
pub fn rat(numer: i64, denom: i64) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

/// Rational from wide intermediates, for coefficient formulas that are
/// evaluated in `i128` before reduction.
pub fn rat_wide(numer: i128, denom: i128) -> Rational {
    Rational::new(BigInt::from(numer), BigInt::from(denom))
}

pub fn rat_int(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// Wire rendering: `p/q` in lowest terms with an explicit minus sign, or
/// bare `p` when the denominator is 1. Never a decimal.
pub fn render(value: &Rational) -> String {
    if value.denom().is_one() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}
