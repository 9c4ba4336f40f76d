//! Exact rational coefficients.
//!
//! `num_rational::BigRational` keeps every value in lowest terms with a
//! positive denominator, which is exactly the canonical form the kernel
//! relies on for structural equality of polynomials.

use num_bigint::BigInt;
use num_traits::{One, Signed};

pub type ExactRational = num_rational::BigRational;

/// Builds `n/1`.
pub fn int(n: i64) -> ExactRational {
    ExactRational::from_integer(BigInt::from(n))
}

/// Builds `n/d`, reducing to lowest terms. Panics if `d == 0`.
pub fn frac(n: i64, d: i64) -> ExactRational {
    ExactRational::new(BigInt::from(n), BigInt::from(d))
}

/// `2^k` as a rational.
pub fn pow2(k: u32) -> ExactRational {
    ExactRational::from_integer(BigInt::one() << k as usize)
}

/// Writes `c*rest`, `rest`, or `-rest` as appropriate for a coefficient in
/// front of a non-constant factor. `first` controls whether a positive sign
/// is written as nothing (leading term) or as a separator.
pub(crate) fn write_signed_term(
    out: &mut String,
    coeff: &ExactRational,
    factor: &str,
    first: bool,
    spaced: bool,
) {
    let negative = coeff.is_negative();
    match (first, negative, spaced) {
        (true, true, _) => out.push('-'),
        (true, false, _) => {}
        (false, true, true) => out.push_str(" - "),
        (false, false, true) => out.push_str(" + "),
        (false, true, false) => out.push('-'),
        (false, false, false) => out.push('+'),
    }
    let abs = coeff.abs();
    if factor.is_empty() {
        out.push_str(&abs.to_string());
    } else if abs.is_one() {
        out.push_str(factor);
    } else {
        out.push_str(&abs.to_string());
        out.push('*');
        out.push_str(factor);
    }
}
