//! Exact rational scalars, dense matrices, projective points and frame transport.
//!
//! Every other module is built on this substrate. There is no floating point
//! anywhere: all ranks, kernels and incidences are decided exactly over the
//! rationals.

mod elim;
mod matrix;
mod projective;

pub use matrix::RationalMatrix;
pub use projective::{projectivity_from_frames, ProjectivePoint};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::Error;

/// Arbitrary-precision rational in canonical form (positive denominator,
/// coprime parts).
pub type Rational = num_rational::BigRational;

/// Integer-valued rational.
pub fn rat(value: i64) -> Rational {
    Rational::from_integer(BigInt::from(value))
}

/// `num / den`, reduced. Panics on a zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"p"`, `"-p"` or `"p/q"`.
pub fn parse_rational(text: &str) -> Result<Rational, Error> {
    let text = text.trim();
    let bad = || Error::Parse(format!("not a rational number: {text:?}"));
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (text, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

/// Formats as `p` for integers and `p/q` otherwise.
pub fn format_rational(value: &Rational) -> String {
    value.to_string()
}

/// Parses a comma-separated list of rationals such as `1,2/3,-4`.
pub fn parse_rational_list(text: &str) -> Result<Vec<Rational>, Error> {
    text.split(',').map(parse_rational).collect()
}

/// Multiplies a rational vector by the lcm of its denominators, returning the
/// integer vector (a positive multiple of the input).
pub(crate) fn clear_denominators(values: &[Rational]) -> Vec<BigInt> {
    let lcm = values.iter().fold(BigInt::one(), |acc, v| {
        num_integer::Integer::lcm(&acc, v.denom())
    });
    values
        .iter()
        .map(|v| v.numer() * (&lcm / v.denom()))
        .collect()
}

/// Divides an integer vector by the gcd of its entries (no-op on the zero
/// vector).
pub(crate) fn primitive_part(values: &mut [BigInt]) {
    let g = values
        .iter()
        .fold(BigInt::zero(), |acc, v| num_integer::Integer::gcd(&acc, v));
    if !g.is_zero() && !g.is_one() {
        for v in values.iter_mut() {
            *v /= &g;
        }
    }
}

/// Dot product of two rational slices of equal length.
pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(Rational::zero(), |acc, (x, y)| acc + x * y)
}

pub(crate) fn is_negative(value: &BigInt) -> bool {
    value.is_negative()
}
