//! Exact scalar arithmetic.
//!
//! Integers are unbounded (`num_bigint::BigInt`) and rationals are always kept
//! in lowest terms with a positive denominator (`num_rational::BigRational`).
//! The two remainder conventions used by the solvers live here: the floor
//! division with least non-negative remainder, and the least-absolute residue.

use num_integer::Integer as _;
use num_traits::{Signed, Zero};
use thiserror::Error;

/// Unbounded signed integer.
pub type Integer = num_bigint::BigInt;

/// Exact rational number in lowest terms, denominator positive.
pub type Rational = num_rational::BigRational;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by zero")]
    DivisionByZero,
    /// The modulus divides the value, so there is no nonzero residue.
    #[error("{modulus} divides {value}; no nonzero residue")]
    NoResidue { value: Integer, modulus: Integer },
}

/// Non-negative greatest common divisor of all values. The gcd of a list of
/// zeros (or of an empty list) is 0.
pub fn gcd_many<'a, I>(xs: I) -> Integer
where
    I: IntoIterator<Item = &'a Integer>,
{
    let mut g = Integer::zero();
    for x in xs {
        g = g.gcd(x);
        if g == Integer::from(1) {
            break;
        }
    }
    g
}

/// Floor division: returns `(q, r)` with `a = m*q + r` and `0 <= r < |m|`.
pub fn div_floor(a: &Integer, m: &Integer) -> Result<(Integer, Integer), ArithError> {
    if m.is_zero() {
        return Err(ArithError::DivisionByZero);
    }
    // Euclidean division: remainder always in [0, |m|).
    let mut r = a.mod_floor(m);
    if r.is_negative() {
        r += m.abs();
    }
    let q = (a - &r) / m;
    Ok((q, r))
}

/// Division with the remainder of least absolute value: `a = m*q + r` with
/// `|r| <= |m|/2`. On a tie (`|r| = |m|/2`) the positive remainder wins.
pub fn div_nearest(a: &Integer, m: &Integer) -> Result<(Integer, Integer), ArithError> {
    let (mut q, mut r) = div_floor(a, m)?;
    let abs_m = m.abs();
    // r in [0, |m|); switch to r - |m| when that is strictly closer to zero.
    if &r * 2 > abs_m {
        r -= &abs_m;
        if m.is_positive() {
            q += 1;
        } else {
            q -= 1;
        }
    }
    Ok((q, r))
}

/// Least-absolute nonzero residue of `a` modulo `m`.
///
/// Returns `r` with `a ≡ r (mod m)`, `0 < |r| <= |m|/2`, preferring the
/// positive value on a tie. Fails with [`ArithError::NoResidue`] when `m | a`.
pub fn least_abs_residue(a: &Integer, m: &Integer) -> Result<Integer, ArithError> {
    let (_, r) = div_nearest(a, m)?;
    if r.is_zero() {
        return Err(ArithError::NoResidue {
            value: a.clone(),
            modulus: m.clone(),
        });
    }
    Ok(r)
}

/// Exact quotient `a / m`, or `None` when `m` does not divide `a` (or `m = 0`).
pub fn exact_div(a: &Integer, m: &Integer) -> Option<Integer> {
    if m.is_zero() {
        return None;
    }
    let (q, r) = a.div_rem(m);
    r.is_zero().then_some(q)
}

pub fn int(v: i64) -> Integer {
    Integer::from(v)
}

pub fn rational(num: Integer, den: Integer) -> Rational {
    Rational::new(num, den)
}
