//! Exact binomial coefficients and rationals.
//!
//! Everything here is arbitrary precision: the certification inequalities
//! are exact statements, so no floating point is allowed anywhere near a
//! certificate.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Exact rational used for all normalized-coefficient quantities.
pub type Rational = BigRational;

/// Binomial coefficient C(n, k) with the vanishing convention:
/// the result is 0 whenever `k < 0` or `k > n`.
pub fn binom(n: u64, k: i64) -> BigUint {
    if k < 0 || k as u64 > n {
        return BigUint::zero();
    }
    let mut k = k as u64;
    if k > n - k {
        k = n - k;
    }
    // Multiplicative form; every intermediate product is divisible by i+1.
    let mut acc = BigUint::one();
    for i in 0..k {
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `binom` over usize arguments (no vanishing cases possible for k <= n).
pub fn binom_us(n: usize, k: usize) -> BigUint {
    binom(n as u64, k as i64)
}

/// The exact ratio C(n-m, k) / C(n, k).
///
/// Requires 0 <= k <= n and 1 <= m <= n; the value is 0 when n-m < k.
pub fn binom_ratio(n: u64, m: u64, k: u64) -> Result<Rational> {
    if k > n {
        return Err(Error::Parameter(format!(
            "binom_ratio requires k <= n, got k = {k}, n = {n}"
        )));
    }
    if m == 0 || m > n {
        return Err(Error::Parameter(format!(
            "binom_ratio requires 1 <= m <= n, got m = {m}, n = {n}"
        )));
    }
    let num = binom(n - m, k as i64);
    let den = binom(n, k as i64);
    Ok(ratio_from_biguints(&num, &den))
}

/// Builds a reduced rational from unsigned big integers; `den` must be nonzero.
pub fn ratio_from_biguints(num: &BigUint, den: &BigUint) -> Rational {
    debug_assert!(!den.is_zero());
    Rational::new(BigInt::from(num.clone()), BigInt::from(den.clone()))
}

/// Rational from machine integers.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// 2^(-e) as an exact rational.
pub fn half_pow(e: u32) -> Rational {
    Rational::new(BigInt::one(), BigInt::one() << e as usize)
}

/// Parses "0.35", ".5", "7", or "3/10" into an exact rational.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = |_: std::num::ParseIntError| Error::Parameter(format!("cannot parse rational {s:?}"));
    if let Some((num, den)) = s.split_once('/') {
        let num: i64 = num.trim().parse().map_err(bad)?;
        let den: i64 = den.trim().parse().map_err(bad)?;
        if den == 0 {
            return Err(Error::Parameter("zero denominator".into()));
        }
        return Ok(ratio(num, den));
    }
    let (int_part, frac_part) = match s.split_once('.') {
        Some((i, f)) => (i, f),
        None => (s, ""),
    };
    let int_val: i64 = if int_part.is_empty() { 0 } else { int_part.parse().map_err(bad)? };
    let mut value = Rational::from(BigInt::from(int_val));
    if !frac_part.is_empty() {
        let frac_val: u64 = frac_part.parse().map_err(bad)?;
        let scale = BigInt::from(10u8).pow(frac_part.len() as u32);
        value += Rational::new(BigInt::from(frac_val), scale);
    }
    Ok(value)
}
