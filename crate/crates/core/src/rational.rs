//! Arbitrary-precision rational numbers.
//!
//! `Rat` is the coefficient field for everything exact in this crate. It is
//! backed by [`num_rational::BigRational`], which stores fractions reduced
//! with a strictly positive denominator.

use num_bigint::BigInt;
use num_rational::BigRational;
use thiserror::Error;

pub type Rat = BigRational;

/// Error parsing a `num/den` string.
#[derive(Debug, Error, PartialEq, Eq)]
pub enum ParseRatError {
    #[error("empty rational literal")]
    Empty,
    #[error("invalid integer `{0}`")]
    BadInt(String),
    #[error("zero denominator in `{0}`")]
    ZeroDenominator(String),
}

/// The integer `n` as a rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from(BigInt::from(n))
}

/// The reduced fraction `num/den`. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rat {
    Rat::new(BigInt::from(num), BigInt::from(den))
}

/// Parses `"3"`, `"-3/4"`, `"7/-2"` into a reduced rational.
pub fn parse_rat(s: &str) -> Result<Rat, ParseRatError> {
    let s = s.trim();
    if s.is_empty() {
        return Err(ParseRatError::Empty);
    }
    let parse_int = |part: &str| {
        part.trim()
            .parse::<BigInt>()
            .map_err(|_| ParseRatError::BadInt(part.trim().to_string()))
    };
    match s.split_once('/') {
        None => Ok(Rat::from(parse_int(s)?)),
        Some((num, den)) => {
            let num = parse_int(num)?;
            let den = parse_int(den)?;
            if den == BigInt::from(0) {
                return Err(ParseRatError::ZeroDenominator(s.to_string()));
            }
            Ok(Rat::new(num, den))
        }
    }
}

/// `r^e` for a non-negative exponent, with `0^0 = 1`.
pub fn pow_u(r: &Rat, e: u32) -> Rat {
    r.pow(e as i32)
}

/// `[r^0, r^1, ..., r^n]`.
pub fn pow_table(r: &Rat, n: u32) -> Vec<Rat> {
    let mut table = Vec::with_capacity(n as usize + 1);
    table.push(Rat::from(BigInt::from(1)));
    for _ in 0..n {
        table.push(table.last().unwrap() * r);
    }
    table
}

/// Best-effort conversion to `f64` (correct to within rounding for the
/// desk-scale magnitudes used here).
pub fn rat_to_f64(r: &Rat) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().expect("rational out of f64 range")
}
