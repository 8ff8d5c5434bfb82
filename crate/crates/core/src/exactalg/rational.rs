use alloc::string::ToString;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};

/// Unbounded rational number, always kept in reduced form with a positive
/// denominator.
pub type Rational = num_rational::BigRational;

/// Parses `"a"` or `"a/b"` where `a`, `b` are decimal integers (optional sign
/// on `a` or `b`). `b` must be nonzero.
pub fn parse_rational(text: &str) -> Result<Rational> {
    let bad = || Error::InvalidRational(text.to_string());
    let (num, den) = match text.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (text, None),
    };
    let num = parse_int(num).ok_or_else(bad)?;
    let den = match den {
        Some(d) => parse_int(d).ok_or_else(bad)?,
        None => BigInt::from(1),
    };
    if den.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(num, den))
}

fn parse_int(s: &str) -> Option<BigInt> {
    let digits = s.strip_prefix(['-', '+']).unwrap_or(s);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    BigInt::parse_bytes(s.as_bytes(), 10)
}
