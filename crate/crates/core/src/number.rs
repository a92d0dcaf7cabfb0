//! Exact decimal parsing and fixed-precision rendering of rationals.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use thiserror::Error;

/// Output precision used when none is given.
pub const DEFAULT_PRECISION: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("`{0}` is not a decimal literal")]
pub struct DecimalError(pub String);

/// Parses a decimal literal (`-12.5`, `0.125`, `3e-2`, `1E+1`) into an exact rational.
pub fn parse_decimal(text: &str) -> Result<BigRational, DecimalError> {
    let err = || DecimalError(text.to_string());
    let (negative, rest) = match text.as_bytes().first() {
        Some(b'-') => (true, &text[1..]),
        Some(b'+') => (false, &text[1..]),
        _ => (false, text),
    };
    let (mantissa, exponent) = match rest.find(['e', 'E']) {
        Some(pos) => {
            let exp_text = &rest[pos + 1..];
            let digits = exp_text.strip_prefix(['+', '-']).unwrap_or(exp_text);
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(err());
            }
            let exp: i64 = exp_text.parse().map_err(|_| err())?;
            (&rest[..pos], exp)
        }
        None => (rest, 0),
    };
    let (int_part, frac_part) = match mantissa.split_once('.') {
        Some((i, f)) => (i, f),
        None => (mantissa, ""),
    };
    if int_part.is_empty() && frac_part.is_empty() {
        return Err(err());
    }
    if !int_part
        .bytes()
        .chain(frac_part.bytes())
        .all(|b| b.is_ascii_digit())
    {
        return Err(err());
    }
    let digits = format!("{int_part}{frac_part}");
    let mut numer: BigInt = digits.parse().map_err(|_| err())?;
    if negative {
        numer = -numer;
    }
    let scale = exponent - frac_part.len() as i64;
    let ten = BigInt::from(10u32);
    let pow = |n: i64| -> Result<BigInt, DecimalError> {
        let n = u32::try_from(n).map_err(|_| err())?;
        // Literals with absurd exponents are rejected rather than materialized.
        if n > 4096 {
            return Err(err());
        }
        Ok(num_traits::pow(ten.clone(), n as usize))
    };
    if scale >= 0 {
        Ok(BigRational::from_integer(numer * pow(scale)?))
    } else {
        Ok(BigRational::new(numer, pow(-scale)?))
    }
}

/// Renders `value` with exactly `precision` fractional digits, rounding half away from zero.
pub fn format_decimal(value: &BigRational, precision: usize) -> String {
    let scale = num_traits::pow(BigInt::from(10u32), precision);
    let scaled = (value * BigRational::from_integer(scale))
        .round()
        .to_integer();
    let negative = scaled.is_negative();
    let mut digits = scaled.abs().to_string();
    if precision > 0 {
        if digits.len() <= precision {
            digits = format!("{}{}", "0".repeat(precision + 1 - digits.len()), digits);
        }
        digits.insert(digits.len() - precision, '.');
    }
    if negative && !scaled.is_zero() {
        digits.insert(0, '-');
    }
    digits
}

/// Renders a rational in lowest terms as `p` or `p/q`.
pub fn format_exact(value: &BigRational) -> String {
    if value.is_integer() {
        value.numer().to_string()
    } else {
        format!("{}/{}", value.numer(), value.denom())
    }
}
