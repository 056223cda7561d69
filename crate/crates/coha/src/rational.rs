//! Coefficient arithmetic. All computations in this crate run over exact
//! arbitrary-precision rationals; nothing is ever rounded.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed};

pub type Rational = BigRational;

/// Rational from an integer literal.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Rational from numerator and denominator. Panics on zero denominator.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// The sign (-1)^e.
pub fn neg_one_pow(e: u32) -> Rational {
    if e % 2 == 0 {
        Rational::one()
    } else {
        -Rational::one()
    }
}

/// Renders a rational as `p/q`, or just `p` for integers.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Renders a nonzero rational with an explicit leading sign, as used in
/// element text output: `+1`, `-3/2`.
pub fn format_signed(r: &Rational) -> String {
    let sign = if r.is_negative() { '-' } else { '+' };
    format!("{}{}", sign, format_rational(&r.abs()))
}

/// Parses `p` or `p/q`. Reports the reason on malformed input.
pub fn parse_rational(s: &str) -> Result<Rational, String> {
    s.trim()
        .parse::<Rational>()
        .map_err(|e| format!("invalid rational {s:?}: {e}"))
}
