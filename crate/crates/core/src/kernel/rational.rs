//! Rational scalars and the handful of helpers the rest of the crate needs
//! on top of `num-rational`: parsing, dyadic rounding and square-root bounds.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision rational. `BigRational` keeps the denominator positive
/// and the fraction reduced after every operation.
pub type Rational = BigRational;

pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

pub fn int(n: &BigInt) -> Rational {
    Rational::from_integer(n.clone())
}

/// Parses `"p"` or `"p/q"` with optional sign. Decimal points and exponents
/// are rejected: inputs must be exact.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    let bad = || Error::Parse(format!("not an exact rational: {s:?}"));
    if s.is_empty() || s.contains(['.', 'e', 'E']) {
        return Err(bad());
    }
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {s:?}")));
    }
    Ok(Rational::new(num, den))
}

/// Canonical string form: `"p"` for integers, `"p/q"` otherwise.
pub fn format_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn pow2(bits: u32) -> BigInt {
    BigInt::one() << bits as usize
}

/// Largest multiple of 2^-bits that is <= q.
pub fn floor_dyadic(q: &Rational, bits: u32) -> Rational {
    if q.denom().is_one() {
        return q.clone();
    }
    let scaled = q.numer() << bits as usize;
    Rational::new(scaled.div_floor(q.denom()), pow2(bits))
}

/// Smallest multiple of 2^-bits that is >= q.
pub fn ceil_dyadic(q: &Rational, bits: u32) -> Rational {
    if q.denom().is_one() {
        return q.clone();
    }
    let scaled = q.numer() << bits as usize;
    Rational::new(-((-scaled).div_floor(q.denom())), pow2(bits))
}

/// Nearest multiple of 2^-bits (ties away from zero are irrelevant here).
pub fn round_dyadic(q: &Rational, bits: u32) -> Rational {
    if q.denom().is_one() {
        return q.clone();
    }
    let scaled = (q.numer() << (bits as usize + 1)).div_floor(q.denom());
    let rounded = (scaled + 1) >> 1usize;
    Rational::new(rounded, pow2(bits))
}

/// Lower bound on sqrt(q) for q >= 0, accurate to about 2^-bits.
pub fn sqrt_lower(q: &Rational, bits: u32) -> Rational {
    assert!(!q.is_negative(), "sqrt of negative rational");
    // sqrt(n/d) = sqrt(n d) / d ; work at scale 2^bits
    let nd = q.numer() * q.denom();
    let scaled = nd << (2 * bits as usize);
    let r = scaled.sqrt();
    // the exact quotient can be far longer than the accuracy warrants
    floor_dyadic(&Rational::new(r, q.denom() << bits as usize), bits + 2)
}

/// Upper bound on sqrt(q) for q >= 0, accurate to about 2^-bits.
pub fn sqrt_upper(q: &Rational, bits: u32) -> Rational {
    assert!(!q.is_negative(), "sqrt of negative rational");
    let nd = q.numer() * q.denom();
    let scaled = nd << (2 * bits as usize);
    let mut r = scaled.sqrt();
    if &r * &r != scaled {
        r += 1;
    }
    ceil_dyadic(&Rational::new(r, q.denom() << bits as usize), bits + 2)
}

pub fn to_f64(q: &Rational) -> f64 {
    if let (Some(n), Some(d)) = (q.numer().to_f64(), q.denom().to_f64()) {
        if n.is_finite() && d.is_finite() && d != 0.0 {
            return n / d;
        }
    }
    // shift both to a representable range
    let nb = q.numer().bits() as i64;
    let db = q.denom().bits() as i64;
    let shift = (nb - db) - 60;
    let scaled = if shift >= 0 {
        q.numer() * pow2(60) / (q.denom() << shift as usize)
    } else {
        (q.numer() << (-shift) as usize) * pow2(60) / q.denom()
    };
    let base = scaled.to_f64().unwrap_or(0.0) / 2f64.powi(60);
    base * 2f64.powi(shift as i32)
}

/// Exact dyadic rational equal to the finite double `x`.
pub fn from_f64(x: f64) -> Rational {
    Rational::from_float(x).unwrap_or_else(Rational::zero)
}

/// Outward-rounded conversion of a rational into an `f64` lower bound.
pub fn f64_below(q: &Rational) -> f64 {
    let x = to_f64(q);
    if from_f64(x) <= *q {
        x
    } else {
        x.next_down()
    }
}

/// Outward-rounded conversion of a rational into an `f64` upper bound.
pub fn f64_above(q: &Rational) -> f64 {
    let x = to_f64(q);
    if from_f64(x) >= *q {
        x
    } else {
        x.next_up()
    }
}

/// Decimal rendering with `digits` fractional digits (truncated toward zero).
pub fn decimal(q: &Rational, digits: usize) -> String {
    let scale = BigInt::from(10).pow(digits as u32);
    let scaled = (q.numer().abs() * &scale) / q.denom();
    let (ip, fp) = scaled.div_rem(&scale);
    let sign = if q.numer().sign() == Sign::Minus && !scaled.is_zero() { "-" } else { "" };
    if digits == 0 {
        format!("{sign}{ip}")
    } else {
        format!("{sign}{ip}.{:0>width$}", fp.to_string(), width = digits)
    }
}

pub fn lcm_denominators<'a>(qs: impl IntoIterator<Item = &'a Rational>) -> BigInt {
    qs.into_iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()))
}
