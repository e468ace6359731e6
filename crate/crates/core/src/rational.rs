//! Exact rational scalars and their text forms.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, Zero};

/// Arbitrary-precision exact rational number.
pub type Rational = BigRational;

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, k| acc * BigInt::from(k))
}

pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `base^exp` for a signed exponent; `0^0 = 1`, and negative powers of zero are `None`.
pub fn pow(base: &Rational, exp: i64) -> Option<Rational> {
    if exp >= 0 {
        Some(num::pow::pow(base.clone(), exp as usize))
    } else if base.is_zero() {
        None
    } else {
        Some(num::pow::pow(base.recip(), (-exp) as usize))
    }
}

/// Exact `p/q` rendering, or a bare integer when the denominator is one.
pub fn render(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub fn render_latex(q: &Rational) -> String {
    if q.is_integer() {
        q.numer().to_string()
    } else if q.is_negative() {
        format!("-\\frac{{{}}}{{{}}}", -q.numer(), q.denom())
    } else {
        format!("\\frac{{{}}}{{{}}}", q.numer(), q.denom())
    }
}

/// Parses `"p/q"`, an integer, or a decimal such as `"-0.125"` or `"1.5e-3"` exactly.
pub fn parse(text: &str) -> Option<Rational> {
    let text = text.trim();
    if text.is_empty() {
        return None;
    }
    if let Some((n, d)) = text.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rational::new(n, d));
    }
    let (mantissa, exponent) = match text.find(['e', 'E']) {
        Some(pos) => (&text[..pos], text[pos + 1..].parse::<i64>().ok()?),
        None => (text, 0),
    };
    let (negative, digits) = match mantissa.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, mantissa.strip_prefix('+').unwrap_or(mantissa)),
    };
    let (whole, frac) = digits.split_once('.').unwrap_or((digits, ""));
    if whole.is_empty() && frac.is_empty() {
        return None;
    }
    if !whole.chars().chain(frac.chars()).all(|c| c.is_ascii_digit()) {
        return None;
    }
    let all: BigInt = format!("{whole}{frac}0").parse().ok()?;
    let mut value = Rational::new(all, BigInt::from(10));
    value *= pow(&int(10), exponent - frac.len() as i64)?;
    Some(if negative { -value } else { value })
}

/// Decimal rendering of `q` rounded half-away-from-zero to `digits` significant digits,
/// with trailing fractional zeros removed.
pub fn to_significant(q: &Rational, digits: usize) -> String {
    let digits = digits.max(1);
    if q.is_zero() {
        return "0".to_string();
    }
    let negative = q.is_negative();
    let abs = q.abs();
    // exponent e with 10^e <= abs < 10^(e+1)
    let mut e = abs.numer().to_string().len() as i64 - abs.denom().to_string().len() as i64;
    let ten = int(10);
    while pow(&ten, e).unwrap() > abs {
        e -= 1;
    }
    while pow(&ten, e + 1).unwrap() <= abs {
        e += 1;
    }
    let shift = digits as i64 - 1 - e;
    let scaled = &abs * pow(&ten, shift).unwrap();
    let half = ratio(1, 2);
    let mut mantissa = (scaled + half).floor().to_integer();
    let mut shift = shift;
    if mantissa.to_string().len() > digits {
        mantissa /= BigInt::from(10);
        shift -= 1;
    }
    let mut body = mantissa.to_string();
    let text = if shift <= 0 {
        body.push_str(&"0".repeat((-shift) as usize));
        body
    } else {
        let shift = shift as usize;
        if body.len() <= shift {
            body = format!("{}{}", "0".repeat(shift - body.len() + 1), body);
        }
        let (int_part, frac_part) = body.split_at(body.len() - shift);
        let frac_part = frac_part.trim_end_matches('0');
        if frac_part.is_empty() {
            int_part.to_string()
        } else {
            format!("{int_part}.{frac_part}")
        }
    };
    if negative {
        format!("-{text}")
    } else {
        text
    }
}
