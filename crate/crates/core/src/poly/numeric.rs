//! High-precision numeric realization of `λ = ln(1+κ)/κ`.

use std::fmt;

use num::bigint::BigInt;
use num::{One, Signed, Zero};

use super::{MultiPoly, PolyError};
use crate::rational::{self, Rational};

/// Numeric value carrying the number of significant digits it is reported to.
#[derive(Debug, Clone, PartialEq)]
pub struct NumericValue {
    /// Exact rational approximation; rounding to `digits` is stable.
    pub value: Rational,
    pub digits: usize,
}

impl NumericValue {
    pub fn to_decimal(&self) -> String {
        rational::to_significant(&self.value, self.digits)
    }
}

impl fmt::Display for NumericValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_decimal())
    }
}

/// `atanh(z)` for `|z| < 1/2` in binary fixed point with `bits` fractional bits.
fn atanh_fixed(z: &Rational, bits: u64) -> BigInt {
    if z.is_negative() {
        return -atanh_fixed(&-z, bits);
    }
    let one = BigInt::one() << bits;
    let z_fp = (z.numer() * &one) / z.denom();
    let z2 = (&z_fp * &z_fp) >> bits;
    let mut power = z_fp.clone();
    let mut sum = z_fp;
    let mut k: u64 = 1;
    loop {
        power = (&power * &z2) >> bits;
        if power.is_zero() {
            break;
        }
        sum += &power / BigInt::from(2 * k + 1);
        k += 1;
    }
    sum
}

/// Natural logarithm of a positive rational, accurate to roughly `2^-(bits-8)`.
pub fn ln_rational(x: &Rational, bits: u64) -> Option<Rational> {
    if !x.is_positive() {
        return None;
    }
    let mut y = x.clone();
    let mut k: i64 = 0;
    let upper = rational::ratio(4, 3);
    let lower = rational::ratio(2, 3);
    while y > upper {
        y /= rational::int(2);
        k += 1;
    }
    while y < lower {
        y *= rational::int(2);
        k -= 1;
    }
    let work = bits + 16;
    let ln2 = atanh_fixed(&rational::ratio(1, 3), work) << 1;
    let z = (&y - Rational::one()) / (&y + Rational::one());
    let rest = atanh_fixed(&z, work) << 1;
    let total = ln2 * BigInt::from(k) + rest;
    Some(Rational::new(total, BigInt::one() << work))
}

fn lambda_approx(kappa: &Rational, bits: u64) -> Rational {
    let ln = ln_rational(&(kappa + Rational::one()), bits).expect("1+κ > 0");
    ln / kappa
}

/// Evaluates `p` at `l = ls` and `λ = ln(1+κ)/κ` (`λ = 1` at `κ = 0`), reported to
/// `digits` significant digits. Working precision is doubled until the rounded result
/// is stable.
pub fn eval_numeric(
    p: &MultiPoly,
    ls: &[Rational],
    kappa: &Rational,
    digits: usize,
) -> Result<NumericValue, PolyError> {
    if *kappa <= -Rational::one() {
        return Err(PolyError::Domain(format!("kappa must exceed -1, got {}", rational::render(kappa))));
    }
    if ls.len() != p.nvars() {
        return Err(PolyError::DimensionMismatch { left: p.nvars(), right: ls.len() });
    }
    if kappa.is_zero() {
        let value = p.eval_rational(ls, &Rational::one())?;
        return Ok(NumericValue { value, digits });
    }
    let mut bits = ((digits as f64 + 20.0) * std::f64::consts::LOG2_10) as u64 + 32;
    let mut previous = p.eval_rational(ls, &lambda_approx(kappa, bits))?;
    for _ in 0..12 {
        bits *= 2;
        let next = p.eval_rational(ls, &lambda_approx(kappa, bits))?;
        let diff = (&next - &previous).abs();
        let scale = next.abs().max(Rational::one());
        // ten guard digits beyond the reported ones
        let tolerance = scale * rational::pow(&rational::int(10), -(digits as i64) - 10).unwrap();
        previous = next;
        if diff <= tolerance {
            break;
        }
    }
    Ok(NumericValue { value: previous, digits })
}
