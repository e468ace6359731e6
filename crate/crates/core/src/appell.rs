//! Appell determining functions `A(ξ)`: identity, Bernoulli, Euler, Genocchi, and
//! custom coefficient lists.

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use num::{One, Zero};
use thiserror::Error;

use crate::poly::MultiPoly;
use crate::rational::{self, Rational};
use crate::series::TruncSeries;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AppellError {
    #[error("unknown family '{0}' (expected identity, bernoulli, euler, genocchi or custom)")]
    UnknownFamily(String),
    #[error("custom family needs at least one Appell number")]
    EmptyCustom,
    #[error("A(0)=0: log-derivative has a pole; operators unsupported")]
    OperatorsUnsupported,
}

/// Choice of `A(ξ)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum AppellFamily {
    /// `A(ξ) = 1`; the DMHAP reduce to degenerate multivariable Hermite polynomials.
    Identity,
    /// `ξ/(e^ξ − 1)`
    Bernoulli,
    /// `2/(e^ξ + 1)`
    Euler,
    /// `2ξ/(e^ξ + 1)`; `A(0) = 0`, so no monomiality operators.
    Genocchi,
    /// `A(ξ) = Σ numbers[k] ξ^k/k!`, zero past the given list.
    Custom(Vec<Rational>),
}

impl AppellFamily {
    pub fn custom(numbers: Vec<Rational>) -> Result<Self, AppellError> {
        if numbers.is_empty() {
            return Err(AppellError::EmptyCustom);
        }
        Ok(AppellFamily::Custom(numbers))
    }

    pub fn builtins() -> [AppellFamily; 4] {
        [AppellFamily::Identity, AppellFamily::Bernoulli, AppellFamily::Euler, AppellFamily::Genocchi]
    }

    pub fn name(&self) -> &'static str {
        match self {
            AppellFamily::Identity => "identity",
            AppellFamily::Bernoulli => "bernoulli",
            AppellFamily::Euler => "euler",
            AppellFamily::Genocchi => "genocchi",
            AppellFamily::Custom(_) => "custom",
        }
    }

    /// Truncation of `A(ξ)` to order `order`.
    pub fn series(&self, order: usize) -> TruncSeries<Rational> {
        match self {
            AppellFamily::Identity => TruncSeries::constant(Rational::one(), order),
            AppellFamily::Bernoulli => expm1_over_xi(order).inv().expect("unit constant term"),
            AppellFamily::Euler => euler_series(order),
            AppellFamily::Genocchi => euler_series(order).shift(1),
            AppellFamily::Custom(numbers) => {
                let mut values = numbers.clone();
                values.resize(order + 1, Rational::zero());
                TruncSeries::from_egf(values).expect("non-empty")
            }
        }
    }

    pub fn a0(&self) -> Rational {
        self.series(0).coeffs()[0].clone()
    }

    pub fn supports_operators(&self) -> bool {
        !self.a0().is_zero()
    }

    /// Appell numbers `𝔸_k = k!·[ξ^k]A(ξ)` for `k = 0..=n`.
    pub fn numbers(&self, n: usize) -> Vec<Rational> {
        self.series(n).egf_values()
    }

    /// Series of `A′(ξ)/A(ξ)` to order `n`.
    pub fn log_derivative(&self, n: usize) -> Result<TruncSeries<Rational>, AppellError> {
        if !self.supports_operators() {
            return Err(AppellError::OperatorsUnsupported);
        }
        let a = self.series(n + 1);
        let inverse = a.truncate(n).inv().map_err(|_| AppellError::OperatorsUnsupported)?;
        Ok(&a.derivative().expect("order ≥ 1") * &inverse)
    }

    /// Classical Appell polynomial `𝔸_n(l1) = Σ_k C(n,k) 𝔸_k l1^{n-k}`, one variable, no λ.
    pub fn classical_poly(&self, n: usize) -> MultiPoly {
        let numbers = self.numbers(n);
        let mut out = MultiPoly::zero(1);
        for (k, a) in numbers.iter().enumerate() {
            let c = a * Rational::from_integer(rational::binomial(n, k));
            out = &out + &MultiPoly::term(1, c, 0, &[(n - k) as u32]);
        }
        out
    }
}

impl fmt::Display for AppellFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for AppellFamily {
    type Err = AppellError;

    /// Built-in names only; `custom` needs its numbers and goes through [`AppellFamily::custom`].
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_lowercase().as_str() {
            "identity" => Ok(AppellFamily::Identity),
            "bernoulli" => Ok(AppellFamily::Bernoulli),
            "euler" => Ok(AppellFamily::Euler),
            "genocchi" => Ok(AppellFamily::Genocchi),
            other => Err(AppellError::UnknownFamily(other.to_string())),
        }
    }
}

/// `(e^ξ − 1)/ξ = Σ ξ^k/(k+1)!`
fn expm1_over_xi(order: usize) -> TruncSeries<Rational> {
    let coeffs = (0..=order)
        .map(|k| Rational::new(BigInt::one(), rational::factorial(k + 1)))
        .collect();
    TruncSeries::make(coeffs).expect("non-empty")
}

/// `2/(e^ξ + 1)`
fn euler_series(order: usize) -> TruncSeries<Rational> {
    let e = TruncSeries::exponential(&Rational::one(), order);
    let denom = &e + &TruncSeries::constant(Rational::one(), order);
    denom.inv().expect("constant term 2").scale_rational(&rational::int(2))
}

/// Integer Euler numbers from `2e^ξ/(e^{2ξ} + 1) = sech ξ`: 1, 0, −1, 0, 5, …
///
/// These differ from [`AppellFamily::numbers`] for [`AppellFamily::Euler`], which are the
/// values `𝔈_k(0)` of the Euler polynomials.
pub fn euler_numbers(n: usize) -> Vec<Rational> {
    let e = TruncSeries::exponential(&Rational::one(), n);
    let e2 = TruncSeries::exponential(&rational::int(2), n);
    let denom = &e2 + &TruncSeries::constant(Rational::one(), n);
    let s = &e.scale_rational(&rational::int(2)) * &denom.inv().expect("constant term 2");
    s.egf_values()
}
