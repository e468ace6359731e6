//! Truncated formal power series in ξ over an exact commutative coefficient ring.
//!
//! Coefficients are stored plainly: `coeffs[k]` multiplies `ξ^k`, with no factorial
//! scaling. [`TruncSeries::extract`] applies `k!` on the way out. Binary operations
//! truncate to the smaller of the two orders.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::{One, Zero};
use thiserror::Error;

use crate::poly::MultiPoly;
use crate::rational::{self, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SeriesError {
    #[error("a series needs at least one coefficient")]
    Empty,
    #[error("non-unit constant term")]
    NonUnitConstant,
    #[error("nonzero constant term in exp")]
    NonzeroConstantInExp,
    #[error("coefficient {index} is beyond truncation order {order}")]
    BeyondTruncation { index: usize, order: usize },
}

/// Exact commutative ring usable as a series coefficient.
///
/// Methods take a receiver so that rings whose elements carry shape (the variable
/// count of a [`MultiPoly`]) can produce matching zeros and ones.
pub trait Coefficient: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero_coeff(&self) -> bool;
    fn add_ref(&self, other: &Self) -> Self;
    fn sub_ref(&self, other: &Self) -> Self;
    fn mul_ref(&self, other: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn scale_by(&self, q: &Rational) -> Self;
    fn try_inverse(&self) -> Option<Self>;
}

impl Coefficient for Rational {
    fn zero_like(&self) -> Self {
        Rational::zero()
    }
    fn one_like(&self) -> Self {
        Rational::one()
    }
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale_by(&self, q: &Rational) -> Self {
        self * q
    }
    fn try_inverse(&self) -> Option<Self> {
        (!self.is_zero()).then(|| self.recip())
    }
}

impl Coefficient for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.nvars())
    }
    fn one_like(&self) -> Self {
        MultiPoly::one(self.nvars())
    }
    fn is_zero_coeff(&self) -> bool {
        self.is_zero()
    }
    fn add_ref(&self, other: &Self) -> Self {
        self + other
    }
    fn sub_ref(&self, other: &Self) -> Self {
        self - other
    }
    fn mul_ref(&self, other: &Self) -> Self {
        self * other
    }
    fn neg_ref(&self) -> Self {
        -self
    }
    fn scale_by(&self, q: &Rational) -> Self {
        self.scale(q)
    }
    fn try_inverse(&self) -> Option<Self> {
        MultiPoly::try_inverse(self)
    }
}

/// Series `Σ_{k=0}^{order} coeffs[k] ξ^k`; `coeffs.len() == order + 1` always.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct TruncSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> TruncSeries<C> {
    pub fn make(coeffs: Vec<C>) -> Result<Self, SeriesError> {
        if coeffs.is_empty() {
            return Err(SeriesError::Empty);
        }
        Ok(TruncSeries { coeffs })
    }

    /// The constant `c` carried to `order`.
    pub fn constant(c: C, order: usize) -> Self {
        let zero = c.zero_like();
        let mut coeffs = vec![zero; order + 1];
        coeffs[0] = c;
        TruncSeries { coeffs }
    }

    /// Series whose `ξ^k` coefficient is `values[k] / k!`.
    pub fn from_egf(values: Vec<C>) -> Result<Self, SeriesError> {
        let coeffs = values
            .into_iter()
            .enumerate()
            .map(|(k, v)| v.scale_by(&Rational::new(BigInt::one(), rational::factorial(k))))
            .collect();
        Self::make(coeffs)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> Option<&C> {
        self.coeffs.get(k)
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn truncate(&self, order: usize) -> Self {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(order + 1);
        TruncSeries { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Coefficient::is_zero_coeff)
    }

    pub fn map<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> TruncSeries<D> {
        TruncSeries { coeffs: self.coeffs.iter().map(f).collect() }
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&C, &C) -> C) -> Self {
        TruncSeries { coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect() }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.zip_with(other, C::add_ref)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.zip_with(other, C::sub_ref)
    }

    pub fn neg(&self) -> Self {
        TruncSeries { coeffs: self.coeffs.iter().map(C::neg_ref).collect() }
    }

    /// Cauchy product `c_n = Σ_{k=0}^n a_k b_{n-k}`.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        let coeffs = (0..=order)
            .map(|n| {
                (0..=n).fold(self.coeffs[0].zero_like(), |acc, k| {
                    let (a, b) = (&self.coeffs[k], &other.coeffs[n - k]);
                    if a.is_zero_coeff() || b.is_zero_coeff() {
                        acc
                    } else {
                        acc.add_ref(&a.mul_ref(b))
                    }
                })
            })
            .collect();
        TruncSeries { coeffs }
    }

    pub fn scale(&self, c: &C) -> Self {
        TruncSeries { coeffs: self.coeffs.iter().map(|a| a.mul_ref(c)).collect() }
    }

    pub fn scale_rational(&self, q: &Rational) -> Self {
        TruncSeries { coeffs: self.coeffs.iter().map(|a| a.scale_by(q)).collect() }
    }

    /// Multiplicative inverse by the triangular recurrence `b_n = -b_0 Σ_{k≥1} a_k b_{n-k}`.
    pub fn inv(&self) -> Result<Self, SeriesError> {
        let b0 = self.coeffs[0].try_inverse().ok_or(SeriesError::NonUnitConstant)?;
        let mut out: Vec<C> = Vec::with_capacity(self.coeffs.len());
        out.push(b0.clone());
        for n in 1..self.coeffs.len() {
            let mut acc = b0.zero_like();
            for k in 1..=n {
                if !self.coeffs[k].is_zero_coeff() {
                    acc = acc.add_ref(&self.coeffs[k].mul_ref(&out[n - k]));
                }
            }
            out.push(acc.mul_ref(&b0).neg_ref());
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// `exp` of a series with zero constant term, via `n g_n = Σ_{k=1}^n k a_k g_{n-k}`.
    pub fn exp(&self) -> Result<Self, SeriesError> {
        if !self.coeffs[0].is_zero_coeff() {
            return Err(SeriesError::NonzeroConstantInExp);
        }
        let mut out: Vec<C> = Vec::with_capacity(self.coeffs.len());
        out.push(self.coeffs[0].one_like());
        for n in 1..self.coeffs.len() {
            let mut acc = self.coeffs[0].zero_like();
            for k in 1..=n {
                if !self.coeffs[k].is_zero_coeff() {
                    let term = self.coeffs[k].mul_ref(&out[n - k]);
                    acc = acc.add_ref(&term.scale_by(&rational::int(k as i64)));
                }
            }
            out.push(acc.scale_by(&rational::ratio(1, n as i64)));
        }
        Ok(TruncSeries { coeffs: out })
    }

    /// Substitution `ξ → c ξ`.
    pub fn scale_arg(&self, c: &C) -> Self {
        let mut power = self.coeffs[0].one_like();
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for a in &self.coeffs {
            coeffs.push(a.mul_ref(&power));
            power = power.mul_ref(c);
        }
        TruncSeries { coeffs }
    }

    /// `n! · coeffs[n]`, the coefficient of `ξ^n / n!`.
    pub fn extract(&self, n: usize) -> Result<C, SeriesError> {
        let c = self
            .coeffs
            .get(n)
            .ok_or(SeriesError::BeyondTruncation { index: n, order: self.order() })?;
        Ok(c.scale_by(&Rational::from_integer(rational::factorial(n))))
    }

    /// `extract(k)` for every `k ≤ order`.
    pub fn egf_values(&self) -> Vec<C> {
        (0..self.coeffs.len()).map(|k| self.extract(k).expect("within order")).collect()
    }

    /// Formal `d/dξ`; loses one order of precision.
    pub fn derivative(&self) -> Result<Self, SeriesError> {
        if self.order() == 0 {
            return Err(SeriesError::BeyondTruncation { index: 1, order: 0 });
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(k, a)| a.scale_by(&rational::int(k as i64)))
            .collect();
        Ok(TruncSeries { coeffs })
    }

    /// Multiplies by `ξ^k`, keeping the order.
    pub fn shift(&self, k: usize) -> Self {
        let zero = self.coeffs[0].zero_like();
        let n = self.coeffs.len();
        let coeffs = (0..n)
            .map(|i| if i >= k { self.coeffs[i - k].clone() } else { zero.clone() })
            .collect();
        TruncSeries { coeffs }
    }
}

impl TruncSeries<Rational> {
    /// Truncation of `e^{cξ}`.
    pub fn exponential(c: &Rational, order: usize) -> Self {
        let values = (0..=order).map(|k| num::pow::pow(c.clone(), k)).collect();
        Self::from_egf(values).expect("non-empty")
    }

    /// Re-types the coefficients as constant polynomials in `nvars` variables.
    pub fn to_poly(&self, nvars: usize) -> TruncSeries<MultiPoly> {
        self.map(|c| MultiPoly::constant(nvars, c.clone()))
    }
}

macro_rules! series_binop {
    ($trait:ident, $method:ident) => {
        impl<'a, C: Coefficient> $trait<&'a TruncSeries<C>> for &'a TruncSeries<C> {
            type Output = TruncSeries<C>;
            fn $method(self, rhs: &'a TruncSeries<C>) -> TruncSeries<C> {
                TruncSeries::$method(self, rhs)
            }
        }
    };
}

series_binop!(Add, add);
series_binop!(Sub, sub);
series_binop!(Mul, mul);

impl<C: Coefficient> Neg for &TruncSeries<C> {
    type Output = TruncSeries<C>;
    fn neg(self) -> TruncSeries<C> {
        TruncSeries::neg(self)
    }
}
