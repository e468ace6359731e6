//! Sparse exact polynomials in `l1..lr` with a Laurent exponent in the slope symbol
//! `λ = log(1+κ)/κ`.
//!
//! κ itself never appears symbolically. Every κ-dependence of the expansions enters
//! through λ, so the coefficient ring stays `ℚ[l1..lr][λ, λ⁻¹]` and remains exact.
//! κ only comes back in [`eval_numeric`].

mod numeric;
mod text;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::{One, Zero};
use thiserror::Error;

use crate::rational::{self, Rational};

pub use numeric::{eval_numeric, ln_rational, NumericValue};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("dimension mismatch: {left} vs {right} variables")]
    DimensionMismatch { left: usize, right: usize },
    #[error("variable l{index} out of range for {nvars} variables")]
    VariableOutOfRange { index: usize, nvars: usize },
    #[error("pole at λ=0")]
    PoleAtZero,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("cannot parse polynomial: {0}")]
    Parse(String),
}

/// Exponent key: `λ^lambda · l1^exps[0] ··· lr^exps[r-1]`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial {
    pub lambda: i32,
    pub exps: Vec<u32>,
}

impl Monomial {
    pub fn unit(nvars: usize) -> Self {
        Monomial { lambda: 0, exps: vec![0; nvars] }
    }

    pub fn l_degree(&self) -> u32 {
        self.exps.iter().sum()
    }

    /// Degree with weight `j` on `l_j`.
    pub fn weighted_degree(&self) -> u32 {
        self.exps.iter().enumerate().map(|(i, e)| (i as u32 + 1) * e).sum()
    }

    fn times(&self, other: &Monomial) -> Monomial {
        Monomial {
            lambda: self.lambda + other.lambda,
            exps: self.exps.iter().zip(&other.exps).map(|(a, b)| a + b).collect(),
        }
    }
}

/// Element of `ℚ[l1..lr][λ, λ⁻¹]`. Zero coefficients are never stored, so derived
/// equality is equality of canonical forms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::term(nvars, c, 0, &vec![0; nvars])
    }

    /// `c · λ^lambda · Π l_j^exps[j-1]`; `exps` shorter than `nvars` is zero-padded.
    pub fn term(nvars: usize, c: Rational, lambda: i32, exps: &[u32]) -> Self {
        assert!(exps.len() <= nvars, "too many exponents for {nvars} variables");
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            let mut full = exps.to_vec();
            full.resize(nvars, 0);
            p.terms.insert(Monomial { lambda, exps: full }, c);
        }
        p
    }

    /// The variable `l_j`, 1-based.
    pub fn var(nvars: usize, j: usize) -> Result<Self, PolyError> {
        if j == 0 || j > nvars {
            return Err(PolyError::VariableOutOfRange { index: j, nvars });
        }
        let mut exps = vec![0; nvars];
        exps[j - 1] = 1;
        Ok(Self::term(nvars, Rational::one(), 0, &exps))
    }

    /// `λ^k`.
    pub fn lambda_pow(nvars: usize, k: i32) -> Self {
        Self::term(nvars, Rational::one(), k, &[])
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coefficient(&self, lambda: i32, exps: &[u32]) -> Rational {
        let mut full = exps.to_vec();
        full.resize(self.nvars, 0);
        self.terms
            .get(&Monomial { lambda, exps: full })
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    /// The single coefficient when the polynomial is free of `λ` and every `l_j`.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => {
                let (m, c) = self.terms.iter().next().unwrap();
                (m.lambda == 0 && m.l_degree() == 0).then(|| c.clone())
            }
            _ => None,
        }
    }

    pub fn min_lambda_exp(&self) -> Option<i32> {
        self.terms.keys().map(|m| m.lambda).min()
    }

    pub fn max_lambda_exp(&self) -> Option<i32> {
        self.terms.keys().map(|m| m.lambda).max()
    }

    /// Highest power of `l_j` present (1-based `j`); zero for the zero polynomial.
    pub fn degree_in(&self, j: usize) -> u32 {
        self.terms.keys().map(|m| m.exps.get(j - 1).copied().unwrap_or(0)).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::l_degree).max().unwrap_or(0)
    }

    /// Re-embeds into `nvars` variables; dropped variables must not occur.
    pub fn with_nvars(&self, nvars: usize) -> Result<Self, PolyError> {
        let mut out = Self::zero(nvars);
        for (m, c) in &self.terms {
            if m.exps.iter().skip(nvars).any(|&e| e > 0) {
                return Err(PolyError::DimensionMismatch { left: self.nvars, right: nvars });
            }
            let mut exps = m.exps.clone();
            exps.resize(nvars, 0);
            out.terms.insert(Monomial { lambda: m.lambda, exps }, c.clone());
        }
        Ok(out)
    }

    fn accumulate(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    fn check_dims(&self, other: &MultiPoly) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            return Err(PolyError::DimensionMismatch { left: self.nvars, right: other.nvars });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_dims(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_dims(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.accumulate(m.clone(), -c.clone());
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_dims(other)?;
        let mut out = Self::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.accumulate(ma.times(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, v)| (m.clone(), v * c)).collect(),
        }
    }

    /// Multiplies by `λ^k`.
    pub fn shift_lambda(&self, k: i32) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (Monomial { lambda: m.lambda + k, exps: m.exps.clone() }, c.clone()))
                .collect(),
        }
    }

    /// Multiplies by `l_j^k`.
    pub fn shift_var(&self, j: usize, k: u32) -> Result<MultiPoly, PolyError> {
        self.check_index(j)?;
        Ok(MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, c)| {
                    let mut m = m.clone();
                    m.exps[j - 1] += k;
                    (m, c.clone())
                })
                .collect(),
        })
    }

    fn check_index(&self, j: usize) -> Result<(), PolyError> {
        if j == 0 || j > self.nvars {
            return Err(PolyError::VariableOutOfRange { index: j, nvars: self.nvars });
        }
        Ok(())
    }

    /// Formal partial derivative `∂/∂l_j`, 1-based.
    pub fn d_l(&self, j: usize) -> Result<MultiPoly, PolyError> {
        self.d_l_pow(j, 1)
    }

    /// `∂^k/∂l_j^k`.
    pub fn d_l_pow(&self, j: usize, k: u32) -> Result<MultiPoly, PolyError> {
        self.check_index(j)?;
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let e = m.exps[j - 1];
            if e < k {
                continue;
            }
            let falling: u64 = (0..k).map(|i| (e - i) as u64).product();
            let mut m = m.clone();
            m.exps[j - 1] -= k;
            out.accumulate(m, c * Rational::from_integer(falling.into()));
        }
        Ok(out)
    }

    /// Substitutes `l_j → c^{w_j} l_j`.
    pub fn scale_vars(&self, c: &Rational, weights: &[u32]) -> Result<MultiPoly, PolyError> {
        if weights.len() != self.nvars {
            return Err(PolyError::DimensionMismatch { left: self.nvars, right: weights.len() });
        }
        let mut out = Self::zero(self.nvars);
        for (m, v) in &self.terms {
            let power: u32 = m.exps.iter().zip(weights).map(|(e, w)| e * w).sum();
            out.accumulate(m.clone(), v * num::pow::pow(c.clone(), power as usize));
        }
        Ok(out)
    }

    /// Substitutes `λ → v`, leaving a λ-free polynomial.
    pub fn subst_lambda(&self, v: &Rational) -> Result<MultiPoly, PolyError> {
        let mut out = Self::zero(self.nvars);
        for (m, c) in &self.terms {
            let factor = rational::pow(v, m.lambda as i64).ok_or(PolyError::PoleAtZero)?;
            out.accumulate(Monomial { lambda: 0, exps: m.exps.clone() }, c * factor);
        }
        Ok(out)
    }

    /// Exact evaluation at rational `l` values and a rational value of `λ`.
    pub fn eval_rational(&self, ls: &[Rational], lambda: &Rational) -> Result<Rational, PolyError> {
        if ls.len() != self.nvars {
            return Err(PolyError::DimensionMismatch { left: self.nvars, right: ls.len() });
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c * rational::pow(lambda, m.lambda as i64).ok_or(PolyError::PoleAtZero)?;
            for (x, &e) in ls.iter().zip(&m.exps) {
                t *= num::pow::pow(x.clone(), e as usize);
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Units of the ring: nonzero `c·λ^k`.
    pub fn try_inverse(&self) -> Option<MultiPoly> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        if m.l_degree() != 0 {
            return None;
        }
        Some(Self::term(self.nvars, c.recip(), -m.lambda, &[]))
    }

    /// Every monomial has `λ`-exponent equal to its total `l`-degree.
    pub fn lambda_counts_l_factors(&self) -> bool {
        self.terms.keys().all(|m| m.lambda >= 0 && m.lambda as u32 == m.l_degree())
    }

    pub fn is_weighted_homogeneous(&self, degree: u32) -> bool {
        self.terms.keys().all(|m| m.weighted_degree() == degree)
    }

    /// Canonical text, e.g. `L^2*l1^2 + 2*L*l2`.
    pub fn to_text(&self) -> String {
        text::render(self)
    }

    pub fn to_latex(&self) -> String {
        text::render_latex(self)
    }

    /// Parses canonical text; the result has at least `min_nvars` variables.
    pub fn parse(input: &str, min_nvars: usize) -> Result<MultiPoly, PolyError> {
        text::parse(input, min_nvars)
    }

    /// Terms in canonical display order: descending total `l`-degree, then descending
    /// exponent vector, then descending `λ` exponent.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Rational)> {
        let mut terms: Vec<_> = self.terms.iter().collect();
        terms.sort_by(|(a, _), (b, _)| {
            b.l_degree()
                .cmp(&a.l_degree())
                .then_with(|| b.exps.cmp(&a.exps))
                .then_with(|| b.lambda.cmp(&a.lambda))
        });
        terms
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_text())
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a> $trait<&'a MultiPoly> for &'a MultiPoly {
            type Output = MultiPoly;
            /// Panics on mismatched dimensions; use the `checked_*` form to get an error.
            fn $method(self, rhs: &'a MultiPoly) -> MultiPoly {
                self.$checked(rhs).expect("polynomial dimension mismatch")
            }
        }

        impl $trait for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn l(nvars: usize, j: usize) -> MultiPoly {
        MultiPoly::var(nvars, j).unwrap()
    }

    fn lam(nvars: usize, k: i32) -> MultiPoly {
        MultiPoly::lambda_pow(nvars, k)
    }

    /// λ²l₁² + 2λl₂
    fn h2() -> MultiPoly {
        &(&lam(2, 2) * &(&l(2, 1) * &l(2, 1))) + &(&lam(2, 1) * &l(2, 2)).scale(&int(2))
    }

    #[test]
    fn products_and_lambda_shift() {
        let a = &lam(1, 1) * &l(1, 1);
        assert_eq!(&a * &a, MultiPoly::term(1, int(1), 2, &[2]));
        assert_eq!(&a * &MultiPoly::one(1), a);
        let shifted = &h2() * &lam(2, -1);
        let expected = &(&lam(2, 1) * &(&l(2, 1) * &l(2, 1))) + &l(2, 2).scale(&int(2));
        assert_eq!(shifted, expected);
        assert_eq!(h2().shift_lambda(-1), expected);
    }

    #[test]
    fn zero_coefficients_are_dropped() {
        let p = h2();
        assert!((&p - &p).is_zero());
        assert_eq!((&p - &p).len(), 0);
    }

    #[test]
    fn mismatched_dimensions_error() {
        let err = l(1, 1).checked_add(&l(2, 1)).unwrap_err();
        assert_eq!(err, PolyError::DimensionMismatch { left: 1, right: 2 });
        assert!(l(1, 1).checked_mul(&l(2, 2)).is_err());
        assert!(MultiPoly::var(2, 3).is_err());
        assert!(MultiPoly::var(2, 0).is_err());
    }

    #[test]
    fn partial_derivatives() {
        let p = MultiPoly::term(1, int(1), 2, &[2]);
        assert_eq!(p.d_l(1).unwrap(), MultiPoly::term(1, int(2), 2, &[1]));
        assert!(MultiPoly::constant(3, int(7)).d_l(2).unwrap().is_zero());
        // ∂_{l2} ℍ₂ = 2λ = λ^{-1} ∂²_{l1} ℍ₂
        let h = h2();
        assert_eq!(h.d_l(2).unwrap(), lam(2, 1).scale(&int(2)));
        assert_eq!(h.d_l_pow(1, 2).unwrap().shift_lambda(-1), h.d_l(2).unwrap());
        assert!(matches!(h.d_l(3), Err(PolyError::VariableOutOfRange { index: 3, nvars: 2 })));
    }

    #[test]
    fn variable_scaling() {
        let p = &lam(2, 1) * &l(2, 1);
        assert_eq!(p.scale_vars(&int(2), &[1, 2]).unwrap(), p.scale(&int(2)));
        let h = h2();
        assert_eq!(h.scale_vars(&int(1), &[1, 2]).unwrap(), h);
        let s = int(5);
        assert_eq!(h.scale_vars(&s, &[1, 2]).unwrap(), h.scale(&int(25)));
        assert!(h.scale_vars(&s, &[1]).is_err());
    }

    #[test]
    fn lambda_substitution() {
        let h = h2();
        let expected = &(&l(2, 1) * &l(2, 1)) + &l(2, 2).scale(&int(2));
        assert_eq!(h.subst_lambda(&int(1)).unwrap(), expected);
        assert_eq!(
            MultiPoly::constant(2, int(5)).subst_lambda(&ratio(3, 7)).unwrap(),
            MultiPoly::constant(2, int(5))
        );
        assert_eq!(lam(1, -1).subst_lambda(&int(0)), Err(PolyError::PoleAtZero));
        assert_eq!(lam(1, 2).subst_lambda(&int(0)).unwrap(), MultiPoly::zero(1));
    }

    #[test]
    fn units() {
        let u = MultiPoly::term(2, ratio(3, 2), 2, &[]);
        assert_eq!(&u * &u.try_inverse().unwrap(), MultiPoly::one(2));
        assert!(l(2, 1).try_inverse().is_none());
        assert!(MultiPoly::zero(2).try_inverse().is_none());
    }

    #[test]
    fn exact_evaluation() {
        let h = h2();
        assert_eq!(h.eval_rational(&[int(1), int(1)], &int(1)).unwrap(), int(3));
        assert!(h.eval_rational(&[int(1)], &int(1)).is_err());
    }
}
