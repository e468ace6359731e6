//! Symmetric identities under the swap of two positive scaling integers `I ≠ S`.
//!
//! Checkers never fail on a false identity; they compute both sides exactly and return
//! an [`IdentityReport`] whose `pass` flag is true iff the residual vanishes. Only the
//! identity family `A ≡ 1` is expected to pass every check: the symmetric generating
//! functions behind these identities treat `A(Iξ)` and `A(Sξ)` as interchangeable.
//!
//! Two readings are fixed here:
//! * the numerator of the symmetric generating function is `(1+κ)^{ISξ/κ} − 1`;
//! * the polynomial `ℙ` in the convolution without Bernoulli factor is read as the
//!   power sum `σ` (see [`PInterpretation`]).

use std::fmt;
use std::str::FromStr;

use num::bigint::BigInt;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::appell::AppellFamily;
use crate::dmhap::{self, DmhapError};
use crate::poly::MultiPoly;
use crate::rational::{self, Rational};
use crate::series::TruncSeries;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdentityError {
    #[error("scaling integers must satisfy I ≠ S, I ≥ 1, S ≥ 1 (got I={i}, S={s})")]
    InvalidScaling { i: u32, s: u32 },
    #[error("unknown interpretation '{0}' (expected: sigma)")]
    UnknownInterpretation(String),
    #[error("unknown identity '{0}'")]
    UnknownIdentity(String),
    #[error(transparent)]
    Dmhap(#[from] DmhapError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum IdentityId {
    #[serde(rename = "scaling_3_1")]
    Scaling,
    #[serde(rename = "convolution_3_2")]
    Convolution,
    #[serde(rename = "hermite_scaling_3_3")]
    HermiteScaling,
    #[serde(rename = "bernoulli_convolution_3_4")]
    BernoulliConvolution,
    #[serde(rename = "gf_two_route")]
    GfTwoRoute,
}

impl IdentityId {
    pub const ALL: [IdentityId; 5] = [
        IdentityId::Scaling,
        IdentityId::Convolution,
        IdentityId::HermiteScaling,
        IdentityId::BernoulliConvolution,
        IdentityId::GfTwoRoute,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            IdentityId::Scaling => "scaling_3_1",
            IdentityId::Convolution => "convolution_3_2",
            IdentityId::HermiteScaling => "hermite_scaling_3_3",
            IdentityId::BernoulliConvolution => "bernoulli_convolution_3_4",
            IdentityId::GfTwoRoute => "gf_two_route",
        }
    }
}

impl fmt::Display for IdentityId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for IdentityId {
    type Err = IdentityError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        IdentityId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| IdentityError::UnknownIdentity(s.to_string()))
    }
}

/// Validated pair of scaling integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ScalingPair {
    pub i: u32,
    pub s: u32,
}

impl ScalingPair {
    pub fn new(i: u32, s: u32) -> Result<Self, IdentityError> {
        if i == 0 || s == 0 || i == s {
            return Err(IdentityError::InvalidScaling { i, s });
        }
        Ok(ScalingPair { i, s })
    }

    pub fn swapped(self) -> Self {
        ScalingPair { i: self.s, s: self.i }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity_id: IdentityId,
    pub family: String,
    pub r: usize,
    pub n: usize,
    pub scaling: ScalingPair,
    pub lhs: MultiPoly,
    pub rhs: MultiPoly,
    pub residual: MultiPoly,
    pub pass: bool,
    pub notes: String,
}

/// JSON form of a report.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub identity_id: IdentityId,
    pub family: String,
    pub r: usize,
    pub n: usize,
    #[serde(rename = "I")]
    pub i: u32,
    #[serde(rename = "S")]
    pub s: u32,
    pub pass: bool,
    pub residual_text: String,
    pub notes: String,
}

impl IdentityReport {
    #[allow(clippy::too_many_arguments)]
    fn new(
        identity_id: IdentityId,
        family: &AppellFamily,
        r: usize,
        n: usize,
        scaling: ScalingPair,
        lhs: MultiPoly,
        rhs: MultiPoly,
        notes: String,
    ) -> Self {
        let residual = &lhs - &rhs;
        IdentityReport {
            identity_id,
            family: family.name().to_string(),
            r,
            n,
            scaling,
            pass: residual.is_zero(),
            lhs,
            rhs,
            residual,
            notes,
        }
    }

    pub fn record(&self) -> ReportRecord {
        ReportRecord {
            identity_id: self.identity_id,
            family: self.family.clone(),
            r: self.r,
            n: self.n,
            i: self.scaling.i,
            s: self.scaling.s,
            pass: self.pass,
            residual_text: self.residual.to_text(),
            notes: self.notes.clone(),
        }
    }
}

/// Degenerate Bernoulli numbers `ℬ_m(κ)`: `t/((1+κ)^{t/κ} − 1) = Σ ℬ_m(κ) t^m/m!`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegenBernoulli {
    /// λ-only polynomials (no `l` variables).
    pub values: Vec<MultiPoly>,
}

/// `σ_n(c; κ) = λ^n Σ_{j=0}^c j^n`, with `0^0 = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerSumSigma {
    pub n: usize,
    pub c: u32,
    pub value: MultiPoly,
}

/// `((1+κ)^{t/κ} − 1)/t = Σ λ^{k+1} t^k/(k+1)!` as a λ-only series.
fn degenerate_expm1_over_t(scale: u32, order: usize) -> TruncSeries<MultiPoly> {
    let coeffs = (0..=order)
        .map(|k| {
            let c = Rational::new(
                num::pow::pow(BigInt::from(scale), k + 1),
                rational::factorial(k + 1),
            );
            MultiPoly::term(0, c, k as i32 + 1, &[])
        })
        .collect();
    TruncSeries::make(coeffs).expect("non-empty")
}

/// Series `Σ ℬ_m(κ) t^m/m!` to order `order`.
pub fn degen_bernoulli_series(order: usize) -> TruncSeries<MultiPoly> {
    degenerate_expm1_over_t(1, order).inv().expect("constant term λ is a unit")
}

pub fn degen_bernoulli(n: usize) -> DegenBernoulli {
    DegenBernoulli { values: degen_bernoulli_series(n).egf_values() }
}

pub fn power_sum_sigma(n: usize, c: u32) -> PowerSumSigma {
    let sum: BigInt = (0..=c).map(|j| num::pow::pow(BigInt::from(j), n)).sum();
    PowerSumSigma { n, c, value: MultiPoly::term(0, Rational::from_integer(sum), n as i32, &[]) }
}

/// `((1+κ)^{(c+1)t/κ} − 1)/((1+κ)^{t/κ} − 1)` as a series; its `t^n/n!` coefficients
/// are `σ_n(c; κ)`.
pub fn sigma_quotient_series(c: u32, order: usize) -> TruncSeries<MultiPoly> {
    let numerator = degenerate_expm1_over_t(c + 1, order);
    let denominator = degenerate_expm1_over_t(1, order);
    &numerator * &denominator.inv().expect("unit constant term")
}

/// `ℍA_k(c l1, c² l2, …, c^r lr)` for `k = 0..=n`.
fn scaled_entries(family: &AppellFamily, r: usize, n: usize, c: u32) -> Result<Vec<MultiPoly>, IdentityError> {
    let table = dmhap::generate(family, r, n)?;
    let weights: Vec<u32> = (1..=r as u32).collect();
    let c = rational::int(c as i64);
    Ok(table
        .entries
        .iter()
        .map(|p| p.scale_vars(&c, &weights).expect("weights match r"))
        .collect())
}

fn int_pow(base: u32, exp: usize) -> Rational {
    Rational::from_integer(num::pow::pow(BigInt::from(base), exp))
}

fn family_note(family: &AppellFamily) -> &'static str {
    if *family == AppellFamily::Identity {
        "A ≡ 1: both sides share one symmetric generating function"
    } else {
        "holds only when A(Iξ) = A(Sξ); expected to fail for non-constant A"
    }
}

fn scaling_sides(
    family: &AppellFamily,
    r: usize,
    n: usize,
    pair: ScalingPair,
) -> Result<(MultiPoly, MultiPoly), IdentityError> {
    let by_s = scaled_entries(family, r, n, pair.s)?;
    let by_i = scaled_entries(family, r, n, pair.i)?;
    let lhs = by_s[n].scale(&int_pow(pair.i, n));
    let rhs = by_i[n].scale(&int_pow(pair.s, n));
    Ok((lhs, rhs))
}

/// `I^n ℍA_n(S l1, S² l2, …) = S^n ℍA_n(I l1, I² l2, …)`.
pub fn check_scaling(
    family: &AppellFamily,
    r: usize,
    n: usize,
    i: u32,
    s: u32,
) -> Result<IdentityReport, IdentityError> {
    let pair = ScalingPair::new(i, s)?;
    let (lhs, rhs) = scaling_sides(family, r, n, pair)?;
    Ok(IdentityReport::new(IdentityId::Scaling, family, r, n, pair, lhs, rhs, family_note(family).into()))
}

/// The same scaling identity with κ suppressed from the notation; the check is identical.
pub fn check_hermite_scaling(
    family: &AppellFamily,
    r: usize,
    n: usize,
    i: u32,
    s: u32,
) -> Result<IdentityReport, IdentityError> {
    let pair = ScalingPair::new(i, s)?;
    let (lhs, rhs) = scaling_sides(family, r, n, pair)?;
    let notes = format!("κ-suppressed restatement of scaling_3_1; {}", family_note(family));
    Ok(IdentityReport::new(IdentityId::HermiteScaling, family, r, n, pair, lhs, rhs, notes))
}

/// Which index the degenerate Bernoulli factor carries in the triple sum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum BernoulliIndex {
    /// `ℬ_m`, the index of the inner sum; what the product of the three series yields.
    #[default]
    Inner,
    /// `ℬ_n`, the outer degree, as the sum is sometimes printed.
    Outer,
}

/// Triple sum `Σ_k Σ_m C(n,k) C(k,m) I^k S^{n+1-k} B(m) ℍA_{k-m}(S l) σ_{n-k}(I−1)`,
/// with `bernoulli(m)` supplying the factor (or one, for the convolution without it).
fn triple_sum(
    n: usize,
    pair: ScalingPair,
    hermite_scaled: &[MultiPoly],
    bernoulli: &dyn Fn(usize) -> MultiPoly,
) -> MultiPoly {
    let r = hermite_scaled[0].nvars();
    let mut total = MultiPoly::zero(r);
    for k in 0..=n {
        let sigma = power_sum_sigma(n - k, pair.i - 1).value.with_nvars(r).expect("λ-only");
        let outer = Rational::from_integer(rational::binomial(n, k))
            * int_pow(pair.i, k)
            * int_pow(pair.s, n + 1 - k);
        let mut inner = MultiPoly::zero(r);
        for m in 0..=k {
            let c = Rational::from_integer(rational::binomial(k, m));
            let term = &bernoulli(m) * &hermite_scaled[k - m];
            inner = &inner + &term.scale(&c);
        }
        total = &total + &(&inner * &sigma).scale(&outer);
    }
    total
}

/// Convolution identity with degenerate Bernoulli numbers and power sums.
pub fn check_convolution_3_4(
    family: &AppellFamily,
    r: usize,
    n: usize,
    i: u32,
    s: u32,
) -> Result<IdentityReport, IdentityError> {
    check_convolution_3_4_with(family, r, n, i, s, BernoulliIndex::Inner)
}

pub fn check_convolution_3_4_with(
    family: &AppellFamily,
    r: usize,
    n: usize,
    i: u32,
    s: u32,
    index: BernoulliIndex,
) -> Result<IdentityReport, IdentityError> {
    let pair = ScalingPair::new(i, s)?;
    let bern: Vec<MultiPoly> = degen_bernoulli(n)
        .values
        .into_iter()
        .map(|b| b.with_nvars(r).expect("λ-only"))
        .collect();
    let pick = |m: usize| match index {
        BernoulliIndex::Inner => bern[m].clone(),
        BernoulliIndex::Outer => bern[n].clone(),
    };
    let lhs = triple_sum(n, pair, &scaled_entries(family, r, n, pair.s)?, &pick);
    let rhs = triple_sum(n, pair.swapped(), &scaled_entries(family, r, n, pair.i)?, &pick);
    let reading = match index {
        BernoulliIndex::Inner => "Bernoulli factor indexed by the inner summation variable m",
        BernoulliIndex::Outer => "Bernoulli factor indexed by the outer degree n",
    };
    let notes = format!(
        "{reading}; numerator read as (1+κ)^(ISξ/κ) − 1; {}",
        family_note(family)
    );
    Ok(IdentityReport::new(IdentityId::BernoulliConvolution, family, r, n, pair, lhs, rhs, notes))
}

/// Reading of the undefined polynomial `ℙ` in the convolution without Bernoulli factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PInterpretation {
    #[default]
    Sigma,
}

impl FromStr for PInterpretation {
    type Err = IdentityError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "sigma" => Ok(PInterpretation::Sigma),
            other => Err(IdentityError::UnknownInterpretation(other.to_string())),
        }
    }
}

/// Convolution identity without a Bernoulli factor, with `ℙ` read per `interpretation`.
/// Its symmetric generating function carries a Bernoulli-type factor this sum lacks,
/// so the report usually shows a nonzero residual even for `A ≡ 1`.
pub fn check_convolution_3_2(
    family: &AppellFamily,
    r: usize,
    n: usize,
    i: u32,
    s: u32,
    interpretation: PInterpretation,
) -> Result<IdentityReport, IdentityError> {
    let pair = ScalingPair::new(i, s)?;
    let one = MultiPoly::one(r);
    let unit = |_: usize| one.clone();
    let lhs = triple_sum(n, pair, &scaled_entries(family, r, n, pair.s)?, &unit);
    let rhs = triple_sum(n, pair.swapped(), &scaled_entries(family, r, n, pair.i)?, &unit);
    let PInterpretation::Sigma = interpretation;
    let notes = format!("P read as the power sum σ; {}", family_note(family));
    Ok(IdentityReport::new(IdentityId::Convolution, family, r, n, pair, lhs, rhs, notes))
}

/// `S · B(Iξ) · H_S(Iξ) · Σ_{I−1}(Sξ)`, where `H_S` is the DMHAP series with `l_j → S^j l_j`
/// and `Σ_c` the power-sum quotient series.
pub fn gf_route(
    family: &AppellFamily,
    r: usize,
    n_max: usize,
    pair: ScalingPair,
) -> Result<TruncSeries<MultiPoly>, IdentityError> {
    let lift = |s: TruncSeries<MultiPoly>| s.map(|p| p.with_nvars(r).expect("λ-only"));
    let constant = |c: u32| MultiPoly::constant(r, rational::int(c as i64));
    let bern = lift(degen_bernoulli_series(n_max)).scale_arg(&constant(pair.i));
    let hermite = TruncSeries::from_egf(scaled_entries(family, r, n_max, pair.s)?)
        .expect("non-empty")
        .scale_arg(&constant(pair.i));
    let sigma = lift(sigma_quotient_series(pair.i - 1, n_max)).scale_arg(&constant(pair.s));
    Ok((&(&bern * &hermite) * &sigma).scale(&constant(pair.s)))
}

/// Compares the two factorizations of the symmetric generating function degree by degree.
/// `lhs`/`rhs`/`residual` hold the `ξ^n/n!` coefficients at the first degree where the
/// routes differ, or at `n_max` when they agree throughout.
pub fn gf_two_route(
    family: &AppellFamily,
    r: usize,
    n_max: usize,
    i: u32,
    s: u32,
) -> Result<IdentityReport, IdentityError> {
    let pair = ScalingPair::new(i, s)?;
    let first = gf_route(family, r, n_max, pair)?.egf_values();
    let second = gf_route(family, r, n_max, pair.swapped())?.egf_values();
    let differing: Vec<usize> = (0..=n_max).filter(|&k| first[k] != second[k]).collect();
    let at = differing.first().copied().unwrap_or(n_max);
    let mut notes = format!(
        "numerator read as (1+κ)^(ISξ/κ) − 1; {}",
        family_note(family)
    );
    if !differing.is_empty() {
        notes.push_str(&format!("; routes differ at degrees {differing:?}"));
    }
    Ok(IdentityReport::new(
        IdentityId::GfTwoRoute,
        family,
        r,
        at,
        pair,
        first[at].clone(),
        second[at].clone(),
        notes,
    ))
}

/// Runs the named identity check at `(r, n, I, S)` with default readings.
pub fn check(
    id: IdentityId,
    family: &AppellFamily,
    r: usize,
    n: usize,
    i: u32,
    s: u32,
) -> Result<IdentityReport, IdentityError> {
    match id {
        IdentityId::Scaling => check_scaling(family, r, n, i, s),
        IdentityId::HermiteScaling => check_hermite_scaling(family, r, n, i, s),
        IdentityId::BernoulliConvolution => check_convolution_3_4(family, r, n, i, s),
        IdentityId::Convolution => check_convolution_3_2(family, r, n, i, s, PInterpretation::Sigma),
        IdentityId::GfTwoRoute => gf_two_route(family, r, n, i, s),
    }
}

impl DegenBernoulli {
    /// Closed form `𝔅_m λ^{m-1}` from the classical Bernoulli numbers.
    pub fn closed_form(n: usize) -> Vec<MultiPoly> {
        AppellFamily::Bernoulli
            .numbers(n)
            .into_iter()
            .enumerate()
            .map(|(m, b)| MultiPoly::term(0, b, m as i32 - 1, &[]))
            .collect()
    }
}

impl PowerSumSigma {
    pub fn is_counting(&self) -> bool {
        self.n == 0 && self.value == MultiPoly::constant(0, rational::int(self.c as i64 + 1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn lam(k: i32, c: Rational) -> MultiPoly {
        MultiPoly::term(0, c, k, &[])
    }

    #[test]
    fn degenerate_bernoulli_values() {
        let b = degen_bernoulli(3);
        assert_eq!(b.values[0], lam(-1, int(1)));
        assert_eq!(b.values[1], lam(0, ratio(-1, 2)));
        assert_eq!(b.values[2], lam(1, ratio(1, 6)));
        assert!(b.values[3].is_zero());
        assert_eq!(b.values, DegenBernoulli::closed_form(3));
    }

    #[test]
    fn power_sums() {
        assert!(power_sum_sigma(0, 4).is_counting());
        assert_eq!(power_sum_sigma(1, 2).value, lam(1, int(3)));
        assert_eq!(power_sum_sigma(2, 1).value, lam(2, int(1)));
        let q = sigma_quotient_series(2, 3).egf_values();
        for (n, v) in q.iter().enumerate() {
            assert_eq!(*v, power_sum_sigma(n, 2).value);
        }
    }

    #[test]
    fn scaling_examples() {
        let rep = check_scaling(&AppellFamily::Identity, 2, 4, 2, 3).unwrap();
        assert!(rep.pass);
        let rep = check_scaling(&AppellFamily::Bernoulli, 1, 0, 1, 2).unwrap();
        assert!(rep.pass);
        let rep = check_scaling(&AppellFamily::Bernoulli, 1, 1, 1, 2).unwrap();
        assert!(!rep.pass);
        assert_eq!(rep.residual, MultiPoly::constant(1, ratio(1, 2)));
        assert_eq!(rep.lhs.to_text(), "2*L*l1 - 1/2");
        assert_eq!(rep.rhs.to_text(), "2*L*l1 - 1");
    }

    #[test]
    fn invalid_scaling_pairs() {
        for (i, s) in [(0, 1), (1, 0), (2, 2)] {
            assert_eq!(
                check_scaling(&AppellFamily::Identity, 1, 1, i, s).unwrap_err(),
                IdentityError::InvalidScaling { i, s }
            );
        }
    }

    #[test]
    fn bernoulli_convolution_small_cases() {
        for n in 0..=4 {
            let rep = check_convolution_3_4(&AppellFamily::Identity, 2, n, 2, 3).unwrap();
            assert!(rep.pass, "n={n}: {}", rep.residual);
        }
        // the outer-index reading breaks the symmetry already at n = 1
        let rep =
            check_convolution_3_4_with(&AppellFamily::Identity, 1, 1, 1, 2, BernoulliIndex::Outer)
                .unwrap();
        assert!(!rep.pass);
        let rep = check_convolution_3_4(&AppellFamily::Bernoulli, 1, 2, 1, 2).unwrap();
        assert!(!rep.residual.is_zero());
    }

    #[test]
    fn convolution_without_bernoulli_factor() {
        let rep = check_convolution_3_2(&AppellFamily::Identity, 2, 0, 1, 2, PInterpretation::Sigma)
            .unwrap();
        assert!(rep.pass);
        let rep = check_convolution_3_2(&AppellFamily::Identity, 1, 1, 1, 2, PInterpretation::Sigma)
            .unwrap();
        // hand expansion: residual = λ IS(I−S)/2 + IS(I−S) at I=1, S=2 → −λ − 2
        assert_eq!(rep.residual.to_text(), "-L - 2");
        assert!(matches!(
            "other".parse::<PInterpretation>(),
            Err(IdentityError::UnknownInterpretation(_))
        ));
    }

    #[test]
    fn two_routes() {
        let rep = gf_two_route(&AppellFamily::Identity, 2, 6, 2, 3).unwrap();
        assert!(rep.pass, "{}", rep.notes);
        assert!(gf_two_route(&AppellFamily::Bernoulli, 1, 0, 1, 2).unwrap().pass);
        let rep = gf_two_route(&AppellFamily::Bernoulli, 1, 3, 1, 2).unwrap();
        assert!(!rep.pass);
        assert!(rep.notes.contains("routes differ"));
    }

    #[test]
    fn reports_serialize() {
        let rep = check_scaling(&AppellFamily::Bernoulli, 1, 1, 1, 2).unwrap();
        let json = serde_json::to_value(rep.record()).unwrap();
        assert_eq!(json["identity_id"], "scaling_3_1");
        assert_eq!(json["I"], 1);
        assert_eq!(json["S"], 2);
        assert_eq!(json["pass"], false);
        assert_eq!(json["residual_text"], "1/2");
        assert_eq!("gf_two_route".parse::<IdentityId>().unwrap(), IdentityId::GfTwoRoute);
    }
}
