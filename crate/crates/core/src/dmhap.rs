//! Degenerate multidimensional Hermite-based Appell polynomials.
//!
//! `ℍA_n(l1..lr; κ)` is `n!` times the `ξ^n` coefficient of
//! `A(ξ)·(1+κ)^{(l1ξ + l2ξ² + ⋯ + lrξ^r)/κ} = A(ξ)·exp(λ(l1ξ + ⋯ + lrξ^r))`.
//!
//! The monomiality operators act on polynomials in `ℚ[l1..lr][λ, λ⁻¹]`:
//!
//! * lowering `D̂ = λ⁻¹ ∂_{l1}`,
//! * raising `M̂ = (A′/A)(D̂) + λ l1 + Σ_{j=2}^r j l_j λ^{2-j} ∂_{l1}^{j-1}`.
//!
//! The raising operator comes from differentiating the generating function in ξ and
//! trading each factor of ξ for `D̂`. The λ-exponent `2 - j` on the `l_j` term and the
//! unscaled `A′/A` are enforced by the raising property tests.

use num::{One, Zero};
use thiserror::Error;

use crate::appell::{AppellError, AppellFamily};
use crate::poly::{MultiPoly, PolyError};
use crate::rational::{self, Rational};
use crate::series::TruncSeries;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DmhapError {
    #[error("dimension r must be at least 1")]
    ZeroDimension,
    #[error("operators unsupported for A(0)=0 ({0})")]
    OperatorsUnsupported(String),
    #[error("index {index} beyond table degree {max}")]
    Truncation { index: usize, max: usize },
    #[error("variable index j={j} outside 2..={r}")]
    VariableIndex { j: usize, r: usize },
    #[error(transparent)]
    Poly(#[from] PolyError),
}

impl From<AppellError> for DmhapError {
    fn from(e: AppellError) -> Self {
        DmhapError::OperatorsUnsupported(e.to_string())
    }
}

/// `entries[n] = ℍA_n^{[r]}` for `n = 0..=n_max`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DmhapTable {
    pub family: AppellFamily,
    pub r: usize,
    pub n_max: usize,
    pub entries: Vec<MultiPoly>,
}

impl DmhapTable {
    pub fn entry(&self, n: usize) -> Result<&MultiPoly, DmhapError> {
        self.entries.get(n).ok_or(DmhapError::Truncation { index: n, max: self.n_max })
    }

    /// `Σ entries[n] ξ^n/n!` as a series of order `n_max`.
    pub fn to_series(&self) -> TruncSeries<MultiPoly> {
        TruncSeries::from_egf(self.entries.clone()).expect("tables are never empty")
    }
}

/// `exp(λ(l1ξ + l2ξ² + ⋯ + lrξ^r))` to order `order`; variables with `j > order` are inert.
pub fn hermite_kernel(r: usize, order: usize) -> Result<TruncSeries<MultiPoly>, DmhapError> {
    if r == 0 {
        return Err(DmhapError::ZeroDimension);
    }
    let mut arg = vec![MultiPoly::zero(r); order + 1];
    for (j, slot) in arg.iter_mut().enumerate().skip(1).take(r) {
        *slot = MultiPoly::var(r, j)?.shift_lambda(1);
    }
    Ok(TruncSeries::make(arg).expect("non-empty").exp().expect("zero constant term"))
}

/// Table of `ℍA_0..ℍA_{n_max}` from the product `A(ξ) · kernel`.
pub fn generate(family: &AppellFamily, r: usize, n_max: usize) -> Result<DmhapTable, DmhapError> {
    let kernel = hermite_kernel(r, n_max)?;
    let product = &family.series(n_max).to_poly(r) * &kernel;
    Ok(DmhapTable {
        family: family.clone(),
        r,
        n_max,
        entries: product.egf_values(),
    })
}

/// `D̂ p = λ⁻¹ ∂_{l1} p`.
pub fn lower(p: &MultiPoly) -> Result<MultiPoly, DmhapError> {
    Ok(p.d_l(1)?.shift_lambda(-1))
}

/// Monomiality raising operator for a fixed family and dimension.
#[derive(Debug, Clone)]
pub struct RaisingOperator {
    r: usize,
    log_derivative: TruncSeries<Rational>,
}

impl RaisingOperator {
    /// `order` bounds the `l1`-degree of the polynomials it can act on exactly.
    pub fn new(family: &AppellFamily, r: usize, order: usize) -> Result<Self, DmhapError> {
        if r == 0 {
            return Err(DmhapError::ZeroDimension);
        }
        if !family.supports_operators() {
            return Err(DmhapError::OperatorsUnsupported(family.name().to_string()));
        }
        Ok(RaisingOperator { r, log_derivative: family.log_derivative(order)? })
    }

    pub fn order(&self) -> usize {
        self.log_derivative.order()
    }

    pub fn apply(&self, p: &MultiPoly) -> Result<MultiPoly, DmhapError> {
        if p.nvars() != self.r {
            return Err(PolyError::DimensionMismatch { left: self.r, right: p.nvars() }.into());
        }
        let degree = p.degree_in(1) as usize;
        if degree > self.order() {
            return Err(DmhapError::Truncation { index: degree, max: self.order() });
        }
        // (A′/A)(D̂) p
        let mut out = MultiPoly::zero(self.r);
        let mut power = p.clone();
        for c in self.log_derivative.coeffs().iter().take(degree + 1) {
            if !c.is_zero() {
                out = &out + &power.scale(c);
            }
            power = lower(&power)?;
        }
        // λ l1 p
        out = &out + &p.shift_var(1, 1)?.shift_lambda(1);
        // j l_j λ^{2-j} ∂^{j-1}_{l1} p
        for j in 2..=self.r {
            let d = p.d_l_pow(1, (j - 1) as u32)?;
            if d.is_zero() {
                continue;
            }
            let term = d.shift_var(j, 1)?.shift_lambda(2 - j as i32).scale(&rational::int(j as i64));
            out = &out + &term;
        }
        Ok(out)
    }
}

/// `M̂ ℍA_n`; equals `ℍA_{n+1}` when the operator identity holds.
pub fn mult_op_apply(
    family: &AppellFamily,
    r: usize,
    n_max: usize,
    n: usize,
) -> Result<MultiPoly, DmhapError> {
    if n >= n_max {
        return Err(DmhapError::Truncation { index: n + 1, max: n_max });
    }
    let op = RaisingOperator::new(family, r, n_max)?;
    let table = generate(family, r, n_max)?;
    op.apply(&table.entries[n])
}

/// `D̂ ℍA_n`; equals `n·ℍA_{n-1}`.
pub fn deriv_op_apply(table: &DmhapTable, n: usize) -> Result<MultiPoly, DmhapError> {
    lower(table.entry(n)?)
}

/// `M̂D̂ ℍA_n − n ℍA_n`, zero when `ℍA_n` is a quasi-monomial.
pub fn ode_residual(
    family: &AppellFamily,
    r: usize,
    n_max: usize,
    n: usize,
) -> Result<MultiPoly, DmhapError> {
    if n >= n_max {
        return Err(DmhapError::Truncation { index: n + 1, max: n_max });
    }
    let op = RaisingOperator::new(family, r, n_max)?;
    let table = generate(family, r, n_max)?;
    ode_residual_with(&op, &table.entries[n], n)
}

pub fn ode_residual_with(
    op: &RaisingOperator,
    p: &MultiPoly,
    n: usize,
) -> Result<MultiPoly, DmhapError> {
    let lhs = op.apply(&lower(p)?)?;
    Ok(&lhs - &p.scale(&rational::int(n as i64)))
}

/// `(D̂M̂ − M̂D̂) p − p`, zero when the commutator acts as the identity on `p`.
pub fn commutator_residual(op: &RaisingOperator, p: &MultiPoly) -> Result<MultiPoly, DmhapError> {
    let dm = lower(&op.apply(p)?)?;
    let md = op.apply(&lower(p)?)?;
    Ok(&(&dm - &md) - p)
}

/// `∂_{l_j} ℍA_n − λ^{1-j} ∂_{l1}^j ℍA_n`.
pub fn pde_residual(table: &DmhapTable, j: usize, n: usize) -> Result<MultiPoly, DmhapError> {
    if j < 2 || j > table.r {
        return Err(DmhapError::VariableIndex { j, r: table.r });
    }
    let p = table.entry(n)?;
    let lhs = p.d_l(j)?;
    let rhs = p.d_l_pow(1, j as u32)?.shift_lambda(1 - j as i32);
    Ok(&lhs - &rhs)
}

/// `exp(Σ_{j=2}^r l_j λ^{1-j} ∂_{l1}^j) p`. Each application lowers the `l1`-degree by
/// at least two, so the exponential series terminates.
pub fn heat_operator_exp(p: &MultiPoly, r: usize) -> Result<MultiPoly, DmhapError> {
    let p = p.with_nvars(r)?;
    let step = |q: &MultiPoly| -> Result<MultiPoly, DmhapError> {
        let mut out = MultiPoly::zero(r);
        for j in 2..=r {
            let d = q.d_l_pow(1, j as u32)?;
            if !d.is_zero() {
                out = &out + &d.shift_var(j, 1)?.shift_lambda(1 - j as i32);
            }
        }
        Ok(out)
    };
    let mut total = p.clone();
    let mut term = p;
    let mut k: i64 = 1;
    loop {
        term = step(&term)?.scale(&rational::ratio(1, k));
        if term.is_zero() {
            break;
        }
        total = &total + &term;
        k += 1;
    }
    Ok(total)
}

/// Builds the `r`-variable table by applying the exponential derivative operator to the
/// one-variable degenerate table.
pub fn operational_rule(
    family: &AppellFamily,
    r: usize,
    n_max: usize,
) -> Result<DmhapTable, DmhapError> {
    if r == 0 {
        return Err(DmhapError::ZeroDimension);
    }
    let base = generate(family, 1, n_max)?;
    let entries = base
        .entries
        .iter()
        .map(|p| heat_operator_exp(p, r))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(DmhapTable { family: family.clone(), r, n_max, entries })
}

/// `λ → 1` applied to every entry.
pub fn classical_limit(table: &DmhapTable) -> Result<Vec<MultiPoly>, DmhapError> {
    table
        .entries
        .iter()
        .map(|p| p.subst_lambda(&Rational::one()).map_err(DmhapError::from))
        .collect()
}

/// Independent classical oracle: coefficients of `A(ξ)·exp(l1ξ + ⋯ + lrξ^r)` with no λ.
pub fn classical_hermite_appell(
    family: &AppellFamily,
    r: usize,
    n_max: usize,
) -> Result<Vec<MultiPoly>, DmhapError> {
    if r == 0 {
        return Err(DmhapError::ZeroDimension);
    }
    let mut arg = vec![MultiPoly::zero(r); n_max + 1];
    for (j, slot) in arg.iter_mut().enumerate().skip(1).take(r) {
        *slot = MultiPoly::var(r, j)?;
    }
    let kernel = TruncSeries::make(arg).expect("non-empty").exp().expect("zero constant");
    Ok((&family.series(n_max).to_poly(r) * &kernel).egf_values())
}

/// Falling factorial `n (n-1) ⋯ (n-k+1)`.
pub fn falling(n: usize, k: usize) -> Rational {
    if k > n {
        return Rational::zero();
    }
    Rational::from_integer(rational::factorial(n) / rational::factorial(n - k))
}

/// `∂^k_{l1} ℍA_n − n!/(n-k)! λ^k ℍA_{n-k}` (zero right side when `k > n`).
pub fn l1_derivative_residual(table: &DmhapTable, n: usize, k: usize) -> Result<MultiPoly, DmhapError> {
    let lhs = table.entry(n)?.d_l_pow(1, k as u32)?;
    let rhs = if k > n {
        MultiPoly::zero(table.r)
    } else {
        table.entry(n - k)?.shift_lambda(k as i32).scale(&falling(n, k))
    };
    Ok(&lhs - &rhs)
}

/// `∂_{l_j} ℍA_n − n!/(n-j)! λ ℍA_{n-j}`.
pub fn lj_derivative_residual(table: &DmhapTable, n: usize, j: usize) -> Result<MultiPoly, DmhapError> {
    if j == 0 || j > table.r {
        return Err(DmhapError::VariableIndex { j, r: table.r });
    }
    let lhs = table.entry(n)?.d_l(j)?;
    let rhs = if j > n {
        MultiPoly::zero(table.r)
    } else {
        table.entry(n - j)?.shift_lambda(1).scale(&falling(n, j))
    };
    Ok(&lhs - &rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;

    fn text(p: &MultiPoly) -> String {
        p.to_text()
    }

    #[test]
    fn kernel_coefficients() {
        let k1 = hermite_kernel(1, 4).unwrap();
        for n in 0..=4 {
            assert_eq!(k1.extract(n).unwrap(), MultiPoly::term(1, int(1), n as i32, &[n as u32]));
        }
        let k2 = hermite_kernel(2, 2).unwrap();
        assert_eq!(text(&k2.extract(1).unwrap()), "L*l1");
        assert_eq!(text(&k2.extract(2).unwrap()), "L^2*l1^2 + 2*L*l2");
        assert_eq!(hermite_kernel(0, 2), Err(DmhapError::ZeroDimension));
        // r > N leaves the high variables inert
        let k5 = hermite_kernel(5, 2).unwrap();
        assert_eq!(text(&k5.extract(2).unwrap()), "L^2*l1^2 + 2*L*l2");
    }

    #[test]
    fn generated_entries() {
        for f in AppellFamily::builtins() {
            let t = generate(&f, 2, 3).unwrap();
            assert_eq!(t.entries[0], MultiPoly::constant(2, f.a0()));
        }
        let b = generate(&AppellFamily::Bernoulli, 2, 2).unwrap();
        assert_eq!(text(&b.entries[2]), "L^2*l1^2 - L*l1 + 2*L*l2 + 1/6");
        let h = generate(&AppellFamily::Identity, 3, 3).unwrap();
        assert_eq!(text(&h.entries[3]), "L^3*l1^3 + 6*L^2*l1*l2 + 6*L*l3");
        let g = generate(&AppellFamily::Genocchi, 1, 1).unwrap();
        assert_eq!(text(&g.entries[0]), "0");
        assert_eq!(text(&g.entries[1]), "1");
    }

    #[test]
    fn raising_operator_examples() {
        let h2 = mult_op_apply(&AppellFamily::Identity, 2, 2, 1).unwrap();
        assert_eq!(text(&h2), "L^2*l1^2 + 2*L*l2");
        let h1 = mult_op_apply(&AppellFamily::Identity, 3, 3, 0).unwrap();
        assert_eq!(text(&h1), "L*l1");
        let b2 = mult_op_apply(&AppellFamily::Bernoulli, 2, 2, 1).unwrap();
        assert_eq!(text(&b2), "L^2*l1^2 - L*l1 + 2*L*l2 + 1/6");
        assert!(matches!(
            mult_op_apply(&AppellFamily::Genocchi, 2, 3, 1),
            Err(DmhapError::OperatorsUnsupported(_))
        ));
        assert!(matches!(
            mult_op_apply(&AppellFamily::Identity, 2, 2, 2),
            Err(DmhapError::Truncation { .. })
        ));
    }

    #[test]
    fn scaled_log_derivative_fails_raising() {
        // Reading the A′/A term as multiplied by log(1+κ) would add an extra factor of λ.
        let op = RaisingOperator::new(&AppellFamily::Bernoulli, 2, 2).unwrap();
        let table = generate(&AppellFamily::Bernoulli, 2, 2).unwrap();
        let p = &table.entries[1];
        let unscaled = op.apply(p).unwrap();
        let ld = AppellFamily::Bernoulli.log_derivative(2).unwrap();
        let mut scaled_part = MultiPoly::zero(2);
        let mut power = p.clone();
        for c in ld.coeffs() {
            scaled_part = &scaled_part + &power.scale(c);
            power = lower(&power).unwrap();
        }
        let alternative = &(&unscaled - &scaled_part) + &scaled_part.shift_lambda(1);
        assert_eq!(unscaled, table.entries[2]);
        assert_ne!(alternative, table.entries[2]);
    }

    #[test]
    fn lowering_examples() {
        let t = generate(&AppellFamily::Identity, 2, 2).unwrap();
        assert!(deriv_op_apply(&t, 0).unwrap().is_zero());
        assert_eq!(deriv_op_apply(&t, 2).unwrap(), t.entries[1].scale(&int(2)));
        let b = generate(&AppellFamily::Bernoulli, 2, 2).unwrap();
        assert_eq!(text(&deriv_op_apply(&b, 2).unwrap()), "2*L*l1 - 1");
        assert!(deriv_op_apply(&b, 3).is_err());
    }

    #[test]
    fn ode_examples() {
        assert!(ode_residual(&AppellFamily::Identity, 2, 3, 0).unwrap().is_zero());
        assert!(ode_residual(&AppellFamily::Identity, 2, 3, 2).unwrap().is_zero());
        assert!(ode_residual(&AppellFamily::Bernoulli, 3, 4, 3).unwrap().is_zero());
    }

    #[test]
    fn pde_examples() {
        let t = generate(&AppellFamily::Identity, 2, 2).unwrap();
        assert!(pde_residual(&t, 2, 2).unwrap().is_zero());
        assert!(pde_residual(&t, 2, 1).unwrap().is_zero());
        assert!(matches!(pde_residual(&t, 1, 2), Err(DmhapError::VariableIndex { .. })));
        assert!(matches!(pde_residual(&t, 3, 2), Err(DmhapError::VariableIndex { .. })));
        let b = generate(&AppellFamily::Bernoulli, 3, 4).unwrap();
        assert!(pde_residual(&b, 3, 4).unwrap().is_zero());
    }

    #[test]
    fn operational_rule_examples() {
        let base = generate(&AppellFamily::Euler, 1, 5).unwrap();
        assert_eq!(operational_rule(&AppellFamily::Euler, 1, 5).unwrap(), base);
        let h = operational_rule(&AppellFamily::Identity, 2, 2).unwrap();
        assert_eq!(text(&h.entries[2]), "L^2*l1^2 + 2*L*l2");
        let b = operational_rule(&AppellFamily::Bernoulli, 2, 2).unwrap();
        assert_eq!(text(&b.entries[2]), "L^2*l1^2 - L*l1 + 2*L*l2 + 1/6");
    }

    #[test]
    fn classical_limits() {
        let t = generate(&AppellFamily::Identity, 2, 2).unwrap();
        assert_eq!(text(&classical_limit(&t).unwrap()[2]), "l1^2 + 2*l2");
        let b = generate(&AppellFamily::Bernoulli, 1, 2).unwrap();
        let lim = classical_limit(&b).unwrap();
        assert_eq!(lim[0], MultiPoly::one(1));
        assert_eq!(lim[2], AppellFamily::Bernoulli.classical_poly(2));
        let oracle = classical_hermite_appell(&AppellFamily::Bernoulli, 1, 2).unwrap();
        assert_eq!(lim, oracle);
    }

    #[test]
    fn derivative_relations() {
        let t = generate(&AppellFamily::Bernoulli, 3, 6).unwrap();
        for n in 0..=6 {
            for k in 0..=7 {
                assert!(l1_derivative_residual(&t, n, k).unwrap().is_zero());
            }
            for j in 1..=3 {
                assert!(lj_derivative_residual(&t, n, j).unwrap().is_zero());
            }
        }
        assert_eq!(falling(5, 2), int(20));
        assert_eq!(falling(2, 3), int(0));
    }
}
