//! Exact construction of degenerate multidimensional Hermite-based Appell polynomials
//! (DMHAP), their monomiality operators and operational rule, and exact checkers for
//! their symmetric identities.
//!
//! Everything is computed over `ℚ[l1..lr][λ, λ⁻¹]` with `λ = log(1+κ)/κ`; see [`poly`].

pub mod appell;
pub mod cli;
pub mod dmhap;
pub mod identities;
pub mod poly;
pub mod rational;
pub mod series;

pub use appell::{AppellError, AppellFamily};
pub use dmhap::{generate, operational_rule, DmhapError, DmhapTable, RaisingOperator};
pub use identities::{IdentityError, IdentityId, IdentityReport};
pub use poly::{MultiPoly, PolyError};
pub use rational::Rational;
pub use series::{Coefficient, SeriesError, TruncSeries};
