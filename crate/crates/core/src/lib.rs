//! Exact computation of Hoggatt binomials, Hankel determinants of binomial
//! and Hoggatt columns, and higher-dimensional Narayana and Catalan numbers,
//! together with a harness that checks the identities relating them over
//! finite parameter grids.
//!
//! The polynomial, series and determinant machinery is generic over
//! num-traits scalars; the aliases below fix the exact types used
//! everywhere else.

pub mod conjectures;
pub mod det;
pub mod error;
pub mod exact;
pub mod hankel;
pub mod hoggatt;
pub mod narayana;
pub mod poly;
pub mod report;
pub mod series;
pub mod ssyt;
pub mod sweep;

pub use error::{Error, Result};
pub use poly::{GammaReport, GammaVector, Polynomial};
pub use report::{CheckId, PointParams, Status, VerificationReport};
pub use series::TruncatedSeries;

/// Arbitrary-precision integer.
pub type Integer = num_bigint::BigInt;
/// Exact fraction in lowest terms with positive denominator.
pub type Rational = num_rational::BigRational;
/// Dense polynomial over [`Rational`].
pub type Poly = Polynomial<Rational>;
/// Truncated power series over [`Rational`].
pub type Series = TruncatedSeries<Rational>;
/// Gamma vector over [`Rational`].
pub type Gamma = GammaVector<Rational>;
