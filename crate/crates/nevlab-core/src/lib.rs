//! Value-distribution laboratory for differential monomials of meromorphic
//! functions.
//!
//! The library has two halves:
//!
//! * an exact half over the Gaussian rationals Q(i) — polynomials, rational
//!   functions, factored representations, the monomial `F = f^m (f^n)^(k)`
//!   and its per-point zero/pole order laws, plus a seeded fuzz harness for
//!   the "two distinct zeros" property of `F − ω`;
//! * a numeric half — circle-average proximity functions, counting
//!   functions, Nevanlinna characteristics on a small transcendental
//!   catalog, polynomial root finding, spherical-derivative scans and
//!   rescaling checks used in normality experiments.
//!
//! Exact results are exact: no tolerance appears anywhere in the algebraic
//! modules. Numeric results carry explicit tolerances and the report types
//! keep the raw tables so asymptotic claims stay auditable.

pub mod factored;
pub mod fuzz;
pub mod gaussian;
pub mod monomial;
pub mod poly;
pub mod ratfun;
pub mod squarefree;
pub mod valuedist;
// numeric half
pub mod normality;
pub mod numeric;

pub use factored::FactoredRational;
pub use gaussian::GaussianRational;
pub use monomial::MonomialSpec;
pub use poly::Polynomial;
pub use ratfun::RationalFunction;
pub use squarefree::SquarefreeDecomposition;

/// Version tag stamped on every JSON artifact the tools emit.
pub const SCHEMA: &str = "nevlab/1";

/// Crate-wide error type.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("division by zero")]
    DivisionByZero,
    #[error("operation undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("operation undefined for the zero function")]
    ZeroFunction,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("expected a polynomial, got a function with poles")]
    NotAPolynomial,
    #[error("function is identically equal to the target")]
    IdenticallyEqual,
    #[error("index {0} out of range")]
    IndexOutOfRange(usize),
    #[error("invalid input: {0}")]
    Invalid(String),
    #[error("random generation exhausted {0} retries")]
    GenerationExhausted(usize),
    #[error("quadrature panel budget exhausted (used {0})")]
    PanelBudget(usize),
    #[error("integrand is singular on the integration circle")]
    SingularOnCircle,
    #[error("root finder failed to converge within the iteration budget")]
    NonConvergence,
    #[error("root finder could not certify the requested tolerance: {0}")]
    Uncertified(String),
    #[error("numeric failure: {0}")]
    Numeric(String),
}

pub type Result<T> = std::result::Result<T, Error>;
