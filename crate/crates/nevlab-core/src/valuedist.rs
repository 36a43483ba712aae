//! Exact value-distribution checks: distinct-zero counting for the
//! monomial difference F − ω, the partial-sharing subset test, and the
//! multiple-zero observation for polynomial inputs.

use serde::Serialize;

use crate::factored::FactoredRational;
use crate::gaussian::GaussianRational;
use crate::monomial::{build_monomial, MonomialSpec};
use crate::poly::Polynomial;
use crate::ratfun::RationalFunction;
use crate::squarefree::{squarefree_decompose, SquarefreeDecomposition};
use crate::{Error, Result};

/// The value shared or subtracted: a constant or a rational function
/// (small targets in the function case).
#[derive(Clone, Debug, PartialEq)]
pub enum ShareTarget {
    Constant(GaussianRational),
    Function(RationalFunction),
}

impl ShareTarget {
    pub fn as_function(&self) -> RationalFunction {
        match self {
            ShareTarget::Constant(c) => RationalFunction::constant(c.clone()),
            ShareTarget::Function(f) => f.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            ShareTarget::Constant(c) => c.is_zero(),
            ShareTarget::Function(f) => f.is_zero(),
        }
    }
}

impl From<GaussianRational> for ShareTarget {
    fn from(c: GaussianRational) -> Self {
        ShareTarget::Constant(c)
    }
}

/// Distinct finite zeros of F − ω: the degree sum of the squarefree parts
/// of the reduced numerator. Zeros cancelled against the denominator are
/// gone after reduction, and a zero at infinity is never counted.
pub fn distinct_zero_count(
    monomial: &RationalFunction,
    target: &ShareTarget,
) -> Result<(usize, SquarefreeDecomposition)> {
    let diff = monomial - &target.as_function();
    if diff.is_zero() {
        return Err(Error::IdenticallyEqual);
    }
    let decomposition = squarefree_decompose(diff.num())?;
    Ok((decomposition.distinct_root_count(), decomposition))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    Holds,
    Violated,
    PreconditionUnmet,
}

/// Full record of one two-distinct-zeros check.
#[derive(Clone, Debug, Serialize)]
pub struct Theorem2Report {
    pub verdict: Verdict,
    /// Which precondition failed, when `verdict` is `PreconditionUnmet`.
    pub failed_clause: Option<String>,
    pub distinct_zero_count: usize,
    pub monomial: Option<RationalFunction>,
    pub numerator_of_difference: Option<Polynomial>,
    pub witness: Option<SquarefreeDecomposition>,
}

impl Theorem2Report {
    fn unmet(clause: &str) -> Self {
        Self {
            verdict: Verdict::PreconditionUnmet,
            failed_clause: Some(clause.to_string()),
            distinct_zero_count: 0,
            monomial: None,
            numerator_of_difference: None,
            witness: None,
        }
    }
}

/// Check that f^m(f^n)^(k) − ω has at least two distinct zeros for a
/// nonconstant rational f, nonzero constant ω and n ≥ k+1. Precondition
/// failures name the failed clause instead of erroring.
pub fn theorem2_verify(
    f: &RationalFunction,
    spec: &MonomialSpec,
    target: &ShareTarget,
) -> Theorem2Report {
    let omega = match target {
        ShareTarget::Constant(c) => c,
        ShareTarget::Function(_) => return Theorem2Report::unmet("omega must be a constant"),
    };
    if omega.is_zero() {
        return Theorem2Report::unmet("omega must be nonzero");
    }
    if f.is_zero() || f.is_constant() {
        return Theorem2Report::unmet("f must be nonconstant");
    }
    if !spec.in_paper_regime() {
        return Theorem2Report::unmet("n must be at least k+1");
    }
    let monomial = match build_monomial(f, spec) {
        Ok(m) => m,
        Err(_) => return Theorem2Report::unmet("monomial construction failed"),
    };
    let (count, decomposition) = match distinct_zero_count(&monomial, target) {
        Ok(pair) => pair,
        Err(_) => return Theorem2Report::unmet("monomial is identically omega"),
    };
    let diff = &monomial - &RationalFunction::constant(omega.clone());
    Theorem2Report {
        verdict: if count >= 2 {
            Verdict::Holds
        } else {
            Verdict::Violated
        },
        failed_clause: None,
        distinct_zero_count: count,
        numerator_of_difference: Some(diff.num().clone()),
        monomial: Some(monomial),
        witness: Some(decomposition),
    }
}

/// For a nonconstant polynomial f with n ≥ k+1, F itself has a multiple
/// zero: every irreducible factor of f survives in F with multiplicity at
/// least m+n−k ≥ 2.
pub fn polynomial_multiple_zero_check(
    f: &RationalFunction,
    spec: &MonomialSpec,
) -> Result<bool> {
    if !f.is_polynomial() {
        return Err(Error::NotAPolynomial);
    }
    if f.is_constant() {
        return Err(Error::Invalid("f must be a nonconstant polynomial".into()));
    }
    if !spec.in_paper_regime() {
        return Err(Error::Invalid("requires n ≥ k+1".into()));
    }
    let monomial = build_monomial(f, spec)?;
    let decomposition = squarefree_decompose(monomial.num())?;
    Ok(decomposition.max_multiplicity() >= 2)
}

#[derive(Clone, Debug, Serialize)]
pub struct ShareCheck {
    pub subset: bool,
    /// On failure, a monic squarefree polynomial whose roots are zeros of
    /// f − ω but not of g − ω.
    pub witness: Option<Polynomial>,
}

/// Partial sharing Ē(ω,f) ⊆ Ē(ω,g): the radical of the reduced numerator
/// of f − ω must divide the reduced numerator of g − ω. Multiplicities are
/// ignored on both sides by construction.
pub fn partial_share_check(
    f: &RationalFunction,
    g: &RationalFunction,
    target: &ShareTarget,
) -> Result<ShareCheck> {
    let omega = target.as_function();
    let fd = f - &omega;
    let gd = g - &omega;
    if fd.is_zero() || gd.is_zero() {
        return Err(Error::IdenticallyEqual);
    }
    let radical = squarefree_decompose(fd.num())?.radical();
    if radical.is_constant() {
        return Ok(ShareCheck {
            subset: true,
            witness: None,
        });
    }
    if radical.divides(gd.num()) {
        return Ok(ShareCheck {
            subset: true,
            witness: None,
        });
    }
    let shared = radical.gcd(gd.num())?;
    let witness = radical.exact_div(&shared)?;
    Ok(ShareCheck {
        subset: false,
        witness: Some(witness),
    })
}

/// Convenience: run `theorem2_verify` straight from factored data.
pub fn theorem2_verify_factored(
    f: &FactoredRational,
    spec: &MonomialSpec,
    target: &ShareTarget,
) -> Theorem2Report {
    theorem2_verify(&f.expand(), spec, target)
}
