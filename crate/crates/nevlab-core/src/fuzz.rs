//! Seeded randomized search for counterexamples to the two-distinct-zeros
//! property of F − ω over factored rational functions.
//!
//! Case streams are deterministic: case `i` draws from a ChaCha stream
//! keyed by (seed, i), so runs are reproducible and cases can be evaluated
//! on any schedule (including in parallel) without changing the summary.
//! A violation — which would contradict the property under test — is
//! shrunk and then independently re-checked through the numeric root
//! finder before it is reported as confirmed.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::factored::FactoredRational;
use crate::gaussian::GaussianRational;
use crate::monomial::{build_monomial, MonomialSpec};
use crate::numeric::roots::distinct_roots_numeric;
use crate::ratfun::RationalFunction;
use crate::valuedist::{theorem2_verify_factored, ShareTarget, Verdict};
use crate::{Error, Result};

/// Hard cap on site counts; configs beyond it are rejected.
pub const MAX_SITES: usize = 8;
/// Retry budget for degenerate random draws within one case.
pub const RETRY_BUDGET: usize = 100;

#[derive(Clone, Debug, Serialize)]
pub struct FuzzConfig {
    pub case_count: usize,
    pub seed: u64,
    pub max_zero_sites: usize,
    pub max_pole_sites: usize,
    pub max_multiplicity: u32,
    /// Bound on |numerator| and denominator of every random rational.
    pub coefficient_height: u32,
    pub m_range: (u32, u32),
    pub k_range: (u32, u32),
    /// n = k + offset with offset drawn from this range (inclusive).
    pub n_offset_range: (u32, u32),
    /// Tolerance for the numeric confirmation of a suspected violation.
    pub cluster_tolerance: f64,
}

impl Default for FuzzConfig {
    fn default() -> Self {
        Self {
            case_count: 1000,
            seed: 1,
            max_zero_sites: 3,
            max_pole_sites: 3,
            max_multiplicity: 3,
            coefficient_height: 10,
            m_range: (1, 3),
            k_range: (1, 3),
            n_offset_range: (1, 3),
            cluster_tolerance: 1e-6,
        }
    }
}

impl FuzzConfig {
    pub fn validate(&self) -> Result<()> {
        if self.max_zero_sites > MAX_SITES || self.max_pole_sites > MAX_SITES {
            return Err(Error::Invalid(format!(
                "site bounds must not exceed {MAX_SITES}"
            )));
        }
        if self.max_zero_sites + self.max_pole_sites == 0 {
            return Err(Error::Invalid("at least one site kind must be allowed".into()));
        }
        if self.max_multiplicity == 0 || self.coefficient_height == 0 {
            return Err(Error::Invalid("bounds must be positive".into()));
        }
        for (lo, hi) in [self.m_range, self.k_range, self.n_offset_range] {
            if lo == 0 || hi < lo {
                return Err(Error::Invalid("exponent ranges must be nonempty and positive".into()));
            }
        }
        if !(self.cluster_tolerance > 0.0) {
            return Err(Error::Invalid("cluster tolerance must be positive".into()));
        }
        Ok(())
    }
}

/// A drawn case: factored input, exponents, target value.
#[derive(Clone, Debug, Serialize)]
pub struct FuzzCase {
    #[serde(flatten)]
    pub function: FactoredRational,
    pub m: u32,
    pub n: u32,
    pub k: u32,
    pub omega: GaussianRational,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConfirmedViolation {
    #[serde(flatten)]
    pub case: FuzzCase,
    pub distinct_zero_count_exact: usize,
    /// `None` when the numeric recount itself failed.
    pub distinct_zero_count_numeric: Option<usize>,
    /// True when the numeric recount agrees the case is a violation.
    pub confirmed: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct FuzzSummary {
    pub schema: &'static str,
    pub seed: u64,
    pub cases: usize,
    pub holds: usize,
    pub violated: usize,
    pub skipped: usize,
    pub violations: Vec<ConfirmedViolation>,
}

#[derive(Clone, Debug)]
pub enum CaseOutcome {
    Holds,
    Skipped,
    Violated(ConfirmedViolation),
}

fn random_rational(rng: &mut ChaCha8Rng, height: u32) -> num_rational::BigRational {
    let h = height as i64;
    let num = rng.gen_range(-h..=h);
    let den = rng.gen_range(1..=h);
    num_rational::BigRational::new(num.into(), den.into())
}

fn random_gaussian(rng: &mut ChaCha8Rng, height: u32) -> GaussianRational {
    GaussianRational::new(
        random_rational(rng, height),
        random_rational(rng, height),
    )
}

fn random_nonzero_gaussian(
    rng: &mut ChaCha8Rng,
    height: u32,
    retries: &mut usize,
) -> Result<GaussianRational> {
    loop {
        let g = random_gaussian(rng, height);
        if !g.is_zero() {
            return Ok(g);
        }
        bump(retries)?;
    }
}

fn bump(retries: &mut usize) -> Result<()> {
    *retries += 1;
    if *retries > RETRY_BUDGET {
        return Err(Error::GenerationExhausted(RETRY_BUDGET));
    }
    Ok(())
}

/// Draw the case for `index` from its dedicated stream.
pub fn generate_case(config: &FuzzConfig, index: u64) -> Result<FuzzCase> {
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    rng.set_stream(index.wrapping_add(1));
    let mut retries = 0usize;

    let m = rng.gen_range(config.m_range.0..=config.m_range.1);
    let k = rng.gen_range(config.k_range.0..=config.k_range.1);
    let n = k + rng.gen_range(config.n_offset_range.0..=config.n_offset_range.1);

    let (zeros, poles) = loop {
        let s = rng.gen_range(0..=config.max_zero_sites);
        let t = rng.gen_range(0..=config.max_pole_sites);
        if s + t == 0 {
            bump(&mut retries)?;
            continue;
        }
        let mut roots: Vec<GaussianRational> = Vec::with_capacity(s + t);
        let mut clashed = false;
        while roots.len() < s + t {
            let candidate = random_gaussian(&mut rng, config.coefficient_height);
            if roots.contains(&candidate) {
                if bump(&mut retries).is_err() {
                    clashed = true;
                    break;
                }
                continue;
            }
            roots.push(candidate);
        }
        if clashed {
            return Err(Error::GenerationExhausted(RETRY_BUDGET));
        }
        let mut sites = roots.into_iter().map(|r| {
            let mult = rng.gen_range(1..=config.max_multiplicity);
            (r, mult)
        });
        let zeros: Vec<_> = sites.by_ref().take(s).collect();
        let poles: Vec<_> = sites.collect();
        break (zeros, poles);
    };

    let constant = random_nonzero_gaussian(&mut rng, config.coefficient_height, &mut retries)?;
    let omega = random_nonzero_gaussian(&mut rng, config.coefficient_height, &mut retries)?;
    let function = FactoredRational::new(constant, zeros, poles)?;
    Ok(FuzzCase {
        function,
        m,
        n,
        k,
        omega,
    })
}

fn case_spec(case: &FuzzCase) -> MonomialSpec {
    MonomialSpec::new(case.m, case.n, case.k).expect("generated spec is in regime")
}

fn is_violation(case: &FuzzCase) -> bool {
    let report = theorem2_verify_factored(
        &case.function,
        &case_spec(case),
        &ShareTarget::Constant(case.omega.clone()),
    );
    report.verdict == Verdict::Violated
}

/// Shrink a violating case: first lower multiplicities, then drop sites,
/// then simplify coefficients, re-checking the violation at every step.
fn shrink_case(mut case: FuzzCase) -> FuzzCase {
    loop {
        let mut improved = false;
        for candidate in shrink_candidates(&case) {
            if candidate.function.validate().is_ok() && is_violation(&candidate) {
                case = candidate;
                improved = true;
                break;
            }
        }
        if !improved {
            return case;
        }
    }
}

fn shrink_candidates(case: &FuzzCase) -> Vec<FuzzCase> {
    let mut out = Vec::new();
    let zeros = case.function.zeros();
    let poles = case.function.poles();
    // lower one multiplicity
    for i in 0..zeros.len() {
        if zeros[i].1 >= 2 {
            let mut z = zeros.to_vec();
            z[i].1 -= 1;
            if let Ok(f) = FactoredRational::new(case.function.constant().clone(), z, poles.to_vec()) {
                out.push(FuzzCase { function: f, ..case.clone() });
            }
        }
    }
    for i in 0..poles.len() {
        if poles[i].1 >= 2 {
            let mut p = poles.to_vec();
            p[i].1 -= 1;
            if let Ok(f) = FactoredRational::new(case.function.constant().clone(), zeros.to_vec(), p) {
                out.push(FuzzCase { function: f, ..case.clone() });
            }
        }
    }
    // drop one site, keeping the function nonconstant
    if zeros.len() + poles.len() >= 2 {
        for i in 0..zeros.len() {
            let mut z = zeros.to_vec();
            z.remove(i);
            if let Ok(f) = FactoredRational::new(case.function.constant().clone(), z, poles.to_vec()) {
                out.push(FuzzCase { function: f, ..case.clone() });
            }
        }
        for i in 0..poles.len() {
            let mut p = poles.to_vec();
            p.remove(i);
            if let Ok(f) = FactoredRational::new(case.function.constant().clone(), zeros.to_vec(), p) {
                out.push(FuzzCase { function: f, ..case.clone() });
            }
        }
    }
    // simplify the leading constant and the target
    if !case.function.constant().is_one() {
        if let Ok(f) = FactoredRational::new(
            GaussianRational::one(),
            zeros.to_vec(),
            poles.to_vec(),
        ) {
            out.push(FuzzCase { function: f, ..case.clone() });
        }
    }
    if !case.omega.is_one() {
        out.push(FuzzCase {
            omega: GaussianRational::one(),
            ..case.clone()
        });
    }
    out
}

/// Independent numeric recount of the distinct zeros of F − ω.
fn numeric_distinct_count(case: &FuzzCase, tolerance: f64) -> Result<usize> {
    let monomial = build_monomial(&case.function.expand(), &case_spec(case))?;
    let diff = &monomial - &RationalFunction::constant(case.omega.clone());
    distinct_roots_numeric(diff.num(), tolerance)
}

/// Evaluate one case. Pure in (config, index).
pub fn run_case(config: &FuzzConfig, index: u64) -> Result<CaseOutcome> {
    let case = generate_case(config, index)?;
    let report = theorem2_verify_factored(
        &case.function,
        &case_spec(&case),
        &ShareTarget::Constant(case.omega.clone()),
    );
    match report.verdict {
        Verdict::Holds => Ok(CaseOutcome::Holds),
        Verdict::PreconditionUnmet => Ok(CaseOutcome::Skipped),
        Verdict::Violated => {
            let shrunk = shrink_case(case);
            let exact = theorem2_verify_factored(
                &shrunk.function,
                &case_spec(&shrunk),
                &ShareTarget::Constant(shrunk.omega.clone()),
            )
            .distinct_zero_count;
            let numeric = numeric_distinct_count(&shrunk, config.cluster_tolerance).ok();
            Ok(CaseOutcome::Violated(ConfirmedViolation {
                confirmed: numeric.map_or(false, |n| n <= 1),
                case: shrunk,
                distinct_zero_count_exact: exact,
                distinct_zero_count_numeric: numeric,
            }))
        }
    }
}

/// Fold per-case outcomes (in index order) into the summary.
pub fn summarize(config: &FuzzConfig, outcomes: Vec<CaseOutcome>) -> FuzzSummary {
    let mut summary = FuzzSummary {
        schema: crate::SCHEMA,
        seed: config.seed,
        cases: outcomes.len(),
        holds: 0,
        violated: 0,
        skipped: 0,
        violations: Vec::new(),
    };
    for outcome in outcomes {
        match outcome {
            CaseOutcome::Holds => summary.holds += 1,
            CaseOutcome::Skipped => summary.skipped += 1,
            CaseOutcome::Violated(v) => {
                summary.violated += 1;
                summary.violations.push(v);
            }
        }
    }
    summary
}

/// Run the whole configured batch serially.
pub fn fuzz_theorem2(config: &FuzzConfig) -> Result<FuzzSummary> {
    config.validate()?;
    let outcomes = (0..config.case_count as u64)
        .map(|i| run_case(config, i))
        .collect::<Result<Vec<_>>>()?;
    Ok(summarize(config, outcomes))
}
