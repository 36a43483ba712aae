//! The differential monomial `F = f^m (f^n)^(k)` and its structural laws.
//!
//! Everything here is exact: the zero/pole order laws, the extraction of
//! the structural polynomial multiplying the factored form of `(f^n)^(k)`,
//! and the rescaling identity are all checked as integer or field
//! equalities with no tolerances.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::Serialize;

use crate::factored::FactoredRational;
use crate::gaussian::GaussianRational;
use crate::poly::Polynomial;
use crate::ratfun::RationalFunction;
use crate::{Error, Result};

/// The exponent triple (m, n, k). The regime most statements live in is
/// n ≥ k + 1; construction enforces it unless explicitly lifted.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MonomialSpec {
    pub m: u32,
    pub n: u32,
    pub k: u32,
}

impl MonomialSpec {
    pub fn new(m: u32, n: u32, k: u32) -> Result<Self> {
        let spec = Self::unrestricted(m, n, k)?;
        if n < k + 1 {
            return Err(Error::Invalid(format!(
                "monomial exponents require n ≥ k+1 (got n={n}, k={k})"
            )));
        }
        Ok(spec)
    }

    /// Only positivity is enforced; callers opting out of the n ≥ k+1
    /// bound own the out-of-regime behavior.
    pub fn unrestricted(m: u32, n: u32, k: u32) -> Result<Self> {
        if m == 0 || n == 0 || k == 0 {
            return Err(Error::Invalid(
                "monomial exponents must be positive".into(),
            ));
        }
        Ok(Self { m, n, k })
    }

    pub fn in_paper_regime(&self) -> bool {
        self.n >= self.k + 1
    }

    /// Homogeneity degree m + n.
    pub fn total_degree(&self) -> u32 {
        self.m + self.n
    }
}

/// F = f^m · (f^n)^(k), exact. Errors on the zero function.
pub fn build_monomial(f: &RationalFunction, spec: &MonomialSpec) -> Result<RationalFunction> {
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let fm = f.pow(spec.m);
    let dk = f.pow(spec.n).kth_derivative(spec.k);
    Ok(&fm * &dk)
}

/// Report for the structural factorization of (f^n)^(k): the cofactor left
/// after dividing out the predicted zero/pole powers, together with its
/// degree bound k(s+t−1) and the falling-factorial prediction for the top
/// coefficient.
#[derive(Clone, Debug, Serialize)]
pub struct GkReport {
    pub gk: Polynomial,
    pub degree_bound: i64,
    pub leading_prediction: GaussianRational,
    pub bound_met: bool,
    /// `None` when the prediction vanishes (then only the bound applies).
    pub leading_matches: Option<bool>,
}

/// Factor (f^n)^(k) as A^n · ∏(z−α_i)^{n·m_i−k} / ∏(z−β_h)^{n·l_h+k} · g_k
/// and return g_k. Exponents n·m_i − k < 0 simply move the factor across
/// the fraction bar; the cofactor is a polynomial in every regime.
pub fn extract_gk(f: &FactoredRational, n: u32, k: u32) -> Result<GkReport> {
    if n == 0 || k == 0 {
        return Err(Error::Invalid("n and k must be positive".into()));
    }
    let derived = f.pow(n).expand().kth_derivative(k);

    // Assemble the structural part A^n · ∏(z−α)^{nm−k} / ∏(z−β)^{nl+k}.
    let mut num = Polynomial::constant(f.constant().pow(n));
    let mut den = Polynomial::one();
    for (root, mult) in f.zeros() {
        let e = *mult as i64 * n as i64 - k as i64;
        let factor = Polynomial::linear_from_root(root);
        if e >= 0 {
            num = &num * &factor.pow(e as u32);
        } else {
            den = &den * &factor.pow((-e) as u32);
        }
    }
    for (root, mult) in f.poles() {
        let e = *mult as u32 * n + k;
        den = &den * &Polynomial::linear_from_root(root).pow(e);
    }
    let structural = RationalFunction::new(num, den)?;

    let cofactor = if derived.is_zero() {
        RationalFunction::zero()
    } else {
        derived.div(&structural)?
    };
    if !cofactor.is_polynomial() {
        return Err(Error::Invalid(
            "structural cofactor of (f^n)^(k) is not a polynomial".into(),
        ));
    }
    let gk = cofactor.num().clone();

    let s = f.zero_sites() as i64;
    let t = f.pole_sites() as i64;
    let degree_bound = k as i64 * (s + t - 1);
    let drop = BigInt::from(n) * (BigInt::from(f.total_zero_multiplicity()) - BigInt::from(f.total_pole_multiplicity()));
    let mut prediction = BigRational::from_integer(BigInt::from(1));
    for j in 0..k as i64 {
        prediction *= BigRational::from_integer(&drop - BigInt::from(j));
    }
    let leading_prediction = GaussianRational::from_rational(prediction);

    let bound_met = match gk.degree() {
        None => true,
        Some(d) => d as i64 <= degree_bound,
    };
    let leading_matches = if leading_prediction.is_zero() {
        None
    } else {
        let exact_top = gk.degree().map_or(false, |d| d as i64 == degree_bound);
        let lead_ok = gk.leading() == Some(&leading_prediction);
        Some(exact_top && lead_ok)
    };

    Ok(GkReport {
        gk,
        degree_bound,
        leading_prediction,
        bound_met,
        leading_matches,
    })
}

/// Outcome of checking one per-point order law.
#[derive(Clone, Debug, Serialize)]
pub struct OrderLawReport {
    pub site: GaussianRational,
    pub multiplicity: u32,
    pub predicted: i64,
    pub actual: i64,
    /// For zeros: p·n > k, where the law is an exact equality. Pole laws
    /// are always in regime.
    pub in_regime: bool,
    pub holds: bool,
}

/// Order of F at the `which`-th zero site of f against the prediction
/// p(m+n) − k, exact whenever p·n > k.
pub fn zero_order_law(
    f: &FactoredRational,
    spec: &MonomialSpec,
    which: usize,
) -> Result<OrderLawReport> {
    let (site, p) = f
        .zeros()
        .get(which)
        .cloned()
        .ok_or(Error::IndexOutOfRange(which))?;
    let monomial = build_monomial(&f.expand(), spec)?;
    let actual = monomial.order_at(&site)?;
    let predicted = p as i64 * spec.total_degree() as i64 - spec.k as i64;
    let in_regime = p as u64 * spec.n as u64 > spec.k as u64;
    Ok(OrderLawReport {
        site,
        multiplicity: p,
        predicted,
        actual,
        in_regime,
        holds: in_regime && actual == predicted,
    })
}

/// Pole order of F at the `which`-th pole site of f against p(m+n) + k;
/// `holds` additionally demands the 2k+2 lower bound when n ≥ k+1.
pub fn pole_order_law(
    f: &FactoredRational,
    spec: &MonomialSpec,
    which: usize,
) -> Result<OrderLawReport> {
    let (site, p) = f
        .poles()
        .get(which)
        .cloned()
        .ok_or(Error::IndexOutOfRange(which))?;
    let monomial = build_monomial(&f.expand(), spec)?;
    let actual = -monomial.order_at(&site)?;
    let predicted = p as i64 * spec.total_degree() as i64 + spec.k as i64;
    let floor_ok = !spec.in_paper_regime() || actual >= 2 * spec.k as i64 + 2;
    Ok(OrderLawReport {
        site,
        multiplicity: p,
        predicted,
        actual,
        in_regime: true,
        holds: actual == predicted && floor_ok,
    })
}

/// One zero site of f in the excess report: how far ord_F − 1 clears the
/// threshold (k+2 for multiplicities ≤ k, k(k+1)+1 above).
#[derive(Clone, Debug, Serialize)]
pub struct ExcessEntry {
    pub site: GaussianRational,
    pub multiplicity: u32,
    pub order_in_monomial: i64,
    pub excess: i64,
    pub required: i64,
    pub margin: i64,
    pub satisfied: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExcessReport {
    pub entries: Vec<ExcessEntry>,
    pub all_satisfied: bool,
}

/// Per-point version of the multiple-zero excess inequality: at every zero
/// of f, compare ord_F − 1 against the threshold for its multiplicity
/// class. Margins are reported rather than asserted — small exponent
/// choices genuinely miss the p ≤ k threshold and the table shows where.
pub fn excess_law_check(f: &FactoredRational, spec: &MonomialSpec) -> Result<ExcessReport> {
    if !spec.in_paper_regime() {
        return Err(Error::Invalid("excess law requires n ≥ k+1".into()));
    }
    let monomial = build_monomial(&f.expand(), spec)?;
    let k = spec.k as i64;
    let mut entries = Vec::new();
    for (site, p) in f.zeros() {
        let ord = monomial.order_at(site)?;
        let required = if *p as i64 <= k { k + 2 } else { k * (k + 1) + 1 };
        let excess = ord - 1;
        entries.push(ExcessEntry {
            site: site.clone(),
            multiplicity: *p,
            order_in_monomial: ord,
            excess,
            required,
            margin: excess - required,
            satisfied: excess >= required,
        });
    }
    let all_satisfied = entries.iter().all(|e| e.satisfied);
    Ok(ExcessReport {
        entries,
        all_satisfied,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct RescaleIdentityReport {
    pub lhs: RationalFunction,
    pub rhs: RationalFunction,
    pub equal: bool,
}

/// Exact rescaling identity: with ρ = t^{m+n} and g(z) = t^{−k} f(z₀+ρz),
/// the monomial of g equals the monomial of f precomposed with z₀+ρz.
/// Taking ρ a perfect (m+n)-th power keeps ρ^{−k/(m+n)} = t^{−k} rational,
/// so both sides live in Q(i) and equality is canonical.
pub fn rescale_monomial_identity(
    f: &RationalFunction,
    spec: &MonomialSpec,
    z0: &GaussianRational,
    t: &BigRational,
) -> Result<RescaleIdentityReport> {
    if t.is_zero() || t.is_negative() {
        return Err(Error::Invalid("rescale parameter t must be positive".into()));
    }
    if f.is_zero() {
        return Err(Error::ZeroFunction);
    }
    let mut rho = BigRational::from_integer(BigInt::from(1));
    for _ in 0..spec.total_degree() {
        rho *= t;
    }
    let rho = GaussianRational::from_rational(rho);
    let scale = GaussianRational::from_rational(
        BigRational::from_integer(BigInt::from(1)) / t,
    )
    .pow(spec.k);

    let g = f.compose_linear(z0, &rho)?.scale(&scale);
    let lhs = build_monomial(&g, spec)?;
    let rhs = build_monomial(f, spec)?.compose_linear(z0, &rho)?;
    let equal = lhs == rhs;
    Ok(RescaleIdentityReport { lhs, rhs, equal })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(n: i64) -> GaussianRational {
        GaussianRational::from_integer(n)
    }

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::new(coeffs.iter().map(|&n| c(n)).collect())
    }

    fn rf(num: &[i64], den: &[i64]) -> RationalFunction {
        RationalFunction::new(p(num), p(den)).unwrap()
    }

    fn spec(m: u32, n: u32, k: u32) -> MonomialSpec {
        MonomialSpec::new(m, n, k).unwrap()
    }

    #[test]
    fn spec_enforces_regime() {
        assert!(MonomialSpec::new(1, 1, 1).is_err());
        assert!(MonomialSpec::unrestricted(1, 1, 1).is_ok());
        assert!(MonomialSpec::new(1, 2, 1).is_ok());
        assert!(MonomialSpec::new(0, 2, 1).is_err());
    }

    #[test]
    fn monomial_of_identity() {
        // f = z, (1,2,1): F = z·(z²)' = 2z²
        let f = RationalFunction::var();
        assert_eq!(build_monomial(&f, &spec(1, 2, 1)).unwrap(), rf(&[0, 0, 2], &[1]));
    }

    #[test]
    fn monomial_of_reciprocal() {
        // f = 1/z, (1,2,1): (1/z)·(z⁻²)' = −2/z⁴; cross-check against the
        // step-by-step derivative route.
        let f = rf(&[1], &[0, 1]);
        let monomial = build_monomial(&f, &spec(1, 2, 1)).unwrap();
        assert_eq!(monomial, rf(&[-2], &[0, 0, 0, 0, 1]));
        let by_hand = &f * &(&f * &f).derivative();
        assert_eq!(monomial, by_hand);
    }

    #[test]
    fn monomial_rejects_zero() {
        assert!(build_monomial(&RationalFunction::zero(), &spec(1, 2, 1)).is_err());
    }

    #[test]
    fn monomial_degree_law() {
        // deg F = d(m+n) − k for polynomial f with dn > k
        for (m, n, k) in [(1, 2, 1), (2, 3, 2), (1, 4, 3)] {
            let f = rf(&[-3, 0, 1, 2], &[1]); // degree 3
            let s = spec(m, n, k);
            let monomial = build_monomial(&f, &s).unwrap();
            assert_eq!(
                monomial.num().degree().unwrap() as i64,
                3 * (m + n) as i64 - k as i64
            );
        }
    }

    #[test]
    fn gk_of_square() {
        // f = z², n = 2, k = 1: (z⁴)' = 4z³, g₁ = 4, bound 0, prediction 4.
        let f = FactoredRational::new(c(1), vec![(c(0), 2)], vec![]).unwrap();
        let report = extract_gk(&f, 2, 1).unwrap();
        assert_eq!(report.gk, p(&[4]));
        assert_eq!(report.degree_bound, 0);
        assert_eq!(report.leading_prediction, c(4));
        assert!(report.bound_met);
        assert_eq!(report.leading_matches, Some(true));
    }

    #[test]
    fn gk_of_linear() {
        let f = FactoredRational::new(c(1), vec![(c(0), 1)], vec![]).unwrap();
        let report = extract_gk(&f, 2, 1).unwrap();
        assert_eq!(report.gk, p(&[2]));
        assert_eq!(report.leading_prediction, c(2));
        assert_eq!(report.leading_matches, Some(true));
    }

    #[test]
    fn gk_of_reciprocal() {
        // f = 1/z, n=2, k=1: (z⁻²)' = −2 z⁻³ = z^{−(2+1)}·(−2)
        let f = FactoredRational::new(c(1), vec![], vec![(c(0), 1)]).unwrap();
        let report = extract_gk(&f, 2, 1).unwrap();
        assert_eq!(report.gk, p(&[-2]));
        assert_eq!(report.degree_bound, 0);
        assert_eq!(report.leading_prediction, c(-2));
        assert_eq!(report.leading_matches, Some(true));
    }

    #[test]
    fn gk_low_multiplicity_regime() {
        // n·m − k < 0: f = z with n = 1, k = 2 → (z)'' = 0, cofactor 0.
        let f = FactoredRational::new(c(1), vec![(c(0), 1)], vec![]).unwrap();
        let report = extract_gk(&f, 1, 2).unwrap();
        assert!(report.gk.is_zero());
        assert!(report.bound_met);
        // f = z(z−1), n = 1, k = 2: f'' = 2 = z⁻¹(z−1)⁻¹ · 2z(z−1)
        let g = FactoredRational::new(c(1), vec![(c(0), 1), (c(1), 1)], vec![]).unwrap();
        let report = extract_gk(&g, 1, 2).unwrap();
        assert_eq!(report.gk, p(&[0, -2, 2])); // 2z(z−1) = 2z² − 2z
        assert_eq!(report.degree_bound, 2);
        assert_eq!(report.leading_prediction, c(2)); // 2·1
        assert_eq!(report.leading_matches, Some(true));
    }

    #[test]
    fn gk_reassembles_exactly() {
        let f = FactoredRational::new(
            GaussianRational::from_parts(1, 2, 1, 1),
            vec![(c(2), 2), (GaussianRational::i(), 1)],
            vec![(c(-1), 1)],
        )
        .unwrap();
        let (n, k) = (3, 2);
        let report = extract_gk(&f, n, k).unwrap();
        // Rebuild A^n ∏(z−α)^{nm−k}/∏(z−β)^{nl+k} · g_k and compare.
        let mut num = Polynomial::constant(f.constant().pow(n));
        let mut den = Polynomial::one();
        for (root, mult) in f.zeros() {
            let e = (*mult * n) as i64 - k as i64;
            if e >= 0 {
                num = &num * &Polynomial::linear_from_root(root).pow(e as u32);
            } else {
                den = &den * &Polynomial::linear_from_root(root).pow((-e) as u32);
            }
        }
        for (root, mult) in f.poles() {
            den = &den * &Polynomial::linear_from_root(root).pow(mult * n + k);
        }
        let rebuilt = &RationalFunction::new(num, den).unwrap()
            * &RationalFunction::from_polynomial(report.gk.clone());
        let direct = f.pow(n).expand().kth_derivative(k);
        assert_eq!(rebuilt, direct);
    }

    #[test]
    fn zero_law_simple() {
        // f = z, (1,2,1): F = 2z², predicted 1·3−1 = 2
        let f = FactoredRational::new(c(1), vec![(c(0), 1)], vec![]).unwrap();
        let r = zero_order_law(&f, &spec(1, 2, 1), 0).unwrap();
        assert_eq!((r.predicted, r.actual), (2, 2));
        assert!(r.holds && r.in_regime);
    }

    #[test]
    fn zero_law_double_zero() {
        // f = z², (1,2,1): F = z²·4z³ = 4z⁵, predicted 2·3−1 = 5
        let f = FactoredRational::new(c(1), vec![(c(0), 2)], vec![]).unwrap();
        let r = zero_order_law(&f, &spec(1, 2, 1), 0).unwrap();
        assert_eq!((r.predicted, r.actual), (5, 5));
        assert!(r.holds);
    }

    #[test]
    fn zero_law_out_of_regime_flagged() {
        // p·n ≤ k with the bound lifted: flagged, not asserted.
        let f = FactoredRational::new(c(1), vec![(c(0), 1)], vec![]).unwrap();
        let s = MonomialSpec::unrestricted(1, 1, 1).unwrap();
        let r = zero_order_law(&f, &s, 0).unwrap();
        assert!(!r.in_regime);
        assert!(!r.holds);
    }

    #[test]
    fn zero_law_index_error() {
        let f = FactoredRational::new(c(1), vec![(c(0), 1)], vec![]).unwrap();
        assert!(zero_order_law(&f, &spec(1, 2, 1), 3).is_err());
    }

    #[test]
    fn pole_law_simple() {
        // f = 1/z, (1,2,1): F = −2/z⁴, predicted 1·3+1 = 4 ≥ 2k+2 = 4
        let f = FactoredRational::new(c(1), vec![], vec![(c(0), 1)]).unwrap();
        let r = pole_order_law(&f, &spec(1, 2, 1), 0).unwrap();
        assert_eq!((r.predicted, r.actual), (4, 4));
        assert!(r.holds);
    }

    #[test]
    fn pole_law_double_pole() {
        // f = 1/(z−1)², (1,2,1): predicted 2·3+1 = 7
        let f = FactoredRational::new(c(1), vec![], vec![(c(1), 2)]).unwrap();
        let r = pole_order_law(&f, &spec(1, 2, 1), 0).unwrap();
        assert_eq!((r.predicted, r.actual), (7, 7));
        assert!(r.holds);
    }

    #[test]
    fn pole_law_without_poles_errors() {
        let f = FactoredRational::new(c(1), vec![(c(0), 1)], vec![]).unwrap();
        assert!(pole_order_law(&f, &spec(1, 2, 1), 0).is_err());
    }

    #[test]
    fn excess_margins_match_brute_force() {
        // Enumerate small (p, m, n, k) and confirm the reported excess is
        // exactly p(m+n) − k − 1, and where it clears the thresholds.
        for k in 1..=2u32 {
            for m in 1..=3u32 {
                for n in (k + 1)..=(k + 3) {
                    for p in 1..=(k + 2) {
                        let f =
                            FactoredRational::new(c(1), vec![(c(0), p)], vec![]).unwrap();
                        let s = spec(m, n, k);
                        let report = excess_law_check(&f, &s).unwrap();
                        let e = &report.entries[0];
                        let expected_ord =
                            p as i64 * (m + n) as i64 - k as i64;
                        assert_eq!(e.order_in_monomial, expected_ord);
                        let required = if p <= k {
                            k as i64 + 2
                        } else {
                            (k * (k + 1)) as i64 + 1
                        };
                        assert_eq!(e.satisfied, expected_ord - 1 >= required);
                    }
                }
            }
        }
    }

    #[test]
    fn excess_examples_from_small_specs() {
        let f = FactoredRational::new(c(1), vec![(c(0), 1)], vec![]).unwrap();
        // (1,2,1): ord_F = 2, excess 1 < 3 → miss
        assert!(!excess_law_check(&f, &spec(1, 2, 1)).unwrap().all_satisfied);
        // (2,2,1): ord_F = 3, excess 2 < 3 → miss
        assert!(!excess_law_check(&f, &spec(2, 2, 1)).unwrap().all_satisfied);
        // (2,3,1): ord_F = 4, excess 3 ≥ 3 → holds
        assert!(excess_law_check(&f, &spec(2, 3, 1)).unwrap().all_satisfied);
    }

    #[test]
    fn excess_vacuous_without_zeros() {
        let f = FactoredRational::new(c(1), vec![], vec![(c(0), 1)]).unwrap();
        let report = excess_law_check(&f, &spec(1, 2, 1)).unwrap();
        assert!(report.entries.is_empty() && report.all_satisfied);
    }

    #[test]
    fn rescale_identity_trivial() {
        let f = RationalFunction::var();
        let one = BigRational::from_integer(BigInt::from(1));
        let r = rescale_monomial_identity(&f, &spec(1, 2, 1), &c(0), &one).unwrap();
        assert!(r.equal);
        assert_eq!(r.lhs, rf(&[0, 0, 2], &[1]));
    }

    #[test]
    fn rescale_identity_halving() {
        let f = RationalFunction::var();
        let half = BigRational::new(BigInt::from(1), BigInt::from(2));
        let r = rescale_monomial_identity(&f, &spec(1, 2, 1), &c(0), &half).unwrap();
        assert!(r.equal);
    }

    #[test]
    fn rescale_identity_with_poles_and_shift() {
        let f = RationalFunction::new(p(&[1]), p(&[0, 1])).unwrap();
        let third = BigRational::new(BigInt::from(1), BigInt::from(3));
        let r = rescale_monomial_identity(&f, &spec(1, 2, 1), &c(1), &third).unwrap();
        assert!(r.equal);
    }

    #[test]
    fn rescale_rejects_nonpositive_t() {
        let f = RationalFunction::var();
        assert!(rescale_monomial_identity(
            &f,
            &spec(1, 2, 1),
            &c(0),
            &BigRational::zero()
        )
        .is_err());
        assert!(rescale_monomial_identity(
            &f,
            &spec(1, 2, 1),
            &c(0),
            &BigRational::from_integer(BigInt::from(-2))
        )
        .is_err());
    }
}
