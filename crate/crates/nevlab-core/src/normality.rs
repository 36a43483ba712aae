//! Normality probes: spherical-derivative scans over parametrized
//! families (Marty's criterion is the computable proxy for normality),
//! the rescaling g(z) = ρ^{−α} f(z₀+ρz) with its exact-exponent identity
//! check, the bound scan for the derivative-part condition, and numeric
//! partial-sharing of zero sets.
//!
//! Normality itself is never decided here — it is an infinite statement.
//! The scans produce the finite evidence the classical arguments consume:
//! blow-up tables, rescaling residuals, zero matchings.

use num_complex::Complex64;
use serde::Serialize;

use crate::factored::FactoredRational;
use crate::monomial::MonomialSpec;
use crate::numeric::fun::{build_numeric_monomial, kth_derivative_of_power, NumericFun};
use crate::numeric::locate::locate_zeros;
use crate::numeric::roots::root_find;
use crate::numeric::{contour_kth_derivative, Rect, Region, Shift};
use crate::ratfun::RationalFunction;
use crate::valuedist::ShareTarget;
use crate::{Error, Result};

/// A one-parameter family of meromorphic functions. The two exponential
/// families are the classical non-normal shapes; the monomial family is
/// non-normal at the origin; rational templates scale a fixed zero/pole
/// pattern by the parameter.
#[derive(Clone, Debug)]
pub enum Family {
    /// f_j(z) = e^{jz}
    ExpScale,
    /// f_j(z) = j·z^{k−1}, k ≥ 2
    MonomialScale { k: u32 },
    /// f_j(z) = 1/(e^{jz} + 1)
    ReciprocalLogistic,
    /// f_j = expand(template) with the leading constant scaled by j.
    RationalTemplate(FactoredRational),
}

impl Family {
    pub fn member(&self, j: u32) -> Result<FamilyMember> {
        if j == 0 {
            return Err(Error::Invalid("family parameter must be positive".into()));
        }
        match self {
            Family::ExpScale => Ok(FamilyMember::ExpScale { j }),
            Family::MonomialScale { k } => {
                if *k < 2 {
                    return Err(Error::Invalid(
                        "monomial family needs k ≥ 2 to stay nonconstant".into(),
                    ));
                }
                Ok(FamilyMember::MonomialScale { j, k: *k })
            }
            Family::ReciprocalLogistic => Ok(FamilyMember::ReciprocalLogistic { j }),
            Family::RationalTemplate(template) => {
                if template.is_constant() {
                    return Err(Error::Invalid("template must be nonconstant".into()));
                }
                let scaled = FactoredRational::new(
                    &crate::gaussian::GaussianRational::from_integer(j as i64)
                        * template.constant(),
                    template.zeros().to_vec(),
                    template.poles().to_vec(),
                )?;
                let f = scaled.expand();
                let df = f.derivative();
                let finv = f.inverse()?;
                let dfinv = finv.derivative();
                Ok(FamilyMember::Rational {
                    f,
                    df,
                    finv,
                    dfinv,
                })
            }
        }
    }
}

#[derive(Clone, Debug)]
pub enum FamilyMember {
    ExpScale { j: u32 },
    MonomialScale { j: u32, k: u32 },
    ReciprocalLogistic { j: u32 },
    Rational {
        f: RationalFunction,
        df: RationalFunction,
        finv: RationalFunction,
        dfinv: RationalFunction,
    },
}

impl FamilyMember {
    pub fn eval(&self, z: Complex64) -> Complex64 {
        match self {
            FamilyMember::ExpScale { j } => (z * *j as f64).exp(),
            FamilyMember::MonomialScale { j, k } => z.powu(*k - 1) * *j as f64,
            FamilyMember::ReciprocalLogistic { j } => 1.0 / ((z * *j as f64).exp() + 1.0),
            FamilyMember::Rational { f, .. } => f.eval_complex(z),
        }
    }

    pub fn eval_derivative(&self, z: Complex64) -> Complex64 {
        match self {
            FamilyMember::ExpScale { j } => (z * *j as f64).exp() * *j as f64,
            FamilyMember::MonomialScale { j, k } => {
                if *k == 2 {
                    Complex64::new(*j as f64, 0.0)
                } else {
                    z.powu(*k - 2) * (*j as f64 * (*k - 1) as f64)
                }
            }
            FamilyMember::ReciprocalLogistic { j } => {
                let w = (z * *j as f64).exp();
                -w * *j as f64 / ((w + 1.0) * (w + 1.0))
            }
            FamilyMember::Rational { df, .. } => df.eval_complex(z),
        }
    }

    /// Spherical derivative |f′|/(1+|f|²), evaluated in whichever chart
    /// stays finite (poles go through 1/f).
    pub fn spherical_derivative(&self, z: Complex64) -> f64 {
        match self {
            FamilyMember::ExpScale { j } => {
                // |f′| = j·e^{jx}, 1+|f|² = 1+e^{2jx} → j/(2 cosh(jx))
                let jx = *j as f64 * z.re;
                *j as f64 / (2.0 * jx.cosh())
            }
            FamilyMember::MonomialScale { .. } => {
                spherical_from_pair(self.eval(z), self.eval_derivative(z))
            }
            FamilyMember::ReciprocalLogistic { j } => {
                // via the 1/f chart: (1/f)′ = j·e^{jz}, 1+|1/f|² = 1+|e^{jz}+1|²
                let w = (z * *j as f64).exp();
                let dw = w * *j as f64;
                spherical_from_pair(w + 1.0, dw)
            }
            FamilyMember::Rational {
                f,
                df,
                finv,
                dfinv,
            } => {
                let v = f.eval_complex(z);
                if v.is_finite() && v.norm() <= 1.0 {
                    spherical_from_pair(v, df.eval_complex(z))
                } else {
                    spherical_from_pair(finv.eval_complex(z), dfinv.eval_complex(z))
                }
            }
        }
    }
}

/// Two-chart spherical derivative from a (value, derivative) pair; the
/// caller is responsible for handing in the chart where both are finite.
pub fn spherical_from_pair(value: Complex64, derivative: Complex64) -> f64 {
    let a = derivative.norm();
    let b = value.norm();
    if b > 1.0 {
        // |f′|/(1+|f|²) = (|f′|/|f|)/(1/|f| + |f|), overflow-free
        (a / b) / (1.0 / b + b)
    } else {
        a / (1.0 + b * b)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct MartyScanRow {
    pub j: u32,
    pub sup_spherical_derivative: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct MartyScan {
    pub rows: Vec<MartyScanRow>,
}

impl MartyScan {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("j,sup_spherical_derivative\n");
        for row in &self.rows {
            out.push_str(&format!("{},{:.11e}\n", row.j, row.sup_spherical_derivative));
        }
        out
    }
}

/// Sup of the spherical derivative over an inclusive grid, per family
/// member. `grid_per_side` points per side, at least 16; odd counts hit
/// the center of a symmetric region, where the built-in families peak.
pub fn marty_scan(
    family: &Family,
    region: &Rect,
    grid_per_side: usize,
    j_range: (u32, u32),
) -> Result<MartyScan> {
    if grid_per_side < 16 {
        return Err(Error::Invalid("grid density must be at least 16 per side".into()));
    }
    if j_range.0 == 0 || j_range.1 < j_range.0 {
        return Err(Error::Invalid("empty parameter range".into()));
    }
    let mut rows = Vec::new();
    for j in j_range.0..=j_range.1 {
        let member = family.member(j)?;
        let mut sup = 0.0f64;
        for ix in 0..grid_per_side {
            let x = region.x0
                + (region.x1 - region.x0) * ix as f64 / (grid_per_side - 1) as f64;
            for iy in 0..grid_per_side {
                let y = region.y0
                    + (region.y1 - region.y0) * iy as f64 / (grid_per_side - 1) as f64;
                let value = member.spherical_derivative(Complex64::new(x, y));
                if value.is_finite() {
                    sup = sup.max(value);
                }
            }
        }
        rows.push(MartyScanRow {
            j,
            sup_spherical_derivative: sup,
        });
    }
    Ok(MartyScan { rows })
}

/// Parameters of the rescale g(z) = ρ^{−α} f(z₀ + ρz).
#[derive(Clone, Copy, Debug)]
pub struct RescaleSpec {
    pub z0: Complex64,
    pub rho: f64,
    pub alpha: f64,
}

impl RescaleSpec {
    pub fn new(z0: Complex64, rho: f64, alpha: f64) -> Result<Self> {
        if !(rho > 0.0) {
            return Err(Error::Invalid("rescale rho must be positive".into()));
        }
        Ok(Self { z0, rho, alpha })
    }

    /// The exponent the monomial identity needs: α = k/(m+n) < 1 ≤ k.
    pub fn for_monomial(z0: Complex64, rho: f64, spec: &MonomialSpec) -> Result<Self> {
        Self::new(z0, rho, spec.k as f64 / spec.total_degree() as f64)
    }
}

/// A rescaled evaluable: g(z) = ρ^{−α}·f(z₀ + ρz).
#[derive(Clone, Debug)]
pub struct Rescaled {
    pub inner: NumericFun,
    pub spec: RescaleSpec,
}

pub fn zalcman_rescale(f: NumericFun, spec: RescaleSpec) -> Rescaled {
    Rescaled { inner: f, spec }
}

impl Rescaled {
    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.inner.eval(self.spec.z0 + self.spec.rho * z) * self.spec.rho.powf(-self.spec.alpha)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct RescaleCheckRow {
    pub at: (f64, f64),
    pub lhs: (f64, f64),
    pub rhs: (f64, f64),
    pub relative_deviation: f64,
}

#[derive(Clone, Debug, Serialize)]
pub struct RescaleCheckReport {
    pub rows: Vec<RescaleCheckRow>,
    pub max_relative_deviation: f64,
    pub passed: bool,
}

/// Check g^m(g^n)^(k)(z) = F(z₀+ρz) numerically. The left side is built
/// honestly: g^n is sampled as a black box and differentiated k times by
/// a contour rule, so nothing about the exponent algebra is assumed. With
/// α = k/(m+n) the deviation is quadrature noise; any other α leaves the
/// mismatch factor ρ^{k−α(m+n)} and the check fails — that failure is the
/// negative control.
pub fn monomial_rescale_numeric_check(
    f: &NumericFun,
    spec: &MonomialSpec,
    rescale: &RescaleSpec,
    samples: &[Complex64],
    tol: f64,
) -> Result<RescaleCheckReport> {
    if samples.is_empty() {
        return Err(Error::Invalid("need at least one sample point".into()));
    }
    let monomial = build_numeric_monomial(f, spec)?;
    let g = zalcman_rescale(f.clone(), *rescale);
    let g_pow_n = |z: Complex64| g.eval(z).powu(spec.n);

    let mut rows = Vec::with_capacity(samples.len());
    let mut max_dev = 0.0f64;
    for &z in samples {
        let w = rescale.z0 + rescale.rho * z;
        let rhs = monomial.eval(w);
        let dk = contour_kth_derivative(g_pow_n, z, spec.k, 0.2, 48)?;
        let lhs = g.eval(z).powu(spec.m) * dk;
        let dev = (lhs - rhs).norm() / rhs.norm().max(1.0);
        max_dev = max_dev.max(dev);
        rows.push(RescaleCheckRow {
            at: (z.re, z.im),
            lhs: (lhs.re, lhs.im),
            rhs: (rhs.re, rhs.im),
            relative_deviation: dev,
        });
    }
    Ok(RescaleCheckReport {
        rows,
        max_relative_deviation: max_dev,
        passed: max_dev <= tol,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct BoundScanRow {
    pub re: f64,
    pub im: f64,
    pub derivative_magnitude: f64,
}

/// Scan of the derivative-part condition: at every zero of F − h in the
/// region, record |(f^n)^(k)|; the maximum is the smallest admissible
/// bound (0 when no zeros lie in the region).
#[derive(Clone, Debug, Serialize)]
pub struct BoundScanReport {
    pub zeros: Vec<BoundScanRow>,
    pub bound: f64,
    pub flagged_cells: usize,
}

impl BoundScanReport {
    pub fn to_csv(&self) -> String {
        let mut out = String::from("re,im,|monomial_deriv|\n");
        for row in &self.zeros {
            out.push_str(&format!(
                "{:.11e},{:.11e},{:.11e}\n",
                row.re, row.im, row.derivative_magnitude
            ));
        }
        out
    }
}

pub fn theorem4_bound_scan(
    f: &NumericFun,
    spec: &MonomialSpec,
    target: &ShareTarget,
    region: &Region,
    tol: f64,
) -> Result<BoundScanReport> {
    if target.is_zero() {
        return Err(Error::Invalid("target must not vanish identically".into()));
    }
    // No zeros and no poles at the origin, checked exactly, whenever the
    // origin is inside the region.
    if region.contains(Complex64::new(0.0, 0.0)) {
        if let ShareTarget::Function(h) = target {
            if h.order_at(&crate::gaussian::GaussianRational::zero())? != 0 {
                return Err(Error::Invalid(
                    "target must have neither zero nor pole at the origin".into(),
                ));
            }
        }
    }
    let monomial = build_numeric_monomial(f, spec)?;
    let derivative_part = kth_derivative_of_power(f, spec.n, spec.k)?;

    let mut flagged_cells = 0usize;
    let zeros: Vec<Complex64> = match (&monomial, target) {
        (NumericFun::Rational(mf), _) => {
            // Exact path: reduced numerator of F − h.
            let h = target.as_function();
            let diff = mf - &h;
            if diff.is_zero() {
                return Err(Error::IdenticallyEqual);
            }
            if diff.num().is_constant() {
                Vec::new()
            } else {
                root_find(diff.num(), 1e-6)?
                    .roots
                    .into_iter()
                    .map(|root| root.location)
                    .filter(|z| region.contains(*z))
                    .collect()
            }
        }
        _ => {
            // Catalog path: argument-principle subdivision with Newton
            // polish, poles passed in so the walk can dodge them.
            let h = target.as_function();
            let dh = h.derivative();
            let phi = |z: Complex64| monomial.eval(z) - h.eval_complex(z);
            let dmonomial = monomial.derivative();
            let dphi = |z: Complex64| dmonomial.eval(z) - dh.eval_complex(z);
            let rect = region.bounding_rect();
            let mut poles = monomial.poles_in_disk(rect.enclosing_radius() + 1.0)?;
            if !h.den().is_constant() {
                poles.extend(
                    root_find(h.den(), 1e-6)?
                        .roots
                        .into_iter()
                        .map(|root| (root.location, root.multiplicity)),
                );
            }
            let outcome = locate_zeros(&phi, &dphi, rect, &poles, tol.max(1e-9), 400_000)?;
            flagged_cells = outcome.flagged.len();
            outcome
                .zeros
                .into_iter()
                .map(|(z, _)| z)
                .filter(|z| region.contains(*z))
                .collect()
        }
    };

    let mut rows = Vec::with_capacity(zeros.len());
    let mut bound = 0.0f64;
    for z in zeros {
        let magnitude = derivative_part.eval(z).norm();
        bound = bound.max(magnitude);
        rows.push(BoundScanRow {
            re: z.re,
            im: z.im,
            derivative_magnitude: magnitude,
        });
    }
    Ok(BoundScanReport {
        zeros: rows,
        bound,
        flagged_cells,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct NumericShareReport {
    pub subset: bool,
    pub matched: usize,
    pub unmatched: Vec<(f64, f64)>,
}

/// Numeric partial sharing: every zero of f − ω in the region must lie
/// within `tol` of a zero of g − ω.
pub fn numeric_partial_share_check(
    f: &NumericFun,
    g: &NumericFun,
    omega: &Shift,
    region: &Region,
    tol: f64,
) -> Result<NumericShareReport> {
    let radius = region.enclosing_radius();
    let f_zeros: Vec<Complex64> = f
        .zeros_in_disk(omega, radius)?
        .into_iter()
        .map(|(z, _)| z)
        .filter(|z| region.contains(*z))
        .collect();
    let g_zeros: Vec<Complex64> = g
        .zeros_in_disk(omega, radius + tol)?
        .into_iter()
        .map(|(z, _)| z)
        .collect();
    let mut unmatched = Vec::new();
    let mut matched = 0usize;
    for z in f_zeros {
        if g_zeros.iter().any(|w| (w - z).norm() <= tol) {
            matched += 1;
        } else {
            unmatched.push((z.re, z.im));
        }
    }
    Ok(NumericShareReport {
        subset: unmatched.is_empty(),
        matched,
        unmatched,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::GaussianRational;
    use crate::poly::Polynomial;

    fn c(n: i64) -> GaussianRational {
        GaussianRational::from_integer(n)
    }

    fn p(coeffs: &[i64]) -> Polynomial {
        Polynomial::new(coeffs.iter().map(|&n| c(n)).collect())
    }

    #[test]
    fn spherical_derivative_of_identity() {
        // f = z: f#(z) = 1/(1+|z|²)
        let family = Family::MonomialScale { k: 2 };
        let member = family.member(1).unwrap();
        assert!((member.spherical_derivative(Complex64::new(0.0, 0.0)) - 1.0).abs() < 1e-12);
        let at2 = member.spherical_derivative(Complex64::new(2.0, 0.0));
        assert!((at2 - 0.2).abs() < 1e-12);
    }

    #[test]
    fn spherical_derivative_of_exp_scale_at_origin() {
        for j in [1u32, 5, 20] {
            let member = Family::ExpScale.member(j).unwrap();
            let v = member.spherical_derivative(Complex64::new(0.0, 0.7));
            assert!((v - j as f64 / 2.0).abs() < 1e-12);
        }
    }

    #[test]
    fn chart_consistency_where_both_charts_live() {
        let member = Family::ReciprocalLogistic.member(3).unwrap();
        for &(x, y) in &[(0.3, 0.2), (-0.4, 0.9), (0.1, -1.2)] {
            let z = Complex64::new(x, y);
            let direct = spherical_from_pair(member.eval(z), member.eval_derivative(z));
            let chart = member.spherical_derivative(z);
            assert!((direct - chart).abs() < 1e-9, "mismatch at {z}");
        }
    }

    #[test]
    fn marty_blowup_on_exp_scale() {
        let region = Rect::new(-1.0, 1.0, -1.0, 1.0).unwrap();
        let scan = marty_scan(&Family::ExpScale, &region, 17, (1, 20)).unwrap();
        for pair in scan.rows.windows(2) {
            assert!(pair[1].sup_spherical_derivative >= pair[0].sup_spherical_derivative);
        }
        let first = scan.rows.first().unwrap().sup_spherical_derivative;
        let last = scan.rows.last().unwrap().sup_spherical_derivative;
        assert!(last / first >= 10.0);
    }

    #[test]
    fn marty_on_rational_template_is_finite_near_poles() {
        let template = FactoredRational::new(c(1), vec![(c(1), 1)], vec![(c(0), 1)]).unwrap();
        let family = Family::RationalTemplate(template);
        let region = Rect::new(-1.0, 1.0, -1.0, 1.0).unwrap();
        let scan = marty_scan(&family, &region, 17, (1, 3)).unwrap();
        for row in &scan.rows {
            assert!(row.sup_spherical_derivative.is_finite());
            assert!(row.sup_spherical_derivative > 0.0);
        }
    }

    #[test]
    fn zalcman_rescale_collapses_exp_scale() {
        // f_j = e^{jz}, ρ = 1/j, α = 0: g_j = e^z for every j
        for j in [2u32, 7, 19] {
            let f = NumericFun::Exp {
                rate: Complex64::new(j as f64, 0.0),
            };
            let spec = RescaleSpec::new(Complex64::new(0.0, 0.0), 1.0 / j as f64, 0.0).unwrap();
            let g = zalcman_rescale(f, spec);
            for &(x, y) in &[(0.4, -0.3), (1.1, 0.8)] {
                let z = Complex64::new(x, y);
                assert!((g.eval(z) - z.exp()).norm() < 1e-12);
            }
        }
    }

    #[test]
    fn rescale_identity_passes_and_perturbed_alpha_fails() {
        let samples = [
            Complex64::new(0.3, 0.2),
            Complex64::new(-0.5, 0.6),
            Complex64::new(0.9, -0.4),
        ];
        let spec = MonomialSpec::new(1, 2, 1).unwrap();
        let f = NumericFun::Exp {
            rate: Complex64::new(1.0, 0.0),
        };
        let good = RescaleSpec::for_monomial(Complex64::new(0.0, 0.0), 0.1, &spec).unwrap();
        let report =
            monomial_rescale_numeric_check(&f, &spec, &good, &samples, 1e-8).unwrap();
        assert!(report.passed, "max dev {}", report.max_relative_deviation);

        let bad = RescaleSpec::new(good.z0, good.rho, good.alpha + 0.1).unwrap();
        let report = monomial_rescale_numeric_check(&f, &spec, &bad, &samples, 1e-8).unwrap();
        assert!(!report.passed);
        assert!(report.max_relative_deviation > 1e-7);
    }

    #[test]
    fn bound_scan_on_rational_example() {
        // f = z, (1,2,1), h = 2: zeros of 2z²−2 at ±1, |(f²)′(±1)| = 2
        let f = NumericFun::Rational(RationalFunction::var());
        let spec = MonomialSpec::new(1, 2, 1).unwrap();
        let region = Region::disk(Complex64::new(0.0, 0.0), 2.0).unwrap();
        let report = theorem4_bound_scan(
            &f,
            &spec,
            &ShareTarget::Constant(c(2)),
            &region,
            1e-6,
        )
        .unwrap();
        assert_eq!(report.zeros.len(), 2);
        assert!((report.bound - 2.0).abs() < 1e-9);
    }

    #[test]
    fn bound_scan_empty_region_gives_zero() {
        let f = NumericFun::Rational(RationalFunction::var());
        let spec = MonomialSpec::new(1, 2, 1).unwrap();
        // 2z² − 2 has zeros at ±1, outside this far-away region
        let region = Region::Rect(Rect::new(5.0, 6.0, 5.0, 6.0).unwrap());
        let report = theorem4_bound_scan(
            &f,
            &spec,
            &ShareTarget::Constant(c(2)),
            &region,
            1e-6,
        )
        .unwrap();
        assert!(report.zeros.is_empty());
        assert_eq!(report.bound, 0.0);
    }

    #[test]
    fn bound_scan_exp_catalog_path() {
        // f = e^z, (2,2,1), h = 1: zeros of 2e^{4z} − 1 on Re z = −(ln 2)/4
        let f = NumericFun::Exp {
            rate: Complex64::new(1.0, 0.0),
        };
        let spec = MonomialSpec::new(2, 2, 1).unwrap();
        let region = Region::disk(Complex64::new(0.0, 0.0), 3.0).unwrap();
        let report = theorem4_bound_scan(
            &f,
            &spec,
            &ShareTarget::Constant(c(1)),
            &region,
            1e-6,
        )
        .unwrap();
        // Im = πk/2 with |z| ≤ 3 → k ∈ {−1, 0, 1}
        assert_eq!(report.zeros.len(), 3, "zeros: {:?}", report.zeros);
        for row in &report.zeros {
            assert!((row.re + 2f64.ln() / 4.0).abs() < 1e-6);
            // |(f²)′| = |2e^{2z}| at the zero: 2e^{2·Re z}
            let expect = 2.0 * (2.0 * row.re).exp();
            assert!((row.derivative_magnitude - expect).abs() < 1e-6);
        }
    }

    #[test]
    fn bound_scan_rejects_origin_vanishing_target() {
        let f = NumericFun::Rational(RationalFunction::var());
        let spec = MonomialSpec::new(1, 2, 1).unwrap();
        let region = Region::disk(Complex64::new(0.0, 0.0), 1.0).unwrap();
        let h = ShareTarget::Function(RationalFunction::var()); // h(0) = 0
        assert!(theorem4_bound_scan(&f, &spec, &h, &region, 1e-6).is_err());
    }

    #[test]
    fn numeric_share_exp_lattices() {
        // e^{2z} = 1 at πik ⊅ e^{z} = 1 at 2πik, but ⊃ holds.
        let f1 = NumericFun::Exp {
            rate: Complex64::new(1.0, 0.0),
        };
        let f2 = NumericFun::Exp {
            rate: Complex64::new(2.0, 0.0),
        };
        let omega = Shift::from(GaussianRational::one());
        let region = Region::disk(Complex64::new(0.0, 0.0), 10.0).unwrap();
        // zeros of f1 − 1 (coarse lattice) all appear among zeros of f2 − 1
        let coarse_in_fine =
            numeric_partial_share_check(&f1, &f2, &omega, &region, 1e-6).unwrap();
        assert!(coarse_in_fine.subset);
        // the fine lattice is not contained in the coarse one
        let fine_in_coarse =
            numeric_partial_share_check(&f2, &f1, &omega, &region, 1e-6).unwrap();
        assert!(!fine_in_coarse.subset);
        assert!(!fine_in_coarse.unmatched.is_empty());
    }

    #[test]
    fn numeric_share_reflexive_and_disjoint() {
        let f = NumericFun::Rational(
            RationalFunction::new(p(&[-1, 0, 1]), p(&[1])).unwrap(),
        );
        let omega = Shift::zero();
        let region = Region::Rect(Rect::new(-3.0, 3.0, -3.0, 3.0).unwrap());
        let self_share = numeric_partial_share_check(&f, &f, &omega, &region, 1e-6).unwrap();
        assert!(self_share.subset);
        let g = NumericFun::Rational(
            RationalFunction::new(p(&[-4, 0, 1]), p(&[1])).unwrap(),
        );
        let disjoint = numeric_partial_share_check(&f, &g, &omega, &region, 1e-6).unwrap();
        assert!(!disjoint.subset);
        assert_eq!(disjoint.unmatched.len(), 2);
    }
}
