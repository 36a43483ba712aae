//! Polynomial root finding: Aberth–Ehrlich simultaneous iteration on the
//! squarefree part, multiplicities recovered from the exact squarefree
//! decomposition, Newton polishing, residual-based error bounds.

use num_complex::Complex64;

use crate::poly::Polynomial;
use crate::squarefree::squarefree_decompose;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug)]
pub struct NumericRoot {
    pub location: Complex64,
    pub multiplicity: u32,
    pub error_bound: f64,
}

/// Roots with multiplicities; Σ multiplicities equals the degree of the
/// input. `merged_clusters` counts pairs that landed within the clustering
/// threshold and were fused rather than silently kept apart.
#[derive(Clone, Debug)]
pub struct NumericRootSet {
    pub roots: Vec<NumericRoot>,
    pub merged_clusters: usize,
}

fn horner_with_derivative(coeffs: &[Complex64], z: Complex64) -> (Complex64, Complex64) {
    let mut p = Complex64::new(0.0, 0.0);
    let mut dp = Complex64::new(0.0, 0.0);
    for c in coeffs.iter().rev() {
        dp = dp * z + p;
        p = p * z + c;
    }
    (p, dp)
}

/// All roots of a squarefree polynomial given by ascending coefficients
/// (leading nonzero, degree ≥ 1). Deterministic; errors when the step
/// sizes have not stalled out within the budget.
pub fn aberth_roots(coeffs: &[Complex64], max_iter: usize) -> Result<Vec<Complex64>> {
    let (roots, converged) = aberth_iterate(coeffs, max_iter)?;
    if !converged {
        return Err(Error::NonConvergence);
    }
    Ok(roots)
}

/// Like `aberth_roots` but always returns the final iterate; with multiple
/// roots the step criterion never reaches machine precision even though
/// the cluster has long since localized.
pub fn aberth_roots_lenient(coeffs: &[Complex64], max_iter: usize) -> Result<Vec<Complex64>> {
    Ok(aberth_iterate(coeffs, max_iter)?.0)
}

fn aberth_iterate(coeffs: &[Complex64], max_iter: usize) -> Result<(Vec<Complex64>, bool)> {
    let degree = coeffs.len() - 1;
    assert!(degree >= 1 && coeffs[degree].norm() > 0.0);
    if degree == 1 {
        return Ok((vec![-coeffs[0] / coeffs[1]], true));
    }
    // Monic copy for stable evaluation.
    let lead = coeffs[degree];
    let monic: Vec<Complex64> = coeffs.iter().map(|c| c / lead).collect();
    if monic.iter().any(|c| !c.is_finite()) {
        return Err(Error::Numeric("coefficient overflow in root finder".into()));
    }

    // Cauchy bound and a spiral of initial guesses (the angular offset
    // breaks symmetric stalls on polynomials like z^n + c).
    let bound = 1.0
        + monic[..degree]
            .iter()
            .map(|c| c.norm())
            .fold(0.0f64, f64::max);
    let mut z: Vec<Complex64> = (0..degree)
        .map(|i| {
            let angle = 2.0 * std::f64::consts::PI * i as f64 / degree as f64 + 0.41;
            let radius = bound * (0.35 + 0.5 * (i as f64 + 1.0) / degree as f64);
            radius * Complex64::new(0.0, angle).exp()
        })
        .collect();

    let stop = 1e-14;
    for _ in 0..max_iter {
        let mut moved = false;
        for i in 0..degree {
            let (p, dp) = horner_with_derivative(&monic, z[i]);
            if p.norm() == 0.0 {
                continue;
            }
            let newton = if dp.norm() > 0.0 {
                p / dp
            } else {
                // Derivative collision: nudge off the critical point.
                z[i] += Complex64::new(1e-6, 1e-6);
                moved = true;
                continue;
            };
            let mut repulsion = Complex64::new(0.0, 0.0);
            for j in 0..degree {
                if j != i {
                    let diff = z[i] - z[j];
                    if diff.norm() < 1e-300 {
                        continue;
                    }
                    repulsion += 1.0 / diff;
                }
            }
            let denom = 1.0 - newton * repulsion;
            let step = if denom.norm() > 1e-300 {
                newton / denom
            } else {
                newton
            };
            z[i] -= step;
            if step.norm() > stop * (1.0 + z[i].norm()) {
                moved = true;
            }
        }
        if !moved {
            return Ok((z, true));
        }
    }
    Ok((z, false))
}

fn newton_polish(coeffs: &[Complex64], mut z: Complex64, steps: usize) -> Complex64 {
    for _ in 0..steps {
        let (p, dp) = horner_with_derivative(coeffs, z);
        if dp.norm() == 0.0 || !p.is_finite() {
            break;
        }
        let step = p / dp;
        if !step.is_finite() {
            break;
        }
        z -= step;
    }
    z
}

fn to_f64_coeffs(p: &Polynomial) -> Result<Vec<Complex64>> {
    let coeffs: Vec<Complex64> = p.coeffs().iter().map(|c| c.to_complex64()).collect();
    if coeffs.iter().any(|c| !c.is_finite()) {
        return Err(Error::Numeric(
            "polynomial coefficients overflow f64".into(),
        ));
    }
    Ok(coeffs)
}

/// Find every root of an exact polynomial: squarefree parts are solved by
/// Aberth–Ehrlich and polished by Newton; multiplicities come from the
/// decomposition. Residual bounds above `tol` are an error, not a warning.
pub fn root_find(p: &Polynomial, tol: f64) -> Result<NumericRootSet> {
    let degree = p.degree().ok_or(Error::ZeroPolynomial)?;
    if degree == 0 {
        return Ok(NumericRootSet {
            roots: Vec::new(),
            merged_clusters: 0,
        });
    }
    let decomposition = squarefree_decompose(p)?;
    let mut roots: Vec<NumericRoot> = Vec::new();
    for (factor, multiplicity) in decomposition.parts() {
        let coeffs = to_f64_coeffs(factor)?;
        let approx = aberth_roots(&coeffs, 200)?;
        for z0 in approx {
            let z = newton_polish(&coeffs, z0, 4);
            let (pv, dv) = horner_with_derivative(&coeffs, z);
            let bound = if dv.norm() > 0.0 {
                (coeffs.len() as f64) * pv.norm() / dv.norm()
            } else {
                f64::INFINITY
            };
            if !bound.is_finite() || bound > tol {
                return Err(Error::Uncertified(format!(
                    "residual bound {bound:.3e} exceeds tol {tol:.3e} at {z}"
                )));
            }
            roots.push(NumericRoot {
                location: z,
                multiplicity: *multiplicity,
                error_bound: bound,
            });
        }
    }

    // Clustering rule: roots closer than 10³ machine epsilons (scaled) or
    // overlapping error bounds are the same point numerically; merge and
    // record it.
    let mut merged = 0usize;
    let mut out: Vec<NumericRoot> = Vec::new();
    'outer: for root in roots {
        for existing in out.iter_mut() {
            let scale = 1.0 + existing.location.norm().max(root.location.norm());
            let threshold = (1e3 * f64::EPSILON * scale)
                .max(2.0 * existing.error_bound.max(root.error_bound));
            if (existing.location - root.location).norm() < threshold {
                existing.multiplicity += root.multiplicity;
                existing.error_bound = existing.error_bound.max(root.error_bound);
                merged += 1;
                continue 'outer;
            }
        }
        out.push(root);
    }
    debug_assert_eq!(
        out.iter().map(|r| r.multiplicity as usize).sum::<usize>(),
        degree
    );
    Ok(NumericRootSet {
        roots: out,
        merged_clusters: merged,
    })
}

/// Independent distinct-zero recount used to confirm suspected fuzz
/// violations: run Aberth directly on the raw polynomial (no exact
/// squarefree help — this path must not share machinery with the claim it
/// checks) and count clusters at the given tolerance.
pub fn distinct_roots_numeric(p: &Polynomial, cluster_tolerance: f64) -> Result<usize> {
    let degree = p.degree().ok_or(Error::ZeroPolynomial)?;
    if degree == 0 {
        return Ok(0);
    }
    let coeffs = to_f64_coeffs(p)?;
    // Multiple roots only converge linearly, so allow a generous budget
    // and accept the final iterate even if the stall detector trips.
    let approx = aberth_roots_lenient(&coeffs, 600)?;
    let mut clusters: Vec<(Complex64, usize)> = Vec::new();
    'outer: for z in approx {
        for (center, count) in clusters.iter_mut() {
            if (*center - z).norm() <= cluster_tolerance * (1.0 + center.norm()) {
                // running mean keeps the cluster centered
                *center = (*center * *count as f64 + z) / (*count as f64 + 1.0);
                *count += 1;
                continue 'outer;
            }
        }
        clusters.push((z, 1));
    }
    Ok(clusters.len())
}
