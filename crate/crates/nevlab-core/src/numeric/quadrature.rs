//! Adaptive panel quadrature for circle averages.
//!
//! The integrands here are continuous but only piecewise smooth (log⁺
//! introduces kinks where |f| crosses 1, and near-circle zeros of the
//! evaluand leave tall integrable spikes), so a panel-splitting Simpson
//! rule with a hard budget is the right tool: panels concentrate where
//! the integrand misbehaves and the budget turns pathological inputs
//! into errors instead of silent garbage.

use crate::{Error, Result};

/// Result of one adaptive integration.
#[derive(Clone, Copy, Debug)]
pub struct QuadOutcome {
    pub value: f64,
    pub panels_used: usize,
}

struct Panel {
    a: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    estimate: f64,
    depth: u32,
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

const MAX_DEPTH: u32 = 48;

/// ∫_a^b g, absolute error ≤ tol (up to the Richardson estimate), at most
/// `max_panels` panel refinements. Non-finite samples abort with
/// `SingularOnCircle`.
pub fn adaptive_integral(
    g: &dyn Fn(f64) -> f64,
    a: f64,
    b: f64,
    tol: f64,
    initial_panels: usize,
    max_panels: usize,
) -> Result<QuadOutcome> {
    assert!(b > a && initial_panels >= 1);
    let eval = |x: f64| -> Result<f64> {
        let v = g(x);
        if !v.is_finite() {
            return Err(Error::SingularOnCircle);
        }
        Ok(v)
    };

    let mut stack: Vec<Panel> = Vec::new();
    let width = (b - a) / initial_panels as f64;
    for i in 0..initial_panels {
        let pa = a + i as f64 * width;
        let pb = pa + width;
        let (fa, fm, fb) = (eval(pa)?, eval((pa + pb) / 2.0)?, eval(pb)?);
        stack.push(Panel {
            a: pa,
            b: pb,
            fa,
            fm,
            fb,
            estimate: simpson(pa, pb, fa, fm, fb),
            depth: 0,
        });
    }

    let mut total = 0.0;
    let mut panels_used = initial_panels;
    while let Some(p) = stack.pop() {
        let m = (p.a + p.b) / 2.0;
        let lm = eval((p.a + m) / 2.0)?;
        let rm = eval((m + p.b) / 2.0)?;
        let left = simpson(p.a, m, p.fa, lm, p.fm);
        let right = simpson(m, p.b, p.fm, rm, p.fb);
        let refined = left + right;
        let err = (refined - p.estimate).abs() / 15.0;
        // Error budget proportional to panel share of the interval.
        let local_tol = tol * (p.b - p.a) / (b - a);
        if err <= local_tol || p.depth >= MAX_DEPTH {
            total += refined + (refined - p.estimate) / 15.0;
            continue;
        }
        panels_used += 2;
        if panels_used > max_panels {
            return Err(Error::PanelBudget(panels_used));
        }
        stack.push(Panel {
            a: p.a,
            b: m,
            fa: p.fa,
            fm: lm,
            fb: p.fm,
            estimate: left,
            depth: p.depth + 1,
        });
        stack.push(Panel {
            a: m,
            b: p.b,
            fa: p.fm,
            fm: rm,
            fb: p.fb,
            estimate: right,
            depth: p.depth + 1,
        });
    }
    Ok(QuadOutcome {
        value: total,
        panels_used,
    })
}

/// Average of g over one full period: (1/2π) ∫₀^{2π} g(θ) dθ.
pub fn circle_average(g: &dyn Fn(f64) -> f64, tol: f64) -> Result<f64> {
    circle_average_with(g, tol, 16, 400_000)
}

pub fn circle_average_with(
    g: &dyn Fn(f64) -> f64,
    tol: f64,
    initial_panels: usize,
    max_panels: usize,
) -> Result<f64> {
    let two_pi = 2.0 * std::f64::consts::PI;
    let outcome = adaptive_integral(g, 0.0, two_pi, tol * two_pi, initial_panels, max_panels)?;
    Ok(outcome.value / two_pi)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn constant_average() {
        let v = circle_average(&|_| 3.25, 1e-12).unwrap();
        assert!((v - 3.25).abs() < 1e-12);
    }

    #[test]
    fn smooth_oscillation() {
        // (1/2π)∫ cos²θ = 1/2
        let v = circle_average(&|t: f64| t.cos().powi(2), 1e-10).unwrap();
        assert!((v - 0.5).abs() < 1e-10);
    }

    #[test]
    fn kinked_integrand() {
        // (1/2π)∫ max(cosθ, 0) dθ = 1/π
        let v = circle_average(&|t: f64| t.cos().max(0.0), 1e-9).unwrap();
        assert!((v - 1.0 / std::f64::consts::PI).abs() < 1e-8);
    }

    #[test]
    fn integrable_log_spike() {
        // (1/2π)∫ −log|2 sin(θ/2)| dθ = 0 (the classical circle integral)
        let v = circle_average(
            &|t: f64| -((2.0 * (t / 2.0).sin()).abs().max(1e-300)).ln(),
            1e-7,
        );
        // The true singularities sit at θ = 0 and 2π (panel endpoints),
        // where the clamp keeps samples finite; the integral is 0.
        assert!(v.unwrap().abs() < 1e-5);
    }

    #[test]
    fn singular_sample_is_an_error() {
        let r = circle_average(&|t: f64| 1.0 / (t - 1.0), 1e-8);
        assert!(matches!(r, Err(Error::SingularOnCircle)));
    }

    #[test]
    fn budget_is_enforced() {
        let wiggly = |t: f64| (1.0 / (1e-9 + (t - 1.0).abs())).ln().abs();
        let r = circle_average_with(&wiggly, 1e-13, 16, 64);
        assert!(matches!(r, Err(Error::PanelBudget(_))));
    }
}
