//! Numeric companions to the exact algebra: quadrature for circle
//! averages, polynomial root finding, counting/proximity/characteristic
//! functions on a transcendental catalog, and region-based zero location.

pub mod fun;
pub mod locate;
pub mod nevanlinna;
pub mod quadrature;
pub mod roots;

use num_complex::Complex64;

use crate::gaussian::GaussianRational;
use crate::{Error, Result};

/// A shift/target value carried in both exact and floating form, so exact
/// paths stay exact while catalog paths evaluate numerically.
#[derive(Clone, Debug)]
pub struct Shift {
    pub exact: Option<GaussianRational>,
    pub value: Complex64,
}

impl Shift {
    pub fn zero() -> Self {
        Self::from(GaussianRational::zero())
    }

    pub fn numeric(value: Complex64) -> Self {
        Self { exact: None, value }
    }

    pub fn is_zero(&self) -> bool {
        match &self.exact {
            Some(g) => g.is_zero(),
            None => self.value == Complex64::new(0.0, 0.0),
        }
    }
}

impl From<GaussianRational> for Shift {
    fn from(g: GaussianRational) -> Self {
        let value = g.to_complex64();
        Self {
            exact: Some(g),
            value,
        }
    }
}

/// An axis-aligned rectangle in the plane.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Rect {
    pub x0: f64,
    pub x1: f64,
    pub y0: f64,
    pub y1: f64,
}

impl Rect {
    pub fn new(x0: f64, x1: f64, y0: f64, y1: f64) -> Result<Self> {
        if !(x0 < x1 && y0 < y1) {
            return Err(Error::Invalid(format!(
                "degenerate rectangle [{x0},{x1}]×[{y0},{y1}]"
            )));
        }
        Ok(Self { x0, x1, y0, y1 })
    }

    pub fn center(&self) -> Complex64 {
        Complex64::new((self.x0 + self.x1) / 2.0, (self.y0 + self.y1) / 2.0)
    }

    pub fn max_side(&self) -> f64 {
        (self.x1 - self.x0).max(self.y1 - self.y0)
    }

    pub fn contains(&self, z: Complex64) -> bool {
        self.x0 <= z.re && z.re <= self.x1 && self.y0 <= z.im && z.im <= self.y1
    }

    /// Farthest corner distance from the origin; a disk of this radius
    /// covers the rectangle.
    pub fn enclosing_radius(&self) -> f64 {
        let xs = [self.x0, self.x1];
        let ys = [self.y0, self.y1];
        let mut best: f64 = 0.0;
        for x in xs {
            for y in ys {
                best = best.max(Complex64::new(x, y).norm());
            }
        }
        best
    }
}

/// A scan region: rectangle or disk.
#[derive(Clone, Copy, Debug)]
pub enum Region {
    Rect(Rect),
    Disk { center: Complex64, radius: f64 },
}

impl Region {
    pub fn disk(center: Complex64, radius: f64) -> Result<Self> {
        if !(radius > 0.0) {
            return Err(Error::Invalid("disk radius must be positive".into()));
        }
        Ok(Self::Disk { center, radius })
    }

    pub fn contains(&self, z: Complex64) -> bool {
        match self {
            Region::Rect(r) => r.contains(z),
            Region::Disk { center, radius } => (z - center).norm() <= *radius,
        }
    }

    pub fn bounding_rect(&self) -> Rect {
        match self {
            Region::Rect(r) => *r,
            Region::Disk { center, radius } => Rect {
                x0: center.re - radius,
                x1: center.re + radius,
                y0: center.im - radius,
                y1: center.im + radius,
            },
        }
    }

    pub fn enclosing_radius(&self) -> f64 {
        self.bounding_rect().enclosing_radius()
    }
}

/// k-th derivative of an analytic function from equispaced samples on a
/// small circle (trapezoidal evaluation of the Cauchy integral). For
/// analytic integrands the trapezoid rule on a circle converges
/// spectrally, which comfortably beats difference stencils at order k ≤ 3.
pub fn contour_kth_derivative(
    f: impl Fn(Complex64) -> Complex64,
    z: Complex64,
    k: u32,
    radius: f64,
    points: usize,
) -> Result<Complex64> {
    if !(radius > 0.0) || points < 8 {
        return Err(Error::Invalid(
            "contour derivative needs a positive radius and ≥ 8 points".into(),
        ));
    }
    let mut acc = Complex64::new(0.0, 0.0);
    for j in 0..points {
        let theta = 2.0 * std::f64::consts::PI * j as f64 / points as f64;
        let dir = Complex64::new(0.0, theta).exp();
        let sample = f(z + radius * dir);
        if !sample.is_finite() {
            return Err(Error::Numeric(format!(
                "derivative sample not finite near {z} (radius {radius})"
            )));
        }
        // divide by e^{ikθ}
        acc += sample * Complex64::new(0.0, -(k as f64) * theta).exp();
    }
    let mut factorial = 1.0;
    for j in 2..=k as u64 {
        factorial *= j as f64;
    }
    Ok(acc * factorial / (points as f64 * radius.powi(k as i32)))
}
