//! The numeric function catalog and the closed forms that keep it usable:
//! exponentials, sine/cosine (as exponential Laurent sums), tangent (as
//! polynomials in tan), and rational functions carried exactly.
//!
//! The point of the representation choices is that the differential
//! monomial f^m(f^n)^(k) of a catalog entry is *again* representable —
//! exponential sums are closed under products and derivatives, and
//! polynomials in tan are closed under d/dz via P ↦ P′·(1+t²) — so zero
//! sets stay enumerable through logarithm lattices instead of blind
//! root searches.

use num_complex::Complex64;

use crate::monomial::{build_monomial, MonomialSpec};
use crate::numeric::roots::{aberth_roots_lenient, root_find};
use crate::numeric::Shift;
use crate::ratfun::RationalFunction;
use crate::{Error, Result};

/// Σ coeffs[j] · e^{freq·(min_pow+j)·z}; first and last coefficients are
/// kept nonzero.
#[derive(Clone, Debug)]
pub struct ExpLaurent {
    pub freq: Complex64,
    pub min_pow: i64,
    pub coeffs: Vec<Complex64>,
}

impl ExpLaurent {
    pub fn new(freq: Complex64, mut min_pow: i64, mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.last().map_or(false, |c| c.norm() == 0.0) {
            coeffs.pop();
        }
        let lead_zeros = coeffs.iter().take_while(|c| c.norm() == 0.0).count();
        if lead_zeros > 0 {
            coeffs.drain(..lead_zeros);
            min_pow += lead_zeros as i64;
        }
        Self {
            freq,
            min_pow,
            coeffs,
        }
    }

    pub fn single(freq: Complex64, power: i64, coeff: Complex64) -> Self {
        Self::new(freq, power, vec![coeff])
    }

    /// sin z = (w − w⁻¹)/2i with w = e^{iz}.
    pub fn sin() -> Self {
        let half_i = Complex64::new(0.0, 0.5);
        Self::new(Complex64::i(), -1, vec![half_i, Complex64::new(0.0, 0.0), -half_i])
    }

    /// cos z = (w + w⁻¹)/2.
    pub fn cos() -> Self {
        let half = Complex64::new(0.5, 0.0);
        Self::new(Complex64::i(), -1, vec![half, Complex64::new(0.0, 0.0), half])
    }

    pub fn is_empty(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        debug_assert_eq!(self.freq, other.freq);
        if self.is_empty() || other.is_empty() {
            return Self::new(self.freq, 0, Vec::new());
        }
        let mut coeffs =
            vec![Complex64::new(0.0, 0.0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(self.freq, self.min_pow + other.min_pow, coeffs)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::single(self.freq, 0, Complex64::new(1.0, 0.0));
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// d/dz multiplies the term of exponent e by freq·e.
    pub fn derivative(&self) -> Self {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(j, c)| c * self.freq * (self.min_pow + j as i64) as f64)
            .collect();
        Self::new(self.freq, self.min_pow, coeffs)
    }

    pub fn kth_derivative(&self, k: u32) -> Self {
        let mut acc = self.clone();
        for _ in 0..k {
            acc = acc.derivative();
        }
        acc
    }

    pub fn add_const(&self, c: Complex64) -> Self {
        if c.norm() == 0.0 {
            return self.clone();
        }
        let min = self.min_pow.min(0);
        let max = (self.min_pow + self.coeffs.len() as i64 - 1).max(0);
        let mut coeffs = vec![Complex64::new(0.0, 0.0); (max - min + 1) as usize];
        for (j, a) in self.coeffs.iter().enumerate() {
            coeffs[(self.min_pow - min) as usize + j] += a;
        }
        coeffs[(-min) as usize] += c;
        Self::new(self.freq, min, coeffs)
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, c) in self.coeffs.iter().enumerate() {
            let e = (self.min_pow + j as i64) as f64;
            acc += c * (self.freq * z * e).exp();
        }
        acc
    }

    /// log|Σ c_j e^{freq·e_j·z}| with the dominant exponential factored
    /// out, stable at any radius.
    pub fn log_abs(&self, z: Complex64) -> f64 {
        if self.is_empty() {
            return f64::NEG_INFINITY;
        }
        let growth = (self.freq * z).re;
        let max_pow = self.min_pow + self.coeffs.len() as i64 - 1;
        let dominant = if growth >= 0.0 { max_pow } else { self.min_pow };
        let mut acc = Complex64::new(0.0, 0.0);
        for (j, c) in self.coeffs.iter().enumerate() {
            let e = self.min_pow + j as i64;
            acc += c * (self.freq * z * (e - dominant) as f64).exp();
        }
        dominant as f64 * growth + acc.norm().ln()
    }

    /// Coefficients (ascending) of the polynomial w^s·(self − c) in
    /// w = e^{freq z}, with s chosen to clear negative powers, and the
    /// factor w^q of low-order zeros stripped (w never vanishes).
    fn poly_in_w_minus(&self, c: Complex64) -> Vec<Complex64> {
        let with_c = self.add_const(-c);
        if with_c.is_empty() {
            return Vec::new();
        }
        let mut coeffs = with_c.coeffs.clone();
        while coeffs.first().map_or(false, |a| a.norm() == 0.0) {
            coeffs.remove(0);
        }
        coeffs
    }
}

/// A polynomial in tan z (ascending coefficients).
#[derive(Clone, Debug)]
pub struct TanPoly {
    pub coeffs: Vec<Complex64>,
}

impl TanPoly {
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        while coeffs.last().map_or(false, |c| c.norm() == 0.0) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn var() -> Self {
        Self::new(vec![Complex64::new(0.0, 0.0), Complex64::new(1.0, 0.0)])
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn eval_in_t(&self, t: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.coeffs.is_empty() || other.coeffs.is_empty() {
            return Self::new(Vec::new());
        }
        let mut coeffs =
            vec![Complex64::new(0.0, 0.0); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Self::new(coeffs)
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::new(vec![Complex64::new(1.0, 0.0)]);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// d/dz of P(tan z) is P′(tan z)·(1 + tan² z).
    pub fn derivative(&self) -> Self {
        let dp: Vec<Complex64> = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c * j as f64)
            .collect();
        let one_plus_t2 = Self::new(vec![
            Complex64::new(1.0, 0.0),
            Complex64::new(0.0, 0.0),
            Complex64::new(1.0, 0.0),
        ]);
        Self::new(dp).mul(&one_plus_t2)
    }

    pub fn kth_derivative(&self, k: u32) -> Self {
        let mut acc = self.clone();
        for _ in 0..k {
            acc = acc.derivative();
        }
        acc
    }

    pub fn add_const(&self, c: Complex64) -> Self {
        let mut coeffs = self.coeffs.clone();
        if coeffs.is_empty() {
            coeffs.push(c);
        } else {
            coeffs[0] += c;
        }
        Self::new(coeffs)
    }
}

/// A numerically evaluable meromorphic function with enumerable zero and
/// pole data.
#[derive(Clone, Debug)]
pub enum NumericFun {
    /// Exact rational function, evaluated in double precision.
    Rational(RationalFunction),
    /// e^{rate·z}
    Exp { rate: Complex64 },
    Sin,
    Cos,
    Tan,
    ExpLaurent(ExpLaurent),
    TanPoly(TanPoly),
}

/// Points with multiplicities inside a disk.
pub type SitedPoints = Vec<(Complex64, u32)>;

/// Cluster nearby approximations into (center, multiplicity) pairs.
pub fn cluster_points(points: Vec<Complex64>, tol: f64) -> SitedPoints {
    let mut clusters: SitedPoints = Vec::new();
    'outer: for z in points {
        for (center, count) in clusters.iter_mut() {
            if (*center - z).norm() <= tol * (1.0 + center.norm()) {
                *center = (*center * *count as f64 + z) / (*count as f64 + 1.0);
                *count += 1;
                continue 'outer;
            }
        }
        clusters.push((z, 1));
    }
    clusters
}

/// All lattice points base + period·k inside |z| ≤ r.
fn lattice_in_disk(base: Complex64, period: Complex64, r: f64) -> Vec<Complex64> {
    let span = ((r + base.norm()) / period.norm()).ceil() as i64 + 1;
    let mut out = Vec::new();
    for k in -span..=span {
        let z = base + period * k as f64;
        if z.norm() <= r {
            out.push(z);
        }
    }
    out
}

const TOL_ROOT: f64 = 1e-6;
const TOL_CLUSTER: f64 = 1e-7;

impl NumericFun {
    pub fn id(&self) -> String {
        match self {
            NumericFun::Rational(f) => format!("rational[{f}]"),
            NumericFun::Exp { rate } => format!("exp({rate}·z)"),
            NumericFun::Sin => "sin".into(),
            NumericFun::Cos => "cos".into(),
            NumericFun::Tan => "tan".into(),
            NumericFun::ExpLaurent(_) => "exp-sum".into(),
            NumericFun::TanPoly(_) => "tan-poly".into(),
        }
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        match self {
            NumericFun::Rational(f) => f.eval_complex(z),
            NumericFun::Exp { rate } => (rate * z).exp(),
            NumericFun::Sin => z.sin(),
            NumericFun::Cos => z.cos(),
            NumericFun::Tan => z.tan(),
            NumericFun::ExpLaurent(l) => l.eval(z),
            NumericFun::TanPoly(p) => p.eval_in_t(z.tan()),
        }
    }

    /// The derivative as another catalog value (exponential sums and tan
    /// polynomials are closed under d/dz).
    pub fn derivative(&self) -> NumericFun {
        match self {
            NumericFun::Rational(f) => NumericFun::Rational(f.derivative()),
            NumericFun::Exp { rate } => {
                NumericFun::ExpLaurent(ExpLaurent::single(*rate, 1, *rate))
            }
            NumericFun::Sin => NumericFun::Cos,
            NumericFun::Cos => NumericFun::ExpLaurent(ExpLaurent::sin().kth_derivative(1)),
            NumericFun::Tan => NumericFun::TanPoly(TanPoly::var().derivative()),
            NumericFun::ExpLaurent(l) => NumericFun::ExpLaurent(l.derivative()),
            NumericFun::TanPoly(p) => NumericFun::TanPoly(p.derivative()),
        }
    }

    /// f − c as another catalog value, so shifted circle averages stay
    /// stable at large radii.
    pub fn shifted(&self, shift: &Shift) -> Result<NumericFun> {
        let c = shift.value;
        Ok(match self {
            NumericFun::Rational(f) => {
                let exact = shift
                    .exact
                    .clone()
                    .ok_or_else(|| Error::Invalid("rational path needs an exact shift".into()))?;
                NumericFun::Rational(f - &RationalFunction::constant(exact))
            }
            NumericFun::Exp { rate } => NumericFun::ExpLaurent(
                ExpLaurent::single(*rate, 1, Complex64::new(1.0, 0.0)).add_const(-c),
            ),
            NumericFun::Sin => NumericFun::ExpLaurent(ExpLaurent::sin().add_const(-c)),
            NumericFun::Cos => NumericFun::ExpLaurent(ExpLaurent::cos().add_const(-c)),
            NumericFun::Tan => NumericFun::TanPoly(TanPoly::var().add_const(-c)),
            NumericFun::ExpLaurent(l) => NumericFun::ExpLaurent(l.add_const(-c)),
            NumericFun::TanPoly(p) => NumericFun::TanPoly(p.add_const(-c)),
        })
    }

    pub fn is_constant(&self) -> bool {
        match self {
            NumericFun::Rational(f) => f.is_constant(),
            NumericFun::Exp { .. } | NumericFun::Sin | NumericFun::Cos | NumericFun::Tan => false,
            NumericFun::ExpLaurent(l) => {
                l.is_empty() || (l.coeffs.len() == 1 && l.min_pow == 0)
            }
            NumericFun::TanPoly(p) => p.coeffs.len() <= 1,
        }
    }

    /// log|f(z)|, stable at large |z| (−∞ at a zero, +∞ near a pole).
    pub fn log_abs(&self, z: Complex64) -> f64 {
        match self {
            NumericFun::Rational(f) => f.log_abs_complex(z),
            NumericFun::Exp { rate } => (rate * z).re,
            NumericFun::Sin => z.sin().norm().ln(),
            NumericFun::Cos => z.cos().norm().ln(),
            NumericFun::Tan => z.tan().norm().ln(),
            NumericFun::ExpLaurent(l) => l.log_abs(z),
            NumericFun::TanPoly(p) => p.eval_in_t(z.tan()).norm().ln(),
        }
    }

    /// Zeros of f − target in |z| ≤ r, with multiplicities.
    pub fn zeros_in_disk(&self, target: &Shift, r: f64) -> Result<SitedPoints> {
        let c = target.value;
        match self {
            NumericFun::Rational(f) => rational_zeros(f, target, r),
            NumericFun::Exp { rate } => {
                if c.norm() == 0.0 {
                    return Ok(Vec::new());
                }
                let base = c.ln() / rate;
                let period = Complex64::new(0.0, 2.0 * std::f64::consts::PI) / rate;
                Ok(lattice_in_disk(base, period, r)
                    .into_iter()
                    .map(|z| (z, 1))
                    .collect())
            }
            NumericFun::Sin => {
                let two_pi = Complex64::new(2.0 * std::f64::consts::PI, 0.0);
                if (c - 1.0).norm() < 1e-12 || (c + 1.0).norm() < 1e-12 {
                    let base = if c.re > 0.0 {
                        Complex64::new(std::f64::consts::FRAC_PI_2, 0.0)
                    } else {
                        Complex64::new(-std::f64::consts::FRAC_PI_2, 0.0)
                    };
                    return Ok(lattice_in_disk(base, two_pi, r)
                        .into_iter()
                        .map(|z| (z, 2))
                        .collect());
                }
                let a = c.asin();
                let mut out: Vec<(Complex64, u32)> = lattice_in_disk(a, two_pi, r)
                    .into_iter()
                    .map(|z| (z, 1))
                    .collect();
                let mirrored = Complex64::new(std::f64::consts::PI, 0.0) - a;
                out.extend(
                    lattice_in_disk(mirrored, two_pi, r)
                        .into_iter()
                        .map(|z| (z, 1)),
                );
                Ok(out)
            }
            NumericFun::Cos => {
                let two_pi = Complex64::new(2.0 * std::f64::consts::PI, 0.0);
                if (c - 1.0).norm() < 1e-12 || (c + 1.0).norm() < 1e-12 {
                    let base = if c.re > 0.0 {
                        Complex64::new(0.0, 0.0)
                    } else {
                        Complex64::new(std::f64::consts::PI, 0.0)
                    };
                    return Ok(lattice_in_disk(base, two_pi, r)
                        .into_iter()
                        .map(|z| (z, 2))
                        .collect());
                }
                let a = c.acos();
                let mut out: Vec<(Complex64, u32)> = lattice_in_disk(a, two_pi, r)
                    .into_iter()
                    .map(|z| (z, 1))
                    .collect();
                out.extend(lattice_in_disk(-a, two_pi, r).into_iter().map(|z| (z, 1)));
                Ok(out)
            }
            NumericFun::Tan => {
                if (c - Complex64::i()).norm() < 1e-12 || (c + Complex64::i()).norm() < 1e-12 {
                    return Ok(Vec::new());
                }
                let base = c.atan();
                let period = Complex64::new(std::f64::consts::PI, 0.0);
                Ok(lattice_in_disk(base, period, r)
                    .into_iter()
                    .map(|z| (z, 1))
                    .collect())
            }
            NumericFun::ExpLaurent(l) => {
                let poly = l.poly_in_w_minus(c);
                if poly.len() <= 1 {
                    return Ok(Vec::new());
                }
                let roots = aberth_roots_lenient(&poly, 400)?;
                let clustered = cluster_points(roots, TOL_CLUSTER);
                let mut out = Vec::new();
                for (w, mult) in clustered {
                    if w.norm() < 1e-12 {
                        continue;
                    }
                    let base = w.ln() / l.freq;
                    let period = Complex64::new(0.0, 2.0 * std::f64::consts::PI) / l.freq;
                    for z in lattice_in_disk(base, period, r) {
                        out.push((z, mult));
                    }
                }
                Ok(out)
            }
            NumericFun::TanPoly(p) => {
                let shifted = p.add_const(-c);
                if shifted.coeffs.len() <= 1 {
                    return Ok(Vec::new());
                }
                let roots = aberth_roots_lenient(&shifted.coeffs, 400)?;
                let clustered = cluster_points(roots, TOL_CLUSTER);
                let mut out = Vec::new();
                let period = Complex64::new(std::f64::consts::PI, 0.0);
                for (t, mult) in clustered {
                    if (t - Complex64::i()).norm() < 1e-9 || (t + Complex64::i()).norm() < 1e-9 {
                        continue;
                    }
                    for z in lattice_in_disk(t.atan(), period, r) {
                        out.push((z, mult));
                    }
                }
                Ok(out)
            }
        }
    }

    /// Poles in |z| ≤ r with multiplicities.
    pub fn poles_in_disk(&self, r: f64) -> Result<SitedPoints> {
        match self {
            NumericFun::Rational(f) => {
                if f.den().is_constant() {
                    return Ok(Vec::new());
                }
                let set = root_find(f.den(), TOL_ROOT)?;
                Ok(set
                    .roots
                    .into_iter()
                    .filter(|root| root.location.norm() <= r)
                    .map(|root| (root.location, root.multiplicity))
                    .collect())
            }
            NumericFun::Exp { .. }
            | NumericFun::Sin
            | NumericFun::Cos
            | NumericFun::ExpLaurent(_) => Ok(Vec::new()),
            NumericFun::Tan => Ok(tan_poles(r, 1)),
            NumericFun::TanPoly(p) => match p.degree() {
                None | Some(0) => Ok(Vec::new()),
                Some(d) => Ok(tan_poles(r, d as u32)),
            },
        }
    }

    /// Closed-form characteristic, when one exists (pure exponentials).
    pub fn closed_form_t(&self, r: f64) -> Option<f64> {
        match self {
            NumericFun::Exp { rate } => Some(rate.norm() * r / std::f64::consts::PI),
            _ => None,
        }
    }
}

fn tan_poles(r: f64, mult: u32) -> SitedPoints {
    lattice_in_disk(
        Complex64::new(std::f64::consts::FRAC_PI_2, 0.0),
        Complex64::new(std::f64::consts::PI, 0.0),
        r,
    )
    .into_iter()
    .map(|z| (z, mult))
    .collect()
}

fn rational_zeros(f: &RationalFunction, target: &Shift, r: f64) -> Result<SitedPoints> {
    if let Some(exact) = &target.exact {
        let diff = f - &RationalFunction::constant(exact.clone());
        if diff.is_zero() {
            return Err(Error::IdenticallyEqual);
        }
        if diff.num().is_constant() {
            return Ok(Vec::new());
        }
        let set = root_find(diff.num(), TOL_ROOT)?;
        return Ok(set
            .roots
            .into_iter()
            .filter(|root| root.location.norm() <= r)
            .map(|root| (root.location, root.multiplicity))
            .collect());
    }
    // Floating target: assemble num − c·den in f64 and cluster.
    let c = target.value;
    let nd = f.num().coeffs().len().max(f.den().coeffs().len());
    if nd <= 1 {
        return Ok(Vec::new());
    }
    let mut coeffs = vec![Complex64::new(0.0, 0.0); nd];
    for (j, a) in f.num().coeffs().iter().enumerate() {
        coeffs[j] += a.to_complex64();
    }
    for (j, b) in f.den().coeffs().iter().enumerate() {
        coeffs[j] -= c * b.to_complex64();
    }
    while coeffs.last().map_or(false, |a| a.norm() == 0.0) {
        coeffs.pop();
    }
    if coeffs.len() <= 1 {
        return Ok(Vec::new());
    }
    let roots = aberth_roots_lenient(&coeffs, 400)?;
    Ok(cluster_points(roots, TOL_CLUSTER)
        .into_iter()
        .filter(|(z, _)| z.norm() <= r)
        .collect())
}

/// F = f^m(f^n)^(k) for a catalog entry, in a representation that keeps
/// zeros enumerable.
pub fn build_numeric_monomial(f: &NumericFun, spec: &MonomialSpec) -> Result<NumericFun> {
    let (m, n, k) = (spec.m, spec.n, spec.k);
    Ok(match f {
        NumericFun::Rational(rf) => NumericFun::Rational(build_monomial(rf, spec)?),
        NumericFun::Exp { rate } => {
            let coeff = (rate * n as f64).powu(k);
            NumericFun::ExpLaurent(ExpLaurent::single(*rate, (m + n) as i64, coeff))
        }
        NumericFun::Sin => NumericFun::ExpLaurent(laurent_monomial(&ExpLaurent::sin(), m, n, k)),
        NumericFun::Cos => NumericFun::ExpLaurent(laurent_monomial(&ExpLaurent::cos(), m, n, k)),
        NumericFun::Tan => {
            let dk = TanPoly::var().pow(n).kth_derivative(k);
            NumericFun::TanPoly(TanPoly::var().pow(m).mul(&dk))
        }
        _ => {
            return Err(Error::Invalid(
                "monomial construction expects a catalog entry".into(),
            ))
        }
    })
}

/// (f^n)^(k) alone, used to evaluate the derivative-part bound.
pub fn kth_derivative_of_power(f: &NumericFun, n: u32, k: u32) -> Result<NumericFun> {
    Ok(match f {
        NumericFun::Rational(rf) => NumericFun::Rational(rf.pow(n).kth_derivative(k)),
        NumericFun::Exp { rate } => {
            let coeff = (rate * n as f64).powu(k);
            NumericFun::ExpLaurent(ExpLaurent::single(*rate, n as i64, coeff))
        }
        NumericFun::Sin => NumericFun::ExpLaurent(ExpLaurent::sin().pow(n).kth_derivative(k)),
        NumericFun::Cos => NumericFun::ExpLaurent(ExpLaurent::cos().pow(n).kth_derivative(k)),
        NumericFun::Tan => NumericFun::TanPoly(TanPoly::var().pow(n).kth_derivative(k)),
        _ => {
            return Err(Error::Invalid(
                "derivative construction expects a catalog entry".into(),
            ))
        }
    })
}

fn laurent_monomial(f: &ExpLaurent, m: u32, n: u32, k: u32) -> ExpLaurent {
    f.pow(m).mul(&f.pow(n).kth_derivative(k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gaussian::GaussianRational;
    use crate::poly::Polynomial;

    fn close(a: Complex64, b: Complex64, tol: f64) -> bool {
        (a - b).norm() < tol
    }

    #[test]
    fn laurent_sin_matches_sin() {
        let l = ExpLaurent::sin();
        for &(x, y) in &[(0.3, -0.7), (1.2, 0.4), (-2.0, 1.5)] {
            let z = Complex64::new(x, y);
            assert!(close(l.eval(z), z.sin(), 1e-12));
        }
    }

    #[test]
    fn laurent_derivative_of_sin_is_cos() {
        let dl = ExpLaurent::sin().derivative();
        let z = Complex64::new(0.7, -0.3);
        assert!(close(dl.eval(z), z.cos(), 1e-12));
    }

    #[test]
    fn laurent_power_and_log_abs() {
        let s3 = ExpLaurent::sin().pow(3);
        let z = Complex64::new(0.4, 30.0); // |sin³| huge, eval overflow-free via log
        let expect = 3.0 * z.sin().norm().ln();
        assert!((s3.log_abs(z) - expect).abs() < 1e-9);
    }

    #[test]
    fn tan_poly_derivative_chain() {
        // d/dz tan² z = 2 tan z (1 + tan² z)
        let d = TanPoly::var().pow(2).derivative();
        let z = Complex64::new(0.5, 0.2);
        let t = z.tan();
        assert!(close(d.eval_in_t(t), 2.0 * t * (1.0 + t * t), 1e-12));
    }

    #[test]
    fn exp_zero_lattice() {
        // e^z = 1: z = 2πik
        let f = NumericFun::Exp {
            rate: Complex64::new(1.0, 0.0),
        };
        let zeros = f
            .zeros_in_disk(&Shift::from(GaussianRational::one()), 13.0)
            .unwrap();
        // k ∈ {−2,−1,0,1,2}: |2πk| ≤ 13
        assert_eq!(zeros.len(), 5);
        for (z, mult) in zeros {
            assert_eq!(mult, 1);
            assert!(z.re.abs() < 1e-12);
            let k = z.im / (2.0 * std::f64::consts::PI);
            assert!((k - k.round()).abs() < 1e-12);
        }
    }

    #[test]
    fn built_exp_monomial_closed_form() {
        // f = e^z, (2,2,1): F = 2e^{4z}
        let f = NumericFun::Exp {
            rate: Complex64::new(1.0, 0.0),
        };
        let monomial = build_numeric_monomial(&f, &MonomialSpec::new(2, 2, 1).unwrap()).unwrap();
        let z = Complex64::new(0.3, 0.9);
        assert!(close(monomial.eval(z), 2.0 * (4.0 * z).exp(), 1e-10));
        // zeros of F − 1 on the vertical line Re z = −(ln 2)/4, spaced π/2
        let zeros = monomial
            .zeros_in_disk(&Shift::from(GaussianRational::one()), 4.0)
            .unwrap();
        assert!(!zeros.is_empty());
        for (z, _) in &zeros {
            assert!((z.re + 2f64.ln() / 4.0).abs() < 1e-9, "line miss at {z}");
        }
        // spacing π/2 along the line
        let mut ims: Vec<f64> = zeros.iter().map(|(z, _)| z.im).collect();
        ims.sort_by(|a, b| a.partial_cmp(b).unwrap());
        for w in ims.windows(2) {
            assert!((w[1] - w[0] - std::f64::consts::FRAC_PI_2).abs() < 1e-9);
        }
    }

    #[test]
    fn built_tan_monomial_matches_direct_eval() {
        // f = tan, (1,2,1): F = tan·(tan²)' = 2 tan²(1+tan²)
        let monomial =
            build_numeric_monomial(&NumericFun::Tan, &MonomialSpec::new(1, 2, 1).unwrap())
                .unwrap();
        let z = Complex64::new(0.4, 0.1);
        let t = z.tan();
        assert!(close(monomial.eval(z), 2.0 * t * t * (1.0 + t * t), 1e-11));
        // pole order at π/2 is m+n+k = 4
        match &monomial {
            NumericFun::TanPoly(p) => assert_eq!(p.degree(), Some(4)),
            other => panic!("expected tan polynomial, got {}", other.id()),
        }
    }

    #[test]
    fn built_sin_monomial_matches_contour_derivative() {
        let spec = MonomialSpec::new(1, 2, 1).unwrap();
        let monomial = build_numeric_monomial(&NumericFun::Sin, &spec).unwrap();
        // direct: sin z · (sin² z)' = sin z · 2 sin z cos z
        let z = Complex64::new(0.8, -0.4);
        let direct = z.sin() * 2.0 * z.sin() * z.cos();
        assert!(close(monomial.eval(z), direct, 1e-11));
    }

    #[test]
    fn tan_sample_zeros_and_poles() {
        let zeros = NumericFun::Tan
            .zeros_in_disk(&Shift::from(GaussianRational::from_integer(3)), 7.0)
            .unwrap();
        for (z, _) in &zeros {
            assert!(close(z.tan(), Complex64::new(3.0, 0.0), 1e-9));
        }
        assert!(!zeros.is_empty());
        let poles = NumericFun::Tan.poles_in_disk(7.0).unwrap();
        // ±π/2, ±3π/2, ±5π/2 ≈ ±7.85 > 7 → 4 poles
        assert_eq!(poles.len(), 4);
    }

    #[test]
    fn rational_zeros_exact_and_float_paths_agree() {
        let f = RationalFunction::new(
            Polynomial::new(
                [-1i64, 0, 1]
                    .iter()
                    .map(|&n| GaussianRational::from_integer(n))
                    .collect(),
            ),
            Polynomial::new(
                [0i64, 1]
                    .iter()
                    .map(|&n| GaussianRational::from_integer(n))
                    .collect(),
            ),
        )
        .unwrap();
        let nf = NumericFun::Rational(f);
        let exact = nf
            .zeros_in_disk(&Shift::from(GaussianRational::from_integer(3)), 10.0)
            .unwrap();
        let float = nf
            .zeros_in_disk(&Shift::numeric(Complex64::new(3.0, 0.0)), 10.0)
            .unwrap();
        assert_eq!(exact.len(), float.len());
        for (z, _) in exact {
            assert!(float.iter().any(|(w, _)| close(*w, z, 1e-7)));
        }
    }

    #[test]
    fn sin_zero_enumerator_against_localized_eval() {
        let c = Complex64::new(0.5, 0.25);
        let zeros = NumericFun::Sin
            .zeros_in_disk(&Shift::numeric(c), 9.0)
            .unwrap();
        assert!(!zeros.is_empty());
        for (z, _) in zeros {
            assert!((z.sin() - c).norm() < 1e-9);
        }
        // double zeros at c = 1
        let doubles = NumericFun::Sin
            .zeros_in_disk(&Shift::from(GaussianRational::one()), 9.0)
            .unwrap();
        for (z, mult) in doubles {
            assert_eq!(mult, 2);
            assert!((z.sin() - Complex64::new(1.0, 0.0)).norm() < 1e-9);
        }
    }
}
