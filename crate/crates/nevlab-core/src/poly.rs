//! Dense univariate polynomials over the Gaussian rationals.
//!
//! Canonical form: the coefficient of the highest power is nonzero and the
//! zero polynomial is the empty coefficient list. The degree of the zero
//! polynomial is `None` (a genuine minus-infinity sentinel), which keeps
//! the degree laws total.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::gaussian::GaussianRational;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Polynomial {
    /// `coeffs[j]` multiplies `z^j`.
    coeffs: Vec<GaussianRational>,
}

impl Polynomial {
    pub fn new(mut coeffs: Vec<GaussianRational>) -> Self {
        while coeffs.last().map_or(false, GaussianRational::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(GaussianRational::one())
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::new(vec![c])
    }

    /// The monomial `c·z^power`.
    pub fn monomial(c: GaussianRational, power: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![GaussianRational::zero(); power + 1];
        coeffs[power] = c;
        Self { coeffs }
    }

    /// The variable `z`.
    pub fn var() -> Self {
        Self::monomial(GaussianRational::one(), 1)
    }

    /// The monic linear factor `z − root`.
    pub fn linear_from_root(root: &GaussianRational) -> Self {
        Self::new(vec![-root, GaussianRational::one()])
    }

    pub fn coeffs(&self) -> &[GaussianRational] {
        &self.coeffs
    }

    pub fn coeff(&self, power: usize) -> GaussianRational {
        self.coeffs
            .get(power)
            .cloned()
            .unwrap_or_else(GaussianRational::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// `None` is the degree of the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&GaussianRational> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().map_or(false, GaussianRational::is_one)
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Divide by the leading coefficient. Errors on the zero polynomial.
    pub fn make_monic(&self) -> Result<Self> {
        let lead = self.leading().ok_or(Error::ZeroPolynomial)?;
        if lead.is_one() {
            return Ok(self.clone());
        }
        let inv = lead.inverse()?;
        Ok(self.scale(&inv))
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(j, c)| c * &GaussianRational::from_integer(j as i64))
            .collect();
        Self::new(coeffs)
    }

    pub fn eval(&self, z: &GaussianRational) -> GaussianRational {
        let mut acc = GaussianRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * z) + c;
        }
        acc
    }

    /// Horner evaluation in double precision.
    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        let mut acc = Complex64::new(0.0, 0.0);
        for c in self.coeffs.iter().rev() {
            acc = acc * z + c.to_complex64();
        }
        acc
    }

    /// log|p(z)| computed stably for |z| > 1 by pulling out the leading
    /// power, so large radii do not overflow.
    pub fn log_abs_complex(&self, z: Complex64) -> f64 {
        match self.degree() {
            None => f64::NEG_INFINITY,
            Some(d) => {
                if z.norm() <= 1.0 {
                    self.eval_complex(z).norm().ln()
                } else {
                    // p(z) = z^d · q(1/z) with q the reversed polynomial.
                    let w = 1.0 / z;
                    let mut acc = Complex64::new(0.0, 0.0);
                    for c in self.coeffs.iter() {
                        acc = acc * w + c.to_complex64();
                    }
                    d as f64 * z.norm().ln() + acc.norm().ln()
                }
            }
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        let mut e = e;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Euclidean division: `self = q·d + r` with `deg r < deg d`.
    pub fn divrem(&self, d: &Self) -> Result<(Self, Self)> {
        let dd = d.degree().ok_or(Error::DivisionByZero)?;
        let lead_inv = d.leading().unwrap().inverse()?;
        let mut rem = self.coeffs.clone();
        if rem.len() < dd + 1 {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![GaussianRational::zero(); rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            if rem[top].is_zero() {
                continue;
            }
            let factor = &rem[top] * &lead_inv;
            let shift = top - dd;
            for (j, dc) in d.coeffs.iter().enumerate() {
                let sub = dc * &factor;
                rem[shift + j] = &rem[shift + j] - &sub;
            }
            quot[shift] = factor;
        }
        rem.truncate(dd);
        Ok((Self::new(quot), Self::new(rem)))
    }

    /// Exact division; errors when the remainder is nonzero.
    pub fn exact_div(&self, d: &Self) -> Result<Self> {
        let (q, r) = self.divrem(d)?;
        if !r.is_zero() {
            return Err(Error::Invalid(format!(
                "inexact polynomial division (remainder degree {:?})",
                r.degree()
            )));
        }
        Ok(q)
    }

    pub fn divides(&self, other: &Self) -> bool {
        match other.divrem(self) {
            Ok((_, r)) => r.is_zero(),
            Err(_) => false,
        }
    }

    /// Monic greatest common divisor via the Euclidean remainder sequence,
    /// renormalizing every remainder to monic to keep coefficient growth in
    /// check. Errors when both inputs are zero.
    pub fn gcd(&self, other: &Self) -> Result<Self> {
        if self.is_zero() && other.is_zero() {
            return Err(Error::GcdOfZeros);
        }
        if self.is_zero() {
            return other.make_monic();
        }
        if other.is_zero() {
            return self.make_monic();
        }
        let mut a = self.make_monic()?;
        let mut b = other.make_monic()?;
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
        }
        loop {
            let (_, r) = a.divrem(&b)?;
            if r.is_zero() {
                return Ok(b);
            }
            a = b;
            b = r.make_monic()?;
        }
    }

    /// p(shift + scale·z), used for exact rescaling. Horner in the
    /// substituted linear polynomial.
    pub fn compose_linear(&self, shift: &GaussianRational, scale: &GaussianRational) -> Self {
        let sub = Self::new(vec![shift.clone(), scale.clone()]);
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * &sub) + &Self::constant(c.clone());
        }
        acc
    }

    /// Multiplicity of `root` as a zero of `self` (0 when not a root).
    pub fn root_multiplicity(&self, root: &GaussianRational) -> Result<u32> {
        if self.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        let factor = Self::linear_from_root(root);
        let mut mult = 0;
        let mut current = self.clone();
        while current.eval(root).is_zero() {
            let (q, r) = current.divrem(&factor)?;
            debug_assert!(r.is_zero());
            mult += 1;
            current = q;
        }
        Ok(mult)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (j, c) in short.coeffs.iter().enumerate() {
            coeffs[j] = &coeffs[j] + c;
        }
        Polynomial::new(coeffs)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        self + &(-rhs)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs =
            vec![GaussianRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                let prod = a * b;
                coeffs[i + j] = &coeffs[i + j] + &prod;
            }
        }
        Polynomial::new(coeffs)
    }
}

macro_rules! forward_poly_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for Polynomial {
            type Output = Polynomial;
            fn $method(self, rhs: Polynomial) -> Polynomial {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_poly_owned!(Add, add);
forward_poly_owned!(Sub, sub);
forward_poly_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (j, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "({c})")?,
                1 => write!(f, "({c})z")?,
                _ => write!(f, "({c})z^{j}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
