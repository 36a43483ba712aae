//! Rational functions over Q(i) in canonical reduced form.
//!
//! Invariants: the denominator is monic and nonzero, numerator and
//! denominator are coprime. Canonical form makes structural equality agree
//! with equality of functions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use serde::Serialize;

use crate::gaussian::GaussianRational;
use crate::poly::Polynomial;
use crate::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct RationalFunction {
    num: Polynomial,
    den: Polynomial,
}

impl RationalFunction {
    /// Canonical constructor: reduces by the gcd and normalizes the
    /// denominator to monic. Errors when the denominator is zero.
    pub fn new(num: Polynomial, den: Polynomial) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if num.is_zero() {
            return Ok(Self {
                num: Polynomial::zero(),
                den: Polynomial::one(),
            });
        }
        let g = num.gcd(&den)?;
        let (num, den) = if g.is_constant() {
            (num, den)
        } else {
            (num.exact_div(&g)?, den.exact_div(&g)?)
        };
        Ok(Self::from_coprime(num, den))
    }

    /// Internal constructor for inputs already known coprime; only fixes
    /// the monic normalization.
    fn from_coprime(num: Polynomial, den: Polynomial) -> Self {
        debug_assert!(!den.is_zero());
        debug_assert!(
            num.is_zero() || num.gcd(&den).map_or(false, |g| g.is_constant()),
            "from_coprime called with a common factor"
        );
        if num.is_zero() {
            return Self {
                num: Polynomial::zero(),
                den: Polynomial::one(),
            };
        }
        if den.is_monic() {
            return Self { num, den };
        }
        let lead_inv = den
            .leading()
            .expect("nonzero denominator")
            .inverse()
            .expect("nonzero leading coefficient");
        Self {
            num: num.scale(&lead_inv),
            den: den.scale(&lead_inv),
        }
    }

    pub fn from_polynomial(p: Polynomial) -> Self {
        Self {
            num: p,
            den: Polynomial::one(),
        }
    }

    pub fn constant(c: GaussianRational) -> Self {
        Self::from_polynomial(Polynomial::constant(c))
    }

    pub fn zero() -> Self {
        Self::from_polynomial(Polynomial::zero())
    }

    pub fn one() -> Self {
        Self::from_polynomial(Polynomial::one())
    }

    /// The identity function z.
    pub fn var() -> Self {
        Self::from_polynomial(Polynomial::var())
    }

    pub fn num(&self) -> &Polynomial {
        &self.num
    }

    pub fn den(&self) -> &Polynomial {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }

    pub fn is_polynomial(&self) -> bool {
        self.den.is_constant()
    }

    /// max(deg num, deg den), the degree of the map to the sphere; `None`
    /// for the zero function's numerator part.
    pub fn map_degree(&self) -> usize {
        self.num
            .degree()
            .unwrap_or(0)
            .max(self.den.degree().unwrap_or(0))
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::from_coprime(self.den.clone(), self.num.clone()))
    }

    pub fn div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn pow(&self, e: u32) -> Self {
        if e == 0 {
            return Self::one();
        }
        // Powers of a reduced fraction stay reduced.
        Self::from_coprime(self.num.pow(e), self.den.pow(e))
    }

    /// Derivative via the quotient rule, using the pole structure to avoid
    /// a full re-reduction: for reduced u/v with d = gcd(v, v′), the
    /// derivative is exactly (u′v − uv′)/d over v·(v/d), already coprime.
    pub fn derivative(&self) -> Self {
        if self.den.is_constant() {
            return Self::from_polynomial(self.num.derivative());
        }
        let u = &self.num;
        let v = &self.den;
        let du = u.derivative();
        let dv = v.derivative();
        let raw = &(&du * v) - &(u * &dv);
        if raw.is_zero() {
            return Self::zero();
        }
        let d = v.gcd(&dv).expect("nonzero denominator");
        let num = raw.exact_div(&d).expect("gcd(v, v') divides u'v - uv'");
        let den = v * &v.exact_div(&d).expect("gcd divides v");
        Self::from_coprime(num, den)
    }

    pub fn kth_derivative(&self, k: u32) -> Self {
        let mut f = self.clone();
        for _ in 0..k {
            f = f.derivative();
        }
        f
    }

    /// Exact value; `None` at a pole.
    pub fn eval(&self, z: &GaussianRational) -> Option<GaussianRational> {
        let den = self.den.eval(z);
        if den.is_zero() {
            return None;
        }
        Some(&self.num.eval(z) / &den)
    }

    pub fn eval_complex(&self, z: Complex64) -> Complex64 {
        self.num.eval_complex(z) / self.den.eval_complex(z)
    }

    /// log|f(z)| computed stably at large |z|.
    pub fn log_abs_complex(&self, z: Complex64) -> f64 {
        self.num.log_abs_complex(z) - self.den.log_abs_complex(z)
    }

    /// Order at a point: positive = zero order, negative = pole order,
    /// 0 = regular nonzero value. Errors on the zero function.
    pub fn order_at(&self, z0: &GaussianRational) -> Result<i64> {
        if self.is_zero() {
            return Err(Error::ZeroFunction);
        }
        let up = self.num.root_multiplicity(z0)? as i64;
        if up > 0 {
            return Ok(up);
        }
        let down = self.den.root_multiplicity(z0)? as i64;
        Ok(-down)
    }

    /// f(shift + scale·z); requires scale ≠ 0 so the substitution is
    /// invertible and coprimality is preserved.
    pub fn compose_linear(
        &self,
        shift: &GaussianRational,
        scale: &GaussianRational,
    ) -> Result<Self> {
        if scale.is_zero() {
            return Err(Error::Invalid("composition scale must be nonzero".into()));
        }
        let num = self.num.compose_linear(shift, scale);
        let den = self.den.compose_linear(shift, scale);
        Ok(Self::from_coprime(num, den))
    }

    pub fn scale(&self, c: &GaussianRational) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self::from_coprime(self.num.scale(c), self.den.clone())
    }
}

impl Add for &RationalFunction {
    type Output = RationalFunction;
    fn add(self, rhs: &RationalFunction) -> RationalFunction {
        // Adding a polynomial (constant denominators included) cannot
        // introduce a common factor with the other denominator.
        if rhs.den.is_constant() {
            let num = &self.num + &(&rhs.num * &self.den);
            return RationalFunction::from_coprime(num, self.den.clone());
        }
        if self.den.is_constant() {
            return rhs + self;
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        let den = &self.den * &rhs.den;
        RationalFunction::new(num, den).expect("nonzero denominator")
    }
}

impl Sub for &RationalFunction {
    type Output = RationalFunction;
    fn sub(self, rhs: &RationalFunction) -> RationalFunction {
        self + &(-rhs)
    }
}

impl Neg for &RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        RationalFunction {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Mul for &RationalFunction {
    type Output = RationalFunction;
    fn mul(self, rhs: &RationalFunction) -> RationalFunction {
        if self.is_zero() || rhs.is_zero() {
            return RationalFunction::zero();
        }
        // Cross-cancel: with both inputs reduced, removing gcd(num₁, den₂)
        // and gcd(num₂, den₁) leaves a reduced product.
        let g1 = self.num.gcd(&rhs.den).expect("nonzero inputs");
        let g2 = rhs.num.gcd(&self.den).expect("nonzero inputs");
        let n1 = self.num.exact_div(&g1).expect("gcd divides");
        let d2 = rhs.den.exact_div(&g1).expect("gcd divides");
        let n2 = rhs.num.exact_div(&g2).expect("gcd divides");
        let d1 = self.den.exact_div(&g2).expect("gcd divides");
        RationalFunction::from_coprime(&n1 * &n2, &d1 * &d2)
    }
}

macro_rules! forward_rf_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for RationalFunction {
            type Output = RationalFunction;
            fn $method(self, rhs: RationalFunction) -> RationalFunction {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_rf_owned!(Add, add);
forward_rf_owned!(Sub, sub);
forward_rf_owned!(Mul, mul);

impl Neg for RationalFunction {
    type Output = RationalFunction;
    fn neg(self) -> RationalFunction {
        -&self
    }
}

impl fmt::Display for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_constant() {
            write!(f, "{}", self.num)
        } else {
            write!(f, "[{}] / [{}]", self.num, self.den)
        }
    }
}

impl fmt::Debug for RationalFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
