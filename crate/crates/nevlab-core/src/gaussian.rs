//! Gaussian rationals: complex numbers with rational real and imaginary
//! parts, the exact coefficient field for everything in this crate.
//!
//! Text encoding is `a/b`, `a/b+c/di` or `a/b-c/di` with decimal integers
//! and positive denominators; output is always reduced, input may be
//! unreduced. Integer shorthands (`3`, `3-2i`) are accepted on input.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::{BigInt, Sign};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

/// An element of Q(i). `Ratio` keeps both parts reduced with positive
/// denominator, so structural equality is field equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    re: BigRational,
    im: BigRational,
}

impl GaussianRational {
    pub fn new(re: BigRational, im: BigRational) -> Self {
        Self { re, im }
    }

    pub fn from_rational(re: BigRational) -> Self {
        Self {
            re,
            im: BigRational::zero(),
        }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(BigInt::from(n)))
    }

    /// Convenience constructor from numerator/denominator pairs.
    pub fn from_parts(re_num: i64, re_den: i64, im_num: i64, im_den: i64) -> Self {
        Self {
            re: BigRational::new(BigInt::from(re_num), BigInt::from(re_den)),
            im: BigRational::new(BigInt::from(im_num), BigInt::from(im_den)),
        }
    }

    pub fn zero() -> Self {
        Self::from_integer(0)
    }

    pub fn one() -> Self {
        Self::from_integer(1)
    }

    pub fn i() -> Self {
        Self::from_parts(0, 1, 1, 1)
    }

    pub fn re(&self) -> &BigRational {
        &self.re
    }

    pub fn im(&self) -> &BigRational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    /// True when the imaginary part vanishes.
    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        Self {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// |z|² = re² + im², exact.
    pub fn norm_sqr(&self) -> BigRational {
        &self.re * &self.re + &self.im * &self.im
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let n = self.norm_sqr();
        Ok(Self {
            re: &self.re / &n,
            im: -&self.im / &n,
        })
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
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

    /// Double-precision image, safe for arbitrarily large numerators and
    /// denominators (overflow saturates to ±∞ rather than producing NaN).
    pub fn to_complex64(&self) -> Complex64 {
        Complex64::new(rational_to_f64(&self.re), rational_to_f64(&self.im))
    }
}

/// Convert a big rational to f64 without the inf/inf trap of converting
/// numerator and denominator separately.
pub fn rational_to_f64(q: &BigRational) -> f64 {
    let n = q.numer();
    let d = q.denom();
    if n.is_zero() {
        return 0.0;
    }
    let negative = n.sign() == Sign::Minus;
    let n = n.abs();
    let exp = n.bits() as i64 - d.bits() as i64;
    if exp > 1100 {
        return if negative { f64::NEG_INFINITY } else { f64::INFINITY };
    }
    if exp < -1100 {
        return 0.0;
    }
    // Scale so the integer quotient carries ~64 significant bits.
    let shift = 64 - exp;
    let scaled = if shift >= 0 {
        n << shift as u64
    } else {
        n >> (-shift) as u64
    };
    let q64 = (scaled / d).to_f64().unwrap_or(f64::INFINITY);
    let v = q64 * (-shift as f64).exp2();
    if negative {
        -v
    } else {
        v
    }
}

impl fmt::Display for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.re.numer(), self.re.denom())?;
        if !self.im.is_zero() {
            let sign = if self.im.is_negative() { '-' } else { '+' };
            let a = self.im.abs();
            write!(f, "{}{}/{}i", sign, a.numer(), a.denom())?;
        }
        Ok(())
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn parse_fraction(s: &str) -> Result<BigRational> {
    let bad = || Error::Parse(format!("invalid rational `{s}`"));
    let (num, den) = match s.split_once('/') {
        Some((n, d)) => (n, Some(d)),
        None => (s, None),
    };
    let n: BigInt = num.parse().map_err(|_| bad())?;
    let d: BigInt = match den {
        Some(d) => {
            // Denominators are unsigned in the encoding.
            if d.is_empty() || !d.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            d.parse().map_err(|_| bad())?
        }
        None => BigInt::one(),
    };
    if d.is_zero() {
        return Err(Error::Parse(format!("zero denominator in `{s}`")));
    }
    Ok(BigRational::new(n, d))
}

impl FromStr for GaussianRational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Err(Error::Parse("empty Gaussian rational".into()));
        }
        // Split at the sign that separates real and imaginary parts; skip
        // index 0 so a leading sign stays with the real part.
        let mut split = None;
        for (idx, ch) in s.char_indices().skip(1) {
            if ch == '+' || ch == '-' {
                split = Some(idx);
                break;
            }
        }
        match split {
            None => {
                // Pure real (`a/b`); a trailing `i` is not valid here
                // because the encoding always spells out the real part.
                Ok(Self::from_rational(parse_fraction(s)?))
            }
            Some(idx) => {
                let re = parse_fraction(&s[..idx])?;
                let imag = &s[idx..];
                let body = imag
                    .strip_suffix('i')
                    .ok_or_else(|| Error::Parse(format!("missing `i` suffix in `{s}`")))?;
                let im = parse_fraction(body)?;
                Ok(Self::new(re, im))
            }
        }
    }
}

impl Serialize for GaussianRational {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for GaussianRational {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

impl Add for &GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
        }
    }
}

impl Sub for &GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
        }
    }
}

impl Mul for &GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl Neg for &GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

impl Div for &GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: &GaussianRational) -> GaussianRational {
        let inv = rhs.inverse().expect("division by zero Gaussian rational");
        self * &inv
    }
}

macro_rules! forward_owned {
    ($trait:ident, $method:ident) => {
        impl $trait for GaussianRational {
            type Output = GaussianRational;
            fn $method(self, rhs: GaussianRational) -> GaussianRational {
                (&self).$method(&rhs)
            }
        }
    };
}

forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);
forward_owned!(Div, div);

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gr(s: &str) -> GaussianRational {
        s.parse().unwrap()
    }

    #[test]
    fn encoding_round_trip() {
        for s in ["3/2", "0/1+1/1i", "-7/3-2/5i", "0/1", "-1/4"] {
            assert_eq!(gr(s).to_string(), s);
        }
    }

    #[test]
    fn parse_reduces() {
        assert_eq!(gr("2/4").to_string(), "1/2");
        assert_eq!(gr("6/3+4/8i").to_string(), "2/1+1/2i");
        assert_eq!(gr("-4/8").to_string(), "-1/2");
    }

    #[test]
    fn parse_integer_shorthand() {
        assert_eq!(gr("3"), GaussianRational::from_integer(3));
        assert_eq!(gr("-2+1i"), GaussianRational::from_parts(-2, 1, 1, 1));
    }

    #[test]
    fn parse_rejects_garbage() {
        for s in ["", "1/0", "1/-2", "i", "1/1+i", "1/1+2/3", "2/3x"] {
            assert!(s.parse::<GaussianRational>().is_err(), "accepted `{s}`");
        }
    }

    #[test]
    fn field_arithmetic() {
        let a = gr("1/2+1/3i");
        let b = gr("-2/1+1/1i");
        let prod = &a * &b;
        // (1/2 + i/3)(-2 + i) = -1 - 1/3 + i(1/2 - 2/3)
        assert_eq!(prod, gr("-4/3-1/6i"));
        let back = &prod / &b;
        assert_eq!(back, a);
        assert_eq!(&a - &a, GaussianRational::zero());
    }

    #[test]
    fn inverse_of_i() {
        assert_eq!(GaussianRational::i().inverse().unwrap(), gr("0/1-1/1i"));
        assert!(GaussianRational::zero().inverse().is_err());
    }

    #[test]
    fn pow_matches_repeated_mul() {
        let a = gr("1/2+1/1i");
        let mut acc = GaussianRational::one();
        for e in 0..8 {
            assert_eq!(a.pow(e), acc);
            acc = &acc * &a;
        }
    }

    #[test]
    fn big_ratio_to_f64_avoids_nan() {
        let huge = BigInt::from(10).pow(400);
        let r = BigRational::new(huge.clone() * 3, huge);
        assert!((rational_to_f64(&r) - 3.0).abs() < 1e-12);
        let tiny = BigRational::new(BigInt::one(), BigInt::from(10).pow(400));
        assert_eq!(rational_to_f64(&tiny), 0.0);
    }

    #[test]
    fn to_complex64() {
        let z = gr("1/2-3/4i").to_complex64();
        assert_eq!(z, Complex64::new(0.5, -0.75));
    }
}
