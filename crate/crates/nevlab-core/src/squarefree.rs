//! Squarefree decomposition over Q(i) via Yun's gcd chain.
//!
//! Full irreducible factorization is never needed here: the number of
//! distinct complex roots of a polynomial equals the degree sum of its
//! squarefree parts, which is all the distinct-zero bookkeeping requires.

use serde::Serialize;

use crate::poly::Polynomial;
use crate::{Error, Result};

/// `p = unit · ∏ factor_i^multiplicity_i` with monic, squarefree, pairwise
/// coprime factors.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SquarefreeDecomposition {
    parts: Vec<(Polynomial, u32)>,
}

impl SquarefreeDecomposition {
    pub fn parts(&self) -> &[(Polynomial, u32)] {
        &self.parts
    }

    /// Number of distinct complex roots of the decomposed polynomial.
    pub fn distinct_root_count(&self) -> usize {
        self.parts
            .iter()
            .map(|(f, _)| f.degree().unwrap_or(0))
            .sum()
    }

    /// Largest multiplicity appearing in the decomposition (0 for a
    /// constant input).
    pub fn max_multiplicity(&self) -> u32 {
        self.parts.iter().map(|&(_, m)| m).max().unwrap_or(0)
    }

    /// The radical: monic product of the distinct squarefree factors.
    pub fn radical(&self) -> Polynomial {
        let mut acc = Polynomial::one();
        for (f, _) in &self.parts {
            acc = &acc * f;
        }
        acc
    }

    /// ∏ factor^multiplicity, equal to the input up to a nonzero constant.
    pub fn reassemble(&self) -> Polynomial {
        let mut acc = Polynomial::one();
        for (f, m) in &self.parts {
            acc = &acc * &f.pow(*m);
        }
        acc
    }
}

/// Yun's algorithm (characteristic zero). Errors on the zero polynomial;
/// constants decompose into an empty part list.
pub fn squarefree_decompose(p: &Polynomial) -> Result<SquarefreeDecomposition> {
    if p.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if p.is_constant() {
        return Ok(SquarefreeDecomposition { parts: Vec::new() });
    }
    let monic = p.make_monic()?;
    let dp = monic.derivative();
    let g = monic.gcd(&dp)?;
    if g.is_constant() {
        return Ok(SquarefreeDecomposition {
            parts: vec![(monic, 1)],
        });
    }
    let mut parts = Vec::new();
    let mut c = monic.exact_div(&g)?;
    let mut d = &dp.exact_div(&g)? - &c.derivative();
    let mut mult = 1u32;
    while !c.is_constant() {
        let a = c.gcd(&d)?;
        if !a.is_constant() {
            parts.push((a.clone(), mult));
        }
        c = c.exact_div(&a)?;
        d = &d.exact_div(&a)? - &c.derivative();
        mult += 1;
    }
    Ok(SquarefreeDecomposition { parts })
}
