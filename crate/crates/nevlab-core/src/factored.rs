//! Rational functions given by their zero/pole data:
//! `A · ∏ (z − zero_i)^{m_i} / ∏ (z − pole_h)^{l_h}` with all sites
//! pairwise distinct. This is the input format for the structural checks
//! and the shape the fuzz harness draws from.
//!
//! JSON schema:
//! `{"constant": "<gr>", "zeros": [["<gr>", mult], ...], "poles": [...]}`.

use serde::{Deserialize, Serialize};

use crate::gaussian::GaussianRational;
use crate::poly::Polynomial;
use crate::ratfun::RationalFunction;
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FactoredRational {
    constant: GaussianRational,
    zeros: Vec<(GaussianRational, u32)>,
    poles: Vec<(GaussianRational, u32)>,
}

impl FactoredRational {
    pub fn new(
        constant: GaussianRational,
        zeros: Vec<(GaussianRational, u32)>,
        poles: Vec<(GaussianRational, u32)>,
    ) -> Result<Self> {
        let f = Self {
            constant,
            zeros,
            poles,
        };
        f.validate()?;
        Ok(f)
    }

    /// Check the structural invariants; deserialized values must pass
    /// through here before use.
    pub fn validate(&self) -> Result<()> {
        if self.constant.is_zero() {
            return Err(Error::Invalid("leading constant must be nonzero".into()));
        }
        let all: Vec<&GaussianRational> = self
            .zeros
            .iter()
            .chain(self.poles.iter())
            .map(|(root, _)| root)
            .collect();
        for (i, a) in all.iter().enumerate() {
            for b in &all[i + 1..] {
                if a == b {
                    return Err(Error::Invalid(format!(
                        "sites must be pairwise distinct, `{a}` repeats"
                    )));
                }
            }
        }
        for (_, m) in self.zeros.iter().chain(self.poles.iter()) {
            if *m == 0 {
                return Err(Error::Invalid("multiplicities must be positive".into()));
            }
        }
        Ok(())
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let f: Self =
            serde_json::from_str(s).map_err(|e| Error::Parse(format!("bad function spec: {e}")))?;
        f.validate()?;
        Ok(f)
    }

    pub fn constant(&self) -> &GaussianRational {
        &self.constant
    }

    pub fn zeros(&self) -> &[(GaussianRational, u32)] {
        &self.zeros
    }

    pub fn poles(&self) -> &[(GaussianRational, u32)] {
        &self.poles
    }

    /// Number of distinct zero sites (s).
    pub fn zero_sites(&self) -> usize {
        self.zeros.len()
    }

    /// Number of distinct pole sites (t).
    pub fn pole_sites(&self) -> usize {
        self.poles.len()
    }

    /// Total zero multiplicity (M = Σ mᵢ ≥ s).
    pub fn total_zero_multiplicity(&self) -> u64 {
        self.zeros.iter().map(|&(_, m)| m as u64).sum()
    }

    /// Total pole multiplicity (N = Σ l_h ≥ t).
    pub fn total_pole_multiplicity(&self) -> u64 {
        self.poles.iter().map(|&(_, m)| m as u64).sum()
    }

    pub fn is_constant(&self) -> bool {
        self.zeros.is_empty() && self.poles.is_empty()
    }

    /// Raise to the n-th power by scaling every multiplicity.
    pub fn pow(&self, n: u32) -> Self {
        Self {
            constant: self.constant.pow(n),
            zeros: self.zeros.iter().map(|(r, m)| (r.clone(), m * n)).collect(),
            poles: self.poles.iter().map(|(r, m)| (r.clone(), m * n)).collect(),
        }
    }

    /// Expand to the canonical numerator/denominator form. The result is
    /// coprime by the distinct-sites invariant, so no reduction runs.
    pub fn expand(&self) -> RationalFunction {
        let num = expand_product(&self.zeros).scale(&self.constant);
        let den = expand_product(&self.poles);
        RationalFunction::new(num, den).expect("denominator is a product of monic factors")
    }
}

fn expand_product(sites: &[(GaussianRational, u32)]) -> Polynomial {
    let mut acc = Polynomial::one();
    for (root, mult) in sites {
        acc = &acc * &Polynomial::linear_from_root(root).pow(*mult);
    }
    acc
}
