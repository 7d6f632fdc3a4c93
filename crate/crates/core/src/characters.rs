//! Weyl characters as Laurent polynomials.
//!
//! Only the fundamental and adjoint characters of SU(N) are built in. Any
//! other representation enters as an explicit weight multiset, usually read
//! from a JSON weight file:
//!
//! ```json
//! {"rank": 1, "label": "adjoint SU(2)", "weights": [{"w": [2], "m": 1}, {"w": [0], "m": 1}, {"w": [-2], "m": 1}]}
//! ```

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::roots::{build_root_system, WeightVector};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WeightEntry {
    pub w: WeightVector,
    pub m: u64,
}

/// A representation given by its weights and their multiplicities.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterSpec {
    pub rank: usize,
    #[serde(default)]
    pub label: String,
    pub weights: Vec<WeightEntry>,
}

impl CharacterSpec {
    pub fn from_json(s: &str) -> Result<Self> {
        let spec: CharacterSpec =
            serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("spec serialization is infallible")
    }

    pub fn dimension(&self) -> u64 {
        self.weights.iter().map(|w| w.m).sum()
    }

    pub fn validate(&self) -> Result<()> {
        if let Some(bad) = self.weights.iter().find(|w| w.w.rank() != self.rank) {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: bad.w.rank(),
            });
        }
        if self.weights.iter().any(|w| w.m == 0) {
            return Err(Error::InvalidCharacter("multiplicities must be positive".into()));
        }
        if self.dimension() == 0 {
            return Err(Error::InvalidCharacter("empty weight multiset".into()));
        }
        Ok(())
    }
}

/// Character of the defining representation of SU(N):
/// `z_1 + sum_{k=2}^{N-1} z_k / z_{k-1} + 1 / z_{N-1}`.
pub fn fundamental_character(n_group: i64) -> Result<LaurentPolynomial> {
    if n_group < 2 {
        return Err(Error::InvalidRank(n_group));
    }
    let rank = (n_group - 1) as usize;
    let weights = (0..=rank).map(|k| {
        let mut w = vec![0; rank];
        if k < rank {
            w[k] = 1;
        }
        if k > 0 {
            w[k - 1] = -1;
        }
        (WeightVector(w), BigInt::from(1))
    });
    LaurentPolynomial::from_terms(rank, weights)
}

/// Character of the adjoint representation: `(N - 1) + sum over all roots z^alpha`.
pub fn adjoint_character(n_group: i64) -> Result<LaurentPolynomial> {
    let rs = build_root_system(n_group)?;
    let cartan = (WeightVector::zero(rs.rank), BigInt::from(rs.rank));
    let roots = rs.roots().map(|a| (a, BigInt::from(1)));
    LaurentPolynomial::from_terms(rs.rank, std::iter::once(cartan).chain(roots))
}

pub fn character_from_weights(spec: &CharacterSpec) -> Result<LaurentPolynomial> {
    spec.validate()?;
    LaurentPolynomial::from_terms(
        spec.rank,
        spec.weights.iter().map(|w| (w.w.clone(), BigInt::from(w.m))),
    )
}
