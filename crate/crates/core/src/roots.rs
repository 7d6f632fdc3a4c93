//! Root data for the A-series (SU(N)) in the Dynkin basis.
//!
//! Exponents of the torus variables `z_1 .. z_r` are Dynkin-basis components,
//! so a root `alpha` contributes the monomial `z^alpha`.

use std::ops::{Deref, DerefMut};

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;

/// Integer vector in the Dynkin basis; also a Laurent monomial exponent.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVector(pub Vec<i64>);

impl WeightVector {
    pub fn zero(rank: usize) -> Self {
        WeightVector(vec![0; rank])
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn neg(&self) -> Self {
        WeightVector(self.0.iter().map(|x| -x).collect())
    }

    pub fn add(&self, other: &Self) -> Self {
        debug_assert_eq!(self.rank(), other.rank());
        WeightVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Deref for WeightVector {
    type Target = [i64];

    fn deref(&self) -> &[i64] {
        &self.0
    }
}

impl DerefMut for WeightVector {
    fn deref_mut(&mut self) -> &mut [i64] {
        &mut self.0
    }
}

impl From<Vec<i64>> for WeightVector {
    fn from(v: Vec<i64>) -> Self {
        WeightVector(v)
    }
}

impl<const K: usize> From<[i64; K]> for WeightVector {
    fn from(v: [i64; K]) -> Self {
        WeightVector(v.to_vec())
    }
}

/// The root system A_{N-1} of SU(N).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootSystemA {
    pub n_group: usize,
    pub rank: usize,
    /// Positive roots `alpha_i + ... + alpha_j`, ordered lexicographically by `(i, j)`.
    pub positive_roots: Vec<WeightVector>,
    pub weyl_vector: WeightVector,
    pub weyl_order: BigInt,
}

/// Simple root `alpha_i` (0-based): 2 at `i`, -1 at its neighbours.
pub fn simple_root(rank: usize, i: usize) -> WeightVector {
    let mut v = vec![0; rank];
    v[i] = 2;
    if i > 0 {
        v[i - 1] = -1;
    }
    if i + 1 < rank {
        v[i + 1] = -1;
    }
    WeightVector(v)
}

pub fn build_root_system(n_group: i64) -> Result<RootSystemA> {
    if n_group < 2 {
        return Err(Error::InvalidRank(n_group));
    }
    let n = n_group as usize;
    let rank = n - 1;
    let simple: Vec<WeightVector> = (0..rank).map(|i| simple_root(rank, i)).collect();

    let mut positive_roots = Vec::with_capacity(n * (n - 1) / 2);
    for i in 0..rank {
        let mut acc = WeightVector::zero(rank);
        for root in &simple[i..] {
            acc = acc.add(root);
            positive_roots.push(acc.clone());
        }
    }

    let weyl_order = (1..=n).fold(BigInt::from(1), |acc, k| acc * k);
    Ok(RootSystemA {
        n_group: n,
        rank,
        positive_roots,
        weyl_vector: WeightVector(vec![1; rank]),
        weyl_order,
    })
}

impl RootSystemA {
    /// All roots, positive ones first, then their negatives in the same order.
    pub fn roots(&self) -> impl Iterator<Item = WeightVector> + '_ {
        self.positive_roots
            .iter()
            .cloned()
            .chain(self.positive_roots.iter().map(WeightVector::neg))
    }
}

/// Reduced Haar weight `prod_{alpha > 0} (1 - z^alpha)`, fully expanded.
pub fn haar_denominator(rs: &RootSystemA) -> LaurentPolynomial {
    let one = LaurentPolynomial::one(rs.rank);
    rs.positive_roots.iter().fold(one.clone(), |acc, alpha| {
        let factor = one
            .sub(&LaurentPolynomial::monomial(alpha.clone(), BigInt::from(1)))
            .expect("ranks agree");
        acc.mul(&factor, None).expect("ranks agree")
    })
}
