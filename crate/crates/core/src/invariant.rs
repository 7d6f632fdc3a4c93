//! Singlet counting by constant-term extraction.
//!
//! `d = [z^0] (D · χ_1 ··· χ_n)` with `D` the expanded Weyl denominator.
//! The product of characters is never formed in full: only its monomials
//! `-m` for `m` in the support of `D` can pair with `D` into a constant, so
//! those are the targets handed to the pruned product, and `D` is applied
//! at the very end.

use num_bigint::BigInt;
use num_integer::binomial;
use num_traits::{One, Zero};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::characters::adjoint_character;
use crate::error::{Error, Result};
use crate::laurent::{pow_sequence_on_targets, product_with_targets, LaurentPolynomial};
use crate::roots::{build_root_system, haar_denominator, WeightVector};

/// A tensor product whose invariant dimension is wanted.
#[derive(Debug, Clone)]
pub enum InvariantQuery {
    /// `V_1 ⊗ ... ⊗ V_n` given factor by factor.
    Product {
        group_n: i64,
        characters: Vec<LaurentPolynomial>,
    },
    /// `V^{⊗n}`.
    Power {
        group_n: i64,
        base: LaurentPolynomial,
        n: i64,
    },
}

impl InvariantQuery {
    pub fn group_n(&self) -> i64 {
        match self {
            InvariantQuery::Product { group_n, .. } | InvariantQuery::Power { group_n, .. } => *group_n,
        }
    }
}

/// Weyl denominator of SU(N) and the monomials of a character product it
/// can pair with.
struct Measure {
    rank: usize,
    terms: Vec<(WeightVector, BigInt)>,
    targets: Vec<WeightVector>,
}

impl Measure {
    fn for_group(group_n: i64) -> Result<Self> {
        let rs = build_root_system(group_n)?;
        let d = haar_denominator(&rs);
        let terms: Vec<(WeightVector, BigInt)> = d.iter().map(|(e, c)| (e.clone(), c.clone())).collect();
        let targets = terms.iter().map(|(e, _)| e.neg()).collect();
        Ok(Measure {
            rank: rs.rank,
            terms,
            targets,
        })
    }

    fn check(&self, p: &LaurentPolynomial) -> Result<()> {
        if p.rank() != self.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                found: p.rank(),
            });
        }
        Ok(())
    }

    /// Pairs target coefficients (in `targets` order) with the measure.
    fn pair(&self, coeffs: &[BigInt]) -> BigInt {
        self.terms
            .iter()
            .zip(coeffs)
            .map(|((_, d), c)| d * c)
            .sum()
    }

    fn pair_poly(&self, p: &LaurentPolynomial) -> BigInt {
        let coeffs: Vec<BigInt> = self.targets.iter().map(|t| p.coefficient_of(t)).collect();
        self.pair(&coeffs)
    }
}

pub fn invariant_dimension(q: &InvariantQuery) -> Result<BigInt> {
    let measure = Measure::for_group(q.group_n())?;
    match q {
        InvariantQuery::Product { characters, .. } => {
            for c in characters {
                measure.check(c)?;
            }
            let refs: Vec<&LaurentPolynomial> = characters.iter().collect();
            let p = product_with_targets(measure.rank, &refs, &measure.targets)?;
            Ok(measure.pair_poly(&p))
        }
        InvariantQuery::Power { base, n, .. } => {
            measure.check(base)?;
            if *n < 0 {
                return Err(Error::NegativePower(*n));
            }
            let factors = vec![base; *n as usize];
            let p = product_with_targets(measure.rank, &factors, &measure.targets)?;
            Ok(measure.pair_poly(&p))
        }
    }
}

/// Invariant dimensions of `base^{⊗k}` for `k = 0..=n_max` from one pruned pass.
pub fn power_dimension_sequence(group_n: i64, base: &LaurentPolynomial, n_max: usize) -> Result<Vec<BigInt>> {
    let measure = Measure::for_group(group_n)?;
    measure.check(base)?;
    let rows = pow_sequence_on_targets(base, n_max, &measure.targets)?;
    Ok(rows.iter().map(|r| measure.pair(r)).collect())
}

/// Adjoint-power dimensions of SU(N) for `k = 0..=n_max`.
pub fn adjoint_dimension_sequence(group_n: i64, n_max: usize) -> Result<Vec<BigInt>> {
    power_dimension_sequence(group_n, &adjoint_character(group_n)?, n_max)
}

/// `sum_{r even} C(n,r) C(r,r/2) - sum_{r odd} C(n,r) C(r,(r-1)/2)`.
pub fn su2_dimension_by_binomials(n: u64) -> BigInt {
    let n_big = BigInt::from(n);
    let mut total = BigInt::zero();
    for r in 0..=n {
        let r_big = BigInt::from(r);
        let outer = binomial(n_big.clone(), r_big.clone());
        if r % 2 == 0 {
            total += outer * binomial(r_big, BigInt::from(r / 2));
        } else {
            total -= outer * binomial(r_big, BigInt::from((r - 1) / 2));
        }
    }
    total
}

/// Clebsch-Gordan ladder for SU(2): repeatedly apply `j ⊗ 1 = (j-1) ⊕ j ⊕ (j+1)`
/// (just `1` when `j = 0`) to a multiplicity vector over integer spins and read
/// off the spin-0 multiplicity.
pub fn su2_cg_oracle(n: usize) -> BigInt {
    let mut mult = vec![BigInt::zero(); n + 2];
    mult[0] = BigInt::one();
    for step in 0..n {
        let mut next = vec![BigInt::zero(); n + 2];
        for j in 0..=step {
            if mult[j].is_zero() {
                continue;
            }
            if j == 0 {
                next[1] += &mult[0];
            } else {
                next[j - 1] += &mult[j];
                next[j] += &mult[j];
                next[j + 1] += &mult[j];
            }
        }
        mult = next;
    }
    mult.swap_remove(0)
}

/// Subfactorials `D(0..=max_n)` with `D(n) = n D(n-1) + (-1)^n`.
pub fn derangement_sequence(max_n: usize) -> Vec<BigInt> {
    let mut out = Vec::with_capacity(max_n + 1);
    out.push(BigInt::one());
    for n in 1..=max_n {
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let next = &out[n - 1] * n + sign;
        out.push(next);
    }
    out
}

/// Coefficients of `(χ_adj SU(3))^n` that make up the SU(3) singlet count.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SU3Components {
    pub n: usize,
    /// constant term
    pub a1: BigInt,
    /// coefficient of `z1 z2^-2`
    pub a2: BigInt,
    /// coefficient of `z1^-3`
    pub a3: BigInt,
    /// coefficient of `z1^-2 z2^-2`
    pub a4: BigInt,
}

pub const SU3_COMPONENT_EXPONENTS: [[i64; 2]; 4] = [[0, 0], [1, -2], [-3, 0], [-2, -2]];

/// Components for every `n` in `0..=n_max` from one shared pruned power.
pub fn su3_component_sequence(n_max: usize) -> Result<Vec<SU3Components>> {
    let chi = adjoint_character(3)?;
    let targets: Vec<WeightVector> = SU3_COMPONENT_EXPONENTS.iter().map(|&e| e.into()).collect();
    let rows = pow_sequence_on_targets(&chi, n_max, &targets)?;
    Ok(rows
        .into_iter()
        .enumerate()
        .map(|(n, r)| {
            let [a1, a2, a3, a4]: [BigInt; 4] = r.try_into().expect("four targets");
            SU3Components { n, a1, a2, a3, a4 }
        })
        .collect())
}

pub fn su3_components(n: usize) -> Result<SU3Components> {
    let chi = adjoint_character(3)?;
    let targets: Vec<WeightVector> = SU3_COMPONENT_EXPONENTS.iter().map(|&e| e.into()).collect();
    let p = crate::laurent::pow_with_target(&chi, n as i64, &targets)?;
    let get = |i: usize| p.coefficient_of(&targets[i]);
    Ok(SU3Components {
        n,
        a1: get(0),
        a2: get(1),
        a3: get(2),
        a4: get(3),
    })
}

/// `a1 - 2 a2 + 2 a3 - a4`.
pub fn su3_dimension_from_components(c: &SU3Components) -> BigInt {
    &c.a1 - BigInt::from(2) * &c.a2 + BigInt::from(2) * &c.a3 - &c.a4
}

/// Adjoint-power invariant dimensions, one row per power and one column per group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DimensionTable {
    pub groups: Vec<i64>,
    pub powers: Vec<usize>,
    /// `cells[i][j]` is the dimension for `powers[i]` and `groups[j]`.
    pub cells: Vec<Vec<BigInt>>,
}

impl DimensionTable {
    pub fn get(&self, group_n: i64, n: usize) -> Option<&BigInt> {
        let j = self.groups.iter().position(|&g| g == group_n)?;
        let i = self.powers.iter().position(|&p| p == n)?;
        Some(&self.cells[i][j])
    }
}

/// Each group column is one pruned power pass; columns run in parallel and
/// are assembled in input order.
pub fn dimension_table(groups: &[i64], powers: &[usize]) -> Result<DimensionTable> {
    let n_max = powers.iter().copied().max().unwrap_or(0);
    let columns: Vec<Vec<BigInt>> = groups
        .par_iter()
        .map(|&g| adjoint_dimension_sequence(g, n_max))
        .collect::<Result<_>>()?;
    let cells = powers
        .iter()
        .map(|&n| columns.iter().map(|col| col[n].clone()).collect())
        .collect();
    Ok(DimensionTable {
        groups: groups.to_vec(),
        powers: powers.to_vec(),
        cells,
    })
}

/// One line of machine-readable dimension output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimensionRecord {
    pub group: String,
    pub rep: String,
    pub n: u64,
    pub dimension: String,
}

impl DimensionRecord {
    pub fn new(group_n: i64, rep: impl Into<String>, n: u64, dimension: &BigInt) -> Self {
        DimensionRecord {
            group: format!("SU({group_n})"),
            rep: rep.into(),
            n,
            dimension: dimension.to_string(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("record serialization is infallible")
    }
}
