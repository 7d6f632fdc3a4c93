//! Sparse multivariate Laurent polynomials with arbitrary-precision integer
//! coefficients.
//!
//! Terms live in a `BTreeMap` keyed by exponent vector, so iteration and
//! serialization are always in lexicographic exponent order. Zero
//! coefficients are never stored.
//!
//! Powers and long products that are only needed on a handful of monomials
//! go through [`pow_with_target`] / [`product_with_targets`], which prune
//! every intermediate term that can no longer reach a target.

mod engine;

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::roots::WeightVector;

pub use engine::{pow_sequence_on_targets, product_with_targets};

/// Per-variable inclusive exponent bounds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExponentWindow {
    lower: Vec<i64>,
    upper: Vec<i64>,
}

impl ExponentWindow {
    pub fn new(lower: Vec<i64>, upper: Vec<i64>) -> Result<Self> {
        if lower.len() != upper.len() {
            return Err(Error::InvalidWindow(format!(
                "bound lengths differ ({} vs {})",
                lower.len(),
                upper.len()
            )));
        }
        if let Some(i) = (0..lower.len()).find(|&i| lower[i] > upper[i]) {
            return Err(Error::InvalidWindow(format!(
                "lower[{i}] = {} exceeds upper[{i}] = {}",
                lower[i], upper[i]
            )));
        }
        Ok(ExponentWindow { lower, upper })
    }

    /// The same bounds `[lo, hi]` on every one of `rank` variables.
    pub fn uniform(rank: usize, lo: i64, hi: i64) -> Result<Self> {
        Self::new(vec![lo; rank], vec![hi; rank])
    }

    pub fn rank(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[i64] {
        &self.lower
    }

    pub fn upper(&self) -> &[i64] {
        &self.upper
    }

    pub fn contains(&self, e: &[i64]) -> bool {
        e.iter()
            .zip(self.lower.iter().zip(&self.upper))
            .all(|(x, (lo, hi))| lo <= x && x <= hi)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LaurentPolynomial {
    rank: usize,
    terms: BTreeMap<WeightVector, BigInt>,
}

fn check_rank(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::RankMismatch { expected, found })
    }
}

impl LaurentPolynomial {
    pub fn zero(rank: usize) -> Self {
        LaurentPolynomial {
            rank,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(rank: usize) -> Self {
        Self::monomial(WeightVector::zero(rank), BigInt::one())
    }

    pub fn monomial(e: WeightVector, c: BigInt) -> Self {
        let mut p = Self::zero(e.rank());
        if !c.is_zero() {
            p.terms.insert(e, c);
        }
        p
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs. Repeated
    /// exponents are summed and zero results dropped.
    pub fn from_terms<I>(rank: usize, terms: I) -> Result<Self>
    where
        I: IntoIterator<Item = (WeightVector, BigInt)>,
    {
        let mut p = Self::zero(rank);
        for (e, c) in terms {
            check_rank(rank, e.rank())?;
            p.accumulate(e, c);
        }
        Ok(p)
    }

    fn accumulate(&mut self, e: WeightVector, c: BigInt) {
        use std::collections::btree_map::Entry;
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Number of nonzero terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in lexicographic exponent order.
    pub fn iter(&self) -> impl Iterator<Item = (&WeightVector, &BigInt)> {
        self.terms.iter()
    }

    pub fn coefficient_of(&self, e: &[i64]) -> BigInt {
        // Borrowed lookup would need `Borrow<[i64]>`; the clone is cheap next to BigInt work.
        self.terms
            .get(&WeightVector(e.to_vec()))
            .cloned()
            .unwrap_or_default()
    }

    pub fn constant_term(&self) -> BigInt {
        self.coefficient_of(&vec![0; self.rank])
    }

    /// Value at `z_1 = ... = z_r = 1`, i.e. the sum of all coefficients.
    pub fn eval_at_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Sum of absolute values of the coefficients.
    pub fn l1_norm(&self) -> BigInt {
        self.terms.values().map(|c| c.abs()).sum()
    }

    /// Per-variable `(min, max)` exponents over the support; `None` for zero.
    pub fn exponent_bounds(&self) -> Option<(Vec<i64>, Vec<i64>)> {
        let mut it = self.terms.keys();
        let first = it.next()?;
        let mut lo = first.0.clone();
        let mut hi = first.0.clone();
        for e in it {
            for i in 0..self.rank {
                lo[i] = lo[i].min(e[i]);
                hi[i] = hi[i].max(e[i]);
            }
        }
        Some((lo, hi))
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        check_rank(self.rank, other.rank)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.accumulate(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        LaurentPolynomial {
            rank: self.rank,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero(self.rank);
        }
        LaurentPolynomial {
            rank: self.rank,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c * k)).collect(),
        }
    }

    /// Full product, or only the terms whose exponent lies in `window`.
    ///
    /// Out-of-window products are dropped before accumulation, so a windowed
    /// result agrees with the full product on every in-window monomial.
    pub fn mul(&self, other: &Self, window: Option<&ExponentWindow>) -> Result<Self> {
        check_rank(self.rank, other.rank)?;
        if let Some(w) = window {
            check_rank(self.rank, w.rank())?;
        }
        let mut out = Self::zero(self.rank);
        let mut e = vec![0i64; self.rank];
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                for i in 0..self.rank {
                    e[i] = a[i] + b[i];
                }
                if window.is_some_and(|w| !w.contains(&e)) {
                    continue;
                }
                out.accumulate(WeightVector(e.clone()), ca * cb);
            }
        }
        Ok(out)
    }

    /// Unpruned `self^n` by repeated squaring.
    pub fn pow(&self, n: i64) -> Result<Self> {
        if n < 0 {
            return Err(Error::NegativePower(n));
        }
        let mut result = Self::one(self.rank);
        let mut base = self.clone();
        let mut n = n as u64;
        while n > 0 {
            if n & 1 == 1 {
                result = result.mul(&base, None)?;
            }
            n >>= 1;
            if n > 0 {
                base = base.mul(&base, None)?;
            }
        }
        Ok(result)
    }

    /// Renames variables: the exponent in slot `i` moves to slot `perm[i]`.
    pub fn substitute_swap(&self, perm: &[usize]) -> Result<Self> {
        let mut seen = vec![false; self.rank];
        let valid = perm.len() == self.rank
            && perm.iter().all(|&p| p < self.rank && !std::mem::replace(&mut seen[p], true));
        if !valid {
            return Err(Error::InvalidPermutation {
                rank: self.rank,
                perm: perm.to_vec(),
            });
        }
        let terms = self.terms.iter().map(|(e, c)| {
            let mut out = vec![0; self.rank];
            for (i, &p) in perm.iter().enumerate() {
                out[p] = e[i];
            }
            (WeightVector(out), c.clone())
        });
        Self::from_terms(self.rank, terms)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("polynomial serialization is infallible")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))
    }
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.terms.iter().enumerate() {
            let is_const = e.iter().all(|&x| x == 0);
            let sign = if c.is_negative() { "-" } else { "+" };
            if k == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let mag = c.abs();
            if is_const || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            for (i, &x) in e.iter().enumerate().filter(|(_, &x)| x != 0) {
                if x == 1 {
                    write!(f, "z{}", i + 1)?;
                } else {
                    write!(f, "z{}^{}", i + 1, x)?;
                }
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermRecord {
    e: Vec<i64>,
    c: String,
}

#[derive(Serialize, Deserialize)]
struct PolyRecord {
    rank: usize,
    terms: Vec<TermRecord>,
}

impl Serialize for LaurentPolynomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        PolyRecord {
            rank: self.rank,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| TermRecord {
                    e: e.0.clone(),
                    c: c.to_string(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for LaurentPolynomial {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let rec = PolyRecord::deserialize(d)?;
        let mut terms = Vec::with_capacity(rec.terms.len());
        for t in rec.terms {
            let c: BigInt = t
                .c
                .parse()
                .map_err(|_| D::Error::custom(format!("bad coefficient {:?}", t.c)))?;
            terms.push((WeightVector(t.e), c));
        }
        LaurentPolynomial::from_terms(rec.rank, terms).map_err(D::Error::custom)
    }
}

/// `base^n` restricted to monomials that can still reach one of `targets`.
///
/// The coefficient of every target monomial is exact. `targets` are the
/// monomials of the final power that are actually needed (for a constant
/// term against a weight `D`, the negated support of `D`).
pub fn pow_with_target(
    base: &LaurentPolynomial,
    n: i64,
    targets: &[WeightVector],
) -> Result<LaurentPolynomial> {
    if n < 0 {
        return Err(Error::NegativePower(n));
    }
    let factors = vec![base; n as usize];
    product_with_targets(base.rank(), &factors, targets)
}
