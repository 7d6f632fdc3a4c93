//! Target-pruned products of Laurent polynomials.
//!
//! After `k` of `n` factors have been multiplied, a monomial `e` can only
//! influence a target `t` if `t - e` lies in the Minkowski sum of the
//! remaining factors' supports. We over-approximate that sum by its bounding
//! box, which gives a per-variable window
//!
//! ```text
//! t_min - sum_{j >= k} max_j  <=  e  <=  t_max - sum_{j >= k} min_j
//! ```
//!
//! intersected with the box reachable from the origin by the first `k`
//! factors. Every window is contained in one global box, so exponents are
//! packed into a single `u64` key with one bit field per variable, and a
//! shifted monomial is a plain wrapping add on the key.
//!
//! Coefficients are accumulated in `i128` when the product of the factors'
//! L1 norms fits, and in `BigInt` otherwise.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use rustc_hash::FxHashMap;

use super::{ExponentWindow, LaurentPolynomial};
use crate::error::{Error, Result};
use crate::roots::WeightVector;

trait Coeff: Clone {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn from_big(b: &BigInt) -> Self;
    fn into_big(self) -> BigInt;
    fn add_mul(&mut self, a: &Self, b: &Self);
}

impl Coeff for i128 {
    fn zero() -> Self {
        0
    }
    fn is_zero(&self) -> bool {
        *self == 0
    }
    fn from_big(b: &BigInt) -> Self {
        b.to_i128().expect("coefficient bound checked before dispatch")
    }
    fn into_big(self) -> BigInt {
        BigInt::from(self)
    }
    #[inline]
    fn add_mul(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
}

impl Coeff for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn from_big(b: &BigInt) -> Self {
        b.clone()
    }
    fn into_big(self) -> BigInt {
        self
    }
    #[inline]
    fn add_mul(&mut self, a: &Self, b: &Self) {
        *self += a * b;
    }
}

/// Bit-field layout of exponent vectors inside a `u64`.
struct Packing {
    lower: Vec<i64>,
    shifts: Vec<u32>,
    masks: Vec<u64>,
}

impl Packing {
    fn new(lower: &[i64], upper: &[i64]) -> Option<Self> {
        let mut shifts = Vec::with_capacity(lower.len());
        let mut masks = Vec::with_capacity(lower.len());
        let mut shift = 0u32;
        for (lo, hi) in lower.iter().zip(upper) {
            let width = (hi - lo) as u64 + 1;
            let bits = 64 - (width - 1).leading_zeros();
            let bits = bits.max(1);
            if shift + bits > 64 {
                return None;
            }
            shifts.push(shift);
            masks.push(if bits == 64 { u64::MAX } else { (1u64 << bits) - 1 });
            shift += bits;
        }
        Some(Packing {
            lower: lower.to_vec(),
            shifts,
            masks,
        })
    }

    fn pack(&self, e: &[i64]) -> u64 {
        e.iter()
            .enumerate()
            .map(|(i, &x)| ((x - self.lower[i]) as u64) << self.shifts[i])
            .fold(0, |a, b| a | b)
    }

    /// Key offset for adding `d` to an in-range exponent.
    fn delta(&self, d: &[i64]) -> u64 {
        d.iter()
            .enumerate()
            .map(|(i, &x)| (x as u64).wrapping_shl(self.shifts[i]))
            .fold(0u64, |a, b| a.wrapping_add(b))
    }

    #[inline]
    fn unpack_into(&self, key: u64, out: &mut [i64]) {
        for (i, slot) in out.iter_mut().enumerate() {
            *slot = ((key >> self.shifts[i]) & self.masks[i]) as i64 + self.lower[i];
        }
    }

    fn in_range(&self, e: &[i64], upper: &[i64]) -> bool {
        e.iter()
            .zip(self.lower.iter().zip(upper))
            .all(|(x, (lo, hi))| lo <= x && x <= hi)
    }
}

/// Windows for each stage of a pruned product.
struct Plan {
    rank: usize,
    /// `windows[k]` bounds the partial product after `k` factors.
    windows: Vec<(Vec<i64>, Vec<i64>)>,
    hull_lo: Vec<i64>,
    hull_hi: Vec<i64>,
}

impl Plan {
    /// `None` when some stage window is empty, i.e. no target is reachable.
    fn new(rank: usize, factors: &[&LaurentPolynomial], targets: &[WeightVector]) -> Option<Self> {
        let n = factors.len();
        let bounds: Vec<(Vec<i64>, Vec<i64>)> =
            factors.iter().map(|f| f.exponent_bounds()).collect::<Option<_>>()?;

        let mut t_lo = targets.first()?.0.clone();
        let mut t_hi = t_lo.clone();
        for t in targets {
            for i in 0..rank {
                t_lo[i] = t_lo[i].min(t[i]);
                t_hi[i] = t_hi[i].max(t[i]);
            }
        }

        let mut rem_lo = vec![vec![0i64; rank]; n + 1];
        let mut rem_hi = vec![vec![0i64; rank]; n + 1];
        for k in (0..n).rev() {
            for i in 0..rank {
                rem_lo[k][i] = rem_lo[k + 1][i] + bounds[k].0[i];
                rem_hi[k][i] = rem_hi[k + 1][i] + bounds[k].1[i];
            }
        }

        let mut pre_lo = vec![0i64; rank];
        let mut pre_hi = vec![0i64; rank];
        let mut windows = Vec::with_capacity(n + 1);
        let mut hull_lo = vec![i64::MAX; rank];
        let mut hull_hi = vec![i64::MIN; rank];
        for k in 0..=n {
            if k > 0 {
                for i in 0..rank {
                    pre_lo[i] += bounds[k - 1].0[i];
                    pre_hi[i] += bounds[k - 1].1[i];
                }
            }
            let mut lo = vec![0i64; rank];
            let mut hi = vec![0i64; rank];
            for i in 0..rank {
                lo[i] = (t_lo[i] - rem_hi[k][i]).max(pre_lo[i]);
                hi[i] = (t_hi[i] - rem_lo[k][i]).min(pre_hi[i]);
                if lo[i] > hi[i] {
                    return None;
                }
                hull_lo[i] = hull_lo[i].min(lo[i]);
                hull_hi[i] = hull_hi[i].max(hi[i]);
            }
            windows.push((lo, hi));
        }
        Some(Plan {
            rank,
            windows,
            hull_lo,
            hull_hi,
        })
    }
}

struct PackedFactor<C> {
    terms: Vec<(Vec<i64>, u64, C)>,
}

fn pack_factor<C: Coeff>(p: &LaurentPolynomial, packing: &Packing) -> PackedFactor<C> {
    PackedFactor {
        terms: p
            .iter()
            .map(|(e, c)| (e.0.clone(), packing.delta(e), C::from_big(c)))
            .collect(),
    }
}

fn run<C: Coeff>(
    plan: &Plan,
    packing: &Packing,
    factors: &[&LaurentPolynomial],
    mut on_stage: impl FnMut(usize, &FxHashMap<u64, C>),
) -> FxHashMap<u64, C> {
    let rank = plan.rank;
    let mut state: FxHashMap<u64, C> = FxHashMap::default();
    state.insert(packing.pack(&vec![0; rank]), C::from_big(&BigInt::from(1)));
    on_stage(0, &state);

    let mut cache: Vec<(usize, PackedFactor<C>)> = Vec::new();
    let mut e = vec![0i64; rank];
    for (k, factor) in factors.iter().enumerate() {
        // Factors are usually repeated references to one base polynomial.
        let ptr = *factor as *const LaurentPolynomial as usize;
        let idx = match cache.iter().position(|(p, _)| *p == ptr) {
            Some(i) => i,
            None => {
                cache.push((ptr, pack_factor(factor, packing)));
                cache.len() - 1
            }
        };
        let packed = &cache[idx].1;
        let (lo, hi) = &plan.windows[k + 1];

        let mut next: FxHashMap<u64, C> =
            FxHashMap::with_capacity_and_hasher(state.len() * 2, Default::default());
        for (&key, c) in &state {
            packing.unpack_into(key, &mut e);
            'terms: for (d, dk, fc) in &packed.terms {
                for i in 0..rank {
                    let x = e[i] + d[i];
                    if x < lo[i] || x > hi[i] {
                        continue 'terms;
                    }
                }
                next.entry(key.wrapping_add(*dk))
                    .or_insert_with(C::zero)
                    .add_mul(c, fc);
            }
        }
        next.retain(|_, c| !c.is_zero());
        state = next;
        on_stage(k + 1, &state);
    }
    state
}

fn fits_i128(factors: &[&LaurentPolynomial]) -> bool {
    let limit = BigInt::from(i128::MAX);
    let mut bound = BigInt::from(1);
    for f in factors {
        bound *= f.l1_norm();
        if bound > limit {
            return false;
        }
    }
    true
}

fn collect_poly<C: Coeff>(rank: usize, packing: &Packing, state: FxHashMap<u64, C>) -> LaurentPolynomial {
    let mut e = vec![0i64; rank];
    let terms = state.into_iter().map(|(key, c)| {
        packing.unpack_into(key, &mut e);
        (WeightVector(e.clone()), c.into_big())
    });
    LaurentPolynomial::from_terms(rank, terms).expect("ranks agree")
}

/// Windowed fallback through the map-based product, used when the exponent
/// box does not fit in 64 bits.
fn product_slow(
    plan: &Plan,
    factors: &[&LaurentPolynomial],
    mut on_stage: impl FnMut(usize, &LaurentPolynomial),
) -> Result<LaurentPolynomial> {
    let mut acc = LaurentPolynomial::one(plan.rank);
    on_stage(0, &acc);
    for (k, f) in factors.iter().enumerate() {
        let (lo, hi) = &plan.windows[k + 1];
        let w = ExponentWindow::new(lo.clone(), hi.clone())?;
        acc = acc.mul(f, Some(&w))?;
        on_stage(k + 1, &acc);
    }
    Ok(acc)
}

fn validate(rank: usize, factors: &[&LaurentPolynomial], targets: &[WeightVector]) -> Result<()> {
    for f in factors {
        if f.rank() != rank {
            return Err(Error::RankMismatch {
                expected: rank,
                found: f.rank(),
            });
        }
    }
    for t in targets {
        if t.rank() != rank {
            return Err(Error::RankMismatch {
                expected: rank,
                found: t.rank(),
            });
        }
    }
    Ok(())
}

/// Product of `factors`, exact on every monomial in `targets` and pruned of
/// terms that cannot reach any target.
pub fn product_with_targets(
    rank: usize,
    factors: &[&LaurentPolynomial],
    targets: &[WeightVector],
) -> Result<LaurentPolynomial> {
    validate(rank, factors, targets)?;
    let Some(plan) = Plan::new(rank, factors, targets) else {
        return Ok(LaurentPolynomial::zero(rank));
    };
    let Some(packing) = Packing::new(&plan.hull_lo, &plan.hull_hi) else {
        return product_slow(&plan, factors, |_, _| {});
    };
    Ok(if fits_i128(factors) {
        let state = run::<i128>(&plan, &packing, factors, |_, _| {});
        collect_poly(rank, &packing, state)
    } else {
        let state = run::<BigInt>(&plan, &packing, factors, |_, _| {});
        collect_poly(rank, &packing, state)
    })
}

/// Coefficients of `targets` in `base^k` for every `k` in `0..=n_max`, from
/// a single pruned pass. `result[k][j]` is the coefficient of `targets[j]`.
///
/// One pass serves every `k` only if the base reaches both signs (or zero)
/// in each variable; otherwise the powers are computed one by one.
pub fn pow_sequence_on_targets(
    base: &LaurentPolynomial,
    n_max: usize,
    targets: &[WeightVector],
) -> Result<Vec<Vec<BigInt>>> {
    let rank = base.rank();
    validate(rank, &[base], targets)?;
    let zeros = || vec![<BigInt as Zero>::zero(); targets.len()];

    let single_pass = base
        .exponent_bounds()
        .is_some_and(|(lo, hi)| lo.iter().zip(&hi).all(|(a, b)| *a <= 0 && *b >= 0));
    if !single_pass {
        return (0..=n_max)
            .map(|k| {
                let factors = vec![base; k];
                let p = product_with_targets(rank, &factors, targets)?;
                Ok(targets.iter().map(|t| p.coefficient_of(t)).collect())
            })
            .collect();
    }

    let factors = vec![base; n_max];
    let mut out = vec![zeros(); n_max + 1];
    let Some(plan) = Plan::new(rank, &factors, targets) else {
        return Ok(out);
    };
    let Some(packing) = Packing::new(&plan.hull_lo, &plan.hull_hi) else {
        product_slow(&plan, &factors, |k, p| {
            out[k] = targets.iter().map(|t| p.coefficient_of(t)).collect();
        })?;
        return Ok(out);
    };

    let target_keys: Vec<Option<u64>> = targets
        .iter()
        .map(|t| {
            (packing.in_range(t, &plan.hull_hi)).then(|| packing.pack(t))
        })
        .collect();
    fn read<C: Coeff>(keys: &[Option<u64>], state: &FxHashMap<u64, C>) -> Vec<BigInt> {
        keys.iter()
            .map(|k| {
                k.and_then(|k| state.get(&k))
                    .map(|c| c.clone().into_big())
                    .unwrap_or_default()
            })
            .collect()
    }
    if fits_i128(&factors) {
        run::<i128>(&plan, &packing, &factors, |k, s| out[k] = read(&target_keys, s));
    } else {
        run::<BigInt>(&plan, &packing, &factors, |k, s| out[k] = read(&target_keys, s));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn poly(rank: usize, terms: &[(&[i64], i64)]) -> LaurentPolynomial {
        LaurentPolynomial::from_terms(
            rank,
            terms.iter().map(|(e, c)| (WeightVector(e.to_vec()), BigInt::from(*c))),
        )
        .unwrap()
    }

    #[test]
    fn packing_round_trips_and_shifts() {
        let p = Packing::new(&[-5, -1, 0], &[5, 300, 0]).unwrap();
        let mut out = [0i64; 3];
        for e in [[-5, -1, 0], [5, 300, 0], [0, 7, 0]] {
            p.unpack_into(p.pack(&e), &mut out);
            assert_eq!(out, e);
        }
        let key = p.pack(&[1, 10, 0]).wrapping_add(p.delta(&[-3, -11, 0]));
        p.unpack_into(key, &mut out);
        assert_eq!(out, [-2, -1, 0]);
    }

    #[test]
    fn oversized_box_has_no_packing() {
        assert!(Packing::new(&[0; 5], &[1 << 13; 5]).is_none());
    }

    #[test]
    fn slow_path_agrees_with_packed_path() {
        let base = poly(1, &[(&[1], 1), (&[0], 2), (&[-1], 1)]);
        let factors = vec![&base; 7];
        let targets = [WeightVector::from([0]), WeightVector::from([3])];
        let plan = Plan::new(1, &factors, &targets).unwrap();
        let slow = product_slow(&plan, &factors, |_, _| {}).unwrap();
        let fast = product_with_targets(1, &factors, &targets).unwrap();
        for t in &targets {
            assert_eq!(slow.coefficient_of(t), fast.coefficient_of(t));
        }
        // (z + 2 + 1/z)^7 = (z^(1/2) + z^(-1/2))^14, constant term C(14, 7)
        assert_eq!(fast.coefficient_of(&[0]), BigInt::from(3432));
    }

    #[test]
    fn unreachable_targets_give_zero() {
        let base = poly(1, &[(&[1], 1)]);
        let p = product_with_targets(1, &[&base, &base], &[WeightVector::from([5])]).unwrap();
        assert!(p.is_zero());
    }

    #[test]
    fn one_sided_base_uses_per_power_path() {
        let base = poly(1, &[(&[1], 1), (&[2], 1)]);
        let seq = pow_sequence_on_targets(&base, 4, &[WeightVector::from([4])]).unwrap();
        let direct: Vec<BigInt> = (0..=4)
            .map(|k| base.pow(k).unwrap().coefficient_of(&[4]))
            .collect();
        assert_eq!(seq.iter().map(|r| r[0].clone()).collect::<Vec<_>>(), direct);
    }

    #[test]
    fn big_coefficients_switch_to_bigint() {
        // 8^50 overflows i128.
        let base = poly(1, &[(&[1], 3), (&[0], 2), (&[-1], 3)]);
        let seq = pow_sequence_on_targets(&base, 50, &[WeightVector::from([0])]).unwrap();
        let full = base.pow(50).unwrap();
        assert_eq!(seq[50][0], full.constant_term());
        assert!(seq[50][0] > BigInt::from(i128::MAX) / 1_000_000);
    }
}
