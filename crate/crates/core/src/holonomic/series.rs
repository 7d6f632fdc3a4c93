//! Truncated power series over the rationals.
//!
//! A series carries its coefficients `c_0 ..= c_T`; `T` is the truncation
//! order, and every operation returns the largest order it can vouch for.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::poly::IntPoly;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TruncatedSeries {
    coeffs: Vec<BigRational>,
}

impl TruncatedSeries {
    /// Coefficients `c_0 ..= c_T`; the truncation order is `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        assert!(!coeffs.is_empty(), "a truncated series needs at least c_0");
        TruncatedSeries { coeffs }
    }

    pub fn from_integers<'a>(coeffs: impl IntoIterator<Item = &'a BigInt>) -> Self {
        Self::new(coeffs.into_iter().cloned().map(BigRational::from_integer).collect())
    }

    pub fn zero(order: usize) -> Self {
        Self::new(vec![BigRational::zero(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        Self::from_poly(&IntPoly::constant(1), order)
    }

    pub fn from_poly(p: &IntPoly, order: usize) -> Self {
        let mut coeffs = vec![BigRational::zero(); order + 1];
        for (c, slot) in p.coeffs().iter().zip(coeffs.iter_mut()) {
            *slot = BigRational::from_integer(BigInt::from(*c));
        }
        Self::new(coeffs)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &BigRational {
        &self.coeffs[k]
    }

    pub fn truncate(&self, order: usize) -> Self {
        Self::new(self.coeffs[..=order.min(self.order())].to_vec())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient, if any is known.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Integer coefficients, or `None` if some coefficient is fractional.
    pub fn to_integers(&self) -> Option<Vec<BigInt>> {
        self.coeffs
            .iter()
            .map(|c| c.is_integer().then(|| c.to_integer()))
            .collect()
    }

    pub fn add(&self, other: &Self) -> Self {
        let t = self.order().min(other.order());
        Self::new((0..=t).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let t = self.order().min(other.order());
        Self::new((0..=t).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect())
    }

    pub fn scale(&self, k: &BigRational) -> Self {
        Self::new(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Cauchy product truncated at the smaller order.
    pub fn mul(&self, other: &Self) -> Self {
        let t = self.order().min(other.order());
        let mut out = vec![BigRational::zero(); t + 1];
        for (i, a) in self.coeffs[..=t].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=t - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Self::new(out)
    }

    /// Product with a polynomial; the order is unchanged.
    pub fn mul_poly(&self, p: &IntPoly) -> Self {
        self.mul(&Self::from_poly(p, self.order()))
    }

    /// Formal derivative; the order drops by one.
    pub fn derivative(&self) -> Result<Self> {
        if self.order() == 0 {
            return Err(Error::InsufficientOrder { have: 0, need: 1 });
        }
        Ok(Self::new(
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(k, c)| c * BigInt::from(k))
                .collect(),
        ))
    }

    /// Multiplicative inverse; needs a nonzero constant term.
    pub fn inverse(&self) -> Result<Self> {
        let c0 = &self.coeffs[0];
        if c0.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let inv0 = c0.recip();
        let mut out: Vec<BigRational> = Vec::with_capacity(self.coeffs.len());
        out.push(inv0.clone());
        for n in 1..=self.order() {
            let mut acc = BigRational::zero();
            for k in 1..=n {
                acc += &self.coeffs[k] * &out[n - k];
            }
            out.push(-acc * &inv0);
        }
        Ok(Self::new(out))
    }

    /// Square root with constant term 1, by Newton iteration
    /// `t <- (t + s / t) / 2`, doubling the number of correct terms per step.
    pub fn sqrt(&self) -> Result<Self> {
        if !self.coeffs[0].is_one() {
            return Err(Error::UnsupportedBranch(self.coeffs[0].to_string()));
        }
        let half = BigRational::new(BigInt::one(), BigInt::from(2));
        let mut t = Self::one(0);
        let mut known = 0usize;
        while known < self.order() {
            known = (2 * known + 1).min(self.order());
            let s = self.truncate(known);
            let t_ext = t.extend_to(known);
            t = t_ext.add(&s.mul(&t_ext.inverse()?)).scale(&half);
        }
        Ok(t)
    }

    /// Pads with zero coefficients up to `order` (only for Newton seeds).
    fn extend_to(&self, order: usize) -> Self {
        let mut c = self.coeffs.clone();
        c.resize(order + 1, BigRational::zero());
        Self::new(c)
    }

    /// `num / den`. A common power of `x` is cancelled first, so `den` may
    /// vanish at 0 as long as `num` vanishes to at least the same order; the
    /// result order drops by that power.
    pub fn div(&self, den: &Self) -> Result<Self> {
        let v = den.valuation().ok_or(Error::DivisionByZero)?;
        let num_v = self.valuation().unwrap_or(usize::MAX);
        if num_v < v {
            return Err(Error::NonDivisible { num: num_v, den: v });
        }
        let t = self.order().min(den.order());
        if v > t {
            return Err(Error::InsufficientOrder { have: t, need: v });
        }
        let shifted_num = Self::new(self.coeffs[v..=t].to_vec());
        let shifted_den = Self::new(den.coeffs[v..=t].to_vec());
        Ok(shifted_num.mul(&shifted_den.inverse()?))
    }
}

impl fmt::Display for TruncatedSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "({c})x")?,
                _ => write!(f, "({c})x^{k}")?,
            }
        }
        if first {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ints(v: &[i64], order: usize) -> TruncatedSeries {
        TruncatedSeries::from_poly(&IntPoly::new(v.to_vec()), order)
    }

    fn r(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    #[test]
    fn products() {
        assert_eq!(ints(&[1, 1], 5).mul(&ints(&[1, -1], 5)), ints(&[1, 0, -1], 5));
        assert!(ints(&[3, 1, 4], 6).mul(&TruncatedSeries::zero(6)).is_zero());
        let geometric = TruncatedSeries::new(vec![r(1); 11]);
        assert_eq!(geometric.mul(&ints(&[1, -1], 10)), TruncatedSeries::one(10));
    }

    #[test]
    fn order_propagation() {
        let a = ints(&[1, 2], 7);
        let b = ints(&[1], 4);
        assert_eq!(a.add(&b).order(), 4);
        assert_eq!(a.mul(&b).order(), 4);
        assert_eq!(a.derivative().unwrap().order(), 6);
        assert!(TruncatedSeries::one(0).derivative().is_err());
    }

    #[test]
    fn square_roots() {
        assert_eq!(TruncatedSeries::one(8).sqrt().unwrap(), TruncatedSeries::one(8));
        assert_eq!(ints(&[1, 2, 1], 9).sqrt().unwrap(), ints(&[1, 1], 9));

        let s = ints(&[1, -2, -3], 12);
        let t = s.sqrt().unwrap();
        assert_eq!(t.mul(&t), s);
        let head: Vec<BigRational> = t.coeffs()[..4].to_vec();
        assert_eq!(head, vec![r(1), r(-1), r(-2), r(-2)]);

        assert_eq!(
            ints(&[4, 1], 3).sqrt(),
            Err(Error::UnsupportedBranch("4".into()))
        );
    }

    #[test]
    fn divisions() {
        let x = ints(&[0, 1], 6);
        assert_eq!(ints(&[0, 1, 1], 6).div(&x).unwrap(), ints(&[1, 1], 5));
        let s = ints(&[2, 3, 5, 7], 6);
        assert_eq!(s.div(&s).unwrap(), TruncatedSeries::one(6));
        assert_eq!(
            ints(&[1, 1], 6).div(&x),
            Err(Error::NonDivisible { num: 0, den: 1 })
        );
        assert_eq!(s.div(&TruncatedSeries::zero(6)), Err(Error::DivisionByZero));
    }

    #[test]
    fn display() {
        assert_eq!(ints(&[1, 0, -1], 2).to_string(), "1 + (-1)x^2 + O(x^3)");
    }

    proptest! {
        #[test]
        fn sqrt_squares_back(tail in prop::collection::vec(-20i64..=20, 1..10), den in 1i64..6) {
            let mut c = vec![r(1)];
            c.extend(tail.iter().map(|&t| BigRational::new(t.into(), den.into())));
            let s = TruncatedSeries::new(c);
            let t = s.sqrt().unwrap();
            prop_assert_eq!(t.order(), s.order());
            prop_assert_eq!(t.mul(&t), s);
        }

        #[test]
        fn division_inverts_multiplication(
            a in prop::collection::vec(-9i64..=9, 1..8),
            b in prop::collection::vec(-9i64..=9, 1..8),
            shift in 0usize..3,
        ) {
            prop_assume!(a[0] != 0);
            let mut shifted = vec![0; shift];
            shifted.extend(&a);
            let den = ints(&shifted, 12);
            let num = ints(&b, 12).mul(&den);
            let q = num.div(&den).unwrap();
            prop_assert_eq!(q.order(), 12 - shift);
            prop_assert_eq!(q, ints(&b, 12 - shift));
        }
    }
}
