use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

/// Dense integer polynomial in one variable, lowest degree first.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct IntPoly(Vec<i64>);

impl IntPoly {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPoly(coeffs)
    }

    pub fn constant(c: i64) -> Self {
        Self::new(vec![c])
    }

    /// The polynomial `x`.
    pub fn x() -> Self {
        Self::new(vec![0, 1])
    }

    /// `x + c`
    pub fn linear(c: i64) -> Self {
        Self::new(vec![c, 1])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return IntPoly::default();
        }
        let mut out = vec![0i64; self.0.len() + other.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in other.0.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn product<'a>(factors: impl IntoIterator<Item = &'a IntPoly>) -> Self {
        factors
            .into_iter()
            .fold(Self::constant(1), |acc, f| acc.mul(f))
    }

    pub fn pow(&self, k: u32) -> Self {
        (0..k).fold(Self::constant(1), |acc, _| acc.mul(self))
    }

    pub fn eval(&self, x: i64) -> BigInt {
        let x = BigInt::from(x);
        self.0
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, &c| acc * &x + c)
    }

    /// All integer roots `r >= from`.
    ///
    /// An integer root of `x^j q(x)` with `q(0) != 0` is either 0 (when
    /// `j > 0`) or divides `q(0)`.
    pub fn integer_roots_from(&self, from: i64) -> Vec<i64> {
        if self.is_zero() {
            return vec![from];
        }
        let j = self.0.iter().position(|&c| c != 0).unwrap_or(0);
        let c0 = self.0[j].unsigned_abs();
        let mut candidates = Vec::new();
        if j > 0 {
            candidates.push(0);
        }
        let mut d = 1u64;
        while d * d <= c0 {
            if c0.is_multiple_of(d) {
                for v in [d, c0 / d] {
                    candidates.push(v as i64);
                    candidates.push(-(v as i64));
                }
            }
            d += 1;
        }
        candidates.sort_unstable();
        candidates.dedup();
        candidates
            .into_iter()
            .filter(|&r| r >= from && self.eval(r).is_zero())
            .collect()
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, &c) in self.0.iter().enumerate().rev().filter(|(_, &c)| c != 0) {
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let m = c.unsigned_abs();
            match (k, m) {
                (0, _) => write!(f, "{m}")?,
                (1, 1) => write!(f, "x")?,
                (1, _) => write!(f, "{m}x")?,
                (_, 1) => write!(f, "x^{k}")?,
                _ => write!(f, "{m}x^{k}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_and_eval() {
        // (n + 3)^2 (3n^2 + n - 6)
        let p = IntPoly::linear(3).pow(2).mul(&IntPoly::new(vec![-6, 1, 3]));
        assert_eq!(p.eval(2), BigInt::from(25 * 8));
        assert_eq!(p.degree(), 4);
        assert_eq!(IntPoly::new(vec![1, 0, 0]), IntPoly::constant(1));
        assert_eq!(IntPoly::new(vec![-1, 0, 2]).to_string(), "2x^2 - 1");
        assert_eq!(IntPoly::default().to_string(), "0");
    }

    #[test]
    fn integer_roots() {
        // n^3 + 4n^2 + n - 6 = (n - 1)(n + 2)(n + 3)
        let p = IntPoly::new(vec![-6, 1, 4, 1]);
        assert_eq!(p.integer_roots_from(i64::MIN), vec![-3, -2, 1]);
        assert_eq!(p.integer_roots_from(0), vec![1]);
        assert_eq!(p.integer_roots_from(2), Vec::<i64>::new());
        assert_eq!(IntPoly::new(vec![0, 0, 1, 1]).integer_roots_from(-5), vec![-1, 0]);
    }
}
