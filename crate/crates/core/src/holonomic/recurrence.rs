use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use super::poly::IntPoly;
use crate::error::{Error, Result};

/// `a(n+1) = sum_{i < order} (num[i](n) / den[i](n)) a(n - i)`, applied for
/// every `n >= n_min`, with `a(0..=n_min)` given as seeds.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceSpec {
    coeff_num: Vec<IntPoly>,
    coeff_den: Vec<IntPoly>,
    n_min: usize,
    seeds: Vec<BigInt>,
}

impl RecurrenceSpec {
    pub fn new(
        coeffs: Vec<(IntPoly, IntPoly)>,
        n_min: usize,
        seeds: Vec<BigInt>,
    ) -> Result<Self> {
        let order = coeffs.len();
        if order == 0 {
            return Err(Error::InvalidRecurrence("order must be at least 1".into()));
        }
        if n_min + 1 < order {
            return Err(Error::InvalidRecurrence(format!(
                "order {order} needs n_min >= {}, got {n_min}",
                order - 1
            )));
        }
        if seeds.len() != n_min + 1 {
            return Err(Error::InvalidRecurrence(format!(
                "expected {} seeds, got {}",
                n_min + 1,
                seeds.len()
            )));
        }
        for (_, den) in &coeffs {
            if let Some(&root) = den.integer_roots_from(n_min as i64).first() {
                return Err(Error::SingularRecurrence(root));
            }
        }
        let (coeff_num, coeff_den) = coeffs.into_iter().unzip();
        Ok(RecurrenceSpec {
            coeff_num,
            coeff_den,
            n_min,
            seeds,
        })
    }

    pub fn order(&self) -> usize {
        self.coeff_num.len()
    }

    pub fn n_min(&self) -> usize {
        self.n_min
    }

    pub fn seeds(&self) -> &[BigInt] {
        &self.seeds
    }

    /// Right-hand side at `n`, reading `a(n - i)` from `terms`.
    fn rhs(&self, n: usize, terms: &[BigInt]) -> BigRational {
        let mut acc = BigRational::zero();
        for (i, (num, den)) in self.coeff_num.iter().zip(&self.coeff_den).enumerate() {
            let a = &terms[n - i];
            if a.is_zero() {
                continue;
            }
            let ratio = BigRational::new(num.eval(n as i64), den.eval(n as i64));
            acc += ratio * BigRational::from_integer(a.clone());
        }
        acc
    }
}

/// The first `count` terms, with every computed term required to be an integer.
pub fn evaluate_recurrence(spec: &RecurrenceSpec, count: usize) -> Result<Vec<BigInt>> {
    if count <= spec.n_min {
        return Err(Error::InvalidRecurrence(format!(
            "count {count} must exceed n_min = {}",
            spec.n_min
        )));
    }
    let mut terms = spec.seeds.clone();
    for n in spec.n_min..count - 1 {
        let value = spec.rhs(n, &terms);
        if !value.is_integer() {
            return Err(Error::NonIntegralTerm {
                index: n + 1,
                value: value.to_string(),
            });
        }
        terms.push(value.to_integer());
    }
    Ok(terms)
}

/// Outcome of checking a sequence against a recurrence.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecurrenceCheck {
    /// First and last index `n + 1` whose value was predicted.
    pub range: (usize, usize),
    /// Smallest index whose value disagrees with the recurrence.
    pub first_violation: Option<usize>,
}

impl RecurrenceCheck {
    pub fn passed(&self) -> bool {
        self.first_violation.is_none()
    }
}

/// Checks `sequence[n + 1]` against the recurrence for every `n` from
/// `n_min` on, using the sequence itself for the lagged terms.
pub fn verify_recurrence(sequence: &[BigInt], spec: &RecurrenceSpec) -> Result<RecurrenceCheck> {
    if sequence.len() <= spec.order() + spec.n_min {
        return Err(Error::InvalidRecurrence(format!(
            "sequence of length {} is too short for order {} from n_min = {}",
            sequence.len(),
            spec.order(),
            spec.n_min
        )));
    }
    let first_violation = (spec.n_min..sequence.len() - 1)
        .find(|&n| spec.rhs(n, sequence) != BigRational::from_integer(sequence[n + 1].clone()))
        .map(|n| n + 1);
    Ok(RecurrenceCheck {
        range: (spec.n_min + 1, sequence.len() - 1),
        first_violation,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    fn motzkin() -> RecurrenceSpec {
        let n = IntPoly::x();
        RecurrenceSpec::new(
            vec![
                (n.mul(&IntPoly::constant(2)), IntPoly::linear(2)),
                (n.mul(&IntPoly::constant(3)), IntPoly::linear(2)),
            ],
            1,
            big(&[1, 0]),
        )
        .unwrap()
    }

    #[test]
    fn motzkin_terms() {
        let seq = evaluate_recurrence(&motzkin(), 9).unwrap();
        assert_eq!(seq, big(&[1, 0, 1, 1, 3, 6, 15, 36, 91]));
    }

    #[test]
    fn spec_validation() {
        let one = || (IntPoly::constant(1), IntPoly::constant(1));
        assert!(RecurrenceSpec::new(vec![], 0, big(&[1])).is_err());
        assert!(RecurrenceSpec::new(vec![one(), one()], 0, big(&[1])).is_err());
        assert!(RecurrenceSpec::new(vec![one()], 1, big(&[1])).is_err());
        // den = n - 3 vanishes inside the range
        let bad = RecurrenceSpec::new(vec![(IntPoly::constant(1), IntPoly::linear(-3))], 1, big(&[1, 1]));
        assert_eq!(bad, Err(Error::SingularRecurrence(3)));
        // ... but not once n_min is past the root
        assert!(RecurrenceSpec::new(
            vec![(IntPoly::constant(1), IntPoly::linear(-3))],
            4,
            big(&[1, 1, 1, 1, 1])
        )
        .is_ok());
    }

    #[test]
    fn non_integral_terms_are_rejected() {
        // a(n+1) = a(n) / 2
        let spec = RecurrenceSpec::new(vec![(IntPoly::constant(1), IntPoly::constant(2))], 0, big(&[2])).unwrap();
        assert_eq!(
            evaluate_recurrence(&spec, 3),
            Err(Error::NonIntegralTerm {
                index: 2,
                value: "1/2".into()
            })
        );
        assert!(evaluate_recurrence(&spec, 0).is_err());
    }

    #[test]
    fn verification_finds_corruption() {
        let mut seq = evaluate_recurrence(&motzkin(), 30).unwrap();
        let ok = verify_recurrence(&seq, &motzkin()).unwrap();
        assert!(ok.passed());
        assert_eq!(ok.range, (2, 29));
        seq[17] += 1;
        let bad = verify_recurrence(&seq, &motzkin()).unwrap();
        assert_eq!(bad.first_violation, Some(17));
        assert!(verify_recurrence(&seq[..2], &motzkin()).is_err());
    }
}
