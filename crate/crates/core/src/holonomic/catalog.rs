//! Recurrences and differential equations satisfied by the SU(2) adjoint
//! singlet counts and the four SU(3) components.
//!
//! | family  | recurrence valid from | ODE order |
//! |---------|-----------------------|-----------|
//! | SU(2)   | n = 1                 | 1 (inhomogeneous) |
//! | a1      | n = 1                 | 2 |
//! | a2      | n = 1                 | 4 |
//! | a3      | n = 2                 | 4 |
//! | a4      | n = 2                 | 5 |
//!
//! The a2 recurrence divides by `n`, the a3 one by `n (n - 1)(n + 2)(n + 3)`
//! and the second a4 coefficient by `3n^3 - 2n^2 - 7n + 6 = (n - 1)(3n^2 + n - 6)`,
//! which fixes the starting indices above.

use num_bigint::BigInt;

use super::ode::OdeSpec;
use super::poly::IntPoly;
use super::recurrence::RecurrenceSpec;
use super::series::TruncatedSeries;
use crate::error::Result;

fn p(c: &[i64]) -> IntPoly {
    IntPoly::new(c.to_vec())
}

fn prod(fs: &[IntPoly]) -> IntPoly {
    IntPoly::product(fs)
}

/// The sequences with a known recurrence / ODE pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Family {
    /// SU(2) adjoint singlets (Motzkin sums).
    Su2,
    /// SU(3) constant term (Franel numbers).
    A1,
    A2,
    A3,
    A4,
}

impl Family {
    pub const ALL: [Family; 5] = [Family::Su2, Family::A1, Family::A2, Family::A3, Family::A4];

    pub fn name(self) -> &'static str {
        match self {
            Family::Su2 => "motzkin",
            Family::A1 => "franel",
            Family::A2 => "a2",
            Family::A3 => "a3",
            Family::A4 => "a4",
        }
    }

    /// First `n` at which the recurrence is applied.
    pub fn n_min(self) -> usize {
        match self {
            Family::Su2 | Family::A1 | Family::A2 => 1,
            Family::A3 | Family::A4 => 2,
        }
    }

    /// `(numerator, denominator)` for the lag-0 and lag-1 coefficients.
    fn coefficients(self) -> Vec<(IntPoly, IntPoly)> {
        let n = IntPoly::x();
        let n1 = IntPoly::linear(1);
        let n2 = IntPoly::linear(2);
        let n3 = IntPoly::linear(3);
        let c = IntPoly::constant;
        match self {
            // a(n+1) = n/(n+2) (2 a(n) + 3 a(n-1))
            Family::Su2 => vec![
                (prod(&[c(2), n.clone()]), n2.clone()),
                (prod(&[c(3), n]), n2),
            ],
            Family::A1 => vec![
                (p(&[2, 7, 7]), n1.pow(2)),
                (prod(&[c(8), n.pow(2)]), n1.pow(2)),
            ],
            Family::A2 => {
                let d1 = prod(&[n2.pow(2), p(&[1, 3])]);
                vec![
                    (prod(&[n1.clone(), p(&[8, 30, 49, 21])]), prod(&[n.clone(), d1.clone()])),
                    (prod(&[c(8), n, n1, p(&[4, 3])]), d1),
                ]
            }
            Family::A3 => {
                let cubic = p(&[-6, 1, 4, 1]);
                vec![
                    (prod(&[n1.pow(2), p(&[-2, 7, 7])]), prod(&[n.clone(), cubic.clone()])),
                    (prod(&[c(8), n, n1.pow(2)]), cubic),
                ]
            }
            Family::A4 => vec![
                (
                    prod(&[n1.clone(), p(&[36, 116, 91, 21])]),
                    prod(&[n3.pow(2), p(&[-6, 1, 3])]),
                ),
                (
                    prod(&[c(8), n.pow(2), n1, p(&[-2, 7, 3])]),
                    prod(&[n3.pow(2), p(&[6, -7, -2, 3])]),
                ),
            ],
        }
    }

    /// The recurrence with seeds `a(0..=n_min)`.
    pub fn recurrence(self, seeds: &[BigInt]) -> Result<RecurrenceSpec> {
        RecurrenceSpec::new(self.coefficients(), self.n_min(), seeds.to_vec())
    }

    /// The differential equation satisfied by `sum_n a(n) x^n`.
    pub fn ode(self) -> OdeSpec {
        let spec = match self {
            // (x - 2x^2 - 3x^3) f' + (1 - 3x^2) f = 1
            Family::Su2 => OdeSpec::new(vec![p(&[1, 0, -3]), p(&[0, 1, -2, -3])], IntPoly::constant(1)),
            // x(x+1)(8x-1) f'' + (24x^2 + 14x - 1) f' + 2(4x+1) f = 0
            Family::A1 => OdeSpec::homogeneous(vec![
                p(&[2, 8]),
                p(&[-1, 14, 24]),
                prod(&[IntPoly::x(), IntPoly::linear(1), p(&[-1, 8])]),
            ]),
            Family::A2 => OdeSpec::homogeneous(vec![
                p(&[2, -8, -112]),
                p(&[0, -2, -208, -848]),
                p(&[0, 0, 19, -436, -968]),
                p(&[0, 0, 0, 19, -196, -296]),
                p(&[0, 0, 0, 0, 3, -21, -24]),
            ]),
            Family::A3 => OdeSpec::homogeneous(vec![
                p(&[4, 2, -32]),
                p(&[0, -4, -50, -256]),
                p(&[0, 0, 2, -131, -304]),
                p(&[0, 0, 0, 6, -63, -96]),
                p(&[0, 0, 0, 0, 1, -7, -8]),
            ]),
            Family::A4 => OdeSpec::homogeneous(vec![
                p(&[32, 36, -128]),
                p(&[0, 22, -36, -2176]),
                p(&[0, 0, -38, -1182, -4384]),
                p(&[0, 0, 0, 55, -1166, -2400]),
                p(&[0, 0, 0, 0, 31, -301, -440]),
                p(&[0, 0, 0, 0, 0, 3, -21, -24]),
            ]),
        };
        spec.expect("catalog equations are well formed")
    }
}

/// `(-1 + 3x + S) / (2x S)` with `S = sqrt(1 - 2x - 3x^2)`, expanded to
/// `order`. Both numerator and denominator vanish at `x = 0`, so the
/// quotient is formed at `order + 1` and the division cancels one power of `x`.
pub fn su2_closed_form(order: usize) -> Result<TruncatedSeries> {
    let t = order + 1;
    let s = TruncatedSeries::from_poly(&p(&[1, -2, -3]), t).sqrt()?;
    let num = TruncatedSeries::from_poly(&p(&[-1, 3]), t).add(&s);
    let den = s.mul_poly(&p(&[0, 2]));
    num.div(&den)
}

/// Solutions with a pole at 0 that the a3 and a4 equations also admit.
pub fn residue_candidates() -> Vec<(Family, i64, BigInt)> {
    vec![(Family::A3, -1, BigInt::from(1)), (Family::A4, -2, BigInt::from(-1))]
}

#[cfg(test)]
mod tests {
    use super::super::{apply_ode, apply_to_monomial, evaluate_recurrence};
    use super::*;

    fn big(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn recurrences_reproduce_published_lists() {
        let lists: [(Family, &[i64]); 5] = [
            (Family::Su2, &[1, 0, 1, 1, 3, 6, 15, 36, 91, 232, 603, 1585, 4213]),
            (Family::A1, &[1, 2, 10, 56, 346, 2252, 15184, 104960, 739162, 5280932, 38165260]),
            (Family::A2, &[0, 1, 6, 39, 260, 1780, 12432, 88207, 633768, 4600566, 33680900]),
            (Family::A3, &[0, 0, 2, 18, 144, 1100, 8280, 62034, 464576, 3484296, 26190900]),
            (Family::A4, &[0, 0, 1, 12, 106, 860, 6735, 51912, 397180, 3029112, 23078100]),
        ];
        for (fam, list) in lists {
            let seeds = big(&list[..=fam.n_min()]);
            let spec = fam.recurrence(&seeds).unwrap();
            assert_eq!(evaluate_recurrence(&spec, list.len()).unwrap(), big(list), "{fam:?}");
        }
    }

    #[test]
    fn first_recurrence_steps() {
        let a = evaluate_recurrence(&Family::A1.recurrence(&big(&[1, 2])).unwrap(), 3).unwrap();
        assert_eq!(a[2], BigInt::from(10));
        let a = evaluate_recurrence(&Family::A4.recurrence(&big(&[0, 0, 1])).unwrap(), 4).unwrap();
        assert_eq!(a[3], BigInt::from(12));
    }

    #[test]
    fn singular_starts_are_rejected() {
        use crate::error::Error;
        let too_early = |f: Family, n_min: usize| {
            RecurrenceSpec::new(f.coefficients(), n_min, vec![BigInt::from(0); n_min + 1])
        };
        assert_eq!(too_early(Family::A2, 0).unwrap_err(), Error::InvalidRecurrence("order 2 needs n_min >= 1, got 0".into()));
        assert_eq!(too_early(Family::A3, 1).unwrap_err(), Error::SingularRecurrence(1));
        assert_eq!(too_early(Family::A4, 1).unwrap_err(), Error::SingularRecurrence(1));
    }

    #[test]
    fn closed_form_series() {
        let f = su2_closed_form(14).unwrap();
        assert_eq!(f.order(), 14);
        assert_eq!(
            f.to_integers().unwrap(),
            big(&[1, 0, 1, 1, 3, 6, 15, 36, 91, 232, 603, 1585, 4213, 11298, 30537])
        );
        let r = apply_ode(&Family::Su2.ode(), &su2_closed_form(50).unwrap()).unwrap();
        assert!(r.is_zero());
        assert_eq!(r.order(), 49);
    }

    #[test]
    fn corrupted_series_is_caught_at_its_order() {
        let mut c = su2_closed_form(30).unwrap().coeffs().to_vec();
        c[12] += num_rational::BigRational::from_integer(1.into());
        let r = apply_ode(&Family::Su2.ode(), &TruncatedSeries::new(c)).unwrap();
        assert_eq!(r.valuation(), Some(12));
    }

    #[test]
    fn residue_candidates_are_annihilated() {
        for (fam, s, c) in residue_candidates() {
            assert!(apply_to_monomial(&fam.ode(), s, &c).is_zero(), "{fam:?}");
        }
        let su2 = Family::Su2.ode();
        let hom = OdeSpec::homogeneous(su2.poly_coeffs().to_vec()).unwrap();
        assert!(!apply_to_monomial(&hom, -1, &BigInt::from(1)).is_zero());
    }
}
