use num_bigint::BigInt;
use num_traits::Zero;

use super::poly::IntPoly;
use super::series::TruncatedSeries;
use crate::error::{Error, Result};
use crate::laurent::LaurentPolynomial;
use crate::roots::WeightVector;

/// The equation `sum_k p_k(x) f^(k)(x) = q(x)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OdeSpec {
    poly_coeffs: Vec<IntPoly>,
    inhomogeneous: IntPoly,
}

impl OdeSpec {
    /// `poly_coeffs[k]` multiplies the `k`-th derivative.
    pub fn new(poly_coeffs: Vec<IntPoly>, inhomogeneous: IntPoly) -> Result<Self> {
        match poly_coeffs.last() {
            None => Err(Error::InvalidOde("no coefficients".into())),
            Some(_) if poly_coeffs.len() < 2 => Err(Error::InvalidOde("order must be at least 1".into())),
            Some(lead) if lead.is_zero() => Err(Error::InvalidOde("leading coefficient is zero".into())),
            Some(_) => Ok(OdeSpec {
                poly_coeffs,
                inhomogeneous,
            }),
        }
    }

    pub fn homogeneous(poly_coeffs: Vec<IntPoly>) -> Result<Self> {
        Self::new(poly_coeffs, IntPoly::default())
    }

    pub fn order(&self) -> usize {
        self.poly_coeffs.len() - 1
    }

    pub fn poly_coeffs(&self) -> &[IntPoly] {
        &self.poly_coeffs
    }

    pub fn inhomogeneous(&self) -> &IntPoly {
        &self.inhomogeneous
    }
}

/// Residual `sum_k p_k f^(k) - q` of a truncated series.
///
/// The `k`-th derivative of a series known to order `T` is known to order
/// `T - k`, and multiplying by a polynomial keeps that, so the residual is
/// exact through order `T - m`.
pub fn apply_ode(spec: &OdeSpec, f: &TruncatedSeries) -> Result<TruncatedSeries> {
    let m = spec.order();
    if f.order() < m + 2 {
        return Err(Error::InsufficientOrder {
            have: f.order(),
            need: m + 2,
        });
    }
    let out_order = f.order() - m;
    let mut residual =
        TruncatedSeries::zero(out_order).sub(&TruncatedSeries::from_poly(&spec.inhomogeneous, out_order));
    let mut deriv = f.clone();
    for (k, p) in spec.poly_coeffs.iter().enumerate() {
        if k > 0 {
            deriv = deriv.derivative()?;
        }
        if !p.is_zero() {
            residual = residual.add(&deriv.truncate(out_order).mul_poly(p));
        }
    }
    Ok(residual)
}

/// Homogeneous operator applied to `c x^s` for any integer `s`, as an exact
/// Laurent polynomial in `x`.
pub fn apply_to_monomial(spec: &OdeSpec, s: i64, c: &BigInt) -> LaurentPolynomial {
    let mut terms = Vec::new();
    let mut falling = BigInt::from(1);
    for (k, p) in spec.poly_coeffs.iter().enumerate() {
        if k > 0 {
            falling *= s - (k as i64 - 1);
        }
        if falling.is_zero() {
            break;
        }
        for (j, &pc) in p.coeffs().iter().enumerate() {
            if pc != 0 {
                let e = s - k as i64 + j as i64;
                terms.push((WeightVector(vec![e]), c * &falling * pc));
            }
        }
    }
    LaurentPolynomial::from_terms(1, terms).expect("rank 1 throughout")
}
