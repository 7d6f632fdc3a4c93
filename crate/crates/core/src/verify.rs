//! Named end-to-end checks tying the constant-term engine to the
//! recurrences, closed form and differential equations.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::holonomic::catalog::{residue_candidates, su2_closed_form, Family};
use crate::holonomic::{apply_ode, apply_to_monomial, evaluate_recurrence, verify_recurrence, OdeSpec, TruncatedSeries};
use crate::invariant::{
    adjoint_dimension_sequence, derangement_sequence, su2_cg_oracle, su2_dimension_by_binomials,
    su3_component_sequence,
};
use crate::laurent::pow_sequence_on_targets;
use crate::characters::adjoint_character;
use crate::roots::WeightVector;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Check {
    Recurrence(Family),
    Su2ClosedForm,
    Ode(Family),
    Residues,
    Derangement,
    ExchangeSymmetry,
    OracleSu2,
}

impl Check {
    pub const ALL: [Check; 15] = [
        Check::Recurrence(Family::Su2),
        Check::Recurrence(Family::A1),
        Check::Recurrence(Family::A2),
        Check::Recurrence(Family::A3),
        Check::Recurrence(Family::A4),
        Check::Su2ClosedForm,
        Check::Ode(Family::Su2),
        Check::Ode(Family::A1),
        Check::Ode(Family::A2),
        Check::Ode(Family::A3),
        Check::Ode(Family::A4),
        Check::Residues,
        Check::Derangement,
        Check::ExchangeSymmetry,
        Check::OracleSu2,
    ];

    pub fn name(self) -> String {
        match self {
            Check::Recurrence(f) => f.name().to_string(),
            Check::Su2ClosedForm => "su2-closed-form".into(),
            Check::Ode(Family::Su2) => "ode-su2".into(),
            Check::Ode(Family::A1) => "ode-a1".into(),
            Check::Ode(f) => format!("ode-{}", f.name()),
            Check::Residues => "residues".into(),
            Check::Derangement => "derangement".into(),
            Check::ExchangeSymmetry => "exchange-symmetry".into(),
            Check::OracleSu2 => "oracle-su2".into(),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.name())
    }
}

impl FromStr for Check {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Check::ALL
            .into_iter()
            .find(|c| c.name() == s)
            .ok_or_else(|| Error::Parse(format!("unknown check {s:?}")))
    }
}

/// Ranges used by the checks. The defaults mirror the published claims.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyConfig {
    /// Largest index for recurrence checks.
    pub recurrence_max_n: usize,
    /// Residual truncation order for ODE checks.
    pub ode_order: usize,
    pub closed_form_max_n: usize,
    pub oracle_max_n: usize,
    pub symmetry_max_n: usize,
    /// Groups SU(2) ..= SU(max) for the derangement check.
    pub derangement_max_group: i64,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            recurrence_max_n: 100,
            ode_order: 40,
            closed_form_max_n: 50,
            oracle_max_n: 30,
            symmetry_max_n: 10,
            derangement_max_group: 7,
        }
    }
}

impl VerifyConfig {
    /// Same range `max_n` for every sequence-indexed check.
    pub fn with_max_n(mut self, max_n: usize) -> Self {
        self.recurrence_max_n = max_n;
        self.closed_form_max_n = max_n;
        self.oracle_max_n = max_n;
        self.symmetry_max_n = max_n;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Result of one named check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub check: String,
    pub range: [i64; 2],
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub first_violation: Option<i64>,
    #[serde(skip)]
    pub detail: Option<String>,
}

impl VerificationReport {
    fn new(check: Check, range: [i64; 2], first_violation: Option<i64>, detail: Option<String>) -> Self {
        VerificationReport {
            check: check.name(),
            range,
            status: if first_violation.is_none() { Status::Pass } else { Status::Fail },
            first_violation,
            detail,
        }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serialization is infallible")
    }
}

/// Engine-computed `a(0..=n_max)` for a family.
pub fn engine_sequence(family: Family, n_max: usize) -> Result<Vec<BigInt>> {
    if family == Family::Su2 {
        return adjoint_dimension_sequence(2, n_max);
    }
    let comps = su3_component_sequence(n_max)?;
    Ok(comps
        .into_iter()
        .map(|c| match family {
            Family::A1 => c.a1,
            Family::A2 => c.a2,
            Family::A3 => c.a3,
            _ => c.a4,
        })
        .collect())
}

fn first_mismatch<T: PartialEq>(a: &[T], b: &[T]) -> Option<usize> {
    a.iter().zip(b).position(|(x, y)| x != y)
}

fn recurrence_check(family: Family, max_n: usize) -> Result<VerificationReport> {
    let check = Check::Recurrence(family);
    let seq = engine_sequence(family, max_n)?;
    let spec = family.recurrence(&seq[..=family.n_min()])?;
    let by_check = verify_recurrence(&seq, &spec)?;
    let generated = evaluate_recurrence(&spec, seq.len());
    let by_generation = match &generated {
        Ok(g) => first_mismatch(g, &seq),
        Err(Error::NonIntegralTerm { index, .. }) => Some(*index),
        Err(e) => return Err(e.clone()),
    };
    let first = match (by_check.first_violation, by_generation) {
        (Some(a), Some(b)) => Some(a.min(b)),
        (a, b) => a.or(b),
    };
    let detail = first.map(|i| format!("engine value a({i}) = {} disagrees with the recurrence", seq[i]));
    Ok(VerificationReport::new(
        check,
        [by_check.range.0 as i64, by_check.range.1 as i64],
        first.map(|i| i as i64),
        detail,
    ))
}

fn closed_form_check(max_n: usize) -> Result<VerificationReport> {
    let engine = engine_sequence(Family::Su2, max_n)?;
    let series = su2_closed_form(max_n)?;
    let coeffs = TruncatedSeries::from_integers(&engine);
    let first = first_mismatch(series.coeffs(), coeffs.coeffs());
    let detail = first.map(|i| format!("closed form gives {} at x^{i}, engine gives {}", series.coeff(i), engine[i]));
    Ok(VerificationReport::new(Check::Su2ClosedForm, [0, max_n as i64], first.map(|i| i as i64), detail))
}

/// Applies the family's ODE to the engine generating series so that the
/// residual is exact through `order`.
pub fn ode_residual(family: Family, order: usize) -> Result<TruncatedSeries> {
    let ode = family.ode();
    let seq = engine_sequence(family, order + ode.order())?;
    apply_ode(&ode, &TruncatedSeries::from_integers(&seq))
}

fn ode_check(family: Family, order: usize) -> Result<VerificationReport> {
    let residual = ode_residual(family, order)?;
    let first = residual.valuation();
    let detail = first.map(|i| format!("residual coefficient of x^{i} is {}", residual.coeff(i)));
    Ok(VerificationReport::new(Check::Ode(family), [0, residual.order() as i64], first.map(|i| i as i64), detail))
}

fn residue_check() -> VerificationReport {
    let mut failures = Vec::new();
    let mut first = None;
    for (family, s, c) in residue_candidates() {
        let r = apply_to_monomial(&family.ode(), s, &c);
        if !r.is_zero() {
            first.get_or_insert(s);
            failures.push(format!("{} leaves {r} on {c}x^{s}", family.name()));
        }
    }
    // Negative control: x^-1 is not a solution of the homogeneous SU(2) equation.
    let su2 = OdeSpec::homogeneous(Family::Su2.ode().poly_coeffs().to_vec()).expect("order 1");
    if apply_to_monomial(&su2, -1, &BigInt::from(1)).is_zero() {
        first.get_or_insert(-1);
        failures.push("negative control annihilated".into());
    }
    let detail = (!failures.is_empty()).then(|| failures.join("; "));
    VerificationReport::new(Check::Residues, [-2, -1], first, detail)
}

fn derangement_check(max_group: i64) -> Result<VerificationReport> {
    let subfactorials = derangement_sequence(max_group.max(0) as usize);
    for g in 2..=max_group {
        let dims = adjoint_dimension_sequence(g, g as usize)?;
        if let Some(n) = first_mismatch(&dims, &subfactorials) {
            let detail = format!("SU({g}), n = {n}: {} != {}", dims[n], subfactorials[n]);
            return Ok(VerificationReport::new(Check::Derangement, [2, max_group], Some(g), Some(detail)));
        }
    }
    Ok(VerificationReport::new(Check::Derangement, [2, max_group], None, None))
}

fn symmetry_check(max_n: usize) -> Result<VerificationReport> {
    let pairs: [([i64; 2], [i64; 2]); 4] = [([1, -2], [-2, 1]), ([-3, 0], [0, -3]), ([0, 0], [0, 0]), ([-2, -2], [-2, -2])];
    let targets: Vec<WeightVector> = pairs
        .iter()
        .flat_map(|(a, b)| [WeightVector::from(*a), WeightVector::from(*b)])
        .collect();
    let rows = pow_sequence_on_targets(&adjoint_character(3)?, max_n, &targets)?;
    let first = rows
        .iter()
        .position(|r| (0..pairs.len()).any(|k| r[2 * k] != r[2 * k + 1]));
    let detail = first.map(|n| format!("swapped coefficients differ at n = {n}"));
    Ok(VerificationReport::new(Check::ExchangeSymmetry, [0, max_n as i64], first.map(|i| i as i64), detail))
}

fn oracle_check(max_n: usize) -> Result<VerificationReport> {
    let engine = engine_sequence(Family::Su2, max_n)?;
    let first = (0..=max_n).find(|&n| {
        engine[n] != su2_cg_oracle(n) || engine[n] != su2_dimension_by_binomials(n as u64)
    });
    let detail = first.map(|n| {
        format!(
            "n = {n}: engine {}, ladder {}, binomials {}",
            engine[n],
            su2_cg_oracle(n),
            su2_dimension_by_binomials(n as u64)
        )
    });
    Ok(VerificationReport::new(Check::OracleSu2, [0, max_n as i64], first.map(|i| i as i64), detail))
}

pub fn run_check(check: Check, cfg: &VerifyConfig) -> Result<VerificationReport> {
    match check {
        Check::Recurrence(f) => recurrence_check(f, cfg.recurrence_max_n),
        Check::Su2ClosedForm => closed_form_check(cfg.closed_form_max_n),
        Check::Ode(f) => ode_check(f, cfg.ode_order),
        Check::Residues => Ok(residue_check()),
        Check::Derangement => derangement_check(cfg.derangement_max_group),
        Check::ExchangeSymmetry => symmetry_check(cfg.symmetry_max_n),
        Check::OracleSu2 => oracle_check(cfg.oracle_max_n),
    }
}
