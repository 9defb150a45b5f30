//! Class concurrences of pure states.
//!
//! A class value is the root-sum-square of `|⟨Ψ*|O|Ψ⟩|` over every operator
//! the class enumerates, times [`Config::scale`]. The W-class value and the
//! report total aggregate class values the same way.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_complex::Complex64;
use rayon::prelude::*;
use sha2::{Digest, Sha256};

use crate::config::Config;
use crate::error::{Error, Result};
use crate::megs::enumerate_megs;
use crate::multilinear::{bilinear_expectation, bilinear_form, MultiState};
use crate::operators::{
    class_operator, operator_choices, sign_component_of, split_anti_diagonal, ClassKind,
    ClassLabel, ClassOperator, LambdaIndex,
};

/// Bilinear value of one enumerated operator and of its structural parts.
#[derive(Debug, Clone, PartialEq)]
pub struct OperatorValue {
    pub pi_half_pair: (usize, usize),
    pub lambda: LambdaIndex,
    pub value: Complex64,
    /// `("U", _), ("L", _)` for EPR operators, `("P_i", _)` for GHZ ones.
    /// The parts sum to `value`.
    pub parts: Vec<(String, Complex64)>,
}

/// Per-operator detail behind one class value.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassBreakdown {
    pub label: ClassLabel,
    pub operators: Vec<OperatorValue>,
    pub value: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConcurrenceReport {
    pub per_class: BTreeMap<ClassLabel, f64>,
    pub w_class: f64,
    pub total: f64,
    /// SHA-256 over the dims and amplitude bits, hex encoded.
    pub state_digest: String,
}

fn require_normalized(state: &MultiState) -> Result<()> {
    if !state.is_normalized() {
        return Err(Error::domain(format!(
            "state is not normalized: sum of |amp|^2 = {}",
            state.norm_sqr()
        )));
    }
    Ok(())
}

fn for_each_operator<F>(state: &MultiState, label: ClassLabel, cfg: &Config, mut f: F) -> Result<()>
where
    F: FnMut(ClassOperator) -> Result<()>,
{
    for (pair, lambda) in operator_choices(state.dims(), label)? {
        f(class_operator(state.dims(), label, pair, lambda, cfg)?)?;
    }
    Ok(())
}

/// Class value of a normalized state.
pub fn class_concurrence(state: &MultiState, label: ClassLabel, cfg: &Config) -> Result<f64> {
    require_normalized(state)?;
    class_concurrence_raw(state, label, cfg)
}

/// Same as [`class_concurrence`] without the normalization check; the value
/// is degree-2 homogeneous in the amplitudes.
pub fn class_concurrence_raw(state: &MultiState, label: ClassLabel, cfg: &Config) -> Result<f64> {
    let mut sum_sq = 0.0;
    for_each_operator(state, label, cfg, |op| {
        sum_sq += bilinear_expectation(state, op.matrix())?.norm_sqr();
        Ok(())
    })?;
    Ok(cfg.scale * sum_sq.sqrt())
}

fn part_values(state: &MultiState, op: &ClassOperator) -> Result<Vec<(String, Complex64)>> {
    let amps = state.amps();
    match op.label().kind() {
        ClassKind::Epr => {
            let (u, l) = split_anti_diagonal(op)?;
            Ok(vec![
                ("U".to_string(), bilinear_form(amps, &u, amps)?),
                ("L".to_string(), bilinear_form(amps, &l, amps)?),
            ])
        }
        ClassKind::Ghz => {
            let subset = op.label().subset();
            let mut acc = vec![Complex64::new(0.0, 0.0); 1 << (subset.len() - 1)];
            for (i, j, z) in op.matrix().nonzeros() {
                let idx = sign_component_of(i, j, op.dims(), &subset, op.lambda())?
                    .ok_or_else(|| Error::domain("operator is not in single-pair form"))?;
                acc[idx] += amps[i] * z * amps[j];
            }
            Ok(acc
                .into_iter()
                .enumerate()
                .map(|(i, v)| (format!("P_{i}"), v))
                .collect())
        }
    }
}

/// Per-operator bilinear values (with U/L or P_i parts) and the class value.
pub fn class_breakdown(state: &MultiState, label: ClassLabel, cfg: &Config) -> Result<ClassBreakdown> {
    require_normalized(state)?;
    let mut operators = Vec::new();
    for_each_operator(state, label, cfg, |op| {
        operators.push(OperatorValue {
            pi_half_pair: op.pi_half_pair(),
            lambda: op.lambda().clone(),
            value: bilinear_expectation(state, op.matrix())?,
            parts: part_values(state, &op)?,
        });
        Ok(())
    })?;
    let sum_sq: f64 = operators.iter().map(|o| o.value.norm_sqr()).sum();
    Ok(ClassBreakdown {
        label,
        operators,
        value: cfg.scale * sum_sq.sqrt(),
    })
}

/// Root-sum-square of all EPR pair values.
pub fn w_class_concurrence(state: &MultiState, cfg: &Config) -> Result<f64> {
    let m = state.m();
    if m < 2 {
        return Err(Error::domain(format!("W class needs at least 2 subsystems, got {m}")));
    }
    require_normalized(state)?;
    let mut sum_sq = 0.0;
    for a in 0..m {
        for b in a + 1..m {
            sum_sq += class_concurrence_raw(state, ClassLabel::epr(a, b)?, cfg)?.powi(2);
        }
    }
    Ok(sum_sq.sqrt())
}

/// Evaluates every MEGS class of the state.
pub fn full_report(state: &MultiState, cfg: &Config) -> Result<ConcurrenceReport> {
    require_normalized(state)?;
    let catalog = enumerate_megs(state.m(), cfg)?;
    let values: Vec<f64> = catalog
        .labels()
        .par_iter()
        .map(|&label| class_concurrence_raw(state, label, cfg))
        .collect::<Result<_>>()?;
    let per_class: BTreeMap<ClassLabel, f64> =
        catalog.labels().iter().copied().zip(values).collect();
    let w_sq: f64 = per_class
        .iter()
        .filter(|(l, _)| l.kind() == ClassKind::Epr)
        .map(|(_, v)| v * v)
        .sum();
    let total_sq: f64 = per_class.values().map(|v| v * v).sum();
    Ok(ConcurrenceReport {
        per_class,
        w_class: w_sq.sqrt(),
        total: total_sq.sqrt(),
        state_digest: state_digest(state),
    })
}

/// SHA-256 of the little-endian dims (as u64) followed by each amplitude's
/// real and imaginary bits.
pub fn state_digest(state: &MultiState) -> String {
    let mut h = Sha256::new();
    for &d in state.dims() {
        h.update((d as u64).to_le_bytes());
    }
    for a in state.amps() {
        h.update(a.re.to_le_bytes());
        h.update(a.im.to_le_bytes());
    }
    h.finalize().iter().fold(String::with_capacity(64), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}
