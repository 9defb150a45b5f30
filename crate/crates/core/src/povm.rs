//! Single-subsystem phase POVM `Δ(φ)`, its orthogonal complement
//! `Δ̃ = I − Δ`, and Kronecker products of complements across subsystems.

use std::f64::consts::{FRAC_PI_2, PI};

use num_complex::Complex64;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::multilinear::{kron_all, ComplexMatrix};

/// Allowed deviation from `φ_{k,l} = −φ_{l,k}`.
pub const ANTISYMMETRY_TOLERANCE: f64 = 1e-12;

/// The two canonical phase values used by the class operators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PhaseKind {
    /// `φ = π/2`, giving an embedded `σ_y` in the complement.
    HalfPi,
    /// `φ = π`, giving an embedded `σ_x` in the complement.
    Pi,
}

impl PhaseKind {
    pub fn angle(self) -> f64 {
        match self {
            PhaseKind::HalfPi => FRAC_PI_2,
            PhaseKind::Pi => PI,
        }
    }
}

/// Antisymmetric matrix of phases `φ_{k,l}` (radians) for one subsystem.
#[derive(Debug, Clone, PartialEq)]
pub struct PhaseSpec {
    dim: usize,
    phases: Vec<f64>,
}

impl PhaseSpec {
    /// Validates a full `dim × dim` row-major phase matrix.
    pub fn new(dim: usize, phases: Vec<f64>) -> Result<Self> {
        if dim < 2 {
            return Err(Error::domain(format!("phase spec dimension {dim} is below 2")));
        }
        if phases.len() != dim * dim {
            return Err(Error::domain(format!(
                "phase matrix for dimension {dim} needs {} entries, got {}",
                dim * dim,
                phases.len()
            )));
        }
        for k in 0..dim {
            let diag = phases[k * dim + k];
            if diag.abs() > ANTISYMMETRY_TOLERANCE {
                return Err(Error::domain(format!("phase ({k},{k}) is {diag}, must be 0")));
            }
            for l in (k + 1)..dim {
                let (a, b) = (phases[k * dim + l], phases[l * dim + k]);
                if !a.is_finite() || !b.is_finite() || (a + b).abs() > ANTISYMMETRY_TOLERANCE {
                    return Err(Error::domain(format!(
                        "phases ({k},{l})={a} and ({l},{k})={b} are not antisymmetric"
                    )));
                }
            }
        }
        Ok(PhaseSpec { dim, phases })
    }

    /// Builds the spec from the `dim(dim−1)/2` free upper-triangle phases,
    /// listed row by row: `φ_{0,1}, φ_{0,2}, …, φ_{dim−2,dim−1}`.
    pub fn from_upper(dim: usize, upper: &[f64]) -> Result<Self> {
        if dim < 2 {
            return Err(Error::domain(format!("phase spec dimension {dim} is below 2")));
        }
        let expected = dim * (dim - 1) / 2;
        if upper.len() != expected {
            return Err(Error::domain(format!(
                "dimension {dim} has {expected} free phases, got {}",
                upper.len()
            )));
        }
        let mut phases = vec![0.0; dim * dim];
        let mut it = upper.iter();
        for k in 0..dim {
            for l in (k + 1)..dim {
                let &p = it.next().expect("length checked");
                phases[k * dim + l] = p;
                phases[l * dim + k] = -p;
            }
        }
        Self::new(dim, phases)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn phase(&self, k: usize, l: usize) -> f64 {
        self.phases[k * self.dim + l]
    }

    /// Number of free parameters, `dim(dim−1)/2`.
    pub fn free_parameters(&self) -> usize {
        self.dim * (self.dim - 1) / 2
    }
}

/// `Δ[k,l] = e^{iφ_{k,l}}`: unit diagonal, Hermitian.
pub fn build_povm(spec: &PhaseSpec) -> ComplexMatrix {
    let n = spec.dim;
    let mut m = ComplexMatrix::zeros(n, n);
    for k in 0..n {
        for l in 0..n {
            m[(k, l)] = if k == l {
                Complex64::new(1.0, 0.0)
            } else {
                Complex64::from_polar(1.0, spec.phase(k, l))
            };
        }
    }
    m
}

/// `Δ̃ = I − Δ`: zero diagonal, trace zero, Hermitian.
pub fn complement(spec: &PhaseSpec) -> ComplexMatrix {
    let delta = build_povm(spec);
    &ComplexMatrix::identity(spec.dim) - &delta
}

/// Phase spec with every upper-triangle phase set to π/2 or π.
pub fn canonical_phases(dim: usize, kind: PhaseKind) -> Result<PhaseSpec> {
    if dim < 2 {
        return Err(Error::domain(format!("canonical phases need dimension >= 2, got {dim}")));
    }
    PhaseSpec::from_upper(dim, &vec![kind.angle(); dim * (dim - 1) / 2])
}

/// `Δ̃_{Q_1} ⊗ … ⊗ Δ̃_{Q_m}` in subsystem order.
pub fn multipartite_complement(specs: &[PhaseSpec], cfg: &Config) -> Result<ComplexMatrix> {
    if specs.is_empty() {
        return Err(Error::domain("multipartite complement needs at least one subsystem"));
    }
    let factors: Vec<ComplexMatrix> = specs.iter().map(complement).collect();
    kron_all(&factors, cfg.dense_cap)
}
