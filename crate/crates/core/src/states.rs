//! Canonical and seeded random states used as fixtures.

use std::f64::consts::FRAC_1_SQRT_2;

use num_complex::Complex64;
use rand::Rng;
use rand_distr::StandardNormal;

use crate::error::{Error, Result};
use crate::multilinear::{total_dim, MultiState};

const ZERO: Complex64 = Complex64::new(0.0, 0.0);

/// `(|00⟩ + |11⟩)/√2`.
pub fn bell() -> MultiState {
    ghz(2).expect("two qubits are valid")
}

/// `(|0…0⟩ + |1…1⟩)/√2` on `m` qubits.
pub fn ghz(m: usize) -> Result<MultiState> {
    if m < 2 {
        return Err(Error::domain(format!("GHZ state needs m >= 2, got {m}")));
    }
    let n = qubit_dim(m)?;
    let mut amps = vec![ZERO; n];
    amps[0] = Complex64::new(FRAC_1_SQRT_2, 0.0);
    amps[n - 1] = Complex64::new(FRAC_1_SQRT_2, 0.0);
    MultiState::new(vec![2; m], amps)
}

/// Uniform superposition of the `m` single-excitation basis states.
pub fn w(m: usize) -> Result<MultiState> {
    if m < 2 {
        return Err(Error::domain(format!("W state needs m >= 2, got {m}")));
    }
    let n = qubit_dim(m)?;
    let a = Complex64::new(1.0 / (m as f64).sqrt(), 0.0);
    let mut amps = vec![ZERO; n];
    for j in 0..m {
        amps[1 << j] = a;
    }
    MultiState::new(vec![2; m], amps)
}

fn qubit_dim(m: usize) -> Result<usize> {
    if m >= usize::BITS as usize {
        return Err(Error::domain(format!("{m} qubits do not fit in memory")));
    }
    Ok(1 << m)
}

fn gaussian_vector<R: Rng + ?Sized>(n: usize, rng: &mut R) -> Vec<Complex64> {
    (0..n)
        .map(|_| Complex64::new(rng.sample(StandardNormal), rng.sample(StandardNormal)))
        .collect()
}

/// Normalized complex Gaussian amplitudes.
pub fn random<R: Rng + ?Sized>(dims: &[usize], rng: &mut R) -> Result<MultiState> {
    let n = total_dim(dims)?;
    MultiState::normalized(dims.to_vec(), gaussian_vector(n, rng))
}

/// Tensor product of independent random single-subsystem states.
pub fn product<R: Rng + ?Sized>(dims: &[usize], rng: &mut R) -> Result<MultiState> {
    if let Some(&d) = dims.iter().find(|&&d| d < 2) {
        return Err(Error::domain(format!("subsystem dimension {d} is below 2")));
    }
    let factors: Vec<Vec<Complex64>> = dims.iter().map(|&d| gaussian_vector(d, rng)).collect();
    MultiState::product(&factors)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn ghz3_support() {
        let s = ghz(3).unwrap();
        let nz: Vec<usize> = (0..8).filter(|&i| s.amps()[i] != ZERO).collect();
        assert_eq!(nz, vec![0, 7]);
        assert_eq!(s.amps()[0].re, FRAC_1_SQRT_2);
    }

    #[test]
    fn w3_support() {
        let s = w(3).unwrap();
        let nz: Vec<usize> = (0..8).filter(|&i| s.amps()[i] != ZERO).collect();
        assert_eq!(nz, vec![1, 2, 4]);
        assert!((s.amps()[4].re - 1.0 / 3f64.sqrt()).abs() < 1e-15);
        assert!(w(1).is_err());
    }

    #[test]
    fn seeded_states_repeat() {
        let a = random(&[3, 2], &mut ChaCha8Rng::seed_from_u64(7)).unwrap();
        let b = random(&[3, 2], &mut ChaCha8Rng::seed_from_u64(7)).unwrap();
        assert_eq!(a, b);
        assert!(a.is_normalized());
        let p = product(&[2, 3], &mut ChaCha8Rng::seed_from_u64(1)).unwrap();
        assert_eq!(p.dims(), &[2, 3]);
        assert!(p.is_normalized());
    }
}
