//! Class values checked against oracles that never touch the library's
//! Kronecker or operator builders.

use itertools::Itertools;
use megs_core::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// Entry of an embedded single-subsystem block, written out by hand.
fn block_entry(kind: char, pair: (usize, usize), row: usize, col: usize) -> Complex64 {
    let (k, l) = pair;
    match (kind, row == k && col == l, row == l && col == k) {
        ('I', _, _) => if row == col { c(1.0, 0.0) } else { c(0.0, 0.0) },
        ('Y', true, _) => c(0.0, -1.0),
        ('Y', _, true) => c(0.0, 1.0),
        ('X', true, _) | ('X', _, true) => c(1.0, 0.0),
        _ => c(0.0, 0.0),
    }
}

fn digits(mut flat: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for j in (0..dims.len()).rev() {
        out[j] = flat % dims[j];
        flat /= dims[j];
    }
    out
}

/// Brute force `Σ_{a,b} α_a α_b ∏_j F_j[a_j, b_j]` over every basis pair.
fn oracle_operator_value(amps: &[Complex64], dims: &[usize], kinds: &[char], pairs: &[(usize, usize)]) -> Complex64 {
    let n = amps.len();
    let mut acc = c(0.0, 0.0);
    for a in 0..n {
        let da = digits(a, dims);
        for b in 0..n {
            let db = digits(b, dims);
            let mut entry = c(1.0, 0.0);
            for j in 0..dims.len() {
                entry *= block_entry(kinds[j], pairs[j], da[j], db[j]);
            }
            acc += amps[a] * entry * amps[b];
        }
    }
    acc
}

/// Oracle class value: root-sum-square over placements and lambda pairs.
fn oracle_class_value(state: &MultiState, subset: &[usize]) -> (f64, Vec<f64>) {
    let dims = state.dims();
    let placements: Vec<(usize, usize)> = if subset.len() == 2 {
        vec![(subset[0], subset[1])]
    } else {
        subset.iter().copied().tuple_combinations().collect()
    };
    let lambda_sets: Vec<Vec<(usize, usize)>> = subset
        .iter()
        .map(|&j| (0..dims[j]).tuple_combinations().collect::<Vec<_>>())
        .multi_cartesian_product()
        .collect();
    let mut per_op = Vec::new();
    for &(ya, yb) in &placements {
        for lam in &lambda_sets {
            let mut kinds = vec!['I'; dims.len()];
            let mut pairs = vec![(0, 1); dims.len()];
            for (&j, &p) in subset.iter().zip(lam) {
                kinds[j] = if j == ya || j == yb { 'Y' } else { 'X' };
                pairs[j] = p;
            }
            per_op.push(oracle_operator_value(state.amps(), dims, &kinds, &pairs).norm());
        }
    }
    (per_op.iter().map(|v| v * v).sum::<f64>().sqrt(), per_op)
}

fn wootters(s: &MultiState) -> f64 {
    let a = s.amps();
    2.0 * (a[0] * a[3] - a[1] * a[2]).norm()
}

fn random_unitary2(rng: &mut ChaCha8Rng) -> [[Complex64; 2]; 2] {
    // Euler-angle parametrization of U(2)
    let (th, ph, la, ga): (f64, f64, f64, f64) = (
        rng.random_range(0.0..std::f64::consts::PI),
        rng.random_range(0.0..std::f64::consts::TAU),
        rng.random_range(0.0..std::f64::consts::TAU),
        rng.random_range(0.0..std::f64::consts::TAU),
    );
    let g = Complex64::from_polar(1.0, ga);
    let (ct, st) = ((th / 2.0).cos(), (th / 2.0).sin());
    [
        [g * ct, -g * Complex64::from_polar(st, la)],
        [g * Complex64::from_polar(st, ph), g * Complex64::from_polar(ct, ph + la)],
    ]
}

#[test]
fn two_qubit_values_match_wootters() {
    let cfg = Config::default();
    let label = ClassLabel::epr(0, 1).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    for _ in 0..1000 {
        let s = states::random(&[2, 2], &mut rng).unwrap();
        let v = class_concurrence(&s, label, &cfg).unwrap();
        assert!((v - wootters(&s)).abs() < 1e-10);
    }
}

#[test]
fn two_qubit_local_unitary_invariance() {
    let cfg = Config::default();
    let label = ClassLabel::epr(0, 1).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(99);
    for _ in 0..200 {
        let s = states::random(&[2, 2], &mut rng).unwrap();
        let (u, w) = (random_unitary2(&mut rng), random_unitary2(&mut rng));
        let a = s.amps();
        let mut out = vec![c(0.0, 0.0); 4];
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    for l in 0..2 {
                        out[2 * i + j] += u[i][k] * w[j][l] * a[2 * k + l];
                    }
                }
            }
        }
        let t = MultiState::new(vec![2, 2], out).unwrap();
        let before = class_concurrence(&s, label, &cfg).unwrap();
        let after = class_concurrence(&t, label, &cfg).unwrap();
        assert!((before - after).abs() < 1e-9);
    }
}

#[test]
fn random_states_match_brute_force_oracle() {
    let cfg = Config::default();
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for dims in [vec![2, 2, 2], vec![3, 2, 2], vec![2, 3], vec![2, 2, 2, 2]] {
        for _ in 0..5 {
            let s = states::random(&dims, &mut rng).unwrap();
            for label in enumerate_megs(dims.len(), &cfg).unwrap().labels() {
                let (want, _) = oracle_class_value(&s, &label.subset());
                let got = class_concurrence(&s, *label, &cfg).unwrap();
                assert!((got - want).abs() < 1e-12, "{dims:?} {label}: {got} vs {want}");
            }
        }
    }
}

#[test]
fn canonical_states_match_oracle() {
    let cfg = Config::default();
    let ghz3 = states::ghz(3).unwrap();
    let (agg, per_op) = oracle_class_value(&ghz3, &[0, 1, 2]);
    assert_eq!(per_op.len(), 3);
    assert!(per_op.iter().all(|v| (v - 1.0).abs() < 1e-12));
    assert!((agg - 3f64.sqrt()).abs() < 1e-10);
    let b = class_breakdown(&ghz3, ClassLabel::ghz(&[0, 1, 2]).unwrap(), &cfg).unwrap();
    for (op, want) in b.operators.iter().zip(&per_op) {
        assert!((op.value.norm() - want).abs() < 1e-12);
    }

    let w3 = states::w(3).unwrap();
    let (e01, _) = oracle_class_value(&w3, &[0, 1]);
    assert!((e01 - 2.0 / 3.0).abs() < 1e-12);

    let ghz4 = states::ghz(4).unwrap();
    let r = full_report(&ghz4, &cfg).unwrap();
    for (label, v) in &r.per_class {
        let (want, _) = oracle_class_value(&ghz4, &label.subset());
        assert!((v - want).abs() < 1e-12);
        if label.kind() == ClassKind::Epr {
            assert!(v.abs() < 1e-12);
        }
    }
    assert!(r.per_class[&ClassLabel::ghz(&[0, 1, 2, 3]).unwrap()] > 0.0);
}

#[test]
fn product_states_are_null() {
    let cfg = Config::default();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for dims in [vec![2, 2, 2], vec![3, 2, 2], vec![2, 3]] {
        for _ in 0..100 {
            let s = states::product(&dims, &mut rng).unwrap();
            let r = full_report(&s, &cfg).unwrap();
            assert!(r.per_class.values().all(|&v| v < 1e-9));
            assert!(r.w_class < 1e-9);
        }
    }
}

#[test]
fn permutation_covariance() {
    let cfg = Config::default();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for dims in [vec![2, 2, 2], vec![3, 2, 2]] {
        let s = states::random(&dims, &mut rng).unwrap();
        for perm in (0..3).permutations(3) {
            let p = s.permute_subsystems(&perm).unwrap();
            // old subsystem perm[i] now sits at i
            let mut map = vec![0; 3];
            for (i, &old) in perm.iter().enumerate() {
                map[old] = i;
            }
            for label in enumerate_megs(3, &cfg).unwrap().labels() {
                let before = class_concurrence(&s, *label, &cfg).unwrap();
                let after = class_concurrence(&p, label.relabel(&map).unwrap(), &cfg).unwrap();
                assert!((before - after).abs() < 1e-12);
            }
        }
    }
}

#[test]
fn values_scale_quadratically() {
    let cfg = Config::default();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    for _ in 0..20 {
        let s = states::random(&[2, 2, 3], &mut rng).unwrap();
        let k = c(rng.random_range(0.2..3.0), rng.random_range(-2.0..2.0));
        let scaled = s.scaled(k);
        for label in enumerate_megs(3, &cfg).unwrap().labels() {
            let base = class_concurrence_raw(&s, *label, &cfg).unwrap();
            let big = class_concurrence_raw(&scaled, *label, &cfg).unwrap();
            assert!((big - k.norm_sqr() * base).abs() < 1e-10);
        }
        assert!(class_concurrence(&scaled, ClassLabel::epr(0, 1).unwrap(), &cfg).is_err());
    }
}

#[test]
fn report_aggregates_are_consistent() {
    let cfg = Config::default();
    let mut rng = ChaCha8Rng::seed_from_u64(21);
    for dims in [vec![2, 2], vec![2, 2, 2], vec![2, 2, 2, 2], vec![3, 3, 2]] {
        let s = states::random(&dims, &mut rng).unwrap();
        let r = full_report(&s, &cfg).unwrap();
        let all: f64 = r.per_class.values().map(|v| v * v).sum();
        let epr: f64 = r
            .per_class
            .iter()
            .filter(|(l, _)| l.kind() == ClassKind::Epr)
            .map(|(_, v)| v * v)
            .sum();
        assert!((r.total.powi(2) - all).abs() < 1e-10);
        assert!((r.w_class.powi(2) - epr).abs() < 1e-10);
        assert!((r.w_class - w_class_concurrence(&s, &cfg).unwrap()).abs() < 1e-12);
        assert!(r.per_class.values().all(|&v| v >= 0.0));
        let again = full_report(&s, &cfg).unwrap();
        assert_eq!(r, again);
    }
}

#[test]
fn oversized_systems_fail_with_capacity_error() {
    let cfg = Config::default().with_dense_cap(16);
    let s = states::ghz(5).unwrap();
    let err = full_report(&s, &cfg).unwrap_err();
    assert!(matches!(err, Error::Capacity { .. }));
}
