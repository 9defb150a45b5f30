//! Minimal entanglement generating set: all EPR pairs followed by all
//! GHZ^k subsets for `3 ≤ k ≤ m`.

use std::collections::BTreeMap;

use crate::config::Config;
use crate::error::{Error, Result};
use crate::operators::{ClassKind, ClassLabel, MAX_SUBSYSTEMS};

#[derive(Debug, Clone, PartialEq)]
pub struct MegsCatalog {
    m: usize,
    labels: Vec<ClassLabel>,
    counts: BTreeMap<usize, u64>,
}

impl MegsCatalog {
    pub fn m(&self) -> usize {
        self.m
    }

    /// Labels in canonical order.
    pub fn labels(&self) -> &[ClassLabel] {
        &self.labels
    }

    /// Subset size → number of labels of that size.
    pub fn counts(&self) -> &BTreeMap<usize, u64> {
        &self.counts
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn epr_labels(&self) -> impl Iterator<Item = &ClassLabel> {
        self.labels.iter().filter(|l| l.kind() == ClassKind::Epr)
    }
}

fn check_m(m: usize, cfg: &Config) -> Result<()> {
    if m < 2 {
        return Err(Error::domain(format!("the MEGS needs m >= 2, got {m}")));
    }
    let cap = cfg.catalog_cap.min(MAX_SUBSYSTEMS);
    if m > cap {
        return Err(Error::Capacity {
            what: "MEGS subsystem count",
            required: m,
            cap,
        });
    }
    Ok(())
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc * (n - i) / (i + 1))
}

/// `C(m, k)` for every `2 ≤ k ≤ m`.
pub fn megs_counts(m: usize, cfg: &Config) -> Result<BTreeMap<usize, u64>> {
    check_m(m, cfg)?;
    Ok((2..=m).map(|k| (k, binomial(m as u64, k as u64))).collect())
}

/// `2^m − m − 1`.
pub fn megs_size(m: usize, cfg: &Config) -> Result<u64> {
    Ok(megs_counts(m, cfg)?.values().sum())
}

/// Builds each block of `k`-subsets (lexicographic order) from the block of
/// `(k−1)`-subsets before it: the `k`-subsets with minimum `a` are `{a}`
/// joined with the `(k−1)`-subsets of `a+1..m`, which form the trailing
/// `C(m−1−a, k−1)` entries of the previous block.
pub fn enumerate_megs(m: usize, cfg: &Config) -> Result<MegsCatalog> {
    let counts = megs_counts(m, cfg)?;
    let total: u64 = counts.values().sum();
    let mut labels = Vec::with_capacity(total as usize);
    for a in 0..m {
        for b in a + 1..m {
            labels.push(ClassLabel::from_mask_unchecked(ClassKind::Epr, 1 << a | 1 << b));
        }
    }
    let ghz = ClassLabel::from_mask_unchecked(ClassKind::Ghz, 0);
    let mut prev = 0..labels.len();
    for k in 3..=m {
        let begin = labels.len();
        for a in 0..=m - k {
            let tail = binomial((m - 1 - a) as u64, (k - 1) as u64) as usize;
            let bits = ghz.0 | 1 << a;
            labels.extend_from_within(prev.end - tail..prev.end);
            let n = labels.len();
            for l in &mut labels[n - tail..] {
                l.0 |= bits;
            }
        }
        prev = begin..labels.len();
    }
    debug_assert_eq!(labels.len() as u64, total);
    Ok(MegsCatalog { m, labels, counts })
}
