//! Runtime limits and scale factors.

use std::env;

/// Default cap on the side length of any dense matrix.
pub const DEFAULT_DENSE_CAP: usize = 4096;

/// Default cap on the number of subsystems accepted by the MEGS catalog.
pub const DEFAULT_CATALOG_CAP: usize = 20;

/// Environment variable that overrides [`Config::dense_cap`].
pub const DENSE_CAP_ENV: &str = "MEGS_DENSE_CAP";

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Config {
    /// Maximum rows (and columns) of a dense matrix.
    pub dense_cap: usize,
    /// Maximum `m` for [`crate::enumerate_megs`]. Hard upper bound is 31.
    pub catalog_cap: usize,
    /// Multiplier applied to every class concurrence value.
    pub scale: f64,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            dense_cap: DEFAULT_DENSE_CAP,
            catalog_cap: DEFAULT_CATALOG_CAP,
            scale: 1.0,
        }
    }
}

impl Config {
    /// Defaults, with `MEGS_DENSE_CAP` applied when it parses as a positive integer.
    pub fn from_env() -> Self {
        let mut cfg = Config::default();
        if let Some(cap) = env::var(DENSE_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse::<usize>().ok())
            .filter(|&v| v > 0)
        {
            cfg.dense_cap = cap;
        }
        cfg
    }

    pub fn with_dense_cap(mut self, cap: usize) -> Self {
        self.dense_cap = cap;
        self
    }

    pub fn with_scale(mut self, scale: f64) -> Self {
        self.scale = scale;
        self
    }
}
