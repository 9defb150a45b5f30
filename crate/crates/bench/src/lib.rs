//! Criterion benchmarks for `megs-core`; see `benches/`.
