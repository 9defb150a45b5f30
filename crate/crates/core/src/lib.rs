//! Concurrence classes of pure multipartite states built from the
//! orthogonal complement of a phase POVM.
//!
//! * [`multilinear`]: dense complex matrices, Kronecker products, basis
//!   indexing and the [`MultiState`] type.
//! * [`povm`]: the phase POVM `Δ(φ)`, its complement `I − Δ` and tensor
//!   products of complements.
//! * [`operators`]: EPR and GHZ^k class operators, their U/L and sign
//!   splits, and per-label enumeration.
//! * [`concurrence`]: class values, the W-class aggregate and full reports.
//! * [`megs`]: the minimal entanglement generating set catalog.
//! * [`states`]: Bell, GHZ, W, product and random fixtures.
//!
//! Subsystems are numbered from 0.

pub mod concurrence;
pub mod config;
pub mod error;
pub mod megs;
pub mod multilinear;
pub mod operators;
pub mod povm;
pub mod states;

pub use concurrence::{
    class_breakdown, class_concurrence, class_concurrence_raw, full_report, state_digest,
    w_class_concurrence, ClassBreakdown, ConcurrenceReport, OperatorValue,
};
pub use config::Config;
pub use error::{Error, Result};
pub use megs::{enumerate_megs, megs_counts, megs_size, MegsCatalog};
pub use multilinear::{
    bilinear_expectation, bilinear_form, conjugate_state, flat_index, kron, kron_all,
    multi_index, total_dim, ComplexMatrix, MultiState,
};
pub use num_complex::Complex64;
pub use operators::{
    class_operator, class_operator_count, elementary_block, enumerate_class_operators,
    epr_operator, ghz_operator, index_pairs, operator_choices, split_anti_diagonal,
    split_sign_components, ClassKind, ClassLabel, ClassOperator, LambdaIndex,
};
pub use povm::{
    build_povm, canonical_phases, complement, multipartite_complement, PhaseKind, PhaseSpec,
};
