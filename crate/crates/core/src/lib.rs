//! Invariants of one-dimensional numerical-semigroup rings
//! `k[[t^a1, ..., t^an]]`.
//!
//! Everything in this crate is exact integer arithmetic on value sets: a
//! semigroup, a monomial ideal, a canonical ideal, and a blowup algebra are
//! all cofinite subsets of the integers, and every module length is a finite
//! set difference.  On top of that substrate the crate computes
//!
//! - classical semigroup invariants (Frobenius number, gaps, Apéry sets,
//!   pseudo-Frobenius numbers, Cohen–Macaulay type),
//! - canonical ideals, blowups, Hilbert coefficients `e0`/`e1`, and
//!   reduction numbers of monomial ideals,
//! - the Gorenstein / almost-Gorenstein classification with its full
//!   equivalence batteries, including the endomorphism-algebra criterion
//!   and the idealization condition,
//! - the Herzog matrix and its closed-form invariants for 3-generated
//!   non-symmetric semigroups,
//! - genus-bounded enumeration and batch law scans used for verification.

pub mod classify;
pub mod cofinite;
pub mod fixtures;
pub mod herzog;
pub mod ideal;
pub mod scan;
pub mod semigroup;

pub use classify::{classify, Batteries, ClassificationReport, Verdict};
pub use cofinite::{CofiniteSet, SetError};
pub use herzog::{ag_by_matrix, closed_form_invariants, herzog_matrix, HerzogData, HerzogError};
pub use ideal::{
    blowup, canonical_ideal, hilbert_coefficients, hilbert_function, idealization_ag_condition,
    integral_canonical_pair, m_colon_m, HilbertData, IdealError, RelativeIdeal,
};
pub use scan::{run_scan, LawSuite, ScanConfig, ScanReport};
pub use semigroup::{enumerate_by_genus, NumericalSemigroup, SemigroupError};
