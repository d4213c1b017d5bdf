//! Exhaustive enumeration of minimal monomial Togliatti systems up to
//! permutation of the variables, the families listed by the classification
//! theorems, and set-level comparison of the two.

mod enumerate;
mod families;
mod fixtures;
mod verify;

pub use enumerate::{
    candidate_count, enumerate_minimal, enumerate_with, precheck, require_mu_in_bounds, Checker,
    ClassificationResult, EnumerateOptions, FoundIdeal, DEFAULT_CEILING,
};
pub use families::{family_index, family_members, m_set, theorem_families, FamilyId, Theorem};
pub use fixtures::{parse_ideal_lines, Fixtures, LabeledVerdict};
pub use verify::{default_n, verify_theorem, verify_with_fixtures, DiffEntry, DiffReport, VerifyOptions};
