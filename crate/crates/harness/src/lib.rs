//! Exhaustive verification of matroid statements over every labelled
//! matroid on small ground sets, and over a set of hand-worked examples.

pub mod enumerate;
pub mod registry;
pub mod report;
pub mod worked;

use thiserror::Error;

pub use enumerate::{count_by_rank, enumerate_matroids, MAX_ENUMERATION_SIZE};
pub use registry::{lookup, theorem_registry, Outcome, Subject, TheoremCheck};
pub use report::{count_isomorphism_classes, verify, CheckTally, VerificationReport};
pub use worked::{check_worked_examples, worked_examples, worked_population, Fact, WorkedExample};

#[derive(Debug, Error)]
pub enum HarnessError {
    #[error("ground set size {0} is outside the supported range 1..=6")]
    GroundSetTooLarge(usize),
    #[error("unknown check id {0:?}")]
    UnknownCheck(String),
    #[error(transparent)]
    Matroid(#[from] matroidlab::Error),
}

/// Registry entries for the given ids, in registry order.
pub fn select_checks(ids: &[String]) -> Result<Vec<TheoremCheck>, HarnessError> {
    let registry = theorem_registry();
    if let Some(bad) = ids.iter().find(|id| !registry.iter().any(|c| c.id == *id)) {
        return Err(HarnessError::UnknownCheck(bad.clone()));
    }
    Ok(registry
        .into_iter()
        .filter(|c| ids.iter().any(|id| id == c.id))
        .collect())
}
