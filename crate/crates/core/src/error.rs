use thiserror::Error;

use crate::set::{GroundSet, Subset};

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Everything that can go wrong while building or querying matroids.
///
/// Variants carry raw subsets and element indices; [`Error::render`] turns
/// them into label-based messages once the ground set is known.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("ground set must contain at least one element")]
    EmptyGround,
    #[error("ground set has {0} elements, at most 64 are supported")]
    GroundTooLarge(usize),
    #[error("duplicate element label {0:?}")]
    DuplicateLabel(String),
    #[error("unknown element label {0:?}")]
    UnknownLabel(String),
    #[error("set {0:?} is not contained in the ground set")]
    OutsideGround(Subset),
    #[error("operands are defined over different ground sets")]
    GroundMismatch,

    #[error("partition contains the empty block")]
    EmptyBlock,
    #[error("blocks {0:?} and {1:?} overlap")]
    OverlappingBlocks(Subset, Subset),
    #[error("blocks cover {actual:?} but the support is {expected:?}")]
    SupportMismatch { expected: Subset, actual: Subset },

    #[error("base family is empty")]
    EmptyFamily,
    #[error("bases {first:?} and {second:?} have different cardinalities")]
    UnequalCardinality { first: Subset, second: Subset },
    #[error("exchange fails for {first:?}, {second:?} removing element {removed}")]
    ExchangeFailure {
        first: Subset,
        second: Subset,
        removed: usize,
    },
    #[error("independence family does not contain the empty set")]
    MissingEmptySet,
    #[error("{missing:?} is a subset of independent set {independent:?} but is not independent")]
    NotDownwardClosed {
        independent: Subset,
        missing: Subset,
    },
    #[error("{smaller:?} cannot be augmented from {larger:?}")]
    AugmentationFailure { smaller: Subset, larger: Subset },

    #[error("{blocks} blocks but {caps} caps")]
    CapCountMismatch { blocks: usize, caps: usize },
    #[error("cap {cap} is out of range for block {block:?} of size {size}")]
    CapOutOfRange {
        block: Subset,
        cap: i64,
        size: usize,
    },

    #[error("matroid has rank 0, secondary bases are undefined")]
    RankZero,
    #[error("{0:?} is not a base")]
    NotABase(Subset),
    #[error("{bases} bases exceed the exhaustive search cap of {cap}")]
    SearchCapExceeded { bases: usize, cap: usize },
}

impl Error {
    /// Formats the error with element labels taken from `ground`.
    pub fn render(&self, ground: &GroundSet) -> String {
        let s = |x: &Subset| ground.render(*x);
        let e = |i: usize| ground.label(i).to_string();
        match self {
            Error::OutsideGround(x) => format!("set {} is not contained in the ground set", s(x)),
            Error::OverlappingBlocks(a, b) => format!("blocks {} and {} overlap", s(a), s(b)),
            Error::SupportMismatch { expected, actual } => {
                format!(
                    "blocks cover {} but the support is {}",
                    s(actual),
                    s(expected)
                )
            }
            Error::UnequalCardinality { first, second } => format!(
                "UnequalCardinality: bases {} and {} have different cardinalities",
                s(first),
                s(second)
            ),
            Error::ExchangeFailure {
                first,
                second,
                removed,
            } => format!(
                "ExchangeFailure: B1={}, B2={}, x={}: no y in B2-B1 makes (B1-{{x}})+{{y}} a base",
                s(first),
                s(second),
                e(*removed)
            ),
            Error::NotDownwardClosed {
                independent,
                missing,
            } => format!(
                "NotDownwardClosed: {} is independent but its subset {} is not",
                s(independent),
                s(missing)
            ),
            Error::AugmentationFailure { smaller, larger } => format!(
                "AugmentationFailure: no element of {} extends {}",
                s(larger),
                s(smaller)
            ),
            Error::CapOutOfRange { block, cap, size } => format!(
                "CapOutOfRange: cap {cap} for block {} of size {size}",
                s(block)
            ),
            Error::NotABase(x) => format!("{} is not a base", s(x)),
            Error::EmptyFamily => "EmptyFamily: base family is empty".to_string(),
            Error::MissingEmptySet => {
                "MissingEmptySet: independence family does not contain the empty set".to_string()
            }
            other => other.to_string(),
        }
    }

    /// True for errors that mean the input violates a matroid axiom or a
    /// constructor precondition, as opposed to malformed input.
    pub fn is_axiom_violation(&self) -> bool {
        matches!(
            self,
            Error::EmptyFamily
                | Error::UnequalCardinality { .. }
                | Error::ExchangeFailure { .. }
                | Error::MissingEmptySet
                | Error::NotDownwardClosed { .. }
                | Error::AugmentationFailure { .. }
                | Error::CapCountMismatch { .. }
                | Error::CapOutOfRange { .. }
                | Error::EmptyBlock
                | Error::OverlappingBlocks(..)
                | Error::SupportMismatch { .. }
        )
    }
}
