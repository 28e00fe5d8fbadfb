//! Crate-wide error type.

use thiserror::Error;

use crate::derivation::MismatchReport;
use crate::diagram::Frame;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error)]
pub enum Error {
    /// Staircase placements require strictly decreasing parts.
    #[error("parts must be strictly decreasing, got {parts:?}")]
    NotStrict { parts: Vec<i64> },

    /// Rectangle placements require weakly decreasing parts.
    #[error("parts must be weakly decreasing, got {parts:?}")]
    NotWeaklyDecreasing { parts: Vec<i64> },

    #[error("parts must be positive, got {parts:?}")]
    NonPositivePart { parts: Vec<i64> },

    #[error("partition {parts:?} does not fit inside {frame:?}")]
    ExceedsFrame { frame: Frame, parts: Vec<i64> },

    /// A diagram handed to a set constructor fails the evenness predicate.
    #[error("diagram {parts:?} has an odd inner segment run")]
    NotEven { parts: Vec<i64> },

    #[error("{what} is limited to {limit}, got {got}")]
    BoundExceeded {
        what: &'static str,
        limit: u64,
        got: u64,
    },

    #[error("{rule} requires {required}, got {got}")]
    ParityViolation {
        rule: &'static str,
        required: &'static str,
        got: i64,
    },

    #[error("{rule}: expected twist {expected}, computed {actual}")]
    TwistCheckFailed {
        rule: &'static str,
        expected: String,
        actual: String,
    },

    /// A rule hypothesis other than a parity condition failed.
    #[error("{rule}: {detail}")]
    HypothesisFailed { rule: &'static str, detail: String },

    /// An EvenSplit left a det-twist that no later rule discharges.
    #[error(
        "decomposition of n={n} retains the DetEnTilde twist on {retained} generator(s); \
         it is only discharged when the ambient bundle has trivial determinant"
    )]
    NontrivialTwistUnresolved { n: u32, retained: u64 },

    #[error("{0}")]
    Mismatch(MismatchReport),
}
