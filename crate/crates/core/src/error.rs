use thiserror::Error;

use crate::partition::Partition;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),

    #[error("value {value} outside admissible range [{lo}, {hi}] for {what}")]
    InvalidRange {
        what: &'static str,
        value: i64,
        lo: i64,
        hi: i64,
    },

    #[error("the unit monomial has no normal form")]
    EmptyMonomial,

    #[error("layer {index} is not contained in the previous layer")]
    NotNested { index: usize },

    #[error("layer {index} is empty")]
    EmptyLayer { index: usize },

    #[error("exponent vector has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("monomial {0} is not a minimal generator of the symbolic power")]
    NotAGenerator(String),

    #[error("partitions {0} and {1} have different weights")]
    MismatchedWeight(Partition, Partition),

    #[error("monomials of F-degree {0} and {1} cannot be compared in revlex")]
    DegreeMismatch(u64, u64),

    #[error("generators have different associated partitions {0} and {1}")]
    PartitionMismatch(Partition, Partition),

    #[error("index of overlap undefined for the length-one partition {0}")]
    LengthOne(Partition),

    #[error("support of the monomial is not contained in the given form subset")]
    SupportOutsideSubset,

    #[error("operation requires codimension {expected}, got {found}")]
    WrongCodimension { expected: usize, found: usize },

    #[error("closed formula does not cover {0}")]
    OutOfClosedFormRange(String),

    #[error("no closed top-strand formula for remainder {remainder} (c = {c})")]
    UnsupportedRemainder { remainder: usize, c: usize },

    #[error("A-coefficient is not defined for partition {0}")]
    WrongCase(Partition),

    #[error("form subset must be nonempty")]
    EmptySubset,

    #[error("resource limit exceeded: {what} ({needed} > cap {cap})")]
    ResourceLimit {
        what: &'static str,
        needed: String,
        cap: String,
    },

    #[error("colon ideal at {generator} has a generator of F-degree {degree}")]
    NonlinearQuotient { generator: String, degree: u64 },
}
