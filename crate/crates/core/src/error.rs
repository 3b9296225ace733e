use alloc::string::String;

use crate::partitions::Partition;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,

    #[error("cannot parse {what} from {input:?}")]
    Parse { what: &'static str, input: String },

    #[error("invalid partition: {0}")]
    InvalidPartition(&'static str),

    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: u32, right: u32 },

    #[error("length mismatch: {left} vs {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("pole: 1 - c*x vanishes for content c = {content}")]
    Pole { content: i64 },

    #[error("degree {degree} outside supported range 1..={max}")]
    DegreeOutOfRange { degree: u32, max: u32 },

    #[error("walk enumeration supports 1 <= d <= {max_degree} and R <= {max_length}, got d = {degree}, R = {length}")]
    WalkCapExceeded {
        degree: u32,
        length: u32,
        max_degree: u32,
        max_length: u32,
    },

    #[error("interval bounds out of order: {low} is not strictly before {high}")]
    IntervalOrder { low: Partition, high: Partition },

    #[error("partition {0} does not occur in this report")]
    UnknownPartition(Partition),

    #[error("malformed character table: {0}")]
    MalformedTable(&'static str),
}
