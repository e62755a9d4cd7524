use thiserror::Error;

use crate::seqcore::Family;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{seq} is not a valid {family} sequence")]
    InvalidSequence { seq: String, family: Family },

    #[error("{seq} is not a 021-avoiding {family} sequence")]
    NotAvoiding { seq: String, family: Family },

    #[error("{what} requires a nonempty argument")]
    Empty { what: &'static str },

    #[error("cannot parse sequence {text:?}: {reason}")]
    ParseSequence { text: String, reason: String },

    #[error("invalid Dyck path at position {position}: {reason}")]
    ParsePath { position: usize, reason: String },

    #[error("invalid set partition {text:?}: {reason}")]
    ParsePartition { text: String, reason: String },

    #[error("{what}: n = {n} exceeds the configured cap of {cap} (about {estimate} objects)")]
    CapExceeded {
        what: &'static str,
        n: usize,
        cap: usize,
        estimate: String,
    },

    #[error("{what}: argument {value} out of range {range}")]
    OutOfRange {
        what: &'static str,
        value: usize,
        range: String,
    },

    #[error("series truncation orders differ ({left} vs {right})")]
    OrderMismatch { left: u32, right: u32 },

    #[error("{what}: constant term must be {required}")]
    NotUnit {
        what: &'static str,
        required: &'static str,
    },

    #[error("unknown check {0:?}")]
    UnknownCheck(String),

    #[error("invariant violated: {0}")]
    Internal(String),
}
