//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid group spec: {0}")]
    InvalidGroupSpec(String),

    #[error("invalid ring spec: {0}")]
    InvalidRingSpec(String),

    #[error("group mismatch: {0}")]
    GroupMismatch(String),

    #[error("structure mismatch: {0}")]
    Mismatch(String),

    #[error("index {index} out of range for order {order}")]
    IndexOutOfRange { index: usize, order: usize },

    #[error("unsupported ring: {0}")]
    UnsupportedRing(String),

    /// A transform-domain slice failed the invertibility guard.
    /// `char_index` names the offending character in canonical index order.
    #[error("not invertible at character {char_index}: {reason}")]
    NotInvertible { char_index: usize, reason: String },

    #[error("instance generation failed: {0}")]
    GenerationFailed(String),

    #[error("witness inapplicable: {0}")]
    InapplicableWitness(String),

    #[error("group order {0} too large for a demo (limit is 8)")]
    TooLargeForDemo(usize),

    #[error("malformed element encoding: {0}")]
    Decode(String),
}

pub type Result<T> = std::result::Result<T, Error>;
