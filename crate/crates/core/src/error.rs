use crate::{ExactRational, Nat};

/// Errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// The map is defined on positive integers only.
    #[error("input 0 is outside the map's domain (positive integers)")]
    ZeroInput,

    /// A count or bound parameter was below its minimum.
    #[error("{what} must be at least {min}, got {got}")]
    TooSmall {
        what: &'static str,
        min: u64,
        got: u64,
    },

    /// `verify_range` needs `1 <= lo <= hi`.
    #[error("invalid range: need 1 <= lo <= hi, got lo={lo}, hi={hi}")]
    InvalidRange { lo: Nat, hi: Nat },

    /// An orbit reached 1 before producing the requested number of steps.
    #[error("orbit of {start} reaches 1 after {available} steps, but {requested} were requested")]
    OrbitTooShort {
        start: Nat,
        requested: u64,
        available: u64,
    },

    /// A step-size prefix does not belong to any real orbit of the start:
    /// the closed form evaluated to a non-integer.
    #[error("prefix is not a rhythm prefix of {x1}'s orbit: closed form gives the non-integer {value}")]
    PrefixMismatch { x1: Nat, value: ExactRational },

    /// A constructed sequence failed its self-verification by iteration.
    /// This indicates a bug in the constructor, never bad user input.
    #[error("self-verification failed: {0}")]
    Verification(String),
}
