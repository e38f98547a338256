use alloc::string::String;

/// Failures surfaced by the computational core.
///
/// Resource and precondition errors are expected at the edges of the
/// parameter space; the consistency variants indicate an internal bug and
/// should never fire on a correct build.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid partition {0}: parts must be weakly decreasing")]
    InvalidPartition(String),

    #[error("size mismatch: expected {expected}, found {found}")]
    SizeMismatch { expected: String, found: String },

    #[error("{what} would need {needed}, exceeding the configured cap of {cap}")]
    ResourceCap {
        what: &'static str,
        needed: u64,
        cap: u64,
    },

    #[error("non-integer multiplicity {value} for {lambda}")]
    NonIntegerMultiplicity { lambda: String, value: String },

    #[error("negative multiplicity {value} for {lambda} in a genuine character")]
    NegativeMultiplicity { lambda: String, value: String },

    #[error("weight multiset is not a polynomial representation: {0}")]
    NotARepresentation(String),

    #[error("group element does not preserve the cycle space")]
    NotEquivariant,

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("cannot parse {0}")]
    Parse(String),

    #[error("consistency check failed: {0}")]
    Consistency(String),
}

pub type Result<T> = core::result::Result<T, Error>;
