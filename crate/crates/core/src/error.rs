use thiserror::Error;

/// Errors reported by fallible operations in this crate.
///
/// Contract violations (mismatched degrees in [`compose`], out-of-range
/// generator parameters, zero-size domains in constructors that take a bare
/// `n`) panic instead; this type covers conditions driven by data.
///
/// [`compose`]: crate::PathTransformation::compose
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Text input could not be parsed; `position` is a byte offset.
    #[error("parse error at byte {position}: {message}")]
    Parse { position: usize, message: String },

    /// A transformation needs at least one point.
    #[error("transformation must have at least one point")]
    EmptyDomain,

    /// An image value fell outside `1..=n`.
    #[error("image {value} of point {point} is outside 1..={degree}")]
    ImageOutOfRange {
        point: usize,
        value: usize,
        degree: usize,
    },

    /// The operation is only defined on weak endomorphisms of the path.
    #[error("not a weak endomorphism of the directed path")]
    NotWeakEndomorphism,

    /// The operation is only defined on regular elements.
    #[error("not a regular element of the weak endomorphism monoid")]
    NotRegular,

    /// An offset/composition pair violated the encoding invariants.
    #[error("invalid encoding: {0}")]
    InvalidEncoding(String),

    /// An element of a specific rank was required.
    #[error("expected an element of rank {expected}, found rank {found}")]
    WrongRank { expected: usize, found: usize },

    /// Rank-raising splits need two ranks of headroom below the identity.
    #[error("rank {found} cannot be split; splitting needs rank at most {max}")]
    RankTooLarge { found: usize, max: usize },

    /// The operation needs a longer path than the one given.
    #[error("operation needs a path with at least {min} vertices, got {degree}")]
    DegreeTooSmall { degree: usize, min: usize },

    /// A generator index fell outside `1..=n-1`.
    #[error("generator index {index} is outside 1..={max}")]
    GeneratorIndexOutOfRange { index: usize, max: usize },
}
