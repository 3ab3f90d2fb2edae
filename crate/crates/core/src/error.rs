use thiserror::Error;

/// Errors raised by the numeric operations of this crate.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A component of the input is NaN or infinite.
    #[error("non-finite input component")]
    NonFinite,

    /// The planar part of a value lies at (or numerically on) the puncture of C \ {0}.
    #[error("magnitude below tolerance: the point sits on the puncture")]
    ZeroMagnitude,

    /// Componentwise variant of `ZeroMagnitude` with the offending index.
    #[error("planar component {index} has zero magnitude")]
    ZeroComponent { index: usize },

    /// The real part exceeds the exponent range of f64; the caller must restrict the strip.
    #[error("real part {re} overflows the representable exponent range")]
    Overflow { re: f64 },

    /// Both tangent weights vanish.
    #[error("degenerate tangent weights: |A| + |B| = 0")]
    DegenerateWeights,

    /// The input does not lie on the helicoid (or graph surface) within tolerance.
    #[error("point is not on the surface (residual {residual:e})")]
    NotOnSurface { residual: f64 },

    /// Two consecutive path samples subtend an angle too close to pi; the lift is ambiguous.
    #[error("lifting step {index} turns by {turn} rad, too close to the branch cut")]
    StepTooLarge { index: usize, turn: f64 },

    /// A closed-path operation was given an open path.
    #[error("path is not closed")]
    NotClosed,

    /// Accumulated argument of a loop is not an integer multiple of 2*pi within 1e-9.
    #[error("winding residual {residual:e} exceeds 1e-9; sampling is too coarse")]
    NonIntegerWinding { residual: f64 },

    /// Vector lengths of a multi-dimensional operation disagree.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    /// A constructor argument violates its invariant.
    #[error("invalid parameter: {0}")]
    InvalidParameter(&'static str),

    /// An input file or literal failed to parse; the message names the spot.
    #[error("bad input: {0}")]
    BadInput(String),

    /// Reading or writing an artifact failed.
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
