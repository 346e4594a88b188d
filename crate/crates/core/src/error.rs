use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("the zero vector is not a projective point")]
    ZeroPoint,

    #[error("{frame} frame is degenerate: points {dependent_subset:?} are linearly dependent")]
    DegenerateFrame {
        frame: &'static str,
        dependent_subset: Vec<usize>,
    },

    #[error("variable index {index} out of range for {num_vars} variables")]
    IndexOutOfRange { index: usize, num_vars: usize },

    #[error("invalid multiplicity {mult} for forms of degree {degree}")]
    InvalidMultiplicity { mult: usize, degree: usize },

    #[error("degenerate configuration: {0}")]
    DegenerateConfiguration(String),

    #[error("point {0} lies in the base locus")]
    BaseLocusPoint(String),

    #[error("point {0} lies in the indeterminacy locus of the Cremona inversion")]
    IndeterminacyPoint(String),

    #[error("point {0} is the center of projection")]
    CenterPoint(String),

    #[error("malformed tree: {0}")]
    MalformedTree(String),

    #[error("unknown suite {0:?}")]
    UnknownSuite(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("no admissible sample after {0} attempts")]
    SamplingExhausted(usize),

    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors caused by a geometrically degenerate input rather than
    /// a malformed request.
    pub fn is_degenerate_input(&self) -> bool {
        matches!(
            self,
            Error::ZeroPoint
                | Error::DegenerateFrame { .. }
                | Error::DegenerateConfiguration(_)
                | Error::BaseLocusPoint(_)
                | Error::IndeterminacyPoint(_)
                | Error::CenterPoint(_)
                | Error::SamplingExhausted(_)
        )
    }
}
