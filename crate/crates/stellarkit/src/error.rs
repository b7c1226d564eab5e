use thiserror::Error;

use crate::face::FaceSet;

pub type Result<T> = std::result::Result<T, Error>;

/// Domain errors. Every variant has a stable short name (see [`Error::name`])
/// which the CLI prints next to the message.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} is not covered by any facet")]
    UncoveredVertex { vertex: usize },

    #[error("vertex {vertex} is outside the range 1..={m}")]
    VertexOutOfRange { vertex: usize, m: usize },

    #[error("at most {max} vertices are supported, got {requested}")]
    TooManyVertices { requested: usize, max: usize },

    #[error("{face} is not a face of the complex")]
    NotAFace { face: FaceSet },

    #[error("{face} has dimension less than 1")]
    FaceTooSmall { face: FaceSet },

    #[error("operation is undefined for the void complex")]
    VoidComplex,

    #[error("complex is not Gorenstein* over GF({p}); first violating face is {witness}")]
    NotGorensteinStar { p: u32, witness: FaceSet },

    #[error("ideal generator {face} is not a face of the complex")]
    GeneratorNotAFace { face: FaceSet },

    #[error("unknown variable {name:?}")]
    UnknownVariable { name: String },

    #[error("resolution length mismatch: expected the shorter table to have length {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },

    #[error("facet choice #{position} is {index}, but only {available} facets are available")]
    InvalidChoiceIndex {
        position: usize,
        index: usize,
        available: usize,
    },

    #[error("{0} is not a prime in the supported range 2..2^31")]
    NotPrime(u32),

    #[error("{0}")]
    InvalidArgument(String),

    #[error("invalid Betti table: {0}")]
    InvalidTable(String),

    #[error("invalid fan: {0}")]
    InvalidFan(String),

    #[error("exact integer arithmetic overflowed; the input is beyond the supported scale")]
    ArithmeticOverflow,

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

impl Error {
    /// Stable identifier of the error kind, e.g. `"NotAFace"`.
    pub fn name(&self) -> &'static str {
        match self {
            Error::UncoveredVertex { .. } => "UncoveredVertex",
            Error::VertexOutOfRange { .. } => "VertexOutOfRange",
            Error::TooManyVertices { .. } => "TooManyVertices",
            Error::NotAFace { .. } => "NotAFace",
            Error::FaceTooSmall { .. } => "FaceTooSmall",
            Error::VoidComplex => "VoidComplex",
            Error::NotGorensteinStar { .. } => "NotGorensteinStar",
            Error::GeneratorNotAFace { .. } => "GeneratorNotAFace",
            Error::UnknownVariable { .. } => "UnknownVariable",
            Error::LengthMismatch { .. } => "LengthMismatch",
            Error::InvalidChoiceIndex { .. } => "InvalidChoiceIndex",
            Error::NotPrime(_) => "NotPrime",
            Error::InvalidArgument(_) => "InvalidArgument",
            Error::InvalidTable(_) => "InvalidTable",
            Error::InvalidFan(_) => "InvalidFan",
            Error::ArithmeticOverflow => "ArithmeticOverflow",
            Error::Parse { .. } => "ParseError",
        }
    }
}
