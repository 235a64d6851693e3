use thiserror::Error;

/// Every failure the library can report.
///
/// Hyperplane indices in messages are 1-based, matching how arrangements are
/// written by hand; the fields themselves are 0-based.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum Error {
    #[error("primitivity is undefined for the zero vector")]
    ZeroVector,
    #[error("determinant requires a square matrix, got {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("{what}: expected length {expected}, found {found}")]
    DimensionMismatch {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("normal {} not primitive", .index + 1)]
    NotPrimitive { index: usize },
    #[error("normals do not span")]
    NormalsDoNotSpan,
    #[error("an arrangement in dimension {n} needs at least {n} hyperplanes, got {d}")]
    TooFewHyperplanes { n: usize, d: usize },
    #[error("bad lift {}", .index + 1)]
    BadLift { index: usize },
    #[error("invalid kernel basis: {0}")]
    InvalidBasis(String),
    #[error("invalid sign vector: {0}")]
    InvalidSignVector(String),
    #[error("bad pattern character {found:?} at position {}", .position + 1)]
    BadPattern { position: usize, found: char },
    #[error("pattern has length {found}, arrangement has {expected} hyperplanes")]
    PatternLength { expected: usize, found: usize },
    #[error("arrangement is not smooth (regular: {regular}, simple: {simple})")]
    NotSmooth { regular: bool, simple: bool },
    #[error("covering theorem hypothesis violated: the core is empty")]
    EmptyCore,
    #[error("chamber {0} is empty")]
    EmptyChamber(String),
    #[error("support is not semistable, orbit closedness is undefined")]
    UnstableSupport,
    #[error("no coordinate projection is injective on the solution space")]
    DegenerateProjection,
    #[error("{what} enumerates {count} cases, limit is {limit} (override with --force)")]
    GuardExceeded {
        what: &'static str,
        count: usize,
        limit: usize,
    },
    #[error("rendering supports n <= 2, got n = {0}")]
    RenderDimension(usize),
    #[error("{0}")]
    Format(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
