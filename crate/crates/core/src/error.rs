use thiserror::Error;

/// Every failure the library can report.
///
/// Cap violations carry both the observed value and the configured limit so
/// callers can tell which bound they tripped.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at offset {offset}: {message}")]
    Syntax { offset: usize, message: String },

    #[error("variable x{index} out of range (variable count {count})")]
    VariableOutOfRange { index: usize, count: usize },

    #[error("zero denominator in rational literal `{0}`")]
    ZeroDenominator(String),

    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),

    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("degenerate simplex: vertices are affinely dependent")]
    DegenerateSimplex,

    #[error("invalid simplex: {0}")]
    InvalidSimplex(String),

    #[error("formal degree {degree} exceeds cap {cap}")]
    FormalDegreeExceeded { degree: u32, cap: u32 },

    #[error("series has zero constant term")]
    ZeroConstantTerm,

    #[error("exponent of total degree {degree} is above the series cap {cap}")]
    ExponentAboveCap { degree: u32, cap: u32 },

    #[error("linear form takes a repeated value on the vertices")]
    IrregularLinearForm,

    #[error("enumeration limit exceeded: {count} terms, limit {limit}")]
    EnumerationLimitExceeded { count: String, limit: u64 },

    #[error("effective variable cap exceeded: {count} variables, cap {cap}")]
    EffectiveVariableCapExceeded { count: usize, cap: usize },

    #[error("polynomial is not homogeneous")]
    NotHomogeneous,

    #[error("polarization cap exceeded: degree {degree}, cap {cap}")]
    PolarizationCapExceeded { degree: u32, cap: u32 },

    #[error("expansion limit exceeded: {count} multinomial terms, limit {limit}")]
    ExpansionLimitExceeded { count: String, limit: u64 },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),
}

pub type Result<T> = std::result::Result<T, Error>;
