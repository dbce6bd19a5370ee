use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Domain errors shared by every module.
///
/// [`Error::name`] gives the stable kebab-case identifier used in JSON reports
/// and by the C ABI.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("excluded parameter: {factor} vanishes")]
    ExcludedParameter { factor: String },
    #[error("degenerate quadratic: leading coefficient is zero")]
    DegenerateQuadratic,
    #[error("invalid root: {0}")]
    InvalidRoot(String),
    #[error("construction failure: {0}")]
    ConstructionFailure(String),
    #[error("singular model: discriminant of f vanishes")]
    SingularModel,
    #[error("degenerate subcover: lambda = {0}")]
    DegenerateSubcover(String),
    #[error("J2 vanishes; absolute invariants undefined")]
    J2Zero,
    #[error("numeric precision insufficient: {0}")]
    Precision(String),
    #[error("point is not on the locus: {0}")]
    NotOnLocus(String),
    #[error("ambiguous recovery: {0} common roots")]
    Ambiguous(usize),
    #[error("identity violated: {check}; residual {residual}")]
    IdentityViolation { check: String, residual: String },
    #[error("quadratic extension mismatch: d = {0} vs d = {1}")]
    ContextMismatch(String, String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    pub fn excluded(factor: impl Into<String>) -> Self {
        Error::ExcludedParameter {
            factor: factor.into(),
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Error::InvalidInput(_) => "invalid-input",
            Error::ExcludedParameter { .. } => "excluded-parameter",
            Error::DegenerateQuadratic => "degenerate-quadratic",
            Error::InvalidRoot(_) => "invalid-root",
            Error::ConstructionFailure(_) => "construction-failure",
            Error::SingularModel => "singular-model",
            Error::DegenerateSubcover(_) => "degenerate-subcover",
            Error::J2Zero => "j2-zero",
            Error::Precision(_) => "precision",
            Error::NotOnLocus(_) => "not-on-locus",
            Error::Ambiguous(_) => "ambiguous",
            Error::IdentityViolation { .. } => "identity-violation",
            Error::ContextMismatch(..) => "context-mismatch",
            Error::Parse(_) => "parse-error",
        }
    }

    /// Stable integer code for the C ABI (0 is reserved for success).
    pub fn code(&self) -> i32 {
        match self {
            Error::InvalidInput(_) => 1,
            Error::ExcludedParameter { .. } => 2,
            Error::DegenerateQuadratic => 3,
            Error::InvalidRoot(_) => 4,
            Error::ConstructionFailure(_) => 5,
            Error::SingularModel => 6,
            Error::DegenerateSubcover(_) => 7,
            Error::J2Zero => 8,
            Error::Precision(_) => 9,
            Error::NotOnLocus(_) => 10,
            Error::Ambiguous(_) => 11,
            Error::IdentityViolation { .. } => 12,
            Error::ContextMismatch(..) => 13,
            Error::Parse(_) => 14,
        }
    }
}
