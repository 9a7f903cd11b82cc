use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("zero input")]
    ZeroInput,

    #[error("index {index} out of range for a family of {q} divisors")]
    IndexOutOfRange { index: usize, q: usize },

    #[error("subset enumeration over q = {q} divisors exceeds the cap of {cap} (set NOCHKA_MAX_Q to override)")]
    TooManyDivisors { q: usize, cap: usize },

    #[error("too few divisors: q = {q} < k_N = {k_n}")]
    TooFewDivisors { q: usize, k_n: i64 },

    #[error(
        "family is not in subgeneral position: subset {subset:?} has rank {rank} < {required}"
    )]
    NotSubgeneral {
        subset: Vec<usize>,
        rank: usize,
        required: i64,
    },

    #[error("construction failure: {0}")]
    ConstructionFailure(String),

    #[error("selection failure: {0}")]
    SelectionFailure(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("genericity sampling failed after {attempts} attempts: {detail}")]
    GenericitySamplingFailed { attempts: usize, detail: String },

    #[error("degenerate curve for hyperplane {0}")]
    DegenerateCurveForH(String),

    #[error("linearly degenerate curve")]
    LinearlyDegenerate,

    #[error("requires split fixture: {0}")]
    RequiresSplitFixture(String),

    #[error("root finding did not converge: {0}")]
    RootFinding(String),

    #[error("quadrature did not converge: {0}")]
    Quadrature(String),

    #[error("internal consistency failure: {0}")]
    Internal(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    /// Stable kebab-case name of the variant, used in JSON error reports.
    pub fn kind(&self) -> &'static str {
        match self {
            Error::Parse(_) => "parse",
            Error::InvalidInput(_) => "invalid-input",
            Error::ZeroInput => "zero-input",
            Error::IndexOutOfRange { .. } => "index-out-of-range",
            Error::TooManyDivisors { .. } => "too-many-divisors",
            Error::TooFewDivisors { .. } => "too-few-divisors",
            Error::NotSubgeneral { .. } => "not-subgeneral",
            Error::ConstructionFailure(_) => "construction-failure",
            Error::SelectionFailure(_) => "selection-failure",
            Error::Precondition(_) => "precondition",
            Error::GenericitySamplingFailed { .. } => "genericity-sampling-failed",
            Error::DegenerateCurveForH(_) => "degenerate-curve-for-hyperplane",
            Error::LinearlyDegenerate => "linearly-degenerate",
            Error::RequiresSplitFixture(_) => "requires-split-fixture",
            Error::RootFinding(_) => "root-finding",
            Error::Quadrature(_) => "quadrature",
            Error::Internal(_) => "internal",
        }
    }
}
