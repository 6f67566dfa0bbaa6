use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// Every failure the library can report.
#[derive(Debug, Error)]
pub enum Error {
    #[error("object {object:?} puts mass {mass} on the empty set")]
    EmptyFocalSet { object: Option<usize>, mass: f64 },
    #[error("object {object:?}: masses sum to {sum}, expected 1")]
    MassSumViolation { object: Option<usize>, sum: f64 },
    #[error("object {object:?}: negative or non-finite mass {mass}")]
    InvalidMass { object: Option<usize>, mass: f64 },
    #[error("unknown cluster label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate cluster label `{0}`")]
    DuplicateLabel(String),
    #[error("a frame needs at least one cluster")]
    EmptyFrame,
    #[error("frame has {0} clusters, at most 64 are supported")]
    FrameTooLarge(usize),
    #[error("focal set {set:#x} is not contained in a frame of {k} clusters")]
    FocalOutsideFrame { set: u64, k: usize },
    #[error("a clustering needs at least one object")]
    NoObjects,
    #[error("object count mismatch: {left} vs {right}")]
    MismatchedObjectCount { left: usize, right: usize },
    #[error("need at least {needed} objects, got {got}")]
    TooFewObjects { needed: usize, got: usize },
    #[error("object index {index} out of range for {n} objects")]
    ObjectOutOfRange { index: usize, n: usize },
    #[error("possibility distribution is subnormal (max {max})")]
    SubnormalPossibility { max: f64 },
    #[error("unknown kind `{0}`")]
    UnknownKind(String),
    #[error("unknown t-norm `{0}`")]
    UnknownTNorm(String),
    #[error(
        "exact computation needs {} enumeration steps, budget is {budget}; \
         use sampling instead (e.g. --mode sample --samples {suggested_samples})",
        fmt_count(*.required)
    )]
    BudgetExceeded {
        required: u128,
        budget: u64,
        suggested_samples: u64,
    },
    #[error("input is not a fuzzy clustering")]
    NotFuzzy,
    #[error("input is not a rough clustering")]
    NotRough,
    #[error("input is not a possibilistic clustering")]
    NotPossibilistic,
    #[error("base distance `{0}` is not normalized")]
    BaseNotNormalized(String),
    #[error("{name} = {value} is out of range")]
    OutOfRange { name: &'static str, value: f64 },
    #[error("empty point set")]
    EmptySet,
    #[error("degenerate data: {0}")]
    DegenerateData(String),
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    #[error("parse error at row {row}, column {column}: {message}")]
    Parse {
        row: usize,
        column: String,
        message: String,
    },
    #[error("non-numeric feature at row {row}, column {column}: `{value}`")]
    NonNumericFeature {
        row: usize,
        column: String,
        value: String,
    },
    #[error("schema error: {0}")]
    Schema(String),
    #[error("invalid clustering: {0}")]
    Validation(#[source] Box<Error>),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    /// Stable machine-readable identifier, used in JSON error output.
    pub fn code(&self) -> &'static str {
        match self {
            Error::EmptyFocalSet { .. } => "EmptyFocalSet",
            Error::MassSumViolation { .. } => "MassSumViolation",
            Error::InvalidMass { .. } => "InvalidMass",
            Error::UnknownLabel(_) => "UnknownLabel",
            Error::DuplicateLabel(_) => "DuplicateLabel",
            Error::EmptyFrame => "EmptyFrame",
            Error::FrameTooLarge(_) => "FrameTooLarge",
            Error::FocalOutsideFrame { .. } => "FocalOutsideFrame",
            Error::NoObjects => "NoObjects",
            Error::MismatchedObjectCount { .. } => "MismatchedObjectCount",
            Error::TooFewObjects { .. } => "TooFewObjects",
            Error::ObjectOutOfRange { .. } => "ObjectOutOfRange",
            Error::SubnormalPossibility { .. } => "SubnormalPossibility",
            Error::UnknownKind(_) => "UnknownKind",
            Error::UnknownTNorm(_) => "UnknownTNorm",
            Error::BudgetExceeded { .. } => "BudgetExceeded",
            Error::NotFuzzy => "NotFuzzy",
            Error::NotRough => "NotRough",
            Error::NotPossibilistic => "NotPossibilistic",
            Error::BaseNotNormalized(_) => "BaseNotNormalized",
            Error::OutOfRange { .. } => "OutOfRange",
            Error::EmptySet => "EmptySet",
            Error::DegenerateData(_) => "DegenerateData",
            Error::InvalidConfig(_) => "InvalidConfig",
            Error::Parse { .. } => "ParseError",
            Error::NonNumericFeature { .. } => "NonNumericFeature",
            Error::Schema(_) => "SchemaError",
            Error::Validation(_) => "ValidationError",
            Error::Io(_) => "IoError",
            Error::Json(_) => "JsonError",
            Error::Csv(_) => "CsvError",
        }
    }

    pub(crate) fn with_object(self, object: usize) -> Self {
        match self {
            Error::EmptyFocalSet { mass, .. } => Error::EmptyFocalSet {
                object: Some(object),
                mass,
            },
            Error::MassSumViolation { sum, .. } => Error::MassSumViolation {
                object: Some(object),
                sum,
            },
            Error::InvalidMass { mass, .. } => Error::InvalidMass {
                object: Some(object),
                mass,
            },
            other => other,
        }
    }
}

/// A saturated count reads as a lower bound.
pub fn fmt_count(c: u128) -> String {
    if c == u128::MAX {
        ">= 2^128".into()
    } else {
        c.to_string()
    }
}
