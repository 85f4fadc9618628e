use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid number {0:?}: expected p/q, an integer or a finite decimal")]
pub struct ParseScalarError(pub String);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FrameError {
    #[error("a frame needs at least one atom")]
    Empty,
    #[error("duplicate atom name {0:?}")]
    DuplicateAtom(String),
    #[error("frame of {size} atoms exceeds the maximum of {max}")]
    TooLarge { size: usize, max: usize },
    #[error("unknown atom {0:?}")]
    UnknownAtom(String),
    #[error("subsets belong to different frames")]
    FrameMismatch,
    #[error("frame is not a product frame")]
    NotProduct,
    #[error("factor index {index} out of range for a product of {factors} factors")]
    FactorOutOfRange { index: usize, factors: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum MassError {
    #[error(transparent)]
    Frame(#[from] FrameError),
    #[error("mass assigned to the empty set")]
    MassOnEmptySet,
    #[error("negative mass {value} on {set}")]
    NegativeMass { set: String, value: String },
    #[error("non-finite mass on {0}")]
    NonFinite(String),
    #[error("masses sum to {0}, expected 1")]
    SumNotOne(String),
    #[error("total conflict: every pair of focal sets has an empty intersection")]
    TotalConflict,
    #[error("belief table is incomplete: {got} of {expected} subsets given")]
    IncompleteTable { got: usize, expected: usize },
    #[error("input is not a belief function: {0}")]
    NotBelief(String),
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum PopulationError {
    #[error(transparent)]
    Frame(#[from] FrameError),
    #[error("population has no objects")]
    Empty,
    #[error("record value must be a nonempty set")]
    EmptyValue,
    #[error("record weight must be positive")]
    ZeroWeight,
    #[error("label {label} does not intersect record value {value}")]
    InvalidLabeling { value: String, label: String },
    #[error("measurement table is incomplete: {got} of {expected} subsets given")]
    IncompleteTable { got: usize, expected: usize },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum RelabelError {
    #[error(transparent)]
    Mass(#[from] MassError),
    #[error(transparent)]
    Population(#[from] PopulationError),
    #[error("need at least one draw")]
    NoDraws,
    #[error("need at least one chunk")]
    NoChunks,
    #[error("label sequence is empty")]
    EmptySequence,
    #[error("all {attempted} draws were discarded: labels never fit the population")]
    AllDiscarded { attempted: u64 },
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum EstimateError {
    #[error(transparent)]
    Frame(#[from] FrameError),
    #[error(transparent)]
    Mass(#[from] MassError),
    #[error("count table is empty")]
    Empty,
    #[error("count assigned to the empty set")]
    CountOnEmptySet,
    #[error("significance level {0} is outside (0, 1]")]
    InvalidAlpha(f64),
}

#[derive(Debug, Error)]
pub enum InputError {
    #[error("line {line}: {message}")]
    Csv { line: u64, message: String },
    #[error("line {line}: unknown atom {token:?} in column {column:?}")]
    UnknownAtom {
        line: u64,
        column: String,
        token: String,
    },
    #[error("line {line}: empty value in column {column:?}")]
    EmptyCell { line: u64, column: String },
    #[error("line {line}: invalid count {value:?}")]
    BadCount { line: u64, value: String },
    #[error("no frame declared for attribute {0:?}")]
    MissingFrame(String),
    #[error("data has no attribute columns")]
    NoAttributes,
    #[error("data contains no objects")]
    EmptyData,
    #[error("invalid JSON: {0}")]
    Json(String),
    #[error("invalid frame declaration {0:?}: expected name=atom,atom,...")]
    BadFrameDecl(String),
    #[error(transparent)]
    Frame(#[from] FrameError),
    #[error(transparent)]
    Mass(#[from] MassError),
    #[error(transparent)]
    Scalar(#[from] ParseScalarError),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl From<serde_json::Error> for InputError {
    fn from(e: serde_json::Error) -> Self {
        InputError::Json(e.to_string())
    }
}

#[derive(Debug, Error)]
pub enum CaseError {
    #[error("unknown case {name:?}; available: {}", available.join(", "))]
    UnknownCase {
        name: String,
        available: Vec<String>,
    },
    #[error("case {case}: bad data: {message}")]
    Data { case: String, message: String },
    #[error("case {case}: unknown quantity {quantity:?}")]
    UnknownQuantity { case: String, quantity: String },
    #[error(transparent)]
    Input(#[from] InputError),
    #[error(transparent)]
    Frame(#[from] FrameError),
    #[error(transparent)]
    Mass(#[from] MassError),
    #[error(transparent)]
    Population(#[from] PopulationError),
}

impl From<serde_json::Error> for CaseError {
    fn from(e: serde_json::Error) -> Self {
        CaseError::Input(e.into())
    }
}
