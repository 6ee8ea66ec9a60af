//! Error type shared by all modules of the crate.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("corner ({a},{b}) out of range for ambient size {n}")]
    CornerOutOfRange { a: usize, b: usize, n: usize },

    #[error("coincident corners at ({a},{b})")]
    CoincidentCorners { a: usize, b: usize },

    #[error("corners cannot be sorted into a staircase: ({a1},{b1}) precedes ({a2},{b2})")]
    NotSortable {
        a1: usize,
        b1: usize,
        a2: usize,
        b2: usize,
    },

    #[error("operation undefined on the empty spec")]
    EmptySpec,

    #[error("biliaison step needs a pfaffian size of at least 2 at the chosen corner, got {t}")]
    StepNotApplicable { t: usize },

    #[error("corner index {k} out of range 1..={s}")]
    BadCornerIndex { k: usize, s: usize },

    #[error("unknown family: {name}")]
    UnknownFamily { name: String },

    #[error("bad parameters: {msg}")]
    BadParams { msg: String },

    #[error("hypothesis fails: {msg}")]
    HypothesisFails { msg: String },

    #[error("recursion depth guard tripped; this indicates a bug in the step rules")]
    NonTermination,

    #[error("pfaffian index subset has odd size {len}")]
    OddSubset { len: usize },

    #[error("matrix index {idx} out of range 1..={n}")]
    IndexOutOfRange { idx: usize, n: usize },

    #[error("generator count exceeds the cap of {cap}")]
    TooManyGenerators { cap: usize },

    #[error("pair reduction budget of {budget} exceeded")]
    BudgetExceeded { budget: usize },

    #[error("negative h-vector entry {value} in degree {index}")]
    NegativeHEntry { index: usize, value: i64 },
}

impl Error {
    pub fn bad_params(msg: impl Into<String>) -> Self {
        Error::BadParams { msg: msg.into() }
    }
}

pub type Result<T> = std::result::Result<T, Error>;
