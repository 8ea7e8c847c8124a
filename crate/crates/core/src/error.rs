use thiserror::Error;

/// Limits that tripped inside the Gröbner engine or the Hilbert sampler.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum BudgetExceeded {
    #[error("S-pair budget of {limit} reductions exhausted")]
    Pairs { limit: usize },
    #[error("total-degree cap {limit} exceeded (degree {degree})")]
    Degree { limit: u32, degree: u32 },
    #[error("Hilbert sampling cap {limit} reached without a stable fit")]
    Samples { limit: usize },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error("syntax error at position {position}: {message}")]
    Syntax { position: usize, message: String },

    #[error("unknown variable `{name}` at position {position}")]
    UnknownVariable { name: String, position: usize },

    #[error("polynomials belong to different rings")]
    RingMismatch,

    #[error("the zero polynomial has no multidegree")]
    ZeroPolynomial,

    #[error("polynomial is not multihomogeneous: {0}")]
    Inhomogeneous(String),

    #[error("multidegree {degree:?} is not a multiple of b = {b:?}")]
    NotInLattice { degree: Vec<u32>, b: Vec<u32> },

    #[error("invalid ring: {0}")]
    InvalidRing(String),

    #[error("invalid scroll specification: {0}")]
    InvalidSpec(String),

    #[error("matrix form not available: {0}")]
    Shape(String),

    #[error("unknown gallery entry `{0}`")]
    UnknownGallery(String),

    #[error("invalid gallery parameters: {0}")]
    InvalidParams(String),

    #[error("monomial ideal is the unit ideal")]
    UnitIdeal,

    #[error("Hilbert polynomial fit failed: {0}")]
    HilbertFit(String),

    #[error("budget exceeded: {0}")]
    Budget(#[from] BudgetExceeded),

    #[error("invalid document: {0}")]
    Document(#[from] serde_json::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    /// Stable machine-readable identifier for reports.
    pub fn code(&self) -> &'static str {
        match self {
            Error::Syntax { .. } | Error::UnknownVariable { .. } | Error::Document(_) => "parse",
            Error::Budget(_) => "budget",
            Error::Shape(_) => "shape",
            Error::InvalidSpec(_)
            | Error::InvalidRing(_)
            | Error::Inhomogeneous(_)
            | Error::NotInLattice { .. } => "invalid-spec",
            Error::UnknownGallery(_) | Error::InvalidParams(_) => "gallery",
            Error::RingMismatch | Error::ZeroPolynomial | Error::UnitIdeal => "domain",
            Error::HilbertFit(_) => "hilbert-fit",
            Error::Io(_) => "io",
        }
    }

    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self.code() {
            "parse" | "invalid-spec" | "gallery" | "shape" | "io" => 2,
            "budget" => 3,
            _ => 1,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
