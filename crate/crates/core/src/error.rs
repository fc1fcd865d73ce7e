use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("cover relation contains a cycle through `{0}`")]
    Cycle(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("invalid label `{0}`: labels must be nonempty and may not contain `|`")]
    InvalidLabel(String),
    #[error("vectors live on different posets")]
    PosetMismatch,
    #[error("poset is not a forest; witness {s} < {m} > {t} with {s}, {t} incomparable")]
    NotAForest { s: String, t: String, m: String },
    #[error("poset is a forest")]
    IsAForest,
    #[error("vector is not an upper bound of the witness pair")]
    NotAnUpperBound,
    #[error("not applicable: {0}")]
    NotApplicable(String),
    #[error("vector is not positive in Lex(S)")]
    NotPositive,
    #[error("vector is not in the cone")]
    NotInCone,
    #[error("vector does not live on the product of the given posets")]
    NotAProductPoset,
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("the wedge is the whole space; no closed half-space contains it")]
    NoHalfSpace,
    #[error("cone is not pointed")]
    NotPointed,
    #[error("cone generator {0} is the zero vector")]
    ZeroGenerator(usize),
    #[error("descent step produced an invalid upper bound")]
    DescentFailed,
    #[error("parse error: {0}")]
    Parse(String),
}

impl From<serde_json::Error> for Error {
    fn from(e: serde_json::Error) -> Self {
        Error::Parse(e.to_string())
    }
}
