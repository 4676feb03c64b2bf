use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid inertial class: {0}")]
    InvalidClass(String),
    #[error("unknown inertial class `{0}`")]
    UnknownClass(String),
    #[error("point {0} is not self-dual")]
    NotSelfDual(String),
    #[error("type tag {tag} cannot be used with a {family} ambient group")]
    TypeMismatch { tag: String, family: String },
    #[error("dimension mismatch: ambient is {expected}, summands give {found}")]
    DimensionMismatch { expected: u32, found: u32 },
    #[error("summand multiset is not closed under duality: {0}")]
    NotDualClosed(String),
    #[error("summand {0} is not of the ambient type and has odd multiplicity")]
    OddMultiplicity(String),
    #[error("parameter is not multiplicity free: {0}")]
    NotMultiplicityFree(String),
    #[error("parameter is not normed: {0}")]
    NotNormed(String),
    #[error("invalid support datum: {0}")]
    InvalidSupport(String),
    #[error("determinant discrepancy is not an unramified sign: {0}")]
    DetDiscrepancy(String),
    #[error("semisimple class does not centralize: {0}")]
    NotCentralizing(String),
    #[error("q-scaling relation violated: {0}")]
    QScaling(String),
    #[error("size cap exceeded: {what} = {value} > {cap}")]
    CapExceeded {
        what: &'static str,
        value: u32,
        cap: u32,
    },
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
