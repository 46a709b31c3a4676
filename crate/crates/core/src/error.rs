use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus mismatch: {0} vs {1}")]
    ModulusMismatch(usize, usize),

    #[error("modulus {n} is outside the supported range {min}..={max}")]
    ModulusOutOfRange { n: usize, min: usize, max: usize },

    #[error("residue {residue} is out of range for modulus {n}")]
    ResidueOutOfRange { residue: usize, n: usize },

    #[error("{k} is not a unit modulo {n}")]
    NotAUnit { k: usize, n: usize },

    #[error("cardinality {card} is outside the supported range {min}..={max}")]
    CardinalityOutOfRange { card: usize, min: usize, max: usize },

    #[error("parse error at column {column}: {message}")]
    Parse { column: usize, message: String },

    #[error("precondition failed: {0}")]
    Precondition(String),

    #[error("contract violation: {0}")]
    ContractViolation(String),

    #[error("size limit exceeded: {size} > {limit}")]
    SizeLimit { size: usize, limit: usize },

    #[error("the T/I action on <X> is not simply transitive: {0} fixes X")]
    NotSimplyTransitive(String),
}

impl Error {
    pub(crate) fn parse(column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            column,
            message: message.into(),
        }
    }
}
