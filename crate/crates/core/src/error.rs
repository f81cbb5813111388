use thiserror::Error;

/// Errors raised by constructions, checkers and verifiers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },

    #[error("modulus must be positive")]
    ZeroModulus,

    #[error("union of an empty list of multisets needs an explicit modulus")]
    EmptyUnion,

    #[error("duplicate residue {residue} in subset of Z_{modulus}")]
    DuplicateResidue { residue: u64, modulus: u64 },

    #[error("invalid graph: {0}")]
    InvalidGraph(String),

    #[error("invalid labelling: {0}")]
    InvalidLabelling(String),

    #[error("invalid parameter: {0}")]
    Parameter(String),

    #[error("check failed: {0}")]
    CheckFailed(String),

    #[error("structural error: {0}")]
    Structural(String),

    #[error("construction failed: {0}")]
    Construction(String),

    #[error("search refused: graph has {vertices} vertices, bound is {bound}")]
    SearchBound { vertices: usize, bound: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn param(msg: impl Into<String>) -> Error {
    Error::Parameter(msg.into())
}
