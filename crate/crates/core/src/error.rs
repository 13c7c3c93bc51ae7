//! Crate-wide error type.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("singular matrix")]
    SingularMatrix,
    #[error("singular bilinear form")]
    SingularForm,
    #[error("vector mixes parities")]
    NonHomogeneous,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("parity mismatch: {0}")]
    ParityMismatch(String),
    #[error("bracket is not a Lie superalgebra structure: {0}")]
    NotLie(String),
    #[error("precondition not satisfied: {0}")]
    Precondition(String),
    #[error("not admissible: {equation}")]
    NotAdmissible { equation: String },
    #[error("product ideal is non-degenerate; nothing to split")]
    NonDegenerateProduct,
    #[error("star product properties fail: {0}")]
    StarPropertiesFail(String),
    #[error("factor algebra is not associative")]
    HNotAssociative,
    #[error("factor algebra is not supercommutative")]
    HNotSupercommutative,
    #[error("invariance of the factor form fails")]
    OmegaNotInvariant,
    #[error("bad parameters: {0}")]
    BadParams(String),
    #[error("unknown family: {0}")]
    UnknownFamily(String),
    #[error("scan would enumerate {candidates} tensors, over the budget of {budget}")]
    GridTooLarge { candidates: u64, budget: u64 },
}
