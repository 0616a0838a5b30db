use thiserror::Error;

/// Everything that can go wrong in the toolkit.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("syntax error at offset {pos}: {msg}")]
    Syntax { pos: usize, msg: String },

    #[error("generator s({p},{q}) is out of bounds for {n} strands")]
    Bounds { p: usize, q: usize, n: usize },

    #[error("unsupported strand count {0} (expected 2..=64)")]
    StrandCount(usize),

    #[error("size mismatch: {0} vs {1} strands")]
    SizeMismatch(usize, usize),

    #[error("invalid label set: {0}")]
    LabelSet(String),

    #[error("not a permutation: {0}")]
    NotPermutation(String),

    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),

    #[error("collection is not symmetric: reflection {0} is missing")]
    NotSymmetric(String),

    #[error("relator #{index} does not map to the identity permutation")]
    NotHomomorphism { index: usize },

    #[error("word does not lie in the kernel of the quotient map")]
    NotInKernel,

    #[error("unknown builtin presentation `{0}`")]
    UnknownBuiltin(String),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn check_strands(n: usize) -> Result<()> {
    if (2..=crate::MAX_STRANDS).contains(&n) {
        Ok(())
    } else {
        Err(Error::StrandCount(n))
    }
}
