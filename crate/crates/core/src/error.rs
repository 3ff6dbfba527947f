use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arithmetic overflow while combining finite values")]
    Overflow,
    #[error("index {index} out of range 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("invalid range [{l}, {r}] for length {len}")]
    BadRange { l: usize, r: usize, len: usize },
    #[error("error probability must lie strictly between 0 and 1")]
    InvalidEpsilon,
    #[error("charge constant must be positive and finite")]
    InvalidChargeConstant,
    #[error("operation budget {q} is invalid for padded length {n_padded}")]
    InvalidBudget { q: usize, n_padded: usize },
    #[error("operation budget of {q} already exhausted")]
    BudgetExhausted { q: usize },
    #[error("k = {k} out of range 1..={len}")]
    KOutOfRange { k: usize, len: usize },
    #[error("array must contain at least one element")]
    EmptyArray,
    #[error("invalid workload: {0}")]
    InvalidWorkload(&'static str),
    #[error("cannot parse {what} from {token:?}")]
    Parse {
        what: &'static str,
        token: alloc::string::String,
    },
}

pub type Result<T> = core::result::Result<T, Error>;
