use thiserror::Error;

use crate::buffers::Stage;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SusError {
    #[error("input text is empty")]
    EmptyText,

    #[error("input of {0} bytes exceeds the largest supported length")]
    TextTooLong(usize),

    #[error("mismatch budget k={k} must satisfy {min} <= k < n={n}")]
    InvalidMismatchBudget { k: usize, min: usize, n: usize },

    #[error("work buffers hold {found} cells, text has {expected} bytes")]
    BufferLength { expected: usize, found: usize },

    #[error("work buffers are at stage {found:?}, expected {expected}")]
    StageOrder { expected: &'static str, found: Stage },

    #[error("hamming distance needs equal lengths, got {0} and {1}")]
    LengthMismatch(usize, usize),
}
