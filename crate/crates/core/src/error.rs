use thiserror::Error;

/// A row or column of a matrix. Indices are stored 0-based and printed 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Line {
    Row(usize),
    Col(usize),
}

impl std::fmt::Display for Line {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Line::Row(i) => write!(f, "row {}", i + 1),
            Line::Col(j) => write!(f, "column {}", j + 1),
        }
    }
}

/// Errors raised by the library.
///
/// Every index carried by a variant is 0-based; the `Display` output is 1-based.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix must have at least one row and one column")]
    EmptyGrid,
    #[error("row {} has {found} entries, expected {expected}", .row + 1)]
    Ragged { row: usize, expected: usize, found: usize },
    #[error("entry ({}, {}) would be {value}, outside {{-1, 0, +1}}", .row + 1, .col + 1)]
    EntryOutOfRange { row: usize, col: usize, value: i32 },
    #[error("matrix is {rows}x{cols}, not square")]
    NotSquare { rows: usize, cols: usize },
    #[error("{line}: partial sum leaves {{0, 1}} at position {}", .position + 1)]
    PartialSumOutOfRange { line: Line, position: usize },
    #[error("{line}: total sum is {sum}, expected 1")]
    TotalSumNotOne { line: Line, sum: i32 },
    #[error("vector lengths differ ({left} vs {right})")]
    LengthMismatch { left: usize, right: usize },
    #[error("order {n} not allowed: {reason}")]
    BadOrder { n: usize, reason: String },
    #[error("infeasible row sum vector: {0}")]
    InfeasibleRowSums(String),
    #[error("entry ({}, {}) is not +1", .row + 1, .col + 1)]
    NotAPlusOne { row: usize, col: usize },
    #[error("bad insertion slots: {0}")]
    BadSlots(String),
    #[error("cycle must have even length at least 4, got {0}")]
    BadCycle(usize),
    #[error("matrix is not symmetric")]
    NotSymmetric,
    #[error("index {} out of range for order {n}", .index + 1)]
    IndexOutOfRange { index: usize, n: usize },
    #[error("result is not an ASM: {0}")]
    NotAsm(Box<Error>),
    #[error("orders differ ({left} vs {right})")]
    OrderMismatch { left: usize, right: usize },
    #[error("second matrix is not an extension of the first")]
    NotAnExtension,
    #[error("order {n} exceeds the enumeration guard {cap}")]
    OrderTooLarge { n: usize, cap: usize },
    #[error("not a permutation: {0}")]
    InvalidPermutation(String),
    #[error("bad interchange move: {0}")]
    InvalidMove(String),
    #[error("cycle signs must be +1 or -1")]
    BadCycleSign,
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
