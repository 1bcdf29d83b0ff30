// SPDX-License-Identifier: Apache-2.0

use std::fmt;

use thiserror::Error;

/// Which axis of a Cayley table a Latin-square violation was found on.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Line {
    Row,
    Column,
}

impl fmt::Display for Line {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Line::Row => f.write_str("row"),
            Line::Column => f.write_str("column"),
        }
    }
}

/// Coarse classification used to pick a process exit code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ErrorKind {
    /// Malformed user input: bad tables, bad specs, bad files.
    Input,
    /// An order cap or search budget stopped the computation.
    Limit,
    /// Two independent computations disagreed.
    Verification,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("Cayley table is empty")]
    EmptyTable,
    #[error("Cayley table is not square: row {row} has {len} entries, expected {expected}")]
    NotSquare { row: usize, len: usize, expected: usize },
    #[error("entry {value} at ({row}, {col}) is outside 0..{order}")]
    EntryOutOfRange { row: usize, col: usize, value: usize, order: usize },
    #[error("not a Latin square: {line} {index} repeats element {element}")]
    NotLatinSquare { line: Line, index: usize, element: usize },
    #[error("no two-sided identity element")]
    NoIdentity,
    #[error("element {element} has no inverse")]
    NoInverse { element: usize },
    #[error("not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("element index {index} out of range for a group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
    #[error("order {order} exceeds the order cap {cap}")]
    OrderCapExceeded { order: u128, cap: usize },
    #[error("automorphism search exceeded its budget of {budget} extensions")]
    BudgetExceeded { budget: u64 },
    #[error("residue r={r} is invalid for p={p}, q={q}: need 1 < r < p and r^q = 1 mod p")]
    InvalidResidue { p: u64, q: u64, r: u64 },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("group is not abelian")]
    NotAbelian,
    #[error("group is cyclic")]
    IsCyclic,
    #[error("orders {left} and {right} are not coprime")]
    NotCoprime { left: usize, right: usize },
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("semantic error: {0}")]
    Semantic(String),
    #[error("{path}: {message}")]
    Io { path: String, message: String },
    #[error("line {line}: {message}")]
    Format { line: usize, message: String },
    #[error("abelian formula gives {formula} but brute-force search finds {brute}")]
    FormulaMismatch { formula: String, brute: String },
}

impl Error {
    pub fn kind(&self) -> ErrorKind {
        match self {
            Error::OrderCapExceeded { .. } | Error::BudgetExceeded { .. } => ErrorKind::Limit,
            Error::FormulaMismatch { .. } => ErrorKind::Verification,
            _ => ErrorKind::Input,
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
