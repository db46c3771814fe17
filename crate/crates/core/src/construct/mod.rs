//! Constructions built on verified sequence objects: T-sequences from base
//! sequences, orthogonal designs from T-sequences, Hadamard matrices from
//! designs, and Golay pairs feeding normal sequences.
//!
//! Every construction is checked by an independent verifier before its
//! result is handed back.

mod golay;
mod od;
mod tseq;

use thiserror::Error;

pub use golay::{
    golay_double, golay_search, golay_search_with_limit, golay_to_ns, is_golay_number, parse_golay_seeds, GolayPair,
    GOLAY_SEARCH_LIMIT,
};
pub use od::{hadamard_from_od, od_substitute, ts_to_od, verify_od, IntMatrix, SymbolicEntry, SymbolicMatrix};
pub use tseq::bs_to_ts;

#[derive(Debug, Error)]
pub enum ConstructError {
    #[error("input is not a base-sequence quadruple: {0}")]
    NotBase(String),
    #[error("input is not a T-sequence quadruple: {0}")]
    NotTSequence(String),
    #[error("construction failed its own verification: {0}")]
    SelfCheck(String),
    #[error("design has zero support; Hadamard substitution needs every entry nonzero")]
    ZeroSupport,
    #[error("bad substitution values: {0}")]
    BadValues(String),
    #[error("invalid Golay pair: {0}")]
    InvalidPair(String),
    #[error("Golay search length {len} exceeds limit {limit}")]
    OverBudget { len: usize, limit: usize },
    #[error("parse error on line {line}: {msg}")]
    Parse { line: usize, msg: String },
}
