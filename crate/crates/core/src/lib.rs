//! Base, normal, near-normal and T-sequences.
//!
//! - [`seqcore`]: autocorrelation, sums, and the defining checks.
//! - [`codec`]: the compact digit format for sequence pairs.
//! - [`search`]: exhaustive search with case splitting, equivalence classes
//!   and checkpoints.
//! - [`construct`]: T-sequences, orthogonal designs, Hadamard matrices and
//!   Golay pairs.
//! - [`catalog`]: published witnesses and existence status.
//! - [`cli`]: the `nnseq` command line.

pub mod catalog;
pub mod cli;
pub mod codec;
pub mod construct;
pub mod search;
pub mod seqcore;

pub use seqcore::{
    npaf, sequence_sum, sum_of_squares_check, verify_quadruple, BinarySeq, Failure, LagProfile, QuadKind, SeqQuadruple,
    SumsVector, TernarySeq, VerificationReport,
};
