//! Perfect codes in hypercubes and in the run-constrained subgraphs
//! they induce.
//!
//! The crate builds distance-3 perfect codes of the n-cube by the
//! recursive parity extension, including a bias choice that keeps every
//! codeword free of long 1-runs, so the same code is perfect in the
//! generalized Fibonacci cube forbidding that run. Verification is by
//! full domination sweep; small instances can also be searched
//! exhaustively for all perfect codes via exact cover.
//!
//! Modules:
//! - [`bitword`]: fixed-length binary words packed into a `u64`.
//! - [`codes`]: code constructions, file format, domination sweeps.
//! - [`avoidance`]: forbidden-substring subgraphs of the cube.
//! - [`search`]: exhaustive perfect-code search and consistency scans.

pub mod avoidance;
pub mod bitword;
pub mod codes;
pub mod error;
pub mod search;

pub use avoidance::AvoidanceGraph;
pub use bitword::Word;
pub use codes::{BiasFunction, Code, VerificationReport, VerifyStatus, Witness};
pub use error::{Error, Result};
pub use search::SearchOutcome;
