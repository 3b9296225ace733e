//! Exact computation of the monotone-walk generating function
//! `M_α(x) = Σ_r m^r(α) x^r` on the transposition Cayley graph of the
//! symmetric group.
//!
//! The crate is `no_std` (it only needs `alloc`). Everything here is a pure
//! function of its inputs; file IO, thread pools and the command line live
//! in the companion `monowalk` crate.
//!
//! Module map:
//!
//! * [`exact`]: big integers, canonical rationals, factorial / binomial /
//!   Catalan helpers.
//! * [`partitions`]: partitions as nondecreasing part sequences, their
//!   dictionary order, Young-diagram statistics.
//! * [`characters`]: Murnaghan–Nakayama characters and full tables.
//! * [`genfun`]: evaluation and series coefficients of `M_α(x)`.
//! * [`walks`]: brute-force monotone-walk counting used as an oracle.
//! * [`scanner`]: monotonicity scans over all partitions of a degree.

#![no_std]

extern crate alloc;

pub mod characters;
pub mod exact;
pub mod genfun;
pub mod partitions;
pub mod scanner;
pub mod walks;

mod error;

pub use error::{Error, Result};
pub use exact::{ExactInt, ExactRat};
pub use partitions::Partition;
