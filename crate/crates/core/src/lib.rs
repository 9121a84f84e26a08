//! Integrality of Cayley graphs of finite permutation groups.
//!
//! For a normal connection set `S` (a union of conjugacy classes) the class
//! sum `S̄` is central in the group algebra, so the spectrum of `Cay(G, S)`
//! is `{ω_χ(S̄) : χ ∈ Irr(G)}` where `ω_χ` are the central characters, and
//! the eigenvalue `ω_χ(S̄)` occurs with multiplicity `χ(1)²`. This crate
//!
//! * enumerates small permutation groups ([`permgroup`]),
//! * builds the class algebra and its integer structure constants ([`classalgebra`]),
//! * classifies connection sets as symmetric, normal or Euler ([`subsets`]),
//! * certifies integrality exactly through the characteristic polynomial of
//!   the `k × k` class matrix of `S̄`, and cross-checks against a dense
//!   eigendecomposition of the adjacency matrix ([`spectra`]),
//! * exposes all of it through the `cayint` command-line tool ([`cli`]).

pub mod classalgebra;
pub mod cli;
pub mod error;
pub mod permgroup;
pub mod spectra;
pub mod subsets;

pub use error::{Error, Result};
