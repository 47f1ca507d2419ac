//! Generating trees for pattern-avoiding inversion sequences and restricted
//! growth sequences.
//!
//! The crate builds the pattern-avoidance tree of a forbidden-pattern set,
//! discovers its succession rules by bounded plane-tree isomorphism checks,
//! counts avoiders three independent ways (pruned DFS, rule-based dynamic
//! programming over a parametric rule language, and exact generating-function
//! expansion), and ships a catalog of rule systems, closed-form series, and
//! counting formulas that can be cross-verified against each other.
//!
//! The crate is `no_std` (with `alloc`); IO, parallel drivers, and the
//! command-line front end live in the companion `gentree-cli` crate.

#![cfg_attr(not(test), no_std)]

extern crate alloc;

pub mod catalog;
pub mod closure;
pub mod discover;
pub mod error;
pub mod iso;
pub mod oracle;
pub mod rules;
pub mod seq;
pub mod series;
pub mod tree;

pub use closure::{l_tau, PatternSet};
pub use error::{Error, Result};
pub use seq::{contains, extension_ok, is_valid, Pattern, SeqKind, Word};
pub use tree::Budget;
