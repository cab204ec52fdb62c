//! Pattern avoidance in set partitions.
//!
//! The crate counts set partitions avoiding a pattern, groups patterns into
//! equivalence classes by their counts, and implements a family of explicit
//! bijections between avoidance classes of partitions and of 0-1 fillings of
//! Ferrers shapes and stack polyominoes.
//!
//! Sequences are 1-based `u8` symbols throughout. See [`seqcore`] for the
//! representation of partitions.

#![deny(missing_docs)]

pub mod bijections;
pub mod containment;
pub mod enumeration;
mod error;
pub mod fillings;
pub mod formulas;
pub mod seqcore;

pub use error::{Error, Result};
pub use seqcore::{Partition, SymbolSeq};
