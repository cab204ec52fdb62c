//! Bijections between pattern-avoiding partitions and fillings.

pub mod chunks;
pub mod fall;
pub mod hybrid;
pub mod landscape;
pub mod semican;
pub mod tails;
