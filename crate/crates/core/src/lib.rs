//! Graph valuations, blow-up constructions and exact verification of
//! digraph-defined external difference families in cyclic groups.

pub mod edf;
pub mod error;
pub mod families;
pub mod graph;
pub mod oracle;
pub mod valuation;
pub mod zmod;

pub use error::{Error, Result};
