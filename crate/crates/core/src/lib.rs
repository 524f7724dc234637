//! Induced trees in colored graphs and digraphs: greedy color refinement,
//! out-tree and parity colorings, constructive searches for induced (rainbow)
//! copies of trees, and brute-force oracles to check them against.

pub mod coloring;
pub mod embed;
pub mod error;
pub mod experiment;
pub mod generators;
pub mod graph;
pub mod guards;
pub mod io;
pub mod oracle;

pub use error::{Error, Result};
