//! Fault-tolerant diameter oracles.
//!
//! The oracles in this crate answer "what is the (ST-)diameter of `G - F`?"
//! for failure sets `F` of at most `f` edges. None of them stores replacement
//! distances directly; every reduction consults a distance sensitivity oracle
//! (DSO) through the [`dso::AllPairsDso`] or [`dso::SingleSourceDso`]
//! interfaces and combines the answers with a small amount of precomputed
//! shortest-path information.
//!
//! | oracle | DSO | stretch |
//! |---|---|---|
//! | [`fdo::FdoAllPairs`] | all-pairs | `1 + σ` |
//! | [`fdo::FdoSingleSource`] | single-source | `2 + 2σ` |
//! | [`fdo_st::FdoSt`] | all-pairs | `1 + 3σ` |
//! | [`single_source::FdoSourceTargets`] | single-source | `1 + 2σ` |
//! | [`single_source::FdoStCombined`] (black box) | single-source | `3 + 6σ` |
//! | [`single_source::FdoStCombined`] (combined) | single-source | `2 + 5σ` |
//!
//! [`exact`] is an independent brute-force ground truth and
//! [`lowerbound`] builds the dual-failure graphs whose diameter is either at
//! most 3 or at least 5.

pub mod distance;
pub mod dso;
pub mod error;
pub mod exact;
pub mod fdo;
pub mod fdo_st;
pub mod generate;
pub mod graph;
pub mod lowerbound;
pub mod oracle;
pub mod single_source;

pub use distance::{DiameterEstimate, Distance, Stretch};
pub use error::{Error, Result};
pub use graph::{EdgeId, FailureSet, Graph, VertexId};
pub use oracle::DiameterOracle;
