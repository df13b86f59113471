//! Exact computation of GKM equivariant cohomology of moment graphs, the
//! dot action of the Weyl group on it, and the characters of the resulting
//! representations.

pub mod actions;
pub mod error;
pub mod exact;
pub mod filtration;
pub mod gkm;
pub mod graph;
pub mod partition;
pub mod report;
pub mod reps;
pub mod springer;
pub mod weyl;

pub use error::{Error, Result};
