//! Certified decision procedures for {1,2}-factors (Sachs subgraphs),
//! k-{1,2}-factor-criticality and its minimality, planarity and
//! k-planarity, and the critical difference of small simple graphs, plus an
//! exhaustive verification harness for degree bounds on minimal critical
//! graphs.
//!
//! Every positive or negative answer comes with a certificate that can be
//! re-verified independently of the algorithm that produced it.

pub mod critical_structure;
pub mod criticality;
pub mod error;
pub mod graph;
pub mod harness;
pub mod matching;
pub mod planarity;
pub mod sachs;

pub use error::{Error, Result};
pub use graph::{EdgeRef, Graph, Relabeling, VertexSet};
