#![forbid(unsafe_code)]

//! Algorithms on matching covered graphs and r-graphs.
//!
//! The crate enumerates perfect matchings of small loopless multigraphs and
//! builds everything else on top of that oracle: the dependence relation
//! between edges and its equivalence classes, solitary edges and solitary
//! patterns, even-2-cut decomposition into 3-edge-connected pieces, r-graph
//! certification and edge coloring, constructive generators and recognizers
//! for the graph families these notions characterize, and a verification
//! harness that checks the characterizations over exhaustive small corpora.
//!
//! Start with [`graph::MultiGraph`] and [`matching::enumerate_pms`]; the
//! `examples/` directory contains one runnable program per major capability.
//!
//! ```
//! use matchcov::{dependence, families, matching};
//!
//! let g = families::k4();
//! let ms = matching::enumerate_pms(&g)?;
//! assert_eq!(ms.pm_count(), 3);
//!
//! // Every edge lies in exactly one matching, in pairs: pattern (2,2,2).
//! let analysis = dependence::analyze(&g)?;
//! assert_eq!(analysis.pattern.to_string(), "(2,2,2)");
//! assert_eq!(analysis.classes.len(), 3);
//! # Ok::<(), Box<dyn std::error::Error>>(())
//! ```

pub mod bitset;
pub mod canon;
pub mod classify;
pub mod cuts;
pub mod dependence;
pub mod families;
pub mod graph;
pub mod io;
pub mod matching;
pub mod rgraph;

pub use graph::{Cut, MultiGraph, VertexSet};
pub use matching::{MatchingSet, PerfectMatching};
