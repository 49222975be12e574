//! Double domination on maximal outerplanar graphs and 2-trees.
//!
//! The crate provides certified recognizers for maximal outerplanar graphs
//! (MOPs) and 2-trees, two coloring-based double dominating set
//! constructions with provable size bounds, an exact branch-and-bound
//! oracle, and generators for the extremal families on which those bounds
//! are tight.
//!
//! ```
//! use ddmop_core::{generators, rainbow, exact};
//!
//! let g = generators::generate_fan(8).unwrap();
//! let heuristic = rainbow::dispatch_bound(&g).unwrap();
//! let optimum = exact::exact_gamma_x2(&g, None).unwrap();
//! assert!(optimum.optimum <= heuristic.set.len());
//! ```

pub mod bounds;
pub mod error;
pub mod exact;
pub mod generators;
pub mod graph;
pub mod graphfile;
pub mod peel;
pub mod rainbow;
pub mod recognition;
pub mod report;

pub use error::{Error, MopRejection, Result, TwoTreeRejection};
pub use graph::{DominationResult, Graph, Method, VertexSet};
pub use recognition::{OuterplaneEmbedding, PeelSequence, PeelStep};
