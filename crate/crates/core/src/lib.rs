//! Ordered Ramsey numbers of small k-ordered graphs.
//!
//! The crate is organised around four layers:
//!
//! - [`graph`], [`catalog`] and [`symmetry`] define unordered graphs, k-orderings,
//!   (possibly partial) ordered 2-colorings, the six connected 4-vertex graphs and
//!   the reversal / color-swap / automorphism symmetries acting on them.
//! - [`containment`] decides whether an ordered 2-coloring contains a
//!   monochromatic order-preserving copy of a k-ordering.
//! - [`search`] finds avoiding colorings, exhausts search trees to prove upper
//!   bounds, completes partial skeletons and computes exact values.
//! - [`bounds`] evaluates closed-form upper bounds and carries the table of known
//!   bounds for every 1-ordering of a connected 4-vertex graph.
//!
//! [`cli`] wires all of this to the `ordram` binary. Runnable walkthroughs live
//! under `examples/`.

pub mod bounds;
pub mod catalog;
pub mod cli;
pub mod containment;
pub mod error;
pub mod graph;
pub mod json;
pub mod search;
pub mod symmetry;

pub use catalog::{catalog, catalog_entry, CatalogEntry, GraphName};
pub use containment::{avoids, contains, count_embeddings, find_embedding, Embedding};
pub use error::{Error, Result};
pub use graph::{Color, KOrdering, OrderedColoring, UnorderedGraph};
pub use search::{
    count_avoiding, find_avoiding, ordered_ramsey, verify_certificate, RamseyResult, SearchBudget,
    SearchOutcome, SearchStatus,
};
