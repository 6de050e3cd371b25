//! Reducibility of graphs in digital topology.
//!
//! A graph is *reducible* when some non-surjective self-map moves every
//! vertex at most one step and keeps adjacent vertices adjacent or equal.
//! This crate decides reducibility, reduces graphs to irreducible cores,
//! enumerates the connected irreducible graphs of small order, and builds
//! puzzle levels whose win condition is exactly a reduction.
//!
//! * [`graph`], [`pixels`], [`graph6`], [`iso`]: the graph model and its
//!   interchange formats.
//! * [`reduce`]: verification and search for reduction maps.
//! * [`canon`], [`enumerate`]: canonical labelling and the irreducible
//!   catalog.
//! * [`levels`], [`layout`], [`solutions`]: the puzzle game back end.

mod bits;
pub mod canon;
pub mod enumerate;
pub mod error;
pub mod gallery;
pub mod graph;
pub mod graph6;
pub mod iso;
pub mod layout;
pub mod levels;
pub mod pixels;
pub mod reduce;
pub mod solutions;

pub use bits::VertexSet;
pub use canon::{canonical_form, CanonicalForm};
pub use enumerate::{classify, enumerate_connected, CatalogEntry, Classification};
pub use error::{Error, Result};
pub use graph::Graph;
pub use iso::are_isomorphic;
pub use levels::{check_win, generate_levels, Level};
pub use pixels::{from_pixels, AdjacencyMode, PixelImage, Point};
pub use reduce::{
    enumerate_reductions, find_reduction, is_reducible, reduce_fully, reduce_step, verify_reduction,
    Placement, ReductionMap, ReductionReport, ReductionVerdict,
};
pub use solutions::{SolutionRecord, SolutionStore};
