//! Recoloring walks between proper colorings of sparse graphs.
//!
//! Given a graph whose maximum average degree is at most `d - epsilon` (or
//! any `d`-degenerate graph), and two proper `k`-colorings with `k >= d + 1`,
//! the engine emits an explicit sequence of single-vertex recolorings from
//! one to the other, every intermediate coloring proper. The sequence is built
//! from a degree-depth partition of the graph by recursive color elimination,
//! and its per-vertex length is bounded by [`recolor::EliminationBound`].
//!
//! [`oracle`] answers the same questions exhaustively on tiny instances.

pub mod coloring;
pub mod degeneracy;
pub mod density;
pub mod flow;
pub mod graph;
pub mod layering;
pub mod oracle;
pub mod recolor;
pub mod scalar;

pub use coloring::{is_proper, Coloring, ColoringError};
pub use degeneracy::{degeneracy_ordering, DegeneracyOrdering};
pub use density::{format_rational, mad_brute, mad_exact, parse_rational};
pub use graph::{parse_graph, Graph, GraphError};
pub use scalar::Scalar;

/// Vertex ids are `0..n`.
pub type Vertex = usize;

/// Colors are `1..=k`.
pub type Color = u32;

/// Exact density type used throughout.
pub type Rational = num_rational::Ratio<i64>;

/// Wider density type for graphs too large for `i64` flow capacities.
pub type WideRational = num_rational::Ratio<i128>;
