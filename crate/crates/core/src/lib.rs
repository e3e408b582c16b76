//! De Bruijn and prismatic polyominoes: colored fixed polyominoes that
//! contain every coloring of a small pattern exactly once.
//!
//! * [`lattice`]: cells, fixed polyominoes, colorings, lattice geometry and
//!   the unimodular maps between shapes.
//! * [`debruijn`]: de Bruijn sequences (generation, checking, enumeration,
//!   exact counts).
//! * [`cock`]: the row-rotation construction of square-window colorings.
//! * [`shapes`]: parametric shape families and structural analyses.
//! * [`search`]: verifier, exhaustive coloring enumeration and shape search.
//! * [`cli`]: the `prismatic` command-line tool.

pub mod cli;
pub mod cock;
pub mod debruijn;
pub mod lattice;
pub mod search;
pub mod shapes;

pub use lattice::{Cell, CellSet, ColoredPolyomino, Polyomino};
