//! Cells of the square lattice, fixed polyominoes and colorings.
//!
//! Coordinates are Cartesian: `x` grows to the right and `y` grows upward.
//! A [`Polyomino`] is always stored in canonical form (translated so that the
//! minimum `x` and minimum `y` are both zero, cells sorted by `(x, y)`), so two
//! polyominoes compare equal exactly when they are the same fixed shape.

mod color;
mod format;
mod geometry;
mod transform;

use std::collections::{HashSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub use color::{ColoredCellSet, ColoredPattern, ColoredPolyomino};
pub use format::{parse_ascii, render_ascii, JsonCell, JsonShape};
pub use geometry::{pick_quantities, PickQuantities};
pub use transform::{row_shift, LatticeMap};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LatticeError {
    #[error("empty cell set")]
    EmptySet,
    #[error("cell set is not edge-connected")]
    Disconnected,
    #[error("translation ({0}, {1}) does not place the pattern inside the shape")]
    NotAnInstance(i32, i32),
    #[error("unknown lattice map `{0}`")]
    UnknownMap(String),
    #[error("color {color} at ({x}, {y}) is outside 1..={n}")]
    BadColor { x: i32, y: i32, color: u8, n: u8 },
    #[error("cell ({0}, {1}) appears more than once")]
    DuplicateCell(i32, i32),
    #[error("coloring has {got} entries for {want} cells")]
    ColoringLength { got: usize, want: usize },
    #[error("parse error: {0}")]
    Parse(String),
}

/// A unit square of the lattice, named by its lower-left corner. Also used
/// as a translation vector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell {
    pub x: i32,
    pub y: i32,
}

impl Cell {
    pub const fn new(x: i32, y: i32) -> Self {
        Cell { x, y }
    }

    pub const fn translate(self, v: Cell) -> Cell {
        Cell::new(self.x + v.x, self.y + v.y)
    }

    pub const fn minus(self, v: Cell) -> Cell {
        Cell::new(self.x - v.x, self.y - v.y)
    }

    pub fn neighbors(self) -> [Cell; 4] {
        [
            Cell::new(self.x + 1, self.y),
            Cell::new(self.x - 1, self.y),
            Cell::new(self.x, self.y + 1),
            Cell::new(self.x, self.y - 1),
        ]
    }
}

impl From<(i32, i32)> for Cell {
    fn from((x, y): (i32, i32)) -> Self {
        Cell::new(x, y)
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

/// An arbitrary finite set of cells, possibly disconnected and not normalized.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CellSet {
    cells: Vec<Cell>,
}

impl CellSet {
    /// Builds a set from any cells; duplicates collapse.
    pub fn new<I: IntoIterator<Item = Cell>>(cells: I) -> Self {
        let mut cells: Vec<Cell> = cells.into_iter().collect();
        cells.sort_unstable();
        cells.dedup();
        CellSet { cells }
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.binary_search(&c).is_ok()
    }

    pub fn translate(&self, v: Cell) -> CellSet {
        CellSet { cells: self.cells.iter().map(|c| c.translate(v)).collect() }
    }

    pub fn is_connected(&self) -> bool {
        is_connected(&self.cells)
    }
}

impl FromIterator<Cell> for CellSet {
    fn from_iter<I: IntoIterator<Item = Cell>>(iter: I) -> Self {
        CellSet::new(iter)
    }
}

impl From<&Polyomino> for CellSet {
    fn from(p: &Polyomino) -> Self {
        CellSet { cells: p.cells.clone() }
    }
}

/// True iff `cells` is non-empty and edge-connected.
pub fn is_connected(cells: &[Cell]) -> bool {
    let Some(&start) = cells.first() else {
        return false;
    };
    let all: HashSet<Cell> = cells.iter().copied().collect();
    let mut seen = HashSet::with_capacity(all.len());
    let mut queue = VecDeque::from([start]);
    seen.insert(start);
    while let Some(c) = queue.pop_front() {
        for nb in c.neighbors() {
            if all.contains(&nb) && seen.insert(nb) {
                queue.push_back(nb);
            }
        }
    }
    seen.len() == all.len()
}

/// A fixed polyomino in canonical form.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Polyomino {
    cells: Vec<Cell>,
}

impl Polyomino {
    /// Canonicalizes a connected cell collection.
    pub fn from_cells<I: IntoIterator<Item = Cell>>(cells: I) -> Result<Self, LatticeError> {
        normalize(&CellSet::new(cells))
    }

    pub fn from_coords(coords: &[(i32, i32)]) -> Result<Self, LatticeError> {
        Self::from_cells(coords.iter().map(|&c| Cell::from(c)))
    }

    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    /// Always false; kept for clippy's `len_without_is_empty`.
    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    pub fn contains(&self, c: Cell) -> bool {
        self.cells.binary_search(&c).is_ok()
    }

    /// `(width, height)`.
    pub fn dimensions(&self) -> (u32, u32) {
        let w = self.cells.iter().map(|c| c.x).max().unwrap_or(0) + 1;
        let h = self.cells.iter().map(|c| c.y).max().unwrap_or(0) + 1;
        (w as u32, h as u32)
    }

    pub fn width(&self) -> u32 {
        self.dimensions().0
    }

    pub fn height(&self) -> u32 {
        self.dimensions().1
    }

    pub fn to_cell_set(&self) -> CellSet {
        CellSet::from(self)
    }

    /// Every translation `v` with `self + v` inside `cells`, sorted.
    pub fn instances_in(&self, cells: &[Cell]) -> Vec<Cell> {
        instances_of(self, cells)
    }

    // Built-in patterns, in the fixed orientations used throughout the crate.

    pub fn monomino() -> Self {
        Polyomino::raw(&[(0, 0)])
    }

    /// `straight(k)`: `k` cells in one row.
    pub fn straight(k: u32) -> Self {
        assert!(k >= 1, "straight polyomino needs at least one cell");
        Polyomino { cells: (0..k as i32).map(|x| Cell::new(x, 0)).collect() }
    }

    pub fn rectangle(w: u32, h: u32) -> Self {
        assert!(w >= 1 && h >= 1, "rectangle needs positive sides");
        let mut cells = Vec::with_capacity((w * h) as usize);
        for x in 0..w as i32 {
            for y in 0..h as i32 {
                cells.push(Cell::new(x, y));
            }
        }
        Polyomino { cells }
    }

    pub fn square_tetromino() -> Self {
        Polyomino::raw(&[(0, 0), (0, 1), (1, 0), (1, 1)])
    }

    /// Upper row offset one cell to the left of the lower row.
    pub fn z_tetromino() -> Self {
        Polyomino::raw(&[(0, 1), (1, 0), (1, 1), (2, 0)])
    }

    /// Three cells in a row with one cell above the middle.
    pub fn t_tetromino() -> Self {
        Polyomino::raw(&[(0, 0), (1, 0), (1, 1), (2, 0)])
    }

    /// Three cells in a row with one cell above the left end.
    pub fn l_tetromino() -> Self {
        Polyomino::raw(&[(0, 0), (0, 1), (1, 0), (2, 0)])
    }

    /// Central cell at the origin, right cell at `(1,0)`, top cell at `(0,1)`.
    pub fn l_tromino() -> Self {
        Polyomino::raw(&[(0, 0), (0, 1), (1, 0)])
    }

    fn raw(coords: &[(i32, i32)]) -> Self {
        let p = Polyomino::from_coords(coords).expect("built-in shape is valid");
        debug_assert_eq!(p.cells.len(), coords.len());
        p
    }
}

impl fmt::Display for Polyomino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_ascii(&self.cells, |_| '#'))
    }
}

/// Translates a connected cell set to the origin.
pub fn normalize(cells: &CellSet) -> Result<Polyomino, LatticeError> {
    if cells.is_empty() {
        return Err(LatticeError::EmptySet);
    }
    if !cells.is_connected() {
        return Err(LatticeError::Disconnected);
    }
    Ok(Polyomino { cells: translate_to_origin(cells.cells()) })
}

/// Shifts cells so min x = min y = 0 and sorts them. No connectivity check.
pub(crate) fn translate_to_origin(cells: &[Cell]) -> Vec<Cell> {
    let mx = cells.iter().map(|c| c.x).min().unwrap_or(0);
    let my = cells.iter().map(|c| c.y).min().unwrap_or(0);
    let mut out: Vec<Cell> = cells.iter().map(|c| Cell::new(c.x - mx, c.y - my)).collect();
    out.sort_unstable();
    out
}

/// All translations `v` such that `p + v` lies inside `cells`, sorted
/// lexicographically.
pub fn instances_of(p: &Polyomino, cells: &[Cell]) -> Vec<Cell> {
    let anchor = p.cells[0];
    let set: HashSet<Cell> = cells.iter().copied().collect();
    let mut out: Vec<Cell> = cells
        .iter()
        .map(|&c| c.minus(anchor))
        .filter(|&v| p.cells.iter().all(|q| set.contains(&q.translate(v))))
        .collect();
    out.sort_unstable();
    out.dedup();
    out
}
