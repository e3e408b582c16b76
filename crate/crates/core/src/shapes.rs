//! Parametric shape families and the structural counts used in the
//! minimality arguments for the T tetromino and the L tromino.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::lattice::{instances_of, Cell, LatticeError, Polyomino};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ShapeError {
    #[error("height must be at least 1 (got {0})")]
    BadHeight(u32),
    #[error("invalid trim: {0}")]
    BadTrim(String),
    #[error(transparent)]
    Lattice(#[from] LatticeError),
}

/// Center-aligned rows of lengths `1, 3, ..., 2N-1`, the longest at the
/// bottom.
pub fn ziggurat(height: u32) -> Result<Polyomino, ShapeError> {
    if height == 0 {
        return Err(ShapeError::BadHeight(height));
    }
    let n = height as i32;
    let cells = (0..n).flat_map(|y| (y..=2 * n - 2 - y).map(move |x| Cell::new(x, y)));
    Ok(Polyomino::from_cells(cells)?)
}

/// Left-aligned rows of lengths `1, 2, ..., N` from the top down.
pub fn pyramid(height: u32) -> Result<Polyomino, ShapeError> {
    if height == 0 {
        return Err(ShapeError::BadHeight(height));
    }
    let n = height as i32;
    let cells = (0..n).flat_map(|y| (0..n - y).map(move |x| Cell::new(x, y)));
    Ok(Polyomino::from_cells(cells)?)
}

/// A run of pyramid cells starting at one of its three corners. Removing the
/// first `k` cells of a run removes exactly `k` L-tromino instances.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Trim {
    /// From the top cell down the sloped side.
    TopDiag,
    /// From the top cell down the left column.
    TopCol,
    /// From the bottom-right cell leftward along the bottom row.
    BottomRightRow,
    /// From the bottom-right cell up the sloped side.
    BottomRightDiag,
    /// From the bottom-left cell rightward along the bottom row.
    BottomLeftRow,
    /// From the bottom-left cell up the left column.
    BottomLeftCol,
}

impl Trim {
    pub const ALL: [Trim; 6] = [
        Trim::TopDiag,
        Trim::TopCol,
        Trim::BottomRightRow,
        Trim::BottomRightDiag,
        Trim::BottomLeftRow,
        Trim::BottomLeftCol,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Trim::TopDiag => "top-diag",
            Trim::TopCol => "top-col",
            Trim::BottomRightRow => "bottom-right-row",
            Trim::BottomRightDiag => "bottom-right-diag",
            Trim::BottomLeftRow => "bottom-left-row",
            Trim::BottomLeftCol => "bottom-left-col",
        }
    }

    /// The `i`th cell of the run in a pyramid of the given height.
    fn cell(self, height: i32, i: i32) -> Cell {
        let top = height - 1;
        match self {
            Trim::TopDiag => Cell::new(i, top - i),
            Trim::TopCol => Cell::new(0, top - i),
            Trim::BottomRightRow => Cell::new(top - i, 0),
            Trim::BottomRightDiag => Cell::new(top - i, i),
            Trim::BottomLeftRow => Cell::new(i, 0),
            Trim::BottomLeftCol => Cell::new(0, i),
        }
    }
}

impl fmt::Display for Trim {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Trim {
    type Err = ShapeError;

    fn from_str(s: &str) -> Result<Self, ShapeError> {
        let t = match s.trim().to_ascii_lowercase().as_str() {
            "top-diag" | "top" | "top-left-diag" => Trim::TopDiag,
            "top-col" => Trim::TopCol,
            "bottom-right-row" | "bottom-right" => Trim::BottomRightRow,
            "bottom-right-diag" => Trim::BottomRightDiag,
            "bottom-left-row" | "bottom-left" => Trim::BottomLeftRow,
            "bottom-left-col" => Trim::BottomLeftCol,
            other => return Err(ShapeError::BadTrim(format!("unknown corner `{other}`"))),
        };
        Ok(t)
    }
}

/// `pyramid(height)` with the first `k` cells of `trim` removed.
///
/// Fails for `k >= height`, and for the two runs whose last cell would leave
/// an isolated corner behind when `k = height - 1`.
pub fn pyramid_trimmed(height: u32, trim: Trim, k: u32) -> Result<Polyomino, ShapeError> {
    let base = pyramid(height)?;
    if k >= height {
        return Err(ShapeError::BadTrim(format!("cannot remove {k} cells from a run of {height}")));
    }
    let removed: Vec<Cell> = (0..k as i32).map(|i| trim.cell(height as i32, i)).collect();
    let cells = base.cells().iter().copied().filter(|c| !removed.contains(c));
    Polyomino::from_cells(cells)
        .map_err(|_| ShapeError::BadTrim(format!("removing {k} cells along {trim} disconnects the pyramid")))
}

/// Per-row cell counts and T-tetromino top-cell counts, rows listed from
/// the top down.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RowProfile {
    /// Cells in each row.
    pub rows: Vec<usize>,
    /// Cells in each row but the bottom one that are the top cell of some
    /// T-tetromino instance.
    pub tops: Vec<usize>,
}

pub fn row_profile(p: &Polyomino) -> RowProfile {
    let h = p.height() as usize;
    let mut rows = vec![0; h];
    for c in p.cells() {
        rows[h - 1 - c.y as usize] += 1;
    }
    let t = Polyomino::t_tetromino();
    let top_offset = Cell::new(1, 1);
    let mut tops = vec![0; h.saturating_sub(1)];
    for v in instances_of(&t, p.cells()) {
        let top = v.translate(top_offset);
        tops[h - 1 - top.y as usize] += 1;
    }
    RowProfile { rows, tops }
}

/// Which L-tromino roles a cell plays: as the corner (central), the cell to
/// its right, or the cell above it.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Roles {
    pub central: bool,
    pub top: bool,
    pub right: bool,
}

impl Roles {
    pub fn is_empty(self) -> bool {
        !(self.central || self.top || self.right)
    }
}

impl fmt::Display for Roles {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_empty() {
            return f.write_str("-");
        }
        f.write_str("S_")?;
        for (on, tag) in [(self.central, 'c'), (self.top, 't'), (self.right, 'r')] {
            if on {
                write!(f, "{tag}")?;
            }
        }
        Ok(())
    }
}

/// Cells of a shape grouped by their exact L-tromino role set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RolePartition {
    pub s_t: usize,
    pub s_r: usize,
    pub s_c: usize,
    pub s_tr: usize,
    pub s_ct: usize,
    pub s_cr: usize,
    pub s_ctr: usize,
    pub x_t: usize,
    pub x_r: usize,
    pub x_c: usize,
    pub instances: usize,
    /// Cells in no instance at all.
    pub role_free: Vec<Cell>,
    #[serde(skip)]
    pub labels: Vec<(Cell, Roles)>,
    #[serde(skip)]
    width: usize,
    #[serde(skip)]
    height: usize,
}

impl RolePartition {
    pub fn size(&self) -> usize {
        self.labels.len()
    }

    pub fn label(&self, c: Cell) -> Option<Roles> {
        self.labels.iter().find(|(d, _)| *d == c).map(|(_, r)| *r)
    }

    /// `|P| = |X_c| + |S_t| + |S_r| + |S_tr|`; needs every cell to have a role.
    pub fn satisfies_count_identity(&self) -> bool {
        self.size() == self.x_c + self.s_t + self.s_r + self.s_tr
    }

    /// `|P| >= |X_c| + max(w, h)`.
    pub fn satisfies_width_bound(&self) -> bool {
        self.size() >= self.x_c + self.width.max(self.height)
    }
}

pub fn role_partition(p: &Polyomino) -> RolePartition {
    let l = Polyomino::l_tromino();
    let mut labels: Vec<(Cell, Roles)> = p.cells().iter().map(|&c| (c, Roles::default())).collect();
    let vs = instances_of(&l, p.cells());
    let mut mark = |c: Cell, f: fn(&mut Roles)| {
        let i = p.cells().binary_search(&c).expect("instance cells lie in the shape");
        f(&mut labels[i].1);
    };
    for &v in &vs {
        mark(v, |r| r.central = true);
        mark(v.translate(Cell::new(1, 0)), |r| r.right = true);
        mark(v.translate(Cell::new(0, 1)), |r| r.top = true);
    }
    let count =
        |c: bool, t: bool, r: bool| labels.iter().filter(|(_, x)| *x == Roles { central: c, top: t, right: r }).count();
    RolePartition {
        s_t: count(false, true, false),
        s_r: count(false, false, true),
        s_c: count(true, false, false),
        s_tr: count(false, true, true),
        s_ct: count(true, true, false),
        s_cr: count(true, false, true),
        s_ctr: count(true, true, true),
        x_t: labels.iter().filter(|(_, r)| r.top).count(),
        x_r: labels.iter().filter(|(_, r)| r.right).count(),
        x_c: labels.iter().filter(|(_, r)| r.central).count(),
        instances: vs.len(),
        role_free: labels.iter().filter(|(_, r)| r.is_empty()).map(|(c, _)| *c).collect(),
        width: p.width() as usize,
        height: p.height() as usize,
        labels,
    }
}
