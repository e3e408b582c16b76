use std::fmt;
use std::str::FromStr;

use super::{Cell, CellSet, LatticeError};

/// Unimodular maps of the lattice used to carry solutions between shapes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum LatticeMap {
    /// `(x, y) -> (x - y, y)`: each row moves one cell right of the row above.
    RowShift,
    /// `(x, y) -> (y, -x - y)`, of order three.
    ThirdTurn,
    /// `(x, y) -> (y, x)`.
    Transpose,
}

impl LatticeMap {
    pub const ALL: [LatticeMap; 3] = [LatticeMap::RowShift, LatticeMap::ThirdTurn, LatticeMap::Transpose];

    pub fn apply(self, c: Cell) -> Cell {
        match self {
            LatticeMap::RowShift => Cell::new(c.x - c.y, c.y),
            LatticeMap::ThirdTurn => Cell::new(c.y, -c.x - c.y),
            LatticeMap::Transpose => Cell::new(c.y, c.x),
        }
    }

    pub fn apply_inverse(self, c: Cell) -> Cell {
        match self {
            LatticeMap::RowShift => Cell::new(c.x + c.y, c.y),
            LatticeMap::ThirdTurn => Cell::new(-c.x - c.y, c.x),
            LatticeMap::Transpose => Cell::new(c.y, c.x),
        }
    }

    pub fn apply_set(self, s: &CellSet) -> CellSet {
        s.cells().iter().map(|&c| self.apply(c)).collect()
    }

    pub fn name(self) -> &'static str {
        match self {
            LatticeMap::RowShift => "row-shift",
            LatticeMap::ThirdTurn => "third-turn",
            LatticeMap::Transpose => "transpose",
        }
    }
}

impl fmt::Display for LatticeMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for LatticeMap {
    type Err = LatticeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "row-shift" | "rowshift" | "shift" => Ok(LatticeMap::RowShift),
            "third-turn" | "turn" => Ok(LatticeMap::ThirdTurn),
            "transpose" | "swap" => Ok(LatticeMap::Transpose),
            other => Err(LatticeError::UnknownMap(other.to_string())),
        }
    }
}

/// The row shift of an uncolored set.
pub fn row_shift(s: &CellSet) -> CellSet {
    LatticeMap::RowShift.apply_set(s)
}
