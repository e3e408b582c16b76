use std::collections::HashMap;
use std::fmt;

use super::{normalize, Cell, CellSet, LatticeError, LatticeMap, Polyomino};

/// A polyomino with every cell colored from `1..=n`.
///
/// `colors[i]` is the color of `shape.cells()[i]`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoredPolyomino {
    shape: Polyomino,
    n: u8,
    colors: Vec<u8>,
}

impl ColoredPolyomino {
    pub fn new(shape: Polyomino, n: u8, colors: Vec<u8>) -> Result<Self, LatticeError> {
        if colors.len() != shape.len() {
            return Err(LatticeError::ColoringLength { got: colors.len(), want: shape.len() });
        }
        for (c, &color) in shape.cells().iter().zip(&colors) {
            check_color(*c, color, n)?;
        }
        Ok(ColoredPolyomino { shape, n, colors })
    }

    /// Every cell gets `color`.
    pub fn uniform(shape: Polyomino, n: u8, color: u8) -> Result<Self, LatticeError> {
        let colors = vec![color; shape.len()];
        Self::new(shape, n, colors)
    }

    /// Builds from explicitly placed colored cells; the result is translated
    /// to canonical position.
    pub fn from_colored_cells<I>(n: u8, cells: I) -> Result<Self, LatticeError>
    where
        I: IntoIterator<Item = (Cell, u8)>,
    {
        ColoredCellSet::new(n, cells)?.into_polyomino()
    }

    pub fn shape(&self) -> &Polyomino {
        &self.shape
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn colors(&self) -> &[u8] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color_at(&self, c: Cell) -> Option<u8> {
        self.shape.cells().binary_search(&c).ok().map(|i| self.colors[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (Cell, u8)> + '_ {
        self.shape.cells().iter().copied().zip(self.colors.iter().copied())
    }

    /// The coloring carried by the instance `p + v`.
    pub fn coloring_of_instance(&self, p: &Polyomino, v: Cell) -> Result<ColoredPattern, LatticeError> {
        let colors = p
            .cells()
            .iter()
            .map(|q| self.color_at(q.translate(v)))
            .collect::<Option<Vec<u8>>>()
            .ok_or(LatticeError::NotAnInstance(v.x, v.y))?;
        Ok(ColoredPattern { shape: p.clone(), colors })
    }

    /// Colors read row by row from the top row down, left to right.
    pub fn row_major_word(&self) -> Vec<u8> {
        let mut order: Vec<usize> = (0..self.len()).collect();
        let cells = self.shape.cells();
        order.sort_by_key(|&i| (std::cmp::Reverse(cells[i].y), cells[i].x));
        order.into_iter().map(|i| self.colors[i]).collect()
    }

    pub fn to_colored_cell_set(&self) -> ColoredCellSet {
        ColoredCellSet { n: self.n, cells: self.iter().collect() }
    }

    /// Applies a lattice map cell by cell and re-canonicalizes.
    ///
    /// Fails with [`LatticeError::Disconnected`] when the image is not a
    /// polyomino.
    pub fn map(&self, map: LatticeMap) -> Result<ColoredPolyomino, LatticeError> {
        self.to_colored_cell_set().map(map).into_polyomino()
    }
}

impl fmt::Display for ColoredPolyomino {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&super::format::render_colored_ascii(self))
    }
}

fn check_color(c: Cell, color: u8, n: u8) -> Result<(), LatticeError> {
    if color == 0 || color > n {
        return Err(LatticeError::BadColor { x: c.x, y: c.y, color, n });
    }
    Ok(())
}

/// A colored set of cells that need not be connected or canonical, such as
/// the image of a colored polyomino under a lattice map.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredCellSet {
    n: u8,
    cells: Vec<(Cell, u8)>,
}

impl ColoredCellSet {
    pub fn new<I>(n: u8, cells: I) -> Result<Self, LatticeError>
    where
        I: IntoIterator<Item = (Cell, u8)>,
    {
        let mut cells: Vec<(Cell, u8)> = cells.into_iter().collect();
        cells.sort_unstable_by_key(|&(c, _)| c);
        for w in cells.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(LatticeError::DuplicateCell(w[0].0.x, w[0].0.y));
            }
        }
        for &(c, color) in &cells {
            check_color(c, color, n)?;
        }
        Ok(ColoredCellSet { n, cells })
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn cells(&self) -> &[(Cell, u8)] {
        &self.cells
    }

    pub fn cell_set(&self) -> CellSet {
        CellSet::new(self.cells.iter().map(|&(c, _)| c))
    }

    pub fn is_connected(&self) -> bool {
        self.cell_set().is_connected()
    }

    pub fn map(&self, map: LatticeMap) -> ColoredCellSet {
        let mut cells: Vec<(Cell, u8)> = self.cells.iter().map(|&(c, k)| (map.apply(c), k)).collect();
        cells.sort_unstable_by_key(|&(c, _)| c);
        ColoredCellSet { n: self.n, cells }
    }

    /// Translation-normalizes the set into a colored polyomino.
    pub fn into_polyomino(self) -> Result<ColoredPolyomino, LatticeError> {
        let shape = normalize(&self.cell_set())?;
        let by_cell: HashMap<Cell, u8> = self.cells.iter().copied().collect();
        let offset = Cell::new(
            self.cells.iter().map(|(c, _)| c.x).min().unwrap_or(0),
            self.cells.iter().map(|(c, _)| c.y).min().unwrap_or(0),
        );
        let colors = shape.cells().iter().map(|c| by_cell[&c.translate(offset)]).collect();
        Ok(ColoredPolyomino { shape, n: self.n, colors })
    }
}

/// A coloring of a small pattern `p`: colors listed in `p`'s canonical cell
/// order.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoredPattern {
    pub shape: Polyomino,
    pub colors: Vec<u8>,
}

impl ColoredPattern {
    /// Packs the colors base `n`, first cell most significant, so keys sort
    /// like the color tuples.
    pub fn key(&self, n: u8) -> usize {
        pack_colors(&self.colors, n)
    }

    pub fn from_key(shape: Polyomino, n: u8, mut key: usize) -> Self {
        let mut colors = vec![0u8; shape.len()];
        for slot in colors.iter_mut().rev() {
            *slot = (key % n as usize) as u8 + 1;
            key /= n as usize;
        }
        ColoredPattern { shape, colors }
    }
}

pub(crate) fn pack_colors(colors: &[u8], n: u8) -> usize {
    colors.iter().fold(0usize, |acc, &c| acc * n as usize + (c as usize - 1))
}

impl fmt::Display for ColoredPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.colors.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn instance_coloring_all_ones() {
        let big = Polyomino::rectangle(5, 5);
        let cp = ColoredPolyomino::uniform(big, 2, 1).unwrap();
        let pat = cp.coloring_of_instance(&Polyomino::square_tetromino(), Cell::new(2, 1)).unwrap();
        assert_eq!(pat.colors, vec![1, 1, 1, 1]);
    }

    #[test]
    fn not_an_instance() {
        let cp = ColoredPolyomino::uniform(Polyomino::rectangle(3, 3), 2, 1).unwrap();
        assert_eq!(
            cp.coloring_of_instance(&Polyomino::square_tetromino(), Cell::new(2, 0)),
            Err(LatticeError::NotAnInstance(2, 0))
        );
    }

    #[test]
    fn bad_colors_rejected() {
        let sq = Polyomino::square_tetromino();
        assert!(ColoredPolyomino::new(sq.clone(), 2, vec![1, 2, 3, 1]).is_err());
        assert!(ColoredPolyomino::new(sq.clone(), 2, vec![0, 1, 1, 1]).is_err());
        assert!(ColoredPolyomino::new(sq, 2, vec![1, 1]).is_err());
    }

    #[test]
    fn duplicate_cells_rejected() {
        let err = ColoredCellSet::new(2, [(Cell::new(0, 0), 1), (Cell::new(0, 0), 2)]);
        assert_eq!(err, Err(LatticeError::DuplicateCell(0, 0)));
    }

    #[test]
    fn from_colored_cells_tracks_colors() {
        let cp =
            ColoredPolyomino::from_colored_cells(3, [(Cell::new(4, 7), 3), (Cell::new(5, 7), 1), (Cell::new(4, 8), 2)])
                .unwrap();
        assert_eq!(cp.color_at(Cell::new(0, 0)), Some(3));
        assert_eq!(cp.color_at(Cell::new(1, 0)), Some(1));
        assert_eq!(cp.color_at(Cell::new(0, 1)), Some(2));
    }

    #[test]
    fn row_major_word_reads_top_down() {
        let cp = ColoredPolyomino::from_colored_cells(
            2,
            [(Cell::new(0, 0), 1), (Cell::new(1, 0), 1), (Cell::new(0, 1), 2), (Cell::new(1, 1), 1)],
        )
        .unwrap();
        assert_eq!(cp.row_major_word(), vec![2, 1, 1, 1]);
    }

    #[test]
    fn pattern_keys_round_trip() {
        let sq = Polyomino::square_tetromino();
        for key in 0..81 {
            let pat = ColoredPattern::from_key(sq.clone(), 3, key);
            assert_eq!(pat.key(3), key);
        }
        let lo = ColoredPattern::from_key(sq.clone(), 2, 0);
        assert_eq!(lo.colors, vec![1, 1, 1, 1]);
        let hi = ColoredPattern::from_key(sq, 2, 15);
        assert_eq!(hi.colors, vec![2, 2, 2, 2]);
    }
}
