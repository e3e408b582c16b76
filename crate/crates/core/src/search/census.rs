//! Exhaustive search over all shapes of a given size inside a bounding box.
//!
//! Shapes are cell subsets of the `w x h` box, written as bitmasks with bit
//! `y * w + x`. Only subsets touching both the bottom row and the left column
//! are visited, so every fixed polyomino is seen once. The filters run
//! cheapest first: connectivity, then instance count, then the coloring
//! search.

use rayon::prelude::*;

use crate::lattice::{Cell, Polyomino};

use super::enumerate::count_prismatic_colorings;
use super::verify::pattern_space;
use super::{Budget, SearchConfig, SearchError};

/// A shape together with how many prismatic colorings it has.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct CensusEntry {
    pub shape: Polyomino,
    pub colorings: u64,
}

struct BoxGeometry {
    w: usize,
    h: usize,
    left_col: u64,
    right_col: u64,
    /// Pattern placements that fit inside the box.
    placements: Vec<u64>,
}

impl BoxGeometry {
    fn new(w: usize, h: usize, p: &Polyomino) -> Self {
        let mut left_col = 0;
        let mut right_col = 0;
        for y in 0..h {
            left_col |= 1 << (y * w);
            right_col |= 1 << (y * w + w - 1);
        }
        let (pw, ph) = p.dimensions();
        let mut placements = Vec::new();
        for dy in 0..h.saturating_sub(ph as usize - 1) {
            for dx in 0..w.saturating_sub(pw as usize - 1) {
                let mask = p.cells().iter().fold(0u64, |m, c| m | 1 << ((c.y as usize + dy) * w + c.x as usize + dx));
                placements.push(mask);
            }
        }
        BoxGeometry { w, h, left_col, right_col, placements }
    }

    fn connected(&self, mask: u64) -> bool {
        let mut reach = mask & mask.wrapping_neg();
        loop {
            let grow = reach
                | ((reach << 1) & !self.left_col)
                | ((reach >> 1) & !self.right_col)
                | (reach << self.w)
                | (reach >> self.w);
            let next = grow & mask;
            if next == reach {
                return reach == mask;
            }
            reach = next;
        }
    }

    fn instances(&self, mask: u64) -> usize {
        self.placements.iter().filter(|&&m| m & mask == m).count()
    }

    fn polyomino(&self, mask: u64) -> Polyomino {
        let cells = (0..self.w * self.h)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| Cell::new((i % self.w) as i32, (i / self.w) as i32));
        Polyomino::from_cells(cells).expect("mask was checked to be connected")
    }
}

fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Calls `visit` on every `size`-subset of bits `start..area` added to `mask`.
fn combinations<F: FnMut(u64)>(start: usize, area: usize, size: usize, mask: u64, visit: &mut F) {
    if size == 0 {
        visit(mask);
        return;
    }
    for i in start..=area - size {
        combinations(i + 1, area, size - 1, mask | 1 << i, visit);
    }
}

/// Every connected shape with `size` cells in a `bbox` box that has exactly
/// `n^|p|` instances of `p`, with its number of prismatic colorings (zero
/// counts are dropped). Sorted by shape.
pub fn shape_census(
    p: &Polyomino,
    n: u8,
    size: usize,
    bbox: (usize, usize),
    config: &SearchConfig,
) -> Result<Vec<CensusEntry>, SearchError> {
    let (w, h) = bbox;
    if w == 0 || h == 0 || w * h > 64 {
        return Err(SearchError::BadConfig(format!("bounding box {w}x{h} must be non-empty with at most 64 cells")));
    }
    if size == 0 || size > w * h {
        return Ok(Vec::new());
    }
    let area = w * h;
    let subsets = binomial(area as u64, size as u64);
    if subsets > config.node_limit as u128 {
        return Err(SearchError::BudgetExceeded { limit: config.node_limit });
    }
    let geo = BoxGeometry::new(w, h, p);
    let target = pattern_space(n, p.len());
    let budget = Budget::new(config.node_limit);
    let inner = SearchConfig { threads: 1, node_limit: config.node_limit };

    // Split on the first two cells; the first must sit in the bottom row.
    let mut seeds: Vec<(u64, usize)> = Vec::new();
    if size == 1 {
        seeds.push((1, 1));
    } else {
        for a in 0..w.min(area) {
            for b in a + 1..area {
                seeds.push((1 << a | 1 << b, b + 1));
            }
        }
    }
    let rest = size.saturating_sub(2);

    let task = |&(seed, start): &(u64, usize)| -> Result<Vec<CensusEntry>, SearchError> {
        let mut found = Vec::new();
        let mut candidates = Vec::new();
        if area - start >= rest {
            combinations(start, area, rest, seed, &mut |mask| {
                if mask & geo.left_col != 0 && geo.connected(mask) && geo.instances(mask) == target {
                    candidates.push(mask);
                }
            });
        }
        budget.spend(binomial((area - start.min(area)) as u64, rest as u64) as u64)?;
        for mask in candidates {
            let shape = geo.polyomino(mask);
            let colorings = count_prismatic_colorings(&shape, p, n, &inner)?;
            if colorings > 0 {
                found.push(CensusEntry { shape, colorings });
            }
        }
        Ok(found)
    };

    let chunks: Vec<Vec<CensusEntry>> = if config.effective_threads() <= 1 {
        seeds.iter().map(task).collect::<Result<_, _>>()?
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(config.effective_threads())
            .build()
            .map_err(|e| SearchError::BadConfig(e.to_string()))?;
        pool.install(|| seeds.par_iter().map(task).collect::<Result<_, _>>())?
    };
    let mut out: Vec<CensusEntry> = chunks.into_iter().flatten().collect();
    out.sort();
    Ok(out)
}

/// The shapes of [`shape_census`] without their counts.
pub fn find_minimal_shapes(
    p: &Polyomino,
    n: u8,
    size: usize,
    bbox: (usize, usize),
    config: &SearchConfig,
) -> Result<Vec<Polyomino>, SearchError> {
    Ok(shape_census(p, n, size, bbox, config)?.into_iter().map(|e| e.shape).collect())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn serial() -> SearchConfig {
        SearchConfig::default().with_threads(1)
    }

    #[test]
    fn binomials() {
        assert_eq!(binomial(25, 13), 5_200_300);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(3, 4), 0);
    }

    #[test]
    fn straight_domino_case() {
        let shapes = find_minimal_shapes(&Polyomino::straight(2), 2, 5, (5, 1), &serial()).unwrap();
        assert_eq!(shapes, vec![Polyomino::straight(5)]);
    }

    #[test]
    fn connectivity_mask_handles_row_wrap() {
        let geo = BoxGeometry::new(3, 2, &Polyomino::monomino());
        // Bits 2 (x=2,y=0) and 3 (x=0,y=1) are adjacent as integers but not on the lattice.
        assert!(!geo.connected(0b001100));
        assert!(geo.connected(0b000111));
        assert!(geo.connected(0b001001));
    }

    #[test]
    fn every_fixed_shape_seen_once() {
        // Fixed tetrominoes: 19, all of which fit a 4x4 box.
        let geo = BoxGeometry::new(4, 4, &Polyomino::monomino());
        let mut count = 0;
        combinations(0, 16, 4, 0, &mut |m| {
            let touches_bottom = m & 0b1111 != 0;
            if touches_bottom && m & geo.left_col != 0 && geo.connected(m) {
                count += 1;
            }
        });
        assert_eq!(count, 19);
    }

    #[test]
    fn box_too_big() {
        assert!(matches!(
            shape_census(&Polyomino::monomino(), 1, 1, (9, 9), &serial()),
            Err(SearchError::BadConfig(_))
        ));
    }
}
