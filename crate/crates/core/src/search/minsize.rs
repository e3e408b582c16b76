//! Smallest shape containing a given number of pattern instances.
//!
//! Fixed polyominoes are grown cell by cell with Redelmeier's method, which
//! produces each fixed polyomino exactly once, and the instance count is
//! kept up to date as cells are placed and removed. A branch is cut when even
//! `|p|` new instances per remaining cell could not reach the target, and
//! nothing is grown beyond the best size found so far.

use crate::lattice::{Cell, Polyomino};

use super::{Budget, SearchConfig, SearchError};

/// The minimal size and every fixed shape attaining it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinSizeResult {
    pub size: usize,
    pub witnesses: Vec<Polyomino>,
}

struct Grid {
    width: usize,
    /// Offset added to lattice coordinates to get grid coordinates.
    origin: (i32, i32),
    occupied: Vec<bool>,
    seen: Vec<bool>,
}

impl Grid {
    fn index(&self, c: Cell) -> usize {
        (c.y + self.origin.1) as usize * self.width + (c.x + self.origin.0) as usize
    }
}

struct Grower<'a> {
    p: &'a [Cell],
    target: usize,
    cap: usize,
    grid: Grid,
    cells: Vec<Cell>,
    instances: usize,
    best: usize,
    witnesses: Vec<Polyomino>,
    budget: Budget,
    pending: u64,
}

impl Grower<'_> {
    /// Redelmeier's region: the upper half plane plus the right half of row 0.
    fn allowed(&self, c: Cell) -> bool {
        (c.y > 0 || (c.y == 0 && c.x >= 0)) && c.y < self.cap as i32 && c.x.abs() < self.cap as i32
    }

    /// Instances of `p` that contain `c` and lie inside the occupied cells.
    fn instances_through(&self, c: Cell) -> usize {
        self.p
            .iter()
            .filter(|q| {
                let v = c.minus(**q);
                self.p.iter().all(|r| self.grid.occupied[self.grid.index(r.translate(v))])
            })
            .count()
    }

    fn grow(&mut self, untried: &mut Vec<Cell>) -> Result<(), SearchError> {
        while let Some(c) = untried.pop() {
            self.pending += 1;
            if self.pending >= 1 << 16 {
                self.budget.spend(std::mem::take(&mut self.pending))?;
            }
            let idx = self.grid.index(c);
            self.grid.occupied[idx] = true;
            let gained = self.instances_through(c);
            self.instances += gained;
            self.cells.push(c);
            let size = self.cells.len();

            if self.instances >= self.target {
                if size < self.best {
                    self.best = size;
                    self.witnesses.clear();
                }
                if size == self.best {
                    let shape = Polyomino::from_cells(self.cells.iter().copied()).expect("grown cells are connected");
                    self.witnesses.push(shape);
                }
            } else if size < self.best.min(self.cap)
                && self.instances + (self.best.min(self.cap) - size) * self.p.len() >= self.target
            {
                let mut next = untried.clone();
                let mut marked = Vec::new();
                for nb in c.neighbors() {
                    if self.allowed(nb) {
                        let j = self.grid.index(nb);
                        if !self.grid.seen[j] {
                            self.grid.seen[j] = true;
                            marked.push(j);
                            next.push(nb);
                        }
                    }
                }
                let r = self.grow(&mut next);
                for j in marked {
                    self.grid.seen[j] = false;
                }
                r?;
            }

            self.cells.pop();
            self.instances -= gained;
            self.grid.occupied[idx] = false;
        }
        Ok(())
    }
}

/// Smallest number of cells of a polyomino with at least `instances`
/// translated copies of `p`, searching sizes up to `size_cap`.
pub fn min_size_with_instances(
    p: &Polyomino,
    instances: usize,
    size_cap: usize,
    config: &SearchConfig,
) -> Result<MinSizeResult, SearchError> {
    if instances == 0 {
        return Ok(MinSizeResult { size: 0, witnesses: Vec::new() });
    }
    let (pw, ph) = p.dimensions();
    let margin = pw.max(ph) as usize + 1;
    let width = 2 * size_cap + 2 * margin;
    let height = size_cap + 2 * margin;
    let grid = Grid {
        width,
        origin: ((size_cap + margin) as i32, margin as i32),
        occupied: vec![false; width * height],
        seen: vec![false; width * height],
    };
    let mut grower = Grower {
        p: p.cells(),
        target: instances,
        cap: size_cap,
        grid,
        cells: Vec::new(),
        instances: 0,
        best: size_cap + 1,
        witnesses: Vec::new(),
        budget: Budget::new(config.node_limit),
        pending: 0,
    };
    let start = Cell::new(0, 0);
    let idx = grower.grid.index(start);
    grower.grid.seen[idx] = true;
    grower.grow(&mut vec![start])?;
    grower.budget.spend(grower.pending)?;

    if grower.witnesses.is_empty() {
        return Err(SearchError::NoWitness { cap: size_cap });
    }
    let mut witnesses = grower.witnesses;
    witnesses.sort();
    witnesses.dedup();
    Ok(MinSizeResult { size: grower.best, witnesses })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg() -> SearchConfig {
        SearchConfig::default().with_threads(1)
    }

    fn fixed_count(size: usize) -> usize {
        min_size_with_instances(&Polyomino::monomino(), size, size, &cfg()).unwrap().witnesses.len()
    }

    #[test]
    fn fixed_polyomino_counts() {
        // Shapes with `s` cells contain exactly `s` monominoes, so the
        // witnesses at size `s` are all fixed polyominoes of that size.
        assert_eq!(fixed_count(1), 1);
        assert_eq!(fixed_count(2), 2);
        assert_eq!(fixed_count(3), 6);
        assert_eq!(fixed_count(4), 19);
        assert_eq!(fixed_count(5), 63);
        assert_eq!(fixed_count(6), 216);
        assert_eq!(fixed_count(7), 760);
    }

    #[test]
    fn square_tetromino_four_instances() {
        let r = min_size_with_instances(&Polyomino::square_tetromino(), 4, 12, &cfg()).unwrap();
        assert_eq!(r.size, 9);
        assert_eq!(r.witnesses, vec![Polyomino::rectangle(3, 3)]);
    }

    #[test]
    fn straight_pattern_needs_a_line() {
        let r = min_size_with_instances(&Polyomino::straight(3), 4, 8, &cfg()).unwrap();
        assert_eq!(r.size, 6);
        assert!(r.witnesses.contains(&Polyomino::straight(6)));
    }

    #[test]
    fn cap_too_small() {
        assert_eq!(
            min_size_with_instances(&Polyomino::square_tetromino(), 4, 8, &cfg()),
            Err(SearchError::NoWitness { cap: 8 })
        );
    }
}
