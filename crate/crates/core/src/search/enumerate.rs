//! Branch-and-prune enumeration of de Bruijn colorings of a fixed shape.
//!
//! Cells are colored one at a time in row-major order, top row first. Each
//! instance of the pattern is checked at the moment its last cell receives a
//! color; a partial coloring dies as soon as two completed instances carry the
//! same pattern coloring. Colorings therefore come out in lexicographic order
//! of their row-major color word.
//!
//! For parallel runs the search is split on the colorings of the first two
//! rows (fewer cells when those rows are wide). Each prefix is searched
//! independently and the per-prefix results are concatenated in prefix order,
//! so the output does not depend on the thread count.

use std::cmp::Reverse;

use rayon::prelude::*;

use crate::lattice::{instances_of, Cell, ColoredPolyomino, Polyomino};

use super::verify::pattern_space;
use super::{Budget, SearchConfig, SearchError};

/// Largest number of candidate prefixes handed out as parallel tasks.
const MAX_PREFIXES: usize = 1 << 12;

struct Problem {
    n: u8,
    /// Shape cells in search order.
    order: Vec<Cell>,
    /// `canonical[i]` is the search position of the shape's `i`th canonical cell.
    canonical: Vec<usize>,
    /// Instances that become fully colored at each position, as search
    /// positions in the pattern's canonical cell order.
    completing: Vec<Vec<Vec<usize>>>,
    space: usize,
    instances: usize,
}

impl Problem {
    fn new(shape: &Polyomino, p: &Polyomino, n: u8) -> Self {
        let mut order: Vec<Cell> = shape.cells().to_vec();
        order.sort_by_key(|c| (Reverse(c.y), c.x));
        let position = |c: Cell| order.iter().position(|&o| o == c).expect("instance cells lie in the shape");
        let canonical = shape.cells().iter().map(|&c| position(c)).collect();
        let mut completing = vec![Vec::new(); order.len()];
        let vs = instances_of(p, shape.cells());
        for &v in &vs {
            let cells: Vec<usize> = p.cells().iter().map(|q| position(q.translate(v))).collect();
            let last = *cells.iter().max().unwrap();
            completing[last].push(cells);
        }
        Problem { n, canonical, completing, space: pattern_space(n, p.len()), instances: vs.len(), order }
    }

    fn key(&self, colors: &[u8], cells: &[usize]) -> usize {
        cells.iter().fold(0usize, |acc, &i| acc * self.n as usize + (colors[i] - 1) as usize)
    }

    /// Default split depth: the first two rows, capped so that the number of
    /// raw prefixes stays at most `MAX_PREFIXES`.
    fn split_depth(&self) -> usize {
        let top = self.order.first().map(|c| c.y).unwrap_or(0);
        let mut depth = self.order.iter().take_while(|c| c.y >= top - 1).count();
        while depth > 0 && (self.n as f64).powi(depth as i32) > MAX_PREFIXES as f64 {
            depth -= 1;
        }
        depth
    }

    fn to_colored(&self, shape: &Polyomino, word: &[u8]) -> ColoredPolyomino {
        let colors = self.canonical.iter().map(|&i| word[i]).collect();
        ColoredPolyomino::new(shape.clone(), self.n, colors).expect("search colors are in range")
    }
}

struct Dfs<'a> {
    prob: &'a Problem,
    colors: Vec<u8>,
    used: Vec<bool>,
    budget: &'a Budget,
    pending: u64,
}

impl<'a> Dfs<'a> {
    fn new(prob: &'a Problem, budget: &'a Budget) -> Self {
        Dfs { prob, colors: vec![0; prob.order.len()], used: vec![false; prob.space], budget, pending: 0 }
    }

    /// Seeds the search with an already-checked prefix.
    fn with_prefix(prob: &'a Problem, budget: &'a Budget, prefix: &[u8]) -> Self {
        let mut dfs = Dfs::new(prob, budget);
        dfs.colors[..prefix.len()].copy_from_slice(prefix);
        for pos in 0..prefix.len() {
            for inst in &prob.completing[pos] {
                let key = prob.key(&dfs.colors, inst);
                debug_assert!(!dfs.used[key]);
                dfs.used[key] = true;
            }
        }
        dfs
    }

    /// Marks the instances completed at `pos`; on a clash undoes its own marks.
    fn try_place(&mut self, pos: usize) -> bool {
        let insts = &self.prob.completing[pos];
        for (j, inst) in insts.iter().enumerate() {
            let key = self.prob.key(&self.colors, inst);
            if self.used[key] {
                for earlier in &insts[..j] {
                    let k = self.prob.key(&self.colors, earlier);
                    self.used[k] = false;
                }
                return false;
            }
            self.used[key] = true;
        }
        true
    }

    fn unplace(&mut self, pos: usize) {
        for inst in &self.prob.completing[pos] {
            let key = self.prob.key(&self.colors, inst);
            self.used[key] = false;
        }
    }

    fn run<F: FnMut(&[u8])>(&mut self, pos: usize, stop: usize, sink: &mut F) -> Result<(), SearchError> {
        if pos == stop {
            sink(&self.colors[..stop]);
            return Ok(());
        }
        for c in 1..=self.prob.n {
            self.pending += 1;
            if self.pending >= 1 << 16 {
                self.budget.spend(std::mem::take(&mut self.pending))?;
            }
            self.colors[pos] = c;
            if self.try_place(pos) {
                let r = self.run(pos + 1, stop, sink);
                self.unplace(pos);
                r?;
            }
        }
        self.colors[pos] = 0;
        Ok(())
    }

    fn finish(&mut self) -> Result<(), SearchError> {
        self.budget.spend(std::mem::take(&mut self.pending))
    }
}

/// Runs `task` for every surviving prefix, in parallel per `config`, and
/// returns the per-prefix results in prefix order.
fn fan_out<T, F>(prob: &Problem, config: &SearchConfig, task: F) -> Result<Vec<T>, SearchError>
where
    T: Send,
    F: Fn(&mut Dfs<'_>, usize) -> Result<T, SearchError> + Sync,
{
    let budget = Budget::new(config.node_limit);
    let depth = prob.split_depth();
    let mut prefixes: Vec<Vec<u8>> = Vec::new();
    {
        let mut dfs = Dfs::new(prob, &budget);
        dfs.run(0, depth, &mut |w| prefixes.push(w.to_vec()))?;
        dfs.finish()?;
    }
    let work = |prefix: &Vec<u8>| {
        let mut dfs = Dfs::with_prefix(prob, &budget, prefix);
        let out = task(&mut dfs, depth)?;
        dfs.finish()?;
        Ok(out)
    };
    if config.effective_threads() <= 1 {
        return prefixes.iter().map(work).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.effective_threads())
        .build()
        .map_err(|e| SearchError::BadConfig(e.to_string()))?;
    pool.install(|| prefixes.par_iter().map(work).collect())
}

/// All colorings of `shape` that contain exactly one instance of each
/// `n`-coloring of `p`, in lexicographic order of the row-major color word.
///
/// Returns an empty list when the instance count of `p` in `shape` is not
/// `n^|p|`, since no coloring can then qualify.
pub fn enumerate_prismatic_colorings(
    shape: &Polyomino,
    p: &Polyomino,
    n: u8,
    config: &SearchConfig,
) -> Result<Vec<ColoredPolyomino>, SearchError> {
    let prob = Problem::new(shape, p, n);
    if prob.instances != prob.space {
        return Ok(Vec::new());
    }
    let len = prob.order.len();
    let chunks = fan_out(&prob, config, |dfs, depth| {
        let mut found = Vec::new();
        dfs.run(depth, len, &mut |w| found.push(w.to_vec()))?;
        Ok(found)
    })?;
    Ok(chunks.into_iter().flatten().map(|w| prob.to_colored(shape, &w)).collect())
}

/// Number of colorings [`enumerate_prismatic_colorings`] would return.
pub fn count_prismatic_colorings(
    shape: &Polyomino,
    p: &Polyomino,
    n: u8,
    config: &SearchConfig,
) -> Result<u64, SearchError> {
    let prob = Problem::new(shape, p, n);
    if prob.instances != prob.space {
        return Ok(0);
    }
    let len = prob.order.len();
    let counts = fan_out(&prob, config, |dfs, depth| {
        let mut count = 0u64;
        dfs.run(depth, len, &mut |_| count += 1)?;
        Ok(count)
    })?;
    Ok(counts.into_iter().sum())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::search::is_debruijn_coloring;

    fn serial() -> SearchConfig {
        SearchConfig { threads: 1, ..SearchConfig::default() }
    }

    /// Tries every coloring; only for tiny shapes.
    fn brute(shape: &Polyomino, p: &Polyomino, n: u8) -> Vec<ColoredPolyomino> {
        let cells = shape.len() as u32;
        let mut out = Vec::new();
        for code in 0..(n as u64).pow(cells) {
            let mut colors = vec![0u8; cells as usize];
            let mut rest = code;
            for slot in colors.iter_mut() {
                *slot = (rest % n as u64) as u8 + 1;
                rest /= n as u64;
            }
            let cp = ColoredPolyomino::new(shape.clone(), n, colors).unwrap();
            if is_debruijn_coloring(&cp, p).is_debruijn {
                out.push(cp);
            }
        }
        out.sort_by_key(|cp| cp.row_major_word());
        out
    }

    #[test]
    fn matches_brute_force_on_small_shapes() {
        let cases = [
            (Polyomino::straight(5), Polyomino::straight(2), 2),
            (Polyomino::straight(10), Polyomino::straight(3), 2),
            (Polyomino::straight(10), Polyomino::straight(2), 3),
            (Polyomino::rectangle(3, 3), Polyomino::square_tetromino(), 1),
            (
                Polyomino::from_coords(&[(0, 0), (1, 0), (2, 0), (3, 0), (0, 1), (1, 1), (2, 1), (0, 2), (1, 2)])
                    .unwrap(),
                Polyomino::l_tromino(),
                2,
            ),
        ];
        for (shape, p, n) in cases {
            let fast = enumerate_prismatic_colorings(&shape, &p, n, &serial()).unwrap();
            let slow = brute(&shape, &p, n);
            assert_eq!(fast, slow, "shape\n{shape}");
            assert_eq!(count_prismatic_colorings(&shape, &p, n, &serial()).unwrap(), slow.len() as u64);
        }
    }

    #[test]
    fn instance_count_mismatch_gives_nothing() {
        let r =
            enumerate_prismatic_colorings(&Polyomino::rectangle(4, 4), &Polyomino::square_tetromino(), 2, &serial())
                .unwrap();
        assert!(r.is_empty());
    }

    #[test]
    fn budget_is_enforced() {
        let cfg = SearchConfig { threads: 1, node_limit: 10 };
        let r = enumerate_prismatic_colorings(&Polyomino::rectangle(5, 5), &Polyomino::square_tetromino(), 2, &cfg);
        assert!(matches!(r, Err(SearchError::BudgetExceeded { .. })));
    }

    #[test]
    fn thread_count_does_not_change_output() {
        let shape = Polyomino::straight(10);
        let p = Polyomino::straight(3);
        let one = enumerate_prismatic_colorings(&shape, &p, 2, &serial()).unwrap();
        let four =
            enumerate_prismatic_colorings(&shape, &p, 2, &SearchConfig { threads: 4, ..SearchConfig::default() })
                .unwrap();
        assert_eq!(one, four);
        assert_eq!(one.len(), 16);
    }
}
