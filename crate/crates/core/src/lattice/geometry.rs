//! Lattice-point counts for polyominoes viewed as polygons with holes.

use serde::Serialize;

use super::Polyomino;

/// Area, boundary, interior and hole counts of a polyomino.
///
/// `boundary` is the length of the boundary (number of unit edges). On a
/// shape whose boundary loops never touch, that is the same as the number of
/// lattice points on the boundary; `boundary_points` keeps the raw point count
/// and `pinch_points` counts the corners where two loops touch, so
/// `boundary == boundary_points + pinch_points`.
///
/// `holes` counts bounded components of the complement, treating two empty
/// cells that share only a corner as joined. With these conventions
/// `boundary / 2 == area + 1 - interior - holes` for every polyomino.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct PickQuantities {
    pub area: u32,
    pub boundary: u32,
    pub interior: u32,
    pub holes: u32,
    pub boundary_points: u32,
    pub pinch_points: u32,
}

impl PickQuantities {
    /// Checks `B/2 = A + 1 - I - H` in integers.
    pub fn satisfies_pick(&self) -> bool {
        self.boundary as i64 == 2 * (self.area as i64 + 1 - self.interior as i64 - self.holes as i64)
    }
}

struct Grid {
    w: usize,
    h: usize,
    filled: Vec<bool>,
}

impl Grid {
    /// One empty cell of padding on every side.
    fn new(p: &Polyomino) -> Self {
        let (pw, ph) = p.dimensions();
        let w = pw as usize + 2;
        let h = ph as usize + 2;
        let mut filled = vec![false; w * h];
        for c in p.cells() {
            filled[(c.y as usize + 1) * w + c.x as usize + 1] = true;
        }
        Grid { w, h, filled }
    }

    fn at(&self, x: usize, y: usize) -> bool {
        self.filled[y * self.w + x]
    }
}

pub fn pick_quantities(p: &Polyomino) -> PickQuantities {
    let g = Grid::new(p);
    let mut boundary = 0u32;
    for y in 1..g.h - 1 {
        for x in 1..g.w - 1 {
            if g.at(x, y) {
                boundary +=
                    [g.at(x + 1, y), g.at(x - 1, y), g.at(x, y + 1), g.at(x, y - 1)].iter().filter(|&&f| !f).count()
                        as u32;
            }
        }
    }

    // Lattice point (x, y) in padded coordinates is the lower-left corner of
    // padded cell (x, y); its four incident cells are (x-1..=x, y-1..=y).
    let mut interior = 0u32;
    let mut boundary_points = 0u32;
    let mut pinch_points = 0u32;
    for y in 1..g.h {
        for x in 1..g.w {
            let ll = g.at(x - 1, y - 1);
            let lr = g.at(x, y - 1);
            let ul = g.at(x - 1, y);
            let ur = g.at(x, y);
            let count = [ll, lr, ul, ur].iter().filter(|&&f| f).count();
            match count {
                4 => interior += 1,
                0 => {}
                _ => {
                    boundary_points += 1;
                    if count == 2 && ll == ur {
                        pinch_points += 1;
                    }
                }
            }
        }
    }

    PickQuantities { area: p.len() as u32, boundary, interior, holes: count_holes(&g), boundary_points, pinch_points }
}

/// Flood-fills the complement from the padding frame (8-neighborhood) and
/// counts the remaining empty components.
fn count_holes(g: &Grid) -> u32 {
    let mut seen = vec![false; g.w * g.h];
    let mut stack = Vec::new();
    let mut fill = |start: usize, seen: &mut Vec<bool>| {
        stack.push(start);
        seen[start] = true;
        while let Some(i) = stack.pop() {
            let (x, y) = ((i % g.w) as isize, (i / g.w) as isize);
            for dy in -1..=1isize {
                for dx in -1..=1isize {
                    let (nx, ny) = (x + dx, y + dy);
                    if nx < 0 || ny < 0 || nx >= g.w as isize || ny >= g.h as isize {
                        continue;
                    }
                    let j = ny as usize * g.w + nx as usize;
                    if !g.filled[j] && !seen[j] {
                        seen[j] = true;
                        stack.push(j);
                    }
                }
            }
        }
    };
    fill(0, &mut seen);
    let mut holes = 0;
    for i in 0..g.w * g.h {
        if !g.filled[i] && !seen[i] {
            holes += 1;
            fill(i, &mut seen);
        }
    }
    holes
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::{instances_of, Cell};

    /// Independent count straight from the definition: walk every lattice
    /// point of the bounding box and classify it by its incident cells.
    fn brute_points(p: &Polyomino) -> (u32, u32) {
        let (w, h) = p.dimensions();
        let (mut interior, mut boundary) = (0, 0);
        for x in 0..=w as i32 {
            for y in 0..=h as i32 {
                let touching = [(x - 1, y - 1), (x, y - 1), (x - 1, y), (x, y)]
                    .iter()
                    .filter(|&&(a, b)| p.contains(Cell::new(a, b)))
                    .count();
                if touching == 4 {
                    interior += 1;
                } else if touching > 0 {
                    boundary += 1;
                }
            }
        }
        (interior, boundary)
    }

    #[test]
    fn square_tetromino() {
        let q = pick_quantities(&Polyomino::square_tetromino());
        assert_eq!((q.area, q.boundary, q.interior, q.holes), (4, 8, 1, 0));
        assert!(q.satisfies_pick());
    }

    #[test]
    fn straight_closed_form() {
        for k in 1..12 {
            let q = pick_quantities(&Polyomino::straight(k));
            assert_eq!((q.area, q.boundary, q.interior, q.holes), (k, 2 * k + 2, 0, 0));
            assert_eq!(q.boundary_points, 2 * k + 2);
        }
    }

    #[test]
    fn ring_has_one_hole() {
        let ring =
            Polyomino::from_cells(Polyomino::rectangle(3, 3).cells().iter().copied().filter(|&c| c != Cell::new(1, 1)))
                .unwrap();
        let q = pick_quantities(&ring);
        assert_eq!((q.area, q.boundary, q.interior, q.holes), (8, 16, 0, 1));
        assert_eq!(brute_points(&ring), (0, 16));
        // 16/2 = 8 + 1 - 0 - 1
        assert!(q.satisfies_pick());
    }

    #[test]
    fn pinched_hole_merges_with_outside() {
        // 3x3 minus the center and the top-right corner: the center hole
        // touches the outside at one lattice point.
        let shape = Polyomino::from_cells(
            Polyomino::rectangle(3, 3)
                .cells()
                .iter()
                .copied()
                .filter(|&c| c != Cell::new(1, 1) && c != Cell::new(2, 2)),
        )
        .unwrap();
        let q = pick_quantities(&shape);
        assert_eq!(q.boundary, 16);
        assert_eq!(q.boundary_points, 15);
        assert_eq!(q.pinch_points, 1);
        assert_eq!(q.holes, 0);
        assert!(q.satisfies_pick());
    }

    #[test]
    fn matches_brute_force_and_square_count() {
        let shapes = [
            Polyomino::rectangle(4, 3),
            Polyomino::t_tetromino(),
            Polyomino::z_tetromino(),
            Polyomino::from_coords(&[(0, 0), (1, 0), (2, 0), (0, 1), (2, 1), (0, 2), (1, 2), (2, 2), (3, 2)]).unwrap(),
        ];
        for p in shapes {
            let q = pick_quantities(&p);
            let (interior, points) = brute_points(&p);
            assert_eq!(q.interior, interior);
            assert_eq!(q.boundary_points, points);
            assert_eq!(q.interior as usize, instances_of(&Polyomino::square_tetromino(), p.cells()).len());
            assert!(q.satisfies_pick(), "{p}");
        }
    }
}
