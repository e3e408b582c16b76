use std::collections::{BTreeMap, HashMap, HashSet};

use proptest::prelude::*;

use prismatic::lattice::{
    instances_of, normalize, pick_quantities, row_shift, Cell, CellSet, ColoredPolyomino, LatticeMap,
};
use prismatic::Polyomino;

/// Grows a polyomino from the origin, each step attaching a neighbor of an
/// existing cell chosen by the step's values.
fn grow(steps: &[(u32, u8)]) -> Polyomino {
    let mut cells = vec![Cell::new(0, 0)];
    let mut seen: HashSet<Cell> = cells.iter().copied().collect();
    for &(pick, dir) in steps {
        let base = cells[pick as usize % cells.len()];
        let next = base.neighbors()[dir as usize % 4];
        if seen.insert(next) {
            cells.push(next);
        }
    }
    Polyomino::from_cells(cells).unwrap()
}

fn polyomino() -> impl Strategy<Value = Polyomino> {
    prop::collection::vec((any::<u32>(), 0u8..4), 0..40).prop_map(|s| grow(&s))
}

fn colored(n: u8) -> impl Strategy<Value = ColoredPolyomino> {
    (polyomino(), prop::collection::vec(1..=n, 64)).prop_map(move |(p, pool)| {
        let colors = (0..p.len()).map(|i| pool[i % pool.len()]).collect();
        ColoredPolyomino::new(p, n, colors).unwrap()
    })
}

fn patterns() -> Vec<Polyomino> {
    vec![Polyomino::square_tetromino(), Polyomino::t_tetromino(), Polyomino::l_tromino(), Polyomino::straight(3)]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn pick_identity_and_interior_points(p in polyomino()) {
        let q = pick_quantities(&p);
        prop_assert!(q.satisfies_pick(), "{:?}\n{}", q, p);
        let squares = instances_of(&Polyomino::square_tetromino(), p.cells()).len() as u32;
        prop_assert_eq!(q.interior, squares);
        prop_assert!(q.boundary >= 2 * (p.width() + p.height()));
    }

    #[test]
    fn instances_are_translation_equivariant(p in polyomino(), dx in -50i32..50, dy in -50i32..50) {
        let v = Cell::new(dx, dy);
        let moved = p.to_cell_set().translate(v);
        for pat in patterns() {
            let base: Vec<Cell> = instances_of(&pat, p.cells()).into_iter().map(|u| u.translate(v)).collect();
            prop_assert_eq!(instances_of(&pat, moved.cells()), base);
        }
    }

    #[test]
    fn normalize_ignores_translation(p in polyomino(), dx in -50i32..50, dy in -50i32..50) {
        let moved = p.to_cell_set().translate(Cell::new(dx, dy));
        prop_assert_eq!(normalize(&moved).unwrap(), p);
    }

    #[test]
    fn row_shift_is_a_bijection_preserving_rows(p in polyomino()) {
        let s = p.to_cell_set();
        let image = row_shift(&s);
        prop_assert_eq!(image.len(), s.len());
        let back: CellSet = image.cells().iter().map(|&c| LatticeMap::RowShift.apply_inverse(c)).collect();
        prop_assert_eq!(&back, &s);
        let rows = |set: &CellSet| {
            let mut m = BTreeMap::new();
            for c in set.cells() {
                *m.entry(c.y).or_insert(0) += 1;
            }
            m
        };
        prop_assert_eq!(rows(&image), rows(&s));
    }

    #[test]
    fn row_shift_preserves_instance_color_relations(cp in colored(2)) {
        // Square instances map onto Z instances of the image; equal colorings
        // must stay equal and different ones different.
        let sq = Polyomino::square_tetromino();
        let z = Polyomino::z_tetromino();
        let image: HashMap<Cell, u8> = cp.iter().map(|(c, k)| (LatticeMap::RowShift.apply(c), k)).collect();
        let before: Vec<Vec<u8>> = instances_of(&sq, cp.shape().cells())
            .into_iter()
            .map(|v| cp.coloring_of_instance(&sq, v).unwrap().colors)
            .collect();
        let after: Vec<Vec<u8>> = instances_of(&sq, cp.shape().cells())
            .into_iter()
            .map(|v| {
                let mut cells: Vec<Cell> =
                    sq.cells().iter().map(|q| LatticeMap::RowShift.apply(q.translate(v))).collect();
                cells.sort();
                let anchor = cells[0].minus(z.cells()[0]);
                let shifted: Vec<Cell> = z.cells().iter().map(|q| q.translate(anchor)).collect();
                assert_eq!(shifted, cells, "image of a square is a Z");
                cells.iter().map(|c| image[c]).collect()
            })
            .collect();
        for i in 0..before.len() {
            for j in 0..before.len() {
                prop_assert_eq!(before[i] == before[j], after[i] == after[j]);
            }
        }
    }

    #[test]
    fn maps_invert(p in polyomino()) {
        let s = p.to_cell_set();
        for m in LatticeMap::ALL {
            let there = m.apply_set(&s);
            let back: CellSet = there.cells().iter().map(|&c| m.apply_inverse(c)).collect();
            prop_assert_eq!(&back, &s);
        }
        let thrice = (0..3).fold(s.clone(), |acc, _| LatticeMap::ThirdTurn.apply_set(&acc));
        prop_assert_eq!(&thrice, &s);
    }
}
