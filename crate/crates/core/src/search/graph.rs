use std::collections::{HashMap, HashSet};

use crate::lattice::{instances_of, Cell, Polyomino};

/// Instances of a pattern inside a shape, joined when they share a cell.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct InstanceGraph {
    /// Translation vector of each instance, sorted.
    pub vertices: Vec<Cell>,
    /// Undirected edges `(i, j)` with `i < j`, sorted.
    pub edges: Vec<(usize, usize)>,
}

impl InstanceGraph {
    /// Connected components as sorted vertex lists, ordered by first vertex.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut parent: Vec<usize> = (0..self.vertices.len()).collect();
        fn find(parent: &mut [usize], mut i: usize) -> usize {
            while parent[i] != i {
                parent[i] = parent[parent[i]];
                i = parent[i];
            }
            i
        }
        for &(a, b) in &self.edges {
            let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
            if ra != rb {
                parent[ra.max(rb)] = ra.min(rb);
            }
        }
        let mut groups: HashMap<usize, Vec<usize>> = HashMap::new();
        for i in 0..self.vertices.len() {
            let r = find(&mut parent, i);
            groups.entry(r).or_default().push(i);
        }
        let mut out: Vec<Vec<usize>> = groups.into_values().collect();
        out.sort();
        out
    }

    /// An empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }
}

pub fn instance_graph(shape: &Polyomino, p: &Polyomino) -> InstanceGraph {
    let vertices = instances_of(p, shape.cells());
    let index: HashMap<Cell, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    // Offsets d for which p and p + d overlap.
    let overlaps: HashSet<Cell> = p
        .cells()
        .iter()
        .flat_map(|&a| p.cells().iter().map(move |&b| a.minus(b)))
        .filter(|&d| d != Cell::new(0, 0))
        .collect();
    let mut edges = Vec::new();
    for (i, &v) in vertices.iter().enumerate() {
        for &d in &overlaps {
            if let Some(&j) = index.get(&v.translate(d)) {
                if i < j {
                    edges.push((i, j));
                }
            }
        }
    }
    edges.sort_unstable();
    InstanceGraph { vertices, edges }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn straight_path() {
        let g = instance_graph(&Polyomino::straight(5), &Polyomino::straight(4));
        assert_eq!(g.vertices.len(), 2);
        assert_eq!(g.edges, vec![(0, 1)]);
        assert!(g.is_connected());
    }

    #[test]
    fn bridged_squares_split() {
        // Two 2x2 blocks joined by a one-cell-wide corridor.
        let mut coords = vec![(0, 0), (1, 0), (0, 1), (1, 1)];
        coords.extend([(2, 0), (3, 0), (4, 0)]);
        coords.extend([(5, 0), (6, 0), (5, 1), (6, 1)]);
        let shape = Polyomino::from_coords(&coords).unwrap();
        let g = instance_graph(&shape, &Polyomino::square_tetromino());
        assert_eq!(g.vertices.len(), 2);
        assert!(g.edges.is_empty());
        assert_eq!(g.components().len(), 2);
        assert!(!g.is_connected());
    }

    #[test]
    fn square_grid_is_king_graph() {
        let g = instance_graph(&Polyomino::rectangle(4, 4), &Polyomino::square_tetromino());
        assert_eq!(g.vertices.len(), 9);
        // 3x3 king graph: 12 orthogonal + 8 diagonal edges.
        assert_eq!(g.edges.len(), 20);
        assert!(g.is_connected());
    }
}
