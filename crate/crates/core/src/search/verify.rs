use serde::Serialize;

use crate::lattice::{instances_of, ColoredCellSet, ColoredPattern, ColoredPolyomino, Polyomino};

use super::SearchError;

/// Outcome of checking a coloring against every coloring of a pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub is_debruijn: bool,
    pub instances: usize,
    /// Pattern colorings that never occur, in key order.
    pub missing: Vec<ColoredPattern>,
    /// Pattern colorings occurring more than once, with their counts.
    pub duplicated: Vec<(ColoredPattern, usize)>,
}

impl Verdict {
    pub fn summary(&self) -> VerdictSummary {
        VerdictSummary {
            debruijn: self.is_debruijn,
            instances: self.instances,
            missing: self.missing.iter().map(|p| p.colors.clone()).collect(),
            duplicated: self.duplicated.iter().map(|(p, c)| (p.colors.clone(), *c)).collect(),
        }
    }
}

/// Serializable certificate.
#[derive(Clone, Debug, Serialize)]
pub struct VerdictSummary {
    pub debruijn: bool,
    pub instances: usize,
    pub missing: Vec<Vec<u8>>,
    pub duplicated: Vec<(Vec<u8>, usize)>,
}

/// Checks that `cp` contains exactly one instance of each `n`-coloring of
/// `p`, where `n` is the coloring's color count.
pub fn is_debruijn_coloring(cp: &ColoredPolyomino, p: &Polyomino) -> Verdict {
    let n = cp.n();
    let total = pattern_space(n, p.len());
    let mut counts = vec![0usize; total];
    let vs = instances_of(p, cp.shape().cells());
    for &v in &vs {
        let pat = cp.coloring_of_instance(p, v).expect("instances_of only returns contained translations");
        counts[pat.key(n)] += 1;
    }
    let missing: Vec<ColoredPattern> = counts
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c == 0)
        .map(|(key, _)| ColoredPattern::from_key(p.clone(), n, key))
        .collect();
    let duplicated: Vec<(ColoredPattern, usize)> = counts
        .iter()
        .enumerate()
        .filter(|&(_, &c)| c > 1)
        .map(|(key, &c)| (ColoredPattern::from_key(p.clone(), n, key), c))
        .collect();
    Verdict { is_debruijn: missing.is_empty() && duplicated.is_empty(), instances: vs.len(), missing, duplicated }
}

/// Like [`is_debruijn_coloring`] for a raw colored set, which must be
/// connected.
pub fn verify_cell_set(s: &ColoredCellSet, p: &Polyomino) -> Result<Verdict, SearchError> {
    let cp = s.clone().into_polyomino().map_err(|_| SearchError::Disconnected)?;
    Ok(is_debruijn_coloring(&cp, p))
}

pub(crate) fn pattern_space(n: u8, cells: usize) -> usize {
    (n as usize).checked_pow(cells as u32).expect("pattern space n^|p| fits in usize")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lattice::Cell;

    #[test]
    fn all_ones_square() {
        let cp = ColoredPolyomino::uniform(Polyomino::rectangle(5, 5), 2, 1).unwrap();
        let v = is_debruijn_coloring(&cp, &Polyomino::square_tetromino());
        assert!(!v.is_debruijn);
        assert_eq!(v.instances, 16);
        assert_eq!(v.missing.len(), 15);
        assert_eq!(v.duplicated.len(), 1);
        assert_eq!(v.duplicated[0].0.colors, vec![1, 1, 1, 1]);
        assert_eq!(v.duplicated[0].1, 16);
    }

    #[test]
    fn straight_from_sequence() {
        let word = [1, 1, 2, 2, 1];
        let cp = ColoredPolyomino::new(Polyomino::straight(5), 2, word.to_vec()).unwrap();
        assert!(is_debruijn_coloring(&cp, &Polyomino::straight(2)).is_debruijn);
        let bad = ColoredPolyomino::new(Polyomino::straight(5), 2, vec![1, 1, 1, 2, 2]).unwrap();
        assert!(!is_debruijn_coloring(&bad, &Polyomino::straight(2)).is_debruijn);
    }

    #[test]
    fn disconnected_set_is_rejected() {
        let s = ColoredCellSet::new(2, [(Cell::new(0, 0), 1), (Cell::new(2, 0), 2)]).unwrap();
        assert!(matches!(verify_cell_set(&s, &Polyomino::monomino()), Err(SearchError::Disconnected)));
    }
}
