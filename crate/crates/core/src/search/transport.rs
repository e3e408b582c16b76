use std::collections::HashSet;

use crate::lattice::{ColoredPolyomino, LatticeMap, Polyomino};

use super::{is_debruijn_coloring, SearchError};

/// Images of `set` under `map`, re-canonicalized.
///
/// Fails with [`SearchError::DisconnectedImage`] naming the first element
/// whose image is not a polyomino.
pub fn transport(map: LatticeMap, set: &[ColoredPolyomino]) -> Result<Vec<ColoredPolyomino>, SearchError> {
    set.iter()
        .enumerate()
        .map(|(index, cp)| cp.map(map).map_err(|_| SearchError::DisconnectedImage { index }))
        .collect()
}

/// True iff every element of `set` is de Bruijn for `p_src`, and the images
/// under `map` are pairwise distinct and de Bruijn for `p_dst`.
pub fn bijection_check(
    map: LatticeMap,
    set: &[ColoredPolyomino],
    p_src: &Polyomino,
    p_dst: &Polyomino,
) -> Result<bool, SearchError> {
    if !set.iter().all(|cp| is_debruijn_coloring(cp, p_src).is_debruijn) {
        return Ok(false);
    }
    let images = transport(map, set)?;
    let distinct: HashSet<&ColoredPolyomino> = images.iter().collect();
    Ok(distinct.len() == images.len() && images.iter().all(|cp| is_debruijn_coloring(cp, p_dst).is_debruijn))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn straight_sequences_stay_put_under_row_shift() {
        let cp = ColoredPolyomino::new(Polyomino::straight(5), 2, vec![1, 1, 2, 2, 1]).unwrap();
        let p = Polyomino::straight(2);
        assert!(bijection_check(LatticeMap::RowShift, std::slice::from_ref(&cp), &p, &p).unwrap());
        // Duplicates collapse, so the check fails.
        assert!(!bijection_check(LatticeMap::RowShift, &[cp.clone(), cp], &p, &p).unwrap());
    }

    #[test]
    fn disconnected_image_is_reported() {
        let z = ColoredPolyomino::uniform(Polyomino::z_tetromino(), 1, 1).unwrap();
        let sq = ColoredPolyomino::uniform(Polyomino::square_tetromino(), 1, 1).unwrap();
        let err = transport(LatticeMap::RowShift, &[sq, z]).unwrap_err();
        assert_eq!(err, SearchError::DisconnectedImage { index: 1 });
    }
}
