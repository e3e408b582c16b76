//! Cock's construction of a prismatic coloring of the `(n²+1) x (n²+1)`
//! square for the square tetromino.
//!
//! Start from a cyclic order-2 de Bruijn sequence `r_0` of length `L = n²`.
//! Each following row `r_i` is `r_{i-1}` rotated left by `sigma_i`, so
//! `r_i(t) = r_{i-1}(t + sigma_i mod L)`. Row `rho_i` of the square holds the
//! `L` symbols of `r_i` followed by a copy of its first symbol, and sits at
//! `y = L - i`. Because `sigma` is a permutation, every pair of vertically
//! adjacent rows uses a different relative shift, which is what makes every
//! `2 x 2` pattern appear exactly once.

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::debruijn::{enumerate_all_cyclic, is_cyclic_debruijn, DeBruijnSequence};
use crate::lattice::{Cell, ColoredPolyomino};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CockError {
    #[error("invalid construction parameters: {0}")]
    InvalidParams(String),
    #[error("color {color} is outside 1..={n}")]
    InvalidColor { color: u8, n: u8 },
}

/// Generator data. `sigma` is a permutation of `1..=n²`; `start` picks the
/// rotation of `r0` used for the top row.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CockParams {
    pub n: u8,
    pub r0: Vec<u8>,
    pub start: usize,
    pub sigma: Vec<usize>,
}

impl CockParams {
    /// Identity `sigma` and start 0 on the given sequence.
    pub fn with_sequence(seq: &DeBruijnSequence) -> Self {
        let len = seq.len();
        CockParams { n: seq.n(), r0: seq.symbols().to_vec(), start: 0, sigma: (1..=len).collect() }
    }

    pub fn validate(&self) -> Result<(), CockError> {
        let len = self.period();
        if self.n == 0 {
            return Err(CockError::InvalidParams("n must be positive".into()));
        }
        if !is_cyclic_debruijn(&self.r0, self.n, 2) {
            return Err(CockError::InvalidParams(format!(
                "r0 is not a cyclic order-2 de Bruijn sequence over 1..={}",
                self.n
            )));
        }
        if self.start >= len {
            return Err(CockError::InvalidParams(format!("start {} must be below {len}", self.start)));
        }
        let mut seen = vec![false; len + 1];
        if self.sigma.len() != len {
            return Err(CockError::InvalidParams(format!("sigma must have {len} entries")));
        }
        for &s in &self.sigma {
            if s == 0 || s > len || seen[s] {
                return Err(CockError::InvalidParams(format!("sigma is not a permutation of 1..={len}")));
            }
            seen[s] = true;
        }
        Ok(())
    }

    fn period(&self) -> usize {
        self.n as usize * self.n as usize
    }

    /// Position in `r0` where row `i` starts.
    fn offset(&self, i: usize) -> usize {
        let len = self.period();
        self.sigma[..i].iter().fold(self.start % len, |acc, &s| (acc + s) % len)
    }

    /// Row `rho_i` as a word of length `n² + 1`.
    pub fn row(&self, i: usize) -> Vec<u8> {
        let len = self.period();
        let off = self.offset(i);
        (0..=len).map(|t| self.r0[(off + t) % len]).collect()
    }
}

/// The colored `(n²+1) x (n²+1)` square.
pub fn cock_construct(params: &CockParams) -> Result<ColoredPolyomino, CockError> {
    params.validate()?;
    let len = params.period();
    let mut cells = Vec::with_capacity((len + 1) * (len + 1));
    for i in 0..=len {
        let y = (len - i) as i32;
        for (x, color) in params.row(i).into_iter().enumerate() {
            cells.push((Cell::new(x as i32, y), color));
        }
    }
    Ok(ColoredPolyomino::from_colored_cells(params.n, cells).expect("square is connected"))
}

/// Where the square with top row `(w, x)` and bottom row `(y, z)` sits:
/// `(i, j)` with `i` the 0-based row index `rho_i` of its top row and `j`
/// the 1-based column of `w`.
pub fn cock_locate(params: &CockParams, w: u8, x: u8, y: u8, z: u8) -> Result<(usize, usize), CockError> {
    params.validate()?;
    for color in [w, x, y, z] {
        if color == 0 || color > params.n {
            return Err(CockError::InvalidColor { color, n: params.n });
        }
    }
    let len = params.period();
    let pos = |a: u8, b: u8| {
        (0..len)
            .find(|&t| params.r0[t] == a && params.r0[(t + 1) % len] == b)
            .expect("every pair occurs in a de Bruijn sequence")
    };
    let top = pos(w, x);
    let bottom = pos(y, z);
    // Rows i and i+1 differ by a shift of sigma_{i+1}.
    let shift = (bottom + 2 * len - top - 1) % len + 1;
    let i = params.sigma.iter().position(|&s| s == shift).expect("sigma is a permutation");
    let column = (top + len - params.offset(i)) % len;
    Ok((i, column + 1))
}

/// Number of parameter choices, `n!^n * (n²)!`.
pub fn cock_count(n: u32) -> BigUint {
    let fact = |m: u32| (1..=m).fold(BigUint::one(), |acc, i| acc * i);
    fact(n).pow(n) * fact(n * n)
}

/// Every parameterization: each cyclic sequence class, each start and each
/// `sigma`, with `sigma` varying fastest in lexicographic order. Its length
/// is [`cock_count`].
pub fn cock_family(n: u8) -> Result<CockFamily, CockError> {
    if n == 0 {
        return Err(CockError::InvalidParams("n must be positive".into()));
    }
    let sequences = enumerate_all_cyclic(n, 2).map_err(|e| CockError::InvalidParams(e.to_string()))?;
    let len = n as usize * n as usize;
    Ok(CockFamily { n, sequences, seq: 0, start: 0, sigma: (1..=len).collect() })
}

pub struct CockFamily {
    n: u8,
    sequences: Vec<DeBruijnSequence>,
    seq: usize,
    start: usize,
    sigma: Vec<usize>,
}

impl Iterator for CockFamily {
    type Item = CockParams;

    fn next(&mut self) -> Option<CockParams> {
        let seq = self.sequences.get(self.seq)?;
        let sigma = &mut self.sigma;
        let params = CockParams { n: self.n, r0: seq.symbols().to_vec(), start: self.start, sigma: sigma.clone() };
        if !next_permutation(sigma) {
            sigma.sort_unstable();
            self.start += 1;
            if self.start == sigma.len() {
                self.start = 0;
                self.seq += 1;
            }
        }
        Some(params)
    }
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}
