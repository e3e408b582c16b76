//! De Bruijn sequences over the alphabet `1..=n`.
//!
//! A cyclic de Bruijn sequence of order `k` has length `n^k` and every word of
//! length `k` appears exactly once among its cyclic windows. Reading `n^k + k - 1`
//! symbols from any starting point gives an acyclic sequence whose plain
//! windows enumerate every word once; these are exactly the colorings of a
//! straight polyomino that are prismatic for the straight `k`-omino.

use std::fmt;
use std::str::FromStr;

use num_bigint::BigUint;
use num_traits::{One, ToPrimitive};
use rand::rngs::StdRng;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Largest sequence length the generators will build by default.
pub const DEFAULT_MAX_LENGTH: usize = 1 << 24;

/// Largest result count `enumerate_all_cyclic` will attempt.
pub const MAX_ENUMERATION: u64 = 1 << 20;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SeqError {
    #[error("alphabet size and order must be positive (got n={n}, k={k})")]
    BadParams { n: u32, k: u32 },
    #[error("n^k = {n}^{k} is beyond the configured bound of {limit}")]
    TooLarge { n: u32, k: u32, limit: u64 },
    #[error("start index {index} out of range for length {len}")]
    BadIndex { index: usize, len: usize },
    #[error("not a valid cyclic de Bruijn sequence of order {k} over 1..={n}")]
    Invalid { n: u32, k: u32 },
    #[error("cannot parse sequence: {0}")]
    Parse(String),
}

/// How [`generate_cyclic`] builds its sequence.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Generator {
    /// The lexicographically least sequence; starts with the all-1 word.
    #[default]
    GreedyLeast,
    /// A seeded Eulerian circuit of the order-`k-1` de Bruijn graph.
    Eulerian { seed: u64 },
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DeBruijnSequence {
    n: u8,
    k: u32,
    symbols: Vec<u8>,
    cyclic: bool,
}

impl DeBruijnSequence {
    /// Wraps a cyclic sequence after checking it.
    pub fn cyclic(n: u8, k: u32, symbols: Vec<u8>) -> Result<Self, SeqError> {
        if !is_cyclic_debruijn(&symbols, n, k) {
            return Err(SeqError::Invalid { n: n as u32, k });
        }
        Ok(DeBruijnSequence { n, k, symbols, cyclic: true })
    }

    pub fn n(&self) -> u8 {
        self.n
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn symbols(&self) -> &[u8] {
        &self.symbols
    }

    pub fn is_cyclic(&self) -> bool {
        self.cyclic
    }

    pub fn len(&self) -> usize {
        self.symbols.len()
    }

    pub fn is_empty(&self) -> bool {
        self.symbols.is_empty()
    }

    /// Cyclic rotation: the result starts at `start`.
    pub fn rotated(&self, start: usize) -> DeBruijnSequence {
        assert!(self.cyclic, "only cyclic sequences rotate");
        let len = self.symbols.len();
        let symbols = (0..len).map(|i| self.symbols[(start + i) % len]).collect();
        DeBruijnSequence { symbols, ..self.clone() }
    }

    pub fn to_json(&self) -> SequenceJson {
        SequenceJson {
            n: self.n,
            k: self.k,
            form: if self.cyclic { "cyclic" } else { "acyclic" }.to_string(),
            symbols: self.symbols.clone(),
        }
    }
}

impl fmt::Display for DeBruijnSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&format_symbols(&self.symbols))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceJson {
    pub n: u8,
    pub k: u32,
    /// `"cyclic"` or `"acyclic"`.
    pub form: String,
    pub symbols: Vec<u8>,
}

/// `"(1,1,2,2)"`.
pub fn format_symbols(symbols: &[u8]) -> String {
    let parts: Vec<String> = symbols.iter().map(u8::to_string).collect();
    format!("({})", parts.join(","))
}

/// Parses `"(1,1,2,2)"`; parentheses and spaces are optional.
pub fn parse_symbols(s: &str) -> Result<Vec<u8>, SeqError> {
    let inner = s.trim().trim_start_matches('(').trim_end_matches(')');
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(|t| t.trim().parse::<u8>().map_err(|e| SeqError::Parse(format!("{t:?}: {e}")))).collect()
}

impl FromStr for Generator {
    type Err = SeqError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "greedy" | "greedy-least" => Ok(Generator::GreedyLeast),
            _ => match s.strip_prefix("eulerian") {
                Some("") => Ok(Generator::Eulerian { seed: 0 }),
                Some(rest) => rest
                    .trim_start_matches([':', '='])
                    .parse()
                    .map(|seed| Generator::Eulerian { seed })
                    .map_err(|_| SeqError::Parse(format!("bad seed in {s:?}"))),
                None => Err(SeqError::Parse(format!("unknown generator {s:?}"))),
            },
        }
    }
}

fn word_count(n: u8, k: u32, limit: u64) -> Result<usize, SeqError> {
    if n == 0 || k == 0 {
        return Err(SeqError::BadParams { n: n as u32, k });
    }
    let too_large = SeqError::TooLarge { n: n as u32, k, limit };
    let len = (n as u64).checked_pow(k).ok_or(too_large.clone())?;
    if len > limit {
        return Err(too_large);
    }
    Ok(len as usize)
}

pub fn generate_cyclic(n: u8, k: u32, method: Generator) -> Result<DeBruijnSequence, SeqError> {
    generate_cyclic_bounded(n, k, method, DEFAULT_MAX_LENGTH)
}

pub fn generate_cyclic_bounded(n: u8, k: u32, method: Generator, max_len: usize) -> Result<DeBruijnSequence, SeqError> {
    let len = word_count(n, k, max_len as u64)?;
    let mut symbols = match method {
        Generator::GreedyLeast => least_sequence(n as usize, k as usize),
        Generator::Eulerian { seed } => eulerian_sequence(n as usize, k as usize, seed),
    };
    debug_assert_eq!(symbols.len(), len);
    for s in &mut symbols {
        *s += 1;
    }
    Ok(DeBruijnSequence { n, k, symbols, cyclic: true })
}

/// Concatenation of the Lyndon words whose length divides `k`, in
/// lexicographic order. Symbols are `0..n`.
fn least_sequence(n: usize, k: usize) -> Vec<u8> {
    fn visit(n: usize, k: usize, t: usize, p: usize, a: &mut [u8], out: &mut Vec<u8>) {
        if t > k {
            if k.is_multiple_of(p) {
                out.extend_from_slice(&a[1..=p]);
            }
            return;
        }
        a[t] = a[t - p];
        visit(n, k, t + 1, p, a, out);
        for s in a[t - p] + 1..n as u8 {
            a[t] = s;
            visit(n, k, t + 1, t, a, out);
        }
    }
    let mut a = vec![0u8; k + 1];
    let mut out = Vec::with_capacity(n.pow(k as u32));
    visit(n, k, 1, 1, &mut a, &mut out);
    out
}

/// Hierholzer's algorithm on the graph whose nodes are the words of length
/// `k - 1` and whose edges are the words of length `k`. Edge order out of
/// each node is shuffled by `seed`. Symbols are `0..n`.
fn eulerian_sequence(n: usize, k: usize, seed: u64) -> Vec<u8> {
    let nodes = n.pow(k as u32 - 1);
    let mut rng = StdRng::seed_from_u64(seed);
    let mut out_edges: Vec<Vec<u8>> = (0..nodes)
        .map(|_| {
            let mut e: Vec<u8> = (0..n as u8).collect();
            e.shuffle(&mut rng);
            e
        })
        .collect();

    let mut stack: Vec<(usize, Option<u8>)> = vec![(0, None)];
    let mut circuit = Vec::with_capacity(nodes * n);
    while let Some(&(node, _)) = stack.last() {
        if let Some(s) = out_edges[node].pop() {
            stack.push(((node * n + s as usize) % nodes, Some(s)));
        } else if let Some((_, Some(s))) = stack.pop() {
            circuit.push(s);
        }
    }
    circuit.reverse();
    circuit
}

/// Encodes the length-`k` cyclic window starting at each position.
fn cyclic_window_codes(seq: &[u8], n: u8, k: u32) -> impl Iterator<Item = usize> + '_ {
    let len = seq.len();
    (0..len).map(move |i| (0..k as usize).fold(0usize, |acc, j| acc * n as usize + (seq[(i + j) % len] - 1) as usize))
}

/// True iff `seq` has length `n^k`, uses only `1..=n`, and its cyclic
/// windows of length `k` are pairwise distinct.
pub fn is_cyclic_debruijn(seq: &[u8], n: u8, k: u32) -> bool {
    let Ok(len) = word_count(n, k, u64::MAX) else {
        return false;
    };
    if seq.len() != len || seq.iter().any(|&s| s == 0 || s > n) {
        return false;
    }
    let mut seen = vec![false; len];
    cyclic_window_codes(seq, n, k).all(|code| !std::mem::replace(&mut seen[code], true))
}

/// True iff `seq` has length `n^k + k - 1` and its plain (non-wrapping)
/// windows of length `k` are pairwise distinct.
pub fn is_acyclic_debruijn(seq: &[u8], n: u8, k: u32) -> bool {
    let Ok(words) = word_count(n, k, u64::MAX) else {
        return false;
    };
    if seq.len() != words + k as usize - 1 || seq.iter().any(|&s| s == 0 || s > n) {
        return false;
    }
    let mut seen = vec![false; words];
    seq.windows(k as usize).all(|w| {
        let code = w.iter().fold(0usize, |acc, &s| acc * n as usize + (s - 1) as usize);
        !std::mem::replace(&mut seen[code], true)
    })
}

/// Reads `n^k + k - 1` symbols cyclically from `start`.
pub fn acyclic_from_cyclic(seq: &DeBruijnSequence, start: usize) -> Result<DeBruijnSequence, SeqError> {
    if !seq.cyclic {
        return Err(SeqError::Invalid { n: seq.n as u32, k: seq.k });
    }
    let len = seq.symbols.len();
    if start >= len {
        return Err(SeqError::BadIndex { index: start, len });
    }
    let symbols = (0..len + seq.k as usize - 1).map(|i| seq.symbols[(start + i) % len]).collect();
    Ok(DeBruijnSequence { n: seq.n, k: seq.k, symbols, cyclic: false })
}

/// Every cyclic de Bruijn sequence, one per rotation class, each written as
/// its lexicographically least rotation (the one starting with the all-1
/// word). Sorted lexicographically.
pub fn enumerate_all_cyclic(n: u8, k: u32) -> Result<Vec<DeBruijnSequence>, SeqError> {
    let len = word_count(n, k, DEFAULT_MAX_LENGTH as u64)?;
    let expected = count_cyclic(n as u32, k);
    if expected > BigUint::from(MAX_ENUMERATION) {
        return Err(SeqError::TooLarge { n: n as u32, k, limit: MAX_ENUMERATION });
    }

    struct Walk {
        n: usize,
        k: usize,
        len: usize,
        seq: Vec<u8>,
        used: Vec<bool>,
        out: Vec<Vec<u8>>,
    }

    impl Walk {
        fn window_code(&self, start: usize) -> usize {
            (0..self.k).fold(0, |acc, j| acc * self.n + self.seq[(start + j) % self.len] as usize)
        }

        fn extend(&mut self, pos: usize) {
            if pos == self.len {
                self.close();
                return;
            }
            for s in 0..self.n as u8 {
                self.seq[pos] = s;
                let code = self.window_code(pos + 1 - self.k);
                if !self.used[code] {
                    self.used[code] = true;
                    self.extend(pos + 1);
                    self.used[code] = false;
                }
            }
        }

        fn close(&mut self) {
            let mut marked = Vec::with_capacity(self.k);
            let mut ok = true;
            for start in self.len + 1 - self.k..self.len {
                let code = self.window_code(start);
                if self.used[code] {
                    ok = false;
                    break;
                }
                self.used[code] = true;
                marked.push(code);
            }
            for code in marked {
                self.used[code] = false;
            }
            if ok {
                self.out.push(self.seq.iter().map(|s| s + 1).collect());
            }
        }
    }

    let k_us = k as usize;
    let mut walk = Walk { n: n as usize, k: k_us, len, seq: vec![0; len], used: vec![false; len], out: Vec::new() };
    if k_us >= len {
        // Only possible for n = 1: the single sequence (1).
        walk.out.push(vec![1; len]);
    } else {
        walk.used[0] = true;
        walk.extend(k_us);
    }
    Ok(walk.out.into_iter().map(|symbols| DeBruijnSequence { n, k, symbols, cyclic: true }).collect())
}

fn factorial(n: u32) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * i)
}

/// `(n!)^(n^(k-1))`: the number of acyclic de Bruijn sequences.
pub fn count_acyclic(n: u32, k: u32) -> BigUint {
    assert!(n >= 1 && k >= 1, "n and k must be positive");
    let exp = BigUint::from(n).pow(k - 1);
    let exp = exp.to_u32().expect("exponent n^(k-1) must fit in 32 bits");
    factorial(n).pow(exp)
}

/// `(n!)^(n^(k-1)) / n^k`: the number of cyclic de Bruijn sequences up to
/// rotation.
pub fn count_cyclic(n: u32, k: u32) -> BigUint {
    let total = count_acyclic(n, k);
    let words = BigUint::from(n).pow(k);
    debug_assert!((&total % &words) == BigUint::from(0u32));
    total / words
}

#[cfg(test)]
mod tests {
    use super::*;

    fn relabel(bits: &[u8]) -> Vec<u8> {
        bits.iter().map(|b| b + 1).collect()
    }

    #[test]
    fn textbook_examples() {
        assert!(is_cyclic_debruijn(&relabel(&[0, 0, 1, 1, 1, 0, 1, 0]), 2, 3));
        assert!(is_cyclic_debruijn(&[1, 1, 2, 2, 3, 3, 1, 3, 2], 3, 2));
        assert!(!is_cyclic_debruijn(&[1, 1, 1, 2], 2, 2));
        assert!(!is_cyclic_debruijn(&[1, 1, 2], 2, 2));
        assert!(!is_cyclic_debruijn(&[1, 1, 3, 3], 2, 2));
    }

    #[test]
    fn greedy_least_known_values() {
        let s = generate_cyclic(2, 2, Generator::GreedyLeast).unwrap();
        assert_eq!(s.symbols(), &[1, 1, 2, 2]);
        let s = generate_cyclic(2, 3, Generator::GreedyLeast).unwrap();
        assert_eq!(s.symbols(), &[1, 1, 1, 2, 1, 2, 2, 2]);
        let s = generate_cyclic(3, 2, Generator::GreedyLeast).unwrap();
        assert_eq!(s.symbols(), &[1, 1, 2, 1, 3, 2, 2, 3, 3]);
        let s = generate_cyclic(1, 4, Generator::GreedyLeast).unwrap();
        assert_eq!(s.symbols(), &[1]);
    }

    #[test]
    fn generators_produce_valid_sequences() {
        for n in 1..=4u8 {
            for k in 1..=5u32 {
                if (n as u64).pow(k) > 1 << 12 {
                    continue;
                }
                let s = generate_cyclic(n, k, Generator::GreedyLeast).unwrap();
                assert!(is_cyclic_debruijn(s.symbols(), n, k), "greedy n={n} k={k}");
                for seed in 0..4 {
                    let s = generate_cyclic(n, k, Generator::Eulerian { seed }).unwrap();
                    assert!(is_cyclic_debruijn(s.symbols(), n, k), "euler n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn eulerian_is_seeded() {
        let a = generate_cyclic(3, 3, Generator::Eulerian { seed: 7 }).unwrap();
        let b = generate_cyclic(3, 3, Generator::Eulerian { seed: 7 }).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn too_large() {
        assert!(matches!(generate_cyclic_bounded(2, 10, Generator::GreedyLeast, 1000), Err(SeqError::TooLarge { .. })));
        assert!(matches!(generate_cyclic(0, 3, Generator::GreedyLeast), Err(SeqError::BadParams { .. })));
    }

    #[test]
    fn acyclic_examples() {
        let one = generate_cyclic(1, 2, Generator::GreedyLeast).unwrap();
        assert_eq!(acyclic_from_cyclic(&one, 0).unwrap().symbols(), &[1, 1]);

        let s = DeBruijnSequence::cyclic(2, 2, vec![1, 1, 2, 2]).unwrap();
        let a = acyclic_from_cyclic(&s, 0).unwrap();
        assert_eq!(a.symbols(), &[1, 1, 2, 2, 1]);
        assert!(!a.is_cyclic());
        assert!(is_acyclic_debruijn(a.symbols(), 2, 2));
        assert_eq!(acyclic_from_cyclic(&s, 4), Err(SeqError::BadIndex { index: 4, len: 4 }));
    }

    #[test]
    fn order_four_binary_pair() {
        // Cells 1, 3, 5-8, 13, 16, 17 and 19 of the 19-cell reading carry color 2.
        let twos = [1, 3, 5, 6, 7, 8, 13, 16, 17, 19];
        let printed: Vec<u8> = (1..=19).map(|i| if twos.contains(&i) { 2 } else { 1 }).collect();
        assert!(is_acyclic_debruijn(&printed, 2, 4));
        let base = DeBruijnSequence::cyclic(2, 4, printed[..16].to_vec()).unwrap();
        assert_eq!(acyclic_from_cyclic(&base, 0).unwrap().symbols(), &printed[..]);
        assert_eq!(&printed[16..], &printed[..3]);
    }

    #[test]
    fn enumeration_small_cases() {
        assert_eq!(enumerate_all_cyclic(2, 2).unwrap().len(), 1);
        assert_eq!(enumerate_all_cyclic(2, 3).unwrap().len(), 2);
        assert_eq!(enumerate_all_cyclic(3, 2).unwrap().len(), 24);
        assert_eq!(enumerate_all_cyclic(1, 3).unwrap().len(), 1);
        assert_eq!(enumerate_all_cyclic(4, 1).unwrap().len(), 6);
        let all = enumerate_all_cyclic(2, 3).unwrap();
        assert_eq!(all[0].symbols(), &[1, 1, 1, 2, 1, 2, 2, 2]);
        assert_eq!(all[1].symbols(), &[1, 1, 1, 2, 2, 2, 1, 2]);
    }

    #[test]
    fn counts() {
        assert_eq!(count_acyclic(2, 4), BigUint::from(256u32));
        assert_eq!(count_cyclic(2, 4), BigUint::from(16u32));
        assert_eq!(count_cyclic(2, 2), BigUint::from(1u32));
        assert_eq!(count_cyclic(3, 2), BigUint::from(24u32));
        for k in 1..6 {
            assert_eq!(count_cyclic(1, k), BigUint::from(1u32));
        }
    }

    #[test]
    fn symbol_text_round_trip() {
        assert_eq!(parse_symbols("(1,1,2,2)").unwrap(), vec![1, 1, 2, 2]);
        assert_eq!(parse_symbols(" 1, 2 ,3 ").unwrap(), vec![1, 2, 3]);
        assert!(parse_symbols("(1,a)").is_err());
        assert_eq!(format_symbols(&[1, 1, 2, 2]), "(1,1,2,2)");
    }

    #[test]
    fn generator_names() {
        assert_eq!("greedy".parse::<Generator>().unwrap(), Generator::GreedyLeast);
        assert_eq!("eulerian:42".parse::<Generator>().unwrap(), Generator::Eulerian { seed: 42 });
        assert!("random".parse::<Generator>().is_err());
    }
}
