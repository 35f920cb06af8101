//! Perfect matchings on `[2n]` whose arcs carry one of `m` colors, with the
//! crossing and nesting numbers.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::tableaux::longest_increasing;

/// One arc `(opener, closer)` with `opener < closer` and a color in `1..=m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "(u32, u32, usize)", into = "(u32, u32, usize)")]
pub struct Arc {
    pub opener: u32,
    pub closer: u32,
    pub color: usize,
}

impl From<(u32, u32, usize)> for Arc {
    fn from((opener, closer, color): (u32, u32, usize)) -> Self {
        Arc { opener, closer, color }
    }
}

impl From<Arc> for (u32, u32, usize) {
    fn from(a: Arc) -> Self {
        (a.opener, a.closer, a.color)
    }
}

/// An `m`-colored perfect matching on `{1, …, 2n}`. Arcs are kept sorted by opener.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawMatching", into = "RawMatching")]
pub struct ColoredMatching {
    n: usize,
    m: usize,
    arcs: Vec<Arc>,
}

#[derive(Serialize, Deserialize)]
struct RawMatching {
    n: usize,
    m: usize,
    arcs: Vec<Arc>,
}

impl TryFrom<RawMatching> for ColoredMatching {
    type Error = Error;

    fn try_from(raw: RawMatching) -> Result<Self> {
        ColoredMatching::new(raw.n, raw.m, raw.arcs)
    }
}

impl From<ColoredMatching> for RawMatching {
    fn from(mt: ColoredMatching) -> Self {
        RawMatching { n: mt.n, m: mt.m, arcs: mt.arcs }
    }
}

impl ColoredMatching {
    pub fn new(n: usize, m: usize, mut arcs: Vec<Arc>) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidMatching("at least one color is needed".into()));
        }
        let mut seen = vec![false; 2 * n + 1];
        for a in &mut arcs {
            if a.opener > a.closer {
                std::mem::swap(&mut a.opener, &mut a.closer);
            }
            if a.color == 0 || a.color > m {
                return Err(Error::InvalidMatching(format!("color {} outside 1..={m}", a.color)));
            }
            for v in [a.opener, a.closer] {
                let slot = seen
                    .get_mut(v as usize)
                    .filter(|_| v >= 1)
                    .ok_or_else(|| Error::InvalidMatching(format!("vertex {v} outside 1..={}", 2 * n)))?;
                if *slot {
                    return Err(Error::InvalidMatching(format!("vertex {v} is matched twice")));
                }
                *slot = true;
            }
        }
        if let Some(v) = (1..=2 * n).find(|&v| !seen[v]) {
            return Err(Error::InvalidMatching(format!("vertex {v} is unmatched")));
        }
        arcs.sort();
        Ok(ColoredMatching { n, m, arcs })
    }

    /// From `(opener, closer, color)` triples.
    pub fn from_triples(n: usize, m: usize, triples: &[(u32, u32, usize)]) -> Result<Self> {
        ColoredMatching::new(n, m, triples.iter().map(|&t| Arc::from(t)).collect())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn arcs(&self) -> &[Arc] {
        &self.arcs
    }

    /// The arc at vertex `v`.
    pub fn arc_at(&self, v: u32) -> Option<&Arc> {
        self.arcs.iter().find(|a| a.opener == v || a.closer == v)
    }

    /// `(opener, closer)` pairs of one color, in opener order.
    pub fn monochromatic(&self, color: usize) -> Vec<(u32, u32)> {
        self.arcs.iter().filter(|a| a.color == color).map(|a| (a.opener, a.closer)).collect()
    }

    pub fn crossing_number(&self) -> usize {
        (1..=self.m).map(|c| crossing_of(&self.monochromatic(c))).max().unwrap_or(0)
    }

    pub fn nesting_number(&self) -> usize {
        (1..=self.m).map(|c| nesting_of(&self.monochromatic(c))).max().unwrap_or(0)
    }

    /// No two arcs of the same color cross.
    pub fn is_noncrossing(&self) -> bool {
        self.crossing_number() <= 1
    }

    /// No `k` arcs of one color pairwise cross.
    pub fn is_k_noncrossing(&self, k: usize) -> bool {
        self.crossing_number() < k
    }
}

/// Largest `k` with `i_1 < … < i_k < j_1 < … < j_k`. Arcs sorted by opener.
fn crossing_of(arcs: &[(u32, u32)]) -> usize {
    arcs.iter()
        .enumerate()
        .map(|(a, &(_, first_closer))| {
            let later = arcs[a + 1..]
                .iter()
                .take_while(|&&(i, _)| i < first_closer)
                .filter(|&&(_, j)| j > first_closer)
                .map(|&(_, j)| j);
            1 + longest_increasing(later)
        })
        .max()
        .unwrap_or(0)
}

/// Largest `k` with `i_1 < … < i_k < j_k < … < j_1`. Arcs sorted by opener.
fn nesting_of(arcs: &[(u32, u32)]) -> usize {
    longest_increasing(arcs.iter().map(|&(_, j)| u32::MAX - j))
}

impl fmt::Display for ColoredMatching {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let arcs: Vec<String> = self.arcs.iter().map(|a| format!("({},{})c{}", a.opener, a.closer, a.color)).collect();
        write!(f, "{{{}}}", arcs.join(", "))
    }
}

/// Streams every `m`-colored matching on `[2n]`.
///
/// The order is lexicographic in the choices made at the smallest unmatched
/// vertex: first its partner, then the color.
pub fn enumerate_matchings(n: usize, m: usize) -> MatchingStream {
    MatchingStream::new(n, m, None)
}

/// Independent shards of [`enumerate_matchings`], one per choice of the
/// partner and color of vertex 1. Concatenated in order they give the full stream.
pub fn matching_shards(n: usize, m: usize) -> Vec<MatchingStream> {
    if n == 0 {
        return vec![enumerate_matchings(0, m)];
    }
    (0..(2 * n - 1) * m).map(|first| MatchingStream::new(n, m, Some(first))).collect()
}

/// Mixed-radix odometer over matching choices; digit `d` ranges over
/// `(2n − 2d − 1)·m` partner/color options.
#[derive(Clone, Debug)]
pub struct MatchingStream {
    n: usize,
    m: usize,
    digits: Vec<usize>,
    fixed: usize,
    done: bool,
}

impl MatchingStream {
    fn new(n: usize, m: usize, first: Option<usize>) -> Self {
        let mut digits = vec![0; n];
        let fixed = match first {
            Some(d) => {
                digits[0] = d;
                1
            }
            None => 0,
        };
        MatchingStream { n, m, digits, fixed, done: m == 0 }
    }

    fn radix(&self, d: usize) -> usize {
        (2 * (self.n - d) - 1) * self.m
    }

    fn decode(&self) -> ColoredMatching {
        let mut free: Vec<u32> = (1..=2 * self.n as u32).collect();
        let mut arcs = Vec::with_capacity(self.n);
        for &digit in &self.digits {
            let opener = free.remove(0);
            let closer = free.remove(digit / self.m);
            arcs.push(Arc { opener, closer, color: digit % self.m + 1 });
        }
        arcs.sort();
        ColoredMatching { n: self.n, m: self.m, arcs }
    }
}

impl Iterator for MatchingStream {
    type Item = ColoredMatching;

    fn next(&mut self) -> Option<ColoredMatching> {
        if self.done {
            return None;
        }
        let out = self.decode();
        self.done = true;
        for d in (self.fixed..self.n).rev() {
            self.digits[d] += 1;
            if self.digits[d] < self.radix(d) {
                self.done = false;
                break;
            }
            self.digits[d] = 0;
        }
        Some(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mt(n: usize, m: usize, t: &[(u32, u32, usize)]) -> ColoredMatching {
        ColoredMatching::from_triples(n, m, t).unwrap()
    }

    #[test]
    fn stats_of_small_examples() {
        let x = mt(4, 2, &[(1, 5, 1), (2, 4, 2), (3, 7, 1), (6, 8, 2)]);
        assert_eq!((x.crossing_number(), x.nesting_number()), (2, 1));
        let one = mt(1, 1, &[(1, 2, 1)]);
        assert_eq!((one.crossing_number(), one.nesting_number()), (1, 1));
        let empty = mt(0, 3, &[]);
        assert_eq!((empty.crossing_number(), empty.nesting_number()), (0, 0));
        // Increasing closers that do not cross.
        let apart = mt(2, 1, &[(1, 2, 1), (3, 4, 1)]);
        assert_eq!((apart.crossing_number(), apart.nesting_number()), (1, 1));
    }

    #[test]
    fn noncrossing_examples() {
        assert!(mt(2, 1, &[(1, 4, 1), (2, 3, 1)]).is_noncrossing());
        assert!(!mt(2, 1, &[(1, 3, 1), (2, 4, 1)]).is_noncrossing());
        assert!(mt(2, 2, &[(1, 3, 1), (2, 4, 2)]).is_noncrossing());
    }

    #[test]
    fn rejects_bad_matchings() {
        assert!(ColoredMatching::from_triples(2, 1, &[(1, 2, 1), (2, 3, 1)]).is_err());
        assert!(ColoredMatching::from_triples(2, 1, &[(1, 2, 1)]).is_err());
        assert!(ColoredMatching::from_triples(1, 1, &[(1, 2, 2)]).is_err());
        assert!(ColoredMatching::from_triples(1, 1, &[(0, 2, 1)]).is_err());
        assert!(ColoredMatching::from_triples(1, 1, &[(1, 3, 1)]).is_err());
    }

    #[test]
    fn stream_sizes() {
        assert_eq!(enumerate_matchings(1, 2).count(), 2);
        assert_eq!(enumerate_matchings(2, 1).count(), 3);
        assert_eq!(enumerate_matchings(3, 2).count(), 120);
        assert_eq!(enumerate_matchings(0, 2).count(), 1);
    }

    #[test]
    fn stream_order_starts_lexicographically() {
        let first: Vec<String> = enumerate_matchings(2, 1).map(|x| x.to_string()).collect();
        assert_eq!(first, ["{(1,2)c1, (3,4)c1}", "{(1,3)c1, (2,4)c1}", "{(1,4)c1, (2,3)c1}"]);
    }

    #[test]
    fn shards_concatenate_to_stream() {
        let all: Vec<_> = enumerate_matchings(3, 2).collect();
        let sharded: Vec<_> = matching_shards(3, 2).into_iter().flatten().collect();
        assert_eq!(all, sharded);
    }

    #[test]
    fn json_shape() {
        let x = mt(4, 2, &[(1, 5, 2), (2, 4, 1), (3, 7, 2), (6, 8, 1)]);
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(json, r#"{"n":4,"m":2,"arcs":[[1,5,2],[2,4,1],[3,7,2],[6,8,1]]}"#);
        assert_eq!(serde_json::from_str::<ColoredMatching>(&json).unwrap(), x);
        assert!(serde_json::from_str::<ColoredMatching>(r#"{"n":1,"m":1,"arcs":[[1,1,1]]}"#).is_err());
    }
}
