//! Oscillating `m`-rim hook tableaux and their bijection with `m`-colored
//! matchings.
//!
//! [`phi`] walks the shapes forward, filling each added rim hook with its step
//! number and un-inserting a hook at each deletion; the extracted hook's
//! content and arm give an arc and its color. [`psi`] walks a matching
//! backward, inserting a hook at every closer and deleting the largest
//! content at every opener.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matchings::{Arc, ColoredMatching};
use crate::shapes::{addable_rim_hooks, is_rim_hook_outside, removable_rim_hooks, Partition, RimHook};
use crate::tableaux::{insert, uninsert, HookTableau, RimHookTableau};
use crate::Content;

/// A sequence of shapes from `∅` to `∅`, each step adding or deleting one
/// `m`-rim hook.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawOscillating", into = "RawOscillating")]
pub struct OscillatingTableau {
    m: usize,
    shapes: Vec<Partition>,
}

#[derive(Serialize, Deserialize)]
struct RawOscillating {
    m: usize,
    shapes: Vec<Partition>,
}

impl TryFrom<RawOscillating> for OscillatingTableau {
    type Error = Error;

    fn try_from(raw: RawOscillating) -> Result<Self> {
        OscillatingTableau::new(raw.m, raw.shapes)
    }
}

impl From<OscillatingTableau> for RawOscillating {
    fn from(o: OscillatingTableau) -> Self {
        RawOscillating { m: o.m, shapes: o.shapes }
    }
}

/// Whether a step adds or deletes a rim hook.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Step {
    Add(RimHook),
    Delete(RimHook),
}

fn step_between(m: usize, from: &Partition, to: &Partition) -> std::result::Result<Step, String> {
    let (small, big, adding) = if to.size() > from.size() { (from, to, true) } else { (to, from, false) };
    if big.size() != small.size() + m {
        return Err(format!("{from} → {to} changes size by {}, expected {m}", big.size().abs_diff(small.size())));
    }
    if !small.is_contained_in(big) {
        return Err(format!("{small} is not contained in {big}"));
    }
    let cells: Vec<_> = big.cells().filter(|&c| !small.contains(c)).collect();
    if !is_rim_hook_outside(small, &cells) {
        return Err(format!("{big} / {small} is not a rim hook"));
    }
    let hook = RimHook::from_cells(cells).map_err(|e| e.to_string())?;
    Ok(if adding { Step::Add(hook) } else { Step::Delete(hook) })
}

impl OscillatingTableau {
    pub fn new(m: usize, shapes: Vec<Partition>) -> Result<Self> {
        let bad = |step, reason: String| Error::InvalidOscillating { step, reason };
        if m == 0 {
            return Err(bad(0, "hook size must be positive".into()));
        }
        match (shapes.first(), shapes.last()) {
            (Some(a), Some(b)) if a.is_empty() && b.is_empty() => {}
            _ => return Err(bad(0, "must start and end with the empty shape".into())),
        }
        for (i, pair) in shapes.windows(2).enumerate() {
            step_between(m, &pair[0], &pair[1]).map_err(|reason| bad(i + 1, reason))?;
        }
        Ok(OscillatingTableau { m, shapes })
    }

    /// The length-0 tableau `(∅)`.
    pub fn empty(m: usize) -> Self {
        OscillatingTableau { m, shapes: vec![Partition::empty()] }
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn shapes(&self) -> &[Partition] {
        &self.shapes
    }

    /// Half the number of steps.
    pub fn n(&self) -> usize {
        (self.shapes.len() - 1) / 2
    }

    /// The rim hook added or deleted at step `i` (1-based).
    pub fn step(&self, i: usize) -> Step {
        step_between(self.m, &self.shapes[i - 1], &self.shapes[i]).expect("validated")
    }

    /// Maximum number of rows over all shapes.
    pub fn max_rows(&self) -> usize {
        self.shapes.iter().map(Partition::len).max().unwrap_or(0)
    }

    /// Maximum number of columns over all shapes.
    pub fn max_cols(&self) -> usize {
        self.shapes.iter().map(Partition::width).max().unwrap_or(0)
    }

    /// Shapewise conjugate.
    pub fn conjugate(&self) -> Self {
        OscillatingTableau { m: self.m, shapes: self.shapes.iter().map(Partition::conjugate).collect() }
    }
}

impl fmt::Display for OscillatingTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.shapes.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(" "))
    }
}

/// `φ` together with the tableaux `T_0, …, T_{2n}`.
pub fn phi_trace(o: &OscillatingTableau) -> Result<(ColoredMatching, Vec<RimHookTableau>)> {
    let mut t = RimHookTableau::empty(o.m);
    let mut trace = vec![t.clone()];
    let mut arcs = Vec::with_capacity(o.n());
    for i in 1..o.shapes.len() {
        match o.step(i) {
            Step::Add(hook) => t.push_max(i as Content, hook)?,
            Step::Delete(_) => {
                let (smaller, h) = uninsert(&t, &o.shapes[i])
                    .map_err(|e| Error::Internal(format!("step {i} of a valid oscillating tableau: {e}")))?;
                arcs.push(Arc { opener: h.content(), closer: i as Content, color: h.arm() });
                t = smaller;
            }
        }
        trace.push(t.clone());
    }
    Ok((ColoredMatching::new(o.n(), o.m, arcs)?, trace))
}

/// Oscillating `m`-rim hook tableau → `m`-colored matching.
pub fn phi(o: &OscillatingTableau) -> Result<ColoredMatching> {
    phi_trace(o).map(|(mt, _)| mt)
}

/// `ψ` together with the tableaux `T_0, …, T_{2n}`.
pub fn psi_trace(mt: &ColoredMatching) -> Result<(OscillatingTableau, Vec<RimHookTableau>)> {
    let len = 2 * mt.n();
    let mut trace = vec![RimHookTableau::empty(mt.m())];
    for v in (1..=len as Content).rev() {
        let later = trace.last().expect("nonempty");
        let arc = mt.arc_at(v).expect("perfect matching");
        let earlier = if arc.closer == v {
            insert(later, &HookTableau::new(mt.m(), arc.color, arc.opener)?)?
        } else {
            if later.max_content() != Some(v) {
                return Err(Error::Internal(format!("opener {v} is not the largest content")));
            }
            later.without_max()
        };
        trace.push(earlier);
    }
    trace.reverse();
    let shapes = trace.iter().map(|t| t.shape().clone()).collect();
    Ok((OscillatingTableau::new(mt.m(), shapes)?, trace))
}

/// `m`-colored matching → oscillating `m`-rim hook tableau.
pub fn psi(mt: &ColoredMatching) -> Result<OscillatingTableau> {
    psi_trace(mt).map(|(o, _)| o)
}

/// The involution `M ↦ φ(conjugate(ψ(M)))`, which swaps crossing and nesting numbers.
pub fn transpose_matching(mt: &ColoredMatching) -> Result<ColoredMatching> {
    phi(&psi(mt)?.conjugate())
}

/// Streams all oscillating `m`-rim hook tableaux of length `2n`, optionally
/// keeping only those whose shapes have at most `max_cols` columns.
pub fn enumerate_oscillating(n: usize, m: usize, max_cols: Option<usize>) -> OscillatingStream {
    OscillatingStream::from_prefix(n, m, max_cols, vec![Partition::empty()])
}

/// Independent streams, one per valid prefix of `depth` steps, that together
/// cover [`enumerate_oscillating`] in order.
pub fn oscillating_shards(n: usize, m: usize, max_cols: Option<usize>, depth: usize) -> Vec<OscillatingStream> {
    let depth = depth.min(2 * n);
    let mut prefixes = vec![vec![Partition::empty()]];
    for k in 0..depth {
        prefixes = prefixes
            .into_iter()
            .flat_map(|prefix| {
                let last = prefix.last().expect("nonempty").clone();
                successors(&last, k, n, m, max_cols).into_iter().map(move |next| {
                    let mut p = prefix.clone();
                    p.push(next);
                    p
                })
            })
            .collect();
    }
    prefixes.into_iter().map(|p| OscillatingStream::from_prefix(n, m, max_cols, p)).collect()
}

/// Shapes reachable from `shape` at step `k + 1` that can still return to `∅`.
fn successors(shape: &Partition, k: usize, n: usize, m: usize, max_cols: Option<usize>) -> Vec<Partition> {
    let remaining = 2 * n - (k + 1);
    let mut out: Vec<Partition> = removable_rim_hooks(shape, m)
        .into_iter()
        .map(|h| shape.without_cells(h.cells()).expect("outer rim hook"))
        .collect();
    if shape.size() / m < remaining {
        out.extend(addable_rim_hooks(shape, m).into_iter().map(|h| shape.with_cells(h.cells()).expect("rim hook")));
    }
    out.retain(|p| p.size() / m <= remaining && max_cols.is_none_or(|c| p.width() <= c));
    out
}

/// Depth-first stream of oscillating tableaux extending a fixed prefix.
#[derive(Clone, Debug)]
pub struct OscillatingStream {
    n: usize,
    m: usize,
    max_cols: Option<usize>,
    fixed: usize,
    path: Vec<Partition>,
    pending: Vec<Vec<Partition>>,
    fresh: bool,
}

impl OscillatingStream {
    fn from_prefix(n: usize, m: usize, max_cols: Option<usize>, prefix: Vec<Partition>) -> Self {
        OscillatingStream { n, m, max_cols, fixed: prefix.len(), path: prefix, pending: Vec::new(), fresh: true }
    }

    fn children(&self) -> Vec<Partition> {
        let k = self.path.len() - 1;
        let mut next = successors(self.path.last().expect("nonempty"), k, self.n, self.m, self.max_cols);
        next.reverse();
        next
    }

    fn complete(&self) -> OscillatingTableau {
        OscillatingTableau { m: self.m, shapes: self.path.clone() }
    }
}

impl Iterator for OscillatingStream {
    type Item = OscillatingTableau;

    fn next(&mut self) -> Option<OscillatingTableau> {
        if self.fresh {
            self.fresh = false;
            if self.path.len() == 2 * self.n + 1 {
                return self.path.last().is_some_and(Partition::is_empty).then(|| self.complete());
            }
            self.pending.push(self.children());
        }
        loop {
            let top = self.pending.last_mut()?;
            match top.pop() {
                None => {
                    self.pending.pop();
                    if self.path.len() > self.fixed {
                        self.path.pop();
                    }
                    if self.pending.is_empty() {
                        return None;
                    }
                }
                Some(child) => {
                    self.path.push(child);
                    if self.path.len() == 2 * self.n + 1 {
                        let out = self.complete();
                        self.path.pop();
                        return Some(out);
                    }
                    let next = self.children();
                    self.pending.push(next);
                }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matchings::enumerate_matchings;
    use crate::tableaux::{insertion_tableau, HookPermutation};

    fn shapes(list: &[&[usize]]) -> Vec<Partition> {
        list.iter().map(|p| Partition::new(p.to_vec()).unwrap()).collect()
    }

    fn domino_example() -> OscillatingTableau {
        OscillatingTableau::new(
            2,
            shapes(&[&[], &[1, 1], &[2, 2], &[3, 3], &[3, 1], &[1, 1], &[2, 2], &[2], &[]]),
        )
        .unwrap()
    }

    #[test]
    fn validates_examples() {
        assert!(OscillatingTableau::new(
            3,
            shapes(&[&[], &[1, 1, 1], &[2, 2, 2], &[2, 1], &[3, 3], &[3], &[3, 2, 1], &[1, 1, 1], &[]])
        )
        .is_ok());
        let err = OscillatingTableau::new(2, shapes(&[&[], &[1], &[]])).unwrap_err();
        assert!(matches!(err, Error::InvalidOscillating { step: 1, .. }));
        let err = OscillatingTableau::new(2, shapes(&[&[], &[2], &[1, 1], &[]])).unwrap_err();
        assert!(matches!(err, Error::InvalidOscillating { step: 2, .. }));
        assert!(OscillatingTableau::new(1, shapes(&[&[1]])).is_err());
    }

    #[test]
    fn phi_of_domino_example() {
        let o = domino_example();
        let mt = phi(&o).unwrap();
        let expected = ColoredMatching::from_triples(4, 2, &[(1, 5, 1), (2, 4, 2), (3, 7, 1), (6, 8, 2)]).unwrap();
        assert_eq!(mt, expected);
        assert_eq!((mt.crossing_number(), mt.nesting_number()), (2, 1));
        assert_eq!(psi(&mt).unwrap(), o);
    }

    #[test]
    fn single_domino_steps() {
        let vertical = OscillatingTableau::new(2, shapes(&[&[], &[1, 1], &[]])).unwrap();
        let horizontal = OscillatingTableau::new(2, shapes(&[&[], &[2], &[]])).unwrap();
        assert_eq!(phi(&vertical).unwrap().arcs(), &[Arc { opener: 1, closer: 2, color: 1 }]);
        assert_eq!(phi(&horizontal).unwrap().arcs(), &[Arc { opener: 1, closer: 2, color: 2 }]);
        let back = psi(&ColoredMatching::from_triples(1, 2, &[(1, 2, 1)]).unwrap()).unwrap();
        assert_eq!(back, vertical);
    }

    #[test]
    fn conjugation() {
        let o = domino_example();
        let expected = shapes(&[&[], &[2], &[2, 2], &[2, 2, 2], &[2, 1, 1], &[2], &[2, 2], &[1, 1], &[]]);
        assert_eq!(o.conjugate().shapes(), expected.as_slice());
        assert_eq!(o.conjugate().conjugate(), o);
        assert_eq!(OscillatingTableau::empty(2).conjugate(), OscillatingTableau::empty(2));
        assert_eq!((o.max_rows(), o.max_cols()), (2, 3));
    }

    #[test]
    fn traces_agree() {
        let o = domino_example();
        let (mt, forward) = phi_trace(&o).unwrap();
        let (_, backward) = psi_trace(&mt).unwrap();
        assert_eq!(forward, backward);
    }

    /// Rebuilds the hook permutations `𝓗_i` backward along `ψ` and checks
    /// each `T_i` is the insertion tableau of `𝓗_i`.
    #[test]
    fn tableaux_are_insertion_tableaux_of_hook_permutations() {
        for (n, m) in [(3, 1), (3, 2), (2, 3)] {
            for mt in enumerate_matchings(n, m) {
                let (_, trace) = psi_trace(&mt).unwrap();
                let mut hooks: Vec<HookTableau> = Vec::new();
                for i in (1..=2 * n as Content).rev() {
                    let hp = HookPermutation::new(m, hooks.clone()).unwrap();
                    assert_eq!(insertion_tableau(&hp).unwrap(), trace[i as usize]);
                    let arc = mt.arc_at(i).unwrap();
                    if arc.closer == i {
                        hooks.push(HookTableau::new(m, arc.color, arc.opener).unwrap());
                    } else {
                        hooks.retain(|h| h.content() != i);
                    }
                }
                assert!(hooks.is_empty());
            }
        }
    }

    #[test]
    fn stream_counts() {
        assert_eq!(enumerate_oscillating(0, 2, None).count(), 1);
        assert_eq!(enumerate_oscillating(1, 2, None).count(), 2);
        assert_eq!(enumerate_oscillating(2, 1, None).count(), 3);
        assert_eq!(enumerate_oscillating(3, 2, None).count(), 120);
        assert_eq!(enumerate_oscillating(2, 1, Some(2)).count(), 3);
        assert_eq!(enumerate_oscillating(3, 1, Some(1)).count(), 5);
    }

    #[test]
    fn shards_concatenate_to_stream() {
        let all: Vec<_> = enumerate_oscillating(3, 2, None).collect();
        for depth in 0..=3 {
            let sharded: Vec<_> = oscillating_shards(3, 2, None, depth).into_iter().flatten().collect();
            assert_eq!(sharded, all);
        }
    }

    #[test]
    fn json_shape() {
        let o = OscillatingTableau::new(2, shapes(&[&[], &[1, 1], &[]])).unwrap();
        let json = serde_json::to_string(&o).unwrap();
        assert_eq!(json, r#"{"m":2,"shapes":[[],[1,1],[]]}"#);
        assert_eq!(serde_json::from_str::<OscillatingTableau>(&json).unwrap(), o);
        assert!(serde_json::from_str::<OscillatingTableau>(r#"{"m":2,"shapes":[[],[1],[]]}"#).is_err());
    }
}
