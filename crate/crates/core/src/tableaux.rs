//! Rim hook tableaux and the rim hook Schensted insertion.
//!
//! An `m`-rim hook tableau fills its shape with distinct contents, each on
//! the `m` cells of a rim hook, such that peeling the largest content always
//! removes an outer rim hook. Insertion of an `m`-hook tableau `H` into `P`
//! places a hook for `H` on top of the part of `P` with smaller contents and
//! then replays the larger contents of `P` through [`operator_a`], one rim
//! hook at a time ([`combine`]).
//!
//! Where the new hook first lands is governed by [`HookPlacement`]; see its
//! docs for the two readings that are supported.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::shapes::{bump_hook, is_rim_hook_outside, slitherdown, slitherup, Cell, Partition, RimHook};
use crate::Content;

/// An `m`-rim hook tableau of straight shape.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawTableau", into = "RawTableau")]
pub struct RimHookTableau {
    m: usize,
    shape: Partition,
    hooks: BTreeMap<Content, RimHook>,
}

#[derive(Serialize, Deserialize)]
struct RawTableau {
    m: usize,
    shape: Partition,
    hooks: Vec<RawHookEntry>,
}

#[derive(Serialize, Deserialize)]
struct RawHookEntry {
    content: Content,
    cells: Vec<Cell>,
}

impl TryFrom<RawTableau> for RimHookTableau {
    type Error = Error;

    fn try_from(raw: RawTableau) -> Result<Self> {
        let mut hooks = BTreeMap::new();
        for entry in raw.hooks {
            let hook = RimHook::from_cells(entry.cells)?;
            if hooks.insert(entry.content, hook).is_some() {
                return Err(Error::DuplicateContent(entry.content));
            }
        }
        let t = RimHookTableau::from_hooks(raw.m, hooks)?;
        if t.shape != raw.shape {
            return Err(Error::InvalidTableau {
                content: 0,
                reason: format!("declared shape {} but cells form {}", raw.shape, t.shape),
            });
        }
        Ok(t)
    }
}

impl From<RimHookTableau> for RawTableau {
    fn from(t: RimHookTableau) -> Self {
        RawTableau {
            m: t.m,
            shape: t.shape,
            hooks: t
                .hooks
                .into_iter()
                .map(|(content, h)| RawHookEntry { content, cells: h.cells().to_vec() })
                .collect(),
        }
    }
}

impl RimHookTableau {
    pub fn empty(m: usize) -> Self {
        assert!(m >= 1, "hook size must be positive");
        RimHookTableau { m, shape: Partition::empty(), hooks: BTreeMap::new() }
    }

    /// Builds a tableau from its content → rim hook map, checking every hook
    /// has `m` cells and that the contents peel in decreasing order.
    pub fn from_hooks(m: usize, hooks: BTreeMap<Content, RimHook>) -> Result<Self> {
        let mut t = RimHookTableau::empty(m);
        for (content, hook) in hooks {
            t.push_max(content, hook)?;
        }
        Ok(t)
    }

    /// Builds a tableau from a cell → content filling.
    pub fn from_filling(m: usize, filling: &BTreeMap<Cell, Content>) -> Result<Self> {
        let mut groups: BTreeMap<Content, Vec<Cell>> = BTreeMap::new();
        for (&cell, &content) in filling {
            groups.entry(content).or_default().push(cell);
        }
        let mut hooks = BTreeMap::new();
        for (content, cells) in groups {
            if cells.len() != m {
                return Err(Error::InvalidTableau {
                    content,
                    reason: format!("appears on {} cells, expected {m}", cells.len()),
                });
            }
            let hook = RimHook::from_cells(cells)
                .map_err(|e| Error::InvalidTableau { content, reason: e.to_string() })?;
            hooks.insert(content, hook);
        }
        let t = RimHookTableau::from_hooks(m, hooks)?;
        if t.shape.size() != filling.len() {
            return Err(Error::Internal("filling lost cells".into()));
        }
        Ok(t)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    /// Number of contents.
    pub fn len(&self) -> usize {
        self.hooks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hooks.is_empty()
    }

    /// Hooks in increasing content order.
    pub fn hooks(&self) -> impl DoubleEndedIterator<Item = (Content, &RimHook)> + '_ {
        self.hooks.iter().map(|(&c, h)| (c, h))
    }

    pub fn contents(&self) -> BTreeSet<Content> {
        self.hooks.keys().copied().collect()
    }

    pub fn hook_of(&self, content: Content) -> Option<&RimHook> {
        self.hooks.get(&content)
    }

    pub fn max_content(&self) -> Option<Content> {
        self.hooks.keys().next_back().copied()
    }

    /// Content at `cell`, if the cell is in the shape.
    pub fn entry(&self, cell: Cell) -> Option<Content> {
        self.hooks.iter().find(|(_, h)| h.contains(cell)).map(|(&c, _)| c)
    }

    pub fn filling(&self) -> BTreeMap<Cell, Content> {
        self.hooks.iter().flat_map(|(&c, h)| h.cells().iter().map(move |&cell| (cell, c))).collect()
    }

    /// Re-checks every invariant, naming the first content that fails.
    pub fn validate(&self) -> Result<()> {
        let rebuilt = RimHookTableau::from_hooks(self.m, self.hooks.clone())?;
        if rebuilt.shape != self.shape {
            return Err(Error::InvalidTableau {
                content: 0,
                reason: format!("stored shape {} but cells form {}", self.shape, rebuilt.shape),
            });
        }
        Ok(())
    }

    /// Adds `hook` filled with `content`, which must exceed every content present.
    pub fn push_max(&mut self, content: Content, hook: RimHook) -> Result<()> {
        if hook.len() != self.m {
            return Err(Error::HookSizeMismatch { expected: self.m, found: hook.len() });
        }
        if self.hooks.contains_key(&content) {
            return Err(Error::DuplicateContent(content));
        }
        if self.max_content().is_some_and(|max| max > content) {
            return Err(Error::InvalidTableau {
                content,
                reason: "the rim hook of a smaller content lies outside a larger one".into(),
            });
        }
        if !is_rim_hook_outside(&self.shape, hook.cells()) {
            return Err(Error::InvalidTableau {
                content,
                reason: format!("{hook} is not a rim hook outside {}", self.shape),
            });
        }
        self.shape = self.shape.with_cells(hook.cells()).expect("checked rim hook");
        self.hooks.insert(content, hook);
        Ok(())
    }

    /// Removes and returns the rim hook of the largest content.
    pub fn pop_max(&mut self) -> Option<(Content, RimHook)> {
        let (content, hook) = self.hooks.pop_last()?;
        self.shape = self.shape.without_cells(hook.cells()).expect("outer rim hook");
        Some((content, hook))
    }

    /// The tableau with the largest content removed.
    pub fn without_max(&self) -> Self {
        let mut t = self.clone();
        t.pop_max();
        t
    }

    /// Splits into the parts with contents below and above `r`.
    fn split_at(&self, r: Content) -> (RimHookTableau, BTreeMap<Content, RimHook>) {
        let mut lower = self.hooks.clone();
        let upper = lower.split_off(&r);
        let lower = RimHookTableau::from_hooks(self.m, lower).expect("restriction of a tableau");
        (lower, upper)
    }
}

impl fmt::Display for RimHookTableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let filling = self.filling();
        let width = filling.values().map(|c| c.to_string().len()).max().unwrap_or(1);
        for (i, &len) in self.shape.parts().iter().enumerate() {
            let row: Vec<String> =
                (1..=len).map(|j| format!("{:>width$}", filling[&Cell::new(i + 1, j)])).collect();
            writeln!(f, "{}", row.join(" "))?;
        }
        Ok(())
    }
}

/// Checks a raw cell → content filling; the error names the first bad content.
pub fn validate_filling(m: usize, filling: &BTreeMap<Cell, Content>) -> Result<()> {
    RimHookTableau::from_filling(m, filling).map(|_| ())
}

/// A skew rim hook tableau: rim hooks added in increasing content order
/// outside a fixed inner shape.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SkewTableau {
    m: usize,
    inner: Partition,
    outer: Partition,
    hooks: BTreeMap<Content, RimHook>,
}

impl SkewTableau {
    pub fn new(m: usize, inner: Partition, hooks: BTreeMap<Content, RimHook>) -> Result<Self> {
        let mut outer = inner.clone();
        for (&content, hook) in &hooks {
            if hook.len() != m {
                return Err(Error::HookSizeMismatch { expected: m, found: hook.len() });
            }
            if !is_rim_hook_outside(&outer, hook.cells()) {
                return Err(Error::InvalidTableau {
                    content,
                    reason: format!("{hook} is not a rim hook outside {outer}"),
                });
            }
            outer = outer.with_cells(hook.cells()).expect("checked rim hook");
        }
        Ok(SkewTableau { m, inner, outer, hooks })
    }

    pub fn inner(&self) -> &Partition {
        &self.inner
    }

    pub fn outer(&self) -> &Partition {
        &self.outer
    }

    pub fn hooks(&self) -> impl DoubleEndedIterator<Item = (Content, &RimHook)> + '_ {
        self.hooks.iter().map(|(&c, h)| (c, h))
    }

    pub fn is_empty(&self) -> bool {
        self.hooks.is_empty()
    }

    pub fn min_content(&self) -> Option<Content> {
        self.hooks.keys().next().copied()
    }
}

/// Which of the three overlap cases the next [`operator_a`] step takes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum OverlapCase {
    /// `σ ∩ τ = ∅`: τ is copied over unchanged.
    Disjoint,
    /// `σ ∩ τ ≠ ∅`, `σ ≠ τ`: τ is bumped by σ.
    Bumped,
    /// `σ = τ`: τ slithers up the border until its head is legal.
    Slithered,
}

/// A pair `(U, V)` where `U` has shape `λ`, `V` is a skew tableau over `ω`,
/// `σ = λ/ω` is a rim hook outside `ω`, and every content of `U` is below
/// every content of `V`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OverlappingPair {
    u: RimHookTableau,
    v: SkewTableau,
    sigma: RimHook,
}

impl OverlappingPair {
    pub fn new(u: RimHookTableau, v: SkewTableau) -> Result<Self> {
        if u.m != v.m {
            return Err(Error::HookSizeMismatch { expected: u.m, found: v.m });
        }
        if !v.inner.is_contained_in(&u.shape) {
            return Err(Error::Precondition(format!("inner shape {} is not inside {}", v.inner, u.shape)));
        }
        let diff: Vec<Cell> = u.shape.cells().filter(|&c| !v.inner.contains(c)).collect();
        let sigma = RimHook::from_cells(diff)
            .map_err(|e| Error::Precondition(format!("λ/ω is not a rim hook: {e}")))?;
        if sigma.len() != u.m || !is_rim_hook_outside(&v.inner, sigma.cells()) {
            return Err(Error::Precondition(format!("σ = {sigma} is not an m-rim hook outside {}", v.inner)));
        }
        if let (Some(a), Some(b)) = (u.max_content(), v.min_content()) {
            if a >= b {
                return Err(Error::Precondition(format!("content {a} of U is not below content {b} of V")));
            }
        }
        Ok(OverlappingPair { u, v, sigma })
    }

    pub fn u(&self) -> &RimHookTableau {
        &self.u
    }

    pub fn v(&self) -> &SkewTableau {
        &self.v
    }

    /// `λ/ω`.
    pub fn sigma(&self) -> &RimHook {
        &self.sigma
    }

    /// The case the next [`operator_a`] step will take, or `None` when `V` is empty.
    pub fn overlap_case(&self) -> Option<OverlapCase> {
        let (_, tau) = self.v.hooks().next()?;
        Some(if tau.is_disjoint(&self.sigma) {
            OverlapCase::Disjoint
        } else if *tau != self.sigma {
            OverlapCase::Bumped
        } else {
            OverlapCase::Slithered
        })
    }
}

/// Slithers `hook` up the border of `lambda` until its head is legal.
fn slither_to_legal_head(lambda: &Partition, mut hook: RimHook) -> RimHook {
    while !hook.has_legal_head(lambda) {
        hook = slitherup(lambda, &hook);
    }
    hook
}

/// Moves the smallest content `r` of `V` (on rim hook `τ`) into `U`.
pub fn operator_a(pair: &OverlappingPair) -> Result<OverlappingPair> {
    let case = pair.overlap_case().ok_or_else(|| Error::Precondition("V is empty".into()))?;
    let (r, tau) = pair.v.hooks().next().map(|(c, h)| (c, h.clone())).expect("V is nonempty");
    let lambda = &pair.u.shape;
    let placed = match case {
        OverlapCase::Disjoint => tau.clone(),
        OverlapCase::Bumped => bump_hook(&pair.v.inner, &tau, &pair.sigma)?,
        OverlapCase::Slithered => {
            let hook = slither_to_legal_head(lambda, slitherup(lambda, &tau));
            if !is_rim_hook_outside(lambda, hook.cells()) {
                return Err(Error::Internal(format!("slithered hook {hook} has an illegal tail outside {lambda}")));
            }
            hook
        }
    };
    let mut u = pair.u.clone();
    u.push_max(r, placed)?;
    let mut rest = pair.v.hooks.clone();
    rest.remove(&r);
    let inner = pair.v.inner.with_cells(tau.cells()).expect("τ is a rim hook outside ω");
    let v = SkewTableau::new(pair.v.m, inner, rest)?;
    OverlappingPair::new(u, v)
}

/// Applies [`operator_a`] until `V` is exhausted and returns the final `U`.
pub fn combine(u: RimHookTableau, v: SkewTableau) -> Result<RimHookTableau> {
    if v.is_empty() {
        return Ok(u);
    }
    let mut pair = OverlappingPair::new(u, v)?;
    while !pair.v.is_empty() {
        pair = operator_a(&pair)?;
    }
    Ok(pair.u)
}

/// An `m`-hook tableau: shape `(arm, 1, …, 1)` of size `m`, one content.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HookTableau {
    m: usize,
    arm: usize,
    content: Content,
}

impl HookTableau {
    pub fn new(m: usize, arm: usize, content: Content) -> Result<Self> {
        if m == 0 || arm == 0 || arm > m {
            return Err(Error::InvalidArm { arm, m });
        }
        Ok(HookTableau { m, arm, content })
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// First-row length `t`; the hook's color is `c_t`.
    pub fn arm(&self) -> usize {
        self.arm
    }

    /// First-column length `m − t + 1`.
    pub fn leg(&self) -> usize {
        self.m - self.arm + 1
    }

    pub fn content(&self) -> Content {
        self.content
    }

    pub fn shape(&self) -> Partition {
        let mut parts = vec![self.arm];
        parts.extend(std::iter::repeat_n(1, self.m - self.arm));
        Partition::new(parts).expect("hook shape")
    }

    /// The hook's cells at the origin, tail first.
    pub fn cells(&self) -> RimHook {
        let tail = 1 - self.leg() as isize;
        RimHook::from_cells(Partition::empty().border_run(tail, self.m)).expect("hook at the origin")
    }

    pub fn to_tableau(&self) -> RimHookTableau {
        let mut t = RimHookTableau::empty(self.m);
        t.push_max(self.content, self.cells()).expect("hook at the origin");
        t
    }

    /// Recovers a hook tableau from a one-content tableau of hook shape.
    pub fn from_tableau(t: &RimHookTableau) -> Result<Self> {
        let mut hooks = t.hooks();
        let (content, hook) = hooks.next().ok_or_else(|| Error::Precondition("empty tableau".into()))?;
        if hooks.next().is_some() {
            return Err(Error::Precondition("a hook tableau has one content".into()));
        }
        let h = HookTableau::new(t.m, hook.width(), content)?;
        if h.cells() != *hook {
            return Err(Error::Precondition(format!("{hook} is not an m-hook at the origin")));
        }
        Ok(h)
    }
}

/// Where insertion first places the hook of the inserted content on top of
/// `λ'`, the shape of the smaller contents.
///
/// Both rules finish by slithering up the border of `λ'` to the first legal
/// head; they differ in the starting run.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum HookPlacement {
    /// Start from the hook at the origin and slither it down the border of
    /// `∅` (column 1) until it clears `λ'`. A hook of arm `t` always ends on
    /// border diagonals `≡ t − 1 (mod m)` at its head.
    #[default]
    ColumnSlide,
    /// Start from the `m` border cells of `λ'` whose tail is
    /// `(ℓ(λ') + leg, 1)`.
    FixedTail,
}

impl HookPlacement {
    /// The rim hook outside `lambda` that the inserted hook first occupies.
    pub fn place(self, lambda: &Partition, h: &HookTableau) -> Result<RimHook> {
        let empty = Partition::empty();
        let start = match self {
            HookPlacement::ColumnSlide => {
                let mut hook = h.cells();
                while hook.cells().iter().any(|&c| lambda.contains(c)) {
                    hook = slitherdown(&empty, &hook);
                }
                hook
            }
            HookPlacement::FixedTail => {
                let tail = Cell::new(lambda.len() + h.leg(), 1);
                RimHook::from_cells(lambda.border_run(tail.diagonal(), h.m()))?
            }
        };
        if !start.is_border_run(lambda) {
            return Err(Error::Internal(format!("start run {start} is not on the border of {lambda}")));
        }
        let placed = slither_to_legal_head(lambda, start);
        if !is_rim_hook_outside(lambda, placed.cells()) {
            return Err(Error::Internal(format!("placed hook {placed} has an illegal tail outside {lambda}")));
        }
        Ok(placed)
    }

    /// Arm of the hook whose placement on `lambda` ended at `placed`.
    fn arm_of(self, lambda: &Partition, placed: &RimHook, m: usize) -> usize {
        let head = placed.head().diagonal();
        let shift = match self {
            HookPlacement::ColumnSlide => 0,
            HookPlacement::FixedTail => lambda.len() as isize,
        };
        (head + shift).rem_euclid(m as isize) as usize + 1
    }
}

/// `P ← H` with the default [`HookPlacement`].
pub fn insert(p: &RimHookTableau, h: &HookTableau) -> Result<RimHookTableau> {
    insert_with(p, h, HookPlacement::default())
}

pub fn insert_with(p: &RimHookTableau, h: &HookTableau, placement: HookPlacement) -> Result<RimHookTableau> {
    if p.m != h.m {
        return Err(Error::HookSizeMismatch { expected: p.m, found: h.m });
    }
    let r = h.content;
    if p.hooks.contains_key(&r) {
        return Err(Error::DuplicateContent(r));
    }
    let (lower, upper) = p.split_at(r);
    let sigma = placement.place(&lower.shape, h)?;
    let v = SkewTableau::new(p.m, lower.shape.clone(), upper)?;
    let mut u = lower;
    u.push_max(r, sigma)?;
    combine(u, v)
}

/// Inverse of insertion: the unique `(P, H)` with `shape(P) = target` and
/// `P ← H = t`.
pub fn uninsert(t: &RimHookTableau, target: &Partition) -> Result<(RimHookTableau, HookTableau)> {
    uninsert_with(t, target, HookPlacement::default())
}

pub fn uninsert_with(
    t: &RimHookTableau,
    target: &Partition,
    placement: HookPlacement,
) -> Result<(RimHookTableau, HookTableau)> {
    let m = t.m;
    if !target.is_contained_in(&t.shape) || target.size() + m != t.shape.size() {
        return Err(Error::NoPreimage(format!("{target} is not {} minus an {m}-rim hook", t.shape)));
    }
    let diff: Vec<Cell> = t.shape.cells().filter(|&c| !target.contains(c)).collect();
    let mut sigma = RimHook::from_cells(diff).map_err(|e| Error::NoPreimage(e.to_string()))?;
    if !is_rim_hook_outside(target, sigma.cells()) {
        return Err(Error::NoPreimage(format!("{sigma} is not an outer rim hook of {}", t.shape)));
    }

    let mut u = t.clone();
    let mut inner = target.clone();
    let mut replayed: BTreeMap<Content, RimHook> = BTreeMap::new();
    let no_preimage = |why: &str| Error::NoPreimage(why.to_string());

    loop {
        let (s, rho) = u.pop_max().ok_or_else(|| no_preimage("ran out of contents"))?;
        let lambda = u.shape.clone();
        let tau = if rho.is_disjoint(&sigma) {
            rho
        } else if rho != sigma {
            let shared = rho.intersection(&sigma);
            let unbumped: Vec<Cell> = shared
                .iter()
                .map(|c| c.diagonal_predecessor())
                .collect::<Option<_>>()
                .ok_or_else(|| no_preimage("bumped cells on the first row or column"))?;
            let restore = |hook: &RimHook| -> Result<RimHook> {
                let mut cells: Vec<Cell> = hook.cells().iter().copied().filter(|c| !shared.contains(c)).collect();
                cells.extend(&unbumped);
                RimHook::from_cells(cells).map_err(|e| Error::NoPreimage(e.to_string()))
            };
            let tau = restore(&rho)?;
            sigma = restore(&sigma)?;
            tau
        } else {
            match slithered_from(&lambda, &rho) {
                Some(below) => {
                    let cells: Vec<Cell> = below
                        .cells()
                        .iter()
                        .map(|c| c.diagonal_predecessor())
                        .collect::<Option<_>>()
                        .ok_or_else(|| no_preimage("slither origin leaves the diagram"))?;
                    let tau = RimHook::from_cells(cells).map_err(|e| Error::NoPreimage(e.to_string()))?;
                    sigma = tau.clone();
                    tau
                }
                None => {
                    let h = HookTableau::new(m, placement.arm_of(&lambda, &rho, m), s)?;
                    let mut p = u;
                    for (c, hook) in replayed {
                        p.push_max(c, hook).map_err(|e| Error::NoPreimage(e.to_string()))?;
                    }
                    if p.shape != *target {
                        return Err(no_preimage("recovered tableau has the wrong shape"));
                    }
                    if insert_with(&p, &h, placement)? != *t {
                        return Err(no_preimage("recovered pair does not insert back"));
                    }
                    return Ok((p, h));
                }
            }
        };
        inner = inner
            .without_cells(tau.cells())
            .ok_or_else(|| no_preimage("replayed hook is not an outer hook of the inner shape"))?;
        replayed.insert(s, tau);
    }
}

/// For a hook `rho` outside `lambda` reached by slithering, the border run
/// it slithered from: walking down the border, the first run whose tail is
/// illegal. `None` when every lower run is legal, i.e. `rho` is where a
/// freshly inserted hook would settle.
fn slithered_from(lambda: &Partition, rho: &RimHook) -> Option<RimHook> {
    let mut probe = rho.clone();
    loop {
        let below = slitherdown(lambda, &probe);
        if !below.has_legal_tail(lambda) {
            return Some(below);
        }
        if below.head().col == 1 && below.head().row > lambda.len() {
            return None;
        }
        probe = below;
    }
}

/// A sequence of `m`-hook tableaux with distinct contents: an `m`-colored
/// permutation, the color of each entry being its hook's arm.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawHookPermutation", into = "RawHookPermutation")]
pub struct HookPermutation {
    m: usize,
    hooks: Vec<HookTableau>,
}

#[derive(Serialize, Deserialize)]
struct RawHookPermutation {
    m: usize,
    hooks: Vec<RawHookEntryArm>,
}

#[derive(Serialize, Deserialize)]
struct RawHookEntryArm {
    content: Content,
    arm: usize,
}

impl TryFrom<RawHookPermutation> for HookPermutation {
    type Error = Error;

    fn try_from(raw: RawHookPermutation) -> Result<Self> {
        let pairs: Vec<(Content, usize)> = raw.hooks.iter().map(|e| (e.content, e.arm)).collect();
        HookPermutation::from_pairs(raw.m, &pairs)
    }
}

impl From<HookPermutation> for RawHookPermutation {
    fn from(hp: HookPermutation) -> Self {
        RawHookPermutation {
            m: hp.m,
            hooks: hp.hooks.iter().map(|h| RawHookEntryArm { content: h.content, arm: h.arm }).collect(),
        }
    }
}

impl HookPermutation {
    pub fn new(m: usize, hooks: Vec<HookTableau>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for h in &hooks {
            if h.m != m {
                return Err(Error::HookSizeMismatch { expected: m, found: h.m });
            }
            if !seen.insert(h.content) {
                return Err(Error::DuplicateContent(h.content));
            }
        }
        Ok(HookPermutation { m, hooks })
    }

    /// From `(content, arm)` pairs.
    pub fn from_pairs(m: usize, pairs: &[(Content, usize)]) -> Result<Self> {
        let hooks = pairs
            .iter()
            .map(|&(content, arm)| HookTableau::new(m, arm, content))
            .collect::<Result<Vec<_>>>()?;
        HookPermutation::new(m, hooks)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn hooks(&self) -> &[HookTableau] {
        &self.hooks
    }

    pub fn len(&self) -> usize {
        self.hooks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.hooks.is_empty()
    }

    /// The permutation with the hook of the largest content deleted.
    pub fn without_max(&self) -> Self {
        let mut hooks = self.hooks.clone();
        if let Some(pos) = hooks.iter().enumerate().max_by_key(|(_, h)| h.content).map(|(i, _)| i) {
            hooks.remove(pos);
        }
        HookPermutation { m: self.m, hooks }
    }
}

/// Streams all `mⁿ·n!` hook permutations of the contents `1..=n`: orderings of
/// the contents in lexicographic order, and for each ordering every choice of arms.
pub fn hook_permutations(m: usize, n: usize) -> impl Iterator<Item = HookPermutation> {
    let mut order: Vec<Content> = (1..=n as Content).collect();
    let mut first = true;
    let orders = std::iter::from_fn(move || {
        if first {
            first = false;
            return Some(order.clone());
        }
        next_permutation(&mut order).then(|| order.clone())
    });
    orders.flat_map(move |order| {
        let colorings = m.pow(order.len() as u32);
        (0..colorings).map(move |code| {
            let mut rest = code;
            let mut arms = vec![0; order.len()];
            for slot in arms.iter_mut().rev() {
                *slot = rest % m + 1;
                rest /= m;
            }
            let hooks = order
                .iter()
                .zip(arms)
                .map(|(&content, arm)| HookTableau { m, arm, content })
                .collect();
            HookPermutation { m, hooks }
        })
    })
}

fn next_permutation(v: &mut [Content]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("successor exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `(∅ ← H_1) ← H_2 ← ⋯ ← H_n`.
pub fn insertion_tableau(hp: &HookPermutation) -> Result<RimHookTableau> {
    hp.hooks.iter().try_fold(RimHookTableau::empty(hp.m), |p, h| insert(&p, h))
}

/// The Schensted correspondence: insertion tableau `P` and recording tableau
/// `Q`, where `Q` fills the rim hook added by the `k`-th insertion with `k`.
pub fn sch(hp: &HookPermutation) -> Result<(RimHookTableau, RimHookTableau)> {
    let mut p = RimHookTableau::empty(hp.m);
    let mut q = RimHookTableau::empty(hp.m);
    for (k, h) in hp.hooks.iter().enumerate() {
        let next = insert(&p, h)?;
        let grown: Vec<Cell> = next.shape.cells().filter(|&c| !p.shape.contains(c)).collect();
        q.push_max(k as Content + 1, RimHook::from_cells(grown)?)?;
        p = next;
    }
    Ok((p, q))
}

/// Inverse of [`sch`]. `Q` must carry contents `1..=n`.
pub fn sch_inverse(p: &RimHookTableau, q: &RimHookTableau) -> Result<HookPermutation> {
    if p.m != q.m {
        return Err(Error::HookSizeMismatch { expected: p.m, found: q.m });
    }
    if p.shape != q.shape {
        return Err(Error::Precondition(format!("shapes differ: {} and {}", p.shape, q.shape)));
    }
    let n = q.len() as Content;
    if q.contents() != (1..=n).collect() {
        return Err(Error::Precondition("recording tableau must have contents 1..n".into()));
    }
    let mut p = p.clone();
    let mut q = q.clone();
    let mut hooks = Vec::with_capacity(n as usize);
    while let Some((_, _)) = q.pop_max() {
        let (smaller, h) = uninsert(&p, &q.shape).map_err(|e| Error::NoPreimage(format!("not in image: {e}")))?;
        hooks.push(h);
        p = smaller;
    }
    hooks.reverse();
    HookPermutation::new(p.m, hooks)
}

/// Longest subsequence of hooks of one shape with strictly increasing contents.
pub fn lis(hp: &HookPermutation) -> usize {
    longest_by_arm(hp, |c| c)
}

/// Longest subsequence of hooks of one shape with strictly decreasing contents.
pub fn lds(hp: &HookPermutation) -> usize {
    longest_by_arm(hp, |c| Content::MAX - c)
}

fn longest_by_arm(hp: &HookPermutation, key: impl Fn(Content) -> Content) -> usize {
    (1..=hp.m)
        .map(|arm| {
            let seq = hp.hooks.iter().filter(|h| h.arm == arm).map(|h| key(h.content));
            longest_increasing(seq)
        })
        .max()
        .unwrap_or(0)
}

/// Patience sorting; strictly increasing.
pub(crate) fn longest_increasing(seq: impl IntoIterator<Item = Content>) -> usize {
    let mut tails: Vec<Content> = Vec::new();
    for x in seq {
        let pos = tails.partition_point(|&t| t < x);
        if pos == tails.len() {
            tails.push(x);
        } else {
            tails[pos] = x;
        }
    }
    tails.len()
}

/// All `m`-rim hook tableaux of shape `shape` with the given contents.
pub fn tableaux_of_shape(m: usize, shape: &Partition, contents: &[Content]) -> Vec<RimHookTableau> {
    let mut sorted = contents.to_vec();
    sorted.sort_unstable();
    fn go(m: usize, shape: &Partition, contents: &[Content], out: &mut Vec<BTreeMap<Content, RimHook>>) {
        let Some((&last, rest)) = contents.split_last() else {
            if shape.is_empty() {
                out.push(BTreeMap::new());
            }
            return;
        };
        for hook in crate::shapes::removable_rim_hooks(shape, m) {
            let inner = shape.without_cells(hook.cells()).expect("outer rim hook");
            let mut partial = Vec::new();
            go(m, &inner, rest, &mut partial);
            for mut map in partial {
                map.insert(last, hook.clone());
                out.push(map);
            }
        }
    }
    if shape.size() != m * sorted.len() {
        return Vec::new();
    }
    let mut maps = Vec::new();
    go(m, shape, &sorted, &mut maps);
    maps.into_iter()
        .map(|hooks| RimHookTableau::from_hooks(m, hooks).expect("built by peeling"))
        .collect()
}
