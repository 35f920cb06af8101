//! Partitions, Young-diagram cells, outside borders and rim hooks.
//!
//! Cells use English (matrix) coordinates: row 1 is the top row, column 1 the
//! leftmost column, both 1-based. The *diagonal* of a cell is `col - row`.
//!
//! Every diagonal carries exactly one cell of the outside border of a
//! partition: the first cell on that diagonal which is not in the diagram.
//! The border order used throughout (tail to head, bottom-left to top-right)
//! is therefore just increasing diagonal, and the conceptually infinite first
//! row and first column are never stored.

use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A cell of a Young diagram, `(row, col)`, both starting at 1.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "[usize; 2]", into = "[usize; 2]")]
pub struct Cell {
    pub row: usize,
    pub col: usize,
}

impl Cell {
    /// Panics on a zero coordinate; use `Cell::try_from([row, col])` for
    /// untrusted input.
    pub fn new(row: usize, col: usize) -> Self {
        assert!(row >= 1 && col >= 1, "cells are 1-based, got ({row}, {col})");
        Cell { row, col }
    }

    /// `col - row`.
    pub fn diagonal(self) -> isize {
        self.col as isize - self.row as isize
    }

    pub fn transpose(self) -> Cell {
        Cell { row: self.col, col: self.row }
    }

    /// The cell one step down and one step right.
    pub fn diagonal_successor(self) -> Cell {
        Cell { row: self.row + 1, col: self.col + 1 }
    }

    /// The cell one step up and one step left, if it exists.
    pub fn diagonal_predecessor(self) -> Option<Cell> {
        (self.row > 1 && self.col > 1).then(|| Cell { row: self.row - 1, col: self.col - 1 })
    }

    fn above(self) -> Option<Cell> {
        (self.row > 1).then(|| Cell { row: self.row - 1, col: self.col })
    }

    fn left(self) -> Option<Cell> {
        (self.col > 1).then(|| Cell { row: self.row, col: self.col - 1 })
    }

    fn is_adjacent(self, other: Cell) -> bool {
        self.row.abs_diff(other.row) + self.col.abs_diff(other.col) == 1
    }
}

impl TryFrom<[usize; 2]> for Cell {
    type Error = Error;

    fn try_from([row, col]: [usize; 2]) -> Result<Self> {
        if row == 0 || col == 0 {
            return Err(Error::InvalidCell { row, col });
        }
        Ok(Cell { row, col })
    }
}

impl From<Cell> for [usize; 2] {
    fn from(c: Cell) -> Self {
        [c.row, c.col]
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.row, self.col)
    }
}

/// An integer partition, stored as its weakly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(parts: Vec<usize>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition(format!("{parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition(format!("{parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    /// Number of nonzero rows.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Number of cells.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Length of row `row` (1-based); zero past the last row.
    pub fn part(&self, row: usize) -> usize {
        if row == 0 {
            return 0;
        }
        self.0.get(row - 1).copied().unwrap_or(0)
    }

    /// Number of columns, i.e. the length of the first row.
    pub fn width(&self) -> usize {
        self.part(1)
    }

    pub fn contains(&self, cell: Cell) -> bool {
        cell.col <= self.part(cell.row)
    }

    /// `self ⊆ other` as diagrams.
    pub fn is_contained_in(&self, other: &Partition) -> bool {
        self.len() <= other.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn conjugate(&self) -> Partition {
        let width = self.width();
        let parts = (1..=width).map(|k| self.0.iter().filter(|&&p| p >= k).count()).collect();
        Partition(parts)
    }

    /// Cells in row-major order.
    pub fn cells(&self) -> impl Iterator<Item = Cell> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &len)| (1..=len).map(move |j| Cell { row: i + 1, col: j }))
    }

    /// Builds the partition whose diagram is exactly `cells`, if there is one.
    pub fn from_cells<'a>(cells: impl IntoIterator<Item = &'a Cell>) -> Option<Partition> {
        let mut rows: Vec<usize> = Vec::new();
        let mut seen = BTreeSet::new();
        for &c in cells {
            if !seen.insert(c) {
                return None;
            }
            if rows.len() < c.row {
                rows.resize(c.row, 0);
            }
            rows[c.row - 1] += 1;
        }
        let p = Partition::new(rows).ok()?;
        // Row counts alone do not rule out gaps inside a row.
        seen.iter().all(|&c| p.contains(c)).then_some(p)
    }

    /// `self ∪ cells`, if it is disjoint and again a partition.
    pub fn with_cells(&self, cells: &[Cell]) -> Option<Partition> {
        if cells.iter().any(|&c| self.contains(c)) {
            return None;
        }
        let all: Vec<Cell> = self.cells().chain(cells.iter().copied()).collect();
        Partition::from_cells(&all)
    }

    /// `self − cells`, if every cell is present and the rest is a partition.
    pub fn without_cells(&self, cells: &[Cell]) -> Option<Partition> {
        if cells.iter().any(|&c| !self.contains(c)) {
            return None;
        }
        let drop: BTreeSet<Cell> = cells.iter().copied().collect();
        if drop.len() != cells.len() {
            return None;
        }
        let rest: Vec<Cell> = self.cells().filter(|c| !drop.contains(c)).collect();
        Partition::from_cells(&rest)
    }

    /// The outside-border cell on `diagonal`: the first cell on that diagonal
    /// not in the diagram.
    pub fn border_cell(&self, diagonal: isize) -> Cell {
        if diagonal >= 0 {
            let d = diagonal as usize;
            let mut row = 1;
            while self.part(row) >= row + d {
                row += 1;
            }
            Cell { row, col: row + d }
        } else {
            let d = diagonal.unsigned_abs();
            let mut col = 1;
            while self.part(col + d) >= col {
                col += 1;
            }
            Cell { row: col + d, col }
        }
    }

    /// Membership rule for the outside border: `cell ∉ self` and it lies in
    /// row 1, in column 1, or diagonally below-right of a cell of `self`.
    pub fn is_border_cell(&self, cell: Cell) -> bool {
        !self.contains(cell)
            && (cell.row == 1
                || cell.col == 1
                || self.contains(Cell { row: cell.row - 1, col: cell.col - 1 }))
    }

    /// The border cells with row and column at most `extent`, in border order.
    pub fn outside_border(&self, extent: usize) -> Vec<Cell> {
        assert!(extent >= 1, "extent must be positive");
        let reach = extent as isize - 1;
        (-reach..=reach)
            .map(|d| self.border_cell(d))
            .filter(|c| c.row <= extent && c.col <= extent)
            .collect()
    }

    /// `len` consecutive border cells starting at diagonal `tail`.
    pub fn border_run(&self, tail: isize, len: usize) -> Vec<Cell> {
        (0..len as isize).map(|k| self.border_cell(tail + k)).collect()
    }

    /// The cell of `self` with largest row on `diagonal`, if any.
    pub fn last_cell_on_diagonal(&self, diagonal: isize) -> Option<Cell> {
        self.border_cell(diagonal).diagonal_predecessor()
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;

    fn try_from(parts: Vec<usize>) -> Result<Self> {
        Partition::new(parts)
    }
}

impl From<Partition> for Vec<usize> {
    fn from(p: Partition) -> Self {
        p.0
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let parts: Vec<String> = self.0.iter().map(ToString::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// A ribbon of cells, one per diagonal, stored tail to head.
///
/// Consecutive cells step either one column right or one row up, so the
/// cells are edge-connected and contain no 2×2 square.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawRimHook", into = "RawRimHook")]
pub struct RimHook {
    cells: Vec<Cell>,
}

#[derive(Serialize, Deserialize)]
struct RawRimHook {
    cells: Vec<Cell>,
}

impl TryFrom<RawRimHook> for RimHook {
    type Error = Error;

    fn try_from(raw: RawRimHook) -> Result<Self> {
        RimHook::from_cells(raw.cells)
    }
}

impl From<RimHook> for RawRimHook {
    fn from(h: RimHook) -> Self {
        RawRimHook { cells: h.cells }
    }
}

impl RimHook {
    /// Accepts the cells in any order.
    pub fn from_cells(mut cells: Vec<Cell>) -> Result<Self> {
        if cells.is_empty() {
            return Err(Error::NotARimHook("no cells".into()));
        }
        cells.sort_by_key(|c| c.diagonal());
        for w in cells.windows(2) {
            let (a, b) = (w[0], w[1]);
            let right = b.row == a.row && b.col == a.col + 1;
            let up = b.col == a.col && b.row + 1 == a.row;
            if !(right || up) {
                return Err(Error::NotARimHook(format!("{a} and {b} are not consecutive ribbon cells")));
            }
        }
        Ok(RimHook { cells })
    }

    /// Cells in border order, tail first.
    pub fn cells(&self) -> &[Cell] {
        &self.cells
    }

    pub fn len(&self) -> usize {
        self.cells.len()
    }

    pub fn is_empty(&self) -> bool {
        self.cells.is_empty()
    }

    /// Upper-rightmost cell.
    pub fn head(&self) -> Cell {
        *self.cells.last().expect("rim hooks are nonempty")
    }

    /// Lower-leftmost cell.
    pub fn tail(&self) -> Cell {
        self.cells[0]
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.cells.contains(&cell)
    }

    pub fn intersection(&self, other: &RimHook) -> Vec<Cell> {
        self.cells.iter().copied().filter(|c| other.contains(*c)).collect()
    }

    pub fn is_disjoint(&self, other: &RimHook) -> bool {
        self.cells.iter().all(|c| !other.contains(*c))
    }

    pub fn transpose(&self) -> RimHook {
        let mut cells: Vec<Cell> = self.cells.iter().map(|c| c.transpose()).collect();
        cells.reverse();
        RimHook { cells }
    }

    /// Number of columns spanned (the first-row length when the hook sits at
    /// the origin).
    pub fn width(&self) -> usize {
        self.head().col - self.tail().col + 1
    }

    /// Number of rows spanned.
    pub fn height(&self) -> usize {
        self.tail().row - self.head().row + 1
    }

    /// The head is illegal for `p` when the cell above it is a border cell of `p`.
    pub fn has_legal_head(&self, p: &Partition) -> bool {
        self.head().above().is_none_or(|c| !p.is_border_cell(c))
    }

    /// The tail is illegal for `p` when the cell left of it is a border cell of `p`.
    pub fn has_legal_tail(&self, p: &Partition) -> bool {
        self.tail().left().is_none_or(|c| !p.is_border_cell(c))
    }

    /// Whether the cells are consecutive border cells of `p`.
    pub fn is_border_run(&self, p: &Partition) -> bool {
        self.cells.iter().all(|&c| p.border_cell(c.diagonal()) == c)
    }
}

impl fmt::Display for RimHook {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cells: Vec<String> = self.cells.iter().map(ToString::to_string).collect();
        write!(f, "{{{}}}", cells.join(","))
    }
}

/// Rim-hook test by border geometry: a consecutive border run of `p` with a
/// legal head and a legal tail.
pub fn is_legal_border_run(p: &Partition, cells: &[Cell]) -> bool {
    match RimHook::from_cells(cells.to_vec()) {
        Ok(h) => h.is_border_run(p) && h.has_legal_head(p) && h.has_legal_tail(p),
        Err(_) => false,
    }
}

/// Rim-hook test by shape: `cells` is an edge-connected set with at most one
/// cell per diagonal and `p ∪ cells` is a partition.
pub fn is_ribbon_extending(p: &Partition, cells: &[Cell]) -> bool {
    if cells.is_empty() || p.with_cells(cells).is_none() {
        return false;
    }
    let diagonals: BTreeSet<isize> = cells.iter().map(|c| c.diagonal()).collect();
    if diagonals.len() != cells.len() {
        return false;
    }
    let mut reached = vec![false; cells.len()];
    let mut stack = vec![0];
    reached[0] = true;
    while let Some(i) = stack.pop() {
        for (j, &c) in cells.iter().enumerate() {
            if !reached[j] && cells[i].is_adjacent(c) {
                reached[j] = true;
                stack.push(j);
            }
        }
    }
    reached.into_iter().all(|r| r)
}

/// Whether `cells` form a rim hook outside `p`. Both characterizations are
/// evaluated and must agree.
pub fn is_rim_hook_outside(p: &Partition, cells: &[Cell]) -> bool {
    let by_border = is_legal_border_run(p, cells);
    let by_shape = is_ribbon_extending(p, cells);
    assert_eq!(by_border, by_shape, "rim hook characterizations disagree for {p} and {cells:?}");
    by_border
}

/// All `m`-rim hooks outside `p`, ordered bottom-up by tail.
pub fn addable_rim_hooks(p: &Partition, m: usize) -> Vec<RimHook> {
    assert!(m >= 1, "hook size must be positive");
    let lowest = -((p.len() + m - 1) as isize);
    (lowest..=p.width() as isize)
        .filter_map(|tail| {
            let hook = RimHook { cells: p.border_run(tail, m) };
            (hook.has_legal_head(p) && hook.has_legal_tail(p)).then_some(hook)
        })
        .collect()
}

/// All outer `m`-rim hooks of `p`, ordered bottom-up by tail.
pub fn removable_rim_hooks(p: &Partition, m: usize) -> Vec<RimHook> {
    assert!(m >= 1, "hook size must be positive");
    if p.size() < m {
        return Vec::new();
    }
    let lowest = 1 - p.len() as isize;
    (lowest..p.width() as isize)
        .filter_map(|tail| {
            let cells: Option<Vec<Cell>> =
                (0..m as isize).map(|k| p.last_cell_on_diagonal(tail + k)).collect();
            let hook = RimHook::from_cells(cells?).ok()?;
            let inner = p.without_cells(hook.cells())?;
            is_rim_hook_outside(&inner, hook.cells()).then_some(hook)
        })
        .collect()
}

/// The `|σ|` border cells of `p` immediately after the head of `σ`.
pub fn slitherup(p: &Partition, sigma: &RimHook) -> RimHook {
    RimHook { cells: p.border_run(sigma.head().diagonal() + 1, sigma.len()) }
}

/// The `|σ|` border cells of `p` immediately before the tail of `σ`.
pub fn slitherdown(p: &Partition, sigma: &RimHook) -> RimHook {
    let len = sigma.len() as isize;
    RimHook { cells: p.border_run(sigma.tail().diagonal() - len, sigma.len()) }
}

/// Diagonal translate `(i, j) ↦ (i + 1, j + 1)`.
pub fn bumpout(cells: &[Cell]) -> Vec<Cell> {
    cells.iter().map(|c| c.diagonal_successor()).collect()
}

/// `σ[τ] = (σ − σ∩τ) ∪ bumpout(σ∩τ)`, checked to be a rim hook outside `λ ∪ τ`.
pub fn bump_hook(lambda: &Partition, sigma: &RimHook, tau: &RimHook) -> Result<RimHook> {
    if sigma == tau {
        return Err(Error::Precondition("σ[τ] needs distinct rim hooks".into()));
    }
    let overlap = sigma.intersection(tau);
    if overlap.is_empty() {
        return Err(Error::Precondition("σ[τ] needs overlapping rim hooks".into()));
    }
    let mut cells: Vec<Cell> = sigma.cells().iter().copied().filter(|c| !tau.contains(*c)).collect();
    cells.extend(bumpout(&overlap));
    let bumped = RimHook::from_cells(cells)?;
    let grown = lambda
        .with_cells(tau.cells())
        .ok_or_else(|| Error::NotARimHook(format!("τ = {tau} is not a rim hook outside {lambda}")))?;
    if !is_rim_hook_outside(&grown, bumped.cells()) {
        return Err(Error::NotARimHook(format!("σ[τ] = {bumped} is not a rim hook outside {grown}")));
    }
    Ok(bumped)
}

/// All partitions of `n` in reverse lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    fn go(rest: usize, max: usize, prefix: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if rest == 0 {
            out.push(Partition(prefix.clone()));
            return;
        }
        for part in (1..=rest.min(max)).rev() {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn cells(list: &[(usize, usize)]) -> Vec<Cell> {
        list.iter().map(|&(r, c)| Cell::new(r, c)).collect()
    }

    fn hook(list: &[(usize, usize)]) -> RimHook {
        RimHook::from_cells(cells(list)).unwrap()
    }

    #[test]
    fn conjugate_examples() {
        assert_eq!(p(&[5, 4, 2, 2]).conjugate(), p(&[4, 4, 2, 2, 1]));
        assert_eq!(Partition::empty().conjugate(), Partition::empty());
        assert_eq!(p(&[1, 1, 1]).conjugate(), p(&[3]));
    }

    #[test]
    fn partition_rejects_bad_parts() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
    }

    #[test]
    fn outside_border_examples() {
        assert_eq!(p(&[1]).outside_border(3), cells(&[(3, 1), (2, 1), (2, 2), (1, 2), (1, 3)]));
        assert_eq!(Partition::empty().outside_border(2), cells(&[(2, 1), (1, 1), (1, 2)]));
        assert_eq!(
            p(&[1, 1]).outside_border(4),
            cells(&[(4, 1), (3, 1), (3, 2), (2, 2), (1, 2), (1, 3), (1, 4)])
        );
    }

    #[test]
    fn outside_border_of_5422_matches_shaded_ribbon() {
        // Shaded cells of the (5,4,2,2) border picture, rows ≤ 6, cols ≤ 8.
        let shaded = cells(&[
            (6, 1),
            (5, 1),
            (5, 2),
            (5, 3),
            (4, 3),
            (3, 3),
            (3, 4),
            (3, 5),
            (2, 5),
            (2, 6),
            (1, 6),
            (1, 7),
            (1, 8),
        ]);
        let got: Vec<Cell> =
            p(&[5, 4, 2, 2]).outside_border(8).into_iter().filter(|c| c.row <= 6).collect();
        assert_eq!(got, shaded);
    }

    #[test]
    fn border_membership_rule_matches_first_cell_per_diagonal() {
        for n in 0..=8 {
            for q in partitions_of(n) {
                let extent = q.len().max(q.width()) + 2;
                for row in 1..=extent {
                    for col in 1..=extent {
                        let c = Cell::new(row, col);
                        assert_eq!(q.is_border_cell(c), q.border_cell(c.diagonal()) == c, "{q} {c}");
                    }
                }
                // Prose form: below or right of the diagram's last cells, or on
                // the first row/column past it.
                for c in q.outside_border(extent) {
                    let below_or_right = (c.row > 1 && q.contains(Cell::new(c.row - 1, c.col)))
                        || (c.col > 1 && q.contains(Cell::new(c.row, c.col - 1)))
                        || c.row == 1
                        || c.col == 1
                        || q.contains(Cell::new(c.row - 1, c.col - 1));
                    assert!(below_or_right);
                }
            }
        }
    }

    #[test]
    fn border_order_steps_up_or_right() {
        for n in 0..=10 {
            for q in partitions_of(n) {
                let border = q.outside_border(q.len().max(q.width()) + 3);
                for w in border.windows(2) {
                    let up = w[1].row + 1 == w[0].row && w[1].col == w[0].col;
                    let right = w[1].row == w[0].row && w[1].col == w[0].col + 1;
                    assert!(up || right, "{q}: {} -> {}", w[0], w[1]);
                }
            }
        }
    }

    #[test]
    fn border_runs_on_5422() {
        let lambda = p(&[5, 4, 2, 2]);
        // Illegal head: the cell above (3,5) is a border cell.
        let first = cells(&[(4, 3), (3, 3), (3, 4), (3, 5)]);
        assert!(!is_rim_hook_outside(&lambda, &first));
        assert!(!hook(&[(4, 3), (3, 3), (3, 4), (3, 5)]).has_legal_head(&lambda));
        // Illegal tail: the cell left of (5,2) is a border cell.
        let second = cells(&[(5, 2), (5, 3), (4, 3), (3, 3), (3, 4)]);
        assert!(!is_rim_hook_outside(&lambda, &second));
        assert!(!hook(&[(5, 2), (5, 3), (4, 3), (3, 3), (3, 4)]).has_legal_tail(&lambda));
        let third = cells(&[(4, 3), (3, 3), (3, 4), (3, 5), (2, 5)]);
        assert!(is_rim_hook_outside(&lambda, &third));
    }

    #[test]
    fn vertical_domino_outside_empty() {
        assert!(is_rim_hook_outside(&Partition::empty(), &cells(&[(1, 1), (2, 1)])));
    }

    #[test]
    fn addable_examples() {
        let e = Partition::empty();
        assert_eq!(addable_rim_hooks(&e, 2), vec![hook(&[(2, 1), (1, 1)]), hook(&[(1, 1), (1, 2)])]);
        assert_eq!(addable_rim_hooks(&e, 1), vec![hook(&[(1, 1)])]);
        assert_eq!(
            addable_rim_hooks(&p(&[2]), 2),
            vec![hook(&[(3, 1), (2, 1)]), hook(&[(2, 1), (2, 2)]), hook(&[(1, 3), (1, 4)])]
        );
    }

    /// Brute force: all `m`-subsets of a window of the border whose union with
    /// `q` is a ribbon partition.
    fn addable_oracle(q: &Partition, m: usize) -> BTreeSet<Vec<Cell>> {
        let border = q.outside_border(q.len().max(q.width()) + m + 1);
        let mut out = BTreeSet::new();
        let k = border.len();
        let mut idx: Vec<usize> = (0..m).collect();
        if m > k {
            return out;
        }
        loop {
            let mut sel: Vec<Cell> = idx.iter().map(|&i| border[i]).collect();
            if is_ribbon_extending(q, &sel) {
                sel.sort_by_key(|c| c.diagonal());
                out.insert(sel);
            }
            let mut i = m;
            while i > 0 && idx[i - 1] == k - m + i - 1 {
                i -= 1;
            }
            if i == 0 {
                break;
            }
            idx[i - 1] += 1;
            for j in i..m {
                idx[j] = idx[j - 1] + 1;
            }
        }
        out
    }

    #[test]
    fn addable_matches_subset_oracle() {
        for n in 0..=7 {
            for q in partitions_of(n) {
                for m in 1..=3 {
                    let fast: BTreeSet<Vec<Cell>> =
                        addable_rim_hooks(&q, m).into_iter().map(|h| h.cells().to_vec()).collect();
                    assert_eq!(fast, addable_oracle(&q, m), "{q} m={m}");
                }
            }
        }
    }

    #[test]
    fn removable_examples() {
        assert_eq!(
            removable_rim_hooks(&p(&[2, 2]), 2),
            vec![hook(&[(2, 1), (2, 2)]), hook(&[(2, 2), (1, 2)])]
        );
        assert!(removable_rim_hooks(&p(&[1]), 2).is_empty());
        assert_eq!(removable_rim_hooks(&p(&[3, 1]), 2), vec![hook(&[(1, 2), (1, 3)])]);
    }

    #[test]
    fn removable_matches_cell_subset_oracle() {
        for n in 0..=8 {
            for q in partitions_of(n) {
                for m in 1..=3 {
                    let fast: BTreeSet<Vec<Cell>> =
                        removable_rim_hooks(&q, m).into_iter().map(|h| h.cells().to_vec()).collect();
                    let all: Vec<Cell> = q.cells().collect();
                    let mut slow = BTreeSet::new();
                    for mask in 0u32..(1 << all.len()) {
                        if mask.count_ones() as usize != m {
                            continue;
                        }
                        let mut sel: Vec<Cell> =
                            (0..all.len()).filter(|i| mask >> i & 1 == 1).map(|i| all[i]).collect();
                        if let Some(inner) = q.without_cells(&sel) {
                            if is_ribbon_extending(&inner, &sel) {
                                sel.sort_by_key(|c| c.diagonal());
                                slow.insert(sel);
                            }
                        }
                    }
                    assert_eq!(fast, slow, "{q} m={m}");
                }
            }
        }
    }

    #[test]
    fn addable_and_removable_are_inverse() {
        for n in 0..=12 {
            for q in partitions_of(n) {
                for m in 1..=4 {
                    for h in addable_rim_hooks(&q, m) {
                        let grown = q.with_cells(h.cells()).expect("union is a partition");
                        assert_eq!(grown.size(), q.size() + m);
                        assert!(removable_rim_hooks(&grown, m).contains(&h));
                    }
                }
            }
        }
    }

    #[test]
    fn characterizations_agree_on_border_subsets() {
        for n in 0..=10 {
            for q in partitions_of(n) {
                let border = q.outside_border(q.len().max(q.width()) + 1);
                let k = border.len();
                for a in 0..k {
                    for b in a..k.min(a + 4) {
                        // Contiguous windows plus windows with one cell dropped.
                        let window: Vec<Cell> = border[a..=b].to_vec();
                        is_rim_hook_outside(&q, &window);
                        for skip in 0..window.len() {
                            let mut w = window.clone();
                            w.remove(skip);
                            if !w.is_empty() {
                                is_rim_hook_outside(&q, &w);
                            }
                        }
                    }
                }
                for mask in 0u32..(1 << k.min(10)) {
                    let sel: Vec<Cell> = (0..k.min(10)).filter(|i| mask >> i & 1 == 1).map(|i| border[i]).collect();
                    if !sel.is_empty() && sel.len() <= 5 {
                        is_rim_hook_outside(&q, &sel);
                    }
                }
            }
        }
    }

    #[test]
    fn slither_examples() {
        let e = Partition::empty();
        assert_eq!(slitherup(&e, &hook(&[(2, 1), (1, 1)])), hook(&[(1, 2), (1, 3)]));
        let one = p(&[1]);
        assert_eq!(slitherup(&one, &hook(&[(2, 1)])), hook(&[(2, 2)]));
        assert_eq!(slitherdown(&one, &hook(&[(2, 2)])), hook(&[(2, 1)]));
    }

    #[test]
    fn slither_picture_on_5422() {
        let lambda = p(&[5, 4, 2, 2]);
        let sigma = hook(&[(3, 3), (3, 4), (3, 5), (2, 5)]);
        assert_eq!(slitherup(&lambda, &sigma), hook(&[(2, 6), (1, 6), (1, 7), (1, 8)]));
        assert_eq!(slitherdown(&lambda, &sigma), hook(&[(5, 1), (5, 2), (5, 3), (4, 3)]));
    }

    #[test]
    fn slither_round_trips() {
        for n in 0..=8 {
            for q in partitions_of(n) {
                for m in 1..=3 {
                    for tail in -6..6 {
                        let sigma = RimHook { cells: q.border_run(tail, m) };
                        assert_eq!(slitherdown(&q, &slitherup(&q, &sigma)), sigma);
                        assert_eq!(slitherup(&q, &slitherdown(&q, &sigma)), sigma);
                    }
                }
            }
        }
    }

    #[test]
    fn bumpout_examples() {
        assert_eq!(bumpout(&cells(&[(1, 1)])), cells(&[(2, 2)]));
        assert!(bumpout(&[]).is_empty());
        assert_eq!(bumpout(&cells(&[(2, 3), (2, 4), (1, 4)])), cells(&[(3, 4), (3, 5), (2, 5)]));
    }

    #[test]
    fn bump_hook_examples() {
        let e = Partition::empty();
        let sigma = hook(&[(1, 1), (2, 1)]);
        let tau = hook(&[(1, 1), (1, 2)]);
        let got = bump_hook(&e, &sigma, &tau).unwrap();
        assert_eq!(got, hook(&[(2, 1), (2, 2)]));
        assert!(is_rim_hook_outside(&p(&[2]), got.cells()));
        assert!(bump_hook(&e, &sigma, &sigma).is_err());
        assert!(bump_hook(&e, &hook(&[(2, 1), (1, 1)]), &hook(&[(1, 2), (1, 3)])).is_err());
    }

    #[test]
    fn bump_hook_picture_on_5422() {
        let lambda = p(&[5, 4, 2, 2]);
        let sigma = hook(&[(3, 3), (3, 4), (3, 5), (2, 5), (2, 6), (1, 6)]);
        let tau = hook(&[(4, 3), (3, 3), (3, 4), (3, 5), (2, 5)]);
        assert!(is_rim_hook_outside(&lambda, sigma.cells()));
        assert!(is_rim_hook_outside(&lambda, tau.cells()));
        let got = bump_hook(&lambda, &sigma, &tau).unwrap();
        assert_eq!(got, hook(&[(4, 4), (4, 5), (4, 6), (3, 6), (2, 6), (1, 6)]));
    }

    #[test]
    fn bump_hook_preserves_size_on_all_overlaps() {
        for n in 0..=8 {
            for q in partitions_of(n) {
                for m in 1..=4 {
                    let hooks = addable_rim_hooks(&q, m);
                    for s in &hooks {
                        for t in &hooks {
                            if s != t && !s.is_disjoint(t) {
                                let b = bump_hook(&q, s, t).unwrap();
                                assert_eq!(b.len(), m);
                            }
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn conjugation_maps_addable_hooks() {
        for n in 0..=9 {
            for q in partitions_of(n) {
                for m in 1..=3 {
                    let mut a: Vec<RimHook> = addable_rim_hooks(&q, m).iter().map(RimHook::transpose).collect();
                    let mut b = addable_rim_hooks(&q.conjugate(), m);
                    a.sort();
                    b.sort();
                    assert_eq!(a, b);
                }
            }
        }
    }
}
