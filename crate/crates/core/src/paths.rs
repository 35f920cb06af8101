//! Dyck paths, dispersed Dyck paths, Dyck path packings and Guy's walks,
//! with the maps from two-column oscillating domino tableaux to packings
//! ([`to_packing`]) and from noncrossing 2-colored matchings to walks
//! ([`to_guy_walk`]).
//!
//! Paths are stored as height sequences.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::matchings::{Arc, ColoredMatching};
use crate::oscillating::OscillatingTableau;
use crate::shapes::Partition;
use crate::Content;

fn check_endpoints(heights: &[usize], what: &str) -> Result<()> {
    if heights.first() != Some(&0) || heights.last() != Some(&0) {
        return Err(Error::InvalidPath(format!("{what} must start and end at height 0")));
    }
    Ok(())
}

/// A path of up and down steps from height 0 to height 0 that never goes below 0.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct DyckPath(Vec<usize>);

impl DyckPath {
    pub fn new(heights: Vec<usize>) -> Result<Self> {
        check_endpoints(&heights, "a Dyck path")?;
        if let Some(i) = heights.windows(2).position(|w| w[0].abs_diff(w[1]) != 1) {
            return Err(Error::InvalidPath(format!("Dyck path step {} is not ±1", i + 1)));
        }
        Ok(DyckPath(heights))
    }

    pub fn heights(&self) -> &[usize] {
        &self.0
    }

    /// Number of steps.
    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl TryFrom<Vec<usize>> for DyckPath {
    type Error = Error;

    fn try_from(h: Vec<usize>) -> Result<Self> {
        DyckPath::new(h)
    }
}

impl From<DyckPath> for Vec<usize> {
    fn from(p: DyckPath) -> Self {
        p.0
    }
}

/// Like a Dyck path, but flat steps are allowed on the x-axis.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct DispersedDyckPath(Vec<usize>);

impl DispersedDyckPath {
    pub fn new(heights: Vec<usize>) -> Result<Self> {
        check_endpoints(&heights, "a dispersed Dyck path")?;
        for (i, w) in heights.windows(2).enumerate() {
            let ok = w[0].abs_diff(w[1]) == 1 || (w[0] == 0 && w[1] == 0);
            if !ok {
                return Err(Error::InvalidPath(format!("dispersed Dyck path step {} is not ±1 or flat at 0", i + 1)));
            }
        }
        Ok(DispersedDyckPath(heights))
    }

    pub fn heights(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl TryFrom<Vec<usize>> for DispersedDyckPath {
    type Error = Error;

    fn try_from(h: Vec<usize>) -> Result<Self> {
        DispersedDyckPath::new(h)
    }
}

impl From<DispersedDyckPath> for Vec<usize> {
    fn from(p: DispersedDyckPath) -> Self {
        p.0
    }
}

/// A Dyck path `D` with a dispersed Dyck path `E` of the same length weakly below it.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawPacking", into = "RawPacking")]
pub struct DyckPathPacking {
    d: DyckPath,
    e: DispersedDyckPath,
}

#[derive(Serialize, Deserialize)]
struct RawPacking {
    #[serde(rename = "D")]
    d: DyckPath,
    #[serde(rename = "E")]
    e: DispersedDyckPath,
}

impl TryFrom<RawPacking> for DyckPathPacking {
    type Error = Error;

    fn try_from(raw: RawPacking) -> Result<Self> {
        DyckPathPacking::new(raw.d, raw.e)
    }
}

impl From<DyckPathPacking> for RawPacking {
    fn from(p: DyckPathPacking) -> Self {
        RawPacking { d: p.d, e: p.e }
    }
}

impl DyckPathPacking {
    pub fn new(d: DyckPath, e: DispersedDyckPath) -> Result<Self> {
        if d.len() != e.len() {
            return Err(Error::InvalidPath(format!("lengths differ: {} and {}", d.len(), e.len())));
        }
        if let Some(i) = d.0.iter().zip(&e.0).position(|(a, b)| b > a) {
            return Err(Error::InvalidPath(format!("E rises above D at index {i}")));
        }
        Ok(DyckPathPacking { d, e })
    }

    pub fn from_heights(d: Vec<usize>, e: Vec<usize>) -> Result<Self> {
        DyckPathPacking::new(DyckPath::new(d)?, DispersedDyckPath::new(e)?)
    }

    pub fn d(&self) -> &DyckPath {
        &self.d
    }

    pub fn e(&self) -> &DispersedDyckPath {
        &self.e
    }
}

/// A unit step of a walk in the quarter plane.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    /// `(1, 0)`
    R,
    /// `(−1, 0)`
    L,
    /// `(0, 1)`
    U,
    /// `(0, −1)`
    D,
}

impl Dir {
    pub const ALL: [Dir; 4] = [Dir::R, Dir::L, Dir::U, Dir::D];

    pub fn delta(self) -> (i64, i64) {
        match self {
            Dir::R => (1, 0),
            Dir::L => (-1, 0),
            Dir::U => (0, 1),
            Dir::D => (0, -1),
        }
    }

    pub fn letter(self) -> char {
        match self {
            Dir::R => 'R',
            Dir::L => 'L',
            Dir::U => 'U',
            Dir::D => 'D',
        }
    }

    pub fn arrow(self) -> char {
        match self {
            Dir::R => '→',
            Dir::L => '←',
            Dir::U => '↑',
            Dir::D => '↓',
        }
    }
}

/// A walk from `(0,0)` to `(0,0)` with unit axis steps that stays in the first quadrant.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct GuyWalk(Vec<Dir>);

impl GuyWalk {
    pub fn new(steps: Vec<Dir>) -> Result<Self> {
        let (mut x, mut y) = (0i64, 0i64);
        for (i, s) in steps.iter().enumerate() {
            let (dx, dy) = s.delta();
            x += dx;
            y += dy;
            if x < 0 || y < 0 {
                return Err(Error::InvalidPath(format!("walk leaves the first quadrant at step {}", i + 1)));
            }
        }
        if (x, y) != (0, 0) {
            return Err(Error::InvalidPath(format!("walk ends at ({x}, {y}), not the origin")));
        }
        Ok(GuyWalk(steps))
    }

    pub fn steps(&self) -> &[Dir] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn arrows(&self) -> String {
        self.0.iter().map(|d| d.arrow()).collect()
    }
}

impl FromStr for GuyWalk {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .chars()
            .map(|c| match c {
                'R' => Ok(Dir::R),
                'L' => Ok(Dir::L),
                'U' => Ok(Dir::U),
                'D' => Ok(Dir::D),
                other => Err(Error::InvalidPath(format!("unknown step {other:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        GuyWalk::new(steps)
    }
}

impl TryFrom<String> for GuyWalk {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<GuyWalk> for String {
    fn from(w: GuyWalk) -> Self {
        w.to_string()
    }
}

impl fmt::Display for GuyWalk {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.iter().try_for_each(|d| write!(f, "{}", d.letter()))
    }
}

/// Two-column oscillating domino tableau → Dyck path packing.
pub fn to_packing(o: &OscillatingTableau) -> Result<DyckPathPacking> {
    if o.m() != 2 {
        return Err(Error::Precondition(format!("packings come from domino tableaux, got m = {}", o.m())));
    }
    if o.max_cols() > 2 {
        return Err(Error::Precondition("every shape must have at most two columns".into()));
    }
    let (a, b): (Vec<usize>, Vec<usize>) = o
        .shapes()
        .iter()
        .map(|shape| {
            let rows = shape.conjugate();
            let (u, v) = (rows.part(1), rows.part(2));
            ((u + v) / 2, (u - v) / 2)
        })
        .unzip();
    DyckPathPacking::from_heights(a, b).map_err(|e| Error::Internal(format!("packing from a valid tableau: {e}")))
}

/// Inverse of [`to_packing`].
pub fn from_packing(p: &DyckPathPacking) -> Result<OscillatingTableau> {
    let shapes = p
        .d
        .0
        .iter()
        .zip(&p.e.0)
        .map(|(&a, &b)| {
            let rows = [a + b, a - b].into_iter().filter(|&x| x > 0).collect();
            Partition::new(rows).map(|rows| rows.conjugate())
        })
        .collect::<Result<Vec<_>>>()?;
    OscillatingTableau::new(2, shapes)
}

/// Noncrossing 2-colored matching → Guy's walk: color-1 arcs step right then
/// left, color-2 arcs step up then down.
pub fn to_guy_walk(mt: &ColoredMatching) -> Result<GuyWalk> {
    if mt.m() != 2 {
        return Err(Error::Precondition(format!("walks come from 2-colored matchings, got m = {}", mt.m())));
    }
    if !mt.is_noncrossing() {
        return Err(Error::Precondition("matching has two crossing arcs of one color".into()));
    }
    let mut steps = vec![Dir::R; 2 * mt.n()];
    for a in mt.arcs() {
        let (open, close) = if a.color == 1 { (Dir::R, Dir::L) } else { (Dir::U, Dir::D) };
        steps[a.opener as usize - 1] = open;
        steps[a.closer as usize - 1] = close;
    }
    GuyWalk::new(steps).map_err(|e| Error::Internal(format!("walk from a noncrossing matching: {e}")))
}

/// Inverse of [`to_guy_walk`]: each closer is matched to the latest open arc of its color.
pub fn from_guy_walk(w: &GuyWalk) -> ColoredMatching {
    let mut open: [Vec<Content>; 2] = [Vec::new(), Vec::new()];
    let mut arcs = Vec::with_capacity(w.len() / 2);
    for (i, &d) in w.0.iter().enumerate() {
        let v = i as Content + 1;
        match d {
            Dir::R => open[0].push(v),
            Dir::U => open[1].push(v),
            Dir::L | Dir::D => {
                let color = if d == Dir::L { 1 } else { 2 };
                let opener = open[color - 1].pop().expect("quadrant walk has an open arc");
                arcs.push(Arc { opener, closer: v, color });
            }
        }
    }
    ColoredMatching::new(w.len() / 2, 2, arcs).expect("LIFO pairing is a perfect matching")
}

/// All Dyck paths with `2n` steps, in lexicographic order of heights.
pub fn dyck_paths(n: usize) -> Vec<DyckPath> {
    fn go(n: usize, h: &mut Vec<usize>, out: &mut Vec<DyckPath>) {
        let len = h.len() - 1;
        let cur = *h.last().expect("nonempty");
        if len == 2 * n {
            if cur == 0 {
                out.push(DyckPath(h.clone()));
            }
            return;
        }
        if cur > 0 {
            h.push(cur - 1);
            go(n, h, out);
            h.pop();
        }
        if cur < 2 * n - len {
            h.push(cur + 1);
            go(n, h, out);
            h.pop();
        }
    }
    let mut out = Vec::new();
    go(n, &mut vec![0], &mut out);
    out
}

/// All dispersed Dyck paths weakly below `d`.
pub fn dispersed_paths_under(d: &DyckPath) -> Vec<DispersedDyckPath> {
    fn go(bound: &[usize], h: &mut Vec<usize>, out: &mut Vec<DispersedDyckPath>) {
        let i = h.len();
        let cur = h[i - 1];
        if i == bound.len() {
            if cur == 0 {
                out.push(DispersedDyckPath(h.clone()));
            }
            return;
        }
        let mut next = Vec::with_capacity(3);
        if cur > 0 {
            next.push(cur - 1);
        } else {
            next.push(0);
        }
        next.push(cur + 1);
        for b in next {
            if b <= bound[i] && b <= bound.len() - 1 - i {
                h.push(b);
                go(bound, h, out);
                h.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(&d.0, &mut vec![0], &mut out);
    out
}

/// Streams every Dyck path packing with `2n` steps, grouped by `D`.
pub fn packings(n: usize) -> impl Iterator<Item = DyckPathPacking> {
    dyck_paths(n).into_iter().flat_map(|d| {
        dispersed_paths_under(&d).into_iter().map(move |e| DyckPathPacking { d: d.clone(), e })
    })
}

/// All Guy's walks with `2n` steps, in the step order `R, L, U, D`.
pub fn guy_walks(n: usize) -> Vec<GuyWalk> {
    fn go(len: usize, x: usize, y: usize, steps: &mut Vec<Dir>, out: &mut Vec<GuyWalk>) {
        let left = len - steps.len();
        if left == 0 {
            if x == 0 && y == 0 {
                out.push(GuyWalk(steps.clone()));
            }
            return;
        }
        for d in Dir::ALL {
            let (nx, ny) = match d {
                Dir::R => (x + 1, y),
                Dir::L if x > 0 => (x - 1, y),
                Dir::U => (x, y + 1),
                Dir::D if y > 0 => (x, y - 1),
                _ => continue,
            };
            if nx + ny < left {
                steps.push(d);
                go(len, nx, ny, steps, out);
                steps.pop();
            }
        }
    }
    let mut out = Vec::new();
    go(2 * n, 0, 0, &mut Vec::new(), &mut out);
    out
}
