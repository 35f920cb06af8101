//! Monospace drawings.

use std::collections::{BTreeMap, BTreeSet};
use std::process::ExitCode;

use clap::ValueEnum;

use rimhook::oscillating::Step;
use rimhook::shapes::Cell;
use rimhook::{ColoredMatching, Content, DyckPathPacking, GuyWalk, OscillatingTableau, Partition, RimHookTableau};

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum RenderKind {
    Partition,
    Tableau,
    Matching,
    Oscillating,
    Packing,
    Walk,
}

#[derive(clap::Args, Debug)]
pub struct RenderArgs {
    #[arg(long, value_enum)]
    kind: RenderKind,
    /// The object as JSON (a partition may also be written `5,4,2,2`);
    /// read from standard input when absent.
    input: Option<String>,
}

pub fn run(a: &RenderArgs, max_cells: usize) -> Result<ExitCode, String> {
    let text = match &a.input {
        Some(s) => s.clone(),
        None => crate::read_stdin().map_err(|e| e.to_string())?,
    };
    let text = text.trim();
    let out = match a.kind {
        RenderKind::Partition => {
            let p = parse_partition(text)?;
            cap(p.size(), max_cells)?;
            grid(&p, Some, |_| String::new())
        }
        RenderKind::Tableau => {
            let t: RimHookTableau = parse(text)?;
            cap(t.shape().size(), max_cells)?;
            tableau(&t)
        }
        RenderKind::Matching => {
            let mt: ColoredMatching = parse(text)?;
            cap(mt.n() * mt.m(), max_cells)?;
            arcs(&mt)
        }
        RenderKind::Oscillating => {
            let o: OscillatingTableau = parse(text)?;
            cap(o.shapes().iter().map(Partition::size).max().unwrap_or(0), max_cells)?;
            oscillating(&o)
        }
        RenderKind::Packing => {
            let p: DyckPathPacking = parse(text)?;
            cap(p.d().len(), max_cells)?;
            format!("D\n{}E\n{}", mountain(p.d().heights()), mountain(p.e().heights()))
        }
        RenderKind::Walk => {
            let w: GuyWalk = match serde_json::from_str(text) {
                Ok(w) => w,
                Err(_) => text.parse().map_err(|e: rimhook::Error| e.to_string())?,
            };
            cap(w.len(), max_cells)?;
            walk(&w)
        }
    };
    print!("{out}");
    Ok(ExitCode::SUCCESS)
}

fn cap(cells: usize, max_cells: usize) -> Result<(), String> {
    if cells > max_cells {
        return Err(format!("{cells} cells exceed the cap of {max_cells}"));
    }
    Ok(())
}

fn parse<T: serde::de::DeserializeOwned>(text: &str) -> Result<T, String> {
    serde_json::from_str(text).map_err(|e| e.to_string())
}

fn parse_partition(text: &str) -> Result<Partition, String> {
    if text.starts_with('[') {
        return parse(text);
    }
    let parts = text
        .split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| s.parse::<usize>().map_err(|e| format!("{s:?}: {e}")))
        .collect::<Result<Vec<_>, _>>()?;
    Partition::new(parts).map_err(|e| e.to_string())
}

/// Draws the diagram of `shape` in English notation. Cells with the same
/// `group` share a region with no wall between them; `label` fills each cell.
fn grid<G: Ord + Copy>(shape: &Partition, group: impl Fn(Cell) -> Option<G>, label: impl Fn(Cell) -> String) -> String {
    if shape.is_empty() {
        return "∅\n".into();
    }
    let width = shape.cells().map(|c| label(c).chars().count()).max().unwrap_or(0).max(1) + 2;
    let rows = shape.len();
    let cols = shape.width();
    let at = |r: usize, c: usize| -> Option<G> {
        if r >= 1 && c >= 1 && shape.contains(Cell::new(r, c)) {
            group(Cell::new(r, c))
        } else {
            None
        }
    };
    let mut out = String::new();
    for r in 1..=rows + 1 {
        // Horizontal wall above row `r`.
        let mut line = String::new();
        for c in 1..=cols + 1 {
            let corner = [at(r - 1, c - 1), at(r - 1, c), at(r, c - 1), at(r, c)];
            line.push(if corner.iter().any(Option::is_some) { '+' } else { ' ' });
            if c <= cols {
                let (above, below) = (at(r - 1, c), at(r, c));
                let wall = (above.is_some() || below.is_some()) && above != below;
                line.push_str(&(if wall { "-" } else { " " }).repeat(width));
            }
        }
        out += line.trim_end();
        out.push('\n');
        if r > rows {
            break;
        }
        let mut line = String::new();
        for c in 1..=shape.part(r) + 1 {
            let (left, right) = (at(r, c - 1), at(r, c));
            line.push(if left != right { '|' } else { ' ' });
            if c <= shape.part(r) {
                line += &format!("{:^width$}", label(Cell::new(r, c)));
            }
        }
        out += line.trim_end();
        out.push('\n');
    }
    out
}

fn tableau(t: &RimHookTableau) -> String {
    let filling: BTreeMap<Cell, Content> = t.filling();
    grid(t.shape(), |c| filling.get(&c).copied(), |c| filling[&c].to_string())
}

fn oscillating(o: &OscillatingTableau) -> String {
    let mut out = format!("0   {}\n", o.shapes()[0]);
    for i in 1..o.shapes().len() {
        let sign = match o.step(i) {
            Step::Add(_) => '+',
            Step::Delete(_) => '-',
        };
        out += &format!("{i:<2}{sign} {}\n", o.shapes()[i]);
    }
    out
}

/// Arc diagram: each arc sits one above the tallest shorter arc whose span
/// overlaps its own; colors 1, 2, 3, … use `-`, `=`, `~`, `.`, `*`.
fn arcs(mt: &ColoredMatching) -> String {
    const STROKES: [char; 5] = ['-', '=', '~', '.', '*'];
    let span = 2 * mt.n();
    if span == 0 {
        return "∅\n".into();
    }
    let x = |v: Content| 4 * (v as usize - 1);
    let mut by_len: Vec<_> = mt.arcs().to_vec();
    by_len.sort_by_key(|a| (a.closer - a.opener, a.opener));
    let mut height: BTreeMap<Content, usize> = BTreeMap::new();
    for (i, a) in by_len.iter().enumerate() {
        let below = by_len[..i]
            .iter()
            .filter(|b| b.opener < a.closer && a.opener < b.closer)
            .map(|b| height[&b.opener])
            .max()
            .unwrap_or(0);
        height.insert(a.opener, below + 1);
    }
    let top = height.values().copied().max().unwrap_or(0);
    let cols = x(span as Content) + 1;
    let mut canvas = vec![vec![' '; cols]; top];
    for a in mt.arcs() {
        let row = top - height[&a.opener];
        let stroke = STROKES[(a.color - 1) % STROKES.len()];
        for cell in &mut canvas[row][x(a.opener) + 1..x(a.closer)] {
            *cell = stroke;
        }
    }
    for a in mt.arcs() {
        let row = top - height[&a.opener];
        for end in [x(a.opener), x(a.closer)] {
            canvas[row][end] = '+';
            for line in canvas.iter_mut().skip(row + 1) {
                line[end] = '|';
            }
        }
    }
    let mut out: String = canvas
        .iter()
        .map(|line| line.iter().collect::<String>().trim_end().to_string() + "\n")
        .collect();
    let labels: Vec<String> = (1..=span).map(|v| format!("{v:<4}")).collect();
    out += labels.concat().trim_end();
    out.push('\n');
    out
}

/// A lattice path drawn with `/`, `\` and `_`, given its heights.
fn mountain(heights: &[usize]) -> String {
    let top = heights.iter().copied().max().unwrap_or(0);
    let steps = heights.len().saturating_sub(1);
    let mut canvas = vec![vec![' '; steps]; top + 1];
    for i in 0..steps {
        let (a, b) = (heights[i], heights[i + 1]);
        let (row, ch) = match b.cmp(&a) {
            std::cmp::Ordering::Greater => (a, '/'),
            std::cmp::Ordering::Less => (b, '\\'),
            std::cmp::Ordering::Equal => (a, '_'),
        };
        canvas[top - row][i] = ch;
    }
    canvas
        .iter()
        .map(|line| line.iter().collect::<String>().trim_end().to_string() + "\n")
        .filter(|l| l.trim() != "" || top == 0)
        .collect()
}

/// The word, then the points visited on the quarter-plane lattice.
fn walk(w: &GuyWalk) -> String {
    let mut pos = (0i64, 0i64);
    let mut seen = BTreeSet::from([pos]);
    for d in w.steps() {
        let (dx, dy) = d.delta();
        pos = (pos.0 + dx, pos.1 + dy);
        seen.insert(pos);
    }
    let max_x = seen.iter().map(|p| p.0).max().unwrap_or(0);
    let max_y = seen.iter().map(|p| p.1).max().unwrap_or(0);
    let mut out = format!("{}\n", w.arrows());
    for y in (0..=max_y).rev() {
        let row: String = (0..=max_x)
            .map(|x| match (x, y) {
                (0, 0) => 'o',
                p if seen.contains(&p) => '*',
                _ => '.',
            })
            .flat_map(|c| [c, ' '])
            .collect();
        out += row.trim_end();
        out.push('\n');
    }
    out
}
