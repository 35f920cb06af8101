//! JSON-lines conversion between the object families.

use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::ValueEnum;
use serde::{Deserialize, Serialize};
use serde_json::Value;

use rimhook::oscillating::{phi, psi};
use rimhook::paths::{from_guy_walk, from_packing, to_guy_walk, to_packing};
use rimhook::tableaux::{sch, sch_inverse};
use rimhook::{ColoredMatching, DyckPathPacking, GuyWalk, HookPermutation, OscillatingTableau, RimHookTableau};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    Matching,
    Oscillating,
    Packing,
    #[value(name = "guywalk", alias = "walk")]
    GuyWalk,
    #[value(name = "tableau-pair", alias = "pq")]
    TableauPair,
    #[value(name = "hook-permutation", alias = "permutation")]
    HookPermutation,
}

#[derive(clap::Args, Debug)]
pub struct ConvertArgs {
    #[arg(long, value_enum)]
    from: Kind,
    #[arg(long, value_enum)]
    to: Kind,
    /// Read records from this file instead of standard input.
    #[arg(long)]
    input: Option<PathBuf>,
}

/// A pair of same-shape tableaux as read and written on a JSON line.
#[derive(Serialize, Deserialize)]
struct TableauPair {
    #[serde(rename = "P")]
    p: RimHookTableau,
    #[serde(rename = "Q")]
    q: RimHookTableau,
}

enum Object {
    Matching(ColoredMatching),
    Oscillating(OscillatingTableau),
    Packing(DyckPathPacking),
    Walk(GuyWalk),
    Pair(RimHookTableau, RimHookTableau),
    Permutation(HookPermutation),
}

impl Object {
    fn parse(kind: Kind, v: Value) -> Result<Object, String> {
        let e = |e: serde_json::Error| e.to_string();
        Ok(match kind {
            Kind::Matching => Object::Matching(serde_json::from_value(v).map_err(e)?),
            Kind::Oscillating => Object::Oscillating(serde_json::from_value(v).map_err(e)?),
            Kind::Packing => Object::Packing(serde_json::from_value(v).map_err(e)?),
            Kind::GuyWalk => Object::Walk(serde_json::from_value(v).map_err(e)?),
            Kind::TableauPair => {
                let pair: TableauPair = serde_json::from_value(v).map_err(e)?;
                Object::Pair(pair.p, pair.q)
            }
            Kind::HookPermutation => Object::Permutation(serde_json::from_value(v).map_err(e)?),
        })
    }

    /// Number of cells of the largest shape the conversion will build.
    fn cells(&self) -> usize {
        match self {
            Object::Matching(mt) => mt.n() * mt.m(),
            Object::Oscillating(o) => o.shapes().iter().map(|p| p.size()).max().unwrap_or(0).max(o.n() * o.m()),
            Object::Packing(p) => p.d().len(),
            Object::Walk(w) => w.len(),
            Object::Pair(p, _) => p.shape().size(),
            Object::Permutation(hp) => hp.len() * hp.m(),
        }
    }

    fn to_json(&self) -> Value {
        let v = match self {
            Object::Matching(x) => serde_json::to_value(x),
            Object::Oscillating(x) => serde_json::to_value(x),
            Object::Packing(x) => serde_json::to_value(x),
            Object::Walk(x) => serde_json::to_value(x),
            Object::Pair(p, q) => serde_json::to_value(TableauPair { p: p.clone(), q: q.clone() }),
            Object::Permutation(x) => serde_json::to_value(x),
        };
        v.expect("plain data serializes")
    }
}

fn step(obj: Object, to: Kind) -> Result<Object, String> {
    let e = |e: rimhook::Error| e.to_string();
    Ok(match (obj, to) {
        (Object::Matching(mt), Kind::Oscillating) => Object::Oscillating(psi(&mt).map_err(e)?),
        (Object::Oscillating(o), Kind::Matching) => Object::Matching(phi(&o).map_err(e)?),
        (Object::Oscillating(o), Kind::Packing) => Object::Packing(to_packing(&o).map_err(e)?),
        (Object::Packing(p), Kind::Oscillating) => Object::Oscillating(from_packing(&p).map_err(e)?),
        (Object::Matching(mt), Kind::GuyWalk) => Object::Walk(to_guy_walk(&mt).map_err(e)?),
        (Object::Walk(w), Kind::Matching) => Object::Matching(from_guy_walk(&w)),
        (Object::Permutation(hp), Kind::TableauPair) => {
            let (p, q) = sch(&hp).map_err(e)?;
            Object::Pair(p, q)
        }
        (Object::Pair(p, q), Kind::HookPermutation) => Object::Permutation(sch_inverse(&p, &q).map_err(e)?),
        _ => return Err("unsupported conversion".into()),
    })
}

/// The chain of kinds visited from `from` to `to`, or `None` if no route exists.
fn route(from: Kind, to: Kind) -> Option<Vec<Kind>> {
    use Kind::*;
    let chain: &[Kind] = match (from, to) {
        (a, b) if a == b => &[],
        (Matching, Oscillating) | (Oscillating, Matching) | (Oscillating, Packing) | (Packing, Oscillating) => {
            return Some(vec![to])
        }
        (Matching, GuyWalk) | (GuyWalk, Matching) => return Some(vec![to]),
        (TableauPair, HookPermutation) | (HookPermutation, TableauPair) => return Some(vec![to]),
        (Matching, Packing) => &[Oscillating, Packing],
        (Packing, Matching) => &[Oscillating, Matching],
        (GuyWalk, Oscillating) => &[Matching, Oscillating],
        (Oscillating, GuyWalk) => &[Matching, GuyWalk],
        (GuyWalk, Packing) => &[Matching, Oscillating, Packing],
        (Packing, GuyWalk) => &[Oscillating, Matching, GuyWalk],
        _ => return None,
    };
    Some(chain.to_vec())
}

pub fn run(a: &ConvertArgs, max_cells: usize) -> Result<ExitCode, String> {
    let chain = route(a.from, a.to).ok_or_else(|| format!("no conversion from {:?} to {:?}", a.from, a.to))?;
    let text = match &a.input {
        Some(path) => std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?,
        None => crate::read_stdin().map_err(|e| e.to_string())?,
    };
    let mut out = io::stdout().lock();
    let mut worst = 0u8;
    for (i, line) in text.lines().enumerate() {
        let line_no = i + 1;
        if line.trim().is_empty() {
            continue;
        }
        let value: Value = match serde_json::from_str(line) {
            Ok(v) => v,
            Err(err) => {
                eprintln!("line {line_no}: malformed JSON: {err}");
                worst = worst.max(2);
                continue;
            }
        };
        let converted = Object::parse(a.from, value).and_then(|obj| {
            if obj.cells() > max_cells {
                return Err(format!("{} cells exceed the cap of {max_cells}", obj.cells()));
            }
            chain.iter().try_fold(obj, |obj, &kind| step(obj, kind))
        });
        match converted {
            Ok(obj) => writeln!(out, "{}", obj.to_json()).map_err(|e| e.to_string())?,
            Err(err) => {
                eprintln!("line {line_no}: rejected: {err}");
                worst = worst.max(1);
            }
        }
    }
    Ok(ExitCode::from(worst))
}
