mod convert;
mod render;
mod verify;

use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use rimhook::enumeration::{count_family, Family};

/// Exit status for a usage or input format error.
const USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "rimhook", version, about = "Rim hook tableaux, colored matchings, Dyck path packings and quarter-plane walks")]
struct Cli {
    /// Upper bound on the number of cells in any shape handled.
    #[arg(long, env = "RIMHOOK_MAX_CELLS", default_value_t = 4096, global = true)]
    max_cells: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run exhaustive verification suites and print a report.
    Verify(verify::VerifyArgs),
    /// Count a family of objects by generating every member.
    Count(CountArgs),
    /// Convert JSON-lines records from one object family to another.
    Convert(convert::ConvertArgs),
    /// Draw an object in monospace text.
    Render(render::RenderArgs),
}

#[derive(clap::Args, Debug)]
struct CountArgs {
    #[arg(long, value_enum)]
    family: FamilyArg,
    /// A single half-length `n`.
    #[arg(long, conflicts_with = "n_max", required_unless_present = "n_max")]
    n: Option<usize>,
    /// Tabulate `n = 0..=n_max`.
    #[arg(long)]
    n_max: Option<usize>,
    /// Number of colors or hook size; fixed to 2 for the two-colored families.
    #[arg(long, default_value_t = 2)]
    m: usize,
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum FamilyArg {
    #[value(name = "colored_matchings", alias = "colored-matchings")]
    ColoredMatchings,
    #[value(name = "noncrossing2")]
    Noncrossing2,
    #[value(name = "oscillating")]
    Oscillating,
    #[value(name = "O2n2", alias = "o2n2")]
    O2n2,
    #[value(name = "packings")]
    Packings,
    #[value(name = "guy_walks", alias = "guy-walks")]
    GuyWalks,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Self {
        match f {
            FamilyArg::ColoredMatchings => Family::ColoredMatchings,
            FamilyArg::Noncrossing2 => Family::Noncrossing2,
            FamilyArg::Oscillating => Family::Oscillating,
            FamilyArg::O2n2 => Family::O2n2,
            FamilyArg::Packings => Family::Packings,
            FamilyArg::GuyWalks => Family::GuyWalks,
        }
    }
}

fn count(args: &CountArgs, max_cells: usize) -> Result<ExitCode, String> {
    let family = Family::from(args.family);
    let m = if family.is_two_colored() { 2 } else { args.m };
    if m == 0 {
        return Err("--m must be positive".into());
    }
    let ns: Vec<usize> = match (args.n, args.n_max) {
        (Some(n), _) => vec![n],
        (None, Some(top)) => (0..=top).collect(),
        (None, None) => unreachable!("clap requires one of --n and --n-max"),
    };
    let largest = ns.iter().max().copied().unwrap_or(0);
    if m * largest > max_cells {
        return Err(format!("shapes of {} cells exceed the cap of {max_cells}", m * largest));
    }
    let rows: Vec<(usize, String, String)> = ns
        .iter()
        .map(|&n| (n, count_family(family, n, m).to_string(), family.closed_form(n, m).to_string()))
        .collect();
    let mut out = io::stdout().lock();
    if args.json {
        let rows: Vec<serde_json::Value> = rows
            .iter()
            .map(|(n, c, f)| serde_json::json!({ "n": n, "count": c, "closed_form": f }))
            .collect();
        let doc = serde_json::json!({ "family": family.name(), "m": m, "rows": rows });
        writeln!(out, "{doc}").map_err(|e| e.to_string())?;
    } else if args.n.is_some() {
        writeln!(out, "{}", rows[0].1).map_err(|e| e.to_string())?;
    } else {
        let width = rows.iter().map(|r| r.1.len().max(r.2.len())).max().unwrap_or(1).max(5);
        writeln!(out, "{:>3}  {:>width$}  {:>width$}", "n", "count", "closed").map_err(|e| e.to_string())?;
        for (n, c, f) in &rows {
            writeln!(out, "{n:>3}  {c:>width$}  {f:>width$}").map_err(|e| e.to_string())?;
        }
    }
    let agree = rows.iter().all(|(_, c, f)| c == f);
    Ok(if agree { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

/// Reads all of standard input.
pub(crate) fn read_stdin() -> io::Result<String> {
    let mut buf = String::new();
    io::stdin().read_to_string(&mut buf)?;
    Ok(buf)
}

pub(crate) fn write_report(path: &PathBuf, body: &str) -> io::Result<()> {
    std::fs::write(path, body)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Verify(args) => verify::run(args, cli.max_cells),
        Command::Count(args) => count(args, cli.max_cells),
        Command::Convert(args) => convert::run(args, cli.max_cells),
        Command::Render(args) => render::run(args, cli.max_cells),
    };
    match result {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(USAGE)
        }
    }
}
