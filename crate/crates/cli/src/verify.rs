//! Verification suites and their report.

use std::collections::{BTreeMap, BTreeSet, HashSet};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::ValueEnum;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use rimhook::enumeration::{
    catalan_product, colored_matching_count, hook_permutation_count, joint_distribution, same_shape_pair_count,
};
use rimhook::matchings::matching_shards;
use rimhook::oscillating::{oscillating_shards, phi, psi};
use rimhook::paths::{from_guy_walk, from_packing, guy_walks, to_guy_walk, to_packing};
use rimhook::tableaux::{hook_permutations, insertion_tableau, lds, lis, sch, sch_inverse};
use rimhook::{Arc, BigCount, ColoredMatching, Content, HookPermutation, OscillatingTableau, Partition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Sch,
    Phi,
    Packing,
    Guy,
    Stats,
    All,
}

impl Suite {
    fn name(self) -> &'static str {
        match self {
            Suite::Sch => "sch",
            Suite::Phi => "phi",
            Suite::Packing => "packing",
            Suite::Guy => "guy",
            Suite::Stats => "stats",
            Suite::All => "all",
        }
    }
}

#[derive(clap::Args, Debug)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value_t = Suite::All)]
    suite: Suite,
    /// Hook size / number of colors (the packing and walk suites always use 2).
    #[arg(long, default_value_t = 2)]
    m: usize,
    /// Largest `n` checked exhaustively.
    #[arg(long, default_value_t = 3)]
    n_max: usize,
    /// Seed for the sampled checks beyond `n_max`.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Random samples drawn per sampled check.
    #[arg(long, default_value_t = 64)]
    samples: usize,
    /// Worker threads (defaults to the number of cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Also write the JSON report to this file.
    #[arg(long)]
    report: Option<PathBuf>,
    /// Print the JSON report instead of text.
    #[arg(long)]
    json: bool,
    /// Include wall-clock time per suite (makes the report run-dependent).
    #[arg(long)]
    timings: bool,
}

#[derive(Debug, Serialize)]
pub struct Check {
    suite: &'static str,
    property: &'static str,
    m: usize,
    n: usize,
    checked: u64,
    failures: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    expected: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    found: Option<String>,
    passed: bool,
}

#[derive(Debug, Default, Serialize)]
pub struct Calibration {
    placement: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    lis_lds_orientation: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    statistics_orientation: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    phi_composed_with_conjugation: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    domino_example_arcs_by_arm: Option<BTreeMap<usize, Vec<(Content, Content)>>>,
}

#[derive(Debug, Serialize)]
pub struct VerificationReport {
    suite: &'static str,
    m: usize,
    n_max: usize,
    seed: u64,
    samples: usize,
    passed: bool,
    checks: Vec<Check>,
    calibration: Calibration,
    #[serde(skip_serializing_if = "Option::is_none")]
    timings_ms: Option<BTreeMap<&'static str, u128>>,
}

/// Which of two orientations every instance satisfied.
#[derive(Default)]
struct Orientation {
    total: u64,
    stated: u64,
    transposed: u64,
}

impl Orientation {
    fn record(&mut self, stated: bool, transposed: bool) {
        self.total += 1;
        self.stated += u64::from(stated);
        self.transposed += u64::from(transposed);
    }

    fn merge(mut self, other: Orientation) -> Orientation {
        self.total += other.total;
        self.stated += other.stated;
        self.transposed += other.transposed;
        self
    }

    fn verdict(&self, stated: &'static str, transposed: &'static str) -> &'static str {
        match (self.stated == self.total, self.transposed == self.total) {
            (true, true) => "indistinguishable on this range",
            (true, false) => stated,
            (false, true) => transposed,
            (false, false) => "neither orientation holds throughout",
        }
    }
}

struct Tally {
    checked: u64,
    failures: u64,
}

fn tally<T: Send>(items: impl IntoParallelIterator<Item = T>, ok: impl Fn(T) -> bool + Sync + Send) -> Tally {
    let (checked, failures) = items
        .into_par_iter()
        .map(|x| (1u64, u64::from(!ok(x))))
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    Tally { checked, failures }
}

fn check(suite: Suite, property: &'static str, m: usize, n: usize, t: Tally) -> Check {
    Check { suite: suite.name(), property, m, n, checked: t.checked, failures: t.failures, expected: None, found: None, passed: t.failures == 0 }
}

fn count_check(suite: Suite, property: &'static str, m: usize, n: usize, expected: BigCount, found: BigCount) -> Check {
    let passed = expected == found;
    Check {
        suite: suite.name(),
        property,
        m,
        n,
        checked: 1,
        failures: u64::from(!passed),
        expected: Some(expected.to_string()),
        found: Some(found.to_string()),
        passed,
    }
}

fn all_oscillating(n: usize, m: usize, max_cols: Option<usize>) -> Vec<OscillatingTableau> {
    oscillating_shards(n, m, max_cols, 2).into_par_iter().flat_map_iter(|s| s).collect()
}

fn all_matchings(n: usize, m: usize) -> Vec<ColoredMatching> {
    matching_shards(n, m).into_par_iter().flat_map_iter(|s| s).collect()
}

fn random_hook_permutation(rng: &mut ChaCha8Rng, m: usize, n: usize) -> HookPermutation {
    let mut order: Vec<Content> = (1..=n as Content).collect();
    order.shuffle(rng);
    let pairs: Vec<(Content, usize)> = order.into_iter().map(|c| (c, rng.gen_range(1..=m))).collect();
    HookPermutation::from_pairs(m, &pairs).expect("distinct contents")
}

fn random_matching(rng: &mut ChaCha8Rng, m: usize, n: usize) -> ColoredMatching {
    let mut points: Vec<Content> = (1..=2 * n as Content).collect();
    points.shuffle(rng);
    let arcs = points
        .chunks(2)
        .map(|p| Arc { opener: p[0], closer: p[1], color: rng.gen_range(1..=m) })
        .collect();
    ColoredMatching::new(n, m, arcs).expect("pairs of a shuffle")
}

fn sch_holds(hp: &HookPermutation) -> bool {
    match sch(hp) {
        Ok((p, q)) => p.shape() == q.shape() && sch_inverse(&p, &q).as_ref() == Ok(hp),
        Err(_) => false,
    }
}

fn lis_lds_multiset(hp: &HookPermutation) -> (bool, bool, bool) {
    let Ok(p) = insertion_tableau(hp) else { return (false, false, false) };
    let m = hp.m();
    let (r, c) = (p.shape().len().div_ceil(m), p.shape().width().div_ceil(m));
    let (i, d) = (lis(hp), lds(hp));
    ((i.min(d), i.max(d)) == (r.min(c), r.max(c)), i == r && d == c, i == c && d == r)
}

fn deletion_holds(hp: &HookPermutation) -> bool {
    match (insertion_tableau(hp), insertion_tableau(&hp.without_max())) {
        (Ok(full), Ok(smaller)) => smaller == full.without_max(),
        _ => false,
    }
}

fn run_sch(a: &VerifyArgs, checks: &mut Vec<Check>, cal: &mut Calibration) {
    let m = a.m;
    let mut orientation = Orientation::default();
    for n in 1..=a.n_max {
        let perms: Vec<HookPermutation> = hook_permutations(m, n).collect();
        let images: HashSet<_> = perms.par_iter().filter_map(|hp| sch(hp).ok()).collect();
        checks.push(count_check(
            Suite::Sch,
            "hook permutations = same-shape pairs",
            m,
            n,
            hook_permutation_count(m, n),
            same_shape_pair_count(m, n),
        ));
        checks.push(count_check(Suite::Sch, "distinct (P, Q) images", m, n, BigCount::from(perms.len()), BigCount::from(images.len())));
        checks.push(check(Suite::Sch, "sch_inverse(sch(H)) = H", m, n, tally(&perms, sch_holds)));
        let o = perms
            .par_iter()
            .map(|hp| {
                let (_, stated, transposed) = lis_lds_multiset(hp);
                let mut o = Orientation::default();
                o.record(stated, transposed);
                o
            })
            .reduce(Orientation::default, Orientation::merge);
        orientation = orientation.merge(o);
        checks.push(check(Suite::Sch, "{lis, lds} = {ceil(r/m), ceil(c/m)}", m, n, tally(&perms, |hp| lis_lds_multiset(hp).0)));
        checks.push(check(Suite::Sch, "deleting the largest content", m, n, tally(&perms, deletion_holds)));
    }
    let n = a.n_max + 2;
    if a.samples > 0 && m * n <= 64 {
        let mut rng = ChaCha8Rng::seed_from_u64(a.seed);
        let sample: Vec<HookPermutation> = (0..a.samples).map(|_| random_hook_permutation(&mut rng, m, n)).collect();
        checks.push(check(Suite::Sch, "sampled: sch round trip", m, n, tally(&sample, sch_holds)));
        checks.push(check(Suite::Sch, "sampled: {lis, lds} multiset", m, n, tally(&sample, |hp| lis_lds_multiset(hp).0)));
    }
    cal.lis_lds_orientation = Some(orientation.verdict(
        "lis = ceil(rows/m), lds = ceil(cols/m)",
        "lis = ceil(cols/m), lds = ceil(rows/m)",
    ));
}

fn run_phi(a: &VerifyArgs, checks: &mut Vec<Check>) {
    let m = a.m;
    for n in 1..=a.n_max {
        let tableaux = all_oscillating(n, m, None);
        let matchings = all_matchings(n, m);
        let expected: BigCount = colored_matching_count(n, m);
        checks.push(count_check(Suite::Phi, "oscillating tableaux = (2n-1)!! m^n", m, n, expected.clone(), BigCount::from(tableaux.len())));
        checks.push(count_check(Suite::Phi, "colored matchings = (2n-1)!! m^n", m, n, expected, BigCount::from(matchings.len())));
        checks.push(check(Suite::Phi, "psi(phi(o)) = o", m, n, tally(&tableaux, |o| phi(o).and_then(|mt| psi(&mt)).as_ref() == Ok(o))));
        checks.push(check(Suite::Phi, "phi(psi(M)) = M", m, n, tally(&matchings, |mt| psi(mt).and_then(|o| phi(&o)).as_ref() == Ok(mt))));
    }
    let n = a.n_max + 2;
    if a.samples > 0 && m * n <= 64 {
        let mut rng = ChaCha8Rng::seed_from_u64(a.seed ^ 0x9e37_79b9);
        let sample: Vec<ColoredMatching> = (0..a.samples).map(|_| random_matching(&mut rng, m, n)).collect();
        checks.push(check(Suite::Phi, "sampled: phi(psi(M)) = M", m, n, tally(&sample, |mt| psi(mt).and_then(|o| phi(&o)).as_ref() == Ok(mt))));
    }
}

fn run_stats(a: &VerifyArgs, checks: &mut Vec<Check>, cal: &mut Calibration) {
    let m = a.m;
    let mut orientation = Orientation::default();
    for n in 1..=a.n_max {
        let tableaux = all_oscillating(n, m, None);
        let o = tableaux
            .par_iter()
            .map(|o| {
                let mut out = Orientation::default();
                if let Ok(mt) = phi(o) {
                    let (r, c) = (o.max_rows().div_ceil(m), o.max_cols().div_ceil(m));
                    let (cr, ne) = (mt.crossing_number(), mt.nesting_number());
                    out.record(r == ne && c == cr, r == cr && c == ne);
                } else {
                    out.record(false, false);
                }
                out
            })
            .reduce(Orientation::default, Orientation::merge);
        let failures = o.total - o.stated;
        orientation = orientation.merge(o);
        checks.push(check(
            Suite::Stats,
            "ceil(r/m) = ne and ceil(c/m) = cr",
            m,
            n,
            Tally { checked: tableaux.len() as u64, failures },
        ));
        let table = joint_distribution(n, m);
        checks.push(check(Suite::Stats, "joint (cr, ne) table is symmetric", m, n, Tally { checked: 1, failures: u64::from(!table.is_symmetric()) }));
    }
    cal.statistics_orientation = Some(orientation.verdict("ceil(r/m) = ne, ceil(c/m) = cr", "ceil(r/m) = cr, ceil(c/m) = ne"));
    cal.phi_composed_with_conjugation = Some(false);
}

fn run_packing(a: &VerifyArgs, checks: &mut Vec<Check>) {
    for n in 0..=a.n_max {
        let tableaux = all_oscillating(n, 2, Some(2));
        let images: BTreeSet<_> = tableaux.par_iter().filter_map(|o| to_packing(o).ok()).collect();
        let direct = rimhook::paths::packings(n).count();
        checks.push(count_check(Suite::Packing, "two-column domino tableaux = C_n C_(n+1)", 2, n, catalan_product(n), BigCount::from(tableaux.len())));
        checks.push(count_check(Suite::Packing, "packings by generation = C_n C_(n+1)", 2, n, catalan_product(n), BigCount::from(direct)));
        checks.push(count_check(Suite::Packing, "distinct packing images", 2, n, BigCount::from(direct), BigCount::from(images.len())));
        checks.push(check(
            Suite::Packing,
            "from_packing(to_packing(o)) = o",
            2,
            n,
            tally(&tableaux, |o| to_packing(o).and_then(|p| from_packing(&p)).as_ref() == Ok(o)),
        ));
    }
}

fn run_guy(a: &VerifyArgs, checks: &mut Vec<Check>) {
    for n in 0..=a.n_max {
        let noncrossing: Vec<ColoredMatching> =
            all_matchings(n, 2).into_iter().filter(ColoredMatching::is_noncrossing).collect();
        let walks = guy_walks(n);
        checks.push(count_check(Suite::Guy, "noncrossing 2-colored matchings = C_n C_(n+1)", 2, n, catalan_product(n), BigCount::from(noncrossing.len())));
        checks.push(count_check(Suite::Guy, "walks by generation = C_n C_(n+1)", 2, n, catalan_product(n), BigCount::from(walks.len())));
        checks.push(check(Suite::Guy, "from_guy_walk(to_guy_walk(M)) = M", 2, n, tally(&noncrossing, |mt| to_guy_walk(mt).map(|w| from_guy_walk(&w)).as_ref() == Ok(mt))));
        checks.push(check(Suite::Guy, "to_guy_walk(from_guy_walk(w)) = w", 2, n, tally(&walks, |w| to_guy_walk(&from_guy_walk(w)).as_ref() == Ok(w))));
    }
}

/// Arcs of the domino example, grouped by the arm of their hook.
fn domino_example_arcs() -> Option<BTreeMap<usize, Vec<(Content, Content)>>> {
    let shapes: Vec<Partition> = [&[][..], &[1, 1], &[2, 2], &[3, 3], &[3, 1], &[1, 1], &[2, 2], &[2], &[]]
        .iter()
        .map(|p| Partition::new(p.to_vec()).expect("partition"))
        .collect();
    let mt = phi(&OscillatingTableau::new(2, shapes).ok()?).ok()?;
    Some((1..=2).map(|arm| (arm, mt.monochromatic(arm))).collect())
}

pub fn run(a: &VerifyArgs, max_cells: usize) -> Result<ExitCode, String> {
    if a.m == 0 {
        return Err("--m must be positive".into());
    }
    if a.m * (a.n_max + 2) > max_cells || 2 * (a.n_max + 2) > max_cells {
        return Err(format!("--m {} --n-max {} exceeds the cap of {max_cells} cells", a.m, a.n_max));
    }
    let pool = rayon::ThreadPoolBuilder::new().num_threads(a.jobs.unwrap_or(0)).build().map_err(|e| e.to_string())?;
    let suites: Vec<Suite> = match a.suite {
        Suite::All => vec![Suite::Sch, Suite::Phi, Suite::Packing, Suite::Guy, Suite::Stats],
        s => vec![s],
    };
    let mut checks = Vec::new();
    let mut calibration = Calibration { placement: "column_slide", ..Calibration::default() };
    let mut timings = BTreeMap::new();
    pool.install(|| {
        for suite in &suites {
            let start = Instant::now();
            match suite {
                Suite::Sch => run_sch(a, &mut checks, &mut calibration),
                Suite::Phi => run_phi(a, &mut checks),
                Suite::Packing => run_packing(a, &mut checks),
                Suite::Guy => run_guy(a, &mut checks),
                Suite::Stats => run_stats(a, &mut checks, &mut calibration),
                Suite::All => unreachable!("expanded above"),
            }
            timings.insert(suite.name(), start.elapsed().as_millis());
        }
    });
    if suites.iter().any(|s| matches!(s, Suite::Phi | Suite::Stats)) {
        calibration.domino_example_arcs_by_arm = domino_example_arcs();
    }
    let passed = checks.iter().all(|c| c.passed);
    let report = VerificationReport {
        suite: a.suite.name(),
        m: a.m,
        n_max: a.n_max,
        seed: a.seed,
        samples: a.samples,
        passed,
        checks,
        calibration,
        timings_ms: a.timings.then_some(timings),
    };
    let json = serde_json::to_string_pretty(&report).map_err(|e| e.to_string())?;
    if let Some(path) = &a.report {
        crate::write_report(path, &(json.clone() + "\n")).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    if a.json {
        println!("{json}");
    } else {
        print!("{}", text(&report));
    }
    Ok(if passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn text(r: &VerificationReport) -> String {
    let mut out = String::new();
    for c in &r.checks {
        let status = if c.passed { "PASS" } else { "FAIL" };
        let detail = match (&c.expected, &c.found) {
            (Some(e), Some(f)) => format!("expected {e}, found {f}"),
            _ => format!("{} checked, {} failed", c.checked, c.failures),
        };
        out += &format!("{status} {:<7} m={} n={}  {}: {detail}\n", c.suite, c.m, c.n, c.property);
    }
    let cal = &r.calibration;
    out += &format!("calibration: insertion placement {}\n", cal.placement);
    if let Some(o) = cal.lis_lds_orientation {
        out += &format!("calibration: {o}\n");
    }
    if let Some(o) = cal.statistics_orientation {
        out += &format!("calibration: {o}\n");
    }
    if let Some(arcs) = &cal.domino_example_arcs_by_arm {
        for (arm, list) in arcs {
            let shown: Vec<String> = list.iter().map(|(i, j)| format!("({i},{j})")).collect();
            out += &format!("calibration: domino example, arm {arm} arcs {}\n", shown.join(" "));
        }
    }
    if let Some(t) = &r.timings_ms {
        for (suite, ms) in t {
            out += &format!("time: {suite} {ms} ms\n");
        }
    }
    let failed = r.checks.iter().filter(|c| !c.passed).count();
    out += &format!("{} ({} checks, {failed} failed)\n", if r.passed { "PASS" } else { "FAIL" }, r.checks.len());
    out
}
