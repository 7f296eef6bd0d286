//! Batch driver: identity verification sweeps, conjecture scans, exact
//! sequence tables, and quadrature checks, with JSON/CSV report emission.
//!
//! Exit codes are the machine contract: 0 when everything verified, 1 when
//! any check failed, 2 on a configuration error.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use rayon::prelude::*;
use serde::Serialize;

use mneimneh::identity_catalog::{
    self, default_samples, IdentityId, IdentityReport, Mode, Params,
};
use mneimneh::nested_sums::{mhss, IndexVector};
use mneimneh::quadrature::{
    self, QuadCheckReport, LEMMA21_N_CAP, LEMMA21_P_CAP, LEMMA21_TOL, LEMMA22_DEFAULT_X,
    LEMMA22_EXTENSION_TOL, LEMMA22_M_CAP, LEMMA22_N_CAP, LEMMA22_TOL, SEC5_DEFAULT_XY,
    SEC5_N_CAP, SEC5_P_CAP, SEC5_TOL,
};
use mneimneh::rational::{parse_rat, rat_int, Rat};
use mneimneh::report::{to_csv, to_json, Status};
use mneimneh::sequences::SequenceTables;

/// Environment variable overriding the worker count (the `--workers` flag
/// wins over it).
const WORKERS_ENV: &str = "MNEIMNEH_WORKERS";

#[derive(Parser)]
#[command(name = "mneimneh", version, about = "Exact verification of Mneimneh-type binomial sums")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify catalog identities symbolically and/or pointwise.
    Verify(VerifyArgs),
    /// Emit exact sequence tables as reduced fractions.
    Table(TableArgs),
    /// Per-n symbolic scan of the Bell- and z-weighted families, plus
    /// pointwise corroboration outside the analytically safe region.
    Conjecture(ConjectureArgs),
    /// Numeric validation of the integral representations.
    Quad(QuadArgs),
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ModeArg {
    Symbolic,
    Pointwise,
    Both,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Parser)]
struct VerifyArgs {
    /// Identities: `all` or names like `thm-bell`, `thm-z`, `gencev`
    /// (repeat the flag or comma-separate).
    #[arg(long, value_delimiter = ',', default_value = "all")]
    identity: Vec<String>,
    /// Fix the Bell depth for thm-bell/chain-reduction (default: 1..=p-max).
    #[arg(long)]
    p: Option<u32>,
    /// Fix the depth for gencev (default: 1..=r-max).
    #[arg(long)]
    r: Option<u32>,
    #[arg(long, default_value_t = 5)]
    p_max: u32,
    #[arg(long, default_value_t = 3)]
    r_max: u32,
    #[arg(long, default_value_t = 25)]
    n_max: u32,
    #[arg(long, value_enum, default_value_t = ModeArg::Both)]
    mode: ModeArg,
    /// Rational assignments for pointwise mode, e.g. `x=1,y=-3,z=1/2,p=1/3`;
    /// omitted: the published 8-point sample set.
    #[arg(long)]
    params: Option<String>,
    /// Report file path.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    /// Worker threads (default: MNEIMNEH_WORKERS, then the core count).
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum TableKind {
    Harmonic,
    Stirling,
    Bellnum,
    Mhss,
}

#[derive(Parser)]
struct TableArgs {
    #[arg(long, value_enum)]
    kind: TableKind,
    /// Largest index n to emit.
    #[arg(long)]
    n: u32,
    /// Harmonic order (harmonic tables only).
    #[arg(long, default_value_t = 1)]
    r: u32,
    /// Bell depth (bellnum tables only).
    #[arg(long)]
    k: Option<u32>,
    /// Composition for mhss tables, e.g. `2,1,1`.
    #[arg(long)]
    parts: Option<String>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Csv)]
    format: FormatArg,
}

#[derive(Parser)]
struct ConjectureArgs {
    #[arg(long, default_value_t = 25)]
    n_max: u32,
    #[arg(long, default_value_t = 5)]
    p_max: u32,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    #[arg(long)]
    workers: Option<usize>,
}

#[derive(Parser)]
struct QuadArgs {
    /// Integral family: `21`, `22`, or `sec5`.
    #[arg(long)]
    lemma: String,
    /// Single index n (alternative to --n-max).
    #[arg(long)]
    n: Option<u32>,
    #[arg(long)]
    n_max: Option<u32>,
    /// Single log power p (lemma 21 and sec5).
    #[arg(long)]
    p: Option<u32>,
    #[arg(long)]
    p_max: Option<u32>,
    /// Single log power m (lemma 22).
    #[arg(long)]
    m: Option<u32>,
    #[arg(long)]
    m_max: Option<u32>,
    /// Probe points: upper limits x for lemma 22, or x of (x, y) pairs for
    /// sec5 (pair with --y). Defaults to the built-in lists.
    #[arg(long, allow_hyphen_values = true)]
    x: Vec<String>,
    #[arg(long, allow_hyphen_values = true)]
    y: Vec<String>,
    /// Override the pinned tolerance.
    #[arg(long)]
    tol: Option<f64>,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = FormatArg::Json)]
    format: FormatArg,
    #[arg(long)]
    workers: Option<usize>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Verify(args) => cmd_verify(args),
        Command::Table(args) => cmd_table(args),
        Command::Conjecture(args) => cmd_conjecture(args),
        Command::Quad(args) => cmd_quad(args),
    };
    match result {
        Ok(all_verified) => {
            if all_verified {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn resolve_workers(flag: Option<usize>) -> Result<usize, String> {
    let from_env = || {
        std::env::var(WORKERS_ENV).ok().map(|v| {
            v.parse::<usize>()
                .map_err(|_| format!("{WORKERS_ENV} must be a positive integer, got `{v}`"))
        })
    };
    let workers = match flag {
        Some(w) => w,
        None => match from_env() {
            Some(parsed) => parsed?,
            None => std::thread::available_parallelism().map(|p| p.get()).unwrap_or(1),
        },
    };
    if workers == 0 {
        return Err("worker count must be >= 1".into());
    }
    Ok(workers)
}

fn make_pool(workers: usize) -> Result<rayon::ThreadPool, String> {
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build()
        .map_err(|e| format!("thread pool: {e}"))
}

fn write_report<T: Serialize>(
    path: &Option<PathBuf>,
    format: FormatArg,
    items: &[T],
) -> Result<(), String> {
    let Some(path) = path else { return Ok(()) };
    let text = match format {
        FormatArg::Json => to_json(items),
        FormatArg::Csv => to_csv(items),
    };
    std::fs::write(path, text).map_err(|e| format!("writing {}: {e}", path.display()))
}

/// Identity catalog in report order. `explicit` marks identities the user
/// named directly (as opposed to via `all`): those keep unsupported-mode
/// failures visible instead of being skipped.
fn parse_identities(
    names: &[String],
    fixed_p: Option<u32>,
    fixed_r: Option<u32>,
    p_max: u32,
    r_max: u32,
) -> Result<Vec<(IdentityId, bool)>, String> {
    if fixed_p == Some(0) || fixed_r == Some(0) || p_max == 0 || r_max == 0 {
        return Err("depth parameters must be >= 1".into());
    }
    let bell_depths = || fixed_p.map(|p| vec![p]).unwrap_or_else(|| (1..=p_max).collect());
    let gencev_depths = || fixed_r.map(|r| vec![r]).unwrap_or_else(|| (1..=r_max).collect());
    let mut ids: Vec<(IdentityId, bool)> = Vec::new();
    let push = |id: IdentityId, explicit: bool, ids: &mut Vec<(IdentityId, bool)>| {
        if !ids.iter().any(|(existing, _)| *existing == id) {
            ids.push((id, explicit));
        }
    };
    for raw in names {
        let name = raw.trim().to_lowercase();
        match name.as_str() {
            "all" => {
                push(IdentityId::MneimnehP, false, &mut ids);
                push(IdentityId::MneimnehXy, false, &mut ids);
                for p in bell_depths() {
                    push(IdentityId::ThmBell(p), false, &mut ids);
                }
                push(IdentityId::TmgSquare, false, &mut ids);
                push(IdentityId::ThmZ, false, &mut ids);
                push(IdentityId::CorAlt, false, &mut ids);
                push(IdentityId::CorAltP, false, &mut ids);
                push(IdentityId::CorH2Ord, false, &mut ids);
                push(IdentityId::CorHsq, false, &mut ids);
                for p in bell_depths() {
                    push(IdentityId::ChainReduction(p), false, &mut ids);
                }
                for r in gencev_depths() {
                    push(IdentityId::Gencev(r), false, &mut ids);
                }
            }
            "mneimneh-p" => push(IdentityId::MneimnehP, true, &mut ids),
            "mneimneh-xy" => push(IdentityId::MneimnehXy, true, &mut ids),
            "thm-bell" => {
                for p in bell_depths() {
                    push(IdentityId::ThmBell(p), true, &mut ids);
                }
            }
            "tmg-square" => push(IdentityId::TmgSquare, true, &mut ids),
            "thm-z" => push(IdentityId::ThmZ, true, &mut ids),
            "cor-alt" => push(IdentityId::CorAlt, true, &mut ids),
            "cor-alt-p" => push(IdentityId::CorAltP, true, &mut ids),
            "cor-h2ord" => push(IdentityId::CorH2Ord, true, &mut ids),
            "cor-hsq" => push(IdentityId::CorHsq, true, &mut ids),
            "chain-reduction" => {
                for p in bell_depths() {
                    push(IdentityId::ChainReduction(p), true, &mut ids);
                }
            }
            "gencev" => {
                for r in gencev_depths() {
                    push(IdentityId::Gencev(r), true, &mut ids);
                }
            }
            other => {
                return Err(format!(
                    "unknown identity `{other}` (expected all, mneimneh-p, mneimneh-xy, \
                     thm-bell, tmg-square, thm-z, cor-alt, cor-alt-p, cor-h2ord, cor-hsq, \
                     chain-reduction, gencev)"
                ))
            }
        }
    }
    Ok(ids)
}

struct VerifyJob {
    id: IdentityId,
    n: u32,
    mode: Mode,
    params: Option<Params>,
}

fn cmd_verify(args: VerifyArgs) -> Result<bool, String> {
    if args.n_max == 0 {
        return Err("--n-max must be >= 1".into());
    }
    let ids = parse_identities(&args.identity, args.p, args.r, args.p_max, args.r_max)?;
    let pointwise_sets: Vec<Params> = match &args.params {
        Some(text) => vec![Params::parse(text).map_err(|e| format!("--params: {e}"))?],
        None => default_samples(),
    };

    let mut jobs: Vec<VerifyJob> = Vec::new();
    for (id, explicit) in &ids {
        let symbolic = matches!(args.mode, ModeArg::Symbolic | ModeArg::Both)
            && (id.supports_symbolic() || (*explicit && args.mode == ModeArg::Symbolic));
        let pointwise = matches!(args.mode, ModeArg::Pointwise | ModeArg::Both);
        for n in 1..=args.n_max {
            if symbolic {
                jobs.push(VerifyJob { id: id.clone(), n, mode: Mode::Symbolic, params: None });
            }
            if pointwise {
                for sample in &pointwise_sets {
                    // default samples skip points outside the identity's
                    // domain; explicit --params always run
                    if args.params.is_none() && !identity_catalog::sample_in_domain(id, sample) {
                        continue;
                    }
                    jobs.push(VerifyJob {
                        id: id.clone(),
                        n,
                        mode: Mode::Pointwise,
                        params: Some(sample.clone()),
                    });
                }
            }
        }
    }

    let workers = resolve_workers(args.workers)?;
    let pool = make_pool(workers)?;
    let reports: Vec<IdentityReport> = pool.install(|| {
        jobs.par_iter()
            .map_init(SequenceTables::new, |tables, job| {
                identity_catalog::verify(tables, &job.id, job.n, job.mode, job.params.as_ref())
            })
            .collect()
    });

    write_report(&args.out, args.format, &reports)?;
    print_verify_summary(&reports, args.n_max);
    Ok(reports.iter().all(|r| r.status == Status::Verified))
}

fn print_verify_summary(reports: &[IdentityReport], n_max: u32) {
    let mut groups: Vec<((String, Mode), (usize, usize))> = Vec::new();
    for report in reports {
        let key = (report.id.clone(), report.mode);
        match groups.iter_mut().find(|(k, _)| *k == key) {
            Some((_, (verified, total))) => {
                *total += 1;
                if report.status == Status::Verified {
                    *verified += 1;
                }
            }
            None => {
                let verified = usize::from(report.status == Status::Verified);
                groups.push((key, (verified, 1)));
            }
        }
    }
    for ((id, mode), (verified, total)) in &groups {
        println!("{id:<22} {mode:<9} n=1..{n_max}  {verified}/{total} verified");
    }
    for report in reports.iter().filter(|r| r.status == Status::Failed) {
        let params = report.params.as_deref().unwrap_or("-");
        let reason = report.reason.as_deref().unwrap_or("sides differ");
        println!("FAILED: {} n={} {} [{}] {}", report.id, report.n, report.mode, params, reason);
    }
    let failed = reports.iter().filter(|r| r.status == Status::Failed).count();
    println!("total: {} checks, {} verified, {} failed", reports.len(), reports.len() - failed, failed);
}

#[derive(Serialize)]
struct TableRow {
    kind: &'static str,
    n: u32,
    arg: String,
    value: String,
}

fn cmd_table(args: TableArgs) -> Result<bool, String> {
    let mut tables = SequenceTables::new();
    let mut rows: Vec<TableRow> = Vec::new();
    match args.kind {
        TableKind::Harmonic => {
            if args.n > 10_000 || args.r == 0 || args.r > 30 {
                return Err("harmonic bounds: n <= 10000, 1 <= r <= 30".into());
            }
            for n in 1..=args.n {
                rows.push(TableRow {
                    kind: "harmonic",
                    n,
                    arg: format!("r={}", args.r),
                    value: tables.harmonic(n, args.r).to_string(),
                });
            }
        }
        TableKind::Stirling => {
            if args.n > 300 {
                return Err("stirling bounds: n <= 300".into());
            }
            for n in 0..=args.n {
                for k in 0..=n {
                    rows.push(TableRow {
                        kind: "stirling",
                        n,
                        arg: format!("k={k}"),
                        value: tables.stirling1u(n, k).to_string(),
                    });
                }
            }
        }
        TableKind::Bellnum => {
            let k = args.k.ok_or("--k is required for bellnum tables")?;
            if args.n > 300 || k > 30 {
                return Err("bellnum bounds: n <= 300, k <= 30".into());
            }
            for n in 0..=args.n {
                rows.push(TableRow {
                    kind: "bellnum",
                    n,
                    arg: format!("k={k}"),
                    value: tables.bell_number(k, n).to_string(),
                });
            }
        }
        TableKind::Mhss => {
            let text = args.parts.as_deref().ok_or("--parts is required for mhss tables")?;
            let parts: Vec<u32> = text
                .split(',')
                .map(|s| s.trim().parse::<u32>().map_err(|_| format!("bad part `{s}`")))
                .collect::<Result<_, _>>()?;
            if parts.is_empty() || parts.iter().any(|&p| p == 0 || p > 20) || parts.len() > 10 {
                return Err("mhss bounds: 1..=10 parts, each in 1..=20".into());
            }
            if args.n > 200 {
                return Err("mhss bounds: n <= 200".into());
            }
            let k = IndexVector::new(parts);
            for n in 1..=args.n {
                rows.push(TableRow {
                    kind: "mhss",
                    n,
                    arg: format!("k={k}"),
                    value: mhss(n, &k).to_string(),
                });
            }
        }
    }
    let text = match args.format {
        FormatArg::Json => to_json(&rows),
        FormatArg::Csv => to_csv(&rows),
    };
    match &args.out {
        Some(path) => {
            std::fs::write(path, text).map_err(|e| format!("writing {}: {e}", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(true)
}

fn cmd_conjecture(args: ConjectureArgs) -> Result<bool, String> {
    if args.n_max == 0 || args.p_max == 0 {
        return Err("--n-max and --p-max must be >= 1".into());
    }
    let mut ids: Vec<IdentityId> = (1..=args.p_max).map(IdentityId::ThmBell).collect();
    ids.push(IdentityId::ThmZ);

    let workers = resolve_workers(args.workers)?;
    let pool = make_pool(workers)?;
    let n_max = args.n_max;
    let scans: Vec<Vec<IdentityReport>> = pool.install(|| {
        ids.par_iter()
            .map_init(SequenceTables::new, |tables, id| {
                identity_catalog::conjecture_scan(tables, id, n_max)
            })
            .collect()
    });
    let reports: Vec<IdentityReport> = scans.into_iter().flatten().collect();

    for report in reports.iter().filter(|r| r.mode == Mode::Symbolic) {
        println!(
            "{:<14} n={:<3} symbolic: {}{}",
            report.id,
            report.n,
            report.status,
            report.reason.as_deref().map(|r| format!(" ({r})")).unwrap_or_default()
        );
    }
    // pointwise corroboration, one line per (identity, sample point)
    let mut seen: Vec<(String, String)> = Vec::new();
    for report in reports.iter().filter(|r| r.mode == Mode::Pointwise) {
        let key = (report.id.clone(), report.params.clone().unwrap_or_default());
        if seen.contains(&key) {
            continue;
        }
        let same: Vec<&IdentityReport> = reports
            .iter()
            .filter(|r| r.mode == Mode::Pointwise && r.id == key.0 && r.params.as_deref() == Some(key.1.as_str()))
            .collect();
        let verified = same.iter().filter(|r| r.status == Status::Verified).count();
        println!(
            "{:<14} pointwise [{}] n=1..{}: {}/{} verified",
            key.0,
            key.1,
            same.len(),
            verified,
            same.len()
        );
        seen.push(key);
    }

    write_report(&args.out, args.format, &reports)?;
    let failed = reports.iter().filter(|r| r.status == Status::Failed).count();
    println!("total: {} checks, {} failed", reports.len(), failed);
    Ok(failed == 0)
}

enum QuadJob {
    Lemma21 { n: u32, p: u32, tol: f64 },
    Lemma22 { n: u32, m: u32, x: Rat, tol: f64 },
    Sec5 { n: u32, p: u32, x: Rat, y: Rat, tol: f64 },
}

fn range_from(single: Option<u32>, max: Option<u32>, default_max: u32, lo: u32) -> Vec<u32> {
    match single {
        Some(v) => vec![v],
        None => (lo..=max.unwrap_or(default_max)).collect(),
    }
}

fn cmd_quad(args: QuadArgs) -> Result<bool, String> {
    let mut jobs: Vec<QuadJob> = Vec::new();
    match args.lemma.as_str() {
        "21" => {
            let ns = range_from(args.n, args.n_max, LEMMA21_N_CAP, 1);
            let ps = range_from(args.p, args.p_max, LEMMA21_P_CAP, 0);
            if ns.iter().any(|&n| n == 0 || n > LEMMA21_N_CAP) || ps.iter().any(|&p| p > LEMMA21_P_CAP) {
                return Err(format!("lemma 21 caps: 1 <= n <= {LEMMA21_N_CAP}, p <= {LEMMA21_P_CAP}"));
            }
            let tol = args.tol.unwrap_or(LEMMA21_TOL);
            for &n in &ns {
                for &p in &ps {
                    jobs.push(QuadJob::Lemma21 { n, p, tol });
                }
            }
        }
        "22" => {
            let ns = range_from(args.n, args.n_max, LEMMA22_N_CAP, 1);
            let ms = range_from(args.m, args.m_max, LEMMA22_M_CAP, 1);
            if ns.iter().any(|&n| n == 0 || n > LEMMA22_N_CAP)
                || ms.iter().any(|&m| m == 0 || m > LEMMA22_M_CAP)
            {
                return Err(format!("lemma 22 caps: 1 <= n <= {LEMMA22_N_CAP}, 1 <= m <= {LEMMA22_M_CAP}"));
            }
            let xs: Vec<Rat> = if args.x.is_empty() {
                LEMMA22_DEFAULT_X.iter().map(|s| parse_rat(s).unwrap()).collect()
            } else {
                args.x
                    .iter()
                    .map(|s| parse_rat(s).map_err(|e| format!("--x: {e}")))
                    .collect::<Result<_, _>>()?
            };
            if xs.iter().any(|x| x >= &rat_int(1)) {
                return Err("lemma 22 requires x < 1".into());
            }
            for &n in &ns {
                for &m in &ms {
                    for x in &xs {
                        let tol = args.tol.unwrap_or(if x <= &rat_int(-1) {
                            LEMMA22_EXTENSION_TOL
                        } else {
                            LEMMA22_TOL
                        });
                        jobs.push(QuadJob::Lemma22 { n, m, x: x.clone(), tol });
                    }
                }
            }
        }
        "sec5" => {
            let ns = range_from(args.n, args.n_max, SEC5_N_CAP, 1);
            let ps = range_from(args.p, args.p_max, SEC5_P_CAP, 1);
            if ns.iter().any(|&n| n == 0 || n > SEC5_N_CAP)
                || ps.iter().any(|&p| p == 0 || p > SEC5_P_CAP)
            {
                return Err(format!("sec5 caps: 1 <= n <= {SEC5_N_CAP}, 1 <= p <= {SEC5_P_CAP}"));
            }
            let pairs: Vec<(Rat, Rat)> = if args.x.is_empty() && args.y.is_empty() {
                SEC5_DEFAULT_XY
                    .iter()
                    .map(|(x, y)| (parse_rat(x).unwrap(), parse_rat(y).unwrap()))
                    .collect()
            } else {
                if args.x.len() != args.y.len() || args.x.is_empty() {
                    return Err("sec5 needs matching --x and --y lists".into());
                }
                args.x
                    .iter()
                    .zip(&args.y)
                    .map(|(x, y)| -> Result<(Rat, Rat), String> {
                        Ok((
                            parse_rat(x).map_err(|e| format!("--x: {e}"))?,
                            parse_rat(y).map_err(|e| format!("--y: {e}"))?,
                        ))
                    })
                    .collect::<Result<_, _>>()?
            };
            let tol = args.tol.unwrap_or(SEC5_TOL);
            for &n in &ns {
                for &p in &ps {
                    for (x, y) in &pairs {
                        jobs.push(QuadJob::Sec5 { n, p, x: x.clone(), y: y.clone(), tol });
                    }
                }
            }
        }
        other => return Err(format!("unknown --lemma `{other}` (expected 21, 22 or sec5)")),
    }

    let workers = resolve_workers(args.workers)?;
    let pool = make_pool(workers)?;
    let reports: Vec<QuadCheckReport> = pool.install(|| {
        jobs.par_iter()
            .map_init(SequenceTables::new, |tables, job| match job {
                QuadJob::Lemma21 { n, p, tol } => quadrature::check_lemma21(tables, *n, *p, *tol),
                QuadJob::Lemma22 { n, m, x, tol } => quadrature::check_lemma22(*n, *m, x, *tol),
                QuadJob::Sec5 { n, p, x, y, tol } => {
                    quadrature::check_sec5_representation(tables, *n, *p, x, y, *tol)
                }
            })
            .collect()
    });

    for report in &reports {
        println!(
            "{} {:<24} numeric={:+.15e} exact={:+.15e} rel_err={:.3e} {}{}",
            report.check,
            report.params,
            report.numeric,
            report.exact,
            report.rel_err,
            report.status,
            if report.converged { "" } else { " (no convergence)" },
        );
    }
    write_report(&args.out, args.format, &reports)?;
    let failed = reports.iter().filter(|r| r.status == Status::Failed).count();
    println!("total: {} checks, {} failed", reports.len(), failed);
    Ok(failed == 0)
}
