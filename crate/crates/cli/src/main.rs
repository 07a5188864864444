//! `hv`: build tau families, run verification suites, benchmark scaling.

mod report;

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand};
use hv_core::exactalg::BasisDirection;
use hv_core::verifier::{
    check_conjecture, check_mixed, check_symmetries, check_toda, run_suites, Suite, SuiteConfig,
};
use hv_core::wronskian::FamilyKind;
use hv_core::TauFamily;

use report::{render_bench, BenchRow, Report, ReportFormat, RunConfig};

const CACHE_ENV: &str = "HV_CACHE_DIR";
const CACHE_FILE: &str = "tau_family.cache";
const DEFAULT_N_MAX: usize = 4;

#[derive(Parser)]
#[command(
    name = "hv",
    version,
    about = "Exact verification of Toda tau-function identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run verification suites and print a report.
    Verify(VerifyArgs),
    /// Build the tau family and write it to the cache.
    Build(BuildArgs),
    /// Time construction and the main suites for each n.
    Bench(BenchArgs),
}

#[derive(Args)]
struct CommonArgs {
    /// Highest level n of the family (default: the cache's, else 4).
    #[arg(long = "n-max", value_parser = clap::value_parser!(u64).range(1..))]
    n_max: Option<u64>,

    /// Cache file (default: $HV_CACHE_DIR/tau_family.cache when the variable is set).
    #[arg(long)]
    cache: Option<PathBuf>,

    /// Worker threads (default: available parallelism).
    #[arg(long, value_parser = clap::value_parser!(u64).range(1..))]
    workers: Option<u64>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite to run; repeatable. One of toda, mixed, jacobi, conjecture,
    /// symmetries, closedforms, weyl, orderwise-A, orderwise-B,
    /// ernst-numeric, su11, all.
    #[arg(long = "suite", default_value = "all")]
    suites: Vec<String>,

    #[command(flatten)]
    common: CommonArgs,

    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,

    /// Stop after the first suite with a failing check.
    #[arg(long = "fail-fast")]
    fail_fast: bool,
}

#[derive(Args)]
struct BuildArgs {
    #[command(flatten)]
    common: CommonArgs,
}

#[derive(Args)]
struct BenchArgs {
    #[command(flatten)]
    common: CommonArgs,

    #[arg(long, value_enum, default_value = "text")]
    format: ReportFormat,
}

/// Usage and configuration problems exit with 2, failed identities with 1.
enum Failure {
    Usage(anyhow::Error),
    Runtime(anyhow::Error),
}

fn usage<E: Into<anyhow::Error>>(e: E) -> Failure {
    Failure::Usage(e.into())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = match cli.command {
        Command::Verify(args) => verify(args),
        Command::Build(args) => build(args),
        Command::Bench(args) => bench(args),
    };
    match outcome {
        Ok(code) => code,
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Failure::Runtime(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::FAILURE
        }
    }
}

fn cache_path(explicit: &Option<PathBuf>) -> Option<PathBuf> {
    explicit
        .clone()
        .or_else(|| std::env::var_os(CACHE_ENV).map(|dir| Path::new(&dir).join(CACHE_FILE)))
}

fn pool(workers: Option<u64>) -> Result<(rayon::ThreadPool, usize), Failure> {
    let count = workers
        .map(|w| w as usize)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()));
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(count)
        .build()
        .context("creating worker pool")
        .map_err(Failure::Runtime)?;
    Ok((pool, count))
}

/// Loads the cache when it covers `n_max`; otherwise builds and (when a path
/// is known) rewrites it.
fn obtain_family(n_max: Option<usize>, cache: Option<&Path>) -> Result<TauFamily, Failure> {
    if let Some(path) = cache.filter(|p| p.exists()) {
        let fam = TauFamily::load(path)
            .with_context(|| format!("reading cache {}", path.display()))
            .map_err(usage)?;
        if n_max.is_none_or(|n| n <= fam.n_max()) {
            eprintln!(
                "loaded tau family n_max={} from {}",
                fam.n_max(),
                path.display()
            );
            return Ok(fam);
        }
    }
    let n = n_max.unwrap_or(DEFAULT_N_MAX);
    let started = Instant::now();
    let fam = TauFamily::build(n)
        .context("building tau family")
        .map_err(Failure::Runtime)?;
    eprintln!(
        "built tau family n_max={n} in {:.2}s",
        started.elapsed().as_secs_f64()
    );
    if let Some(path) = cache {
        save(&fam, path)?;
    }
    Ok(fam)
}

fn save(fam: &TauFamily, path: &Path) -> Result<(), Failure> {
    if let Some(dir) = path.parent().filter(|d| !d.as_os_str().is_empty()) {
        std::fs::create_dir_all(dir)
            .with_context(|| format!("creating {}", dir.display()))
            .map_err(Failure::Runtime)?;
    }
    fam.save(path)
        .with_context(|| format!("writing cache {}", path.display()))
        .map_err(Failure::Runtime)?;
    eprintln!("wrote cache {}", path.display());
    Ok(())
}

fn verify(args: VerifyArgs) -> Result<ExitCode, Failure> {
    let mut suites = Vec::new();
    for name in &args.suites {
        suites.extend(Suite::parse_list(name).map_err(usage)?);
    }
    suites.sort();
    suites.dedup();

    let cache = cache_path(&args.common.cache);
    let (pool, workers) = pool(args.common.workers)?;
    let requested = args.common.n_max.map(|n| n as usize);
    let fam = pool.install(|| obtain_family(requested, cache.as_deref()))?;
    let n_max = requested.unwrap_or(fam.n_max());

    let config = RunConfig {
        n_max,
        suites: suites.iter().map(|s| s.name().to_string()).collect(),
        cache_path: cache,
        report_format: args.format,
        fail_fast: args.fail_fast,
        worker_count: workers,
    };
    let mut suite_cfg = SuiteConfig::new(n_max);
    suite_cfg.fail_fast = args.fail_fast;
    let checks = pool.install(|| run_suites(&fam, &suites, &suite_cfg));
    let report = Report::new(&config, &checks);
    print!("{}", report.render(args.format));
    Ok(if report.summary.fail == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}

fn build(args: BuildArgs) -> Result<ExitCode, Failure> {
    let path = cache_path(&args.common.cache)
        .ok_or_else(|| usage(anyhow::anyhow!("build needs --cache or {CACHE_ENV}")))?;
    let n = args.common.n_max.map_or(DEFAULT_N_MAX, |n| n as usize);
    let (pool, _) = pool(args.common.workers)?;
    let started = Instant::now();
    let fam = pool
        .install(|| TauFamily::build(n))
        .context("building tau family")
        .map_err(Failure::Runtime)?;
    eprintln!(
        "built tau family n_max={n} in {:.2}s",
        started.elapsed().as_secs_f64()
    );
    save(&fam, &path)?;
    println!("{}", fam.summary());
    Ok(ExitCode::SUCCESS)
}

fn secs<T>(f: impl FnOnce() -> T) -> (T, f64) {
    let started = Instant::now();
    let out = f();
    (out, started.elapsed().as_secs_f64())
}

fn bench(args: BenchArgs) -> Result<ExitCode, Failure> {
    let n_max = args.common.n_max.map_or(DEFAULT_N_MAX, |n| n as usize);
    let (pool, _) = pool(args.common.workers)?;
    let mut rows = Vec::new();
    let mut all_pass = true;
    pool.install(|| -> Result<(), Failure> {
        for n in 1..=n_max {
            let (fam, build_secs) = secs(|| TauFamily::build(n));
            let fam = fam
                .context("building tau family")
                .map_err(Failure::Runtime)?;
            // identities needing n+1 are timed on the next family up
            let next = if n < n_max {
                Some(
                    TauFamily::build(n + 1)
                        .context("building tau family")
                        .map_err(Failure::Runtime)?,
                )
            } else {
                None
            };
            let toda = next
                .as_ref()
                .map(|f| secs(|| check_toda(f, n, FamilyKind::G)));
            let mixed = next.as_ref().map(|f| secs(|| check_mixed(f, n)));
            let (conj, conjecture_secs) = secs(|| check_conjecture(&fam, n));
            let (sym, symmetries_secs) = secs(|| check_symmetries(&fam, n));
            all_pass &= toda.iter().all(|(r, _)| r.passed())
                && mixed.iter().all(|(r, _)| r.passed())
                && conj.iter().chain(&sym).all(|r| r.passed());
            let tau = fam.tau(n);
            let tau_uv = tau
                .basis_uv(BasisDirection::ToUv)
                .context("rewriting tau in the (u, v) basis")
                .map_err(Failure::Runtime)?;
            rows.push(BenchRow {
                n,
                build_secs,
                tau_terms: tau_uv.len(),
                tau_terms_xy: tau.len(),
                f_terms: fam.f(n).len(),
                toda_secs: toda.map(|(_, s)| s),
                mixed_secs: mixed.map(|(_, s)| s),
                conjecture_secs,
                symmetries_secs,
            });
        }
        Ok(())
    })?;
    print!("{}", render_bench(&rows, args.format));
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    })
}
