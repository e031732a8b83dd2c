//! Command-line front-end: matrix construction with invertibility
//! verdicts, incidence-matrix inspection, decomposition, and the
//! verification sweeps.
//!
//! Exit codes: `0` when every requested check passes, `1` when a sweep or
//! decomposition check reports a violation, `2` for usage, parse, or
//! range errors.

use crate::birkhoff::extended_system;
use crate::harness::{
    cross_check_determinants, decomposition_verdicts, enumerate_selection_pairs,
    verify_decomposition, verify_main_theorem, verify_polya_theorem, EquivalenceReport,
    HarnessConfig, Verdict, DEFAULT_SEED,
};
use crate::incidence::{BoolMatrix2xN, IncidenceMatrix, MAX_WIDTH};
use crate::matrix::ExactMatrix;
use crate::pascal::{diagonal_all_nonzero, truncated};
use crate::selection::{dominates, Selection};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::path::{Path, PathBuf};

/// Largest `n` accepted by `verify main` without `--cap`.
pub const DEFAULT_MAIN_BOUND: usize = 8;

/// Largest `n` accepted by `verify polya` / `verify decompose` without
/// `--cap` (each incidence system is an (n+1)² exact determinant).
pub const DEFAULT_INCIDENCE_BOUND: usize = 6;

/// Environment variable supplying the default `--jobs` value.
pub const JOBS_ENV_VAR: &str = "TRUNCPASCAL_JOBS";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Lib(#[from] crate::Error),
    #[error("{0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),
    #[error("csv error: {0}")]
    Csv(#[from] csv::Error),
    #[error("json error: {0}")]
    Json(#[from] serde_json::Error),
}

#[derive(Parser)]
#[command(
    name = "truncpascal",
    version,
    about = "Exact toolkit for truncated Pascal matrices: invertibility \
             criteria, two-point interpolation systems, and exhaustive \
             verification sweeps"
)]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build T(r,x) and report determinant, dominance, diagonal, and
    /// Pólya verdicts
    Matrix(MatrixArgs),
    /// Inspect a 2-row 0/1 matrix: ones count, cumulative sums, Pólya
    Polya(PolyaArgs),
    /// Split an incidence matrix into two whose sum-dot reassembles it
    Decompose(DecomposeArgs),
    /// Run exhaustive verification sweeps
    Verify(VerifyArgs),
}

#[derive(clap::Args)]
struct MatrixArgs {
    /// Row selection, comma-separated (e.g. 0,2,4,7)
    #[arg(long)]
    r: Selection,
    /// Column selection, comma-separated (e.g. 1,2,5,8)
    #[arg(long)]
    x: Selection,
    /// Ambient bound n (default: the largest entry of either selection)
    #[arg(long)]
    n: Option<usize>,
    /// Also build the (n+1)×(n+1) block-extended system
    #[arg(long)]
    extended: bool,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(clap::Args)]
struct PolyaArgs {
    /// Two equal-length 0/1 rows joined by '/' (e.g. 010100/101101)
    matrix: BoolMatrix2xN,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(clap::Args)]
struct DecomposeArgs {
    /// An incidence matrix: two 0/1 rows joined by '/', exactly as many
    /// ones as columns
    matrix: IncidenceMatrix,
    /// Emit JSON instead of text
    #[arg(long)]
    json: bool,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Scope {
    /// All selection pairs: det ⇔ dominance ⇔ diagonal ⇔ Pólya
    Main,
    /// All incidence matrices: Pólya ⇔ system invertibility at nodes (0,1)
    Polya,
    /// All incidence matrices: every decomposition clause
    Decompose,
    /// Every sweep above plus a determinant cross-check against the
    /// cofactor oracle (full below n = 5, a seeded 1% sample otherwise)
    All,
}

#[derive(clap::Args)]
struct VerifyArgs {
    /// Which sweep to run
    #[arg(value_enum)]
    scope: Scope,
    /// Ambient bound n (selections from [0..n], incidence width n+1)
    n: usize,
    /// Worker thread count (default: the TRUNCPASCAL_JOBS environment
    /// variable if set, else one thread per core)
    #[arg(long)]
    jobs: Option<usize>,
    /// Emit the report(s) as JSON
    #[arg(long)]
    json: bool,
    /// Seed for the sampled determinant cross-check (scope `all` only)
    #[arg(long)]
    seed: Option<u64>,
    /// Write the per-pair determinant table (r,x,det,dominates,polya) to
    /// this CSV file (scope `main` only)
    #[arg(long, value_name = "PATH")]
    csv: Option<PathBuf>,
    /// Raise the default bound (main: 8, polya/decompose: 6)
    #[arg(long)]
    cap: Option<usize>,
}

/// Parses arguments from the process environment, runs the command, and
/// returns the exit code.
pub fn run() -> i32 {
    let cli = Cli::parse();
    match execute(cli) {
        Ok(true) => 0,
        Ok(false) => 1,
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn execute(cli: Cli) -> Result<bool, CliError> {
    match cli.command {
        Command::Matrix(args) => cmd_matrix(args),
        Command::Polya(args) => cmd_polya(args),
        Command::Decompose(args) => cmd_decompose(args),
        Command::Verify(args) => cmd_verify(args),
    }
}

/// Default ambient bound: the largest entry of either selection.
fn default_ambient(r: &Selection, x: &Selection) -> usize {
    r.max().into_iter().chain(x.max()).max().unwrap_or(0)
}

#[derive(Serialize)]
struct MatrixReport {
    r: Selection,
    x: Selection,
    n: usize,
    matrix: ExactMatrix,
    det: Option<String>,
    invertible: Option<bool>,
    dominates: Option<bool>,
    diagonal_nonzero: Option<bool>,
    polya: Option<bool>,
    zero_block_witness: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    extended: Option<ExactMatrix>,
    #[serde(skip_serializing_if = "Option::is_none")]
    extended_det: Option<String>,
}

fn cmd_matrix(args: MatrixArgs) -> Result<bool, CliError> {
    let (r, x) = (args.r, args.x);
    let n = args.n.unwrap_or_else(|| default_ambient(&r, &x));
    let t = truncated(&r, &x);
    let square = r.len() == x.len();

    let det = if square { Some(t.det()?) } else { None };
    let invertible = det.as_ref().map(|d| !num::Zero::is_zero(d));
    let dom = square.then(|| dominates(&r, &x)).transpose()?;
    let diagonal = square.then(|| diagonal_all_nonzero(&r, &x)).transpose()?;
    let polya = square
        .then(|| IncidenceMatrix::from_selection(&r, &x, n).map(|e| e.is_polya()))
        .transpose()?;
    let witness = if square { t.zero_block_witness()? } else { None };
    let extended = args
        .extended
        .then(|| extended_system(&r, &x, n))
        .transpose()?;
    let extended_det = extended.as_ref().map(|m| m.det()).transpose()?;

    let report = MatrixReport {
        r,
        x,
        n,
        matrix: t,
        det: det.map(|d| d.to_string()),
        invertible,
        dominates: dom,
        diagonal_nonzero: diagonal,
        polya,
        zero_block_witness: witness,
        extended,
        extended_det: extended_det.map(|d| d.to_string()),
    };

    if args.json {
        println!("{}", serde_json::to_string_pretty(&report)?);
        return Ok(true);
    }

    println!("r: [{}]", report.r);
    println!("x: [{}]", report.x);
    println!("n: {}", report.n);
    println!("T(r,x):");
    println!("{}", report.matrix);
    let or_na = |v: Option<String>| v.unwrap_or_else(|| "n/a (not square)".to_string());
    println!();
    println!("determinant:      {}", or_na(report.det));
    println!(
        "invertible:       {}",
        or_na(report.invertible.map(|b| b.to_string()))
    );
    println!(
        "dominates:        {}",
        or_na(report.dominates.map(|b| b.to_string()))
    );
    println!(
        "diagonal nonzero: {}",
        or_na(report.diagonal_nonzero.map(|b| b.to_string()))
    );
    println!(
        "polya:            {}",
        or_na(report.polya.map(|b| b.to_string()))
    );
    if let Some(k) = report.zero_block_witness {
        println!("zero block:       rows {k}.. of columns ..={k} are all zero");
    }
    if let Some(ext) = &report.extended {
        println!();
        println!("extended system ({}x{}):", ext.n_rows(), ext.n_cols());
        println!("{ext}");
        println!();
        println!(
            "extended determinant: {}",
            report.extended_det.as_deref().unwrap_or("n/a")
        );
    }
    Ok(true)
}

#[derive(Serialize)]
struct PolyaReport {
    matrix: BoolMatrix2xN,
    width: usize,
    ones: usize,
    incidence: bool,
    cumulative_sums: Vec<usize>,
    /// Present only for incidence matrices; the condition is defined on
    /// them.
    polya: Option<bool>,
}

fn cmd_polya(args: PolyaArgs) -> Result<bool, CliError> {
    let m = args.matrix;
    let as_incidence = IncidenceMatrix::new(m).ok();
    let report = PolyaReport {
        matrix: m,
        width: m.width(),
        ones: m.ones(),
        incidence: as_incidence.is_some(),
        cumulative_sums: m.cumulative_sums(),
        polya: as_incidence.map(|e| e.is_polya()),
    };

    if args.json {
        println!("{}", serde_json::to_string_pretty(&report)?);
        return Ok(true);
    }

    println!("matrix:          {}", report.matrix);
    println!("width:           {}", report.width);
    println!("ones:            {}", report.ones);
    println!("incidence:       {}", report.incidence);
    println!("cumulative sums: {:?}", report.cumulative_sums);
    match report.polya {
        Some(b) => println!("polya:           {b}"),
        None => println!("polya:           n/a (not an incidence matrix)"),
    }
    Ok(true)
}

#[derive(Serialize)]
struct DecomposeReport {
    e: IncidenceMatrix,
    e1: IncidenceMatrix,
    e2: IncidenceMatrix,
    row0_ones: usize,
    checks: Vec<Verdict>,
}

fn cmd_decompose(args: DecomposeArgs) -> Result<bool, CliError> {
    let e = args.matrix;
    let (e1, e2) = e.decompose();
    let checks = decomposition_verdicts(&e);
    let clean = checks.iter().all(|v| v.holds);
    let report = DecomposeReport {
        e,
        e1,
        e2,
        row0_ones: e.row_ones(0),
        checks,
    };

    if args.json {
        println!("{}", serde_json::to_string_pretty(&report)?);
        return Ok(clean);
    }

    println!("E:  {}", report.e);
    println!("E1: {}", report.e1);
    println!("E2: {}", report.e2);
    println!("row-0 ones (d): {}", report.row0_ones);
    println!();
    for v in &report.checks {
        println!("{:<22} {}", format!("{}:", v.predicate), v.holds);
    }
    Ok(clean)
}

/// Resolves the worker thread count: explicit flag first, then the
/// environment variable, then none (use the global default pool).
fn resolve_jobs(flag: Option<usize>, env: Option<&str>) -> Result<Option<usize>, CliError> {
    let jobs = match (flag, env) {
        (Some(j), _) => Some(j),
        (None, Some(text)) => Some(text.trim().parse::<usize>().map_err(|_| {
            CliError::Usage(format!("invalid {JOBS_ENV_VAR} value {text:?}"))
        })?),
        (None, None) => None,
    };
    if jobs == Some(0) {
        return Err(CliError::Usage("job count must be at least 1".to_string()));
    }
    Ok(jobs)
}

/// Rejects `n` beyond the scope's bound (default or `--cap`) or beyond
/// the packed-row width limit.
fn check_bound(n: usize, bound: usize, scope: &str) -> Result<(), CliError> {
    if n + 1 > MAX_WIDTH {
        return Err(CliError::Usage(format!(
            "n = {n} needs incidence width {} but at most {MAX_WIDTH} is supported",
            n + 1
        )));
    }
    if n > bound {
        return Err(CliError::Usage(format!(
            "n = {n} exceeds the {scope} bound {bound}; raise it with --cap"
        )));
    }
    Ok(())
}

#[derive(Serialize)]
struct CombinedReport {
    main: EquivalenceReport,
    polya: EquivalenceReport,
    decompose: EquivalenceReport,
    determinant_oracle: EquivalenceReport,
}

fn cmd_verify(args: VerifyArgs) -> Result<bool, CliError> {
    if args.csv.is_some() && args.scope != Scope::Main {
        return Err(CliError::Usage(
            "--csv is only available for scope `main`".to_string(),
        ));
    }
    let env_jobs = std::env::var(JOBS_ENV_VAR).ok();
    let cfg = HarnessConfig {
        jobs: resolve_jobs(args.jobs, env_jobs.as_deref())?,
        seed: args.seed.unwrap_or(DEFAULT_SEED),
        ..HarnessConfig::default()
    };
    let main_bound = args.cap.unwrap_or(DEFAULT_MAIN_BOUND);
    let incidence_bound = args.cap.unwrap_or(DEFAULT_INCIDENCE_BOUND);
    let n = args.n;

    let print_report = |label: &str, report: &EquivalenceReport| {
        println!("== {label} ==");
        print!("{}", report.render_text());
    };

    match args.scope {
        Scope::Main => {
            check_bound(n, main_bound, "selection sweep")?;
            let report = verify_main_theorem(n, &cfg);
            if let Some(path) = &args.csv {
                write_main_csv(path, n)?;
            }
            if args.json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print_report("main theorem sweep", &report);
            }
            Ok(report.all_agree())
        }
        Scope::Polya => {
            check_bound(n, incidence_bound, "incidence sweep")?;
            let report = verify_polya_theorem(n, &cfg);
            if args.json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print_report("polya-invertibility sweep", &report);
            }
            Ok(report.all_agree())
        }
        Scope::Decompose => {
            check_bound(n, incidence_bound, "incidence sweep")?;
            let report = verify_decomposition(n, &cfg);
            if args.json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print_report("decomposition sweep", &report);
            }
            Ok(report.all_agree())
        }
        Scope::All => {
            check_bound(n, main_bound, "selection sweep")?;
            let incidence_n = n.min(incidence_bound);
            if incidence_n < n {
                eprintln!(
                    "note: incidence sweeps clamped to n = {incidence_n} \
                     (raise with --cap)"
                );
            }
            let sample_rate = if n <= 4 { 1.0 } else { 0.01 };
            let combined = CombinedReport {
                main: verify_main_theorem(n, &cfg),
                polya: verify_polya_theorem(incidence_n, &cfg),
                decompose: verify_decomposition(incidence_n, &cfg),
                determinant_oracle: cross_check_determinants(n, sample_rate, &cfg),
            };
            let clean = combined.main.all_agree()
                && combined.polya.all_agree()
                && combined.decompose.all_agree()
                && combined.determinant_oracle.all_agree();
            if args.json {
                println!("{}", serde_json::to_string_pretty(&combined)?);
            } else {
                print_report("main theorem sweep", &combined.main);
                println!();
                print_report("polya-invertibility sweep", &combined.polya);
                println!();
                print_report("decomposition sweep", &combined.decompose);
                println!();
                print_report("determinant cross-check", &combined.determinant_oracle);
            }
            Ok(clean)
        }
    }
}

/// Writes the per-pair determinant table for the main sweep: one row per
/// selection pair, in enumeration order.
fn write_main_csv(path: &Path, n: usize) -> Result<(), CliError> {
    let mut writer = csv::Writer::from_path(path)?;
    writer.write_record(["r", "x", "det", "dominates", "polya"])?;
    for (r, x) in enumerate_selection_pairs(n) {
        let det = truncated(&r, &x).det().expect("equal-size selections");
        let dom = dominates(&r, &x).expect("equal-size selections");
        let polya = IncidenceMatrix::from_selection(&r, &x, n)
            .expect("entries bounded by n")
            .is_polya();
        writer.write_record([
            r.to_string(),
            x.to_string(),
            det.to_string(),
            dom.to_string(),
            polya.to_string(),
        ])?;
    }
    writer.flush()?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn jobs_resolution_prefers_flag_over_environment() {
        assert_eq!(resolve_jobs(Some(3), Some("8")).unwrap(), Some(3));
        assert_eq!(resolve_jobs(None, Some("8")).unwrap(), Some(8));
        assert_eq!(resolve_jobs(None, Some(" 2 ")).unwrap(), Some(2));
        assert_eq!(resolve_jobs(None, None).unwrap(), None);
        assert!(resolve_jobs(None, Some("many")).is_err());
        assert!(resolve_jobs(Some(0), None).is_err());
        assert!(resolve_jobs(None, Some("0")).is_err());
    }

    #[test]
    fn default_ambient_takes_the_larger_maximum() {
        let sel = |e: &[usize]| Selection::new(e.to_vec()).unwrap();
        assert_eq!(default_ambient(&sel(&[0, 2, 4, 7]), &sel(&[1, 2, 5, 8])), 8);
        assert_eq!(default_ambient(&sel(&[3]), &sel(&[1])), 3);
        assert_eq!(default_ambient(&Selection::empty(), &Selection::empty()), 0);
    }

    #[test]
    fn bound_check_enforces_caps_and_width_limit() {
        assert!(check_bound(8, 8, "selection sweep").is_ok());
        assert!(check_bound(9, 8, "selection sweep").is_err());
        assert!(check_bound(9, 12, "selection sweep").is_ok());
        // Width 65 is unrepresentable regardless of the cap.
        assert!(check_bound(64, 100, "selection sweep").is_err());
    }

    #[test]
    fn cli_declaration_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
