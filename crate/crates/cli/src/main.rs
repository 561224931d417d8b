//! `muperm` — exact mu-permanent computation and inequality campaigns.
//!
//! Exit codes: 0 success (or claim holds), 1 counterexample / failed check,
//! 2 usage or parse error, 3 method precondition failure.

use clap::{Args, Parser, Subcommand, ValueEnum};
use muperm_core::algebra::rational::{parse_rational, rational_to_string};
use muperm_core::conjectures::{
    replay_witness, run_campaign, CampaignConfig, Claim, Status, Verdict,
};
use muperm_core::io;
use muperm_core::matrices::gen::{GeneratorKind, Seed};
use muperm_core::schur::{averaging_identity, check_gamma_psd};
use muperm_core::structured::{
    mu_permanent_auto, mu_permanent_star, mu_permanent_tree, mu_permanent_tridiagonal,
    relabel_tree, validate_labeling,
};
use muperm_core::{
    mu_permanent_laplace, multivariable_qdet, Axis, Error, MuPoly, SquareMatrix,
    DEFAULT_NAIVE_CAP,
};
use muperm_core::expansion::mu_permanent_naive_capped;
use serde_json::json;
use std::path::PathBuf;
use std::process::ExitCode;

/// Print to stdout, treating a closed pipe (e.g. `muperm ... | head`) as a
/// successful early exit instead of a panic.
macro_rules! outln {
    ($($arg:tt)*) => {{
        use std::io::Write;
        let mut out = std::io::stdout().lock();
        if writeln!(out, $($arg)*).is_err() {
            std::process::exit(0);
        }
    }};
}

#[derive(Parser)]
#[command(
    name = "muperm",
    about = "Exact mu-permanent toolkit: polynomial expansions, structured evaluators, \
             spectral reports, and randomized inequality campaigns",
    version
)]
struct Cli {
    /// Emit machine-readable JSON instead of plain text.
    #[arg(long, global = true)]
    json: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the full polynomial for a matrix file.
    Compute(ComputeArgs),
    /// Evaluate the polynomial of a matrix file at one point.
    Eval(EvalArgs),
    /// Expand the multivariable weighted determinant of a matrix file.
    Qdet {
        file: PathBuf,
    },
    /// Permutation-indexed (n! x n!) reports: averaging identity or kernel
    /// positive semidefiniteness.
    Schur(SchurArgs),
    /// Run a randomized campaign against one claim, or replay a witness.
    Check(CheckArgs),
    /// Validate or repair an edge labeling for the additive-weight formula.
    Labeling {
        #[command(subcommand)]
        action: LabelingAction,
    },
    /// Generate a seeded matrix file.
    Gen(GenArgs),
}

#[derive(Args)]
struct ComputeArgs {
    file: PathBuf,
    #[arg(long, value_enum, default_value_t = Method::Auto)]
    method: Method,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Method {
    Naive,
    Laplace,
    Tridiagonal,
    Star,
    Tree,
    Auto,
}

#[derive(Args)]
struct EvalArgs {
    file: PathBuf,
    /// Evaluation point, as a rational like `-1` or `3/7`.
    #[arg(long, allow_hyphen_values = true)]
    mu: String,
}

#[derive(Args)]
struct SchurArgs {
    file: PathBuf,
    /// Check that the grand-sum average over all n! x n! entries recovers
    /// the polynomial, exactly.
    #[arg(long, conflicts_with = "gamma_psd")]
    identity: bool,
    /// Check the inversion-count kernel for positive semidefiniteness on a
    /// 21-point grid in [-1, 1] at this matrix's dimension.
    #[arg(long)]
    gamma_psd: bool,
}

#[derive(Args)]
struct CheckArgs {
    /// One of: monotone, epsilon, lieb, fischer, soules, gamma-psd.
    #[arg(required_unless_present = "replay")]
    claim: Option<String>,
    /// Dimension or dimension range, e.g. `4` or `2..6`.
    #[arg(long, default_value = "3..5")]
    n: String,
    #[arg(long, default_value_t = 50)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Matrix generator: pd, hermitian-pd, tree-pd, star-pd, path-pd, int,
    /// rational.
    #[arg(long, default_value = "pd")]
    kind: String,
    /// Number of grid points for grid-based claims.
    #[arg(long, default_value_t = 21)]
    grid: usize,
    /// Persist counterexample witnesses into this directory.
    #[arg(long)]
    witness_dir: Option<PathBuf>,
    /// Worker threads for the trial pool (default: all cores).
    #[arg(long)]
    jobs: Option<usize>,
    /// Re-run the single instance stored in a witness file instead of
    /// running a campaign.
    #[arg(long)]
    replay: Option<PathBuf>,
}

#[derive(Subcommand)]
enum LabelingAction {
    /// Report whether every vertex-disjoint edge pair is nested or separated.
    Validate { file: PathBuf },
    /// Print a vertex relabeling (old -> new, 1-based) that makes a forest's
    /// labeling valid.
    Relabel { file: PathBuf },
}

#[derive(Args)]
struct GenArgs {
    #[arg(long, default_value = "pd")]
    kind: String,
    #[arg(long)]
    n: usize,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Output file; stdout when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(exit_code_for(&e))
        }
    }
}

/// Parse and I/O problems are usage errors (2); everything else a method
/// precondition the input failed to meet (3).
fn exit_code_for(e: &Error) -> u8 {
    match e {
        Error::Parse(_) | Error::Io(_) | Error::UnknownClaim(_) | Error::UnknownGenerator(_) => 2,
        _ => 3,
    }
}

fn naive_cap() -> usize {
    std::env::var("MUPERM_MAX_N")
        .ok()
        .and_then(|s| s.parse().ok())
        .unwrap_or(DEFAULT_NAIVE_CAP)
}

fn run(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Compute(args) => cmd_compute(args, cli.json),
        Command::Eval(args) => cmd_eval(args, cli.json),
        Command::Qdet { file } => cmd_qdet(file, cli.json),
        Command::Schur(args) => cmd_schur(args, cli.json),
        Command::Check(args) => cmd_check(args, cli.json),
        Command::Labeling { action } => cmd_labeling(action, cli.json),
        Command::Gen(args) => cmd_gen(args),
    }
}

fn print_poly(p: &MuPoly, json: bool) {
    if json {
        outln!(
            "{}",
            serde_json::to_string_pretty(&io::poly_to_json(p)).expect("serializable")
        );
    } else {
        outln!("{}", p.to_human("mu"));
    }
}

fn cmd_compute(args: ComputeArgs, json: bool) -> Result<ExitCode, Error> {
    let a = io::read_matrix_file(&args.file)?;
    let p = match args.method {
        Method::Naive => mu_permanent_naive_capped(&a, naive_cap())?,
        Method::Laplace => mu_permanent_laplace(&a, Axis::Row, 0)?,
        Method::Tridiagonal => mu_permanent_tridiagonal(&a)?,
        Method::Star => mu_permanent_star(&a)?,
        Method::Tree => mu_permanent_tree(&a)?,
        Method::Auto => mu_permanent_auto(&a, naive_cap()),
    };
    print_poly(&p, json);
    Ok(ExitCode::SUCCESS)
}

fn cmd_eval(args: EvalArgs, json: bool) -> Result<ExitCode, Error> {
    let a = io::read_matrix_file(&args.file)?;
    let mu = parse_rational(&args.mu)?;
    let value = mu_permanent_auto(&a, naive_cap()).eval_rational(&mu);
    if json {
        let out = json!({
            "mu": rational_to_string(&mu),
            "value": io::scalar_to_json(&value),
        });
        outln!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    } else {
        outln!("{value}");
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_qdet(file: PathBuf, json: bool) -> Result<ExitCode, Error> {
    let a = io::read_matrix_file(&file)?;
    let d = multivariable_qdet(&a)?;
    if json {
        outln!(
            "{}",
            serde_json::to_string_pretty(&io::qdet_to_json(&d)).expect("serializable")
        );
    } else {
        outln!("{}", d.to_human());
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_schur(args: SchurArgs, json: bool) -> Result<ExitCode, Error> {
    if !args.identity && !args.gamma_psd {
        return Err(Error::Parse(
            "pass --identity or --gamma-psd to choose a report".into(),
        ));
    }
    let a = io::read_matrix_file(&args.file)?;
    if args.identity {
        let (direct, averaged) = averaging_identity(&a)?;
        let identity_ok = direct == averaged;
        if json {
            let out = json!({
                "identity": identity_ok,
                "polynomial": io::poly_to_json(&direct),
                "averaged": io::poly_to_json(&averaged),
            });
            outln!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
        } else if identity_ok {
            outln!("identity holds: {}", direct.to_human("mu"));
        } else {
            outln!(
                "identity FAILED: direct {} vs averaged {}",
                direct.to_human("mu"),
                averaged.to_human("mu")
            );
        }
        return Ok(if identity_ok {
            ExitCode::SUCCESS
        } else {
            ExitCode::from(1)
        });
    }
    let grid: Vec<f64> = (0..21).map(|k| -1.0 + k as f64 * 0.1).collect();
    let report = check_gamma_psd(a.n(), &grid)?;
    if json {
        let out = json!({
            "n": report.n,
            "mu": report.mu_values,
            "min_eigenvalues": report.min_eigenvalues,
            "pass": report.pass,
        });
        outln!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
    } else {
        for (mu, eig) in report.mu_values.iter().zip(&report.min_eigenvalues) {
            outln!("mu = {mu:+.2}  min eigenvalue = {eig:+.3e}");
        }
        outln!(
            "kernel at dimension {}: {}",
            report.n,
            if report.pass { "PSD" } else { "NOT PSD" }
        );
    }
    Ok(if report.pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn parse_n_range(s: &str) -> Result<(usize, usize), Error> {
    let bad = || Error::Parse(format!("bad dimension range `{s}`; use `4` or `2..6`"));
    if let Some((lo, hi)) = s.split_once("..") {
        let lo = lo.trim().parse().map_err(|_| bad())?;
        let hi = hi.trim().parse().map_err(|_| bad())?;
        if lo == 0 || hi < lo {
            return Err(bad());
        }
        Ok((lo, hi))
    } else {
        let n = s.trim().parse().map_err(|_| bad())?;
        if n == 0 {
            return Err(bad());
        }
        Ok((n, n))
    }
}

fn verdict_exit(v: &Verdict) -> ExitCode {
    match v.status {
        Status::Counterexample => ExitCode::from(1),
        Status::Holds | Status::Inconclusive => ExitCode::SUCCESS,
    }
}

fn print_verdict(v: &Verdict, json: bool) {
    if json {
        outln!(
            "{}",
            serde_json::to_string_pretty(&io::verdict_to_json(v)).expect("serializable")
        );
        return;
    }
    let status = match v.status {
        Status::Holds => "holds",
        Status::Counterexample => "counterexample",
        Status::Inconclusive => "inconclusive",
    };
    outln!(
        "{}: {} ({} trials, seed {})",
        v.claim.name(),
        status,
        v.trials,
        v.seed
    );
    if let Some(w) = &v.witness {
        if let Some(mu) = &w.mu {
            outln!("  at mu = {}", rational_to_string(mu));
        }
        if let (Some(lhs), Some(rhs)) = (&w.lhs, &w.rhs) {
            outln!(
                "  lhs = {}, rhs = {}",
                rational_to_string(lhs),
                rational_to_string(rhs)
            );
        }
        if !w.detail.is_empty() {
            outln!("  {}", w.detail);
        }
    }
}

fn cmd_check(args: CheckArgs, json: bool) -> Result<ExitCode, Error> {
    if let Some(jobs) = args.jobs {
        // Ignore failure: the global pool can only be installed once.
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global();
    }
    if let Some(path) = &args.replay {
        let v = replay_witness(path)?;
        print_verdict(&v, json);
        return Ok(verdict_exit(&v));
    }
    let claim = Claim::parse(args.claim.as_deref().expect("required by clap"))?;
    let (n_lo, n_hi) = parse_n_range(&args.n)?;
    let mut config = CampaignConfig::new(claim);
    config.n_lo = n_lo;
    config.n_hi = n_hi;
    config.trials = args.trials;
    config.seed = Seed(args.seed);
    config.generator = GeneratorKind::parse(&args.kind)?;
    config.witness_dir = args.witness_dir.clone();
    config.grid_points = args.grid;
    let v = run_campaign(&config)?;
    print_verdict(&v, json);
    Ok(verdict_exit(&v))
}

fn cmd_labeling(action: LabelingAction, json: bool) -> Result<ExitCode, Error> {
    match action {
        LabelingAction::Validate { file } => {
            let g = io::read_graph_file(&file)?;
            let report = validate_labeling(&g);
            if json {
                let pairs: Vec<_> = report
                    .violations()
                    .iter()
                    .map(|((a, b), (c, d))| json!([[a + 1, b + 1], [c + 1, d + 1]]))
                    .collect();
                let out = json!({ "valid": report.is_valid(), "violations": pairs });
                outln!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
            } else if report.is_valid() {
                outln!("valid");
            } else {
                outln!("invalid: {} crossing pair(s)", report.violations().len());
                for ((a, b), (c, d)) in report.violations() {
                    outln!(
                        "  edges {{{}, {}}} and {{{}, {}}} cross",
                        a + 1,
                        b + 1,
                        c + 1,
                        d + 1
                    );
                }
            }
            Ok(if report.is_valid() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            })
        }
        LabelingAction::Relabel { file } => {
            let g = io::read_graph_file(&file)?;
            let pi = relabel_tree(&g)?;
            if json {
                let out = json!({
                    "n": g.n(),
                    "images": pi.one_based_images(),
                });
                outln!("{}", serde_json::to_string_pretty(&out).expect("serializable"));
            } else {
                for (old, new) in pi.one_based_images().iter().enumerate() {
                    outln!("{} -> {}", old + 1, new);
                }
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn cmd_gen(args: GenArgs) -> Result<ExitCode, Error> {
    let kind = GeneratorKind::parse(&args.kind)?;
    let a: SquareMatrix = kind.generate(args.n, Seed(args.seed))?;
    let value = io::matrix_to_json(&a);
    match args.out {
        Some(path) => io::write_json_file(&path, &value)?,
        None => outln!(
            "{}",
            serde_json::to_string_pretty(&value).expect("serializable")
        ),
    }
    Ok(ExitCode::SUCCESS)
}
