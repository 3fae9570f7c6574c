//! `bring-solver`: command-line front end for the `x^5 + x = a` solver.
//!
//! Three commands: `solve` runs one of the four root-finding methods and
//! prints a report; `tables` reproduces the coefficient, term, and
//! partial-sum tables as CSV; `scan` sweeps the series method against a
//! bisection oracle over a log-spaced grid.
//!
//! Exit codes: 0 on success, 2 on domain errors and bad flags (with a
//! one-line `error: <kind>: <message>` on standard error), 1 on internal
//! failure. Data goes to standard output only, and json/csv output is
//! byte-deterministic for fixed inputs.

mod output;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use bring_core::diagnostics::{accuracy_scan, k0_term_table, partial_sums, DEFAULT_CHECKPOINTS};
use bring_core::solver::{
    solve_bisection, solve_bring_radical, solve_newton, solve_series, solve_series_unpolished,
    SolveReport,
};
use bring_core::ultraradicals::{required_capacity, MAX_OUTER_INDEX};
use bring_core::{generate_coefficients, CoefficientTable, TruncationPolicy};

const DEFAULT_MAX_K: usize = 200;

#[derive(Parser)]
#[command(
    name = "bring-solver",
    version,
    about = "Solve the reduced quintic x^5 + x = a and study its series solution"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Solve x^5 + x = a for the real root
    Solve(SolveArgs),
    /// Emit the coefficient, term, and partial-sum tables as CSV
    Tables {
        #[command(subcommand)]
        table: TableCommand,
    },
    /// Compare series roots against a bisection oracle on a log-spaced grid
    Scan(ScanArgs),
}

#[derive(Args)]
struct SolveArgs {
    /// Right-hand side of x^5 + x = a
    #[arg(long, allow_hyphen_values = true)]
    a: f64,
    /// Root-finding method
    #[arg(long, value_enum, default_value_t = CliMethod::Series)]
    method: CliMethod,
    /// Outer term cap (series), term count (bring-radical), iteration cap (newton)
    #[arg(long)]
    terms: Option<usize>,
    /// Residual target for polish, newton, and bisect
    #[arg(long, default_value_t = 1e-12)]
    tol: f64,
    #[arg(long, value_enum, default_value_t = Format::Human)]
    format: Format,
    /// Include the five series values and all four quartic roots
    #[arg(long)]
    dump_ultraradicals: bool,
    /// Skip the one-step residual polish after the series solve
    #[arg(long)]
    no_polish: bool,
}

#[derive(Subcommand)]
enum TableCommand {
    /// Series coefficients c_k for k = 1..=max-k
    C {
        #[arg(long)]
        max_k: usize,
    },
    /// Raw outer terms T_0..T_m-max of the leading series at a
    K0Terms {
        #[arg(long, allow_hyphen_values = true)]
        a: f64,
        #[arg(long)]
        m_max: usize,
    },
    /// Raw partial sums at the given term-count checkpoints
    PartialSums {
        /// Comma-separated a values
        #[arg(
            long,
            value_delimiter = ',',
            required = true,
            allow_hyphen_values = true
        )]
        a_list: Vec<f64>,
        /// Comma-separated term counts
        #[arg(long, value_delimiter = ',', default_values_t = DEFAULT_CHECKPOINTS)]
        checkpoints: Vec<usize>,
    },
}

#[derive(Args)]
struct ScanArgs {
    #[arg(long)]
    a_min: f64,
    #[arg(long)]
    a_max: f64,
    /// Number of log-spaced grid points
    #[arg(long)]
    count: usize,
    /// Outer term cap for the series method
    #[arg(long, default_value_t = TruncationPolicy::default().m_max)]
    m_max: usize,
    #[arg(long, value_enum, default_value_t = ScanFormat::Csv)]
    format: ScanFormat,
}

#[derive(Clone, Copy, Debug, PartialEq, ValueEnum)]
enum CliMethod {
    Series,
    Newton,
    Bisect,
    BringRadical,
}

#[derive(Clone, Copy, Debug, PartialEq, ValueEnum)]
enum Format {
    Human,
    Json,
    Csv,
}

#[derive(Clone, Copy, Debug, PartialEq, ValueEnum)]
enum ScanFormat {
    Csv,
    Json,
}

enum CliError {
    /// Bad input or a solver gate; exit 2.
    Domain { kind: &'static str, message: String },
    /// Should-not-happen plumbing failure; exit 1.
    Internal(String),
}

fn domain(kind: &'static str, message: impl Into<String>) -> CliError {
    CliError::Domain {
        kind,
        message: message.into(),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let rendered = match cli.command {
        Command::Solve(args) => cmd_solve(&args),
        Command::Tables { table } => cmd_tables(&table),
        Command::Scan(args) => cmd_scan(&args),
    };
    // The whole report is rendered before the first byte is printed, so a
    // failing command never leaves partial output behind.
    match rendered {
        Ok(text) => {
            print!("{text}");
            ExitCode::SUCCESS
        }
        Err(CliError::Domain { kind, message }) => {
            eprintln!("error: {kind}: {message}");
            ExitCode::from(2)
        }
        Err(CliError::Internal(message)) => {
            eprintln!("error: internal: {message}");
            ExitCode::from(1)
        }
    }
}

/// Builds the shared coefficient table: `BRING_SOLVER_MAX_K` (default 200)
/// entries, grown as needed to cover the requested truncation.
fn coefficient_table(required: usize) -> Result<CoefficientTable, CliError> {
    let base = match std::env::var("BRING_SOLVER_MAX_K") {
        Ok(raw) => raw.trim().parse::<usize>().map_err(|_| {
            domain(
                "invalid-env",
                format!("BRING_SOLVER_MAX_K must be a nonnegative integer (got {raw:?})"),
            )
        })?,
        Err(std::env::VarError::NotPresent) => DEFAULT_MAX_K,
        Err(std::env::VarError::NotUnicode(_)) => {
            return Err(domain("invalid-env", "BRING_SOLVER_MAX_K is not unicode"))
        }
    };
    let k_max = base.max(required).max(1);
    generate_coefficients(k_max).map_err(|e| CliError::Internal(e.to_string()))
}

fn require_finite(name: &str, x: f64) -> Result<(), CliError> {
    if x.is_finite() {
        Ok(())
    } else {
        Err(domain(
            "invalid-argument",
            format!("{name} must be finite (got {x})"),
        ))
    }
}

fn require_nonzero_finite(name: &str, x: f64) -> Result<(), CliError> {
    require_finite(name, x)?;
    if x == 0.0 {
        return Err(domain(
            "invalid-argument",
            format!("{name} must be nonzero"),
        ));
    }
    Ok(())
}

/// Table capacity needed to run the outer sum to `m_max`. Depths past the
/// library's hard cap are provisioned up to the cap, so the index gate
/// fires instead of a misleading capacity error.
fn capacity_for_depth(m_max: usize) -> usize {
    required_capacity(m_max.min(MAX_OUTER_INDEX))
}

fn cmd_solve(args: &SolveArgs) -> Result<String, CliError> {
    require_finite("--a", args.a)?;
    if !(args.tol > 0.0 && args.tol.is_finite()) {
        return Err(domain(
            "invalid-argument",
            "--tol must be a positive number",
        ));
    }
    if args.terms == Some(0) {
        return Err(domain("invalid-argument", "--terms must be at least 1"));
    }
    let report: SolveReport = match args.method {
        CliMethod::Series => {
            let policy = TruncationPolicy {
                m_max: args.terms.unwrap_or(TruncationPolicy::default().m_max),
                ..TruncationPolicy::default()
            };
            let coeffs = coefficient_table(capacity_for_depth(policy.m_max))?;
            if args.no_polish {
                solve_series_unpolished(args.a, &policy, &coeffs)
            } else {
                solve_series(args.a, &policy, args.tol, &coeffs)
            }
        }
        CliMethod::Newton => solve_newton(args.a, None, args.tol, args.terms.unwrap_or(100)),
        CliMethod::Bisect => solve_bisection(args.a, args.tol),
        CliMethod::BringRadical => solve_bring_radical(args.a, args.terms.unwrap_or(100)),
    }
    .map_err(|e| domain(e.kind(), e.to_string()))?;
    Ok(match args.format {
        Format::Human => output::human_report(&report, args.dump_ultraradicals),
        Format::Json => output::json_report(&report, args.dump_ultraradicals),
        Format::Csv => output::csv_report(&report),
    })
}

fn cmd_tables(table: &TableCommand) -> Result<String, CliError> {
    match table {
        TableCommand::C { max_k } => {
            if *max_k == 0 {
                return Err(domain("invalid-argument", "--max-k must be at least 1"));
            }
            let coeffs = coefficient_table(*max_k)?;
            Ok(output::csv_coefficients(&coeffs, *max_k))
        }
        TableCommand::K0Terms { a, m_max } => {
            require_nonzero_finite("--a", *a)?;
            if *m_max == 0 {
                return Err(domain("invalid-argument", "--m-max must be at least 1"));
            }
            let coeffs = coefficient_table(capacity_for_depth(*m_max))?;
            let table =
                k0_term_table(*a, *m_max, &coeffs).map_err(|e| domain(e.kind(), e.to_string()))?;
            Ok(output::csv_terms(&table))
        }
        TableCommand::PartialSums {
            a_list,
            checkpoints,
        } => {
            for &a in a_list {
                require_nonzero_finite("--a-list entry", a)?;
            }
            if checkpoints.is_empty() {
                return Err(domain(
                    "invalid-argument",
                    "--checkpoints needs at least one term count",
                ));
            }
            // S_N consumes terms T_0..T_{N-1}, so depth N-1 sets capacity.
            let top = checkpoints.iter().copied().max().unwrap_or(0);
            let coeffs = coefficient_table(capacity_for_depth(top.saturating_sub(1)))?;
            let table = partial_sums(a_list, checkpoints, &coeffs)
                .map_err(|e| domain(e.kind(), e.to_string()))?;
            Ok(output::csv_partial_sums(&table))
        }
    }
}

fn cmd_scan(args: &ScanArgs) -> Result<String, CliError> {
    require_finite("--a-min", args.a_min)?;
    require_finite("--a-max", args.a_max)?;
    if args.m_max == 0 {
        return Err(domain("invalid-argument", "--m-max must be at least 1"));
    }
    let policy = TruncationPolicy {
        m_max: args.m_max,
        ..TruncationPolicy::default()
    };
    let coeffs = coefficient_table(capacity_for_depth(args.m_max))?;
    let points = accuracy_scan(args.a_min, args.a_max, args.count, &policy, &coeffs)
        .map_err(|e| domain(e.kind(), e.to_string()))?;
    if points.iter().all(|p| p.error.is_some()) {
        let first = points[0].error.as_ref().expect("all points failed");
        return Err(domain(
            first.kind(),
            format!("all {} grid points failed; first: {first}", points.len()),
        ));
    }
    Ok(match args.format {
        ScanFormat::Csv => output::csv_scan(&points),
        ScanFormat::Json => output::json_scan(&points),
    })
}
