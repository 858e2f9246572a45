//! `clifford-forge`: runs the theorem suites and scenario files.
//!
//! Exit status is 0 when no check fails, 1 when one does, and 2 for usage,
//! parse and configuration errors.

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{CommandFactory, Parser, Subcommand, ValueEnum};
use clifford_forge::groupcore::catalog;
use clifford_forge::scenarios::{
    evaluate, read_scenario_file, run_suite, Report, ScenarioError, SuiteConfig, SUITES,
};

const SEED_ENV: &str = "CLIFFORD_FORGE_SEED";

#[derive(Parser, Debug)]
#[command(name = "clifford-forge", version, about = "Witness-checked Mackey and Clifford theory over prime fields")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args, Debug, Clone)]
struct SuiteArgs {
    /// Suite to run, or `all`.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Largest catalog group order.
    #[arg(long, default_value_t = 12)]
    max_order: usize,
    /// Comma-separated primes.
    #[arg(long, value_delimiter = ',', default_values_t = [2u64, 3, 5, 7])]
    primes: Vec<u64>,
    /// Seed for the randomized instances; CLIFFORD_FORGE_SEED takes precedence.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Worker threads; 0 uses every core.
    #[arg(long, default_value_t = 0)]
    jobs: usize,
    /// Include per-check wall time in the report.
    #[arg(long)]
    timings: bool,
}

#[derive(Copy, Clone, Debug, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Run a theorem suite and print the report.
    Verify {
        #[command(flatten)]
        suite: SuiteArgs,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// Check the claims of one scenario file.
    Scenario {
        file: PathBuf,
        #[arg(long)]
        timings: bool,
        #[arg(long, value_enum, default_value = "text")]
        format: Format,
    },
    /// List the built-in groups.
    Catalog {
        #[arg(long, default_value_t = 12)]
        max_order: usize,
    },
    /// Run a suite and write the report to a file.
    Report {
        #[arg(long, value_enum)]
        format: Format,
        #[arg(long)]
        out: PathBuf,
        #[command(flatten)]
        suite: SuiteArgs,
    },
}

enum Failure {
    Usage(String),
    Io(String),
}

fn usage_error(message: impl std::fmt::Display) -> Failure {
    let usage = Cli::command().render_usage();
    Failure::Usage(format!("error: {message}\n\n{usage}"))
}

fn config(args: &SuiteArgs) -> Result<SuiteConfig, Failure> {
    let seed = match std::env::var(SEED_ENV) {
        Ok(v) => v
            .trim()
            .parse()
            .map_err(|_| usage_error(format!("{SEED_ENV} must be an unsigned integer, got `{v}`")))?,
        Err(_) => args.seed,
    };
    Ok(SuiteConfig {
        max_order: args.max_order,
        primes: args.primes.clone(),
        seed,
        jobs: args.jobs,
    })
}

fn suite_report(args: &SuiteArgs) -> Result<Report, Failure> {
    let cfg = config(args)?;
    run_suite(&args.suite, &cfg).map_err(|e| match e {
        ScenarioError::UnknownSuite(s) => usage_error(format!(
            "unknown suite `{s}`; expected `all` or one of {}",
            SUITES.join(", ")
        )),
        other => usage_error(other),
    })
}

fn render(report: &Report, format: Format, timings: bool) -> String {
    match format {
        Format::Text => report.render_text(timings),
        Format::Json => report.render_json(timings),
    }
}

fn run(cli: Cli) -> Result<bool, Failure> {
    let mut stdout = std::io::stdout().lock();
    let write_err = |e: std::io::Error| Failure::Io(e.to_string());
    match cli.command {
        Command::Verify { suite, format } => {
            let report = suite_report(&suite)?;
            stdout
                .write_all(render(&report, format, suite.timings).as_bytes())
                .map_err(write_err)?;
            Ok(report.all_passed())
        }
        Command::Scenario {
            file,
            timings,
            format,
        } => {
            let scenario = read_scenario_file(&file).map_err(|e| match e {
                ScenarioError::Io(m) => Failure::Io(m),
                other => usage_error(format!("{}: {other}", file.display())),
            })?;
            let report = Report::new(evaluate(&scenario));
            stdout
                .write_all(render(&report, format, timings).as_bytes())
                .map_err(write_err)?;
            Ok(report.all_passed())
        }
        Command::Catalog { max_order } => {
            for t in catalog(max_order) {
                writeln!(stdout, "{}\t{}", t.name(), t.order()).map_err(write_err)?;
            }
            Ok(true)
        }
        Command::Report { format, out, suite } => {
            let report = suite_report(&suite)?;
            std::fs::write(&out, render(&report, format, suite.timings))
                .map_err(|e| Failure::Io(format!("{}: {e}", out.display())))?;
            let s = report.summary();
            writeln!(
                stdout,
                "wrote {} ({} pass, {} fail, {} info, {} skip)",
                out.display(),
                s.pass,
                s.fail,
                s.info,
                s.skip
            )
            .map_err(write_err)?;
            Ok(report.all_passed())
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(Failure::Usage(m) | Failure::Io(m)) => {
            eprintln!("{m}");
            ExitCode::from(2)
        }
    }
}
