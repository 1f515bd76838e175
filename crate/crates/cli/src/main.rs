use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use hesse_lab::algebra::{parse_poly, parse_scalar, Var};
use hesse_lab::hesse::PencilParam;
use hesse_lab::suite::{run_suite, SuiteConfig, SUITES};

#[derive(Parser)]
#[command(name = "hesse-lab", version, about = "Exact checks on the Hesse pencil over Q(w), w^2 + w + 1 = 0")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification suite, or `all`.
    Verify {
        suite: String,
        /// Pencil parameter; repeatable. Rationals, `w`-expressions or `inf`.
        #[arg(long = "lambda", allow_hyphen_values = true)]
        lambdas: Vec<String>,
        /// Print the JSON report instead of text.
        #[arg(long)]
        json: bool,
        /// Also write the JSON report to this file.
        #[arg(long)]
        out: Option<PathBuf>,
        /// First shear tried by the shear-invariance checks.
        #[arg(long, default_value_t = 1, allow_hyphen_values = true)]
        shear_seed: i64,
        #[arg(long, env = "HESSE_LAB_JOBS")]
        jobs: Option<usize>,
        /// Include per-task wall times in the report.
        #[arg(long)]
        timings: bool,
    },
    /// List the suite names.
    ListSuites,
    /// Parse a polynomial and print its normal form.
    Parse {
        poly: String,
        /// Substitute a value, e.g. `--set l1=1`; repeatable.
        #[arg(long = "set", allow_hyphen_values = true)]
        set: Vec<String>,
    },
}

fn config_error(msg: impl std::fmt::Display) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(2)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match cli.command {
        Command::ListSuites => {
            for s in SUITES {
                println!("{s}");
            }
            println!("all");
            ExitCode::SUCCESS
        }
        Command::Parse { poly, set } => {
            let mut p = match parse_poly(&poly) {
                Ok(p) => p,
                Err(e) => return config_error(e),
            };
            for s in &set {
                let Some((name, value)) = s.split_once('=') else {
                    return config_error(format!("expected var=value, got `{s}`"));
                };
                let sub = Var::parse(name.trim()).and_then(|v| Ok((v, parse_scalar(value.trim())?)));
                match sub {
                    Ok((v, c)) => p = p.substitute(v, &c),
                    Err(e) => return config_error(e),
                }
            }
            println!("{p}");
            ExitCode::SUCCESS
        }
        Command::Verify { suite, lambdas, json, out, shear_seed, jobs, timings } => {
            let mut config = SuiteConfig::new(&suite);
            if !lambdas.is_empty() {
                match lambdas.iter().map(|s| PencilParam::parse(s)).collect() {
                    Ok(ls) => config.lambdas = ls,
                    Err(e) => return config_error(e),
                }
            }
            config.shear_seed = shear_seed;
            config.jobs = jobs;
            let mut report = match run_suite(&config) {
                Ok(r) => r,
                Err(e) => return config_error(e),
            };
            if !timings {
                report.timings = None;
            }
            if let Some(path) = out {
                if let Err(e) = fs::write(&path, report.to_json() + "\n") {
                    return config_error(format!("{}: {e}", path.display()));
                }
            }
            if json {
                println!("{}", report.to_json());
            } else {
                print!("{}", report.to_text());
            }
            ExitCode::from(report.exit_code() as u8)
        }
    }
}
