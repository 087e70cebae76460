use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use rayon::prelude::*;

use cmverify::{find, registry, run, write_series_csv, Config, Outcome, Report, Scenario, VerifyError, EXIT_FAIL, EXIT_PASS, EXIT_USAGE};

#[derive(Parser)]
#[command(name = "cmverify", version, about = "Seeded verification scenarios for the complex-measure calculus")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the scenario catalog with parameter defaults
    List,
    /// Run a scenario (or `all`) and write its JSON report
    Run {
        #[arg(long)]
        scenario: String,
        /// TOML file with `seed` and per-scenario parameter tables
        #[arg(long)]
        config: Option<PathBuf>,
        /// Report path; a JSON array when running `all`
        #[arg(long)]
        out: Option<PathBuf>,
        /// Overrides the config seed
        #[arg(long)]
        seed: Option<u64>,
        /// Run scenarios concurrently
        #[arg(long)]
        parallel: bool,
    },
    /// Write the data series of a scenario as CSV (x, y, series)
    Emit {
        #[arg(long)]
        scenario: String,
        #[arg(long)]
        out: PathBuf,
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        seed: Option<u64>,
    },
}

fn load(config: Option<&Path>) -> Result<Config, VerifyError> {
    config.map_or_else(|| Ok(Config::default()), Config::load)
}

fn list() -> Result<bool, VerifyError> {
    let mut out = std::io::stdout().lock();
    for s in registry() {
        writeln!(out, "{:<34} [{}] {}", s.id, s.area, s.description)?;
        for p in s.params {
            writeln!(out, "    {} = {}  # {}", p.key, p.default_value(), p.doc)?;
        }
        if s.series {
            writeln!(out, "    (emits a data series)")?;
        }
    }
    Ok(true)
}

fn summary(r: &Report) {
    let status = if r.pass { "PASS" } else { "FAIL" };
    println!("{status} {} ({} checks)", r.scenario, r.checks.len());
    for c in r.failures() {
        println!("    failed: {} (residual {:e}, tolerance {:e})", c.name, c.residual, c.tolerance);
    }
    if let Some(e) = &r.error {
        println!("    error: {e}");
    }
}

fn run_command(scenario: &str, config: &Config, out: Option<&Path>, seed: Option<u64>, parallel: bool) -> Result<bool, VerifyError> {
    let chosen: Vec<&Scenario> = if scenario == "all" { registry().iter().collect() } else { vec![find(scenario)?] };
    let outcomes: Vec<Outcome> = if parallel {
        chosen.par_iter().map(|s| run(s, config, seed)).collect::<Result<_, _>>()?
    } else {
        chosen.iter().map(|s| run(s, config, seed)).collect::<Result<_, _>>()?
    };
    let reports: Vec<&Report> = outcomes.iter().map(|o| &o.report).collect();
    reports.iter().for_each(|r| summary(r));
    if let Some(path) = out {
        let json = if scenario == "all" {
            serde_json::to_string_pretty(&reports)?
        } else {
            serde_json::to_string_pretty(reports[0])?
        };
        std::fs::write(path, json + "\n")?;
    }
    Ok(reports.iter().all(|r| r.pass))
}

fn emit_command(scenario: &str, config: &Config, out: &Path, seed: Option<u64>) -> Result<bool, VerifyError> {
    let s = find(scenario)?;
    if !s.series {
        return Err(VerifyError::NoSeries(s.id.to_string()));
    }
    let outcome = run(s, config, seed)?;
    write_series_csv(s.id, &outcome.series, out)?;
    summary(&outcome.report);
    Ok(outcome.report.pass)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE as u8 } else { EXIT_PASS as u8 });
        }
    };
    let result = match cli.command {
        // a closed pipe (`cmverify list | head`) is not an error
        Command::List => list().or_else(|e| match e {
            VerifyError::Io(e) if e.kind() == std::io::ErrorKind::BrokenPipe => Ok(true),
            e => Err(e),
        }),
        Command::Run { scenario, config, out, seed, parallel } => {
            load(config.as_deref()).and_then(|c| run_command(&scenario, &c, out.as_deref(), seed, parallel))
        }
        Command::Emit { scenario, out, config, seed } => {
            load(config.as_deref()).and_then(|c| emit_command(&scenario, &c, &out, seed))
        }
    };
    match result {
        Ok(true) => ExitCode::from(EXIT_PASS as u8),
        Ok(false) => ExitCode::from(EXIT_FAIL as u8),
        Err(e) => {
            eprintln!("cmverify: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}
