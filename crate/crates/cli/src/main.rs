mod config;
mod defaults;
mod figures;
mod report;

use std::fs::File;
use std::io::{self, Write};
use std::process::ExitCode;

use anyhow::{Context, Result};
use clap::Parser;

use config::{Cli, Command, Format, RunConfig};

fn configure_threads() -> Result<()> {
    let Ok(value) = std::env::var(defaults::THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = value
        .parse()
        .with_context(|| format!("invalid value for {}: {value:?}", defaults::THREADS_ENV))?;
    rayon::ThreadPoolBuilder::new().num_threads(threads).build_global()?;
    Ok(())
}

fn sink(config: &RunConfig) -> Result<Box<dyn Write>> {
    Ok(match &config.output_path {
        Some(path) => Box::new(File::create(path).with_context(|| format!("cannot write --out {}", path.display()))?),
        None => Box::new(io::stdout().lock()),
    })
}

fn number(v: f64) -> String {
    format!("{v:.11e}")
}

fn run(config: RunConfig) -> Result<bool> {
    if config.command == Command::Report {
        let checks = report::run_all();
        let mut out = csv::Writer::from_writer(sink(&config)?);
        out.write_record(["suite", "check", "status", "value", "bound"])?;
        for c in &checks {
            let status = if c.passed { "PASS" } else { "FAIL" };
            out.write_record([c.suite, &c.name, status, &number(c.value), &number(c.bound)])?;
            eprintln!("{status} {}: {} ({:.3e} vs {:.1e})", c.suite, c.name, c.value, c.bound);
        }
        out.flush()?;
        let failed = checks.iter().filter(|c| !c.passed).count();
        eprintln!("{} of {} checks passed", checks.len() - failed, checks.len());
        return Ok(failed == 0);
    }

    let table = figures::build(&config).with_context(|| format!("{} failed", config.command.name()))?;
    let Format::Csv = config.format;
    let mut out = csv::Writer::from_writer(sink(&config)?);
    out.write_record(&table.header)?;
    for row in &table.rows {
        out.write_record(row.iter().map(|&v| number(v)))?;
    }
    out.flush()?;
    Ok(true)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = configure_threads()
        .and_then(|_| RunConfig::from_cli(cli).map_err(Into::into))
        .and_then(run);
    match outcome {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::FAILURE,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
