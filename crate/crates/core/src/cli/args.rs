use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};

use super::{exit_code, parse_n_range, run, Command, RunConfig};
use crate::algebra::parse_rational;
use crate::error::{Error, Result};
use crate::variety::TestKind;

/// Exact period and band-overlap criteria for periodic graph operators.
#[derive(Debug, Parser)]
#[command(name = "bloch-periods", version)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Sub,
}

#[derive(Debug, Subcommand)]
pub enum Sub {
    /// Run the symbolic tests and write a JSON report.
    Analyze(Common),
    /// Sample all bands on an N^d grid and write a CSV.
    Sweep(Common),
    /// Overlap statistic rho(N) across a range of grid sizes.
    Decay(Common),
    /// Check a spec file and print its canonical form.
    Validate(Common),
}

#[derive(Debug, Args)]
pub struct Common {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// Overlap report (sweep) or decay CSV (decay).
    #[arg(long)]
    pub report: Option<PathBuf>,
    /// Comma-separated test names; an empty string selects none.
    #[arg(long)]
    pub tests: Option<String>,
    #[arg(long = "N")]
    pub n: Option<usize>,
    /// `a:b`, doubling from a up to b.
    #[arg(long = "N-range")]
    pub n_range: Option<String>,
    #[arg(long, default_value_t = 1e-8)]
    pub tau: f64,
    /// Comma-separated exact offsets, e.g. `1,-1,1/2`.
    #[arg(long, allow_hyphen_values = true)]
    pub offsets: Option<String>,
    #[arg(long = "Nmax-shifts", default_value_t = 6)]
    pub nmax_shifts: u64,
    #[arg(long)]
    pub workers: Option<usize>,
    #[arg(long)]
    pub probabilistic: bool,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Treat the characteristic polynomial of a graph operator as irreducible.
    #[arg(long)]
    pub assume_irreducible: bool,
    /// Largest N^d * Q a sweep may allocate.
    #[arg(long)]
    pub max_values: Option<u64>,
}

fn split_list(s: &str) -> impl Iterator<Item = &str> {
    s.split(',').map(str::trim).filter(|x| !x.is_empty())
}

impl Common {
    fn into_config(self, command: Command) -> Result<RunConfig> {
        let mut cfg = RunConfig::new(command, self.input);
        cfg.out = self.out;
        cfg.report = self.report;
        if let Some(t) = &self.tests {
            cfg.tests = Some(split_list(t).map(str::parse).collect::<Result<Vec<TestKind>>>()?);
        }
        cfg.n = self.n;
        if let Some(r) = &self.n_range {
            cfg.n_range = Some(parse_n_range(r)?);
        }
        cfg.tau = self.tau;
        if let Some(o) = &self.offsets {
            cfg.offsets = split_list(o)
                .map(|x| {
                    parse_rational(x)
                        .ok_or_else(|| Error::InvalidArgument(format!("offset `{x}` is not an exact rational p/q")))
                })
                .collect::<Result<_>>()?;
        }
        cfg.nmax_shifts = self.nmax_shifts;
        cfg.workers = self.workers;
        cfg.probabilistic = self.probabilistic;
        cfg.seed = self.seed;
        cfg.assume_irreducible = self.assume_irreducible;
        if let Some(m) = self.max_values {
            cfg.max_values = m;
        }
        Ok(cfg)
    }
}

impl Cli {
    pub fn into_config(self) -> Result<RunConfig> {
        match self.command {
            Sub::Analyze(c) => c.into_config(Command::Analyze),
            Sub::Sweep(c) => c.into_config(Command::Sweep),
            Sub::Decay(c) => c.into_config(Command::Decay),
            Sub::Validate(c) => c.into_config(Command::Validate),
        }
    }
}

/// Parses arguments, runs the command, prints its output and returns the exit code.
pub fn main_with_args<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { super::EXIT_PARSE } else { super::EXIT_OK };
        }
    };
    match cli.into_config().and_then(|cfg| run(&cfg)) {
        Ok(outcome) => {
            print!("{}", outcome.stdout);
            outcome.exit_code
        }
        Err(e) => {
            eprintln!("error: {e}");
            exit_code(&e)
        }
    }
}
