//! Command orchestration behind the `bloch-periods` binary.
//!
//! Each `run_*` function reads the operator spec, does its work, writes its
//! artifacts atomically and returns the text for standard output together
//! with the process exit code.

mod args;

use std::io::Write;
use std::path::{Path, PathBuf};

use num_rational::BigRational;
use serde::Serialize;

pub use args::{main_with_args, Cli};

use crate::algebra::cyclotomic::rational_to_f64;
use crate::algebra::{support_period_group, ZeroTestConfig};
use crate::bands::{decay_series, overlap_statistic, sweep_grid, DecayTable, SweepOptions};
use crate::error::{Error, Result};
use crate::operator::{build_symbol, HermitianCheck, OperatorSpec};
use crate::variety::{analyze, charpoly, AnalyzeOptions, CriteriaConfig, TestKind, TestReport, Verdict, Witness};

pub const EXIT_OK: i32 = 0;
pub const EXIT_INTERNAL: i32 = 1;
pub const EXIT_PARSE: i32 = 2;
pub const EXIT_INVARIANT: i32 = 3;
pub const EXIT_DETECTED: i32 = 4;
pub const EXIT_RESOURCE: i32 = 5;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Command {
    Analyze,
    Sweep,
    Decay,
    Validate,
}

#[derive(Clone, Debug)]
pub struct RunConfig {
    pub command: Command,
    pub input: PathBuf,
    pub out: Option<PathBuf>,
    /// Secondary artifact: overlap report (sweep) or decay CSV (decay).
    pub report: Option<PathBuf>,
    /// `None` selects every test.
    pub tests: Option<Vec<TestKind>>,
    pub n: Option<usize>,
    pub n_range: Option<Vec<usize>>,
    pub tau: f64,
    pub offsets: Vec<BigRational>,
    pub nmax_shifts: u64,
    pub workers: Option<usize>,
    pub probabilistic: bool,
    pub seed: u64,
    pub assume_irreducible: bool,
    pub max_values: u64,
}

impl RunConfig {
    pub fn new(command: Command, input: impl Into<PathBuf>) -> Self {
        RunConfig {
            command,
            input: input.into(),
            out: None,
            report: None,
            tests: None,
            n: None,
            n_range: None,
            tau: 1e-8,
            offsets: AnalyzeOptions::default().offsets,
            nmax_shifts: 6,
            workers: None,
            probabilistic: false,
            seed: 0,
            assume_irreducible: false,
            max_values: crate::bands::sweep::DEFAULT_MAX_VALUES,
        }
    }

    fn validate(&self) -> Result<()> {
        if !(self.tau > 0.0 && self.tau.is_finite()) {
            return Err(Error::BadTolerance(self.tau));
        }
        if self.n == Some(0) {
            return Err(Error::InvalidArgument("--N must be at least 1".into()));
        }
        if self.workers == Some(0) {
            return Err(Error::InvalidArgument("--workers must be at least 1".into()));
        }
        Ok(())
    }

    fn sweep_options(&self) -> SweepOptions {
        SweepOptions {
            workers: self.workers,
            max_values: self.max_values,
        }
    }

    fn grid_sizes(&self) -> Result<Vec<usize>> {
        match (&self.n_range, self.n) {
            (Some(r), _) => Ok(r.clone()),
            (None, Some(n)) => Ok(vec![n]),
            (None, None) => Err(Error::InvalidArgument("either --N or --N-range is required".into())),
        }
    }
}

/// Grid sizes `a, 2a, 4a, … ≤ b` from `"a:b"`.
pub fn parse_n_range(s: &str) -> Result<Vec<usize>> {
    let bad = || Error::InvalidArgument(format!("N-range `{s}` must be `a:b` with 1 <= a <= b"));
    let (a, b) = s.split_once(':').ok_or_else(bad)?;
    let a: usize = a.trim().parse().map_err(|_| bad())?;
    let b: usize = b.trim().parse().map_err(|_| bad())?;
    if a == 0 || a > b {
        return Err(bad());
    }
    let mut out = vec![a];
    while let Some(next) = out.last().and_then(|x| x.checked_mul(2)).filter(|&x| x <= b) {
        out.push(next);
    }
    Ok(out)
}

/// Exit code for an error category.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::Parse { .. } | Error::Json(_) | Error::Io(_) | Error::InvalidArgument(_) | Error::BadTolerance(_) => {
            EXIT_PARSE
        }
        Error::Invariant(_) | Error::NotHermitian { .. } | Error::NonHermitianMatrix(_) => EXIT_INVARIANT,
        Error::ResourceCap(_) => EXIT_RESOURCE,
        _ => EXIT_INTERNAL,
    }
}

/// Result of a command: text for standard output and the exit code.
#[derive(Clone, Debug, PartialEq)]
pub struct Outcome {
    pub stdout: String,
    pub exit_code: i32,
}

/// Writes `contents` to `path` via a temporary file in the same directory.
pub fn write_atomic(path: &Path, contents: &[u8]) -> Result<()> {
    let dir = match path.parent() {
        Some(p) if !p.as_os_str().is_empty() => p,
        _ => Path::new("."),
    };
    let mut tmp = tempfile::NamedTempFile::new_in(dir)?;
    tmp.write_all(contents)?;
    tmp.flush()?;
    tmp.persist(path).map_err(|e| Error::Io(e.error))?;
    Ok(())
}

fn emit(path: Option<&Path>, contents: String) -> Result<String> {
    match path {
        Some(p) => {
            write_atomic(p, contents.as_bytes())?;
            Ok(String::new())
        }
        None => Ok(contents),
    }
}

pub fn run(cfg: &RunConfig) -> Result<Outcome> {
    cfg.validate()?;
    match cfg.command {
        Command::Analyze => run_analyze(cfg).map(|(_, o)| o),
        Command::Sweep => run_sweep(cfg),
        Command::Decay => run_decay(cfg).map(|(_, o)| o),
        Command::Validate => run_validate(cfg),
    }
}

fn is_invariant_test(name: &str) -> bool {
    name == "top_component" || name == "dual_consistency"
}

/// Exit code determined by the verdicts alone.
pub fn analyze_exit_code(report: &TestReport) -> i32 {
    if report
        .tests
        .iter()
        .any(|t| !t.holds() && is_invariant_test(&t.name))
    {
        EXIT_INVARIANT
    } else if report.all_hold() {
        EXIT_OK
    } else {
        EXIT_DETECTED
    }
}

fn analyze_summary(report: &TestReport) -> String {
    let mut out = format!("{}  spec {}\n", report.operator, &report.spec_hash[..12]);
    let failing: Vec<_> = report.tests.iter().filter(|t| !t.holds()).collect();
    out.push_str(&format!(
        "{} tests, {} hold, {} do not\n",
        report.tests.len(),
        report.tests.len() - failing.len(),
        failing.len()
    ));
    for t in failing {
        let verdict = match t.verdict {
            Verdict::Holds => "holds",
            Verdict::Fails => "fails",
            Verdict::ContinuumDegenerate => "continuum-degenerate",
        };
        let alpha = match &t.witness {
            Some(Witness::Shift { alpha, .. }) => format!(" at alpha = ({})", alpha.join(", ")),
            _ => String::new(),
        };
        out.push_str(&format!("  {}: {verdict}{alpha}\n", t.name));
    }
    out
}

pub fn run_analyze(cfg: &RunConfig) -> Result<(TestReport, Outcome)> {
    cfg.validate()?;
    let spec = OperatorSpec::from_path(&cfg.input)?;
    let opts = AnalyzeOptions {
        tests: cfg.tests.clone().unwrap_or_else(|| TestKind::ALL.to_vec()),
        n_max: cfg.nmax_shifts,
        offsets: cfg.offsets.clone(),
        criteria: CriteriaConfig {
            zero_test: ZeroTestConfig::default(),
            probabilistic: cfg.probabilistic,
            ..Default::default()
        },
        seed: cfg.seed,
        assume_irreducible: cfg.assume_irreducible,
        ..Default::default()
    };
    let report = analyze(&spec, &opts)?;
    let json = report.to_json_string() + "\n";
    let mut stdout = analyze_summary(&report);
    if cfg.out.is_none() {
        stdout = json;
    } else {
        emit(cfg.out.as_deref(), json)?;
    }
    let exit_code = analyze_exit_code(&report);
    Ok((report, Outcome { stdout, exit_code }))
}

pub fn run_sweep(cfg: &RunConfig) -> Result<Outcome> {
    cfg.validate()?;
    let n = cfg
        .n
        .ok_or_else(|| Error::InvalidArgument("sweep requires --N".into()))?;
    let spec = OperatorSpec::from_path(&cfg.input)?;
    let grid = sweep_grid(&build_symbol(&spec), n, &cfg.sweep_options())?;
    let mut stdout = emit(cfg.out.as_deref(), grid.to_csv())?;
    if let Some(path) = &cfg.report {
        let ov = overlap_statistic(&grid, cfg.tau)?;
        write_atomic(path, (serde_json::to_string_pretty(&ov)? + "\n").as_bytes())?;
        stdout.push_str(&format!("N = {n}: rho = {}\n", ov.rho));
    }
    Ok(Outcome {
        stdout,
        exit_code: EXIT_OK,
    })
}

/// Decay table plus the symbolic period group of the same operator.
#[derive(Clone, Debug, Serialize)]
pub struct DecayOutput {
    pub operator: String,
    pub spec_hash: String,
    pub table: DecayTable,
    pub symbolic_period_group: Witness,
    /// Whether "non-decaying" agrees with a nontrivial support period group.
    pub consistent_with_symbolic: bool,
}

pub fn run_decay(cfg: &RunConfig) -> Result<(DecayOutput, Outcome)> {
    cfg.validate()?;
    let ns = cfg.grid_sizes()?;
    let spec = OperatorSpec::from_path(&cfg.input)?;
    let symbol = build_symbol(&spec);
    let offsets: Vec<f64> = cfg.offsets.iter().map(rational_to_f64).collect();
    let table = decay_series(&symbol, &ns, cfg.tau, &offsets, &cfg.sweep_options())?;
    let group = support_period_group(charpoly(&symbol)?.poly())?;
    let non_decaying = table.flag.as_deref() == Some("non-decaying: period suspected");
    let output = DecayOutput {
        operator: crate::variety::describe_operator(&spec),
        spec_hash: spec.content_hash(),
        consistent_with_symbolic: non_decaying == !group.is_trivial(),
        symbolic_period_group: Witness::period_group(&group),
        table,
    };
    let mut stdout = String::new();
    for row in &output.table.rows {
        stdout.push_str(&format!("N = {:>5}  rho = {}\n", row.n, row.rho));
    }
    if let Some(flag) = &output.table.flag {
        stdout.push_str(&format!("{flag} (support period group order {:?})\n", group.order));
    }
    let json = serde_json::to_string_pretty(&output)? + "\n";
    if cfg.out.is_some() {
        emit(cfg.out.as_deref(), json)?;
    } else {
        stdout = json;
    }
    if let Some(path) = &cfg.report {
        write_atomic(path, output.table.to_csv().as_bytes())?;
    }
    let exit_code = if non_decaying { EXIT_DETECTED } else { EXIT_OK };
    Ok((output, Outcome { stdout, exit_code }))
}

pub fn run_validate(cfg: &RunConfig) -> Result<Outcome> {
    let spec = OperatorSpec::from_path(&cfg.input)?;
    let symbol = build_symbol(&spec);
    if let HermitianCheck::Fail { row, col } = symbol.validate_hermitian() {
        return Err(Error::NotHermitian { row, col });
    }
    let canonical = spec.to_canonical_string() + "\n";
    let mut stdout = format!(
        "{}: valid, Q = {}, hash {}\n",
        crate::variety::describe_operator(&spec),
        spec.matrix_size(),
        spec.content_hash()
    );
    if cfg.out.is_some() {
        emit(cfg.out.as_deref(), canonical)?;
    } else {
        stdout.push_str(&canonical);
    }
    Ok(Outcome {
        stdout,
        exit_code: EXIT_OK,
    })
}
