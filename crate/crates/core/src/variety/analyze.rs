//! Runs a selection of symbolic tests on an operator and assembles the report.

use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;

use super::charpoly::charpoly;
use super::criteria::{c_alpha_sweep, no_nontrivial_periods_certificate, offset_test, reduced_shifts, squarefree_test, CriteriaConfig};
use super::report::{Method, TestRecord, TestReport, Verdict, Witness};
use super::schrodinger::{dual_consistency_check, top_component_check};
use crate::error::{Error, Result};
use crate::operator::{build_symbol, OperatorSpec};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum TestKind {
    Charpoly,
    Squarefree,
    CAlpha,
    Periods,
    Offset,
    TopComponent,
    DualConsistency,
}

impl TestKind {
    pub const ALL: [TestKind; 7] = [
        TestKind::Charpoly,
        TestKind::Squarefree,
        TestKind::CAlpha,
        TestKind::Periods,
        TestKind::Offset,
        TestKind::TopComponent,
        TestKind::DualConsistency,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            TestKind::Charpoly => "charpoly",
            TestKind::Squarefree => "squarefree",
            TestKind::CAlpha => "c_alpha",
            TestKind::Periods => "periods",
            TestKind::Offset => "offset",
            TestKind::TopComponent => "top_component",
            TestKind::DualConsistency => "dual_consistency",
        }
    }
}

impl FromStr for TestKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        TestKind::ALL
            .into_iter()
            .find(|k| k.as_str() == s.trim())
            .ok_or_else(|| {
                let names: Vec<&str> = TestKind::ALL.iter().map(|k| k.as_str()).collect();
                Error::InvalidArgument(format!("unknown test `{s}`; expected one of {}", names.join(", ")))
            })
    }
}

#[derive(Clone, Debug)]
pub struct AnalyzeOptions {
    pub tests: Vec<TestKind>,
    /// Largest denominator `N` for shift sweeps.
    pub n_max: u64,
    pub offsets: Vec<BigRational>,
    pub criteria: CriteriaConfig,
    pub seed: u64,
    /// Irreducibility of `P` for graph operators; always assumed for Schrödinger operators.
    pub assume_irreducible: bool,
    pub dual_samples: usize,
}

impl Default for AnalyzeOptions {
    fn default() -> Self {
        let r = |n: i64, d: i64| BigRational::new(BigInt::from(n), BigInt::from(d));
        AnalyzeOptions {
            tests: TestKind::ALL.to_vec(),
            n_max: 6,
            offsets: vec![r(1, 1), r(-1, 1), r(1, 2), r(-1, 2)],
            criteria: CriteriaConfig::default(),
            seed: 0,
            assume_irreducible: false,
            dual_samples: 100,
        }
    }
}

/// Short human-readable identifier of an operator.
pub fn describe_operator(spec: &OperatorSpec) -> String {
    match spec {
        OperatorSpec::Schrodinger(s) => {
            let q: Vec<String> = s.periods.iter().map(ToString::to_string).collect();
            format!("schrodinger q=({})", q.join(","))
        }
        OperatorSpec::Graph(g) => format!("graph d={} Q={} edges={}", g.dimension, g.vertices, g.edges.len()),
    }
}

pub fn analyze(spec: &OperatorSpec, opts: &AnalyzeOptions) -> Result<TestReport> {
    let selected = |k: TestKind| opts.tests.contains(&k);
    let mut tests = Vec::new();
    let needs_p = [TestKind::Charpoly, TestKind::Squarefree, TestKind::CAlpha, TestKind::Periods, TestKind::Offset]
        .into_iter()
        .any(selected);
    if needs_p {
        let p = charpoly(&build_symbol(spec))?.into_poly();
        if selected(TestKind::Charpoly) {
            tests.push(
                TestRecord::new("charpoly", Verdict::Holds, Method::Exact)
                    .with_witness(Witness::Polynomial { polynomial: p.to_string() }),
            );
        }
        let squarefree = if selected(TestKind::Squarefree) || selected(TestKind::Periods) {
            Some(squarefree_test(&p, &opts.criteria, opts.seed)?)
        } else {
            None
        };
        if selected(TestKind::Squarefree) {
            tests.push(squarefree.clone().expect("computed above"));
        }
        if selected(TestKind::Periods) {
            let irreducible = matches!(spec, OperatorSpec::Schrodinger(_)) || opts.assume_irreducible;
            let (_, rec) =
                no_nontrivial_periods_certificate(&p, irreducible, squarefree.as_ref().expect("computed above"))?;
            tests.push(rec);
        }
        if selected(TestKind::CAlpha) {
            tests.extend(c_alpha_sweep(&p, opts.n_max, &opts.criteria, opts.seed)?);
        }
        if selected(TestKind::Offset) {
            let mut shifts = vec![(vec![0i64; p.dim()], 1u64)];
            shifts.extend(reduced_shifts(p.dim(), opts.n_max));
            for a in &opts.offsets {
                for (m, n) in &shifts {
                    tests.push(offset_test(&p, a, m, *n)?);
                }
            }
        }
    }
    if let OperatorSpec::Schrodinger(s) = spec {
        if selected(TestKind::TopComponent) {
            tests.push(top_component_check(s, opts.n_max)?);
        }
        if selected(TestKind::DualConsistency) {
            tests.push(dual_consistency_check(s, opts.dual_samples, opts.seed)?);
        }
    }
    Ok(TestReport {
        tool_version: env!("CARGO_PKG_VERSION").to_string(),
        operator: describe_operator(spec),
        spec_hash: spec.content_hash(),
        seed: opts.seed,
        tests,
    })
}
