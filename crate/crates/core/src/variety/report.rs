//! Machine-readable test verdicts.

use serde::Serialize;

use crate::algebra::cyclotomic::fmt_rational;
use crate::algebra::lattice::shift_as_fraction;
use crate::algebra::PeriodGroup;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Fails,
    ContinuumDegenerate,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Exact,
    Probabilistic,
}

/// Evidence attached to a verdict. Polynomials are rendered canonically.
#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Witness {
    Polynomial {
        polynomial: String,
    },
    /// Integer point `z` where a polynomial evaluates to `value ≠ 0`.
    EvaluationPoint {
        point: Vec<String>,
        value: String,
    },
    Shift {
        alpha: Vec<String>,
        m: Vec<i64>,
        n: u64,
        certificate: String,
    },
    PeriodGroup {
        order: Option<u64>,
        continuum_rank: usize,
        generators: Vec<Vec<String>>,
    },
    CoefficientPair {
        original: String,
        shifted: String,
        difference: String,
    },
    Comparison {
        left: String,
        right: String,
    },
}

impl Witness {
    pub fn shift(m: &[i64], n: u64, certificate: impl Into<String>) -> Self {
        Witness::Shift {
            alpha: shift_as_fraction(m, n).iter().map(fmt_rational).collect(),
            m: m.to_vec(),
            n,
            certificate: certificate.into(),
        }
    }

    pub fn period_group(g: &PeriodGroup) -> Self {
        Witness::PeriodGroup {
            order: g.order,
            continuum_rank: g.continuum_rank,
            generators: g
                .generators
                .iter()
                .map(|v| v.iter().map(fmt_rational).collect())
                .collect(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TestRecord {
    pub name: String,
    pub verdict: Verdict,
    pub method: Method,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Witness>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub probabilistic_bound: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub assumption: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl TestRecord {
    pub fn new(name: impl Into<String>, verdict: Verdict, method: Method) -> Self {
        TestRecord {
            name: name.into(),
            verdict,
            method,
            witness: None,
            probabilistic_bound: None,
            assumption: None,
            detail: None,
        }
    }

    pub fn with_witness(mut self, w: Witness) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn with_bound(mut self, bound: f64) -> Self {
        self.probabilistic_bound = Some(bound);
        self
    }

    pub fn with_assumption(mut self, a: impl Into<String>) -> Self {
        self.assumption = Some(a.into());
        self
    }

    pub fn with_detail(mut self, d: impl Into<String>) -> Self {
        self.detail = Some(d.into());
        self
    }

    pub fn holds(&self) -> bool {
        self.verdict == Verdict::Holds
    }
}

/// All verdicts for one operator, with the data needed to reproduce them.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TestReport {
    pub tool_version: String,
    pub operator: String,
    pub spec_hash: String,
    pub seed: u64,
    pub tests: Vec<TestRecord>,
}

impl TestReport {
    pub fn all_hold(&self) -> bool {
        self.tests.iter().all(TestRecord::holds)
    }

    pub fn find(&self, name: &str) -> Option<&TestRecord> {
        self.tests.iter().find(|t| t.name == name)
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization")
    }
}
