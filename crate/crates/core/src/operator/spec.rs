//! Operator descriptions and their JSON file format.
//!
//! ```json
//! { "kind": "schrodinger", "dimension": 1, "periods": [2],
//!   "potential": { "0": "1", "1": "-1" } }
//!
//! { "kind": "graph", "dimension": 1, "vertices": 2,
//!   "onsite": { "0": "0", "1": "0" },
//!   "edges": [ { "from": 0, "to": 0, "shift": [1], "weight": "1" }, … ] }
//! ```
//!
//! All numbers are exact: rationals are written `"p/q"` (or as JSON
//! integers), cyclotomic edge weights as `"cyc(N)[c0,c1,...]"`. Floating
//! literals are rejected.

use std::collections::BTreeMap;
use std::path::Path;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use serde_json::{Map, Value};
use sha2::{Digest, Sha256};

use crate::algebra::cyclotomic::{fmt_rational, parse_cyclotomic, parse_rational, Cyclotomic};
use crate::error::{Error, Result};

/// Discrete periodic Schrödinger operator `Δ + V` on `Z^d` with period lattice `q_1 Z ⊕ … ⊕ q_d Z`.
#[derive(Clone, Debug, PartialEq)]
pub struct SchrodingerSpec {
    pub periods: Vec<usize>,
    /// `V(n)` for `n` in the fundamental domain, row-major (last axis fastest).
    pub potential: Vec<BigRational>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub shift: Vec<i64>,
    pub weight: Cyclotomic,
}

/// General periodic graph operator given by its quotient graph.
#[derive(Clone, Debug, PartialEq)]
pub struct GraphSpec {
    pub dimension: usize,
    pub vertices: usize,
    pub onsite: Vec<BigRational>,
    pub edges: Vec<Edge>,
}

#[derive(Clone, Debug, PartialEq)]
pub enum OperatorSpec {
    Schrodinger(SchrodingerSpec),
    Graph(GraphSpec),
}

/// Row-major index of `n` in the box `∏ [0, q_j)`.
pub fn ravel(n: &[usize], q: &[usize]) -> usize {
    n.iter().zip(q).fold(0, |acc, (&x, &qj)| acc * qj + x)
}

/// Inverse of [`ravel`].
pub fn unravel(mut idx: usize, q: &[usize]) -> Vec<usize> {
    let mut out = vec![0; q.len()];
    for j in (0..q.len()).rev() {
        out[j] = idx % q[j];
        idx /= q[j];
    }
    out
}

impl SchrodingerSpec {
    pub fn new(periods: Vec<usize>, potential: Vec<BigRational>) -> Result<Self> {
        let spec = SchrodingerSpec { periods, potential };
        spec.validate()?;
        Ok(spec)
    }

    /// Integer potential convenience constructor.
    pub fn with_integer_potential(periods: Vec<usize>, potential: &[i64]) -> Result<Self> {
        Self::new(
            periods,
            potential
                .iter()
                .map(|&v| BigRational::from_integer(BigInt::from(v)))
                .collect(),
        )
    }

    pub fn dimension(&self) -> usize {
        self.periods.len()
    }

    /// `Q = q_1 ⋯ q_d`.
    pub fn cell_size(&self) -> usize {
        self.periods.iter().product()
    }

    pub fn potential_at(&self, n: &[usize]) -> &BigRational {
        &self.potential[ravel(n, &self.periods)]
    }

    fn validate(&self) -> Result<()> {
        if self.periods.is_empty() {
            return Err(Error::parse("periods", "at least one period is required"));
        }
        if self.periods.contains(&0) {
            return Err(Error::parse("periods", "periods must be positive"));
        }
        if self.potential.len() != self.cell_size() {
            return Err(Error::parse(
                "potential",
                format!(
                    "expected {} values (one per fundamental-domain site), found {}",
                    self.cell_size(),
                    self.potential.len()
                ),
            ));
        }
        Ok(())
    }
}

impl Edge {
    pub fn new(from: usize, to: usize, shift: Vec<i64>, weight: Cyclotomic) -> Self {
        Edge {
            from,
            to,
            shift,
            weight,
        }
    }

    /// The edge that makes the symbol Hermitian together with `self`.
    pub fn reversed(&self) -> Edge {
        Edge {
            from: self.to,
            to: self.from,
            shift: self.shift.iter().map(|s| -s).collect(),
            weight: self.weight.conj(),
        }
    }

    fn describe(&self) -> String {
        format!(
            "(from {}, to {}, shift {:?}, weight {})",
            self.from, self.to, self.shift, self.weight
        )
    }
}

impl GraphSpec {
    pub fn new(dimension: usize, vertices: usize, onsite: Vec<BigRational>, edges: Vec<Edge>) -> Result<Self> {
        let spec = GraphSpec {
            dimension,
            vertices,
            onsite,
            edges,
        };
        spec.validate()?;
        Ok(spec)
    }

    fn validate(&self) -> Result<()> {
        if self.dimension == 0 {
            return Err(Error::parse("dimension", "must be positive"));
        }
        if self.vertices == 0 {
            return Err(Error::parse("vertices", "must be positive"));
        }
        if self.onsite.len() != self.vertices {
            return Err(Error::parse(
                "onsite",
                format!("expected {} values, found {}", self.vertices, self.onsite.len()),
            ));
        }
        for (i, e) in self.edges.iter().enumerate() {
            if e.from >= self.vertices || e.to >= self.vertices {
                return Err(Error::parse(
                    format!("edges[{i}]"),
                    format!("vertex out of range 0..{}", self.vertices),
                ));
            }
            if e.shift.len() != self.dimension {
                return Err(Error::parse(
                    format!("edges[{i}].shift"),
                    format!("expected length {}, found {}", self.dimension, e.shift.len()),
                ));
            }
        }
        // Each edge must be matched by its conjugate reverse, with multiplicity.
        for e in &self.edges {
            let rev = e.reversed();
            let count = |x: &Edge| self.edges.iter().filter(|y| *y == x).count();
            if count(e) != count(&rev) {
                return Err(Error::Invariant(format!(
                    "edge {} has no matching conjugate edge {}",
                    e.describe(),
                    rev.describe()
                )));
            }
        }
        Ok(())
    }
}

impl OperatorSpec {
    pub fn dimension(&self) -> usize {
        match self {
            OperatorSpec::Schrodinger(s) => s.dimension(),
            OperatorSpec::Graph(g) => g.dimension,
        }
    }

    /// Size `Q` of the Floquet matrix.
    pub fn matrix_size(&self) -> usize {
        match self {
            OperatorSpec::Schrodinger(s) => s.cell_size(),
            OperatorSpec::Graph(g) => g.vertices,
        }
    }

    pub fn kind(&self) -> &'static str {
        match self {
            OperatorSpec::Schrodinger(_) => "schrodinger",
            OperatorSpec::Graph(_) => "graph",
        }
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let value: Value = serde_json::from_str(text).map_err(|e| {
            Error::parse(
                format!("line {}, column {}", e.line(), e.column()),
                e.to_string(),
            )
        })?;
        Self::from_json(&value)
    }

    pub fn from_path(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path)?;
        Self::from_json_str(&text)
    }

    pub fn from_json(value: &Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::parse("<root>", "expected a JSON object"))?;
        let kind = obj
            .get("kind")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::parse("kind", "missing or not a string"))?;
        let dimension = get_usize(obj, "dimension")?;
        match kind {
            "schrodinger" => {
                check_keys(obj, &["kind", "dimension", "periods", "potential", "name"])?;
                let periods = get_usize_list(obj, "periods")?;
                if periods.len() != dimension {
                    return Err(Error::parse(
                        "periods",
                        format!("expected {dimension} entries, found {}", periods.len()),
                    ));
                }
                let pot = obj
                    .get("potential")
                    .and_then(Value::as_object)
                    .ok_or_else(|| Error::parse("potential", "missing or not an object"))?;
                let q: usize = periods.iter().product();
                let mut potential: Vec<Option<BigRational>> = vec![None; q];
                for (key, v) in pot {
                    let field = format!("potential[\"{key}\"]");
                    let idx = parse_index(key, &periods).ok_or_else(|| {
                        Error::parse(&field, "key must be comma-separated indices inside the period box")
                    })?;
                    let val = exact_rational(v, &field)?;
                    if potential[idx].replace(val).is_some() {
                        return Err(Error::parse(field, "duplicate site"));
                    }
                }
                let missing: Vec<String> = potential
                    .iter()
                    .enumerate()
                    .filter(|(_, v)| v.is_none())
                    .map(|(i, _)| index_key(&unravel(i, &periods)))
                    .collect();
                if !missing.is_empty() {
                    return Err(Error::parse(
                        "potential",
                        format!("missing sites: {}", missing.join("; ")),
                    ));
                }
                let potential = potential.into_iter().map(Option::unwrap).collect();
                Ok(OperatorSpec::Schrodinger(SchrodingerSpec::new(periods, potential)?))
            }
            "graph" => {
                check_keys(obj, &["kind", "dimension", "vertices", "onsite", "edges", "name"])?;
                let vertices = get_usize(obj, "vertices")?;
                let mut onsite = vec![BigRational::zero(); vertices];
                match obj.get("onsite") {
                    None => {}
                    Some(Value::Object(m)) => {
                        for (key, v) in m {
                            let field = format!("onsite[\"{key}\"]");
                            let i: usize = key
                                .trim()
                                .parse()
                                .ok()
                                .filter(|&i| i < vertices)
                                .ok_or_else(|| Error::parse(&field, "not a vertex index"))?;
                            onsite[i] = exact_rational(v, &field)?;
                        }
                    }
                    Some(Value::Array(a)) => {
                        if a.len() != vertices {
                            return Err(Error::parse(
                                "onsite",
                                format!("expected {vertices} values, found {}", a.len()),
                            ));
                        }
                        for (i, v) in a.iter().enumerate() {
                            onsite[i] = exact_rational(v, &format!("onsite[{i}]"))?;
                        }
                    }
                    Some(_) => return Err(Error::parse("onsite", "expected an object or array")),
                }
                let raw_edges = match obj.get("edges") {
                    None => Vec::new(),
                    Some(Value::Array(a)) => a.clone(),
                    Some(_) => return Err(Error::parse("edges", "expected an array")),
                };
                let mut edges = Vec::with_capacity(raw_edges.len());
                for (i, e) in raw_edges.iter().enumerate() {
                    let field = format!("edges[{i}]");
                    let eo = e
                        .as_object()
                        .ok_or_else(|| Error::parse(&field, "expected an object"))?;
                    check_keys(eo, &["from", "to", "shift", "weight"]).map_err(|err| match err {
                        Error::Parse { message, .. } => Error::parse(&field, message),
                        other => other,
                    })?;
                    let from = get_usize(eo, "from").map_err(|_| Error::parse(format!("{field}.from"), "expected a vertex index"))?;
                    let to = get_usize(eo, "to").map_err(|_| Error::parse(format!("{field}.to"), "expected a vertex index"))?;
                    let shift = eo
                        .get("shift")
                        .and_then(Value::as_array)
                        .and_then(|a| a.iter().map(Value::as_i64).collect::<Option<Vec<_>>>())
                        .ok_or_else(|| Error::parse(format!("{field}.shift"), "expected an integer array"))?;
                    let weight = match eo.get("weight") {
                        None => Cyclotomic::from_integer(1),
                        Some(v) => exact_cyclotomic(v, &format!("{field}.weight"))?,
                    };
                    edges.push(Edge::new(from, to, shift, weight));
                }
                Ok(OperatorSpec::Graph(GraphSpec::new(dimension, vertices, onsite, edges)?))
            }
            other => Err(Error::parse("kind", format!("unknown kind `{other}`"))),
        }
    }

    /// Canonical JSON form; parsing it reproduces an identical spec.
    pub fn to_json(&self) -> Value {
        let mut obj = Map::new();
        obj.insert("kind".into(), Value::from(self.kind()));
        obj.insert("dimension".into(), Value::from(self.dimension()));
        match self {
            OperatorSpec::Schrodinger(s) => {
                obj.insert("periods".into(), Value::from(s.periods.clone()));
                let mut pot = Map::new();
                for (i, v) in s.potential.iter().enumerate() {
                    pot.insert(index_key(&unravel(i, &s.periods)), Value::from(fmt_rational(v)));
                }
                obj.insert("potential".into(), Value::Object(pot));
            }
            OperatorSpec::Graph(g) => {
                obj.insert("vertices".into(), Value::from(g.vertices));
                let onsite: BTreeMap<String, Value> = g
                    .onsite
                    .iter()
                    .enumerate()
                    .map(|(i, v)| (i.to_string(), Value::from(fmt_rational(v))))
                    .collect();
                obj.insert("onsite".into(), Value::Object(onsite.into_iter().collect()));
                let edges: Vec<Value> = g
                    .edges
                    .iter()
                    .map(|e| {
                        serde_json::json!({
                            "from": e.from,
                            "to": e.to,
                            "shift": e.shift,
                            "weight": e.weight.to_string(),
                        })
                    })
                    .collect();
                obj.insert("edges".into(), Value::Array(edges));
            }
        }
        Value::Object(obj)
    }

    pub fn to_canonical_string(&self) -> String {
        serde_json::to_string_pretty(&self.to_json()).expect("spec serialization")
    }

    /// SHA-256 of the canonical JSON, hex encoded.
    pub fn content_hash(&self) -> String {
        let digest = Sha256::digest(self.to_canonical_string().as_bytes());
        hex::encode(digest)
    }
}

fn index_key(n: &[usize]) -> String {
    n.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

fn parse_index(key: &str, periods: &[usize]) -> Option<usize> {
    let parts: Vec<usize> = key
        .split(',')
        .map(|p| p.trim().parse().ok())
        .collect::<Option<_>>()?;
    if parts.len() != periods.len() || parts.iter().zip(periods).any(|(x, q)| x >= q) {
        return None;
    }
    Some(ravel(&parts, periods))
}

fn check_keys(obj: &Map<String, Value>, allowed: &[&str]) -> Result<()> {
    for k in obj.keys() {
        if !allowed.contains(&k.as_str()) {
            return Err(Error::parse(k.clone(), "unknown field"));
        }
    }
    Ok(())
}

fn get_usize(obj: &Map<String, Value>, key: &str) -> Result<usize> {
    obj.get(key)
        .and_then(Value::as_u64)
        .map(|x| x as usize)
        .ok_or_else(|| Error::parse(key, "missing or not a non-negative integer"))
}

fn get_usize_list(obj: &Map<String, Value>, key: &str) -> Result<Vec<usize>> {
    obj.get(key)
        .and_then(Value::as_array)
        .and_then(|a| a.iter().map(|v| v.as_u64().map(|x| x as usize)).collect())
        .ok_or_else(|| Error::parse(key, "expected an array of non-negative integers"))
}

fn float_rejection(field: &str, literal: &str) -> Error {
    let hint = literal
        .parse::<f64>()
        .ok()
        .and_then(|x| {
            // Suggest a short exact form for terminating decimals.
            let digits = literal.split_once('.').map(|(_, f)| f.len()).unwrap_or(0);
            let den = 10i64.checked_pow(digits as u32)?;
            let num = (x * den as f64).round() as i64;
            let r = BigRational::new(num.into(), den.into());
            Some(format!("; write it as \"{}\"", fmt_rational(&r)))
        })
        .unwrap_or_default();
    Error::parse(
        field,
        format!("floating literal {literal} rejected, values must be exact rationals \"p/q\"{hint}"),
    )
}

fn exact_rational(v: &Value, field: &str) -> Result<BigRational> {
    match v {
        Value::String(s) => parse_rational(s).ok_or_else(|| {
            if s.contains('.') || s.contains('e') || s.contains('E') {
                float_rejection(field, s)
            } else {
                Error::parse(field, format!("`{s}` is not a rational \"p/q\""))
            }
        }),
        Value::Number(n) => match n.as_i64() {
            Some(i) => Ok(BigRational::from_integer(BigInt::from(i))),
            None => Err(float_rejection(field, &n.to_string())),
        },
        _ => Err(Error::parse(field, "expected a rational string \"p/q\"")),
    }
}

fn exact_cyclotomic(v: &Value, field: &str) -> Result<Cyclotomic> {
    match v {
        Value::String(s) if s.trim_start().starts_with("cyc(") => parse_cyclotomic(s)
            .ok_or_else(|| Error::parse(field, format!("`{s}` is not of the form cyc(N)[c0,c1,...]"))),
        other => exact_rational(other, field).map(Cyclotomic::from_rational),
    }
}
