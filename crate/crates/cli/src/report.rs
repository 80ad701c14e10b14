use std::collections::BTreeMap;
use std::fmt::Write as _;

use monocurve::closedform::BettiTable;
use monocurve::curve::ArithmeticSequence;
use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SequenceEcho {
    pub m0: u64,
    pub d: u64,
    pub n: usize,
    pub a: u64,
    pub b: u64,
}

impl From<&ArithmeticSequence> for SequenceEcho {
    fn from(s: &ArithmeticSequence) -> Self {
        SequenceEcho { m0: s.m0(), d: s.d(), n: s.n(), a: s.a(), b: s.b() }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    B1En,
    BnCone,
    Gor4Closedform,
    Oracle,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::B1En => "b1-en",
            Method::BnCone => "bn-cone",
            Method::Gor4Closedform => "gor4-closedform",
            Method::Oracle => "oracle",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BettiStep {
    pub step: usize,
    pub shifts: Vec<i64>,
}

pub fn betti_steps(table: &BettiTable) -> Vec<BettiStep> {
    table.rows().iter().map(|(&step, shifts)| BettiStep { step, shifts: shifts.clone() }).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOutcome {
    pub passed: bool,
    pub witness: Option<String>,
}

impl CheckOutcome {
    pub fn pass() -> Self {
        CheckOutcome { passed: true, witness: None }
    }

    pub fn fail(witness: impl Into<String>) -> Self {
        CheckOutcome { passed: false, witness: Some(witness.into()) }
    }

    pub fn from_bool(ok: bool, witness: impl FnOnce() -> String) -> Self {
        if ok {
            Self::pass()
        } else {
            Self::fail(witness())
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDump {
    pub step: usize,
    pub rows: Vec<Vec<String>>,
}

/// Result of `resolve` / `verify`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub sequence: SequenceEcho,
    pub method: Method,
    pub field: String,
    pub betti: Vec<BettiStep>,
    pub checks: BTreeMap<String, CheckOutcome>,
    pub timing_ms: BTreeMap<String, u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matrices: Option<Vec<MatrixDump>>,
}

impl RunReport {
    pub fn betti_numbers(&self) -> Vec<usize> {
        self.betti.iter().map(|s| s.shifts.len()).collect()
    }

    pub fn all_checks_passed(&self) -> bool {
        self.checks.values().all(|c| c.passed)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let s = &self.sequence;
        let mut out = String::new();
        let _ = writeln!(out, "sequence: m0={} d={} n={} (a={}, b={})", s.m0, s.d, s.n, s.a, s.b);
        let _ = writeln!(out, "method: {}   field: {}", self.method.as_str(), self.field);
        let betti: Vec<String> = self.betti_numbers().iter().map(ToString::to_string).collect();
        let _ = writeln!(out, "betti: {}", betti.join(" "));
        for step in &self.betti {
            let shifts: Vec<String> = step.shifts.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "  step {}: {}", step.step, shifts.join(" "));
        }
        if !self.checks.is_empty() {
            let _ = writeln!(out, "checks:");
            for (name, c) in &self.checks {
                match (&c.passed, &c.witness) {
                    (true, _) => {
                        let _ = writeln!(out, "  {name}: pass");
                    }
                    (false, Some(w)) => {
                        let _ = writeln!(out, "  {name}: FAIL ({w})");
                    }
                    (false, None) => {
                        let _ = writeln!(out, "  {name}: FAIL");
                    }
                }
            }
        }
        for (phase, ms) in &self.timing_ms {
            let _ = writeln!(out, "time {phase}: {ms} ms");
        }
        if let Some(ms) = &self.matrices {
            for m in ms {
                let _ = writeln!(out, "d_{}:", m.step);
                for row in &m.rows {
                    let _ = writeln!(out, "  [{}]", row.join(", "));
                }
            }
        }
        out
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CellStatus {
    Ok,
    Invalid,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanCell {
    pub a: u64,
    pub d: u64,
    pub m0: u64,
    pub status: CellStatus,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub betti: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counterexample {
    pub first: (u64, u64),
    pub second: (u64, u64),
}

/// Result of `scan`: the ungraded Betti vector for every valid `(a, d)`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScanReport {
    pub n: usize,
    pub b: u64,
    pub field: String,
    pub cells: Vec<ScanCell>,
    /// All computed cells share one vector (and at least one was computed).
    pub uniform: bool,
    pub common: Option<Vec<u64>>,
    pub counterexample: Option<Counterexample>,
}

impl ScanReport {
    pub fn from_cells(n: usize, b: u64, field: String, cells: Vec<ScanCell>) -> Self {
        let computed: Vec<&ScanCell> = cells.iter().filter(|c| c.status == CellStatus::Ok).collect();
        let mut counterexample = None;
        if let Some(first) = computed.first() {
            if let Some(other) = computed.iter().find(|c| c.betti != first.betti) {
                counterexample = Some(Counterexample { first: (first.a, first.d), second: (other.a, other.d) });
            }
        }
        let uniform = !computed.is_empty() && counterexample.is_none();
        let common = if uniform { computed[0].betti.clone() } else { None };
        ScanReport { n, b, field, cells, uniform, common, counterexample }
    }

    pub fn skipped(&self) -> impl Iterator<Item = &ScanCell> {
        self.cells.iter().filter(|c| c.status == CellStatus::Skipped)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "scan n={} b={} field={}", self.n, self.b, self.field);
        for c in &self.cells {
            let detail = match (&c.status, &c.betti, &c.reason) {
                (CellStatus::Ok, Some(b), _) => {
                    let v: Vec<String> = b.iter().map(ToString::to_string).collect();
                    format!("betti {}", v.join(" "))
                }
                (CellStatus::Invalid, _, Some(r)) => format!("invalid: {r}"),
                (CellStatus::Skipped, _, Some(r)) => format!("skipped: {r}"),
                _ => String::new(),
            };
            let _ = writeln!(out, "  a={} d={} m0={}: {detail}", c.a, c.d, c.m0);
        }
        match (&self.common, &self.counterexample) {
            (Some(v), _) => {
                let v: Vec<String> = v.iter().map(ToString::to_string).collect();
                let _ = writeln!(out, "uniform: {}", v.join(" "));
            }
            (None, Some(ce)) => {
                let _ = writeln!(
                    out,
                    "not uniform: (a,d)=({},{}) and ({},{}) differ",
                    ce.first.0, ce.first.1, ce.second.0, ce.second.1
                );
            }
            (None, None) => {
                let _ = writeln!(out, "no cell computed");
            }
        }
        out
    }
}
