//! Check results and suite reports (text and JSON).

use std::fmt;
use std::time::Instant;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub id: String,
    /// short name of the claim being checked, e.g. "critical-ball-cover"
    pub anchor: String,
    pub status: Status,
    pub witness: Value,
}

impl Check {
    pub fn new(id: &str, anchor: &str, ok: bool, witness: Value) -> Self {
        let status = if ok { Status::Pass } else { Status::Fail };
        Check { id: id.into(), anchor: anchor.into(), status, witness }
    }

    pub fn skip(id: &str, anchor: &str, why: &str) -> Self {
        Check { id: id.into(), anchor: anchor.into(), status: Status::Skip, witness: Value::String(why.into()) }
    }

    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SuiteReport {
    pub suite: String,
    pub claim: String,
    pub checks: Vec<Check>,
    pub elapsed_ms: u128,
    /// A failure here blocks dependent suites. Comparisons against printed
    /// reference values do not gate: the computed data stays usable.
    #[serde(default = "yes")]
    pub gating: bool,
}

fn yes() -> bool {
    true
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    pub fn failures(&self) -> Vec<&Check> {
        self.checks.iter().filter(|c| c.status == Status::Fail).collect()
    }

    pub fn check(&self, id: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.id == id)
    }
}

/// Collects checks with timing.
pub struct Recorder {
    suite: String,
    claim: String,
    start: Instant,
    checks: Vec<Check>,
    gating: bool,
}

impl Recorder {
    pub fn new(suite: &str, claim: &str) -> Self {
        Recorder { suite: suite.into(), claim: claim.into(), start: Instant::now(), checks: Vec::new(), gating: true }
    }

    pub fn check(&mut self, id: &str, anchor: &str, ok: bool, witness: Value) -> bool {
        self.checks.push(Check::new(id, anchor, ok, witness));
        ok
    }

    pub fn push(&mut self, c: Check) {
        self.checks.push(c);
    }

    pub fn non_gating(mut self) -> Self {
        self.gating = false;
        self
    }

    pub fn finish(self) -> SuiteReport {
        SuiteReport {
            suite: self.suite,
            claim: self.claim,
            checks: self.checks,
            elapsed_ms: self.start.elapsed().as_millis(),
            gating: self.gating,
        }
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "== {} ({}) {} ms", self.suite, self.claim, self.elapsed_ms)?;
        for c in &self.checks {
            let tag = match c.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skip => "SKIP",
            };
            writeln!(f, "  [{tag}] {:<40} {:<28} {}", c.id, c.anchor, c.witness)?;
        }
        Ok(())
    }
}
