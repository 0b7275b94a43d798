use std::time::Duration;

use serde::{Deserialize, Serialize};

use super::IdentityId;
use crate::poly::BivarPoly;

/// Parameter tuple `(n, j, a, b)`; `0` marks a parameter the identity does
/// not use.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[u32; 4]", into = "[u32; 4]")]
pub struct GridPoint {
    pub n: u32,
    pub j: u32,
    pub a: u32,
    pub b: u32,
}

impl GridPoint {
    pub fn new(n: usize, j: u32, a: u32, b: u32) -> Self {
        GridPoint {
            n: n as u32,
            j,
            a,
            b,
        }
    }
}

impl From<[u32; 4]> for GridPoint {
    fn from([n, j, a, b]: [u32; 4]) -> Self {
        GridPoint { n, j, a, b }
    }
}

impl From<GridPoint> for [u32; 4] {
    fn from(g: GridPoint) -> Self {
        [g.n, g.j, g.a, g.b]
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    pub n: u32,
    pub j: u32,
    pub a: u32,
    pub b: u32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

impl Params {
    pub fn new(grid: GridPoint) -> Self {
        Params {
            n: grid.n,
            j: grid.j,
            a: grid.a,
            b: grid.b,
            detail: None,
        }
    }

    pub fn with_detail(mut self, detail: impl Into<String>) -> Self {
        self.detail = Some(detail.into());
        self
    }
}

/// A case where the two sides differ, with both sides as witnesses.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub params: Params,
    pub lhs: BivarPoly,
    pub rhs: BivarPoly,
}

/// An outcome recorded without affecting the pass/fail status.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Observation {
    pub label: String,
    pub holds: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub params: Option<Params>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lhs: Option<BivarPoly>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub rhs: Option<BivarPoly>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "UPPERCASE")]
pub enum Status {
    Pass,
    Fail,
    /// Part of the record schema. Observations never change a report's
    /// status, so [`IdentityReport::status`] does not produce this.
    Observational,
}

/// Outcome of one identity check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdentityReport {
    pub identity: IdentityId,
    pub grid: Vec<GridPoint>,
    pub failures: Vec<Failure>,
    pub observations: Vec<Observation>,
    pub notes: Vec<String>,
    pub elapsed: Duration,
}

impl IdentityReport {
    pub fn new(identity: IdentityId) -> Self {
        IdentityReport {
            identity,
            grid: Vec::new(),
            failures: Vec::new(),
            observations: Vec::new(),
            notes: Vec::new(),
            elapsed: Duration::ZERO,
        }
    }

    pub fn status(&self) -> Status {
        if self.failures.is_empty() {
            Status::Pass
        } else {
            Status::Fail
        }
    }

    pub fn passed(&self) -> bool {
        self.status() != Status::Fail
    }

    pub(crate) fn tested(&mut self, point: GridPoint) {
        self.grid.push(point);
    }

    /// Records a failure unless `lhs == rhs`; returns whether they agreed.
    pub(crate) fn expect_eq(&mut self, params: Params, lhs: &BivarPoly, rhs: &BivarPoly) -> bool {
        if lhs == rhs {
            return true;
        }
        self.failures.push(Failure {
            params,
            lhs: lhs.clone(),
            rhs: rhs.clone(),
        });
        false
    }

    pub(crate) fn note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub(crate) fn observe(&mut self, obs: Observation) {
        self.observations.push(obs);
    }

    /// Serializable form. `elapsed_ms` is the only field that varies
    /// between identical runs.
    pub fn to_record(&self) -> ReportRecord {
        ReportRecord {
            identity: self.identity.name().to_string(),
            grid: self.grid.clone(),
            status: self.status(),
            failures: self.failures.clone(),
            observations: self.observations.clone(),
            notes: self.notes.clone(),
            elapsed_ms: self.elapsed.as_millis() as u64,
        }
    }
}

/// Wire form of a report.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub identity: String,
    pub grid: Vec<GridPoint>,
    pub status: Status,
    pub failures: Vec<Failure>,
    #[serde(default)]
    pub observations: Vec<Observation>,
    #[serde(default)]
    pub notes: Vec<String>,
    pub elapsed_ms: u64,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{kernel_sequence, Kernel};

    #[test]
    fn a_wrong_identity_is_reported() {
        // Drops the x1^k factor from the binomial expansion.
        let mut report = IdentityReport::new(IdentityId::GenoBinom);
        let seq = kernel_sequence(Kernel::ClassicalGenocchi, 1, 6, true);
        for (n, p) in seq.iter().enumerate() {
            let g = GridPoint::new(n, 0, 1, 0);
            report.tested(g);
            let lhs = p.substitute(&(&BivarPoly::x() + &BivarPoly::y()), &BivarPoly::zero());
            report.expect_eq(Params::new(g), &lhs, p);
        }
        assert_eq!(report.status(), Status::Fail);
        assert_eq!(report.failures[0].params.n, 2);
        let record = report.to_record();
        assert_eq!(record.status, Status::Fail);
        let json = serde_json::to_string(&record).unwrap();
        assert!(json.contains("\"FAIL\""));
        assert_eq!(serde_json::from_str::<ReportRecord>(&json).unwrap(), record);
    }

    #[test]
    fn observations_do_not_change_status() {
        let mut report = IdentityReport::new(IdentityId::HeatEquation);
        report.observe(Observation {
            label: "always false".into(),
            holds: false,
            params: None,
            lhs: None,
            rhs: None,
        });
        assert_eq!(report.status(), Status::Pass);
    }
}
