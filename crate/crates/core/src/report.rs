//! The report document written by the verifier front ends.

use crate::verify::VerificationReport;
use crate::TOOL_VERSION;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub passed: usize,
    pub failed: usize,
}

impl Summary {
    pub fn of(cases: &[VerificationReport]) -> Self {
        let passed = cases.iter().filter(|c| c.passed).count();
        Summary {
            total: cases.len(),
            passed,
            failed: cases.len() - passed,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub tool_version: String,
    pub cases: Vec<VerificationReport>,
    pub summary: Summary,
    pub wall_time_seconds: f64,
}

impl ReportDocument {
    pub fn new(cases: Vec<VerificationReport>, wall_time_seconds: f64) -> Self {
        ReportDocument {
            tool_version: TOOL_VERSION.to_string(),
            summary: Summary::of(&cases),
            cases,
            wall_time_seconds,
        }
    }

    /// Whether the summary counts agree with the case list.
    pub fn is_consistent(&self) -> bool {
        self.summary == Summary::of(&self.cases)
    }

    pub fn all_passed(&self) -> bool {
        self.summary.failed == 0
    }
}
