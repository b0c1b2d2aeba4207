//! Structured pass/fail records for identity checks.
//!
//! Verification operations never abort on the first failing identity; every
//! identity gets an entry, failures carry the exact residual.

use alloc::string::String;
use alloc::vec::Vec;

use crate::matrix::ParamMatrix;
use crate::rtt::NCPoly;
use crate::scalar::RationalFunction;

/// The nonzero object left over by a failed identity.
#[derive(Clone, PartialEq, Debug)]
pub enum Residual {
    Matrix(ParamMatrix),
    Scalar(RationalFunction),
    Poly(NCPoly),
    Note(String),
}

#[derive(Clone, Debug)]
pub struct ReportEntry {
    pub identity: String,
    pub passed: bool,
    pub residual: Option<Residual>,
    pub detail: Option<String>,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub suite: String,
    pub entries: Vec<ReportEntry>,
}

impl VerificationReport {
    pub fn new(suite: &str) -> Self {
        VerificationReport { suite: String::from(suite), entries: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.passed)
    }

    pub fn push(&mut self, identity: impl Into<String>, passed: bool, residual: Option<Residual>) {
        self.entries.push(ReportEntry {
            identity: identity.into(),
            passed,
            residual,
            detail: None,
        });
    }

    pub fn push_detailed(
        &mut self,
        identity: impl Into<String>,
        passed: bool,
        residual: Option<Residual>,
        detail: impl Into<String>,
    ) {
        self.entries.push(ReportEntry {
            identity: identity.into(),
            passed,
            residual,
            detail: Some(detail.into()),
        });
    }

    /// Records that a matrix residual must vanish.
    pub fn expect_zero_matrix(&mut self, identity: impl Into<String>, residual: ParamMatrix) {
        let passed = residual.is_zero();
        self.push(identity, passed, (!passed).then_some(Residual::Matrix(residual)));
    }

    /// Records that a matrix residual must be nonzero (witness-style check).
    pub fn expect_nonzero_matrix(&mut self, identity: impl Into<String>, value: &ParamMatrix) {
        self.push(identity, !value.is_zero(), None);
    }

    pub fn merge(&mut self, other: VerificationReport) {
        self.entries.extend(other.entries);
    }
}
