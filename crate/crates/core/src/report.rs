//! Structured reports emitted by the property suites.

use serde::Serialize;

/// Outcome of one named check run over a batch of samples.
#[derive(Debug, Clone, Serialize)]
pub struct AxiomReport {
    pub axiom: String,
    pub samples: u64,
    pub failures: u64,
    pub max_residual: f64,
}

impl AxiomReport {
    pub fn pass(&self) -> bool {
        self.failures == 0
    }
}

/// Running tally for an [`AxiomReport`].
#[derive(Debug, Clone)]
pub struct AxiomTally {
    axiom: String,
    samples: u64,
    failures: u64,
    max_residual: f64,
}

impl AxiomTally {
    pub fn new(axiom: impl Into<String>) -> Self {
        AxiomTally {
            axiom: axiom.into(),
            samples: 0,
            failures: 0,
            max_residual: 0.0,
        }
    }

    pub fn record(&mut self, ok: bool, residual: f64) {
        self.samples += 1;
        if !ok {
            self.failures += 1;
        }
        if residual.is_nan() {
            self.max_residual = f64::NAN;
        } else {
            self.max_residual = self.max_residual.max(residual);
        }
    }

    pub fn finish(self) -> AxiomReport {
        AxiomReport {
            axiom: self.axiom,
            samples: self.samples,
            failures: self.failures,
            max_residual: self.max_residual,
        }
    }
}

/// A group of checks run under one heading.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub suite: String,
    pub checks: Vec<AxiomReport>,
    pub pass: bool,
}

impl SuiteReport {
    pub fn new(suite: impl Into<String>, checks: Vec<AxiomReport>) -> Self {
        let pass = checks.iter().all(AxiomReport::pass);
        SuiteReport {
            suite: suite.into(),
            checks,
            pass,
        }
    }
}

/// Per-character outcome of a diagonalization check.
#[derive(Debug, Clone, Serialize)]
pub struct DiagCheck {
    pub k: usize,
    pub hypothesis_residual: f64,
    pub eigen_residual: f64,
    pub pass: bool,
}

/// Full diagonalization report: the hypothesis status plus one row per
/// group element.
#[derive(Debug, Clone, Serialize)]
pub struct DiagReport {
    pub hypothesis_ok: bool,
    pub hypothesis_residual: f64,
    pub checks: Vec<DiagCheck>,
    pub pass: bool,
}

/// Outcome of the natural-basis support-confinement witness.
#[derive(Debug, Clone, Serialize)]
pub struct DegeneracyReport {
    /// Entry of the target matrix outside the identity row that natural-basis
    /// combinations cannot reach.
    pub witness_row: usize,
    pub witness_col: usize,
    /// Number of `(a, basis element)` combinations examined.
    pub combinations: u64,
    /// How many of them had support confined to the identity row.
    pub confined: u64,
    pub support_confined: bool,
    pub target_reachable: bool,
}
