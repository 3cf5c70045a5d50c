//! Named residual reports shared by the verifiers.

use std::fmt;

use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub residual: f64,
    /// `None` marks an informational check that never fails a report.
    pub threshold: Option<f64>,
}

impl Check {
    pub fn gating(&self) -> bool {
        self.threshold.is_some()
    }

    pub fn passed(&self) -> bool {
        match self.threshold {
            Some(t) => self.residual <= t,
            None => true,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn new() -> Self {
        Report::default()
    }

    pub fn push(&mut self, name: &str, residual: f64, threshold: f64) {
        self.checks.push(Check {
            name: name.to_string(),
            residual,
            threshold: Some(threshold),
        });
    }

    pub fn push_info(&mut self, name: &str, residual: f64) {
        self.checks.push(Check {
            name: name.to_string(),
            residual,
            threshold: None,
        });
    }

    pub fn get(&self, name: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn residual(&self, name: &str) -> Option<f64> {
        self.get(name).map(|c| c.residual)
    }

    /// NaN residuals count as failures.
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Check> {
        self.checks.iter().filter(|c| !c.passed())
    }

    /// Largest gating residual, if any.
    pub fn worst(&self) -> Option<&Check> {
        self.checks
            .iter()
            .filter(|c| c.gating())
            .max_by(|a, b| a.residual.total_cmp(&b.residual))
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let status = match (c.gating(), c.passed()) {
                (false, _) => "info",
                (true, true) => "ok",
                (true, false) => "FAIL",
            };
            writeln!(f, "{:<28} {:>12.3e}  {}", c.name, c.residual, status)?;
        }
        Ok(())
    }
}
