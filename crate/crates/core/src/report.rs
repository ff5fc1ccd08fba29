//! Residual reports shared by the algebra and Fock verifications.

use serde::Serialize;

use crate::lie::GeneratorLabel;

/// Residual of one bracket: max-abs entry of `[A, B]` minus its expected
/// expansion.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct PairResidual {
    pub a: GeneratorLabel,
    pub b: GeneratorLabel,
    pub residual: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct VerificationReport {
    pub subject: String,
    pub tolerance: f64,
    pub residuals: Vec<PairResidual>,
    pub worst: Option<PairResidual>,
    pub pass: bool,
}

impl VerificationReport {
    pub fn new(subject: impl Into<String>, tolerance: f64, residuals: Vec<PairResidual>) -> Self {
        let worst = residuals
            .iter()
            .copied()
            .max_by(|x, y| x.residual.total_cmp(&y.residual));
        let pass = residuals.iter().all(|r| r.residual <= tolerance);
        VerificationReport {
            subject: subject.into(),
            tolerance,
            residuals,
            worst,
            pass,
        }
    }

    pub fn worst_residual(&self) -> f64 {
        self.worst.map_or(0.0, |w| w.residual)
    }

    pub fn failures(&self) -> impl Iterator<Item = &PairResidual> {
        self.residuals
            .iter()
            .filter(move |r| r.residual > self.tolerance)
    }
}
