use alloc::vec::Vec;

use super::{Analysis, AnalysisError, CcrResult, EfficiencyClass, SuperResult};

/// Everything computed for one DMU.
#[derive(Debug, Clone, PartialEq)]
pub struct DmuAnalysis {
    pub dmu: usize,
    pub ccr: CcrResult,
    pub sup: SuperResult,
    pub class: EfficiencyClass,
}

/// Per-DMU results in DMU order. A failing DMU does not abort the panel.
#[derive(Debug, Clone, PartialEq)]
pub struct PanelReport {
    pub entries: Vec<Result<DmuAnalysis, AnalysisError>>,
    pub tolerance: f64,
}

impl PanelReport {
    pub fn ok(&self) -> impl Iterator<Item = &DmuAnalysis> {
        self.entries.iter().filter_map(|e| e.as_ref().ok())
    }

    pub fn errors(&self) -> impl Iterator<Item = (usize, &AnalysisError)> {
        self.entries
            .iter()
            .enumerate()
            .filter_map(|(i, e)| e.as_ref().err().map(|err| (i, err)))
    }

    /// DMUs with `θ* ≥ 1 − tolerance`.
    pub fn efficient_count(&self) -> usize {
        self.ok().filter(|a| a.ccr.efficient).count()
    }
}

impl Analysis<'_> {
    pub fn analyse(&self, o: usize) -> Result<DmuAnalysis, AnalysisError> {
        Ok(DmuAnalysis {
            dmu: o,
            ccr: self.ccr(o)?,
            sup: self.super_efficiency(o)?,
            class: self.classify(o)?,
        })
    }

    pub fn full_report(&self) -> PanelReport {
        PanelReport {
            entries: (0..self.data.n()).map(|o| self.analyse(o)).collect(),
            tolerance: self.tol,
        }
    }
}
