//! Scores, weights and efficiency classes.
//!
//! Every program is solved on a normalised copy of the panel (each measure
//! row divided by its maximum) and weights and slacks are mapped back to the
//! original units afterwards. Scores are unit-free, so the normalisation only
//! affects conditioning.

mod classify;
mod report;
mod scoring;

use alloc::boxed::Box;

pub use classify::{
    ConsistencyReport, EfficiencyCell, EfficiencyClass, ExcludedCell, Exclusion, Margins,
    Quadruple, TableColumn, TableRow, Violation,
};
pub use report::{DmuAnalysis, PanelReport};
pub use scoring::{evaluate_ratios, CcrResult, EnvelopmentResult, SuperResult};

use crate::lp::{solve, LinearProgram, LpError, LpSolution, LpStatus};
use crate::models::{Dataset, ModelError, ModelKind, Scaling};

/// Absolute tolerance for every "equals one" / "equals zero" decision.
pub const EFFICIENCY_TOL: f64 = 1e-6;

/// Below this the second-best value cannot be rescaled.
pub const MIN_T_STAR: f64 = 1e-12;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Model(#[from] ModelError),
    #[error("{} program for DMU {dmu}: {source}", kind.name())]
    Solver {
        kind: ModelKind,
        dmu: usize,
        #[source]
        source: LpError,
    },
    #[error("{} program for DMU {dmu} ended {status:?}", kind.name())]
    NotOptimal {
        kind: ModelKind,
        dmu: usize,
        status: LpStatus,
    },
    #[error("second-best value {t_star} of DMU {dmu} is too small to rescale weights")]
    DegenerateScale { dmu: usize, t_star: f64 },
    #[error("weighted input of DMU {dmu} is zero")]
    DivisionDegeneracy { dmu: usize },
    #[error("expected {expected} {what} weights, got {found}")]
    WeightLength {
        what: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("{what} weight {index} is negative or not finite")]
    InvalidWeight { what: &'static str, index: usize },
    #[error("{0}")]
    TheoremViolation(Box<Violation>),
}

/// Analysis of one panel with a fixed decision tolerance.
#[derive(Debug, Clone)]
pub struct Analysis<'a> {
    data: &'a Dataset,
    scaled: Dataset,
    scaling: Scaling,
    tol: f64,
}

impl<'a> Analysis<'a> {
    pub fn new(data: &'a Dataset) -> Self {
        let (scaled, scaling) = data.normalized();
        Self {
            data,
            scaled,
            scaling,
            tol: EFFICIENCY_TOL,
        }
    }

    pub fn with_tolerance(mut self, tol: f64) -> Self {
        self.tol = tol;
        self
    }

    pub fn data(&self) -> &Dataset {
        self.data
    }

    pub fn tolerance(&self) -> f64 {
        self.tol
    }

    /// The normalised panel the programs are solved on.
    pub fn scaled_data(&self) -> &Dataset {
        &self.scaled
    }

    pub fn scaling(&self) -> &Scaling {
        &self.scaling
    }

    fn run(
        &self,
        kind: ModelKind,
        dmu: usize,
        lp: &LinearProgram,
    ) -> Result<LpSolution, AnalysisError> {
        let sol = solve(lp).map_err(|source| AnalysisError::Solver { kind, dmu, source })?;
        if sol.status != LpStatus::Optimal {
            return Err(AnalysisError::NotOptimal {
                kind,
                dmu,
                status: sol.status,
            });
        }
        Ok(sol)
    }
}

/// CCR score of DMU `o` at the default tolerance.
pub fn ccr_score(d: &Dataset, o: usize) -> Result<CcrResult, AnalysisError> {
    Analysis::new(d).ccr(o)
}

/// Second-best minimization (super-efficiency) for DMU `o`.
pub fn super_score(d: &Dataset, o: usize) -> Result<SuperResult, AnalysisError> {
    Analysis::new(d).super_efficiency(o)
}

/// Table-1 cell of DMU `o`.
pub fn classify(d: &Dataset, o: usize) -> Result<EfficiencyClass, AnalysisError> {
    Analysis::new(d).classify(o)
}

pub fn check_table1_consistency(d: &Dataset, o: usize) -> Result<ConsistencyReport, AnalysisError> {
    Analysis::new(d).check_consistency(o)
}

pub fn full_report(d: &Dataset) -> PanelReport {
    Analysis::new(d).full_report()
}
