//! The CCR / super-efficiency relation table.
//!
//! Rows are decided by (C), (CSM) and the uniqueness probe, columns by (S)
//! and (SSM). Exactly one cell per row is attainable; the other twelve are
//! ruled out by relations R0–R6:
//!
//! ```text
//!                          S>1   S=1,SSM>0  S=1,SSM=0   S<1
//! C=1, CSM=0, unique       R0    R1         R2          extreme efficient
//! C=1, CSM=0, not unique   R0    R3         efficient   R4
//! C=1, CSM>0               R0    weak       R5          R6
//! C>1                      ineff R0         R0          R0
//! ```

use alloc::boxed::Box;
use alloc::vec::Vec;
use core::fmt;

use super::{Analysis, AnalysisError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EfficiencyCell {
    /// Vertex of the frontier; Opt(S) < 1.
    ExtremeEfficient,
    /// On the frontier, not a vertex, no slack.
    EfficientNonExtreme,
    /// On the frontier with positive optimal slack.
    WeaklyEfficient,
    Inefficient,
}

impl EfficiencyCell {
    pub fn as_str(self) -> &'static str {
        match self {
            EfficiencyCell::ExtremeEfficient => "extreme-efficient",
            EfficiencyCell::EfficientNonExtreme => "efficient-non-extreme",
            EfficiencyCell::WeaklyEfficient => "weakly-efficient",
            EfficiencyCell::Inefficient => "inefficient",
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        [
            EfficiencyCell::ExtremeEfficient,
            EfficiencyCell::EfficientNonExtreme,
            EfficiencyCell::WeaklyEfficient,
            EfficiencyCell::Inefficient,
        ]
        .into_iter()
        .find(|c| c.as_str() == s)
    }
}

impl fmt::Display for EfficiencyCell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableRow {
    /// Opt(C) = 1, Opt(CSM) = 0, `(λ_o, λ₋ₒ) = (1, 0)` the unique CSM optimum.
    EfficientUnique,
    /// Opt(C) = 1, Opt(CSM) = 0, other CSM optima exist.
    EfficientShared,
    /// Opt(C) = 1, Opt(CSM) > 0.
    EfficientSlack,
    /// Opt(C) > 1.
    Inefficient,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TableColumn {
    SuperAboveOne,
    SuperOneWithSlack,
    SuperOneNoSlack,
    SuperBelowOne,
}

/// The relation that rules out a cell.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Exclusion {
    R0,
    R1,
    R2,
    R3,
    R4,
    R5,
    R6,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellStatus {
    Admissible(EfficiencyCell),
    Excluded(Exclusion),
}

impl TableRow {
    pub const ALL: [TableRow; 4] = [
        TableRow::EfficientUnique,
        TableRow::EfficientShared,
        TableRow::EfficientSlack,
        TableRow::Inefficient,
    ];
}

impl TableColumn {
    pub const ALL: [TableColumn; 4] = [
        TableColumn::SuperAboveOne,
        TableColumn::SuperOneWithSlack,
        TableColumn::SuperOneNoSlack,
        TableColumn::SuperBelowOne,
    ];
}

/// Content of one cell of the relation table.
pub fn cell_status(row: TableRow, col: TableColumn) -> CellStatus {
    use CellStatus::{Admissible, Excluded};
    use Exclusion::*;
    use TableColumn::*;
    match (row, col) {
        (TableRow::Inefficient, SuperAboveOne) => Admissible(EfficiencyCell::Inefficient),
        (TableRow::Inefficient, _) => Excluded(R0),
        (_, SuperAboveOne) => Excluded(R0),
        (TableRow::EfficientUnique, SuperOneWithSlack) => Excluded(R1),
        (TableRow::EfficientUnique, SuperOneNoSlack) => Excluded(R2),
        (TableRow::EfficientUnique, SuperBelowOne) => Admissible(EfficiencyCell::ExtremeEfficient),
        (TableRow::EfficientShared, SuperOneWithSlack) => Excluded(R3),
        (TableRow::EfficientShared, SuperOneNoSlack) => {
            Admissible(EfficiencyCell::EfficientNonExtreme)
        }
        (TableRow::EfficientShared, SuperBelowOne) => Excluded(R4),
        (TableRow::EfficientSlack, SuperOneWithSlack) => {
            Admissible(EfficiencyCell::WeaklyEfficient)
        }
        (TableRow::EfficientSlack, SuperOneNoSlack) => Excluded(R5),
        (TableRow::EfficientSlack, SuperBelowOne) => Excluded(R6),
    }
}

/// The optimal values that decide a DMU's cell.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quadruple {
    pub opt_c: f64,
    pub opt_csm: f64,
    /// Optimum of the uniqueness probe.
    pub probe: f64,
    pub probe_unique: bool,
    pub opt_s: f64,
    pub opt_ssm: f64,
}

/// How far each quantity sits from the threshold it was compared with.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Margins {
    /// `|Opt(C) − 1|`
    pub ccr: f64,
    /// `Opt(CSM)` (distance from zero)
    pub csm: f64,
    pub probe: f64,
    /// `|Opt(S) − 1|`
    pub sup: f64,
    pub ssm: f64,
}

/// A quadruple outside every admissible cell.
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub dmu: usize,
    pub quadruple: Quadruple,
    pub row: Option<TableRow>,
    pub column: Option<TableColumn>,
    /// `None` when a value lies outside the table altogether (for example
    /// Opt(C) < 1, which self-reference makes impossible).
    pub exclusion: Option<Exclusion>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let q = &self.quadruple;
        match self.exclusion {
            Some(e) => write!(f, "DMU {} lands in a cell excluded by {e:?}", self.dmu)?,
            None => write!(
                f,
                "DMU {} has optimal values outside the relation table",
                self.dmu
            )?,
        }
        write!(
            f,
            " (Opt(C)={}, Opt(CSM)={}, probe={}, Opt(S)={}, Opt(SSM)={})",
            q.opt_c, q.opt_csm, q.probe, q.opt_s, q.opt_ssm
        )
    }
}

impl Quadruple {
    pub fn margins(&self) -> Margins {
        Margins {
            ccr: (self.opt_c - 1.0).abs(),
            csm: self.opt_csm.abs(),
            probe: self.probe.abs(),
            sup: (self.opt_s - 1.0).abs(),
            ssm: self.opt_ssm.abs(),
        }
    }

    /// Table row and column, or `None` for values no row/column covers.
    pub fn position(&self, tol: f64) -> (Option<TableRow>, Option<TableColumn>) {
        let row = if self.opt_c < 1.0 - tol || self.opt_csm < -tol {
            None
        } else if self.opt_c > 1.0 + tol {
            Some(TableRow::Inefficient)
        } else if self.opt_csm > tol {
            Some(TableRow::EfficientSlack)
        } else if self.probe_unique {
            Some(TableRow::EfficientUnique)
        } else {
            Some(TableRow::EfficientShared)
        };
        let column = if self.opt_s < 0.0 || self.opt_ssm < -tol {
            None
        } else if self.opt_s > 1.0 + tol {
            Some(TableColumn::SuperAboveOne)
        } else if self.opt_s < 1.0 - tol {
            Some(TableColumn::SuperBelowOne)
        } else if self.opt_ssm > tol {
            Some(TableColumn::SuperOneWithSlack)
        } else {
            Some(TableColumn::SuperOneNoSlack)
        };
        (row, column)
    }

    pub fn locate(&self, dmu: usize, tol: f64) -> Result<EfficiencyCell, Violation> {
        let (row, column) = self.position(tol);
        let violation = |exclusion| Violation {
            dmu,
            quadruple: *self,
            row,
            column,
            exclusion,
        };
        match (row, column) {
            (Some(r), Some(c)) => match cell_status(r, c) {
                CellStatus::Admissible(cell) => Ok(cell),
                CellStatus::Excluded(e) => Err(violation(Some(e))),
            },
            _ => Err(violation(None)),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct EfficiencyClass {
    pub dmu: usize,
    pub cell: EfficiencyCell,
    pub quadruple: Quadruple,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExcludedCell {
    pub row: TableRow,
    pub column: TableColumn,
    pub exclusion: Exclusion,
}

/// Outcome of checking one DMU against the relation table.
#[derive(Debug, Clone, PartialEq)]
pub struct ConsistencyReport {
    pub class: EfficiencyClass,
    pub row: TableRow,
    pub column: TableColumn,
    /// Every excluded cell, each confirmed unoccupied.
    pub excluded_checked: Vec<ExcludedCell>,
    pub margins: Margins,
}

impl ConsistencyReport {
    /// Smallest distance between a deciding quantity and its threshold. Only
    /// the comparisons that determined the cell are included.
    pub fn decisive_margin(&self) -> f64 {
        let m = &self.margins;
        let mut out = m.ccr;
        if self.row != TableRow::Inefficient {
            out = out.min(m.csm);
            if self.row != TableRow::EfficientSlack {
                out = out.min(m.probe);
            }
        }
        out = out.min(m.sup);
        if matches!(
            self.column,
            TableColumn::SuperOneNoSlack | TableColumn::SuperOneWithSlack
        ) {
            out = out.min(m.ssm);
        }
        out
    }
}

impl Analysis<'_> {
    /// All five optimal values for DMU `o`. Every program is solved even when
    /// the cell is already decided.
    pub fn quadruple(&self, o: usize) -> Result<Quadruple, AnalysisError> {
        let c = self.ccr_envelopment(o)?;
        let s = self.super_envelopment(o)?;
        let probe = self.uniqueness_probe(o)?;
        Ok(Quadruple {
            opt_c: c.eta,
            opt_csm: c.slack_objective,
            probe,
            probe_unique: probe <= self.tol,
            opt_s: s.eta,
            opt_ssm: s.slack_objective,
        })
    }

    pub fn classify(&self, o: usize) -> Result<EfficiencyClass, AnalysisError> {
        let quadruple = self.quadruple(o)?;
        let cell = quadruple
            .locate(o, self.tol)
            .map_err(|v| AnalysisError::TheoremViolation(Box::new(v)))?;
        Ok(EfficiencyClass {
            dmu: o,
            cell,
            quadruple,
        })
    }

    pub fn check_consistency(&self, o: usize) -> Result<ConsistencyReport, AnalysisError> {
        let class = self.classify(o)?;
        let (row, column) = match class.quadruple.position(self.tol) {
            (Some(r), Some(c)) => (r, c),
            _ => unreachable!("classify only returns located quadruples"),
        };
        let mut excluded_checked = Vec::with_capacity(12);
        for r in TableRow::ALL {
            for c in TableColumn::ALL {
                if let CellStatus::Excluded(exclusion) = cell_status(r, c) {
                    debug_assert!((r, c) != (row, column));
                    excluded_checked.push(ExcludedCell {
                        row: r,
                        column: c,
                        exclusion,
                    });
                }
            }
        }
        Ok(ConsistencyReport {
            margins: class.quadruple.margins(),
            class,
            row,
            column,
            excluded_checked,
        })
    }
}
