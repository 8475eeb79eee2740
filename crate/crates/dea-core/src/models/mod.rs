//! DMU panels and the linear programs built from them.
//!
//! Every builder takes a [`Dataset`] and the index `o` of the DMU under
//! evaluation and returns a plain [`LinearProgram`](crate::lp::LinearProgram).
//! The variable order of each program is fixed and described by
//! [`ModelKind::layout`], so primal and dual vectors can be unpacked without
//! inspecting the program.

mod builders;
mod dataset;

use alloc::vec::Vec;
use core::ops::Range;

pub use builders::{
    build_ccr_envelopment, build_ccr_multiplier, build_csm, build_ssm, build_super_envelopment,
    build_super_multiplier, build_uniqueness_probe,
};
pub use dataset::{DataError, Dataset, Measure, Scaling};

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum ModelError {
    #[error("DMU index {index} out of range for a panel of {n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("the reference set without the evaluated DMU is empty (panel of one)")]
    DegenerateReferenceSet,
    #[error("parameter {0} is not finite")]
    NonFiniteParameter(&'static str),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ModelKind {
    /// Input-normalised CCR multiplier program.
    CcrMultiplier,
    /// Output-oriented CCR envelopment program (C).
    CcrEnvelopment,
    /// Slack maximization at the optimum of (C).
    Csm,
    /// Second-best minimization in multiplier form.
    SuperMultiplier,
    /// Super-efficiency envelopment program (S).
    SuperEnvelopment,
    /// Slack maximization at the optimum of (S).
    Ssm,
    /// Total weight on peers among exact reconstructions of DMU `o`.
    UniquenessProbe,
}

impl ModelKind {
    pub const ALL: [ModelKind; 7] = [
        ModelKind::CcrMultiplier,
        ModelKind::CcrEnvelopment,
        ModelKind::Csm,
        ModelKind::SuperMultiplier,
        ModelKind::SuperEnvelopment,
        ModelKind::Ssm,
        ModelKind::UniquenessProbe,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ModelKind::CcrMultiplier => "ccr-multiplier",
            ModelKind::CcrEnvelopment => "ccr-envelopment",
            ModelKind::Csm => "csm",
            ModelKind::SuperMultiplier => "super-multiplier",
            ModelKind::SuperEnvelopment => "super-envelopment",
            ModelKind::Ssm => "ssm",
            ModelKind::UniquenessProbe => "uniqueness-probe",
        }
    }

    /// Whether the evaluated DMU is removed from the reference set.
    pub fn excludes_self(self) -> bool {
        matches!(
            self,
            ModelKind::SuperMultiplier | ModelKind::SuperEnvelopment | ModelKind::Ssm
        )
    }

    /// Variable layout of this program for DMU `o` of `d`.
    pub fn layout(self, d: &Dataset, o: usize) -> VarLayout {
        let (l, m) = (d.num_inputs(), d.num_outputs());
        let peers: Vec<usize> = if self.excludes_self() {
            d.reference_set(o).collect()
        } else {
            (0..d.n()).collect()
        };
        let np = peers.len();
        let empty = 0..0;
        match self {
            ModelKind::CcrMultiplier | ModelKind::SuperMultiplier => VarLayout {
                kind: self,
                input_weights: 0..l,
                output_weights: l..l + m,
                eta: None,
                intensities: empty.clone(),
                input_slacks: empty.clone(),
                output_slacks: empty,
                peers,
                num_vars: l + m,
            },
            ModelKind::CcrEnvelopment | ModelKind::SuperEnvelopment => VarLayout {
                kind: self,
                input_weights: empty.clone(),
                output_weights: empty.clone(),
                eta: Some(0),
                intensities: 1..1 + np,
                input_slacks: empty.clone(),
                output_slacks: empty,
                peers,
                num_vars: 1 + np,
            },
            ModelKind::Csm | ModelKind::Ssm => VarLayout {
                kind: self,
                input_weights: empty.clone(),
                output_weights: empty.clone(),
                eta: None,
                intensities: 0..np,
                input_slacks: np..np + l,
                output_slacks: np + l..np + l + m,
                peers,
                num_vars: np + l + m,
            },
            ModelKind::UniquenessProbe => VarLayout {
                kind: self,
                input_weights: empty.clone(),
                output_weights: empty.clone(),
                eta: None,
                intensities: 0..np,
                input_slacks: empty.clone(),
                output_slacks: empty,
                peers,
                num_vars: np,
            },
        }
    }
}

/// Where each group of variables sits in a program's variable vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarLayout {
    pub kind: ModelKind,
    pub input_weights: Range<usize>,
    pub output_weights: Range<usize>,
    /// Output expansion factor of (C) / (S).
    pub eta: Option<usize>,
    pub intensities: Range<usize>,
    pub input_slacks: Range<usize>,
    pub output_slacks: Range<usize>,
    /// DMU index of each intensity variable, in order.
    pub peers: Vec<usize>,
    pub num_vars: usize,
}

pub(crate) fn check_index(d: &Dataset, o: usize) -> Result<(), ModelError> {
    if o >= d.n() {
        return Err(ModelError::IndexOutOfRange { index: o, n: d.n() });
    }
    Ok(())
}

pub(crate) fn check_reference_set(d: &Dataset, o: usize) -> Result<(), ModelError> {
    check_index(d, o)?;
    if d.n() < 2 {
        return Err(ModelError::DegenerateReferenceSet);
    }
    Ok(())
}
