use alloc::vec::Vec;

use super::{Analysis, AnalysisError, MIN_T_STAR};
use crate::lp::dot;
use crate::models::{
    build_ccr_envelopment, build_ccr_multiplier, build_csm, build_ssm, build_super_envelopment,
    build_super_multiplier, build_uniqueness_probe, Dataset, ModelKind,
};

/// Optimum of the CCR multiplier program with one optimal weight vector.
///
/// Only `theta_star` is determined by the data; `(u, v)` is the vertex the
/// solver stopped at and is in general one of many optimal weightings.
#[derive(Debug, Clone, PartialEq)]
pub struct CcrResult {
    pub dmu: usize,
    pub theta_star: f64,
    /// Input weights in original units; `x_oᵀu = 1`.
    pub u: Vec<f64>,
    pub v: Vec<f64>,
    pub efficient: bool,
}

/// Optimum of the second-best minimization program.
#[derive(Debug, Clone, PartialEq)]
pub struct SuperResult {
    pub dmu: usize,
    pub t_star: f64,
    /// Input weights with `x_oᵀũ = t*`.
    pub u_tilde: Vec<f64>,
    /// Output weights with `y_oᵀv = 1`.
    pub v: Vec<f64>,
    /// `ũ / t*`: under `(u_scaled, v)` DMU `o` scores exactly 1 and every
    /// other DMU at most `t*`.
    pub u_scaled: Vec<f64>,
    /// DMUs other than `o` attaining the largest ratio, ascending.
    pub second_best: Vec<usize>,
}

/// Two-stage envelopment result: the expansion factor from (C) or (S), and
/// the intensities and slacks of the slack-maximization stage at that factor.
#[derive(Debug, Clone, PartialEq)]
pub struct EnvelopmentResult {
    pub dmu: usize,
    pub kind: ModelKind,
    pub eta: f64,
    /// DMU index of each intensity.
    pub peers: Vec<usize>,
    pub lambda: Vec<f64>,
    /// Input slacks ε₁ in original units.
    pub slack_in: Vec<f64>,
    /// Output slacks ε₂ in original units.
    pub slack_out: Vec<f64>,
    /// Optimum of the slack-maximization program, measured on the
    /// normalised panel.
    pub slack_objective: f64,
}

impl EnvelopmentResult {
    /// Largest residual of `x_o − ε₁ = Σλ_j x_j` and `η y_o + ε₂ = Σλ_j y_j`,
    /// relative to the magnitude of the right-hand side.
    pub fn balance_residual(&self, d: &Dataset) -> f64 {
        let o = self.dmu;
        let mut worst = 0.0f64;
        for (k, row) in d.input_rows().iter().enumerate() {
            let comb: f64 = self
                .peers
                .iter()
                .zip(&self.lambda)
                .map(|(&j, l)| l * row[j])
                .sum();
            let r = (row[o] - self.slack_in[k] - comb) / row[o];
            worst = worst.max(r.abs());
        }
        for (r, row) in d.output_rows().iter().enumerate() {
            let comb: f64 = self
                .peers
                .iter()
                .zip(&self.lambda)
                .map(|(&j, l)| l * row[j])
                .sum();
            let res = (self.eta * row[o] + self.slack_out[r] - comb) / (self.eta.max(1.0) * row[o]);
            worst = worst.max(res.abs());
        }
        worst
    }
}

impl Analysis<'_> {
    pub fn ccr(&self, o: usize) -> Result<CcrResult, AnalysisError> {
        let kind = ModelKind::CcrMultiplier;
        let sol = self.run(kind, o, &build_ccr_multiplier(&self.scaled, o)?)?;
        let layout = kind.layout(&self.scaled, o);
        let theta_star = sol.objective.unwrap_or_default();
        Ok(CcrResult {
            dmu: o,
            theta_star,
            u: self
                .scaling
                .input_weights(&sol.primal[layout.input_weights]),
            v: self
                .scaling
                .output_weights(&sol.primal[layout.output_weights]),
            efficient: theta_star >= 1.0 - self.tol,
        })
    }

    pub fn super_efficiency(&self, o: usize) -> Result<SuperResult, AnalysisError> {
        let kind = ModelKind::SuperMultiplier;
        let sol = self.run(kind, o, &build_super_multiplier(&self.scaled, o)?)?;
        let layout = kind.layout(&self.scaled, o);
        let t_star = sol.objective.unwrap_or_default();
        if t_star < MIN_T_STAR {
            return Err(AnalysisError::DegenerateScale { dmu: o, t_star });
        }
        let u_tilde = self
            .scaling
            .input_weights(&sol.primal[layout.input_weights]);
        let v = self
            .scaling
            .output_weights(&sol.primal[layout.output_weights]);
        let u_scaled: Vec<f64> = u_tilde.iter().map(|w| w / t_star).collect();

        let ratios = evaluate_ratios(self.data, &u_tilde, &v)?;
        let best = self
            .data
            .reference_set(o)
            .map(|i| ratios[i])
            .fold(f64::NEG_INFINITY, f64::max);
        let second_best = self
            .data
            .reference_set(o)
            .filter(|&i| ratios[i] >= best - self.tol)
            .collect();
        Ok(SuperResult {
            dmu: o,
            t_star,
            u_tilde,
            v,
            u_scaled,
            second_best,
        })
    }

    /// Opt(C) followed by CSM at that optimum.
    pub fn ccr_envelopment(&self, o: usize) -> Result<EnvelopmentResult, AnalysisError> {
        let eta = self
            .run(
                ModelKind::CcrEnvelopment,
                o,
                &build_ccr_envelopment(&self.scaled, o)?,
            )?
            .objective
            .unwrap_or_default();
        let lp = build_csm(&self.scaled, o, eta)?;
        self.slack_stage(ModelKind::Csm, o, eta, &lp)
    }

    /// Opt(S) followed by SSM at that optimum.
    pub fn super_envelopment(&self, o: usize) -> Result<EnvelopmentResult, AnalysisError> {
        let eta = self
            .run(
                ModelKind::SuperEnvelopment,
                o,
                &build_super_envelopment(&self.scaled, o)?,
            )?
            .objective
            .unwrap_or_default();
        let lp = build_ssm(&self.scaled, o, eta)?;
        self.slack_stage(ModelKind::Ssm, o, eta, &lp)
    }

    fn slack_stage(
        &self,
        kind: ModelKind,
        o: usize,
        eta: f64,
        lp: &crate::lp::LinearProgram,
    ) -> Result<EnvelopmentResult, AnalysisError> {
        let sol = self.run(kind, o, lp)?;
        let layout = kind.layout(&self.scaled, o);
        let unscale = |vals: &[f64], s: &[f64]| -> Vec<f64> {
            vals.iter().zip(s).map(|(e, f)| e * f).collect()
        };
        Ok(EnvelopmentResult {
            dmu: o,
            kind: if kind == ModelKind::Csm {
                ModelKind::CcrEnvelopment
            } else {
                ModelKind::SuperEnvelopment
            },
            eta,
            lambda: sol.primal[layout.intensities].to_vec(),
            slack_in: unscale(&sol.primal[layout.input_slacks], &self.scaling.inputs),
            slack_out: unscale(&sol.primal[layout.output_slacks], &self.scaling.outputs),
            peers: layout.peers,
            slack_objective: sol.objective.unwrap_or_default(),
        })
    }

    /// Optimum of the uniqueness probe: the largest total weight peers can
    /// carry in an exact reconstruction of DMU `o`.
    pub fn uniqueness_probe(&self, o: usize) -> Result<f64, AnalysisError> {
        let kind = ModelKind::UniquenessProbe;
        let sol = self.run(kind, o, &build_uniqueness_probe(&self.scaled, o)?)?;
        Ok(sol.objective.unwrap_or_default())
    }
}

/// Ratio `y_iᵀv / x_iᵀu` of every DMU under fixed weights, unnormalised.
pub fn evaluate_ratios(d: &Dataset, u: &[f64], v: &[f64]) -> Result<Vec<f64>, AnalysisError> {
    for (what, w, expected) in [("input", u, d.num_inputs()), ("output", v, d.num_outputs())] {
        if w.len() != expected {
            return Err(AnalysisError::WeightLength {
                what,
                expected,
                found: w.len(),
            });
        }
        if let Some(index) = w.iter().position(|x| !(x.is_finite() && *x >= 0.0)) {
            return Err(AnalysisError::InvalidWeight { what, index });
        }
    }
    (0..d.n())
        .map(|i| {
            let den = dot(&d.input_vector(i), u);
            if den == 0.0 {
                return Err(AnalysisError::DivisionDegeneracy { dmu: i });
            }
            Ok(dot(&d.output_vector(i), v) / den)
        })
        .collect()
}
