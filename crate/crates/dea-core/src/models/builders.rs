//! One builder per program. Variable orders are those reported by
//! [`ModelKind::layout`]; row orders are documented on each builder.

use alloc::vec;
use alloc::vec::Vec;

use super::{check_index, check_reference_set, Dataset, ModelError};
use crate::lp::{LinearProgram, Relation};

/// CCR multiplier program for DMU `o`:
///
/// ```text
/// max  y_oᵀv
/// s.t. y_iᵀv − x_iᵀu ≤ 0   for every DMU i   (rows 0..n)
///      x_oᵀu = 1                              (row n)
///      u, v ≥ 0
/// ```
///
/// Variables are `(u_1..u_l, v_1..v_m)`.
pub fn build_ccr_multiplier(d: &Dataset, o: usize) -> Result<LinearProgram, ModelError> {
    check_index(d, o)?;
    Ok(multiplier(d, o, 0..d.n(), false))
}

/// Second-best minimization for DMU `o`, with `t_o` substituted by `x_oᵀũ`:
///
/// ```text
/// min  x_oᵀũ
/// s.t. y_jᵀv − x_jᵀũ ≤ 0   for every j ≠ o    (rows 0..n−1, ascending j)
///      y_oᵀv = 1                              (row n−1)
///      ũ, v ≥ 0
/// ```
///
/// Variables are `(ũ_1..ũ_l, v_1..v_m)`; the optimum is `t_o*`.
pub fn build_super_multiplier(d: &Dataset, o: usize) -> Result<LinearProgram, ModelError> {
    check_reference_set(d, o)?;
    Ok(multiplier(d, o, d.reference_set(o), true))
}

fn multiplier(
    d: &Dataset,
    o: usize,
    rows: impl Iterator<Item = usize>,
    second_best: bool,
) -> LinearProgram {
    let (l, m) = (d.num_inputs(), d.num_outputs());
    let xo = d.input_vector(o);
    let yo = d.output_vector(o);

    let mut lp = if second_best {
        let mut c = xo.clone();
        c.resize(l + m, 0.0);
        LinearProgram::minimize(c)
    } else {
        let mut c = vec![0.0; l];
        c.extend_from_slice(&yo);
        LinearProgram::maximize(c)
    };
    for i in rows {
        let mut row: Vec<f64> = d.input_vector(i).iter().map(|x| -x).collect();
        row.extend(d.output_vector(i));
        lp.add(row, Relation::Le, 0.0);
    }
    let mut norm = vec![0.0; l + m];
    if second_best {
        norm[l..].copy_from_slice(&yo);
    } else {
        norm[..l].copy_from_slice(&xo);
    }
    lp.add(norm, Relation::Eq, 1.0);
    lp
}

/// Output-oriented CCR envelopment program (C) for DMU `o`:
///
/// ```text
/// max  η
/// s.t. Σ_j x_kj λ_j ≤ x_ko          (rows 0..l)
///      Σ_j y_rj λ_j − η y_ro ≥ 0    (rows l..l+m)
///      η, λ ≥ 0
/// ```
///
/// Variables are `(η, λ_1..λ_n)`. Declaring `η ≥ 0` loses nothing: `λ = e_o`,
/// `η = 1` is feasible, so the optimum is at least 1.
pub fn build_ccr_envelopment(d: &Dataset, o: usize) -> Result<LinearProgram, ModelError> {
    check_index(d, o)?;
    Ok(envelopment(d, o, &(0..d.n()).collect::<Vec<_>>()))
}

/// Super-efficiency envelopment program (S): (C) with DMU `o` removed from
/// the reference set. Variables are `(η̃, λ_j for j ≠ o ascending)`.
///
/// `λ = 0`, `η̃ = 0` is feasible, and positive inputs keep `λ` bounded, so
/// the program always has a finite optimum.
pub fn build_super_envelopment(d: &Dataset, o: usize) -> Result<LinearProgram, ModelError> {
    check_reference_set(d, o)?;
    Ok(envelopment(d, o, &d.reference_set(o).collect::<Vec<_>>()))
}

fn envelopment(d: &Dataset, o: usize, peers: &[usize]) -> LinearProgram {
    let np = peers.len();
    let mut c = vec![0.0; 1 + np];
    c[0] = 1.0;
    let mut lp = LinearProgram::maximize(c);
    for row in d.input_rows() {
        let mut coeffs = vec![0.0];
        coeffs.extend(peers.iter().map(|&j| row[j]));
        lp.add(coeffs, Relation::Le, row[o]);
    }
    for row in d.output_rows() {
        let mut coeffs = vec![-row[o]];
        coeffs.extend(peers.iter().map(|&j| row[j]));
        lp.add(coeffs, Relation::Ge, 0.0);
    }
    lp
}

/// Slack maximization (CSM) at `η*` = Opt(C):
///
/// ```text
/// max  Σε₁ + Σε₂
/// s.t. Σ_j x_kj λ_j + ε₁_k = x_ko       (rows 0..l)
///      Σ_j y_rj λ_j − ε₂_r = η* y_ro    (rows l..l+m)
///      λ, ε₁, ε₂ ≥ 0
/// ```
///
/// Variables are `(λ_1..λ_n, ε₁, ε₂)`; `λ` ranges over every DMU, `o` included.
pub fn build_csm(d: &Dataset, o: usize, eta_star: f64) -> Result<LinearProgram, ModelError> {
    check_index(d, o)?;
    if !eta_star.is_finite() {
        return Err(ModelError::NonFiniteParameter("eta_star"));
    }
    Ok(slack_max(d, o, &(0..d.n()).collect::<Vec<_>>(), eta_star))
}

/// Slack maximization (SSM) at `η̃*` = Opt(S); as [`build_csm`] but the
/// intensities cover only `j ≠ o`. Variables are `(λ₋ₒ, ε₁, ε₂)`.
pub fn build_ssm(d: &Dataset, o: usize, eta_tilde_star: f64) -> Result<LinearProgram, ModelError> {
    check_reference_set(d, o)?;
    if !eta_tilde_star.is_finite() {
        return Err(ModelError::NonFiniteParameter("eta_tilde_star"));
    }
    Ok(slack_max(
        d,
        o,
        &d.reference_set(o).collect::<Vec<_>>(),
        eta_tilde_star,
    ))
}

fn slack_max(d: &Dataset, o: usize, peers: &[usize], eta: f64) -> LinearProgram {
    let (l, m, np) = (d.num_inputs(), d.num_outputs(), peers.len());
    let mut c = vec![0.0; np];
    c.resize(np + l + m, 1.0);
    let mut lp = LinearProgram::maximize(c);
    for (k, row) in d.input_rows().iter().enumerate() {
        let mut coeffs: Vec<f64> = peers.iter().map(|&j| row[j]).collect();
        coeffs.resize(np + l + m, 0.0);
        coeffs[np + k] = 1.0;
        lp.add(coeffs, Relation::Eq, row[o]);
    }
    for (r, row) in d.output_rows().iter().enumerate() {
        let mut coeffs: Vec<f64> = peers.iter().map(|&j| row[j]).collect();
        coeffs.resize(np + l + m, 0.0);
        coeffs[np + l + r] = -1.0;
        lp.add(coeffs, Relation::Eq, eta * row[o]);
    }
    lp
}

/// Uniqueness probe for DMU `o`:
///
/// ```text
/// max  Σ_{j≠o} λ_j
/// s.t. Xλ = x_o,  Yλ = y_o,  λ ≥ 0
/// ```
///
/// Variables are `(λ_1..λ_n)`. When Opt(CSM) = 0 the optimal set of CSM is
/// exactly this feasible region (zero slacks), so the probe optimum is zero
/// if and only if `(λ_o, λ₋ₒ) = (1, 0)` is the unique CSM optimum.
pub fn build_uniqueness_probe(d: &Dataset, o: usize) -> Result<LinearProgram, ModelError> {
    check_index(d, o)?;
    let n = d.n();
    let mut c = vec![1.0; n];
    c[o] = 0.0;
    let mut lp = LinearProgram::maximize(c);
    for row in d.input_rows().iter().chain(d.output_rows()) {
        lp.add(row.clone(), Relation::Eq, row[o]);
    }
    Ok(lp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lp::{solve, LpStatus};
    use crate::models::ModelKind;
    use alloc::string::{String, ToString};

    fn panel(inputs: Vec<Vec<f64>>, outputs: Vec<Vec<f64>>) -> Dataset {
        let n = inputs[0].len();
        let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        Dataset::new(names, inputs, outputs).unwrap()
    }

    fn optimum(lp: &LinearProgram) -> f64 {
        let s = solve(lp).unwrap();
        assert_eq!(s.status, LpStatus::Optimal);
        s.objective.unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) -> bool {
        (a - b).abs() <= tol
    }

    /// Twins 0 and 1, dominated DMU 2.
    fn twins() -> Dataset {
        panel(
            vec![vec![1.0, 1.0, 2.0], vec![1.0, 1.0, 2.0]],
            vec![vec![1.0, 1.0, 1.0]],
        )
    }

    /// DMU 1 matches DMU 0's output with a strictly larger second input.
    fn weak() -> Dataset {
        panel(
            vec![vec![1.0, 1.0, 2.0], vec![1.0, 2.0, 1.0]],
            vec![vec![1.0, 1.0, 1.0]],
        )
    }

    #[test]
    fn shapes_follow_layouts() {
        let d = panel(
            vec![vec![1.0, 2.0, 3.0, 4.0], vec![2.0, 2.0, 1.0, 3.0]],
            vec![vec![1.0, 1.0, 2.0, 1.0]],
        );
        let (n, l, m) = (4, 2, 1);
        let cases = [
            (
                ModelKind::CcrMultiplier,
                build_ccr_multiplier(&d, 1).unwrap(),
                n + 1,
            ),
            (
                ModelKind::SuperMultiplier,
                build_super_multiplier(&d, 1).unwrap(),
                n,
            ),
            (
                ModelKind::CcrEnvelopment,
                build_ccr_envelopment(&d, 1).unwrap(),
                l + m,
            ),
            (
                ModelKind::SuperEnvelopment,
                build_super_envelopment(&d, 1).unwrap(),
                l + m,
            ),
            (ModelKind::Csm, build_csm(&d, 1, 1.0).unwrap(), l + m),
            (ModelKind::Ssm, build_ssm(&d, 1, 1.0).unwrap(), l + m),
            (
                ModelKind::UniquenessProbe,
                build_uniqueness_probe(&d, 1).unwrap(),
                l + m,
            ),
        ];
        for (kind, lp, rows) in cases {
            let layout = kind.layout(&d, 1);
            assert_eq!(lp.num_vars(), layout.num_vars, "{kind:?}");
            assert_eq!(lp.num_constraints(), rows, "{kind:?}");
            assert!(lp.validate().is_ok());
        }
        assert_eq!(ModelKind::Ssm.layout(&d, 1).peers, vec![0, 2, 3]);
        assert_eq!(ModelKind::Csm.layout(&d, 1).num_vars, n + l + m);
        assert_eq!(ModelKind::SuperEnvelopment.layout(&d, 1).num_vars, n);
    }

    #[test]
    fn multiplier_row_structure() {
        let d = weak();
        let lp = build_ccr_multiplier(&d, 1).unwrap();
        let eq: Vec<_> = lp
            .constraints
            .iter()
            .filter(|c| c.relation == Relation::Eq)
            .collect();
        assert_eq!(eq.len(), 1);
        assert_eq!(eq[0].coeffs, vec![1.0, 2.0, 0.0]);
        assert_eq!(lp.constraints[2].coeffs, vec![-2.0, -1.0, 1.0]);
    }

    #[test]
    fn index_and_reference_set_errors() {
        let d = twins();
        assert_eq!(
            build_ccr_multiplier(&d, 3),
            Err(ModelError::IndexOutOfRange { index: 3, n: 3 })
        );
        let single = panel(vec![vec![2.0]], vec![vec![3.0]]);
        assert_eq!(
            build_super_multiplier(&single, 0),
            Err(ModelError::DegenerateReferenceSet)
        );
        assert_eq!(
            build_super_envelopment(&single, 0),
            Err(ModelError::DegenerateReferenceSet)
        );
        assert_eq!(
            build_ssm(&single, 0, 1.0),
            Err(ModelError::DegenerateReferenceSet)
        );
        assert_eq!(
            build_csm(&d, 0, f64::NAN),
            Err(ModelError::NonFiniteParameter("eta_star"))
        );
        assert!(build_uniqueness_probe(&d, 5).is_err());
    }

    #[test]
    fn single_dmu_is_efficient() {
        let d = panel(vec![vec![2.0, 5.0]], vec![vec![3.0, 1.0]])
            .without(1)
            .unwrap();
        assert_eq!(d.n(), 1);
        assert!(close(
            optimum(&build_ccr_multiplier(&d, 0).unwrap()),
            1.0,
            1e-12
        ));
        assert!(close(
            optimum(&build_ccr_envelopment(&d, 0).unwrap()),
            1.0,
            1e-12
        ));
    }

    #[test]
    fn single_ratio_closed_forms() {
        let x = [2.0, 4.0, 5.0];
        let y = [3.0, 8.0, 6.0];
        let d = panel(vec![x.to_vec()], vec![y.to_vec()]);
        let r: Vec<f64> = x.iter().zip(&y).map(|(a, b)| b / a).collect();
        let best = r.iter().cloned().fold(0.0, f64::max);
        for o in 0..3 {
            let second = (0..3).filter(|&j| j != o).map(|j| r[j]).fold(0.0, f64::max);
            assert!(close(
                optimum(&build_ccr_multiplier(&d, o).unwrap()),
                r[o] / best,
                1e-12
            ));
            assert!(close(
                optimum(&build_ccr_envelopment(&d, o).unwrap()),
                best / r[o],
                1e-12
            ));
            assert!(close(
                optimum(&build_super_multiplier(&d, o).unwrap()),
                second / r[o],
                1e-12
            ));
            assert!(close(
                optimum(&build_super_envelopment(&d, o).unwrap()),
                second / r[o],
                1e-12
            ));
        }
    }

    #[test]
    fn twin_replicates_dmu() {
        let d = twins();
        assert!(close(
            optimum(&build_super_multiplier(&d, 0).unwrap()),
            1.0,
            1e-9
        ));
        assert!(close(
            optimum(&build_super_envelopment(&d, 0).unwrap()),
            1.0,
            1e-9
        ));
        assert!(close(optimum(&build_csm(&d, 0, 1.0).unwrap()), 0.0, 1e-9));
        assert!(close(optimum(&build_ssm(&d, 0, 1.0).unwrap()), 0.0, 1e-9));
        assert!(optimum(&build_uniqueness_probe(&d, 0).unwrap()) >= 1.0 - 1e-9);
    }

    #[test]
    fn weakly_efficient_has_slack() {
        let d = weak();
        let eta = optimum(&build_ccr_envelopment(&d, 1).unwrap());
        assert!(close(eta, 1.0, 1e-9));
        assert!(optimum(&build_csm(&d, 1, eta).unwrap()) > 1e-6);
        let eta_s = optimum(&build_super_envelopment(&d, 1).unwrap());
        assert!(close(eta_s, 1.0, 1e-9));
        assert!(close(optimum(&build_ssm(&d, 1, eta_s).unwrap()), 1.0, 1e-9));
    }

    #[test]
    fn extreme_point_probe_is_zero() {
        // One input, two outputs: DMUs 0 and 1 span the frontier.
        let d = panel(
            vec![vec![1.0, 1.0, 1.0]],
            vec![vec![2.0, 1.0, 1.0], vec![1.0, 2.0, 1.0]],
        );
        let s = optimum(&build_super_envelopment(&d, 0).unwrap());
        assert!(close(s, 0.5, 1e-12));
        assert!(close(optimum(&build_csm(&d, 0, 1.0).unwrap()), 0.0, 1e-12));
        assert!(close(
            optimum(&build_uniqueness_probe(&d, 0).unwrap()),
            0.0,
            1e-12
        ));
    }

    #[test]
    fn midpoint_probe_is_positive() {
        let d = panel(
            vec![vec![1.0, 1.0, 1.0]],
            vec![vec![3.0, 1.0, 2.0], vec![1.0, 3.0, 2.0]],
        );
        assert!(close(
            optimum(&build_super_envelopment(&d, 2).unwrap()),
            1.0,
            1e-12
        ));
        assert!(optimum(&build_uniqueness_probe(&d, 2).unwrap()) > 0.5);
    }

    #[test]
    fn self_reference_keeps_ccr_above_one() {
        let d = panel(vec![vec![3.0, 1.0, 2.0]], vec![vec![1.0, 4.0, 2.0]]);
        for o in 0..3 {
            let lp = build_ccr_envelopment(&d, o).unwrap();
            let mut x = vec![0.0; 4];
            x[0] = 1.0;
            x[1 + o] = 1.0;
            assert_eq!(lp.max_violation(&x), 0.0);
            assert!(optimum(&lp) >= 1.0 - 1e-12, "{}", optimum(&lp));
            let s = build_super_envelopment(&d, o).unwrap();
            assert_eq!(s.max_violation(&[0.0; 3]), 0.0);
        }
    }
}
