//! Brute-force vertex enumeration.
//!
//! An independent reference for [`solve`](super::solve) on tiny programs.
//! Free variables are split so the feasible region is pointed; every choice
//! of `k` active constraints (rows or bounds) is solved as a square system,
//! and the best feasible point is kept. Unboundedness is decided by the same
//! enumeration over the normalised recession cone
//! `{d ≥ 0 : A d (≤,=,≥) 0, Σd = 1}`.

use alloc::vec;
use alloc::vec::Vec;

use super::{abs, dot, LinearProgram, LpError, LpSolution, LpStatus, Relation, Sense, VarBound};

pub const MAX_VARS: usize = 10;

const SINGULAR_TOL: f64 = 1e-9;
const CHECK_TOL: f64 = 1e-9;

struct Row {
    coeffs: Vec<f64>,
    relation: Relation,
    rhs: f64,
}

pub fn vertex_oracle(lp: &LinearProgram) -> Result<LpSolution, LpError> {
    lp.validate()?;
    if lp.num_vars() > MAX_VARS {
        return Err(LpError::TooManyVariables {
            max: MAX_VARS,
            found: lp.num_vars(),
        });
    }

    let mut split: Vec<(usize, f64)> = Vec::new();
    for (j, b) in lp.bounds.iter().enumerate() {
        split.push((j, 1.0));
        if *b == VarBound::Free {
            split.push((j, -1.0));
        }
    }
    let k = split.len();
    let sense = if lp.sense == Sense::Maximize {
        1.0
    } else {
        -1.0
    };
    let cost: Vec<f64> = split
        .iter()
        .map(|&(j, s)| sense * s * lp.objective[j])
        .collect();

    let mut rows: Vec<Row> = lp
        .constraints
        .iter()
        .map(|c| Row {
            coeffs: split.iter().map(|&(j, s)| s * c.coeffs[j]).collect(),
            relation: c.relation,
            rhs: c.rhs,
        })
        .collect();
    for j in 0..k {
        let mut e = vec![0.0; k];
        e[j] = 1.0;
        rows.push(Row {
            coeffs: e,
            relation: Relation::Ge,
            rhs: 0.0,
        });
    }

    let best = match best_vertex(&rows, &cost, k) {
        Some(v) => v,
        None => return Ok(LpSolution::without_point(LpStatus::Infeasible, 0)),
    };

    let mut cone: Vec<Row> = rows
        .iter()
        .map(|r| Row {
            coeffs: r.coeffs.clone(),
            relation: r.relation,
            rhs: 0.0,
        })
        .collect();
    cone.push(Row {
        coeffs: vec![1.0; k],
        relation: Relation::Eq,
        rhs: 1.0,
    });
    if let Some(ray) = best_vertex(&cone, &cost, k) {
        if dot(&cost, &ray) > CHECK_TOL {
            return Ok(LpSolution::without_point(LpStatus::Unbounded, 0));
        }
    }

    let mut primal = vec![0.0; lp.num_vars()];
    for (&(j, s), v) in split.iter().zip(&best) {
        primal[j] += s * v;
    }
    Ok(LpSolution {
        status: LpStatus::Optimal,
        objective: Some(lp.objective_at(&primal)),
        primal,
        dual: Vec::new(),
        iterations: 0,
    })
}

/// Highest-cost vertex of `{x : rows}`; `None` if there is no vertex.
fn best_vertex(rows: &[Row], cost: &[f64], k: usize) -> Option<Vec<f64>> {
    let mut best: Option<(f64, Vec<f64>)> = None;
    let mut subset: Vec<usize> = (0..k).collect();
    if k > rows.len() {
        return None;
    }
    loop {
        if let Some(x) = solve_active(rows, &subset, k) {
            if rows.iter().all(|r| satisfied(r, &x)) {
                let val = dot(cost, &x);
                if best.as_ref().is_none_or(|(b, _)| val > *b) {
                    best = Some((val, x));
                }
            }
        }
        if !next_combination(&mut subset, rows.len()) {
            break;
        }
    }
    best.map(|(_, x)| x)
}

fn satisfied(row: &Row, x: &[f64]) -> bool {
    let act = dot(&row.coeffs, x);
    let tol = CHECK_TOL * (1.0 + abs(row.rhs) + row.coeffs.iter().map(|a| abs(*a)).sum::<f64>());
    match row.relation {
        Relation::Le => act <= row.rhs + tol,
        Relation::Ge => act >= row.rhs - tol,
        Relation::Eq => abs(act - row.rhs) <= tol,
    }
}

/// Gaussian elimination with partial pivoting on the rows in `subset`
/// taken as equalities.
fn solve_active(rows: &[Row], subset: &[usize], k: usize) -> Option<Vec<f64>> {
    let mut a: Vec<Vec<f64>> = subset
        .iter()
        .map(|&i| {
            let mut r = rows[i].coeffs.clone();
            r.push(rows[i].rhs);
            r
        })
        .collect();
    for col in 0..k {
        let piv = (col..k).max_by(|&p, &q| {
            abs(a[p][col])
                .partial_cmp(&abs(a[q][col]))
                .unwrap_or(core::cmp::Ordering::Equal)
        })?;
        if abs(a[piv][col]) < SINGULAR_TOL {
            return None;
        }
        a.swap(col, piv);
        let pivot_row = a[col].clone();
        for r in 0..k {
            if r != col {
                let f = a[r][col] / a[col][col];
                if f != 0.0 {
                    for (dst, v) in a[r][col..=k].iter_mut().zip(&pivot_row[col..=k]) {
                        *dst -= f * v;
                    }
                }
            }
        }
    }
    Some((0..k).map(|i| a[i][k] / a[i][i]).collect())
}

fn next_combination(subset: &mut [usize], n: usize) -> bool {
    let k = subset.len();
    for i in (0..k).rev() {
        if subset[i] < n - k + i {
            subset[i] += 1;
            for j in i + 1..k {
                subset[j] = subset[j - 1] + 1;
            }
            return true;
        }
    }
    false
}
