//! Two-phase primal simplex on a dense tableau.
//!
//! The program is brought to `max cᵀx, Ax = b, x ≥ 0, b ≥ 0`: free variables
//! are split, rows with negative right-hand side are negated, each row is
//! divided by its largest structural coefficient, and every row receives an
//! identity column (a slack for `≤`, an artificial for `=` and `≥`). Pivot
//! columns and rows are chosen by Bland's rule, so the method terminates on
//! degenerate programs and is a deterministic function of its input.

use alloc::vec;
use alloc::vec::Vec;

use super::{abs, LinearProgram, LpError, LpSolution, LpStatus, Relation, Sense, VarBound};
use super::{FEAS_TOL, ITERATION_LIMIT, PIVOT_TOL};

/// Reduced costs above this are improving.
const OPT_TOL: f64 = 1e-9;
/// Relative window within which two ratio-test candidates count as tied.
const TIE_TOL: f64 = 1e-12;
/// Basic values below this magnitude are reported as exact zeros.
const ZERO_SNAP: f64 = 1e-13;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum ColKind {
    Structural,
    Slack,
    Artificial,
}

struct Tableau {
    rows: usize,
    width: usize,
    /// Row-major, `rows × width`; the last column is the right-hand side.
    cells: Vec<f64>,
    /// Reduced costs `c_j - c_Bᵀ B⁻¹A_j`; the last entry is `-objective`.
    reduced: Vec<f64>,
    basis: Vec<usize>,
    kinds: Vec<ColKind>,
    /// Rows found linearly dependent at the end of phase one.
    redundant: Vec<bool>,
    iterations: usize,
}

enum Outcome {
    Optimal,
    Unbounded,
}

impl Tableau {
    fn rhs_col(&self) -> usize {
        self.width - 1
    }

    fn at(&self, r: usize, c: usize) -> f64 {
        self.cells[r * self.width + c]
    }

    fn load_costs(&mut self, costs: &[f64]) {
        let w = self.width;
        self.reduced = vec![0.0; w];
        self.reduced[..costs.len()].copy_from_slice(costs);
        for r in 0..self.rows {
            let cb = costs[self.basis[r]];
            if cb != 0.0 {
                let row = &self.cells[r * w..(r + 1) * w];
                for (d, a) in self.reduced.iter_mut().zip(row) {
                    *d -= cb * a;
                }
            }
        }
    }

    fn pivot(&mut self, pr: usize, pc: usize) {
        let w = self.width;
        let p = self.at(pr, pc);
        for v in &mut self.cells[pr * w..(pr + 1) * w] {
            *v /= p;
        }
        self.cells[pr * w + pc] = 1.0;
        let pivot_row: Vec<f64> = self.cells[pr * w..(pr + 1) * w].to_vec();
        for r in 0..self.rows {
            if r == pr {
                continue;
            }
            let f = self.cells[r * w + pc];
            if f != 0.0 {
                let row = &mut self.cells[r * w..(r + 1) * w];
                for (v, a) in row.iter_mut().zip(&pivot_row) {
                    *v -= f * a;
                }
                row[pc] = 0.0;
            }
        }
        let f = self.reduced[pc];
        if f != 0.0 {
            for (d, a) in self.reduced.iter_mut().zip(&pivot_row) {
                *d -= f * a;
            }
            self.reduced[pc] = 0.0;
        }
        self.basis[pr] = pc;
        self.iterations += 1;
    }

    /// Bland's rule: lowest-index improving column.
    fn entering(&self, allow_artificial: bool) -> Option<usize> {
        (0..self.rhs_col()).find(|&j| {
            self.reduced[j] > OPT_TOL && (allow_artificial || self.kinds[j] != ColKind::Artificial)
        })
    }

    /// Minimum-ratio row; ties go to the row whose basic variable has the
    /// lowest index.
    fn leaving(&self, col: usize) -> Option<usize> {
        let rhs = self.rhs_col();
        let mut best: Option<(usize, f64)> = None;
        for r in 0..self.rows {
            if self.redundant[r] {
                continue;
            }
            let a = self.at(r, col);
            if a <= PIVOT_TOL {
                continue;
            }
            let ratio = self.at(r, rhs).max(0.0) / a;
            best = match best {
                None => Some((r, ratio)),
                Some((br, bratio)) => {
                    let window = TIE_TOL * bratio.max(1.0);
                    if ratio < bratio - window {
                        Some((r, ratio))
                    } else if ratio <= bratio + window && self.basis[r] < self.basis[br] {
                        Some((r, ratio.min(bratio)))
                    } else {
                        Some((br, bratio))
                    }
                }
            };
        }
        best.map(|(r, _)| r)
    }

    fn run(&mut self, allow_artificial: bool) -> Result<Outcome, LpError> {
        while let Some(col) = self.entering(allow_artificial) {
            if self.iterations >= ITERATION_LIMIT {
                return Err(LpError::IterationLimit(ITERATION_LIMIT));
            }
            match self.leaving(col) {
                Some(row) => self.pivot(row, col),
                None => return Ok(Outcome::Unbounded),
            }
        }
        Ok(Outcome::Optimal)
    }

    /// Pivots basic artificials out after phase one; rows where that is
    /// impossible are linearly dependent on the others and are retired.
    fn expel_artificials(&mut self) {
        for r in 0..self.rows {
            if self.kinds[self.basis[r]] != ColKind::Artificial {
                continue;
            }
            let replacement = (0..self.rhs_col())
                .find(|&j| self.kinds[j] != ColKind::Artificial && abs(self.at(r, j)) > PIVOT_TOL);
            match replacement {
                Some(col) => self.pivot(r, col),
                None => self.redundant[r] = true,
            }
        }
    }
}

/// Solves `lp`.
///
/// The returned dual vector satisfies `Σ y_i b_i = objective` at optimality
/// and follows the sign conventions documented on [`LpSolution::dual_sign_ok`].
pub fn solve(lp: &LinearProgram) -> Result<LpSolution, LpError> {
    lp.validate()?;

    let n = lp.num_vars();
    let m = lp.num_constraints();
    let sense = match lp.sense {
        Sense::Maximize => 1.0,
        Sense::Minimize => -1.0,
    };

    // Structural columns: (original variable, sign).
    let mut structural: Vec<(usize, f64)> = Vec::with_capacity(n);
    for (j, b) in lp.bounds.iter().enumerate() {
        structural.push((j, 1.0));
        if *b == VarBound::Free {
            structural.push((j, -1.0));
        }
    }
    let ns = structural.len();

    // Per-row multiplier mapping the original row onto the tableau row, and
    // the relation after normalisation.
    let mut row_factor = Vec::with_capacity(m);
    let mut relations = Vec::with_capacity(m);
    for c in &lp.constraints {
        let scale = c.coeffs.iter().fold(0.0f64, |acc, a| acc.max(abs(*a)));
        let scale = if scale > 0.0 { scale } else { 1.0 };
        let flip = if c.rhs < 0.0 { -1.0 } else { 1.0 };
        row_factor.push(flip / scale);
        relations.push(match (c.relation, flip < 0.0) {
            (r, false) => r,
            (Relation::Le, true) => Relation::Ge,
            (Relation::Ge, true) => Relation::Le,
            (Relation::Eq, true) => Relation::Eq,
        });
    }

    let n_surplus = relations.iter().filter(|r| **r == Relation::Ge).count();
    let n_art = relations.iter().filter(|r| **r != Relation::Le).count();
    let n_slack = m - n_art;
    let width = ns + n_slack + n_surplus + n_art + 1;

    let mut kinds = vec![ColKind::Structural; ns];
    kinds.extend(core::iter::repeat_n(ColKind::Slack, n_slack + n_surplus));
    kinds.extend(core::iter::repeat_n(ColKind::Artificial, n_art));

    let mut cells = vec![0.0; m * width];
    let mut basis = vec![0; m];
    // Identity column of each row: its slack or its artificial.
    let mut identity = vec![0; m];
    let (mut next_slack, mut next_art) = (ns, ns + n_slack + n_surplus);
    for (r, c) in lp.constraints.iter().enumerate() {
        let f = row_factor[r];
        let row = &mut cells[r * width..(r + 1) * width];
        for (k, &(j, sign)) in structural.iter().enumerate() {
            row[k] = f * sign * c.coeffs[j];
        }
        row[width - 1] = f * c.rhs;
        match relations[r] {
            Relation::Le => {
                row[next_slack] = 1.0;
                identity[r] = next_slack;
                next_slack += 1;
            }
            Relation::Ge => {
                row[next_slack] = -1.0;
                next_slack += 1;
                row[next_art] = 1.0;
                identity[r] = next_art;
                next_art += 1;
            }
            Relation::Eq => {
                row[next_art] = 1.0;
                identity[r] = next_art;
                next_art += 1;
            }
        }
        basis[r] = identity[r];
    }

    let mut t = Tableau {
        rows: m,
        width,
        cells,
        reduced: Vec::new(),
        basis,
        kinds,
        redundant: vec![false; m],
        iterations: 0,
    };

    if n_art > 0 {
        let phase_one: Vec<f64> = t
            .kinds
            .iter()
            .map(|k| if *k == ColKind::Artificial { -1.0 } else { 0.0 })
            .collect();
        t.load_costs(&phase_one);
        // Phase one is bounded below by zero; it cannot report unbounded.
        t.run(true)?;
        let residual = t.reduced[width - 1];
        let rhs_scale = (0..m).fold(1.0f64, |acc, r| acc.max(abs(t.at(r, width - 1))));
        if residual > FEAS_TOL * rhs_scale {
            return Ok(LpSolution::without_point(
                LpStatus::Infeasible,
                t.iterations,
            ));
        }
        t.expel_artificials();
    }

    let mut costs = vec![0.0; width - 1];
    for (k, &(j, sign)) in structural.iter().enumerate() {
        costs[k] = sense * sign * lp.objective[j];
    }
    t.load_costs(&costs);
    if let Outcome::Unbounded = t.run(false)? {
        return Ok(LpSolution::without_point(LpStatus::Unbounded, t.iterations));
    }

    let mut columns = vec![0.0; width - 1];
    for r in 0..m {
        if !t.redundant[r] {
            let v = t.at(r, width - 1);
            columns[t.basis[r]] = if abs(v) < ZERO_SNAP { 0.0 } else { v.max(0.0) };
        }
    }
    let mut primal = vec![0.0; n];
    for (k, &(j, sign)) in structural.iter().enumerate() {
        primal[j] += sign * columns[k];
    }

    // The identity column of row r has zero cost, so its reduced cost is
    // exactly -y_r for the tableau rows; undo row scaling and sense.
    let dual = (0..m)
        .map(|r| {
            let y = -t.reduced[identity[r]] * row_factor[r] * sense;
            if y == 0.0 {
                0.0
            } else {
                y
            }
        })
        .collect();

    Ok(LpSolution {
        status: LpStatus::Optimal,
        objective: Some(lp.objective_at(&primal)),
        primal,
        dual,
        iterations: t.iterations,
    })
}
