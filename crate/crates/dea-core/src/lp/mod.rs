//! Dense linear programming.
//!
//! [`LinearProgram`] is a small general-form description (objective sense,
//! `≤ / = / ≥` rows, nonnegative or free variables) and [`solve`] runs a
//! two-phase primal simplex on a dense tableau with Bland's rule. The solver
//! returns a primal vertex together with one dual multiplier per row.

mod simplex;

#[cfg(feature = "oracle")]
pub mod oracle;

use alloc::vec::Vec;

pub use simplex::solve;

/// Entries smaller than this in magnitude are never used as pivots.
pub const PIVOT_TOL: f64 = 1e-9;

/// Feasibility tolerance: phase-one residual, constraint checks, duality gap.
pub const FEAS_TOL: f64 = 1e-7;

/// Hard cap on simplex pivots across both phases.
pub const ITERATION_LIMIT: usize = 10_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Sense {
    Minimize,
    Maximize,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Eq,
    Ge,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VarBound {
    NonNegative,
    Free,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Constraint {
    pub coeffs: Vec<f64>,
    pub relation: Relation,
    pub rhs: f64,
}

impl Constraint {
    pub fn activity(&self, x: &[f64]) -> f64 {
        dot(&self.coeffs, x)
    }
}

/// A linear program in general form.
///
/// All variables default to nonnegative; call [`LinearProgram::set_free`] to
/// lift the bound on a variable.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearProgram {
    pub sense: Sense,
    pub objective: Vec<f64>,
    pub constraints: Vec<Constraint>,
    pub bounds: Vec<VarBound>,
}

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum LpError {
    #[error("constraint {row} has {found} coefficients, expected {expected}")]
    RowLength {
        row: usize,
        expected: usize,
        found: usize,
    },
    #[error("{found} variable bounds given for {expected} variables")]
    BoundsLength { expected: usize, found: usize },
    #[error("non-finite objective coefficient at variable {var}")]
    NonFiniteObjective { var: usize },
    #[error("non-finite coefficient in constraint {row}, variable {var}")]
    NonFiniteCoefficient { row: usize, var: usize },
    #[error("non-finite right-hand side in constraint {row}")]
    NonFiniteRhs { row: usize },
    #[error("simplex did not terminate within {0} pivots")]
    IterationLimit(usize),
    #[error("vertex enumeration supports at most {max} variables, got {found}")]
    TooManyVariables { max: usize, found: usize },
}

impl LinearProgram {
    pub fn new(sense: Sense, objective: Vec<f64>) -> Self {
        let bounds = alloc::vec![VarBound::NonNegative; objective.len()];
        Self {
            sense,
            objective,
            constraints: Vec::new(),
            bounds,
        }
    }

    pub fn maximize(objective: Vec<f64>) -> Self {
        Self::new(Sense::Maximize, objective)
    }

    pub fn minimize(objective: Vec<f64>) -> Self {
        Self::new(Sense::Minimize, objective)
    }

    pub fn num_vars(&self) -> usize {
        self.objective.len()
    }

    pub fn num_constraints(&self) -> usize {
        self.constraints.len()
    }

    pub fn add(&mut self, coeffs: Vec<f64>, relation: Relation, rhs: f64) -> &mut Self {
        self.constraints.push(Constraint {
            coeffs,
            relation,
            rhs,
        });
        self
    }

    pub fn le(mut self, coeffs: Vec<f64>, rhs: f64) -> Self {
        self.add(coeffs, Relation::Le, rhs);
        self
    }

    pub fn eq(mut self, coeffs: Vec<f64>, rhs: f64) -> Self {
        self.add(coeffs, Relation::Eq, rhs);
        self
    }

    pub fn ge(mut self, coeffs: Vec<f64>, rhs: f64) -> Self {
        self.add(coeffs, Relation::Ge, rhs);
        self
    }

    pub fn set_free(&mut self, var: usize) -> &mut Self {
        self.bounds[var] = VarBound::Free;
        self
    }

    /// Checks dimensions and finiteness.
    pub fn validate(&self) -> Result<(), LpError> {
        let n = self.num_vars();
        if self.bounds.len() != n {
            return Err(LpError::BoundsLength {
                expected: n,
                found: self.bounds.len(),
            });
        }
        if let Some(var) = self.objective.iter().position(|c| !c.is_finite()) {
            return Err(LpError::NonFiniteObjective { var });
        }
        for (row, c) in self.constraints.iter().enumerate() {
            if c.coeffs.len() != n {
                return Err(LpError::RowLength {
                    row,
                    expected: n,
                    found: c.coeffs.len(),
                });
            }
            if let Some(var) = c.coeffs.iter().position(|a| !a.is_finite()) {
                return Err(LpError::NonFiniteCoefficient { row, var });
            }
            if !c.rhs.is_finite() {
                return Err(LpError::NonFiniteRhs { row });
            }
        }
        Ok(())
    }

    pub fn objective_at(&self, x: &[f64]) -> f64 {
        dot(&self.objective, x)
    }

    /// Largest scaled violation of any row or variable bound at `x`.
    ///
    /// Row violations are divided by `max(1, |rhs|, Σ|a_j x_j|)` so the
    /// measure is insensitive to the magnitude of the data.
    pub fn max_violation(&self, x: &[f64]) -> f64 {
        let mut worst = 0.0f64;
        for c in &self.constraints {
            let act = c.activity(x);
            let scale = c
                .coeffs
                .iter()
                .zip(x)
                .map(|(a, v)| abs(a * v))
                .sum::<f64>()
                .max(abs(c.rhs))
                .max(1.0);
            let gap = act - c.rhs;
            let v = match c.relation {
                Relation::Le => gap.max(0.0),
                Relation::Ge => (-gap).max(0.0),
                Relation::Eq => abs(gap),
            };
            worst = worst.max(v / scale);
        }
        for (b, v) in self.bounds.iter().zip(x) {
            if *b == VarBound::NonNegative {
                worst = worst.max(-v);
            }
        }
        worst
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

/// Solver verdict. `objective`, `primal` and `dual` are populated only when
/// the status is [`LpStatus::Optimal`].
#[derive(Debug, Clone, PartialEq)]
pub struct LpSolution {
    pub status: LpStatus,
    pub objective: Option<f64>,
    pub primal: Vec<f64>,
    /// One multiplier per constraint, in the original row order and sign
    /// convention of the program (see [`LpSolution::dual_sign_ok`]).
    pub dual: Vec<f64>,
    pub iterations: usize,
}

impl LpSolution {
    pub(crate) fn without_point(status: LpStatus, iterations: usize) -> Self {
        Self {
            status,
            objective: None,
            primal: Vec::new(),
            dual: Vec::new(),
            iterations,
        }
    }

    pub fn is_optimal(&self) -> bool {
        self.status == LpStatus::Optimal
    }

    /// Objective of the dual program, `Σ y_i b_i`.
    pub fn dual_objective(&self, lp: &LinearProgram) -> f64 {
        self.dual
            .iter()
            .zip(&lp.constraints)
            .map(|(y, c)| y * c.rhs)
            .sum()
    }

    /// Sign conventions of the Lagrange multipliers.
    ///
    /// For maximization a `≤` row has `y ≥ 0` and a `≥` row `y ≤ 0`; for
    /// minimization the signs flip. Equality rows are unrestricted.
    pub fn dual_sign_ok(&self, lp: &LinearProgram, tol: f64) -> bool {
        let flip = match lp.sense {
            Sense::Maximize => 1.0,
            Sense::Minimize => -1.0,
        };
        self.dual
            .iter()
            .zip(&lp.constraints)
            .all(|(y, c)| match c.relation {
                Relation::Le => flip * y >= -tol,
                Relation::Ge => flip * y <= tol,
                Relation::Eq => true,
            })
    }

    /// Reduced costs `c_j - yᵀA_j` have the right sign for every column:
    /// nonpositive (maximize) or nonnegative (minimize) on nonnegative
    /// variables and zero on free ones.
    pub fn dual_feasible(&self, lp: &LinearProgram, tol: f64) -> bool {
        let flip = match lp.sense {
            Sense::Maximize => 1.0,
            Sense::Minimize => -1.0,
        };
        (0..lp.num_vars()).all(|j| {
            let ya: f64 = self
                .dual
                .iter()
                .zip(&lp.constraints)
                .map(|(y, c)| y * c.coeffs[j])
                .sum();
            let reduced = flip * (lp.objective[j] - ya);
            let scale = 1.0 + abs(lp.objective[j]) + abs(ya);
            match lp.bounds[j] {
                VarBound::NonNegative => reduced <= tol * scale,
                VarBound::Free => abs(reduced) <= tol * scale,
            }
        })
    }
}

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

#[inline]
pub(crate) fn abs(x: f64) -> f64 {
    if x < 0.0 {
        -x
    } else {
        x
    }
}
