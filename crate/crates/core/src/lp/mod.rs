//! Linear-programming kernel: problem construction, a bounded-variable
//! two-phase simplex solver, dual extraction, dualization, and reduced costs.

mod dual;
mod lu;
mod simplex;
mod standard;
mod writer;

pub use dual::{dual_objective, dualize, reduced_costs};
pub use simplex::{solve_lp, solve_lp_with_bounds};
pub use writer::write_lp_text;

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Constraint sense of a single row.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Sense {
    #[serde(rename = "le")]
    Le,
    #[serde(rename = "ge")]
    Ge,
    #[serde(rename = "eq")]
    Eq,
}

impl Sense {
    pub fn symbol(self) -> &'static str {
        match self {
            Sense::Le => "<=",
            Sense::Ge => ">=",
            Sense::Eq => "=",
        }
    }
}

/// A decision variable: bounds may be infinite on either side.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Variable {
    pub name: String,
    pub lower: f64,
    pub upper: f64,
    pub cost: f64,
}

impl Variable {
    pub fn new(name: impl Into<String>, lower: f64, upper: f64, cost: f64) -> Self {
        Variable { name: name.into(), lower, upper, cost }
    }

    pub fn is_fixed(&self) -> bool {
        self.lower == self.upper
    }
}

/// A sparse constraint row: `sum(coef * var) sense rhs`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Constraint {
    pub name: String,
    /// (column id, coefficient) pairs; at most one entry per column.
    pub terms: Vec<(usize, f64)>,
    pub sense: Sense,
    pub rhs: f64,
}

impl Constraint {
    pub fn new(name: impl Into<String>, terms: Vec<(usize, f64)>, sense: Sense, rhs: f64) -> Self {
        Constraint { name: name.into(), terms, sense, rhs }
    }

    /// Evaluates the row's left-hand side at the given point.
    pub fn lhs_at(&self, x: &[f64]) -> f64 {
        self.terms.iter().map(|&(j, a)| a * x[j]).sum()
    }
}

/// A minimization linear program with bounded variables and sparse rows.
#[derive(Clone, Debug, Default, Serialize, Deserialize)]
pub struct LinearProgram {
    pub name: String,
    pub variables: Vec<Variable>,
    pub constraints: Vec<Constraint>,
}

impl LinearProgram {
    pub fn new(name: impl Into<String>) -> Self {
        LinearProgram { name: name.into(), variables: Vec::new(), constraints: Vec::new() }
    }

    pub fn num_variables(&self) -> usize {
        self.variables.len()
    }

    pub fn num_constraints(&self) -> usize {
        self.constraints.len()
    }

    pub fn add_variable(&mut self, name: impl Into<String>, lower: f64, upper: f64, cost: f64) -> usize {
        self.variables.push(Variable::new(name, lower, upper, cost));
        self.variables.len() - 1
    }

    pub fn add_constraint(
        &mut self,
        name: impl Into<String>,
        terms: Vec<(usize, f64)>,
        sense: Sense,
        rhs: f64,
    ) -> usize {
        self.constraints.push(Constraint::new(name, terms, sense, rhs));
        self.constraints.len() - 1
    }

    pub fn objective_at(&self, x: &[f64]) -> f64 {
        self.variables.iter().zip(x).map(|(v, &xi)| v.cost * xi).sum()
    }

    /// Structural validation, run before any solve. Rejects dangling column
    /// references, duplicate (row, column) entries, non-finite data, and
    /// crossed bounds. Distinct from `Infeasible`, which is a property of a
    /// well-formed program.
    pub fn validate(&self) -> Result<(), LpError> {
        for (i, v) in self.variables.iter().enumerate() {
            if v.cost.is_nan() || v.cost.is_infinite() {
                return Err(LpError::Malformed(format!(
                    "variable {} ({}) has non-finite cost {}",
                    i, v.name, v.cost
                )));
            }
            if v.lower.is_nan() || v.upper.is_nan() {
                return Err(LpError::Malformed(format!("variable {} ({}) has NaN bound", i, v.name)));
            }
            if v.lower > v.upper {
                return Err(LpError::Malformed(format!(
                    "variable {} ({}) has lower bound {} > upper bound {}",
                    i, v.name, v.lower, v.upper
                )));
            }
        }
        let n = self.variables.len();
        let mut seen = vec![usize::MAX; n];
        for (r, c) in self.constraints.iter().enumerate() {
            if !c.rhs.is_finite() {
                return Err(LpError::Malformed(format!(
                    "constraint {} ({}) has non-finite rhs {}",
                    r, c.name, c.rhs
                )));
            }
            for &(j, a) in &c.terms {
                if j >= n {
                    return Err(LpError::Malformed(format!(
                        "constraint {} ({}) references unknown variable {}",
                        r, c.name, j
                    )));
                }
                if !a.is_finite() {
                    return Err(LpError::Malformed(format!(
                        "constraint {} ({}) has non-finite coefficient on column {}",
                        r, c.name, j
                    )));
                }
                if seen[j] == r {
                    return Err(LpError::Malformed(format!(
                        "constraint {} ({}) has duplicate entry for column {}",
                        r, c.name, j
                    )));
                }
                seen[j] = r;
            }
        }
        Ok(())
    }
}

/// Solver outcome classification.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

/// Result of an LP solve. `primal` and `duals` are empty unless `Optimal`;
/// `objective` is `+inf` for infeasible and `-inf` for unbounded programs
/// (minimization conventions).
#[derive(Clone, Debug)]
pub struct LpSolution {
    pub status: LpStatus,
    pub primal: Vec<f64>,
    /// One dual per constraint row. Sign conventions for a minimization:
    /// `<=` rows have duals <= 0, `>=` rows >= 0, `=` rows are free.
    pub duals: Vec<f64>,
    pub objective: f64,
    pub iterations: usize,
}

impl LpSolution {
    pub fn is_optimal(&self) -> bool {
        self.status == LpStatus::Optimal
    }
}

/// Numerical tolerances for the simplex kernel.
#[derive(Clone, Copy, Debug)]
pub struct Tolerances {
    /// Bound/row violation accepted as feasible.
    pub feasibility: f64,
    /// Reduced-cost threshold for optimality.
    pub optimality: f64,
    /// Smallest pivot magnitude accepted in the ratio test.
    pub pivot: f64,
    /// Consecutive degenerate pivots before switching to Bland's rule.
    pub stall_threshold: usize,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances { feasibility: 1e-7, optimality: 1e-7, pivot: 1e-9, stall_threshold: 50 }
    }
}

#[derive(Debug, Error)]
pub enum LpError {
    #[error("malformed program: {0}")]
    Malformed(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("iteration limit {0} exceeded")]
    IterationLimit(usize),
    #[error("singular basis encountered during refactorization")]
    SingularBasis,
}
