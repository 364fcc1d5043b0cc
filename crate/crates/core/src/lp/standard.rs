//! Conversion of a [`LinearProgram`] into the computational standard form
//! used by the simplex kernel: equality rows `Ax = b` over structural
//! columns plus one slack column per inequality row, with bounds kept on
//! the columns.

use super::{LinearProgram, Sense};

/// Column-major sparse matrix.
#[derive(Clone, Debug)]
pub struct CscMatrix {
    pub rows: usize,
    pub cols: usize,
    pub col_ptr: Vec<usize>,
    pub row_idx: Vec<usize>,
    pub values: Vec<f64>,
}

impl CscMatrix {
    pub fn col(&self, j: usize) -> (&[usize], &[f64]) {
        let a = self.col_ptr[j];
        let b = self.col_ptr[j + 1];
        (&self.row_idx[a..b], &self.values[a..b])
    }
}

/// Standard-form workspace: `min c'x  s.t.  Ax = b, l <= x <= u` where the
/// trailing columns are slacks for the original inequality rows.
#[derive(Clone, Debug)]
pub struct StandardForm {
    pub matrix: CscMatrix,
    pub cost: Vec<f64>,
    pub rhs: Vec<f64>,
    pub lower: Vec<f64>,
    pub upper: Vec<f64>,
    /// Number of structural (original) columns.
    pub num_structural: usize,
    /// For each row, the slack column id if the row was an inequality.
    pub slack_of_row: Vec<Option<usize>>,
}

impl StandardForm {
    /// Builds the standard form. `bound_overrides` tightens structural
    /// variable bounds without touching the shared program, which is how
    /// branch-and-bound nodes and restricted problems are expressed.
    pub fn build(lp: &LinearProgram, bound_overrides: &[(usize, f64, f64)]) -> StandardForm {
        let m = lp.constraints.len();
        let n = lp.variables.len();
        let num_slacks = lp.constraints.iter().filter(|c| c.sense != Sense::Eq).count();
        let cols = n + num_slacks;

        let mut lower: Vec<f64> = lp.variables.iter().map(|v| v.lower).collect();
        let mut upper: Vec<f64> = lp.variables.iter().map(|v| v.upper).collect();
        for &(j, lo, up) in bound_overrides {
            lower[j] = lower[j].max(lo);
            upper[j] = upper[j].min(up);
        }
        let mut cost: Vec<f64> = lp.variables.iter().map(|v| v.cost).collect();
        lower.resize(cols, 0.0);
        upper.resize(cols, f64::INFINITY);
        cost.resize(cols, 0.0);

        // Count column occupancy, then fill CSC.
        let mut counts = vec![0usize; cols];
        for c in &lp.constraints {
            for &(j, _) in &c.terms {
                counts[j] += 1;
            }
        }
        let mut slack_of_row = vec![None; m];
        let mut next_slack = n;
        for (r, c) in lp.constraints.iter().enumerate() {
            if c.sense != Sense::Eq {
                counts[next_slack] = 1;
                slack_of_row[r] = Some(next_slack);
                next_slack += 1;
            }
        }

        let mut col_ptr = vec![0usize; cols + 1];
        for j in 0..cols {
            col_ptr[j + 1] = col_ptr[j] + counts[j];
        }
        let nnz = col_ptr[cols];
        let mut row_idx = vec![0usize; nnz];
        let mut values = vec![0.0f64; nnz];
        let mut fill = col_ptr.clone();
        let mut rhs = vec![0.0f64; m];
        for (r, c) in lp.constraints.iter().enumerate() {
            rhs[r] = c.rhs;
            for &(j, a) in &c.terms {
                row_idx[fill[j]] = r;
                values[fill[j]] = a;
                fill[j] += 1;
            }
            if let Some(s) = slack_of_row[r] {
                row_idx[fill[s]] = r;
                // `Ax + s = b` for <=, `Ax - s = b` for >=, slack in [0, inf).
                values[fill[s]] = if c.sense == Sense::Le { 1.0 } else { -1.0 };
                fill[s] += 1;
            }
        }

        StandardForm {
            matrix: CscMatrix { rows: m, cols, col_ptr, row_idx, values },
            cost,
            rhs,
            lower,
            upper,
            num_structural: n,
            slack_of_row,
        }
    }
}
