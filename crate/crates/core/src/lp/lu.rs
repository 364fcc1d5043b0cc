//! Sparse LU factorization of the simplex basis with product-form eta
//! updates between refactorizations.
//!
//! Entries are stored column-wise. Row pivoting is by largest magnitude
//! among not-yet-pivoted rows (Gilbert–Peierls style left-looking sweep
//! with a dense accumulator), which keeps the factors well-conditioned at
//! the problem sizes this crate targets.

use super::LpError;

/// One rank-one basis replacement: basis slot `slot` received a column
/// whose ftran image was `alpha` (sparse over slots) with pivot `alpha_r`.
struct Eta {
    slot: usize,
    pivot: f64,
    /// (slot, alpha value) pairs excluding the pivot slot.
    entries: Vec<(usize, f64)>,
}

pub struct BasisFactors {
    m: usize,
    /// Unit lower factor, columns in elimination order; entries (position, value), position > column.
    l_cols: Vec<Vec<(usize, f64)>>,
    /// Upper factor, entries (position, value) with position < column; diagonal kept separately.
    u_cols: Vec<Vec<(usize, f64)>>,
    u_diag: Vec<f64>,
    /// position -> original row.
    row_of_pos: Vec<usize>,
    /// original row -> position.
    pos_of_row: Vec<usize>,
    etas: Vec<Eta>,
    work: Vec<f64>,
}

impl BasisFactors {
    pub fn new(m: usize) -> Self {
        BasisFactors {
            m,
            l_cols: Vec::new(),
            u_cols: Vec::new(),
            u_diag: Vec::new(),
            row_of_pos: Vec::new(),
            pos_of_row: Vec::new(),
            etas: Vec::new(),
            work: vec![0.0; m],
        }
    }

    pub fn updates_since_refactor(&self) -> usize {
        self.etas.len()
    }

    /// Factorizes the basis given by `columns`, each a sparse column
    /// (original row index, value). Any previous factors and etas are dropped.
    pub fn refactorize(&mut self, columns: &[Vec<(usize, f64)>]) -> Result<(), LpError> {
        let m = self.m;
        assert_eq!(columns.len(), m, "basis must have one column per row");
        self.etas.clear();
        self.l_cols.clear();
        self.u_cols.clear();
        self.u_diag.clear();
        self.l_cols.resize_with(m, Vec::new);
        self.u_cols.resize_with(m, Vec::new);
        self.u_diag.resize(m, 0.0);

        // During elimination, L entries are tracked by original row; they are
        // translated to positions once every pivot row is known.
        let mut pivot_row_of_col = vec![usize::MAX; m];
        let mut pos_of_row = vec![usize::MAX; m];
        let mut l_rows: Vec<Vec<(usize, f64)>> = vec![Vec::new(); m];

        let w = &mut self.work;
        let mut touched: Vec<usize> = Vec::with_capacity(64);

        for k in 0..m {
            for &(r, v) in &columns[k] {
                if w[r] == 0.0 {
                    touched.push(r);
                }
                w[r] += v;
            }
            // Forward substitution against columns already eliminated.
            let ucol = &mut self.u_cols[k];
            for j in 0..k {
                let pr = pivot_row_of_col[j];
                let wj = w[pr];
                if wj != 0.0 {
                    ucol.push((j, wj));
                    w[pr] = 0.0;
                    for &(r, l) in &l_rows[j] {
                        if w[r] == 0.0 {
                            touched.push(r);
                        }
                        w[r] -= l * wj;
                    }
                }
            }
            // Pivot: largest remaining magnitude.
            let mut best = 0.0f64;
            let mut best_row = usize::MAX;
            for &r in touched.iter() {
                if pos_of_row[r] == usize::MAX && w[r].abs() > best {
                    best = w[r].abs();
                    best_row = r;
                }
            }
            if best_row == usize::MAX || best < 1e-11 {
                for &r in &touched {
                    w[r] = 0.0;
                }
                touched.clear();
                return Err(LpError::SingularBasis);
            }
            let diag = w[best_row];
            self.u_diag[k] = diag;
            pivot_row_of_col[k] = best_row;
            pos_of_row[best_row] = k;
            w[best_row] = 0.0;
            for &r in &touched {
                let v = w[r];
                w[r] = 0.0;
                if v != 0.0 && pos_of_row[r] == usize::MAX {
                    l_rows[k].push((r, v / diag));
                }
            }
            touched.clear();
        }

        // Translate L storage from original rows to final positions.
        for (k, col) in l_rows.into_iter().enumerate() {
            let out = &mut self.l_cols[k];
            out.reserve(col.len());
            for (r, v) in col {
                out.push((pos_of_row[r], v));
            }
        }
        self.pos_of_row = pos_of_row;
        self.row_of_pos = vec![0; m];
        for (r, &p) in self.pos_of_row.iter().enumerate() {
            self.row_of_pos[p] = r;
        }
        Ok(())
    }

    /// Solves `B x = v`. Input is indexed by original row; the result is
    /// indexed by basis slot.
    pub fn ftran(&mut self, v: &mut Vec<f64>) {
        let m = self.m;
        debug_assert_eq!(v.len(), m);
        let w = &mut self.work;
        for r in 0..m {
            w[self.pos_of_row[r]] = v[r];
        }
        // L solve in position space.
        for j in 0..m {
            let t = w[j];
            if t != 0.0 {
                for &(i, l) in &self.l_cols[j] {
                    w[i] -= l * t;
                }
            }
        }
        // U solve: result indexed by basis slot (= elimination column).
        for j in (0..m).rev() {
            let t = w[j];
            if t != 0.0 {
                let x = t / self.u_diag[j];
                w[j] = x;
                for &(i, u) in &self.u_cols[j] {
                    w[i] -= u * x;
                }
            }
        }
        v.copy_from_slice(w);
        for x in w.iter_mut() {
            *x = 0.0;
        }
        // Product-form updates, oldest first.
        for eta in &self.etas {
            let t = v[eta.slot] / eta.pivot;
            if t != 0.0 || v[eta.slot] != 0.0 {
                for &(i, a) in &eta.entries {
                    v[i] -= a * t;
                }
            }
            v[eta.slot] = t;
        }
    }

    /// Solves `B' y = c` where the input is indexed by basis slot and the
    /// result by original row (so `y . B[:, k] = c[k]` for every slot k).
    pub fn btran(&mut self, c: &mut Vec<f64>) {
        let m = self.m;
        debug_assert_eq!(c.len(), m);
        for eta in self.etas.iter().rev() {
            let mut acc = c[eta.slot];
            for &(i, a) in &eta.entries {
                acc -= a * c[i];
            }
            c[eta.slot] = acc / eta.pivot;
        }
        let w = &mut self.work;
        // U' solve, ascending slots.
        for j in 0..m {
            let mut acc = c[j];
            for &(i, u) in &self.u_cols[j] {
                acc -= u * w[i];
            }
            w[j] = acc / self.u_diag[j];
        }
        // L' solve, descending.
        for j in (0..m).rev() {
            let mut acc = w[j];
            for &(i, l) in &self.l_cols[j] {
                acc -= l * w[i];
            }
            w[j] = acc;
        }
        for p in 0..m {
            c[self.row_of_pos[p]] = w[p];
        }
        for x in w.iter_mut() {
            *x = 0.0;
        }
    }

    /// Records the replacement of basis slot `slot` by a column whose ftran
    /// image is `alpha` (dense, indexed by slot).
    pub fn push_update(&mut self, slot: usize, alpha: &[f64]) -> Result<(), LpError> {
        let pivot = alpha[slot];
        if pivot.abs() < 1e-11 {
            return Err(LpError::SingularBasis);
        }
        let mut entries = Vec::new();
        for (i, &a) in alpha.iter().enumerate() {
            if i != slot && a != 0.0 {
                entries.push((i, a));
            }
        }
        self.etas.push(Eta { slot, pivot, entries });
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dense_mul(cols: &[Vec<(usize, f64)>], x: &[f64], m: usize) -> Vec<f64> {
        let mut out = vec![0.0; m];
        for (k, col) in cols.iter().enumerate() {
            for &(r, v) in col {
                out[r] += v * x[k];
            }
        }
        out
    }

    #[test]
    fn ftran_btran_roundtrip() {
        // 4x4 with a permuted, non-trivial pattern.
        let cols: Vec<Vec<(usize, f64)>> = vec![
            vec![(0, 2.0), (2, 1.0)],
            vec![(1, -1.0), (3, 4.0)],
            vec![(0, 1.0), (1, 3.0), (2, -2.0)],
            vec![(3, 5.0), (0, 0.5)],
        ];
        let mut f = BasisFactors::new(4);
        f.refactorize(&cols).unwrap();

        let mut v = vec![1.0, 2.0, 3.0, 4.0];
        let rhs = v.clone();
        f.ftran(&mut v);
        let back = dense_mul(&cols, &v, 4);
        for i in 0..4 {
            assert!((back[i] - rhs[i]).abs() < 1e-10, "ftran residual {back:?}");
        }

        let mut c = vec![0.5, -1.0, 2.0, 0.0];
        let cb = c.clone();
        f.btran(&mut c);
        for (k, col) in cols.iter().enumerate() {
            let dot: f64 = col.iter().map(|&(r, v)| c[r] * v).sum();
            assert!((dot - cb[k]).abs() < 1e-10, "btran residual at slot {k}");
        }
    }

    #[test]
    fn eta_update_matches_refactorization() {
        let mut cols: Vec<Vec<(usize, f64)>> = vec![
            vec![(0, 1.0)],
            vec![(1, 2.0), (0, 1.0)],
            vec![(2, -1.0), (1, 0.5)],
        ];
        let mut f = BasisFactors::new(3);
        f.refactorize(&cols).unwrap();

        // Replace slot 1 with a new column.
        let newcol = vec![(0, 3.0), (2, 1.0)];
        let mut alpha = vec![0.0; 3];
        for &(r, v) in &newcol {
            alpha[r] = v;
        }
        f.ftran(&mut alpha);
        f.push_update(1, &alpha).unwrap();
        cols[1] = newcol;

        let mut v = vec![1.0, -2.0, 0.5];
        let rhs = v.clone();
        f.ftran(&mut v);
        let back = dense_mul(&cols, &v, 3);
        for i in 0..3 {
            assert!((back[i] - rhs[i]).abs() < 1e-10);
        }

        let mut c = vec![1.0, 1.0, 1.0];
        let cb = c.clone();
        f.btran(&mut c);
        for (k, col) in cols.iter().enumerate() {
            let dot: f64 = col.iter().map(|&(r, v)| c[r] * v).sum();
            assert!((dot - cb[k]).abs() < 1e-10);
        }
    }

    #[test]
    fn singular_basis_rejected() {
        let cols: Vec<Vec<(usize, f64)>> = vec![vec![(0, 1.0)], vec![(0, 2.0)]];
        let mut f = BasisFactors::new(2);
        assert!(matches!(f.refactorize(&cols), Err(LpError::SingularBasis)));
    }
}
