use std::fmt;
use std::sync::Arc;

use crate::gf::{FElem, FieldCtx};

/// Dense row-major matrix over a finite field.
#[derive(Clone)]
pub struct Matrix {
    field: Arc<FieldCtx>,
    rows: usize,
    cols: usize,
    data: Vec<FElem>,
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} over GF({})", self.rows, self.cols, self.field.order())?;
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(|x| x.0.to_string()).collect();
            writeln!(f, "  [{}]", row.join(" "))?;
        }
        Ok(())
    }
}

impl Matrix {
    pub fn zeros(field: Arc<FieldCtx>, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![FElem::ZERO; rows * cols] }
    }

    pub fn from_rows(field: Arc<FieldCtx>, cols: usize, rows: &[Vec<FElem>]) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "row length");
            data.extend_from_slice(r);
        }
        Matrix { field, rows: rows.len(), cols, data }
    }

    pub fn field(&self) -> &Arc<FieldCtx> {
        &self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[FElem] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [FElem] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn get(&self, r: usize, c: usize) -> FElem {
        self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: FElem) {
        self.data[r * self.cols + c] = v;
    }

    pub fn to_rows(&self) -> Vec<Vec<FElem>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<FElem> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    /// Reduced row echelon form in place, dropping zero rows. Returns the
    /// pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let f = self.field.clone();
        let cols = self.cols;
        let mut pivots = Vec::new();
        let mut lead = 0;
        for c in 0..cols {
            if lead == self.rows {
                break;
            }
            let Some(pr) = (lead..self.rows).find(|&r| !self.get(r, c).is_zero()) else {
                continue;
            };
            if pr != lead {
                for j in 0..cols {
                    self.data.swap(pr * cols + j, lead * cols + j);
                }
            }
            let inv = f.inv(self.get(lead, c)).expect("pivot is nonzero");
            for x in self.row_mut(lead) {
                *x = f.mul(*x, inv);
            }
            let pivot_row = self.row(lead).to_vec();
            for r in 0..self.rows {
                if r == lead {
                    continue;
                }
                let factor = self.get(r, c);
                if factor.is_zero() {
                    continue;
                }
                let row = self.row_mut(r);
                for j in c..cols {
                    if !pivot_row[j].is_zero() {
                        row[j] = f.sub(row[j], f.mul(factor, pivot_row[j]));
                    }
                }
            }
            pivots.push(c);
            lead += 1;
        }
        self.rows = lead;
        self.data.truncate(lead * cols);
        pivots
    }

    pub fn rank(&self) -> usize {
        self.clone().rref().len()
    }

    /// Basis of `{x : M x^T = 0}`, one vector per row.
    pub fn nullspace(&self) -> Matrix {
        let f = self.field.clone();
        let mut m = self.clone();
        let pivots = m.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Matrix::zeros(f.clone(), free.len(), self.cols);
        for (k, &fc) in free.iter().enumerate() {
            out.set(k, fc, FElem::ONE);
            for (r, &pc) in pivots.iter().enumerate() {
                out.set(k, pc, f.neg(m.get(r, fc)));
            }
        }
        out
    }

    /// `v · M` for a row vector `v` of length `rows`.
    pub fn combine(&self, coeffs: &[FElem]) -> Vec<FElem> {
        let f = &self.field;
        let mut out = vec![FElem::ZERO; self.cols];
        for (r, &c) in coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for (o, &x) in out.iter_mut().zip(self.row(r)) {
                *o = f.add(*o, f.mul(c, x));
            }
        }
        out
    }

    /// Whether `v` lies in the row space; `self` must be in RREF with
    /// `pivots` its pivot columns.
    pub fn rref_contains(&self, pivots: &[usize], v: &[FElem]) -> bool {
        let coeffs: Vec<FElem> = pivots.iter().map(|&c| v[c]).collect();
        self.combine(&coeffs) == v
    }

    /// Column `j` of the result is column `source[j]` of `self`.
    pub fn select_columns(&self, source: &[usize]) -> Matrix {
        let mut out = Matrix::zeros(self.field.clone(), self.rows, source.len());
        for r in 0..self.rows {
            for (j, &s) in source.iter().enumerate() {
                out.set(r, j, self.get(r, s));
            }
        }
        out
    }
}

impl PartialEq for Matrix {
    fn eq(&self, other: &Self) -> bool {
        self.field.same_field(&other.field)
            && self.rows == other.rows
            && self.cols == other.cols
            && self.data == other.data
    }
}

impl Eq for Matrix {}
