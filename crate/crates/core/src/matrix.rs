//! Dense matrices over `F_{q^2}` and Gaussian elimination.

use crate::field::{Fe, Field};

/// Row-major matrix of field elements.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Matrix {
        Matrix { rows, cols, data: vec![Fe::ZERO; rows * cols] }
    }

    pub fn from_rows(rows: Vec<Vec<Fe>>) -> Matrix {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c));
        Matrix { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }
    pub fn cols(&self) -> usize {
        self.cols
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Fe {
        self.data[r * self.cols + c]
    }

    #[inline]
    pub fn set(&mut self, r: usize, c: usize, v: Fe) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Fe] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn column(&self, c: usize) -> Vec<Fe> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c));
            }
        }
        t
    }

    /// Reduce in place to reduced row-echelon form; returns the rank.
    pub fn rref_in_place(&mut self, f: &Field) -> usize {
        let mut pivot_row = 0;
        for col in 0..self.cols {
            if pivot_row == self.rows {
                break;
            }
            let Some(sel) = (pivot_row..self.rows).find(|&r| !self.get(r, col).is_zero()) else {
                continue;
            };
            self.swap_rows(pivot_row, sel);
            let inv = f.inv(self.get(pivot_row, col)).expect("pivot is nonzero");
            for c in col..self.cols {
                let v = self.get(pivot_row, c);
                self.set(pivot_row, c, f.mul(v, inv));
            }
            for r in 0..self.rows {
                if r == pivot_row {
                    continue;
                }
                let factor = self.get(r, col);
                if factor.is_zero() {
                    continue;
                }
                for c in col..self.cols {
                    let v = f.sub(self.get(r, c), f.mul(factor, self.get(pivot_row, c)));
                    self.set(r, c, v);
                }
            }
            pivot_row += 1;
        }
        pivot_row
    }

    /// Rank and reduced row-echelon form, leaving `self` untouched.
    pub fn rank_rref(&self, f: &Field) -> (usize, Matrix) {
        let mut m = self.clone();
        let rank = m.rref_in_place(f);
        (rank, m)
    }

    pub fn rank(&self, f: &Field) -> usize {
        self.clone().rref_in_place(f)
    }

    /// Basis of the right kernel `{v : M v = 0}`, each vector normalized with
    /// a leading 1 at its free column. Deterministic for a fixed matrix.
    pub fn kernel_basis(&self, f: &Field) -> Vec<Vec<Fe>> {
        let (rank, r) = self.rank_rref(f);
        let mut pivot_of_col = vec![None; self.cols];
        let mut next = 0;
        for row in 0..rank {
            while next < self.cols && r.get(row, next).is_zero() {
                next += 1;
            }
            if next < self.cols {
                pivot_of_col[next] = Some(row);
            }
        }
        let mut basis = Vec::new();
        for free in 0..self.cols {
            if pivot_of_col[free].is_some() {
                continue;
            }
            let mut v = vec![Fe::ZERO; self.cols];
            v[free] = Fe::ONE;
            for (col, &p) in pivot_of_col.iter().enumerate() {
                if let Some(row) = p {
                    v[col] = f.neg(r.get(row, free));
                }
            }
            basis.push(v);
        }
        basis
    }

    /// Rows of the RREF with zero rows dropped: a canonical basis of the row
    /// space. Two matrices have equal row spaces iff these coincide.
    pub fn row_space_canonical(&self, f: &Field) -> Vec<Vec<Fe>> {
        let (rank, r) = self.rank_rref(f);
        (0..rank).map(|i| r.row(i).to_vec()).collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }
}

/// Reduce `v` against an echelon basis (each with a known leading index),
/// appending nothing. Returns the reduced vector.
pub fn reduce_against(f: &Field, basis: &[(usize, Vec<Fe>)], v: &[Fe]) -> Vec<Fe> {
    let mut out = v.to_vec();
    for (lead, row) in basis {
        let factor = out[*lead];
        if factor.is_zero() {
            continue;
        }
        for (o, r) in out.iter_mut().zip(row) {
            *o = f.sub(*o, f.mul(factor, *r));
        }
    }
    out
}

/// Normalize so the leading entry is 1; returns the leading index, or `None`
/// if the vector is zero.
pub fn normalize_lead(f: &Field, v: &mut [Fe]) -> Option<usize> {
    let lead = v.iter().position(|x| !x.is_zero())?;
    let inv = f.inv(v[lead]).expect("leading entry is nonzero");
    for x in v.iter_mut() {
        *x = f.mul(*x, inv);
    }
    Some(lead)
}

/// Incremental echelon basis for column-subset searches: rows kept reduced
/// against each other is not required, only distinct leading indices.
#[derive(Debug, Clone, Default)]
pub struct Echelon {
    rows: Vec<(usize, Vec<Fe>)>,
}

impl Echelon {
    pub fn new() -> Echelon {
        Echelon { rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Try to insert `v`; returns `false` iff `v` lies in the current span
    /// (i.e. reduces to zero).
    pub fn insert(&mut self, f: &Field, v: &[Fe]) -> bool {
        let mut u = reduce_against(f, &self.rows, v);
        match normalize_lead(f, &mut u) {
            None => false,
            Some(lead) => {
                self.rows.push((lead, u));
                true
            }
        }
    }

    /// Does `v` reduce to zero against the current basis?
    pub fn contains(&self, f: &Field, v: &[Fe]) -> bool {
        reduce_against(f, &self.rows, v).iter().all(Fe::is_zero)
    }
}
