//! Exact dense linear algebra over a [`Field`].
//!
//! Column 0 is the most significant coordinate: echelon forms pivot on the
//! leftmost nonzero entry, so callers list coordinates leading-first.

use num_traits::Zero;

use crate::field::{Field, Scalar};

/// A subspace kept in reduced row echelon form.
#[derive(Clone, Debug)]
pub struct Echelon {
    field: Field,
    ncols: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl Echelon {
    pub fn new(field: Field, ncols: usize) -> Self {
        Echelon {
            field,
            ncols,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_rows(field: Field, ncols: usize, rows: impl IntoIterator<Item = Vec<Scalar>>) -> Self {
        let mut e = Echelon::new(field, ncols);
        for r in rows {
            e.insert(r);
        }
        e
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    /// Rows sorted by pivot column.
    pub fn rows(&self) -> &[Vec<Scalar>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Remainder of `v` after eliminating every pivot column.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let f = self.field;
        let mut v = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            if v[p].is_zero() {
                continue;
            }
            let c = v[p].clone();
            for (x, r) in v.iter_mut().zip(row) {
                if !r.is_zero() {
                    *x = f.sub(x, &f.mul(&c, r));
                }
            }
        }
        v
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        self.reduce(v).iter().all(|x| x.is_zero())
    }

    /// Adds `v` to the span. Returns whether the rank grew.
    pub fn insert(&mut self, v: Vec<Scalar>) -> bool {
        assert_eq!(v.len(), self.ncols);
        let f = self.field;
        let mut v = self.reduce(&v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = f.inv(&v[p]);
        for x in v.iter_mut() {
            if !x.is_zero() {
                *x = f.mul(x, &inv);
            }
        }
        for row in self.rows.iter_mut() {
            if row[p].is_zero() {
                continue;
            }
            let c = row[p].clone();
            for (x, y) in row.iter_mut().zip(&v) {
                if !y.is_zero() {
                    *x = f.sub(x, &f.mul(&c, y));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }
}

/// Basis of `{c : Σ c_i images[i] = 0}` in reduced row echelon form over the
/// index space of `images`. Every image must have length `dim`.
pub fn kernel(field: Field, images: &[Vec<Scalar>], dim: usize) -> Vec<Vec<Scalar>> {
    let n = images.len();
    // matrix with one column per image
    let mut m: Vec<Vec<Scalar>> = (0..dim).map(|r| images.iter().map(|img| img[r].clone()).collect()).collect();
    let mut pivot_cols = Vec::new();
    let mut row = 0;
    for col in 0..n {
        let Some(sel) = (row..m.len()).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(row, sel);
        let inv = field.inv(&m[row][col]);
        for x in m[row].iter_mut() {
            if !x.is_zero() {
                *x = field.mul(x, &inv);
            }
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let c = other[col].clone();
            for (x, y) in other.iter_mut().zip(&pivot_row) {
                if !y.is_zero() {
                    *x = field.sub(x, &field.mul(&c, y));
                }
            }
        }
        pivot_cols.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    let mut basis = Echelon::new(field, n);
    for free in (0..n).filter(|c| !pivot_cols.contains(c)) {
        let mut v = vec![Scalar::zero(); n];
        v[free] = field.one();
        for (r, &pc) in pivot_cols.iter().enumerate() {
            if !m[r][free].is_zero() {
                v[pc] = field.neg(&m[r][free]);
            }
        }
        basis.insert(v);
    }
    basis.rows
}
