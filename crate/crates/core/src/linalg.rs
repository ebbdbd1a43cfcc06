//! Dense linear algebra over F_p: row reduction, rank, nullspace, and an
//! incrementally grown reduced echelon basis.

use crate::field::{FieldElement, PrimeField};

/// Row-reduced echelon form in place. Returns the pivot columns; zero rows
/// are removed. Pivots are taken left to right, first nonzero row wins.
pub fn rref(field: &PrimeField, rows: &mut Vec<Vec<FieldElement>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, |r| r.len());
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(k) = (r..rows.len()).find(|&k| rows[k][c] != 0) else { continue };
        rows.swap(r, k);
        let inv = field.inv(rows[r][c]).unwrap();
        for v in rows[r].iter_mut() {
            *v = field.mul(*v, inv);
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && row[c] != 0 {
                let f = row[c];
                axpy(field, row, f, &pivot_row, c);
            }
        }
        pivots.push(c);
        r += 1;
    }
    rows.truncate(r);
    pivots
}

/// `row -= f * src`, touching only columns from `start` on.
#[inline]
fn axpy(field: &PrimeField, row: &mut [FieldElement], f: FieldElement, src: &[FieldElement], start: usize) {
    let p = field.p() as u64;
    let nf = p - f as u64;
    for (a, &b) in row[start..].iter_mut().zip(&src[start..]) {
        if b != 0 {
            *a = ((*a as u64 + nf * b as u64) % p) as u32;
        }
    }
}

pub fn rank(field: &PrimeField, rows: &[Vec<FieldElement>]) -> usize {
    let mut m = rows.to_vec();
    rref(field, &mut m).len()
}

/// Basis of `{v : M v = 0}` for the matrix with the given rows and `ncols` columns.
pub fn nullspace(field: &PrimeField, rows: &[Vec<FieldElement>], ncols: usize) -> Vec<Vec<FieldElement>> {
    let mut m = rows.to_vec();
    let pivots = rref(field, &mut m);
    let mut is_pivot = vec![false; ncols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    let mut out = Vec::new();
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0; ncols];
        v[free] = 1;
        for (row, &c) in m.iter().zip(&pivots) {
            v[c] = field.neg(row[free]);
        }
        out.push(v);
    }
    out
}

/// A subspace of F_p^n kept in reduced echelon form.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: PrimeField,
    ncols: usize,
    rows: Vec<Vec<FieldElement>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(field: PrimeField, ncols: usize) -> Self {
        EchelonBasis { field, ncols, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn from_rows(field: PrimeField, ncols: usize, rows: impl IntoIterator<Item = Vec<FieldElement>>) -> Self {
        let mut b = Self::new(field, ncols);
        for r in rows {
            b.insert(r);
        }
        b
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<FieldElement>] {
        &self.rows
    }

    /// Residue of `v` after clearing every pivot column.
    pub fn reduce(&self, mut v: Vec<FieldElement>) -> Vec<FieldElement> {
        assert_eq!(v.len(), self.ncols, "vector length mismatch");
        for (row, &c) in self.rows.iter().zip(&self.pivots) {
            if v[c] != 0 {
                let f = v[c];
                axpy(&self.field, &mut v, f, row, c);
            }
        }
        v
    }

    pub fn contains(&self, v: &[FieldElement]) -> bool {
        self.reduce(v.to_vec()).iter().all(|&x| x == 0)
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, v: Vec<FieldElement>) -> bool {
        let mut v = self.reduce(v);
        let Some(c) = v.iter().position(|&x| x != 0) else { return false };
        let inv = self.field.inv(v[c]).unwrap();
        for x in v.iter_mut() {
            *x = self.field.mul(*x, inv);
        }
        for row in self.rows.iter_mut() {
            if row[c] != 0 {
                let f = row[c];
                axpy(&self.field, row, f, &v, c);
            }
        }
        self.rows.push(v);
        self.pivots.push(c);
        true
    }

    pub fn contains_all(&self, other: &EchelonBasis) -> bool {
        other.rows.iter().all(|r| self.contains(r))
    }
}
