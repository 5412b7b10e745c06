//! Square matrices over GF(q) acting on row vectors, plus row reduction.

use super::field::{FieldElement, FieldSpec};
use crate::error::{Error, Result};

/// An invertible n x n matrix over a finite field, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixGL {
    n: usize,
    entries: Vec<FieldElement>,
}

impl MatrixGL {
    /// Builds a matrix, verifying invertibility over `field`.
    pub fn new(field: &FieldSpec, n: usize, entries: Vec<FieldElement>) -> Result<Self> {
        if entries.len() != n * n {
            return Err(Error::InvalidArgument(format!(
                "expected {} entries, found {}",
                n * n,
                entries.len()
            )));
        }
        let m = MatrixGL { n, entries };
        if rank(field, n, &m.rows()) != n {
            return Err(Error::InvalidArgument("matrix is singular".into()));
        }
        Ok(m)
    }

    pub fn identity(n: usize) -> Self {
        let mut entries = vec![0; n * n];
        for i in 0..n {
            entries[i * n + i] = 1;
        }
        MatrixGL { n, entries }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, i: usize, j: usize) -> FieldElement {
        self.entries[i * self.n + j]
    }

    fn rows(&self) -> Vec<Vec<FieldElement>> {
        (0..self.n)
            .map(|i| self.entries[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    /// Row vector times matrix.
    pub fn apply_row(&self, field: &FieldSpec, v: &[FieldElement]) -> Vec<FieldElement> {
        (0..self.n)
            .map(|j| {
                let mut acc = field.zero();
                for (k, &x) in v.iter().enumerate() {
                    if x != 0 {
                        acc = field.add(acc, field.mul(x, self.entry(k, j)));
                    }
                }
                acc
            })
            .collect()
    }

    pub fn mul(&self, field: &FieldSpec, other: &MatrixGL) -> MatrixGL {
        let n = self.n;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                let mut acc = field.zero();
                for k in 0..n {
                    acc = field.add(acc, field.mul(self.entry(i, k), other.entry(k, j)));
                }
                entries[i * n + j] = acc;
            }
        }
        MatrixGL { n, entries }
    }

    /// Entrywise Frobenius image.
    pub fn frobenius(&self, field: &FieldSpec) -> MatrixGL {
        MatrixGL {
            n: self.n,
            entries: self.entries.iter().map(|&x| field.frobenius(x)).collect(),
        }
    }

    pub fn transpose(&self) -> MatrixGL {
        let n = self.n;
        let mut entries = vec![0; n * n];
        for i in 0..n {
            for j in 0..n {
                entries[j * n + i] = self.entry(i, j);
            }
        }
        MatrixGL { n, entries }
    }
}

/// In-place reduced row echelon form; returns the rank. Zero rows are moved
/// to the bottom and truncated off by the caller where appropriate.
pub fn rref(field: &FieldSpec, rows: &mut [Vec<FieldElement>]) -> usize {
    let ncols = rows.first().map(|r| r.len()).unwrap_or(0);
    let mut pivot_row = 0;
    for col in 0..ncols {
        let Some(pr) = (pivot_row..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(pivot_row, pr);
        let inv = field.inv(rows[pivot_row][col]).expect("nonzero pivot");
        for x in rows[pivot_row].iter_mut() {
            *x = field.mul(inv, *x);
        }
        for r in 0..rows.len() {
            if r != pivot_row && rows[r][col] != 0 {
                let factor = rows[r][col];
                let pivot = rows[pivot_row].clone();
                for (x, &p) in rows[r].iter_mut().zip(&pivot) {
                    *x = field.sub(*x, field.mul(factor, p));
                }
            }
        }
        pivot_row += 1;
        if pivot_row == rows.len() {
            break;
        }
    }
    pivot_row
}

pub fn rank(field: &FieldSpec, _n: usize, rows: &[Vec<FieldElement>]) -> usize {
    let mut work = rows.to_vec();
    rref(field, &mut work)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_singular() {
        let f = FieldSpec::new(2, 1).unwrap();
        assert!(MatrixGL::new(&f, 2, vec![1, 1, 1, 1]).is_err());
        assert!(MatrixGL::new(&f, 2, vec![1, 0, 1, 1]).is_ok());
    }

    #[test]
    fn row_action_and_product_agree() {
        let f = FieldSpec::new(3, 1).unwrap();
        let a = MatrixGL::new(&f, 2, vec![1, 2, 0, 1]).unwrap();
        let b = MatrixGL::new(&f, 2, vec![2, 0, 1, 1]).unwrap();
        let v = vec![1, 1];
        let via_product = a.mul(&f, &b).apply_row(&f, &v);
        let stepwise = b.apply_row(&f, &a.apply_row(&f, &v));
        assert_eq!(via_product, stepwise);
    }

    #[test]
    fn rref_canonicalizes() {
        let f = FieldSpec::new(2, 1).unwrap();
        let mut rows = vec![vec![1, 1, 0], vec![0, 1, 1]];
        let mut rows2 = vec![vec![1, 0, 1], vec![0, 1, 1]];
        let r1 = rref(&f, &mut rows);
        let r2 = rref(&f, &mut rows2);
        assert_eq!(r1, 2);
        assert_eq!(r2, 2);
        assert_eq!(rows, rows2);
    }
}
