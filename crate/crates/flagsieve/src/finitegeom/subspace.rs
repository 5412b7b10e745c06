//! Projective subspaces in canonical reduced-row-echelon form.

use super::field::{FieldElement, FieldSpec};
use super::matrix::{rref, MatrixGL};
use crate::error::{Error, Result};

/// An i-dimensional subspace of GF(q)^n, represented by the unique reduced
/// row echelon basis. The derived ordering (dim, then row entries) is the
/// fixed total order used everywhere subspaces are listed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ProjSubspace {
    n: usize,
    dim: usize,
    /// Row-major echelon basis, dim rows of n entries.
    rows: Vec<FieldElement>,
}

impl ProjSubspace {
    /// Canonicalizes the row space of `basis` (rows need not be independent).
    pub fn from_spanning(field: &FieldSpec, n: usize, basis: &[Vec<FieldElement>]) -> Self {
        let mut rows: Vec<Vec<FieldElement>> = basis.to_vec();
        let rank = rref(field, &mut rows);
        rows.truncate(rank);
        ProjSubspace {
            n,
            dim: rank,
            rows: rows.into_iter().flatten().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn basis_rows(&self) -> Vec<Vec<FieldElement>> {
        (0..self.dim)
            .map(|i| self.rows[i * self.n..(i + 1) * self.n].to_vec())
            .collect()
    }

    /// Image under a matrix acting on row vectors, re-canonicalized.
    pub fn apply(&self, field: &FieldSpec, m: &MatrixGL) -> ProjSubspace {
        let mapped: Vec<Vec<FieldElement>> = self
            .basis_rows()
            .iter()
            .map(|r| m.apply_row(field, r))
            .collect();
        ProjSubspace::from_spanning(field, self.n, &mapped)
    }

    /// Image under the Frobenius field automorphism applied entrywise.
    pub fn frobenius(&self, field: &FieldSpec) -> ProjSubspace {
        let mapped: Vec<Vec<FieldElement>> = self
            .basis_rows()
            .iter()
            .map(|r| r.iter().map(|&x| field.frobenius(x)).collect())
            .collect();
        ProjSubspace::from_spanning(field, self.n, &mapped)
    }

    /// Does this subspace contain `other`?
    pub fn contains(&self, field: &FieldSpec, other: &ProjSubspace) -> bool {
        let mut all = self.basis_rows();
        all.extend(other.basis_rows());
        let rank = rref(field, &mut all);
        rank == self.dim
    }

    /// Intersection is zero iff dimensions add up across the join.
    pub fn meets_trivially(&self, field: &FieldSpec, other: &ProjSubspace) -> bool {
        let mut all = self.basis_rows();
        all.extend(other.basis_rows());
        let rank = rref(field, &mut all);
        rank == self.dim + other.dim
    }

    /// Annihilator with respect to the standard dot product, as a subspace of
    /// the dual identified with GF(q)^n.
    pub fn annihilator(&self, field: &FieldSpec) -> ProjSubspace {
        let rows = self.basis_rows();
        // pivot columns of the echelon basis
        let mut pivots = Vec::with_capacity(self.dim);
        for r in &rows {
            let col = r.iter().position(|&x| x != 0).expect("nonzero row");
            pivots.push(col);
        }
        let free: Vec<usize> = (0..self.n).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![0; self.n];
            v[fc] = field.one();
            for (ri, &pc) in pivots.iter().enumerate() {
                v[pc] = field.neg(rows[ri][fc]);
            }
            basis.push(v);
        }
        ProjSubspace::from_spanning(field, self.n, &basis)
    }

    /// All normalized nonzero vectors (first nonzero coordinate 1) spanned.
    pub fn projective_points(&self, field: &FieldSpec) -> Vec<ProjSubspace> {
        let rows = self.basis_rows();
        let mut out = std::collections::BTreeSet::new();
        let q = field.q() as u64;
        let mut counter = vec![0u32; self.dim];
        loop {
            if counter.iter().any(|&c| c != 0) {
                let mut v = vec![0; self.n];
                for (ri, &c) in counter.iter().enumerate() {
                    if c != 0 {
                        for (j, x) in v.iter_mut().enumerate() {
                            *x = field.add(*x, field.mul(c, rows[ri][j]));
                        }
                    }
                }
                out.insert(ProjSubspace::from_spanning(field, self.n, &[v]));
            }
            // odometer over GF(q)^dim
            let mut i = 0;
            loop {
                if i == counter.len() {
                    let out: Vec<ProjSubspace> = out.into_iter().collect();
                    return out;
                }
                counter[i] += 1;
                if (counter[i] as u64) < q {
                    break;
                }
                counter[i] = 0;
                i += 1;
            }
        }
    }
}

/// All i-dimensional subspaces of GF(q)^n, sorted by the canonical order, by
/// direct enumeration of reduced echelon matrices (choose pivot columns, fill
/// free entries). Fails if the count exceeds `budget`.
pub fn enumerate_subspaces(
    field: &FieldSpec,
    n: usize,
    dim: usize,
    budget: usize,
) -> Result<Vec<ProjSubspace>> {
    if dim > n {
        return Err(Error::InvalidArgument(format!(
            "subspace dimension {dim} exceeds ambient dimension {n}"
        )));
    }
    let expected = super::arith::gaussian_binomial(n as u32, dim as u32, field.q() as u64)?;
    if expected > budget as u128 {
        return Err(Error::BudgetExceeded { budget });
    }
    if dim == 0 {
        return Ok(vec![ProjSubspace {
            n,
            dim: 0,
            rows: vec![],
        }]);
    }
    let mut out = Vec::with_capacity(expected as usize);
    let mut pivots: Vec<usize> = (0..dim).collect();
    loop {
        emit_for_pivots(field, n, dim, &pivots, &mut out);
        // next pivot combination in lexicographic order
        let mut i = dim;
        loop {
            if i == 0 {
                out.sort();
                debug_assert_eq!(out.len() as u128, expected);
                return Ok(out);
            }
            i -= 1;
            if pivots[i] < n - (dim - i) {
                pivots[i] += 1;
                for j in i + 1..dim {
                    pivots[j] = pivots[j - 1] + 1;
                }
                break;
            }
        }
    }
}

fn emit_for_pivots(
    field: &FieldSpec,
    n: usize,
    dim: usize,
    pivots: &[usize],
    out: &mut Vec<ProjSubspace>,
) {
    // free positions: (row, col) with col not a pivot, col > pivots[row], and
    // col not a pivot column of a later row (entries above pivots are zero).
    let mut free: Vec<(usize, usize)> = Vec::new();
    for (r, &pc) in pivots.iter().enumerate() {
        for c in pc + 1..n {
            if !pivots.contains(&c) {
                free.push((r, c));
            }
        }
    }
    let q = field.q() as u64;
    let mut values = vec![0u32; free.len()];
    loop {
        let mut rows = vec![vec![0; n]; dim];
        for (r, &pc) in pivots.iter().enumerate() {
            rows[r][pc] = field.one();
        }
        for (k, &(r, c)) in free.iter().enumerate() {
            rows[r][c] = values[k];
        }
        out.push(ProjSubspace {
            n,
            dim,
            rows: rows.into_iter().flatten().collect(),
        });
        let mut i = 0;
        loop {
            if i == values.len() {
                return;
            }
            values[i] += 1;
            if (values[i] as u64) < q {
                break;
            }
            values[i] = 0;
            i += 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fano_has_seven_points_and_lines() {
        let f = FieldSpec::new(2, 1).unwrap();
        let pts = enumerate_subspaces(&f, 3, 1, 1000).unwrap();
        let lines = enumerate_subspaces(&f, 3, 2, 1000).unwrap();
        assert_eq!(pts.len(), 7);
        assert_eq!(lines.len(), 7);
    }

    #[test]
    fn whole_space_is_unique() {
        let f = FieldSpec::new(3, 1).unwrap();
        let all = enumerate_subspaces(&f, 3, 3, 1000).unwrap();
        assert_eq!(all.len(), 1);
    }

    #[test]
    fn two_spaces_of_f3_4() {
        let f = FieldSpec::new(3, 1).unwrap();
        let subs = enumerate_subspaces(&f, 4, 2, 1000).unwrap();
        assert_eq!(subs.len(), 130);
        // canonical: sorted, no duplicates
        for w in subs.windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn annihilator_dimensions() {
        let f = FieldSpec::new(2, 1).unwrap();
        for s in enumerate_subspaces(&f, 3, 1, 1000).unwrap() {
            let ann = s.annihilator(&f);
            assert_eq!(ann.dim(), 2);
            // double annihilator is the identity
            assert_eq!(ann.annihilator(&f), s);
        }
    }

    #[test]
    fn containment_and_points() {
        let f = FieldSpec::new(2, 1).unwrap();
        let lines = enumerate_subspaces(&f, 3, 2, 1000).unwrap();
        for line in &lines {
            let pts = line.projective_points(&f);
            assert_eq!(pts.len(), 3);
            for p in &pts {
                assert!(line.contains(&f, p));
            }
        }
    }
}
