//! Row-sparse square matrices over [`LaurentPoly`].

use std::collections::BTreeMap;

use crate::laurent::{LaurentPoly, Var};
use crate::matrix::DenseMatrix;

/// Square sparse matrix; each row maps column index to a nonzero entry.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparseOperator {
    dim: usize,
    var: Var,
    rows: Vec<BTreeMap<usize, LaurentPoly>>,
}

impl SparseOperator {
    pub fn zero(dim: usize, var: Var) -> Self {
        SparseOperator { dim, var, rows: vec![BTreeMap::new(); dim] }
    }

    pub fn identity(dim: usize, var: Var) -> Self {
        let mut op = Self::zero(dim, var);
        for i in 0..dim {
            op.set(i, i, LaurentPoly::one(var));
        }
        op
    }

    pub fn from_dense(m: &DenseMatrix, var: Var) -> Self {
        let mut op = Self::zero(m.len(), var);
        for (i, row) in m.iter().enumerate() {
            for (j, x) in row.iter().enumerate() {
                op.set(i, j, x.clone());
            }
        }
        op
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn var(&self) -> Var {
        self.var
    }

    pub fn nnz(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn get(&self, row: usize, col: usize) -> LaurentPoly {
        self.rows[row].get(&col).cloned().unwrap_or_else(|| LaurentPoly::zero(self.var))
    }

    /// Stores `value`, dropping the entry when it is zero.
    pub fn set(&mut self, row: usize, col: usize, value: LaurentPoly) {
        if value.is_zero() {
            self.rows[row].remove(&col);
        } else {
            self.rows[row].insert(col, value);
        }
    }

    pub fn add_to(&mut self, row: usize, col: usize, value: &LaurentPoly) {
        if value.is_zero() {
            return;
        }
        let slot = self.rows[row].entry(col).or_insert_with(|| LaurentPoly::zero(self.var));
        *slot += value;
        if slot.is_zero() {
            self.rows[row].remove(&col);
        }
    }

    pub fn row(&self, row: usize) -> impl Iterator<Item = (usize, &LaurentPoly)> {
        self.rows[row].iter().map(|(&c, x)| (c, x))
    }

    /// All nonzero entries as `(row, col, value)`, row-major.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &LaurentPoly)> {
        self.rows
            .iter()
            .enumerate()
            .flat_map(|(r, row)| row.iter().map(move |(&c, x)| (r, c, x)))
    }

    /// Column-indexed view: `columns[c]` lists `(row, value)`.
    pub fn columns(&self) -> Vec<Vec<(usize, LaurentPoly)>> {
        let mut cols = vec![Vec::new(); self.dim];
        for (r, c, x) in self.entries() {
            cols[c].push((r, x.clone()));
        }
        cols
    }

    pub fn to_dense(&self) -> DenseMatrix {
        (0..self.dim)
            .map(|r| (0..self.dim).map(|c| self.get(r, c)).collect())
            .collect()
    }

    pub fn mul(&self, other: &SparseOperator) -> SparseOperator {
        assert_eq!(self.dim, other.dim, "dimension mismatch");
        let mut out = SparseOperator::zero(self.dim, self.var);
        for (r, row) in self.rows.iter().enumerate() {
            let mut acc: BTreeMap<usize, LaurentPoly> = BTreeMap::new();
            for (&k, a) in row {
                for (&c, b) in &other.rows[k] {
                    let prod = a * b;
                    let slot = acc.entry(c).or_insert_with(|| LaurentPoly::zero(self.var));
                    *slot += &prod;
                }
            }
            acc.retain(|_, x| !x.is_zero());
            out.rows[r] = acc;
        }
        out
    }

    /// Kronecker product `self ⊗ other`; `self` indexes the more significant digit.
    pub fn kron(&self, other: &SparseOperator) -> SparseOperator {
        let d = other.dim;
        let mut out = SparseOperator::zero(self.dim * d, self.var);
        for (r1, c1, a) in self.entries() {
            for (r2, c2, b) in other.entries() {
                out.set(r1 * d + r2, c1 * d + c2, a * b);
            }
        }
        out
    }

    /// `P^T * self * P` for the permutation matrix with `P[perm[i]][i] = 1`,
    /// i.e. basis vector `i` is sent to `perm[i]`.
    pub fn conjugate_by_permutation(&self, perm: &[usize]) -> SparseOperator {
        assert_eq!(perm.len(), self.dim);
        let mut out = SparseOperator::zero(self.dim, self.var);
        // (P^T A P)[i][j] = A[perm[i]][perm[j]]
        let mut inv = vec![0; self.dim];
        for (i, &p) in perm.iter().enumerate() {
            inv[p] = i;
        }
        for (r, c, x) in self.entries() {
            out.set(inv[r], inv[c], x.clone());
        }
        out
    }

    pub fn is_identity(&self) -> bool {
        self.rows.iter().enumerate().all(|(i, row)| {
            row.len() == 1 && row.get(&i).is_some_and(|x| x.is_one())
        }) || (self.dim == 0)
    }

    pub fn substitute_variable(&self, var: Var) -> SparseOperator {
        SparseOperator {
            dim: self.dim,
            var,
            rows: self
                .rows
                .iter()
                .map(|row| row.iter().map(|(&c, x)| (c, x.substitute_variable(var))).collect())
                .collect(),
        }
    }

    /// Multiplies every entry by `c`.
    pub fn scale(&self, c: &LaurentPoly) -> SparseOperator {
        let mut out = SparseOperator::zero(self.dim, self.var);
        for (r, col, x) in self.entries() {
            out.set(r, col, x * c);
        }
        out
    }
}
