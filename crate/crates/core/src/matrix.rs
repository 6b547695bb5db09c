//! Small dense matrices over [`LaurentPoly`].

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Var};

pub type DenseMatrix = Vec<Vec<LaurentPoly>>;

pub fn identity(n: usize, var: Var) -> DenseMatrix {
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| if i == j { LaurentPoly::one(var) } else { LaurentPoly::zero(var) })
                .collect()
        })
        .collect()
}

pub fn mat_mul(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
    let n = a.len();
    let m = b.first().map_or(0, |r| r.len());
    let var = a.first().and_then(|r| r.first()).map_or(Var::S, |p| p.var());
    let mut out = vec![vec![LaurentPoly::zero(var); m]; n];
    for (i, row) in a.iter().enumerate() {
        for (k, aik) in row.iter().enumerate() {
            if aik.is_zero() {
                continue;
            }
            for (j, bkj) in b[k].iter().enumerate() {
                if !bkj.is_zero() {
                    out[i][j] += &(aik * bkj);
                }
            }
        }
    }
    out
}

pub fn mat_sub(a: &DenseMatrix, b: &DenseMatrix) -> DenseMatrix {
    a.iter()
        .zip(b)
        .map(|(ra, rb)| ra.iter().zip(rb).map(|(x, y)| x - y).collect())
        .collect()
}

pub fn is_identity(m: &DenseMatrix) -> bool {
    m.iter().enumerate().all(|(i, row)| {
        row.iter()
            .enumerate()
            .all(|(j, x)| if i == j { x.is_one() } else { x.is_zero() })
    })
}

/// Fraction-free (Bareiss) determinant. Every division is exact in
/// `Z[x, x^-1]`; a failed division is reported as an error.
pub fn determinant(m: &DenseMatrix) -> Result<LaurentPoly> {
    let n = m.len();
    let var = m.first().and_then(|r| r.first()).map_or(Var::S, |p| p.var());
    if n == 0 {
        return Ok(LaurentPoly::one(var));
    }
    let mut a = m.clone();
    let mut sign_flip = false;
    let mut prev = LaurentPoly::one(var);
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            let Some(p) = (k + 1..n).find(|&r| !a[r][k].is_zero()) else {
                return Ok(LaurentPoly::zero(var));
            };
            a.swap(k, p);
            sign_flip = !sign_flip;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = num.div_exact(&prev)?;
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    Ok(if sign_flip { -det } else { det })
}

/// Inverse of a matrix whose determinant is a unit `+-x^k`, via the adjugate.
pub fn inverse_unimodular(m: &DenseMatrix) -> Result<DenseMatrix> {
    let n = m.len();
    let det = determinant(m)?;
    let (k, sign) = det.as_unit().ok_or(Error::NonExactDivision)?;
    let var = det.var();
    let det_inv = LaurentPoly::monomial(var, -k, sign);
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let minor: DenseMatrix = (0..n)
                        .filter(|&r| r != j)
                        .map(|r| (0..n).filter(|&c| c != i).map(|c| m[r][c].clone()).collect())
                        .collect();
                    let cof = determinant(&minor)?;
                    let cof = if (i + j) % 2 == 1 { -cof } else { cof };
                    Ok(&cof * &det_inv)
                })
                .collect()
        })
        .collect()
}
