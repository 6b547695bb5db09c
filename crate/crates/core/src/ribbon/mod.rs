//! Framing-normalized local braidings and pivots.
//!
//! A [`RibbonData`] holds the braiding `c = θ^{-1} τR` on `V ⊗ V`, its
//! inverse and the diagonal pivot acting on `V`. The twist is never
//! carried symbolically: builders divide the raw braiding by the scalar
//! `λ` defined by `trace_2((Id ⊗ pivot) c) = λ Id`, which is a unit in
//! `Z[x, x^-1]` for every model here.
//!
//! Basis conventions: `V ⊗ V` is indexed strand-major, `(v1, v2) -> v1 * d + v2`.
//! For the Links-Gould space of dimension `2^n`, bit `n - i` of a basis
//! index (most significant bit first) records whether `f_i` occurs in the
//! PBW monomial `f_1^{m_1} ... f_n^{m_n} v_0`.

pub mod numeric;

use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Var};
use crate::matrix::{self, DenseMatrix};
use crate::sparse::SparseOperator;

/// Which quantum model a braiding belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Model {
    Sl2,
    /// Links-Gould `LG^{n,1}` at `q = -1`.
    Lg(u32),
    Gl11Numeric,
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Model::Sl2 => f.write_str("sl2"),
            Model::Lg(n) => write!(f, "lg({n})"),
            Model::Gl11Numeric => f.write_str("gl11-numeric"),
        }
    }
}

impl Serialize for Model {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

#[derive(Clone, Debug)]
pub struct RibbonData {
    model: Model,
    dim: usize,
    braiding: SparseOperator,
    braiding_inv: SparseOperator,
    pivot: Vec<LaurentPoly>,
}

impl RibbonData {
    /// Rescales a raw braiding so that the pivot-weighted partial trace is
    /// the identity. Fails when that trace is not a unit multiple of `Id`.
    pub fn framing_normalized(
        model: Model,
        dim: usize,
        braiding: SparseOperator,
        braiding_inv: SparseOperator,
        pivot: Vec<LaurentPoly>,
    ) -> Result<Self> {
        assert_eq!(braiding.dim(), dim * dim);
        assert_eq!(pivot.len(), dim);
        let trace = framing_trace(&braiding, &pivot, dim);
        let lambda = trace[0][0].clone();
        let scalar_ok = trace.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, x)| if i == j { *x == lambda } else { x.is_zero() })
        });
        let (k, sign) = lambda.as_unit().filter(|_| scalar_ok).ok_or_else(|| {
            Error::DegenerateParameter(format!(
                "framing trace is not a unit multiple of the identity (got {lambda})"
            ))
        })?;
        let var = braiding.var();
        let (braiding, braiding_inv) = if k == 0 && sign == 1 {
            (braiding, braiding_inv)
        } else {
            (
                braiding.scale(&LaurentPoly::monomial(var, -k, sign)),
                braiding_inv.scale(&LaurentPoly::monomial(var, k, sign)),
            )
        };
        Ok(RibbonData { model, dim, braiding, braiding_inv, pivot })
    }

    pub fn model(&self) -> Model {
        self.model
    }

    /// Dimension `d` of the strand space `V`.
    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn var(&self) -> Var {
        self.braiding.var()
    }

    pub fn braiding(&self) -> &SparseOperator {
        &self.braiding
    }

    pub fn braiding_inv(&self) -> &SparseOperator {
        &self.braiding_inv
    }

    pub fn pivot(&self) -> &[LaurentPoly] {
        &self.pivot
    }

    /// `trace_2((Id ⊗ pivot) c)`; the identity for every normalized ribbon.
    pub fn framing_trace(&self) -> DenseMatrix {
        framing_trace(&self.braiding, &self.pivot, self.dim)
    }

    pub fn to_json(&self) -> serde_json::Value {
        let dense = |op: &SparseOperator| -> Vec<Vec<serde_json::Value>> {
            (0..op.dim())
                .map(|r| (0..op.dim()).map(|c| op.get(r, c).to_json()).collect())
                .collect()
        };
        serde_json::json!({
            "model": self.model.to_string(),
            "dim": self.dim,
            "variable": self.var(),
            "braiding": dense(&self.braiding),
            "pivot": self.pivot.iter().map(LaurentPoly::to_json).collect::<Vec<_>>(),
        })
    }
}

/// `M[a][a'] = sum_b pivot[b] * B[(a, b), (a', b)]`.
pub fn framing_trace(braiding: &SparseOperator, pivot: &[LaurentPoly], dim: usize) -> DenseMatrix {
    let var = braiding.var();
    let mut out = vec![vec![LaurentPoly::zero(var); dim]; dim];
    for (r, c, x) in braiding.entries() {
        let (a, b) = (r / dim, r % dim);
        let (a2, b2) = (c / dim, c % dim);
        if b == b2 {
            out[a][a2] += &(&pivot[b] * x);
        }
    }
    out
}

fn sl2_raw_braiding(var: Var) -> DenseMatrix {
    let s = |e: i64, c: i64| LaurentPoly::monomial(var, e, c);
    let z = || LaurentPoly::zero(var);
    vec![
        vec![s(-1, 1), z(), z(), z()],
        vec![z(), z(), s(0, 1), z()],
        vec![z(), s(0, 1), s(-1, 1) + s(1, -1), z()],
        vec![z(), z(), z(), s(1, -1)],
    ]
}

fn sl2_pivot(var: Var) -> Vec<LaurentPoly> {
    vec![LaurentPoly::monomial(var, 1, 1), LaurentPoly::monomial(var, 1, -1)]
}

/// Alexander model from the unrolled quantum `sl(2)` at `q = i`.
///
/// In the basis `(e0e0, e0e1, e1e0, e1e1)` the braiding is
/// `[[s^-1], [[0, 1], [1, s^-1 - s]], [-s]]` with `s = t^{1/2}`, and the
/// pivot `K^{-1}` is `diag(s, -s)`.
pub fn build_sl2_ribbon() -> RibbonData {
    build_sl2_ribbon_in(Var::S)
}

fn build_sl2_ribbon_in(var: Var) -> RibbonData {
    let raw = sl2_raw_braiding(var);
    let inv = matrix::inverse_unimodular(&raw).expect("sl2 braiding is invertible over Z[s, s^-1]");
    RibbonData::framing_normalized(
        Model::Sl2,
        2,
        SparseOperator::from_dense(&raw, var),
        SparseOperator::from_dense(&inv, var),
        sl2_pivot(var),
    )
    .expect("sl2 braiding is framing-normalizable")
}

fn bit(v: usize, copy: usize, n: usize) -> usize {
    (v >> (n - 1 - copy)) & 1
}

/// `n`-fold product of the `sl2` operator `op` on the interleaved copies:
/// `out[(v1, v2), (w1, w2)] = prod_i op[(v1_i, v2_i), (w1_i, w2_i)]`.
fn interleaved_power(op: &SparseOperator, n: usize, var: Var) -> SparseOperator {
    let d = 1usize << n;
    let cols = op.columns();
    let mut out = SparseOperator::zero(d * d, var);
    for w1 in 0..d {
        for w2 in 0..d {
            // partial products over the first `copy` copies
            let mut partial: Vec<(usize, usize, LaurentPoly)> = vec![(0, 0, LaurentPoly::one(var))];
            for copy in 0..n {
                let col = 2 * bit(w1, copy, n) + bit(w2, copy, n);
                let mut next = Vec::with_capacity(partial.len() * cols[col].len());
                for (v1, v2, acc) in &partial {
                    for (row, x) in &cols[col] {
                        next.push(((v1 << 1) | (row >> 1), (v2 << 1) | (row & 1), acc * x));
                    }
                }
                partial = next;
            }
            for (v1, v2, x) in partial {
                out.set(v1 * d + v2, w1 * d + w2, x);
            }
        }
    }
    out
}

/// Links-Gould `LG^{n,1}` at `q = -1`: the strand space has dimension `2^n`
/// and the braiding acts on each pair of matching PBW factors by the
/// `sl2` braiding (variable `tau`). The pivot is `diag(tau, -tau)^{⊗n}`.
///
/// For `n = 1` this is [`build_sl2_ribbon`] in the variable `tau`.
pub fn build_lg_qm1_ribbon(n: u32) -> Result<RibbonData> {
    if n == 0 {
        return Err(Error::DegenerateParameter("Links-Gould rank n must be at least 1".into()));
    }
    if n > 12 {
        return Err(Error::DegenerateParameter(format!("Links-Gould rank n = {n} is too large")));
    }
    let var = Var::Tau;
    let base = build_sl2_ribbon_in(var);
    let n_us = n as usize;
    let d = 1usize << n_us;
    let braiding = interleaved_power(base.braiding(), n_us, var);
    let braiding_inv = interleaved_power(base.braiding_inv(), n_us, var);
    let pivot = (0..d)
        .map(|v| {
            let neg = v.count_ones() % 2 == 1;
            LaurentPoly::monomial(var, n as i64, if neg { -1 } else { 1 })
        })
        .collect();
    RibbonData::framing_normalized(Model::Lg(n), d, braiding, braiding_inv, pivot)
}

/// Permutation of `(C^2)^{⊗2n}` sending the strand-major index of
/// `V ⊗ V` (`V = (C^2)^{⊗n}`) to the copy-major index in which the two
/// factors belonging to copy `i` are adjacent.
pub fn interleave_permutation(n: usize) -> Vec<usize> {
    let d = 1usize << n;
    (0..d * d)
        .map(|idx| {
            let (v1, v2) = (idx / d, idx % d);
            (0..n).fold(0, |acc, copy| (acc << 2) | (2 * bit(v1, copy, n) + bit(v2, copy, n)))
        })
        .collect()
}

/// Reference construction `P^T (B ⊗ ... ⊗ B) P` of the Links-Gould braiding
/// from explicit Kronecker powers of the `n = 1` braiding.
pub fn lg_braiding_via_kronecker(n: usize) -> SparseOperator {
    let base = build_sl2_ribbon_in(Var::Tau);
    let b = base.braiding();
    let mut power = SparseOperator::identity(1, Var::Tau);
    for _ in 0..n {
        power = power.kron(b);
    }
    power.conjugate_by_permutation(&interleave_permutation(n))
}
