//! Braid-closure evaluation.
//!
//! `Ψ(b)` on `V^{⊗ℓ}` is never materialized. Each basis column is pushed
//! through the word one local braiding at a time (index arithmetic in base
//! `d`, strand 1 most significant), and only the entries that survive the
//! partial trace over strands `2..ℓ` are kept:
//!
//! `M[a, b] = sum_rest w(rest) Ψ(b)[(a, rest), (b, rest)]`
//!
//! where `w(rest)` is the product of pivot entries over strands `2..ℓ`.
//! Columns are independent and are distributed over a rayon pool; their
//! contributions are summed in column order afterwards.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use nalgebra::Matrix4;
use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use crate::braid::{BraidWord, Sign};
use crate::error::{Error, Result};
use crate::laurent::{LaurentPoly, Var};
use crate::ribbon::numeric::{gl11_normalized_braiding, Gl11NumericRep};
use crate::ribbon::{build_lg_qm1_ribbon, build_sl2_ribbon, Model, RibbonData};

/// Default refusal threshold: state spaces of `2^24` or more basis vectors.
pub const DEFAULT_BUDGET_BITS: u32 = 24;

/// Ring operations the engine needs from a coefficient type.
pub trait Coefficient: Clone + Send + Sync {
    fn is_zero(&self) -> bool;
    fn add_assign(&mut self, other: &Self);
    fn mul(&self, other: &Self) -> Self;
    /// Additive identity of the same ring as `self`.
    fn zero_like(&self) -> Self;
}

impl Coefficient for LaurentPoly {
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn zero_like(&self) -> Self {
        LaurentPoly::zero(self.var())
    }
}

impl Coefficient for Complex64 {
    fn is_zero(&self) -> bool {
        *self == Complex64::new(0.0, 0.0)
    }
    fn add_assign(&mut self, other: &Self) {
        *self += other;
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn zero_like(&self) -> Self {
        Complex64::new(0.0, 0.0)
    }
}

/// Sparse column of a `D`-dimensional operator: state index -> entry.
pub type SparseColumn<C> = BTreeMap<usize, C>;

/// Column-indexed operator on `V ⊗ V`: `table[x * d + y]` lists the
/// `(row, value)` pairs of that column.
pub type LocalTable<C> = Vec<Vec<(usize, C)>>;

/// A compiled local braiding ready for contraction.
#[derive(Clone, Debug)]
pub struct LocalBraiding<C> {
    pub dim: usize,
    pub forward: LocalTable<C>,
    pub inverse: LocalTable<C>,
    pub pivot: Vec<C>,
    pub one: C,
}

impl LocalBraiding<LaurentPoly> {
    pub fn from_ribbon(rib: &RibbonData) -> Self {
        LocalBraiding {
            dim: rib.dim(),
            forward: rib.braiding().columns(),
            inverse: rib.braiding_inv().columns(),
            pivot: rib.pivot().to_vec(),
            one: LaurentPoly::one(rib.var()),
        }
    }
}

impl LocalBraiding<Complex64> {
    /// Builds a table from dense 4x4 matrices on `C^2 ⊗ C^2`.
    pub fn from_matrices(braiding: &Matrix4<Complex64>, inverse: &Matrix4<Complex64>, pivot: [Complex64; 2]) -> Self {
        let table = |m: &Matrix4<Complex64>| -> LocalTable<Complex64> {
            (0..4)
                .map(|col| {
                    (0..4)
                        .filter(|&r| m[(r, col)] != Complex64::new(0.0, 0.0))
                        .map(|r| (r, m[(r, col)]))
                        .collect()
                })
                .collect()
        };
        LocalBraiding {
            dim: 2,
            forward: table(braiding),
            inverse: table(inverse),
            pivot: pivot.to_vec(),
            one: Complex64::new(1.0, 0.0),
        }
    }
}

/// Knobs for [`Evaluator`].
#[derive(Clone, Copy, Debug)]
pub struct EvalOptions {
    /// Refuse state spaces with `d^ℓ >= 2^budget_bits`.
    pub budget_bits: u32,
    /// Worker threads for the column loop; `None` uses rayon's global pool.
    pub workers: Option<usize>,
}

impl Default for EvalOptions {
    fn default() -> Self {
        EvalOptions { budget_bits: DEFAULT_BUDGET_BITS, workers: None }
    }
}

/// Scalar invariant extracted from a closure trace.
#[derive(Clone, Debug, Serialize)]
pub struct InvariantResult {
    #[serde(serialize_with = "serialize_poly")]
    pub scalar: LaurentPoly,
    pub proportionality_ok: bool,
    pub strands: usize,
    pub writhe: i64,
    pub model: Model,
    pub elapsed: Duration,
}

fn serialize_poly<S: serde::Serializer>(p: &LaurentPoly, s: S) -> std::result::Result<S::Ok, S::Error> {
    p.to_json().serialize(s)
}

/// Outcome of checking `LG^{n,1}(L; tau, -1) = Δ_L(tau^2)^n` on one braid.
#[derive(Clone, Debug)]
pub struct TheoremReport {
    pub braid: BraidWord,
    pub n: u32,
    pub links_gould: LaurentPoly,
    pub alexander_power: LaurentPoly,
    /// Equality after [`LaurentPoly::unit_normalize`] on both sides.
    pub equal_up_to_unit: bool,
    /// `links_gould - alexander_power`, exactly.
    pub raw_difference: LaurentPoly,
}

impl TheoremReport {
    pub fn equal_exactly(&self) -> bool {
        self.raw_difference.is_zero()
    }
}

/// Equality of two polynomials up to `±x^k`; zero only matches zero.
pub fn equal_up_to_unit(a: &LaurentPoly, b: &LaurentPoly) -> bool {
    match (a.unit_normalize(), b.unit_normalize()) {
        (Ok(x), Ok(y)) => x.substitute_variable(Var::S) == y.substitute_variable(Var::S),
        (Err(_), Err(_)) => true,
        _ => false,
    }
}

fn checked_pow(d: usize, l: usize) -> Option<usize> {
    (0..l).try_fold(1usize, |acc, _| acc.checked_mul(d))
}

fn check_budget(d: usize, strands: usize, budget_bits: u32) -> Result<usize> {
    let bits = (d as f64).log2() * strands as f64;
    let bits_ceil = bits.ceil() as u32;
    match checked_pow(d, strands) {
        Some(total) if bits_ceil < budget_bits && total < (1usize << budget_bits.min(62)) => Ok(total),
        _ => Err(Error::BudgetExceeded { bits: bits_ceil, budget: budget_bits }),
    }
}

/// Image of a sparse column under the local operator `op` on strands
/// `position, position + 1` (1-based) of `V^{⊗strands}`.
pub fn apply_local<C: Coefficient>(
    op: &LocalTable<C>,
    dim: usize,
    strands: usize,
    position: usize,
    column: &SparseColumn<C>,
) -> Result<SparseColumn<C>> {
    if position == 0 || position >= strands {
        return Err(Error::IndexOutOfRange { index: position, strands });
    }
    // place value of the right-hand strand of the pair
    let low = dim.pow((strands - position - 1) as u32);
    let high = low * dim;
    let mut out: SparseColumn<C> = BTreeMap::new();
    for (&state, coeff) in column {
        let x = (state / high) % dim;
        let y = (state / low) % dim;
        let base = state - x * high - y * low;
        for (row, value) in &op[x * dim + y] {
            let target = base + (row / dim) * high + (row % dim) * low;
            let term = coeff.mul(value);
            match out.get_mut(&target) {
                Some(slot) => slot.add_assign(&term),
                None => {
                    out.insert(target, term);
                }
            }
        }
    }
    out.retain(|_, v| !v.is_zero());
    Ok(out)
}

/// Image of the basis vector `state` under the local operator.
pub fn apply_local_to_basis<C: Coefficient>(
    op: &LocalTable<C>,
    one: &C,
    dim: usize,
    strands: usize,
    position: usize,
    state: usize,
) -> Result<SparseColumn<C>> {
    let column = BTreeMap::from([(state, one.clone())]);
    apply_local(op, dim, strands, position, &column)
}

/// Column `column` of `Ψ(b)`. Letters act in reading order, the first
/// letter of the word being applied first.
pub fn braid_image_column<C: Coefficient>(
    b: &BraidWord,
    braiding: &LocalBraiding<C>,
    column: usize,
) -> Result<SparseColumn<C>> {
    let mut v: SparseColumn<C> = BTreeMap::from([(column, braiding.one.clone())]);
    for letter in b.letters() {
        let table = match letter.sign {
            Sign::Pos => &braiding.forward,
            Sign::Neg => &braiding.inverse,
        };
        v = apply_local(table, braiding.dim, b.strands(), letter.index, &v)?;
    }
    Ok(v)
}

/// Stateless evaluator carrying the budget and worker configuration.
#[derive(Clone, Copy, Debug, Default)]
pub struct Evaluator {
    pub options: EvalOptions,
}

impl Evaluator {
    pub fn new(options: EvalOptions) -> Self {
        Evaluator { options }
    }

    pub fn with_budget(mut self, bits: u32) -> Self {
        self.options.budget_bits = bits;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.options.workers = Some(workers);
        self
    }

    /// `trace_{2..ℓ}((Id ⊗ pivot^{⊗ℓ-1}) Ψ(b))` as a dense `d x d` matrix.
    pub fn closure_trace<C: Coefficient>(&self, b: &BraidWord, braiding: &LocalBraiding<C>) -> Result<Vec<Vec<C>>> {
        let d = braiding.dim;
        let strands = b.strands();
        let total = check_budget(d, strands, self.options.budget_bits)?;
        let rest_size = total / d;

        // pivot weight of every assignment of strands 2..ℓ
        let mut weights = vec![braiding.one.clone()];
        for _ in 1..strands {
            weights = weights
                .iter()
                .flat_map(|w| braiding.pivot.iter().map(move |p| w.mul(p)))
                .collect();
        }

        let column_contrib = |col: usize| -> Result<Vec<(usize, C)>> {
            let (b0, rest) = (col / rest_size, col % rest_size);
            let image = braid_image_column(b, braiding, col)?;
            let mut out = Vec::new();
            for a0 in 0..d {
                if let Some(x) = image.get(&(a0 * rest_size + rest)) {
                    out.push((a0 * d + b0, x.mul(&weights[rest])));
                }
            }
            Ok(out)
        };

        let run = || -> Result<Vec<Vec<(usize, C)>>> {
            (0..total).into_par_iter().map(column_contrib).collect()
        };
        let contributions = match self.options.workers {
            Some(w) => rayon::ThreadPoolBuilder::new()
                .num_threads(w.max(1))
                .build()
                .map_err(|e| Error::Io(std::io::Error::other(e)))?
                .install(run)?,
            None => run()?,
        };

        let mut acc: Vec<Option<C>> = vec![None; d * d];
        for contrib in contributions {
            for (slot, x) in contrib {
                match &mut acc[slot] {
                    Some(v) => v.add_assign(&x),
                    empty => *empty = Some(x),
                }
            }
        }
        let zero = braiding.one.zero_like();
        Ok((0..d)
            .map(|a| (0..d).map(|bcol| acc[a * d + bcol].take().unwrap_or_else(|| zero.clone())).collect())
            .collect())
    }

    /// Extracts the scalar `c` with `closure_trace = c Id`, failing with the
    /// residual when the trace is not proportional to the identity.
    pub fn invariant(&self, b: &BraidWord, rib: &RibbonData) -> Result<InvariantResult> {
        let start = Instant::now();
        let table = LocalBraiding::from_ribbon(rib);
        let m = self.closure_trace(b, &table)?;
        let c = m[0][0].clone();
        let residual: Vec<Vec<LaurentPoly>> = m
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, x)| if i == j { x - &c } else { x.clone() })
                    .collect()
            })
            .collect();
        if residual.iter().flatten().any(|x| !x.is_zero()) {
            return Err(Error::NotProportionalToIdentity { residual });
        }
        Ok(InvariantResult {
            scalar: c.substitute_variable(rib.var()),
            proportionality_ok: true,
            strands: b.strands(),
            writhe: b.writhe(),
            model: rib.model(),
            elapsed: start.elapsed(),
        })
    }

    /// Alexander-Conway polynomial in `s = t^{1/2}` from the `sl2` model.
    pub fn alexander(&self, b: &BraidWord) -> Result<LaurentPoly> {
        Ok(self.invariant(b, &build_sl2_ribbon())?.scalar)
    }

    /// `LG^{n,1}(L; tau, -1)` in the variable `tau`.
    pub fn links_gould_qm1(&self, b: &BraidWord, n: u32) -> Result<LaurentPoly> {
        let rib = build_lg_qm1_ribbon(n)?;
        check_budget(rib.dim(), b.strands(), self.options.budget_bits)?;
        Ok(self.invariant(b, &rib)?.scalar)
    }

    pub fn verify_theorem(&self, b: &BraidWord, n: u32) -> Result<TheoremReport> {
        let lg = self.links_gould_qm1(b, n)?;
        let alex = self.alexander(b)?.substitute_variable(Var::Tau).pow(n);
        Ok(TheoremReport {
            braid: b.clone(),
            n,
            equal_up_to_unit: equal_up_to_unit(&lg, &alex),
            raw_difference: &lg - &alex,
            links_gould: lg,
            alexander_power: alex,
        })
    }

    /// Closure invariant of the numeric `gl(1|1)` model: `Δ_L` evaluated at
    /// `t^{1/2} = a^{-1}` for the module `rep`. `tol` bounds the relative
    /// deviation of the closure trace from a multiple of the identity.
    pub fn gl11_numeric_invariant(&self, b: &BraidWord, rep: &Gl11NumericRep, tol: f64) -> Result<Complex64> {
        let (braiding, inverse, pivot) = gl11_normalized_braiding(rep)?;
        let table = LocalBraiding::from_matrices(&braiding, &inverse, pivot);
        let m = self.closure_trace(b, &table)?;
        let c = m[0][0];
        let scale = c.norm().max(1.0);
        let spread = (m[0][1].norm().max(m[1][0].norm()).max((m[1][1] - c).norm())) / scale;
        if spread > tol {
            return Err(Error::NotProportionalNumeric { spread });
        }
        Ok(c)
    }
}

/// Alexander polynomial with the default evaluator.
pub fn alexander(b: &BraidWord) -> Result<LaurentPoly> {
    Evaluator::default().alexander(b)
}

/// `LG^{n,1}(L; tau, -1)` with the default evaluator.
pub fn links_gould_qm1(b: &BraidWord, n: u32) -> Result<LaurentPoly> {
    Evaluator::default().links_gould_qm1(b, n)
}

pub fn verify_theorem(b: &BraidWord, n: u32) -> Result<TheoremReport> {
    Evaluator::default().verify_theorem(b, n)
}

pub fn invariant(b: &BraidWord, rib: &RibbonData) -> Result<InvariantResult> {
    Evaluator::default().invariant(b, rib)
}

pub fn closure_trace(b: &BraidWord, rib: &RibbonData) -> Result<Vec<Vec<LaurentPoly>>> {
    Evaluator::default().closure_trace(b, &LocalBraiding::from_ribbon(rib))
}
