//! Numeric checks of the algebraic identities behind the two `U`-models,
//! evaluated on two-dimensional modules at seeded random parameters, plus
//! exact Yang-Baxter and framing checks of the symbolic ribbons.
//!
//! Residuals are relative: `max |A - B| / max(1, max |B|)`.

use std::f64::consts::PI;

use nalgebra::{Matrix2, Matrix4};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::matrix;
use crate::ribbon::numeric::{
    braiding_numeric_gl11, braiding_numeric_sl2h, build_gl11_numeric, build_sl2_numeric, c, d_h, d_prime, i_pow,
    kron2, r1_matrix, swap4, twist, Gl11NumericRep, Sl2NumericRep, C64,
};
use crate::ribbon::{build_lg_qm1_ribbon, build_sl2_ribbon, RibbonData};
use crate::sparse::SparseOperator;

/// Default tolerance of the residual checks.
pub const TOLERANCE: f64 = 1e-8;
/// Tolerance for `s` landing on `±1`.
pub const SIGN_TOLERANCE: f64 = 1e-10;

fn max_abs2(m: &Matrix2<C64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn max_abs4(m: &Matrix4<C64>) -> f64 {
    m.iter().map(|z| z.norm()).fold(0.0, f64::max)
}

fn rel2(a: &Matrix2<C64>, b: &Matrix2<C64>) -> f64 {
    max_abs2(&(a - b)) / max_abs2(b).max(1.0)
}

fn rel4(a: &Matrix4<C64>, b: &Matrix4<C64>) -> f64 {
    max_abs4(&(a - b)) / max_abs4(b).max(1.0)
}

fn inv_diag4(m: &Matrix4<C64>) -> Matrix4<C64> {
    Matrix4::from_fn(|r, col| if r == col { m[(r, r)].inv() } else { C64::default() })
}

fn inv_diag2(m: &Matrix2<C64>) -> Matrix2<C64> {
    Matrix2::from_fn(|r, col| if r == col { m[(r, r)].inv() } else { C64::default() })
}

/// The generators `(e, f, k)` of `U` acting on a two-dimensional module.
#[derive(Clone, Debug)]
pub struct UAction {
    pub e: Matrix2<C64>,
    pub f: Matrix2<C64>,
    pub k: Matrix2<C64>,
}

impl UAction {
    pub fn k_inv(&self) -> Matrix2<C64> {
        inv_diag2(&self.k)
    }
}

impl From<&Sl2NumericRep> for UAction {
    fn from(r: &Sl2NumericRep) -> Self {
        UAction { e: r.e, f: r.f, k: r.k }
    }
}

impl From<&Gl11NumericRep> for UAction {
    fn from(r: &Gl11NumericRep) -> Self {
        UAction { e: r.e(), f: r.f(), k: r.k() }
    }
}

/// Max residual of `ke + ek`, `kf + fk`, `e^2`, `f^2`, `ef - fe - (k - k^-1)`
/// and of `ef + fe` being the scalar `a - a^-1` with `a = k[0][0]`.
pub fn check_u_relations(u: &UAction) -> f64 {
    let zero = Matrix2::zeros();
    let id = Matrix2::identity();
    let a = u.k[(0, 0)];
    let kinv = u.k_inv();
    [
        rel2(&(u.k * u.e + u.e * u.k), &zero),
        rel2(&(u.k * u.f + u.f * u.k), &zero),
        rel2(&(u.e * u.e), &zero),
        rel2(&(u.f * u.f), &zero),
        rel2(&(u.e * u.f - u.f * u.e), &(u.k - kinv)),
        rel2(&(u.e * u.f + u.f * u.e), &(id * (a - a.inv()))),
    ]
    .into_iter()
    .fold(0.0, f64::max)
}

/// Max residual of the defining relations of the super algebra on `rep`:
/// `XY + YX = (C - C^-1)/(q - q^-1)`, `X^2 = Y^2 = 0`, `[G, X] = X`,
/// `[G, Y] = -Y`, `I` central, and `σ` an involution anticommuting with
/// the odd generators.
pub fn check_gl11_relations(rep: &Gl11NumericRep) -> f64 {
    let zero = Matrix2::zeros();
    let id = Matrix2::identity();
    let (x, y, g, i, sg) = (rep.x, rep.y, rep.g, rep.i, rep.sigma);
    let cc = rep.big_c();
    let cinv = inv_diag2(&cc);
    let q = rep.q;
    [
        rel2(&(x * y + y * x), &((cc - cinv) / (q - q.inv()))),
        rel2(&(x * x), &zero),
        rel2(&(y * y), &zero),
        rel2(&(g * x - x * g), &x),
        rel2(&(g * y - y * g), &(-y)),
        rel2(&(i * x - x * i), &zero),
        rel2(&(i * y - y * i), &zero),
        rel2(&(i * g - g * i), &zero),
        rel2(&(sg * sg), &id),
        rel2(&(sg * x + x * sg), &zero),
        rel2(&(sg * y + y * sg), &zero),
    ]
    .into_iter()
    .fold(0.0, f64::max)
}

/// Residual between the `gl(1|1)` generators `(e, f, k)` carried through
/// the intertwiner and those of the `sl(2)` module with the same `alpha`.
pub fn check_gl11_matches_sl2(rep: &Gl11NumericRep) -> Result<f64> {
    let sl2 = build_sl2_numeric(rep.alpha)?;
    Ok([
        rel2(&rep.to_sl2_basis(&rep.e()), &sl2.e),
        rel2(&rep.to_sl2_basis(&rep.f()), &sl2.f),
        rel2(&rep.to_sl2_basis(&rep.k()), &sl2.k),
    ]
    .into_iter()
    .fold(0.0, f64::max))
}

fn conj(d: &Matrix4<C64>, x: &Matrix4<C64>) -> Matrix4<C64> {
    d * x * inv_diag4(d)
}

/// `D^H (x ⊗ y) (D^H)^{-1}` against `(e⊗1 -> e⊗k, f⊗1 -> f⊗k^-1, k⊗1 -> k⊗1)`
/// and the mirrored images of `1⊗e, 1⊗f, 1⊗k`, on `V_alpha ⊗ V_alpha'`.
pub fn check_dh_conjugation(alpha: C64, alpha_prime: C64) -> Result<f64> {
    let r1 = build_sl2_numeric(alpha)?;
    let r2 = build_sl2_numeric(alpha_prime)?;
    let d = d_h(&r1, &r2);
    let id = Matrix2::identity();
    let pairs = [
        (kron2(&r1.e, &id), kron2(&r1.e, &r2.k)),
        (kron2(&r1.f, &id), kron2(&r1.f, &r2.k_inv())),
        (kron2(&r1.k, &id), kron2(&r1.k, &id)),
        (kron2(&id, &r2.e), kron2(&r1.k, &r2.e)),
        (kron2(&id, &r2.f), kron2(&r1.k_inv(), &r2.f)),
        (kron2(&id, &r2.k), kron2(&id, &r2.k)),
    ];
    Ok(pairs.iter().map(|(x, want)| rel4(&conj(&d, x), want)).fold(0.0, f64::max))
}

/// Conjugation by `R_1`, by `D'` and by `D^σ = R_1 D'` on the generator
/// pairs `e⊗1, f⊗1, k⊗1, 1⊗e, 1⊗f, 1⊗k`. Expected images use the grading
/// `|e| = |f| = 1`, `|k| = 0` and the `G`-degrees `1, -1, 0`.
pub fn check_dsigma_conjugation(r1: &Gl11NumericRep, r2: &Gl11NumericRep) -> Result<f64> {
    let dp = d_prime(r1, r2)?;
    let rr = r1_matrix(r1, r2);
    let rr_inv = rr.try_inverse().ok_or_else(|| Error::DegenerateParameter("singular R_1".into()))?;
    let ds = rr * dp;
    let ds_inv = inv_diag4(&dp) * rr_inv;
    let (u1, u2) = (UAction::from(r1), UAction::from(r2));
    let id = Matrix2::identity();
    let (s1, s2) = (r1.sigma, r2.sigma);
    let (c1, c2) = (r1.big_c(), r2.big_c());
    let (c1i, c2i) = (inv_diag2(&c1), inv_diag2(&c2));

    let lhs = [
        kron2(&u1.e, &id),
        kron2(&u1.f, &id),
        kron2(&u1.k, &id),
        kron2(&id, &u2.e),
        kron2(&id, &u2.f),
        kron2(&id, &u2.k),
    ];
    let by_r1 = [
        kron2(&u1.e, &s2),
        kron2(&u1.f, &s2),
        kron2(&u1.k, &id),
        kron2(&s1, &u2.e),
        kron2(&s1, &u2.f),
        kron2(&id, &u2.k),
    ];
    let by_dp = [
        kron2(&u1.e, &c2i),
        kron2(&u1.f, &c2),
        kron2(&u1.k, &id),
        kron2(&c1i, &u2.e),
        kron2(&c1, &u2.f),
        kron2(&id, &u2.k),
    ];
    let by_ds = [
        kron2(&u1.e, &u2.k),
        kron2(&u1.f, &u2.k_inv()),
        kron2(&u1.k, &id),
        kron2(&u1.k, &u2.e),
        kron2(&u1.k_inv(), &u2.f),
        kron2(&id, &u2.k),
    ];
    let mut worst: f64 = 0.0;
    for (idx, x) in lhs.iter().enumerate() {
        worst = worst
            .max(rel4(&(rr * x * rr_inv), &by_r1[idx]))
            .max(rel4(&conj(&dp, x), &by_dp[idx]))
            .max(rel4(&(ds * x * ds_inv), &by_ds[idx]));
    }
    Ok(worst)
}

/// Closed form of the scalar relating the two R-matrices:
/// `s s' (-1)^{εε'} i^{ε+ε'} i^{(αα'-1)/2} q^{jJ' + j'J}`.
pub fn ratio_formula(r1: &Gl11NumericRep, r2: &Gl11NumericRep) -> C64 {
    let sign = if r1.epsilon * r2.epsilon == 1 { -1.0 } else { 1.0 };
    r1.s_sign()
        * r2.s_sign()
        * sign
        * i_pow(c((r1.epsilon + r2.epsilon) as f64, 0.0))
        * i_pow((r1.alpha * r2.alpha - 1.0) / 2.0)
        * r1.q_pow(r1.j * r2.big_j + r2.j * r1.big_j)
}

/// Outcome of [`check_ratio_formula`].
#[derive(Clone, Debug, Serialize)]
pub struct RatioCheck {
    /// `λ` with `R^H ≈ λ R^σ`, fitted by least squares.
    pub measured: (f64, f64),
    pub formula: (f64, f64),
    /// `|λ - formula| / max(1, |formula|)`
    pub residual: f64,
    /// `max |R^H - λ R^σ| / max(1, max |R^H|)`
    pub spread: f64,
    /// Distance of `s` and `s'` to `{+1, -1}`.
    pub sign_error: f64,
}

fn pair(z: C64) -> (f64, f64) {
    (z.re, z.im)
}

/// Compares `R^H` on `V_alpha ⊗ V_alpha'` with `R^σ` on the matched
/// `gl(1|1)` modules (carried to the same basis by the intertwiners).
/// Fails with [`Error::NotProportional`] when the spread exceeds `tol`.
pub fn check_ratio_formula(r1: &Gl11NumericRep, r2: &Gl11NumericRep, tol: f64) -> Result<RatioCheck> {
    let rh = braiding_numeric_sl2h(&build_sl2_numeric(r1.alpha)?, &build_sl2_numeric(r2.alpha)?);
    let t = kron2(&r1.intertwiner(), &r2.intertwiner());
    let rs = t * braiding_numeric_gl11(r1, r2)? * inv_diag4(&t);
    let num: C64 = rs.iter().zip(rh.iter()).map(|(x, y)| x.conj() * y).sum();
    let den: f64 = rs.iter().map(|x| x.norm_sqr()).sum();
    let lambda = num / den;
    let spread = max_abs4(&(rh - rs * lambda)) / max_abs4(&rh).max(1.0);
    if spread > tol {
        return Err(Error::NotProportional { spread });
    }
    let formula = ratio_formula(r1, r2);
    let sign_error = [r1.s_sign(), r2.s_sign()]
        .iter()
        .map(|s| (s - 1.0).norm().min((s + 1.0).norm()))
        .fold(0.0, f64::max);
    Ok(RatioCheck {
        measured: pair(lambda),
        formula: pair(formula),
        residual: (lambda - formula).norm() / formula.norm().max(1.0),
        spread,
        sign_error,
    })
}

/// `swap R^H / θ_alpha` on `V_alpha ⊗ V_alpha` against the symbolic `sl2`
/// braiding evaluated at `s = a^{-1}`.
pub fn check_sl2_numeric_vs_symbolic(alpha: C64) -> Result<f64> {
    let r = build_sl2_numeric(alpha)?;
    let numeric = swap4() * braiding_numeric_sl2h(&r, &r) / twist(alpha);
    let rib = build_sl2_ribbon();
    let s = r.a.inv();
    let mut symbolic = Matrix4::zeros();
    for (row, col, x) in rib.braiding().entries() {
        symbolic[(row, col)] = x.eval_complex(s)?;
    }
    Ok(rel4(&numeric, &symbolic))
}

/// Exact braid relation `(B⊗I)(I⊗B)(B⊗I) = (I⊗B)(B⊗I)(I⊗B)` on `V^{⊗3}`.
pub fn check_yang_baxter(rib: &RibbonData) -> bool {
    yang_baxter_holds(rib.braiding(), rib.dim())
}

pub fn yang_baxter_holds(b: &SparseOperator, dim: usize) -> bool {
    let id = SparseOperator::identity(dim, b.var());
    let left = b.kron(&id);
    let right = id.kron(b);
    left.mul(&right).mul(&left) == right.mul(&left).mul(&right)
}

/// `trace_2((Id ⊗ pivot) B) = Id`, exactly.
pub fn check_framing(rib: &RibbonData) -> bool {
    matrix::is_identity(&rib.framing_trace())
}

/// One line of the JSON check report.
#[derive(Clone, Debug, Serialize, PartialEq)]
pub struct CheckReport {
    pub name: String,
    pub samples: usize,
    pub max_residual: f64,
    pub tolerance: f64,
    pub pass: bool,
}

impl CheckReport {
    fn new(name: &str, samples: usize, max_residual: f64, tolerance: f64) -> Self {
        CheckReport {
            name: name.to_string(),
            samples,
            max_residual,
            tolerance,
            pass: max_residual.is_finite() && max_residual < tolerance,
        }
    }

    fn exact(name: &str, results: &[bool]) -> Self {
        let failures = results.iter().filter(|ok| !**ok).count();
        CheckReport {
            name: name.to_string(),
            samples: results.len(),
            max_residual: failures as f64,
            tolerance: 0.0,
            pass: failures == 0,
        }
    }
}

/// Seeded sampler of non-degenerate complex parameters.
pub struct ParamSampler {
    rng: ChaCha8Rng,
}

impl ParamSampler {
    pub fn new(seed: u64) -> Self {
        ParamSampler { rng: ChaCha8Rng::seed_from_u64(seed) }
    }

    /// Uniform in angle and log-radius on `0.5 < |z| < 2`.
    pub fn annulus(&mut self) -> C64 {
        let r = self.rng.gen_range(0.5f64.ln()..2f64.ln()).exp();
        let theta = self.rng.gen_range(0.0..2.0 * PI);
        C64::from_polar(r, theta)
    }

    /// `alpha` with `|a^2 - 1| >= 0.05`, `a = i^{alpha + 1}`.
    pub fn alpha(&mut self) -> C64 {
        loop {
            let z = self.annulus();
            let a = i_pow(z + 1.0);
            if (a * a - 1.0).norm() >= 0.05 {
                return z;
            }
        }
    }

    /// `q` at distance at least `0.25` from `±1`.
    pub fn q(&mut self) -> C64 {
        loop {
            let z = self.annulus();
            if (z - 1.0).norm() >= 0.25 && (z + 1.0).norm() >= 0.25 {
                return z;
            }
        }
    }

    pub fn epsilon(&mut self) -> u8 {
        self.rng.gen_range(0..2)
    }

    /// Two `gl(1|1)` modules over a common `q`.
    pub fn gl11_pair(&mut self) -> Result<(Gl11NumericRep, Gl11NumericRep)> {
        let q = self.q();
        let (a1, e1, j1) = (self.alpha(), self.epsilon(), self.annulus());
        let (a2, e2, j2) = (self.alpha(), self.epsilon(), self.annulus());
        Ok((build_gl11_numeric(q, a1, e1, j1)?, build_gl11_numeric(q, a2, e2, j2)?))
    }
}

/// Configuration of [`run_all`].
#[derive(Clone, Copy, Debug)]
pub struct HopfSuite {
    pub seed: u64,
    /// Draws for the relation and conjugation checks.
    pub samples: usize,
    /// Draws for the ratio check.
    pub ratio_samples: usize,
}

impl Default for HopfSuite {
    fn default() -> Self {
        HopfSuite { seed: 0, samples: 20, ratio_samples: 50 }
    }
}

fn max_over<T: Sync>(items: &[T], f: impl Fn(&T) -> Result<f64> + Sync) -> f64 {
    items
        .par_iter()
        .map(|x| f(x).unwrap_or(f64::INFINITY))
        .reduce(|| 0.0, |a, b| if a.is_nan() || b.is_nan() { f64::NAN } else { a.max(b) })
}

/// Runs every check and returns the report lines in a fixed order.
pub fn run_all(suite: &HopfSuite) -> Result<Vec<CheckReport>> {
    let mut sampler = ParamSampler::new(suite.seed);
    let alphas: Vec<(C64, C64)> = (0..suite.samples).map(|_| (sampler.alpha(), sampler.alpha())).collect();
    let pairs: Vec<(Gl11NumericRep, Gl11NumericRep)> =
        (0..suite.samples).map(|_| sampler.gl11_pair()).collect::<Result<_>>()?;
    let ratio_pairs: Vec<(Gl11NumericRep, Gl11NumericRep)> =
        (0..suite.ratio_samples).map(|_| sampler.gl11_pair()).collect::<Result<_>>()?;

    let u_sl2 = max_over(&alphas, |(a, _)| Ok(check_u_relations(&UAction::from(&build_sl2_numeric(*a)?))));
    let u_gl11 = max_over(&pairs, |(r, _)| {
        Ok(check_u_relations(&UAction::from(r))
            .max(check_gl11_relations(r))
            .max(check_gl11_matches_sl2(r)?))
    });
    let dh = max_over(&alphas, |(a, b)| check_dh_conjugation(*a, *b));
    let dsigma = max_over(&pairs, |(r1, r2)| check_dsigma_conjugation(r1, r2));
    let sl2_sym = max_over(&alphas, |(a, _)| check_sl2_numeric_vs_symbolic(*a));

    let ratios: Vec<Result<RatioCheck>> =
        ratio_pairs.par_iter().map(|(r1, r2)| check_ratio_formula(r1, r2, TOLERANCE)).collect();
    let spread = ratios
        .iter()
        .map(|r| match r {
            Ok(x) => x.spread,
            Err(Error::NotProportional { spread }) => *spread,
            Err(_) => f64::INFINITY,
        })
        .fold(0.0, f64::max);
    let pick = |f: fn(&RatioCheck) -> f64| ratios.iter().map(|r| r.as_ref().map_or(f64::INFINITY, f)).fold(0.0, f64::max);
    let value = pick(|r| r.residual);
    let sign = pick(|r| r.sign_error);

    let mut ribbons = vec![build_sl2_ribbon()];
    for n in 1..=3 {
        ribbons.push(build_lg_qm1_ribbon(n)?);
    }
    let ybe: Vec<bool> = ribbons.par_iter().map(check_yang_baxter).collect();
    let framing: Vec<bool> = ribbons.iter().map(check_framing).collect();

    Ok(vec![
        CheckReport::new("U_relations_sl2", suite.samples, u_sl2, TOLERANCE),
        CheckReport::new("U_relations_gl11", suite.samples, u_gl11, TOLERANCE),
        CheckReport::new("DH_conjugation", suite.samples, dh, TOLERANCE),
        CheckReport::new("Dsigma_conjugation", suite.samples, dsigma, TOLERANCE),
        CheckReport::new("sl2_numeric_vs_symbolic", suite.samples, sl2_sym, TOLERANCE),
        CheckReport::new("ratio_proportionality", suite.ratio_samples, spread, TOLERANCE),
        CheckReport::new("ratio_formula", suite.ratio_samples, value, TOLERANCE),
        CheckReport::new("ratio_sign_s", suite.ratio_samples, sign, SIGN_TOLERANCE),
        CheckReport::exact("yang_baxter", &ybe),
        CheckReport::exact("framing_normalization", &framing),
    ])
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sl2_relations_at_fixed_alpha() {
        let r = build_sl2_numeric(c(0.37, 0.2)).unwrap();
        assert!(check_u_relations(&UAction::from(&r)) < 1e-10);
    }

    #[test]
    fn dh_at_zero() {
        assert!(check_dh_conjugation(c(0.0, 0.0), c(0.0, 0.0)).unwrap() < 1e-12);
    }

    #[test]
    fn gl11_relations_and_matching() {
        let mut s = ParamSampler::new(7);
        for _ in 0..5 {
            let (r1, r2) = s.gl11_pair().unwrap();
            assert!(check_u_relations(&UAction::from(&r1)) < 1e-10);
            assert!(check_gl11_relations(&r1) < 1e-10);
            assert!(check_gl11_matches_sl2(&r1).unwrap() < 1e-10);
            assert!(check_dsigma_conjugation(&r1, &r2).unwrap() < 1e-9);
        }
    }

    #[test]
    fn ratio_symmetric_case() {
        let q = c(0.7, 0.9);
        let r = build_gl11_numeric(q, c(0.3, -0.4), 1, c(1.2, 0.5)).unwrap();
        let out = check_ratio_formula(&r, &r, TOLERANCE).unwrap();
        assert!(out.residual < 1e-8, "{out:?}");
        assert!(out.sign_error < 1e-10);
    }

    #[test]
    fn ratio_fails_on_mismatched_q() {
        let r1 = build_gl11_numeric(c(0.7, 0.9), c(0.3, -0.4), 1, c(1.2, 0.5)).unwrap();
        let r2 = build_gl11_numeric(c(0.7, -0.9), c(0.3, -0.4), 1, c(1.2, 0.5)).unwrap();
        assert!(matches!(check_ratio_formula(&r1, &r2, TOLERANCE), Err(Error::QMismatch)));
    }

    #[test]
    fn yang_baxter_identity_and_sl2() {
        let id = SparseOperator::identity(4, crate::laurent::Var::S);
        assert!(yang_baxter_holds(&id, 2));
        assert!(check_yang_baxter(&build_sl2_ribbon()));
        assert!(check_framing(&build_sl2_ribbon()));
        let lg2 = build_lg_qm1_ribbon(2).unwrap();
        assert!(check_yang_baxter(&lg2));
    }

    #[test]
    fn perturbed_braiding_fails_yang_baxter() {
        let rib = build_sl2_ribbon();
        let mut b = rib.braiding().clone();
        b.set(1, 1, "s".parse().unwrap());
        assert!(!yang_baxter_holds(&b, 2));
    }

    #[test]
    fn report_is_deterministic() {
        let suite = HopfSuite { seed: 3, samples: 4, ratio_samples: 4 };
        let a = run_all(&suite).unwrap();
        let b = run_all(&suite).unwrap();
        assert_eq!(a, b);
        assert!(a.iter().all(|r| r.pass), "{a:#?}");
    }

    #[test]
    fn zero_samples() {
        let suite = HopfSuite { seed: 0, samples: 0, ratio_samples: 0 };
        let rep = run_all(&suite).unwrap();
        assert!(rep.iter().all(|r| r.pass));
        assert_eq!(rep[0].samples, 0);
    }
}
