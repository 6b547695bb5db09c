//! Two-dimensional representations over `C` and the 4x4 universal
//! R-matrix actions of the unrolled `sl(2)` model and of the bosonized
//! `gl(1|1)` model.
//!
//! Complex powers use fixed branches: `i^x = exp(i π x / 2)` and
//! `q^x = exp(x Log q)` with the principal logarithm of `q`.

use std::f64::consts::PI;

use nalgebra::{Matrix2, Matrix4};
use num_complex::Complex64;

use crate::error::{Error, Result};

pub type C64 = Complex64;

const DEGENERACY_TOL: f64 = 1e-12;

pub fn c(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// `i^x` on the branch `exp(i π x / 2)`.
pub fn i_pow(x: C64) -> C64 {
    (C64::i() * PI / 2.0 * x).exp()
}

/// `A ⊗ B` with `A` acting on the first (more significant) factor.
pub fn kron2(a: &Matrix2<C64>, b: &Matrix2<C64>) -> Matrix4<C64> {
    Matrix4::from_fn(|r, col| a[(r / 2, col / 2)] * b[(r % 2, col % 2)])
}

/// The switch `x ⊗ y -> y ⊗ x` on `C^2 ⊗ C^2`.
pub fn swap4() -> Matrix4<C64> {
    let mut m = Matrix4::zeros();
    for a in 0..2 {
        for b in 0..2 {
            m[(2 * b + a, 2 * a + b)] = c(1.0, 0.0);
        }
    }
    m
}

fn diag2(x: C64, y: C64) -> Matrix2<C64> {
    Matrix2::new(x, C64::default(), C64::default(), y)
}

/// `V_alpha` of the unrolled quantum `sl(2)` at `q = i`, restricted to
/// `U = <k, e, f>` with `a = i^{alpha + 1}`.
#[derive(Clone, Debug)]
pub struct Sl2NumericRep {
    pub alpha: C64,
    pub a: C64,
    pub h: Matrix2<C64>,
    pub k: Matrix2<C64>,
    pub e: Matrix2<C64>,
    pub f: Matrix2<C64>,
}

impl Sl2NumericRep {
    pub fn k_inv(&self) -> Matrix2<C64> {
        diag2(self.k[(0, 0)].inv(), self.k[(1, 1)].inv())
    }
}

pub fn build_sl2_numeric(alpha: C64) -> Result<Sl2NumericRep> {
    let a = i_pow(alpha + 1.0);
    if (a * a - 1.0).norm() < DEGENERACY_TOL {
        return Err(Error::DegenerateParameter(format!("alpha = {alpha} is an odd integer")));
    }
    let zero = C64::default();
    let one = c(1.0, 0.0);
    Ok(Sl2NumericRep {
        alpha,
        a,
        h: diag2(alpha + 1.0, alpha - 1.0),
        k: diag2(a, -a),
        e: Matrix2::new(zero, one, zero, zero),
        f: Matrix2::new(zero, zero, a - a.inv(), zero),
    })
}

/// Two-dimensional module `V(alpha, a, 2j, epsilon, J)` of the bosonized
/// `U_q gl(1|1)^σ`, written in the basis where `I, G, X, Y, σ` take their
/// standard matrix form.
#[derive(Clone, Debug)]
pub struct Gl11NumericRep {
    pub q: C64,
    pub log_q: C64,
    pub alpha: C64,
    pub epsilon: u8,
    /// The parameter `J` of the Cartan generator `G`.
    pub big_j: C64,
    /// Solution of `(-1)^ε q^{-2j} = i^{alpha + 1}`.
    pub j: C64,
    pub a: C64,
    pub i: Matrix2<C64>,
    pub g: Matrix2<C64>,
    pub x: Matrix2<C64>,
    pub y: Matrix2<C64>,
    pub sigma: Matrix2<C64>,
}

impl Gl11NumericRep {
    /// `q^x`
    pub fn q_pow(&self, x: C64) -> C64 {
        (x * self.log_q).exp()
    }

    /// `C = q^I`
    pub fn big_c(&self) -> Matrix2<C64> {
        let v = self.q_pow(self.i[(0, 0)]);
        diag2(v, v)
    }

    pub fn e(&self) -> Matrix2<C64> {
        self.x * self.sigma * (self.q - self.q.inv())
    }

    pub fn f(&self) -> Matrix2<C64> {
        self.y
    }

    /// `k = C^{-1} σ`
    pub fn k(&self) -> Matrix2<C64> {
        let ci = self.q_pow(-self.i[(0, 0)]);
        self.sigma * ci
    }

    pub fn k_inv(&self) -> Matrix2<C64> {
        let k = self.k();
        diag2(k[(0, 0)].inv(), k[(1, 1)].inv())
    }

    /// `s = q^j i^{(alpha - 3 - 2ε)/2}`, which is `±1`.
    pub fn s_sign(&self) -> C64 {
        self.q_pow(self.j) * i_pow((self.alpha - 3.0 - 2.0 * self.epsilon as f64) / 2.0)
    }

    /// Diagonal change of basis `T = diag(1, a - a^{-1})` carrying this
    /// module's `(e, f, k)` onto those of [`build_sl2_numeric`]`(alpha)`:
    /// `T e T^{-1} = E`, `T f T^{-1} = F`, `T k T^{-1} = K`.
    pub fn intertwiner(&self) -> Matrix2<C64> {
        diag2(c(1.0, 0.0), self.a - self.a.inv())
    }

    /// `T m T^{-1}` for the [`intertwiner`](Self::intertwiner) `T`.
    pub fn to_sl2_basis(&self, m: &Matrix2<C64>) -> Matrix2<C64> {
        let t = self.intertwiner();
        let t_inv = diag2(c(1.0, 0.0), t[(1, 1)].inv());
        t * m * t_inv
    }
}

pub fn build_gl11_numeric(q: C64, alpha: C64, epsilon: u8, big_j: C64) -> Result<Gl11NumericRep> {
    if epsilon > 1 {
        return Err(Error::DegenerateParameter(format!("epsilon must be 0 or 1, got {epsilon}")));
    }
    if q.norm() < DEGENERACY_TOL || (q - 1.0).norm() < DEGENERACY_TOL || (q + 1.0).norm() < DEGENERACY_TOL {
        return Err(Error::DegenerateParameter(format!("q = {q} must avoid 0 and ±1")));
    }
    let a = i_pow(alpha + 1.0);
    if (a * a - 1.0).norm() < DEGENERACY_TOL {
        return Err(Error::DegenerateParameter(format!("alpha = {alpha} is an odd integer")));
    }
    let log_q = q.ln();
    // q^{-2j} = (-1)^ε i^{alpha+1} = exp(i π (alpha + 1 + 2ε) / 2)
    let j = -(C64::i() * PI / 2.0 * (alpha + 1.0 + 2.0 * epsilon as f64)) / (2.0 * log_q);
    let qp = |x: C64| (x * log_q).exp();
    let zero = C64::default();
    let one = c(1.0, 0.0);
    let sign = if epsilon == 0 { 1.0 } else { -1.0 };
    let x01 = (qp(2.0 * j) - qp(-2.0 * j)) / (q - q.inv());
    Ok(Gl11NumericRep {
        q,
        log_q,
        alpha,
        epsilon,
        big_j,
        j,
        a,
        i: diag2(2.0 * j, 2.0 * j),
        g: diag2((big_j + 1.0) / 2.0, (big_j - 1.0) / 2.0),
        x: Matrix2::new(zero, x01, zero, zero),
        y: Matrix2::new(zero, zero, one, zero),
        sigma: diag2(c(sign, 0.0), c(-sign, 0.0)),
    })
}

/// `D^H = i^{H ⊗ H / 2}` on `V_alpha ⊗ V_beta`.
pub fn d_h(r1: &Sl2NumericRep, r2: &Sl2NumericRep) -> Matrix4<C64> {
    let mut m = Matrix4::zeros();
    for a in 0..2 {
        for b in 0..2 {
            m[(2 * a + b, 2 * a + b)] = i_pow(r1.h[(a, a)] * r2.h[(b, b)] / 2.0);
        }
    }
    m
}

/// `R^H = D^H (1 + E ⊗ F)` on `V_alpha ⊗ V_beta`, without the switch.
pub fn braiding_numeric_sl2h(r1: &Sl2NumericRep, r2: &Sl2NumericRep) -> Matrix4<C64> {
    d_h(r1, r2) * (Matrix4::identity() + kron2(&r1.e, &r2.f))
}

/// `R_1 = (1⊗1 + σ⊗1 + 1⊗σ - σ⊗σ) / 2`.
pub fn r1_matrix(r1: &Gl11NumericRep, r2: &Gl11NumericRep) -> Matrix4<C64> {
    let id = Matrix2::identity();
    (Matrix4::identity() + kron2(&r1.sigma, &id) + kron2(&id, &r2.sigma) - kron2(&r1.sigma, &r2.sigma)) * c(0.5, 0.0)
}

/// `D' = q^{-(I ⊗ G + G ⊗ I)}`.
pub fn d_prime(r1: &Gl11NumericRep, r2: &Gl11NumericRep) -> Result<Matrix4<C64>> {
    same_q(r1, r2)?;
    let mut m = Matrix4::zeros();
    for a in 0..2 {
        for b in 0..2 {
            let expo = r1.i[(a, a)] * r2.g[(b, b)] + r1.g[(a, a)] * r2.i[(b, b)];
            m[(2 * a + b, 2 * a + b)] = r1.q_pow(-expo);
        }
    }
    Ok(m)
}

fn same_q(r1: &Gl11NumericRep, r2: &Gl11NumericRep) -> Result<()> {
    if r1.q == r2.q {
        Ok(())
    } else {
        Err(Error::QMismatch)
    }
}

/// `R^σ = R_1 q^{-(I⊗G + G⊗I)} (1 + e ⊗ f)`, without the switch.
pub fn braiding_numeric_gl11(r1: &Gl11NumericRep, r2: &Gl11NumericRep) -> Result<Matrix4<C64>> {
    let dp = d_prime(r1, r2)?;
    Ok(r1_matrix(r1, r2) * dp * (Matrix4::identity() + kron2(&r1.e(), &r2.f())))
}

/// Twist `θ_alpha = i^{(alpha^2 - 1)/2}`.
pub fn twist(alpha: C64) -> C64 {
    i_pow((alpha * alpha - 1.0) / 2.0)
}

/// Framing-normalized braiding `τ R^σ / λ`, its inverse and pivot `k^{-1}`
/// for the `gl(1|1)` model on `V ⊗ V`, in the standard basis of `rep`.
pub fn gl11_normalized_braiding(
    rep: &Gl11NumericRep,
) -> Result<(Matrix4<C64>, Matrix4<C64>, [C64; 2])> {
    let raw = swap4() * braiding_numeric_gl11(rep, rep)?;
    let kinv = rep.k_inv();
    let pivot = [kinv[(0, 0)], kinv[(1, 1)]];
    // λ = trace_2((Id ⊗ pivot) c) restricted to the (0, 0) slot
    let lambda = pivot[0] * raw[(0, 0)] + pivot[1] * raw[(1, 1)];
    if lambda.norm() < DEGENERACY_TOL {
        return Err(Error::DegenerateParameter("vanishing framing scalar".into()));
    }
    let braiding = raw / lambda;
    let inverse = braiding
        .try_inverse()
        .ok_or_else(|| Error::DegenerateParameter("singular gl(1|1) braiding".into()))?;
    Ok((braiding, inverse, pivot))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn close(a: C64, b: C64, tol: f64) -> bool {
        (a - b).norm() < tol
    }

    #[test]
    fn sl2_alpha_zero() {
        let r = build_sl2_numeric(c(0.0, 0.0)).unwrap();
        assert!(close(r.a, C64::i(), 1e-15));
        assert!(close(r.k[(0, 0)], C64::i(), 1e-15));
        assert!(close(r.k[(1, 1)], -C64::i(), 1e-15));
        assert!(close(r.f[(1, 0)], c(0.0, 2.0), 1e-15));
    }

    #[test]
    fn sl2_odd_alpha_is_degenerate() {
        assert!(matches!(build_sl2_numeric(c(1.0, 0.0)), Err(Error::DegenerateParameter(_))));
        assert!(matches!(build_sl2_numeric(c(-3.0, 0.0)), Err(Error::DegenerateParameter(_))));
    }

    #[test]
    fn gl11_parameter_checks() {
        let alpha = c(0.3, 0.1);
        assert!(build_gl11_numeric(c(1.0, 0.0), alpha, 0, c(1.0, 0.0)).is_err());
        assert!(build_gl11_numeric(c(-1.0, 0.0), alpha, 0, c(1.0, 0.0)).is_err());
        assert!(build_gl11_numeric(c(0.0, 0.0), alpha, 0, c(1.0, 0.0)).is_err());
        assert!(build_gl11_numeric(c(0.7, 0.4), alpha, 2, c(1.0, 0.0)).is_err());
    }

    #[test]
    fn gl11_matches_constraint_and_k() {
        let q = c(0.8, 0.9);
        let alpha = c(0.0, 0.0);
        let r = build_gl11_numeric(q, alpha, 0, c(0.4, -0.2)).unwrap();
        // ε = 0, a = i: q^{-2j} = i
        assert!(close(r.q_pow(-2.0 * r.j), C64::i(), 1e-12));
        let k = r.k();
        assert!(close(k[(0, 0)], r.a, 1e-10) && close(k[(1, 1)], -r.a, 1e-10));
        let expect = (r.q_pow(2.0 * r.j) - r.q_pow(-2.0 * r.j)) / (q - q.inv());
        assert!(close(r.x[(0, 1)], expect, 1e-14));
        let s = r.s_sign();
        assert!(close(s, c(-1.0, 0.0), 1e-10));
    }

    #[test]
    fn r1_for_even_modules() {
        let q = c(0.6, -1.1);
        let r = build_gl11_numeric(q, c(0.2, 0.3), 0, c(1.5, 0.0)).unwrap();
        let r2 = build_gl11_numeric(q, c(-0.4, 0.1), 0, c(0.5, 0.5)).unwrap();
        let m = r1_matrix(&r, &r2);
        let expect = [1.0, 1.0, 1.0, -1.0];
        for (i, e) in expect.iter().enumerate() {
            assert!(close(m[(i, i)], c(*e, 0.0), 1e-15));
        }
    }

    #[test]
    fn q_mismatch() {
        let r = build_gl11_numeric(c(0.6, -1.1), c(0.2, 0.3), 0, c(1.5, 0.0)).unwrap();
        let r2 = build_gl11_numeric(c(0.6, 1.1), c(0.2, 0.3), 0, c(1.5, 0.0)).unwrap();
        assert!(matches!(braiding_numeric_gl11(&r, &r2), Err(Error::QMismatch)));
    }

    #[test]
    fn e_tensor_f_is_unitriangular() {
        let r = build_gl11_numeric(c(0.6, -1.1), c(0.2, 0.3), 1, c(1.5, 0.0)).unwrap();
        let m = Matrix4::identity() + kron2(&r.e(), &r.f());
        for i in 0..4 {
            assert!(close(m[(i, i)], c(1.0, 0.0), 1e-15));
        }
        let off: Vec<(usize, usize)> = (0..4)
            .flat_map(|i| (0..4).map(move |j| (i, j)))
            .filter(|&(i, j)| i != j && m[(i, j)].norm() > 0.0)
            .collect();
        assert_eq!(off, vec![(1, 2)]);
    }
}
