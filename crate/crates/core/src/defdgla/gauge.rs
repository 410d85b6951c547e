//! Gauge flows `db/dε = ⟦b, Δ⟧` integrated in floating point.
//!
//! Brackets are dense tensors `b[(i·n + j)·n + k]`, the `k`-th component of
//! `b(x_i, x_j)`; `Δ` is a dense `n×n` row-major matrix.

use serde::Serialize;

use super::complex::DeformationComplex;
use super::multider::Multiderivation;
use crate::error::{Error, Result};
use crate::exactla::rational::to_f64;

/// Dense float copy of an arity-2 multiderivation.
pub fn bracket_tensor(b: &Multiderivation) -> Vec<f64> {
    let n = b.ambient();
    let mut t = vec![0.0; n * n * n];
    for i in 0..n {
        for j in 0..n {
            for (k, x) in b.eval_basis(&[i, j]).iter().enumerate() {
                t[(i * n + j) * n + k] = to_f64(x);
            }
        }
    }
    t
}

/// `⟦b, Δ⟧(x, y) = b(Δx, y) + b(x, Δy) − Δ b(x, y)`.
pub fn bracket_with_derivation(b: &[f64], delta: &[f64], n: usize) -> Vec<f64> {
    let at = |i: usize, j: usize, k: usize| b[(i * n + j) * n + k];
    let mut out = vec![0.0; n * n * n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                let mut s = 0.0;
                for a in 0..n {
                    s += delta[a * n + i] * at(a, j, k);
                    s += delta[a * n + j] * at(i, a, k);
                    s -= delta[k * n + a] * at(i, j, a);
                }
                out[(i * n + j) * n + k] = s;
            }
        }
    }
    out
}

/// Largest absolute entry of the Jacobiator of a dense bracket.
pub fn jacobi_residual(b: &[f64], n: usize) -> f64 {
    let at = |i: usize, j: usize, k: usize| b[(i * n + j) * n + k];
    let mut worst: f64 = 0.0;
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                for out in 0..n {
                    let mut s = 0.0;
                    for a in 0..n {
                        s += at(i, j, a) * at(a, k, out);
                        s += at(j, k, a) * at(a, i, out);
                        s += at(k, i, a) * at(a, j, out);
                    }
                    worst = worst.max(s.abs());
                }
            }
        }
    }
    worst
}

fn axpy(y: &[f64], a: f64, x: &[f64]) -> Vec<f64> {
    y.iter().zip(x).map(|(y, x)| y + a * x).collect()
}

#[derive(Clone, Debug, Serialize)]
pub struct GaugeFlow {
    pub endpoint: Vec<f64>,
    /// Worst Jacobiator entry seen at any step, endpoint included.
    pub max_mc_residual: f64,
}

/// Classical RK4 for `db/dε = ⟦b, Δ⟧` from the handle's bracket.
pub fn gauge_flow(h: &DeformationComplex, delta: &Multiderivation, eps_end: f64, steps: usize) -> Result<GaugeFlow> {
    if delta.arity() != 1 {
        return Err(Error::ArityMismatch(format!(
            "a gauge generator has arity 1, got {}",
            delta.arity()
        )));
    }
    if delta.ambient() != h.dim() {
        return Err(Error::AmbientMismatch {
            left: h.dim(),
            right: delta.ambient(),
        });
    }
    if steps == 0 {
        return Err(Error::Unsupported("gauge flow needs at least one step".into()));
    }
    let n = h.dim();
    let d = delta.to_matrix()?.to_f64();
    let mut b = bracket_tensor(h.bracket());
    let mut worst = jacobi_residual(&b, n);
    let step = eps_end / steps as f64;
    let f = |b: &[f64]| bracket_with_derivation(b, &d, n);
    for _ in 0..steps {
        let k1 = f(&b);
        let k2 = f(&axpy(&b, step / 2.0, &k1));
        let k3 = f(&axpy(&b, step / 2.0, &k2));
        let k4 = f(&axpy(&b, step, &k3));
        for i in 0..b.len() {
            b[i] += step / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
        }
        worst = worst.max(jacobi_residual(&b, n));
    }
    Ok(GaugeFlow {
        endpoint: b,
        max_mc_residual: worst,
    })
}

fn matmul(a: &[f64], b: &[f64], n: usize) -> Vec<f64> {
    let mut c = vec![0.0; n * n];
    for i in 0..n {
        for k in 0..n {
            let x = a[i * n + k];
            if x == 0.0 {
                continue;
            }
            for j in 0..n {
                c[i * n + j] += x * b[k * n + j];
            }
        }
    }
    c
}

/// `exp(A)` by summing the Taylor series until the terms underflow.
pub fn matrix_exp(a: &[f64], n: usize) -> Vec<f64> {
    let mut sum = vec![0.0; n * n];
    let mut term = vec![0.0; n * n];
    for i in 0..n {
        sum[i * n + i] = 1.0;
        term[i * n + i] = 1.0;
    }
    for k in 1..200 {
        term = matmul(&term, a, n).iter().map(|x| x / k as f64).collect();
        let size = term.iter().fold(0.0f64, |m, x| m.max(x.abs()));
        for (s, t) in sum.iter_mut().zip(&term) {
            *s += t;
        }
        if size < 1e-18 {
            break;
        }
    }
    sum
}

/// `b_ε(x, y) = φ⁻¹ b₀(φx, φy)` with `φ = exp(εΔ)`, the closed-form solution
/// of the gauge flow for a constant generator.
pub fn conjugation_oracle(h: &DeformationComplex, delta: &Multiderivation, eps: f64) -> Result<Vec<f64>> {
    let n = h.dim();
    let d: Vec<f64> = delta.to_matrix()?.to_f64();
    let phi = matrix_exp(&d.iter().map(|x| x * eps).collect::<Vec<_>>(), n);
    let inv = matrix_exp(&d.iter().map(|x| -x * eps).collect::<Vec<_>>(), n);
    let b0 = bracket_tensor(h.bracket());
    let mut out = vec![0.0; n * n * n];
    for i in 0..n {
        for j in 0..n {
            // w = b0(φ x_i, φ x_j)
            let mut w = vec![0.0; n];
            for a in 0..n {
                let pa = phi[a * n + i];
                if pa == 0.0 {
                    continue;
                }
                for bb in 0..n {
                    let pb = phi[bb * n + j];
                    if pb == 0.0 {
                        continue;
                    }
                    for c in 0..n {
                        w[c] += pa * pb * b0[(a * n + bb) * n + c];
                    }
                }
            }
            for k in 0..n {
                out[(i * n + j) * n + k] = (0..n).map(|c| inv[k * n + c] * w[c]).sum();
            }
        }
    }
    Ok(out)
}

pub fn max_abs_diff(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).fold(0.0, |m, (x, y)| m.max((x - y).abs()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::defdgla::gerstenhaber_bracket;
    use crate::exactla::RationalMatrix;
    use crate::liecore::catalog;

    #[test]
    fn float_rhs_matches_exact_bracket() {
        let l = catalog::sl2();
        let b = Multiderivation::from_lie(&l);
        let m = RationalMatrix::from_i64(&[&[1, 2, 0], &[0, -1, 3], &[2, 0, 1]]);
        let delta = Multiderivation::from_matrix(&m).unwrap();
        let exact = bracket_tensor(&gerstenhaber_bracket(&b, &delta).unwrap());
        let float = bracket_with_derivation(&bracket_tensor(&b), &m.to_f64(), 3);
        assert!(max_abs_diff(&exact, &float) < 1e-12);
    }

    #[test]
    fn zero_generator_is_stationary() {
        let h = DeformationComplex::new(&catalog::aff1()).unwrap();
        let flow = gauge_flow(&h, &Multiderivation::zero(2, 1), 1.0, 10).unwrap();
        assert_eq!(flow.endpoint, bracket_tensor(h.bracket()));
    }

    #[test]
    fn generic_generator_tracks_oracle() {
        let h = DeformationComplex::new(&catalog::sl2()).unwrap();
        let m = RationalMatrix::from_i64(&[&[1, 0, 1], &[0, -1, 0], &[1, 1, 0]]).scale(&crate::exactla::frac(1, 2));
        let delta = Multiderivation::from_matrix(&m).unwrap();
        let flow = gauge_flow(&h, &delta, 1.0, 1000).unwrap();
        let oracle = conjugation_oracle(&h, &delta, 1.0).unwrap();
        assert!(max_abs_diff(&flow.endpoint, &oracle) < 1e-8);
        assert!(flow.max_mc_residual < 1e-7);
    }

    #[test]
    fn exp_of_nilpotent() {
        let a = [0.0, 1.0, 0.0, 0.0];
        assert_eq!(matrix_exp(&a, 2), vec![1.0, 1.0, 0.0, 1.0]);
    }
}
