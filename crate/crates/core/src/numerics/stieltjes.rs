//! Orthonormal polynomials of a discrete weight via the Stieltjes procedure.
//!
//! The recurrence is run as a Lanczos iteration on `diag(x)` started from
//! `√w`, with two passes of full reorthogonalisation; the iteration vectors are
//! then exactly the functions `p_k(x) √w(x)` on the support.

use crate::error::{Error, Result};
use crate::scalar::Real;

/// First `count` orthonormal functions `p_k √w` of a discrete weight.
#[derive(Debug, Clone)]
pub struct DiscreteOrthonormal<T> {
    /// Diagonal recurrence coefficients `a_k`, `k < count`.
    pub alpha: Vec<T>,
    /// Off-diagonal coefficients `b_k`, `1 <= k < count` (stored from index 0).
    pub beta: Vec<T>,
    /// `vectors[k][i] = p_k(x_i) √w(x_i)` with the weight normalised to unit mass.
    pub vectors: Vec<Vec<T>>,
    /// `ln Σ_i w_i` of the unnormalised weight.
    pub log_mass: T,
    /// `max |<φ_j, φ_k> - δ_jk|`.
    pub orthogonality_defect: T,
}

impl<T: Real> DiscreteOrthonormal<T> {
    /// `ln` of the squared norm of the monic polynomial of degree `k`.
    pub fn log_monic_norm(&self, k: usize) -> T {
        let mut v = self.log_mass;
        for b in &self.beta[..k] {
            v += T::two() * b.ln();
        }
        v
    }

    /// `ln Σ_{x_1 < … < x_n} ∏ w(x_i) ∏_{i<j} (x_i - x_j)^2` (Heine's identity).
    pub fn log_ensemble_mass(&self, n: usize) -> T {
        (0..n).map(|k| self.log_monic_norm(k)).sum()
    }
}

/// Builds the first `count` orthonormal functions for support `points` with
/// weights `exp(log_weights)`.
///
/// Each site carries its own log-scale `s_i`, with `φ_k(x_i) = m_k(i) e^{s_i}`,
/// so sites whose weight underflows relative to the bulk still receive their
/// (possibly order-one) values of the high-degree functions.
pub fn discrete_orthonormal<T: Real>(
    points: &[T],
    log_weights: &[T],
    count: usize,
) -> Result<DiscreteOrthonormal<T>> {
    let m = points.len();
    if log_weights.len() != m {
        return Err(Error::InvalidInput("points and weights differ in length".into()));
    }
    if count == 0 || count > m {
        return Err(Error::InvalidInput(format!("cannot build {count} polynomials on {m} points")));
    }
    let max_lw = log_weights.iter().copied().fold(T::neg_infinity(), T::max);
    if !max_lw.is_finite() {
        return Err(Error::InvalidInput("weight is identically zero or non-finite".into()));
    }
    let mass: T = log_weights.iter().map(|&lw| (lw - max_lw).exp()).sum();
    let log_mass = max_lw + mass.ln();

    // rescale a site once its mantissas exceed `big`; products stay below max/big²
    let big = T::max_value().sqrt().sqrt();
    let log_big = big.ln();
    let mut scale: Vec<T> = log_weights.iter().map(|&lw| (lw - log_mass) / T::two()).collect();
    let mut w2: Vec<T> = scale.iter().map(|&s| (T::two() * s).exp()).collect();
    let mut mant: Vec<Vec<T>> = Vec::with_capacity(count);
    mant.push(vec![T::one(); m]);

    let wdot = |w2: &[T], a: &[T], b: &[T]| -> T { a.iter().zip(b).zip(w2).map(|((&x, &y), &w)| x * y * w).sum() };

    let mut alpha = Vec::with_capacity(count);
    let mut beta = Vec::with_capacity(count.saturating_sub(1));
    for k in 0..count {
        let mut u: Vec<T> = mant[k].iter().zip(points).map(|(&v, &x)| v * x).collect();
        alpha.push(wdot(&w2, &u, &mant[k]));
        if k + 1 == count {
            break;
        }
        for _ in 0..2 {
            for v in &mant {
                let proj = wdot(&w2, &u, v);
                for (ui, &vi) in u.iter_mut().zip(v) {
                    *ui -= proj * vi;
                }
            }
        }
        let norm = wdot(&w2, &u, &u).sqrt();
        if !(norm > T::zero()) || !norm.is_finite() {
            return Err(Error::LossOfOrthogonality { defect: f64::INFINITY, tol: 0.0 });
        }
        beta.push(norm);
        for ui in u.iter_mut() {
            *ui /= norm;
        }
        for i in 0..m {
            if u[i].abs() > big {
                u[i] /= big;
                for v in mant.iter_mut() {
                    v[i] /= big;
                }
                scale[i] += log_big;
                w2[i] = (T::two() * scale[i]).exp();
            }
        }
        mant.push(u);
    }

    let vectors: Vec<Vec<T>> = mant
        .iter()
        .map(|v| {
            v.iter()
                .zip(&scale)
                .map(|(&x, &s)| if x == T::zero() { x } else { x.signum() * (x.abs().ln() + s).exp() })
                .collect()
        })
        .collect();
    let mut defect = T::zero();
    for j in 0..count {
        for k in 0..=j {
            let d = dot(&vectors[j], &vectors[k]) - if j == k { T::one() } else { T::zero() };
            defect = defect.max(d.abs());
        }
    }
    Ok(DiscreteOrthonormal { alpha, beta, vectors, log_mass, orthogonality_defect: defect })
}

fn dot<T: Real>(a: &[T], b: &[T]) -> T {
    a.iter().zip(b).map(|(&x, &y)| x * y).sum()
}
