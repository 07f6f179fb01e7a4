use rayon::prelude::*;
use serde::Serialize;

use super::scheme::QuadratureScheme;
use crate::error::{Error, Result};
use crate::hypkernel::{ContinuousKernel, HypKernel, HypParams};
use crate::linalg::Matrix;
use crate::scalar::Real;

/// A Fredholm determinant with its order-doubling error estimate.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct FredholmValue<T> {
    /// Value at `2n` nodes.
    pub det: T,
    pub log_det: T,
    /// `|det_n - det_2n|`.
    pub error_estimate: T,
    pub n: usize,
}

fn nystrom<T: Real>(kernel: &impl ContinuousKernel<T>, xs: &[T], ws: &[T]) -> Result<(T, T)> {
    let k = kernel.matrix(xs)?;
    let sq: Vec<T> = ws.iter().map(|w| w.sqrt()).collect();
    let m = Matrix::from_fn(xs.len(), xs.len(), |i, j| {
        let d = if i == j { T::one() } else { T::zero() };
        d - sq[i] * k[(i, j)] * sq[j]
    });
    Ok(m.sign_log_abs_det())
}

fn signed<T: Real>((sign, log_abs): (T, T)) -> T {
    if sign == T::zero() {
        T::zero()
    } else {
        sign * log_abs.exp()
    }
}

/// `ln det(1 - K)` on `(s, ∞)` at the scheme's order, no doubling check.
/// Errors if the determinant is not positive.
pub fn fredholm_log_det_fixed<T: Real>(kernel: &impl ContinuousKernel<T>, s: T, quad: &QuadratureScheme<T>) -> Result<T> {
    let (xs, ws) = quad.half_line(s)?;
    let (sign, log_abs) = nystrom(kernel, &xs, &ws)?;
    if !(sign > T::zero()) {
        return Err(Error::Domain(format!("det(1 - K_s) is not positive at s = {s}")));
    }
    Ok(log_abs)
}

/// `det(1 - K)` restricted to `(s, ∞)`.
pub fn fredholm_det<T: Real>(kernel: &impl ContinuousKernel<T>, s: T, quad: &QuadratureScheme<T>) -> Result<FredholmValue<T>> {
    let (x1, w1) = quad.half_line(s)?;
    let fine = quad.doubled();
    let (x2, w2) = fine.half_line(s)?;
    let d1 = nystrom(kernel, &x1, &w1)?;
    let d2 = nystrom(kernel, &x2, &w2)?;
    finish(signed(d1), d2, quad)
}

/// `det(1 - K)` restricted to `(a, b)`.
pub fn fredholm_det_interval<T: Real>(
    kernel: &impl ContinuousKernel<T>,
    a: T,
    b: T,
    quad: &QuadratureScheme<T>,
) -> Result<FredholmValue<T>> {
    if !(b > a) {
        return Err(Error::Domain("interval must have b > a".into()));
    }
    let (x1, w1) = quad.interval(a, b);
    let (x2, w2) = quad.doubled().interval(a, b);
    let d1 = nystrom(kernel, &x1, &w1)?;
    let d2 = nystrom(kernel, &x2, &w2)?;
    finish(signed(d1), d2, quad)
}

fn finish<T: Real>(coarse: T, fine: (T, T), quad: &QuadratureScheme<T>) -> Result<FredholmValue<T>> {
    let det = signed(fine);
    let err = (det - coarse).abs();
    if !(err <= quad.tol) {
        return Err(Error::QuadratureNotConverged { diff: err.as_f64(), tol: quad.tol.as_f64() });
    }
    Ok(FredholmValue { det, log_det: fine.1, error_estimate: err, n: quad.n })
}

fn calibrated_kernel<T: Real>(hp: &HypParams<T>) -> Result<HypKernel<T>> {
    if !hp.calibrated {
        return Err(Error::InvalidInput("kernel constant c_PQ has not been calibrated".into()));
    }
    Ok(HypKernel::new(hp.clone()))
}

/// `Prob{α⁺₁ < u} = det(1 - K_{1/2 + u})`.
pub fn gap_cdf_alpha1<T: Real>(hp: &HypParams<T>, u: T, quad: &QuadratureScheme<T>) -> Result<FredholmValue<T>> {
    if !(u > T::zero()) {
        return Err(Error::Domain("u must be positive".into()));
    }
    fredholm_det(&calibrated_kernel(hp)?, T::half() + u, quad)
}

/// [`gap_cdf_alpha1`] on a grid, evaluated in parallel.
pub fn gap_cdf_grid<T: Real>(hp: &HypParams<T>, us: &[T], quad: &QuadratureScheme<T>) -> Result<Vec<FredholmValue<T>>> {
    us.par_iter().map(|&u| gap_cdf_alpha1(hp, u, quad)).collect()
}

pub(crate) fn log_det_s<T: Real>(hp: &HypParams<T>, s: T, quad: &QuadratureScheme<T>) -> Result<T> {
    fredholm_log_det_fixed(&calibrated_kernel(hp)?, s, quad)
}
