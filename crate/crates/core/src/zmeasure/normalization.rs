use serde::Serialize;

use super::params::ZWParams;
use crate::combinatorics::HalfInt;
use crate::error::{Error, Result};
use crate::numerics::stieltjes::{discrete_orthonormal, DiscreteOrthonormal};
use crate::scalar::Real;

/// Shifted coordinates `l ∈ [-W-N, W-1]`: the signatures with all parts in
/// `[-W, W]` are exactly the `N`-subsets of this range.
pub fn window_shifted_range(n: usize, window: i64) -> std::ops::RangeInclusive<i64> {
    -window - n as i64..=window - 1
}

/// Lattice sites `l + (N+1)/2` for the shifted coordinates of a window, increasing.
pub fn window_sites(n: usize, window: i64) -> Vec<HalfInt> {
    let nn = n as i64;
    window_shifted_range(n, window).map(|l| HalfInt::from_twice(2 * l + nn + 1)).collect()
}

/// Orthonormal functions of `W_N` restricted to a window, on the lattice sites.
pub(crate) fn window_orthonormal<T: Real>(
    p: &ZWParams<T>,
    n: usize,
    window: i64,
) -> Result<(Vec<HalfInt>, DiscreteOrthonormal<T>)> {
    if n == 0 {
        return Err(Error::InvalidInput("N must be positive".into()));
    }
    if window < 0 {
        return Err(Error::InvalidInput("window must be nonnegative".into()));
    }
    let sites = window_sites(n, window);
    let xs: Vec<T> = sites.iter().map(|s| s.to_real()).collect();
    let lw = window_shifted_range(n, window).map(|l| p.log_weight(l, n)).collect::<Result<Vec<T>>>()?;
    let ops = discrete_orthonormal(&xs, &lw, n)?;
    Ok((sites, ops))
}

/// Power-law estimate of the probability that some particle lies beyond the
/// window edges: `ρ₁(edge)·|edge| / (p-1)` on each side, with `p` the
/// one-point decay exponent. Infinite when `p <= 1`.
pub(crate) fn tail_from_edges<T: Real>(p: &ZWParams<T>, sites: &[HalfInt], ops: &DiscreteOrthonormal<T>) -> T {
    let pe = p.tail_exponent();
    if !(pe > T::one()) {
        return T::infinity();
    }
    let density = |i: usize| ops.vectors.iter().map(|v| v[i] * v[i]).sum::<T>();
    let last = sites.len() - 1;
    let edge = |i: usize| density(i) * sites[i].to_real::<T>().abs().max(T::one()) / (pe - T::one());
    edge(0) + edge(last)
}

/// Result of the adaptive normalization.
#[derive(Debug, Clone, Serialize)]
pub struct Normalization<T> {
    /// `ln Σ_λ ∏ W_N(λ_i - i) ∏ (λ_i - λ_j - i + j)^2` over the final window.
    pub log_const_inv: T,
    /// Final window `W` (parts in `[-W, W]`).
    pub window: i64,
    /// Estimated fraction of the total mass outside the window.
    pub tail_estimate: T,
    /// Exponent used by the tail estimate.
    pub tail_exponent: T,
    /// `(W, ln constInv(W))` for every window tried.
    pub history: Vec<(i64, T)>,
}

impl<T: Real> Normalization<T> {
    /// `constInv`; may underflow or overflow for large `N`, use `log_const_inv` then.
    pub fn const_inv(&self) -> T {
        self.log_const_inv.exp()
    }

    /// `const_N = 1/constInv`.
    pub fn log_const(&self) -> T {
        -self.log_const_inv
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct NormalizationConfig {
    pub initial_window: i64,
    pub max_window: i64,
}

impl Default for NormalizationConfig {
    fn default() -> Self {
        Self { initial_window: 32, max_window: 1 << 16 }
    }
}

/// `ln constInv` over a fixed window together with its tail estimate.
pub fn window_log_mass<T: Real>(p: &ZWParams<T>, n: usize, window: i64) -> Result<(T, T)> {
    let (sites, ops) = window_orthonormal(p, n, window)?;
    Ok((ops.log_ensemble_mass(n), tail_from_edges(p, &sites, &ops)))
}

pub fn normalization<T: Real>(n: usize, p: &ZWParams<T>, tol: T) -> Result<Normalization<T>> {
    normalization_with(n, p, tol, &NormalizationConfig::default())
}

/// Doubles the window until the estimated tail drops below `tol`.
pub fn normalization_with<T: Real>(
    n: usize,
    p: &ZWParams<T>,
    tol: T,
    cfg: &NormalizationConfig,
) -> Result<Normalization<T>> {
    p.validate()?;
    if !(tol > T::zero()) {
        return Err(Error::InvalidInput("tolerance must be positive".into()));
    }
    let pe = p.tail_exponent();
    if !(pe > T::one()) {
        return Err(Error::BudgetExceeded(format!(
            "one-point density decays like |x|^-{pe}, which is not summable; Re(z+w) must exceed -1/2"
        )));
    }
    let mut window = cfg.initial_window.max(1);
    let mut history = Vec::new();
    loop {
        let (lm, tail) = window_log_mass(p, n, window)?;
        history.push((window, lm));
        if tail < tol {
            return Ok(Normalization { log_const_inv: lm, window, tail_estimate: tail, tail_exponent: pe, history });
        }
        if window * 2 > cfg.max_window {
            return Err(Error::BudgetExceeded(format!(
                "tail estimate {:e} still above {:e} at window {window} (cap {})",
                tail.as_f64(),
                tol.as_f64(),
                cfg.max_window
            )));
        }
        window *= 2;
    }
}
