use serde::Serialize;

use super::kernel::{ContinuousKernel, HypKernel};
use super::params::HypParams;
use super::pq::pq_values;
use crate::askey_lesky::{build_op_system, OPSystem};
use crate::combinatorics::HalfInt;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// How continuum points are matched with lattice sites.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ScaleMap {
    /// `x ↦ N x`, kernel scaled by `N`.
    Literal,
    /// `x ↦ (N + ν₁) x + (Re z - Re w)/2`, kernel scaled by `N + ν₁`.
    /// Removes the `O(1/N)` term of the convergence.
    Centered,
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct ScalingConfig {
    pub map: ScaleMap,
    /// Window `W = window_factor · N`.
    pub window_factor: i64,
}

impl Default for ScalingConfig {
    fn default() -> Self {
        Self { map: ScaleMap::Centered, window_factor: 8 }
    }
}

/// `M · K̃_N(site(x), site(y))`: the particles/holes lattice kernel viewed on
/// the continuum.
#[derive(Debug, Clone)]
pub struct ScalingLimitKernel<T> {
    pub n: usize,
    pub config: ScalingConfig,
    pub scale: T,
    pub shift: T,
    pub system: OPSystem<T>,
}

/// One evaluation with the lattice sites actually used.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct ScaledEval<T> {
    pub value: T,
    pub x_site: HalfInt,
    pub y_site: HalfInt,
    /// Continuum points the sites correspond to exactly.
    pub x_eff: T,
    pub y_eff: T,
}

impl<T: Real> ScalingLimitKernel<T> {
    pub fn build(hp: &HypParams<T>, n: usize, config: ScalingConfig) -> Result<Self> {
        if n == 0 || config.window_factor < 1 {
            return Err(Error::InvalidInput("N and the window factor must be positive".into()));
        }
        let system = build_op_system(n, &hp.zw(), config.window_factor * n as i64)?;
        let (scale, shift) = match config.map {
            ScaleMap::Literal => (T::of_int(n as i64), T::zero()),
            ScaleMap::Centered => (hp.lattice_scale(n), hp.lattice_shift()),
        };
        Ok(Self { n, config, scale, shift, system })
    }

    /// Nearest lattice site to `scale·x + shift`; ties go toward zero.
    pub fn site_for(&self, x: T) -> HalfInt {
        let off = T::of_int(self.n as i64 + 1) * T::half();
        let t = self.scale * x + self.shift - off;
        let lo = t.floor();
        let frac = t - lo;
        let pick = |k: T| HalfInt::from_twice(2 * k.to_i64().unwrap_or(0) + self.n as i64 + 1);
        let (a, b) = (pick(lo), pick(lo + T::one()));
        if frac < T::half() {
            a
        } else if frac > T::half() {
            b
        } else if a.twice().abs() <= b.twice().abs() {
            a
        } else {
            b
        }
    }

    /// The continuum point a site represents.
    pub fn continuum_of(&self, s: HalfInt) -> T {
        (s.to_real::<T>() - self.shift) / self.scale
    }

    pub fn eval_sites(&self, s: HalfInt, t: HalfInt) -> Result<T> {
        let (i, j) = (self.system.index_of(s)?, self.system.index_of(t)?);
        Ok(self.scale * self.system.kernel_particle_hole_at(i, j))
    }

    pub fn eval_detailed(&self, x: T, y: T) -> Result<ScaledEval<T>> {
        let (s, t) = (self.site_for(x), self.site_for(y));
        Ok(ScaledEval {
            value: self.eval_sites(s, t)?,
            x_site: s,
            y_site: t,
            x_eff: self.continuum_of(s),
            y_eff: self.continuum_of(t),
        })
    }
}

impl<T: Real> ContinuousKernel<T> for ScalingLimitKernel<T> {
    fn eval(&self, x: T, y: T) -> Result<T> {
        Ok(self.eval_detailed(x, y)?.value)
    }
}

/// Lattice approximation of the continuous kernel at `(x, y)` for one `N`.
pub fn kernel_scaling_limit<T: Real>(x: T, y: T, hp: &HypParams<T>, n: usize) -> Result<ScaledEval<T>> {
    ScalingLimitKernel::build(hp, n, ScalingConfig::default())?.eval_detailed(x, y)
}

/// Outcome of fixing `c_PQ` from the lattice density.
#[derive(Debug, Clone, Serialize)]
pub struct Calibration<T> {
    pub c_pq: T,
    pub x0: T,
    pub n: usize,
    /// Estimates at `N` and `2N`.
    pub c_n: T,
    pub c_2n: T,
    /// `|c_2N - c_N| / c_2N`.
    pub drift: T,
    pub config: ScalingConfig,
}

/// Maximum relative drift between the `N` and `2N` estimates.
pub const CALIBRATION_DRIFT_TOL: f64 = 0.01;

/// `c_PQ` such that the analytic density matches the lattice density at `x0`,
/// extrapolated from `N` and `2N` assuming an `O(1/N²)` error.
pub fn calibrate<T: Real>(hp: &HypParams<T>, x0: T, n: usize) -> Result<Calibration<T>> {
    calibrate_with(hp, x0, n, ScalingConfig::default())
}

pub fn calibrate_with<T: Real>(hp: &HypParams<T>, x0: T, n: usize, config: ScalingConfig) -> Result<Calibration<T>> {
    if !(x0 > T::half()) {
        return Err(Error::Domain("calibration point must exceed 1/2".into()));
    }
    let raw = HypKernel::new(HypParams { c_pq: T::one(), calibrated: false, ..hp.clone() });
    let estimate = |m: usize| -> Result<T> {
        let k = ScalingLimitKernel::build(hp, m, config)?;
        let s = k.site_for(x0);
        let xe = k.continuum_of(s);
        if !(xe > T::half()) {
            return Err(Error::Domain("calibration site falls at or below 1/2".into()));
        }
        let v = pq_values(&raw.params, xe)?;
        Ok(k.eval_sites(s, s)? / raw.from_values(&v, &v))
    };
    let c_n = estimate(n)?;
    let c_2n = estimate(2 * n)?;
    let drift = ((c_2n - c_n) / c_2n).abs();
    if !(drift <= T::lit(CALIBRATION_DRIFT_TOL)) {
        return Err(Error::CalibrationUnstable { drift: drift.as_f64(), tol: CALIBRATION_DRIFT_TOL });
    }
    let c_pq = match config.map {
        ScaleMap::Centered => (T::lit(4.0) * c_2n - c_n) / T::lit(3.0),
        ScaleMap::Literal => T::two() * c_2n - c_n,
    };
    if !(c_pq > T::zero()) {
        return Err(Error::Domain("calibrated constant is not positive".into()));
    }
    Ok(Calibration { c_pq, x0, n, c_n, c_2n, drift, config })
}
