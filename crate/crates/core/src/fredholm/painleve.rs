use serde::Serialize;

use super::det::log_det_s;
use super::scheme::QuadratureScheme;
use crate::error::{Error, Result};
use crate::hypkernel::HypParams;
use crate::scalar::Real;

/// Step and tolerance settings for the finite differences.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct DiffConfig {
    /// Step for `d ln det / ds`, capped at a tenth of `s - 1/2`.
    pub h: f64,
    /// Outer step for `σ'` and `σ''`.
    pub outer_h: f64,
    /// Accepted relative change of `d ln det/ds` under `h → h/2`.
    pub halving_tol: f64,
}

impl Default for DiffConfig {
    fn default() -> Self {
        Self { h: 1e-3, outer_h: 1e-2, halving_tol: 1e-5 }
    }
}

#[derive(Debug, Clone, Copy, Serialize)]
pub struct SigmaValue<T> {
    pub s: T,
    pub sigma: T,
    pub dlog_det: T,
    pub h: T,
    /// Relative change of the log-derivative under step halving.
    pub halving_change: T,
}

fn five_point<T: Real>(f: impl Fn(T) -> Result<T>, s: T, h: T) -> Result<T> {
    let (a, b, c, d) = (f(s - h - h)?, f(s - h)?, f(s + h)?, f(s + h + h)?);
    Ok((a - T::lit(8.0) * b + T::lit(8.0) * c - d) / (T::lit(12.0) * h))
}

/// `σ(s) = (s² - 1/4) d ln det(1 - K_s)/ds - ν₁² s + ν₃ν₄/2`.
pub fn sigma_fn<T: Real>(hp: &HypParams<T>, s: T, quad: &QuadratureScheme<T>) -> Result<SigmaValue<T>> {
    sigma_with(hp, s, quad, &DiffConfig::default())
}

pub fn sigma_with<T: Real>(hp: &HypParams<T>, s: T, quad: &QuadratureScheme<T>, cfg: &DiffConfig) -> Result<SigmaValue<T>> {
    let h = T::lit(cfg.h).min((s - T::half()) / T::lit(10.0));
    if !(h > T::zero()) {
        return Err(Error::Domain(format!("σ needs s > 1/2, got {s}")));
    }
    let ld = |t: T| log_det_s(hp, t, quad);
    let d1 = five_point(ld, s, h)?;
    let d2 = five_point(ld, s, h * T::half())?;
    let scale = d2.abs().max(T::lit(1e-8));
    let change = (d1 - d2).abs() / scale;
    if !(change <= T::lit(cfg.halving_tol)) {
        return Err(Error::DerivativeUnstable { rel: change.as_f64(), tol: cfg.halving_tol });
    }
    let sigma = (s * s - T::lit(0.25)) * d2 - hp.nu1 * hp.nu1 * s + hp.nu3nu4() * T::half();
    Ok(SigmaValue { s, sigma, dlog_det: d2, h: h * T::half(), halving_change: change })
}

/// Both sides of the σ-form of Painlevé VI at one point.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct PainleveResidual<T> {
    pub s: T,
    pub sigma: T,
    pub dsigma: T,
    pub d2sigma: T,
    pub lhs: T,
    pub rhs: T,
    /// `|lhs - rhs| / max(|lhs|, |rhs|, 1)`.
    pub residual: T,
}

/// `-σ'((s² - 1/4)σ'')²` against
/// `(2(sσ' - σ)σ' - ν₁²ν₃ν₄)² - (σ' + ν₁²)²(σ' + ν₃²)(σ' + ν₄²)`.
pub fn painleve6_residual<T: Real>(hp: &HypParams<T>, s: T, quad: &QuadratureScheme<T>) -> Result<PainleveResidual<T>> {
    painleve6_residual_with(hp, s, quad, &DiffConfig::default())
}

pub fn painleve6_residual_with<T: Real>(
    hp: &HypParams<T>,
    s: T,
    quad: &QuadratureScheme<T>,
    cfg: &DiffConfig,
) -> Result<PainleveResidual<T>> {
    let hh = T::lit(cfg.outer_h).min((s - T::half()) / T::lit(4.0));
    let sig = |t: T| sigma_with(hp, t, quad, cfg).map(|v| v.sigma);
    let vals = [-2i64, -1, 0, 1, 2].iter().map(|&k| sig(s + T::of_int(k) * hh)).collect::<Result<Vec<T>>>()?;
    let c = |v: f64| T::lit(v);
    let sp = (vals[0] - c(8.0) * vals[1] + c(8.0) * vals[3] - vals[4]) / (c(12.0) * hh);
    let spp = (-vals[0] + c(16.0) * vals[1] - c(30.0) * vals[2] + c(16.0) * vals[3] - vals[4]) / (c(12.0) * hh * hh);
    let sg = vals[2];
    let nu1s = hp.nu1 * hp.nu1;
    let a = (s * s - c(0.25)) * spp;
    let lhs = -sp * a * a;
    let b = T::two() * (s * sp - sg) * sp - nu1s * hp.nu3nu4();
    let rhs = b * b - (sp + nu1s) * (sp + nu1s) * (sp + hp.nu3_sq()) * (sp + hp.nu4_sq());
    let residual = (lhs - rhs).abs() / lhs.abs().max(rhs.abs()).max(T::one());
    Ok(PainleveResidual { s, sigma: sg, dsigma: sp, d2sigma: spp, lhs, rhs, residual })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sigma_form_holds_at_a_point() {
        let hp = HypParams::<f64>::from_parts(0.3, 0.4, 0.3, -0.4).unwrap().with_c_pq(0.047029);
        let q = QuadratureScheme::new(60, 1e-8).unwrap();
        let r = painleve6_residual(&hp, 1.0, &q).unwrap();
        assert!(r.residual < 1e-4, "{r:?}");
        // far out the determinant is flat and σ tends to -ν₁² s + ν₃ν₄/2
        let far = sigma_fn(&hp, 40.0, &q).unwrap();
        let flat = -hp.nu1 * hp.nu1 * 40.0 + hp.nu3nu4() / 2.0;
        assert!((far.sigma - flat).abs() < 0.05 * flat.abs(), "{} vs {flat}", far.sigma);
    }
}
