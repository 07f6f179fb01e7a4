//! Fredholm determinants on `(s, ∞)` by Nyström discretisation, the law of
//! `α⁺₁`, the σ-function and the Painlevé VI σ-form check.

mod curve;
mod det;
mod ks;
mod painleve;
mod scheme;

pub use curve::{GapCurve, GapCurveMeta, GapPoint};
pub use det::{fredholm_det, fredholm_det_interval, fredholm_log_det_fixed, gap_cdf_alpha1, gap_cdf_grid, FredholmValue};
pub use ks::{alpha1_samples, empirical_steps, ks_report, KsReport};
pub use painleve::{
    painleve6_residual, painleve6_residual_with, sigma_fn, sigma_with, DiffConfig, PainleveResidual, SigmaValue,
};
pub use scheme::{HalfLineMap, QuadratureScheme, NEAR_HALF};
