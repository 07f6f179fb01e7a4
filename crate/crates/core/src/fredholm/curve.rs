use rayon::prelude::*;
use serde::Serialize;

use super::det::gap_cdf_alpha1;
use super::painleve::{painleve6_residual_with, DiffConfig};
use super::scheme::QuadratureScheme;
use crate::error::Result;
use crate::hypkernel::HypParams;
use crate::scalar::Real;

#[derive(Debug, Clone, Copy, Serialize)]
pub struct GapPoint {
    pub s: f64,
    pub det: f64,
    pub error_estimate: f64,
    pub sigma: Option<f64>,
    pub residual: Option<f64>,
}

#[derive(Debug, Clone, Serialize)]
pub struct GapCurveMeta {
    pub quadrature_nodes: usize,
    pub quadrature_tol: f64,
    pub c_pq: f64,
    pub diff: DiffConfig,
}

/// `det(1 - K_s)` on a grid of `s`, optionally with `σ` and the Painlevé residual.
#[derive(Debug, Clone, Serialize)]
pub struct GapCurve {
    pub points: Vec<GapPoint>,
    pub metadata: GapCurveMeta,
}

impl GapCurve {
    pub fn compute<T: Real>(hp: &HypParams<T>, grid: &[T], quad: &QuadratureScheme<T>, painleve: bool) -> Result<Self> {
        let diff = DiffConfig::default();
        let points = grid
            .par_iter()
            .map(|&s| {
                let v = gap_cdf_alpha1(hp, s - T::half(), quad)?;
                let (sigma, residual) = if painleve {
                    let r = painleve6_residual_with(hp, s, quad, &diff)?;
                    (Some(r.sigma.as_f64()), Some(r.residual.as_f64()))
                } else {
                    (None, None)
                };
                Ok(GapPoint { s: s.as_f64(), det: v.det.as_f64(), error_estimate: v.error_estimate.as_f64(), sigma, residual })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            points,
            metadata: GapCurveMeta {
                quadrature_nodes: quad.n,
                quadrature_tol: quad.tol.as_f64(),
                c_pq: hp.c_pq.as_f64(),
                diff,
            },
        })
    }

    /// CSV with columns `s,det,sigma,residual,error_estimate`.
    pub fn to_csv(&self) -> String {
        let opt = |v: Option<f64>| v.map(|x| format!("{x:e}")).unwrap_or_default();
        let mut out = String::from("s,det,sigma,residual,error_estimate\n");
        for p in &self.points {
            out.push_str(&format!("{},{:e},{},{},{:e}\n", p.s, p.det, opt(p.sigma), opt(p.residual), p.error_estimate));
        }
        out
    }

    /// `det` nondecreasing in `s` and within `(0, 1]` up to `tol`.
    pub fn is_monotone(&self, tol: f64) -> bool {
        self.points.iter().all(|p| p.det > 0.0 && p.det <= 1.0 + tol)
            && self.points.windows(2).all(|w| w[1].det >= w[0].det - tol)
    }
}
