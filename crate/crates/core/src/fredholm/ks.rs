use serde::Serialize;

use crate::combinatorics::{embed_iota, Signature};
use crate::error::{Error, Result};

/// `α⁺₁` of `ι_N(λ)` for each sample.
pub fn alpha1_samples(samples: &[Signature], n: usize) -> Result<Vec<f64>> {
    samples
        .iter()
        .map(|s| {
            let om = embed_iota(s, n)?;
            Ok(om.alpha_plus.first().map(|r| *r.numer() as f64 / *r.denom() as f64).unwrap_or(0.0))
        })
        .collect()
}

/// Distinct sample values with the empirical CDF just after each.
pub fn empirical_steps(values: &[f64]) -> Vec<(f64, f64)> {
    let mut v = values.to_vec();
    v.sort_by(|a, b| a.total_cmp(b));
    let n = v.len() as f64;
    let mut out: Vec<(f64, f64)> = Vec::new();
    for (i, &x) in v.iter().enumerate() {
        let c = (i + 1) as f64 / n;
        match out.last_mut() {
            Some(last) if last.0 == x => last.1 = c,
            _ => out.push((x, c)),
        }
    }
    out
}

/// Kolmogorov–Smirnov comparison of an empirical sample with a continuous CDF.
#[derive(Debug, Clone, Serialize)]
pub struct KsReport {
    pub samples: usize,
    /// `sup_u |F_emp(u) - F(u)|` over all `u`.
    pub ks_full: f64,
    /// Same supremum over the grid points `u >= u_min` only.
    pub ks_resolved: f64,
    pub u_min: f64,
    /// Empirical mass at `u = 0`.
    pub atom_at_zero: f64,
}

/// `cdf` is the continuous CDF, evaluated on distinct sample values and on
/// `grid`; `cdf(0) = 0` is assumed for the atom at zero.
pub fn ks_report(values: &[f64], cdf: impl Fn(f64) -> Result<f64>, grid: &[f64], u_min: f64) -> Result<KsReport> {
    if values.is_empty() {
        return Err(Error::InvalidInput("KS statistic needs at least one sample".into()));
    }
    let steps = empirical_steps(values);
    let mut ks = 0.0f64;
    let mut before = 0.0;
    let mut atom = 0.0;
    for &(x, after) in &steps {
        let f = if x <= 0.0 { 0.0 } else { cdf(x)? };
        if x <= 0.0 {
            atom = after;
        }
        ks = ks.max((after - f).abs()).max((before - f).abs());
        before = after;
    }
    let emp = |u: f64| {
        let i = steps.partition_point(|s| s.0 <= u);
        if i == 0 {
            0.0
        } else {
            steps[i - 1].1
        }
    };
    let mut resolved = 0.0f64;
    for &u in grid.iter().filter(|&&u| u >= u_min) {
        resolved = resolved.max((emp(u) - cdf(u)?).abs());
    }
    Ok(KsReport { samples: values.len(), ks_full: ks, ks_resolved: resolved, u_min, atom_at_zero: atom })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn steps_and_alpha() {
        let st = empirical_steps(&[0.0, 0.5, 0.0, 1.0]);
        assert_eq!(st, vec![(0.0, 0.5), (0.5, 0.75), (1.0, 1.0)]);
        let s = vec![Signature::new(vec![3, 0]).unwrap(), Signature::new(vec![0, -1]).unwrap()];
        assert_eq!(alpha1_samples(&s, 2).unwrap(), vec![1.25, 0.0]);
    }

    #[test]
    fn uniform_sample_ks() {
        let v: Vec<f64> = (1..=1000).map(|i| (i as f64 - 0.5) / 1000.0).collect();
        let r = ks_report(&v, |u| Ok(u.clamp(0.0, 1.0)), &[0.25, 0.5], 0.1).unwrap();
        assert!(r.ks_full <= 1e-3 + 1e-12);
        assert!(r.ks_resolved <= 1e-3 + 1e-12);
        assert!(ks_report(&[], Ok, &[], 0.0).is_err());
        let atoms = ks_report(&[0.0, 0.0, 0.5, 0.7], |u| Ok(u.min(1.0)), &[], 0.0).unwrap();
        assert_eq!(atoms.atom_at_zero, 0.5);
        assert!(atoms.ks_full >= 0.5);
    }
}
