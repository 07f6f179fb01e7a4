use rand::Rng;
use rand_distr::{Distribution, Poisson};

use crate::combinatorics::Configuration;
use crate::error::{Error, Result};
use crate::zmeasure::shard_rng;

/// Poisson process on a finite set of sites: independent Poisson counts with
/// the given means. Points of multiplicity > 1 are repeated.
pub fn poisson_sample_sites<P: PartialOrd + Clone>(sites: &[P], intensity: &[f64], seed: u64) -> Result<Configuration<P>> {
    if sites.len() != intensity.len() {
        return Err(Error::InvalidInput("sites and intensities differ in length".into()));
    }
    let mut rng = shard_rng(seed, 0);
    let mut pts = Vec::new();
    for (s, &m) in sites.iter().zip(intensity) {
        if !(m >= 0.0) || !m.is_finite() {
            return Err(Error::InvalidInput(format!("intensity {m} is not a finite nonnegative number")));
        }
        if m > 0.0 {
            let k = Poisson::new(m).map_err(|e| Error::InvalidInput(e.to_string()))?.sample(&mut rng) as usize;
            pts.extend(std::iter::repeat_n(s.clone(), k));
        }
    }
    Ok(Configuration::new(pts))
}

/// Poisson process on `[a, b]` with intensity `m(x) <= bound`, by thinning a
/// homogeneous process of rate `bound`.
pub fn poisson_sample(intensity: impl Fn(f64) -> f64, bound: f64, a: f64, b: f64, seed: u64) -> Result<Configuration<f64>> {
    if !(b >= a) || !(bound >= 0.0) || !bound.is_finite() {
        return Err(Error::InvalidInput("need a <= b and a finite nonnegative bound".into()));
    }
    let mut rng = shard_rng(seed, 0);
    let total = bound * (b - a);
    if total == 0.0 {
        return Ok(Configuration::empty());
    }
    let count = Poisson::new(total).map_err(|e| Error::InvalidInput(e.to_string()))?.sample(&mut rng) as usize;
    let mut pts = Vec::with_capacity(count);
    for _ in 0..count {
        let x = a + (b - a) * rng.random::<f64>();
        let m = intensity(x);
        if !(m >= 0.0) || m > bound * (1.0 + 1e-12) {
            return Err(Error::InvalidInput(format!("intensity {m} at {x} is outside [0, bound]")));
        }
        if rng.random::<f64>() * bound < m {
            pts.push(x);
        }
    }
    Ok(Configuration::new(pts))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_intensity_is_empty() {
        assert!(poisson_sample(|_| 0.0, 0.0, 0.0, 5.0, 1).unwrap().is_empty());
        assert!(poisson_sample_sites(&[1, 2], &[0.0, 0.0], 1).unwrap().is_empty());
    }

    #[test]
    fn void_probability_unit_mass() {
        let n = 20_000;
        let empty = (0..n).filter(|&s| poisson_sample(|_| 0.5, 0.5, 0.0, 2.0, s).unwrap().is_empty()).count();
        let p = empty as f64 / n as f64;
        let e = (-1.0f64).exp();
        assert!((p - e).abs() < 4.0 * (e * (1.0 - e) / n as f64).sqrt(), "{p}");
    }

    #[test]
    fn thinning_respects_shape() {
        let n = 4000;
        let mut left = 0usize;
        let mut right = 0usize;
        for s in 0..n {
            let c = poisson_sample(|x| x, 1.0, 0.0, 1.0, s).unwrap();
            left += c.count_where(|&x| x < 0.5);
            right += c.count_where(|&x| x >= 0.5);
        }
        // means 1/8 and 3/8 per sample
        assert!((left as f64 / n as f64 - 0.125).abs() < 0.02);
        assert!((right as f64 / n as f64 - 0.375).abs() < 0.03);
        assert!(poisson_sample(|_| 2.0, 1.0, 0.0, 50.0, 0).is_err());
    }
}
