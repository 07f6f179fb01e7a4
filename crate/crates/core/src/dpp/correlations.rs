use serde::Serialize;

use crate::combinatorics::{
    particle_hole_involution, signature_to_lattice, Configuration, HalfInt,
};
use crate::error::Result;
use crate::scalar::Real;
use crate::zmeasure::FiniteDistribution;

/// A finite probability distribution over point configurations.
#[derive(Debug, Clone, Serialize)]
pub struct ConfigDistribution<P, T> {
    pub configs: Vec<Configuration<P>>,
    pub probs: Vec<T>,
}

impl<P: PartialOrd + Clone, T: Real> ConfigDistribution<P, T> {
    pub fn iter(&self) -> impl Iterator<Item = (&Configuration<P>, T)> {
        self.configs.iter().zip(self.probs.iter().copied())
    }

    pub fn total(&self) -> T {
        self.probs.iter().copied().sum()
    }

    /// `E[Σ_{x∈X} f(x)]`.
    pub fn expect_linear(&self, mut f: impl FnMut(&P) -> T) -> T {
        self.iter().map(|(c, q)| q * c.points().iter().map(&mut f).sum::<T>()).sum()
    }
}

/// Image of a signature distribution under `λ ↦ {λ_i + (N+1)/2 - i}`.
pub fn lattice_distribution<T: Real>(dist: &FiniteDistribution<T>) -> Result<ConfigDistribution<HalfInt, T>> {
    let configs = dist
        .support
        .iter()
        .map(|s| signature_to_lattice(s, dist.n).map(|l| Configuration::new(l.points().to_vec())))
        .collect::<Result<_>>()?;
    Ok(ConfigDistribution { configs, probs: dist.probs.clone() })
}

/// Image under the particles/holes involution.
pub fn particle_hole_distribution<T: Real>(dist: &FiniteDistribution<T>) -> Result<ConfigDistribution<HalfInt, T>> {
    let configs = dist
        .support
        .iter()
        .map(|s| particle_hole_involution(&signature_to_lattice(s, dist.n)?, dist.n))
        .collect::<Result<_>>()?;
    Ok(ConfigDistribution { configs, probs: dist.probs.clone() })
}

fn has_repeats<P: PartialEq>(q: &[P]) -> bool {
    q.iter().enumerate().any(|(i, a)| q[..i].contains(a))
}

/// Probability that the configuration contains every query point; zero if
/// the points are not distinct.
pub fn brute_force_rho<P: PartialOrd + Clone, T: Real>(dist: &ConfigDistribution<P, T>, q: &[P]) -> T {
    if has_repeats(q) {
        return T::zero();
    }
    dist.iter().filter(|(c, _)| q.iter().all(|x| c.contains(x))).map(|(_, p)| p).sum()
}

/// Probability that no point of the configuration lies in `subset`.
pub fn brute_force_gap<P: PartialOrd + Clone, T: Real>(dist: &ConfigDistribution<P, T>, subset: &[P]) -> T {
    dist.iter().filter(|(c, _)| !subset.iter().any(|x| c.contains(x))).map(|(_, p)| p).sum()
}

/// Fraction of samples containing all query points, with its binomial
/// standard error.
pub fn empirical_rho<P: PartialOrd + Clone>(samples: &[Configuration<P>], q: &[P]) -> (f64, f64) {
    if samples.is_empty() || has_repeats(q) {
        return (0.0, 0.0);
    }
    let hits = samples.iter().filter(|c| q.iter().all(|x| c.contains(x))).count();
    let n = samples.len() as f64;
    let p = hits as f64 / n;
    (p, (p * (1.0 - p) / n).sqrt())
}
