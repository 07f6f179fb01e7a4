//! The lattice `X⁽ᴺ⁾ = ℤ + (N+1)/2`, its inner/outer split and the
//! particles/holes involution.

use std::collections::BTreeSet;

use num_rational::Rational64;
use serde::Serialize;

use super::halfint::HalfInt;
use super::omega::{embed_iota, omega_to_configuration, Configuration};
use super::signature::{split_signature, Signature};
use crate::error::{Error, Result};

/// Strictly decreasing points of `X⁽ᴺ⁾`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LatticeConfig {
    points: Vec<HalfInt>,
    n: usize,
}

impl LatticeConfig {
    pub fn new(mut points: Vec<HalfInt>, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("N must be positive".into()));
        }
        points.sort_unstable_by(|a, b| b.cmp(a));
        if points.windows(2).any(|p| p[0] == p[1]) {
            return Err(Error::InvalidInput("lattice configuration has repeated points".into()));
        }
        if let Some(p) = points.iter().find(|p| !on_lattice(**p, n)) {
            return Err(Error::InvalidInput(format!("{p} is not on the lattice for N = {n}")));
        }
        Ok(Self { points, n })
    }

    pub fn points(&self) -> &[HalfInt] {
        &self.points
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// Whether `x ∈ ℤ + (N+1)/2`.
pub fn on_lattice(x: HalfInt, n: usize) -> bool {
    (x.twice() - (n as i64 + 1)).rem_euclid(2) == 0
}

/// `λ ↦ {λ_i + (N+1)/2 - i}`.
pub fn signature_to_lattice(sig: &Signature, n: usize) -> Result<LatticeConfig> {
    if sig.len() != n {
        return Err(Error::InvalidInput(format!("signature of length {} used with N = {n}", sig.len())));
    }
    let nn = n as i64;
    let pts = sig
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &l)| HalfInt::from_twice(2 * l + nn + 1 - 2 * (i as i64 + 1)))
        .collect();
    LatticeConfig::new(pts, n)
}

/// Inverse of [`signature_to_lattice`] for `N`-point configurations.
pub fn lattice_to_signature(cfg: &LatticeConfig) -> Result<Signature> {
    let nn = cfg.n as i64;
    if cfg.len() != cfg.n {
        return Err(Error::InvalidInput("lattice configuration does not have N points".into()));
    }
    let parts = cfg
        .points
        .iter()
        .enumerate()
        .map(|(i, p)| (p.twice() - nn - 1 + 2 * (i as i64 + 1)) / 2)
        .collect();
    Signature::new(parts)
}

/// Membership tests for the inner part `(-N/2, N/2) ∩ X⁽ᴺ⁾` and its complement.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LatticeSplit {
    n: usize,
}

impl LatticeSplit {
    pub fn new(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("N must be positive".into()));
        }
        Ok(Self { n })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_inner(&self, x: HalfInt) -> bool {
        x.twice().abs() < self.n as i64
    }

    pub fn is_outer(&self, x: HalfInt) -> bool {
        on_lattice(x, self.n) && !self.is_inner(x)
    }

    /// The `N` inner sites `-(N-1)/2, …, (N-1)/2`, increasing.
    pub fn inner_sites(&self) -> Vec<HalfInt> {
        let n = self.n as i64;
        (0..n).map(|k| HalfInt::from_twice(-(n - 1) + 2 * k)).collect()
    }
}

/// Returns the inner sites (as a configuration) and the split used to test outer membership.
pub fn inner_outer_split(n: usize) -> Result<(LatticeConfig, LatticeSplit)> {
    let split = LatticeSplit::new(n)?;
    Ok((LatticeConfig::new(split.inner_sites(), n)?, split))
}

/// `S ↦ (S ∩ outer) ∪ (inner ∖ S)` on any finite subset of the lattice.
pub fn involution_set(points: &[HalfInt], n: usize) -> Result<Vec<HalfInt>> {
    let split = LatticeSplit::new(n)?;
    let set: BTreeSet<HalfInt> = points.iter().copied().collect();
    if set.len() != points.len() {
        return Err(Error::InvalidInput("involution applied to a set with repeated points".into()));
    }
    let mut out: Vec<HalfInt> = set.iter().copied().filter(|&p| split.is_outer(p)).collect();
    out.extend(split.inner_sites().into_iter().filter(|p| !set.contains(p)));
    out.sort_unstable();
    Ok(out)
}

/// Particles outside `(-N/2, N/2)` together with holes inside it.
pub fn particle_hole_involution(l: &LatticeConfig, n: usize) -> Result<Configuration<HalfInt>> {
    if l.n != n {
        return Err(Error::InvalidInput(format!("configuration built for N = {} used with N = {n}", l.n)));
    }
    Ok(Configuration::new(involution_set(&l.points, n)?))
}

/// Inverse of [`particle_hole_involution`].
pub fn invert_particle_hole(x: &Configuration<HalfInt>, n: usize) -> Result<LatticeConfig> {
    LatticeConfig::new(involution_set(x.points(), n)?, n)
}

/// The particle/hole image predicted by the Frobenius coordinates of `λ±`:
/// `{a⁺_i + N/2} ∪ {-a⁻_i - N/2}` outside and `{N/2 - b⁺_i} ∪ {-N/2 + b⁻_i}` inside.
pub fn frobenius_image(sig: &Signature, n: usize) -> Result<Configuration<HalfInt>> {
    if sig.len() != n {
        return Err(Error::InvalidInput(format!("signature of length {} used with N = {n}", sig.len())));
    }
    let half_n = HalfInt::from_twice(n as i64);
    let (plus, minus) = split_signature(sig);
    let (fp, fm) = (plus.frobenius(), minus.frobenius());
    let mut pts = Vec::with_capacity(2 * (fp.d() + fm.d()));
    pts.extend(fp.a.iter().map(|&a| a + half_n));
    pts.extend(fm.a.iter().map(|&a| -a - half_n));
    pts.extend(fp.b.iter().map(|&b| half_n - b));
    pts.extend(fm.b.iter().map(|&b| b - half_n));
    Ok(Configuration::new(pts))
}

/// Whether the involution image of `λ` equals the set assembled from its
/// Frobenius coordinates.
pub fn check_lemma71(sig: &Signature, n: usize) -> Result<bool> {
    let direct = particle_hole_involution(&signature_to_lattice(sig, n)?, n)?;
    Ok(direct == frobenius_image(sig, n)?)
}

/// `(1/N)·` the involution image, as exact rationals.
pub fn scaled_involution(sig: &Signature, n: usize) -> Result<Configuration<Rational64>> {
    let x = particle_hole_involution(&signature_to_lattice(sig, n)?, n)?;
    let nn = n as i64;
    Ok(x.map(|p| Rational64::new(p.twice(), 2 * nn)))
}

/// Whether `(1/N)·X` coincides with the projection of `ι_N(λ)`.
pub fn check_scaling_consistency(sig: &Signature, n: usize) -> Result<bool> {
    let lhs = scaled_involution(sig, n)?;
    let rhs = omega_to_configuration(&embed_iota(sig, n)?);
    Ok(lhs == rhs)
}
