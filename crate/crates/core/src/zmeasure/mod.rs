//! The measures `P⁽ᴺ⁾_{z,w}` on signatures of length `N`:
//!
//! `P(λ) ∝ ∏ W_N(λ_i - i) ∏_{i<j} (λ_i - λ_j - i + j)^2`,
//! `W_N(l) = |Γ(z-l) Γ(w+N+1+l)|^{-2}`.
//!
//! All masses are handled in log space.

mod enumerate;
mod normalization;
mod params;
mod sample;

pub use enumerate::{enumerate_distribution, window_count, FiniteDistribution, ENUMERATION_LIMIT};
pub use normalization::{
    normalization, normalization_with, window_log_mass, window_shifted_range, window_sites, Normalization,
    NormalizationConfig,
};
pub(crate) use normalization::{tail_from_edges, window_orthonormal};
pub use params::{Weight, ZWParams};
pub use sample::{sample, sample_exact, sample_mh, shard_rng, MhConfig, SampleMethod, SampleRun, NON_ERGODIC_RATE};
