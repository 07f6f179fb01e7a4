//! Point-process primitives: discrete kernels, correlation functions from
//! enumeration, samples and determinants, gap probabilities, and the Poisson
//! reference process.

mod correlations;
mod kernel;
mod poisson;

pub use correlations::{
    brute_force_gap, brute_force_rho, empirical_rho, lattice_distribution, particle_hole_distribution,
    ConfigDistribution,
};
pub use kernel::{det_rho, discrete_gap, DiscreteKernel, KernelDump};
pub use poisson::{poisson_sample, poisson_sample_sites};
