//! Kernels on `ℝ ∖ {±1/2}`: the hypergeometric kernel in integrable form on
//! the `(1/2, ∞)²` block, a lattice evaluator valid on every block, the sine
//! kernel, and the function `q(z)`.
//!
//! `P` and `Q` are defined only up to constants; they are made real by a
//! gauge that leaves `P(x)Q(y) - Q(x)P(y)` unchanged, and the remaining
//! scalar `c_PQ` is fixed against the lattice density.

mod kernel;
mod params;
mod pq;
mod qz;
mod scaling;

pub use kernel::{
    hyp_numerator, kernel_hyp_block, sine_kernel, symmetry_class, Block, ContinuousKernel, HypKernel, SineKernel,
    SymmetryClass, NEAR_DIAGONAL,
};
pub use params::HypParams;
pub use pq::{p_func, pq_values, q_func, PQValues, X_REF};
pub use qz::{closed_form_sum, geometric_rate, lattice_sum, q_of_z, q_values, QValues, LATTICE_TERMS, Q_AGREEMENT_TOL};
pub use scaling::{
    calibrate, calibrate_with, kernel_scaling_limit, Calibration, ScaleMap, ScaledEval, ScalingConfig,
    ScalingLimitKernel, CALIBRATION_DRIFT_TOL,
};
