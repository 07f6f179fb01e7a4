//! z-measures on signatures of the unitary groups and the determinantal point
//! processes they produce.
//!
//! * [`numerics`]: complex log-gamma, Gauss `₂F₁` on `ζ <= 0`, quadrature and
//!   discrete orthonormal polynomials.
//! * [`combinatorics`]: signatures, Frobenius coordinates, the embedding into
//!   `Ω` and the particles/holes involution, all in exact arithmetic.
//! * [`zmeasure`]: the measures `P⁽ᴺ⁾_{z,w}`, normalisation, enumeration, samplers.
//! * [`dpp`]: discrete kernels, correlation functions and gap probabilities.
//! * [`askey_lesky`]: the lattice Christoffel–Darboux kernel and its transform.
//! * [`hypkernel`]: the continuous hypergeometric kernel and its lattice approximation.
//! * [`fredholm`]: Fredholm determinants, the law of `α⁺₁`, Painlevé VI.
//!
//! Numerical code is generic over [`Real`] (`f32`, `f64`); the aliases below
//! fix `f64`.

#![allow(clippy::neg_cmp_op_on_partial_ord)] // `!(a <= b)` deliberately rejects NaN

pub mod askey_lesky;
pub mod combinatorics;
pub mod dpp;
pub mod error;
pub mod fredholm;
pub mod hypkernel;
pub mod linalg;
pub mod numerics;
pub mod scalar;
pub mod zmeasure;

pub use error::{Error, Result};
pub use scalar::Real;

pub type Complex64 = num_complex::Complex<f64>;
pub type ZWParams64 = zmeasure::ZWParams<f64>;
pub type HypParams64 = hypkernel::HypParams<f64>;
pub type OPSystem64 = askey_lesky::OPSystem<f64>;
pub type DiscreteKernel64 = dpp::DiscreteKernel<f64>;
pub type FiniteDistribution64 = zmeasure::FiniteDistribution<f64>;
pub type QuadratureScheme64 = fredholm::QuadratureScheme<f64>;
pub type Matrix64 = linalg::Matrix<f64>;
