//! Special functions and quadrature primitives.

pub mod gamma;
pub mod hyp2f1;
pub mod quadrature;
pub mod stieltjes;

pub use gamma::{gamma, log_gamma, rgamma, sin_pi};
pub use hyp2f1::{deriv_2f1, deriv_2f1_with, gauss_2f1, gauss_2f1_unit, gauss_2f1_with, HypConfig};
