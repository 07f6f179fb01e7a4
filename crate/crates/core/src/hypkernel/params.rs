use num_complex::Complex;
use serde::Serialize;

use super::pq::{raw_pq, X_REF};
use crate::error::{Error, Result};
use crate::scalar::Real;
use crate::zmeasure::ZWParams;

/// Parameters of the hypergeometric kernel together with its gauge and
/// normalisation constant.
#[derive(Debug, Clone, Serialize)]
pub struct HypParams<T> {
    pub z: Complex<T>,
    pub w: Complex<T>,
    /// `(z + z̄ + w + w̄)/2`.
    pub nu1: T,
    /// `(z - z̄ + w - w̄)/2`, purely imaginary.
    pub nu3: Complex<T>,
    /// `(z - z̄ - w + w̄)/2`, purely imaginary.
    pub nu4: Complex<T>,
    /// Overall constant multiplying `P(x)Q(y) - Q(x)P(y)`.
    pub c_pq: T,
    /// Whether `c_pq` came from [`super::calibrate`].
    pub calibrated: bool,
    /// Common phase `e^{iθ}` applied to `P` and `Q`.
    pub gauge_theta: T,
    /// `P ↦ P - iκQ`; leaves the kernel unchanged.
    pub gauge_kappa: T,
}

impl<T: Real> HypParams<T> {
    pub fn new(z: Complex<T>, w: Complex<T>) -> Result<Self> {
        ZWParams::new(z, w)?;
        let two = T::two();
        let nu1 = (z + z.conj() + w + w.conj()).re / two;
        let nu3 = (z - z.conj() + w - w.conj()) / two;
        let nu4 = (z - z.conj() - w + w.conj()) / two;
        let mut hp = Self {
            z,
            w,
            nu1,
            nu3,
            nu4,
            c_pq: T::one(),
            calibrated: false,
            gauge_theta: T::zero(),
            gauge_kappa: T::zero(),
        };
        let tol = T::lit(1e-14);
        for (name, v) in [("nu3 nu4", hp.nu3 * hp.nu4), ("nu3^2", hp.nu3 * hp.nu3), ("nu4^2", hp.nu4 * hp.nu4)] {
            if v.im.abs() > tol * (T::one() + v.re.abs()) {
                return Err(Error::InvalidParams(format!("{name} is not real")));
            }
        }
        let r = raw_pq(&hp, T::lit(X_REF))?;
        hp.gauge_theta = -r.q.arg();
        let rot = Complex::from_polar(T::one(), hp.gauge_theta);
        hp.gauge_kappa = (r.p * rot).im / (r.q * rot).re;
        Ok(hp)
    }

    pub fn from_zw(p: &ZWParams<T>) -> Result<Self> {
        Self::new(p.z, p.w)
    }

    pub fn from_parts(z_re: f64, z_im: f64, w_re: f64, w_im: f64) -> Result<Self> {
        Self::new(Complex::new(T::lit(z_re), T::lit(z_im)), Complex::new(T::lit(w_re), T::lit(w_im)))
    }

    pub fn zw(&self) -> ZWParams<T> {
        ZWParams { z: self.z, w: self.w }
    }

    pub fn with_c_pq(mut self, c: T) -> Self {
        self.c_pq = c;
        self.calibrated = true;
        self
    }

    /// `ν₃ν₄ = -(Im z + Im w)(Im z - Im w)`.
    pub fn nu3nu4(&self) -> T {
        (self.nu3 * self.nu4).re
    }

    pub fn nu3_sq(&self) -> T {
        (self.nu3 * self.nu3).re
    }

    pub fn nu4_sq(&self) -> T {
        (self.nu4 * self.nu4).re
    }

    /// `₂F₁` parameters `(a, b, c)` of `P`.
    pub fn abc(&self) -> (Complex<T>, Complex<T>, Complex<T>) {
        let c = Complex::new(T::two() * self.nu1 + T::one(), T::zero());
        (self.z + self.w.conj(), self.z.conj() + self.w.conj(), c)
    }

    /// Lattice scale `N + ν₁` used by the scaling-limit evaluator.
    pub fn lattice_scale(&self, n: usize) -> T {
        T::of_int(n as i64) + self.nu1
    }

    /// Lattice shift `(Re z - Re w)/2` used by the scaling-limit evaluator.
    pub fn lattice_shift(&self) -> T {
        (self.z.re - self.w.re) * T::half()
    }
}
