use num_complex::Complex;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::log_gamma;
use crate::scalar::Real;

/// The parameter pair `(z, w)`; admissible when `z, w ∉ ℤ` and `Re(z+w) > -1`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ZWParams<T> {
    pub z: Complex<T>,
    pub w: Complex<T>,
}

/// Distance to ℤ below which a parameter counts as integral.
const INTEGER_GUARD: f64 = 1e-12;

impl<T: Real> ZWParams<T> {
    pub fn new(z: Complex<T>, w: Complex<T>) -> Result<Self> {
        let p = Self { z, w };
        p.validate()?;
        Ok(p)
    }

    pub fn from_parts(z_re: f64, z_im: f64, w_re: f64, w_im: f64) -> Result<Self> {
        Self::new(Complex::new(T::lit(z_re), T::lit(z_im)), Complex::new(T::lit(w_re), T::lit(w_im)))
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [("z", self.z), ("w", self.w)] {
            if !v.re.is_finite() || !v.im.is_finite() {
                return Err(Error::InvalidParams(format!("{name} is not finite")));
            }
            let re = v.re.as_f64();
            if v.im.as_f64().abs() < INTEGER_GUARD && (re - re.round()).abs() < INTEGER_GUARD {
                return Err(Error::InvalidParams(format!("{name} = {re} is an integer")));
            }
        }
        if !(self.re_sum() > -T::one()) {
            return Err(Error::InvalidParams(format!("Re(z+w) = {} must exceed -1", self.re_sum())));
        }
        Ok(())
    }

    /// `(w, z)`.
    pub fn swapped(&self) -> Self {
        Self { z: self.w, w: self.z }
    }

    pub fn re_sum(&self) -> T {
        self.z.re + self.w.re
    }

    /// Decay exponent `2Re(z+w) + 2` of the one-point density at infinity.
    pub fn tail_exponent(&self) -> T {
        T::two() * self.re_sum() + T::two()
    }

    /// `ln W_N(l) = -2 Re[ln Γ(z-l) + ln Γ(w+N+1+l)]`.
    pub fn log_weight(&self, l: i64, n: usize) -> Result<T> {
        let lt = T::of_int(l);
        let a = log_gamma(self.z - lt)?;
        let b = log_gamma(self.w + T::of_int(n as i64 + 1) + lt)?;
        Ok(-T::two() * (a.re + b.re))
    }

    /// `W_N(l) = |Γ(z-l) Γ(w+N+1+l)|^{-2}`.
    pub fn weight_wn(&self, l: i64, n: usize) -> Result<Weight<T>> {
        let lw = self.log_weight(l, n)?;
        let value = lw.exp();
        Ok(Weight { value, log_value: lw, underflow: value == T::zero() })
    }

    /// `ln` of `∏ W_N(λ_i - i) ∏_{i<j} (λ_i - λ_j - i + j)^2`.
    pub fn log_unnormalized_mass(&self, sig: &crate::combinatorics::Signature) -> Result<T> {
        let n = sig.len();
        if n == 0 {
            return Err(Error::InvalidInput("empty signature".into()));
        }
        let l = sig.shifted();
        let mut acc = T::zero();
        for (i, &li) in l.iter().enumerate() {
            acc += self.log_weight(li, n)?;
            for &lj in &l[i + 1..] {
                acc += T::two() * T::of_int(li - lj).ln();
            }
        }
        Ok(acc)
    }

    pub fn unnormalized_mass(&self, sig: &crate::combinatorics::Signature) -> Result<T> {
        Ok(self.log_unnormalized_mass(sig)?.exp())
    }
}

/// A weight value; `underflow` is set when the value is below the smallest
/// representable positive number and has been flushed to zero.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Weight<T> {
    pub value: T,
    pub log_value: T,
    pub underflow: bool,
}
