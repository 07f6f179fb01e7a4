//! Complex log-gamma: Lanczos approximation on the right half plane and the
//! reflection formula on the left, with the principal branch preserved.

use num_complex::Complex;

use crate::error::{Error, Result};
use crate::scalar::Real;

const LANCZOS_G: f64 = 7.0;
#[allow(clippy::excessive_precision)] // published digits, kept verbatim
const LANCZOS_COEF: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

/// Largest |Im z| accepted before the hyperbolic factors are considered unsafe.
pub const MAX_IMAG: f64 = 1.0e8;

/// Principal branch of `ln Γ(z)`.
pub fn log_gamma<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Overflow(format!("non-finite argument {z}")));
    }
    if z.im.abs() > T::lit(MAX_IMAG) {
        return Err(Error::Overflow(format!("|Im z| too large: {z}")));
    }
    if z.im == T::zero() && z.re <= T::zero() && z.re == z.re.round() {
        return Err(Error::Pole(z.re.as_f64()));
    }
    if z.re >= T::half() {
        return Ok(lanczos(z));
    }
    // conj(lnΓ(z)) = lnΓ(conj z); work in the closed upper half plane.
    if z.im < T::zero() {
        return log_gamma(z.conj()).map(|v| v.conj());
    }
    let one = Complex::new(T::one(), T::zero());
    let ln_pi = T::PI().ln();
    Ok(Complex::new(ln_pi, T::zero()) - ln_sin_pi_upper(z) - lanczos(one - z))
}

/// `ln Γ(x)` for real `x > 0`.
pub fn ln_gamma_real<T: Real>(x: T) -> Result<T> {
    if x <= T::zero() {
        return Err(Error::Domain(format!("ln_gamma_real requires x > 0, got {x}")));
    }
    log_gamma(Complex::new(x, T::zero())).map(|v| v.re)
}

/// `Γ(z)`.
pub fn gamma<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    log_gamma(z).map(|v| v.exp())
}

/// `1/Γ(z)`, which is entire: zero at the poles of Γ.
pub fn rgamma<T: Real>(z: Complex<T>) -> Result<Complex<T>> {
    match log_gamma(z) {
        Ok(v) => Ok((-v).exp()),
        Err(Error::Pole(_)) => Ok(Complex::new(T::zero(), T::zero())),
        Err(e) => Err(e),
    }
}

fn lanczos<T: Real>(z: Complex<T>) -> Complex<T> {
    let zm1 = z - T::one();
    let mut acc = Complex::new(T::lit(LANCZOS_COEF[0]), T::zero());
    for (k, &c) in LANCZOS_COEF.iter().enumerate().skip(1) {
        acc = acc + Complex::new(T::lit(c), T::zero()) / (zm1 + T::of_int(k as i64));
    }
    let t = zm1 + T::lit(LANCZOS_G + 0.5);
    let half_ln_2pi = T::lit(0.918_938_533_204_672_7);
    (zm1 + T::half()) * t.ln() - t + acc.ln() + half_ln_2pi
}

/// Branch of `ln sin(πz)` for `Im z >= 0` that makes the reflection formula
/// reproduce the principal branch of `ln Γ`: `-iπz + ln(1 - e^{2πiz}) + ln(i/2)`.
fn ln_sin_pi_upper<T: Real>(z: Complex<T>) -> Complex<T> {
    let pi = T::PI();
    let i = Complex::new(T::zero(), T::one());
    let base = -i * z * pi + Complex::new(-T::two().ln(), T::FRAC_PI_2());
    if z.im > T::lit(20.0) {
        let u = (i * z * (pi * T::two())).exp();
        return base + (Complex::new(T::one(), T::zero()) - u).ln();
    }
    // Accurate modulus from a reduced-argument sine, branch from the approximate form.
    let approx = base + (Complex::new(T::one(), T::zero()) - (i * z * (pi * T::two())).exp()).ln();
    let s = sin_pi(z);
    let accurate = s.ln();
    let two_pi = pi * T::two();
    let k = ((approx.im - accurate.im) / two_pi).round();
    Complex::new(accurate.re, accurate.im + k * two_pi)
}

/// `sin(πz)` with the real part reduced modulo 2 before scaling.
pub fn sin_pi<T: Real>(z: Complex<T>) -> Complex<T> {
    let two = T::two();
    let xr = z.re - two * (z.re / two).round();
    let pi = T::PI();
    let (s, c) = (pi * xr).sin_cos();
    Complex::new(s * (pi * z.im).cosh(), c * (pi * z.im).sinh())
}
