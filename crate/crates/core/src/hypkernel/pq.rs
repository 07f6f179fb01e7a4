use num_complex::Complex;
use serde::Serialize;

use super::params::HypParams;
use crate::error::{Error, Result};
use crate::numerics::gauss_2f1;
use crate::scalar::Real;

/// Reference point where the gauge is fixed.
pub const X_REF: f64 = 1.0;

/// `P, P', Q, Q'` at one point, complex, before gauge fixing.
#[derive(Debug, Clone, Copy)]
pub(crate) struct RawPQ<T> {
    pub p: Complex<T>,
    pub dp: Complex<T>,
    pub q: Complex<T>,
    pub dq: Complex<T>,
}

/// Gauge-fixed real values of `P, P', Q, Q'`, with the discarded imaginary parts.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct PQValues<T> {
    pub x: T,
    pub p: T,
    pub dp: T,
    pub q: T,
    pub dq: T,
    /// Largest `|Im|` among the four gauge-fixed values.
    pub max_imag: T,
}

pub(crate) fn raw_pq<T: Real>(hp: &HypParams<T>, x: T) -> Result<RawPQ<T>> {
    let half = T::half();
    if !(x > half) || !x.is_finite() {
        return Err(Error::Domain(format!("P and Q need x > 1/2, got {x}")));
    }
    let (a, b, c) = hp.abc();
    let one = Complex::new(T::one(), T::zero());
    let zeta = T::one() / (half - x);
    let f = gauss_2f1(a, b, c, zeta)?;
    let g = gauss_2f1(a + one, b + one, c + one, zeta)?;
    let h = gauss_2f1(a + one + one, b + one + one, c + one + one, zeta)?;
    let fd = a * b / c * g;
    let gd = (a + one) * (b + one) / (c + one) * h;

    let xm = x - half;
    let xp = x + half;
    let pa = -(hp.z + hp.z.conj()) * half - hp.w.conj();
    let pb = (hp.w.conj() - hp.w) * half;
    let pre = (pa * xm.ln() + pb * xp.ln()).exp();
    let dl = pa / xm + pb / xp;
    let z2 = zeta * zeta;
    let p = pre * f;
    let dp = pre * (dl * f + fd * z2);
    let q = pre * g / xm;
    let dq = pre / xm * ((dl - one / xm) * g + gd * z2);
    Ok(RawPQ { p, dp, q, dq })
}

fn gauged<T: Real>(hp: &HypParams<T>, x: T, r: RawPQ<T>) -> PQValues<T> {
    let rot = Complex::from_polar(T::one(), hp.gauge_theta);
    let ik = Complex::new(T::zero(), hp.gauge_kappa);
    let q = r.q * rot;
    let dq = r.dq * rot;
    let p = r.p * rot - ik * q;
    let dp = r.dp * rot - ik * dq;
    let max_imag = p.im.abs().max(dp.im.abs()).max(q.im.abs()).max(dq.im.abs());
    PQValues { x, p: p.re, dp: dp.re, q: q.re, dq: dq.re, max_imag }
}

/// Gauge-fixed `P, P', Q, Q'` at `x > 1/2` (without the constant `c_PQ`).
pub fn pq_values<T: Real>(hp: &HypParams<T>, x: T) -> Result<PQValues<T>> {
    Ok(gauged(hp, x, raw_pq(hp, x)?))
}

/// Gauge-fixed `P(x)`.
pub fn p_func<T: Real>(x: T, hp: &HypParams<T>) -> Result<T> {
    Ok(pq_values(hp, x)?.p)
}

/// Gauge-fixed `Q(x)`.
pub fn q_func<T: Real>(x: T, hp: &HypParams<T>) -> Result<T> {
    Ok(pq_values(hp, x)?.q)
}
