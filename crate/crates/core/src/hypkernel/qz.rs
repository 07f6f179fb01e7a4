use num_complex::Complex;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::sin_pi;
use crate::scalar::Real;

/// Terms `|n| <= LATTICE_TERMS` are summed explicitly.
pub const LATTICE_TERMS: i64 = 2000;
/// Maximum relative difference between the two expressions.
pub const Q_AGREEMENT_TOL: f64 = 1e-9;

/// Both expressions for `q(z)`.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct QValues<T> {
    pub closed_form: T,
    pub lattice_sum: T,
    pub rel_diff: T,
}

/// `Σ_{n∈ℤ} |z - n|^{-2}` by direct summation plus an integral tail.
pub fn lattice_sum<T: Real>(z: Complex<T>) -> T {
    let (x, y) = (z.re, z.im.abs());
    let term = |n: i64| {
        let d = x - T::of_int(n);
        T::one() / (d * d + y * y)
    };
    let m = LATTICE_TERMS;
    // integrate the tail from m + 1/2 on each side (midpoint rule)
    let tail = |a: T| {
        if y > T::zero() {
            (T::FRAC_PI_2() - (a / y).atan()) / y
        } else {
            T::one() / a
        }
    };
    let mhalf = T::of_int(m) + T::half();
    let mut s = tail(mhalf - x) + tail(mhalf + x);
    for k in (1..=m).rev() {
        s += term(k) + term(-k);
    }
    s + term(0)
}

/// `π sin(π(z - z̄)) / ((z - z̄) sin(πz) sin(πz̄))`, with its real-axis limit
/// `π² / sin²(πx)`.
pub fn closed_form_sum<T: Real>(z: Complex<T>) -> T {
    let pi = T::PI();
    if z.im.abs() < T::lit(1e-8) {
        let s = (pi * z.re).sin();
        let y2 = z.im * z.im;
        // next term of the expansion in y keeps the small-|y| branch accurate
        return pi * pi / (s * s) * (T::one() + y2 * pi * pi * (T::lit(2.0 / 3.0) - T::one() / (s * s)));
    }
    let d = z - z.conj();
    let num = Complex::new(pi, T::zero()) * sin_pi(d);
    let den = d * sin_pi(z) * sin_pi(z.conj());
    (num / den).re
}

pub fn q_values<T: Real>(z: Complex<T>) -> Result<QValues<T>> {
    if !z.re.is_finite() || !z.im.is_finite() {
        return Err(Error::Domain("q(z) needs a finite argument".into()));
    }
    if z.im == T::zero() && z.re == z.re.round() {
        return Err(Error::Domain(format!("q(z) is undefined at the integer {}", z.re)));
    }
    let closed = (-closed_form_sum(z)).exp();
    let lattice = (-lattice_sum(z)).exp();
    let rel = ((closed - lattice) / closed).abs();
    Ok(QValues { closed_form: closed, lattice_sum: lattice, rel_diff: rel })
}

/// `q(z) = exp(-Σ_n |z - n|^{-2})`, checked against the lattice sum.
pub fn q_of_z<T: Real>(z: Complex<T>) -> Result<T> {
    let v = q_values(z)?;
    if !(v.rel_diff <= T::lit(Q_AGREEMENT_TOL)) {
        return Err(Error::Disagreement { rel: v.rel_diff.as_f64() });
    }
    Ok(v.closed_form)
}

/// Exploratory estimate of `lim (a_k)^{1/k}` from a decreasing positive
/// sequence: `exp` of the least-squares slope of `ln a_k` against `k` over
/// `k ∈ [kmin, kmax]` (1-based). `None` when fewer than two usable terms.
pub fn geometric_rate(seq: &[f64], kmin: usize, kmax: usize) -> Option<f64> {
    let pts: Vec<(f64, f64)> = (kmin.max(1)..=kmax.min(seq.len()))
        .filter(|&k| seq[k - 1] > 0.0)
        .map(|k| (k as f64, seq[k - 1].ln()))
        .collect();
    if pts.len() < 2 {
        return None;
    }
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    Some((sxy / sxx).exp())
}
