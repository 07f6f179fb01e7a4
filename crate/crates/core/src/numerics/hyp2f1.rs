//! Gauss hypergeometric function `₂F₁(a, b; c; ζ)` on the negative real axis.
//!
//! The argument is first mapped into `[0, 1)` with the Pfaff transformation
//! `₂F₁(a,b;c;ζ) = (1-ζ)^{-a} ₂F₁(a, c-b; c; ζ/(ζ-1))`. The Taylor series is
//! summed directly below [`HypConfig::connection_threshold`]; above it the
//! `1 - t` connection formula is used.

use num_complex::Complex;

use super::gamma::{log_gamma, rgamma};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Tolerances for the hypergeometric evaluator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HypConfig {
    /// Relative size of the last retained series term.
    pub series_tol: f64,
    pub max_terms: usize,
    /// Transformed arguments above this use the `1 - t` connection formula.
    pub connection_threshold: f64,
    /// Offset used when `c - a - b` is (nearly) an integer in the connection formula.
    pub degenerate_eps: f64,
    /// Distance to the nearest integer below which `c - a - b` counts as degenerate.
    pub degenerate_window: f64,
}

impl Default for HypConfig {
    fn default() -> Self {
        Self {
            series_tol: 1e-17,
            max_terms: 20_000,
            connection_threshold: 0.9,
            degenerate_eps: 1e-3,
            degenerate_window: 1e-5,
        }
    }
}

type C<T> = Complex<T>;

fn is_nonpositive_integer<T: Real>(v: C<T>) -> bool {
    v.im == T::zero() && v.re <= T::zero() && v.re == v.re.round()
}

/// `₂F₁(a, b; c; ζ)` for real `ζ <= 0` with default tolerances.
pub fn gauss_2f1<T: Real>(a: C<T>, b: C<T>, c: C<T>, zeta: T) -> Result<C<T>> {
    gauss_2f1_with(a, b, c, zeta, &HypConfig::default())
}

/// `d/dζ ₂F₁(a, b; c; ζ) = (ab/c) ₂F₁(a+1, b+1; c+1; ζ)`.
pub fn deriv_2f1<T: Real>(a: C<T>, b: C<T>, c: C<T>, zeta: T) -> Result<C<T>> {
    deriv_2f1_with(a, b, c, zeta, &HypConfig::default())
}

pub fn deriv_2f1_with<T: Real>(a: C<T>, b: C<T>, c: C<T>, zeta: T, cfg: &HypConfig) -> Result<C<T>> {
    check_c(c)?;
    let one = T::one();
    let scale = a * b / c;
    if scale == C::new(T::zero(), T::zero()) {
        return Ok(scale);
    }
    Ok(scale * gauss_2f1_with(a + one, b + one, c + one, zeta, cfg)?)
}

fn check_c<T: Real>(c: C<T>) -> Result<()> {
    if is_nonpositive_integer(c) {
        return Err(Error::ParameterPole(c.re.as_f64()));
    }
    Ok(())
}

pub fn gauss_2f1_with<T: Real>(a: C<T>, b: C<T>, c: C<T>, zeta: T, cfg: &HypConfig) -> Result<C<T>> {
    check_c(c)?;
    if !zeta.is_finite() || zeta > T::zero() {
        return Err(Error::Domain(format!("gauss_2f1 supports finite ζ <= 0, got {zeta}")));
    }
    let one = C::new(T::one(), T::zero());
    if zeta == T::zero() || a.norm() == T::zero() || b.norm() == T::zero() {
        return Ok(one);
    }
    // Terminating series are summed directly in the original argument.
    if is_nonpositive_integer(a) || is_nonpositive_integer(b) {
        return series(a, b, c, zeta, cfg);
    }
    let t = zeta / (zeta - T::one());
    let prefactor = (-a * (T::one() - zeta).ln()).exp();
    let bp = c - b;
    let inner = if t <= T::lit(cfg.connection_threshold) || is_nonpositive_integer(bp) {
        series(a, bp, c, t, cfg)?
    } else {
        connection(a, bp, c, t, cfg)?
    };
    Ok(prefactor * inner)
}

/// `₂F₁(a, b; c; t)` for `0 <= t < 1`: direct series, or the `1 - t`
/// connection formula above the configured threshold.
pub fn gauss_2f1_unit<T: Real>(a: C<T>, b: C<T>, c: C<T>, t: T) -> Result<C<T>> {
    let cfg = HypConfig::default();
    check_c(c)?;
    if !(t >= T::zero() && t < T::one()) {
        return Err(Error::Domain(format!("gauss_2f1_unit supports 0 <= t < 1, got {t}")));
    }
    if t <= T::lit(cfg.connection_threshold) || is_nonpositive_integer(a) || is_nonpositive_integer(b) {
        series(a, b, c, t, &cfg)
    } else {
        connection(a, b, c, t, &cfg)
    }
}

/// Plain Taylor series `Σ (a)_k (b)_k / ((c)_k k!) x^k` for `|x| < 1` (or terminating).
pub(crate) fn series<T: Real>(a: C<T>, b: C<T>, c: C<T>, x: T, cfg: &HypConfig) -> Result<C<T>> {
    let one = T::one();
    let mut sum = C::new(one, T::zero());
    let mut term = C::new(one, T::zero());
    let tol = T::lit(cfg.series_tol);
    let mut small_run = 0;
    for k in 0..cfg.max_terms {
        let kf = T::of_int(k as i64);
        let num = (a + kf) * (b + kf);
        if num.norm() == T::zero() {
            return Ok(sum);
        }
        term = term * num / ((c + kf) * (kf + one)) * x;
        sum = sum + term;
        if !sum.re.is_finite() || !sum.im.is_finite() {
            return Err(Error::NonConvergence(format!("series overflow at term {k}")));
        }
        // Terms only shrink monotonically once k exceeds the parameter moduli.
        let past_hump = kf > a.norm().max(b.norm()).max(c.norm());
        if term.norm() <= tol * sum.norm() && past_hump {
            small_run += 1;
            if small_run >= 2 {
                return Ok(sum);
            }
        } else {
            small_run = 0;
        }
    }
    Err(Error::NonConvergence(format!(
        "₂F₁ series at x = {x} not converged after {} terms",
        cfg.max_terms
    )))
}

/// `1 - t` connection formula for `t` close to one.
fn connection<T: Real>(a: C<T>, b: C<T>, c: C<T>, t: T, cfg: &HypConfig) -> Result<C<T>> {
    let d = c - a - b;
    let dist = (d.re - d.re.round()).abs().max(d.im.abs());
    if dist < T::lit(cfg.degenerate_window) {
        // Perturb `a` symmetrically so that c - a - b leaves the integers and
        // average (odd terms cancel), then Richardson over ε and 2ε removes ε².
        // A moderate ε keeps the cancellation inside each evaluation mild.
        let eps = C::new(T::lit(cfg.degenerate_eps), T::zero());
        let avg = |e: C<T>| -> Result<C<T>> {
            Ok((connection_generic(a + e, b, c, t, cfg)? + connection_generic(a - e, b, c, t, cfg)?) * T::half())
        };
        let (f1, f2) = (avg(eps)?, avg(eps * T::two())?);
        return Ok((f1 * T::lit(4.0) - f2) / T::lit(3.0));
    }
    connection_generic(a, b, c, t, cfg)
}

fn connection_generic<T: Real>(a: C<T>, b: C<T>, c: C<T>, t: T, cfg: &HypConfig) -> Result<C<T>> {
    let one = T::one();
    let s = one - t;
    let d = c - a - b;
    let lg_c = log_gamma(c)?;
    // Γ(c)Γ(c-a-b)/(Γ(c-a)Γ(c-b)) and Γ(c)Γ(a+b-c)/(Γ(a)Γ(b)), with 1/Γ entire.
    let a1 = (lg_c + log_gamma(d)?).exp() * rgamma(c - a)? * rgamma(c - b)?;
    let a2 = (lg_c + log_gamma(-d)?).exp() * rgamma(a)? * rgamma(b)?;
    let mut out = C::new(T::zero(), T::zero());
    if a1.norm() != T::zero() {
        out = out + a1 * series(a, b, -d + one, s, cfg)?;
    }
    if a2.norm() != T::zero() {
        let pow = (d * s.ln()).exp();
        out = out + a2 * pow * series(c - a, c - b, d + one, s, cfg)?;
    }
    Ok(out)
}
