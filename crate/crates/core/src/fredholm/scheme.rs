use serde::Serialize;

use crate::error::{Error, Result};
use crate::numerics::quadrature::gauss_legendre_unit;
use crate::scalar::Real;

/// Below this distance of `s` from `1/2` the log-spaced panel is used.
pub const NEAR_HALF: f64 = 0.05;

/// How the unit interval is mapped onto `(s, ∞)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HalfLineMap {
    /// `x = s + L t/(1-t)` with `L = s - 1/2`.
    Rational,
    /// `x - 1/2 = (s - 1/2)^{1-t}` on `(s, 3/2)` followed by a rational panel on `(3/2, ∞)`;
    /// resolves the `1/(x - 1/2)` scale when `s` is close to `1/2`.
    LogPanel,
}

/// Gauss–Legendre rule on `(0, 1)` with a default tolerance for the
/// order-doubling check.
#[derive(Debug, Clone, Serialize)]
pub struct QuadratureScheme<T> {
    pub n: usize,
    pub nodes: Vec<T>,
    pub weights: Vec<T>,
    /// Maximum accepted `|det_n - det_2n|`.
    pub tol: T,
}

impl<T: Real> QuadratureScheme<T> {
    pub fn new(n: usize, tol: T) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInput("quadrature needs at least one node".into()));
        }
        let (nodes, weights) = gauss_legendre_unit(n);
        Ok(Self { n, nodes, weights, tol })
    }

    pub fn doubled(&self) -> Self {
        Self::new(2 * self.n, self.tol).expect("n >= 1")
    }

    pub fn map_for(s: T) -> HalfLineMap {
        if s - T::half() < T::lit(NEAR_HALF) {
            HalfLineMap::LogPanel
        } else {
            HalfLineMap::Rational
        }
    }

    /// Nodes and weights for `∫_s^∞ f(x) dx`.
    pub fn half_line(&self, s: T) -> Result<(Vec<T>, Vec<T>)> {
        let half = T::half();
        if !(s > half) || !s.is_finite() {
            return Err(Error::Domain(format!("half-line quadrature needs s > 1/2, got {s}")));
        }
        match Self::map_for(s) {
            HalfLineMap::Rational => Ok(self.rational(s, s - half)),
            HalfLineMap::LogPanel => {
                let top = T::lit(1.5);
                let d = s - half;
                let ln_ratio = (T::one() / d).ln();
                let mut xs = Vec::with_capacity(2 * self.n);
                let mut ws = Vec::with_capacity(2 * self.n);
                for (&t, &w) in self.nodes.iter().zip(&self.weights) {
                    let e = d * (t * ln_ratio).exp();
                    xs.push(half + e);
                    ws.push(w * e * ln_ratio);
                }
                let (x2, w2) = self.rational(top, T::one());
                xs.extend(x2);
                ws.extend(w2);
                Ok((xs, ws))
            }
        }
    }

    fn rational(&self, s: T, l: T) -> (Vec<T>, Vec<T>) {
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(&t, &w)| {
                let u = T::one() - t;
                (s + l * t / u, w * l / (u * u))
            })
            .unzip()
    }

    /// Nodes and weights for `∫_a^b f(x) dx`.
    pub fn interval(&self, a: T, b: T) -> (Vec<T>, Vec<T>) {
        let len = b - a;
        self.nodes.iter().zip(&self.weights).map(|(&t, &w)| (a + len * t, w * len)).unzip()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn half_line_integrals() {
        let q = QuadratureScheme::<f64>::new(40, 1e-10).unwrap();
        for &s in &[0.51, 0.6, 2.0] {
            let (x, w) = q.half_line(s).unwrap();
            let v: f64 = x.iter().zip(&w).map(|(x, w)| w / (x * x)).sum();
            assert!((v - 1.0 / s).abs() < 1e-10, "s={s}: {v}");
            assert!(w.iter().all(|&w| w > 0.0));
            assert!(x.windows(2).all(|p| p[0] < p[1]));
        }
        let (x, w) = q.interval(1.0, 3.0);
        let v: f64 = x.iter().zip(&w).map(|(x, w)| w * x * x).sum();
        assert!((v - 26.0 / 3.0).abs() < 1e-12);
        assert!(q.half_line(0.5).is_err());
        assert_eq!(QuadratureScheme::<f64>::map_for(0.52), HalfLineMap::LogPanel);
    }

    #[test]
    fn log_panel_resolves_inverse_distance() {
        // ∫_s^∞ (x-1/2)^{-1} (x+1/2)^{-2} dx has a log singularity scale at 1/2
        let f = |x: f64| 1.0 / ((x - 0.5) * (x + 0.5).powi(2));
        let exact = |s: f64| {
            let d = s - 0.5;
            (1.0 + 1.0 / d).ln() - 1.0 / (1.0 + d)
        };
        let q = QuadratureScheme::<f64>::new(40, 1e-10).unwrap();
        for &s in &[0.5 + 1e-3, 0.5 + 1e-5] {
            let (x, w) = q.half_line(s).unwrap();
            let v: f64 = x.iter().zip(&w).map(|(x, w)| w * f(*x)).sum();
            assert!((v - exact(s)).abs() < 1e-8 * exact(s), "s={s}: {v} vs {}", exact(s));
        }
    }
}
