use serde::Serialize;

use super::params::HypParams;
use super::pq::{pq_values, PQValues};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Real;

/// Points closer than this use the diagonal (derivative) formula.
pub const NEAR_DIAGONAL: f64 = 1e-6;

/// Which side of `(-1/2, 1/2)` a point is on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Block {
    Inside,
    Outside,
}

impl Block {
    pub fn of<T: Real>(x: T) -> Result<Self> {
        let h = T::half();
        if x.abs() == h || !x.is_finite() {
            return Err(Error::Domain(format!("{x} is not in R minus {{-1/2, 1/2}}")));
        }
        Ok(if x.abs() < h { Block::Inside } else { Block::Outside })
    }
}

/// Expected relation between `K(x,y)` and `K(y,x)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SymmetryClass {
    Symmetric,
    Antisymmetric,
}

pub fn symmetry_class<T: Real>(x: T, y: T) -> Result<SymmetryClass> {
    Ok(if Block::of(x)? == Block::of(y)? { SymmetryClass::Symmetric } else { SymmetryClass::Antisymmetric })
}

/// A kernel on a continuous state space.
pub trait ContinuousKernel<T: Real> {
    fn eval(&self, x: T, y: T) -> Result<T>;

    /// `K(x_i, x_j)` for all pairs.
    fn matrix(&self, xs: &[T]) -> Result<Matrix<T>> {
        let mut m = Matrix::zeros(xs.len(), xs.len());
        for (i, &x) in xs.iter().enumerate() {
            for (j, &y) in xs.iter().enumerate() {
                m[(i, j)] = self.eval(x, y)?;
            }
        }
        Ok(m)
    }
}

/// `c_PQ (P(x)Q(y) - Q(x)P(y))/(x - y)` on `(1/2, ∞)²`.
#[derive(Debug, Clone)]
pub struct HypKernel<T> {
    pub params: HypParams<T>,
}

impl<T: Real> HypKernel<T> {
    pub fn new(params: HypParams<T>) -> Self {
        Self { params }
    }

    pub fn from_values(&self, a: &PQValues<T>, b: &PQValues<T>) -> T {
        let c = self.params.c_pq;
        let d = a.x - b.x;
        if d.abs() < T::lit(NEAR_DIAGONAL) {
            let m = |v: &PQValues<T>| v.dp * v.q - v.dq * v.p;
            c * (m(a) + m(b)) * T::half()
        } else {
            c * (a.p * b.q - a.q * b.p) / d
        }
    }
}

impl<T: Real> ContinuousKernel<T> for HypKernel<T> {
    fn eval(&self, x: T, y: T) -> Result<T> {
        kernel_hyp_block(x, y, &self.params)
    }

    fn matrix(&self, xs: &[T]) -> Result<Matrix<T>> {
        let vals = xs.iter().map(|&x| pq_values(&self.params, x)).collect::<Result<Vec<_>>>()?;
        Ok(Matrix::from_fn(xs.len(), xs.len(), |i, j| self.from_values(&vals[i], &vals[j])))
    }
}

/// The hypergeometric kernel on the `(1/2, ∞)²` block.
pub fn kernel_hyp_block<T: Real>(x: T, y: T, hp: &HypParams<T>) -> Result<T> {
    let k = HypKernel { params: hp.clone() };
    let a = pq_values(hp, x)?;
    if (x - y).abs() < T::lit(NEAR_DIAGONAL) {
        return Ok(k.from_values(&a, &a));
    }
    Ok(k.from_values(&a, &pq_values(hp, y)?))
}

/// Unscaled numerator `P(x)Q(y) - Q(x)P(y)`.
pub fn hyp_numerator<T: Real>(x: T, y: T, hp: &HypParams<T>) -> Result<T> {
    let (a, b) = (pq_values(hp, x)?, pq_values(hp, y)?);
    Ok(a.p * b.q - a.q * b.p)
}

/// `sin(π(x-y)) / (π(x-y))`.
pub fn sine_kernel<T: Real>(x: T, y: T) -> T {
    let t = T::PI() * (x - y);
    if t.abs() < T::lit(1e-4) {
        let t2 = t * t;
        T::one() - t2 / T::lit(6.0) + t2 * t2 / T::lit(120.0)
    } else {
        t.sin() / t
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct SineKernel;

impl<T: Real> ContinuousKernel<T> for SineKernel {
    fn eval(&self, x: T, y: T) -> Result<T> {
        Ok(sine_kernel(x, y))
    }
}
