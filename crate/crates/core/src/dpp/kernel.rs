use serde::Serialize;

use crate::combinatorics::HalfInt;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Real;

/// A kernel `K(x, y)` on a finite window of lattice sites.
#[derive(Debug, Clone, PartialEq)]
pub struct DiscreteKernel<T> {
    sites: Vec<HalfInt>,
    matrix: Matrix<T>,
    projection: bool,
}

impl<T: Real> DiscreteKernel<T> {
    /// `sites` must be strictly increasing; `matrix` is indexed by site position.
    pub fn new(sites: Vec<HalfInt>, matrix: Matrix<T>, projection: bool) -> Result<Self> {
        if !matrix.is_square() || matrix.rows() != sites.len() {
            return Err(Error::InvalidInput("kernel matrix does not match its sites".into()));
        }
        if sites.windows(2).any(|s| s[0] >= s[1]) {
            return Err(Error::InvalidInput("kernel sites must be strictly increasing".into()));
        }
        if matrix.as_slice().iter().any(|v| !v.is_finite()) {
            return Err(Error::InvalidInput("kernel has non-finite entries".into()));
        }
        Ok(Self { sites, matrix, projection })
    }

    pub fn sites(&self) -> &[HalfInt] {
        &self.sites
    }

    pub fn matrix(&self) -> &Matrix<T> {
        &self.matrix
    }

    pub fn is_projection(&self) -> bool {
        self.projection
    }

    pub fn len(&self) -> usize {
        self.sites.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sites.is_empty()
    }

    pub fn index_of(&self, x: HalfInt) -> Result<usize> {
        self.sites.binary_search(&x).map_err(|_| Error::OutsideWindow(x.to_string()))
    }

    pub fn contains(&self, x: HalfInt) -> bool {
        self.sites.binary_search(&x).is_ok()
    }

    pub fn entry(&self, x: HalfInt, y: HalfInt) -> Result<T> {
        Ok(self.matrix[(self.index_of(x)?, self.index_of(y)?)])
    }

    pub fn diagonal(&self) -> Vec<T> {
        (0..self.len()).map(|i| self.matrix[(i, i)]).collect()
    }

    pub fn trace(&self) -> T {
        self.matrix.trace()
    }

    /// `max |K² - K|`.
    pub fn projection_defect(&self) -> T {
        self.matrix.matmul(&self.matrix).max_abs_diff(&self.matrix)
    }

    /// Builds a kernel with the same sites from an entry map `(i, j, K_ij) ↦ K'_ij`.
    pub fn map_entries(&self, projection: bool, mut f: impl FnMut(usize, usize, T) -> T) -> Self {
        let m = Matrix::from_fn(self.len(), self.len(), |i, j| f(i, j, self.matrix[(i, j)]));
        Self { sites: self.sites.clone(), matrix: m, projection }
    }

    /// JSON-ready dump: sites, row-major entries and caller-supplied metadata.
    pub fn dump(&self, metadata: serde_json::Value) -> KernelDump {
        KernelDump {
            sites: self.sites.iter().map(|s| s.to_real::<f64>()).collect(),
            entries: self.matrix.as_slice().iter().map(|v| v.as_f64()).collect(),
            projection: self.projection,
            metadata,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct KernelDump {
    pub sites: Vec<f64>,
    pub entries: Vec<f64>,
    pub projection: bool,
    pub metadata: serde_json::Value,
}

/// `ρ_n(x_1, …, x_n) = det[K(x_i, x_j)]`; zero for repeated points.
pub fn det_rho<T: Real>(k: &DiscreteKernel<T>, q: &[HalfInt]) -> Result<T> {
    if q.is_empty() {
        return Err(Error::InvalidInput("correlation query needs at least one point".into()));
    }
    let idx = q.iter().map(|&x| k.index_of(x)).collect::<Result<Vec<_>>>()?;
    Ok(k.matrix.submatrix(&idx).det())
}

/// `det(I - K_I)`: probability that no point falls in `subset`.
pub fn discrete_gap<T: Real>(k: &DiscreteKernel<T>, subset: &[HalfInt]) -> Result<T> {
    let idx = subset.iter().map(|&x| k.index_of(x)).collect::<Result<Vec<_>>>()?;
    Ok(k.matrix.submatrix(&idx).one_minus().det())
}
