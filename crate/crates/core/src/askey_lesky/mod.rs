//! The orthogonal polynomial ensemble of the weight `W_N` on the shifted
//! lattice `X⁽ᴺ⁾`: numerical orthonormal polynomials, the Christoffel–Darboux
//! kernel, and its particles/holes transform.
//!
//! The polynomials come from the Stieltjes procedure on a finite window; no
//! closed-form hypergeometric expressions are used.

use serde::Serialize;

use crate::combinatorics::{HalfInt, LatticeSplit};
use crate::dpp::DiscreteKernel;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Real;
use crate::zmeasure::{tail_from_edges, window_orthonormal, ZWParams};

/// The first `N` orthonormal functions `p_k(x) W^{1/2}(x)` on a window.
#[derive(Debug, Clone)]
pub struct OPSystem<T> {
    pub n: usize,
    pub window: i64,
    pub params: ZWParams<T>,
    /// Lattice sites `l + (N+1)/2`, increasing.
    pub sites: Vec<HalfInt>,
    /// Recurrence `x p_k = b_{k+1} p_{k+1} + a_k p_k + b_k p_{k-1}`.
    pub a: Vec<T>,
    pub b: Vec<T>,
    /// `values[k][i] = p_k(x_i) W^{1/2}(x_i)`, weight normalised to unit mass.
    pub values: Vec<Vec<T>>,
    pub orthogonality_defect: T,
    /// Estimated probability of a particle beyond the window.
    pub tail_estimate: T,
}

/// Default tolerance on `max |<p_j, p_k> - δ_jk|`.
pub fn orthogonality_tol<T: Real>() -> T {
    T::lit(1e-2) * T::epsilon().sqrt()
}

pub fn build_op_system<T: Real>(n: usize, p: &ZWParams<T>, window: i64) -> Result<OPSystem<T>> {
    p.validate()?;
    let (sites, ops) = window_orthonormal(p, n, window)?;
    let tol = orthogonality_tol::<T>();
    if !(ops.orthogonality_defect <= tol) {
        return Err(Error::LossOfOrthogonality { defect: ops.orthogonality_defect.as_f64(), tol: tol.as_f64() });
    }
    let tail_estimate = tail_from_edges(p, &sites, &ops);
    Ok(OPSystem {
        n,
        window,
        params: *p,
        sites,
        a: ops.alpha,
        b: ops.beta,
        values: ops.vectors,
        orthogonality_defect: ops.orthogonality_defect,
        tail_estimate,
    })
}

impl<T: Real> OPSystem<T> {
    pub fn index_of(&self, x: HalfInt) -> Result<usize> {
        self.sites.binary_search(&x).map_err(|_| Error::OutsideWindow(x.to_string()))
    }

    /// `K(x_i, x_j) = Σ_k φ_k(x_i) φ_k(x_j)` by site index.
    pub fn kernel_at(&self, i: usize, j: usize) -> T {
        self.values.iter().map(|v| v[i] * v[j]).sum()
    }

    /// Particle/hole kernel entry by site index.
    pub fn kernel_particle_hole_at(&self, i: usize, j: usize) -> T {
        let split = LatticeSplit::new(self.n).expect("N >= 1");
        let k = self.kernel_at(i, j);
        if split.is_inner(self.sites[i]) {
            (if i == j { T::one() } else { T::zero() }) - k
        } else {
            k
        }
    }

    /// `K(x, x)` on the whole window.
    pub fn density(&self) -> Vec<T> {
        (0..self.sites.len()).map(|i| self.kernel_at(i, i)).collect()
    }

    /// `<p_j, p_k>_W` on the window.
    pub fn inner_product(&self, j: usize, k: usize) -> T {
        self.values[j].iter().zip(&self.values[k]).map(|(&x, &y)| x * y).sum()
    }
}

/// `K_N(x, y) = Σ_{k<N} p_k(x) p_k(y) W^{1/2}(x) W^{1/2}(y)` on the window.
pub fn kernel_cd<T: Real>(sys: &OPSystem<T>) -> Result<DiscreteKernel<T>> {
    let m = sys.sites.len();
    let mut mat = Matrix::zeros(m, m);
    for v in &sys.values {
        for i in 0..m {
            let vi = v[i];
            if vi == T::zero() {
                continue;
            }
            for j in i..m {
                mat[(i, j)] += vi * v[j];
            }
        }
    }
    for i in 0..m {
        for j in 0..i {
            mat[(i, j)] = mat[(j, i)];
        }
    }
    DiscreteKernel::new(sys.sites.clone(), mat, true)
}

/// `K̃(x, y) = 1_{x=y} - K(x, y)` for inner `x`, `K(x, y)` for outer `x`.
pub fn kernel_particle_hole<T: Real>(k: &DiscreteKernel<T>, n: usize) -> Result<DiscreteKernel<T>> {
    let split = LatticeSplit::new(n)?;
    if let Some(x) = split.inner_sites().into_iter().find(|&x| !k.contains(x)) {
        return Err(Error::OutsideWindow(x.to_string()));
    }
    let sites = k.sites().to_vec();
    Ok(k.map_entries(false, |i, j, v| {
        if split.is_inner(sites[i]) {
            (if i == j { T::one() } else { T::zero() }) - v
        } else {
            v
        }
    }))
}

/// Diagonal of `K_N` and how its mass splits between the inner and outer sites.
#[derive(Debug, Clone, Serialize)]
pub struct DensityProfile<T> {
    pub n: usize,
    pub sites: Vec<HalfInt>,
    pub density: Vec<T>,
    /// `Σ_inner K(x,x) / N`.
    pub inner_fraction: T,
    /// `Σ_outer K(x,x)`: expected number of particles outside.
    pub outer_mass: T,
    /// `Σ_inner (1 - K(x,x))`: expected number of holes inside.
    pub hole_mass: T,
}

pub fn limit_density<T: Real>(n: usize, p: &ZWParams<T>, window: i64) -> Result<DensityProfile<T>> {
    let sys = build_op_system(n, p, window)?;
    Ok(density_profile(&sys))
}

pub fn density_profile<T: Real>(sys: &OPSystem<T>) -> DensityProfile<T> {
    let split = LatticeSplit::new(sys.n).expect("N >= 1");
    let density = sys.density();
    let (mut inner, mut outer, mut holes) = (T::zero(), T::zero(), T::zero());
    for (s, &d) in sys.sites.iter().zip(&density) {
        if split.is_inner(*s) {
            inner += d;
            holes += T::one() - d;
        } else {
            outer += d;
        }
    }
    DensityProfile {
        n: sys.n,
        sites: sys.sites.clone(),
        density,
        inner_fraction: inner / T::of_int(sys.n as i64),
        outer_mass: outer,
        hole_mass: holes,
    }
}
