//! Small dense matrices and determinants by pivoted elimination.

use crate::scalar::Real;

/// Row-major dense square or rectangular matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Matrix<T> {
    rows: usize,
    cols: usize,
    data: Vec<T>,
}

impl<T: Real> Matrix<T> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![T::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = T::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> T) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Self { rows, cols, data }
    }

    pub fn from_row_major(rows: usize, cols: usize, data: Vec<T>) -> Self {
        assert_eq!(data.len(), rows * cols, "data length does not match shape");
        Self { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn as_slice(&self) -> &[T] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[T] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    /// Principal submatrix on the given index set (indices may repeat).
    pub fn submatrix(&self, idx: &[usize]) -> Self {
        Self::from_fn(idx.len(), idx.len(), |i, j| self[(idx[i], idx[j])])
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self[(j, i)])
    }

    pub fn matmul(&self, other: &Self) -> Self {
        assert_eq!(self.cols, other.rows);
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self[(i, k)];
                if a == T::zero() {
                    continue;
                }
                let orow = other.row(k);
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                for (d, &b) in dst.iter_mut().zip(orow) {
                    *d += a * b;
                }
            }
        }
        out
    }

    pub fn max_abs_diff(&self, other: &Self) -> T {
        self.data
            .iter()
            .zip(&other.data)
            .fold(T::zero(), |m, (&a, &b)| m.max((a - b).abs()))
    }

    pub fn trace(&self) -> T {
        (0..self.rows.min(self.cols)).map(|i| self[(i, i)]).sum()
    }

    /// `I - self`.
    pub fn one_minus(&self) -> Self {
        Self::from_fn(self.rows, self.cols, |i, j| {
            let d = if i == j { T::one() } else { T::zero() };
            d - self[(i, j)]
        })
    }

    /// Determinant by Gaussian elimination with partial pivoting.
    pub fn det(&self) -> T {
        let (sign, log_abs) = self.sign_log_abs_det();
        if sign == T::zero() {
            T::zero()
        } else {
            sign * log_abs.exp()
        }
    }

    /// Sign and `ln|det|`; sign is zero for a singular matrix.
    pub fn sign_log_abs_det(&self) -> (T, T) {
        assert!(self.is_square(), "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return (T::one(), T::zero());
        }
        let mut a = self.data.clone();
        let mut sign = T::one();
        let mut log_abs = T::zero();
        for col in 0..n {
            let mut piv = col;
            let mut best = a[col * n + col].abs();
            for r in col + 1..n {
                let v = a[r * n + col].abs();
                if v > best {
                    best = v;
                    piv = r;
                }
            }
            if best == T::zero() {
                return (T::zero(), T::neg_infinity());
            }
            if piv != col {
                for c in 0..n {
                    a.swap(col * n + c, piv * n + c);
                }
                sign = -sign;
            }
            let p = a[col * n + col];
            if p < T::zero() {
                sign = -sign;
            }
            log_abs += p.abs().ln();
            for r in col + 1..n {
                let f = a[r * n + col] / p;
                if f == T::zero() {
                    continue;
                }
                for c in col + 1..n {
                    let v = a[col * n + c];
                    a[r * n + c] -= f * v;
                }
            }
        }
        (sign, log_abs)
    }
}

impl<T> std::ops::Index<(usize, usize)> for Matrix<T> {
    type Output = T;
    #[inline]
    fn index(&self, (i, j): (usize, usize)) -> &T {
        &self.data[i * self.cols + j]
    }
}

impl<T> std::ops::IndexMut<(usize, usize)> for Matrix<T> {
    #[inline]
    fn index_mut(&mut self, (i, j): (usize, usize)) -> &mut T {
        &mut self.data[i * self.cols + j]
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn det_small_cases() {
        let m = Matrix::from_row_major(2, 2, vec![1.0, 2.0, 3.0, 4.0]);
        assert!((m.det() + 2.0f64).abs() < 1e-14);
        let empty: Matrix<f64> = Matrix::zeros(0, 0);
        assert_eq!(empty.det(), 1.0);
        let sing = Matrix::from_row_major(2, 2, vec![1.0, 2.0, 2.0, 4.0]);
        assert_eq!(sing.det(), 0.0f64);
    }

    #[test]
    fn det_permutation_sign() {
        let m = Matrix::from_row_major(3, 3, vec![0.0, 1.0, 0.0, 0.0, 0.0, 1.0, 1.0, 0.0, 0.0]);
        assert!((m.det() - 1.0f64).abs() < 1e-15);
        let m = Matrix::from_row_major(3, 3, vec![0.0, 1.0, 0.0, 1.0, 0.0, 0.0, 0.0, 0.0, -2.0]);
        assert!((m.det() - 2.0f64).abs() < 1e-15);
    }

    #[test]
    fn det_matches_cofactor_expansion() {
        let m = Matrix::from_row_major(3, 3, vec![2.0f64, -1.0, 0.5, 0.3, 4.0, 1.0, -2.0, 0.7, 3.0]);
        let c = |i: usize, j: usize| m[(i, j)];
        let expect = c(0, 0) * (c(1, 1) * c(2, 2) - c(1, 2) * c(2, 1))
            - c(0, 1) * (c(1, 0) * c(2, 2) - c(1, 2) * c(2, 0))
            + c(0, 2) * (c(1, 0) * c(2, 1) - c(1, 1) * c(2, 0));
        assert!((m.det() - expect).abs() < 1e-12);
        let mf: Matrix<f32> = Matrix::from_fn(3, 3, |i, j| m[(i, j)] as f32);
        assert!((mf.det() - expect as f32).abs() < 1e-4);
    }
}
