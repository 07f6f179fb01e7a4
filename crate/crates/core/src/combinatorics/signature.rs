use serde::Serialize;

use super::halfint::HalfInt;
use crate::error::{Error, Result};

/// Weakly decreasing integer tuple `λ_1 >= … >= λ_N`, `N >= 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct Signature(Vec<i64>);

impl Signature {
    pub fn new(parts: Vec<i64>) -> Result<Self> {
        if parts.is_empty() {
            return Err(Error::InvalidInput("a signature needs at least one part".into()));
        }
        if parts.windows(2).any(|p| p[0] < p[1]) {
            return Err(Error::InvalidInput(format!("signature {parts:?} is not weakly decreasing")));
        }
        Ok(Self(parts))
    }

    pub fn zero(n: usize) -> Self {
        Self(vec![0; n.max(1)])
    }

    pub fn parts(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `λ* = (-λ_N, …, -λ_1)`.
    pub fn dual(&self) -> Self {
        Self(self.0.iter().rev().map(|&v| -v).collect())
    }

    /// Shifted coordinates `l_i = λ_i - i` (1-based `i`), strictly decreasing.
    pub fn shifted(&self) -> Vec<i64> {
        self.0.iter().enumerate().map(|(i, &v)| v - (i as i64 + 1)).collect()
    }

    /// Inverse of [`Signature::shifted`].
    pub fn from_shifted(l: &[i64]) -> Result<Self> {
        Self::new(l.iter().enumerate().map(|(i, &v)| v + i as i64 + 1).collect())
    }
}

/// Young diagram: weakly decreasing positive row lengths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct YoungDiagram(Vec<u64>);

impl YoungDiagram {
    pub fn new(mut rows: Vec<u64>) -> Result<Self> {
        while rows.last() == Some(&0) {
            rows.pop();
        }
        if rows.windows(2).any(|p| p[0] < p[1]) || rows.contains(&0) {
            return Err(Error::InvalidInput(format!("{rows:?} is not a partition")));
        }
        Ok(Self(rows))
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    pub fn rows(&self) -> &[u64] {
        &self.0
    }

    /// `|μ|`.
    pub fn size(&self) -> u64 {
        self.0.iter().sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn transpose(&self) -> Self {
        let cols = self.0.first().copied().unwrap_or(0);
        Self((1..=cols).map(|j| self.0.iter().filter(|&&r| r >= j).count() as u64).collect())
    }

    /// Number of diagonal boxes `d(μ)`.
    pub fn diagonal(&self) -> usize {
        self.0.iter().enumerate().take_while(|(i, &r)| r > *i as u64).count()
    }

    /// Modified Frobenius coordinates `a_i = μ_i - i + ½`, `b_i = μ'_i - i + ½`, `i <= d(μ)`.
    pub fn frobenius(&self) -> FrobeniusCoords {
        let d = self.diagonal();
        let t = self.transpose();
        let arm = |rows: &[u64], i: usize| HalfInt::from_twice(2 * rows[i] as i64 - 2 * (i as i64 + 1) + 1);
        FrobeniusCoords {
            a: (0..d).map(|i| arm(&self.0, i)).collect(),
            b: (0..d).map(|i| arm(&t.0, i)).collect(),
        }
    }
}

/// Modified Frobenius coordinates: two strictly decreasing lists of positive half-integers.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FrobeniusCoords {
    pub a: Vec<HalfInt>,
    pub b: Vec<HalfInt>,
}

impl FrobeniusCoords {
    pub fn d(&self) -> usize {
        self.a.len()
    }

    /// `Σa + Σb`, which equals the number of boxes.
    pub fn total(&self) -> HalfInt {
        self.a.iter().chain(&self.b).fold(HalfInt::ZERO, |acc, &v| acc + v)
    }
}

/// Splits `λ` into `(λ⁺, λ⁻)`: the positive parts, and the negated negative parts in reverse order.
pub fn split_signature(sig: &Signature) -> (YoungDiagram, YoungDiagram) {
    let plus: Vec<u64> = sig.parts().iter().filter(|&&v| v > 0).map(|&v| v as u64).collect();
    let minus: Vec<u64> = sig.parts().iter().rev().filter(|&&v| v < 0).map(|&v| (-v) as u64).collect();
    (YoungDiagram(plus), YoungDiagram(minus))
}

pub fn frobenius(mu: &YoungDiagram) -> FrobeniusCoords {
    mu.frobenius()
}
