use serde::Serialize;

use super::normalization::{window_log_mass, window_shifted_range};
use super::params::ZWParams;
use crate::combinatorics::Signature;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Largest number of signatures [`enumerate_distribution`] will list.
pub const ENUMERATION_LIMIT: u128 = 10_000_000;

/// `P⁽ᴺ⁾` restricted to the signatures with parts in `[-W, W]`, renormalised
/// over the window.
#[derive(Debug, Clone, Serialize)]
pub struct FiniteDistribution<T> {
    pub n: usize,
    pub window: i64,
    pub support: Vec<Signature>,
    pub probs: Vec<T>,
    /// `ln` of the unnormalised window mass.
    pub log_window_mass: T,
    /// Estimated probability (under the full measure) of leaving the window.
    pub tail_mass: T,
}

impl<T: Real> FiniteDistribution<T> {
    pub fn len(&self) -> usize {
        self.support.len()
    }

    pub fn is_empty(&self) -> bool {
        self.support.is_empty()
    }

    pub fn total(&self) -> T {
        self.probs.iter().copied().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Signature, T)> {
        self.support.iter().zip(self.probs.iter().copied())
    }

    pub fn prob_of(&self, sig: &Signature) -> T {
        self.iter().find(|(s, _)| *s == sig).map(|(_, p)| p).unwrap_or_else(T::zero)
    }

    /// Probability of the event `pred`.
    pub fn prob_where(&self, mut pred: impl FnMut(&Signature) -> bool) -> T {
        self.iter().filter(|(s, _)| pred(s)).map(|(_, p)| p).sum()
    }
}

/// Number of signatures of length `N` with parts in `[-W, W]`: `C(2W+N, N)`.
pub fn window_count(n: usize, window: i64) -> u128 {
    let m = (2 * window + n as i64).max(0) as u128;
    let k = n as u128;
    let mut c: u128 = 1;
    for i in 0..k {
        c = c.saturating_mul(m - i) / (i + 1);
        if c > u64::MAX as u128 {
            return c;
        }
    }
    c
}

/// Lists every signature with parts in `[-W, W]` with its probability.
pub fn enumerate_distribution<T: Real>(n: usize, p: &ZWParams<T>, window: i64) -> Result<FiniteDistribution<T>> {
    p.validate()?;
    if n == 0 || window < 0 {
        return Err(Error::InvalidInput("N must be positive and the window nonnegative".into()));
    }
    let count = window_count(n, window);
    if count > ENUMERATION_LIMIT {
        return Err(Error::BudgetExceeded(format!("{count} signatures exceed the enumeration limit")));
    }
    let ls: Vec<i64> = window_shifted_range(n, window).rev().collect();
    let lw = ls.iter().map(|&l| p.log_weight(l, n)).collect::<Result<Vec<T>>>()?;

    let mut support = Vec::with_capacity(count as usize);
    let mut logs = Vec::with_capacity(count as usize);
    let mut chosen: Vec<usize> = Vec::with_capacity(n);
    descend(&ls, &lw, n, 0, T::zero(), &mut chosen, &mut |idx, lm| {
        let l: Vec<i64> = idx.iter().map(|&i| ls[i]).collect();
        support.push(Signature::from_shifted(&l).expect("strictly decreasing shifted coordinates"));
        logs.push(lm);
    });

    let max = logs.iter().copied().fold(T::neg_infinity(), T::max);
    let mut probs: Vec<T> = logs.iter().map(|&v| (v - max).exp()).collect();
    let total: T = probs.iter().copied().sum();
    for q in &mut probs {
        *q /= total;
    }
    let (_, tail_mass) = window_log_mass(p, n, window)?;
    Ok(FiniteDistribution { n, window, support, probs, log_window_mass: max + total.ln(), tail_mass })
}

// Depth-first over strictly decreasing index tuples, accumulating the log mass.
fn descend<T: Real>(
    ls: &[i64],
    lw: &[T],
    n: usize,
    start: usize,
    acc: T,
    chosen: &mut Vec<usize>,
    emit: &mut impl FnMut(&[usize], T),
) {
    if chosen.len() == n {
        emit(chosen, acc);
        return;
    }
    let remaining = n - chosen.len();
    for i in start..=ls.len() - remaining {
        let mut next = acc + lw[i];
        for &j in chosen.iter() {
            next += T::two() * T::of_int(ls[j] - ls[i]).ln();
        }
        chosen.push(i);
        descend(ls, lw, n, i + 1, next, chosen, emit);
        chosen.pop();
    }
}
