use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use super::enumerate::{enumerate_distribution, FiniteDistribution};
use super::params::ZWParams;
use crate::combinatorics::Signature;
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Acceptance rate below which a Metropolis–Hastings run is flagged.
pub const NON_ERGODIC_RATE: f64 = 1e-3;

/// Random stream for shard `shard` of a run seeded with `seed`.
pub fn shard_rng(seed: u64, shard: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(shard);
    rng
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct MhConfig {
    /// Proposals discarded at the start of every chain.
    pub burn_in: usize,
    /// Proposals between retained samples.
    pub thinning: usize,
    /// Independent chains, each on its own random stream.
    pub chains: usize,
    /// Weights for `|l| <= table_radius` are precomputed.
    pub table_radius: i64,
}

impl Default for MhConfig {
    fn default() -> Self {
        Self { burn_in: 10_000, thinning: 10, chains: 1, table_radius: 4096 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub enum SampleMethod {
    /// Inverse-CDF draws from the enumerated window distribution.
    Exact { window: i64 },
    Mh(MhConfig),
}

#[derive(Debug, Clone, Serialize)]
pub struct SampleRun {
    pub samples: Vec<Signature>,
    /// Fraction of accepted proposals (1 for exact sampling).
    pub acceptance_rate: f64,
    pub non_ergodic: bool,
}

pub fn sample<T: Real>(n: usize, p: &ZWParams<T>, count: usize, seed: u64, method: SampleMethod) -> Result<SampleRun> {
    match method {
        SampleMethod::Exact { window } => {
            let dist = enumerate_distribution(n, p, window)?;
            Ok(SampleRun { samples: sample_exact(&dist, count, seed), acceptance_rate: 1.0, non_ergodic: false })
        }
        SampleMethod::Mh(cfg) => sample_mh(n, p, count, seed, &cfg),
    }
}

/// I.i.d. draws by inverse CDF.
pub fn sample_exact<T: Real>(dist: &FiniteDistribution<T>, count: usize, seed: u64) -> Vec<Signature> {
    let mut cdf = Vec::with_capacity(dist.len());
    let mut acc = 0.0;
    for q in &dist.probs {
        acc += q.as_f64();
        cdf.push(acc);
    }
    let mut rng = shard_rng(seed, 0);
    (0..count)
        .map(|_| {
            let u = rng.random::<f64>() * acc;
            let i = cdf.partition_point(|&c| c <= u).min(dist.len() - 1);
            dist.support[i].clone()
        })
        .collect()
}

/// Metropolis–Hastings on shifted coordinates with single-row `±1` moves.
pub fn sample_mh<T: Real>(n: usize, p: &ZWParams<T>, count: usize, seed: u64, cfg: &MhConfig) -> Result<SampleRun> {
    p.validate()?;
    if n == 0 || cfg.chains == 0 || cfg.thinning == 0 {
        return Err(Error::InvalidInput("N, chains and thinning must be positive".into()));
    }
    let table = WeightTable::new(p, n, cfg.table_radius)?;
    let chains = cfg.chains;
    let runs: Vec<Result<(Vec<Signature>, u64, u64)>> = (0..chains)
        .into_par_iter()
        .map(|c| {
            let want = count / chains + usize::from(c < count % chains);
            run_chain(&table, n, want, shard_rng(seed, c as u64), cfg)
        })
        .collect();
    let mut samples = Vec::with_capacity(count);
    let (mut acc, mut tot) = (0u64, 0u64);
    for r in runs {
        let (s, a, t) = r?;
        samples.extend(s);
        acc += a;
        tot += t;
    }
    let rate = if tot == 0 { 1.0 } else { acc as f64 / tot as f64 };
    Ok(SampleRun { samples, acceptance_rate: rate, non_ergodic: rate < NON_ERGODIC_RATE })
}

struct WeightTable<'a, T> {
    p: &'a ZWParams<T>,
    n: usize,
    lo: i64,
    values: Vec<f64>,
}

impl<'a, T: Real> WeightTable<'a, T> {
    fn new(p: &'a ZWParams<T>, n: usize, radius: i64) -> Result<Self> {
        let lo = -radius - n as i64;
        let values = (lo..=radius).map(|l| p.log_weight(l, n).map(|v| v.as_f64())).collect::<Result<_>>()?;
        Ok(Self { p, n, lo, values })
    }

    fn get(&self, l: i64) -> Result<f64> {
        let i = l - self.lo;
        if i >= 0 && (i as usize) < self.values.len() {
            Ok(self.values[i as usize])
        } else {
            Ok(self.p.log_weight(l, self.n)?.as_f64())
        }
    }
}

fn run_chain<T: Real>(
    table: &WeightTable<'_, T>,
    n: usize,
    want: usize,
    mut rng: ChaCha8Rng,
    cfg: &MhConfig,
) -> Result<(Vec<Signature>, u64, u64)> {
    let mut l: Vec<i64> = Signature::zero(n).shifted();
    let mut accepted = 0u64;
    let mut proposed = 0u64;
    let mut out = Vec::with_capacity(want);
    let total_steps = cfg.burn_in + want * cfg.thinning;
    for step in 1..=total_steps {
        let i = rng.random_range(0..n);
        let up = rng.random::<bool>();
        let old = l[i];
        let new = if up { old + 1 } else { old - 1 };
        proposed += 1;
        let blocked = (i > 0 && new >= l[i - 1]) || (i + 1 < n && new <= l[i + 1]);
        if !blocked {
            let mut ratio = 1.0f64;
            for (j, &lj) in l.iter().enumerate() {
                if j != i {
                    ratio *= (new - lj) as f64 / (old - lj) as f64;
                }
            }
            let delta = table.get(new)? - table.get(old)? + 2.0 * ratio.abs().ln();
            if delta >= 0.0 || rng.random::<f64>().ln() < delta {
                l[i] = new;
                accepted += 1;
            }
        }
        if step > cfg.burn_in && (step - cfg.burn_in).is_multiple_of(cfg.thinning) {
            out.push(Signature::from_shifted(&l)?);
        }
    }
    Ok((out, accepted, proposed))
}
