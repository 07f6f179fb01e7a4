use anyhow::{bail, ensure, Context, Result};
use clap::{Args, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde_json::{json, Value};

use zwdpp::askey_lesky::{build_op_system, kernel_cd, kernel_particle_hole};
use zwdpp::combinatorics::{check_lemma71, check_scaling_consistency, HalfInt, LatticeSplit, Signature};
use zwdpp::dpp::{det_rho, lattice_distribution};
use zwdpp::fredholm::{alpha1_samples, gap_cdf_alpha1, ks_report, GapCurve, QuadratureScheme};
use zwdpp::hypkernel::{calibrate, kernel_hyp_block, ContinuousKernel, symmetry_class, HypParams, ScalingConfig, ScalingLimitKernel, SymmetryClass};
use zwdpp::zmeasure::{enumerate_distribution, sample_mh, MhConfig};

use crate::report::{fmt_f, Check, Outcome, Table};
use crate::Common;

pub type CommandReport = (Value, Value, Outcome);

fn config_echo(common: &Common, extra: Value) -> Value {
    let mut v = serde_json::to_value(common).expect("config serializes");
    v["out"] = Value::Null; // where a report lands is not part of it
    if let (Value::Object(m), Value::Object(e)) = (&mut v, extra) {
        m.extend(e);
    }
    v
}

fn parts_str(s: &Signature) -> String {
    s.parts().iter().map(|p| p.to_string()).collect::<Vec<_>>().join(";")
}

fn site_from(x: f64, n: usize) -> Result<HalfInt> {
    let twice = 2.0 * x;
    ensure!(twice == twice.round(), "{x} is not a half-integer");
    let h = HalfInt::from_twice(twice as i64);
    ensure!(zwdpp::combinatorics::on_lattice(h, n), "{x} is not on the lattice for N = {n}");
    Ok(h)
}

// ---------------------------------------------------------------- measure-table

#[derive(Args, Debug)]
pub struct MeasureTableArgs {
    #[command(flatten)]
    pub common: Common,
}

pub fn measure_table(a: &MeasureTableArgs) -> Result<CommandReport> {
    let c = &a.common;
    let p = c.params()?;
    let (n, window, tol) = (c.n_or(1), c.window.unwrap_or(20), c.tol.unwrap_or(1e-10));
    let dist = enumerate_distribution(n, &p, window)?;
    let mirror = enumerate_distribution(n, &p.swapped(), window)?;
    let symmetry = dist.iter().map(|(s, pr)| (mirror.prob_of(&s.dual()) - pr).abs()).fold(0.0, f64::max);
    let mut table = Table::new(&["signature", "probability"]);
    let mut rows = Vec::with_capacity(dist.len());
    for (s, pr) in dist.iter() {
        table.push(vec![parts_str(s), fmt_f(pr)]);
        rows.push(json!({ "signature": s, "probability": pr }));
    }
    let checks = vec![
        Check::at_most("total_minus_one", (dist.total() - 1.0).abs(), tol),
        Check::at_most("swap_dual_symmetry", symmetry, tol),
    ];
    let results = json!({
        "n": n,
        "window": window,
        "support_size": dist.len(),
        "log_window_mass": dist.log_window_mass,
        "tail_mass_estimate": dist.tail_mass,
        "table": rows,
    });
    Ok((config_echo(c, json!({ "n": n, "window": window, "tol": tol })), json!({ "tol": tol }), Outcome { results, table, checks }))
}

// ---------------------------------------------------------------- correlations

#[derive(Args, Debug)]
pub struct CorrelationsArgs {
    #[command(flatten)]
    pub common: Common,
}

pub fn correlations(a: &CorrelationsArgs) -> Result<CommandReport> {
    let c = &a.common;
    let p = c.params()?;
    let (n, window, tol) = (c.n_or(2), c.window.unwrap_or(20), c.tol.unwrap_or(1e-8));
    if n > 4 {
        return Err(zwdpp::Error::BudgetExceeded(format!("brute-force correlations need N <= 4, got {n}")).into());
    }
    let dist = lattice_distribution(&enumerate_distribution(n, &p, window)?)?;
    let k = kernel_cd(&build_op_system(n, &p, window)?)?;
    let sites = k.sites().to_vec();
    let m = sites.len();
    // one pass over the configurations for all ρ₁ and ρ₂
    let mut r1 = vec![0.0; m];
    let mut r2 = vec![0.0; m * m];
    for (cfg, pr) in dist.iter() {
        let idx: Vec<usize> = cfg.points().iter().map(|x| sites.binary_search(x).expect("configuration inside window")).collect();
        for (t, &i) in idx.iter().enumerate() {
            r1[i] += pr;
            for &j in &idx[..t] {
                r2[i * m + j] += pr;
                r2[j * m + i] += pr;
            }
        }
    }
    let mut table = Table::new(&["x", "y", "brute_force", "determinant", "abs_diff"]);
    let mut worst = 0.0f64;
    for i in 0..m {
        let d = det_rho(&k, &[sites[i]])?;
        worst = worst.max((d - r1[i]).abs());
        table.push(vec![sites[i].to_string(), String::new(), fmt_f(r1[i]), fmt_f(d), fmt_f((d - r1[i]).abs())]);
    }
    for i in 0..m {
        for j in i..m {
            let d = det_rho(&k, &[sites[i], sites[j]])?;
            let b = r2[i * m + j];
            worst = worst.max((d - b).abs());
            table.push(vec![sites[i].to_string(), sites[j].to_string(), fmt_f(b), fmt_f(d), fmt_f((d - b).abs())]);
        }
    }
    let results = json!({
        "n": n,
        "window": window,
        "sites": m,
        "queries": table.rows.len(),
        "max_abs_discrepancy": worst,
    });
    let checks = vec![Check::at_most("max_abs_discrepancy", worst, tol)];
    Ok((config_echo(c, json!({ "n": n, "window": window, "tol": tol })), json!({ "tol": tol }), Outcome { results, table, checks }))
}

// ---------------------------------------------------------------- involution

#[derive(Args, Debug)]
pub struct InvolutionArgs {
    #[command(flatten)]
    pub common: Common,
    /// Number of random signatures.
    #[arg(long, default_value_t = 10_000)]
    pub count: usize,
    /// Largest N drawn.
    #[arg(long, default_value_t = 8)]
    pub max_n: usize,
    /// Parts are drawn from [-max_part, max_part].
    #[arg(long, default_value_t = 10)]
    pub max_part: i64,
}

pub fn involution(a: &InvolutionArgs) -> Result<CommandReport> {
    let c = &a.common;
    ensure!(a.max_n >= 1 && a.max_part >= 0, "need --max-n >= 1 and --max-part >= 0");
    let mut rng = ChaCha8Rng::seed_from_u64(c.seed);
    let mut sigs = vec![Signature::zero(2), Signature::new(vec![1, -1])?];
    for _ in 0..a.count {
        let n = rng.random_range(1..=a.max_n);
        let mut parts: Vec<i64> = (0..n).map(|_| rng.random_range(-a.max_part..=a.max_part)).collect();
        parts.sort_unstable_by(|x, y| y.cmp(x));
        sigs.push(Signature::new(parts)?);
    }
    let mut table = Table::new(&["signature", "lemma", "scaling"]);
    let (mut lemma_fail, mut scaling_fail) = (0usize, 0usize);
    let mut failures = Vec::new();
    for s in &sigs {
        let (l, sc) = (check_lemma71(s, s.len())?, check_scaling_consistency(s, s.len())?);
        lemma_fail += usize::from(!l);
        scaling_fail += usize::from(!sc);
        if !(l && sc) {
            failures.push(s.clone());
        }
        table.push(vec![parts_str(s), l.to_string(), sc.to_string()]);
    }
    let results = json!({
        "checked": sigs.len(),
        "lemma_failures": lemma_fail,
        "scaling_failures": scaling_fail,
        "failing_signatures": failures,
    });
    let checks = vec![
        Check::at_most("lemma_failures", lemma_fail as f64, 0.0),
        Check::at_most("scaling_failures", scaling_fail as f64, 0.0),
    ];
    let extra = json!({ "count": a.count, "max_n": a.max_n, "max_part": a.max_part });
    Ok((config_echo(c, extra), json!({ "exact": true }), Outcome { results, table, checks }))
}

// ---------------------------------------------------------------- kernel

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, serde::Serialize)]
#[serde(rename_all = "lowercase")]
pub enum KernelKind {
    /// Christoffel–Darboux kernel on lattice sites, particles/holes form.
    Askey,
    /// Hypergeometric kernel on the (1/2, ∞)² block.
    Hyp,
    /// Scaled lattice kernel, any block.
    Scaling,
}

#[derive(Args, Debug)]
pub struct KernelArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, value_enum, default_value_t = KernelKind::Scaling)]
    pub kind: KernelKind,
    /// Comma-separated points; the kernel is evaluated on all ordered pairs.
    #[arg(long, value_delimiter = ',', allow_negative_numbers = true, default_value = "-1.3,-0.8,0.2,0.8,1.4")]
    pub points: Vec<f64>,
    /// N used to calibrate the hypergeometric kernel (with 2N).
    #[arg(long, default_value_t = 64)]
    pub calibrate_n: usize,
}

pub fn kernel(a: &KernelArgs) -> Result<CommandReport> {
    let c = &a.common;
    let p = c.params()?;
    let tol = c.tol.unwrap_or(1e-12);
    ensure!(!a.points.is_empty(), "no points given");
    ensure!(
        a.kind == KernelKind::Askey || a.points.iter().all(|x| x.abs() != 0.5),
        "points must avoid ±1/2"
    );
    let hp = HypParams::from_zw(&p)?;
    let mut table = Table::new(&["n", "x", "y", "value", "symmetry"]);
    let mut values = Vec::new();
    let mut worst_sym = 0.0f64;
    let mut extra = json!({ "kind": a.kind, "points": a.points, "tol": tol });
    let ns: Vec<usize> = match a.kind {
        KernelKind::Hyp => vec![0],
        _ => c.n_list_or(&[16, 32, 64]),
    };
    let mut cal_value = None;
    let eval: Box<dyn Fn(usize, f64, f64) -> Result<f64>> = match a.kind {
        KernelKind::Hyp => {
            ensure!(a.points.iter().all(|&x| x > 0.5), "the hypergeometric kernel is available only for x, y > 1/2");
            let cal = calibrate(&hp, 1.0, a.calibrate_n)?;
            cal_value = Some(json!({ "c_pq": cal.c_pq, "n": cal.n, "drift": cal.drift }));
            extra["calibrate_n"] = json!(a.calibrate_n);
            let hp = hp.clone().with_c_pq(cal.c_pq);
            Box::new(move |_, x, y| Ok(kernel_hyp_block(x, y, &hp)?))
        }
        KernelKind::Scaling => {
            let hp = hp.clone();
            let kernels = ns
                .iter()
                .map(|&n| ScalingLimitKernel::build(&hp, n, ScalingConfig::default()).map(|k| (n, k)))
                .collect::<zwdpp::Result<Vec<_>>>()?;
            Box::new(move |n, x, y| {
                let k = &kernels.iter().find(|(m, _)| *m == n).expect("built above").1;
                Ok(k.eval(x, y)?)
            })
        }
        KernelKind::Askey => {
            let window = c.window.unwrap_or(40);
            extra["window"] = json!(window);
            let kernels = ns
                .iter()
                .map(|&n| -> Result<_> {
                    let k = kernel_particle_hole(&kernel_cd(&build_op_system(n, &p, window)?)?, n)?;
                    Ok((n, k))
                })
                .collect::<Result<Vec<_>>>()?;
            Box::new(move |n, x, y| {
                let k = &kernels.iter().find(|(m, _)| *m == n).expect("built above").1;
                Ok(k.entry(site_from(x, n)?, site_from(y, n)?)?)
            })
        }
    };
    for &n in &ns {
        for &x in &a.points {
            for &y in &a.points {
                let v = eval(n, x, y)?;
                let back = eval(n, y, x)?;
                let (class, defect) = match a.kind {
                    KernelKind::Askey => {
                        let split = LatticeSplit::new(n)?;
                        let (sx, sy) = (site_from(x, n)?, site_from(y, n)?);
                        if split.is_inner(sx) == split.is_inner(sy) {
                            ("symmetric", (v - back).abs())
                        } else {
                            ("antisymmetric", (v + back).abs())
                        }
                    }
                    _ => match symmetry_class(x, y)? {
                        SymmetryClass::Symmetric => ("symmetric", (v - back).abs()),
                        SymmetryClass::Antisymmetric => ("antisymmetric", (v + back).abs()),
                    },
                };
                worst_sym = worst_sym.max(defect / v.abs().max(1.0));
                table.push(vec![n.to_string(), fmt_f(x), fmt_f(y), fmt_f(v), class.into()]);
                values.push(json!({ "n": n, "x": x, "y": y, "value": v, "symmetry": class }));
            }
        }
    }
    extra["n_list"] = json!(ns);
    let results = json!({ "values": values, "calibration": cal_value, "max_symmetry_defect": worst_sym });
    let checks = vec![Check::at_most("symmetry_defect", worst_sym, tol)];
    Ok((config_echo(c, extra), json!({ "tol": tol }), Outcome { results, table, checks }))
}

// ---------------------------------------------------------------- gap

#[derive(Args, Debug)]
pub struct GapArgs {
    #[command(flatten)]
    pub common: Common,
    #[arg(long, default_value_t = 0.6)]
    pub s_min: f64,
    #[arg(long, default_value_t = 3.0)]
    pub s_max: f64,
    /// Number of grid points in [s_min, s_max].
    #[arg(long, default_value_t = 21)]
    pub points: usize,
    /// Gauss–Legendre nodes (doubled for the error estimate).
    #[arg(long, default_value_t = 20)]
    pub quad_n: usize,
    /// Also compute σ and the Painlevé VI residual.
    #[arg(long)]
    pub painleve: bool,
    #[arg(long, default_value_t = 64)]
    pub calibrate_n: usize,
}

pub fn gap(a: &GapArgs) -> Result<CommandReport> {
    let c = &a.common;
    let p = c.params()?;
    let tol = c.tol.unwrap_or(1e-2);
    ensure!(a.points >= 2 && a.s_min > 0.5 && a.s_max > a.s_min, "need at least 2 points and 1/2 < s_min < s_max");
    let hp = HypParams::from_zw(&p)?;
    let cal = calibrate(&hp, 1.0, a.calibrate_n)?;
    let hp = hp.with_c_pq(cal.c_pq);
    let grid: Vec<f64> =
        (0..a.points).map(|i| a.s_min + (a.s_max - a.s_min) * i as f64 / (a.points - 1) as f64).collect();
    let quad = QuadratureScheme::new(a.quad_n, 1e-4)?;
    let curve = GapCurve::compute(&hp, &grid, &quad, a.painleve)?;
    let mut table = Table::new(&["s", "det", "sigma", "residual", "error_estimate"]);
    let opt = |v: Option<f64>| v.map(fmt_f).unwrap_or_default();
    for pt in &curve.points {
        table.push(vec![fmt_f(pt.s), fmt_f(pt.det), opt(pt.sigma), opt(pt.residual), fmt_f(pt.error_estimate)]);
    }
    let mut checks = vec![Check::flag("monotone", curve.is_monotone(1e-8))];
    if a.painleve {
        let worst = curve.points.iter().filter_map(|p| p.residual).fold(0.0, f64::max);
        checks.push(Check::at_most("painleve_residual", worst, tol));
    }
    let results = json!({ "calibration": cal, "curve": curve });
    let extra = json!({
        "s_min": a.s_min, "s_max": a.s_max, "points": a.points, "quad_n": a.quad_n,
        "painleve": a.painleve, "calibrate_n": a.calibrate_n, "tol": tol,
    });
    Ok((config_echo(c, extra), json!({ "residual_tol": tol, "quadrature_tol": 1e-4, "calibration_drift": 0.01 }), Outcome { results, table, checks }))
}

// ---------------------------------------------------------------- converge

#[derive(Args, Debug)]
pub struct ConvergeArgs {
    #[command(flatten)]
    pub common: Common,
    /// Samples per N.
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
    /// Independent Markov chains per N.
    #[arg(long, default_value_t = 4)]
    pub chains: usize,
    /// Thinning in units of N proposals.
    #[arg(long, default_value_t = 50)]
    pub thin_per_n: usize,
    /// Burn-in in units of N proposals.
    #[arg(long, default_value_t = 2000)]
    pub burn_per_n: usize,
    /// Lower end of the range used for the resolved-range statistic.
    #[arg(long, default_value_t = 0.0625)]
    pub u_min: f64,
    #[arg(long, default_value_t = 24)]
    pub quad_n: usize,
    #[arg(long, default_value_t = 128)]
    pub calibrate_n: usize,
}

pub fn converge(a: &ConvergeArgs) -> Result<CommandReport> {
    let c = &a.common;
    let p = c.params()?;
    let tol = c.tol.unwrap_or(0.05);
    if a.samples == 0 {
        bail!("--samples must be positive");
    }
    let ns = c.n_list_or(&[16, 64]);
    ensure!(!ns.is_empty(), "empty N list");
    let hp = HypParams::from_zw(&p)?;
    let cal = calibrate(&hp, 1.0, a.calibrate_n).context("calibrating the limit kernel")?;
    let hp = hp.with_c_pq(cal.c_pq);
    let quad = QuadratureScheme::new(a.quad_n, 1e-5)?;
    let cdf = |u: f64| gap_cdf_alpha1(&hp, u, &quad).map(|v| v.det);
    let grid: Vec<f64> = (0..=32).map(|i| a.u_min * 2f64.powf(i as f64 / 4.0)).collect();
    let mut table = Table::new(&["n", "samples", "ks", "ks_resolved", "atom_at_zero", "acceptance_rate"]);
    let mut per_n = Vec::new();
    let mut ks = Vec::new();
    for (shard, &n) in ns.iter().enumerate() {
        let cfg = MhConfig { burn_in: a.burn_per_n * n, thinning: (a.thin_per_n * n).max(1), chains: a.chains, table_radius: 4096 };
        // one seed per N, derived from the base seed
        let run = sample_mh(n, &p, a.samples, c.seed.wrapping_add(shard as u64).wrapping_mul(0x9E37_79B9_7F4A_7C15), &cfg)?;
        let alphas = alpha1_samples(&run.samples, n)?;
        let r = ks_report(&alphas, cdf, &grid, a.u_min)?;
        table.push(vec![
            n.to_string(),
            a.samples.to_string(),
            fmt_f(r.ks_full),
            fmt_f(r.ks_resolved),
            fmt_f(r.atom_at_zero),
            fmt_f(run.acceptance_rate),
        ]);
        ks.push(r.ks_full);
        per_n.push(json!({ "n": n, "ks": r, "acceptance_rate": run.acceptance_rate, "non_ergodic": run.non_ergodic }));
    }
    let mut checks = vec![Check::at_most("ks_final", *ks.last().expect("nonempty"), tol)];
    if ks.len() > 1 {
        checks.push(Check::flag("ks_decreasing", ks.windows(2).all(|w| w[1] < w[0])));
    }
    let results = json!({ "calibration": cal, "per_n": per_n });
    let extra = json!({
        "n_list": ns, "samples": a.samples, "chains": a.chains, "thin_per_n": a.thin_per_n,
        "burn_per_n": a.burn_per_n, "u_min": a.u_min, "quad_n": a.quad_n, "calibrate_n": a.calibrate_n, "tol": tol,
    });
    Ok((config_echo(c, extra), json!({ "ks_tol": tol, "quadrature_tol": 1e-5 }), Outcome { results, table, checks }))
}
