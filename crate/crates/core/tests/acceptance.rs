//! Acceptance criteria. Each test prints one `PASS`/`FAIL` line (written to
//! the raw stdout handle so it survives output capture) and then asserts.

use std::io::Write;
use std::time::Instant;

use num_complex::Complex;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use zwdpp::askey_lesky::{build_op_system, density_profile, kernel_cd, kernel_particle_hole};
use zwdpp::combinatorics::{check_lemma71, check_scaling_consistency, HalfInt, LatticeSplit, Signature};
use zwdpp::dpp::{det_rho, lattice_distribution, particle_hole_distribution, ConfigDistribution, DiscreteKernel};
use zwdpp::fredholm::{alpha1_samples, gap_cdf_alpha1, ks_report, painleve6_residual, QuadratureScheme};
use zwdpp::hypkernel::{calibrate, kernel_hyp_block, q_values, HypParams, ScalingConfig, ScalingLimitKernel};
use zwdpp::numerics::{deriv_2f1, gauss_2f1, gauss_2f1_unit, log_gamma, sin_pi};
use zwdpp::zmeasure::{enumerate_distribution, sample_mh, MhConfig, ZWParams};

fn report(id: u32, name: &str, pass: bool, detail: &str, started: Instant) {
    let line = format!(
        "{} [{id:02}] {name}: {detail} ({:.1}s)\n",
        if pass { "PASS" } else { "FAIL" },
        started.elapsed().as_secs_f64()
    );
    let mut out = std::io::stdout().lock();
    out.write_all(line.as_bytes()).unwrap();
    out.flush().unwrap();
}

const PARAM_SET: [(f64, f64, f64, f64); 3] = [(0.3, 0.4, 0.3, -0.4), (0.25, 0.0, 0.35, 0.0), (1.5, 0.2, -0.7, 0.1)];

fn reference() -> HypParams<f64> {
    HypParams::from_parts(0.3, 0.4, 0.3, -0.4).unwrap()
}

/// `ρ₁` and `ρ₂` for every site (pair) of `sites`, by brute force.
fn brute_force_tables(dist: &ConfigDistribution<HalfInt, f64>, sites: &[HalfInt]) -> (Vec<f64>, Vec<f64>) {
    let m = sites.len();
    let mut r1 = vec![0.0; m];
    let mut r2 = vec![0.0; m * m];
    for (c, p) in dist.iter() {
        let idx: Vec<usize> = c.points().iter().map(|x| sites.binary_search(x).expect("point in window")).collect();
        for (a, &i) in idx.iter().enumerate() {
            r1[i] += p;
            for &j in &idx[..a] {
                r2[i * m + j] += p;
                r2[j * m + i] += p;
            }
        }
    }
    (r1, r2)
}

fn max_discrepancy(k: &DiscreteKernel<f64>, dist: &ConfigDistribution<HalfInt, f64>) -> f64 {
    let sites = k.sites().to_vec();
    let m = sites.len();
    let (r1, r2) = brute_force_tables(dist, &sites);
    let mut worst = 0.0f64;
    for i in 0..m {
        worst = worst.max((det_rho(k, &[sites[i]]).unwrap() - r1[i]).abs());
        for j in 0..m {
            worst = worst.max((det_rho(k, &[sites[i], sites[j]]).unwrap() - r2[i * m + j]).abs());
        }
    }
    worst
}

#[test]
fn acceptance_01_determinantal_identity() {
    let t = Instant::now();
    let mut worst = 0.0f64;
    for &(a, b, c, d) in &PARAM_SET {
        let p: ZWParams<f64> = ZWParams::from_parts(a, b, c, d).unwrap();
        for n in [2usize, 3] {
            let dist = lattice_distribution(&enumerate_distribution(n, &p, 20).unwrap()).unwrap();
            let k = kernel_cd(&build_op_system(n, &p, 20).unwrap()).unwrap();
            worst = worst.max(max_discrepancy(&k, &dist));
        }
    }
    let pass = worst <= 1e-8;
    report(1, "determinantal identity", pass, &format!("max |det_rho - brute_force_rho| = {worst:.2e} (tol 1e-8)"), t);
    assert!(pass);
}

fn random_signatures(count: usize, seed: u64) -> Vec<Signature> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|_| {
            let n = rng.random_range(1..=8usize);
            let mut parts: Vec<i64> = (0..n).map(|_| rng.random_range(-10..=10)).collect();
            parts.sort_unstable_by(|x, y| y.cmp(x));
            Signature::new(parts).unwrap()
        })
        .collect()
}

#[test]
fn acceptance_02_frobenius_identity() {
    let t = Instant::now();
    let sigs = random_signatures(10_000, 2024);
    let bad = sigs.iter().filter(|s| !check_lemma71(s, s.len()).unwrap()).count();
    report(2, "particles/holes lemma", bad == 0, &format!("{} signatures, {bad} failures", sigs.len()), t);
    assert_eq!(bad, 0);
}

#[test]
fn acceptance_03_scaling_consistency() {
    let t = Instant::now();
    let sigs = random_signatures(10_000, 2024);
    let bad = sigs.iter().filter(|s| !check_scaling_consistency(s, s.len()).unwrap()).count();
    report(3, "scaling consistency", bad == 0, &format!("{} signatures, {bad} mismatches (exact rationals)", sigs.len()), t);
    assert_eq!(bad, 0);
}

#[test]
fn acceptance_04_particle_hole_kernel() {
    let t = Instant::now();
    let mut worst = 0.0f64;
    let mut symmetric = true;
    for &(a, b, c, d) in &PARAM_SET {
        let p: ZWParams<f64> = ZWParams::from_parts(a, b, c, d).unwrap();
        for n in [2usize, 3] {
            let enumerated = enumerate_distribution(n, &p, 20).unwrap();
            let dist = particle_hole_distribution(&enumerated).unwrap();
            let kt = kernel_particle_hole(&kernel_cd(&build_op_system(n, &p, 20).unwrap()).unwrap(), n).unwrap();
            worst = worst.max(max_discrepancy(&kt, &dist));
            let split = LatticeSplit::new(n).unwrap();
            let (s, m) = (kt.sites(), kt.matrix());
            for i in 0..s.len() {
                for j in 0..s.len() {
                    let sign = if split.is_inner(s[i]) == split.is_inner(s[j]) { 1.0 } else { -1.0 };
                    symmetric &= m[(i, j)] == sign * m[(j, i)];
                }
            }
        }
    }
    let pass = worst <= 1e-8 && symmetric;
    report(
        4,
        "particle/hole kernel",
        pass,
        &format!("max discrepancy {worst:.2e} (tol 1e-8), indefinite symmetry exact: {symmetric}"),
        t,
    );
    assert!(pass);
}

#[test]
fn acceptance_05_kernel_convergence() {
    let t = Instant::now();
    let hp = reference();
    let cal = calibrate(&hp, 1.0, 128).unwrap();
    let hp = hp.with_c_pq(cal.c_pq);
    let points = [(0.8, 0.8), (0.8, 1.4), (2.0, 2.5)];
    let mut errs = Vec::new();
    for n in [16usize, 32, 64] {
        let k = ScalingLimitKernel::build(&hp, n, ScalingConfig::default()).unwrap();
        let mut worst = 0.0f64;
        for &(x, y) in &points {
            let (s, u) = (k.site_for(x), k.site_for(y));
            let (xe, ye) = (k.continuum_of(s), k.continuum_of(u));
            let kk = |a: HalfInt, b: HalfInt| k.eval_sites(a, b).unwrap();
            let kh = |a: f64, b: f64| kernel_hyp_block(a, b, &hp).unwrap();
            // coincident points: compare the one-point function
            let (lat, ana) = if s == u {
                (kk(s, s), kh(xe, xe))
            } else {
                (kk(s, s) * kk(u, u) - kk(s, u) * kk(u, s), kh(xe, xe) * kh(ye, ye) - kh(xe, ye) * kh(ye, xe))
            };
            worst = worst.max(((lat - ana) / ana).abs());
        }
        errs.push(worst);
    }
    let decreasing = errs.windows(2).all(|e| e[1] < e[0]);
    let pass = decreasing && errs[2] <= 0.03;
    report(
        5,
        "kernel convergence",
        pass,
        &format!(
            "relative errors N=16,32,64: {:.3e}, {:.3e}, {:.3e} (final tol 3e-2, c_PQ = {:.6})",
            errs[0], errs[1], errs[2], cal.c_pq
        ),
        t,
    );
    assert!(pass);
}

#[test]
fn acceptance_06_gap_law() {
    let t = Instant::now();
    let hp = reference();
    let cal = calibrate(&hp, 1.0, 128).unwrap();
    let hp = hp.with_c_pq(cal.c_pq);
    let quad = QuadratureScheme::new(24, 1e-5).unwrap();
    let cdf = |u: f64| gap_cdf_alpha1(&hp, u, &quad).map(|v| v.det);
    let grid: Vec<f64> = (0..=32).map(|i| 1.0 / 16.0 * 2f64.powf(i as f64 / 4.0)).collect();
    let mut reports = Vec::new();
    for n in [16usize, 64] {
        let cfg = MhConfig { burn_in: 2_000 * n, thinning: 50 * n, chains: 4, table_radius: 4096 };
        let run = sample_mh(n, &hp.zw(), 10_000, 7 + n as u64, &cfg).unwrap();
        let alphas = alpha1_samples(&run.samples, n).unwrap();
        reports.push(ks_report(&alphas, cdf, &grid, 1.0 / 16.0).unwrap());
    }
    let (r16, r64) = (&reports[0], &reports[1]);
    let pass = r64.ks_full <= 0.05 && r64.ks_full < r16.ks_full;
    report(
        6,
        "gap law of alpha1",
        pass,
        &format!(
            "KS N=16: {:.4}, N=64: {:.4} (tol 0.05, decreasing: {}); empirical P(alpha1=0) N=16: {:.3}, N=64: {:.3}; \
             KS on u >= 1/16: N=16 {:.4}, N=64 {:.4}",
            r16.ks_full,
            r64.ks_full,
            r64.ks_full < r16.ks_full,
            r16.atom_at_zero,
            r64.atom_at_zero,
            r16.ks_resolved,
            r64.ks_resolved
        ),
        t,
    );
    assert!(pass);
}

#[test]
fn acceptance_07_painleve() {
    let t = Instant::now();
    let hp = reference();
    let cal = calibrate(&hp, 1.0, 128).unwrap();
    let hp = hp.with_c_pq(cal.c_pq);
    let grid: Vec<f64> = (0..21).map(|i| 0.6 + 0.12 * i as f64).collect();
    let worst = |n: usize| {
        let q = QuadratureScheme::new(n, 1e-6).unwrap();
        grid.iter().map(|&s| painleve6_residual(&hp, s, &q).unwrap().residual).fold(0.0f64, f64::max)
    };
    let (coarse, fine) = (worst(20), worst(40));
    let pass = fine <= 1e-2 && fine < coarse;
    report(
        7,
        "Painleve VI sigma-form",
        pass,
        &format!("max normalized residual n=20: {coarse:.2e}, n=40: {fine:.2e} (tol 1e-2, 21 points on [0.6, 3.0])"),
        t,
    );
    assert!(pass);
}

#[test]
fn acceptance_08_special_functions() {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut refl = 0.0f64;
    let mut rec = 0.0f64;
    let mut rec_im = 0.0f64;
    let mut count = 0;
    while count < 1000 {
        let z: Complex<f64> = Complex::new(rng.random_range(-20.0..20.0), rng.random_range(-20.0..20.0));
        if (z.re - z.re.round()).abs() < 0.05 && z.im.abs() < 0.05 {
            continue;
        }
        count += 1;
        let one = Complex::new(1.0, 0.0);
        let lhs = (log_gamma(z).unwrap() + log_gamma(one - z).unwrap()).exp();
        let rhs = Complex::new(std::f64::consts::PI, 0.0) / sin_pi(z);
        refl = refl.max((lhs - rhs).norm() / rhs.norm());
        let d = log_gamma(z + one).unwrap() - log_gamma(z).unwrap() - z.ln();
        rec = rec.max(d.re.abs());
        let k = d.im / (2.0 * std::f64::consts::PI);
        rec_im = rec_im.max((k - k.round()).abs());
    }
    let mut pfaff = 0.0f64;
    let mut series_dev = 0.0f64;
    let mut deriv = 0.0f64;
    for _ in 0..1000 {
        let a = Complex::new(rng.random_range(-3.0..3.0), rng.random_range(-2.0..2.0));
        let b = Complex::new(rng.random_range(-3.0..3.0), rng.random_range(-2.0..2.0));
        let c = Complex::new(rng.random_range(0.5..5.0), rng.random_range(-1.0..1.0));
        let zeta: f64 = -rng.random_range(0.0..50.0);
        let tt = zeta / (zeta - 1.0);
        let f = gauss_2f1(a, b, c, zeta).unwrap();
        let pa = (-a * (1.0 - zeta).ln()).exp() * gauss_2f1_unit(a, c - b, c, tt).unwrap();
        let pb = (-b * (1.0 - zeta).ln()).exp() * gauss_2f1_unit(c - a, b, c, tt).unwrap();
        let scale = f.norm().max(1e-300);
        pfaff = pfaff.max((f - pa).norm() / scale).max((f - pb).norm() / scale);
        // direct Taylor series where it converges quickly
        let small = zeta / 100.0;
        let direct = gauss_2f1_unit_series(a, b, c, small);
        let g = gauss_2f1(a, b, c, small).unwrap();
        series_dev = series_dev.max((g - direct).norm() / direct.norm());
        let h = 1e-3 * (1.0f64).max(zeta.abs());
        let zc = zeta.min(-2.0 * h);
        let fd = (gauss_2f1(a, b, c, zc - 2.0 * h).unwrap() - gauss_2f1(a, b, c, zc - h).unwrap() * 8.0
            + gauss_2f1(a, b, c, zc + h).unwrap() * 8.0
            - gauss_2f1(a, b, c, zc + 2.0 * h).unwrap())
            / (12.0 * h);
        let dv = deriv_2f1(a, b, c, zc).unwrap();
        deriv = deriv.max((fd - dv).norm() / dv.norm().max(1e-3));
    }
    let pass = refl <= 1e-11 && rec <= 1e-12 && rec_im <= 1e-9 && pfaff <= 1e-10 && series_dev <= 1e-10 && deriv <= 1e-7;
    report(
        8,
        "special functions",
        pass,
        &format!(
            "reflection {refl:.1e} (1e-11), recurrence re {rec:.1e} (1e-12) im-branch {rec_im:.1e}, \
             Pfaff {pfaff:.1e} (1e-10), series {series_dev:.1e}, derivative {deriv:.1e} (1e-7)"
        ),
        t,
    );
    assert!(pass);
}

/// Plain Taylor series of `₂F₁` for `|x| <= 1/2`, summed in order.
fn gauss_2f1_unit_series(a: Complex<f64>, b: Complex<f64>, c: Complex<f64>, x: f64) -> Complex<f64> {
    let mut sum = Complex::new(1.0, 0.0);
    let mut term = sum;
    for k in 0..400 {
        let kf = k as f64;
        term = term * (a + kf) * (b + kf) / ((c + kf) * (kf + 1.0)) * x;
        sum += term;
    }
    sum
}

#[test]
fn acceptance_09_limit_density() {
    let t = Instant::now();
    let p: ZWParams<f64> = ZWParams::from_parts(0.3, 0.4, 0.3, -0.4).unwrap();
    let fr: Vec<f64> = [4usize, 8, 16, 32]
        .iter()
        .map(|&n| density_profile(&build_op_system(n, &p, 16 * n as i64).unwrap()).inner_fraction)
        .collect();
    let increasing = fr.windows(2).all(|w| w[1] > w[0]);
    let pass = increasing && fr[3] >= 0.95;
    report(
        9,
        "limit density",
        pass,
        &format!("inner fraction N=4,8,16,32: {:.4}, {:.4}, {:.4}, {:.4} (N=32 tol >= 0.95)", fr[0], fr[1], fr[2], fr[3]),
        t,
    );
    assert!(pass);
}

#[test]
fn acceptance_10_q_of_z() {
    let t = Instant::now();
    let mut worst = 0.0f64;
    for i in 0..10 {
        for j in 0..10 {
            let z = Complex::new(0.05 + 0.1 * i as f64 - 2.0 + i as f64 % 3.0, -2.7 + 0.6 * j as f64);
            worst = worst.max(q_values(z).unwrap().rel_diff);
        }
    }
    let pass = worst <= 1e-9;
    report(10, "q(z) dual expressions", pass, &format!("max relative difference {worst:.2e} on 100 points (tol 1e-9)"), t);
    assert!(pass);
}
