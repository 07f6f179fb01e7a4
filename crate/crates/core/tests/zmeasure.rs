use zwdpp::combinatorics::Signature;
use zwdpp::zmeasure::{
    enumerate_distribution, normalization, sample_exact, sample_mh, window_log_mass, MhConfig, ZWParams,
};

fn reference() -> ZWParams<f64> {
    ZWParams::from_parts(0.3, 0.4, 0.3, -0.4).unwrap()
}

#[test]
fn normalization_stable_under_window_doubling() {
    let p: ZWParams<f64> = ZWParams::from_parts(1.2, 0.3, 0.9, -0.3).unwrap();
    let norm = normalization(3, &p, 1e-6).unwrap();
    let (doubled, _) = window_log_mass(&p, 3, 2 * norm.window).unwrap();
    assert!(((doubled - norm.log_const_inv) / norm.log_const_inv.abs().max(1.0)).abs() < 1e-5);
}

#[test]
fn enumeration_matches_heine_mass() {
    let p = reference();
    let window = 25;
    let dist = enumerate_distribution(3, &p, window).unwrap();
    let (log_mass, _) = window_log_mass(&p, 3, window).unwrap();
    assert!((dist.log_window_mass - log_mass).abs() < 1e-10);
    assert!((dist.total() - 1.0).abs() < 1e-12);
}

#[test]
fn swapping_parameters_dualizes() {
    let p: ZWParams<f64> = ZWParams::from_parts(0.6, 0.2, 0.9, -0.1).unwrap();
    let a = enumerate_distribution(2, &p, 15).unwrap();
    let b = enumerate_distribution(2, &p.swapped(), 15).unwrap();
    for (sig, pr) in a.iter() {
        assert!((b.prob_of(&sig.dual()) - pr).abs() < 1e-12);
    }
}

#[test]
fn exact_sampler_chi_square() {
    let dist = enumerate_distribution(2, &reference(), 12).unwrap();
    let count = 40_000;
    let samples = sample_exact(&dist, count, 11);
    let mut chi2 = 0.0;
    let mut cells = 0;
    let mut rest_obs = 0.0;
    let mut rest_exp = 0.0;
    for (sig, p) in dist.iter() {
        let obs = samples.iter().filter(|s| *s == sig).count() as f64;
        let exp = p * count as f64;
        if exp >= 10.0 {
            chi2 += (obs - exp).powi(2) / exp;
            cells += 1;
        } else {
            rest_obs += obs;
            rest_exp += exp;
        }
    }
    chi2 += (rest_obs - rest_exp).powi(2) / rest_exp.max(1.0);
    // df = cells; mean df, sd sqrt(2 df): 5 sd is a generous bound
    let df = cells as f64;
    assert!(chi2 < df + 5.0 * (2.0 * df).sqrt(), "chi2 {chi2} on {cells} cells");
}

#[test]
fn mh_matches_exact_distribution() {
    let p = reference();
    let dist = enumerate_distribution(2, &p, 30).unwrap();
    let cfg = MhConfig { burn_in: 5_000, thinning: 20, chains: 2, table_radius: 4096 };
    let run = sample_mh(2, &p, 20_000, 5, &cfg).unwrap();
    assert!(!run.non_ergodic);
    let mut tv = 0.0;
    for (sig, pr) in dist.iter() {
        let emp = run.samples.iter().filter(|s| *s == sig).count() as f64 / run.samples.len() as f64;
        tv += (emp - pr).abs();
    }
    assert!(tv / 2.0 < 0.02, "total variation {}", tv / 2.0);
}

#[test]
fn mh_is_deterministic_under_seed() {
    let p = reference();
    let cfg = MhConfig { burn_in: 100, thinning: 3, chains: 3, table_radius: 64 };
    let a = sample_mh(3, &p, 50, 9, &cfg).unwrap();
    let b = sample_mh(3, &p, 50, 9, &cfg).unwrap();
    assert_eq!(a.samples, b.samples);
    assert!(a.samples.iter().all(|s: &Signature| s.len() == 3));
}
