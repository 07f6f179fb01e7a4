use zwdpp::askey_lesky::{build_op_system, kernel_cd};
use zwdpp::combinatorics::HalfInt;
use zwdpp::dpp::{
    brute_force_gap, discrete_gap, empirical_rho, lattice_distribution, poisson_sample_sites,
};
use zwdpp::zmeasure::{enumerate_distribution, ZWParams};

#[test]
fn gap_probabilities_match_enumeration() {
    let p: ZWParams<f64> = ZWParams::from_parts(0.3, 0.4, 0.3, -0.4).unwrap();
    let dist = lattice_distribution(&enumerate_distribution(2, &p, 20).unwrap()).unwrap();
    let k = kernel_cd(&build_op_system(2, &p, 20).unwrap()).unwrap();
    for subset in [vec![1, 3], vec![-1, 1, 3, 5], vec![7, 9, 11]] {
        let s: Vec<HalfInt> = subset.into_iter().map(HalfInt::from_twice).collect();
        let d: f64 = discrete_gap(&k, &s).unwrap();
        assert!((d - brute_force_gap(&dist, &s)).abs() < 1e-9);
    }
}

#[test]
fn lenard_linear_statistics() {
    // E Σ f(x) = Σ f(x) K(x, x)
    let p: ZWParams<f64> = ZWParams::from_parts(1.5, 0.2, -0.7, 0.1).unwrap();
    let dist = lattice_distribution(&enumerate_distribution(3, &p, 20).unwrap()).unwrap();
    let k = kernel_cd(&build_op_system(3, &p, 20).unwrap()).unwrap();
    let f = |x: &HalfInt| (x.to_real::<f64>() * 0.3).cos();
    let lhs = dist.expect_linear(f);
    let rhs: f64 = k.sites().iter().zip(k.diagonal()).map(|(x, d)| f(x) * d).sum();
    assert!((lhs - rhs).abs() < 1e-10);
}

#[test]
fn poisson_correlations_factorize() {
    let sites: Vec<HalfInt> = (0..4).map(|i| HalfInt::from_twice(2 * i + 1)).collect();
    let intensity = [0.3, 0.5, 0.2, 0.4];
    let samples: Vec<_> = (0..40_000).map(|s| poisson_sample_sites(&sites, &intensity, s).unwrap()).collect();
    // occupation probabilities 1 - e^{-m}, independent across sites
    let occ = |m: f64| 1.0 - (-m).exp();
    let (r1, e1) = empirical_rho(&samples, &sites[1..2]);
    assert!((r1 - occ(0.5)).abs() < 5.0 * e1);
    let (r2, e2) = empirical_rho(&samples, &[sites[0], sites[3]]);
    assert!((r2 - occ(0.3) * occ(0.4)).abs() < 5.0 * e2);
}
