use num_complex::Complex;

use zwdpp::hypkernel::{
    calibrate, kernel_hyp_block, lattice_sum, q_of_z, sine_kernel, HypParams, ScalingConfig, ScalingLimitKernel,
};

fn reference() -> HypParams<f64> {
    HypParams::from_parts(0.3, 0.4, 0.3, -0.4).unwrap()
}

#[test]
fn hyp_kernel_is_symmetric_and_positive_on_diagonal() {
    let hp = reference().with_c_pq(0.047);
    for &(x, y) in &[(0.7, 1.3), (0.55, 4.0), (2.0, 9.0)] {
        let (a, b) = (kernel_hyp_block(x, y, &hp).unwrap(), kernel_hyp_block(y, x, &hp).unwrap());
        assert!((a - b).abs() <= 1e-12 * a.abs().max(1e-300));
        assert!(kernel_hyp_block(x, x, &hp).unwrap() > 0.0);
    }
}

#[test]
fn diagonal_is_continuous() {
    let hp = reference().with_c_pq(0.047);
    let d = kernel_hyp_block(1.1, 1.1, &hp).unwrap();
    // symmetric average of off-diagonal values agrees with the diagonal formula to O(h²)
    let h = 1e-4;
    let off = 0.5 * (kernel_hyp_block(1.1 - h, 1.1 + h, &hp).unwrap() + kernel_hyp_block(1.1 + h, 1.1 - h, &hp).unwrap());
    assert!((d - off).abs() < 1e-6 * d, "{d} vs {off}");
}

#[test]
fn scaled_lattice_kernel_approaches_calibrated_limit() {
    let hp = reference();
    let cal = calibrate(&hp, 1.0, 64).unwrap();
    let hp = hp.with_c_pq(cal.c_pq);
    let k = ScalingLimitKernel::build(&hp, 64, ScalingConfig::default()).unwrap();
    let s = k.site_for(1.7);
    let x = k.continuum_of(s);
    let lat = k.eval_sites(s, s).unwrap();
    let ana = kernel_hyp_block(x, x, &hp).unwrap();
    assert!(((lat - ana) / ana).abs() < 0.02);
}

#[test]
fn sine_kernel_values() {
    assert_eq!(sine_kernel(1.0f64, 1.0), 1.0);
    assert!(sine_kernel(0.0f64, 1.0).abs() < 1e-15);
    assert!((sine_kernel(0.0f64, 0.5) - 2.0 / std::f64::consts::PI).abs() < 1e-15);
}

#[test]
fn q_function_matches_its_series_on_the_real_axis() {
    // Σ |x - n|^{-2} = π² / sin²(πx)
    let x = 0.3f64;
    let want = (std::f64::consts::PI / (std::f64::consts::PI * x).sin()).powi(2);
    assert!((lattice_sum(Complex::new(x, 0.0)) - want).abs() < 1e-9 * want);
    let q = q_of_z(Complex::new(0.4, 1.5)).unwrap();
    assert!(q > 0.0 && q < 1.0);
}
