use zwdpp::fredholm::{fredholm_det, gap_cdf_alpha1, GapCurve, QuadratureScheme};
use zwdpp::hypkernel::{calibrate, HypKernel, HypParams};

fn calibrated() -> HypParams<f64> {
    let hp = HypParams::from_parts(0.3, 0.4, 0.3, -0.4).unwrap();
    let c = calibrate(&hp, 1.0, 64).unwrap();
    hp.with_c_pq(c.c_pq)
}

#[test]
fn trace_series_at_large_s() {
    // for small kernels ln det(1 - K) = -tr K - tr K²/2 - …; K decays so the first term dominates
    let hp = calibrated();
    let k = HypKernel::new(hp.clone());
    let s = 30.0;
    let q = QuadratureScheme::new(40, 1e-8).unwrap();
    let v = fredholm_det(&k, s, &q).unwrap();
    let (xs, ws) = QuadratureScheme::<f64>::new(80, 1e-8).unwrap().half_line(s).unwrap();
    let trace: f64 = xs.iter().zip(&ws).map(|(&x, &w)| w * zwdpp::hypkernel::kernel_hyp_block(x, x, &hp).unwrap()).sum();
    assert!(trace > 0.0 && trace < 0.05);
    assert!(((-v.log_det) - trace).abs() < 0.05 * trace, "log det {} trace {}", v.log_det, trace);
}

#[test]
fn gap_curve_is_monotone_and_bounded() {
    let hp = calibrated();
    let grid: Vec<f64> = (0..10).map(|i| 0.6 + 0.4 * i as f64).collect();
    let q = QuadratureScheme::new(20, 1e-5).unwrap();
    let curve = GapCurve::compute(&hp, &grid, &q, false).unwrap();
    assert!(curve.is_monotone(1e-8));
    assert!(curve.points.iter().all(|p| p.det > 0.0 && p.det <= 1.0));
    assert!(curve.to_csv().starts_with("s,det,sigma,residual,error_estimate"));
}

#[test]
fn gap_cdf_requires_calibration() {
    let hp = HypParams::from_parts(0.3, 0.4, 0.3, -0.4).unwrap();
    let q = QuadratureScheme::new(10, 1e-5).unwrap();
    assert!(gap_cdf_alpha1(&hp, 0.5, &q).is_err());
    assert!(gap_cdf_alpha1(&calibrated(), 0.0, &q).is_err());
}
