use thiserror::Error;

/// Errors reported by the numerical and combinatorial layers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("log-gamma pole at nonpositive integer {0}")]
    Pole(f64),
    #[error("argument outside the safe range: {0}")]
    Overflow(String),
    #[error("hypergeometric parameter c = {0} is a nonpositive integer")]
    ParameterPole(f64),
    #[error("series did not converge: {0}")]
    NonConvergence(String),
    #[error("argument outside the supported domain: {0}")]
    Domain(String),
    #[error("inadmissible parameters: {0}")]
    InvalidParams(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("loss of orthogonality: defect {defect:e} exceeds {tol:e}")]
    LossOfOrthogonality { defect: f64, tol: f64 },
    #[error("quadrature not converged: |det_n - det_2n| = {diff:e} > {tol:e}")]
    QuadratureNotConverged { diff: f64, tol: f64 },
    #[error("derivative unstable under step halving: relative change {rel:e} > {tol:e}")]
    DerivativeUnstable { rel: f64, tol: f64 },
    #[error("calibration unstable: drift {drift:e} between N and 2N exceeds {tol:e}")]
    CalibrationUnstable { drift: f64, tol: f64 },
    #[error("closed form and lattice sum disagree: relative difference {rel:e}")]
    Disagreement { rel: f64 },
    #[error("point {0} lies outside the kernel window")]
    OutsideWindow(String),
}

pub type Result<T> = std::result::Result<T, Error>;
