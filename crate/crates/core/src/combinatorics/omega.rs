use num_rational::Rational64;
use num_traits::{Num, ToPrimitive};
use serde::Serialize;

use super::signature::{split_signature, Signature, YoungDiagram};
use crate::error::{Error, Result};
use crate::scalar::Real;

/// Finite point configuration, stored sorted ascending. Repeated points are
/// kept, so this is a multiset.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct Configuration<P> {
    points: Vec<P>,
}

impl<P: PartialOrd + Clone> Configuration<P> {
    pub fn new(mut points: Vec<P>) -> Self {
        points.sort_by(|a, b| a.partial_cmp(b).expect("configuration points must be comparable"));
        Self { points }
    }

    pub fn empty() -> Self {
        Self { points: Vec::new() }
    }

    pub fn points(&self) -> &[P] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn contains(&self, p: &P) -> bool {
        self.points.iter().any(|q| q == p)
    }

    /// `N_A = |A ∩ X|` for a membership predicate.
    pub fn count_where(&self, mut pred: impl FnMut(&P) -> bool) -> usize {
        self.points.iter().filter(|p| pred(p)).count()
    }

    pub fn map<Q: PartialOrd + Clone>(&self, f: impl FnMut(&P) -> Q) -> Configuration<Q> {
        Configuration::new(self.points.iter().map(f).collect())
    }
}

/// A point `ω = (α⁺, β⁺, α⁻, β⁻, δ⁺, δ⁻)`. Sequences are finite lists,
/// implicitly padded with zeros.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct OmegaPoint<S> {
    pub alpha_plus: Vec<S>,
    pub beta_plus: Vec<S>,
    pub alpha_minus: Vec<S>,
    pub beta_minus: Vec<S>,
    pub delta_plus: S,
    pub delta_minus: S,
}

impl<S: Clone + PartialOrd + Num> OmegaPoint<S> {
    pub fn zero() -> Self {
        Self {
            alpha_plus: vec![],
            beta_plus: vec![],
            alpha_minus: vec![],
            beta_minus: vec![],
            delta_plus: S::zero(),
            delta_minus: S::zero(),
        }
    }

    /// Checks monotonicity, nonnegativity, `β⁺₁ + β⁻₁ <= 1` and `Σ(α± + β±) <= δ±`.
    pub fn validate(&self) -> Result<()> {
        for (name, seq) in [
            ("alpha_plus", &self.alpha_plus),
            ("beta_plus", &self.beta_plus),
            ("alpha_minus", &self.alpha_minus),
            ("beta_minus", &self.beta_minus),
        ] {
            if seq.iter().any(|v| *v < S::zero()) || seq.windows(2).any(|p| p[0] < p[1]) {
                return Err(Error::InvalidInput(format!("{name} must be weakly decreasing and nonnegative")));
            }
        }
        let first = |v: &Vec<S>| v.first().cloned().unwrap_or_else(S::zero);
        if first(&self.beta_plus) + first(&self.beta_minus) > S::one() {
            return Err(Error::InvalidInput("beta_plus[0] + beta_minus[0] exceeds 1".into()));
        }
        let sum = |a: &Vec<S>, b: &Vec<S>| a.iter().chain(b).fold(S::zero(), |acc, v| acc + v.clone());
        if sum(&self.alpha_plus, &self.beta_plus) > self.delta_plus
            || sum(&self.alpha_minus, &self.beta_minus) > self.delta_minus
        {
            return Err(Error::InvalidInput("coordinate sums exceed delta".into()));
        }
        Ok(())
    }
}

impl<S: Clone + ToPrimitive> OmegaPoint<S> {
    /// Floating point view of the coordinates.
    pub fn to_real<T: Real>(&self) -> OmegaPoint<T> {
        let cv = |v: &S| T::lit(v.to_f64().unwrap_or(f64::NAN));
        let cs = |s: &Vec<S>| s.iter().map(cv).collect();
        OmegaPoint {
            alpha_plus: cs(&self.alpha_plus),
            beta_plus: cs(&self.beta_plus),
            alpha_minus: cs(&self.alpha_minus),
            beta_minus: cs(&self.beta_minus),
            delta_plus: cv(&self.delta_plus),
            delta_minus: cv(&self.delta_minus),
        }
    }
}

/// The embedding `ι_N`: Frobenius coordinates of `λ±` divided by `N`, `δ± = |λ±|/N`.
pub fn embed_iota(sig: &Signature, n: usize) -> Result<OmegaPoint<Rational64>> {
    if sig.len() != n || n == 0 {
        return Err(Error::InvalidInput(format!("signature of length {} used with N = {n}", sig.len())));
    }
    let nn = n as i64;
    let (plus, minus) = split_signature(sig);
    let side = |mu: &YoungDiagram| {
        let f = mu.frobenius();
        let scale = |v: &[super::HalfInt]| v.iter().map(|h| Rational64::new(h.twice(), 2 * nn)).collect::<Vec<_>>();
        (scale(&f.a), scale(&f.b), Rational64::new(mu.size() as i64, nn))
    };
    let (ap, bp, dp) = side(&plus);
    let (am, bm, dm) = side(&minus);
    Ok(OmegaPoint { alpha_plus: ap, beta_plus: bp, alpha_minus: am, beta_minus: bm, delta_plus: dp, delta_minus: dm })
}

/// Projection `ω ↦ X = {α⁺+½} ⊔ {½-β⁺} ⊔ {-α⁻-½} ⊔ {-½+β⁻}`, omitting zero
/// coordinates and unit `β`s.
pub fn omega_to_configuration<S: Clone + PartialOrd + Num>(omega: &OmegaPoint<S>) -> Configuration<S> {
    let one = S::one();
    let half = one.clone() / (one.clone() + one.clone());
    let zero = S::zero();
    let mut pts = Vec::new();
    for a in omega.alpha_plus.iter().filter(|v| **v != zero) {
        pts.push(a.clone() + half.clone());
    }
    for b in omega.beta_plus.iter().filter(|v| **v != zero && **v != one) {
        pts.push(half.clone() - b.clone());
    }
    for a in omega.alpha_minus.iter().filter(|v| **v != zero) {
        pts.push(zero.clone() - a.clone() - half.clone());
    }
    for b in omega.beta_minus.iter().filter(|v| **v != zero && **v != one) {
        pts.push(b.clone() - half.clone());
    }
    Configuration::new(pts)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn embed_examples() {
        let z = embed_iota(&Signature::zero(4), 4).unwrap();
        assert_eq!(z, OmegaPoint::zero());
        let w = embed_iota(&Signature::new(vec![3, 3, 1]).unwrap(), 3).unwrap();
        assert_eq!(w.alpha_plus, vec![r(5, 6), r(1, 2)]);
        assert_eq!(w.beta_plus, vec![r(5, 6), r(1, 6)]);
        assert_eq!(w.delta_plus, r(7, 3));
        assert!(w.alpha_minus.is_empty() && w.beta_minus.is_empty());
        assert_eq!(w.delta_minus, r(0, 1));
        w.validate().unwrap();
        let v = embed_iota(&Signature::new(vec![1, -1]).unwrap(), 2).unwrap();
        assert_eq!(v.alpha_plus, vec![r(1, 4)]);
        assert_eq!(v.beta_plus, vec![r(1, 4)]);
        assert_eq!(v.delta_plus, r(1, 2));
        assert_eq!(v.alpha_minus, vec![r(1, 4)]);
        assert_eq!(v.beta_minus, vec![r(1, 4)]);
        assert_eq!(v.delta_minus, r(1, 2));
        assert!(embed_iota(&Signature::zero(2), 3).is_err());
    }

    #[test]
    fn projection_examples() {
        assert!(omega_to_configuration(&OmegaPoint::<Rational64>::zero()).is_empty());
        let mut w = OmegaPoint::<Rational64>::zero();
        w.beta_plus = vec![r(1, 1)];
        w.delta_plus = r(1, 1);
        assert!(omega_to_configuration(&w).is_empty());
        let v = embed_iota(&Signature::new(vec![1, -1]).unwrap(), 2).unwrap();
        let x = omega_to_configuration(&v);
        assert_eq!(x.points(), &[r(-3, 4), r(-1, 4), r(1, 4), r(3, 4)]);
    }

    #[test]
    fn float_view_and_validation() {
        let w = embed_iota(&Signature::new(vec![3, 3, 1]).unwrap(), 3).unwrap();
        let f = w.to_real::<f64>();
        assert!((f.alpha_plus[0] - 5.0 / 6.0).abs() < 1e-15);
        let mut bad = OmegaPoint::<f64>::zero();
        bad.beta_plus = vec![0.7];
        bad.beta_minus = vec![0.6];
        bad.delta_plus = 1.0;
        bad.delta_minus = 1.0;
        assert!(bad.validate().is_err());
        let x = omega_to_configuration(&f);
        assert_eq!(x.len(), 4);
    }
}
