//! Generators of quasi-linear means.
//!
//! Only the two classes compatible with additivity on independent products
//! are representable: the linear class `-c x` and the exponential class
//! `(2^{kappa x} - 1) / gamma`. Both carry an additive shift of the argument.
//! The mean `g^{-1}(sum_k w_k g(x_k))` is unchanged by affine maps of `g`,
//! so neither the shift nor the scale constants change the result.

use std::f64::consts::LN_2;

use serde::{Deserialize, Serialize};

use crate::distributions::Distribution;
use crate::error::{Error, Result};
use crate::numeric::CompensatedSum;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GeneratorKind {
    Linear { c: f64 },
    Exponential { kappa: f64, gamma: f64 },
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GeneratorSpec {
    kind: GeneratorKind,
    shift: f64,
}

impl GeneratorSpec {
    pub fn new(kind: GeneratorKind, shift: f64) -> Result<Self> {
        let ok = match kind {
            GeneratorKind::Linear { c } => c != 0.0 && c.is_finite(),
            GeneratorKind::Exponential { kappa, gamma } => {
                kappa != 0.0 && gamma != 0.0 && kappa.is_finite() && gamma.is_finite()
            }
        };
        if !ok || !shift.is_finite() {
            return Err(Error::Parameter(format!(
                "generator constants must be finite and nonzero: {kind:?}, shift {shift}"
            )));
        }
        Ok(Self { kind, shift })
    }

    pub fn linear(c: f64) -> Result<Self> {
        Self::new(GeneratorKind::Linear { c }, 0.0)
    }

    pub fn exponential(kappa: f64, gamma: f64) -> Result<Self> {
        Self::new(GeneratorKind::Exponential { kappa, gamma }, 0.0)
    }

    pub fn with_shift(self, shift: f64) -> Result<Self> {
        Self::new(self.kind, shift)
    }

    pub fn kind(&self) -> GeneratorKind {
        self.kind
    }

    pub fn shift(&self) -> f64 {
        self.shift
    }

    pub fn eval(&self, x: f64) -> Result<f64> {
        let arg = x + self.shift;
        let value = match self.kind {
            GeneratorKind::Linear { c } => -c * arg,
            GeneratorKind::Exponential { kappa, gamma } => (kappa * arg * LN_2).exp_m1() / gamma,
        };
        if value.is_finite() {
            Ok(value)
        } else {
            Err(Error::Overflow(format!("generator {:?} at {x}", self.kind)))
        }
    }

    pub fn inv(&self, y: f64) -> Result<f64> {
        let arg = match self.kind {
            GeneratorKind::Linear { c } => -y / c,
            GeneratorKind::Exponential { kappa, gamma } => {
                let gy = gamma * y;
                if !(gy + 1.0 > 0.0) {
                    return Err(Error::Domain(format!(
                        "generator inverse at {y} needs gamma*y + 1 > 0 (gamma = {gamma})"
                    )));
                }
                gy.ln_1p() / (kappa * LN_2)
            }
        };
        Ok(arg - self.shift)
    }

    /// The weighted quasi-linear mean of `values`.
    ///
    /// Indices with zero weight are skipped. The result is clamped to the
    /// range of the values that carry weight, which removes rounding
    /// excursions without changing the exact mean.
    pub fn quasi_mean(&self, weights: &Distribution, values: &[f64]) -> Result<f64> {
        if weights.len() != values.len() {
            return Err(Error::Dimension(format!(
                "{} weights for {} values",
                weights.len(),
                values.len()
            )));
        }
        let mut acc = CompensatedSum::new();
        let (mut lo, mut hi) = (f64::INFINITY, f64::NEG_INFINITY);
        for (&w, &x) in weights.probs().iter().zip(values) {
            if w == 0.0 {
                continue;
            }
            if !x.is_finite() {
                return Err(Error::Domain(format!("non-finite value {x} in a mean")));
            }
            lo = lo.min(x);
            hi = hi.max(x);
            acc.add(w * self.eval(x)?);
        }
        let mean = self.inv(acc.total())?;
        Ok(mean.clamp(lo, hi))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn exp(kappa: f64, gamma: f64) -> GeneratorSpec {
        GeneratorSpec::exponential(kappa, gamma).unwrap()
    }

    #[test]
    fn eval_examples() {
        assert_eq!(GeneratorSpec::linear(1.0).unwrap().eval(3.0).unwrap(), -3.0);
        assert!((exp(-1.0, 1.0).eval(1.0).unwrap() + 0.5).abs() < 1e-15);
        let shifted = exp(2.0, -0.5).with_shift(1.5).unwrap();
        assert!((shifted.eval(0.5).unwrap() - (16.0 - 1.0) / -0.5).abs() < 1e-12);
        assert_eq!(exp(1.0, 1.0).eval(5000.0).unwrap_err().name(), "Overflow");
    }

    #[test]
    fn inv_examples() {
        assert_eq!(GeneratorSpec::linear(1.0).unwrap().inv(-3.0).unwrap(), 3.0);
        assert!((exp(-1.0, 1.0).inv(-0.5).unwrap() - 1.0).abs() < 1e-15);
        assert_eq!(exp(-1.0, 1.0).inv(-2.0).unwrap_err().name(), "DomainError");
    }

    #[test]
    fn degenerate_constants_are_rejected() {
        assert!(GeneratorSpec::linear(0.0).is_err());
        assert!(GeneratorSpec::exponential(0.0, 1.0).is_err());
        assert!(GeneratorSpec::exponential(1.0, 0.0).is_err());
        assert!(GeneratorSpec::linear(1.0)
            .unwrap()
            .with_shift(f64::NAN)
            .is_err());
    }

    #[test]
    fn quasi_mean_examples() {
        let g = exp(-1.0, 1.0);
        let point = Distribution::new(vec![1.0, 0.0]).unwrap();
        assert_eq!(g.quasi_mean(&point, &[0.7, 9.0]).unwrap(), 0.7);
        let w = Distribution::new(vec![0.2, 0.3, 0.5]).unwrap();
        assert_eq!(g.quasi_mean(&w, &[1.25; 3]).unwrap(), 1.25);
        let half = Distribution::uniform(2).unwrap();
        // -log2(3/4)
        let expected = 0.415_037_499_278_843_82;
        assert!((g.quasi_mean(&half, &[0.0, 1.0]).unwrap() - expected).abs() < 1e-15);
    }

    #[test]
    fn quasi_mean_length_mismatch() {
        let g = GeneratorSpec::linear(1.0).unwrap();
        let w = Distribution::uniform(2).unwrap();
        assert_eq!(
            g.quasi_mean(&w, &[1.0]).unwrap_err().name(),
            "DimensionError"
        );
    }

    proptest! {
        #[test]
        fn round_trip(kappa in -3.0..3.0f64, gamma in -2.0..2.0f64, shift in -2.0..2.0f64, x in -5.0..5.0f64) {
            prop_assume!(kappa.abs() > 1e-3 && gamma.abs() > 1e-3);
            let g = exp(kappa, gamma).with_shift(shift).unwrap();
            let back = g.inv(g.eval(x).unwrap()).unwrap();
            prop_assert!((back - x).abs() <= 1e-12 * (1.0 + x.abs()) * (1.0 + kappa.abs().recip()));
        }

        #[test]
        fn linear_mean_is_arithmetic(c in -3.0..3.0f64, ws in proptest::collection::vec(0.01..1.0f64, 1..8), seed in 0.0..1.0f64) {
            prop_assume!(c.abs() > 1e-3);
            let total: f64 = ws.iter().sum();
            let w = Distribution::new(ws.iter().map(|x| x / total).collect::<Vec<_>>()).unwrap();
            let values: Vec<f64> = (0..ws.len()).map(|i| (i as f64 * 1.7 + seed).sin() * 4.0).collect();
            let arithmetic: f64 = w.probs().iter().zip(&values).map(|(a, b)| a * b).sum();
            let mean = GeneratorSpec::linear(c).unwrap().quasi_mean(&w, &values).unwrap();
            prop_assert!((mean - arithmetic).abs() <= 1e-12 * (1.0 + arithmetic.abs()));
        }
    }
}
