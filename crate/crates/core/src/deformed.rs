//! The lambda-deformed addition `x + y + lambda*x*y` and the map
//! `h(x) = (2^{lambda x} - 1) / lambda` carrying ordinary addition onto it.
//!
//! For `lambda != 0` the point `-1/lambda` is absorbing and has no inverse, so
//! the group lives on the reals with that single point removed. `lambda = 0`
//! is handled as an exact branch: every operation is the ordinary one.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::compensated_sum;

/// Denominators with magnitude below this are treated as singular.
pub const SINGULARITY_THRESHOLD: f64 = 1e-300;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Deformation {
    lambda: f64,
}

impl Deformation {
    pub fn new(lambda: f64) -> Result<Self> {
        if !lambda.is_finite() {
            return Err(Error::Parameter(format!(
                "deformation {lambda} is not finite"
            )));
        }
        Ok(Self { lambda })
    }

    /// Ordinary addition.
    pub const fn ordinary() -> Self {
        Self { lambda: 0.0 }
    }

    pub fn lambda(&self) -> f64 {
        self.lambda
    }

    pub fn is_ordinary(&self) -> bool {
        self.lambda == 0.0
    }

    pub fn add(&self, x: f64, y: f64) -> f64 {
        x + y + self.lambda * (x * y)
    }

    pub fn neg(&self, x: f64) -> Result<f64> {
        let denom = self.denominator(x)?;
        Ok(-x / denom)
    }

    /// `(x - y) / (1 + lambda*y)`, the unique `z` with `z (+) y = x`.
    pub fn sub(&self, x: f64, y: f64) -> Result<f64> {
        let denom = self.denominator(y)?;
        Ok((x - y) / denom)
    }

    fn denominator(&self, x: f64) -> Result<f64> {
        let denom = 1.0 + self.lambda * x;
        if denom.abs() < SINGULARITY_THRESHOLD {
            Err(Error::SingularElement {
                lambda: self.lambda,
                x,
            })
        } else {
            Ok(denom)
        }
    }

    /// The isomorphism from `(R, +)`.
    pub fn h(&self, x: f64) -> Result<f64> {
        if self.is_ordinary() {
            return Ok(x);
        }
        let value = (self.lambda * x * std::f64::consts::LN_2).exp_m1() / self.lambda;
        if value.is_finite() {
            Ok(value)
        } else {
            Err(Error::Overflow(format!("2^({} * {x})", self.lambda)))
        }
    }

    pub fn h_inv(&self, y: f64) -> Result<f64> {
        if self.is_ordinary() {
            return Ok(y);
        }
        let ly = self.lambda * y;
        if !(ly + 1.0 > 0.0) {
            return Err(Error::Domain(format!(
                "h_inv({y}) needs lambda*y + 1 > 0 (lambda = {})",
                self.lambda
            )));
        }
        Ok(ly.ln_1p() / (self.lambda * std::f64::consts::LN_2))
    }

    /// Left fold of the deformed addition; the empty sum is 0.
    pub fn sum<I: IntoIterator<Item = f64>>(&self, xs: I) -> f64 {
        if self.is_ordinary() {
            return compensated_sum(xs);
        }
        xs.into_iter().fold(0.0, |acc, x| self.add(acc, x))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn d(lambda: f64) -> Deformation {
        Deformation::new(lambda).unwrap()
    }

    #[test]
    fn add_examples() {
        assert_eq!(d(0.0).add(2.0, 3.0), 5.0);
        for l in [-2.0, -0.5, 0.0, 1.0, 3.0] {
            assert_eq!(d(l).add(7.25, 0.0), 7.25);
        }
        assert_eq!(d(1.0).add(1.0, 1.0), 3.0);
    }

    #[test]
    fn neg_examples() {
        assert_eq!(d(0.0).neg(4.0).unwrap(), -4.0);
        assert_eq!(d(2.5).neg(0.0).unwrap(), 0.0);
        assert_eq!(d(-1.0).neg(0.5).unwrap(), -1.0);
        assert_eq!(d(-1.0).neg(1.0).unwrap_err().name(), "SingularElement");
    }

    #[test]
    fn sub_examples() {
        for l in [-1.0, 0.0, 2.0] {
            assert_eq!(d(l).sub(0.3, 0.3).unwrap(), 0.0);
        }
        assert_eq!(d(0.0).sub(5.0, 3.0).unwrap(), 2.0);
        assert!((d(-1.0).sub(0.625, 0.5).unwrap() - 0.25).abs() < 1e-15);
        assert_eq!(d(2.0).sub(1.0, -0.5).unwrap_err().name(), "SingularElement");
    }

    #[test]
    fn h_examples() {
        for l in [-2.0, 0.0, 0.7] {
            assert_eq!(d(l).h(0.0).unwrap(), 0.0);
            assert_eq!(d(l).h_inv(0.0).unwrap(), 0.0);
        }
        assert_eq!(d(0.0).h(-3.5).unwrap(), -3.5);
        assert!((d(1.0).h(2.0).unwrap() - 3.0).abs() < 1e-15);
        assert!((d(1.0).h_inv(3.0).unwrap() - 2.0).abs() < 1e-15);
        assert_eq!(d(1.0).h_inv(-1.5).unwrap_err().name(), "DomainError");
        assert_eq!(d(1.0).h(2000.0).unwrap_err().name(), "Overflow");
    }

    #[test]
    fn sum_examples() {
        assert_eq!(d(1.0).sum(std::iter::empty()), 0.0);
        assert_eq!(d(0.0).sum([1.0, 2.0, 3.0]), 6.0);
        assert_eq!(d(1.0).sum([1.0, 1.0]), 3.0);
    }

    #[test]
    fn non_finite_deformation_is_rejected() {
        assert_eq!(
            Deformation::new(f64::NAN).unwrap_err().name(),
            "ParameterError"
        );
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / (1.0 + b.abs())
    }

    proptest! {
        #[test]
        fn commutative(l in -2.0..2.0f64, x in -10.0..10.0f64, y in -10.0..10.0f64) {
            prop_assert_eq!(d(l).add(x, y), d(l).add(y, x));
        }

        #[test]
        fn associative(l in -2.0..2.0f64, x in -10.0..10.0f64, y in -10.0..10.0f64, z in -10.0..10.0f64) {
            let g = d(l);
            let right = g.add(x, g.add(y, z));
            prop_assert!(rel(g.add(g.add(x, y), z), right) <= 1e-9);
        }

        #[test]
        fn isomorphism(l in -2.0..2.0f64, x in -10.0..10.0f64, y in -10.0..10.0f64) {
            prop_assume!(l != 0.0);
            let g = d(l);
            let lhs = g.h(x + y).unwrap();
            prop_assert!(rel(g.add(g.h(x).unwrap(), g.h(y).unwrap()), lhs) <= 1e-9);
        }

        #[test]
        fn h_round_trip(l in -2.0..2.0f64, x in -10.0..10.0f64) {
            let g = d(l);
            prop_assert!(rel(g.h_inv(g.h(x).unwrap()).unwrap(), x) <= 1e-10);
        }

        #[test]
        fn sum_matches_isomorphic_image(l in -2.0..2.0f64, xs in proptest::collection::vec(-3.0..3.0f64, 0..6)) {
            let g = d(l);
            let logs: Option<Vec<f64>> = xs.iter().map(|&x| g.h_inv(x).ok()).collect();
            prop_assume!(logs.is_some());
            let via_h = g.h(compensated_sum(logs.unwrap())).unwrap();
            prop_assert!(rel(g.sum(xs.iter().copied()), via_h) <= 1e-9);
        }
    }
}
