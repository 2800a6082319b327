//! Entropy families, their conditional forms and composition laws.
//!
//! All logarithms are base 2. The conventions `0 log 0 = 0` and `0^a = 0`
//! for `a > 0` are used throughout. Limits are never taken implicitly:
//! `alpha = 1` and `lambda = 0` are exact branches selected by the parameter
//! values, not by closeness to them.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::deformed::Deformation;
use crate::distributions::{Distribution, JointDistribution};
use crate::error::{Error, Result};
use crate::generators::GeneratorSpec;
use crate::numeric::{compensated_sum, log2_power_sum, power_sum_minus_one};

/// Strong additivity of the parameterized families holds exactly when
/// `alpha - tau*lambda` equals one; this is how close counts as equal.
pub const BETA_TOLERANCE: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum EntropyFamily {
    /// `tau * sum p log p`.
    Shannon { tau: f64 },
    /// The two-branch escort family: `tau * sum p^(alpha)_k log p_k` for
    /// `lambda = 0`, else `-(1/lambda) log(sum p^beta / sum p^alpha)` with
    /// `beta = alpha - tau*lambda`.
    GeneralEscort { alpha: f64, tau: f64, lambda: f64 },
    /// `(1/lambda) log sum p^alpha`, or the Shannon form when `alpha = 1`.
    Nath { alpha: f64, lambda: f64, tau: f64 },
    /// `(1/lambda)(sum p^alpha - 1)`, or the Shannon form when `lambda = 0`.
    Hct { alpha: f64, lambda: f64, tau: f64 },
}

/// Flat parameter record used for reports and the CLI.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
pub struct FamilyParams {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tau: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub lambda: Option<f64>,
}

/// Families addressable by name.
pub const FAMILY_NAMES: [&str; 7] = [
    "shannon",
    "general",
    "nath",
    "renyi",
    "tsallis",
    "havrda-charvat",
    "hct",
];

fn finite(name: &str, v: f64) -> Result<f64> {
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Parameter(format!("{name} = {v} is not finite")))
    }
}

fn negative_tau(tau: f64) -> Result<()> {
    if tau < 0.0 {
        Ok(())
    } else {
        Err(Error::Parameter(format!("tau must be negative, got {tau}")))
    }
}

fn positive_alpha(alpha: f64) -> Result<()> {
    if alpha > 0.0 {
        Ok(())
    } else {
        Err(Error::Parameter(format!(
            "alpha must be positive, got {alpha}"
        )))
    }
}

fn positive_ratio(alpha: f64, lambda: f64) -> Result<()> {
    if lambda == 0.0 {
        return Err(Error::Parameter(format!(
            "lambda must be nonzero when alpha = {alpha} != 1"
        )));
    }
    let ratio = (1.0 - alpha) / lambda;
    if ratio > 0.0 {
        Ok(())
    } else {
        Err(Error::Parameter(format!(
            "(1 - alpha)/lambda must be positive, got {ratio} (alpha = {alpha}, lambda = {lambda})"
        )))
    }
}

/// Clears the sign of zero and rounding excursions below zero.
fn nonneg(v: f64) -> f64 {
    if v > 0.0 {
        v
    } else {
        0.0
    }
}

fn shannon_sum(probs: &[f64]) -> f64 {
    compensated_sum(probs.iter().filter(|&&p| p > 0.0).map(|&p| p * p.log2()))
}

impl EntropyFamily {
    pub fn shannon(tau: f64) -> Result<Self> {
        negative_tau(finite("tau", tau)?)?;
        Ok(Self::Shannon { tau })
    }

    pub fn general_escort(alpha: f64, tau: f64, lambda: f64) -> Result<Self> {
        finite("alpha", alpha)?;
        finite("lambda", lambda)?;
        negative_tau(finite("tau", tau)?)?;
        let beta = alpha - tau * lambda;
        if !(beta > 0.0) {
            return Err(Error::Parameter(format!(
                "alpha - tau*lambda must be positive, got {beta}"
            )));
        }
        Ok(Self::GeneralEscort { alpha, tau, lambda })
    }

    pub fn nath(alpha: f64, lambda: f64, tau: f64) -> Result<Self> {
        finite("alpha", alpha)?;
        finite("lambda", lambda)?;
        finite("tau", tau)?;
        positive_alpha(alpha)?;
        if alpha == 1.0 {
            negative_tau(tau)?;
        } else {
            positive_ratio(alpha, lambda)?;
        }
        Ok(Self::Nath { alpha, lambda, tau })
    }

    /// Nath with `lambda = 1 - alpha` and `tau = -1`.
    pub fn renyi(alpha: f64) -> Result<Self> {
        finite("alpha", alpha)?;
        Self::nath(alpha, 1.0 - alpha, -1.0)
    }

    /// Nath with `tau = (alpha - 1)/lambda`, the choice that makes it
    /// strongly additive.
    pub fn strongly_additive_nath(alpha: f64, lambda: f64) -> Result<Self> {
        finite("alpha", alpha)?;
        finite("lambda", lambda)?;
        if lambda == 0.0 {
            return Err(Error::Parameter("lambda must be nonzero".into()));
        }
        if alpha == 1.0 {
            return Err(Error::Parameter(
                "alpha = 1 leaves tau undetermined; use the Shannon family".into(),
            ));
        }
        Self::nath(alpha, lambda, (alpha - 1.0) / lambda)
    }

    pub fn hct(alpha: f64, lambda: f64, tau: f64) -> Result<Self> {
        finite("alpha", alpha)?;
        finite("lambda", lambda)?;
        negative_tau(finite("tau", tau)?)?;
        if lambda != 0.0 {
            positive_alpha(alpha)?;
            if alpha == 1.0 {
                return Err(Error::Parameter(
                    "alpha must differ from 1 when lambda != 0".into(),
                ));
            }
            positive_ratio(alpha, lambda)?;
        }
        Ok(Self::Hct { alpha, lambda, tau })
    }

    pub fn tsallis(alpha: f64) -> Result<Self> {
        finite("alpha", alpha)?;
        Self::hct(alpha, 1.0 - alpha, -1.0)
    }

    pub fn havrda_charvat(alpha: f64) -> Result<Self> {
        finite("alpha", alpha)?;
        let lambda = (1.0 - alpha).exp2() - 1.0;
        if lambda == 0.0 {
            return Err(Error::Parameter("alpha must differ from 1".into()));
        }
        Self::hct(alpha, lambda, (alpha - 1.0) / lambda)
    }

    /// Builds a family from its CLI name. Missing `tau` defaults to `-1` for
    /// `shannon`; every other parameter a family uses is required.
    pub fn from_name(name: &str, params: FamilyParams) -> Result<Self> {
        let need = |v: Option<f64>, what: &str| {
            v.ok_or_else(|| Error::Parameter(format!("family {name} requires --{what}")))
        };
        match name {
            "shannon" => Self::shannon(params.tau.unwrap_or(-1.0)),
            "general" => Self::general_escort(
                need(params.alpha, "alpha")?,
                need(params.tau, "tau")?,
                need(params.lambda, "lambda")?,
            ),
            "nath" => {
                let alpha = need(params.alpha, "alpha")?;
                let lambda = need(params.lambda, "lambda")?;
                match params.tau {
                    Some(tau) => Self::nath(alpha, lambda, tau),
                    None => Self::strongly_additive_nath(alpha, lambda),
                }
            }
            "renyi" => Self::renyi(need(params.alpha, "alpha")?),
            "tsallis" => Self::tsallis(need(params.alpha, "alpha")?),
            "havrda-charvat" => Self::havrda_charvat(need(params.alpha, "alpha")?),
            "hct" => Self::hct(
                need(params.alpha, "alpha")?,
                need(params.lambda, "lambda")?,
                need(params.tau, "tau")?,
            ),
            other => Err(Error::Parameter(format!(
                "unknown family {other:?}; expected one of {}",
                FAMILY_NAMES.join(", ")
            ))),
        }
    }

    pub fn kind_name(&self) -> &'static str {
        match self {
            Self::Shannon { .. } => "shannon",
            Self::GeneralEscort { .. } => "general",
            Self::Nath { .. } => "nath",
            Self::Hct { .. } => "hct",
        }
    }

    pub fn params(&self) -> FamilyParams {
        match *self {
            Self::Shannon { tau } => FamilyParams {
                tau: Some(tau),
                ..Default::default()
            },
            Self::GeneralEscort { alpha, tau, lambda }
            | Self::Nath { alpha, lambda, tau }
            | Self::Hct { alpha, lambda, tau } => FamilyParams {
                alpha: Some(alpha),
                tau: Some(tau),
                lambda: Some(lambda),
            },
        }
    }

    /// The escort order used to weight conditional rows.
    pub fn alpha(&self) -> f64 {
        match *self {
            Self::Shannon { .. } => 1.0,
            Self::GeneralEscort { alpha, .. }
            | Self::Nath { alpha, .. }
            | Self::Hct { alpha, .. } => alpha,
        }
    }

    pub fn tau(&self) -> f64 {
        match *self {
            Self::Shannon { tau }
            | Self::GeneralEscort { tau, .. }
            | Self::Nath { tau, .. }
            | Self::Hct { tau, .. } => tau,
        }
    }

    pub fn lambda(&self) -> f64 {
        match *self {
            Self::Shannon { .. } => 0.0,
            Self::GeneralEscort { lambda, .. }
            | Self::Nath { lambda, .. }
            | Self::Hct { lambda, .. } => lambda,
        }
    }

    /// `alpha - tau*lambda`.
    pub fn beta(&self) -> f64 {
        self.alpha() - self.tau() * self.lambda()
    }

    /// Whether the parameters satisfy the constraint under which the family
    /// obeys its composition law on every joint: `alpha = 1` for the
    /// logarithmic-mean branches and `alpha - tau*lambda = 1` otherwise.
    pub fn is_strongly_additive(&self) -> bool {
        match self.branch() {
            Branch::Shannon { .. } => true,
            Branch::EscortLinear { alpha, .. } => alpha == 1.0,
            Branch::EscortLog { .. } | Branch::Nath { .. } | Branch::Hct { .. } => {
                (self.beta() - 1.0).abs() <= BETA_TOLERANCE
            }
        }
    }

    /// The law combining a marginal entropy with a conditional one:
    /// ordinary addition, or the lambda-deformed addition for HCT.
    pub fn composition(&self) -> Deformation {
        match self.branch() {
            Branch::Hct { lambda, .. } => Deformation::new(lambda).expect("validated lambda"),
            _ => Deformation::ordinary(),
        }
    }

    fn branch(&self) -> Branch {
        match *self {
            Self::Shannon { tau } => Branch::Shannon { tau },
            Self::GeneralEscort {
                alpha,
                tau,
                lambda: 0.0,
            } => Branch::EscortLinear { alpha, tau },
            Self::GeneralEscort { alpha, tau, lambda } => Branch::EscortLog {
                alpha,
                beta: alpha - tau * lambda,
                lambda,
            },
            Self::Nath {
                alpha: 1.0, tau, ..
            } => Branch::Shannon { tau },
            Self::Nath { alpha, lambda, .. } => Branch::Nath { alpha, lambda },
            Self::Hct {
                lambda: 0.0, tau, ..
            } => Branch::Shannon { tau },
            Self::Hct { alpha, lambda, .. } => Branch::Hct { alpha, lambda },
        }
    }

    pub fn entropy(&self, p: &Distribution) -> Result<f64> {
        let probs = p.probs();
        let value = match self.branch() {
            Branch::Shannon { tau } => tau * shannon_sum(probs),
            Branch::EscortLinear { alpha, tau } => {
                let weights = p.escort(alpha).map_err(|_| zero_exponent(alpha))?;
                let s = compensated_sum(
                    weights
                        .probs()
                        .iter()
                        .zip(probs)
                        .filter(|(&w, _)| w > 0.0)
                        .map(|(&w, &q)| w * q.log2()),
                );
                tau * s
            }
            Branch::EscortLog {
                alpha,
                beta,
                lambda,
            } => -(log2_power_sum(probs, beta)? - log2_power_sum(probs, alpha)?) / lambda,
            Branch::Nath { alpha, lambda } => log2_power_sum(probs, alpha)? / lambda,
            Branch::Hct { alpha, lambda } => power_sum_minus_one(probs, alpha)? / lambda,
        };
        if value.is_finite() {
            Ok(nonneg(value))
        } else {
            Err(Error::Overflow(format!("entropy of {self}")))
        }
    }

    /// Combines the entropies of the conditional rows into the conditional
    /// entropy, given the marginal whose escort supplies the weights.
    ///
    /// Rows with zero marginal must still have a slot in `row_values`; they
    /// carry zero weight and their value is ignored.
    pub fn combine_conditional(&self, marginal: &Distribution, row_values: &[f64]) -> Result<f64> {
        let weights = marginal.escort(self.alpha())?;
        let generator = match self.branch() {
            Branch::EscortLog { lambda, .. } | Branch::Nath { lambda, .. } => {
                GeneratorSpec::exponential(lambda, 1.0)?
            }
            _ => GeneratorSpec::linear(1.0)?,
        };
        generator.quasi_mean(&weights, row_values)
    }

    pub fn conditional_entropy(&self, joint: &JointDistribution) -> Result<f64> {
        let marginal = joint.marginal();
        let values = self.row_entropies(joint, &marginal)?;
        self.combine_conditional(&marginal, &values)
    }

    fn row_entropies(
        &self,
        joint: &JointDistribution,
        marginal: &Distribution,
    ) -> Result<Vec<f64>> {
        marginal
            .probs()
            .iter()
            .enumerate()
            .map(|(k, &pk)| {
                if pk > 0.0 {
                    self.entropy(&joint.conditional(k)?)
                } else {
                    Ok(0.0)
                }
            })
            .collect()
    }

    pub fn joint_entropy(&self, joint: &JointDistribution) -> Result<f64> {
        self.entropy(&joint.flatten())
    }

    /// The entropy of the uniform distribution of dimension `n`, evaluated
    /// from its closed form in `1/n`.
    pub fn uniform_trace(&self, n: usize) -> Result<f64> {
        if n == 0 {
            return Err(Error::Dimension("uniform trace at n = 0".into()));
        }
        let log_n = (n as f64).log2();
        let value = match self.branch() {
            Branch::Hct { lambda, .. } => {
                let exponent = -self.tau() * lambda;
                (exponent * (n as f64).ln()).exp_m1() / lambda
            }
            _ => -self.tau() * log_n,
        };
        debug_assert!(value >= 0.0, "negative uniform trace {value} for {self}");
        Ok(nonneg(value))
    }
}

fn zero_exponent(alpha: f64) -> Error {
    Error::Domain(format!("zero probability with escort order {alpha} <= 0"))
}

#[derive(Debug, Clone, Copy)]
enum Branch {
    Shannon { tau: f64 },
    EscortLinear { alpha: f64, tau: f64 },
    EscortLog { alpha: f64, beta: f64, lambda: f64 },
    Nath { alpha: f64, lambda: f64 },
    Hct { alpha: f64, lambda: f64 },
}

impl fmt::Display for EntropyFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Self::Shannon { tau } => write!(f, "shannon(tau={tau})"),
            Self::GeneralEscort { alpha, tau, lambda } => {
                write!(f, "general(alpha={alpha}, tau={tau}, lambda={lambda})")
            }
            Self::Nath { alpha, lambda, tau } => {
                write!(f, "nath(alpha={alpha}, lambda={lambda}, tau={tau})")
            }
            Self::Hct { alpha, lambda, tau } => {
                write!(f, "hct(alpha={alpha}, lambda={lambda}, tau={tau})")
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn probe() -> JointDistribution {
        JointDistribution::new(vec![vec![0.5, 0.0], vec![0.25, 0.25]]).unwrap()
    }

    fn close(a: f64, b: f64, tol: f64) {
        assert!((a - b).abs() <= tol, "{a} vs {b}");
    }

    #[test]
    fn convenience_constructors() {
        assert_eq!(
            EntropyFamily::renyi(2.0).unwrap(),
            EntropyFamily::Nath {
                alpha: 2.0,
                lambda: -1.0,
                tau: -1.0
            }
        );
        let ts = EntropyFamily::tsallis(2.0).unwrap();
        assert_eq!(
            ts,
            EntropyFamily::Hct {
                alpha: 2.0,
                lambda: -1.0,
                tau: -1.0
            }
        );
        assert_eq!(ts.beta(), 1.0);
        let hc = EntropyFamily::havrda_charvat(3.0).unwrap();
        close(hc.lambda(), -0.75, 1e-15);
        assert!(hc.is_strongly_additive());
        let sa = EntropyFamily::strongly_additive_nath(2.0, -0.5).unwrap();
        assert_eq!(sa.tau(), -2.0);
        assert!(sa.is_strongly_additive());
    }

    #[test]
    fn constraint_violations_name_the_problem() {
        let err = EntropyFamily::nath(2.0, 1.0, -1.0).unwrap_err();
        assert_eq!(err.name(), "ParameterError");
        assert!(err.to_string().contains("(1 - alpha)/lambda"), "{err}");
        assert!(EntropyFamily::shannon(0.0).is_err());
        assert!(EntropyFamily::shannon(1.0).is_err());
        assert!(EntropyFamily::general_escort(0.5, -1.0, -1.0).is_err());
        assert!(EntropyFamily::general_escort(1.0, 1.0, 0.0).is_err());
        assert!(EntropyFamily::nath(1.0, 0.0, 0.5).is_err());
        assert!(EntropyFamily::renyi(0.0).is_err());
        assert!(EntropyFamily::renyi(-1.0).is_err());
        assert!(EntropyFamily::tsallis(0.0).is_err());
        assert!(EntropyFamily::havrda_charvat(1.0).is_err());
        assert!(EntropyFamily::hct(2.0, 1.0, -1.0).is_err());
        assert!(EntropyFamily::strongly_additive_nath(0.5, -0.5).is_err());
        assert!(EntropyFamily::strongly_additive_nath(2.0, 1.0).is_err());
        assert!(EntropyFamily::renyi(f64::NAN).is_err());
    }

    #[test]
    fn renyi_one_is_the_exact_shannon_branch() {
        let r = EntropyFamily::renyi(1.0).unwrap();
        let p = Distribution::new(vec![0.2, 0.3, 0.5]).unwrap();
        let s = EntropyFamily::shannon(-1.0).unwrap();
        assert_eq!(r.entropy(&p).unwrap(), s.entropy(&p).unwrap());
    }

    #[test]
    fn tsallis_one_is_the_exact_shannon_branch() {
        let t = EntropyFamily::tsallis(1.0).unwrap();
        let p = Distribution::new(vec![0.2, 0.3, 0.5]).unwrap();
        let s = EntropyFamily::shannon(-1.0).unwrap();
        assert_eq!(t.entropy(&p).unwrap(), s.entropy(&p).unwrap());
        assert!(t.composition().is_ordinary());
    }

    #[test]
    fn from_name_covers_every_family() {
        let all = FamilyParams {
            alpha: Some(2.0),
            tau: Some(-1.0),
            lambda: Some(-1.0),
        };
        for name in FAMILY_NAMES {
            assert!(EntropyFamily::from_name(name, all).is_ok(), "{name}");
        }
        assert_eq!(
            EntropyFamily::from_name("shannon", FamilyParams::default()).unwrap(),
            EntropyFamily::Shannon { tau: -1.0 }
        );
        let only_alpha = FamilyParams {
            alpha: Some(2.0),
            ..Default::default()
        };
        assert!(EntropyFamily::from_name("general", only_alpha).is_err());
        assert!(EntropyFamily::from_name("boltzmann", all).is_err());
        let nath = FamilyParams {
            alpha: Some(2.0),
            lambda: Some(-0.5),
            tau: None,
        };
        assert_eq!(EntropyFamily::from_name("nath", nath).unwrap().tau(), -2.0);
    }

    #[test]
    fn entropy_examples() {
        let u2 = Distribution::uniform(2).unwrap();
        assert_eq!(
            EntropyFamily::shannon(-1.0).unwrap().entropy(&u2).unwrap(),
            1.0
        );
        let p = Distribution::new(vec![0.25, 0.75]).unwrap();
        // log2(8/5), mpmath at 40 digits
        close(
            EntropyFamily::renyi(2.0).unwrap().entropy(&p).unwrap(),
            0.678_071_905_112_637_65,
            1e-15,
        );
        close(
            EntropyFamily::tsallis(2.0).unwrap().entropy(&u2).unwrap(),
            0.5,
            1e-15,
        );
        for a in [0.3, 0.5, 2.0, 3.0, 7.5] {
            let hc = EntropyFamily::havrda_charvat(a).unwrap();
            close(hc.entropy(&u2).unwrap(), 1.0, 1e-14);
        }
    }

    #[test]
    fn point_mass_has_zero_entropy() {
        let pm = Distribution::point_mass(4).unwrap();
        let families = [
            EntropyFamily::shannon(-1.0).unwrap(),
            EntropyFamily::general_escort(2.0, -1.0, 1.0).unwrap(),
            EntropyFamily::general_escort(0.5, -1.0, 0.0).unwrap(),
            EntropyFamily::renyi(0.5).unwrap(),
            EntropyFamily::renyi(3.0).unwrap(),
            EntropyFamily::tsallis(0.5).unwrap(),
            EntropyFamily::havrda_charvat(2.0).unwrap(),
        ];
        for f in families {
            let v = f.entropy(&pm).unwrap();
            assert_eq!(v, 0.0, "{f}");
            assert!(v.is_sign_positive());
        }
    }

    #[test]
    fn zero_probability_with_nonpositive_exponent() {
        let f = EntropyFamily::general_escort(-0.5, -1.0, 1.0).unwrap();
        let p = Distribution::new(vec![0.5, 0.5, 0.0]).unwrap();
        assert_eq!(f.entropy(&p).unwrap_err().name(), "DomainError");
        let g = EntropyFamily::general_escort(-0.5, -1.0, 0.0);
        assert!(g.is_err(), "beta = alpha <= 0 in the linear branch");
        assert!(f.entropy(&Distribution::uniform(3).unwrap()).is_ok());
    }

    #[test]
    fn conditional_entropy_of_probe() {
        let j = probe();
        close(
            EntropyFamily::shannon(-1.0)
                .unwrap()
                .conditional_entropy(&j)
                .unwrap(),
            0.5,
            1e-15,
        );
        // log2(4/3)
        close(
            EntropyFamily::renyi(2.0)
                .unwrap()
                .conditional_entropy(&j)
                .unwrap(),
            0.415_037_499_278_843_82,
            1e-15,
        );
        close(
            EntropyFamily::tsallis(2.0)
                .unwrap()
                .conditional_entropy(&j)
                .unwrap(),
            0.25,
            1e-15,
        );
    }

    #[test]
    fn joint_entropy_of_probe() {
        let j = probe();
        close(
            EntropyFamily::shannon(-1.0)
                .unwrap()
                .joint_entropy(&j)
                .unwrap(),
            1.5,
            1e-15,
        );
        // log2(8/3)
        close(
            EntropyFamily::renyi(2.0)
                .unwrap()
                .joint_entropy(&j)
                .unwrap(),
            1.415_037_499_278_843_8,
            1e-15,
        );
        close(
            EntropyFamily::tsallis(2.0)
                .unwrap()
                .joint_entropy(&j)
                .unwrap(),
            0.625,
            1e-15,
        );
    }

    #[test]
    fn identical_rows_give_the_row_entropy() {
        let q = Distribution::new(vec![0.1, 0.2, 0.7]).unwrap();
        let p = Distribution::new(vec![0.3, 0.3, 0.4]).unwrap();
        let j = p.direct_product(&q);
        for f in [
            EntropyFamily::renyi(3.0).unwrap(),
            EntropyFamily::tsallis(0.5).unwrap(),
            EntropyFamily::general_escort(2.0, -1.0, 1.0).unwrap(),
        ] {
            close(
                f.conditional_entropy(&j).unwrap(),
                f.entropy(&q).unwrap(),
                1e-14,
            );
        }
    }

    #[test]
    fn zero_rows_are_skipped() {
        let j = JointDistribution::new(vec![vec![0.0, 0.0], vec![0.5, 0.5]]).unwrap();
        let f = EntropyFamily::renyi(2.0).unwrap();
        close(f.conditional_entropy(&j).unwrap(), 1.0, 1e-15);
    }

    #[test]
    fn uniform_trace_examples() {
        assert_eq!(
            EntropyFamily::shannon(-1.0)
                .unwrap()
                .uniform_trace(4)
                .unwrap(),
            2.0
        );
        for a in [0.5, 2.0, 3.0] {
            let r = EntropyFamily::renyi(a).unwrap();
            close(r.uniform_trace(12).unwrap(), 12f64.log2(), 1e-15);
        }
        close(
            EntropyFamily::tsallis(2.0)
                .unwrap()
                .uniform_trace(2)
                .unwrap(),
            0.5,
            1e-15,
        );
        assert_eq!(
            EntropyFamily::tsallis(2.0)
                .unwrap()
                .uniform_trace(1)
                .unwrap(),
            0.0
        );
        assert!(EntropyFamily::tsallis(2.0)
            .unwrap()
            .uniform_trace(0)
            .is_err());
    }

    #[test]
    fn composition_laws() {
        assert!(EntropyFamily::renyi(2.0)
            .unwrap()
            .composition()
            .is_ordinary());
        assert_eq!(
            EntropyFamily::tsallis(3.0).unwrap().composition().lambda(),
            -2.0
        );
        assert!(EntropyFamily::hct(2.0, 0.0, -1.0)
            .unwrap()
            .composition()
            .is_ordinary());
    }

    #[test]
    fn strong_additivity_flags() {
        assert!(EntropyFamily::general_escort(1.0, -1.0, 0.0)
            .unwrap()
            .is_strongly_additive());
        assert!(!EntropyFamily::general_escort(2.0, -1.0, 0.0)
            .unwrap()
            .is_strongly_additive());
        assert!(EntropyFamily::general_escort(2.0, -1.0, -1.0)
            .unwrap()
            .is_strongly_additive());
        assert!(!EntropyFamily::general_escort(2.0, -1.0, 1.0)
            .unwrap()
            .is_strongly_additive());
        assert!(!EntropyFamily::nath(2.0, -1.0, -3.0)
            .unwrap()
            .is_strongly_additive());
    }
}
