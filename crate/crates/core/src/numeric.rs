//! Compensated summation and stable power sums shared by the other modules.

use crate::error::{Error, Result};

/// Neumaier's variant of Kahan summation.
#[derive(Debug, Clone, Copy, Default)]
pub struct CompensatedSum {
    sum: f64,
    compensation: f64,
}

impl CompensatedSum {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.compensation += (self.sum - t) + x;
        } else {
            self.compensation += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn total(&self) -> f64 {
        self.sum + self.compensation
    }
}

impl FromIterator<f64> for CompensatedSum {
    fn from_iter<I: IntoIterator<Item = f64>>(iter: I) -> Self {
        let mut acc = CompensatedSum::new();
        for x in iter {
            acc.add(x);
        }
        acc
    }
}

pub fn compensated_sum<I: IntoIterator<Item = f64>>(iter: I) -> f64 {
    iter.into_iter().collect::<CompensatedSum>().total()
}

/// `log2(sum_k p_k^a)` with the largest entry factored out, so that large
/// orders do not underflow. Zero entries contribute nothing when `a > 0`.
pub fn log2_power_sum(probs: &[f64], a: f64) -> Result<f64> {
    let max = probs.iter().copied().fold(0.0_f64, f64::max);
    if max <= 0.0 {
        return Err(Error::Domain("power sum of an all-zero vector".into()));
    }
    let mut acc = CompensatedSum::new();
    for &p in probs {
        if p > 0.0 {
            acc.add((p / max).powf(a));
        } else if a <= 0.0 {
            return Err(Error::Domain(format!(
                "zero probability raised to non-positive exponent {a}"
            )));
        }
    }
    Ok(acc.total().log2() + a * max.log2())
}

/// `sum_k p_k^a - 1` for a distribution, evaluated as
/// `sum_k p_k * expm1((a - 1) ln p_k)` so it stays accurate for `a` near 1.
pub fn power_sum_minus_one(probs: &[f64], a: f64) -> Result<f64> {
    let mut acc = CompensatedSum::new();
    for &p in probs {
        if p > 0.0 {
            acc.add(p * ((a - 1.0) * p.ln()).exp_m1());
        } else if a <= 0.0 {
            return Err(Error::Domain(format!(
                "zero probability raised to non-positive exponent {a}"
            )));
        }
    }
    let value = acc.total();
    if value.is_finite() {
        Ok(value)
    } else {
        Err(Error::Overflow(format!("power sum of order {a}")))
    }
}
