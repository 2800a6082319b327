//! Finite probability distributions and ragged joint distributions.
//!
//! Joints are stored row by row: row `k` holds the joint masses `r_{kl}`
//! whose sum is the marginal `p_k`. Rows may have different lengths, which
//! is what the rational refinement construction needs.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::numeric::compensated_sum;

/// Entries below this are rejected; entries in `[-NEGATIVE_SLACK, 0)` are clipped to zero.
pub const NEGATIVE_SLACK: f64 = 1e-12;
/// Allowed deviation of the total mass from 1 before renormalization.
pub const NORMALIZATION_TOLERANCE: f64 = 1e-9;

/// A point of the probability simplex.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "DistributionFile", into = "DistributionFile")]
pub struct Distribution {
    probs: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct DistributionFile {
    p: Vec<f64>,
}

impl TryFrom<DistributionFile> for Distribution {
    type Error = Error;
    fn try_from(file: DistributionFile) -> Result<Self> {
        Distribution::new(file.p)
    }
}

impl From<Distribution> for DistributionFile {
    fn from(d: Distribution) -> Self {
        DistributionFile { p: d.probs }
    }
}

/// Clips tolerated negatives and checks the total, returning the cleaned
/// values together with their compensated sum.
fn validate_mass(values: &[f64], offset: usize) -> Result<Vec<f64>> {
    values
        .iter()
        .enumerate()
        .map(|(i, &v)| {
            if !v.is_finite() {
                Err(Error::Parse(format!(
                    "non-finite probability at index {}",
                    offset + i
                )))
            } else if v < -NEGATIVE_SLACK {
                Err(Error::NegativeMass {
                    index: offset + i,
                    value: v,
                })
            } else {
                Ok(v.max(0.0))
            }
        })
        .collect()
}

fn check_total(sum: f64) -> Result<()> {
    if (sum - 1.0).abs() > NORMALIZATION_TOLERANCE {
        Err(Error::NotNormalized { sum })
    } else {
        Ok(())
    }
}

impl Distribution {
    /// Validates `values` and stores them divided by their sum.
    pub fn new(values: impl Into<Vec<f64>>) -> Result<Self> {
        let values = values.into();
        if values.is_empty() {
            return Err(Error::Dimension(
                "a distribution needs at least one entry".into(),
            ));
        }
        let mut probs = validate_mass(&values, 0)?;
        let sum = compensated_sum(probs.iter().copied());
        check_total(sum)?;
        if sum != 1.0 {
            probs.iter_mut().for_each(|p| *p /= sum);
        }
        Ok(Self { probs })
    }

    /// Builds from entries already known to lie on the simplex.
    pub(crate) fn from_simplex(probs: Vec<f64>) -> Self {
        debug_assert!(!probs.is_empty());
        Self { probs }
    }

    pub fn uniform(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Dimension(
                "uniform distribution of dimension 0".into(),
            ));
        }
        Ok(Self {
            probs: vec![1.0 / n as f64; n],
        })
    }

    /// The distribution `(1, 0, ..., 0)` of dimension `n`.
    pub fn point_mass(n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::Dimension("point mass of dimension 0".into()));
        }
        let mut probs = vec![0.0; n];
        probs[0] = 1.0;
        Ok(Self { probs })
    }

    pub fn probs(&self) -> &[f64] {
        &self.probs
    }

    pub fn len(&self) -> usize {
        self.probs.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probs.is_empty()
    }

    pub fn has_zero(&self) -> bool {
        self.probs.contains(&0.0)
    }

    pub fn is_point_mass(&self) -> bool {
        self.probs.iter().filter(|&&p| p > 0.0).count() == 1
    }

    /// The escort distribution `p_k^alpha / sum_i p_i^alpha`.
    ///
    /// Powers are taken of `p_k / p_max` so the normalizer never underflows.
    /// For `alpha > 0` a zero entry stays zero; for `alpha <= 0` every entry
    /// must be strictly positive.
    pub fn escort(&self, alpha: f64) -> Result<Distribution> {
        if !alpha.is_finite() {
            return Err(Error::Parameter(format!(
                "escort order {alpha} is not finite"
            )));
        }
        if alpha <= 0.0 && self.has_zero() {
            return Err(Error::EscortUndefined { alpha });
        }
        if alpha == 1.0 {
            return Ok(self.clone());
        }
        let max = self.probs.iter().copied().fold(0.0_f64, f64::max);
        let powered: Vec<f64> = self
            .probs
            .iter()
            .map(|&p| if p > 0.0 { (p / max).powf(alpha) } else { 0.0 })
            .collect();
        let norm = compensated_sum(powered.iter().copied());
        Ok(Self {
            probs: powered.into_iter().map(|w| w / norm).collect(),
        })
    }

    /// The independent joint `P * Q` with rows `p_k * q_l`.
    pub fn direct_product(&self, other: &Distribution) -> JointDistribution {
        let rows = self
            .probs
            .iter()
            .map(|&p| other.probs.iter().map(|&q| p * q).collect())
            .collect();
        JointDistribution { rows }
    }
}

/// A joint distribution over a ragged grid.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "JointFile", into = "JointFile")]
pub struct JointDistribution {
    rows: Vec<Vec<f64>>,
}

#[derive(Serialize, Deserialize)]
struct JointFile {
    rows: Vec<Vec<f64>>,
}

impl TryFrom<JointFile> for JointDistribution {
    type Error = Error;
    fn try_from(file: JointFile) -> Result<Self> {
        JointDistribution::new(file.rows)
    }
}

impl From<JointDistribution> for JointFile {
    fn from(j: JointDistribution) -> Self {
        JointFile { rows: j.rows }
    }
}

impl JointDistribution {
    /// Validates the rows and divides every entry by the grand total.
    pub fn new(rows: Vec<Vec<f64>>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Dimension(
                "a joint distribution needs at least one row".into(),
            ));
        }
        let mut offset = 0;
        let mut cleaned = Vec::with_capacity(rows.len());
        for (k, row) in rows.iter().enumerate() {
            if row.is_empty() {
                return Err(Error::Dimension(format!("row {k} is empty")));
            }
            cleaned.push(validate_mass(row, offset)?);
            offset += row.len();
        }
        let total = compensated_sum(cleaned.iter().flatten().copied());
        check_total(total)?;
        if total != 1.0 {
            cleaned.iter_mut().flatten().for_each(|r| *r /= total);
        }
        Ok(Self { rows: cleaned })
    }

    /// The joint built from positive counts `m_1..m_n`: row `i` holds `m_i`
    /// entries equal to `1/m` with `m = sum m_i`, so the marginal is
    /// `(m_i / m)` and every conditional row is uniform.
    pub fn refinement(counts: &[usize]) -> Result<Self> {
        if counts.is_empty() {
            return Err(Error::Dimension(
                "refinement needs at least one count".into(),
            ));
        }
        if let Some(k) = counts.iter().position(|&c| c == 0) {
            return Err(Error::Dimension(format!("count {k} is zero")));
        }
        let m: usize = counts.iter().sum();
        let cell = 1.0 / m as f64;
        Ok(Self {
            rows: counts.iter().map(|&c| vec![cell; c]).collect(),
        })
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    /// Total number of cells across all rows.
    pub fn num_cells(&self) -> usize {
        self.rows.iter().map(Vec::len).sum()
    }

    fn row_mass(&self, k: usize) -> f64 {
        compensated_sum(self.rows[k].iter().copied())
    }

    pub fn marginal(&self) -> Distribution {
        let masses: Vec<f64> = (0..self.rows.len()).map(|k| self.row_mass(k)).collect();
        let total = compensated_sum(masses.iter().copied());
        Distribution::from_simplex(masses.into_iter().map(|p| p / total).collect())
    }

    /// The conditional distribution of row `k` (zero-based).
    pub fn conditional(&self, k: usize) -> Result<Distribution> {
        let row = self
            .rows
            .get(k)
            .ok_or_else(|| Error::Dimension(format!("row {k} out of range")))?;
        let mass = self.row_mass(k);
        if mass <= 0.0 {
            return Err(Error::ZeroMarginal { row: k });
        }
        Ok(Distribution::from_simplex(
            row.iter().map(|&r| r / mass).collect(),
        ))
    }

    /// All cells concatenated row by row.
    pub fn flatten(&self) -> Distribution {
        Distribution::from_simplex(self.rows.iter().flatten().copied().collect())
    }
}
