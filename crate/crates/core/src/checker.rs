//! Numerical verification of the composition axioms.
//!
//! Every check measures a residual between two routes to the same quantity:
//! the entropy of a joint computed directly, and the same value obtained by
//! composing the marginal entropy with the conditional entropy. Residuals
//! are scaled by `1 + |reference|` for verdicts and also reported raw.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::Exp1;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::distributions::{Distribution, JointDistribution};
use crate::entropies::{EntropyFamily, FamilyParams};
use crate::error::{Error, Result};

/// A residual of this size or larger is reported as a detected violation.
pub const VIOLATION_THRESHOLD: f64 = 1e-3;
/// Rows whose marginal falls below this are regenerated.
pub const MIN_ROW_MASS: f64 = 1e-12;
/// Name of the generator recorded in reports.
pub const PRNG_NAME: &str = "ChaCha8Rng";
/// Largest chain length probed by `run_suite`.
pub const MAX_CHAIN: u32 = 20;
/// Largest uniform dimension probed by `run_suite`, as a power of two.
pub const MAX_TRACE_EXPONENT: u32 = 20;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Residual {
    pub absolute: f64,
    /// Magnitude of the directly computed side.
    pub reference: f64,
}

impl Residual {
    fn between(direct: f64, composed: f64) -> Self {
        Self {
            absolute: (direct - composed).abs(),
            reference: direct.abs(),
        }
    }

    pub fn relative(&self) -> f64 {
        self.absolute / (1.0 + self.reference)
    }
}

/// The fixed joint with marginal `(1/2, 1/2)` and conditional rows
/// `(1, 0)` and `(1/2, 1/2)`.
pub fn probe_joint() -> JointDistribution {
    JointDistribution::new(vec![vec![0.5, 0.0], vec![0.25, 0.25]]).expect("valid probe")
}

/// `|H(J) - (H(P) composed with H(Q|P))|`.
pub fn strong_additivity_residual(
    family: &EntropyFamily,
    joint: &JointDistribution,
) -> Result<Residual> {
    let direct = family.joint_entropy(joint)?;
    let marginal = family.entropy(&joint.marginal())?;
    let conditional = family.conditional_entropy(joint)?;
    Ok(Residual::between(
        direct,
        family.composition().add(marginal, conditional),
    ))
}

pub fn counterexample_probe(family: &EntropyFamily) -> Result<Residual> {
    strong_additivity_residual(family, &probe_joint())
}

/// The `n`-fold direct product of `U_2` with itself, flattened.
fn uniform_two_power(n: u32) -> Distribution {
    let half = Distribution::uniform(2).expect("n = 2");
    let mut acc = Distribution::uniform(1).expect("n = 1");
    for _ in 0..n {
        acc = acc.direct_product(&half).flatten();
    }
    acc
}

/// Entropy of the `n`-fold power of `U_2` against `n` applications of the
/// composition law to `H(U_2)`, the latter evaluated through the
/// isomorphism with ordinary addition.
pub fn chain_residual(family: &EntropyFamily, n: u32) -> Result<Residual> {
    let direct = family.entropy(&uniform_two_power(n))?;
    let base = family.entropy(&Distribution::uniform(2)?)?;
    let law = family.composition();
    let composed = law.h(f64::from(n) * law.h_inv(base)?)?;
    Ok(Residual::between(direct, composed))
}

pub fn uniform_trace_residual(family: &EntropyFamily, n: usize) -> Result<Residual> {
    let direct = family.entropy(&Distribution::uniform(n)?)?;
    Ok(Residual::between(direct, family.uniform_trace(n)?))
}

/// Reconstructs `H(m_1/m, ..., m_n/m)` from the joint of uniform blocks:
/// the closed-form trace at `m` with the combined traces at each `m_k`
/// removed by the inverse of the composition law.
pub fn refinement_consistency(family: &EntropyFamily, counts: &[usize]) -> Result<Residual> {
    let joint = JointDistribution::refinement(counts)?;
    let marginal = joint.marginal();
    let direct = family.entropy(&marginal)?;
    let blocks = counts
        .iter()
        .map(|&c| family.uniform_trace(c))
        .collect::<Result<Vec<_>>>()?;
    let conditional = family.combine_conditional(&marginal, &blocks)?;
    let total = family.uniform_trace(joint.num_cells())?;
    let composed = family.composition().sub(total, conditional)?;
    Ok(Residual::between(direct, composed))
}

pub fn product_additivity_residual(
    family: &EntropyFamily,
    p: &Distribution,
    q: &Distribution,
) -> Result<Residual> {
    let direct = family.joint_entropy(&p.direct_product(q))?;
    let composed = family
        .composition()
        .add(family.entropy(p)?, family.entropy(q)?);
    Ok(Residual::between(direct, composed))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckConfig {
    pub family: EntropyFamily,
    pub trials: usize,
    pub max_rows: usize,
    pub max_cols: usize,
    pub seed: u64,
    pub tolerance: f64,
}

impl CheckConfig {
    pub fn new(family: EntropyFamily) -> Self {
        Self {
            family,
            trials: 1000,
            max_rows: 8,
            max_cols: 8,
            seed: 0,
            tolerance: 1e-9,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.trials == 0 {
            return Err(Error::Config("trials must be at least 1".into()));
        }
        if self.max_rows < 2 {
            return Err(Error::Config("max_rows must be at least 2".into()));
        }
        if self.max_cols == 0 {
            return Err(Error::Config("max_cols must be at least 1".into()));
        }
        if !(self.tolerance > 0.0 && self.tolerance.is_finite()) {
            return Err(Error::Config(format!(
                "tolerance must be positive, got {}",
                self.tolerance
            )));
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "pass")]
    Pass,
    #[serde(rename = "violation detected")]
    ViolationDetected,
    #[serde(rename = "inconclusive")]
    Inconclusive,
}

impl Verdict {
    /// Passing uses the relative residual; violations use the absolute one.
    fn classify(relative: f64, absolute: f64, tolerance: f64) -> Self {
        if relative <= tolerance {
            Verdict::Pass
        } else if absolute >= VIOLATION_THRESHOLD {
            Verdict::ViolationDetected
        } else {
            Verdict::Inconclusive
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum OverallVerdict {
    Pass,
    Violation,
    Inconclusive,
}

/// The input on which a check attained its largest residual.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum WorstInput {
    Joint { rows: Vec<Vec<f64>> },
    Product { p: Vec<f64>, q: Vec<f64> },
    Counts { counts: Vec<usize> },
    Uniform { n: usize },
    Chain { power: u32 },
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub name: String,
    pub samples: usize,
    /// Largest residual scaled by `1 + |reference|`; the verdict uses this.
    pub max_residual: f64,
    pub mean_residual: f64,
    pub max_absolute_residual: f64,
    pub worst_input: WorstInput,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckReport {
    pub family: String,
    pub params: FamilyParams,
    pub seed: u64,
    pub prng: String,
    pub tolerance: f64,
    pub checks: Vec<CheckRecord>,
    pub verdict: OverallVerdict,
}

impl CheckReport {
    pub fn check(&self, name: &str) -> Option<&CheckRecord> {
        self.checks.iter().find(|c| c.name == name)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

fn aggregate(name: &str, samples: Vec<(Residual, WorstInput)>, tolerance: f64) -> CheckRecord {
    let count = samples.len();
    let mut worst: Option<(Residual, WorstInput)> = None;
    let mut sum = 0.0;
    let mut max_abs: f64 = 0.0;
    for (r, input) in samples {
        let rel = r.relative();
        sum += rel;
        max_abs = max_abs.max(r.absolute);
        // NaN residuals always become the worst case.
        let replace = match &worst {
            None => true,
            Some((w, _)) => rel > w.relative() || (rel.is_nan() && !w.relative().is_nan()),
        };
        if replace {
            worst = Some((r, input));
        }
    }
    let (worst_residual, worst_input) = worst.expect("at least one sample");
    let max_residual = worst_residual.relative();
    let verdict = if max_residual.is_nan() {
        Verdict::Inconclusive
    } else {
        Verdict::classify(max_residual, max_abs, tolerance)
    };
    CheckRecord {
        name: name.to_string(),
        samples: count,
        max_residual,
        mean_residual: sum / count as f64,
        max_absolute_residual: max_abs,
        worst_input,
        verdict,
    }
}

fn exp_weights<R: Rng>(rng: &mut R, len: usize) -> Vec<f64> {
    (0..len).map(|_| rng.sample::<f64, _>(Exp1)).collect()
}

/// A ragged joint with `[2, max_rows]` rows of `[1, max_cols]` cells each,
/// cells drawn from a unit-rate exponential and normalized.
pub fn random_joint<R: Rng>(rng: &mut R, max_rows: usize, max_cols: usize) -> JointDistribution {
    loop {
        let n = rng.random_range(2..=max_rows);
        let rows: Vec<Vec<f64>> = (0..n)
            .map(|_| {
                let m = rng.random_range(1..=max_cols);
                exp_weights(rng, m)
            })
            .collect();
        let total: f64 = rows.iter().flatten().sum();
        if !(total > 0.0) {
            continue;
        }
        let rows: Vec<Vec<f64>> = rows
            .into_iter()
            .map(|r| r.into_iter().map(|x| x / total).collect())
            .collect();
        if rows.iter().any(|r| r.iter().sum::<f64>() < MIN_ROW_MASS) {
            continue;
        }
        if let Ok(joint) = JointDistribution::new(rows) {
            return joint;
        }
    }
}

/// A distribution of dimension `[1, max_len]` with exponential weights.
pub fn random_distribution<R: Rng>(rng: &mut R, max_len: usize) -> Distribution {
    loop {
        let n = rng.random_range(1..=max_len);
        let w = exp_weights(rng, n);
        let total: f64 = w.iter().sum();
        if !(total > 0.0) {
            continue;
        }
        if let Ok(d) = Distribution::new(w.into_iter().map(|x| x / total).collect::<Vec<_>>()) {
            return d;
        }
    }
}

fn random_counts<R: Rng>(rng: &mut R, max_rows: usize, max_cols: usize) -> Vec<usize> {
    let n = rng.random_range(1..=max_rows);
    (0..n).map(|_| rng.random_range(1..=max_cols)).collect()
}

/// Dimensions `round(2^{k/2})` for `k = 2..=2*max_exponent`, deduplicated.
pub fn trace_dimensions(max_exponent: u32) -> Vec<usize> {
    let mut dims: Vec<usize> = (2..=2 * max_exponent)
        .map(|k| (f64::from(k) / 2.0).exp2().round() as usize)
        .collect();
    dims.dedup();
    dims
}

fn run_parallel<T, F>(inputs: Vec<T>, check: F) -> Result<Vec<(Residual, T)>>
where
    T: Send + Sync,
    F: Fn(&T) -> Result<Residual> + Sync + Send,
{
    let residuals: Vec<Result<Residual>> = inputs.par_iter().map(&check).collect();
    residuals
        .into_iter()
        .zip(inputs)
        .map(|(r, input)| Ok((r?, input)))
        .collect()
}

/// Runs every residual check on seeded random inputs plus the fixed probes.
///
/// Inputs are drawn sequentially from the seeded generator before any
/// evaluation, and per-sample residuals are aggregated in input order, so
/// the report does not depend on how evaluation is scheduled.
pub fn run_suite(cfg: &CheckConfig) -> Result<CheckReport> {
    cfg.validate()?;
    let family = cfg.family;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);

    let joints: Vec<JointDistribution> = (0..cfg.trials)
        .map(|_| random_joint(&mut rng, cfg.max_rows, cfg.max_cols))
        .collect();
    let pairs: Vec<(Distribution, Distribution)> = (0..cfg.trials)
        .map(|_| {
            let p = random_distribution(&mut rng, cfg.max_rows);
            let q = random_distribution(&mut rng, cfg.max_cols);
            (p, q)
        })
        .collect();
    let counts: Vec<Vec<usize>> = (0..cfg.trials)
        .map(|_| random_counts(&mut rng, cfg.max_rows, cfg.max_cols))
        .collect();

    let mut checks = Vec::new();

    let strong = run_parallel(joints, |j| strong_additivity_residual(&family, j))?;
    checks.push(aggregate(
        "strong_additivity",
        strong
            .into_iter()
            .map(|(r, j)| {
                (
                    r,
                    WorstInput::Joint {
                        rows: j.rows().to_vec(),
                    },
                )
            })
            .collect(),
        cfg.tolerance,
    ));

    let probe = counterexample_probe(&family)?;
    checks.push(aggregate(
        "counterexample_probe",
        vec![(
            probe,
            WorstInput::Joint {
                rows: probe_joint().rows().to_vec(),
            },
        )],
        cfg.tolerance,
    ));

    let product = run_parallel(pairs, |(p, q)| product_additivity_residual(&family, p, q))?;
    checks.push(aggregate(
        "product_additivity",
        product
            .into_iter()
            .map(|(r, (p, q))| {
                (
                    r,
                    WorstInput::Product {
                        p: p.probs().to_vec(),
                        q: q.probs().to_vec(),
                    },
                )
            })
            .collect(),
        cfg.tolerance,
    ));

    let refinement = run_parallel(counts, |c| refinement_consistency(&family, c))?;
    checks.push(aggregate(
        "refinement_consistency",
        refinement
            .into_iter()
            .map(|(r, counts)| (r, WorstInput::Counts { counts }))
            .collect(),
        cfg.tolerance,
    ));

    let dims = trace_dimensions(MAX_TRACE_EXPONENT);
    let trace = run_parallel(dims, |&n| uniform_trace_residual(&family, n))?;
    checks.push(aggregate(
        "uniform_trace",
        trace
            .into_iter()
            .map(|(r, n)| (r, WorstInput::Uniform { n }))
            .collect(),
        cfg.tolerance,
    ));

    let powers: Vec<u32> = (1..=MAX_CHAIN).collect();
    let chain = run_parallel(powers, |&n| chain_residual(&family, n))?;
    checks.push(aggregate(
        "chain",
        chain
            .into_iter()
            .map(|(r, power)| (r, WorstInput::Chain { power }))
            .collect(),
        cfg.tolerance,
    ));

    checks.sort_by(|a, b| a.name.cmp(&b.name));
    let verdict = if checks.iter().all(|c| c.verdict == Verdict::Pass) {
        OverallVerdict::Pass
    } else if checks
        .iter()
        .any(|c| c.verdict == Verdict::ViolationDetected)
    {
        OverallVerdict::Violation
    } else {
        OverallVerdict::Inconclusive
    };

    Ok(CheckReport {
        family: family.kind_name().to_string(),
        params: family.params(),
        seed: cfg.seed,
        prng: PRNG_NAME.to_string(),
        tolerance: cfg.tolerance,
        checks,
        verdict,
    })
}
