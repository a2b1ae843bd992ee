//! Jaccard, Dice and cosine similarity between refined sets.
//!
//! Each universe element contributes one ratio built from the inner
//! products of the two elements taken as flat vectors: every slot of the
//! truth, indeterminacy and falsity sequences, and for interval data both
//! endpoints. With `a·b`, `a·a`, `b·b` those products:
//!
//! - Jaccard: `a·b / (a·a + b·b - a·b)`
//! - Dice:    `2 a·b / (a·a + b·b)`
//! - cosine:  `a·b / (|a| |b|)`
//!
//! The plain measure averages the per-element ratios; the weighted one
//! takes `Σ w_j ratio_j`. For `p = 1` single-valued sets these are the
//! usual vector similarity measures of single-valued neutrosophic sets, and
//! degenerate intervals `[v, v]` give the same values as the single-valued
//! data `v`.

use serde::Serialize;

use crate::error::{Error, Path, Result};
use crate::model::{MeasureKind, Membership, Products, RefinedSet};

/// Allowed drift of `Σ w_j` from 1.
pub const WEIGHT_SUM_TOLERANCE: f64 = 1e-6;

/// Non-negative per-element weights summing to 1.
#[derive(Debug, Clone, PartialEq, Serialize)]
#[serde(transparent)]
pub struct WeightVector(Vec<f64>);

impl WeightVector {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::WeightError("no weights given".into()));
        }
        if let Some((j, w)) = weights.iter().enumerate().find(|(_, w)| !(w.is_finite() && **w >= 0.0)) {
            return Err(Error::WeightError(format!("weight {j} is {w}, expected a non-negative number")));
        }
        let sum: f64 = weights.iter().sum();
        if (sum - 1.0).abs() > WEIGHT_SUM_TOLERANCE {
            return Err(Error::WeightError(format!("weights sum to {sum}, expected 1")));
        }
        Ok(WeightVector(weights))
    }

    pub fn uniform(n: usize) -> Self {
        WeightVector(vec![1.0 / n as f64; n])
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct SimilarityScore {
    pub value: f64,
    pub measure: MeasureKind,
    pub weighted: bool,
}

impl MeasureKind {
    /// Ratio for one element pair. `None` when both vectors are zero.
    pub fn term(self, p: Products) -> Option<f64> {
        if p.left == 0.0 && p.right == 0.0 {
            return None;
        }
        Some(match self {
            MeasureKind::Jaccard => p.cross / (p.left + p.right - p.cross),
            MeasureKind::Dice => 2.0 * p.cross / (p.left + p.right),
            MeasureKind::Cosine => {
                if p.left == 0.0 || p.right == 0.0 {
                    0.0
                } else {
                    // sqrt rounding can push identical vectors to 1 + ulp
                    (p.cross / (p.left.sqrt() * p.right.sqrt())).min(1.0)
                }
            }
        })
    }
}

/// Neumaier-compensated sum in iteration order.
fn compensated_sum(values: impl IntoIterator<Item = f64>) -> f64 {
    let mut sum = 0.0_f64;
    let mut c = 0.0_f64;
    for v in values {
        let t = sum + v;
        if sum.abs() >= v.abs() {
            c += (sum - t) + v;
        } else {
            c += (v - t) + sum;
        }
        sum = t;
    }
    sum + c
}

/// Per-element ratios in universe order.
pub fn element_terms<E: Membership>(
    kind: MeasureKind,
    a: &RefinedSet<E>,
    b: &RefinedSet<E>,
) -> Result<Vec<f64>> {
    a.check_compatible(b)?;
    a.iter()
        .zip(b.elements())
        .map(|((label, x), y)| {
            kind.term(x.products(y)).ok_or_else(|| Error::UndefinedSimilarity {
                label: label.to_string(),
            })
        })
        .collect()
}

/// Mean of the per-element ratios.
pub fn similarity<E: Membership>(
    kind: MeasureKind,
    a: &RefinedSet<E>,
    b: &RefinedSet<E>,
) -> Result<SimilarityScore> {
    let t = element_terms(kind, a, b)?;
    let n = t.len() as f64;
    Ok(SimilarityScore {
        value: compensated_sum(t) / n,
        measure: kind,
        weighted: false,
    })
}

/// Weighted sum of the per-element ratios.
pub fn weighted_similarity<E: Membership>(
    kind: MeasureKind,
    a: &RefinedSet<E>,
    b: &RefinedSet<E>,
    weights: &WeightVector,
) -> Result<SimilarityScore> {
    if weights.len() != a.len() {
        return Err(Error::WeightError(format!(
            "{} weights for {} universe elements",
            weights.len(),
            a.len()
        )));
    }
    let t = element_terms(kind, a, b)?;
    Ok(SimilarityScore {
        value: compensated_sum(t.iter().zip(weights.as_slice()).map(|(t, w)| t * w)),
        measure: kind,
        weighted: true,
    })
}

/// [`similarity`] or [`weighted_similarity`], depending on `weights`.
pub fn score<E: Membership>(
    kind: MeasureKind,
    a: &RefinedSet<E>,
    b: &RefinedSet<E>,
    weights: Option<&WeightVector>,
) -> Result<SimilarityScore> {
    match weights {
        Some(w) => weighted_similarity(kind, a, b, w),
        None => similarity(kind, a, b),
    }
}

pub(crate) fn locate_undefined(err: Error, path: impl FnOnce() -> Path) -> Error {
    match err {
        e @ Error::UndefinedSimilarity { .. } => e.at(path()),
        e => e,
    }
}
