//! Consistency of a similarity measure on interval-valued decision data.
//!
//! The decision matrix is projected onto its lower and upper endpoints.
//! Each projection gets its own positive ideal and its own similarity
//! scores, and the consistency degree is the mean absolute gap between the
//! two score columns over the alternatives.

use serde::{Deserialize, Serialize};

use crate::decision::{scores_against, DecisionProblem, Polarity};
use crate::error::{Error, Result};
use crate::model::{BoundSelector, InrElement, MeasureKind};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Candidate {
    pub measure: MeasureKind,
    pub weighted: bool,
}

impl Candidate {
    pub fn new(measure: MeasureKind, weighted: bool) -> Self {
        Candidate { measure, weighted }
    }

    /// Jaccard, Dice, cosine, unweighted then weighted.
    pub fn all() -> Vec<Candidate> {
        [false, true]
            .into_iter()
            .flat_map(|w| MeasureKind::ALL.map(|m| Candidate::new(m, w)))
            .collect()
    }
}

/// Which consistency degree wins the selection.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    #[default]
    Maximize,
    Minimize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConsistencyEntry {
    pub candidate: Candidate,
    /// Scores against the lower-projection ideal, in alternative order.
    pub lower: Vec<f64>,
    /// Scores against the upper-projection ideal, in alternative order.
    pub upper: Vec<f64>,
    pub degree: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConsistencyReport {
    pub alternatives: Vec<String>,
    pub objective: Objective,
    pub entries: Vec<ConsistencyEntry>,
    pub selected: Candidate,
}

impl ConsistencyReport {
    pub fn entry(&self, candidate: Candidate) -> Option<&ConsistencyEntry> {
        self.entries.iter().find(|e| e.candidate == candidate)
    }
}

fn projected_scores(
    problem: &DecisionProblem<InrElement>,
    which: BoundSelector,
    candidate: Candidate,
) -> Result<Vec<f64>> {
    let projected = problem.project(which);
    let ideal = projected.ideal(Polarity::Positive);
    Ok(scores_against(&projected, &ideal, candidate.measure, candidate.weighted)?
        .into_iter()
        .map(|s| s.value)
        .collect())
}

pub fn analyze(problem: &DecisionProblem<InrElement>, candidate: Candidate) -> Result<ConsistencyEntry> {
    let lower = projected_scores(problem, BoundSelector::Lower, candidate)?;
    let upper = projected_scores(problem, BoundSelector::Upper, candidate)?;
    let degree = lower.iter().zip(&upper).map(|(l, u)| (l - u).abs()).sum::<f64>() / lower.len() as f64;
    Ok(ConsistencyEntry {
        candidate,
        lower,
        upper,
        degree,
    })
}

pub fn consistency_degree(
    problem: &DecisionProblem<InrElement>,
    measure: MeasureKind,
    weighted: bool,
) -> Result<f64> {
    Ok(analyze(problem, Candidate::new(measure, weighted))?.degree)
}

/// Evaluates every candidate and selects the one with the best degree under
/// `objective`. Ties go to the earlier candidate.
pub fn select_measure(
    problem: &DecisionProblem<InrElement>,
    candidates: &[Candidate],
    objective: Objective,
) -> Result<ConsistencyReport> {
    if candidates.is_empty() {
        return Err(Error::NoCandidates);
    }
    let entries = candidates
        .iter()
        .map(|&c| analyze(problem, c))
        .collect::<Result<Vec<_>>>()?;
    let mut best = &entries[0];
    for e in &entries[1..] {
        let better = match objective {
            Objective::Maximize => e.degree > best.degree,
            Objective::Minimize => e.degree < best.degree,
        };
        if better {
            best = e;
        }
    }
    Ok(ConsistencyReport {
        alternatives: problem.alternatives().to_vec(),
        objective,
        selected: best.candidate,
        entries,
    })
}
