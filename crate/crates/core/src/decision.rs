//! Ideal-solution ranking of alternatives over benefit and cost criteria.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Path, Result};
use crate::model::{
    check_unique_labels, BoundSelector, Extreme, InrElement, MeasureKind, Membership, RefinedSet,
    SvnrElement,
};
use crate::similarity::{self, SimilarityScore, WeightVector};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum CriterionKind {
    Benefit,
    Cost,
}

impl fmt::Display for CriterionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CriterionKind::Benefit => "benefit",
            CriterionKind::Cost => "cost",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriterionSpec {
    pub label: String,
    pub kind: CriterionKind,
    pub weight: f64,
}

impl CriterionSpec {
    pub fn new(label: impl Into<String>, kind: CriterionKind, weight: f64) -> Self {
        CriterionSpec {
            label: label.into(),
            kind,
            weight,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Polarity {
    Positive,
    Negative,
}

/// Alternatives × criteria matrix of refined values sharing one dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct DecisionProblem<E> {
    alternatives: Vec<String>,
    criteria: Vec<CriterionSpec>,
    matrix: Vec<Vec<E>>,
    weights: WeightVector,
    dimension: usize,
}

impl<E: Membership> DecisionProblem<E> {
    pub fn new(
        alternatives: Vec<String>,
        criteria: Vec<CriterionSpec>,
        matrix: Vec<Vec<E>>,
    ) -> Result<Self> {
        if alternatives.is_empty() {
            return Err(Error::Schema("at least one alternative is required".into()));
        }
        if criteria.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        check_unique_labels(&alternatives)?;
        let labels: Vec<String> = criteria.iter().map(|c| c.label.clone()).collect();
        check_unique_labels(&labels)?;
        let weights = WeightVector::new(criteria.iter().map(|c| c.weight).collect())?;
        if matrix.len() != alternatives.len() {
            return Err(Error::Schema(format!(
                "matrix has {} rows for {} alternatives",
                matrix.len(),
                alternatives.len()
            )));
        }
        let dimension = matrix[0].first().map(Membership::dimension).unwrap_or(0);
        for (alt, row) in alternatives.iter().zip(&matrix) {
            if row.len() != criteria.len() {
                return Err(Error::Schema(format!(
                    "row has {} cells for {} criteria",
                    row.len(),
                    criteria.len()
                ))
                .at(Path::alternative(alt.clone())));
            }
            for (c, cell) in criteria.iter().zip(row) {
                if cell.dimension() != dimension {
                    return Err(Error::DimensionMismatch {
                        expected: dimension,
                        found: cell.dimension(),
                    }
                    .at(Path::cell(alt.clone(), c.label.clone())));
                }
            }
        }
        Ok(DecisionProblem {
            alternatives,
            criteria,
            matrix,
            weights,
            dimension,
        })
    }

    pub fn alternatives(&self) -> &[String] {
        &self.alternatives
    }

    pub fn criteria(&self) -> &[CriterionSpec] {
        &self.criteria
    }

    pub fn matrix(&self) -> &[Vec<E>] {
        &self.matrix
    }

    pub fn weights(&self) -> &WeightVector {
        &self.weights
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn criterion_labels(&self) -> Vec<String> {
        self.criteria.iter().map(|c| c.label.clone()).collect()
    }

    /// Row `index` as a refined set over the criteria.
    pub fn alternative_set(&self, index: usize) -> RefinedSet<E> {
        RefinedSet::new(self.criterion_labels(), self.matrix[index].clone())
            .expect("validated problem rows form valid sets")
    }

    /// The ideal alternative: per criterion and slot (and endpoint), the best
    /// observed values for `Positive`, the worst for `Negative`. A benefit
    /// criterion's best is max truth with min indeterminacy and falsity; a
    /// cost criterion's best is the reverse.
    pub fn ideal(&self, polarity: Polarity) -> RefinedSet<E> {
        let elements = self
            .criteria
            .iter()
            .enumerate()
            .map(|(j, c)| {
                let truth = match (c.kind, polarity) {
                    (CriterionKind::Benefit, Polarity::Positive)
                    | (CriterionKind::Cost, Polarity::Negative) => Extreme::Max,
                    _ => Extreme::Min,
                };
                let mut column = self.matrix.iter().map(|row| &row[j]);
                let first = column.next().expect("non-empty problem").clone();
                column.fold(first, |acc, e| acc.combine(e, truth))
            })
            .collect();
        RefinedSet::new(self.criterion_labels(), elements).expect("ideal has the problem's shape")
    }

    /// Same problem with the rows reordered; `order[i]` is the old index of
    /// the new row `i`.
    pub fn permuted(&self, order: &[usize]) -> Result<Self> {
        DecisionProblem::new(
            order.iter().map(|&i| self.alternatives[i].clone()).collect(),
            self.criteria.clone(),
            order.iter().map(|&i| self.matrix[i].clone()).collect(),
        )
    }

    /// Same problem with one more row appended.
    pub fn with_alternative(&self, label: impl Into<String>, row: Vec<E>) -> Result<Self> {
        let mut alternatives = self.alternatives.clone();
        alternatives.push(label.into());
        let mut matrix = self.matrix.clone();
        matrix.push(row);
        DecisionProblem::new(alternatives, self.criteria.clone(), matrix)
    }
}

impl DecisionProblem<InrElement> {
    /// Endpoint projection of every cell.
    pub fn project(&self, which: BoundSelector) -> DecisionProblem<SvnrElement> {
        DecisionProblem {
            alternatives: self.alternatives.clone(),
            criteria: self.criteria.clone(),
            matrix: self
                .matrix
                .iter()
                .map(|row| row.iter().map(|e| e.project(which)).collect())
                .collect(),
            weights: self.weights.clone(),
            dimension: self.dimension,
        }
    }
}

pub fn build_ideal<E: Membership>(problem: &DecisionProblem<E>, polarity: Polarity) -> RefinedSet<E> {
    problem.ideal(polarity)
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankingReport<E> {
    pub measure: MeasureKind,
    pub weighted: bool,
    pub alternatives: Vec<String>,
    /// One score per alternative, in problem order.
    pub scores: Vec<SimilarityScore>,
    /// Alternative indices, best first.
    pub order: Vec<usize>,
    pub ideal: RefinedSet<E>,
}

impl<E> RankingReport<E> {
    pub fn ordered_labels(&self) -> Vec<&str> {
        self.order.iter().map(|&i| self.alternatives[i].as_str()).collect()
    }

    pub fn score_of(&self, label: &str) -> Option<f64> {
        self.alternatives
            .iter()
            .position(|a| a == label)
            .map(|i| self.scores[i].value)
    }
}

/// Similarity of every alternative to `ideal`, in problem order.
pub fn scores_against<E: Membership>(
    problem: &DecisionProblem<E>,
    ideal: &RefinedSet<E>,
    measure: MeasureKind,
    weighted: bool,
) -> Result<Vec<SimilarityScore>> {
    let weights = weighted.then(|| problem.weights());
    (0..problem.alternatives.len())
        .map(|i| {
            similarity::score(measure, ideal, &problem.alternative_set(i), weights).map_err(|e| {
                similarity::locate_undefined(e, || Path::alternative(problem.alternatives[i].clone()))
            })
        })
        .collect()
}

/// Descending by score; equal scores keep problem order.
pub fn order_by_score(scores: &[SimilarityScore]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..scores.len()).collect();
    order.sort_by(|&a, &b| scores[b].value.total_cmp(&scores[a].value));
    order
}

/// Ranks every alternative by its similarity to the positive ideal.
pub fn rank<E: Membership>(
    problem: &DecisionProblem<E>,
    measure: MeasureKind,
    weighted: bool,
) -> Result<RankingReport<E>> {
    let ideal = problem.ideal(Polarity::Positive);
    let scores = scores_against(problem, &ideal, measure, weighted)?;
    let order = order_by_score(&scores);
    Ok(RankingReport {
        measure,
        weighted,
        alternatives: problem.alternatives.clone(),
        scores,
        order,
        ideal,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::model::UnitValue;

    fn cell(t: &[f64], i: &[f64], f: &[f64]) -> SvnrElement {
        SvnrElement::new(t, i, f).unwrap()
    }

    fn small() -> DecisionProblem<SvnrElement> {
        DecisionProblem::new(
            vec!["A".into(), "B".into()],
            vec![
                CriterionSpec::new("good", CriterionKind::Benefit, 0.6),
                CriterionSpec::new("bad", CriterionKind::Cost, 0.4),
            ],
            vec![
                vec![cell(&[0.9, 0.2], &[0.1, 0.3], &[0.0, 0.5]), cell(&[0.1, 0.1], &[0.2, 0.2], &[0.7, 0.6])],
                vec![cell(&[0.4, 0.6], &[0.5, 0.1], &[0.2, 0.2]), cell(&[0.8, 0.2], &[0.1, 0.4], &[0.3, 0.9])],
            ],
        )
        .unwrap()
    }

    fn vals(s: &[UnitValue]) -> Vec<f64> {
        s.iter().map(|v| v.get()).collect()
    }

    #[test]
    fn ideal_rules() {
        let p = small();
        let pos = p.ideal(Polarity::Positive);
        let good = pos.get("good").unwrap();
        assert_eq!(vals(good.truth()), [0.9, 0.6]);
        assert_eq!(vals(good.indet()), [0.1, 0.1]);
        assert_eq!(vals(good.falsity()), [0.0, 0.2]);
        let bad = pos.get("bad").unwrap();
        assert_eq!(vals(bad.truth()), [0.1, 0.1]);
        assert_eq!(vals(bad.indet()), [0.2, 0.4]);
        assert_eq!(vals(bad.falsity()), [0.7, 0.9]);

        let neg = p.ideal(Polarity::Negative);
        let good = neg.get("good").unwrap();
        assert_eq!(vals(good.truth()), [0.4, 0.2]);
        assert_eq!(vals(good.indet()), [0.5, 0.3]);
        let bad = neg.get("bad").unwrap();
        assert_eq!(vals(bad.truth()), [0.8, 0.2]);
        assert_eq!(vals(bad.falsity()), [0.3, 0.6]);
    }

    #[test]
    fn single_alternative_ideal_is_the_row() {
        let p = small().permuted(&[1]).unwrap();
        let row = p.alternative_set(0);
        assert_eq!(p.ideal(Polarity::Positive), row);
        assert_eq!(p.ideal(Polarity::Negative), row);
    }

    #[test]
    fn ties_keep_problem_order() {
        let row = vec![cell(&[0.5], &[0.5], &[0.5])];
        let p = DecisionProblem::new(
            vec!["first".into(), "second".into()],
            vec![CriterionSpec::new("c", CriterionKind::Benefit, 1.0)],
            vec![row.clone(), row],
        )
        .unwrap();
        let r = rank(&p, MeasureKind::Dice, false).unwrap();
        assert_eq!(r.ordered_labels(), ["first", "second"]);
    }

    #[test]
    fn problem_validation() {
        let c = cell(&[0.5], &[0.5], &[0.5]);
        let crit = |w: f64| vec![CriterionSpec::new("c", CriterionKind::Benefit, w)];
        assert!(matches!(
            DecisionProblem::new(vec!["a".into()], crit(0.9), vec![vec![c.clone()]]),
            Err(Error::WeightError(_))
        ));
        assert!(matches!(
            DecisionProblem::new(vec!["a".into(), "a".into()], crit(1.0), vec![vec![c.clone()], vec![c.clone()]]),
            Err(Error::DuplicateLabel(_))
        ));
        let wide = cell(&[0.5, 0.5], &[0.5, 0.5], &[0.5, 0.5]);
        let err = DecisionProblem::new(vec!["a".into(), "b".into()], crit(1.0), vec![vec![c.clone()], vec![wide]])
            .unwrap_err();
        assert!(matches!(err.root(), Error::DimensionMismatch { .. }));
        assert!(err.to_string().contains("alternative `b`, criterion `c`"), "{err}");
    }

    #[test]
    fn undefined_similarity_names_the_alternative() {
        let z = cell(&[0.0], &[0.0], &[0.0]);
        let p = DecisionProblem::new(
            vec!["ok".into(), "zero".into()],
            vec![
                CriterionSpec::new("c1", CriterionKind::Benefit, 0.5),
                CriterionSpec::new("c2", CriterionKind::Benefit, 0.5),
            ],
            vec![vec![cell(&[0.3], &[0.1], &[0.1]), z.clone()], vec![z.clone(), z]],
        )
        .unwrap();
        let err = rank(&p, MeasureKind::Jaccard, false).unwrap_err();
        assert!(matches!(err.root(), Error::UndefinedSimilarity { label } if label == "c2"));
        assert!(err.to_string().contains("alternative `ok`"), "{err}");
    }
}
