//! Similarity measures over single-valued and interval neutrosophic refined
//! sets, ideal-solution ranking for multi-criteria decisions, and
//! consistency analysis for choosing a measure on interval data.

pub mod algebra;
#[cfg(feature = "cli")]
pub mod cli;
pub mod consistency;
pub mod decision;
pub mod document;
pub mod error;
pub mod model;
pub mod report;
pub mod similarity;

pub use consistency::{analyze, consistency_degree, select_measure, Candidate, ConsistencyReport, Objective};
pub use decision::{rank, CriterionKind, CriterionSpec, DecisionProblem, Polarity, RankingReport};
pub use document::{parse_problem, parse_set, AnySet, Problem};
pub use error::{Error, Path, RangeViolation, Result};
pub use model::{
    BoundSelector, Component, Flavor, InrElement, InrSet, MeasureKind, Membership, RefinedSet, SvnrElement, SvnrSet,
    UnitInterval, UnitValue,
};
pub use similarity::{similarity, weighted_similarity, SimilarityScore, WeightVector};
