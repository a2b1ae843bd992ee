//! JSON documents for decision problems and refined sets.
//!
//! Problem document (`"schema": 1`):
//!
//! ```json
//! {
//!   "schema": 1,
//!   "flavor": "svnr",
//!   "alternatives": ["A1", "A2"],
//!   "criteria": [{ "label": "C1", "kind": "benefit", "weight": 1.0 }],
//!   "matrix": [
//!     [{ "truth": [0.1, 0.2], "indet": [0.3, 0.3], "falsity": [0.2, 0.4] }],
//!     [{ "truth": [0.5, 0.6], "indet": [0.2, 0.4], "falsity": [0.1, 0.6] }]
//!   ]
//! }
//! ```
//!
//! For `"flavor": "inr"` every degree is a `[lo, hi]` pair instead of a
//! number. A set document replaces `alternatives`/`criteria`/`matrix` with
//! `universe` (labels) and `elements` (one cell per label).

use serde::{Deserialize, Serialize};

use crate::decision::{CriterionSpec, DecisionProblem};
use crate::error::{Error, Path, Result};
use crate::model::{Component, Flavor, InrElement, Membership, RefinedSet, SvnrElement};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum Degree {
    Point(f64),
    Interval([f64; 2]),
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CellDocument {
    pub truth: Vec<Degree>,
    pub indet: Vec<Degree>,
    pub falsity: Vec<Degree>,
}

impl CellDocument {
    fn sequence(&self, c: Component) -> &[Degree] {
        match c {
            Component::Truth => &self.truth,
            Component::Indet => &self.indet,
            Component::Falsity => &self.falsity,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemDocument {
    pub schema: u32,
    pub flavor: Flavor,
    pub alternatives: Vec<String>,
    pub criteria: Vec<CriterionSpec>,
    pub matrix: Vec<Vec<CellDocument>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SetDocument {
    pub schema: u32,
    pub flavor: Flavor,
    pub universe: Vec<String>,
    pub elements: Vec<CellDocument>,
}

/// Element types that have a document cell representation.
pub trait DocumentElement: Membership + Sized {
    fn from_cell(cell: &CellDocument) -> Result<Self>;
    fn to_cell(&self) -> CellDocument;
}

fn points(cell: &CellDocument, c: Component) -> Result<Vec<f64>> {
    cell.sequence(c)
        .iter()
        .enumerate()
        .map(|(slot, d)| match d {
            Degree::Point(v) => Ok(*v),
            Degree::Interval(_) => Err(Error::Schema(format!(
                "{c}[{slot}]: expected a number in SVNR data, found an interval"
            ))),
        })
        .collect()
}

fn intervals(cell: &CellDocument, c: Component) -> Result<Vec<[f64; 2]>> {
    cell.sequence(c)
        .iter()
        .enumerate()
        .map(|(slot, d)| match d {
            Degree::Interval(iv) => Ok(*iv),
            Degree::Point(_) => Err(Error::Schema(format!(
                "{c}[{slot}]: expected a [lo, hi] pair in INR data, found a number"
            ))),
        })
        .collect()
}

impl DocumentElement for SvnrElement {
    fn from_cell(cell: &CellDocument) -> Result<Self> {
        SvnrElement::new(
            &points(cell, Component::Truth)?,
            &points(cell, Component::Indet)?,
            &points(cell, Component::Falsity)?,
        )
    }

    fn to_cell(&self) -> CellDocument {
        let seq = |c| self.sequence(c).iter().map(|v| Degree::Point(v.get())).collect();
        CellDocument {
            truth: seq(Component::Truth),
            indet: seq(Component::Indet),
            falsity: seq(Component::Falsity),
        }
    }
}

impl DocumentElement for InrElement {
    fn from_cell(cell: &CellDocument) -> Result<Self> {
        InrElement::new(
            &intervals(cell, Component::Truth)?,
            &intervals(cell, Component::Indet)?,
            &intervals(cell, Component::Falsity)?,
        )
    }

    fn to_cell(&self) -> CellDocument {
        let seq = |c| {
            self.sequence(c)
                .iter()
                .map(|iv| Degree::Interval([iv.lo().get(), iv.hi().get()]))
                .collect()
        };
        CellDocument {
            truth: seq(Component::Truth),
            indet: seq(Component::Indet),
            falsity: seq(Component::Falsity),
        }
    }
}

/// A parsed decision problem of either flavor.
#[derive(Debug, Clone, PartialEq)]
pub enum Problem {
    Svnr(DecisionProblem<SvnrElement>),
    Inr(DecisionProblem<InrElement>),
}

impl Problem {
    pub fn flavor(&self) -> Flavor {
        match self {
            Problem::Svnr(_) => Flavor::Svnr,
            Problem::Inr(_) => Flavor::Inr,
        }
    }
}

/// A parsed refined set of either flavor.
#[derive(Debug, Clone, PartialEq)]
pub enum AnySet {
    Svnr(RefinedSet<SvnrElement>),
    Inr(RefinedSet<InrElement>),
}

impl AnySet {
    pub fn flavor(&self) -> Flavor {
        match self {
            AnySet::Svnr(_) => Flavor::Svnr,
            AnySet::Inr(_) => Flavor::Inr,
        }
    }
}

fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| {
        use serde_json::error::Category;
        match e.classify() {
            Category::Data => Error::Schema(e.to_string()),
            Category::Syntax | Category::Eof | Category::Io => Error::Syntax(e.to_string()),
        }
    })
}

fn check_schema(version: u32) -> Result<()> {
    if version != SCHEMA_VERSION {
        return Err(Error::Schema(format!(
            "unsupported schema version {version}, expected {SCHEMA_VERSION}"
        )));
    }
    Ok(())
}

fn build_problem<E: DocumentElement>(doc: &ProblemDocument) -> Result<DecisionProblem<E>> {
    if doc.matrix.len() != doc.alternatives.len() {
        return Err(Error::Schema(format!(
            "matrix has {} rows for {} alternatives",
            doc.matrix.len(),
            doc.alternatives.len()
        )));
    }
    let mut matrix = Vec::with_capacity(doc.matrix.len());
    for (alt, row) in doc.alternatives.iter().zip(&doc.matrix) {
        if row.len() != doc.criteria.len() {
            return Err(Error::Schema(format!(
                "row has {} cells for {} criteria",
                row.len(),
                doc.criteria.len()
            ))
            .at(Path::alternative(alt.clone())));
        }
        let cells = doc
            .criteria
            .iter()
            .zip(row)
            .map(|(c, cell)| E::from_cell(cell).map_err(|e| e.at(Path::cell(alt.clone(), c.label.clone()))))
            .collect::<Result<Vec<E>>>()?;
        matrix.push(cells);
    }
    DecisionProblem::new(doc.alternatives.clone(), doc.criteria.clone(), matrix).map_err(|e| match e {
        e @ Error::WeightError(_) => e.at(Path::element("criteria weights")),
        e => e,
    })
}

pub fn problem_from_document(doc: &ProblemDocument) -> Result<Problem> {
    check_schema(doc.schema)?;
    Ok(match doc.flavor {
        Flavor::Svnr => Problem::Svnr(build_problem(doc)?),
        Flavor::Inr => Problem::Inr(build_problem(doc)?),
    })
}

/// Parses and validates a problem document.
pub fn parse_problem(text: &str) -> Result<Problem> {
    problem_from_document(&from_json(text)?)
}

pub fn problem_document<E: DocumentElement>(problem: &DecisionProblem<E>) -> ProblemDocument {
    ProblemDocument {
        schema: SCHEMA_VERSION,
        flavor: E::FLAVOR,
        alternatives: problem.alternatives().to_vec(),
        criteria: problem.criteria().to_vec(),
        matrix: problem
            .matrix()
            .iter()
            .map(|row| row.iter().map(DocumentElement::to_cell).collect())
            .collect(),
    }
}

pub fn write_problem(problem: &Problem) -> String {
    let doc = match problem {
        Problem::Svnr(p) => problem_document(p),
        Problem::Inr(p) => problem_document(p),
    };
    serde_json::to_string_pretty(&doc).expect("documents serialize")
}

fn build_set<E: DocumentElement>(doc: &SetDocument) -> Result<RefinedSet<E>> {
    if doc.universe.len() != doc.elements.len() {
        return Err(Error::RecordCountMismatch {
            labels: doc.universe.len(),
            records: doc.elements.len(),
        });
    }
    let elements = doc
        .universe
        .iter()
        .zip(&doc.elements)
        .map(|(label, cell)| E::from_cell(cell).map_err(|e| e.at(Path::element(label.clone()))))
        .collect::<Result<Vec<E>>>()?;
    RefinedSet::new(doc.universe.clone(), elements)
}

pub fn set_from_document(doc: &SetDocument) -> Result<AnySet> {
    check_schema(doc.schema)?;
    Ok(match doc.flavor {
        Flavor::Svnr => AnySet::Svnr(build_set(doc)?),
        Flavor::Inr => AnySet::Inr(build_set(doc)?),
    })
}

pub fn parse_set(text: &str) -> Result<AnySet> {
    set_from_document(&from_json(text)?)
}

pub fn set_document<E: DocumentElement>(set: &RefinedSet<E>) -> SetDocument {
    SetDocument {
        schema: SCHEMA_VERSION,
        flavor: E::FLAVOR,
        universe: set.universe().to_vec(),
        elements: set.elements().iter().map(DocumentElement::to_cell).collect(),
    }
}

pub fn write_set(set: &AnySet) -> String {
    let doc = match set {
        AnySet::Svnr(s) => set_document(s),
        AnySet::Inr(s) => set_document(s),
    };
    serde_json::to_string_pretty(&doc).expect("documents serialize")
}
