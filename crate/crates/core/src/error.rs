use std::fmt;

use thiserror::Error;

use crate::model::{BoundSelector, Component, Flavor};

pub type Result<T, E = Error> = std::result::Result<T, E>;

/// A value that breaks the `[0, 1]` or triple-sum bound.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum RangeViolation {
    #[error("{component}[{slot}] = {value} is outside [0, 1]")]
    Degree {
        component: Component,
        slot: usize,
        value: f64,
    },
    #[error("slot {slot}: truth + indeterminacy + falsity = {sum} exceeds 3{}", endpoint_suffix(.endpoint))]
    TripleSum {
        slot: usize,
        sum: f64,
        endpoint: Option<BoundSelector>,
    },
}

fn endpoint_suffix(endpoint: &Option<BoundSelector>) -> String {
    match endpoint {
        Some(b) => format!(" ({b} endpoints)"),
        None => String::new(),
    }
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    RangeViolation(#[from] RangeViolation),

    #[error("{component}[{slot}] is the inverted interval [{lo}, {hi}]")]
    IntervalInversion {
        component: Component,
        slot: usize,
        lo: f64,
        hi: f64,
    },

    #[error("dimension mismatch: expected {expected} slots, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),

    #[error("universe is empty")]
    EmptyUniverse,

    #[error("{labels} labels but {records} element records")]
    RecordCountMismatch { labels: usize, records: usize },

    #[error("sets are defined over different universes")]
    UniverseMismatch,

    #[error("expected {expected} data, found {found}")]
    FlavorMismatch { expected: Flavor, found: Flavor },

    #[error("similarity is undefined at `{label}`: both elements are identically zero")]
    UndefinedSimilarity { label: String },

    #[error("invalid weights: {0}")]
    WeightError(String),

    #[error("no candidate measures given")]
    NoCandidates,

    #[error("syntax error: {0}")]
    Syntax(String),

    #[error("schema error: {0}")]
    Schema(String),

    #[error("{path}: {source}")]
    Located { path: Path, source: Box<Error> },
}

impl Error {
    pub fn at(self, path: Path) -> Self {
        Error::Located {
            path,
            source: Box::new(self),
        }
    }

    /// The innermost error, with all location wrappers removed.
    pub fn root(&self) -> &Error {
        match self {
            Error::Located { source, .. } => source.root(),
            other => other,
        }
    }
}

/// Where in a set or decision matrix an error was found.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Path {
    pub alternative: Option<String>,
    pub element: Option<String>,
}

impl Path {
    pub fn element(label: impl Into<String>) -> Self {
        Path {
            alternative: None,
            element: Some(label.into()),
        }
    }

    pub fn alternative(label: impl Into<String>) -> Self {
        Path {
            alternative: Some(label.into()),
            element: None,
        }
    }

    pub fn cell(alternative: impl Into<String>, criterion: impl Into<String>) -> Self {
        Path {
            alternative: Some(alternative.into()),
            element: Some(criterion.into()),
        }
    }
}

impl fmt::Display for Path {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (&self.alternative, &self.element) {
            (Some(a), Some(c)) => write!(f, "alternative `{a}`, criterion `{c}`"),
            (Some(a), None) => write!(f, "alternative `{a}`"),
            (None, Some(e)) => write!(f, "element `{e}`"),
            (None, None) => write!(f, "document"),
        }
    }
}
