//! Human tables (5 decimals) and JSON reports (full precision).

use std::fmt::Write as _;

use serde::Serialize;

use crate::consistency::{Candidate, ConsistencyReport, Objective};
use crate::decision::{Polarity, RankingReport};
use crate::document::{set_document, DocumentElement, SetDocument};
use crate::model::{Component, InrElement, MeasureKind, Membership, RefinedSet, SvnrElement};
use crate::similarity::SimilarityScore;

pub fn round5(v: f64) -> String {
    format!("{v:.5}")
}

pub fn candidate_name(c: Candidate) -> String {
    if c.weighted {
        format!("weighted {}", c.measure)
    } else {
        c.measure.to_string()
    }
}

/// One-line rendering of a refined value, e.g. `<(0.1, 0.2), (0, 0), (1, 0.3)>`.
pub trait CellDisplay: Membership {
    fn display(&self) -> String;
}

fn join<T>(items: &[T], f: impl Fn(&T) -> String) -> String {
    items.iter().map(f).collect::<Vec<_>>().join(", ")
}

impl CellDisplay for SvnrElement {
    fn display(&self) -> String {
        let parts: Vec<String> = Component::ALL
            .iter()
            .map(|&c| format!("({})", join(self.sequence(c), |v| v.to_string())))
            .collect();
        format!("<{}>", parts.join(", "))
    }
}

impl CellDisplay for InrElement {
    fn display(&self) -> String {
        let parts: Vec<String> = Component::ALL
            .iter()
            .map(|&c| format!("({})", join(self.sequence(c), |iv| format!("[{}, {}]", iv.lo(), iv.hi()))))
            .collect();
        format!("<{}>", parts.join(", "))
    }
}

fn label_width<'a>(labels: impl IntoIterator<Item = &'a String>, min: usize) -> usize {
    labels.into_iter().map(|l| l.chars().count()).max().unwrap_or(0).max(min)
}

pub fn similarity_table(score: &SimilarityScore) -> String {
    let name = candidate_name(Candidate::new(score.measure, score.weighted));
    format!("{name}: {}\n", round5(score.value))
}

pub fn similarity_json(score: &SimilarityScore) -> String {
    serde_json::to_string_pretty(score).expect("reports serialize") + "\n"
}

fn polarity_name(p: Polarity) -> &'static str {
    match p {
        Polarity::Positive => "positive",
        Polarity::Negative => "negative",
    }
}

pub fn ranking_table<E: CellDisplay>(
    report: &RankingReport<E>,
    ideal: Option<(Polarity, &RefinedSet<E>)>,
) -> String {
    let mut out = String::new();
    let name = candidate_name(Candidate::new(report.measure, report.weighted));
    let w = label_width(&report.alternatives, "alternative".len());
    writeln!(out, "measure: {name}").unwrap();
    writeln!(out, "{:<w$}  score", "alternative").unwrap();
    for (label, s) in report.alternatives.iter().zip(&report.scores) {
        writeln!(out, "{label:<w$}  {}", round5(s.value)).unwrap();
    }
    writeln!(out, "ranking: {}", report.ordered_labels().join(" > ")).unwrap();
    if let Some((polarity, set)) = ideal {
        writeln!(out, "{} ideal:", polarity_name(polarity)).unwrap();
        let w = label_width(set.universe(), 0);
        for (label, e) in set.iter() {
            writeln!(out, "  {label:<w$}  {}", e.display()).unwrap();
        }
    }
    out
}

#[derive(Serialize)]
struct RankingEntry<'a> {
    label: &'a str,
    score: f64,
    position: usize,
}

#[derive(Serialize)]
struct RankingDocument<'a> {
    measure: MeasureKind,
    weighted: bool,
    scores: Vec<RankingEntry<'a>>,
    ranking: Vec<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    ideal: Option<IdealDocument>,
}

#[derive(Serialize)]
struct IdealDocument {
    polarity: Polarity,
    set: SetDocument,
}

pub fn ranking_json<E: DocumentElement>(
    report: &RankingReport<E>,
    ideal: Option<(Polarity, &RefinedSet<E>)>,
) -> String {
    let mut position = vec![0; report.alternatives.len()];
    for (pos, &i) in report.order.iter().enumerate() {
        position[i] = pos + 1;
    }
    let doc = RankingDocument {
        measure: report.measure,
        weighted: report.weighted,
        scores: report
            .alternatives
            .iter()
            .zip(&report.scores)
            .zip(&position)
            .map(|((label, s), &position)| RankingEntry {
                label,
                score: s.value,
                position,
            })
            .collect(),
        ranking: report.ordered_labels(),
        ideal: ideal.map(|(polarity, set)| IdealDocument {
            polarity,
            set: set_document(set),
        }),
    };
    serde_json::to_string_pretty(&doc).expect("reports serialize") + "\n"
}

/// `reports` are selections over disjoint candidate groups, shown together.
pub fn consistency_table(reports: &[ConsistencyReport]) -> String {
    let mut out = String::new();
    let Some(first) = reports.first() else {
        return out;
    };
    let objective = match first.objective {
        Objective::Maximize => "maximize",
        Objective::Minimize => "minimize",
    };
    writeln!(out, "objective: {objective}").unwrap();
    let entries: Vec<_> = reports.iter().flat_map(|r| &r.entries).collect();
    let names: Vec<String> = entries.iter().map(|e| candidate_name(e.candidate)).collect();
    let nw = label_width(&names, "measure".len());
    let aw = label_width(&first.alternatives, "alternative".len());
    writeln!(out, "{:<nw$}  {:<aw$}  lower    upper", "measure", "alternative").unwrap();
    for (name, e) in names.iter().zip(&entries) {
        for (i, alt) in first.alternatives.iter().enumerate() {
            let shown = if i == 0 { name.as_str() } else { "" };
            writeln!(out, "{shown:<nw$}  {alt:<aw$}  {}  {}", round5(e.lower[i]), round5(e.upper[i])).unwrap();
        }
    }
    writeln!(out, "consistency degree").unwrap();
    for (name, e) in names.iter().zip(&entries) {
        writeln!(out, "  {name:<nw$}  {}", round5(e.degree)).unwrap();
    }
    for r in reports {
        let label = if r.selected.weighted { "selected (weighted)" } else { "selected" };
        writeln!(out, "{label}: {}", candidate_name(r.selected)).unwrap();
    }
    out
}

pub fn consistency_json(reports: &[ConsistencyReport]) -> String {
    serde_json::to_string_pretty(reports).expect("reports serialize") + "\n"
}

pub fn set_table<E: CellDisplay>(set: &RefinedSet<E>) -> String {
    let w = label_width(set.universe(), 0);
    set.iter()
        .map(|(label, e)| format!("{label:<w$}  {}\n", e.display()))
        .collect()
}
