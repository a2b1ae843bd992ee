//! wasm-bindgen bindings behind the static demo page in `www/`.
//!
//! Every binding takes and returns JSON text. The plain functions in this
//! crate do the work and are usable (and tested) natively.

use neutrosophic_mcdm::consistency::{select_measure, Candidate, Objective};
use neutrosophic_mcdm::decision::{rank, DecisionProblem, Polarity};
use neutrosophic_mcdm::document::{parse_problem, parse_set, AnySet, DocumentElement, Problem};
use neutrosophic_mcdm::model::MeasureKind;
use neutrosophic_mcdm::report;
use neutrosophic_mcdm::similarity::{score, WeightVector};
use wasm_bindgen::prelude::*;

const EXAMPLES: [(&str, &str); 5] = [
    ("svnr", include_str!("../../core/data/svnr_investment.json")),
    ("inr", include_str!("../../core/data/inr_investment.json")),
    ("set_a", include_str!("../../core/data/set_a.json")),
    ("set_b", include_str!("../../core/data/set_b.json")),
    ("set_c", include_str!("../../core/data/set_c.json")),
];

fn measure(name: &str) -> Result<MeasureKind, String> {
    name.parse::<MeasureKind>().map_err(|e| e.to_string())
}

fn ranked<E: DocumentElement>(p: &DecisionProblem<E>, m: MeasureKind, weighted: bool) -> Result<String, String> {
    let r = rank(p, m, weighted).map_err(|e| e.to_string())?;
    let ideal = p.ideal(Polarity::Positive);
    Ok(report::ranking_json(&r, Some((Polarity::Positive, &ideal))))
}

/// Ranking report for a problem document.
pub fn rank_report(problem: &str, measure_name: &str, weighted: bool) -> Result<String, String> {
    let m = measure(measure_name)?;
    match parse_problem(problem).map_err(|e| e.to_string())? {
        Problem::Svnr(p) => ranked(&p, m, weighted),
        Problem::Inr(p) => ranked(&p, m, weighted),
    }
}

/// Consistency reports (unweighted group, weighted group) for an interval problem.
pub fn consistency_report(problem: &str, objective: &str) -> Result<String, String> {
    let objective = match objective {
        "maximize" => Objective::Maximize,
        "minimize" => Objective::Minimize,
        other => return Err(format!("unknown objective `{other}`")),
    };
    let p = match parse_problem(problem).map_err(|e| e.to_string())? {
        Problem::Inr(p) => p,
        Problem::Svnr(_) => return Err("consistency analysis needs interval (inr) data".into()),
    };
    let reports = [false, true]
        .iter()
        .map(|&w| select_measure(&p, &MeasureKind::ALL.map(|k| Candidate::new(k, w)), objective))
        .collect::<Result<Vec<_>, _>>()
        .map_err(|e| e.to_string())?;
    Ok(report::consistency_json(&reports))
}

/// Similarity of two set documents; `weights` empty means unweighted.
pub fn similarity_report(a: &str, b: &str, measure_name: &str, weights: &[f64]) -> Result<String, String> {
    let m = measure(measure_name)?;
    let w = if weights.is_empty() {
        None
    } else {
        Some(WeightVector::new(weights.to_vec()).map_err(|e| e.to_string())?)
    };
    let (sa, sb) = (parse_set(a).map_err(|e| e.to_string())?, parse_set(b).map_err(|e| e.to_string())?);
    let s = match (&sa, &sb) {
        (AnySet::Svnr(x), AnySet::Svnr(y)) => score(m, x, y, w.as_ref()),
        (AnySet::Inr(x), AnySet::Inr(y)) => score(m, x, y, w.as_ref()),
        _ => return Err(format!("cannot compare {} data with {} data", sa.flavor(), sb.flavor())),
    }
    .map_err(|e| e.to_string())?;
    Ok(report::similarity_json(&s))
}

pub fn example_document(name: &str) -> Option<&'static str> {
    EXAMPLES.iter().find(|(n, _)| *n == name).map(|(_, text)| *text)
}

#[wasm_bindgen(js_name = rank)]
pub fn rank_js(problem: &str, measure: &str, weighted: bool) -> Result<String, JsError> {
    rank_report(problem, measure, weighted).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = consistency)]
pub fn consistency_js(problem: &str, objective: &str) -> Result<String, JsError> {
    consistency_report(problem, objective).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = similarity)]
pub fn similarity_js(a: &str, b: &str, measure: &str, weights: Vec<f64>) -> Result<String, JsError> {
    similarity_report(a, b, measure, &weights).map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = example)]
pub fn example_js(name: &str) -> Result<String, JsError> {
    example_document(name)
        .map(str::to_owned)
        .ok_or_else(|| JsError::new(&format!("no example named `{name}`")))
}
