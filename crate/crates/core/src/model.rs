//! Neutrosophic value types: single-valued and interval-valued refined
//! elements, and refined sets over an ordered, labelled universe.
//!
//! A refined element carries three membership sequences of common length
//! `p` (truth, indeterminacy, falsity). Sequences are accepted in any
//! order; monotonicity is not enforced.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Path, RangeViolation, Result};

/// Slack allowed on the `t + i + f <= 3` bound for decimal literals.
pub const SUM_TOLERANCE: f64 = 1e-9;

/// A membership degree in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize)]
#[serde(transparent)]
pub struct UnitValue(f64);

impl UnitValue {
    pub const ZERO: UnitValue = UnitValue(0.0);
    pub const ONE: UnitValue = UnitValue(1.0);

    /// Returns `None` for NaN or values outside `[0, 1]`. No clamping.
    pub fn new(v: f64) -> Option<Self> {
        (0.0..=1.0).contains(&v).then_some(UnitValue(v))
    }

    #[inline]
    pub fn get(self) -> f64 {
        self.0
    }

    pub(crate) fn complement(self) -> Self {
        UnitValue(1.0 - self.0)
    }

    pub(crate) fn max(self, other: Self) -> Self {
        if other.0 > self.0 {
            other
        } else {
            self
        }
    }

    pub(crate) fn min(self, other: Self) -> Self {
        if other.0 < self.0 {
            other
        } else {
            self
        }
    }
}

impl fmt::Display for UnitValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A closed sub-interval `[lo, hi]` of `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct UnitInterval {
    lo: UnitValue,
    hi: UnitValue,
}

impl UnitInterval {
    pub fn new(lo: UnitValue, hi: UnitValue) -> Option<Self> {
        (lo <= hi).then_some(UnitInterval { lo, hi })
    }

    pub fn degenerate(v: UnitValue) -> Self {
        UnitInterval { lo: v, hi: v }
    }

    pub fn lo(self) -> UnitValue {
        self.lo
    }

    pub fn hi(self) -> UnitValue {
        self.hi
    }

    pub fn bound(self, which: BoundSelector) -> UnitValue {
        match which {
            BoundSelector::Lower => self.lo,
            BoundSelector::Upper => self.hi,
        }
    }
}

/// One of the three membership sequences of an element.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Component {
    Truth,
    Indet,
    Falsity,
}

impl Component {
    pub const ALL: [Component; 3] = [Component::Truth, Component::Indet, Component::Falsity];
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Component::Truth => "truth",
            Component::Indet => "indet",
            Component::Falsity => "falsity",
        })
    }
}

/// Lower or upper endpoint of an interval.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundSelector {
    Lower,
    Upper,
}

impl fmt::Display for BoundSelector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BoundSelector::Lower => "lower",
            BoundSelector::Upper => "upper",
        })
    }
}

/// Vector similarity measure family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MeasureKind {
    Jaccard,
    Dice,
    Cosine,
}

impl MeasureKind {
    pub const ALL: [MeasureKind; 3] = [MeasureKind::Jaccard, MeasureKind::Dice, MeasureKind::Cosine];
}

impl fmt::Display for MeasureKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MeasureKind::Jaccard => "jaccard",
            MeasureKind::Dice => "dice",
            MeasureKind::Cosine => "cosine",
        })
    }
}

impl FromStr for MeasureKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "jaccard" | "j" => Ok(MeasureKind::Jaccard),
            "dice" | "d" => Ok(MeasureKind::Dice),
            "cosine" | "c" => Ok(MeasureKind::Cosine),
            other => Err(format!("unknown measure `{other}`")),
        }
    }
}

/// Single-valued (`Svnr`) or interval-valued (`Inr`) refined data.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Svnr,
    Inr,
}

impl fmt::Display for Flavor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Flavor::Svnr => "SVNR",
            Flavor::Inr => "INR",
        })
    }
}

/// Which extreme the truth sequence takes when two elements are combined.
/// Indeterminacy and falsity always take the opposite one.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Extreme {
    Max,
    Min,
}

impl Extreme {
    pub fn opposite(self) -> Self {
        match self {
            Extreme::Max => Extreme::Min,
            Extreme::Min => Extreme::Max,
        }
    }

    fn pick(self, a: UnitValue, b: UnitValue) -> UnitValue {
        match self {
            Extreme::Max => a.max(b),
            Extreme::Min => a.min(b),
        }
    }
}

/// Inner products accumulated over every slot (and endpoint) of an element pair.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct Products {
    /// `a · b`
    pub cross: f64,
    /// `a · a`
    pub left: f64,
    /// `b · b`
    pub right: f64,
}

impl Products {
    fn add(&mut self, a: f64, b: f64) {
        self.cross += a * b;
        self.left += a * a;
        self.right += b * b;
    }
}

/// Behaviour shared by single-valued and interval-valued refined elements.
pub trait Membership: Clone + PartialEq + fmt::Debug {
    const FLAVOR: Flavor;

    fn dimension(&self) -> usize;

    /// Inner products of the two elements viewed as flat vectors.
    fn products(&self, other: &Self) -> Products;

    /// Slotwise combination: truth takes `truth`, indeterminacy and falsity
    /// take the opposite extreme. Interval endpoints combine independently.
    /// Both elements must share the same dimension.
    fn combine(&self, other: &Self, truth: Extreme) -> Self;
}

fn check_degree(component: Component, slot: usize, v: f64) -> Result<UnitValue> {
    UnitValue::new(v).ok_or_else(|| RangeViolation::Degree { component, slot, value: v }.into())
}

fn check_sum(slot: usize, t: f64, i: f64, f: f64, endpoint: Option<BoundSelector>) -> Result<()> {
    let sum = t + i + f;
    if sum > 3.0 + SUM_TOLERANCE {
        return Err(RangeViolation::TripleSum { slot, sum, endpoint }.into());
    }
    Ok(())
}

fn common_length(lens: [usize; 3]) -> Result<usize> {
    let p = lens[0];
    if let Some(&bad) = lens.iter().find(|&&l| l != p) {
        return Err(Error::DimensionMismatch { expected: p, found: bad });
    }
    if p == 0 {
        return Err(Error::DimensionMismatch { expected: 1, found: 0 });
    }
    Ok(p)
}

/// Single-valued refined element: three length-`p` sequences of degrees.
#[derive(Debug, Clone, PartialEq)]
pub struct SvnrElement {
    truth: Vec<UnitValue>,
    indet: Vec<UnitValue>,
    falsity: Vec<UnitValue>,
}

impl SvnrElement {
    pub fn new(truth: &[f64], indet: &[f64], falsity: &[f64]) -> Result<Self> {
        let p = common_length([truth.len(), indet.len(), falsity.len()])?;
        let mut out = SvnrElement {
            truth: Vec::with_capacity(p),
            indet: Vec::with_capacity(p),
            falsity: Vec::with_capacity(p),
        };
        for slot in 0..p {
            let (t, i, f) = (truth[slot], indet[slot], falsity[slot]);
            out.truth.push(check_degree(Component::Truth, slot, t)?);
            out.indet.push(check_degree(Component::Indet, slot, i)?);
            out.falsity.push(check_degree(Component::Falsity, slot, f)?);
            check_sum(slot, t, i, f, None)?;
        }
        Ok(out)
    }

    /// An element with every slot set to `(t, i, f)`.
    pub fn constant(p: usize, t: UnitValue, i: UnitValue, f: UnitValue) -> Self {
        SvnrElement {
            truth: vec![t; p],
            indet: vec![i; p],
            falsity: vec![f; p],
        }
    }

    pub fn truth(&self) -> &[UnitValue] {
        &self.truth
    }

    pub fn indet(&self) -> &[UnitValue] {
        &self.indet
    }

    pub fn falsity(&self) -> &[UnitValue] {
        &self.falsity
    }

    pub fn sequence(&self, c: Component) -> &[UnitValue] {
        match c {
            Component::Truth => &self.truth,
            Component::Indet => &self.indet,
            Component::Falsity => &self.falsity,
        }
    }

    /// `(t, i, f) -> (f, 1 - i, t)` at every slot.
    pub fn complement(&self) -> Self {
        SvnrElement {
            truth: self.falsity.clone(),
            indet: self.indet.iter().map(|v| v.complement()).collect(),
            falsity: self.truth.clone(),
        }
    }

    /// Lift to an interval element with degenerate `[v, v]` intervals.
    pub fn to_degenerate_inr(&self) -> InrElement {
        let lift = |s: &[UnitValue]| s.iter().copied().map(UnitInterval::degenerate).collect();
        InrElement {
            truth: lift(&self.truth),
            indet: lift(&self.indet),
            falsity: lift(&self.falsity),
        }
    }
}

impl Membership for SvnrElement {
    const FLAVOR: Flavor = Flavor::Svnr;

    fn dimension(&self) -> usize {
        self.truth.len()
    }

    fn products(&self, other: &Self) -> Products {
        let mut acc = Products::default();
        for slot in 0..self.dimension() {
            for c in Component::ALL {
                acc.add(self.sequence(c)[slot].get(), other.sequence(c)[slot].get());
            }
        }
        acc
    }

    fn combine(&self, other: &Self, truth: Extreme) -> Self {
        let zip = |a: &[UnitValue], b: &[UnitValue], e: Extreme| {
            a.iter().zip(b).map(|(&x, &y)| e.pick(x, y)).collect()
        };
        let rest = truth.opposite();
        SvnrElement {
            truth: zip(&self.truth, &other.truth, truth),
            indet: zip(&self.indet, &other.indet, rest),
            falsity: zip(&self.falsity, &other.falsity, rest),
        }
    }
}

/// Interval-valued refined element: three length-`p` sequences of intervals.
#[derive(Debug, Clone, PartialEq)]
pub struct InrElement {
    truth: Vec<UnitInterval>,
    indet: Vec<UnitInterval>,
    falsity: Vec<UnitInterval>,
}

impl InrElement {
    pub fn new(truth: &[[f64; 2]], indet: &[[f64; 2]], falsity: &[[f64; 2]]) -> Result<Self> {
        let p = common_length([truth.len(), indet.len(), falsity.len()])?;
        let mut out = InrElement {
            truth: Vec::with_capacity(p),
            indet: Vec::with_capacity(p),
            falsity: Vec::with_capacity(p),
        };
        let interval = |c: Component, slot: usize, [lo, hi]: [f64; 2]| -> Result<UnitInterval> {
            let l = check_degree(c, slot, lo)?;
            let h = check_degree(c, slot, hi)?;
            UnitInterval::new(l, h).ok_or(Error::IntervalInversion {
                component: c,
                slot,
                lo,
                hi,
            })
        };
        for slot in 0..p {
            let t = interval(Component::Truth, slot, truth[slot])?;
            let i = interval(Component::Indet, slot, indet[slot])?;
            let f = interval(Component::Falsity, slot, falsity[slot])?;
            for b in [BoundSelector::Lower, BoundSelector::Upper] {
                check_sum(slot, t.bound(b).get(), i.bound(b).get(), f.bound(b).get(), Some(b))?;
            }
            out.truth.push(t);
            out.indet.push(i);
            out.falsity.push(f);
        }
        Ok(out)
    }

    pub fn truth(&self) -> &[UnitInterval] {
        &self.truth
    }

    pub fn indet(&self) -> &[UnitInterval] {
        &self.indet
    }

    pub fn falsity(&self) -> &[UnitInterval] {
        &self.falsity
    }

    pub fn sequence(&self, c: Component) -> &[UnitInterval] {
        match c {
            Component::Truth => &self.truth,
            Component::Indet => &self.indet,
            Component::Falsity => &self.falsity,
        }
    }

    /// The single-valued element made of every interval's `which` endpoint.
    pub fn project(&self, which: BoundSelector) -> SvnrElement {
        let take = |s: &[UnitInterval]| s.iter().map(|iv| iv.bound(which)).collect();
        SvnrElement {
            truth: take(&self.truth),
            indet: take(&self.indet),
            falsity: take(&self.falsity),
        }
    }
}

impl Membership for InrElement {
    const FLAVOR: Flavor = Flavor::Inr;

    fn dimension(&self) -> usize {
        self.truth.len()
    }

    fn products(&self, other: &Self) -> Products {
        let mut acc = Products::default();
        for slot in 0..self.dimension() {
            for c in Component::ALL {
                let (a, b) = (self.sequence(c)[slot], other.sequence(c)[slot]);
                acc.add(a.lo.get(), b.lo.get());
                acc.add(a.hi.get(), b.hi.get());
            }
        }
        acc
    }

    fn combine(&self, other: &Self, truth: Extreme) -> Self {
        // lo <= hi is preserved: max/min are monotone in each argument.
        let zip = |a: &[UnitInterval], b: &[UnitInterval], e: Extreme| {
            a.iter()
                .zip(b)
                .map(|(x, y)| UnitInterval {
                    lo: e.pick(x.lo, y.lo),
                    hi: e.pick(x.hi, y.hi),
                })
                .collect()
        };
        let rest = truth.opposite();
        InrElement {
            truth: zip(&self.truth, &other.truth, truth),
            indet: zip(&self.indet, &other.indet, rest),
            falsity: zip(&self.falsity, &other.falsity, rest),
        }
    }
}

/// A refined set: one element per label of an ordered universe, all with
/// the same dimension `p`.
#[derive(Debug, Clone, PartialEq)]
pub struct RefinedSet<E> {
    universe: Vec<String>,
    elements: Vec<E>,
    dimension: usize,
}

pub type SvnrSet = RefinedSet<SvnrElement>;
pub type InrSet = RefinedSet<InrElement>;

pub(crate) fn check_unique_labels(labels: &[String]) -> Result<()> {
    let mut seen = HashSet::with_capacity(labels.len());
    for l in labels {
        if !seen.insert(l.as_str()) {
            return Err(Error::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

impl<E: Membership> RefinedSet<E> {
    pub fn new(universe: Vec<String>, elements: Vec<E>) -> Result<Self> {
        if universe.is_empty() {
            return Err(Error::EmptyUniverse);
        }
        if universe.len() != elements.len() {
            return Err(Error::RecordCountMismatch {
                labels: universe.len(),
                records: elements.len(),
            });
        }
        check_unique_labels(&universe)?;
        let dimension = elements[0].dimension();
        for (label, e) in universe.iter().zip(&elements) {
            if e.dimension() != dimension {
                return Err(Error::DimensionMismatch {
                    expected: dimension,
                    found: e.dimension(),
                }
                .at(Path::element(label.clone())));
            }
        }
        Ok(RefinedSet {
            universe,
            elements,
            dimension,
        })
    }

    pub fn universe(&self) -> &[String] {
        &self.universe
    }

    pub fn elements(&self) -> &[E] {
        &self.elements
    }

    pub fn dimension(&self) -> usize {
        self.dimension
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn get(&self, label: &str) -> Option<&E> {
        self.universe
            .iter()
            .position(|l| l == label)
            .map(|i| &self.elements[i])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&str, &E)> {
        self.universe.iter().map(String::as_str).zip(&self.elements)
    }

    /// Both sets share labels, label order and dimension.
    pub fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch);
        }
        if self.dimension != other.dimension {
            return Err(Error::DimensionMismatch {
                expected: self.dimension,
                found: other.dimension,
            });
        }
        Ok(())
    }

    /// Element-by-element combination; see [`Membership::combine`].
    pub fn combine(&self, other: &Self, truth: Extreme) -> Result<Self> {
        self.check_compatible(other)?;
        Ok(self.map_with(other, |a, b| a.combine(b, truth)))
    }

    pub(crate) fn map_with(&self, other: &Self, f: impl Fn(&E, &E) -> E) -> Self {
        RefinedSet {
            universe: self.universe.clone(),
            elements: self.elements.iter().zip(&other.elements).map(|(a, b)| f(a, b)).collect(),
            dimension: self.dimension,
        }
    }

    pub(crate) fn map<F: Membership>(&self, f: impl Fn(&E) -> F) -> RefinedSet<F> {
        RefinedSet {
            universe: self.universe.clone(),
            elements: self.elements.iter().map(f).collect(),
            dimension: self.dimension,
        }
    }
}

/// Raw `(truth, indet, falsity)` sequences for one element.
pub type SvnrRecord<'a> = (&'a [f64], &'a [f64], &'a [f64]);
/// Raw `(truth, indet, falsity)` interval sequences for one element.
pub type InrRecord<'a> = (&'a [[f64; 2]], &'a [[f64; 2]], &'a [[f64; 2]]);

impl SvnrSet {
    /// Validates every record and the set as a whole. Element errors carry
    /// the offending label.
    pub fn from_records<S: Into<String>>(
        universe: impl IntoIterator<Item = S>,
        records: &[SvnrRecord<'_>],
    ) -> Result<Self> {
        let universe: Vec<String> = universe.into_iter().map(Into::into).collect();
        if universe.len() != records.len() {
            return Err(Error::RecordCountMismatch {
                labels: universe.len(),
                records: records.len(),
            });
        }
        let elements = universe
            .iter()
            .zip(records)
            .map(|(label, (t, i, f))| {
                SvnrElement::new(t, i, f).map_err(|e| e.at(Path::element(label.clone())))
            })
            .collect::<Result<Vec<_>>>()?;
        RefinedSet::new(universe, elements)
    }

    pub fn complement(&self) -> Self {
        self.map(SvnrElement::complement)
    }

    pub fn to_degenerate_inr(&self) -> InrSet {
        self.map(SvnrElement::to_degenerate_inr)
    }
}

impl InrSet {
    pub fn from_records<S: Into<String>>(
        universe: impl IntoIterator<Item = S>,
        records: &[InrRecord<'_>],
    ) -> Result<Self> {
        let universe: Vec<String> = universe.into_iter().map(Into::into).collect();
        if universe.len() != records.len() {
            return Err(Error::RecordCountMismatch {
                labels: universe.len(),
                records: records.len(),
            });
        }
        let elements = universe
            .iter()
            .zip(records)
            .map(|(label, (t, i, f))| {
                InrElement::new(t, i, f).map_err(|e| e.at(Path::element(label.clone())))
            })
            .collect::<Result<Vec<_>>>()?;
        RefinedSet::new(universe, elements)
    }

    /// Endpoint projection onto a single-valued set; universe, order and
    /// dimension are preserved.
    pub fn project(&self, which: BoundSelector) -> SvnrSet {
        self.map(|e| e.project(which))
    }
}
