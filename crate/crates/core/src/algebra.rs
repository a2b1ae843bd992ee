//! Set algebra on single-valued refined sets. A plain single-valued
//! neutrosophic set is the `p = 1` case.

use crate::error::Result;
use crate::model::{Component, Extreme, SvnrElement, SvnrSet, UnitValue};

/// Absolute tolerance for subset and equality comparisons.
pub const COMPARE_TOLERANCE: f64 = 1e-9;

fn element_subset(a: &SvnrElement, b: &SvnrElement) -> bool {
    let le = |x: UnitValue, y: UnitValue| x.get() <= y.get() + COMPARE_TOLERANCE;
    let pairs = |c: Component| a.sequence(c).iter().copied().zip(b.sequence(c).iter().copied());
    pairs(Component::Truth).all(|(x, y)| le(x, y))
        && pairs(Component::Indet).all(|(x, y)| le(y, x))
        && pairs(Component::Falsity).all(|(x, y)| le(y, x))
}

/// `a ⊆ b`: truth no larger, indeterminacy and falsity no smaller, at every
/// element and slot.
pub fn subset(a: &SvnrSet, b: &SvnrSet) -> Result<bool> {
    a.check_compatible(b)?;
    Ok(a.elements().iter().zip(b.elements()).all(|(x, y)| element_subset(x, y)))
}

/// Mutual inclusion.
pub fn equal(a: &SvnrSet, b: &SvnrSet) -> Result<bool> {
    Ok(subset(a, b)? && subset(b, a)?)
}

pub fn complement(a: &SvnrSet) -> SvnrSet {
    a.complement()
}

/// Slotwise `(max t, min i, min f)`.
pub fn union(a: &SvnrSet, b: &SvnrSet) -> Result<SvnrSet> {
    a.combine(b, Extreme::Max)
}

/// Slotwise `(min t, max i, max f)`.
pub fn intersection(a: &SvnrSet, b: &SvnrSet) -> Result<SvnrSet> {
    a.combine(b, Extreme::Min)
}

fn constant_set<S: Into<String>>(
    universe: impl IntoIterator<Item = S>,
    p: usize,
    t: UnitValue,
    i: UnitValue,
    f: UnitValue,
) -> Result<SvnrSet> {
    let universe: Vec<String> = universe.into_iter().map(Into::into).collect();
    let elements = vec![SvnrElement::constant(p, t, i, f); universe.len()];
    SvnrSet::new(universe, elements)
}

/// Every slot `(0, 1, 1)`.
pub fn null_set<S: Into<String>>(universe: impl IntoIterator<Item = S>, p: usize) -> Result<SvnrSet> {
    constant_set(universe, p, UnitValue::ZERO, UnitValue::ONE, UnitValue::ONE)
}

/// Every slot `(1, 0, 0)`.
pub fn universal_set<S: Into<String>>(
    universe: impl IntoIterator<Item = S>,
    p: usize,
) -> Result<SvnrSet> {
    constant_set(universe, p, UnitValue::ONE, UnitValue::ZERO, UnitValue::ZERO)
}
