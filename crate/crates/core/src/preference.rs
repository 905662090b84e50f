//! Choosing most-preferred answer sets.
//!
//! Under the three-valued semantics an answer set `M₁` is preferred to `M₂`
//! when its `F*` literals form a strict subset of those of `M₂`. The original
//! semantics instead ranks rules by satisfaction degree and compares answer
//! sets by inclusion of the rules satisfied at each degree.

use std::collections::BTreeSet;

use crate::answer_sets::brewka_answer_sets;
use crate::enumerate::Limits;
use crate::error::Error;
use crate::eval::body_holds;
use crate::logic::{Interpretation3, Truth3};
use crate::syntax::{LiteralSet, Program, Rule};

/// Literals mapped to `F*`.
pub fn fstar_set(m: &Interpretation3) -> LiteralSet {
    m.literals_with(Truth3::FStar).cloned().collect()
}

/// `m1 ⊏ m2`: the `F*` literals of `m1` are a strict subset of those of `m2`.
pub fn preferred(m1: &Interpretation3, m2: &Interpretation3) -> Result<bool, Error> {
    if !m1.same_domain(m2) {
        return Err(Error::DomainMismatch);
    }
    let (s1, s2) = (fstar_set(m1), fstar_set(m2));
    Ok(s1.len() < s2.len() && s1.is_subset(&s2))
}

/// Positions of the `⊏`-minimal elements of `sets`.
pub fn most_preferred_indices(sets: &[Interpretation3]) -> Vec<usize> {
    let stars: Vec<LiteralSet> = sets.iter().map(fstar_set).collect();
    (0..sets.len())
        .filter(|&i| {
            !stars
                .iter()
                .any(|other| other.len() < stars[i].len() && other.is_subset(&stars[i]))
        })
        .collect()
}

/// The `⊏`-minimal elements of `sets`, in input order.
pub fn most_preferred(sets: &[Interpretation3]) -> Vec<Interpretation3> {
    most_preferred_indices(sets)
        .into_iter()
        .map(|i| sets[i].clone())
        .collect()
}

/// Satisfaction degree of `rule` (at position `index`) in the answer set
/// `set`: 1 when the body fails, otherwise the first head position present.
pub fn degree(set: &LiteralSet, rule: &Rule, index: usize) -> Result<usize, Error> {
    if !rule.is_lpod_rule() {
        return Err(Error::NotAnLpod { rule: index });
    }
    if !body_holds(set, rule) {
        return Ok(1);
    }
    rule.head()
        .iter()
        .position(|level| set.contains(&level[0]))
        .map(|i| i + 1)
        .ok_or(Error::UndefinedDegree { rule: index })
}

/// Degree of every rule of `program`, by rule position.
pub fn degrees(set: &LiteralSet, program: &Program) -> Result<Vec<usize>, Error> {
    program
        .rules()
        .iter()
        .enumerate()
        .map(|(i, r)| degree(set, r, i))
        .collect()
}

/// Rule positions satisfied to each degree; entry `d - 1` holds degree `d`.
fn degree_classes(degrees: &[usize], depth: usize) -> Vec<BTreeSet<usize>> {
    let mut classes = vec![BTreeSet::new(); depth];
    for (rule, &d) in degrees.iter().enumerate() {
        classes[d - 1].insert(rule);
    }
    classes
}

/// Inclusion preference: `s1` is preferred to `s2` when, at the first degree
/// `k` where their degree-`k` rule sets differ, that of `s2` is a strict
/// subset of that of `s1`.
pub fn inclusion_preferred(
    s1: &LiteralSet,
    s2: &LiteralSet,
    program: &Program,
) -> Result<bool, Error> {
    program.require_lpod()?;
    let (d1, d2) = (degrees(s1, program)?, degrees(s2, program)?);
    let depth = program
        .rules()
        .iter()
        .map(|r| r.head().len())
        .max()
        .unwrap_or(0);
    let (c1, c2) = (degree_classes(&d1, depth), degree_classes(&d2, depth));
    for (k1, k2) in c1.iter().zip(&c2) {
        if k1 != k2 {
            return Ok(k2.is_subset(k1));
        }
    }
    Ok(false)
}

/// Original answer sets with no inclusion-preferred competitor.
pub fn brewka_most_preferred(program: &Program, limits: &Limits) -> Result<Vec<LiteralSet>, Error> {
    let sets = brewka_answer_sets(program, limits)?;
    let keep = brewka_most_preferred_indices(&sets, program)?;
    Ok(keep.into_iter().map(|i| sets[i].clone()).collect())
}

/// Positions of the inclusion-maximal elements of `sets`.
pub fn brewka_most_preferred_indices(
    sets: &[LiteralSet],
    program: &Program,
) -> Result<Vec<usize>, Error> {
    let mut keep = Vec::new();
    'outer: for (i, s) in sets.iter().enumerate() {
        for other in sets {
            if inclusion_preferred(other, s, program)? {
                continue 'outer;
            }
        }
        keep.push(i);
    }
    Ok(keep)
}
