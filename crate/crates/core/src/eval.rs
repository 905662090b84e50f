//! Formula and rule evaluation, models, and consistency.
//!
//! The same clauses serve both lattices: `∧`/`∨` are min/max in the truth
//! order, `not φ` is `T` iff `φ ≤ F*`, and `φ <- ψ` is `T` iff `φ ≥ ψ`
//! (otherwise `F`; implication never yields an intermediate value).

use crate::error::Error;
use crate::logic::{times, Interpretation, TruthValue};
use crate::syntax::{Formula, Literal, LiteralSet, Program, Rule};

pub fn eval<V: TruthValue>(interp: &Interpretation<V>, phi: &Formula) -> Result<V, Error> {
    Ok(match phi {
        Formula::Lit(l) => interp.value(l)?,
        Formula::FStar => V::FSTAR,
        Formula::Not(inner) => negate(eval(interp, inner)?),
        Formula::And(parts) => {
            let mut acc = V::TRUE;
            for p in parts {
                acc = acc.min(eval(interp, p)?);
            }
            acc
        }
        Formula::Or(parts) => {
            let mut acc = V::FALSE;
            for p in parts {
                acc = acc.max(eval(interp, p)?);
            }
            acc
        }
        Formula::Times(parts) => {
            let mut values = parts.iter().map(|p| eval(interp, p));
            let first = values.next().expect("empty ordered disjunction")?;
            values.try_fold(first, |acc, v| Ok::<_, Error>(times(acc, v?)))?
        }
        Formula::Implies(head, body) => implies(eval(interp, head)?, eval(interp, body)?),
    })
}

/// Default negation.
pub fn negate<V: TruthValue>(v: V) -> V {
    if v <= V::FSTAR {
        V::TRUE
    } else {
        V::FALSE
    }
}

/// `head <- body`.
pub fn implies<V: TruthValue>(head: V, body: V) -> V {
    if head >= body {
        V::TRUE
    } else {
        V::FALSE
    }
}

/// Value of a head level, a disjunction of literals.
pub fn level_value<V: TruthValue>(
    interp: &Interpretation<V>,
    level: &[Literal],
) -> Result<V, Error> {
    level
        .iter()
        .try_fold(V::FALSE, |acc, l| Ok(acc.max(interp.value(l)?)))
}

/// Value of the whole head `C₁ × … × Cₙ`.
pub fn head_value<V: TruthValue>(interp: &Interpretation<V>, rule: &Rule) -> Result<V, Error> {
    let mut levels = rule.head().iter();
    let first = level_value(interp, levels.next().expect("rule head is nonempty"))?;
    levels.try_fold(first, |acc, level| {
        Ok(times(acc, level_value(interp, level)?))
    })
}

/// Value of the body conjunction; the empty body is `T`.
pub fn body_value<V: TruthValue>(interp: &Interpretation<V>, rule: &Rule) -> Result<V, Error> {
    let mut acc = V::TRUE;
    for l in rule.body_pos() {
        acc = acc.min(interp.value(l)?);
    }
    for l in rule.body_neg() {
        acc = acc.min(negate(interp.value(l)?));
    }
    Ok(acc)
}

/// Value of the rule read as `head <- body`.
pub fn eval_rule<V: TruthValue>(interp: &Interpretation<V>, rule: &Rule) -> Result<V, Error> {
    Ok(implies(
        head_value(interp, rule)?,
        body_value(interp, rule)?,
    ))
}

fn check_domain<V: TruthValue>(interp: &Interpretation<V>, program: &Program) -> Result<(), Error> {
    if **interp.sigma() != **program.sigma() {
        return Err(Error::DomainMismatch);
    }
    Ok(())
}

/// Every rule of `program` evaluates to `T`.
pub fn is_model<V: TruthValue>(
    interp: &Interpretation<V>,
    program: &Program,
) -> Result<bool, Error> {
    check_domain(interp, program)?;
    for rule in program.rules() {
        if eval_rule(interp, rule)? != V::TRUE {
            return Ok(false);
        }
    }
    Ok(true)
}

/// No atom has both its literals mapped to `T`.
pub fn is_consistent<V: TruthValue>(interp: &Interpretation<V>) -> bool {
    interp
        .iter()
        .filter(|(l, v)| !l.is_negated() && *v == V::TRUE)
        .all(|(l, _)| interp.get(&l.complement()) != Some(V::TRUE))
}

/// Two-valued model check of the original semantics: every rule whose body
/// holds in `set` has some head literal in `set`.
pub fn is_brewka_model(set: &LiteralSet, program: &Program) -> Result<bool, Error> {
    program.require_lpod()?;
    Ok(program.rules().iter().all(|rule| {
        !body_holds(set, rule) || rule.head().iter().flatten().any(|c| set.contains(c))
    }))
}

pub(crate) fn body_holds(set: &LiteralSet, rule: &Rule) -> bool {
    rule.body_pos().iter().all(|a| set.contains(a))
        && rule.body_neg().iter().all(|b| !set.contains(b))
}

/// A set of literals is consistent when it holds no complementary pair.
pub fn is_consistent_set(set: &LiteralSet) -> bool {
    set.iter()
        .all(|l| l.is_negated() || !set.contains(&l.complement()))
}
