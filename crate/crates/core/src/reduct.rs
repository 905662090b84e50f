//! Reducts: the three-valued `×`-reduct with `F*`-guarded rules, and the
//! original two-valued reduct.

use std::fmt;

use crate::error::Error;
use crate::eval::level_value;
use crate::logic::{Interpretation, Interpretation3, Sigma, Truth3, TruthValue};
use crate::syntax::{write_level, Literal, LiteralSet, Program};

/// A negation-free rule `C <- [F*,] A₁, …, Aₘ` whose head `C` is a
/// disjunction of literals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ReductRule {
    pub head: Vec<Literal>,
    /// The body carries the constant `F*`, so the rule can force at most
    /// `F*` for its head.
    pub fstar_guard: bool,
    pub body: Vec<Literal>,
}

impl ReductRule {
    /// Body value under `interp`, the guard included.
    pub fn body_value<V: TruthValue>(&self, interp: &Interpretation<V>) -> Result<V, Error> {
        let start = if self.fstar_guard { V::FSTAR } else { V::TRUE };
        self.body
            .iter()
            .try_fold(start, |acc, l| Ok(acc.min(interp.value(l)?)))
    }

    pub fn is_satisfied<V: TruthValue>(&self, interp: &Interpretation<V>) -> Result<bool, Error> {
        Ok(level_value(interp, &self.head)? >= self.body_value(interp)?)
    }
}

impl fmt::Display for ReductRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let [only] = self.head.as_slice() {
            write!(f, "{only}")?;
        } else {
            write_level(f, &self.head)?;
        }
        let mut items = self
            .fstar_guard
            .then(|| "F*".to_string())
            .into_iter()
            .chain(self.body.iter().map(|l| l.to_string()))
            .peekable();
        if items.peek().is_some() {
            f.write_str(" :- ")?;
            f.write_str(&items.collect::<Vec<_>>().join(", "))?;
        }
        f.write_str(".")
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductProgram {
    pub rules: Vec<ReductRule>,
    pub sigma: Sigma,
}

impl ReductProgram {
    pub fn is_model<V: TruthValue>(&self, interp: &Interpretation<V>) -> Result<bool, Error> {
        for rule in &self.rules {
            if !rule.is_satisfied(interp)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    pub fn is_disjunctive(&self) -> bool {
        self.rules.iter().any(|r| r.head.len() > 1)
    }
}

impl fmt::Display for ReductProgram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for rule in &self.rules {
            writeln!(f, "{rule}")?;
        }
        Ok(())
    }
}

/// The three-valued `×`-reduct of `program` relative to `interp`.
///
/// A rule with some default-negated literal true under `interp` vanishes.
/// Otherwise let `r` be the least index such that levels `1..r` all have
/// value `F*` and either `r = n` or level `r` is not `F*`; the rule yields
/// `F*`-guarded copies for levels `1..r` and an unguarded one for level `r`.
pub fn x_reduct(program: &Program, interp: &Interpretation3) -> Result<ReductProgram, Error> {
    if **interp.sigma() != **program.sigma() {
        return Err(Error::DomainMismatch);
    }
    let mut rules = Vec::new();
    for rule in program.rules() {
        let mut blocked = false;
        for b in rule.body_neg() {
            if interp.value(b)? == Truth3::T {
                blocked = true;
                break;
            }
        }
        if blocked {
            continue;
        }
        let head = rule.head();
        let mut r = head.len() - 1;
        for (i, level) in head.iter().enumerate() {
            if level_value(interp, level)? != Truth3::FStar {
                r = i;
                break;
            }
        }
        for (i, level) in head[..=r].iter().enumerate() {
            rules.push(ReductRule {
                head: level.clone(),
                fstar_guard: i < r,
                body: rule.body_pos().to_vec(),
            });
        }
    }
    Ok(ReductProgram {
        rules,
        sigma: program.sigma().clone(),
    })
}

/// A definite rule `head <- body` of the original semantics' reduct.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DefiniteRule {
    pub head: Literal,
    pub body: Vec<Literal>,
}

impl fmt::Display for DefiniteRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.head)?;
        if !self.body.is_empty() {
            let body: Vec<_> = self.body.iter().map(|l| l.to_string()).collect();
            write!(f, " :- {}", body.join(", "))?;
        }
        f.write_str(".")
    }
}

/// The original `×`-reduct: `Cᵢ <- A₁, …, Aₘ` for each head literal `Cᵢ` in
/// `set` such that `set` avoids `C₁ … Cᵢ₋₁` and every `Bⱼ`.
pub fn brewka_reduct(program: &Program, set: &LiteralSet) -> Result<Vec<DefiniteRule>, Error> {
    program.require_lpod()?;
    let mut out = Vec::new();
    for rule in program.rules() {
        if rule.body_neg().iter().any(|b| set.contains(b)) {
            continue;
        }
        for (i, level) in rule.head().iter().enumerate() {
            let c = &level[0];
            let earlier_free = rule.head()[..i].iter().all(|l| !set.contains(&l[0]));
            if set.contains(c) && earlier_free {
                out.push(DefiniteRule {
                    head: c.clone(),
                    body: rule.body_pos().to_vec(),
                });
            }
        }
    }
    Ok(out)
}

/// Least Herbrand model of a set of definite rules.
pub fn least_herbrand_model(rules: &[DefiniteRule]) -> LiteralSet {
    let mut model = LiteralSet::new();
    loop {
        let before = model.len();
        for rule in rules {
            if !model.contains(&rule.head) && rule.body.iter().all(|a| model.contains(a)) {
                model.insert(rule.head.clone());
            }
        }
        if model.len() == before {
            return model;
        }
    }
}
