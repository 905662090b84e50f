//! Three-valued answer sets, the original two-valued answer sets, and the
//! collapse/lift bijection between them.
//!
//! A consistent interpretation `M` is an answer set when it is the `≤`-least
//! model of its own `×`-reduct (or, with disjunctive head levels, a
//! `≤`-minimal one). Enumeration is exhaustive over `3^|Σ|` candidates;
//! candidate `k` assigns the first literal of `Σ` its least significant
//! base-3 digit, with `F < F* < T`.

use std::fmt;

use crate::enumerate::Limits;
use crate::error::Error;
use crate::eval::{is_brewka_model, is_consistent, is_consistent_set};
use crate::logic::{Interpretation, Interpretation3, Truth3, TruthValue};
use crate::reduct::{brewka_reduct, least_herbrand_model, x_reduct, ReductProgram};
use crate::syntax::{LiteralSet, Program};

/// Why a candidate is not an answer set.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Rejection {
    Inconsistent,
    /// Disjunctive programs only; LPOD candidates report [`Rejection::NotLeastModel`].
    NotAModelOfReduct,
    NotLeastModel,
    NotMinimalModel,
}

impl fmt::Display for Rejection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rejection::Inconsistent => "inconsistent",
            Rejection::NotAModelOfReduct => "not a model of the reduct",
            Rejection::NotLeastModel => "not the least model of the reduct",
            Rejection::NotMinimalModel => "not a minimal model of the reduct",
        })
    }
}

/// The `≤`-least model of a reduct with singleton heads.
pub fn least_model(reduct: &ReductProgram) -> Result<Interpretation3, Error> {
    least_model_with_steps(reduct).map(|(m, _)| m)
}

/// [`least_model`] plus the number of operator applications until the
/// fixpoint was observed (at most `2·|Σ| + 1`).
pub fn least_model_with_steps(reduct: &ReductProgram) -> Result<(Interpretation3, usize), Error> {
    if let Some(rule) = reduct.rules.iter().position(|r| r.head.len() != 1) {
        return Err(Error::DisjunctiveReduct { rule });
    }
    let sigma = reduct.sigma.clone();
    let mut current = Interpretation::constant(sigma.clone(), Truth3::F);
    let mut steps = 0;
    loop {
        steps += 1;
        let mut next = Interpretation::constant(sigma.clone(), Truth3::F);
        for rule in &reduct.rules {
            let v = rule.body_value(&current)?;
            let head = &rule.head[0];
            let old = next.value(head)?;
            if v > old {
                next.set(head, v)?;
            }
        }
        if next == current {
            return Ok((current, steps));
        }
        current = next;
    }
}

/// `None` when `candidate` is an answer set of `program`.
pub fn check_answer_set(
    program: &Program,
    candidate: &Interpretation3,
) -> Result<Option<Rejection>, Error> {
    let reduct = x_reduct(program, candidate)?;
    if !is_consistent(candidate) {
        return Ok(Some(Rejection::Inconsistent));
    }
    if !reduct.is_disjunctive() {
        return Ok((least_model(&reduct)? != *candidate).then_some(Rejection::NotLeastModel));
    }
    if !reduct.is_model(candidate)? {
        return Ok(Some(Rejection::NotAModelOfReduct));
    }
    for smaller in candidate.truth_downset() {
        if smaller != *candidate && reduct.is_model(&smaller)? {
            return Ok(Some(Rejection::NotMinimalModel));
        }
    }
    Ok(None)
}

pub fn is_answer_set(program: &Program, candidate: &Interpretation3) -> Result<bool, Error> {
    Ok(check_answer_set(program, candidate)?.is_none())
}

/// Every three-valued answer set, in candidate order.
pub fn enumerate_answer_sets(
    program: &Program,
    limits: &Limits,
) -> Result<Vec<Interpretation3>, Error> {
    let sigma = program.sigma();
    let count = limits.candidates(3, sigma.len())?;
    limits.filter_map(count, |idx| {
        let candidate = Interpretation::from_index(sigma.clone(), idx);
        Ok(is_answer_set(program, &candidate)?.then_some(candidate))
    })
}

/// The literals mapped to `T`.
pub fn collapse<V: TruthValue>(m: &Interpretation<V>) -> LiteralSet {
    m.literals_with(V::TRUE).cloned().collect()
}

/// Answer-set test of the original semantics: `set` is a consistent model
/// of `program` and the least model of its reduct.
pub fn is_brewka_answer_set(program: &Program, set: &LiteralSet) -> Result<bool, Error> {
    Ok(is_consistent_set(set)
        && is_brewka_model(set, program)?
        && least_herbrand_model(&brewka_reduct(program, set)?) == *set)
}

/// Every answer set of the original semantics. Subsets of `Σ` are visited
/// in bitmask order with the first literal as the lowest bit.
pub fn brewka_answer_sets(program: &Program, limits: &Limits) -> Result<Vec<LiteralSet>, Error> {
    program.require_lpod()?;
    let sigma = program.sigma();
    let count = limits.candidates(2, sigma.len())?;
    limits.filter_map(count, |mask| {
        let set: LiteralSet = sigma
            .iter()
            .enumerate()
            .filter(|(i, _)| mask >> i & 1 == 1)
            .map(|(_, l)| l.clone())
            .collect();
        Ok(is_brewka_answer_set(program, &set)?.then_some(set))
    })
}

/// Literals that must be `F*` in the three-valued counterpart of the
/// answer set `set`: the least fixpoint of adding each `Cⱼ` of a rule whose
/// negative body avoids `set`, whose positive body lies in `set` plus the
/// literals found so far, and whose levels `C₁ … Cⱼ` all lie outside `set`.
pub fn impossible_literals(program: &Program, set: &LiteralSet) -> Result<LiteralSet, Error> {
    program.require_lpod()?;
    let mut forced = LiteralSet::new();
    loop {
        let mut grew = false;
        for rule in program.rules() {
            if rule.body_neg().iter().any(|b| set.contains(b)) {
                continue;
            }
            if !rule
                .body_pos()
                .iter()
                .all(|a| set.contains(a) || forced.contains(a))
            {
                continue;
            }
            for level in rule.head() {
                let c = &level[0];
                if set.contains(c) {
                    break;
                }
                grew |= forced.insert(c.clone());
            }
        }
        if !grew {
            return Ok(forced);
        }
    }
}

/// The unique three-valued answer set whose collapse is the original
/// answer set `set`.
pub fn lift(program: &Program, set: &LiteralSet) -> Result<Interpretation3, Error> {
    if !is_brewka_answer_set(program, set)? {
        return Err(Error::NotABrewkaAnswerSet(format_set(set)));
    }
    let forced = impossible_literals(program, set)?;
    Ok(Interpretation::from_fn(program.sigma().clone(), |l| {
        if set.contains(l) {
            Truth3::T
        } else if forced.contains(l) {
            Truth3::FStar
        } else {
            Truth3::F
        }
    }))
}

pub(crate) fn format_set(set: &LiteralSet) -> String {
    let items: Vec<_> = set.iter().map(|l| l.to_string()).collect();
    format!("{{{}}}", items.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::Literal;
    use Truth3::{FStar, F, T};

    fn program(text: &str) -> Program {
        text.parse().unwrap()
    }

    fn interp(p: &Program, vals: &[Truth3]) -> Interpretation3 {
        Interpretation::new(p.sigma().clone(), vals.to_vec()).unwrap()
    }

    fn set(names: &[&str]) -> LiteralSet {
        names.iter().map(|n| n.parse().unwrap()).collect()
    }

    fn values(sets: &[Interpretation3]) -> Vec<Vec<Truth3>> {
        sets.iter().map(|m| m.values().to_vec()).collect()
    }

    fn reduct_of(text: &str) -> ReductProgram {
        // Builds a reduct directly from rule text where `F*` may appear as
        // the first body item.
        let sigma_src: String = text.replace("F*,", "").replace(":- F*.", ".");
        let p = program(&sigma_src);
        let mut rules = Vec::new();
        for line in text.split('.').map(str::trim).filter(|l| !l.is_empty()) {
            let (head, body) = line.split_once(":-").unwrap_or((line, ""));
            let mut items: Vec<&str> = body
                .split(',')
                .map(str::trim)
                .filter(|s| !s.is_empty())
                .collect();
            let guard = items.first() == Some(&"F*");
            if guard {
                items.remove(0);
            }
            rules.push(crate::reduct::ReductRule {
                head: vec![head.trim().parse().unwrap()],
                fstar_guard: guard,
                body: items
                    .iter()
                    .map(|s| s.parse::<Literal>().unwrap())
                    .collect(),
            });
        }
        ReductProgram {
            rules,
            sigma: p.sigma().clone(),
        }
    }

    #[test]
    fn least_model_examples() {
        let r = reduct_of("wine :- F*. beer.");
        assert_eq!(least_model(&r).unwrap().values(), &[FStar, T]);

        let p = program("a. b.");
        let empty = ReductProgram {
            rules: vec![],
            sigma: p.sigma().clone(),
        };
        assert_eq!(least_model(&empty).unwrap().values(), &[F, F]);

        let r = reduct_of("a :- b. b.");
        assert_eq!(least_model(&r).unwrap().values(), &[T, T]);
    }

    #[test]
    fn least_model_rejects_disjunctive_heads() {
        let p = program("pub * (cinema v tv).");
        let r = x_reduct(&p, &interp(&p, &[FStar, T, F])).unwrap();
        assert_eq!(least_model(&r), Err(Error::DisjunctiveReduct { rule: 1 }));
    }

    #[test]
    fn least_model_is_least_and_bounded() {
        let r = reduct_of("a :- F*, c. b :- a. c :- b. c :- F*. d :- c, a.");
        let (m, steps) = least_model_with_steps(&r).unwrap();
        assert!(steps <= 2 * r.sigma.len() + 1);
        assert!(r.is_model(&m).unwrap());
        for idx in 0..3u64.pow(r.sigma.len() as u32) {
            let n = Interpretation3::from_index(r.sigma.clone(), idx);
            if r.is_model(&n).unwrap() {
                assert!(m.leq(&n).unwrap(), "{n}");
            }
        }
    }

    #[test]
    fn is_answer_set_examples() {
        let p = program("a * b.");
        assert!(is_answer_set(&p, &interp(&p, &[T, F])).unwrap());
        assert!(is_answer_set(&p, &interp(&p, &[FStar, T])).unwrap());
        assert!(!is_answer_set(&p, &interp(&p, &[F, T])).unwrap());

        let p = program("wine * beer. -wine.");
        assert!(is_answer_set(&p, &interp(&p, &[FStar, T, T])).unwrap());
        assert_eq!(
            check_answer_set(&p, &interp(&p, &[F, T, T])).unwrap(),
            Some(Rejection::NotLeastModel)
        );
        assert_eq!(
            check_answer_set(&p, &interp(&p, &[T, F, T])).unwrap(),
            Some(Rejection::Inconsistent)
        );
    }

    #[test]
    fn enumerate_examples() {
        let sets = enumerate_answer_sets(&program("wine * beer."), &Limits::default()).unwrap();
        assert_eq!(values(&sets), [vec![T, F], vec![FStar, T]]);

        // Frozen from a brute-force pass over all nine candidates.
        let sets = enumerate_answer_sets(&program("a * b. b * a."), &Limits::default()).unwrap();
        assert_eq!(values(&sets), [vec![T, FStar], vec![FStar, T], vec![T, T]]);

        // Frozen from a brute-force pass over all 27 candidates.
        let sets =
            enumerate_answer_sets(&program("pub * (cinema v tv)."), &Limits::default()).unwrap();
        assert_eq!(
            values(&sets),
            [vec![T, F, F], vec![FStar, T, F], vec![FStar, F, T]]
        );
    }

    #[test]
    fn disjunctive_rejections() {
        let p = program("pub * (cinema v tv).");
        assert_eq!(
            check_answer_set(&p, &interp(&p, &[FStar, T, T])).unwrap(),
            Some(Rejection::NotMinimalModel)
        );
        assert_eq!(
            check_answer_set(&p, &interp(&p, &[FStar, F, F])).unwrap(),
            Some(Rejection::NotAModelOfReduct)
        );
    }

    #[test]
    fn enumeration_respects_budget() {
        let err =
            enumerate_answer_sets(&program("a * b * c."), &Limits::with_budget(26)).unwrap_err();
        assert!(matches!(
            err,
            Error::BudgetExceeded {
                base: 3,
                literals: 3,
                cap: 26
            }
        ));
    }

    #[test]
    fn brewka_answer_set_examples() {
        let limits = Limits::default();
        assert_eq!(
            brewka_answer_sets(&program("wine * beer."), &limits).unwrap(),
            [set(&["wine"]), set(&["beer"])]
        );
        assert_eq!(
            brewka_answer_sets(&program("wine * beer. -wine."), &limits).unwrap(),
            [set(&["beer", "-wine"])]
        );
        assert_eq!(
            brewka_answer_sets(&program("pub * (cinema v tv)."), &limits),
            Err(Error::NotAnLpod { rule: 0 })
        );
    }

    #[test]
    fn collapse_examples() {
        let p = program("wine * beer. -wine.");
        assert_eq!(
            collapse(&interp(&p, &[FStar, T, T])),
            set(&["beer", "-wine"])
        );
        assert!(collapse(&interp(&p, &[F, F, F])).is_empty());
        let p = program("a. b.");
        assert_eq!(collapse(&interp(&p, &[T, T])), set(&["a", "b"]));
    }

    #[test]
    fn lift_examples() {
        let p = program("wine * beer. -wine.");
        assert_eq!(
            lift(&p, &set(&["beer", "-wine"])).unwrap().values(),
            &[FStar, T, T]
        );
        let p = program("a * b.");
        assert_eq!(lift(&p, &set(&["a"])).unwrap().values(), &[T, F]);
        assert_eq!(lift(&p, &set(&["b"])).unwrap().values(), &[FStar, T]);
        assert!(matches!(
            lift(&p, &set(&["a", "b"])),
            Err(Error::NotABrewkaAnswerSet(_))
        ));
    }

    #[test]
    fn lift_propagates_through_bodies() {
        let p =
            program("mercedes * bmw. gas_mercedes * diesel_mercedes :- mercedes. -gas_mercedes.");
        let m2 = lift(&p, &set(&["bmw", "-gas_mercedes"])).unwrap();
        assert_eq!(
            m2.to_string(),
            "{mercedes=F*, bmw=T, gas_mercedes=F*, diesel_mercedes=F*, -gas_mercedes=T}"
        );
        assert!(is_answer_set(&p, &m2).unwrap());
    }
}
