//! Exhaustive four-valued truth tables and equivalence checking.
//!
//! Rows enumerate assignments with the first variable varying fastest,
//! each variable running through `F, F*, T*, T`.

use indexmap::IndexSet;

use crate::error::Error;
use crate::eval::eval;
use crate::logic::{Interpretation, Interpretation4, Truth4};
use crate::syntax::{Formula, Literal};

/// Most distinct literals a table may range over (`4^8` rows).
pub const MAX_VARIABLES: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruthTable {
    pub variables: Vec<Literal>,
    pub rows: Vec<(Vec<Truth4>, Truth4)>,
}

impl TruthTable {
    pub fn values(&self) -> impl Iterator<Item = Truth4> + '_ {
        self.rows.iter().map(|(_, v)| *v)
    }
}

fn assignments(
    variables: IndexSet<Literal>,
) -> Result<impl Iterator<Item = Interpretation4>, Error> {
    if variables.len() > MAX_VARIABLES {
        return Err(Error::TooManyVariables {
            found: variables.len(),
            max: MAX_VARIABLES,
        });
    }
    let sigma = std::sync::Arc::new(variables);
    let rows = 4u64.pow(sigma.len() as u32);
    Ok((0..rows).map(move |idx| Interpretation::from_index(sigma.clone(), idx)))
}

pub fn truth_table(phi: &Formula) -> Result<TruthTable, Error> {
    let variables = phi.literals();
    let names: Vec<Literal> = variables.iter().cloned().collect();
    let rows = assignments(variables)?
        .map(|i| Ok((i.values().to_vec(), eval(&i, phi)?)))
        .collect::<Result<_, Error>>()?;
    Ok(TruthTable {
        variables: names,
        rows,
    })
}

/// The first assignment on which two formulas disagree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub assignment: Vec<(Literal, Truth4)>,
    pub left: Truth4,
    pub right: Truth4,
}

/// `None` when `lhs` and `rhs` agree on every joint assignment. Variables
/// are matched by name, `lhs` literals first.
pub fn equivalent(lhs: &Formula, rhs: &Formula) -> Result<Option<Counterexample>, Error> {
    let mut variables = lhs.literals();
    variables.extend(rhs.literals());
    for i in assignments(variables)? {
        let (left, right) = (eval(&i, lhs)?, eval(&i, rhs)?);
        if left != right {
            return Ok(Some(Counterexample {
                assignment: i.iter().map(|(l, v)| (l.clone(), v)).collect(),
                left,
                right,
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::logic::TruthValue;

    fn f(s: &str) -> Formula {
        s.parse().unwrap()
    }

    #[test]
    fn constant_table() {
        let t = truth_table(&f("F*")).unwrap();
        assert!(t.variables.is_empty());
        assert_eq!(t.rows, [(vec![], Truth4::FStar)]);
    }

    #[test]
    fn identity_table() {
        let t = truth_table(&f("x")).unwrap();
        assert_eq!(t.values().collect::<Vec<_>>(), Truth4::ALL);
        assert_eq!(
            truth_table(&f("x * x")).unwrap().rows,
            truth_table(&f("x")).unwrap().rows
        );
    }

    #[test]
    fn equivalence_examples() {
        assert_eq!(
            equivalent(&f("x1 * (x2 v x3)"), &f("(x1 * x2) v (x1 * x3)")).unwrap(),
            None
        );
        assert_eq!(
            equivalent(&f("not (x1 & x2)"), &f("not x1 v not x2")).unwrap(),
            None
        );

        let cex = equivalent(&f("(x1 v x2) * x3"), &f("(x1 * x3) v (x2 * x3)"))
            .unwrap()
            .expect("not equivalent");
        let values: Vec<_> = cex
            .assignment
            .iter()
            .map(|(l, v)| (l.to_string(), *v))
            .collect();
        assert_eq!(
            values,
            [
                ("x1".to_string(), Truth4::TStar),
                ("x2".to_string(), Truth4::FStar),
                ("x3".to_string(), Truth4::T)
            ]
        );
        assert_eq!((cex.left, cex.right), (Truth4::TStar, Truth4::T));
    }

    #[test]
    fn disjoint_variables_enlarge_the_space() {
        let cex = equivalent(&f("a"), &f("b")).unwrap().unwrap();
        assert_eq!(cex.assignment.len(), 2);
        assert!(equivalent(&f("a v not a"), &f("not b v b"))
            .unwrap()
            .is_some());
    }

    #[test]
    fn too_many_variables() {
        let wide = f("a & b & c & d & e & g & h & i & j");
        assert_eq!(
            truth_table(&wide),
            Err(Error::TooManyVariables { found: 9, max: 8 })
        );
        assert!(equivalent(&f("a & b & c & d & e"), &f("g & h & i & j")).is_err());
    }
}
