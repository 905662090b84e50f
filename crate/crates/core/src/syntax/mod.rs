//! Program and formula syntax.
//!
//! Program files use an ASP-flavoured notation:
//!
//! ```text
//! % comments run to the end of the line
//! mercedes * bmw.
//! gas_mercedes * diesel_mercedes :- mercedes.
//! -gas_mercedes.
//! pub * (cinema v tv) :- free, not tired.
//! ```
//!
//! `*` is ordered disjunction, `v` classical disjunction within a head
//! level, `-` strong negation and `not` default negation. Formulas add
//! `&`, `<-` and the constant `F*`; see [`Formula`].

mod lexer;
mod parser;

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use indexmap::IndexSet;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, ParseError};
use crate::logic::Sigma;

pub use parser::{parse_formula, parse_program};

/// An atom, optionally under strong negation (rendered `-atom`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Literal {
    atom: String,
    negated: bool,
}

/// A deterministic set of literals, ordered by atom then polarity.
pub type LiteralSet = BTreeSet<Literal>;

impl Literal {
    /// # Panics
    ///
    /// If `atom` is not an identifier or is a reserved word.
    pub fn new(atom: impl Into<String>, negated: bool) -> Self {
        let atom = atom.into();
        assert!(is_atom(&atom), "`{atom}` is not a valid atom");
        Self { atom, negated }
    }

    pub fn pos(atom: impl Into<String>) -> Self {
        Self::new(atom, false)
    }

    pub fn neg(atom: impl Into<String>) -> Self {
        Self::new(atom, true)
    }

    pub fn atom(&self) -> &str {
        &self.atom
    }

    pub fn is_negated(&self) -> bool {
        self.negated
    }

    pub fn complement(&self) -> Self {
        Self {
            atom: self.atom.clone(),
            negated: !self.negated,
        }
    }
}

pub(crate) const RESERVED: [&str; 2] = ["not", "v"];

pub(crate) fn is_atom(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && !RESERVED.contains(&s)
}

impl fmt::Display for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.negated {
            f.write_str("-")?;
        }
        f.write_str(&self.atom)
    }
}

impl fmt::Debug for Literal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Literal {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        let (negated, atom) = match s.strip_prefix('-') {
            Some(rest) => (true, rest.trim_start()),
            None => (false, s),
        };
        if is_atom(atom) {
            Ok(Self {
                atom: atom.to_string(),
                negated,
            })
        } else {
            Err(Error::Parse(ParseError {
                kind: crate::ParseErrorKind::Syntax,
                line: 1,
                column: 1,
                message: format!("`{s}` is not a literal"),
            }))
        }
    }
}

impl Serialize for Literal {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Literal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// `C₁ * … * Cₙ :- A₁, …, Aₘ, not B₁, …, not Bₖ` where each head level
/// `Cᵢ` is a disjunction of literals.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Rule {
    head: Vec<Vec<Literal>>,
    body_pos: Vec<Literal>,
    body_neg: Vec<Literal>,
}

impl Rule {
    pub fn new(
        head: Vec<Vec<Literal>>,
        body_pos: Vec<Literal>,
        body_neg: Vec<Literal>,
    ) -> Result<Self, Error> {
        if head.is_empty() {
            return Err(Error::MalformedRule("empty head"));
        }
        if head.iter().any(Vec::is_empty) {
            return Err(Error::MalformedRule("empty head level"));
        }
        Ok(Self {
            head,
            body_pos,
            body_neg,
        })
    }

    /// An LPOD rule `c₁ * … * cₙ :- body` with singleton levels.
    pub fn ordered(
        head: impl IntoIterator<Item = Literal>,
        body_pos: Vec<Literal>,
        body_neg: Vec<Literal>,
    ) -> Result<Self, Error> {
        Self::new(
            head.into_iter().map(|l| vec![l]).collect(),
            body_pos,
            body_neg,
        )
    }

    pub fn head(&self) -> &[Vec<Literal>] {
        &self.head
    }

    pub fn body_pos(&self) -> &[Literal] {
        &self.body_pos
    }

    pub fn body_neg(&self) -> &[Literal] {
        &self.body_neg
    }

    pub fn is_lpod_rule(&self) -> bool {
        self.head.iter().all(|level| level.len() == 1)
    }

    pub fn is_fact(&self) -> bool {
        self.body_pos.is_empty() && self.body_neg.is_empty()
    }

    /// Every literal of the rule in textual order, duplicates included.
    pub fn literals(&self) -> impl Iterator<Item = &Literal> {
        self.head
            .iter()
            .flatten()
            .chain(&self.body_pos)
            .chain(&self.body_neg)
    }

    /// The rule as the single formula `head <- body`.
    pub fn to_formula(&self) -> Formula {
        let head = Formula::times(
            self.head
                .iter()
                .map(|level| Formula::or(level.iter().cloned().map(Formula::Lit))),
        );
        let body = Formula::and(
            self.body_pos.iter().cloned().map(Formula::Lit).chain(
                self.body_neg
                    .iter()
                    .cloned()
                    .map(|l| Formula::Not(Box::new(Formula::Lit(l)))),
            ),
        );
        Formula::Implies(Box::new(head), Box::new(body))
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, level) in self.head.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            write_level(f, level)?;
        }
        if !self.is_fact() {
            f.write_str(" :- ")?;
            let items = self
                .body_pos
                .iter()
                .map(|l| l.to_string())
                .chain(self.body_neg.iter().map(|l| format!("not {l}")));
            for (i, item) in items.enumerate() {
                if i > 0 {
                    f.write_str(", ")?;
                }
                f.write_str(&item)?;
            }
        }
        f.write_str(".")
    }
}

pub(crate) fn write_level(f: &mut fmt::Formatter<'_>, level: &[Literal]) -> fmt::Result {
    if let [only] = level {
        return write!(f, "{only}");
    }
    f.write_str("(")?;
    for (i, lit) in level.iter().enumerate() {
        if i > 0 {
            f.write_str(" v ")?;
        }
        write!(f, "{lit}")?;
    }
    f.write_str(")")
}

/// A propositional (D)LPOD with its literal universe.
#[derive(Clone, Debug)]
pub struct Program {
    rules: Vec<Rule>,
    sigma: Sigma,
}

impl Program {
    pub fn new(rules: Vec<Rule>) -> Self {
        let sigma: IndexSet<Literal> = rules.iter().flat_map(Rule::literals).cloned().collect();
        Self {
            rules,
            sigma: Arc::new(sigma),
        }
    }

    pub fn rules(&self) -> &[Rule] {
        &self.rules
    }

    /// Every literal occurring in the program, in order of first occurrence.
    pub fn sigma(&self) -> &Sigma {
        &self.sigma
    }

    pub fn is_lpod(&self) -> bool {
        self.rules.iter().all(Rule::is_lpod_rule)
    }

    /// Fails with [`Error::NotAnLpod`] on the first disjunctive head level.
    pub fn require_lpod(&self) -> Result<(), Error> {
        match self.rules.iter().position(|r| !r.is_lpod_rule()) {
            Some(rule) => Err(Error::NotAnLpod { rule }),
            None => Ok(()),
        }
    }
}

impl PartialEq for Program {
    fn eq(&self, other: &Self) -> bool {
        self.rules == other.rules
    }
}

impl Eq for Program {}

impl FromStr for Program {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_program(s)
    }
}

impl fmt::Display for Program {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for rule in &self.rules {
            writeln!(f, "{rule}")?;
        }
        Ok(())
    }
}

/// A formula of the three/four-valued logic.
///
/// `And`, `Or` and `Times` are n-ary and kept flat by their smart
/// constructors; all three connectives are associative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Formula {
    Lit(Literal),
    FStar,
    Not(Box<Formula>),
    And(Vec<Formula>),
    Or(Vec<Formula>),
    /// `lhs <- rhs`.
    Implies(Box<Formula>, Box<Formula>),
    Times(Vec<Formula>),
}

impl Formula {
    pub fn lit(s: &str) -> Self {
        Formula::Lit(s.parse().expect("invalid literal"))
    }

    // Named after the `not` keyword rather than `std::ops::Not`.
    #[allow(clippy::should_implement_trait)]
    pub fn not(f: Formula) -> Self {
        Formula::Not(Box::new(f))
    }

    pub fn implies(head: Formula, body: Formula) -> Self {
        Formula::Implies(Box::new(head), Box::new(body))
    }

    /// Conjunction; the empty conjunction is the empty `And` (true).
    pub fn and(parts: impl IntoIterator<Item = Formula>) -> Self {
        Self::flat(parts, Formula::And, |f| match f {
            Formula::And(v) => Ok(v),
            other => Err(other),
        })
    }

    /// Disjunction; the empty disjunction is the empty `Or` (false).
    pub fn or(parts: impl IntoIterator<Item = Formula>) -> Self {
        Self::flat(parts, Formula::Or, |f| match f {
            Formula::Or(v) => Ok(v),
            other => Err(other),
        })
    }

    /// # Panics
    ///
    /// On an empty sequence; ordered disjunction has no unit.
    pub fn times(parts: impl IntoIterator<Item = Formula>) -> Self {
        let f = Self::flat(parts, Formula::Times, |f| match f {
            Formula::Times(v) => Ok(v),
            other => Err(other),
        });
        assert!(
            !matches!(&f, Formula::Times(v) if v.is_empty()),
            "empty ordered disjunction"
        );
        f
    }

    fn flat(
        parts: impl IntoIterator<Item = Formula>,
        build: fn(Vec<Formula>) -> Formula,
        split: fn(Formula) -> Result<Vec<Formula>, Formula>,
    ) -> Self {
        let mut out = Vec::new();
        for p in parts {
            match split(p) {
                Ok(inner) => out.extend(inner),
                Err(other) => out.push(other),
            }
        }
        if out.len() == 1 {
            out.pop().unwrap()
        } else {
            build(out)
        }
    }

    /// Distinct literals in order of first occurrence.
    pub fn literals(&self) -> IndexSet<Literal> {
        let mut out = IndexSet::new();
        self.collect_literals(&mut out);
        out
    }

    fn collect_literals(&self, out: &mut IndexSet<Literal>) {
        match self {
            Formula::Lit(l) => {
                out.insert(l.clone());
            }
            Formula::FStar => {}
            Formula::Not(f) => f.collect_literals(out),
            Formula::And(fs) | Formula::Or(fs) | Formula::Times(fs) => {
                fs.iter().for_each(|f| f.collect_literals(out))
            }
            Formula::Implies(a, b) => {
                a.collect_literals(out);
                b.collect_literals(out);
            }
        }
    }

    /// Binding strength; larger binds tighter.
    fn precedence(&self) -> u8 {
        match self {
            Formula::Implies(..) => 1,
            Formula::Times(_) => 2,
            Formula::Or(v) if !v.is_empty() => 3,
            Formula::And(v) if !v.is_empty() => 4,
            Formula::Not(_) => 5,
            _ => 6,
        }
    }

    fn fmt_child(&self, f: &mut fmt::Formatter<'_>, min: u8) -> fmt::Result {
        if self.precedence() < min {
            write!(f, "({self})")
        } else {
            write!(f, "{self}")
        }
    }

    fn fmt_nary(f: &mut fmt::Formatter<'_>, parts: &[Formula], op: &str, prec: u8) -> fmt::Result {
        for (i, p) in parts.iter().enumerate() {
            if i > 0 {
                write!(f, " {op} ")?;
            }
            p.fmt_child(f, prec + 1)?;
        }
        Ok(())
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Formula::Lit(l) => write!(f, "{l}"),
            Formula::FStar => f.write_str("F*"),
            // Empty connectives have no surface syntax; render equivalents.
            Formula::And(v) if v.is_empty() => f.write_str("(not F*)"),
            Formula::Or(v) if v.is_empty() => f.write_str("(F* & not F*)"),
            Formula::Not(inner) => {
                f.write_str("not ")?;
                inner.fmt_child(f, 5)
            }
            Formula::And(v) => Self::fmt_nary(f, v, "&", 4),
            Formula::Or(v) => Self::fmt_nary(f, v, "v", 3),
            Formula::Times(v) => Self::fmt_nary(f, v, "*", 2),
            Formula::Implies(a, b) => {
                a.fmt_child(f, 1)?;
                f.write_str(" <- ")?;
                b.fmt_child(f, 2)
            }
        }
    }
}

impl FromStr for Formula {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_formula(s)
    }
}
