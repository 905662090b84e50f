use std::fmt;

use thiserror::Error;

use crate::syntax::Literal;

/// What went wrong while reading program or formula text.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ParseErrorKind {
    Syntax,
    /// A rule with nothing before `:-` or `.`.
    EmptyHead,
    /// A head level written as `()`.
    EmptyDisjunct,
}

/// A parse failure at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub line: usize,
    pub column: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.column, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),

    #[error("malformed rule: {0}")]
    MalformedRule(&'static str),

    #[error("literal `{0}` is not in the domain")]
    UnknownLiteral(Literal),

    #[error("literal `{0}` is assigned twice")]
    DuplicateLiteral(Literal),

    #[error("literal `{0}` has no value")]
    MissingLiteral(Literal),

    #[error("expected {expected} values for the domain, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("interpretations range over different literal sets")]
    DomainMismatch,

    #[error("not an LPOD: rule {rule} has a disjunctive head level")]
    NotAnLpod { rule: usize },

    #[error("reduct rule {rule} has a disjunctive head; a least model needs singleton heads")]
    DisjunctiveReduct { rule: usize },

    #[error("{base}^{literals} candidates exceed the enumeration budget of {cap}")]
    BudgetExceeded {
        base: u64,
        literals: usize,
        cap: u64,
    },

    #[error("{0} is not an answer set under the original semantics")]
    NotABrewkaAnswerSet(String),

    #[error("degree of rule {rule} is undefined: its body holds but no head literal is present")]
    UndefinedDegree { rule: usize },

    #[error("{found} distinct literals; truth tables support at most {max}")]
    TooManyVariables { found: usize, max: usize },
}
