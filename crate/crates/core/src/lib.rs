//! Answer sets for logic programs with ordered disjunction.
//!
//! A rule head `a * b` reads "prefer `a`; accept `b` only if `a` is
//! impossible". Programs are solved in a three-valued logic whose middle
//! value `F*` marks literals that are false because making them true would
//! be inconsistent. Most-preferred answer sets are those with a
//! subset-minimal set of `F*` literals.
//!
//! The crate also provides:
//!
//! - the original two-valued semantics with satisfaction degrees and
//!   inclusion preference ([`preference`]), for side-by-side comparison;
//! - a reduct-free oracle that finds the same answer sets as solid,
//!   consistent, `⪯`-minimal four-valued models ([`characterization`]);
//! - a four-valued truth-table engine ([`logic_lab`]).
//!
//! Heads may also be ordered sequences of classical disjunctions, as in
//! `pub * (cinema v tv)`.
//!
//! ```
//! use lpod_core::{answer_sets, preference, Limits, Program};
//!
//! let program: Program = "wine * beer. -wine.".parse().unwrap();
//! let sets = answer_sets::enumerate_answer_sets(&program, &Limits::default()).unwrap();
//! assert_eq!(sets.len(), 1);
//! assert_eq!(sets[0].to_string(), "{wine=F*, beer=T, -wine=T}");
//! assert_eq!(preference::most_preferred(&sets).len(), 1);
//! ```

pub mod answer_sets;
pub mod characterization;
mod enumerate;
pub mod error;
pub mod eval;
pub mod logic;
pub mod logic_lab;
pub mod preference;
pub mod reduct;
pub mod syntax;

pub use enumerate::Limits;
pub use error::{Error, ParseError, ParseErrorKind};
pub use logic::{
    times, Interpretation, Interpretation3, Interpretation4, Sigma, Truth3, Truth4, TruthValue,
};
pub use syntax::{Formula, Literal, LiteralSet, Program, Rule};
