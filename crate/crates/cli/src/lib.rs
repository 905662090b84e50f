//! The `lpod` command line. [`run`] executes a parsed command and returns
//! its exit code and output instead of printing, so it can be driven from
//! tests as well as from `main`.

use std::collections::BTreeSet;
use std::fs;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use lpod_core::answer_sets::{
    brewka_answer_sets, check_answer_set, collapse, enumerate_answer_sets,
};
use lpod_core::characterization::answer_sets_oracle;
use lpod_core::logic_lab::equivalent;
use lpod_core::preference::{brewka_most_preferred, most_preferred};
use lpod_core::reduct::x_reduct;
use lpod_core::{Error, Formula, Interpretation3, Limits, Literal, LiteralSet, Program, Truth3};
use serde::Serialize;

pub mod report;

pub const EXIT_OK: i32 = 0;
pub const EXIT_INPUT: i32 = 1;
pub const EXIT_BUDGET: i32 = 2;
pub const EXIT_NEGATIVE: i32 = 3;
pub const EXIT_UNSUPPORTED: i32 = 4;

#[derive(Debug, Parser)]
#[command(
    name = "lpod",
    version,
    about = "Answer sets for logic programs with ordered disjunction"
)]
pub struct Cli {
    /// Largest number of candidate interpretations to enumerate.
    #[arg(long, global = true)]
    pub budget: Option<u64>,
    /// Worker threads for candidate checking.
    #[arg(long, global = true, default_value_t = 1)]
    pub threads: usize,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print every answer set and mark the most preferred ones.
    Solve {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Semantics::New)]
        semantics: Semantics,
        #[arg(long)]
        json: bool,
    },
    /// Compare the most preferred answer sets of both semantics.
    Compare {
        file: PathBuf,
        #[arg(long)]
        json: bool,
    },
    /// Decide whether an interpretation is an answer set.
    Check {
        file: PathBuf,
        /// JSON object mapping every literal to "T", "F*" or "F".
        #[arg(long)]
        interp: String,
    },
    /// Decide whether two formulas agree under every four-valued assignment.
    Equiv { lhs: String, rhs: String },
    /// Print the reduct of a program relative to an interpretation.
    Reduct {
        file: PathBuf,
        #[arg(long)]
        interp: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Semantics {
    /// Three-valued answer sets with F*-set preference.
    New,
    /// Two-valued answer sets with inclusion preference.
    Brewka,
    /// Three-valued answer sets found as minimal four-valued models.
    Oracle,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self {
            code: EXIT_OK,
            stdout,
            stderr: String::new(),
        }
    }

    fn with_code(code: i32, stdout: String) -> Self {
        Self {
            code,
            stdout,
            stderr: String::new(),
        }
    }

    fn failure(code: i32, message: impl std::fmt::Display) -> Self {
        Self {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

/// Exit code for a library error.
pub fn exit_code(err: &Error) -> i32 {
    match err {
        Error::BudgetExceeded { .. } | Error::TooManyVariables { .. } => EXIT_BUDGET,
        Error::NotAnLpod { .. } => EXIT_UNSUPPORTED,
        _ => EXIT_INPUT,
    }
}

pub fn run(cli: &Cli) -> Outcome {
    let limits = Limits {
        budget: cli.budget,
        threads: cli.threads,
    };
    let result = match &cli.command {
        Command::Solve {
            file,
            semantics,
            json,
        } => solve(file, *semantics, *json, &limits),
        Command::Compare { file, json } => compare(file, *json, &limits),
        Command::Check { file, interp } => check(file, interp),
        Command::Equiv { lhs, rhs } => equiv(lhs, rhs),
        Command::Reduct { file, interp } => reduct(file, interp),
    };
    result.unwrap_or_else(|(code, message)| Outcome::failure(code, message))
}

type Failure = (i32, String);

fn fail(err: Error) -> Failure {
    (exit_code(&err), err.to_string())
}

pub fn load_program(path: &Path) -> Result<Program, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| (EXIT_INPUT, format!("cannot read {}: {e}", path.display())))?;
    text.parse()
        .map_err(|e| (EXIT_INPUT, format!("{}:{e}", path.display())))
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

fn solve(
    path: &Path,
    semantics: Semantics,
    json: bool,
    limits: &Limits,
) -> Result<Outcome, Failure> {
    let program = load_program(path)?;
    let shown = path.display().to_string();
    let report = match semantics {
        Semantics::New => {
            let sets = enumerate_answer_sets(&program, limits).map_err(fail)?;
            report::three_valued(&shown, "new", &program, &sets)
        }
        Semantics::Oracle => {
            let sets = answer_sets_oracle(&program, limits).map_err(fail)?;
            report::three_valued(&shown, "oracle", &program, &sets)
        }
        Semantics::Brewka => {
            program.require_lpod().map_err(fail)?;
            let sets = brewka_answer_sets(&program, limits).map_err(fail)?;
            report::brewka(&shown, &program, &sets).map_err(fail)?
        }
    };
    let code = if report.answer_sets.is_empty() {
        EXIT_NEGATIVE
    } else {
        EXIT_OK
    };
    let stdout = if json {
        to_json(&report)
    } else {
        report::render_text(&report)
    };
    Ok(Outcome::with_code(code, stdout))
}

#[derive(Debug, Serialize)]
struct Comparison {
    program: String,
    new: Vec<Vec<String>>,
    brewka: Vec<Vec<String>>,
    verdict: &'static str,
}

fn compare(path: &Path, json: bool, limits: &Limits) -> Result<Outcome, Failure> {
    let program = load_program(path)?;
    program.require_lpod().map_err(fail)?;
    let sets = enumerate_answer_sets(&program, limits).map_err(fail)?;
    let new: BTreeSet<LiteralSet> = most_preferred(&sets).iter().map(collapse).collect();
    let brewka: BTreeSet<LiteralSet> = brewka_most_preferred(&program, limits)
        .map_err(fail)?
        .into_iter()
        .collect();
    let verdict = if new == brewka { "AGREES" } else { "DIVERGES" };
    let listed = |sets: &BTreeSet<LiteralSet>| -> Vec<Vec<String>> {
        sets.iter()
            .map(|s| s.iter().map(|l| l.to_string()).collect())
            .collect()
    };
    let cmp = Comparison {
        program: path.display().to_string(),
        new: listed(&new),
        brewka: listed(&brewka),
        verdict,
    };
    if json {
        return Ok(Outcome::ok(to_json(&cmp)));
    }
    let braced = |sets: &[Vec<String>]| -> String {
        let parts: Vec<_> = sets
            .iter()
            .map(|s| format!("{{{}}}", s.join(", ")))
            .collect();
        parts.join(" ")
    };
    Ok(Outcome::ok(format!(
        "new:    {}\nbrewka: {}\n{}\n",
        braced(&cmp.new),
        braced(&cmp.brewka),
        verdict
    )))
}

/// Reads an interpretation given as a JSON object, either inline or as
/// the path of a file holding one.
pub fn parse_interpretation(program: &Program, text: &str) -> Result<Interpretation3, Failure> {
    let raw = if text.trim_start().starts_with('{') {
        text.to_string()
    } else {
        fs::read_to_string(text).map_err(|e| (EXIT_INPUT, format!("cannot read {text}: {e}")))?
    };
    let object: serde_json::Map<String, serde_json::Value> =
        serde_json::from_str(&raw).map_err(|e| (EXIT_INPUT, format!("bad interpretation: {e}")))?;
    let mut pairs: Vec<(Literal, Truth3)> = Vec::with_capacity(object.len());
    for (key, value) in &object {
        let literal: Literal = key.parse().map_err(fail)?;
        let value = value
            .as_str()
            .ok_or_else(|| (EXIT_INPUT, format!("value of `{key}` must be a string")))?
            .parse::<Truth3>()
            .map_err(|e| (EXIT_INPUT, e.to_string()))?;
        pairs.push((literal, value));
    }
    Interpretation3::from_pairs(program.sigma().clone(), pairs.iter().map(|(l, v)| (l, *v)))
        .map_err(fail)
}

fn check(path: &Path, interp: &str) -> Result<Outcome, Failure> {
    let program = load_program(path)?;
    let candidate = parse_interpretation(&program, interp)?;
    Ok(
        match check_answer_set(&program, &candidate).map_err(fail)? {
            None => Outcome::ok(format!("{candidate} is an answer set\n")),
            Some(reason) => Outcome::with_code(
                EXIT_NEGATIVE,
                format!("{candidate} is not an answer set: {reason}\n"),
            ),
        },
    )
}

fn equiv(lhs: &str, rhs: &str) -> Result<Outcome, Failure> {
    let parse = |s: &str| -> Result<Formula, Failure> {
        s.parse()
            .map_err(|e| (EXIT_INPUT, format!("in `{s}`: {e}")))
    };
    let (lhs, rhs) = (parse(lhs)?, parse(rhs)?);
    Ok(match equivalent(&lhs, &rhs).map_err(fail)? {
        None => Outcome::ok("EQUIVALENT\n".to_string()),
        Some(cex) => {
            let row: Vec<_> = cex
                .assignment
                .iter()
                .map(|(l, v)| format!("{l}={v}"))
                .collect();
            Outcome::with_code(
                EXIT_NEGATIVE,
                format!(
                    "NOT EQUIVALENT\n{}: {} vs {}\n",
                    row.join(", "),
                    cex.left,
                    cex.right
                ),
            )
        }
    })
}

fn reduct(path: &Path, interp: &str) -> Result<Outcome, Failure> {
    let program = load_program(path)?;
    let candidate = parse_interpretation(&program, interp)?;
    Ok(Outcome::ok(
        x_reduct(&program, &candidate).map_err(fail)?.to_string(),
    ))
}
