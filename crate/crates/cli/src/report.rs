//! Serializable solve reports. Every field is produced by a library call;
//! this module only arranges the results.

use indexmap::IndexMap;
use lpod_core::answer_sets::collapse;
use lpod_core::preference::{self, degrees, fstar_set};
use lpod_core::{Error, Interpretation3, LiteralSet, Program, Truth3};
use serde::Serialize;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AnswerSetReport {
    /// Literal to value, in domain order.
    pub assignment: IndexMap<String, String>,
    pub fstar_set: Vec<String>,
    pub collapse: Vec<String>,
    pub most_preferred: bool,
    /// Rule position to satisfaction degree; original semantics only.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub brewka_degrees: Option<IndexMap<usize, usize>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SolveReport {
    pub program: String,
    pub semantics: String,
    pub sigma: Vec<String>,
    pub answer_sets: Vec<AnswerSetReport>,
    pub most_preferred_indices: Vec<usize>,
}

fn names(set: &LiteralSet) -> Vec<String> {
    set.iter().map(|l| l.to_string()).collect()
}

fn sigma_names(program: &Program) -> Vec<String> {
    program.sigma().iter().map(|l| l.to_string()).collect()
}

/// Report for three-valued answer sets (new semantics or the oracle).
pub fn three_valued(
    path: &str,
    semantics: &str,
    program: &Program,
    sets: &[Interpretation3],
) -> SolveReport {
    let preferred = preference::most_preferred_indices(sets);
    let answer_sets = sets
        .iter()
        .enumerate()
        .map(|(i, m)| AnswerSetReport {
            assignment: m
                .iter()
                .map(|(l, v)| (l.to_string(), v.to_string()))
                .collect(),
            fstar_set: names(&fstar_set(m)),
            collapse: names(&collapse(m)),
            most_preferred: preferred.contains(&i),
            brewka_degrees: None,
        })
        .collect();
    SolveReport {
        program: path.to_string(),
        semantics: semantics.to_string(),
        sigma: sigma_names(program),
        answer_sets,
        most_preferred_indices: preferred,
    }
}

/// Report for original answer sets, which are two-valued.
pub fn brewka(path: &str, program: &Program, sets: &[LiteralSet]) -> Result<SolveReport, Error> {
    let preferred = preference::brewka_most_preferred_indices(sets, program)?;
    let answer_sets = sets
        .iter()
        .enumerate()
        .map(|(i, s)| {
            let assignment = program
                .sigma()
                .iter()
                .map(|l| {
                    let v = if s.contains(l) { Truth3::T } else { Truth3::F };
                    (l.to_string(), v.to_string())
                })
                .collect();
            Ok(AnswerSetReport {
                assignment,
                fstar_set: Vec::new(),
                collapse: names(s),
                most_preferred: preferred.contains(&i),
                brewka_degrees: Some(degrees(s, program)?.into_iter().enumerate().collect()),
            })
        })
        .collect::<Result<_, Error>>()?;
    Ok(SolveReport {
        program: path.to_string(),
        semantics: "brewka".to_string(),
        sigma: sigma_names(program),
        answer_sets,
        most_preferred_indices: preferred,
    })
}

/// Human-readable rendering of a report.
pub fn render_text(report: &SolveReport) -> String {
    let mut out = format!(
        "{} ({} semantics): {} answer set(s)\n",
        report.program,
        report.semantics,
        report.answer_sets.len()
    );
    for (i, set) in report.answer_sets.iter().enumerate() {
        let marker = if set.most_preferred {
            "  [most preferred]"
        } else {
            ""
        };
        let values: Vec<_> = set
            .assignment
            .iter()
            .map(|(l, v)| format!("{l}={v}"))
            .collect();
        out += &format!("{}: {{{}}}{}\n", i + 1, values.join(", "), marker);
        out += &format!("   collapse: {{{}}}\n", set.collapse.join(", "));
        match &set.brewka_degrees {
            Some(d) => {
                let d: Vec<_> = d.iter().map(|(r, k)| format!("r{r}:{k}")).collect();
                out += &format!("   degrees: {}\n", d.join(" "));
            }
            None => out += &format!("   F*: {{{}}}\n", set.fstar_set.join(", ")),
        }
    }
    out
}
