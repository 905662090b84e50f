//! Answer sets without reducts.
//!
//! In the four-valued logic `F < F* < T* < T`, the answer sets of a program
//! are exactly its consistent, solid (`T*`-free) models that are
//! `⪯`-minimal among *all* four-valued models. This module enumerates
//! models directly and applies that filter, which makes it an independent
//! oracle for [`crate::answer_sets`].

use crate::enumerate::Limits;
use crate::error::Error;
use crate::eval::{is_consistent, is_model};
use crate::logic::{Interpretation, Interpretation3, Interpretation4, Truth4};
use crate::syntax::Program;

/// No literal is `T*`.
pub fn is_solid(interp: &Interpretation4) -> bool {
    interp.values().iter().all(|&v| v != Truth4::TStar)
}

/// Every four-valued model, in candidate order (first literal least
/// significant, `F < F* < T* < T`).
pub fn four_valued_models(
    program: &Program,
    limits: &Limits,
) -> Result<Vec<Interpretation4>, Error> {
    let sigma = program.sigma();
    let count = limits.candidates(4, sigma.len())?;
    limits.filter_map(count, |idx| {
        let candidate = Interpretation::from_index(sigma.clone(), idx);
        Ok(is_model(&candidate, program)?.then_some(candidate))
    })
}

/// No other four-valued model lies `⪯`-below `model`.
pub fn is_preceq_minimal(program: &Program, model: &Interpretation4) -> Result<bool, Error> {
    for below in model.preceq_downset() {
        if below != *model && is_model(&below, program)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Answer sets computed as consistent, solid, `⪯`-minimal models.
pub fn answer_sets_oracle(
    program: &Program,
    limits: &Limits,
) -> Result<Vec<Interpretation3>, Error> {
    let sigma = program.sigma();
    let count = limits.candidates(4, sigma.len())?;
    limits.filter_map(count, |idx| {
        let candidate = Interpretation::from_index(sigma.clone(), idx);
        if !is_solid(&candidate) || !is_consistent(&candidate) || !is_model(&candidate, program)? {
            return Ok(None);
        }
        if !is_preceq_minimal(program, &candidate)? {
            return Ok(None);
        }
        Ok(candidate.to_three())
    })
}
