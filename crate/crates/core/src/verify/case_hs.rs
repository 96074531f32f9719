//! HS engine: `M = T` simple and regular on points.

use super::{evaluate, run_mode, CaseVerdict, Run, RunOptions, VerifyError};
use crate::catalog::GroupFacts;
use crate::params::Mode;

pub fn verify_hs_group(facts: &GroupFacts) -> CaseVerdict {
    evaluate(Mode::HS, facts)
}

/// Runs the HS engine without judging the outcome.
pub fn run_hs(opts: &RunOptions) -> Result<Run, VerifyError> {
    run_mode(Mode::HS, opts, Ok)
}

/// Full HS run; fails on any group satisfying all three conditions.
pub fn verify_hs_all() -> Result<Vec<CaseVerdict>, VerifyError> {
    let run = run_hs(&RunOptions::default())?;
    check_hs(&run)?;
    Ok(run.verdicts)
}

pub fn check_hs(run: &Run) -> Result<(), VerifyError> {
    match run.survivor_witnesses().into_iter().next() {
        Some((group, witness)) => Err(VerifyError::Survivor { group: group.to_string(), witness: witness.to_string() }),
        None => Ok(()),
    }
}
