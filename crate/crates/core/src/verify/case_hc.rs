//! HC engine for `M = T^2`, including the flag-divisibility step that
//! removes the two groups surviving the parameter conditions.

use super::{evaluate, run_mode, CaseVerdict, Elimination, Run, RunOptions, VerifyError, Witness};
use crate::catalog::{GroupFacts, GroupId};
use crate::diophantine::HcWitness;
use crate::params::{derive_params, divisor_witness, flag_modulus, GQOrder, Mode};

/// `(group, s, y)` triples expected to satisfy the HC conditions.
pub const EXPECTED_SURVIVORS: [(&str, u64, u64); 2] = [("Alt(6)", 19, 18), ("A(2;2)", 13, 12)];

pub fn verify_hc_group(facts: &GroupFacts) -> CaseVerdict {
    evaluate(Mode::HC, facts)
}

/// Eliminates `w` for `facts` through `t + 1 | 2 |T|^2 |Out(T)|^2`.
pub fn eliminate_survivor(facts: &GroupFacts, w: HcWitness) -> Result<CaseVerdict, VerifyError> {
    let mut v = evaluate(Mode::HC, facts);
    v.eliminated_by = Some(flag_elimination(facts, w)?);
    Ok(v)
}

fn flag_elimination(facts: &GroupFacts, w: HcWitness) -> Result<Elimination, VerifyError> {
    if !w.validates(&facts.order) {
        return Err(VerifyError::Invariant(format!("{} does not have order (s+1)y for {w:?}", facts.id)));
    }
    let (t_prime, t) = (w.t_prime(), w.t());
    let d = derive_params(GQOrder { s: w.s, t }).map_err(|e| VerifyError::Invariant(e.to_string()))?;
    if d.t_prime != t_prime || d.y != Some(w.y) {
        return Err(VerifyError::Invariant(format!("parameters of {w:?} do not round-trip")));
    }
    let modulus = flag_modulus(Mode::HC, facts);
    match divisor_witness(t + 1, &modulus) {
        Some((prime, power)) => Ok(Elimination::FlagDivisibility { t, t_prime, modulus, prime, power }),
        None => Err(VerifyError::DivisibilityHolds { group: facts.id.to_string(), t }),
    }
}

fn finish(mut v: CaseVerdict) -> Result<CaseVerdict, VerifyError> {
    if !v.is_survivor() {
        return Ok(v);
    }
    let mut elims = Vec::new();
    for w in &v.witnesses {
        let Witness::Hc(w) = w else { unreachable!("HC verdicts carry HC witnesses") };
        elims.push(flag_elimination(&v.group, *w)?);
    }
    for e in &elims {
        if let Elimination::FlagDivisibility { t, modulus, prime, power, .. } = e {
            let pk = prime.pow(*power);
            v.notes.push(format!("t = {t}: {pk} divides t+1 = {} but not 2|T|^2|Out(T)|^2 = {modulus}", t + 1));
        }
    }
    v.eliminated_by = elims.into_iter().next();
    Ok(v)
}

/// Runs the HC engine without judging the outcome.
pub fn run_hc(opts: &RunOptions) -> Result<Run, VerifyError> {
    run_mode(Mode::HC, opts, finish)
}

/// Checks that the pre-elimination survivors are the expected triples
/// (all of them on a full run, a subset when filtered by family) and that
/// none survives elimination.
pub fn check_hc(run: &Run, full: bool) -> Result<(), VerifyError> {
    let expected: Vec<String> = EXPECTED_SURVIVORS.iter().map(|(g, s, y)| format!("{g} (s={s}, y={y})")).collect();
    let found: Vec<String> = run
        .survivor_witnesses()
        .iter()
        .map(|(g, w)| match w {
            Witness::Hc(w) => format!("{g} (s={}, y={})", w.s, w.y),
            Witness::Hs(_) => unreachable!("HC run"),
        })
        .collect();
    let ok = if full { found == expected } else { found.iter().all(|f| expected.contains(f)) };
    if !ok {
        return Err(VerifyError::SurvivorSet { found, expected });
    }
    if let Some(v) = run.verdicts.iter().find(|v| v.survives_elimination()) {
        return Err(VerifyError::Survivor { group: v.group.id.to_string(), witness: format!("{:?}", v.witnesses) });
    }
    Ok(())
}

/// Full HC run: exactly the two expected survivors, both eliminated.
pub fn verify_hc_all() -> Result<Vec<CaseVerdict>, VerifyError> {
    let run = run_hc(&RunOptions::default())?;
    check_hc(&run, true)?;
    Ok(run.verdicts)
}

pub fn expected_survivor_ids() -> Vec<GroupId> {
    EXPECTED_SURVIVORS.iter().map(|(g, _, _)| g.parse().expect("catalogue constant")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::big;
    use crate::catalog::classify;

    fn facts(s: &str) -> GroupFacts {
        classify(&s.parse().unwrap()).unwrap()
    }

    #[test]
    fn survivors_before_elimination() {
        let alt6 = verify_hc_group(&facts("Alt(6)"));
        assert_eq!(alt6.witnesses, [Witness::Hc(HcWitness { s: 19, y: 18 })]);
        assert!(alt6.is_survivor());
        let l32 = verify_hc_group(&facts("A(2;2)"));
        assert_eq!(l32.witnesses, [Witness::Hc(HcWitness { s: 13, y: 12 })]);
        assert_eq!(verify_hc_group(&facts("2B2(8)")).eliminated_by, Some(Elimination::BoundCRelaxed));
    }

    #[test]
    fn flag_divisibility_removes_both() {
        let v = eliminate_survivor(&facts("Alt(6)"), HcWitness { s: 19, y: 18 }).unwrap();
        assert_eq!(
            v.eliminated_by,
            Some(Elimination::FlagDivisibility { t: 341, t_prime: 17, modulus: big(4_147_200), prime: 19, power: 1 })
        );
        let v = eliminate_survivor(&facts("A(2;2)"), HcWitness { s: 13, y: 12 }).unwrap();
        assert_eq!(
            v.eliminated_by,
            Some(Elimination::FlagDivisibility { t: 155, t_prime: 11, modulus: big(225_792), prime: 13, power: 1 })
        );
        assert!(eliminate_survivor(&facts("Alt(6)"), HcWitness { s: 13, y: 12 }).is_err());
    }
}
