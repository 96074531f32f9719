//! Case engines for the HS and HC parameter conditions.
//!
//! Every group gets a [`CaseVerdict`]. Checks run in a fixed order:
//! simplicity, isomorphism to an already-examined group, the relaxed bound,
//! the sharp bound, then the parameter equation. The verdict records the
//! reason the written argument states when that reason is confirmed, and the
//! first failing check otherwise, in which case a discrepancy note is kept.

pub mod case_hc;
pub mod case_hs;
pub mod citations;
pub mod cutoffs;

use std::collections::BTreeSet;

use num_bigint::BigUint;
use rayon::prelude::*;
use serde::Serialize;

use crate::arith::{self, big};
use crate::catalog::{self, exceptional_lower_bound, Bound, CatalogError, FamilyKey, GroupFacts, GroupId, OutPolicy};
use crate::diophantine::{solve_hc, solve_hs, HcWitness, HsWitness};
use crate::params::{hc_bounds, hs_bounds, HcBounds, HsBounds, Mode};
use citations::{cited, CaseLabel, Reason};

pub use case_hc::{eliminate_survivor, verify_hc_all, verify_hc_group};
pub use case_hs::{verify_hs_all, verify_hs_group};

/// `|Out|` estimate used for alternating and sporadic groups.
pub const CASE1_OUT_FLOOR: u64 = 2;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind")]
pub enum Elimination {
    NotSimple,
    Duplicate {
        canonical: GroupId,
    },
    BoundC,
    BoundCRelaxed,
    NoSolution,
    FlagDivisibility {
        t: u64,
        t_prime: u64,
        #[serde(serialize_with = "arith::ser_big")]
        modulus: BigUint,
        /// `p^k` exactly divides `t + 1` but does not divide the modulus.
        prime: u64,
        power: u32,
    },
}

impl Elimination {
    fn from_reason(r: Reason) -> Elimination {
        match r {
            Reason::BoundC => Elimination::BoundC,
            Reason::BoundCRelaxed => Elimination::BoundCRelaxed,
            Reason::NoSolution => Elimination::NoSolution,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            Elimination::NotSimple => "NotSimple",
            Elimination::Duplicate { .. } => "Duplicate",
            Elimination::BoundC => "BoundC",
            Elimination::BoundCRelaxed => "BoundCRelaxed",
            Elimination::NoSolution => "NoSolution",
            Elimination::FlagDivisibility { .. } => "FlagDivisibility",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Bounds {
    Hs(HsBounds),
    Hc(HcBounds),
}

impl Bounds {
    pub fn s_max(&self) -> u64 {
        match self {
            Bounds::Hs(b) => b.s_max,
            Bounds::Hc(b) => b.s_max,
        }
    }

    pub fn relaxed(&self) -> &BigUint {
        match self {
            Bounds::Hs(b) => &b.order_max_relaxed,
            Bounds::Hc(b) => &b.order_max_relaxed,
        }
    }

    fn sharp_ok(&self, order: &BigUint) -> bool {
        match self {
            Bounds::Hs(b) => *order <= b.order_max,
            Bounds::Hc(b) => order * order <= b.order_sq_max,
        }
    }

    fn describe_sharp(&self) -> String {
        match self {
            Bounds::Hs(b) => format!("sharp bound {}", b.order_max),
            Bounds::Hc(b) => format!("sharp bound {} on the squared order", b.order_sq_max),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(untagged)]
pub enum Witness {
    Hs(HsWitness),
    Hc(HcWitness),
}

impl std::fmt::Display for Witness {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Witness::Hs(w) => write!(f, "(s={}, t'={})", w.s, w.t_prime),
            Witness::Hc(w) => write!(f, "(s={}, y={})", w.s, w.y),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CaseVerdict {
    pub group: GroupFacts,
    /// `|Out|` the bounds were evaluated at.
    pub out_used: u64,
    /// Order the bounds were compared with: the exact order, or the `F_4`
    /// lower bound for the `E` and `F_4` families.
    #[serde(serialize_with = "arith::ser_big")]
    pub order_for_bounds: BigUint,
    pub bounds: Bounds,
    pub relaxed_ok: bool,
    pub sharp_ok: bool,
    pub witnesses: Vec<Witness>,
    pub eliminated_by: Option<Elimination>,
    pub paper_case_label: CaseLabel,
    pub notes: Vec<String>,
    pub discrepancy: Option<String>,
}

impl CaseVerdict {
    /// Simple, canonical, within both bounds, and with a solution.
    pub fn is_survivor(&self) -> bool {
        self.group.is_simple && self.group.is_canonical() && self.relaxed_ok && self.sharp_ok && !self.witnesses.is_empty()
    }

    pub fn survives_elimination(&self) -> bool {
        self.is_survivor() && self.eliminated_by.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Catalog(#[from] CatalogError),
    #[error("{group} satisfies every condition with {witness}")]
    Survivor { group: String, witness: String },
    #[error("pre-elimination survivors {found:?} differ from the expected {expected:?}")]
    SurvivorSet { found: Vec<String>, expected: Vec<String> },
    #[error("t + 1 = {} divides the flag modulus for {group}", t + 1)]
    DivisibilityHolds { group: String, t: u64 },
    #[error("invariant violated: {0}")]
    Invariant(String),
}

#[derive(Debug, Clone, Default)]
pub struct RunOptions {
    pub family: Option<FamilyKey>,
    pub jobs: Option<usize>,
}

/// Verdicts of one engine run plus its survivor counts.
#[derive(Debug, Clone, Serialize)]
pub struct Run {
    pub mode: Mode,
    pub verdicts: Vec<CaseVerdict>,
    pub survivors_pre_elimination: usize,
    pub survivors_post_elimination: usize,
}

impl Run {
    pub fn discrepancy_notes(&self) -> Vec<String> {
        self.verdicts.iter().filter_map(|v| v.discrepancy.clone()).collect()
    }

    /// `(group, witness)` pairs that satisfy every condition before the
    /// flag-divisibility step.
    pub fn survivor_witnesses(&self) -> Vec<(GroupId, Witness)> {
        self.verdicts
            .iter()
            .filter(|v| v.is_survivor())
            .flat_map(|v| v.witnesses.iter().map(|w| (v.group.id.clone(), *w)))
            .collect()
    }
}

/// Groups the case arguments name explicitly, examined whatever the bounds say.
pub const NAMED: &[&str] = &[
    "Alt(5)", "Alt(6)", "Alt(7)", "Alt(8)", "M11", "M12",
    "A(1;2)", "A(1;3)", "A(1;4)", "A(1;5)", "A(1;7)", "A(1;8)", "A(1;9)", "A(1;256)",
    "A(2;2)", "A(2;3)", "A(2;4)", "A(2;5)", "A(2;7)", "A(2;8)", "A(2;9)", "A(2;11)", "A(2;13)", "A(2;16)",
    "A(3;2)", "A(3;3)", "A(3;4)", "A(4;2)",
    "2A(2;q2=4)", "2A(2;q2=9)", "2A(2;q2=16)", "2A(2;q2=25)", "2A(2;q2=49)", "2A(2;q2=64)", "2A(2;q2=81)",
    "2A(2;q2=121)", "2A(2;q2=169)", "2A(3;q2=4)", "2A(3;q2=9)", "2A(3;q2=16)", "2A(3;q2=25)", "2A(4;q2=4)",
    "B(2;2)", "B(2;2)'", "B(2;3)", "B(2;4)", "B(2;5)", "B(2;8)", "B(3;3)", "B(3;4)", "C(3;2)", "C(3;3)",
    "D(4;2)", "D(4;3)", "E6(2)", "E7(2)", "E8(2)", "F4(2)",
    "G2(2)", "G2(2)'", "G2(3)", "G2(4)", "G2(9)",
    "2D(4;q2=4)", "2E6(q2=4)", "3D4(q3=8)",
    "2B2(2)", "2B2(8)", "2B2(32)", "2G2(3)", "2G2(3)'", "2G2(27)", "2F4(2)", "2F4(2)'", "2F4(8)",
];

/// Structural elimination: not simple, or isomorphic to a different
/// canonical entry.
fn structural(facts: &GroupFacts) -> Option<(Elimination, String)> {
    if !facts.is_simple {
        let note = match derived_of(&facts.id) {
            Some(d) if catalog::canonical(&d) != d => {
                format!("{} is not simple; its derived subgroup {d} is isomorphic to {}", facts.id, catalog::canonical(&d))
            }
            Some(d) => format!("{} is not simple; its derived subgroup {d} is examined separately", facts.id),
            None => format!("{} is not simple", facts.id),
        };
        return Some((Elimination::NotSimple, note));
    }
    if !facts.is_canonical() {
        let note = format!("{} is isomorphic to {} and is examined under that name", facts.id, facts.canonical);
        return Some((Elimination::Duplicate { canonical: facts.canonical.clone() }, note));
    }
    None
}

fn derived_of(id: &GroupId) -> Option<GroupId> {
    GroupId::derived(id.clone()).ok()
}

/// Evaluates one group under `mode` without the HC flag-divisibility step.
pub(crate) fn evaluate(mode: Mode, facts: &GroupFacts) -> CaseVerdict {
    let policy = OutPolicy::Case1Floor(CASE1_OUT_FLOOR);
    let out_used = policy.out_used(facts);
    let mut notes = Vec::new();
    if out_used != facts.out_order {
        notes.push(format!("bounds use |Out| <= {out_used}; the exact |Out| is {}", facts.out_order));
    }
    let order_for_bounds = match exceptional_lower_bound(&facts.id) {
        Some(lb) => {
            notes.push(format!("bounds compare the lower bound q^52/16 = {lb} rather than the exact order"));
            lb
        }
        None => facts.order.clone(),
    };
    let bounds = match mode {
        Mode::HS => Bounds::Hs(hs_bounds(out_used)),
        Mode::HC => Bounds::Hc(hc_bounds(out_used)),
    };
    let relaxed_ok = order_for_bounds <= *bounds.relaxed();
    let sharp_ok = bounds.sharp_ok(&order_for_bounds);
    let s_max = bounds.s_max();
    let solve = |order: &BigUint| -> Vec<Witness> {
        match mode {
            Mode::HS => solve_hs(order, s_max).into_iter().map(Witness::Hs).collect(),
            Mode::HC => solve_hc(order, s_max).into_iter().map(Witness::Hc).collect(),
        }
    };
    let mut verdict = CaseVerdict {
        group: facts.clone(),
        out_used,
        order_for_bounds,
        bounds,
        relaxed_ok,
        sharp_ok,
        witnesses: Vec::new(),
        eliminated_by: None,
        paper_case_label: CaseLabel::of(mode, &facts.id),
        notes,
        discrepancy: None,
    };
    if let Some((elim, note)) = structural(facts) {
        verdict.eliminated_by = Some(elim);
        verdict.notes.push(note);
        return verdict;
    }
    if relaxed_ok && sharp_ok {
        verdict.witnesses = solve(&facts.order);
    }
    let first_failing = if !relaxed_ok {
        Some(Elimination::BoundCRelaxed)
    } else if !sharp_ok {
        Some(Elimination::BoundC)
    } else if verdict.witnesses.is_empty() {
        Some(Elimination::NoSolution)
    } else {
        None
    };
    let stated = cited(mode, &facts.id);
    let confirmed = match stated {
        Some(Reason::BoundCRelaxed) => !relaxed_ok,
        Some(Reason::BoundC) => !sharp_ok,
        Some(Reason::NoSolution) => solve(&facts.order).is_empty(),
        None => first_failing.is_none(),
    };
    if confirmed {
        verdict.eliminated_by = stated.map(Elimination::from_reason);
    } else {
        verdict.eliminated_by = first_failing.clone();
        verdict.discrepancy = Some(discrepancy(&verdict, stated, first_failing.as_ref()));
    }
    verdict
}

fn discrepancy(v: &CaseVerdict, stated: Option<Reason>, actual: Option<&Elimination>) -> String {
    let id = &v.group.id;
    let o = &v.order_for_bounds;
    let why = match stated {
        Some(Reason::BoundCRelaxed) => format!("order {o} does not exceed the relaxed bound {}", v.bounds.relaxed()),
        Some(Reason::BoundC) => format!("order {o} does not exceed the {}", v.bounds.describe_sharp()),
        Some(Reason::NoSolution) => "the parameter equation has a solution".to_string(),
        None => "no condition fails".to_string(),
    };
    let stated = stated.map_or("survival".to_string(), |r| format!("{r:?}"));
    let actual = actual.map_or("nothing (it survives)", |e| e.name());
    format!("{id} ({}): stated elimination {stated} does not apply because {why}; eliminated by {actual} instead", v.paper_case_label)
}

/// Catalogue entries an engine run examines: every entry (simple or not)
/// passing the relaxed bound of `mode` under the alternating/sporadic `|Out|`
/// estimate, plus the named groups.
pub(crate) fn candidates(mode: Mode) -> Result<Vec<GroupFacts>, CatalogError> {
    let bound = match mode {
        Mode::HS => Bound::poly_out(1 << 12, 4),
        Mode::HC => Bound::poly_out(1 << 8, 4),
    };
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    let scanned = catalog::scan(&bound, OutPolicy::Case1Floor(CASE1_OUT_FLOOR))?.groups;
    let named = NAMED.iter().map(|s| s.parse::<GroupId>().and_then(|id| catalog::classify(&id)));
    for facts in scanned.into_iter().map(Ok).chain(named) {
        let facts = facts?;
        if seen.insert(facts.id.clone()) {
            out.push(facts);
        }
    }
    Ok(out)
}

pub(crate) fn in_pool<T: Send>(jobs: Option<usize>, work: impl FnOnce() -> T + Send) -> T {
    match jobs {
        Some(n) => rayon::ThreadPoolBuilder::new()
            .num_threads(n.max(1))
            .build()
            .map(|pool| pool.install(work))
            .expect("thread pool"),
        None => work(),
    }
}

/// Evaluates `candidates` in parallel and sorts the verdicts by case label,
/// order and name.
pub(crate) fn evaluate_all(
    mode: Mode,
    candidates: Vec<GroupFacts>,
    opts: &RunOptions,
    finish: impl Fn(CaseVerdict) -> Result<CaseVerdict, VerifyError> + Sync,
) -> Result<Vec<CaseVerdict>, VerifyError> {
    let selected: Vec<GroupFacts> =
        candidates.into_iter().filter(|g| opts.family.is_none_or(|f| g.id.family_key() == f)).collect();
    let mut verdicts = in_pool(opts.jobs, || {
        selected.par_iter().map(|g| finish(evaluate(mode, g))).collect::<Result<Vec<_>, _>>()
    })?;
    verdicts.sort_by(|a, b| {
        a.paper_case_label
            .cmp(&b.paper_case_label)
            .then_with(|| a.group.order.cmp(&b.group.order))
            .then_with(|| a.group.id.to_string().cmp(&b.group.id.to_string()))
    });
    check_invariants(&verdicts)?;
    Ok(verdicts)
}

fn check_invariants(verdicts: &[CaseVerdict]) -> Result<(), VerifyError> {
    let mut canon = BTreeSet::new();
    for v in verdicts {
        let bad = |m: &str| Err(VerifyError::Invariant(format!("{}: {m}", v.group.id)));
        match &v.eliminated_by {
            Some(Elimination::NoSolution) if !v.witnesses.is_empty() => return bad("NoSolution with witnesses"),
            Some(Elimination::BoundCRelaxed) if v.relaxed_ok => return bad("BoundCRelaxed within the bound"),
            Some(Elimination::BoundC) if v.sharp_ok => return bad("BoundC within the bound"),
            Some(Elimination::Duplicate { .. }) => continue,
            _ => {}
        }
        if v.group.is_simple && (v.group.order < big(60) || !arith::divides(&big(2), &v.group.order)) {
            return bad("simple group of odd order or order below 60");
        }
        if !canon.insert(v.group.canonical.clone()) {
            return bad("canonical form examined twice");
        }
    }
    Ok(())
}

fn count_survivors(verdicts: &[CaseVerdict]) -> (usize, usize) {
    let pre = verdicts.iter().filter(|v| v.is_survivor()).count();
    let post = verdicts.iter().filter(|v| v.survives_elimination()).count();
    (pre, post)
}

pub(crate) fn run_mode(
    mode: Mode,
    opts: &RunOptions,
    finish: impl Fn(CaseVerdict) -> Result<CaseVerdict, VerifyError> + Sync,
) -> Result<Run, VerifyError> {
    let verdicts = evaluate_all(mode, candidates(mode)?, opts, finish)?;
    let (pre, post) = count_survivors(&verdicts);
    Ok(Run { mode, verdicts, survivors_pre_elimination: pre, survivors_post_elimination: post })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn full_hs_run() {
        let run = case_hs::run_hs(&RunOptions::default()).unwrap();
        case_hs::check_hs(&run).unwrap();
        assert_eq!((run.survivors_pre_elimination, run.survivors_post_elimination), (0, 0));
        let notes = run.discrepancy_notes();
        assert_eq!(notes.len(), 1, "{notes:?}");
        assert!(notes[0].starts_with("Alt(8)"));
        assert!(run.verdicts.len() > NAMED.len());
    }

    #[test]
    fn full_hc_run() {
        let run = case_hc::run_hc(&RunOptions { jobs: Some(2), ..Default::default() }).unwrap();
        case_hc::check_hc(&run, true).unwrap();
        assert_eq!((run.survivors_pre_elimination, run.survivors_post_elimination), (2, 0));
        assert!(run.discrepancy_notes().is_empty(), "{:?}", run.discrepancy_notes());
    }

    #[test]
    fn family_filter_restricts_the_run() {
        let opts = RunOptions { family: Some(FamilyKey::Alt), jobs: None };
        let run = case_hc::run_hc(&opts).unwrap();
        assert!(run.verdicts.iter().all(|v| v.group.id.family_key() == FamilyKey::Alt));
        case_hc::check_hc(&run, false).unwrap();
        assert_eq!(run.survivors_pre_elimination, 1);
    }

    #[test]
    fn hs_relaxed_elimination_implies_hc_relaxed_elimination() {
        for g in candidates(Mode::HS).unwrap() {
            let (hs, hc) = (evaluate(Mode::HS, &g), evaluate(Mode::HC, &g));
            assert!(hs.relaxed_ok || !hc.relaxed_ok, "{}", g.id);
        }
    }
}
