//! Case labels and the elimination reason the written argument gives for
//! each group, so verdicts can be compared with it.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::catalog::{FamilyKey, GroupId, LieFamily, Sporadic};
use crate::params::Mode;

/// One of the fixed case labels: `Lemma 3.1, Case 1` to `Case 5(viii)` for
/// HS and `Lemma 4.1, Case 1` to `Case 5` for HC.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CaseLabel {
    pub mode: Mode,
    pub case: u8,
    pub sub: Option<u8>,
}

const ROMAN: [&str; 8] = ["i", "ii", "iii", "iv", "v", "vi", "vii", "viii"];

impl CaseLabel {
    pub fn all(mode: Mode) -> Vec<CaseLabel> {
        let mut v: Vec<CaseLabel> = (1..=4).map(|case| CaseLabel { mode, case, sub: None }).collect();
        match mode {
            Mode::HS => v.extend((1..=8).map(|i| CaseLabel { mode, case: 5, sub: Some(i) })),
            Mode::HC => v.push(CaseLabel { mode, case: 5, sub: None }),
        }
        v
    }

    pub fn of(mode: Mode, id: &GroupId) -> CaseLabel {
        use LieFamily::*;
        let (case, sub) = match (id.family_key(), id) {
            (FamilyKey::Alt | FamilyKey::Sporadic, _) => (1, None),
            (FamilyKey::Lie(A), GroupId::Lie { rank: 1, .. }) => (2, None),
            (FamilyKey::Lie(A), _) => (3, None),
            (FamilyKey::Lie(TwistedA), _) => (4, None),
            (FamilyKey::Lie(family), _) => (
                5,
                Some(match family {
                    B | C => 1,
                    D => 2,
                    E6 | E7 | E8 | F4 => 3,
                    G2 => 4,
                    TwistedD => 5,
                    TwistedE6 => 6,
                    TrialityD4 => 7,
                    _ => 8,
                }),
            ),
        };
        let sub = if mode == Mode::HC { None } else { sub };
        CaseLabel { mode, case, sub }
    }
}

impl fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let lemma = match self.mode {
            Mode::HS => "3.1",
            Mode::HC => "4.1",
        };
        write!(f, "Lemma {lemma}, Case {}", self.case)?;
        if let Some(i) = self.sub {
            write!(f, "({})", ROMAN[usize::from(i) - 1])?;
        }
        Ok(())
    }
}

impl Serialize for CaseLabel {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Elimination reasons a case argument can cite for a simple, canonical group.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Reason {
    BoundC,
    BoundCRelaxed,
    NoSolution,
}

/// Odd `q` for which the sharp HS bound admits `A_1(q)`.
pub const HS_A1_ODD: [u64; 18] = [3, 5, 7, 9, 11, 13, 17, 19, 23, 25, 27, 29, 31, 37, 49, 81, 125, 243];
/// Odd `q` left for `A_1(q)` in HC once isomorphisms are removed.
pub const HC_A1_ODD: [u64; 8] = [11, 13, 17, 19, 25, 27, 49, 81];

/// The reason the written argument gives for eliminating `id`, or `None`
/// for the groups it reports as surviving the parameter conditions.
pub fn cited(mode: Mode, id: &GroupId) -> Option<Reason> {
    use LieFamily::*;
    use Reason::*;
    let q = id.q().unwrap_or(0);
    let in_set = |set: &[u64]| set.contains(&q);
    let reason = match (mode, id) {
        (_, GroupId::Alt(5 | 7)) => NoSolution,
        (Mode::HS, GroupId::Alt(6) | GroupId::Sporadic(Sporadic::M11)) => NoSolution,
        (Mode::HC, GroupId::Alt(6)) => return None,
        (_, GroupId::Alt(_) | GroupId::Sporadic(_)) => BoundC,
        (_, GroupId::Lie { family: A, rank: 1, p: 2, f, .. }) => {
            if (3..=7).contains(f) {
                NoSolution
            } else {
                BoundC
            }
        }
        (Mode::HS, GroupId::Lie { family: A, rank: 1, .. }) if in_set(&HS_A1_ODD[4..]) => NoSolution,
        (Mode::HC, GroupId::Lie { family: A, rank: 1, .. }) if in_set(&HC_A1_ODD) => NoSolution,
        (_, GroupId::Lie { family: A, rank: 1, .. }) => BoundC,
        (Mode::HS, GroupId::Lie { family: A, rank: 2, .. }) if in_set(&[2, 3, 4, 7]) => NoSolution,
        (Mode::HS, GroupId::Lie { family: A, rank: 2, .. }) if in_set(&[5, 8, 9, 11, 13]) => BoundC,
        (Mode::HS, GroupId::Lie { family: A, rank: 3, .. }) if q == 3 => BoundC,
        (Mode::HC, GroupId::Lie { family: A, rank: 2, .. }) if q == 2 => return None,
        (Mode::HC, GroupId::Lie { family: A | TwistedA, rank: 2, .. }) if in_set(&[3, 4, 5, 7, 8, 9]) => NoSolution,
        (Mode::HC, GroupId::Lie { family: A | TwistedA, rank: 2, .. }) if in_set(&[11, 13]) => BoundC,
        (Mode::HS, GroupId::Lie { family: TwistedA, rank: 2, .. }) if in_set(&[3, 4, 5, 8]) => NoSolution,
        (Mode::HS, GroupId::Lie { family: TwistedA, rank: 2, .. }) if in_set(&[7, 9, 11, 13]) => BoundC,
        (Mode::HS, GroupId::Lie { family: TwistedA, rank: 3, .. }) if in_set(&[2, 3]) => NoSolution,
        (Mode::HS, GroupId::Lie { family: TwistedA, rank: 3, .. }) if q == 4 => BoundC,
        (Mode::HC, GroupId::Lie { family: TwistedA, rank: 3, .. }) if q == 2 => NoSolution,
        (Mode::HS, GroupId::Lie { family: B, rank: 2, p: 2, f: 2 }) => BoundC,
        (Mode::HS, GroupId::Lie { family: G2, p: 3, .. }) => BoundC,
        (Mode::HS, GroupId::Lie { family: Suzuki, f: 3, .. }) => NoSolution,
        _ => BoundCRelaxed,
    };
    Some(reason)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn label(mode: Mode, s: &str) -> String {
        CaseLabel::of(mode, &s.parse().unwrap()).to_string()
    }

    #[test]
    fn labels_follow_family_structure() {
        assert_eq!(label(Mode::HS, "A(3;3)"), "Lemma 3.1, Case 3");
        assert_eq!(label(Mode::HS, "G2(2)"), "Lemma 3.1, Case 5(iv)");
        assert_eq!(label(Mode::HS, "G2(2)'"), "Lemma 3.1, Case 5(iv)");
        assert_eq!(label(Mode::HS, "2F4(2)'"), "Lemma 3.1, Case 5(viii)");
        assert_eq!(label(Mode::HS, "3D4(q3=8)"), "Lemma 3.1, Case 5(vii)");
        assert_eq!(label(Mode::HS, "M11"), "Lemma 3.1, Case 1");
        assert_eq!(label(Mode::HC, "2B2(8)"), "Lemma 4.1, Case 5");
        assert_eq!(label(Mode::HC, "A(1;7)"), "Lemma 4.1, Case 2");
        assert_eq!(CaseLabel::all(Mode::HS).len(), 12);
        assert_eq!(CaseLabel::all(Mode::HC).len(), 5);
    }

    #[test]
    fn citations_of_named_groups() {
        let c = |m, s: &str| cited(m, &s.parse().unwrap());
        assert_eq!(c(Mode::HS, "A(3;3)"), Some(Reason::BoundC));
        assert_eq!(c(Mode::HS, "Alt(8)"), Some(Reason::BoundC));
        assert_eq!(c(Mode::HS, "2B2(8)"), Some(Reason::NoSolution));
        assert_eq!(c(Mode::HS, "2F4(2)'"), Some(Reason::BoundCRelaxed));
        assert_eq!(c(Mode::HS, "A(1;243)"), Some(Reason::NoSolution));
        assert_eq!(c(Mode::HS, "A(1;256)"), Some(Reason::BoundC));
        assert_eq!(c(Mode::HC, "Alt(6)"), None);
        assert_eq!(c(Mode::HC, "A(2;2)"), None);
        assert_eq!(c(Mode::HC, "2B2(8)"), Some(Reason::BoundCRelaxed));
        assert_eq!(c(Mode::HC, "2A(2;q2=121)"), Some(Reason::BoundC));
    }
}
