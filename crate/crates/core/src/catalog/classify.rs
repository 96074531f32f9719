use num_bigint::BigUint;
use serde::Serialize;

use super::formulas::{order_of, out_of};
use super::id::{GroupId, LieFamily};
use super::CatalogError;

/// Order, outer-automorphism order and isomorphism class of a catalogue entry.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GroupFacts {
    pub id: GroupId,
    #[serde(serialize_with = "crate::arith::ser_big")]
    pub order: BigUint,
    pub out_order: u64,
    pub is_simple: bool,
    pub canonical: GroupId,
}

impl GroupFacts {
    pub fn is_canonical(&self) -> bool {
        self.id == self.canonical
    }
}

fn lie(family: LieFamily, rank: u32, q: u64) -> GroupId {
    GroupId::lie(family, rank, q).expect("catalogue constant")
}

/// `(family, rank, q)` of the Lie-type entries that are not simple.
const NON_SIMPLE: [(LieFamily, u32, u64); 8] = [
    (LieFamily::A, 1, 2),
    (LieFamily::A, 1, 3),
    (LieFamily::B, 2, 2),
    (LieFamily::G2, 2, 2),
    (LieFamily::TwistedA, 2, 2),
    (LieFamily::Suzuki, 2, 2),
    (LieFamily::ReeG2, 2, 3),
    (LieFamily::ReeF4, 4, 2),
];

fn lie_params(id: &GroupId) -> Option<(LieFamily, u32, u64)> {
    match id {
        GroupId::Lie { family, rank, .. } => Some((*family, *rank, id.q()?)),
        _ => None,
    }
}

fn is_non_simple(id: &GroupId) -> bool {
    lie_params(id).is_some_and(|k| NON_SIMPLE.contains(&k))
}

/// Non-simple bases whose derived subgroup is catalogued.
pub(crate) fn has_derived_variant(base: &GroupId) -> bool {
    matches!(
        lie_params(base),
        Some((LieFamily::ReeF4, 4, 2) | (LieFamily::G2, 2, 2) | (LieFamily::ReeG2, 2, 3) | (LieFamily::B, 2, 2))
    )
}

/// Canonical representative under the exceptional isomorphisms the case
/// analysis relies on. Canonical targets map to themselves.
pub fn canonical(id: &GroupId) -> GroupId {
    use LieFamily::*;
    if let GroupId::Derived(base) = id {
        return match lie_params(base) {
            Some((ReeG2, _, 3)) => lie(A, 1, 8),
            Some((G2, _, 2)) => lie(TwistedA, 2, 3),
            Some((B, _, 2)) => GroupId::Alt(6),
            _ => id.clone(),
        };
    }
    match lie_params(id) {
        Some((A, 1, 4 | 5)) => GroupId::Alt(5),
        Some((A, 1, 9)) => GroupId::Alt(6),
        Some((A, 3, 2)) => GroupId::Alt(8),
        Some((A, 1, 7)) => lie(A, 2, 2),
        Some((B, 2, 3)) => lie(TwistedA, 3, 2),
        Some((B, n, q)) if n >= 3 && q % 2 == 0 => lie(C, n, q),
        _ => id.clone(),
    }
}

pub fn classify(id: &GroupId) -> Result<GroupFacts, CatalogError> {
    id.validate()?;
    Ok(GroupFacts {
        id: id.clone(),
        order: order_of(id),
        out_order: out_of(id),
        is_simple: !is_non_simple(id),
        canonical: canonical(id),
    })
}

pub fn order(id: &GroupId) -> Result<BigUint, CatalogError> {
    id.validate()?;
    Ok(order_of(id))
}

pub fn out_order(id: &GroupId) -> Result<u64, CatalogError> {
    id.validate()?;
    Ok(out_of(id))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::Sporadic;

    fn id(s: &str) -> GroupId {
        s.parse().unwrap()
    }

    #[test]
    fn exceptional_isomorphisms() {
        let pairs = [
            ("A(1;4)", "Alt(5)"),
            ("A(1;5)", "Alt(5)"),
            ("A(1;9)", "Alt(6)"),
            ("A(3;2)", "Alt(8)"),
            ("A(1;7)", "A(2;2)"),
            ("B(2;3)", "2A(3;q2=4)"),
            ("2G2(3)'", "A(1;8)"),
            ("G2(2)'", "2A(2;q2=9)"),
            ("B(2;2)'", "Alt(6)"),
            ("B(3;4)", "C(3;4)"),
        ];
        for (a, b) in pairs {
            let fa = classify(&id(a)).unwrap();
            let fb = classify(&id(b)).unwrap();
            assert_eq!(fa.canonical, id(b), "{a}");
            assert!(fb.is_canonical(), "{b}");
            assert_eq!(fa.order, fb.order, "{a} vs {b}");
            assert_eq!(fa.out_order, fb.out_order, "{a} vs {b}");
        }
    }

    #[test]
    fn non_simple_entries() {
        for s in ["A(1;2)", "A(1;3)", "B(2;2)", "G2(2)", "2A(2;q2=4)", "2B2(2)", "2G2(3)", "2F4(2)"] {
            let f = classify(&id(s)).unwrap();
            assert!(!f.is_simple, "{s}");
            assert!(f.is_canonical(), "{s}");
        }
        for s in ["2F4(2)'", "G2(2)'", "A(1;8)", "M11", "Alt(5)"] {
            assert!(classify(&id(s)).unwrap().is_simple, "{s}");
        }
        assert_eq!(classify(&id("2F4(2)'")).unwrap().canonical, id("2F4(2)'"));
    }

    #[test]
    fn sporadics_are_canonical() {
        let f = classify(&GroupId::Sporadic(Sporadic::M11)).unwrap();
        assert!(f.is_simple);
        assert_eq!(f.canonical, GroupId::Sporadic(Sporadic::M11));
    }

    #[test]
    fn invalid_ids_error() {
        assert!(classify(&GroupId::Alt(4)).is_err());
        assert!(order(&GroupId::Lie { family: LieFamily::A, rank: 0, p: 2, f: 1 }).is_err());
        assert!(out_order(&GroupId::Lie { family: LieFamily::A, rank: 1, p: 9, f: 1 }).is_err());
    }
}
