//! Group identifiers and their string grammar.
//!
//! ```text
//! id        := alt | sporadic | lie | id "'"
//! alt       := "Alt(" n ")"                       n >= 5
//! sporadic  := "M11" | ... | "O'N" | "Fi24'" | ...
//! lie       := classical | exceptional
//! classical := ("A"|"B"|"C"|"D") "(" n ";" q ")"
//!            | ("2A"|"2D") "(" n ";q2=" Q ")"         Q = q^2
//! exceptional := ("E6"|"E7"|"E8"|"F4"|"G2") "(" q ")"
//!            | "2E6(q2=" Q ")" | "3D4(q3=" Q ")"     Q = q^2, q^3
//!            | ("2B2"|"2G2"|"2F4") "(" q ")"         q = p^f, f odd
//! ```
//!
//! Field sizes are stored as `(p, f)` where the displayed field is `p^f`:
//! `q` for untwisted families, `q^2` for `2A`, `2D`, `2E6`, and `q^3` for
//! `3D4`. The Suzuki and Ree families display `q = p^f` directly.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::sporadic::Sporadic;
use super::CatalogError;
use crate::arith;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LieFamily {
    A,
    TwistedA,
    B,
    C,
    D,
    TwistedD,
    E6,
    E7,
    E8,
    TwistedE6,
    F4,
    TrialityD4,
    G2,
    Suzuki,
    ReeG2,
    ReeF4,
}

impl LieFamily {
    pub const ALL: [LieFamily; 16] = [
        LieFamily::A,
        LieFamily::TwistedA,
        LieFamily::B,
        LieFamily::C,
        LieFamily::D,
        LieFamily::TwistedD,
        LieFamily::E6,
        LieFamily::E7,
        LieFamily::E8,
        LieFamily::TwistedE6,
        LieFamily::F4,
        LieFamily::TrialityD4,
        LieFamily::G2,
        LieFamily::Suzuki,
        LieFamily::ReeG2,
        LieFamily::ReeF4,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            LieFamily::A => "A",
            LieFamily::TwistedA => "2A",
            LieFamily::B => "B",
            LieFamily::C => "C",
            LieFamily::D => "D",
            LieFamily::TwistedD => "2D",
            LieFamily::E6 => "E6",
            LieFamily::E7 => "E7",
            LieFamily::E8 => "E8",
            LieFamily::TwistedE6 => "2E6",
            LieFamily::F4 => "F4",
            LieFamily::TrialityD4 => "3D4",
            LieFamily::G2 => "G2",
            LieFamily::Suzuki => "2B2",
            LieFamily::ReeG2 => "2G2",
            LieFamily::ReeF4 => "2F4",
        }
    }

    pub fn from_tag(tag: &str) -> Option<LieFamily> {
        LieFamily::ALL.iter().copied().find(|f| f.tag() == tag)
    }

    /// Degree of the field twist in the `(p, f)` convention: the displayed
    /// field `p^f` is `q^twist`.
    pub fn twist(self) -> u32 {
        match self {
            LieFamily::TwistedA | LieFamily::TwistedD | LieFamily::TwistedE6 => 2,
            LieFamily::TrialityD4 => 3,
            _ => 1,
        }
    }

    /// Families whose identifier carries an explicit rank.
    pub fn is_classical(self) -> bool {
        matches!(
            self,
            LieFamily::A | LieFamily::TwistedA | LieFamily::B | LieFamily::C | LieFamily::D | LieFamily::TwistedD
        )
    }

    pub fn min_rank(self) -> u32 {
        match self {
            LieFamily::A => 1,
            LieFamily::TwistedA | LieFamily::B => 2,
            LieFamily::C => 3,
            LieFamily::D | LieFamily::TwistedD => 4,
            other => other.fixed_rank().unwrap_or(1),
        }
    }

    /// The subscript of an exceptional family, which is also its stored rank.
    pub fn fixed_rank(self) -> Option<u32> {
        match self {
            LieFamily::E6 | LieFamily::TwistedE6 => Some(6),
            LieFamily::E7 => Some(7),
            LieFamily::E8 => Some(8),
            LieFamily::F4 | LieFamily::TrialityD4 | LieFamily::ReeF4 => Some(4),
            LieFamily::G2 | LieFamily::Suzuki | LieFamily::ReeG2 => Some(2),
            _ => None,
        }
    }

    /// Characteristic of the Suzuki and Ree families.
    pub fn fixed_prime(self) -> Option<u64> {
        match self {
            LieFamily::Suzuki | LieFamily::ReeF4 => Some(2),
            LieFamily::ReeG2 => Some(3),
            _ => None,
        }
    }

    pub fn is_suzuki_ree(self) -> bool {
        self.fixed_prime().is_some()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GroupId {
    Alt(u32),
    Sporadic(Sporadic),
    Lie { family: LieFamily, rank: u32, p: u64, f: u32 },
    /// Derived subgroup of a non-simple catalogue entry, e.g. `2F4(2)'`.
    Derived(Box<GroupId>),
}

/// Coarse family key used for filtering and case labels.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FamilyKey {
    Alt,
    Sporadic,
    Lie(LieFamily),
}

impl FamilyKey {
    pub fn parse(s: &str) -> Option<FamilyKey> {
        match s {
            "Alt" | "alt" => Some(FamilyKey::Alt),
            "Sporadic" | "sporadic" => Some(FamilyKey::Sporadic),
            other => LieFamily::from_tag(other).map(FamilyKey::Lie),
        }
    }
}

impl fmt::Display for FamilyKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyKey::Alt => f.write_str("Alt"),
            FamilyKey::Sporadic => f.write_str("Sporadic"),
            FamilyKey::Lie(l) => f.write_str(l.tag()),
        }
    }
}

impl GroupId {
    pub fn alt(n: u32) -> Result<GroupId, CatalogError> {
        let id = GroupId::Alt(n);
        id.validate()?;
        Ok(id)
    }

    pub fn sporadic(s: Sporadic) -> GroupId {
        GroupId::Sporadic(s)
    }

    /// Builds a Lie-type identifier from the order-formula parameter `q`
    /// (so `2A` with `q = 3` is the unitary group over the field of 9).
    pub fn lie(family: LieFamily, rank: u32, q: u64) -> Result<GroupId, CatalogError> {
        let (p, e) = arith::prime_power(q).ok_or(CatalogError::NotPrimePower(q))?;
        let id = GroupId::Lie { family, rank, p, f: e * family.twist() };
        id.validate()?;
        Ok(id)
    }

    /// Exceptional-family shorthand using the family's fixed rank.
    pub fn exceptional(family: LieFamily, q: u64) -> Result<GroupId, CatalogError> {
        let rank = family.fixed_rank().ok_or(CatalogError::RankRequired(family.tag()))?;
        GroupId::lie(family, rank, q)
    }

    pub fn derived(base: GroupId) -> Result<GroupId, CatalogError> {
        let id = GroupId::Derived(Box::new(base));
        id.validate()?;
        Ok(id)
    }

    pub fn validate(&self) -> Result<(), CatalogError> {
        match self {
            GroupId::Alt(n) => {
                if *n < 5 {
                    return Err(CatalogError::AltDegree(*n));
                }
            }
            GroupId::Sporadic(_) => {}
            GroupId::Lie { family, rank, p, f } => {
                if !arith::is_prime(*p) {
                    return Err(CatalogError::NotPrime(*p));
                }
                if *f == 0 || f % family.twist() != 0 {
                    return Err(CatalogError::BadExponent { family: family.tag(), f: *f });
                }
                if let Some(fixed) = family.fixed_prime() {
                    if *p != fixed || f % 2 == 0 {
                        return Err(CatalogError::BadExponent { family: family.tag(), f: *f });
                    }
                }
                match family.fixed_rank() {
                    Some(r) if *rank != r => {
                        return Err(CatalogError::Rank { family: family.tag(), rank: *rank, min: r });
                    }
                    None if *rank < family.min_rank() => {
                        return Err(CatalogError::Rank { family: family.tag(), rank: *rank, min: family.min_rank() });
                    }
                    _ => {}
                }
                if arith::checked_pow(*p, *f).is_none() {
                    return Err(CatalogError::FieldTooLarge { p: *p, f: *f });
                }
            }
            GroupId::Derived(base) => {
                base.validate()?;
                if !super::classify::has_derived_variant(base) {
                    return Err(CatalogError::NoDerivedVariant(base.to_string()));
                }
            }
        }
        Ok(())
    }

    /// The order-formula parameter `q` of a Lie-type identifier.
    pub fn q(&self) -> Option<u64> {
        match self {
            GroupId::Lie { family, p, f, .. } => {
                let e = if family.is_suzuki_ree() { *f } else { f / family.twist() };
                arith::checked_pow(*p, e)
            }
            _ => None,
        }
    }

    pub fn family_key(&self) -> FamilyKey {
        match self {
            GroupId::Alt(_) => FamilyKey::Alt,
            GroupId::Sporadic(_) => FamilyKey::Sporadic,
            GroupId::Lie { family, .. } => FamilyKey::Lie(*family),
            GroupId::Derived(base) => base.family_key(),
        }
    }

    pub fn lie_family(&self) -> Option<LieFamily> {
        match self.family_key() {
            FamilyKey::Lie(l) => Some(l),
            _ => None,
        }
    }
}

impl fmt::Display for GroupId {
    fn fmt(&self, out: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GroupId::Alt(n) => write!(out, "Alt({n})"),
            GroupId::Sporadic(s) => out.write_str(s.name()),
            GroupId::Derived(base) => write!(out, "{base}'"),
            GroupId::Lie { family, rank, p, f } => {
                let field = p.pow(*f);
                let tag = family.tag();
                match (family.is_classical(), family.twist()) {
                    (true, 1) => write!(out, "{tag}({rank};{field})"),
                    (true, 2) => write!(out, "{tag}({rank};q2={field})"),
                    (false, 2) => write!(out, "{tag}(q2={field})"),
                    (false, 3) => write!(out, "{tag}(q3={field})"),
                    _ => write!(out, "{tag}({field})"),
                }
            }
        }
    }
}

fn parse_field(s: &str, twist: u32, src: &str) -> Result<(u64, u32), CatalogError> {
    let bad = || CatalogError::Parse(src.to_string());
    let digits = match twist {
        1 => s,
        2 => s.strip_prefix("q2=").ok_or_else(bad)?,
        _ => s.strip_prefix("q3=").ok_or_else(bad)?,
    };
    let field: u64 = digits.parse().map_err(|_| bad())?;
    arith::prime_power(field).ok_or(CatalogError::NotPrimePower(field))
}

impl FromStr for GroupId {
    type Err = CatalogError;

    fn from_str(src: &str) -> Result<GroupId, CatalogError> {
        let s = src.trim();
        if let Some(sp) = Sporadic::from_name(s) {
            return Ok(GroupId::Sporadic(sp));
        }
        if let Some(base) = s.strip_suffix('\'') {
            return GroupId::derived(base.parse()?);
        }
        let bad = || CatalogError::Parse(src.to_string());
        let open = s.find('(').ok_or_else(bad)?;
        let inner = s[open + 1..].strip_suffix(')').ok_or_else(bad)?;
        let tag = &s[..open];
        if tag == "Alt" {
            let n: u32 = inner.parse().map_err(|_| bad())?;
            return GroupId::alt(n);
        }
        let family = LieFamily::from_tag(tag).ok_or_else(bad)?;
        let (rank, field) = if family.is_classical() {
            let (r, fld) = inner.split_once(';').ok_or_else(bad)?;
            (r.parse::<u32>().map_err(|_| bad())?, fld)
        } else {
            (family.fixed_rank().unwrap_or(0), inner)
        };
        let (p, f) = parse_field(field, family.twist(), src)?;
        let id = GroupId::Lie { family, rank, p, f };
        id.validate()?;
        Ok(id)
    }
}

impl Serialize for GroupId {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for GroupId {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<GroupId, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}
