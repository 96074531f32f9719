//! Catalogue of finite simple groups: identifiers, orders, outer
//! automorphism groups, exceptional isomorphisms and bounded enumeration.

mod classify;
pub mod enumerate;
mod formulas;
mod id;
mod sporadic;

pub use classify::{canonical, classify, order, out_order, GroupFacts};
pub use enumerate::{enumerate_under, enumerate_with, scan, Bound, OutPolicy, ScanOutcome, ScanRecord};
pub use formulas::exceptional_lower_bound;
pub use id::{FamilyKey, GroupId, LieFamily};
pub use sporadic::Sporadic;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum CatalogError {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{0} is not a prime power")]
    NotPrimePower(u64),
    #[error("Alt({0}) is not simple; the degree must be at least 5")]
    AltDegree(u32),
    #[error("exponent {f} is not valid for family {family}")]
    BadExponent { family: &'static str, f: u32 },
    #[error("rank {rank} is not valid for family {family} (expected at least {min})")]
    Rank { family: &'static str, rank: u32, min: u32 },
    #[error("family {0} needs an explicit rank")]
    RankRequired(&'static str),
    #[error("field size {p}^{f} does not fit in 64 bits")]
    FieldTooLarge { p: u64, f: u32 },
    #[error("{0} has no catalogued derived subgroup")]
    NoDerivedVariant(String),
    #[error("cannot parse group identifier {0:?}")]
    Parse(String),
    #[error("order is not increasing along the scan: {0}")]
    Monotonicity(String),
    #[error("enumeration did not terminate within the scan limit: {0}")]
    ScanLimit(String),
    #[error("bound parameters must be positive")]
    BadBound,
}
