//! Bounded enumeration of the catalogue.
//!
//! Each Lie family is scanned by rank, then characteristic, then exponent.
//! A scan along one parameter stops once the bound has failed for
//! `1 + MARGIN` consecutive values, and only if the ratio of the order
//! envelope to the bound was non-decreasing across that window. The
//! envelope is `numerator / max_divisor` against the bound evaluated at an
//! upper bound for `|Out|`, so every group that passes the exact test also
//! passes the envelope test.

use num_bigint::BigUint;
use serde::Serialize;

use super::classify::{classify, GroupFacts};
use super::formulas::{lie_out_upper, lie_parts, max_divisor};
use super::id::{FamilyKey, GroupId, LieFamily};
use super::sporadic::Sporadic;
use super::CatalogError;
use crate::arith::{self, big};

/// Extra failing parameter values scanned past the first failure.
pub const MARGIN: usize = 2;

const MAX_RANK: u32 = 256;
const MAX_PRIME: u64 = 1 << 24;
const MAX_ALT_DEGREE: u32 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bound {
    /// `|T| <= N`.
    OrderLeq(BigUint),
    /// `|T| <= c * |Out(T)|^e`.
    OrderLeqPolyOut { c: BigUint, e: u32 },
}

impl Bound {
    pub fn poly_out(c: u64, e: u32) -> Bound {
        Bound::OrderLeqPolyOut { c: big(c), e }
    }

    fn validate(&self) -> Result<(), CatalogError> {
        let ok = match self {
            Bound::OrderLeq(_) => true,
            Bound::OrderLeqPolyOut { c, e } => *c > BigUint::ZERO && *e >= 1,
        };
        ok.then_some(()).ok_or(CatalogError::BadBound)
    }

    /// Right-hand side of the bound for a group with `|Out| = out`.
    pub fn rhs(&self, out: u64) -> BigUint {
        match self {
            Bound::OrderLeq(n) => n.clone(),
            Bound::OrderLeqPolyOut { c, e } => c * big(out).pow(*e),
        }
    }

    pub fn admits(&self, order: &BigUint, out: u64) -> bool {
        *order <= self.rhs(out)
    }
}

/// Which `|Out|` value a bound is evaluated at.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum OutPolicy {
    #[default]
    Exact,
    /// Alternating and sporadic groups use `max(|Out|, k)`: the uniform
    /// estimate `|Out| <= 2` the alternating/sporadic case works with.
    Case1Floor(u64),
}

impl OutPolicy {
    pub fn out_used(self, facts: &GroupFacts) -> u64 {
        match (self, facts.id.family_key()) {
            (OutPolicy::Case1Floor(k), FamilyKey::Alt | FamilyKey::Sporadic) if facts.id != GroupId::Alt(6) => {
                facts.out_order.max(k)
            }
            _ => facts.out_order,
        }
    }
}

/// How the scan of one family (and rank) terminated.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRecord {
    pub family: String,
    pub rank: Option<u32>,
    pub scanned: usize,
    pub passing: Vec<GroupId>,
    /// Parameters of the failing window that ended the scan.
    pub stop_window: Vec<String>,
}

#[derive(Debug, Clone, Default)]
pub struct ScanOutcome {
    /// Every catalogue entry passing the bound, simple or not.
    pub groups: Vec<GroupFacts>,
    pub records: Vec<ScanRecord>,
}

/// Canonical simple groups admitted by `bound` under exact `|Out|`, sorted by
/// `(order, name)`.
pub fn enumerate_under(bound: Bound) -> Result<Vec<GroupFacts>, CatalogError> {
    enumerate_with(&bound, OutPolicy::Exact)
}

pub fn enumerate_with(bound: &Bound, policy: OutPolicy) -> Result<Vec<GroupFacts>, CatalogError> {
    let mut out: Vec<GroupFacts> =
        scan(bound, policy)?.groups.into_iter().filter(|g| g.is_simple && g.is_canonical()).collect();
    out.sort_by(|a, b| a.order.cmp(&b.order).then_with(|| a.id.to_string().cmp(&b.id.to_string())));
    out.dedup_by(|a, b| a.canonical == b.canonical);
    Ok(out)
}

pub fn scan(bound: &Bound, policy: OutPolicy) -> Result<ScanOutcome, CatalogError> {
    bound.validate()?;
    let mut acc = ScanOutcome::default();
    scan_alt(bound, policy, &mut acc)?;
    for s in Sporadic::ALL {
        admit(&GroupId::Sporadic(s), bound, policy, &mut acc.groups)?;
    }
    for family in LieFamily::ALL {
        scan_family(family, bound, &mut acc)?;
    }
    for base in ["2F4(2)", "G2(2)", "2G2(3)", "B(2;2)"] {
        let id = GroupId::Derived(Box::new(base.parse()?));
        admit(&id, bound, policy, &mut acc.groups)?;
    }
    Ok(acc)
}

fn admit(id: &GroupId, bound: &Bound, policy: OutPolicy, into: &mut Vec<GroupFacts>) -> Result<bool, CatalogError> {
    let facts = classify(id)?;
    let pass = bound.admits(&facts.order, policy.out_used(&facts));
    if pass {
        into.push(facts);
    }
    Ok(pass)
}

/// Tracks consecutive failures along one parameter and decides when the
/// scan may stop.
struct Stopper {
    fails: usize,
    prev: Option<(BigUint, BigUint)>,
    window: Vec<String>,
}

impl Stopper {
    fn new() -> Stopper {
        Stopper { fails: 0, prev: None, window: Vec::new() }
    }

    /// Records one parameter value with envelope `floor` against bound
    /// value `rhs`. Returns true once `1 + MARGIN` consecutive failures with
    /// non-decreasing `floor / rhs` have been seen.
    fn step(&mut self, label: String, floor: BigUint, rhs: BigUint) -> bool {
        let pass = floor <= rhs;
        let rising = match &self.prev {
            Some((pf, pr)) => &floor * pr >= pf * &rhs,
            None => true,
        };
        if pass || !rising {
            self.fails = 0;
            self.window.clear();
        }
        if !pass {
            self.fails += 1;
            self.window.push(label);
        }
        self.prev = Some((floor, rhs));
        self.fails > MARGIN
    }
}

fn scan_alt(bound: &Bound, policy: OutPolicy, acc: &mut ScanOutcome) -> Result<(), CatalogError> {
    let mut stop = Stopper::new();
    let mut record = ScanRecord { family: "Alt".into(), rank: None, scanned: 0, passing: Vec::new(), stop_window: Vec::new() };
    let mut prev_order = BigUint::ZERO;
    for n in 5..=MAX_ALT_DEGREE {
        let id = GroupId::Alt(n);
        let facts = classify(&id)?;
        if facts.order <= prev_order {
            return Err(CatalogError::Monotonicity(id.to_string()));
        }
        prev_order = facts.order.clone();
        record.scanned += 1;
        let rhs = bound.rhs(policy.out_used(&facts));
        if admit(&id, bound, policy, &mut acc.groups)? {
            record.passing.push(id.clone());
        }
        if stop.step(id.to_string(), facts.order, rhs) {
            record.stop_window = stop.window;
            acc.records.push(record);
            return Ok(());
        }
    }
    Err(CatalogError::ScanLimit("Alt".into()))
}

/// Envelope of one Lie-type parameter point: a lower bound for the order
/// and the bound evaluated at an upper bound for `|Out|`.
fn envelope(family: LieFamily, rank: u32, q: u64, f: u32, bound: &Bound) -> (BigUint, BigUint) {
    let parts = lie_parts(family, rank, q);
    let floor = parts.numerator / big(max_divisor(family, rank));
    (floor, bound.rhs(lie_out_upper(family, rank, f)))
}

fn scan_family(family: LieFamily, bound: &Bound, acc: &mut ScanOutcome) -> Result<(), CatalogError> {
    let ranks: Box<dyn Iterator<Item = u32>> = match family.fixed_rank() {
        Some(r) => Box::new(std::iter::once(r)),
        None => Box::new(family.min_rank()..=MAX_RANK),
    };
    let fixed = family.fixed_rank().is_some();
    let mut empty_ranks = 0;
    let mut prev_base = BigUint::ZERO;
    for rank in ranks {
        let (found, base) = scan_rank(family, rank, bound, acc)?;
        if base <= prev_base {
            return Err(CatalogError::Monotonicity(format!("{} rank {rank}", family.tag())));
        }
        prev_base = base;
        empty_ranks = if found { 0 } else { empty_ranks + 1 };
        if fixed || empty_ranks > MARGIN {
            return Ok(());
        }
    }
    Err(CatalogError::ScanLimit(format!("{} ranks", family.tag())))
}

/// Scans every characteristic at one rank. Returns whether any parameter
/// point passed the envelope, and the envelope of the first point scanned.
fn scan_rank(family: LieFamily, rank: u32, bound: &Bound, acc: &mut ScanOutcome) -> Result<(bool, BigUint), CatalogError> {
    let mut record =
        ScanRecord { family: family.tag().into(), rank: Some(rank), scanned: 0, passing: Vec::new(), stop_window: Vec::new() };
    let primes: Box<dyn Iterator<Item = u64>> = match family.fixed_prime() {
        Some(p) => Box::new(std::iter::once(p)),
        None => Box::new(arith::primes().take_while(|&p| p <= MAX_PRIME)),
    };
    let fixed = family.fixed_prime().is_some();
    let mut any = false;
    let mut empty_primes = 0;
    let mut base: Option<BigUint> = None;
    let mut prev_first = BigUint::ZERO;
    for p in primes {
        let (found, first) = scan_prime(family, rank, p, bound, acc, &mut record)?;
        if first <= prev_first {
            return Err(CatalogError::Monotonicity(format!("{} rank {rank} at p = {p}", family.tag())));
        }
        base.get_or_insert_with(|| first.clone());
        prev_first = first;
        any |= found;
        empty_primes = if found { 0 } else { empty_primes + 1 };
        if fixed || empty_primes > MARGIN {
            acc.records.push(record);
            return Ok((any, base.unwrap_or_default()));
        }
    }
    Err(CatalogError::ScanLimit(format!("{} rank {rank} primes", family.tag())))
}

fn scan_prime(
    family: LieFamily,
    rank: u32,
    p: u64,
    bound: &Bound,
    acc: &mut ScanOutcome,
    record: &mut ScanRecord,
) -> Result<(bool, BigUint), CatalogError> {
    let step = if family.is_suzuki_ree() { 2 } else { 1 };
    let mut stop = Stopper::new();
    let mut any = false;
    let mut first: Option<BigUint> = None;
    let mut prev_floor = BigUint::ZERO;
    let mut e = 1u32;
    loop {
        let f = if family.is_suzuki_ree() { e } else { e * family.twist() };
        let Some(q) = arith::checked_pow(p, e).filter(|_| arith::checked_pow(p, f).is_some()) else {
            return Err(CatalogError::ScanLimit(format!("{} rank {rank} p = {p}", family.tag())));
        };
        let id = GroupId::Lie { family, rank, p, f };
        let facts = classify(&id)?;
        record.scanned += 1;
        // Exact orders need not grow with p (the gcd divisor jumps), so
        // the scan order is checked on the envelope.
        let (floor, rhs) = envelope(family, rank, q, f, bound);
        if floor <= prev_floor {
            return Err(CatalogError::Monotonicity(id.to_string()));
        }
        prev_floor = floor.clone();
        first.get_or_insert_with(|| floor.clone());
        let exact = bound.admits(&facts.order, facts.out_order);
        if exact {
            if floor > rhs {
                return Err(CatalogError::Monotonicity(format!("{id} passes but its envelope does not")));
            }
            record.passing.push(id.clone());
            acc.groups.push(facts);
        }
        any |= floor <= rhs;
        if stop.step(id.to_string(), floor, rhs) {
            if !stop.window.is_empty() {
                record.stop_window = stop.window;
            }
            return Ok((any, first.unwrap_or_default()));
        }
        e += step;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(v: &[GroupFacts]) -> Vec<String> {
        v.iter().map(|g| g.id.to_string()).collect()
    }

    #[test]
    fn orders_may_drop_between_primes() {
        // |A(2;19)| < |A(2;17)| because gcd(3, 19 - 1) = 3.
        let got = names(&enumerate_under(Bound::OrderLeq(big(10_000_000_000))).unwrap());
        assert!(got.contains(&"A(2;17)".to_string()) && got.contains(&"A(2;19)".to_string()));
        let order = |s: &str| super::super::order(&s.parse().unwrap()).unwrap();
        assert!(order("A(2;19)") < order("A(2;17)"));
    }

    #[test]
    fn nothing_below_sixty() {
        assert!(enumerate_under(Bound::OrderLeq(big(59))).unwrap().is_empty());
        let small = enumerate_under(Bound::OrderLeq(big(60))).unwrap();
        assert_eq!(names(&small), ["Alt(5)"]);
    }

    #[test]
    fn alt_and_sporadic_slice_under_case_one_bound() {
        let all = enumerate_under(Bound::OrderLeq(big(30_772))).unwrap();
        let slice: Vec<String> = all
            .iter()
            .filter(|g| matches!(g.id.family_key(), FamilyKey::Alt | FamilyKey::Sporadic))
            .map(|g| g.id.to_string())
            .collect();
        assert_eq!(slice, ["Alt(5)", "Alt(6)", "Alt(7)", "M11", "Alt(8)"]);
    }

    #[test]
    fn small_simple_groups_in_order() {
        let all = enumerate_under(Bound::OrderLeq(big(10_000))).unwrap();
        let orders: Vec<u64> = all.iter().map(|g| g.order.to_string().parse().unwrap()).collect();
        assert_eq!(orders, [60, 168, 360, 504, 660, 1092, 2448, 2520, 3420, 4080, 5616, 6048, 6072, 7800, 7920, 9828]);
    }

    #[test]
    fn even_characteristic_a1_under_relaxed_bound() {
        let all = enumerate_under(Bound::poly_out(1 << 12, 4)).unwrap();
        let even: Vec<String> = all
            .iter()
            .filter(|g| matches!(g.id, GroupId::Lie { family: LieFamily::A, rank: 1, p: 2, .. }))
            .map(|g| g.id.to_string())
            .collect();
        assert_eq!(even, ["A(1;8)", "A(1;16)", "A(1;32)", "A(1;64)", "A(1;128)", "A(1;256)"]);
    }

    #[test]
    fn enumeration_is_canonical_even_and_sorted() {
        let all = enumerate_under(Bound::poly_out(1 << 12, 4)).unwrap();
        for w in all.windows(2) {
            assert!(w[0].order <= w[1].order);
            assert_ne!(w[0].canonical, w[1].canonical);
        }
        for g in &all {
            assert!(g.is_simple && g.is_canonical());
            assert!(g.order >= big(60));
            assert!((&g.order % big(2)) == BigUint::ZERO);
        }
    }

    #[test]
    fn floor_policy_only_touches_case_one_groups() {
        let m11 = classify(&GroupId::Sporadic(Sporadic::M11)).unwrap();
        let alt6 = classify(&GroupId::Alt(6)).unwrap();
        let a18 = classify(&"A(1;8)".parse().unwrap()).unwrap();
        let p = OutPolicy::Case1Floor(2);
        assert_eq!(p.out_used(&m11), 2);
        assert_eq!(p.out_used(&alt6), 4);
        assert_eq!(p.out_used(&a18), 3);
        assert_eq!(OutPolicy::Exact.out_used(&m11), 1);
    }

    #[test]
    fn scan_records_cover_every_family() {
        let out = scan(&Bound::poly_out(1 << 12, 4), OutPolicy::Exact).unwrap();
        for family in LieFamily::ALL {
            assert!(out.records.iter().any(|r| r.family == family.tag()), "{}", family.tag());
        }
        let a1 = out.records.iter().find(|r| r.family == "A" && r.rank == Some(1)).unwrap();
        assert_eq!(a1.stop_window.len(), MARGIN + 1);
    }

    #[test]
    fn rejects_degenerate_bounds() {
        assert_eq!(enumerate_under(Bound::poly_out(0, 4)), Err(CatalogError::BadBound));
        assert_eq!(enumerate_under(Bound::poly_out(1, 0)), Err(CatalogError::BadBound));
    }
}
