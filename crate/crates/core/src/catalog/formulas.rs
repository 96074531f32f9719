//! Order and outer-automorphism-group formulas.
//!
//! Lie-type orders are evaluated as `numerator / d` where `d` is the
//! family's gcd divisor (e.g. `gcd(n+1, q-1)` for `A_n(q)`). Keeping the two
//! parts separate lets the enumerator build a lower bound that is monotone
//! in `q` by dividing by the largest divisor the family can have.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use super::id::{GroupId, LieFamily};
use crate::arith::{self, big, big_pow, gcd, pow_mod};

pub(crate) struct OrderParts {
    pub numerator: BigUint,
    pub divisor: u64,
}

/// `q^a - 1` and `q^a + 1` as big integers.
fn qm(q: u64, a: u32) -> BigUint {
    big_pow(q, a) - BigUint::one()
}

fn qp(q: u64, a: u32) -> BigUint {
    big_pow(q, a) + BigUint::one()
}

fn product<I: IntoIterator<Item = BigUint>>(terms: I) -> BigUint {
    terms.into_iter().fold(BigUint::one(), |acc, t| acc * t)
}

pub(crate) fn lie_parts(family: LieFamily, n: u32, q: u64) -> OrderParts {
    use LieFamily::*;
    let (numerator, divisor) = match family {
        A => {
            let num = big_pow(q, n * (n + 1) / 2) * product((1..=n).map(|i| qm(q, i + 1)));
            (num, gcd(u64::from(n) + 1, q - 1))
        }
        TwistedA => {
            let num = big_pow(q, n * (n + 1) / 2)
                * product((1..=n).map(|i| if (i + 1) % 2 == 0 { qm(q, i + 1) } else { qp(q, i + 1) }));
            (num, gcd(u64::from(n) + 1, q + 1))
        }
        B | C => {
            let num = big_pow(q, n * n) * product((1..=n).map(|i| qm(q, 2 * i)));
            (num, gcd(2, q - 1))
        }
        D => {
            let num = big_pow(q, n * (n - 1)) * qm(q, n) * product((1..n).map(|i| qm(q, 2 * i)));
            (num, gcd(4, (pow_mod(q, n.into(), 4) + 3) % 4))
        }
        TwistedD => {
            let num = big_pow(q, n * (n - 1)) * qp(q, n) * product((1..n).map(|i| qm(q, 2 * i)));
            (num, gcd(4, (pow_mod(q, n.into(), 4) + 1) % 4))
        }
        G2 => (big_pow(q, 6) * qm(q, 6) * qm(q, 2), 1),
        F4 => (big_pow(q, 24) * qm(q, 12) * qm(q, 8) * qm(q, 6) * qm(q, 2), 1),
        E6 => {
            let num = big_pow(q, 36) * product([12, 9, 8, 6, 5, 2].map(|a| qm(q, a)));
            (num, gcd(3, q - 1))
        }
        E7 => {
            let num = big_pow(q, 63) * product([18, 14, 12, 10, 8, 6, 2].map(|a| qm(q, a)));
            (num, gcd(2, q - 1))
        }
        E8 => (big_pow(q, 120) * product([30, 24, 20, 18, 14, 12, 8, 2].map(|a| qm(q, a))), 1),
        TwistedE6 => {
            let num = big_pow(q, 36) * qm(q, 12) * qp(q, 9) * qm(q, 8) * qm(q, 6) * qp(q, 5) * qm(q, 2);
            (num, gcd(3, q + 1))
        }
        TrialityD4 => {
            let num = big_pow(q, 12) * (big_pow(q, 8) + big_pow(q, 4) + BigUint::one()) * qm(q, 6) * qm(q, 2);
            (num, 1)
        }
        Suzuki => (big_pow(q, 2) * qp(q, 2) * qm(q, 1), 1),
        ReeG2 => (big_pow(q, 3) * qp(q, 3) * qm(q, 1), 1),
        ReeF4 => (big_pow(q, 12) * qp(q, 6) * qm(q, 4) * qp(q, 3) * qm(q, 1), 1),
    };
    OrderParts { numerator, divisor }
}

/// Largest value the gcd divisor of a family can take at rank `n`.
pub(crate) fn max_divisor(family: LieFamily, n: u32) -> u64 {
    use LieFamily::*;
    match family {
        A | TwistedA => u64::from(n) + 1,
        B | C | E7 => 2,
        D | TwistedD => 4,
        E6 | TwistedE6 => 3,
        _ => 1,
    }
}

/// `|Out(T)|` for a Lie-type group with characteristic `p`, field
/// exponent `f` (`p^f` is the displayed field) and order-formula parameter `q`.
pub(crate) fn lie_out(family: LieFamily, n: u32, p: u64, f: u32, q: u64) -> u64 {
    use LieFamily::*;
    let f = u64::from(f);
    let d2 = gcd(2, q - 1);
    match family {
        A if n == 1 => d2 * f,
        A => 2 * gcd(u64::from(n) + 1, q - 1) * f,
        TwistedA => gcd(u64::from(n) + 1, q + 1) * f,
        B if n == 2 && p == 2 => 2 * f,
        B | C => d2 * f,
        D if n == 4 => 6 * d2 * d2 * f,
        D if n % 2 == 0 => 2 * d2 * d2 * f,
        D => {
            2 * gcd(4, (pow_mod(q, n.into(), 4) + 3) % 4) * f
        }
        TwistedD => gcd(4, (pow_mod(q, n.into(), 4) + 1) % 4) * f,
        E6 => 2 * gcd(3, q - 1) * f,
        E7 => d2 * f,
        E8 => f,
        TwistedE6 => gcd(3, q + 1) * f,
        F4 if p == 2 => 2 * f,
        F4 => f,
        TrialityD4 => f,
        G2 if p == 3 => 2 * f,
        G2 => f,
        Suzuki | ReeG2 | ReeF4 => f,
    }
}

/// Upper bound for `|Out(T)|` over every characteristic at rank `n`,
/// linear in `f`. Used only to stop enumeration scans.
pub(crate) fn lie_out_upper(family: LieFamily, n: u32, f: u32) -> u64 {
    use LieFamily::*;
    let f = u64::from(f);
    let n1 = u64::from(n) + 1;
    f * match family {
        A if n == 1 => 2,
        A => 2 * n1,
        TwistedA => n1,
        B | C | E7 | F4 | G2 => 2,
        D if n == 4 => 24,
        D => 8,
        TwistedD => 4,
        E6 => 6,
        TwistedE6 => 3,
        E8 | TrialityD4 | Suzuki | ReeG2 | ReeF4 => 1,
    }
}

fn field_q(family: LieFamily, p: u64, f: u32) -> u64 {
    let e = if family.is_suzuki_ree() { f } else { f / family.twist() };
    p.pow(e)
}

/// Order of any catalogued identifier. Assumes `id` has been validated.
pub(crate) fn order_of(id: &GroupId) -> BigUint {
    match id {
        GroupId::Alt(n) => arith::factorial(*n) / big(2),
        GroupId::Sporadic(s) => s.order(),
        GroupId::Lie { family, rank, p, f } => {
            let parts = lie_parts(*family, *rank, field_q(*family, *p, *f));
            debug_assert!((&parts.numerator % big(parts.divisor)).is_zero());
            parts.numerator / big(parts.divisor)
        }
        GroupId::Derived(base) => order_of(base) / big(derived_index(base)),
    }
}

pub(crate) fn out_of(id: &GroupId) -> u64 {
    match id {
        GroupId::Alt(6) => 4,
        GroupId::Alt(_) => 2,
        GroupId::Sporadic(s) => s.out_order(),
        GroupId::Lie { family, rank, p, f } => lie_out(*family, *rank, *p, *f, field_q(*family, *p, *f)),
        GroupId::Derived(base) => match base.as_ref() {
            GroupId::Lie { family: LieFamily::ReeG2, .. } => 3,
            GroupId::Lie { family: LieFamily::B, .. } => 4,
            _ => 2,
        },
    }
}

/// Index of the derived subgroup in each catalogued non-simple base.
fn derived_index(base: &GroupId) -> u64 {
    match base {
        GroupId::Lie { family: LieFamily::ReeG2, .. } => 3,
        _ => 2,
    }
}

/// The F4 lower bound `q^52 / 2^4` that stands in for the exact orders of
/// `E6`, `E7`, `E8` and `F4` when bounds are evaluated the way the
/// classification argument does.
pub fn exceptional_lower_bound(id: &GroupId) -> Option<BigUint> {
    match id {
        GroupId::Lie { family: LieFamily::E6 | LieFamily::E7 | LieFamily::E8 | LieFamily::F4, .. } => {
            let q = id.q()?;
            Some(big_pow(q, 52) / big(16))
        }
        _ => None,
    }
}
