//! The two parameter equations a regular simple (HS) or squared simple (HC)
//! point set must satisfy:
//!
//! * HS: `|T| = (s+1)^2 (s t' + 1)` with `1 <= t' <= s-1`;
//! * HC: `|T| = (s+1) y` with `3 <= y^2 <= s(s-1)+1` and `s | y^2 - 1`.
//!
//! The solvers walk `s` and test divisibility. The oracles in [`oracle`]
//! enumerate both unknowns directly and share no code with the solvers.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::arith::big;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HsWitness {
    pub s: u64,
    pub t_prime: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct HcWitness {
    pub s: u64,
    pub y: u64,
}

impl HsWitness {
    pub fn order(&self) -> BigUint {
        big(self.s + 1).pow(2) * (big(self.s) * big(self.t_prime) + 1u32)
    }

    pub fn t(&self) -> u64 {
        self.t_prime * (self.s + 1) + 1
    }

    /// Re-checks the defining equation and range against `order`.
    pub fn validates(&self, order: &BigUint) -> bool {
        self.s >= 2 && (1..self.s).contains(&self.t_prime) && self.order() == *order
    }
}

impl HcWitness {
    pub fn order(&self) -> BigUint {
        big(self.s + 1) * big(self.y)
    }

    /// `t' = (y^2 - 1) / s`, exact by the witness conditions.
    pub fn t_prime(&self) -> u64 {
        (self.y * self.y - 1) / self.s
    }

    pub fn t(&self) -> u64 {
        self.t_prime() * (self.s + 1) + 1
    }

    pub fn validates(&self, order: &BigUint) -> bool {
        let (s, y2) = (u128::from(self.s), u128::from(self.y) * u128::from(self.y));
        self.s >= 2 && (3..=s * (s - 1) + 1).contains(&y2) && (y2 - 1) % s == 0 && self.order() == *order
    }
}

pub fn solve_hs(order: &BigUint, s_max: u64) -> Vec<HsWitness> {
    let mut out = Vec::new();
    if order.is_zero() {
        return out;
    }
    for s in 2..=s_max {
        let sq = big(s + 1).pow(2);
        if sq > *order {
            break;
        }
        let (cofactor, rem) = order.div_rem(&sq);
        if !rem.is_zero() {
            continue;
        }
        let (t_prime, rem) = (cofactor - 1u32).div_rem(&big(s));
        if !rem.is_zero() {
            continue;
        }
        if let Some(t_prime) = t_prime.to_u64().filter(|tp| (1..s).contains(tp)) {
            out.push(HsWitness { s, t_prime });
        }
    }
    out
}

pub fn solve_hc(order: &BigUint, s_max: u64) -> Vec<HcWitness> {
    let mut out = Vec::new();
    if order.is_zero() {
        return out;
    }
    for s in 2..=s_max {
        let (y, rem) = order.div_rem(&big(s + 1));
        if y.is_zero() {
            break;
        }
        if !rem.is_zero() {
            continue;
        }
        // y <= s is forced by y^2 <= s(s-1)+1.
        let Some(y) = y.to_u64().filter(|&y| y <= s) else { continue };
        let (s2, y2) = (u128::from(s), u128::from(y) * u128::from(y));
        if (3..=s2 * (s2 - 1) + 1).contains(&y2) && (y2 - 1) % s2 == 0 {
            out.push(HcWitness { s, y });
        }
    }
    out
}

/// Exhaustive reference implementations: enumerate every admissible pair
/// and compare the forward product with the target order.
pub mod oracle {
    use super::{HcWitness, HsWitness};
    use num_bigint::BigUint;
    use num_traits::ToPrimitive;

    pub fn oracle_hs(order: &BigUint, s_max: u64) -> Vec<HsWitness> {
        let Some(target) = order.to_u128() else { return Vec::new() };
        let mut out = Vec::new();
        for s in 2..=s_max {
            for t_prime in 1..s {
                let value = u128::from(s + 1)
                    .checked_pow(2)
                    .and_then(|sq| sq.checked_mul(u128::from(s) * u128::from(t_prime) + 1));
                if value == Some(target) {
                    out.push(HsWitness { s, t_prime });
                }
            }
        }
        out
    }

    pub fn oracle_hc(order: &BigUint, s_max: u64) -> Vec<HcWitness> {
        let Some(target) = order.to_u128() else { return Vec::new() };
        let mut out = Vec::new();
        for s in 2..=s_max {
            let s = u128::from(s);
            let mut y: u128 = 1;
            while y * y <= s * (s - 1) + 1 {
                if (s + 1) * y == target && y * y >= 3 && (y * y - 1) % s == 0 {
                    out.push(HcWitness { s: s as u64, y: y as u64 });
                }
                y += 1;
            }
        }
        out
    }
}

pub use oracle::{oracle_hc, oracle_hs};

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn documented_hs_cases() {
        assert!(solve_hs(&big(360), 29).is_empty());
        assert_eq!(solve_hs(&big(64), 10), [HsWitness { s: 3, t_prime: 1 }]);
        assert!(solve_hs(&big(29_120), 21).is_empty());
        assert!(solve_hs(&big(20_160), 13).is_empty());
        assert!(solve_hs(&BigUint::ZERO, 5).is_empty());
        assert!(oracle_hs(&BigUint::ZERO, 5).is_empty());
        assert_eq!(oracle_hs(&big(360), 29), solve_hs(&big(360), 29));
    }

    #[test]
    fn documented_hc_cases() {
        assert_eq!(solve_hc(&big(360), 253), [HcWitness { s: 19, y: 18 }]);
        assert_eq!(solve_hc(&big(168), 253), [HcWitness { s: 13, y: 12 }]);
        assert!(solve_hc(&big(60), 253).is_empty());
        assert!(solve_hc(&big(2520), 61).is_empty());
        assert_eq!(oracle_hc(&big(168), 253), [HcWitness { s: 13, y: 12 }]);
        let w = HcWitness { s: 19, y: 18 };
        assert_eq!((w.t_prime(), w.t()), (17, 341));
        assert_eq!(HcWitness { s: 13, y: 12 }.t(), 155);
    }

    #[test]
    fn forward_constructed_hs_orders_are_found() {
        for s in 2..40u64 {
            for t_prime in 1..s {
                let w = HsWitness { s, t_prime };
                assert!(solve_hs(&w.order(), s).contains(&w));
            }
        }
    }

    proptest! {
        #[test]
        fn solvers_agree_with_oracles(order in 1u64..2_000_000, s_max in 2u64..120) {
            let n = big(order);
            prop_assert_eq!(solve_hs(&n, s_max), oracle_hs(&n, s_max));
            prop_assert_eq!(solve_hc(&n, s_max), oracle_hc(&n, s_max));
        }

        #[test]
        fn witnesses_revalidate(order in 1u64..100_000_000, s_max in 2u64..200) {
            let n = big(order);
            for w in solve_hs(&n, s_max) {
                prop_assert!(w.validates(&n));
            }
            for w in solve_hc(&n, s_max) {
                prop_assert!(w.validates(&n));
                prop_assert!(w.y <= w.s);
            }
        }
    }

    #[test]
    fn forward_constructed_hc_orders_are_found() {
        for s in 2..300u64 {
            for y in (2..s).filter(|y| (y * y - 1) % s == 0) {
                let w = HcWitness { s, y };
                assert!(w.validates(&w.order()));
                assert!(solve_hc(&w.order(), s).contains(&w));
            }
        }
    }
}
