//! Generalised-quadrangle parameter arithmetic and the `|Out|`-driven bounds
//! of the two holomorph cases.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::arith::{self, big};
use crate::catalog::GroupFacts;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ParamError {
    #[error("order ({s}, {t}) is not thick: both parameters must be at least 2")]
    NotThick { s: u64, t: u64 },
    #[error("s+1 = {} does not divide t-1 = {}", s + 1, t - 1)]
    Divisibility { s: u64, t: u64 },
}

/// Order `(s, t)` of a thick generalised quadrangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct GQOrder {
    pub s: u64,
    pub t: u64,
}

impl GQOrder {
    pub fn new(s: u64, t: u64) -> Result<GQOrder, ParamError> {
        if s < 2 || t < 2 {
            return Err(ParamError::NotThick { s, t });
        }
        Ok(GQOrder { s, t })
    }

    pub fn points(&self) -> BigUint {
        big(self.s + 1) * (big(self.s) * big(self.t) + 1u32)
    }

    pub fn lines(&self) -> BigUint {
        big(self.t + 1) * (big(self.s) * big(self.t) + 1u32)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DerivedParams {
    pub t_prime: u64,
    /// Square root of `s t' + 1` when it is a perfect square.
    pub y: Option<u64>,
    #[serde(serialize_with = "arith::ser_big")]
    pub points: BigUint,
    #[serde(serialize_with = "arith::ser_big")]
    pub lines: BigUint,
}

pub fn derive_params(o: GQOrder) -> Result<DerivedParams, ParamError> {
    let GQOrder { s, t } = GQOrder::new(o.s, o.t)?;
    let (t_prime, rem) = (t - 1).div_rem(&(s + 1));
    if rem != 0 {
        return Err(ParamError::Divisibility { s, t });
    }
    let st1 = big(s) * big(t_prime) + 1u32;
    let y = arith::exact_sqrt(&st1).map(|r| u64::try_from(r).expect("square root of a u64-sized product"));
    Ok(DerivedParams { t_prime, y, points: o.points(), lines: o.lines() })
}

/// Higman's inequality `t <= s^2`.
pub fn higman_ok(o: GQOrder) -> bool {
    u128::from(o.t) <= u128::from(o.s) * u128::from(o.s)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HsBounds {
    pub s_max: u64,
    #[serde(serialize_with = "arith::ser_big")]
    pub order_max: BigUint,
    #[serde(serialize_with = "arith::ser_big")]
    pub order_max_relaxed: BigUint,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct HcBounds {
    pub s_max: u64,
    /// Bound on `|T|^2`.
    #[serde(serialize_with = "arith::ser_big")]
    pub order_sq_max: BigUint,
    #[serde(serialize_with = "arith::ser_big")]
    pub order_max_relaxed: BigUint,
}

/// `(x - 2)((x - 3)^3 + 1)` for `x >= 3`.
fn higman_cap(x: &BigUint) -> BigUint {
    let x3 = x - 3u32;
    (x - 2u32) * (x3.pow(3) + 1u32)
}

pub fn hs_bounds(out: u64) -> HsBounds {
    assert!(out >= 1, "|Out| is positive");
    let x = big(8) * big(out);
    HsBounds {
        s_max: u64::try_from(&x - 3u32).expect("s_max fits in u64"),
        order_max: higman_cap(&x),
        order_max_relaxed: big(1 << 12) * big(out).pow(4),
    }
}

pub fn hc_bounds(out: u64) -> HcBounds {
    assert!(out >= 1, "|Out| is positive");
    let x = big(16) * big(out).pow(2);
    HcBounds {
        s_max: u64::try_from(&x - 3u32).expect("s_max fits in u64"),
        order_sq_max: higman_cap(&x),
        order_max_relaxed: big(1 << 8) * big(out).pow(4),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Mode {
    HS,
    HC,
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Mode::HS => "HS",
            Mode::HC => "HC",
        })
    }
}

impl Mode {
    pub fn parse(s: &str) -> Option<Mode> {
        match s {
            "hs" | "HS" => Some(Mode::HS),
            "hc" | "HC" => Some(Mode::HC),
            _ => None,
        }
    }
}

/// Order of the automorphism group that the line stabiliser of a point
/// embeds in: `|T| |Out(T)|` for HS and `2 |T|^2 |Out(T)|^2` for HC.
pub fn flag_modulus(mode: Mode, facts: &GroupFacts) -> BigUint {
    let aut = &facts.order * big(facts.out_order);
    match mode {
        Mode::HS => aut,
        Mode::HC => big(2) * &aut * &aut,
    }
}

/// Whether `t + 1` divides the flag modulus of `facts` in `mode`.
pub fn flag_divisibility(mode: Mode, t: u64, facts: &GroupFacts) -> bool {
    arith::divides(&big(t + 1), &flag_modulus(mode, facts))
}

/// A prime power `p^k` exactly dividing `n` that does not divide `modulus`,
/// smallest prime first. `None` exactly when `n | modulus`.
pub fn divisor_witness(n: u64, modulus: &BigUint) -> Option<(u64, u32)> {
    arith::factorize(n).into_iter().find(|&(p, k)| !arith::divides(&arith::big_pow(p, k), modulus))
}

/// Exact check that `lines / points = (t + 1) / (s + 1)`.
pub fn count_ratio_ok(o: GQOrder, d: &DerivedParams) -> bool {
    !d.points.is_zero() && &d.lines * big(o.s + 1) == &d.points * big(o.t + 1) && (big(d.t_prime) * big(o.s + 1) + BigUint::one()) == big(o.t)
}
