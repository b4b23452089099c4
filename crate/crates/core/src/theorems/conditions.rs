use serde::{Deserialize, Serialize};

use crate::cyclotomic::Sieve;
use crate::error::Result;

/// The side conditions for a prime triple `p1 < p2 < p3`, `n = p1 p2 p3`.
///
/// * `c1`: `4(p1-1) <= p2`
/// * `c2`: `p1^2 <= p3`
/// * `d1`: `2n/p1 > (4/3) ψ(n)`
/// * `d2`: `2 p3 > p2 (p1-1)`
/// * `eq2 = c1 || c2`
///
/// `lambda = 2n/p1 - ψ(n)` is the distance between the two halves of the
/// `Ψ_n = -A + x^{p2p3} A` split; it may be zero or negative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionReport {
    pub p1: u64,
    pub p2: u64,
    pub p3: u64,
    pub c1: bool,
    pub c2: bool,
    pub d1: bool,
    pub d2: bool,
    pub eq2: bool,
    pub lambda: i64,
    pub psi_degree: u64,
}

/// `lower <= g < upper_exclusive`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct GapBounds {
    pub lower: i64,
    pub upper_exclusive: i64,
}

impl GapBounds {
    pub fn contains(&self, g: u64) -> bool {
        let g = g as i64;
        self.lower <= g && g < self.upper_exclusive
    }
}

pub fn gap_phi_closed(p1: u64, p2: u64) -> Result<u64> {
    Sieve::shared().require_odd_prime_chain(&[p1, p2])?;
    Ok(gap_phi_closed_unchecked(p1))
}

/// `g(Φ_{p1 p2}) = p1 - 1`.
pub fn gap_phi_closed_unchecked(p1: u64) -> u64 {
    p1 - 1
}

/// `λ = 2 p2 p3 - ψ(p1 p2 p3)`. Exact for `g(Ψ_n)` only when `eq2` holds.
pub fn gap_psi3_closed(p1: u64, p2: u64, p3: u64) -> Result<i64> {
    Sieve::shared().require_odd_prime_chain(&[p1, p2, p3])?;
    Ok(lambda(p1, p2, p3))
}

fn psi_degree(p1: u64, p2: u64, p3: u64) -> u64 {
    p1 * p2 * p3 - (p1 - 1) * (p2 - 1) * (p3 - 1)
}

fn lambda(p1: u64, p2: u64, p3: u64) -> i64 {
    2 * (p2 * p3) as i64 - psi_degree(p1, p2, p3) as i64
}

pub fn conditions(p1: u64, p2: u64, p3: u64) -> Result<ConditionReport> {
    Sieve::shared().require_odd_prime_chain(&[p1, p2, p3])?;
    Ok(conditions_unchecked(p1, p2, p3))
}

pub fn conditions_unchecked(p1: u64, p2: u64, p3: u64) -> ConditionReport {
    let psi = psi_degree(p1, p2, p3);
    let c1 = 4 * (p1 - 1) <= p2;
    let c2 = p1 * p1 <= p3;
    // 2n/p1 > 4ψ/3  <=>  3 * 2 p2 p3 > 4ψ
    let d1 = 6 * p2 * p3 > 4 * psi;
    let d2 = 2 * p3 > p2 * (p1 - 1);
    ConditionReport {
        p1,
        p2,
        p3,
        c1,
        c2,
        d1,
        d2,
        eq2: c1 || c2,
        lambda: lambda(p1, p2, p3),
        psi_degree: psi,
    }
}

pub fn bounds_psi3(p1: u64, p2: u64, p3: u64) -> Result<GapBounds> {
    Sieve::shared().require_odd_prime_chain(&[p1, p2, p3])?;
    Ok(bounds_psi3_unchecked(p1, p2, p3))
}

/// `max{p1-1, λ} <= g(Ψ_n) < 2(p2p3 + p1p3 + p1p2) - ψ(n)`.
pub fn bounds_psi3_unchecked(p1: u64, p2: u64, p3: u64) -> GapBounds {
    let lam = lambda(p1, p2, p3);
    let psi = psi_degree(p1, p2, p3) as i64;
    let (a, b, c) = (p1 as i64, p2 as i64, p3 as i64);
    GapBounds {
        lower: (a - 1).max(lam),
        upper_exclusive: 2 * (b * c + a * c + a * b) - psi,
    }
}
