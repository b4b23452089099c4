use serde::{Deserialize, Serialize};

use crate::cyclotomic::{phi_poly_mobius, psi_moree_from_phi, psi_poly_division, Sieve};
use crate::error::{Error, Result};
use crate::gaps::max_gap;
use crate::poly::SparsePoly;

use super::conditions::{bounds_psi3_unchecked, conditions_unchecked};

/// Brute-force gap of `Ψ_{p1p2p3}` next to every closed-form prediction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationRecord {
    pub p1: u64,
    pub p2: u64,
    pub p3: u64,
    pub n: u64,
    pub g: u64,
    pub lambda: i64,
    pub lower: i64,
    pub upper_exclusive: i64,
    #[serde(rename = "C1")]
    pub c1: bool,
    #[serde(rename = "C2")]
    pub c2: bool,
    #[serde(rename = "D1")]
    pub d1: bool,
    #[serde(rename = "D2")]
    pub d2: bool,
    pub eq2: bool,
    pub exact_match: bool,
    pub trivial_match: bool,
    pub bounds_hold: bool,
}

impl VerificationRecord {
    /// Bounds hold, and the exact formula holds wherever `eq2` guarantees it.
    pub fn guarantees_hold(&self) -> bool {
        self.bounds_hold && (!self.eq2 || self.exact_match)
    }
}

/// Builds `Ψ_{p1p2p3}` by the three-factor product and by division, requires
/// them to agree, then scans the gap.
pub fn verify_triple(p1: u64, p2: u64, p3: u64) -> Result<VerificationRecord> {
    let sieve = Sieve::shared();
    sieve.require_odd_prime_chain(&[p1, p2, p3])?;
    let n = p1.saturating_mul(p2).saturating_mul(p3);
    if n > sieve.limit() {
        return Err(Error::LimitExceeded {
            n,
            limit: sieve.limit(),
        });
    }
    let phi12 = phi_poly_mobius(p1 * p2)?;
    verify_with_phi(&phi12, p1, p2, p3)
}

/// [`verify_triple`] with `Φ_{p1p2}` supplied, for sweeps that hold `p1, p2`
/// fixed. Inputs are assumed validated.
pub fn verify_with_phi(phi_p1p2: &SparsePoly, p1: u64, p2: u64, p3: u64) -> Result<VerificationRecord> {
    let n = p1 * p2 * p3;
    let by_product = psi_moree_from_phi(phi_p1p2, p1, p2, p3)?;
    let by_division = psi_poly_division(n)?;
    if by_product != by_division {
        return Err(Error::InvariantViolation(format!(
            "Psi_{n}: product and division constructors disagree"
        )));
    }
    let g = max_gap(&by_product)?;
    Ok(record_for(p1, p2, p3, g))
}

pub(crate) fn record_for(p1: u64, p2: u64, p3: u64, g: u64) -> VerificationRecord {
    let cond = conditions_unchecked(p1, p2, p3);
    let bounds = bounds_psi3_unchecked(p1, p2, p3);
    VerificationRecord {
        p1,
        p2,
        p3,
        n: p1 * p2 * p3,
        g,
        lambda: cond.lambda,
        lower: bounds.lower,
        upper_exclusive: bounds.upper_exclusive,
        c1: cond.c1,
        c2: cond.c2,
        d1: cond.d1,
        d2: cond.d2,
        eq2: cond.eq2,
        exact_match: g as i64 == cond.lambda,
        trivial_match: g == p1 - 1,
        bounds_hold: bounds.contains(g),
    }
}
