//! Closed-form maximum gaps, their side conditions and bounds, and the
//! structural facts used to establish them.
//!
//! Everything here works with odd primes `p1 < p2 (< p3)`. Functions without
//! the `_unchecked` suffix validate their inputs against the shared sieve.

mod conditions;
mod lam_leung;
mod lemmas;
mod verify;

pub use conditions::{
    bounds_psi3, bounds_psi3_unchecked, conditions, conditions_unchecked, gap_phi_closed,
    gap_phi_closed_unchecked, gap_psi3_closed, ConditionReport, GapBounds,
};
pub use lam_leung::{initial_gap_check, lam_leung, psi3_initial_shape, LamLeungForm};
pub use lemmas::{gap_product_bound, gap_sum_bound};
pub use verify::{verify_triple, verify_with_phi, VerificationRecord};
