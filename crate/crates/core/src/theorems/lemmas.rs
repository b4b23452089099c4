use crate::error::{Error, Result};
use crate::gaps::max_gap;
use crate::poly::SparsePoly;

/// Upper bound on `g(a + b)` when no term cancels in the sum:
/// `max{g(a), g(b), tdeg(b) - deg(a), tdeg(a) - deg(b)}`.
///
/// Cancellation is detected by forming the sum and comparing its support
/// with the union of the operand supports.
pub fn gap_sum_bound(a: &SparsePoly, b: &SparsePoly) -> Result<u64> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let sum = a.add(b)?;
    if let Some(e) = first_lost_exponent(a, b, &sum) {
        return Err(Error::CancellationDetected(e));
    }
    let (ga, gb) = (max_gap(a)? as i64, max_gap(b)? as i64);
    let between_ab = b.tdeg()? as i64 - a.deg()? as i64;
    let between_ba = a.tdeg()? as i64 - b.deg()? as i64;
    Ok(ga.max(gb).max(between_ab).max(between_ba) as u64)
}

fn first_lost_exponent(a: &SparsePoly, b: &SparsePoly, sum: &SparsePoly) -> Option<u64> {
    let mut union: Vec<u64> = a.exponents().chain(b.exponents()).collect();
    union.sort_unstable();
    union.dedup();
    if union.len() == sum.len() {
        return None;
    }
    union.into_iter().find(|&e| sum.coeff(e) == 0)
}

/// Upper bound on `g(a·b)` when each operand has sign-uniform coefficients:
/// `min{u, v}` with `u = max{g(b), g(a) + tdeg(b) - deg(b)}` and
/// `v = max{g(a), g(b) + tdeg(a) - deg(a)}`.
pub fn gap_product_bound(a: &SparsePoly, b: &SparsePoly) -> Result<u64> {
    if a.is_zero() || b.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    if !a.is_sign_uniform() || !b.is_sign_uniform() {
        return Err(Error::MixedSigns);
    }
    let (ga, gb) = (max_gap(a)? as i64, max_gap(b)? as i64);
    let width_a = a.deg()? as i64 - a.tdeg()? as i64;
    let width_b = b.deg()? as i64 - b.tdeg()? as i64;
    let u = gb.max(ga - width_b);
    let v = ga.max(gb - width_a);
    Ok(u.min(v) as u64)
}
