use serde::Serialize;

use crate::cyclotomic::{phi_poly_mobius, Sieve};
use crate::error::{Error, Result};
use crate::poly::SparsePoly;

/// `Φ_{p1p2} = A·B + C·D` with
///
/// ```text
/// A = Σ_{i=0}^{ρ} x^{i p1}            B = Σ_{j=0}^{σ} x^{j p2}
/// C = Σ_{i=0}^{p2-2-ρ} x^{i p1}       D = -x Σ_{j=0}^{p1-2-σ} x^{j p2}
/// ```
///
/// where `p1 p2 + 1 = (ρ+1) p1 + (σ+1) p2`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LamLeungForm {
    pub p1: u64,
    pub p2: u64,
    pub rho: u64,
    pub sigma: u64,
    pub a: SparsePoly,
    pub b: SparsePoly,
    pub c: SparsePoly,
    pub d: SparsePoly,
    pub ab: SparsePoly,
    pub cd: SparsePoly,
}

fn geometric(step: u64, count: u64, coeff: i64, shift: u64) -> Result<SparsePoly> {
    SparsePoly::from_terms((0..count).map(|i| (shift + i * step, coeff)))
}

/// Solves for `(ρ, σ)` and builds the decomposition. The result is checked
/// against the Möbius-built `Φ_{p1p2}` before it is returned.
pub fn lam_leung(p1: u64, p2: u64) -> Result<LamLeungForm> {
    Sieve::shared().require_odd_prime_chain(&[p1, p2])?;
    let target = p1 * p2 + 1;

    let mut solutions = (0..=p1 - 2).filter_map(|sigma| {
        let rest = target.checked_sub((sigma + 1) * p2)?;
        (rest % p1 == 0 && rest / p1 >= 1 && rest / p1 - 1 <= p2 - 2)
            .then(|| (rest / p1 - 1, sigma))
    });
    let (rho, sigma) = solutions
        .next()
        .ok_or_else(|| Error::InvariantViolation(format!("no (rho, sigma) for ({p1}, {p2})")))?;
    if solutions.next().is_some() {
        return Err(Error::InvariantViolation(format!(
            "(rho, sigma) not unique for ({p1}, {p2})"
        )));
    }

    let a = geometric(p1, rho + 1, 1, 0)?;
    let b = geometric(p2, sigma + 1, 1, 0)?;
    let c = geometric(p1, p2 - 1 - rho, 1, 0)?;
    let d = geometric(p2, p1 - 1 - sigma, -1, 1)?;
    let ab = a.mul(&b)?;
    let cd = c.mul(&d)?;

    let form = LamLeungForm {
        p1,
        p2,
        rho,
        sigma,
        a,
        b,
        c,
        d,
        ab,
        cd,
    };
    form.check()?;
    Ok(form)
}

impl LamLeungForm {
    pub fn reconstruct(&self) -> Result<SparsePoly> {
        self.ab.add(&self.cd)
    }

    /// True when `A·B` and `C·D` share no exponent.
    pub fn is_disjoint(&self) -> bool {
        let (x, y) = (self.ab.terms(), self.cd.terms());
        let (mut i, mut j) = (0, 0);
        while i < x.len() && j < y.len() {
            match x[i].0.cmp(&y[j].0) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    fn check(&self) -> Result<()> {
        let (p1, p2) = (self.p1, self.p2);
        let fail = |what: &str| Err(Error::InvariantViolation(format!("{what} for ({p1}, {p2})")));
        if p1 * p2 + 1 != (self.rho + 1) * p1 + (self.sigma + 1) * p2 {
            return fail("linear relation");
        }
        if self.rho > p2 - 2 || self.sigma > p1 - 2 {
            return fail("rho/sigma range");
        }
        if !self.is_disjoint() {
            return fail("AB and CD overlap");
        }
        if self.reconstruct()? != phi_poly_mobius(p1 * p2)? {
            return fail("AB + CD != Phi");
        }
        Ok(())
    }
}

/// Whether `Φ_{p1p2}` starts `1 - x + x^{p1}` with nothing strictly between
/// `x` and `x^{p1}`.
pub fn initial_gap_check(p1: u64, p2: u64) -> Result<bool> {
    Sieve::shared().require_odd_prime_chain(&[p1, p2])?;
    let phi = phi_poly_mobius(p1 * p2)?;
    Ok(phi.terms().get(..3) == Some(&[(0, 1), (1, -1), (p1, 1)][..]))
}

/// Whether `f` starts `s·(1 - x + x^{p1})` for a sign `s`, with no exponent
/// strictly between `1` and `p1`.
pub fn psi3_initial_shape(f: &SparsePoly, p1: u64) -> bool {
    match f.terms().get(..3) {
        Some(&[(0, s), (1, t), (e, u)]) => {
            (s == 1 || s == -1) && t == -s && u == s && e == p1
        }
        _ => false,
    }
}
