use crate::error::{Error, Result};
use crate::poly::{DenseWindow, Exp, SparsePoly};

use super::index::{FactoredIndex, Sieve};

/// `Φ_n` from the Möbius product `Π_{d|n} (x^{n/d} - 1)^{μ(d)}`.
pub fn phi_poly_mobius(n: u64) -> Result<SparsePoly> {
    phi_from_index(&Sieve::shared().factor(n)?)
}

/// `Φ_n` for an already factored index. All `μ(d) = +1` binomials are
/// multiplied in first, then each `μ(d) = -1` binomial is divided out.
pub fn phi_from_index(idx: &FactoredIndex) -> Result<SparsePoly> {
    let (num, den) = mobius_binomials(idx);
    let mut w = DenseWindow::one();
    for &k in &num {
        w.mul_binomial(k)?;
    }
    for &k in &den {
        w.div_binomial(k)?;
    }
    Ok(w.to_sparse())
}

/// `Ψ_n = (x^n - 1) / Φ_n`, with `Φ_n` taken in its binomial-quotient form so
/// the division is a sequence of binomial kernels.
pub fn psi_poly_division(n: u64) -> Result<SparsePoly> {
    psi_from_index(&Sieve::shared().factor(n)?)
}

pub fn psi_from_index(idx: &FactoredIndex) -> Result<SparsePoly> {
    let (phi_num, phi_den) = mobius_binomials(idx);
    // (x^n - 1) * phi_den / phi_num
    let mut num = phi_den;
    num.push(idx.n);
    binomial_quotient(num, phi_num)
}

/// `Ψ_n` by literal long division of `x^n - 1` by the Möbius-built `Φ_n`.
/// Quadratic in the term counts; meant for small `n` and cross-checks.
pub fn psi_poly_exact_div(n: u64) -> Result<SparsePoly> {
    SparsePoly::binomial(n).exact_div(&phi_poly_mobius(n)?)
}

/// `Ψ_{p1p2p3} = Φ_{p1p2}(x) · Φ_{p1}(x^{p3}) · (x^{p2p3} - 1)`.
pub fn psi_poly_moree(p1: u64, p2: u64, p3: u64) -> Result<SparsePoly> {
    let sieve = Sieve::shared();
    sieve.require_odd_prime_chain(&[p1, p2, p3])?;
    let n = p1
        .checked_mul(p2)
        .and_then(|v| v.checked_mul(p3))
        .ok_or(Error::OverflowDetected)?;
    if n > sieve.limit() {
        return Err(Error::LimitExceeded {
            n,
            limit: sieve.limit(),
        });
    }
    let phi12 = phi_poly_mobius(p1 * p2)?;
    psi_moree_from_phi(&phi12, p1, p2, p3)
}

/// Same product as [`psi_poly_moree`] with `Φ_{p1p2}` supplied by the caller,
/// so sweeps over `p3` build it once. Inputs are not re-validated.
pub fn psi_moree_from_phi(phi_p1p2: &SparsePoly, p1: u64, p2: u64, p3: u64) -> Result<SparsePoly> {
    let spread = SparsePoly::from_terms((0..p1).map(|k| (k * p3, 1)))?;
    phi_p1p2.mul(&spread)?.mul_binomial(p2 * p3)
}

/// Binomial exponents `n/d` split by the sign of `μ(d)`: `(plus, minus)`,
/// each ascending.
fn mobius_binomials(idx: &FactoredIndex) -> (Vec<Exp>, Vec<Exp>) {
    let mut plus = Vec::new();
    let mut minus = Vec::new();
    for (d, mu) in idx.mobius_divisors() {
        if mu > 0 {
            plus.push(idx.n / d);
        } else {
            minus.push(idx.n / d);
        }
    }
    plus.sort_unstable();
    minus.sort_unstable();
    (plus, minus)
}

/// `Π (x^a - 1) / Π (x^b - 1)` over `a ∈ num`, `b ∈ den`, assumed to be a
/// polynomial.
///
/// Identical binomials cancel first. The largest remaining numerator factor
/// is applied last on sparse terms, which keeps the dense window at
/// `deg(result) - max(num)`. If the partial quotient is not yet a polynomial
/// the computation restarts multiply-first over the full window.
fn binomial_quotient(mut num: Vec<Exp>, mut den: Vec<Exp>) -> Result<SparsePoly> {
    num.sort_unstable();
    den.sort_unstable();
    let (num, den) = cancel_common(&num, &den);

    if let Some((&big, rest)) = num.split_last() {
        let mut w = DenseWindow::one();
        let attempt = (|| {
            for &k in rest {
                w.mul_binomial(k)?;
            }
            for &k in &den {
                w.div_binomial(k)?;
            }
            Ok::<_, Error>(())
        })();
        match attempt {
            Ok(()) => return w.to_sparse().mul_binomial(big),
            Err(Error::NonExactDivision) => {}
            Err(e) => return Err(e),
        }
    }

    let mut w = DenseWindow::one();
    for &k in &num {
        w.mul_binomial(k)?;
    }
    for &k in &den {
        w.div_binomial(k)?;
    }
    Ok(w.to_sparse())
}

fn cancel_common(a: &[Exp], b: &[Exp]) -> (Vec<Exp>, Vec<Exp>) {
    let (mut i, mut j) = (0, 0);
    let (mut ra, mut rb) = (Vec::new(), Vec::new());
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => {
                ra.push(a[i]);
                i += 1;
            }
            std::cmp::Ordering::Greater => {
                rb.push(b[j]);
                j += 1;
            }
            std::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    ra.extend_from_slice(&a[i..]);
    rb.extend_from_slice(&b[j..]);
    (ra, rb)
}
