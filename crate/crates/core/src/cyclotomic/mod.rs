//! Construction of cyclotomic (`Φ_n`) and inverse cyclotomic (`Ψ_n`)
//! polynomials, plus the index reductions that relate the gap of an arbitrary
//! index to that of its odd squarefree core.

mod construct;
mod index;
mod reduce;

pub use construct::{
    phi_from_index, phi_poly_mobius, psi_from_index, psi_moree_from_phi, psi_poly_division,
    psi_poly_exact_div, psi_poly_moree,
};
pub use index::{odd_primes_between, primes_up_to, FactoredIndex, Sieve, DEFAULT_LIMIT};
pub use reduce::{
    dispatch_factored, gap_dispatch, reduce_factored, reduce_index, CoreRule, GapAnswer,
    GapValue, ReductionChain, ReductionStep,
};
