//! Exact sparse integer polynomials, cyclotomic `Φ_n` and inverse cyclotomic
//! `Ψ_n = (x^n - 1) / Φ_n`, and tools for studying their maximum exponent gap.
//!
//! ```
//! use cyclogap::{cyclotomic::psi_poly_division, gaps::max_gap};
//!
//! let psi = psi_poly_division(105).unwrap();
//! assert_eq!(max_gap(&psi).unwrap(), 13);
//! ```

pub mod cyclotomic;
pub mod error;
pub mod gaps;
pub mod poly;
pub mod survey;
pub mod theorems;

#[cfg(feature = "cli")]
pub mod cli;

pub use error::{Error, Result};
pub use poly::SparsePoly;
