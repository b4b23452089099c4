// Build Φ_n and Ψ_n several ways and check they line up.

use cyclogap::cyclotomic::{phi_poly_mobius, psi_poly_division, psi_poly_moree, Sieve};
use cyclogap::SparsePoly;

pub fn run_example() -> cyclogap::Result<()> {
    for n in [1u64, 3, 6, 15, 105] {
        println!("Φ_{n} = {}", phi_poly_mobius(n)?);
        println!("Ψ_{n} = {}", psi_poly_division(n)?);
    }

    // Indices can also be written as prime products.
    let idx = Sieve::shared().parse_index("3*5*7")?;
    let psi = psi_poly_division(idx.n)?;
    assert_eq!(psi, psi_poly_moree(3, 5, 7)?);
    assert_eq!(phi_poly_mobius(idx.n)?.mul(&psi)?, SparsePoly::binomial(idx.n));
    println!("Ψ_105 has {} terms, degree {}", psi.len(), psi.deg()?);
    println!("as JSON: {}", psi.to_json());
    Ok(())
}

#[allow(dead_code)]
fn main() -> cyclogap::Result<()> {
    run_example()
}
