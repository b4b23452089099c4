// Exponent gaps of a polynomial and its bar diagram.

use cyclogap::cyclotomic::{phi_poly_mobius, psi_poly_division};
use cyclogap::gaps::{gap_profile, render_diagram, DiagramFormat};

pub fn run_example() -> cyclogap::Result<()> {
    let psi = psi_poly_division(105)?;
    let profile = gap_profile(&psi)?;
    println!("exponents: {:?}", profile.exponents);
    println!("max gap {} between {:?}", profile.max_gap, profile.argmax);
    println!("{}", render_diagram(&psi, DiagramFormat::Ascii)?);

    let phi = phi_poly_mobius(15)?;
    let svg = render_diagram(&phi, DiagramFormat::Svg)?;
    println!("Φ_15 as SVG, {} bytes:\n{svg}", svg.len());
    Ok(())
}

#[allow(dead_code)]
fn main() -> cyclogap::Result<()> {
    run_example()
}
