// Predict a gap from the index alone, then confirm by brute force.

use cyclogap::cyclotomic::{gap_dispatch, phi_poly_mobius, psi_poly_division};
use cyclogap::gaps::max_gap;

pub fn run_example() -> cyclogap::Result<()> {
    for n in [9u64, 30, 105, 210, 360, 1155] {
        let answer = gap_dispatch(n)?;
        let g_phi = max_gap(&phi_poly_mobius(n)?)?;
        let g_psi = max_gap(&psi_poly_division(n)?)?;
        println!(
            "n={n:5} core={:4} steps={}  Φ: {g_phi} vs {:?}  Ψ: {g_psi} vs {:?}",
            answer.chain.core,
            answer.chain.steps.len(),
            answer.phi,
            answer.psi
        );
        assert_ne!(answer.phi.admits(g_phi), Some(false));
        assert_ne!(answer.psi.admits(g_psi), Some(false));
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> cyclogap::Result<()> {
    run_example()
}
