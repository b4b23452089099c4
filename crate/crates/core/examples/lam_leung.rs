// Φ_{p1 p2} split as A·B + C·D with disjoint supports.

use cyclogap::gaps::max_gap;
use cyclogap::theorems::{gap_product_bound, initial_gap_check, lam_leung};

pub fn run_example() -> cyclogap::Result<()> {
    for (p1, p2) in [(3u64, 5u64), (5, 7), (7, 11)] {
        let f = lam_leung(p1, p2)?;
        println!("p1={p1} p2={p2}: rho={} sigma={}", f.rho, f.sigma);
        println!("  AB = {}", f.ab);
        println!("  CD = {}", f.cd);
        println!(
            "  g(AB)={} <= {}, starts 1 - x + x^{p1}: {}",
            max_gap(&f.ab)?,
            gap_product_bound(&f.a, &f.b)?,
            initial_gap_check(p1, p2)?
        );
    }
    Ok(())
}

#[allow(dead_code)]
fn main() -> cyclogap::Result<()> {
    run_example()
}
