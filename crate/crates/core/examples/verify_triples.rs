// Compare the brute-force gap of Ψ_{p1 p2 p3} with λ and the bounds.

use cyclogap::theorems::{conditions, verify_triple};

pub fn run_example() -> cyclogap::Result<()> {
    println!("   p1   p2   p3      g  lambda  eq2  bounds");
    for (p1, p2, p3) in [(3, 5, 7), (3, 5, 11), (5, 7, 11), (7, 11, 13), (11, 13, 29), (13, 53, 59)] {
        let r = verify_triple(p1, p2, p3)?;
        println!(
            "{p1:5}{p2:5}{p3:5}{:7}{:8}  {:5}  [{}, {})",
            r.g, r.lambda, r.eq2, r.lower, r.upper_exclusive
        );
        assert!(r.guarantees_hold());
    }
    let c = conditions(11, 13, 29)?;
    println!("(11,13,29): C1={} C2={} D1={} D2={}", c.c1, c.c2, c.d1, c.d2);
    Ok(())
}

#[allow(dead_code)]
fn main() -> cyclogap::Result<()> {
    run_example()
}
