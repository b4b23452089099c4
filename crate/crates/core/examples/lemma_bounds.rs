// Gap bounds for sums without cancellation and sign-uniform products.

use cyclogap::gaps::max_gap;
use cyclogap::theorems::{gap_product_bound, gap_sum_bound};
use cyclogap::{Error, SparsePoly};

pub fn run_example() -> cyclogap::Result<()> {
    let a: SparsePoly = "1 + x^4".parse()?;
    let b: SparsePoly = "x^9 + 2*x^10".parse()?;
    println!("g(a + b) = {} <= {}", max_gap(&a.add(&b)?)?, gap_sum_bound(&a, &b)?);
    println!("g(a * b) = {} <= {}", max_gap(&a.mul(&b)?)?, gap_product_bound(&a, &b)?);

    let c: SparsePoly = "-1 + x^2".parse()?;
    let cancelling = gap_sum_bound(&a, &"-1 + x".parse()?);
    assert_eq!(cancelling, Err(Error::CancellationDetected(0)));
    assert_eq!(gap_product_bound(&a, &c), Err(Error::MixedSigns));
    println!("preconditions are enforced: {cancelling:?}");
    Ok(())
}

#[allow(dead_code)]
fn main() -> cyclogap::Result<()> {
    run_example()
}
