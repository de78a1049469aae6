//! The Banerjee tensor against the layered tensor: entries, storage cost,
//! and the partition and α tables behind the cost figures.
//!
//! Run with `cargo run --example banerjee_comparison`.

use hyperlayer::banerjee::{alpha, banerjee_tensor, compare, compositions, partitions_count};
use hyperlayer::fixtures;

fn main() -> hyperlayer::Result<()> {
    let h = fixtures::worked_example();
    println!("Banerjee tensor:");
    print!("{}", banerjee_tensor(&h)?.to_coo());

    println!("\ncomparison:");
    print!("{}", compare(&h)?.to_table());

    println!("\ncompositions of 3 into 2 parts: {:?}", compositions(3, 2));
    println!("\nalpha(k_max, s):");
    for k in [3, 5, 10] {
        let row: Vec<String> = (1..=k.min(5))
            .map(|s| alpha(k, s).map(|a| a.to_string()))
            .collect::<Result<_, _>>()?;
        println!("  k_max={k:>2}: {}", row.join(" "));
    }
    println!("\npartitions p_s(m) for m = 10:");
    let row: Vec<String> = (1..=10)
        .map(|s| partitions_count(10, s).to_string())
        .collect();
    println!("  {}", row.join(" "));
    Ok(())
}
