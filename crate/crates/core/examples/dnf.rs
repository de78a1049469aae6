//! Recovering each layer as a disjunctive normal form from the tensor, by
//! key structure and by evaluation differences of the boolean polynomial.
//!
//! Run with `cargo run --example dnf`.

use hyperlayer::fixtures;
use hyperlayer::polynomial::{
    dnf_layer_extract, dnf_layer_extract_by_evaluation, poly_from_tensor,
};
use hyperlayer::uniformization::e_adjacency_tensor;

fn main() -> hyperlayer::Result<()> {
    let h = fixtures::worked_example();
    let t = e_adjacency_tensor(&h)?;
    println!("boolean polynomial P_B:");
    print!("{}", poly_from_tensor(&t).boolean().render(h.n()));

    for j in 1..=t.order() {
        let edges = dnf_layer_extract(&t, h.n(), j)?;
        let terms: Vec<String> = edges
            .iter()
            .map(|e| {
                e.vertices()
                    .iter()
                    .map(|v| format!("z_{v}"))
                    .collect::<Vec<_>>()
                    .join(" & ")
            })
            .collect();
        let agree = edges == dnf_layer_extract_by_evaluation(&t, h.n(), j)?;
        println!(
            "size {j}: {}   (routes agree: {agree})",
            terms.join("  |  ")
        );
    }
    Ok(())
}
