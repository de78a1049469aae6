//! Uniformization step by step: augment each layer with a fresh special
//! vertex and merge it into the next layer, then compare with the closed
//! form and with the unit-coefficient variant.
//!
//! Run with `cargo run --example uniformization`.

use hyperlayer::layers::decompose;
use hyperlayer::uniformization::{layered_uniform, layered_uniform_direct, merge, vertex_augment};
use hyperlayer::{fixtures, CoefficientPolicy, WeightedHypergraph};

fn main() -> hyperlayer::Result<()> {
    let h = fixtures::worked_example();
    let d = decompose(&h)?;
    let n = h.n();
    let coeffs = CoefficientPolicy::Handshake.coefficients(d.k_max())?;
    println!(
        "coefficients c_k = k_max / k: {}",
        coeffs
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
            .join(", ")
    );

    let weighted =
        |k: usize| WeightedHypergraph::uniform_weight(d.layer(k).clone(), coeffs[k - 1].clone());
    let mut current = weighted(1)?;
    for k in 1..d.k_max() {
        let augmented = vertex_augment(&current, n + k)?;
        current = merge(&augmented, &weighted(k + 1)?)?;
        println!("\nafter adding y_{k} = vertex {}:", n + k);
        for (e, w) in current.weighted_edges() {
            println!("  {{{e}}} weight {w}");
        }
    }

    let iterative = layered_uniform(&h, &CoefficientPolicy::Handshake)?;
    let direct = layered_uniform_direct(&h, &CoefficientPolicy::Handshake)?;
    println!(
        "\niterative and closed-form routes agree: {}",
        iterative.sorted_triples() == direct.sorted_triples()
    );

    println!("\ntensor entries, handshake coefficients:");
    print!("{}", iterative.tensor().to_coo());
    println!("tensor entries, unit coefficients:");
    print!(
        "{}",
        layered_uniform(&h, &CoefficientPolicy::Unit)?
            .tensor()
            .to_coo()
    );
    Ok(())
}
