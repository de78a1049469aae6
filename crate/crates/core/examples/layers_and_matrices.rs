//! Layer decomposition and the classical matrix views of a hypergraph:
//! incidence matrix, Bretto and Zhou adjacency matrices, 2-section.
//!
//! Run with `cargo run --example layers_and_matrices`.

use hyperlayer::layers::decompose;
use hyperlayer::{fixtures, WeightedHypergraph};

fn main() -> hyperlayer::Result<()> {
    let h = fixtures::worked_example();
    let d = decompose(&h)?;
    println!("k_max = {}, layer sizes {:?}", d.k_max(), d.counts());
    for k in 1..=d.k_max() {
        let edges: Vec<String> = d
            .layer(k)
            .edges()
            .iter()
            .map(|e| format!("{{{e}}}"))
            .collect();
        println!("  E_{k}: {}", edges.join(" "));
    }

    println!(
        "\nincidence matrix (vertices x edges):\n{}",
        h.incidence_matrix()
    );
    println!(
        "Bretto adjacency (shared-edge counts):\n{}",
        h.adjacency_matrix_bretto()
    );
    let zhou = WeightedHypergraph::unit(h.clone()).adjacency_matrix_zhou();
    println!("Zhou adjacency with unit weights (H W H^T - D_v):\n{zhou}");

    let s = h.two_section();
    println!("2-section has {} edges:\n{s}", s.num_edges());
    println!("{{1,2,3}} is e-adjacent: {}", h.is_e_adjacent(&[1, 2, 3])?);
    println!(
        "{{1,2}} is 2-adjacent: {}, e-adjacent: {}",
        h.is_k_adjacent(&[1, 2])?,
        h.is_e_adjacent(&[1, 2])?
    );
    Ok(())
}
