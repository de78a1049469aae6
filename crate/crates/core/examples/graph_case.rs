//! For a graph the layered tensor is the adjacency matrix with one extra
//! zero row and column, so its spectrum is the graph spectrum plus zero.
//!
//! Run with `cargo run --example graph_case`.

use hyperlayer::spectral::graph_case_check;
use hyperlayer::uniformization::e_adjacency_tensor;
use hyperlayer::{fixtures, Hypergraph};

fn main() -> hyperlayer::Result<()> {
    let c5 = Hypergraph::new(5, (1..=5).map(|i| vec![i, i % 5 + 1]))?;
    for (name, g) in [
        ("K_3", fixtures::triangle()),
        ("P_2", fixtures::single_pair()),
        ("C_5", c5),
    ] {
        println!("{name}: adjacency matrix\n{}", g.adjacency_matrix_bretto());
        print!("layered tensor:\n{}", e_adjacency_tensor(&g)?.to_coo());
        let r = graph_case_check(&g, 1e-8)?;
        println!(
            "c_2 = {}, block structure {}, (0, e_(n+1)) eigenpair {}, dominant {:.10} vs graph {:.10}: passed {}\n",
            r.c2,
            r.block_structure,
            r.zero_eigenpair,
            r.layered_dominant,
            r.graph_dominant,
            r.passed()
        );
    }
    Ok(())
}
