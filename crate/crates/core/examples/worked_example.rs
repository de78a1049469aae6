//! The worked example end to end: build the layered e-adjacency tensor of
//! a seven-vertex hypergraph with edges of sizes 1, 2 and 3, then read
//! degrees, edge counts and the hypergraph itself back from it.
//!
//! Run with `cargo run --example worked_example`.

use hyperlayer::fixtures;
use hyperlayer::uniformization::{
    e_adjacency_tensor, layer_counts_from_tensor, reconstruct, vertex_degrees_from_tensor,
};

fn main() -> hyperlayer::Result<()> {
    let h = fixtures::worked_example();
    println!("hypergraph (HG v1):\n{h}");

    let t = e_adjacency_tensor(&h)?;
    println!(
        "layered e-adjacency tensor, order {} dim {}:",
        t.order(),
        t.dim()
    );
    print!("{}", t.to_coo());
    println!(
        "total sum = {} (k_max * |E| = {})",
        t.total_sum(),
        3 * h.num_edges()
    );

    let degrees = vertex_degrees_from_tensor(&t, h.n())?;
    println!("\ndegrees from first-mode slice sums: {degrees:?}");

    let counts = layer_counts_from_tensor(&t, h.n())?;
    for (i, d) in counts.cumulative.iter().enumerate() {
        println!("d_{} = {d}  (edges of size <= {})", h.n() + i + 1, i + 1);
    }
    println!("edges per size: {:?}", counts.per_size);

    let back = reconstruct(&t, h.n())?;
    println!(
        "\nreconstructed hypergraph equals the input: {}",
        back.edge_set() == h.edge_set()
    );
    Ok(())
}
