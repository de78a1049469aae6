//! Small reference hypergraphs used by the examples, tests, and docs.

use crate::hypergraph::Hypergraph;

/// Seven vertices, seven hyperedges of sizes 3, 3, 2, 1, 1, 2, 2.
pub const WORKED_EXAMPLE: &str = "7\n1 2 3\n1 2 7\n6 7\n5\n4\n3 4\n4 7\n";

/// The hypergraph encoded by [`WORKED_EXAMPLE`].
pub fn worked_example() -> Hypergraph {
    WORKED_EXAMPLE.parse().expect("fixture is valid")
}

/// The triangle graph `K_3` as a 2-uniform hypergraph.
pub fn triangle() -> Hypergraph {
    Hypergraph::new(3, [vec![1, 2], vec![1, 3], vec![2, 3]]).expect("fixture is valid")
}

/// The single-edge graph `P_2` as a 2-uniform hypergraph.
pub fn single_pair() -> Hypergraph {
    Hypergraph::new(2, [vec![1, 2]]).expect("fixture is valid")
}
