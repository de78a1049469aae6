//! Hypergraph families for experiments and property tests.

use std::collections::BTreeSet;

use rand::seq::index::sample;
use rand::Rng;

use crate::hypergraph::{Hyperedge, Hypergraph};

/// A random hypergraph with at least one edge, at most `max_n` vertices,
/// and edges of size at most `max_k` (capped by the vertex count).
pub fn random_hypergraph<R: Rng + ?Sized>(
    rng: &mut R,
    max_n: usize,
    max_k: usize,
    max_edges: usize,
) -> Hypergraph {
    assert!(max_n >= 1 && max_k >= 1 && max_edges >= 1);
    let n = rng.gen_range(1..=max_n);
    let k_cap = max_k.min(n);
    let target = rng.gen_range(1..=max_edges);
    let mut seen = BTreeSet::new();
    let mut edges = Vec::new();
    // rejection sampling; small vertex sets may not hold `target` distinct edges
    for _ in 0..target * 4 {
        if edges.len() == target {
            break;
        }
        let size = rng.gen_range(1..=k_cap);
        let vertices = sample(rng, n, size).into_iter().map(|v| v + 1);
        let edge = Hyperedge::new(vertices).expect("sampled vertices are distinct");
        if seen.insert(edge.clone()) {
            edges.push(edge);
        }
    }
    Hypergraph::from_edges(n, edges).expect("edges are valid and distinct")
}

/// A random `k`-uniform hypergraph on `n` vertices (`n ≥ k`) with between
/// 1 and `max_edges` edges.
pub fn random_uniform_hypergraph<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    k: usize,
    max_edges: usize,
) -> Hypergraph {
    assert!(k >= 1 && n >= k && max_edges >= 1);
    let target = rng.gen_range(1..=max_edges);
    let mut seen = BTreeSet::new();
    for _ in 0..target * 4 {
        if seen.len() == target {
            break;
        }
        let vertices = sample(rng, n, k).into_iter().map(|v| v + 1);
        seen.insert(Hyperedge::new(vertices).expect("sampled vertices are distinct"));
    }
    Hypergraph::from_edges(n, seen.into_iter().collect()).expect("edges are valid and distinct")
}

/// All `r`-subsets of `r + 1` vertices: every vertex lies in exactly `r`
/// edges, so the hypergraph is `r`-regular and `r`-uniform.
pub fn complete_uniform(r: usize) -> Hypergraph {
    assert!(r >= 1);
    let n = r + 1;
    let edges = (1..=n)
        .rev()
        .map(|skip| (1..=n).filter(move |&v| v != skip));
    Hypergraph::new(n, edges).expect("distinct subsets")
}

/// `m` singleton edges plus one edge of size `k` on fresh vertices.
pub fn singletons_plus_edge(m: usize, k: usize) -> Hypergraph {
    let n = m + k;
    let singles = (1..=m).map(|v| vec![v]);
    let big = std::iter::once((m + 1..=n).collect::<Vec<_>>());
    Hypergraph::new(n, singles.chain(big)).expect("distinct edges")
}
