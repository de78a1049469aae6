//! Splitting a hypergraph into its uniform layers and recombining layers by
//! direct sum.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::hypergraph::{Hyperedge, Hypergraph};

/// The layers `H_k = (V, E_k)`, `k = 1..=k_max`, of a hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerDecomposition {
    base: Hypergraph,
    k_max: usize,
    layers: Vec<Hypergraph>,
    // positions in `base.edges()` of each layer's edges, same order
    edge_ids: Vec<Vec<usize>>,
}

impl LayerDecomposition {
    pub fn base(&self) -> &Hypergraph {
        &self.base
    }

    /// Largest edge cardinality, the range of the hypergraph.
    pub fn k_max(&self) -> usize {
        self.k_max
    }

    /// The `k`-uniform layer (`1 ≤ k ≤ k_max`); may be edgeless.
    pub fn layer(&self, k: usize) -> &Hypergraph {
        &self.layers[k - 1]
    }

    pub fn layers(&self) -> &[Hypergraph] {
        &self.layers
    }

    /// Positions in the base hypergraph of the edges of layer `k`.
    pub fn edge_ids(&self, k: usize) -> &[usize] {
        &self.edge_ids[k - 1]
    }

    /// `|E_k|` for `k = 1..=k_max`.
    pub fn counts(&self) -> Vec<usize> {
        self.layers.iter().map(Hypergraph::num_edges).collect()
    }
}

/// Partitions the edges of `h` by cardinality. Fails on an edgeless input,
/// where `k_max` is undefined.
pub fn decompose(h: &Hypergraph) -> Result<LayerDecomposition> {
    let k_max = h.k_max().ok_or(Error::NoEdges)?;
    let mut buckets: Vec<Vec<Hyperedge>> = vec![Vec::new(); k_max];
    let mut edge_ids = vec![Vec::new(); k_max];
    for (id, e) in h.edges().iter().enumerate() {
        buckets[e.len() - 1].push(e.clone());
        edge_ids[e.len() - 1].push(id);
    }
    let layers = buckets
        .into_iter()
        .map(|edges| Hypergraph::from_edges(h.n(), edges))
        .collect::<Result<Vec<_>>>()?;
    Ok(LayerDecomposition {
        base: h.clone(),
        k_max,
        layers,
        edge_ids,
    })
}

/// Union of hypergraphs on a common vertex set whose edge families are
/// pairwise disjoint. Edges keep the order of `parts`.
pub fn direct_sum(parts: &[Hypergraph]) -> Result<Hypergraph> {
    let Some(first) = parts.first() else {
        return Ok(Hypergraph::empty(0));
    };
    let n = first.n();
    let mut seen = BTreeSet::new();
    let mut edges = Vec::new();
    for part in parts {
        if part.n() != n {
            return Err(Error::VertexCountMismatch(n, part.n()));
        }
        for e in part.edges() {
            if !seen.insert(e.clone()) {
                return Err(Error::OverlappingEdges(e.vertices().to_vec()));
            }
            edges.push(e.clone());
        }
    }
    Hypergraph::from_edges(n, edges)
}
