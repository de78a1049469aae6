//! Uniformization: lifting every layer of a hypergraph to cardinality
//! `k_max` with special vertices `y_1, …, y_{k_max-1}`, and the layered
//! e-adjacency tensor built from the result.
//!
//! Special vertex `y_j` always gets index `n + j`. An edge `e` of size `s`
//! becomes `e ∪ {y_s, …, y_{k_max-1}}`, so reading the special indices of a
//! key tells the original size and dropping them recovers the edge.

use std::collections::BTreeSet;

use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::hypergraph::{Hyperedge, Hypergraph, WeightedHypergraph};
use crate::layers;
use crate::symtensor::SymTensor;
use crate::Rational;

/// How layer `k` is weighted before merging.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum CoefficientPolicy {
    /// `c_k = 1`.
    Unit,
    /// `c_k = k_max / k`; every entry of the resulting tensor is
    /// `1/(k_max-1)!` and the total sum is `k_max·|E|`.
    #[default]
    Handshake,
    /// `c_1, …, c_{k_max}` given explicitly.
    Explicit(Vec<Rational>),
}

impl CoefficientPolicy {
    /// `c_1, …, c_{k_max}`.
    pub fn coefficients(&self, k_max: usize) -> Result<Vec<Rational>> {
        let cs = match self {
            CoefficientPolicy::Unit => vec![Rational::one(); k_max],
            CoefficientPolicy::Handshake => (1..=k_max)
                .map(|k| Rational::new(k_max.into(), k.into()))
                .collect(),
            CoefficientPolicy::Explicit(cs) => {
                if cs.len() != k_max {
                    return Err(Error::WeightCount {
                        expected: k_max,
                        found: cs.len(),
                    });
                }
                cs.clone()
            }
        };
        if cs.iter().any(|c| !c.is_positive()) {
            return Err(Error::NonPositiveWeight);
        }
        Ok(cs)
    }
}

fn uniformity(h: &Hypergraph) -> Result<Option<usize>> {
    let Some(first) = h.edges().first() else {
        return Ok(None);
    };
    h.check_uniform(first.len())?;
    Ok(Some(first.len()))
}

/// Adds the fresh vertex `y` (which must exceed the current vertex count)
/// to the vertex set and to every edge. Weights are carried over.
pub fn vertex_augment(hw: &WeightedHypergraph, y: usize) -> Result<WeightedHypergraph> {
    if y <= hw.n() {
        return Err(Error::VertexExists(y));
    }
    uniformity(hw.base())?;
    let edges = hw.base().edges().iter().map(|e| e.with_vertex(y)).collect();
    Ok(WeightedHypergraph::from_parts_unchecked(
        y,
        edges,
        hw.weights().to_vec(),
    ))
}

/// Union of two weighted hypergraphs that are uniform of the same
/// cardinality and share no edge. Edges of `ha` come first.
pub fn merge(ha: &WeightedHypergraph, hb: &WeightedHypergraph) -> Result<WeightedHypergraph> {
    if let (Some(ka), Some(kb)) = (uniformity(ha.base())?, uniformity(hb.base())?) {
        if ka != kb {
            return Err(Error::NotUniform {
                expected: ka,
                found: kb,
            });
        }
    }
    let existing: BTreeSet<&Hyperedge> = ha.base().edges().iter().collect();
    if let Some(e) = hb.base().edges().iter().find(|e| existing.contains(e)) {
        return Err(Error::OverlappingEdges(e.vertices().to_vec()));
    }
    let n = ha.n().max(hb.n());
    let edges = ha
        .base()
        .edges()
        .iter()
        .chain(hb.base().edges())
        .cloned()
        .collect();
    let weights = ha.weights().iter().chain(hb.weights()).cloned().collect();
    Ok(WeightedHypergraph::from_parts_unchecked(n, edges, weights))
}

/// The weighted `k_max`-uniform hypergraph on `n + k_max - 1` vertices
/// produced by uniformization, with the original edge behind each lifted
/// edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayeredUniform {
    hypergraph: WeightedHypergraph,
    origin: Vec<usize>,
    n: usize,
    k_max: usize,
}

impl LayeredUniform {
    pub fn hypergraph(&self) -> &WeightedHypergraph {
        &self.hypergraph
    }

    /// Position in the original hypergraph of the edge lifted to edge `i`.
    pub fn origin(&self) -> &[usize] {
        &self.origin
    }

    /// Vertex count of the original hypergraph.
    pub fn original_n(&self) -> usize {
        self.n
    }

    pub fn k_max(&self) -> usize {
        self.k_max
    }

    /// Indices `n+1, …, n+k_max-1` of the special vertices.
    pub fn special_vertices(&self) -> std::ops::RangeInclusive<usize> {
        self.n + 1..=self.n + self.k_max - 1
    }

    /// `(lifted edge, weight, origin)` sorted by edge, for order-insensitive
    /// comparison.
    pub fn sorted_triples(&self) -> Vec<(Hyperedge, Rational, usize)> {
        let mut out: Vec<_> = self
            .hypergraph
            .weighted_edges()
            .zip(&self.origin)
            .map(|((e, w), &o)| (e.clone(), w.clone(), o))
            .collect();
        out.sort();
        out
    }

    /// Symmetric tensor of the lifted hypergraph using degree-normalized
    /// layers: a lifted edge from an original edge of size `s` with weight
    /// `w` gets `w · s / k_max!` per position.
    pub fn tensor(&self) -> SymTensor<Rational> {
        let dim = self.n + self.k_max - 1;
        let mut t = SymTensor::zeros(self.k_max, dim);
        let k_fact = factorial(self.k_max);
        for (e, w) in self.hypergraph.weighted_edges() {
            let s = e.vertices().iter().filter(|&&v| v <= self.n).count();
            let value = w * Rational::new(s.into(), k_fact.clone());
            t.set(e.vertices(), value)
                .expect("lifted edge fits the tensor");
        }
        t
    }
}

fn factorial(m: usize) -> num_bigint::BigInt {
    (1..=m).fold(num_bigint::BigInt::one(), |acc, k| acc * k)
}

/// Iterative uniformization: start from layer 1 weighted by `c_1`; at step
/// `k`, add `y_k` to every edge, then merge with layer `k+1` weighted by
/// `c_{k+1}`; stop after step `k_max - 1`.
pub fn layered_uniform(h: &Hypergraph, policy: &CoefficientPolicy) -> Result<LayeredUniform> {
    let decomposition = layers::decompose(h)?;
    let k_max = decomposition.k_max();
    let cs = policy.coefficients(k_max)?;
    let n = h.n();

    let weighted = |k: usize| {
        WeightedHypergraph::uniform_weight(decomposition.layer(k).clone(), cs[k - 1].clone())
    };
    let mut current = weighted(1)?;
    let mut origin = decomposition.edge_ids(1).to_vec();
    for k in 1..k_max {
        let inflated = vertex_augment(&current, n + k)?;
        current = merge(&inflated, &weighted(k + 1)?)?;
        origin.extend_from_slice(decomposition.edge_ids(k + 1));
    }
    Ok(LayeredUniform {
        hypergraph: current,
        origin,
        n,
        k_max,
    })
}

/// Lifted edge of `e`: `e ∪ {n+j : |e| ≤ j ≤ k_max-1}`.
pub fn lift_edge(e: &Hyperedge, n: usize, k_max: usize) -> Hyperedge {
    let mut vs = e.vertices().to_vec();
    vs.extend((e.len()..k_max).map(|j| n + j));
    Hyperedge::from_sorted(vs)
}

/// Same hypergraph as [`layered_uniform`], written down edge by edge from
/// the closed form instead of by repeated augment/merge.
pub fn layered_uniform_direct(
    h: &Hypergraph,
    policy: &CoefficientPolicy,
) -> Result<LayeredUniform> {
    let k_max = h.k_max().ok_or(Error::NoEdges)?;
    let cs = policy.coefficients(k_max)?;
    let n = h.n();
    let edges = h.edges().iter().map(|e| lift_edge(e, n, k_max)).collect();
    let weights = h.edges().iter().map(|e| cs[e.len() - 1].clone()).collect();
    Ok(LayeredUniform {
        hypergraph: WeightedHypergraph::from_parts_unchecked(n + k_max - 1, edges, weights),
        origin: (0..h.num_edges()).collect(),
        n,
        k_max,
    })
}

/// The layered e-adjacency tensor: order `k_max`, dimension
/// `n + k_max - 1`, one canonical key per hyperedge (the lifted edge) with
/// value `1/(k_max-1)!`.
pub fn e_adjacency_tensor(h: &Hypergraph) -> Result<SymTensor<Rational>> {
    let k_max = h.k_max().ok_or(Error::NoEdges)?;
    let n = h.n();
    let value = Rational::new(1.into(), factorial(k_max - 1));
    let mut t = SymTensor::zeros(k_max, n + k_max - 1);
    for e in h.edges() {
        t.set(lift_edge(e, n, k_max).vertices(), value.clone())?;
    }
    Ok(t)
}

fn to_count(q: &Rational) -> Result<u64> {
    if !q.is_integer() || q.is_negative() {
        return Err(Error::NotIntegral(q.to_string()));
    }
    q.to_integer()
        .to_u64()
        .ok_or_else(|| Error::NotIntegral(q.to_string()))
}

/// Degrees of the original vertices `1..=n`, read off as first-mode slice
/// sums.
pub fn vertex_degrees_from_tensor(t: &SymTensor<Rational>, n: usize) -> Result<Vec<u64>> {
    check_dims(t, n)?;
    (1..=n).map(|i| to_count(&t.slice_sum(i)?)).collect()
}

/// Edge cardinality profile recovered from a layered e-adjacency tensor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CardinalityCounts {
    /// `d_{n+1}, …, d_{n+k_max}`: number of edges of size at most `i`.
    pub cumulative: Vec<u64>,
    /// Number of edges of each size `1..=k_max`.
    pub per_size: Vec<u64>,
}

/// Slice sums at the special indices give `d_{n+i} = |{e : |e| ≤ i}|`;
/// `d_{n+k_max}` is `|E| = total_sum / k_max`. Per-size counts are the
/// first differences.
pub fn layer_counts_from_tensor(t: &SymTensor<Rational>, n: usize) -> Result<CardinalityCounts> {
    check_dims(t, n)?;
    let k_max = t.order();
    let mut cumulative = (1..k_max)
        .map(|i| to_count(&t.slice_sum(n + i)?))
        .collect::<Result<Vec<_>>>()?;
    let edges = t.total_sum() / Rational::from_integer(k_max.into());
    cumulative.push(to_count(&edges)?);
    let mut per_size = Vec::with_capacity(k_max);
    let mut previous = 0u64;
    for &d in &cumulative {
        per_size.push(
            d.checked_sub(previous)
                .ok_or_else(|| Error::NotIntegral(format!("decreasing count {d}")))?,
        );
        previous = d;
    }
    Ok(CardinalityCounts {
        cumulative,
        per_size,
    })
}

fn check_dims(t: &SymTensor<Rational>, n: usize) -> Result<()> {
    let expected = n + t.order() - 1;
    if t.dim() != expected {
        return Err(Error::LengthMismatch {
            expected,
            found: t.dim(),
        });
    }
    Ok(())
}

/// Recovers the hypergraph from its layered e-adjacency tensor by dropping
/// the special indices of each key. Keys whose special indices are not
/// exactly `n+|e|, …, n+k_max-1` are rejected.
pub fn reconstruct(t: &SymTensor<Rational>, n: usize) -> Result<Hypergraph> {
    check_dims(t, n)?;
    let k_max = t.order();
    let mut edges = Vec::with_capacity(t.num_keys());
    for (key, value) in t.entries() {
        let malformed = || Error::MalformedKey(key.to_vec());
        if value.is_zero() || key.windows(2).any(|w| w[0] == w[1]) {
            return Err(malformed());
        }
        let size = key.iter().filter(|&&v| v <= n).count();
        if size == 0 {
            return Err(malformed());
        }
        let expected_tail = (size..k_max).map(|j| n + j);
        if !key[size..].iter().copied().eq(expected_tail) {
            return Err(malformed());
        }
        edges.push(Hyperedge::from_sorted(key[..size].to_vec()));
    }
    Hypergraph::from_edges(n, edges)
}
