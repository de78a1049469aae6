//! Hypergraph data model, the `HG v1` text format, incidence/adjacency
//! matrices, the 2-section, and adjacency predicates.
//!
//! Vertices are 1-based (`1..=n`). Hyperedge ids are 0-based positions in
//! [`Hypergraph::edges`]; text output renders them as `e1, e2, ...`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::Rational;

/// A nonempty set of distinct vertices, stored sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hyperedge(Vec<usize>);

impl Hyperedge {
    /// Validates membership: nonempty, no repeats, no vertex 0.
    pub fn new(vertices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for v in vertices {
            if v == 0 {
                return Err(Error::VertexOutOfRange { vertex: 0, n: 0 });
            }
            if !seen.insert(v) {
                return Err(Error::DuplicateVertex(v));
            }
        }
        if seen.is_empty() {
            return Err(Error::EmptyEdge);
        }
        Ok(Hyperedge(seen.into_iter().collect()))
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn max_vertex(&self) -> usize {
        *self.0.last().expect("hyperedges are nonempty")
    }

    /// Returns `self ∪ {y}`; `y` must not already be a member.
    pub(crate) fn with_vertex(&self, y: usize) -> Hyperedge {
        debug_assert!(!self.contains(y));
        let mut vs = self.0.clone();
        let at = vs.partition_point(|&v| v < y);
        vs.insert(at, y);
        Hyperedge(vs)
    }

    /// Builds an edge from an already sorted, duplicate-free, nonempty slice.
    pub(crate) fn from_sorted(vertices: Vec<usize>) -> Hyperedge {
        debug_assert!(!vertices.is_empty());
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Hyperedge(vertices)
    }
}

impl fmt::Display for Hyperedge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|v| v.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// A hypergraph on vertices `1..=n` with a duplicate-free family of hyperedges.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Hyperedge>,
}

impl Hypergraph {
    pub fn empty(n: usize) -> Self {
        Hypergraph {
            n,
            edges: Vec::new(),
        }
    }

    /// Builds a hypergraph from vertex lists, validating every edge and
    /// rejecting repeated edges.
    pub fn new<E, I>(n: usize, edges: E) -> Result<Self>
    where
        E: IntoIterator<Item = I>,
        I: IntoIterator<Item = usize>,
    {
        let edges = edges
            .into_iter()
            .map(Hyperedge::new)
            .collect::<Result<Vec<_>>>()?;
        Self::from_edges(n, edges)
    }

    pub fn from_edges(n: usize, edges: Vec<Hyperedge>) -> Result<Self> {
        let mut seen = BTreeSet::new();
        for e in &edges {
            if e.max_vertex() > n {
                return Err(Error::VertexOutOfRange {
                    vertex: e.max_vertex(),
                    n,
                });
            }
            if !seen.insert(e) {
                return Err(Error::DuplicateEdge(e.vertices().to_vec()));
            }
        }
        Ok(Hypergraph { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn num_edges(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Hyperedge] {
        &self.edges
    }

    /// Largest hyperedge cardinality; `None` without edges.
    pub fn k_max(&self) -> Option<usize> {
        self.edges.iter().map(Hyperedge::len).max()
    }

    /// True when every edge has exactly `k` vertices (vacuous without edges).
    pub fn is_uniform(&self, k: usize) -> bool {
        self.edges.iter().all(|e| e.len() == k)
    }

    pub(crate) fn check_uniform(&self, k: usize) -> Result<()> {
        match self.edges.iter().find(|e| e.len() != k) {
            Some(e) => Err(Error::NotUniform {
                expected: k,
                found: e.len(),
            }),
            None => Ok(()),
        }
    }

    /// Position of `edge` in the family, if present.
    pub fn edge_position(&self, edge: &Hyperedge) -> Option<usize> {
        self.edges.iter().position(|e| e == edge)
    }

    /// The edge family as a sorted set, for order-insensitive comparison.
    pub fn edge_set(&self) -> BTreeSet<Hyperedge> {
        self.edges.iter().cloned().collect()
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if (1..=self.n).contains(&v) {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange {
                vertex: v,
                n: self.n,
            })
        }
    }

    /// Number of hyperedges containing `v`.
    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.edges.iter().filter(|e| e.contains(v)).count())
    }

    /// Degrees of `v_1..v_n`, in order.
    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            for &v in e.vertices() {
                d[v - 1] += 1;
            }
        }
        d
    }

    /// `n × p` matrix with a one where vertex `k` belongs to edge `l`.
    pub fn incidence_matrix(&self) -> Matrix {
        Matrix::from_fn(self.n, self.edges.len(), |v, l| {
            if self.edges[l - 1].contains(v) {
                Rational::one()
            } else {
                Rational::zero()
            }
        })
    }

    /// Off-diagonal entry `(u, v)` counts the edges containing both; the
    /// diagonal is zero.
    pub fn adjacency_matrix_bretto(&self) -> Matrix {
        let mut a = Matrix::zeros(self.n, self.n);
        for e in &self.edges {
            for &u in e.vertices() {
                for &v in e.vertices() {
                    if u != v {
                        let next = a.get(u, v) + Rational::one();
                        a.set(u, v, next);
                    }
                }
            }
        }
        a
    }

    /// Graph on the same vertices with an edge for every pair that shares a
    /// hyperedge. Pairs are listed in lexicographic order.
    pub fn two_section(&self) -> Hypergraph {
        let mut pairs = BTreeSet::new();
        for e in &self.edges {
            let vs = e.vertices();
            for (i, &u) in vs.iter().enumerate() {
                for &v in &vs[i + 1..] {
                    pairs.insert(Hyperedge::from_sorted(vec![u, v]));
                }
            }
        }
        Hypergraph {
            n: self.n,
            edges: pairs.into_iter().collect(),
        }
    }

    fn selection(&self, s: &[usize]) -> Result<BTreeSet<usize>> {
        if s.is_empty() {
            return Err(Error::EmptySelection);
        }
        for &v in s {
            self.check_vertex(v)?;
        }
        Ok(s.iter().copied().collect())
    }

    /// True when some hyperedge contains every vertex of `s`.
    pub fn is_k_adjacent(&self, s: &[usize]) -> Result<bool> {
        let s = self.selection(s)?;
        Ok(self.edges.iter().any(|e| s.iter().all(|&v| e.contains(v))))
    }

    /// True when `s` is exactly one of the hyperedges.
    pub fn is_e_adjacent(&self, s: &[usize]) -> Result<bool> {
        let s = self.selection(s)?;
        let e = Hyperedge::from_sorted(s.into_iter().collect());
        Ok(self.edges.contains(&e))
    }
}

impl FromStr for Hypergraph {
    type Err = Error;

    /// Parses the `HG v1` format: `#` comment lines, then the vertex count,
    /// then one hyperedge per line as space-separated vertex ids.
    fn from_str(text: &str) -> Result<Self> {
        let mut n: Option<usize> = None;
        let mut edges = Vec::new();
        let mut seen = BTreeSet::new();
        // blank lines after the last edge are padding, not empty edges
        let lines: Vec<&str> = text.lines().collect();
        let end = lines
            .iter()
            .rposition(|l| !l.trim().is_empty() && !l.trim().starts_with('#'))
            .map_or(0, |i| i + 1);

        for (idx, raw) in lines[..end].iter().enumerate() {
            let line_no = idx + 1;
            let line = raw.trim();
            if line.starts_with('#') {
                continue;
            }
            let Some(n) = n else {
                if line.is_empty() {
                    continue;
                }
                let parsed = line.parse::<usize>().map_err(|_| Error::Parse {
                    line: line_no,
                    message: format!("expected vertex count, found {line:?}"),
                })?;
                n = Some(parsed);
                continue;
            };
            if line.is_empty() {
                return Err(Error::Parse {
                    line: line_no,
                    message: "empty hyperedge".into(),
                });
            }
            let vertices = line
                .split_whitespace()
                .map(|tok| {
                    tok.parse::<usize>().map_err(|_| Error::Parse {
                        line: line_no,
                        message: format!("invalid vertex {tok:?}"),
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            let at_line = |err: Error| Error::Parse {
                line: line_no,
                message: err.to_string(),
            };
            if let Some(&bad) = vertices.iter().find(|&&v| v == 0 || v > n) {
                return Err(at_line(Error::VertexOutOfRange { vertex: bad, n }));
            }
            let edge = Hyperedge::new(vertices).map_err(at_line)?;
            if !seen.insert(edge.clone()) {
                return Err(at_line(Error::DuplicateEdge(edge.vertices().to_vec())));
            }
            edges.push(edge);
        }

        let n = n.ok_or(Error::Parse {
            line: 0,
            message: "missing vertex count".into(),
        })?;
        Ok(Hypergraph { n, edges })
    }
}

impl fmt::Display for Hypergraph {
    /// Writes the `HG v1` format.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "{}", self.n)?;
        for e in &self.edges {
            writeln!(f, "{e}")?;
        }
        Ok(())
    }
}

/// A hypergraph with one strictly positive rational weight per hyperedge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightedHypergraph {
    base: Hypergraph,
    weights: Vec<Rational>,
}

impl WeightedHypergraph {
    pub fn new(base: Hypergraph, weights: Vec<Rational>) -> Result<Self> {
        if weights.len() != base.num_edges() {
            return Err(Error::WeightCount {
                expected: base.num_edges(),
                found: weights.len(),
            });
        }
        if weights.iter().any(|w| !w.is_positive()) {
            return Err(Error::NonPositiveWeight);
        }
        Ok(WeightedHypergraph { base, weights })
    }

    /// Every edge gets the same weight `c`.
    pub fn uniform_weight(base: Hypergraph, c: Rational) -> Result<Self> {
        let weights = vec![c; base.num_edges()];
        Self::new(base, weights)
    }

    pub fn unit(base: Hypergraph) -> Self {
        let weights = vec![Rational::one(); base.num_edges()];
        WeightedHypergraph { base, weights }
    }

    pub fn base(&self) -> &Hypergraph {
        &self.base
    }

    pub fn weights(&self) -> &[Rational] {
        &self.weights
    }

    pub fn n(&self) -> usize {
        self.base.n
    }

    /// Edges paired with their weights, in family order.
    pub fn weighted_edges(&self) -> impl Iterator<Item = (&Hyperedge, &Rational)> {
        self.base.edges.iter().zip(&self.weights)
    }

    pub(crate) fn from_parts_unchecked(
        n: usize,
        edges: Vec<Hyperedge>,
        weights: Vec<Rational>,
    ) -> Self {
        debug_assert_eq!(edges.len(), weights.len());
        WeightedHypergraph {
            base: Hypergraph { n, edges },
            weights,
        }
    }

    /// `H W Hᵀ − D_v`, where `D_v` holds the weighted vertex degrees.
    pub fn adjacency_matrix_zhou(&self) -> Matrix {
        let h = self.base.incidence_matrix();
        let w = Matrix::diagonal(&self.weights);
        let hw = &h * &w;
        let hwht = &hw * &h.transpose();
        let mut dv = vec![Rational::zero(); self.base.n];
        for (e, wt) in self.weighted_edges() {
            for &v in e.vertices() {
                dv[v - 1] += wt;
            }
        }
        &hwht - &Matrix::diagonal(&dv)
    }
}
