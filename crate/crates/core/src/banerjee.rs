//! The Banerjee adjacency hypermatrix, its combinatorics, and a side-by-side
//! cost comparison with the layered e-adjacency tensor.
//!
//! The Banerjee tensor keeps dimension `n` and reaches order `k_max` by
//! repeating the vertices of small edges: an edge of size `s` fills every
//! position drawn from its own vertices that uses each of them at least
//! once, with value `s / α(k_max, s)`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::layers;
use crate::uniformization::e_adjacency_tensor;
use crate::{Rational, SymTensor};

/// Precomputed `p_s(m)`, the number of partitions of `m` into exactly `s`
/// positive parts, for `m ≤ max_m`. Immutable once built.
#[derive(Debug, Clone)]
pub struct PartitionTable {
    max_m: usize,
    // counts[m][s]
    counts: Vec<Vec<BigUint>>,
}

impl PartitionTable {
    /// Fills the table with `p_s(m) = p_s(m - s) + p_{s-1}(m - 1)`: a
    /// partition either has a part equal to 1 (drop it) or all parts ≥ 2
    /// (subtract 1 from each).
    pub fn new(max_m: usize) -> Self {
        let mut counts = vec![vec![BigUint::zero(); max_m + 1]; max_m + 1];
        counts[0][0] = BigUint::one();
        for m in 1..=max_m {
            for s in 1..=m {
                counts[m][s] = &counts[m - s][s] + &counts[m - 1][s - 1];
            }
        }
        PartitionTable { max_m, counts }
    }

    pub fn max_m(&self) -> usize {
        self.max_m
    }

    /// `p_s(m)`; zero when `s > m`, `s = 0 < m`, or `m` exceeds the table.
    pub fn get(&self, m: usize, s: usize) -> BigUint {
        if m > self.max_m || s > m {
            return BigUint::zero();
        }
        self.counts[m][s].clone()
    }
}

/// Number of partitions of `m` into exactly `s` positive parts.
pub fn partitions_count(m: usize, s: usize) -> BigUint {
    PartitionTable::new(m).get(m, s)
}

/// Rows `0..=n` of Pascal's triangle.
fn pascal(n: usize) -> Vec<Vec<BigUint>> {
    let mut rows: Vec<Vec<BigUint>> = Vec::with_capacity(n + 1);
    for r in 0..=n {
        let mut row = vec![BigUint::one(); r + 1];
        for a in 1..r {
            row[a] = &rows[r - 1][a - 1] + &rows[r - 1][a];
        }
        rows.push(row);
    }
    rows
}

/// `α(k_max, s) = Σ k_max! / (k_1! ⋯ k_s!)` over compositions
/// `k_1 + ⋯ + k_s = k_max` with every `k_i ≥ 1`: the number of position
/// tuples an edge of size `s` occupies.
pub fn alpha(k_max: usize, s: usize) -> Result<BigUint> {
    if s == 0 || s > k_max {
        return Err(Error::OutOfRange {
            name: "s",
            value: s,
            constraint: format!("1..={k_max}"),
        });
    }
    // sums[r][t]: the composition sum for r positions split into t parts;
    // peeling the first part a gives C(r, a) times the sum over the rest
    let binomial = pascal(k_max);
    let mut sums = vec![vec![BigUint::zero(); s + 1]; k_max + 1];
    sums[0][0] = BigUint::one();
    for t in 1..=s {
        for r in t..=k_max {
            let mut acc = BigUint::zero();
            for a in 1..=r - (t - 1) {
                acc += &binomial[r][a] * &sums[r - a][t - 1];
            }
            sums[r][t] = acc;
        }
    }
    Ok(sums[k_max][s].clone())
}

/// All compositions of `total` into `parts` positive parts, lexicographic.
pub fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    fn go(total: usize, parts: usize, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if parts == 0 {
            if total == 0 {
                out.push(prefix.clone());
            }
            return;
        }
        if total < parts {
            return;
        }
        for first in 1..=total - (parts - 1) {
            prefix.push(first);
            go(total - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    go(total, parts, &mut Vec::new(), &mut out);
    out
}

/// The Banerjee adjacency tensor: order `k_max`, dimension `n`.
pub fn banerjee_tensor(h: &Hypergraph) -> Result<SymTensor<Rational>> {
    let k_max = h.k_max().ok_or(Error::NoEdges)?;
    let alphas = (1..=k_max)
        .map(|s| alpha(k_max, s))
        .collect::<Result<Vec<_>>>()?;
    let mut t = SymTensor::zeros(k_max, h.n());
    for e in h.edges() {
        let s = e.len();
        let value = Rational::new(s.into(), BigInt::from(alphas[s - 1].clone()));
        for counts in compositions(k_max, s) {
            let key: Vec<usize> = e
                .vertices()
                .iter()
                .zip(&counts)
                .flat_map(|(&v, &c)| std::iter::repeat_n(v, c))
                .collect();
            t.add(&key, value.clone())?;
        }
    }
    Ok(t)
}

/// Cost figures for one tensor model.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModelSummary {
    pub order: usize,
    pub dim: usize,
    /// `dim^order`.
    pub total_elements: BigUint,
    /// Nonzero positions, permutations included.
    pub nnz_positions: BigUint,
    /// Values that must be written down to describe the tensor before
    /// symmetry is applied.
    pub describe_count: BigUint,
    /// Stored canonical keys.
    pub canonical_keys: usize,
    /// Distinct nonzero entry values, ascending.
    pub entry_values: Vec<Rational>,
}

/// Banerjee tensor versus layered e-adjacency tensor for one hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComparisonReport {
    pub banerjee: ModelSummary,
    pub layered: ModelSummary,
}

fn distinct_values(t: &SymTensor<Rational>) -> Vec<Rational> {
    t.entries()
        .map(|(_, v)| v.clone())
        .collect::<BTreeSet<_>>()
        .into_iter()
        .collect()
}

/// Builds both tensors and fills in their cost figures. Position counts
/// come from the closed forms `Σ_s α(k_max, s)|E_s|` and `k_max!·|E|`;
/// describe counts from `Σ_s p_s(k_max)|E_s|` and `|E|`.
pub fn compare(h: &Hypergraph) -> Result<ComparisonReport> {
    let d = layers::decompose(h)?;
    let k_max = d.k_max();
    let n = h.n();
    let partitions = PartitionTable::new(k_max);
    let layer_sizes = d.counts();

    let mut b_nnz = BigUint::zero();
    let mut b_describe = BigUint::zero();
    for (s, &count) in (1..=k_max).zip(&layer_sizes) {
        b_nnz += alpha(k_max, s)? * count;
        b_describe += partitions.get(k_max, s) * count;
    }
    let b = banerjee_tensor(h)?;
    let banerjee = ModelSummary {
        order: k_max,
        dim: n,
        total_elements: BigUint::from(n).pow(k_max as u32),
        nnz_positions: b_nnz,
        describe_count: b_describe,
        canonical_keys: b.num_keys(),
        entry_values: distinct_values(&b),
    };

    let a = e_adjacency_tensor(h)?;
    let k_fact = (1..=k_max).fold(BigUint::one(), |acc, k| acc * k);
    let layered = ModelSummary {
        order: k_max,
        dim: n + k_max - 1,
        total_elements: BigUint::from(n + k_max - 1).pow(k_max as u32),
        nnz_positions: k_fact * h.num_edges(),
        describe_count: BigUint::from(h.num_edges()),
        canonical_keys: a.num_keys(),
        entry_values: distinct_values(&a),
    };
    Ok(ComparisonReport { banerjee, layered })
}

fn join_values(values: &[Rational]) -> String {
    let parts: Vec<String> = values.iter().map(|v| v.to_string()).collect();
    parts.join(",")
}

impl ComparisonReport {
    fn rows(&self) -> Vec<(&'static str, String, String)> {
        let (b, l) = (&self.banerjee, &self.layered);
        vec![
            ("order", b.order.to_string(), l.order.to_string()),
            ("dim", b.dim.to_string(), l.dim.to_string()),
            (
                "total_elements",
                b.total_elements.to_string(),
                l.total_elements.to_string(),
            ),
            (
                "nnz_positions",
                b.nnz_positions.to_string(),
                l.nnz_positions.to_string(),
            ),
            (
                "describe_count",
                b.describe_count.to_string(),
                l.describe_count.to_string(),
            ),
            (
                "canonical_keys",
                b.canonical_keys.to_string(),
                l.canonical_keys.to_string(),
            ),
            (
                "entry_value",
                join_values(&b.entry_values),
                join_values(&l.entry_values),
            ),
        ]
    }

    /// Aligned three-column table.
    pub fn to_table(&self) -> String {
        let rows = self.rows();
        let header = ("metric", "banerjee".to_string(), "layered".to_string());
        let w0 = rows
            .iter()
            .map(|r| r.0.len())
            .chain([header.0.len()])
            .max()
            .unwrap_or(0);
        let w1 = rows
            .iter()
            .map(|r| r.1.len())
            .chain([header.1.len()])
            .max()
            .unwrap_or(0);
        let mut out = String::new();
        for (name, b, l) in std::iter::once(header).chain(rows) {
            let _ = writeln!(out, "{name:<w0$}  {b:>w1$}  {l}");
        }
        out
    }

    /// `model.metric=value` lines, Banerjee first.
    pub fn to_key_values(&self) -> String {
        let rows = self.rows();
        let mut out = String::new();
        for (model, pick) in [("banerjee", 1), ("layered", 2)] {
            for row in &rows {
                let value = if pick == 1 { &row.1 } else { &row.2 };
                let _ = writeln!(out, "{model}.{}={value}", row.0);
            }
        }
        out
    }
}
