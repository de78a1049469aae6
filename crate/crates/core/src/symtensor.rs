//! Symmetric cubical sparse tensors.
//!
//! An entry is stored once under its canonical key, the nondecreasing
//! 1-based index tuple. The stored value is the value of *each* position
//! obtained by permuting the key, so a key with all-distinct indices stands
//! for `m!` equal positions and a key with repeats for fewer (see
//! [`multiplicity`]).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{FromPrimitive, Num, One, Signed, ToPrimitive};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::Rational;

/// Numeric types a [`SymTensor`] can hold.
pub trait Scalar:
    Clone
    + PartialEq
    + PartialOrd
    + fmt::Debug
    + fmt::Display
    + Num
    + Signed
    + FromPrimitive
    + ToPrimitive
{
}

impl<T> Scalar for T where
    T: Clone
        + PartialEq
        + PartialOrd
        + fmt::Debug
        + fmt::Display
        + Num
        + Signed
        + FromPrimitive
        + ToPrimitive
{
}

fn factorial(m: usize) -> u128 {
    (1..=m as u128).fold(1u128, |acc, k| {
        acc.checked_mul(k).expect("factorial overflow")
    })
}

/// Number of distinct positions a canonical key stands for:
/// `m! / (m_1! ⋯ m_j!)` where `m_i` are the run lengths of repeated indices.
pub fn multiplicity(key: &[usize]) -> u128 {
    let mut sorted = key.to_vec();
    sorted.sort_unstable();
    let mut count = factorial(sorted.len());
    for run in sorted.chunk_by(|a, b| a == b) {
        count /= factorial(run.len());
    }
    count
}

/// Number of positions of `key` whose first index is `i` (0 if `i ∉ key`).
pub fn multiplicity_with_first(key: &[usize], i: usize) -> u128 {
    let Some(at) = key.iter().position(|&v| v == i) else {
        return 0;
    };
    let mut rest = key.to_vec();
    rest.remove(at);
    multiplicity(&rest)
}

fn from_count<T: Scalar>(count: u128) -> T {
    T::from_u128(count).expect("count representable in scalar type")
}

#[derive(Debug, Clone, PartialEq)]
pub struct SymTensor<T = Rational> {
    order: usize,
    dim: usize,
    entries: BTreeMap<Vec<usize>, T>,
}

impl<T: Scalar> SymTensor<T> {
    /// An all-zero tensor. Panics if `order` is zero.
    pub fn zeros(order: usize, dim: usize) -> Self {
        assert!(order >= 1, "tensor order must be positive");
        SymTensor {
            order,
            dim,
            entries: BTreeMap::new(),
        }
    }

    /// Diagonal tensor with `values[j-1]` at `(j, …, j)`.
    pub fn diagonal(order: usize, values: &[T]) -> Self {
        let mut t = Self::zeros(order, values.len());
        for (j, v) in values.iter().enumerate() {
            t.entries.insert(vec![j + 1; order], v.clone());
        }
        t.entries.retain(|_, v| !v.is_zero());
        t
    }

    pub fn identity(order: usize, dim: usize) -> Self {
        Self::diagonal(order, &vec![T::one(); dim])
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Number of stored canonical keys.
    pub fn num_keys(&self) -> usize {
        self.entries.len()
    }

    /// Number of nonzero positions, counting every permutation.
    pub fn num_positions(&self) -> u128 {
        self.entries.keys().map(|k| multiplicity(k)).sum()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Canonical keys with their per-position values, in lexicographic order.
    pub fn entries(&self) -> impl Iterator<Item = (&[usize], &T)> {
        self.entries.iter().map(|(k, v)| (k.as_slice(), v))
    }

    fn canonical(&self, idx: &[usize]) -> Result<Vec<usize>> {
        if idx.len() != self.order || idx.iter().any(|&i| i == 0 || i > self.dim) {
            return Err(Error::BadIndex {
                index: idx.to_vec(),
                order: self.order,
                dim: self.dim,
            });
        }
        let mut key = idx.to_vec();
        key.sort_unstable();
        Ok(key)
    }

    /// Value at any position; permutations of a key share its value.
    pub fn get(&self, idx: &[usize]) -> Result<T> {
        let key = self.canonical(idx)?;
        Ok(self.entries.get(&key).cloned().unwrap_or_else(T::zero))
    }

    /// Sets the value of every position in the orbit of `idx`.
    pub fn set(&mut self, idx: &[usize], value: T) -> Result<()> {
        let key = self.canonical(idx)?;
        if value.is_zero() {
            self.entries.remove(&key);
        } else {
            self.entries.insert(key, value);
        }
        Ok(())
    }

    /// Adds `value` to every position in the orbit of `idx`.
    pub fn add(&mut self, idx: &[usize], value: T) -> Result<()> {
        let current = self.get(idx)?;
        self.set(idx, current + value)
    }

    /// Sum over all positions whose first index is `i`.
    pub fn slice_sum(&self, i: usize) -> Result<T> {
        self.check_index(i)?;
        Ok(self
            .entries
            .iter()
            .filter(|(k, _)| k.contains(&i))
            .fold(T::zero(), |acc, (k, v)| {
                acc + v.clone() * from_count::<T>(multiplicity_with_first(k, i))
            }))
    }

    /// Sum of `|value|` over the first-mode slice `i`, excluding `(i, …, i)`.
    pub fn off_diagonal_abs_slice_sum(&self, i: usize) -> Result<T> {
        self.check_index(i)?;
        Ok(self
            .entries
            .iter()
            .filter(|(k, _)| k.contains(&i) && k.iter().any(|&j| j != i))
            .fold(T::zero(), |acc, (k, v)| {
                acc + v.abs() * from_count::<T>(multiplicity_with_first(k, i))
            }))
    }

    /// Value at `(i, …, i)`.
    pub fn diagonal_entry(&self, i: usize) -> Result<T> {
        self.get(&vec![i; self.order])
    }

    /// Sum over every position.
    pub fn total_sum(&self) -> T {
        self.entries.iter().fold(T::zero(), |acc, (k, v)| {
            acc + v.clone() * from_count::<T>(multiplicity(k))
        })
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if (1..=self.dim).contains(&i) {
            Ok(())
        } else {
            Err(Error::OutOfRange {
                name: "index",
                value: i,
                constraint: format!("1..={}", self.dim),
            })
        }
    }

    /// `(A x^{m-1})_i = Σ a_{i i_2 … i_m} x_{i_2} ⋯ x_{i_m}`.
    ///
    /// Accumulation follows key order, so results are reproducible.
    pub fn apply(&self, x: &[T]) -> Result<Vec<T>> {
        if x.len() != self.dim {
            return Err(Error::LengthMismatch {
                expected: self.dim,
                found: x.len(),
            });
        }
        let mut out = vec![T::zero(); self.dim];
        for (key, value) in &self.entries {
            for (pos, &i) in key.iter().enumerate() {
                if pos > 0 && key[pos - 1] == i {
                    continue;
                }
                let mut rest = key.clone();
                rest.remove(pos);
                let product = rest.iter().fold(T::one(), |acc, &j| acc * x[j - 1].clone());
                if product.is_zero() {
                    continue;
                }
                out[i - 1] = out[i - 1].clone()
                    + value.clone() * from_count::<T>(multiplicity(&rest)) * product;
            }
        }
        Ok(out)
    }

    /// `alpha · self + beta · I`.
    pub fn scale_add_identity(&self, alpha: T, beta: T) -> Self {
        let mut out = Self::zeros(self.order, self.dim);
        for (k, v) in &self.entries {
            let scaled = alpha.clone() * v.clone();
            if !scaled.is_zero() {
                out.entries.insert(k.clone(), scaled);
            }
        }
        if !beta.is_zero() {
            for j in 1..=self.dim {
                out.add(&vec![j; self.order], beta.clone())
                    .expect("diagonal index in range");
            }
        }
        out
    }

    pub fn map<U: Scalar>(&self, mut f: impl FnMut(&T) -> U) -> SymTensor<U> {
        SymTensor {
            order: self.order,
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .map(|(k, v)| (k.clone(), f(v)))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    pub fn to_f64(&self) -> SymTensor<f64> {
        self.map(|v| v.to_f64().unwrap_or(f64::NAN))
    }

    pub fn is_nonnegative(&self) -> bool {
        self.entries.values().all(|v| !v.is_negative())
    }

    /// Every position in row-major order of the 1-based indices, zeros
    /// included.
    pub fn dense_positions(&self) -> impl Iterator<Item = (Vec<usize>, T)> + '_ {
        let total = self.dim.checked_pow(self.order as u32).unwrap_or(0);
        (0..total).map(move |mut flat| {
            let mut idx = vec![0; self.order];
            for slot in idx.iter_mut().rev() {
                *slot = flat % self.dim + 1;
                flat /= self.dim;
            }
            let value = self.get(&idx).expect("generated index in range");
            (idx, value)
        })
    }

    /// COO export with a caller-supplied value formatter.
    pub fn to_coo_with(&self, mut fmt_value: impl FnMut(&T) -> String) -> String {
        let mut out = format!("symtensor v1 order={} dim={}\n", self.order, self.dim);
        for (k, v) in &self.entries {
            for i in k {
                out.push_str(&i.to_string());
                out.push(' ');
            }
            out.push_str(&fmt_value(v));
            out.push('\n');
        }
        out
    }
}

impl SymTensor<Rational> {
    /// COO export: `symtensor v1 order=m dim=d` then one `i_1 … i_m num/den`
    /// line per canonical key, sorted by key.
    pub fn to_coo(&self) -> String {
        self.to_coo_with(|v| v.to_string())
    }
}

impl FromStr for SymTensor<Rational> {
    type Err = Error;

    /// Parses the COO export. Keys may appear in any order and need not be
    /// sorted; repeated keys are rejected.
    fn from_str(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
        let bad = |line: usize, message: String| Error::Parse { line, message };

        let (hline, header) = lines
            .next()
            .ok_or_else(|| bad(0, "missing header".into()))?;
        let mut fields = header.split_whitespace();
        if fields.next() != Some("symtensor") || fields.next() != Some("v1") {
            return Err(bad(hline, format!("bad header {header:?}")));
        }
        let mut order = None;
        let mut dim = None;
        for field in fields {
            let (name, value) = field
                .split_once('=')
                .ok_or_else(|| bad(hline, format!("bad header field {field:?}")))?;
            let value: usize = value
                .parse()
                .map_err(|_| bad(hline, format!("bad header field {field:?}")))?;
            match name {
                "order" => order = Some(value),
                "dim" => dim = Some(value),
                _ => return Err(bad(hline, format!("unknown header field {name:?}"))),
            }
        }
        let (Some(order), Some(dim)) = (order, dim) else {
            return Err(bad(hline, "header needs order= and dim=".into()));
        };
        if order == 0 {
            return Err(bad(hline, "order must be positive".into()));
        }

        let mut t = SymTensor::zeros(order, dim);
        for (line, body) in lines {
            let tokens: Vec<&str> = body.split_whitespace().collect();
            if tokens.len() != order + 1 {
                return Err(bad(line, format!("expected {} fields", order + 1)));
            }
            let idx = tokens[..order]
                .iter()
                .map(|tok| {
                    tok.parse::<usize>()
                        .map_err(|_| bad(line, format!("bad index {tok:?}")))
                })
                .collect::<Result<Vec<_>>>()?;
            let value: Rational = tokens[order]
                .parse()
                .map_err(|_| bad(line, format!("bad value {:?}", tokens[order])))?;
            let key = t.canonical(&idx).map_err(|e| bad(line, e.to_string()))?;
            if t.entries.contains_key(&key) {
                return Err(bad(line, format!("repeated key {key:?}")));
            }
            t.set(&key, value)?;
        }
        Ok(t)
    }
}

/// Raw `k`-adjacency tensor of a `k`-uniform hypergraph: one key per edge,
/// value 1.
pub fn layer_tensor_raw(hk: &Hypergraph, k: usize) -> Result<SymTensor<Rational>> {
    layer_tensor_with_value(hk, k, Rational::one())
}

/// Degree-normalized `k`-adjacency tensor: one key per edge, value
/// `1/(k-1)!`, so first-mode slice sums equal vertex degrees.
pub fn layer_tensor_degree_normalized(hk: &Hypergraph, k: usize) -> Result<SymTensor<Rational>> {
    let value = Rational::new(1.into(), factorial(k.saturating_sub(1)).into());
    layer_tensor_with_value(hk, k, value)
}

fn layer_tensor_with_value(
    hk: &Hypergraph,
    k: usize,
    value: Rational,
) -> Result<SymTensor<Rational>> {
    check_order(k)?;
    hk.check_uniform(k)?;
    let mut t = SymTensor::zeros(k, hk.n());
    for e in hk.edges() {
        t.entries.insert(e.vertices().to_vec(), value.clone());
    }
    Ok(t)
}

fn check_order(k: usize) -> Result<()> {
    if k == 0 {
        return Err(Error::OutOfRange {
            name: "order",
            value: 0,
            constraint: "at least 1".into(),
        });
    }
    Ok(())
}

/// Eigen-normalized `k`-adjacency tensor: the entry of edge
/// `{i_1, …, i_k}` is `1/(k-1)! · Π_j d_{i_j}^{-1/k}`, with degrees taken in
/// `hk` itself.
pub fn layer_tensor_eigen_normalized(hk: &Hypergraph, k: usize) -> Result<SymTensor<f64>> {
    check_order(k)?;
    hk.check_uniform(k)?;
    let degrees = hk.degrees();
    let scale = 1.0 / factorial(k - 1) as f64;
    let mut t = SymTensor::zeros(k, hk.n());
    for e in hk.edges() {
        let value = e.vertices().iter().fold(scale, |acc, &v| {
            acc * (degrees[v - 1] as f64).powf(-1.0 / k as f64)
        });
        t.entries.insert(e.vertices().to_vec(), value);
    }
    Ok(t)
}

/// `I − a`, where `I` has a one at `(j, …, j)` exactly when `d_j > 0`.
pub fn laplacian<T: Scalar>(a: &SymTensor<T>, degrees: &[usize]) -> Result<SymTensor<T>> {
    if degrees.len() != a.dim {
        return Err(Error::LengthMismatch {
            expected: a.dim,
            found: degrees.len(),
        });
    }
    let mut out = a.map(|v| -v.clone());
    for (j, &d) in degrees.iter().enumerate() {
        if d > 0 {
            out.add(&vec![j + 1; a.order], T::one())?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{fixtures, ratio, rational};
    use num_traits::Zero;

    /// Dense reference: every position materialized.
    struct Dense {
        order: usize,
        dim: usize,
        values: Vec<Rational>,
    }

    impl Dense {
        fn from_sym(t: &SymTensor<Rational>) -> Dense {
            let mut values = vec![rational(0); t.dim.pow(t.order as u32)];
            for (flat, slot) in values.iter_mut().enumerate() {
                let idx = Self::unflatten(flat, t.order, t.dim);
                let mut key = idx.clone();
                key.sort_unstable();
                if let Some(v) = t.entries.get(&key) {
                    *slot = v.clone();
                }
            }
            Dense {
                order: t.order,
                dim: t.dim,
                values,
            }
        }

        fn unflatten(mut flat: usize, order: usize, dim: usize) -> Vec<usize> {
            let mut idx = vec![0; order];
            for slot in idx.iter_mut().rev() {
                *slot = flat % dim + 1;
                flat /= dim;
            }
            idx
        }

        fn positions(&self) -> impl Iterator<Item = (Vec<usize>, &Rational)> {
            self.values
                .iter()
                .enumerate()
                .map(|(f, v)| (Self::unflatten(f, self.order, self.dim), v))
        }

        fn apply(&self, x: &[Rational]) -> Vec<Rational> {
            let mut out = vec![rational(0); self.dim];
            for (idx, v) in self.positions() {
                let prod: Rational = idx[1..].iter().map(|&j| x[j - 1].clone()).product();
                out[idx[0] - 1] += v * prod;
            }
            out
        }

        fn slice_sum(&self, i: usize) -> Rational {
            self.positions()
                .filter(|(idx, _)| idx[0] == i)
                .map(|(_, v)| v.clone())
                .sum()
        }

        fn total(&self) -> Rational {
            self.values.iter().sum()
        }
    }

    fn worked_tensor() -> SymTensor<Rational> {
        // keys of the layered e-adjacency tensor of the fixture, value 1/2
        let mut t = SymTensor::zeros(3, 9);
        for key in [
            [1, 2, 3],
            [1, 2, 7],
            [3, 4, 9],
            [4, 7, 9],
            [4, 8, 9],
            [5, 8, 9],
            [6, 7, 9],
        ] {
            t.set(&key, ratio(1, 2)).unwrap();
        }
        t
    }

    #[test]
    fn multiplicities() {
        assert_eq!(multiplicity(&[1, 2, 3]), 6);
        assert_eq!(multiplicity(&[1, 1, 2]), 3);
        assert_eq!(multiplicity(&[2, 2, 2]), 1);
        assert_eq!(multiplicity(&[]), 1);
        assert_eq!(multiplicity_with_first(&[1, 1, 2], 1), 2);
        assert_eq!(multiplicity_with_first(&[1, 1, 2], 2), 1);
        assert_eq!(multiplicity_with_first(&[1, 1, 2], 3), 0);
    }

    #[test]
    fn get_is_symmetric() {
        let t = worked_tensor();
        assert_eq!(t.get(&[4, 8, 9]).unwrap(), ratio(1, 2));
        assert_eq!(t.get(&[9, 8, 4]).unwrap(), ratio(1, 2));
        assert_eq!(t.get(&[1, 1, 1]).unwrap(), rational(0));
        assert!(t.get(&[1, 2]).is_err());
        assert!(t.get(&[1, 2, 10]).is_err());
        assert!(t.get(&[0, 2, 3]).is_err());
    }

    #[test]
    fn setting_zero_removes_key() {
        let mut t = worked_tensor();
        t.set(&[3, 2, 1], rational(0)).unwrap();
        assert_eq!(t.num_keys(), 6);
        t.add(&[2, 1, 3], ratio(1, 3)).unwrap();
        assert_eq!(t.get(&[1, 2, 3]).unwrap(), ratio(1, 3));
    }

    #[test]
    fn raw_layers() {
        let layers = crate::layers::decompose(&fixtures::worked_example()).unwrap();
        let a1 = layer_tensor_raw(layers.layer(1), 1).unwrap();
        let ones: Vec<usize> = (1..=7)
            .filter(|&i| a1.get(&[i]).unwrap().is_one())
            .collect();
        assert_eq!(ones, vec![4, 5]);

        let a2 = layer_tensor_raw(layers.layer(2), 2).unwrap();
        for (i, j) in [(3, 4), (6, 7), (4, 7)] {
            assert!(a2.get(&[i, j]).unwrap().is_one());
            assert!(a2.get(&[j, i]).unwrap().is_one());
        }
        assert_eq!(a2.num_keys(), 3);

        let empty = layer_tensor_raw(&Hypergraph::empty(4), 2).unwrap();
        assert!(empty.is_zero());
        assert!(matches!(
            layer_tensor_raw(&fixtures::worked_example(), 3),
            Err(Error::NotUniform { .. })
        ));
    }

    #[test]
    fn degree_normalized_layers() {
        let layers = crate::layers::decompose(&fixtures::worked_example()).unwrap();
        let a3 = layer_tensor_degree_normalized(layers.layer(3), 3).unwrap();
        let keys: Vec<(&[usize], &Rational)> = a3.entries().collect();
        assert_eq!(keys.len(), 2);
        assert_eq!(keys[0], (&[1usize, 2, 3][..], &ratio(1, 2)));
        assert_eq!(keys[1], (&[1usize, 2, 7][..], &ratio(1, 2)));

        let a1 = layer_tensor_degree_normalized(layers.layer(1), 1).unwrap();
        assert!(a1.entries().all(|(_, v)| v.is_one()));

        let pair = layer_tensor_degree_normalized(&fixtures::single_pair(), 2).unwrap();
        assert_eq!(pair.get(&[1, 2]).unwrap(), rational(1));
    }

    #[test]
    fn degree_normalized_slice_and_total_sums() {
        let h = Hypergraph::new(
            6,
            [vec![1, 2, 3], vec![2, 3, 4], vec![4, 5, 6], vec![1, 5, 6]],
        )
        .unwrap();
        let t = layer_tensor_degree_normalized(&h, 3).unwrap();
        for (i, d) in h.degrees().into_iter().enumerate() {
            assert_eq!(t.slice_sum(i + 1).unwrap(), rational(d as i64));
        }
        assert_eq!(t.total_sum(), rational(3 * 4));
    }

    #[test]
    fn eigen_normalized_layers() {
        let pair = layer_tensor_eigen_normalized(&fixtures::single_pair(), 2).unwrap();
        assert_eq!(pair.get(&[1, 2]).unwrap(), 1.0);

        let path = Hypergraph::new(3, [vec![1, 2], vec![2, 3]]).unwrap();
        let t = layer_tensor_eigen_normalized(&path, 2).unwrap();
        assert!((t.get(&[1, 2]).unwrap() - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);

        let tri = Hypergraph::new(3, [vec![1, 2, 3]]).unwrap();
        let t = layer_tensor_eigen_normalized(&tri, 3).unwrap();
        assert!((t.get(&[3, 1, 2]).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn laplacians() {
        let zero: SymTensor<Rational> = SymTensor::zeros(3, 2);
        assert_eq!(
            laplacian(&zero, &[1, 2]).unwrap(),
            SymTensor::identity(3, 2)
        );

        let a = layer_tensor_degree_normalized(&fixtures::single_pair(), 2).unwrap();
        let l = laplacian(&a, &[1, 1]).unwrap();
        assert_eq!(l.get(&[1, 1]).unwrap(), rational(1));
        assert_eq!(l.get(&[1, 2]).unwrap(), rational(-1));
        assert_eq!(l.get(&[2, 2]).unwrap(), rational(1));

        assert!(laplacian(&zero, &[0, 0]).unwrap().is_zero());
        assert!(matches!(
            laplacian(&zero, &[1]),
            Err(Error::LengthMismatch { .. })
        ));
    }

    #[test]
    fn slice_and_total_sums() {
        let t = worked_tensor();
        assert_eq!(t.slice_sum(4).unwrap(), rational(3));
        assert_eq!(t.slice_sum(9).unwrap(), rational(5));
        assert_eq!(t.total_sum(), rational(21));
        assert_eq!(t.num_positions(), 42);
        assert!(t.slice_sum(10).is_err());
        let empty: SymTensor<Rational> = SymTensor::zeros(2, 3);
        assert_eq!(empty.slice_sum(1).unwrap(), rational(0));
        assert_eq!(empty.total_sum(), rational(0));
    }

    #[test]
    fn apply_cases() {
        let t = worked_tensor();
        let y = t.apply(&vec![rational(1); 9]).unwrap();
        assert_eq!(y[3], rational(3));
        assert_eq!(y[8], rational(5));
        assert!(t
            .apply(&vec![rational(0); 9])
            .unwrap()
            .iter()
            .all(Zero::is_zero));
        assert!(t.apply(&[rational(1)]).is_err());

        let mut m = SymTensor::zeros(2, 2);
        m.set(&[1, 2], rational(1)).unwrap();
        assert_eq!(
            m.apply(&[rational(0), rational(1)]).unwrap(),
            vec![rational(1), rational(0)]
        );
    }

    #[test]
    fn scale_and_shift() {
        let t = worked_tensor();
        assert_eq!(t.scale_add_identity(rational(1), rational(0)), t);
        let z: SymTensor<Rational> = SymTensor::zeros(2, 2);
        assert_eq!(
            z.scale_add_identity(rational(0), rational(1)),
            SymTensor::identity(2, 2)
        );
        let doubled = t.scale_add_identity(rational(2), rational(0));
        assert!(doubled.entries().all(|(_, v)| *v == rational(1)));
        assert_eq!(doubled.num_keys(), 7);
    }

    #[test]
    fn coo_roundtrip_and_format() {
        let t = worked_tensor();
        let coo = t.to_coo();
        assert!(coo.starts_with("symtensor v1 order=3 dim=9\n1 2 3 1/2\n1 2 7 1/2\n"));
        assert_eq!(coo.lines().count(), 8);
        let back: SymTensor<Rational> = coo.parse().unwrap();
        assert_eq!(back, t);

        assert!("symtensor v2 order=1 dim=1"
            .parse::<SymTensor<Rational>>()
            .is_err());
        assert!("symtensor v1 order=2 dim=2\n1 3 1"
            .parse::<SymTensor<Rational>>()
            .is_err());
        assert!("symtensor v1 order=2 dim=2\n1 2 1\n2 1 1"
            .parse::<SymTensor<Rational>>()
            .is_err());
        assert!("symtensor v1 order=2 dim=2\n1 2 x"
            .parse::<SymTensor<Rational>>()
            .is_err());
    }

    #[test]
    fn dense_export_is_row_major() {
        let mut t = SymTensor::zeros(2, 2);
        t.set(&[1, 2], rational(5)).unwrap();
        let dense: Vec<(Vec<usize>, Rational)> = t.dense_positions().collect();
        assert_eq!(
            dense,
            vec![
                (vec![1, 1], rational(0)),
                (vec![1, 2], rational(5)),
                (vec![2, 1], rational(5)),
                (vec![2, 2], rational(0)),
            ]
        );
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn small_tensor() -> impl Strategy<Value = SymTensor<Rational>> {
            (1usize..=3, 1usize..=4).prop_flat_map(|(order, dim)| {
                proptest::collection::vec(
                    (
                        proptest::collection::vec(1..=dim, order),
                        -6i64..=6,
                        1i64..=4,
                    ),
                    0..8,
                )
                .prop_map(move |raw| {
                    let mut t = SymTensor::zeros(order, dim);
                    for (idx, num, den) in raw {
                        t.set(&idx, ratio(num, den)).unwrap();
                    }
                    t
                })
            })
        }

        proptest! {
            #[test]
            fn agrees_with_dense_enumeration(t in small_tensor(), xs in proptest::collection::vec(-3i64..=3, 4)) {
                let dense = Dense::from_sym(&t);
                let x: Vec<Rational> = xs[..t.dim].iter().map(|&v| rational(v)).collect();
                prop_assert_eq!(t.apply(&x).unwrap(), dense.apply(&x));
                for i in 1..=t.dim {
                    prop_assert_eq!(t.slice_sum(i).unwrap(), dense.slice_sum(i));
                }
                prop_assert_eq!(t.total_sum(), dense.total());
                let nnz = dense.values.iter().filter(|v| !v.is_zero()).count() as u128;
                prop_assert_eq!(t.num_positions(), nnz);
                let exported: Vec<Rational> = t.dense_positions().map(|(_, v)| v).collect();
                prop_assert_eq!(exported, dense.values.clone());
            }

            #[test]
            fn every_permutation_reads_the_same(t in small_tensor(), seed in proptest::collection::vec(1usize..=4, 3)) {
                let idx: Vec<usize> = seed[..t.order].iter().map(|&i| (i - 1) % t.dim + 1).collect();
                let base = t.get(&idx).unwrap();
                let mut perm = idx.clone();
                perm.sort_unstable();
                loop {
                    prop_assert_eq!(t.get(&perm).unwrap(), base.clone());
                    if !next_permutation(&mut perm) {
                        break;
                    }
                }
            }

            #[test]
            fn apply_at_ones_is_slice_sum(t in small_tensor()) {
                let y = t.apply(&vec![rational(1); t.dim]).unwrap();
                for i in 1..=t.dim {
                    prop_assert_eq!(y[i - 1].clone(), t.slice_sum(i).unwrap());
                }
            }

            #[test]
            fn coo_roundtrips(t in small_tensor()) {
                let back: SymTensor<Rational> = t.to_coo().parse().unwrap();
                prop_assert_eq!(back, t);
            }
        }

        fn next_permutation(v: &mut [usize]) -> bool {
            let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
                return false;
            };
            let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).unwrap();
            v.swap(i - 1, j);
            v[i..].reverse();
            true
        }
    }
}
