//! H-eigenpairs of symmetric tensors: verification, Gershgorin-type disks,
//! the `max(Δ, Δ*)` bound for layered e-adjacency tensors, and a power
//! iteration for the dominant eigenvalue of nonnegative tensors.
//!
//! `(λ, x)` is an H-eigenpair of an order-`m` tensor when
//! `(A x^{m-1})_i = λ x_i^{m-1}` for every `i`.

use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::matrix::Matrix;
use crate::symtensor::{Scalar, SymTensor};
use crate::uniformization::{e_adjacency_tensor, layer_counts_from_tensor, CoefficientPolicy};
use crate::Rational;

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 10_000;

/// Outcome of [`check_eigenpair`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ResidualReport {
    /// `max_i |(A x^{m-1})_i − λ x_i^{m-1}|`.
    pub residual: f64,
    /// `residual ≤ tol · (1 + |λ|)`.
    pub passed: bool,
}

fn powi<T: Scalar>(x: &T, e: usize) -> T {
    (0..e).fold(T::one(), |acc, _| acc * x.clone())
}

/// Componentwise residual of `(A x^{m-1})_i − λ x_i^{m-1}` (not its
/// absolute value).
pub fn eigen_residuals<T: Scalar>(t: &SymTensor<T>, lambda: &T, x: &[T]) -> Result<Vec<T>> {
    if x.iter().all(Zero::is_zero) {
        return Err(Error::ZeroVector);
    }
    let ax = t.apply(x)?;
    Ok(ax
        .into_iter()
        .zip(x)
        .map(|(a, xi)| a - lambda.clone() * powi(xi, t.order() - 1))
        .collect())
}

pub fn check_eigenpair(
    t: &SymTensor<f64>,
    lambda: f64,
    x: &[f64],
    tol: f64,
) -> Result<ResidualReport> {
    let residual = eigen_residuals(t, &lambda, x)?
        .into_iter()
        .fold(0.0f64, |acc, r| acc.max(r.abs()));
    Ok(ResidualReport {
        residual,
        passed: residual <= tol * (1.0 + lambda.abs()),
    })
}

/// Exact check in rational arithmetic: true when every residual is zero.
pub fn is_exact_eigenpair(
    t: &SymTensor<Rational>,
    lambda: &Rational,
    x: &[Rational],
) -> Result<bool> {
    Ok(eigen_residuals(t, lambda, x)?.iter().all(Zero::is_zero))
}

/// A disk of the complex plane (used on the real line here).
#[derive(Debug, Clone, PartialEq)]
pub struct Disk<T> {
    pub center: T,
    pub radius: T,
}

impl<T: Scalar> Disk<T> {
    pub fn contains(&self, value: &T) -> bool {
        (value.clone() - self.center.clone()).abs() <= self.radius
    }
}

/// Disk `i` is centred on `a_{i…i}` with radius the sum of `|a_{i i_2…i_m}|`
/// over the rest of first-mode slice `i`. Every eigenvalue lies in their
/// union.
pub fn gershgorin_disks<T: Scalar>(t: &SymTensor<T>) -> Vec<Disk<T>> {
    (1..=t.dim())
        .map(|i| Disk {
            center: t.diagonal_entry(i).expect("index in range"),
            radius: t.off_diagonal_abs_slice_sum(i).expect("index in range"),
        })
        .collect()
}

/// Degree bound for the layered e-adjacency tensor of a hypergraph.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    /// Largest vertex degree `Δ`.
    pub delta: u64,
    /// Largest slice sum at a special index, `Δ* = max_i d_{n+i}`.
    pub delta_star: u64,
    /// `max(Δ, Δ*)`, which bounds `|λ|` for every eigenvalue.
    pub bound: u64,
    pub disks: Vec<Disk<Rational>>,
}

pub fn layer_bound(h: &Hypergraph) -> Result<BoundReport> {
    let t = e_adjacency_tensor(h)?;
    let delta = h.degrees().into_iter().max().unwrap_or(0) as u64;
    let counts = layer_counts_from_tensor(&t, h.n())?;
    // the last cumulative entry is |E|, not a slice sum
    let special = &counts.cumulative[..counts.cumulative.len() - 1];
    let delta_star = special.iter().copied().max().unwrap_or(0);
    Ok(BoundReport {
        delta,
        delta_star,
        bound: delta.max(delta_star),
        disks: gershgorin_disks(&t),
    })
}

/// Result of [`power_iteration`].
#[derive(Debug, Clone, PartialEq)]
pub struct EigenPair {
    pub lambda: f64,
    /// Nonnegative, max-normalized; zero outside the dominant component.
    pub x: Vec<f64>,
    pub residual: f64,
    /// Final Collatz–Wielandt bracket `[lower, upper]` around `lambda`.
    pub lower: f64,
    pub upper: f64,
    pub iterations: usize,
    /// Whether `upper − lower ≤ tol` was reached.
    pub converged: bool,
}

impl EigenPair {
    pub fn bracket_width(&self) -> f64 {
        self.upper - self.lower
    }
}

/// Indices grouped into connected components by the off-diagonal keys.
/// Indices touched only by diagonal keys (or nothing) are left out.
fn components<T: Scalar>(t: &SymTensor<T>) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..=t.dim()).collect();
    fn find(parent: &mut [usize], mut i: usize) -> usize {
        while parent[i] != i {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        i
    }
    let mut touched = vec![false; t.dim() + 1];
    for (key, _) in t.entries() {
        if key.iter().all(|&i| i == key[0]) {
            continue;
        }
        for &i in key {
            touched[i] = true;
            let (a, b) = (find(&mut parent, key[0]), find(&mut parent, i));
            parent[a.max(b)] = a.min(b);
        }
    }
    let mut groups: std::collections::BTreeMap<usize, Vec<usize>> = Default::default();
    for (i, _) in touched.iter().enumerate().filter(|(_, &hit)| hit) {
        let root = find(&mut parent, i);
        groups.entry(root).or_default().push(i);
    }
    groups.into_values().collect()
}

struct ComponentRun {
    x: Vec<f64>,
    lower: f64,
    upper: f64,
    iterations: usize,
    converged: bool,
}

/// Shifted power iteration on one connected component: iterating with
/// `A + I` keeps the sequence from cycling on periodic structures, and the
/// Collatz–Wielandt ratios of `A + I` are those of `A` plus one.
fn iterate_component(
    t: &SymTensor<f64>,
    support: &[usize],
    tol: f64,
    max_iter: usize,
) -> ComponentRun {
    let m1 = (t.order() - 1) as i32;
    let mut x = vec![0.0; t.dim()];
    for &i in support {
        x[i - 1] = 1.0;
    }
    let mut run = ComponentRun {
        x: x.clone(),
        lower: f64::NEG_INFINITY,
        upper: f64::INFINITY,
        iterations: 0,
        converged: false,
    };
    for iteration in 1..=max_iter {
        let ax = t.apply(&x).expect("length matches");
        let mut lower = f64::INFINITY;
        let mut upper = f64::NEG_INFINITY;
        let mut next = vec![0.0; t.dim()];
        for &i in support {
            let xm = x[i - 1].powi(m1);
            let ratio = ax[i - 1] / xm;
            lower = lower.min(ratio);
            upper = upper.max(ratio);
            next[i - 1] = (ax[i - 1] + xm).powf(1.0 / m1 as f64);
        }
        // the bracket only tightens for nonnegative tensors
        run.lower = run.lower.max(lower);
        run.upper = run.upper.min(upper);
        run.x = x.clone();
        run.iterations = iteration;
        if run.upper - run.lower <= tol {
            run.converged = true;
            break;
        }
        let scale = next.iter().copied().fold(0.0, f64::max);
        x = next.into_iter().map(|v| v / scale).collect();
    }
    run
}

/// Dominant H-eigenvalue of a nonnegative symmetric tensor of order ≥ 2.
///
/// Runs a shifted power iteration with Collatz–Wielandt bracketing on each
/// connected component of the off-diagonal support, starting from all ones,
/// and keeps the component with the largest estimate. Indices carrying only
/// a diagonal entry contribute that entry with a unit eigenvector. A bracket
/// that fails to close within `max_iter` is reported with
/// `converged == false`.
pub fn power_iteration(t: &SymTensor<f64>, tol: f64, max_iter: usize) -> Result<EigenPair> {
    if t.order() < 2 {
        return Err(Error::OrderTooSmall);
    }
    if t.is_zero() {
        return Err(Error::ZeroTensor);
    }
    if !t.is_nonnegative() {
        return Err(Error::NegativeEntry);
    }
    let comps = components(t);
    let mut in_component = vec![false; t.dim() + 1];
    for &i in comps.iter().flatten() {
        in_component[i] = true;
    }

    let mut best: Option<(f64, ComponentRun)> = None;
    for support in &comps {
        let run = iterate_component(t, support, tol, max_iter);
        let lambda = 0.5 * (run.lower + run.upper);
        if best.as_ref().is_none_or(|(b, _)| lambda > *b) {
            best = Some((lambda, run));
        }
    }
    for i in (1..=t.dim()).filter(|&i| !in_component[i]) {
        let d = t.diagonal_entry(i)?;
        if d > 0.0 && best.as_ref().is_none_or(|(b, _)| d > *b) {
            let mut x = vec![0.0; t.dim()];
            x[i - 1] = 1.0;
            let run = ComponentRun {
                x,
                lower: d,
                upper: d,
                iterations: 0,
                converged: true,
            };
            best = Some((d, run));
        }
    }

    let (lambda, run) = best.ok_or(Error::ZeroTensor)?;
    let residual = check_eigenpair(t, lambda, &run.x, tol)?.residual;
    Ok(EigenPair {
        lambda,
        x: run.x,
        residual,
        lower: run.lower,
        upper: run.upper,
        iterations: run.iterations,
        converged: run.converged,
    })
}

/// Dominant eigenvalue of a symmetric nonnegative matrix by dense shifted
/// power iteration, component by component.
pub fn matrix_dominant_eigenvalue(m: &Matrix, tol: f64, max_iter: usize) -> f64 {
    let a = m.to_f64_rows();
    let n = a.len();
    let mut label = vec![usize::MAX; n];
    let mut best = 0.0f64;
    for start in 0..n {
        if label[start] != usize::MAX {
            continue;
        }
        let mut stack = vec![start];
        let mut comp = Vec::new();
        label[start] = start;
        while let Some(u) = stack.pop() {
            comp.push(u);
            for v in 0..n {
                if label[v] == usize::MAX && (a[u][v] != 0.0 || a[v][u] != 0.0) {
                    label[v] = start;
                    stack.push(v);
                }
            }
        }
        let mut x = vec![0.0; n];
        for &u in &comp {
            x[u] = 1.0;
        }
        let (mut lower, mut upper) = (f64::NEG_INFINITY, f64::INFINITY);
        for _ in 0..max_iter {
            let y: Vec<f64> = (0..n)
                .map(|i| (0..n).map(|j| a[i][j] * x[j]).sum())
                .collect();
            let ratios = comp.iter().map(|&u| y[u] / x[u]);
            lower = lower.max(ratios.clone().fold(f64::INFINITY, f64::min));
            upper = upper.min(ratios.fold(f64::NEG_INFINITY, f64::max));
            if upper - lower <= tol {
                break;
            }
            let shifted: Vec<f64> = (0..n).map(|i| y[i] + x[i]).collect();
            let scale = comp.iter().map(|&u| shifted[u]).fold(0.0, f64::max);
            for &u in &comp {
                x[u] = shifted[u] / scale;
            }
        }
        best = best.max(0.5 * (lower + upper));
    }
    best
}

/// Checks of the 2-uniform special case.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphCaseReport {
    /// `c_2` under the default coefficient policy.
    pub c2: Rational,
    /// The layered tensor is `c_2·A` bordered by a zero row and column.
    pub block_structure: bool,
    /// `(0, e_{n+1})` is an exact eigenpair.
    pub zero_eigenpair: bool,
    pub layered_dominant: f64,
    pub graph_dominant: f64,
    /// `|layered_dominant − c_2·graph_dominant| ≤ tol`.
    pub dominant_relation: bool,
}

impl GraphCaseReport {
    pub fn passed(&self) -> bool {
        self.block_structure && self.zero_eigenpair && self.dominant_relation
    }
}

/// For a graph, the layered tensor is its adjacency matrix scaled by `c_2`
/// with one extra zero row and column; its spectrum is `c_2` times the
/// graph spectrum plus one zero eigenvalue carried by `e_{n+1}`.
pub fn graph_case_check(g: &Hypergraph, tol: f64) -> Result<GraphCaseReport> {
    if g.num_edges() == 0 {
        return Err(Error::NoEdges);
    }
    g.check_uniform(2)?;
    let n = g.n();
    let t = e_adjacency_tensor(g)?;
    let c2 = CoefficientPolicy::Handshake.coefficients(2)?[1].clone();
    let a = g.adjacency_matrix_bretto();

    let block_structure = t.dim() == n + 1
        && (1..=n + 1).all(|i| {
            (1..=n + 1).all(|j| {
                let expected = if i <= n && j <= n {
                    &c2 * a.get(i, j)
                } else {
                    Rational::zero()
                };
                t.get(&[i, j]).map(|v| v == expected).unwrap_or(false)
            })
        });

    let mut e_last = vec![Rational::zero(); n + 1];
    e_last[n] = Rational::from_integer(1.into());
    let zero_eigenpair = is_exact_eigenpair(&t, &Rational::zero(), &e_last)?;

    let layered_dominant = power_iteration(&t.to_f64(), DEFAULT_TOL, DEFAULT_MAX_ITER)?.lambda;
    let graph_dominant = matrix_dominant_eigenvalue(&a, DEFAULT_TOL, DEFAULT_MAX_ITER);
    let c2f = c2.to_f64().unwrap_or(f64::NAN);
    let dominant_relation = (layered_dominant - c2f * graph_dominant).abs() <= tol;

    Ok(GraphCaseReport {
        c2,
        block_structure,
        zero_eigenpair,
        layered_dominant,
        graph_dominant,
        dominant_relation,
    })
}
