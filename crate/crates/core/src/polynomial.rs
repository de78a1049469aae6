//! Homogeneous polynomials attached to symmetric tensors, the
//! homogenization recurrence, and extraction of hyperedges from the boolean
//! (DNF) reading of the layered polynomial.
//!
//! Monomials are stored reduced: one nondecreasing variable tuple per
//! monomial, its coefficient already summing every symmetric position.
//! Variables `1..=n` stand for vertices (`z_i`), variables above `n` for the
//! special vertices (`y_j` is variable `n + j`).

use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::hypergraph::{Hyperedge, Hypergraph};
use crate::layers;
use crate::symtensor::{layer_tensor_degree_normalized, multiplicity, SymTensor};
use crate::uniformization::CoefficientPolicy;
use crate::Rational;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomogeneousPolynomial {
    degree: usize,
    var_count: usize,
    monomials: BTreeMap<Vec<usize>, Rational>,
}

impl HomogeneousPolynomial {
    pub fn zero(degree: usize, var_count: usize) -> Self {
        HomogeneousPolynomial {
            degree,
            var_count,
            monomials: BTreeMap::new(),
        }
    }

    /// Builds a polynomial from `(variables, coefficient)` terms. Variable
    /// order inside a term does not matter; like terms are combined.
    pub fn new(
        degree: usize,
        var_count: usize,
        terms: impl IntoIterator<Item = (Vec<usize>, Rational)>,
    ) -> Result<Self> {
        let mut p = Self::zero(degree, var_count);
        for (mut vars, coef) in terms {
            if vars.len() != degree {
                return Err(Error::DegreeMismatch {
                    expected: degree,
                    found: vars.len(),
                });
            }
            if let Some(&bad) = vars.iter().find(|&&v| v == 0 || v > var_count) {
                return Err(Error::OutOfRange {
                    name: "variable",
                    value: bad,
                    constraint: format!("1..={var_count}"),
                });
            }
            vars.sort_unstable();
            p.add_term(vars, coef);
        }
        Ok(p)
    }

    fn add_term(&mut self, vars: Vec<usize>, coef: Rational) {
        let sum = self.monomials.remove(&vars).unwrap_or_else(Rational::zero) + coef;
        if !sum.is_zero() {
            self.monomials.insert(vars, sum);
        }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn var_count(&self) -> usize {
        self.var_count
    }

    pub fn is_zero(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.monomials.len()
    }

    /// Terms sorted by variable tuple.
    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &Rational)> {
        self.monomials.iter().map(|(k, c)| (k.as_slice(), c))
    }

    pub fn coefficient(&self, vars: &[usize]) -> Rational {
        let mut key = vars.to_vec();
        key.sort_unstable();
        self.monomials
            .get(&key)
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        let mut out = Self::zero(self.degree, self.var_count);
        if !c.is_zero() {
            for (k, v) in &self.monomials {
                out.monomials.insert(k.clone(), v * c);
            }
        }
        out
    }

    /// Same monomials with every coefficient replaced by 1.
    pub fn boolean(&self) -> Self {
        HomogeneousPolynomial {
            degree: self.degree,
            var_count: self.var_count,
            monomials: self
                .monomials
                .keys()
                .map(|k| (k.clone(), Rational::one()))
                .collect(),
        }
    }

    /// `Σ coefficient · Π x` over the monomials.
    pub fn evaluate(&self, x: &[Rational]) -> Result<Rational> {
        if x.len() != self.var_count {
            return Err(Error::LengthMismatch {
                expected: self.var_count,
                found: x.len(),
            });
        }
        Ok(self
            .monomials
            .iter()
            .map(|(k, c)| k.iter().fold(c.clone(), |acc, &v| acc * &x[v - 1]))
            .sum())
    }

    /// Fixes some variables to values and keeps the rest symbolic. The
    /// result is generally no longer homogeneous.
    pub fn substitute(&self, fixed: &BTreeMap<usize, Rational>) -> Polynomial {
        let mut out = Polynomial::default();
        for (k, c) in &self.monomials {
            let mut coef = c.clone();
            let mut rest = Vec::with_capacity(k.len());
            for &v in k {
                match fixed.get(&v) {
                    Some(value) => coef *= value,
                    None => rest.push(v),
                }
            }
            out.add_term(rest, coef);
        }
        out
    }

    /// One line per term, `coef * z_i*z_j*…`; variables above `n` are
    /// written `y_{v-n}`.
    pub fn render(&self, n: usize) -> String {
        let mut out = String::new();
        for (k, c) in &self.monomials {
            let _ = writeln!(out, "{c} * {}", render_monomial(k, n));
        }
        out
    }
}

fn render_monomial(vars: &[usize], n: usize) -> String {
    let names: Vec<String> = vars
        .iter()
        .map(|&v| {
            if v <= n {
                format!("z_{v}")
            } else {
                format!("y_{}", v - n)
            }
        })
        .collect();
    names.join("*")
}

/// A sparse, not necessarily homogeneous, polynomial.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Polynomial {
    terms: BTreeMap<Vec<usize>, Rational>,
}

impl Polynomial {
    fn add_term(&mut self, vars: Vec<usize>, coef: Rational) {
        let sum = self.terms.remove(&vars).unwrap_or_else(Rational::zero) + coef;
        if !sum.is_zero() {
            self.terms.insert(vars, sum);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[usize], &Rational)> {
        self.terms.iter().map(|(k, c)| (k.as_slice(), c))
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(k.clone(), -c.clone());
        }
        out
    }
}

/// Reduced polynomial of a symmetric tensor: the monomial of key `K` gets
/// `value(K) · (number of positions of K)`.
pub fn poly_from_tensor(t: &SymTensor<Rational>) -> HomogeneousPolynomial {
    let mut p = HomogeneousPolynomial::zero(t.order(), t.dim());
    for (k, v) in t.entries() {
        p.monomials.insert(
            k.to_vec(),
            v * Rational::from_integer(multiplicity(k).into()),
        );
    }
    p
}

/// Inverse of [`poly_from_tensor`] for polynomials whose monomials use
/// distinct variables, i.e. read as hyperedges.
pub fn tensor_from_poly(p: &HomogeneousPolynomial) -> Result<SymTensor<Rational>> {
    let mut t = SymTensor::zeros(p.degree.max(1), p.var_count);
    for (k, c) in &p.monomials {
        if k.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::RepeatedVariable(k.clone()));
        }
        t.set(k, c / Rational::from_integer(multiplicity(k).into()))?;
    }
    Ok(t)
}

/// One homogenization step: `r · y + c_next · p_next`, where `y` is the
/// fresh variable `y_index`.
pub fn homogenize_step(
    r: &HomogeneousPolynomial,
    p_next: &HomogeneousPolynomial,
    c_next: &Rational,
    y_index: usize,
) -> Result<HomogeneousPolynomial> {
    if p_next.degree != r.degree + 1 {
        return Err(Error::DegreeMismatch {
            expected: r.degree + 1,
            found: p_next.degree,
        });
    }
    if y_index <= r.var_count || y_index <= p_next.var_count {
        return Err(Error::VariableCollision(y_index));
    }
    let mut out = HomogeneousPolynomial::zero(r.degree + 1, y_index);
    for (k, c) in &r.monomials {
        let mut key = k.clone();
        key.push(y_index);
        out.add_term(key, c.clone());
    }
    for (k, c) in &p_next.scale(c_next).monomials {
        out.add_term(k.clone(), c.clone());
    }
    Ok(out)
}

/// `P_1, …, P_{k_max}`: reduced polynomials of the degree-normalized layer
/// tensors, all on the `n` vertex variables.
pub fn layer_polynomials(h: &Hypergraph) -> Result<Vec<HomogeneousPolynomial>> {
    let d = layers::decompose(h)?;
    (1..=d.k_max())
        .map(|k| {
            Ok(poly_from_tensor(&layer_tensor_degree_normalized(
                d.layer(k),
                k,
            )?))
        })
        .collect()
}

/// Homogenization: `R_1 = c_1 P_1`, then `R_{k+1} = R_k · y_k + c_{k+1} P_{k+1}`
/// up to `R_{k_max}`, a degree-`k_max` polynomial on `n + k_max - 1`
/// variables.
pub fn homogenize(h: &Hypergraph, policy: &CoefficientPolicy) -> Result<HomogeneousPolynomial> {
    let ps = layer_polynomials(h)?;
    let k_max = ps.len();
    let cs = policy.coefficients(k_max)?;
    let n = h.n();
    let mut r = ps[0].scale(&cs[0]);
    for k in 1..k_max {
        r = homogenize_step(&r, &ps[k], &cs[k], n + k)?;
    }
    Ok(r)
}

fn check_size(j: usize, k_max: usize) -> Result<()> {
    if !(1..=k_max).contains(&j) {
        return Err(Error::OutOfRange {
            name: "size",
            value: j,
            constraint: format!("1..={k_max}"),
        });
    }
    Ok(())
}

/// Hyperedges of size `j` stored in a layered e-adjacency tensor, read
/// structurally: keys with exactly `j` indices among `1..=n`.
pub fn dnf_layer_extract(
    t: &SymTensor<Rational>,
    n: usize,
    j: usize,
) -> Result<BTreeSet<Hyperedge>> {
    check_size(j, t.order())?;
    Ok(t.entries()
        .filter(|(k, _)| k.iter().filter(|&&v| v <= n).count() == j)
        .map(|(k, _)| Hyperedge::from_sorted(k[..j].to_vec()))
        .collect())
}

/// Same extraction through evaluation differences of the boolean
/// polynomial `P_B`: with the last `k_max - j` special variables set to 1
/// and the others to 0, only terms of edges of size `≥ j` survive;
/// subtracting the setting with one fewer 1 leaves exactly size `j`.
pub fn dnf_layer_extract_by_evaluation(
    t: &SymTensor<Rational>,
    n: usize,
    j: usize,
) -> Result<BTreeSet<Hyperedge>> {
    let k_max = t.order();
    check_size(j, k_max)?;
    if t.dim() != n + k_max - 1 {
        return Err(Error::LengthMismatch {
            expected: n + k_max - 1,
            found: t.dim(),
        });
    }
    let pb = poly_from_tensor(t).boolean();
    let setting = |ones: usize| -> BTreeMap<usize, Rational> {
        (1..k_max)
            .map(|i| {
                let on = i + ones >= k_max;
                (
                    n + i,
                    if on {
                        Rational::one()
                    } else {
                        Rational::zero()
                    },
                )
            })
            .collect()
    };
    let ones = k_max - j;
    let upper = pb.substitute(&setting(ones));
    let difference = if ones == 0 {
        upper
    } else {
        upper.sub(&pb.substitute(&setting(ones - 1)))
    };
    difference
        .terms()
        .map(|(vars, coef)| {
            if !coef.is_one() || vars.len() != j || vars.iter().any(|&v| v > n) {
                return Err(Error::MalformedKey(vars.to_vec()));
            }
            Hyperedge::new(vars.iter().copied())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::symtensor::layer_tensor_raw;
    use crate::uniformization::e_adjacency_tensor;
    use crate::{fixtures, ratio, rational};

    fn edges(list: &[&[usize]]) -> BTreeSet<Hyperedge> {
        list.iter()
            .map(|e| Hyperedge::new(e.iter().copied()).unwrap())
            .collect()
    }

    fn worked_layer(k: usize) -> Hypergraph {
        layers::decompose(&fixtures::worked_example())
            .unwrap()
            .layer(k)
            .clone()
    }

    #[test]
    fn raw_layer_polynomials() {
        let p1 = poly_from_tensor(&layer_tensor_raw(&worked_layer(1), 1).unwrap());
        assert_eq!(p1.render(7), "1 * z_4\n1 * z_5\n");
        let p2 = poly_from_tensor(&layer_tensor_raw(&worked_layer(2), 2).unwrap());
        assert_eq!(p2.coefficient(&[3, 4]), rational(2));
        assert_eq!(p2.coefficient(&[7, 6]), rational(2));
        assert_eq!(p2.coefficient(&[4, 7]), rational(2));
        assert_eq!(p2.num_terms(), 3);
        let p3 = poly_from_tensor(&layer_tensor_raw(&worked_layer(3), 3).unwrap());
        assert_eq!(p3.coefficient(&[1, 2, 3]), rational(6));
        assert!(poly_from_tensor(&SymTensor::zeros(2, 3)).is_zero());
    }

    #[test]
    fn tensor_poly_roundtrip() {
        for k in 1..=3 {
            let t = layer_tensor_degree_normalized(&worked_layer(k), k).unwrap();
            assert_eq!(tensor_from_poly(&poly_from_tensor(&t)).unwrap(), t);
        }
        let p = HomogeneousPolynomial::new(3, 3, [(vec![1, 2, 3], rational(6))]).unwrap();
        let t = tensor_from_poly(&p).unwrap();
        assert_eq!(t.get(&[2, 3, 1]).unwrap(), rational(1));

        let square = HomogeneousPolynomial::new(2, 1, [(vec![1, 1], rational(1))]).unwrap();
        assert_eq!(
            tensor_from_poly(&square).unwrap_err(),
            Error::RepeatedVariable(vec![1, 1])
        );
    }

    #[test]
    fn construction_validation() {
        assert!(HomogeneousPolynomial::new(2, 3, [(vec![1], rational(1))]).is_err());
        assert!(HomogeneousPolynomial::new(1, 3, [(vec![4], rational(1))]).is_err());
        let cancel = HomogeneousPolynomial::new(
            2,
            3,
            [(vec![1, 2], rational(1)), (vec![2, 1], rational(-1))],
        )
        .unwrap();
        assert!(cancel.is_zero());
    }

    #[test]
    fn step_from_worked() {
        let p1 = poly_from_tensor(&layer_tensor_degree_normalized(&worked_layer(1), 1).unwrap());
        let p2 = poly_from_tensor(&layer_tensor_degree_normalized(&worked_layer(2), 2).unwrap());
        let r1 = p1.scale(&rational(3));
        let r2 = homogenize_step(&r1, &p2, &ratio(3, 2), 8).unwrap();
        let expected = HomogeneousPolynomial::new(
            2,
            8,
            [
                (vec![4, 8], rational(3)),
                (vec![5, 8], rational(3)),
                (vec![3, 4], rational(3)),
                (vec![6, 7], rational(3)),
                (vec![4, 7], rational(3)),
            ],
        )
        .unwrap();
        assert_eq!(r2, expected);

        let zero2 = HomogeneousPolynomial::zero(2, 7);
        let lifted = homogenize_step(&r1, &zero2, &rational(1), 8).unwrap();
        assert_eq!(lifted.coefficient(&[4, 8]), rational(3));
        assert_eq!(lifted.num_terms(), 2);

        let zero1 = HomogeneousPolynomial::zero(1, 7);
        let only_p = homogenize_step(&zero1, &p2, &ratio(3, 2), 8).unwrap();
        assert_eq!(only_p, p2.scale(&ratio(3, 2)).with_var_count(8));

        assert_eq!(
            homogenize_step(&r1, &p2, &rational(1), 7).unwrap_err(),
            Error::VariableCollision(7)
        );
        assert!(matches!(
            homogenize_step(&r1, &r1, &rational(1), 8),
            Err(Error::DegreeMismatch { .. })
        ));
    }

    impl HomogeneousPolynomial {
        fn with_var_count(mut self, var_count: usize) -> Self {
            self.var_count = var_count;
            self
        }
    }

    #[test]
    fn worked_r3() {
        let h = fixtures::worked_example();
        let r3 = homogenize(&h, &CoefficientPolicy::Handshake).unwrap();
        assert_eq!((r3.degree(), r3.var_count()), (3, 9));
        assert_eq!(r3.num_terms(), 7);
        for (_, c) in r3.terms() {
            assert_eq!(c, &rational(3));
        }
        assert_eq!(r3.coefficient(&[4, 8, 9]), rational(3));
        assert_eq!(r3.coefficient(&[3, 4, 9]), rational(3));
        assert_eq!(r3.coefficient(&[1, 2, 3]), rational(3));
        assert_eq!(
            tensor_from_poly(&r3).unwrap(),
            e_adjacency_tensor(&h).unwrap()
        );
        assert_eq!(r3.evaluate(&vec![rational(1); 9]).unwrap(), rational(21));
    }

    #[test]
    fn homogenize_edge_cases() {
        let uniform = Hypergraph::new(4, [vec![1, 2, 3], vec![2, 3, 4]]).unwrap();
        let r = homogenize(&uniform, &CoefficientPolicy::Handshake).unwrap();
        let p3 = layer_polynomials(&uniform).unwrap().pop().unwrap();
        assert_eq!(r, p3.with_var_count(6));

        let single = Hypergraph::new(1, [vec![1]]).unwrap();
        let r = homogenize(&single, &CoefficientPolicy::Explicit(vec![rational(4)])).unwrap();
        assert_eq!(r.render(1), "4 * z_1\n");

        assert_eq!(
            homogenize(&Hypergraph::empty(2), &CoefficientPolicy::Handshake).unwrap_err(),
            Error::NoEdges
        );
    }

    #[test]
    fn evaluation() {
        let p1 = poly_from_tensor(&layer_tensor_raw(&worked_layer(1), 1).unwrap());
        let mut x = vec![rational(0); 7];
        x[3] = rational(1);
        x[4] = rational(1);
        assert_eq!(p1.evaluate(&x).unwrap(), rational(2));
        assert_eq!(p1.evaluate(&vec![rational(0); 7]).unwrap(), rational(0));
        assert!(p1.evaluate(&[rational(1)]).is_err());
    }

    #[test]
    fn render_names_special_variables() {
        let r = homogenize(&fixtures::worked_example(), &CoefficientPolicy::Handshake).unwrap();
        let text = r.render(7);
        assert!(text.starts_with("3 * z_1*z_2*z_3\n"));
        assert!(text.contains("3 * z_4*y_1*y_2\n"));
    }

    #[test]
    fn dnf_worked() {
        let t = e_adjacency_tensor(&fixtures::worked_example()).unwrap();
        let expected = [
            edges(&[&[4], &[5]]),
            edges(&[&[3, 4], &[6, 7], &[4, 7]]),
            edges(&[&[1, 2, 3], &[1, 2, 7]]),
        ];
        for (j, want) in (1..=3).zip(expected) {
            assert_eq!(dnf_layer_extract(&t, 7, j).unwrap(), want);
            assert_eq!(dnf_layer_extract_by_evaluation(&t, 7, j).unwrap(), want);
        }
        assert!(dnf_layer_extract(&t, 7, 0).is_err());
        assert!(dnf_layer_extract(&t, 7, 4).is_err());
        assert!(dnf_layer_extract_by_evaluation(&t, 7, 4).is_err());
    }

    #[test]
    fn dnf_uniform_has_no_small_edges() {
        let uniform = Hypergraph::new(4, [vec![1, 2, 3], vec![2, 3, 4]]).unwrap();
        let t = e_adjacency_tensor(&uniform).unwrap();
        for j in 1..3 {
            assert!(dnf_layer_extract(&t, 4, j).unwrap().is_empty());
            assert!(dnf_layer_extract_by_evaluation(&t, 4, j)
                .unwrap()
                .is_empty());
        }
        assert_eq!(
            dnf_layer_extract_by_evaluation(&t, 4, 3).unwrap(),
            uniform.edge_set()
        );
    }
}
