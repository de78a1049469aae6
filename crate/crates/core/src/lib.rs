//! Layered e-adjacency tensors for general hypergraphs.
//!
//! A hypergraph whose edges have mixed cardinalities is split into uniform
//! layers, each layer is lifted to the largest cardinality `k_max` by
//! appending special vertices, and the result is stored as a single
//! symmetric tensor of order `k_max` and dimension `n + k_max - 1`. Vertex
//! degrees, edge cardinalities, and the hypergraph itself can be read back
//! from the tensor exactly.
//!
//! All tensor and polynomial values are exact rationals; floating point is
//! only used by the eigen-normalized layer tensor and the eigensolver.

pub mod banerjee;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod generate;
pub mod hypergraph;
pub mod layers;
pub mod matrix;
pub mod polynomial;
pub mod spectral;
pub mod symtensor;
pub mod uniformization;

pub use error::{Error, Result};
pub use hypergraph::{Hyperedge, Hypergraph, WeightedHypergraph};
pub use layers::LayerDecomposition;
pub use matrix::Matrix;
pub use polynomial::HomogeneousPolynomial;
pub use symtensor::SymTensor;
pub use uniformization::{CoefficientPolicy, LayeredUniform};

/// Exact rational scalar used throughout.
pub type Rational = num_rational::BigRational;

/// Shorthand for an integer-valued [`Rational`].
pub fn rational(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// Shorthand for `num / den`.
pub fn ratio(num: i64, den: i64) -> Rational {
    Rational::new(num.into(), den.into())
}
