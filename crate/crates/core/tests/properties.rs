//! Invariants of the construction on arbitrary small hypergraphs.

use std::collections::BTreeSet;

use num_traits::{ToPrimitive, Zero};
use proptest::prelude::*;

use hyperlayer::banerjee::banerjee_tensor;
use hyperlayer::layers::{decompose, direct_sum};
use hyperlayer::polynomial::{
    dnf_layer_extract, dnf_layer_extract_by_evaluation, homogenize, poly_from_tensor,
    tensor_from_poly,
};
use hyperlayer::spectral::{check_eigenpair, layer_bound, power_iteration, DEFAULT_MAX_ITER};
use hyperlayer::symtensor::layer_tensor_degree_normalized;
use hyperlayer::uniformization::{
    e_adjacency_tensor, layer_counts_from_tensor, layered_uniform, layered_uniform_direct,
    reconstruct, vertex_degrees_from_tensor,
};
use hyperlayer::{rational, CoefficientPolicy, Hyperedge, Hypergraph, Rational, SymTensor};

fn hypergraph(max_n: usize, max_k: usize) -> impl Strategy<Value = Hypergraph> {
    (1..=max_n).prop_flat_map(move |n| {
        let k = max_k.min(n);
        let edge = proptest::sample::subsequence((1..=n).collect::<Vec<_>>(), 1..=k);
        proptest::collection::btree_set(edge, 1..8)
            .prop_map(move |edges| Hypergraph::new(n, edges).expect("valid edges"))
    })
}

fn uniform_hypergraph(max_n: usize, max_k: usize) -> impl Strategy<Value = Hypergraph> {
    (1..=max_k).prop_flat_map(move |k| {
        (k..=max_n.max(k)).prop_flat_map(move |n| {
            let edge = proptest::sample::subsequence((1..=n).collect::<Vec<_>>(), k);
            proptest::collection::btree_set(edge, 1..8)
                .prop_map(move |edges| Hypergraph::new(n, edges).expect("valid edges"))
        })
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn text_format_roundtrips(h in hypergraph(10, 5)) {
        let parsed: Hypergraph = h.to_string().parse().unwrap();
        prop_assert_eq!(parsed, h);
    }

    #[test]
    fn layers_partition_the_edges(h in hypergraph(10, 5)) {
        let d = decompose(&h).unwrap();
        prop_assert_eq!(d.counts().iter().sum::<usize>(), h.num_edges());
        for (k, layer) in (1..=d.k_max()).zip(d.layers()) {
            prop_assert!(layer.num_edges() == 0 || layer.is_uniform(k));
            prop_assert_eq!(layer.n(), h.n());
        }
        prop_assert_eq!(direct_sum(d.layers()).unwrap().edge_set(), h.edge_set());
    }

    #[test]
    fn handshake(h in hypergraph(12, 5)) {
        let t = e_adjacency_tensor(&h).unwrap();
        let k_max = h.k_max().unwrap();
        prop_assert_eq!(t.total_sum(), rational((k_max * h.num_edges()) as i64));
        prop_assert_eq!(t.num_keys(), h.num_edges());
    }

    #[test]
    fn degrees_and_cardinalities(h in hypergraph(12, 5)) {
        let t = e_adjacency_tensor(&h).unwrap();
        let degrees: Vec<u64> = h.degrees().into_iter().map(|d| d as u64).collect();
        prop_assert_eq!(vertex_degrees_from_tensor(&t, h.n()).unwrap(), degrees);

        let counts = layer_counts_from_tensor(&t, h.n()).unwrap();
        let k_max = h.k_max().unwrap();
        for i in 1..=k_max {
            let small = h.edges().iter().filter(|e| e.len() <= i).count() as u64;
            prop_assert_eq!(counts.cumulative[i - 1], small);
            let exact = h.edges().iter().filter(|e| e.len() == i).count() as u64;
            prop_assert_eq!(counts.per_size[i - 1], exact);
        }
    }

    #[test]
    fn reconstruction(h in hypergraph(12, 5)) {
        let t = e_adjacency_tensor(&h).unwrap();
        prop_assert_eq!(reconstruct(&t, h.n()).unwrap().edge_set(), h.edge_set());
        let parsed: SymTensor<Rational> = t.to_coo().parse().unwrap();
        prop_assert_eq!(parsed, t);
    }

    #[test]
    fn polynomial_route_matches_tensor(h in hypergraph(10, 5)) {
        let r = homogenize(&h, &CoefficientPolicy::Handshake).unwrap();
        let t = e_adjacency_tensor(&h).unwrap();
        prop_assert_eq!(&tensor_from_poly(&r).unwrap(), &t);
        prop_assert_eq!(poly_from_tensor(&t), r.clone());
        let ones = vec![rational(1); r.var_count()];
        let k_max = h.k_max().unwrap();
        prop_assert_eq!(r.evaluate(&ones).unwrap(), rational((k_max * h.num_edges()) as i64));
    }

    #[test]
    fn augment_merge_route_matches_direct(h in hypergraph(10, 5)) {
        for policy in [CoefficientPolicy::Handshake, CoefficientPolicy::Unit] {
            let a = layered_uniform(&h, &policy).unwrap();
            let b = layered_uniform_direct(&h, &policy).unwrap();
            prop_assert_eq!(a.sorted_triples(), b.sorted_triples());
            prop_assert_eq!(a.tensor(), b.tensor());
        }
    }

    #[test]
    fn dnf_routes_agree(h in hypergraph(9, 4)) {
        let t = e_adjacency_tensor(&h).unwrap();
        let mut union = BTreeSet::new();
        for j in 1..=h.k_max().unwrap() {
            let structural = dnf_layer_extract(&t, h.n(), j).unwrap();
            let evaluated = dnf_layer_extract_by_evaluation(&t, h.n(), j).unwrap();
            prop_assert_eq!(&structural, &evaluated);
            prop_assert!(structural.iter().all(|e: &Hyperedge| e.len() == j));
            let before = union.len();
            union.extend(structural.iter().cloned());
            prop_assert_eq!(union.len(), before + structural.len());
        }
        prop_assert_eq!(union, h.edge_set());
    }

    #[test]
    fn banerjee_slices_recover_degrees(h in hypergraph(8, 4)) {
        let b = banerjee_tensor(&h).unwrap();
        for v in 1..=h.n() {
            prop_assert_eq!(b.slice_sum(v).unwrap(), rational(h.degree(v).unwrap() as i64));
        }
        let sizes: usize = h.edges().iter().map(Hyperedge::len).sum();
        prop_assert_eq!(b.total_sum(), rational(sizes as i64));
    }

    #[test]
    fn banerjee_collapses_on_uniform(h in uniform_hypergraph(8, 4)) {
        let k = h.k_max().unwrap();
        prop_assert_eq!(banerjee_tensor(&h).unwrap(), layer_tensor_degree_normalized(&h, k).unwrap());
    }

    #[test]
    fn dominant_eigenvalue_within_bound(h in hypergraph(9, 4)) {
        prop_assume!(h.k_max().unwrap() >= 2);
        let t = e_adjacency_tensor(&h).unwrap().to_f64();
        let e = power_iteration(&t, 1e-10, DEFAULT_MAX_ITER).unwrap();
        let bound = layer_bound(&h).unwrap();
        prop_assert!(e.upper <= bound.bound as f64 + 1e-8);
        prop_assert!(e.lower >= -1e-12);
        prop_assert!(e.x.iter().all(|&v| v >= 0.0));
        if e.converged {
            prop_assert!(check_eigenpair(&t, e.lambda, &e.x, 1e-6).unwrap().passed, "{:?}", e);
        }
        let in_some_disk = bound.disks.iter().any(|d| {
            let c = d.center.to_f64().unwrap();
            let r = d.radius.to_f64().unwrap();
            (e.lambda - c).abs() <= r + 1e-8
        });
        prop_assert!(in_some_disk);
    }

    #[test]
    fn zero_tensor_has_no_keys(n in 1usize..6, m in 1usize..4) {
        let t: SymTensor<Rational> = SymTensor::zeros(m, n);
        prop_assert!(t.is_zero() && t.total_sum().is_zero());
    }
}
