//! Eigenvalue bounds and the dominant H-eigenvalue of layered tensors,
//! including a family where the special-vertex degree dominates the bound.
//!
//! Run with `cargo run --example spectral_bounds`.

use hyperlayer::generate::{complete_uniform, singletons_plus_edge};
use hyperlayer::spectral::{
    check_eigenpair, layer_bound, power_iteration, DEFAULT_MAX_ITER, DEFAULT_TOL,
};
use hyperlayer::uniformization::e_adjacency_tensor;
use hyperlayer::{fixtures, Hypergraph};

fn report(name: &str, h: &Hypergraph) -> hyperlayer::Result<()> {
    let b = layer_bound(h)?;
    let t = e_adjacency_tensor(h)?.to_f64();
    let e = power_iteration(&t, DEFAULT_TOL, DEFAULT_MAX_ITER)?;
    let ok = check_eigenpair(&t, e.lambda, &e.x, 1e-8)?.passed;
    println!(
        "{name:<22} delta={} delta*={} bound={}  lambda={:.10} ({} iterations, eigenpair check {ok})",
        b.delta, b.delta_star, b.bound, e.lambda, e.iterations
    );
    Ok(())
}

fn main() -> hyperlayer::Result<()> {
    let h = fixtures::worked_example();
    let b = layer_bound(&h)?;
    println!("Gershgorin disks of the worked-example tensor (center, radius):");
    for (i, d) in b.disks.iter().enumerate() {
        println!("  {:>2}: ({}, {})", i + 1, d.center, d.radius);
    }
    println!();
    report("worked example", &h)?;
    report("single 3-edge", &Hypergraph::new(3, [vec![1, 2, 3]])?)?;
    for r in 2..=4 {
        report(&format!("complete {r}-uniform"), &complete_uniform(r))?;
    }
    for m in [2, 5, 10] {
        report(
            &format!("{m} singletons + 3-edge"),
            &singletons_plus_edge(m, 3),
        )?;
    }
    Ok(())
}
