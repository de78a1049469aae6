//! Layer polynomials and their homogenization into one degree-k_max
//! polynomial whose coefficients are the tensor entries times their
//! multiplicities.
//!
//! Run with `cargo run --example homogenization`.

use hyperlayer::polynomial::{homogenize, layer_polynomials, tensor_from_poly};
use hyperlayer::uniformization::e_adjacency_tensor;
use hyperlayer::{fixtures, rational, CoefficientPolicy};

fn main() -> hyperlayer::Result<()> {
    let h = fixtures::worked_example();
    for (k, p) in (1..).zip(layer_polynomials(&h)?) {
        println!("P_{k}:");
        print!("{}", p.render(h.n()));
    }

    let r = homogenize(&h, &CoefficientPolicy::Handshake)?;
    println!("\nhomogenized R (z = vertices, y = special variables):");
    print!("{}", r.render(h.n()));

    let ones = vec![rational(1); r.var_count()];
    println!("R(1, ..., 1) = {}", r.evaluate(&ones)?);
    println!(
        "tensor of R equals the layered tensor: {}",
        tensor_from_poly(&r)? == e_adjacency_tensor(&h)?
    );
    Ok(())
}
