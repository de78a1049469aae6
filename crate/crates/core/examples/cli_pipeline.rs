//! Driving the command-line front end from code: export a tensor with
//! `tensor`, then feed it back through `reconstruct`.
//!
//! Run with `cargo run --example cli_pipeline`.

use hyperlayer::cli::run;
use hyperlayer::fixtures::WORKED_EXAMPLE;

fn call(args: &[&str], input: &str) -> String {
    let (mut out, mut err) = (Vec::new(), Vec::new());
    let code = run(
        std::iter::once("hyperlayer").chain(args.iter().copied()),
        &mut input.as_bytes(),
        &mut out,
        &mut err,
    );
    assert_eq!(code, 0, "{}", String::from_utf8_lossy(&err));
    String::from_utf8(out).expect("utf-8 output")
}

fn main() {
    let coo = call(&["tensor"], WORKED_EXAMPLE);
    print!("$ hyperlayer tensor\n{coo}");
    print!(
        "$ hyperlayer reconstruct --n 7\n{}",
        call(&["reconstruct", "--n", "7"], &coo)
    );
    print!(
        "$ hyperlayer --format keyvalue compare\n{}",
        call(&["--format", "keyvalue", "compare"], WORKED_EXAMPLE)
    );
}
