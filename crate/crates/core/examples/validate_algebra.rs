//! Load an algebra from JSON, check the axioms and print a few invariants.
//!
//! cargo run --example validate_algebra [path.json]

use ncdiff::algebra::{center, commutator_space, solve_derivations, solve_double_derivations};
use ncdiff::io::{algebra_to_json, read_algebra};

fn main() {
    let path = std::env::args()
        .nth(1)
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/examples/data/dual_numbers.json").into());
    let alg = match read_algebra(path.as_ref()) {
        Ok(a) => a,
        Err(e) => {
            eprintln!("{path}: {e}");
            std::process::exit(1);
        }
    };
    println!("{}: dim {}", alg.name(), alg.dim());
    println!("  center       {}", center(&alg).dim());
    println!("  [A,A]        {}", commutator_space(&alg).dim());
    println!("  Der(A)       {}", solve_derivations(&alg).len());
    println!("  Der(A, A⊗A)  {}", solve_double_derivations(&alg).len());
    println!("\nround trip:\n{}", algebra_to_json(&alg));
}
