//! Second Hochschild cohomology with coefficients in A⊗A, star products and
//! equivalence of cocycles.

use ncdiff::algebra::{dual_numbers, matrix_algebra, radical_square_zero};
use ncdiff::deform::{deform_suite, h2_dimension, h2_unnormalized, is_associative, Cochain2};

fn main() {
    for alg in [dual_numbers(), matrix_algebra(2), radical_square_zero(2)] {
        println!(
            "{}: H² = {} (un-normalized {}), zero cochain associative: {}",
            alg.name(),
            h2_dimension(&alg),
            h2_unnormalized(&alg),
            is_associative(&alg, &Cochain2::zero(&alg))
        );
    }
    let r = deform_suite(&radical_square_zero(2), 3);
    println!("{} checks, {} failed", r.checks.len(), r.failures().count());
}
