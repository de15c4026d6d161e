//! Reduced cyclic homology from the (b, B) total complex and from Connes'
//! λ-complex, next to the d + tι_Δ complex.

use ncdiff::algebra::{dual_numbers, group_algebra_cyclic, matrix_algebra};
use ncdiff::cyclic::{reduced_cyclic_dims_with, Convention, CyclicMethod};
use ncdiff::forms::Forms;

fn main() {
    for alg in [dual_numbers(), group_algebra_cyclic(2), matrix_algebra(2)] {
        let f = Forms::new(alg.clone());
        let n = 3;
        println!("{}", alg.name());
        for m in CyclicMethod::ALL {
            let dims = reduced_cyclic_dims_with(&f, m, Convention::Lowering, n);
            println!("  {:<7} {dims:?}", m.name());
        }
        let raising = reduced_cyclic_dims_with(&f, CyclicMethod::DB, Convention::Raising, n);
        println!("  bB with t raising degree {raising:?}");
    }
}
