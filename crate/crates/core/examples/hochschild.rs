//! Hochschild homology three ways: (Ω, b), the normalized bar complex, and
//! ker ι_Δ on the de Rham quotient.

use ncdiff::algebra::standard_algebras;
use ncdiff::drcomplex::{dr_dim, hochschild_homology, HochschildMethod};
use ncdiff::forms::Forms;

fn main() {
    for alg in standard_algebras() {
        let f = Forms::new(alg.clone());
        let n_max = if alg.dim() >= 4 { 2 } else { 4 };
        println!("{}", alg.name());
        for n in 0..=n_max {
            let hh: Vec<usize> = HochschildMethod::ALL
                .iter()
                .map(|&m| hochschild_homology(&f, n, m))
                .collect();
            println!("  n={n}  HH {hh:?}  dim DR = {}", dr_dim(&f, n));
        }
    }
}
