//! Harmonic decomposition Ω̄ⁿ = P ⊕ P⊥ under both split rules.

use ncdiff::algebra::{dual_numbers, matrix_algebra, truncated_poly};
use ncdiff::cyclic::{harmonic_identities_check, harmonic_split_with, SplitRule};
use ncdiff::forms::Forms;

fn main() {
    for alg in [dual_numbers(), truncated_poly(3), matrix_algebra(2)] {
        let f = Forms::new(alg.clone());
        println!("{}", alg.name());
        for n in 1..=3 {
            for rule in [SplitRule::Unipotent, SplitRule::KappaSquared] {
                match harmonic_split_with(&f, n, rule) {
                    Ok(s) => {
                        let r = harmonic_identities_check(&f, n, rule);
                        println!(
                            "  n={n} {:<10} dim P = {:>3}, dim P⊥ = {:>3}, identities hold: {}",
                            rule.name(),
                            s.p.dim(),
                            s.pperp.dim(),
                            r.all_pass()
                        );
                    }
                    Err(e) => println!("  n={n} {:<10} {e}", rule.name()),
                }
            }
        }
    }
}
