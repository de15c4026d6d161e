//! A ∗ k[t] and A ∗ k[τ]: t-derivations, the bar differential as d/dτ, and
//! the double-derivation relations on the extended complex.

use ncdiff::algebra::dual_numbers;
use ncdiff::freeprod::{bar_vs_dtau_check, delta_tau_check, extended_suite, t_suite};

fn main() {
    let d = dual_numbers();
    let mut r = t_suite(&d, 2, 1);
    for n in 2..=3 {
        r.extend(bar_vs_dtau_check(&d, n));
        r.extend(delta_tau_check(&d, n));
    }
    r.extend(extended_suite(&d, 2, 2));
    print!("{r}");
}
