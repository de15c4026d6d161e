//! d, b and κ on noncommutative forms of k[x]/(x³), and the identities they satisfy.

use ncdiff::algebra::truncated_poly;
use ncdiff::forms::Forms;
use ncdiff::suites::identities_check;
use ncdiff::LinMap;

fn main() {
    let f = Forms::new(truncated_poly(3));
    // basis 1, x, x²; the form x dx dx² is a₀ = x, slots (x, x²)
    let w = f.basis_form(1, &[1, 2]);
    let dw = f.apply_d(&w).unwrap();
    let bw = f.apply_b(&w).unwrap();
    let kw = f.apply_kappa(&w).unwrap();
    println!("ω = x dx dx²: |dω| = {} terms, |bω| = {}, |κω| = {}", dw.coeffs.len(), bw.coeffs.len(), kw.coeffs.len());

    for n in 1..=3 {
        let lhs = f.b(n + 1).then_after(&f.d(n)).plus(&f.d(n - 1).then_after(&f.b(n)));
        let rhs = LinMap::identity(f.dim(n)).minus(&f.kappa(n));
        println!("n={n}: dim Ωⁿ = {:>3}, bd+db = Id−κ: {}", f.dim(n), lhs == rhs);
    }
    let kd = f.kappa(2).power(2).then_after(&f.d(1));
    println!("κ²d = d on Ω¹: {}", kd == *f.d(1));

    let r = identities_check(&f, 3);
    print!("{r}");
}
