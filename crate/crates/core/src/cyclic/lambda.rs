//! Connes' complex `C^λₙ = A^{⊗(n+1)} / (Id − (−1)ⁿT)` with the boundary
//! induced by the Hochschild `b`. It is built from the multiplication table
//! and shares nothing with the forms operators.

use crate::algebra::FinDimAlgebra;
use crate::coinvariants::SignedOrbits;
use crate::drcomplex::bar::standard_boundary;
use crate::exactlin::{homology_dim, LinMap};

/// Orbits of `T(a₀⊗⋯⊗aₙ) = aₙ⊗a₀⊗⋯⊗aₙ₋₁` twisted by `(−1)ⁿ`.
pub fn lambda_quotient(alg: &FinDimAlgebra, n: usize) -> SignedOrbits {
    let dim = alg.dim();
    let top = dim.pow(n as u32);
    SignedOrbits::new(dim.pow(n as u32 + 1), |i| {
        (i % dim * top + i / dim, n % 2 == 1)
    })
}

/// `b: C^λₙ → C^λₙ₋₁`.
pub fn lambda_boundary(alg: &FinDimAlgebra, n: usize, src: &SignedOrbits, tgt: &SignedOrbits) -> LinMap {
    if n == 0 {
        return LinMap::zero(0, src.dim());
    }
    let b = standard_boundary(alg, n).select_columns(src.reps());
    let proj = tgt.projection();
    proj.then_after(&b)
}

/// `dim HCₙ(A)` for `n = 0..=n_max` (unreduced).
pub fn lambda_complex_dims(alg: &FinDimAlgebra, n_max: usize) -> Vec<usize> {
    let quots: Vec<SignedOrbits> = (0..=n_max + 1).map(|n| lambda_quotient(alg, n)).collect();
    let bs: Vec<LinMap> = (0..=n_max + 1)
        .map(|n| {
            let tgt = if n == 0 { &quots[0] } else { &quots[n - 1] };
            lambda_boundary(alg, n, &quots[n], tgt)
        })
        .collect();
    (0..=n_max)
        .map(|n| homology_dim(&bs[n + 1], &bs[n]).expect("b descends to a complex"))
        .collect()
}
