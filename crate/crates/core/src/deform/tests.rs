use super::*;
use crate::algebra::{delta, dual_numbers, matrix_algebra, radical_square_zero, standard_algebras};

#[test]
fn star_product_examples() {
    let alg = dual_numbers();
    let one = Rational::one();
    let star = StarAlgebra::new(&alg, Cochain2::zero(&alg)).unwrap();
    let x = star.element(&[(1, one.clone())], &[]);
    // x ⋆ x = x² = 0 with β = 0
    assert!(star.mul(&x, &x).unwrap().coords.is_empty());
    // tensor parts multiply to zero
    let w = star.element(&[], &[(3, one.clone())]);
    assert!(star.mul(&w, &w).unwrap().coords.is_empty());
    // (1,0) ⋆ (v,w) = (v, w + β(1,v)) with β(1, x) = 1⊗1
    let beta = Cochain2::from_vec(&alg, &[((0 * 2 + 1) * 4, one.clone())]);
    let s = StarAlgebra::new(&alg, beta).unwrap();
    let got = s.mul(&s.basis(0), &x).unwrap();
    assert_eq!(got.coords, vec![(1, one.clone()), (2, one)]);
}

#[test]
fn parent_mismatch() {
    let a = dual_numbers();
    let b = dual_numbers();
    let star = StarAlgebra::new(&a, Cochain2::zero(&a)).unwrap();
    let foreign = StarElement { parent: b.id(), coords: vec![] };
    assert!(matches!(star.mul(&star.basis(0), &foreign), Err(DeformError::ParentMismatch { .. })));
    assert!(matches!(StarAlgebra::new(&a, Cochain2::zero(&b)), Err(DeformError::ParentMismatch { .. })));
}

#[test]
fn separable_algebra_is_rigid() {
    let m2 = matrix_algebra(2);
    assert_eq!(h2_dimension(&m2), 0);
    assert_eq!(h2_unnormalized(&m2), 0);
}

#[test]
fn suite_passes() {
    for alg in standard_algebras().into_iter().filter(|a| a.dim() <= 4) {
        let r = deform_suite(&alg, 11);
        let bad: Vec<_> = r.failures().map(|c| format!("{}: {} vs {}", c.name, c.expected, c.got)).collect();
        assert!(bad.is_empty(), "{}: {bad:?}", alg.name());
    }
}

#[test]
fn non_derivation_witness() {
    let alg = dual_numbers();
    // Θ(x) = 1⊗1 violates Leibniz at (x, x): Θ(x²) = 0 ≠ 1⊗x + x⊗1
    let theta = LinMap::from_columns(4, vec![vec![(0, Rational::one())]]);
    let out = del_der_automorphism_check(&alg, &theta);
    assert!(!out.automorphism);
    assert_eq!(out.leibniz_witness, Some((1, 1)));
    assert_eq!(out.multiplicativity_witness, Some((1, 1)));
    assert!(del_der_automorphism_check(&alg, &delta(&alg).matrix).automorphism);
}

#[test]
fn outer_deformations_of_radical_square_zero() {
    let alg = radical_square_zero(2);
    assert_eq!(h2_dimension(&alg), 9);
    assert_eq!(h2_unnormalized(&alg), 9);
    let r = deform_suite(&alg, 3);
    assert!(r.all_pass());
    // a cocycle that is not a coboundary gives a star product not equivalent to β = 0
    let z2 = kernel(&coboundary(&alg, 2, false));
    let b2 = Subspace::column_space(&coboundary(&alg, 1, false));
    let v = z2.basis().iter().find(|v| !b2.contains(v)).unwrap();
    let beta = Cochain2::from_vec(&alg, v);
    assert!(is_associative(&alg, &beta));
    assert!(!equivalence_check(&alg, &beta, &Cochain2::zero(&alg)));
}
