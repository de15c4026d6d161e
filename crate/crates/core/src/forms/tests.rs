use super::*;
use crate::algebra::{delta, dual_numbers, matrix_algebra, standard_algebras};

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

fn x() -> Vec<(usize, Rational)> {
    vec![(1, q(1))]
}

#[test]
fn index_roundtrip() {
    let sh = Shape { dim: 4 };
    for n in 0..4 {
        for idx in 0..sh.form_dim(n) {
            let (i0, s) = sh.decode(n, idx);
            assert_eq!(sh.encode(i0, &s), idx);
        }
    }
}

#[test]
fn dual_number_products() {
    let f = Forms::new(dual_numbers());
    let dx = f.basis_form(0, &[1]);
    let xdx = f.basis_form(1, &[1]);
    // (dx)·x = −x dx
    let r = f.right_mul(&dx, &x()).unwrap();
    assert_eq!(r.coeffs, vec![(f.shape().encode(1, &[1]), q(-1))]);
    assert_eq!(f.right_mul(&xdx, &[(0, q(1))]).unwrap(), xdx);
    // dx ∧ x dx = −x dx dx
    let w = f.wedge(&dx, &xdx).unwrap();
    assert_eq!(w.coeffs, vec![(f.shape().encode(1, &[1, 1]), q(-1))]);
}

#[test]
fn dual_number_differentials() {
    let f = Forms::new(dual_numbers());
    let sh = f.shape();
    let xdx = f.basis_form(1, &[1]);
    assert_eq!(f.apply_d(&xdx).unwrap(), f.basis_form(0, &[1, 1]));
    assert!(f.apply_d(&f.basis_form(0, &[1])).unwrap().is_zero());
    for u in 0..2 {
        assert!(f.apply_b(&f.basis_form(u, &[1])).unwrap().is_zero());
    }
    let b = f.apply_b(&f.basis_form(0, &[1, 1])).unwrap();
    assert_eq!(b.coeffs, vec![(sh.encode(1, &[1]), q(2))]);
    assert!(f.apply_b(&f.basis_form(1, &[1, 1])).unwrap().is_zero());
    assert_eq!(f.apply_kappa(&f.basis_form(0, &[1])).unwrap(), f.basis_form(0, &[1]));
    let k = f.apply_kappa(&xdx).unwrap();
    assert_eq!(k.coeffs, vec![(sh.encode(1, &[1]), q(-1))]);
    // B(x dx) = 0
    assert!(f.connes_b(1).apply(&xdx.coeffs).is_empty());
    // B on Ω̄⁰ is d
    assert_eq!(f.connes_b(0).column(0), &[(sh.encode(0, &[1]), q(1))][..]);
}

#[test]
fn big_i_on_one_forms() {
    let a = dual_numbers();
    let del = delta(&a);
    let f = Forms::new(a);
    let m = f.big_i(&del, 1);
    let blk = m.block(0, 0).unwrap();
    // 𝐢_Δ(u dx) = u⊗x − ux⊗1
    assert_eq!(blk.column(0), &[(1, q(1)), (2, q(-1))][..]);
    assert_eq!(blk.column(1), &[(3, q(1))][..]);
}

#[test]
fn small_identities() {
    for a in standard_algebras().into_iter().take(4) {
        let f = Forms::new(a);
        for n in 0..4 {
            let dn = f.dim(n);
            let id = LinMap::identity(dn);
            let bd = f.b(n + 1).then_after(&f.d(n));
            let mut lhs = bd;
            if n > 0 {
                lhs = lhs.plus(&f.d(n - 1).then_after(&f.b(n)));
            }
            assert_eq!(lhs, id.minus(&f.kappa(n)), "{} n={n}", f.algebra().name());
        }
    }
}

#[test]
fn contraction_formula_is_rotated_big_i() {
    for a in standard_algebras().into_iter().take(5) {
        let del = delta(&a);
        let f = Forms::new(a);
        for n in 1..4 {
            let bi = f.reduced_contraction(&del, n);
            assert_eq!(bi, f.rotate(&f.big_i(&del, n)), "{} n={n}", f.algebra().name());
            // with Δ(a) = 1⊗a − a⊗1 the contraction is −N∘b
            assert_eq!(bi, f.iota_nb(n).neg(), "{} n={n}", f.algebra().name());
        }
    }
}

#[test]
fn alternating_formula_low_degrees() {
    for a in standard_algebras().into_iter().take(5) {
        let f = Forms::new(a);
        for n in [1, 2] {
            assert_eq!(f.bidelta_contraction(n), f.iota_nb(n).neg());
        }
    }
}

#[test]
fn contraction_kills_commutators() {
    let a = matrix_algebra(2);
    let del = delta(&a);
    let f = Forms::new(a);
    let n = 2;
    let iota = f.reduced_contraction(&del, n);
    for p in 0..=n {
        for i in 0..f.dim(p) {
            for j in 0..f.dim(n - p) {
                let c = f.graded_commutator(&[(i, q(1))], p, &[(j, q(1))], n - p);
                assert!(iota.apply(&c).is_empty());
            }
        }
    }
}

#[test]
fn m2_dims() {
    let f = Forms::new(matrix_algebra(2));
    assert_eq!(f.dim(3), 108);
}
