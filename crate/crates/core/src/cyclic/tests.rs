use super::*;
use crate::algebra::*;

#[test]
fn ground_field_is_trivial() {
    let f = Forms::new(ground_field());
    for m in CyclicMethod::ALL {
        assert_eq!(reduced_cyclic_dims(&f, m, 4), vec![0; 5], "{m}");
    }
}

#[test]
fn b_big_b_matches_lambda() {
    for (a, n) in [(dual_numbers(), 5), (group_algebra_cyclic(2), 5), (matrix_algebra(2), 4)] {
        let f = Forms::new(a);
        let lam = reduced_cyclic_dims(&f, CyclicMethod::Lambda, n);
        assert_eq!(reduced_cyclic_dims(&f, CyclicMethod::DB, n), lam, "{}", f.algebra().name());
    }
    let f = Forms::new(dual_numbers());
    assert_eq!(reduced_cyclic_dims(&f, CyclicMethod::Lambda, 5), vec![1, 0, 1, 0, 1, 0]);
}

#[test]
fn lowering_d_iota_exceeds_cyclic_by_pperp_cokernel() {
    // H_n(d + t·ι) = H̄C_n ⊕ P⊥ⁿ / dP⊥ⁿ⁻¹ with P⊥ = im (Id − κ)²
    let f = Forms::new(matrix_algebra(2));
    let got = reduced_cyclic_dims(&f, CyclicMethod::DIota, 3);
    let hc = reduced_cyclic_dims(&f, CyclicMethod::Lambda, 3);
    for n in 0..=3 {
        let q = harmonic_split_with(&f, n, SplitRule::Unipotent).unwrap().pperp;
        let prev = if n == 0 {
            0
        } else {
            let qp = harmonic_split_with(&f, n - 1, SplitRule::Unipotent).unwrap().pperp;
            crate::exactlin::rank(&f.reduced_d(n - 1).on_vectors(qp.basis()))
        };
        assert_eq!(got[n], hc[n] + q.dim() - prev, "n={n}");
    }
}

#[test]
fn raising_convention_is_acyclic_for_d() {
    for a in [dual_numbers(), matrix_algebra(2)] {
        let f = Forms::new(a);
        let got = reduced_cyclic_dims_with(&f, CyclicMethod::DIota, Convention::Raising, 3);
        assert_eq!(got, vec![0; 4]);
    }
}

#[test]
fn dual_numbers_slice_one() {
    let f = Forms::new(dual_numbers());
    let s = total_complex(&f, Variant::DIota, Convention::Raising, 2).unwrap();
    assert_eq!(s[1].dim(), 2);
    // d(x dx) = dx dx
    let sh = f.shape();
    assert_eq!(
        s[1].differential.apply(&[(sh.encode(1, &[1]), crate::Rational::one())]),
        vec![(sh.encode(0, &[1, 1]), crate::Rational::one())]
    );
}

#[test]
fn lambda_boundary_is_well_defined() {
    let a = truncated_poly(3);
    for n in 1..4 {
        let tgt = lambda_quotient(&a, n - 1);
        let dim = a.dim();
        let top = dim.pow(n as u32);
        let rel = crate::coinvariants::SignedOrbits::relation_map(dim.pow(n as u32 + 1), |i| {
            (i % dim * top + i / dim, n % 2 == 1)
        });
        let b = crate::drcomplex::bar::standard_boundary(&a, n);
        assert!(tgt.projection().then_after(&b).then_after(&rel).is_zero());
    }
}

#[test]
fn kappa_squared_split() {
    let f = Forms::new(dual_numbers());
    let s = harmonic_split(&f, 1).unwrap();
    assert_eq!((s.p.dim(), s.pperp.dim()), (2, 0));
    let m = Forms::new(matrix_algebra(2));
    assert_eq!(harmonic_split(&m, 0).unwrap().pperp.dim(), 0);
    // dims add up to 108 but the two pieces meet: Id − κ² is not semisimple
    assert_eq!(harmonic_split(&m, 3).unwrap_err(), CyclicError::NotDirectSum(3));
    let s = harmonic_split_with(&m, 3, SplitRule::Unipotent).unwrap();
    assert_eq!(s.p.dim() + s.pperp.dim(), 108);
    // x dx is a κ = −1 eigenvector inside P, where B = 2d fails
    let r = harmonic_identities_check(&f, 1, SplitRule::KappaSquared);
    let failed: Vec<&str> = r.failures().map(|c| c.name.as_str()).collect();
    assert_eq!(failed, vec!["B = (n+1) d on P [Id-k^2]"]);
}

#[test]
fn unipotent_split_identities() {
    for a in standard_algebras().into_iter().take(5) {
        let f = Forms::new(a);
        for n in 1..4 {
            let r = harmonic_identities_check(&f, n, SplitRule::Unipotent);
            assert!(r.all_pass(), "{r}");
        }
    }
}

#[test]
fn acyclicity_and_rescaling() {
    for a in [dual_numbers(), matrix_algebra(2), ground_field()] {
        let f = Forms::new(a);
        let r = acyclicity_checks(&f, 3, SplitRule::Unipotent);
        assert!(r.all_pass(), "{r}");
        let r = rescale_iso_check(&f, 3, SplitRule::Unipotent);
        assert!(r.all_pass(), "{r}");
    }
}
