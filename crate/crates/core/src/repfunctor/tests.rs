use super::*;

fn x(m: usize, ks: &[usize]) -> NCWord {
    NCWord::xs(m, ks)
}

#[test]
fn ev_of_generators() {
    let v = Vars::new(2, 2);
    let e = ev(&x(2, &[1]), 2);
    assert_eq!(e, PolyMatrix::generic(2, |i, j| v.x(0, i, j)));
    let a = ev(&x(2, &[1, 2]), 2).trace();
    let b = ev(&x(2, &[2, 1]), 2).trace();
    assert_eq!(a, b);
    // Tr(X1 X2) has d² = 4 terms.
    assert_eq!(a.terms.len(), 4);
}

#[test]
fn scalar_case() {
    let v = Vars::new(1, 1);
    let w = NCForm::chain(&x(1, &[1]), &[x(1, &[1])]);
    let want = EqForm::dvar(v.x(0, 0, 0)).mul_poly(&Poly::var(v.x(0, 0, 0)));
    assert_eq!(trace_ev(&w, 1, 1), want);
    // 1×1 matrices commute, so d_g vanishes.
    let w2 = NCForm::chain(&x(1, &[1, 1]), &[x(1, &[1]), x(1, &[1, 1])]);
    assert!(d_g(&trace_ev(&w, 1, 1), 1, 1).is_zero());
    assert!(d_g(&trace_ev(&w2, 1, 1), 1, 1).is_zero());
}

#[test]
fn de_rham_compatibility_sample() {
    let w = NCForm::chain(&x(2, &[1]), &[x(2, &[2])]);
    assert_eq!(trace_ev(&w.d(), 2, 2), d_dr(&trace_ev(&w, 2, 2), 2, 2));
    assert!(!trace_ev(&w.d(), 2, 2).is_zero());
}

#[test]
fn d_g_examples() {
    let zero_form = trace_ev(&NCForm::from_word(&x(2, &[1, 2, 1])), 2, 2);
    assert!(zero_form.degrees() == vec![0]);
    assert!(d_g(&zero_form, 2, 2).is_zero());
    let w = trace_ev(&NCForm::chain(&x(2, &[1]), &[x(2, &[2]), x(2, &[1])]), 2, 2);
    assert!(!d_g(&w, 2, 2).is_zero());
    assert!(d_g(&d_g(&w, 2, 2), 2, 2).is_zero());
}

#[test]
fn rep_identity_examples() {
    // m = 2, d = 1: everything commutes.
    let a0 = x(2, &[1]);
    let rest = [x(2, &[2])];
    let w = NCForm::chain(&a0, &rest);
    assert!(trace_ev(&i_delta_word(&a0, &rest), 2, 1).is_zero());
    assert!(d_g(&trace_ev(&w, 2, 1), 2, 1).is_zero());

    // m = 1, d = 2, x dx: [X, X] = 0.
    let a0 = x(1, &[1]);
    let rest = [x(1, &[1])];
    assert!(trace_ev(&i_delta_word(&a0, &rest), 1, 2).is_zero());
    assert!(d_g(&trace_ev(&NCForm::chain(&a0, &rest), 1, 2), 1, 2).is_zero());

    // m = 2, d = 2, x1 dx2: d_g Tr(X1 dX2) = Tr((X2 X1 − X1 X2) Y), expanded
    // with plain matrix products.
    let a0 = x(2, &[1]);
    let rest = [x(2, &[2])];
    let rhs = d_g(&trace_ev(&NCForm::chain(&a0, &rest), 2, 2), 2, 2);
    let v = Vars::new(2, 2);
    let (x1, x2) = (
        PolyMatrix::generic(2, |i, j| v.x(0, i, j)),
        PolyMatrix::generic(2, |i, j| v.x(1, i, j)),
    );
    let y = PolyMatrix::generic(2, |i, j| v.y(i, j));
    let mut want = x2.mul(&x1).mul(&y).trace();
    want.add_scaled(&x1.mul(&x2).mul(&y).trace(), &Rational::from_int(-1));
    assert!(!want.is_zero());
    assert_eq!(rhs, EqForm::from_poly(&want));
    assert_eq!(trace_ev(&i_delta_word(&a0, &rest), 2, 2), rhs);
}

#[test]
fn commutators_and_d() {
    let a = NCForm::chain(&x(2, &[1]), &[x(2, &[2])]);
    let b = NCForm::chain(&NCWord::new(2, vec![Gen::T]), &[x(2, &[1, 2])]);
    let c = a.graded_commutator(&b);
    assert!(!c.is_zero());
    assert!(trace_ev(&c, 2, 2).is_zero());
    assert!(a.d().d().is_zero());
    assert!(NCForm::t().d().is_zero());
}

#[test]
fn suite_passes_small() {
    for m in 1..=2 {
        for d in 1..=2 {
            let rep = rep_suite(&RepConfig {
                m,
                d,
                max_word_len: 3,
                seed: 7,
            });
            assert!(rep.all_pass(), "{}", rep.to_text());
        }
    }
}

#[test]
fn odd_degree_sign() {
    let (alt, red, total) = contraction_sign_probe(2, 2, 3);
    assert!(total > 0);
    assert_eq!(red, 0);
    assert!(alt > 0);
}
