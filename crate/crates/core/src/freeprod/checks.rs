use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    add_sum, add_term, big_theta_t, cyclic_quotient, extend_t, operator_matrix, single, theta_t,
    AlgebraBase, Commutator, CyclicQuotient, FreeProduct, FreeprodError, GradedBase, Variable,
    WordDerivation, WordOperator, WordSum,
};
use crate::algebra::{solve_derivations, solve_double_derivations, Derivation, FinDimAlgebra};
use crate::drcomplex::bar::{bar_prime_boundary, standard_boundary};
use crate::exactlin::{rank, LinMap, Rational, SparseVec};
use crate::report::{Check, Report};

fn err_check(name: &str, alg: &str, e: FreeprodError) -> Check {
    Check::text(name, alg, None, "no error".into(), e.to_string())
}

/// Words with at most `j_max` variables.
fn words_upto(fp: &FreeProduct, j_max: usize, max_deg: Option<i64>) -> Vec<Vec<usize>> {
    (0..=j_max).flat_map(|j| fp.basis_words(j, max_deg)).collect()
}

/// Number of words on which two operators differ.
pub(crate) fn mismatches(
    fp: &FreeProduct,
    words: &[Vec<usize>],
    lhs: &dyn WordOperator,
    rhs: &dyn WordOperator,
) -> Result<usize, FreeprodError> {
    let mut bad = 0;
    for w in words {
        if lhs.apply_word(fp, w)? != rhs.apply_word(fp, w)? {
            bad += 1;
        }
    }
    Ok(bad)
}

pub(crate) fn nonvanishing(
    fp: &FreeProduct,
    words: &[Vec<usize>],
    op: &dyn WordOperator,
) -> Result<usize, FreeprodError> {
    let mut bad = 0;
    for w in words {
        if !op.apply_word(fp, w)?.is_empty() {
            bad += 1;
        }
    }
    Ok(bad)
}

/// `F(1) = 0` and `F(u v w) = F(u) v w ± u v F(w)` on all pairs of basis
/// words that leave room for `F`.
pub fn t_derivation_check(fp: &FreeProduct, f: &dyn WordOperator, name: &str) -> Report {
    let alg = fp.base.name();
    let mut r = Report::new();
    let unit = f.apply_word(fp, &[0]);
    r.push(Check::holds(&format!("{name}: F(1) = 0"), &alg, None, matches!(unit, Ok(s) if s.is_empty())));
    let room = fp.cap as i64 - f.var_shift().max(0) - 1;
    if room < 0 {
        r.note(format!("{name}: cap {} leaves no room for the Leibniz check", fp.cap));
        return r;
    }
    let room = room as usize;
    let vdeg = fp.var.degree();
    let run = || -> Result<usize, FreeprodError> {
        let mut bad = 0;
        for ju in 0..=room {
            for u in fp.basis_words(ju, None) {
                for v in words_upto(fp, room - ju, None) {
                    let lhs = f.apply_word(fp, &fp.splice(&u, &v)?)?;
                    let mut rhs = WordSum::new();
                    for (x, c) in f.apply_word(fp, &u)? {
                        add_term(&mut rhs, fp.splice(&x, &v)?, &c);
                    }
                    let s = if (f.degree() * (fp.degree(&u) + vdeg)).rem_euclid(2) == 0 {
                        Rational::one()
                    } else {
                        Rational::from_int(-1)
                    };
                    for (y, c) in f.apply_word(fp, &v)? {
                        add_term(&mut rhs, fp.splice(&u, &y)?, &(&c * &s));
                    }
                    if lhs != rhs {
                        bad += 1;
                    }
                }
            }
        }
        Ok(bad)
    };
    match run() {
        Ok(bad) => r.push(Check::count(&format!("{name}: F(u t v) = F(u) t v + u t F(v)"), &alg, None, 0, bad)),
        Err(e) => r.push(err_check(&format!("{name}: Leibniz"), &alg, e)),
    }
    r
}

/// `[F, G]` is again a t-derivation.
pub fn commutator_closure_check(
    fp: &FreeProduct,
    f: &dyn WordOperator,
    g: &dyn WordOperator,
    name: &str,
) -> Report {
    t_derivation_check(fp, &Commutator(f, g), name)
}

/// `[θ, η] = θη − ηθ` as a derivation.
fn bracket(theta: &Derivation, eta: &Derivation) -> Derivation {
    let (a, b) = (theta.full(), eta.full());
    let m = a.then_after(&b).minus(&b.then_after(&a));
    let dim = m.rows();
    Derivation {
        matrix: m.select_columns(&(1..dim).collect::<Vec<_>>()),
    }
}

/// Random `f: A → A` (`var = false`) or `A → A t A` with `f(1) = 0`.
fn random_map(alg: &FinDimAlgebra, rng: &mut ChaCha8Rng, with_t: bool) -> Vec<WordSum> {
    let dim = alg.dim();
    (0..dim)
        .map(|i| {
            let mut s = WordSum::new();
            if i == 0 {
                return s;
            }
            for _ in 0..3 {
                let c = Rational::from_int(rng.gen_range(-2..=2));
                let w = if with_t {
                    vec![rng.gen_range(0..dim), rng.gen_range(0..dim)]
                } else {
                    vec![rng.gen_range(0..dim)]
                };
                add_term(&mut s, w, &c);
            }
            s
        })
        .collect()
}

/// The restriction of a t-derivation to `A`, re-extended.
fn restrict_extend<'a>(fp: &'a FreeProduct<'a>, f: &'a dyn WordOperator) -> Result<WordDerivation<'a>, FreeprodError> {
    extend_t(f.degree(), f.var_shift(), move |i| f.apply_word(fp, &[i]))
}

/// t-derivations of `A∗k[t]`: `f_t` restricts to `f`, `F = (F|_A)_t`,
/// the Leibniz rule for `θ_t`, `Θ_t` and random `f_t`, closure under
/// commutators, `[θ_t, η_t] = [θ, η]_t`, the t-degrees of `θ_t` and `Θ_t`,
/// and the commutator-quotient dimensions for `t` and `τ`.
pub fn t_suite(alg: &FinDimAlgebra, cap: usize, seed: u64) -> Report {
    let name = alg.name().to_string();
    let mut r = Report::with_seed(seed);
    let base = AlgebraBase::new(alg);
    let fp = FreeProduct::new(&base, Variable::T, cap);
    let ders = solve_derivations(alg);
    let dders = solve_double_derivations(alg);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);

    let small: Vec<Vec<WordSum>> = (0..3).map(|_| random_map(alg, &mut rng, false)).collect();
    let with_t: Vec<Vec<WordSum>> = (0..2).map(|_| random_map(alg, &mut rng, true)).collect();
    let mut ops: Vec<(String, WordDerivation)> = Vec::new();
    for (k, th) in ders.iter().enumerate() {
        ops.push((format!("theta{k}_t"), theta_t(th)));
    }
    for (k, th) in dders.iter().enumerate() {
        ops.push((format!("Theta{k}_t"), big_theta_t(th)));
    }
    for (k, f) in small.iter().chain(&with_t).enumerate() {
        let shift = i64::from(k >= small.len());
        let f = f.clone();
        ops.push((
            format!("f{k}_t"),
            extend_t(2 * shift, shift, move |i| Ok(f[i].clone())).expect("f(1) = 0 by construction"),
        ));
    }

    // f_t|_A = f
    let mut bad = 0;
    for (k, f) in small.iter().chain(&with_t).enumerate() {
        let op = &ops[ders.len() + dders.len() + k].1;
        for i in 0..alg.dim() {
            if op.apply_word(&fp, &[i]).as_ref() != Ok(&f[i]) {
                bad += 1;
            }
        }
    }
    for (th, (_, op)) in ders.iter().zip(&ops) {
        for i in 0..alg.dim() {
            let want: WordSum = th.value(i).iter().map(|(k, c)| (vec![*k], c.clone())).collect();
            if op.apply_word(&fp, &[i]).as_ref() != Ok(&want) {
                bad += 1;
            }
        }
    }
    r.push(Check::count("f_t restricted to A is f", &name, None, 0, bad));

    let zero = extend_t(0, 0, |_| Ok(WordSum::new())).expect("zero kills 1");
    match nonvanishing(&fp, &words_upto(&fp, cap, None), &zero) {
        Ok(n) => r.push(Check::count("0_t = 0", &name, None, 0, n)),
        Err(e) => r.push(err_check("0_t = 0", &name, e)),
    }
    r.push(Check::holds(
        "unit-valued map refused",
        &name,
        None,
        matches!(extend_t(0, 0, |_| Ok(single(vec![0]))), Err(FreeprodError::UnitNotKilled)),
    ));

    let shifts_ok = ops.iter().take(ders.len()).all(|(_, o)| o.var_shift() == 0 && o.degree() == 0)
        && ops[ders.len()..ders.len() + dders.len()].iter().all(|(_, o)| o.var_shift() == 1 && o.degree() == 2);
    r.push(Check::holds("t-degree of theta_t is 0, of Theta_t is 2", &name, None, shifts_ok));

    for (label, op) in &ops {
        r.extend(t_derivation_check(&fp, op, label));
    }
    // closure on every pair whose commutator still fits the cap
    let mut closure_bad = 0;
    let mut closure_pairs = 0;
    for (a, (la, f)) in ops.iter().enumerate() {
        for (lg, g) in &ops[a..] {
            if f.var_shift() + g.var_shift() + 1 > cap as i64 {
                continue;
            }
            closure_pairs += 1;
            let rep = commutator_closure_check(&fp, f, g, &format!("[{la}, {lg}]"));
            closure_bad += rep.checks.iter().filter(|c| !c.pass).count();
        }
    }
    r.push(Check::count(
        &format!("commutators are t-derivations ({closure_pairs} pairs)"),
        &name,
        None,
        0,
        closure_bad,
    ));

    // [θ_t, η_t] = [θ, η]_t on words with at most two t's
    let fp2 = FreeProduct::new(&base, Variable::T, 2.min(cap));
    let words2 = words_upto(&fp2, fp2.cap, None);
    let mut bad = 0;
    for th in &ders {
        for et in &ders {
            let br = bracket(th, et);
            let br_t = theta_t(&br);
            let (a, b) = (theta_t(th), theta_t(et));
            match mismatches(&fp2, &words2, &Commutator(&a, &b), &br_t) {
                Ok(n) => bad += n,
                Err(e) => r.push(err_check("[theta_t, eta_t]", &name, e)),
            }
        }
    }
    r.push(Check::count("[theta_t, eta_t] = [theta, eta]_t", &name, None, 0, bad));

    // F = (F|_A)_t for commutators, which are t-derivations by closure
    let mut bad = 0;
    for (_, f) in &ops {
        for (_, g) in &ops {
            if f.var_shift() + g.var_shift() + 1 > cap as i64 {
                continue;
            }
            let c = Commutator(f, g);
            let room = cap - (f.var_shift() + g.var_shift()) as usize;
            let words = words_upto(&fp, room, None);
            let re = match restrict_extend(&fp, &c) {
                Ok(x) => x,
                Err(e) => {
                    r.push(err_check("F = (F|_A)_t", &name, e));
                    continue;
                }
            };
            match mismatches(&fp, &words, &c, &re) {
                Ok(n) => bad += n,
                Err(e) => r.push(err_check("F = (F|_A)_t", &name, e)),
            }
        }
    }
    r.push(Check::count("F = (F|_A)_t for commutators", &name, None, 0, bad));

    let quotient_dim = fp.basis_words(0, None).len() + fp.basis_words(1, None).len();
    r.push(Check::count(
        "dim A_t/(A_t+)^2 = dim A + dim A^2",
        &name,
        None,
        alg.dim() + alg.dim() * alg.dim(),
        quotient_dim,
    ));
    for j in 1..=cap {
        r.extend(commutator_quotient_check(&base, Variable::T, j, None));
        r.extend(commutator_quotient_check(&base, Variable::Tau, j, None));
    }
    r
}

/// The commutator quotient of `B∗k[v]` in variable degree `j` (and base
/// degree `q` if given), computed as words modulo the span of graded
/// commutators, has the dimension of [`CyclicQuotient`], and the cyclic
/// merge kills every commutator and maps onto the quotient.
pub fn commutator_quotient_check(
    base: &dyn GradedBase,
    var: Variable,
    j: usize,
    q: Option<i64>,
) -> Report {
    let name = base.name();
    let mut r = Report::new();
    let fp = FreeProduct::new(base, var, j);
    let label = |s: &str| format!("{s} [{}, j={j}{}]", if var == Variable::T { "t" } else { "tau" }, q.map(|q| format!(", q={q}")).unwrap_or_default());
    let quot = cyclic_quotient(base, j, var);
    let in_degree = |w: &Vec<usize>| q.is_none_or(|q| fp.base_degree(w) == q);
    let ambient: Vec<Vec<usize>> = fp.basis_words(j, q).into_iter().filter(in_degree).collect();
    let run = || -> Result<(usize, usize, usize), FreeprodError> {
        let mut gens: Vec<SparseVec> = Vec::new();
        let mut merged_bad = 0;
        for j1 in 0..=j {
            for x in fp.basis_words(j1, q) {
                for y in fp.basis_words(j - j1, q) {
                    if let Some(q) = q {
                        if fp.base_degree(&x) + fp.base_degree(&y) != q {
                            continue;
                        }
                    }
                    let c = fp.graded_commutator(&x, &y)?;
                    let mut merged = WordSum::new();
                    for (w, a) in &c {
                        add_sum(&mut merged, &fp.cyclic_merge(w)?, a);
                    }
                    if !quot.project(&fp, &merged).is_empty() {
                        merged_bad += 1;
                    }
                    gens.push(fp.component(&c, j));
                }
            }
        }
        let rows = base.dim().pow(j as u32 + 1);
        let comm_rank = rank(&LinMap::from_columns(rows, gens));
        let mut images = Vec::with_capacity(ambient.len());
        for w in &ambient {
            images.push(quot.project(&fp, &fp.cyclic_merge(w)?));
        }
        let onto = rank(&LinMap::from_columns(quot.dim(), images));
        Ok((ambient.len() - comm_rank, merged_bad, onto))
    };
    let want = match q {
        Some(q) => quot.dim_in_degree(q),
        None => quot.dim(),
    };
    match run() {
        Ok((dim, merged_bad, onto)) => {
            r.push(Check::count(&label("commutator quotient dim"), &name, Some(j), want, dim));
            r.push(Check::count(&label("cyclic merge kills commutators"), &name, Some(j), 0, merged_bad));
            r.push(Check::count(&label("cyclic merge is onto"), &name, Some(j), want, onto));
        }
        Err(e) => r.push(err_check(&label("commutator quotient"), &name, e)),
    }
    r
}

/// `d/dτ`: the degree 1 derivation with `τ ↦ 1`.
pub fn d_dtau<'a>() -> WordDerivation<'a> {
    WordDerivation::new(1, -1, |_| Ok(WordSum::new()), single(vec![0])).expect("kills 1")
}

/// `Δ_τ`: `b ↦ τb − bτ`, `τ ↦ 0`.
pub fn delta_tau<'a>() -> WordDerivation<'a> {
    WordDerivation::new(
        -1,
        1,
        |b| {
            let mut s = WordSum::new();
            if b != 0 {
                add_term(&mut s, vec![0, b], &Rational::one());
                add_term(&mut s, vec![b, 0], &Rational::from_int(-1));
            }
            Ok(s)
        },
        WordSum::new(),
    )
    .expect("kills 1")
}

/// Map between quotients induced from a map on ambient basis vectors given in
/// target quotient coordinates. Also reports whether it descends.
fn induced<F>(src: &CyclicQuotient, mut image: F) -> Result<(LinMap, usize, usize), FreeprodError>
where
    F: FnMut(usize) -> Result<SparseVec, FreeprodError>,
{
    let n = src.orbits.ambient_dim();
    let mut reps: Vec<Option<SparseVec>> = vec![None; src.dim()];
    let mut all = Vec::with_capacity(n);
    for i in 0..n {
        all.push(image(i)?);
    }
    for (k, &r) in src.orbits.reps().iter().enumerate() {
        reps[k] = Some(all[r].clone());
    }
    let mut bad = 0;
    let mut rows = 0;
    for (i, v) in all.iter().enumerate() {
        rows = rows.max(v.iter().map(|(k, _)| k + 1).max().unwrap_or(0));
        let want: SparseVec = match src.orbits.class(i) {
            Some((k, s)) => crate::exactlin::sparse::scale(reps[k].as_ref().expect("rep"), &s),
            None => Vec::new(),
        };
        if *v != want {
            bad += 1;
        }
    }
    let cols: Vec<SparseVec> = reps.into_iter().map(|v| v.expect("rep")).collect();
    Ok((LinMap::from_columns(rows, cols), bad, n))
}

fn with_rows(m: LinMap, rows: usize) -> LinMap {
    LinMap::from_columns(rows, m.columns().to_vec())
}

/// Bar differential against `d/dτ` on `A^{⊗n}` (words with `n − 1` τ's),
/// and Hochschild `b` on anticyclic quotients against `R(d/dτ)`.
pub fn bar_vs_dtau_check(alg: &FinDimAlgebra, n: usize) -> Report {
    assert!(n >= 2);
    let name = alg.name().to_string();
    let mut r = Report::new();
    let base = AlgebraBase::new(alg);
    let fp = FreeProduct::new(&base, Variable::Tau, n);
    let d = d_dtau();
    match operator_matrix(&fp, &d, n - 1) {
        Ok(m) => r.push(Check::holds("bar differential = d/dtau", &name, Some(n), m == bar_prime_boundary(alg, n))),
        Err(e) => r.push(err_check("bar differential = d/dtau", &name, e)),
    }
    let src = cyclic_quotient(&base, n, Variable::Tau);
    let tgt = cyclic_quotient(&base, n - 1, Variable::Tau);
    let b = standard_boundary(alg, n - 1);
    let oracle = induced(&src, |i| Ok(tgt.orbits.project_vec(b.column(i))));
    let words = induced(&src, |i| {
        let mut w = fp.word(n - 1, i);
        w.push(0);
        let mut merged = WordSum::new();
        for (x, c) in d.apply_word(&fp, &w)? {
            add_sum(&mut merged, &fp.cyclic_merge(&x)?, &c);
        }
        Ok(tgt.project(&fp, &merged))
    });
    match (oracle, words) {
        (Ok((mo, bo, _)), Ok((mw, bw, _))) => {
            r.push(Check::count("b descends to anticyclic quotients", &name, Some(n), 0, bo));
            r.push(Check::count("R(d/dtau) descends", &name, Some(n), 0, bw));
            let rows = tgt.dim();
            r.push(Check::holds(
                "R(d/dtau) = b on anticyclic quotients",
                &name,
                Some(n),
                with_rows(mo, rows) == with_rows(mw, rows),
            ));
        }
        (Err(e), _) | (_, Err(e)) => r.push(err_check("R(d/dtau) = b", &name, e)),
    }
    r
}

/// `Δ_τ` against `d/dτ`: anticommutation and `(d/dτ)² = 0` on words with
/// at most `n` τ's, `Δ_τ(τ) = 0 ≠ [τ, τ] = 2τ²`, and
/// `½R(Δ_τ)(a₁⊗⋯⊗aₙ) = Σₖ (−1)ᵏ a₁⊗⋯⊗aₖ⊗1⊗⋯⊗aₙ` on anticyclic quotients.
pub fn delta_tau_check(alg: &FinDimAlgebra, n: usize) -> Report {
    assert!(n >= 1);
    let name = alg.name().to_string();
    let mut r = Report::new();
    let base = AlgebraBase::new(alg);
    let fp = FreeProduct::new(&base, Variable::Tau, n + 1);
    let (d, delta) = (d_dtau(), delta_tau());
    let words = words_upto(&fp, n, None);
    match nonvanishing(&fp, &words, &Commutator(&d, &delta)) {
        Ok(k) => r.push(Check::count("d/dtau Delta_tau + Delta_tau d/dtau = 0", &name, Some(n), 0, k)),
        Err(e) => r.push(err_check("anticommutation", &name, e)),
    }
    match nonvanishing(&fp, &words, &Commutator(&d, &d)) {
        Ok(k) => r.push(Check::count("(d/dtau)^2 = 0", &name, Some(n), 0, k)),
        Err(e) => r.push(err_check("(d/dtau)^2 = 0", &name, e)),
    }
    let tau = fp.var_word();
    let kills = delta.apply_word(&fp, &tau).map(|s| s.is_empty()).unwrap_or(false);
    let ad = fp.graded_commutator(&tau, &tau);
    let mut two_tau2 = WordSum::new();
    add_term(&mut two_tau2, vec![0, 0, 0], &Rational::from_int(2));
    r.push(Check::holds("Delta_tau(tau) = 0", &name, None, kills));
    r.push(Check::holds("ad tau(tau) = 2 tau^2", &name, None, ad.as_ref() == Ok(&two_tau2)));

    let src = cyclic_quotient(&base, n, Variable::Tau);
    let tgt = cyclic_quotient(&base, n + 1, Variable::Tau);
    let half = Rational::new(1, 2);
    let words = induced(&src, |i| {
        let mut w = fp.word(n - 1, i);
        w.push(0);
        let mut merged = WordSum::new();
        for (x, c) in delta.apply_word(&fp, &w)? {
            add_sum(&mut merged, &fp.cyclic_merge(&x)?, &(&c * &half));
        }
        Ok(tgt.project(&fp, &merged))
    });
    let formula = induced(&src, |i| {
        let a = fp.word(n - 1, i);
        let mut s = WordSum::new();
        for k in 1..=n {
            let mut w = a[..k].to_vec();
            w.push(0);
            w.extend_from_slice(&a[k..]);
            add_term(&mut s, w, &Rational::from_int(if k % 2 == 0 { 1 } else { -1 }));
        }
        Ok(tgt.project(&fp, &s))
    });
    match (words, formula) {
        (Ok((mw, bw, _)), Ok((mf, bf, _))) => {
            r.push(Check::count("R(Delta_tau) descends", &name, Some(n), 0, bw));
            r.push(Check::count("insert-1 formula descends", &name, Some(n), 0, bf));
            let rows = tgt.dim();
            r.push(Check::holds(
                "1/2 R(Delta_tau) = insert-1 formula",
                &name,
                Some(n),
                with_rows(mw, rows) == with_rows(mf, rows),
            ));
        }
        (Err(e), _) | (_, Err(e)) => r.push(err_check("insert-1 formula", &name, e)),
    }
    r
}
