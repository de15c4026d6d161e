//! `Ω_tA ≅ (ΩA)_t` truncated by the number of `t`'s and by form degree, with
//! `d_t`, `i_Θ = (𝐢_Θ)_t`, `L_Θ = (𝐋_Θ)_t` and `i_ξ` for `ξ ∈ Der(A)`.

use std::sync::Arc;

use super::checks::{mismatches, nonvanishing};
use super::{
    add_sum, add_term, extend_t, Commutator, FormsBase, FreeProduct, FreeprodError,
    Variable, WordDerivation, WordOperator, WordSum,
};
use crate::algebra::{delta, solve_derivations, solve_double_derivations, Derivation, DoubleDerivation, FinDimAlgebra};
use crate::exactlin::Rational;
use crate::forms::{BiFormMap, Forms};
use crate::report::{Check, Report};

pub struct ExtendedComplex {
    pub base: FormsBase,
    pub t_cap: usize,
}

pub fn extended_complex(alg: &FinDimAlgebra, t_cap: usize, form_cap: usize) -> ExtendedComplex {
    assert!(t_cap >= 1 && form_cap >= 1);
    let forms = Arc::new(Forms::new(alg.clone()));
    ExtendedComplex {
        base: FormsBase::new(forms, form_cap),
        t_cap,
    }
}

/// `ω ↦ [t, ω] = tω − ωt`.
pub struct TBracket;

impl WordOperator for TBracket {
    fn apply_word(&self, fp: &FreeProduct, w: &[usize]) -> Result<WordSum, FreeprodError> {
        let mut s = WordSum::new();
        add_term(&mut s, fp.splice(&[0], w)?, &Rational::one());
        add_term(&mut s, fp.splice(w, &[0])?, &Rational::from_int(-1));
        Ok(s)
    }

    fn degree(&self) -> i64 {
        2
    }

    fn var_shift(&self) -> i64 {
        1
    }
}

impl ExtendedComplex {
    pub fn fp(&self) -> FreeProduct<'_> {
        FreeProduct::new(&self.base, Variable::T, self.t_cap)
    }

    pub fn forms(&self) -> &Forms {
        self.base.forms()
    }

    pub fn form_cap(&self) -> usize {
        self.base.cap()
    }

    /// `d_t`: `d` on each form letter, `d_t(t) = 0`.
    pub fn d_t(&self) -> WordDerivation<'_> {
        let b = &self.base;
        extend_t(1, 0, move |g| {
            let (p, x) = b.split(g);
            let v = b.embed(p + 1, b.forms().d(p).column(x))?;
            Ok(v.into_iter().map(|(k, c)| (vec![k], c)).collect())
        })
        .expect("d kills 1")
    }

    fn bi_words(&self, m: &BiFormMap, x: usize) -> Result<WordSum, FreeprodError> {
        let mut s = WordSum::new();
        for (p, q, block) in &m.blocks {
            let dq = self.forms().dim(*q);
            for (idx, c) in block.column(x) {
                let (i, j) = (idx / dq, idx % dq);
                let u = self.base.offset(*p) + i;
                let v = self.base.offset(*q) + j;
                add_term(&mut s, vec![u, v], c);
            }
        }
        Ok(s)
    }

    /// `i_Θ = (𝐢_Θ)_t`, degree `−1 + 2`, one `t` added.
    pub fn i_theta(&self, theta: &DoubleDerivation) -> WordDerivation<'_> {
        let maps: Vec<Option<BiFormMap>> = (0..=self.form_cap())
            .map(|p| (p >= 1).then(|| self.forms().big_i(theta, p)))
            .collect();
        extend_t(1, 1, move |g| {
            let (p, x) = self.base.split(g);
            match &maps[p] {
                Some(m) => self.bi_words(m, x),
                None => Ok(WordSum::new()),
            }
        })
        .expect("i_Theta kills 1")
    }

    /// `L_Θ = (𝐋_Θ)_t`, degree `0 + 2`, one `t` added.
    pub fn l_theta(&self, theta: &DoubleDerivation) -> WordDerivation<'_> {
        let maps: Vec<BiFormMap> = (0..=self.form_cap()).map(|p| self.forms().big_l(theta, p)).collect();
        extend_t(2, 1, move |g| {
            let (p, x) = self.base.split(g);
            self.bi_words(&maps[p], x)
        })
        .expect("L_Theta kills 1")
    }

    /// `i_ξ(a₀da₁⋯daₙ) = Σₖ (−1)^{k−1} a₀da₁⋯da_{k−1}·ξ(aₖ)·da_{k+1}⋯daₙ`.
    pub fn i_xi(&self, xi: &Derivation) -> WordDerivation<'_> {
        let xi = xi.clone();
        extend_t(-1, 0, move |g| {
            let (p, x) = self.base.split(g);
            let f = self.forms();
            let sh = f.shape();
            let (i0, s) = sh.decode(p, x);
            let mut out = WordSum::new();
            for k in 1..=p {
                let head = vec![(sh.encode(i0, &s[..k - 1]), Rational::one())];
                let y = f.right_mul_vec(&head, k - 1, xi.value(s[k - 1]));
                let y = f.append_slots(&y, &s[k..]);
                let sign = Rational::from_int(if k % 2 == 1 { 1 } else { -1 });
                for (idx, c) in self.base.embed(p - 1, &y)? {
                    add_term(&mut out, vec![idx], &(&c * &sign));
                }
            }
            Ok(out)
        })
        .expect("i_xi kills 1")
    }

    /// Words with at most `j_max` t's and total form degree at most `q_max`.
    pub fn words(&self, j_max: usize, q_max: usize) -> Vec<Vec<usize>> {
        let fp = self.fp();
        (0..=j_max).flat_map(|j| fp.basis_words(j, Some(q_max as i64))).collect()
    }

    /// `R(i_Θ)` on `Ωⁿ` (words without `t`) through the cyclic merge,
    /// compared with the reduced contraction of the forms module.
    pub fn reduced_chain_matches(&self, theta: &DoubleDerivation, n: usize) -> Result<bool, FreeprodError> {
        let fp = self.fp();
        let i = self.i_theta(theta);
        let want = self.forms().reduced_contraction(theta, n);
        let off = self.base.offset(n - 1);
        for x in 0..self.forms().dim(n) {
            let mut merged = WordSum::new();
            for (w, c) in i.apply_word(&fp, &[self.base.offset(n) + x])? {
                add_sum(&mut merged, &fp.cyclic_merge(&w)?, &c);
            }
            let got: Vec<(usize, Rational)> = merged.into_iter().map(|(w, c)| (w[0] - off, c)).collect();
            if got != want.column(x) {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

fn count_check(r: &mut Report, name: &str, alg: &str, res: Result<usize, FreeprodError>) {
    match res {
        Ok(n) => r.push(Check::count(name, alg, None, 0, n)),
        Err(e) => r.push(Check::text(name, alg, None, "no error".into(), e.to_string())),
    }
}

/// `L_Θ = d i_Θ + i_Θ d`, `i_Θ i_Φ + i_Φ i_Θ = 0`, `i_ξ i_Θ + i_Θ i_ξ = 0`
/// and `L_Θ d = d L_Θ`, each on every basis word that leaves room for the
/// operators involved.
pub fn relations_check(
    ec: &ExtendedComplex,
    theta: (&str, &DoubleDerivation),
    phi: (&str, &DoubleDerivation),
    xi: (&str, &Derivation),
) -> Report {
    let alg = ec.forms().algebra().name().to_string();
    let mut r = Report::new();
    let fp = ec.fp();
    let (tc, fc) = (ec.t_cap, ec.form_cap());
    let d = ec.d_t();
    let (i_t, i_p) = (ec.i_theta(theta.1), ec.i_theta(phi.1));
    let l_t = ec.l_theta(theta.1);
    let i_x = ec.i_xi(xi.1);
    let (tn, pn, xn) = (theta.0, phi.0, xi.0);
    if tc >= 1 && fc >= 1 {
        let words = ec.words(tc - 1, fc - 1);
        count_check(
            &mut r,
            &format!("L_{tn} = d i_{tn} + i_{tn} d"),
            &alg,
            mismatches(&fp, &words, &l_t, &Commutator(&d, &i_t)),
        );
        count_check(
            &mut r,
            &format!("L_{tn} d = d L_{tn}"),
            &alg,
            nonvanishing(&fp, &words, &Commutator(&l_t, &d)),
        );
    }
    if tc >= 2 {
        let words = ec.words(tc - 2, fc);
        count_check(
            &mut r,
            &format!("i_{tn} i_{pn} + i_{pn} i_{tn} = 0"),
            &alg,
            nonvanishing(&fp, &words, &Commutator(&i_t, &i_p)),
        );
    }
    if tc >= 1 {
        let words = ec.words(tc - 1, fc);
        count_check(
            &mut r,
            &format!("i_{xn} i_{tn} + i_{tn} i_{xn} = 0"),
            &alg,
            nonvanishing(&fp, &words, &Commutator(&i_x, &i_t)),
        );
    }
    r
}

/// The relations for all pairs from a basis of `Der(A, A⊗A)` (and `Δ`),
/// each `ξ` from a basis of `Der(A)`, `L_Δ = [t, ·]`, `i_Θ = 0` on
/// `Ω⁰`, and the reduced chain `R(i_Θ) = ` reduced contraction.
pub fn extended_suite(alg: &FinDimAlgebra, t_cap: usize, form_cap: usize) -> Report {
    let ec = extended_complex(alg, t_cap, form_cap);
    let name = alg.name().to_string();
    let mut r = Report::new();
    let fp = ec.fp();
    let mut dders: Vec<(String, DoubleDerivation)> = solve_double_derivations(alg)
        .into_iter()
        .enumerate()
        .map(|(k, t)| (format!("Theta{k}"), t))
        .collect();
    let del = delta(alg);
    dders.push(("Delta".to_string(), del.clone()));
    let ders: Vec<(String, Derivation)> = solve_derivations(alg)
        .into_iter()
        .enumerate()
        .map(|(k, x)| (format!("xi{k}"), x))
        .collect();
    let zero_xi = vec![(
        "0".to_string(),
        Derivation {
            matrix: crate::exactlin::LinMap::zero(alg.dim(), alg.dim() - 1),
        },
    )];
    let xis = if ders.is_empty() { &zero_xi } else { &ders };
    let (tc, fc) = (t_cap, form_cap);
    let d = ec.d_t();
    let i_ops: Vec<WordDerivation> = dders.iter().map(|(_, t)| ec.i_theta(t)).collect();
    let x_ops: Vec<WordDerivation> = xis.iter().map(|(_, x)| ec.i_xi(x)).collect();
    let mut failures = 0;
    let mut total = 0;
    let mut tally = |res: Result<usize, FreeprodError>| {
        total += 1;
        if res.map_or(true, |n| n > 0) {
            failures += 1;
        }
    };
    // Each relation is linear in each operator, so basis elements suffice.
    let words_l = ec.words(tc - 1, fc - 1);
    for ((_, t), i_t) in dders.iter().zip(&i_ops) {
        let l_t = ec.l_theta(t);
        tally(mismatches(&fp, &words_l, &l_t, &Commutator(&d, i_t)));
        tally(nonvanishing(&fp, &words_l, &Commutator(&l_t, &d)));
    }
    if tc >= 2 {
        let words = ec.words(tc - 2, fc);
        for a in 0..i_ops.len() {
            for b in a..i_ops.len() {
                tally(nonvanishing(&fp, &words, &Commutator(&i_ops[a], &i_ops[b])));
            }
        }
    }
    let words_x = ec.words(tc - 1, fc);
    for i_t in &i_ops {
        for i_x in &x_ops {
            tally(nonvanishing(&fp, &words_x, &Commutator(i_x, i_t)));
        }
    }
    r.push(Check::count(
        &format!(
            "commutation relations ({total} checks, {} double derivations, {} derivations)",
            dders.len(),
            xis.len()
        ),
        &name,
        None,
        0,
        failures,
    ));

    let l_delta = ec.l_theta(&del);
    count_check(
        &mut r,
        "L_Delta = [t, -]",
        &name,
        mismatches(&fp, &ec.words(t_cap - 1, form_cap), &l_delta, &TBracket),
    );
    let zero_forms: Vec<Vec<usize>> = (0..ec.forms().dim(0)).map(|x| vec![x]).collect();
    let mut bad = 0;
    for (_, t) in &dders {
        bad += nonvanishing(&fp, &zero_forms, &ec.i_theta(t)).unwrap_or(usize::MAX / 4);
    }
    r.push(Check::count("i_Theta = 0 on 0-forms", &name, None, 0, bad));
    for n in 1..=form_cap {
        let mut ok = true;
        for (_, t) in &dders {
            ok &= ec.reduced_chain_matches(t, n).unwrap_or(false);
        }
        r.push(Check::holds("R(i_Theta) = reduced contraction", &name, Some(n), ok));
    }
    r
}
