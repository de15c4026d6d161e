//! Representation functor for free algebras `A = k⟨x₁…xₘ⟩`: evaluation of
//! relative forms on `A_t = A ∗ k[t]` into `End(V) ⊗ Ω•(Rep) ⊗ k[𝔤]`, the
//! trace map, and the equivariant differentials `d_DR`, `d_𝔤`.
//!
//! `Ω_{k[t]}(A_t)` is the free algebra on `xₖ, dxₖ, t` with `d t = 0`, so
//! forms are stored as letter words.

mod check;
mod poly;
#[cfg(test)]
mod tests;

use std::collections::BTreeMap;

pub use check::{
    contraction_sign_probe, ev_multiplicative_check, invariance_check, rep_suite, rep_thm_check,
    rep_thm_counts, trace_commutator_check, RepConfig, RepCounts,
};
pub use poly::{EqForm, FormMatrix, Mono, Poly, PolyMatrix, Vars};

use crate::exactlin::Rational;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Gen {
    /// `x_{k+1}`
    X(usize),
    T,
}

/// Coefficient times a word over `{x₁…xₘ, t}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NCWord {
    pub m: usize,
    pub word: Vec<Gen>,
    pub coeff: Rational,
}

impl NCWord {
    pub fn new(m: usize, word: Vec<Gen>) -> Self {
        NCWord {
            m,
            word,
            coeff: Rational::one(),
        }
    }

    /// `x_{k₁}x_{k₂}…` from 1-based indices.
    pub fn xs(m: usize, ks: &[usize]) -> Self {
        Self::new(m, ks.iter().map(|&k| Gen::X(k - 1)).collect())
    }

    pub fn times(&self, o: &NCWord) -> NCWord {
        let mut word = self.word.clone();
        word.extend_from_slice(&o.word);
        NCWord {
            m: self.m,
            word,
            coeff: &self.coeff * &o.coeff,
        }
    }
}

pub fn render_word(w: &[Gen]) -> String {
    if w.is_empty() {
        return "1".into();
    }
    w.iter()
        .map(|g| match g {
            Gen::X(k) => format!("x{}", k + 1),
            Gen::T => "t".into(),
        })
        .collect::<Vec<_>>()
        .join("")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Letter {
    X(usize),
    DX(usize),
    T,
}

impl From<Gen> for Letter {
    fn from(g: Gen) -> Self {
        match g {
            Gen::X(k) => Letter::X(k),
            Gen::T => Letter::T,
        }
    }
}

fn form_degree(w: &[Letter]) -> usize {
    w.iter().filter(|l| matches!(l, Letter::DX(_))).count()
}

/// Element of `Ω_{k[t]}(A_t)`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct NCForm {
    pub terms: BTreeMap<Vec<Letter>, Rational>,
}

impl NCForm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, w: Vec<Letter>, c: &Rational) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.retain(|_, v| !v.is_zero());
        }
    }

    pub fn add_scaled(&mut self, o: &NCForm, c: &Rational) {
        for (w, a) in &o.terms {
            self.add_term(w.clone(), &(a * c));
        }
    }

    pub fn from_word(w: &NCWord) -> Self {
        let mut f = Self::zero();
        f.add_term(w.word.iter().map(|&g| g.into()).collect(), &w.coeff);
        f
    }

    pub fn mul(&self, o: &NCForm) -> NCForm {
        let mut f = NCForm::zero();
        for (a, x) in &self.terms {
            for (b, y) in &o.terms {
                let mut w = a.clone();
                w.extend_from_slice(b);
                f.add_term(w, &(x * y));
            }
        }
        f
    }

    /// The graded derivation `xₖ ↦ dxₖ`, `dxₖ ↦ 0`, `t ↦ 0`.
    pub fn d(&self) -> NCForm {
        let mut f = NCForm::zero();
        for (w, c) in &self.terms {
            let mut deg = 0;
            for (i, l) in w.iter().enumerate() {
                match l {
                    Letter::X(k) => {
                        let mut v = w.clone();
                        v[i] = Letter::DX(*k);
                        let s = if deg % 2 == 0 { c.clone() } else { -c.clone() };
                        f.add_term(v, &s);
                    }
                    Letter::DX(_) => deg += 1,
                    Letter::T => {}
                }
            }
        }
        f
    }

    /// Single exterior degree, if homogeneous.
    pub fn degree(&self) -> Option<usize> {
        let mut ds = self.terms.keys().map(|w| form_degree(w));
        let first = ds.next()?;
        ds.all(|x| x == first).then_some(first)
    }

    /// `αβ − (−1)^{|α||β|} βα` for homogeneous `α`, `β`.
    pub fn graded_commutator(&self, o: &NCForm) -> NCForm {
        let p = self.degree().unwrap_or(0) * o.degree().unwrap_or(0);
        let mut f = self.mul(o);
        f.add_scaled(&o.mul(self), &Rational::from_int(if p % 2 == 0 { -1 } else { 1 }));
        f
    }

    /// `a₀ da₁ … daₙ`.
    pub fn chain(a0: &NCWord, rest: &[NCWord]) -> NCForm {
        let mut f = NCForm::from_word(a0);
        for a in rest {
            f = f.mul(&NCForm::from_word(a).d());
        }
        f
    }

    pub fn t() -> NCForm {
        let mut f = NCForm::zero();
        f.add_term(vec![Letter::T], &Rational::one());
        f
    }

    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        self.terms
            .iter()
            .map(|(w, c)| {
                let body: String = if w.is_empty() {
                    "1".into()
                } else {
                    w.iter()
                        .map(|l| match l {
                            Letter::X(k) => format!("x{}", k + 1),
                            Letter::DX(k) => format!("dx{}", k + 1),
                            Letter::T => "t".into(),
                        })
                        .collect::<Vec<_>>()
                        .join(" ")
                };
                if c.is_one() {
                    body
                } else {
                    format!("{c}*{body}")
                }
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// `xₖ ↦ Xₖ`, `t ↦ Y`, words to matrix products.
pub fn ev(word: &NCWord, d: usize) -> PolyMatrix {
    let vars = Vars::new(word.m, d);
    let mut acc = PolyMatrix::identity(d);
    for g in &word.word {
        acc = acc.mul(&gen_matrix(&vars, *g));
    }
    for e in &mut acc.entries {
        *e = {
            let mut p = Poly::zero();
            p.add_scaled(e, &word.coeff);
            p
        };
    }
    acc
}

fn gen_matrix(vars: &Vars, g: Gen) -> PolyMatrix {
    match g {
        Gen::X(k) => PolyMatrix::generic(vars.d, |i, j| vars.x(k, i, j)),
        Gen::T => PolyMatrix::generic(vars.d, |i, j| vars.y(i, j)),
    }
}

/// `ev_Ω`: each letter to its matrix (`dxₖ ↦ dXₖ`), words to products of
/// form-valued matrices.
pub fn ev_form(form: &NCForm, m: usize, d: usize) -> FormMatrix {
    let vars = Vars::new(m, d);
    let mut out = FormMatrix::zero(d);
    for (w, c) in &form.terms {
        let mut acc = FormMatrix::identity(d);
        for l in w {
            let f = match l {
                Letter::X(k) => FormMatrix::from_poly(&gen_matrix(&vars, Gen::X(*k))),
                Letter::T => FormMatrix::from_poly(&gen_matrix(&vars, Gen::T)),
                Letter::DX(k) => FormMatrix::d_of(&gen_matrix(&vars, Gen::X(*k)), &vars),
            };
            acc = acc.mul(&f);
        }
        out.add_scaled(&acc, c);
    }
    out
}

/// `(Id ⊗ Tr) ∘ ev_Ω`.
pub fn trace_ev(form: &NCForm, m: usize, d: usize) -> EqForm {
    ev_form(form, m, d).trace()
}

pub fn d_dr(w: &EqForm, m: usize, d: usize) -> EqForm {
    w.d_dr(&Vars::new(m, d))
}

/// Component of `act(E_ij)` at `v`: `Xₖ ↦ E_ij Xₖ − Xₖ E_ij`; with `on_y`
/// also `Y ↦ E_ij Y − Y E_ij`, else zero on `Y`.
pub fn act_field(vars: &Vars, i: usize, j: usize, on_y: bool) -> impl Fn(u32) -> Poly + '_ {
    move |v| {
        let (k, a, b) = vars.decode(v);
        if k == vars.m && !on_y {
            return Poly::zero();
        }
        let at = |r: usize, c: usize| {
            if k == vars.m {
                vars.y(r, c)
            } else {
                vars.x(k, r, c)
            }
        };
        let mut p = Poly::zero();
        if a == i {
            p.add_scaled(&Poly::var(at(j, b)), &Rational::one());
        }
        if b == j {
            p.add_scaled(&Poly::var(at(a, i)), &Rational::from_int(-1));
        }
        p
    }
}

/// `d_𝔤 ω = Σ_{i,j} (i_{act(E_ij)} ω) · Y[i,j]`.
pub fn d_g(w: &EqForm, m: usize, d: usize) -> EqForm {
    let vars = Vars::new(m, d);
    let mut out = EqForm::zero();
    for i in 0..d {
        for j in 0..d {
            let c = w.contract(&act_field(&vars, i, j, false));
            out.add_scaled(&c.mul_poly(&Poly::var(vars.y(i, j))), &Rational::one());
        }
    }
    out
}

/// `ι_Δ(a₀da₁…daₙ) = Σₖ (−1)ᵏ [da_{k+1}…daₙ a₀ da₁…da_{k−1}, aₖ]`, with
/// the single `t` written at the end.
pub fn i_delta_word(a0: &NCWord, rest: &[NCWord]) -> NCForm {
    i_delta_signed(a0, rest, |k, _| if k % 2 == 0 { 1 } else { -1 })
}

/// Same shape with term `k` signed `−(−1)^{(k−1)(n−k+1)}`, which is the
/// reduced contraction of `Δ` written out term by term.
pub fn i_delta_contraction(a0: &NCWord, rest: &[NCWord]) -> NCForm {
    i_delta_signed(a0, rest, |k, n| if ((k - 1) * (n - k + 1)) % 2 == 0 { -1 } else { 1 })
}

fn i_delta_signed(a0: &NCWord, rest: &[NCWord], sign: impl Fn(usize, usize) -> i64) -> NCForm {
    let n = rest.len();
    let mut out = NCForm::zero();
    for k in 1..=n {
        let mut x = NCForm::from_word(&NCWord::new(a0.m, vec![]));
        for a in &rest[k..] {
            x = x.mul(&NCForm::from_word(a).d());
        }
        x = x.mul(&NCForm::from_word(a0));
        for a in &rest[..k - 1] {
            x = x.mul(&NCForm::from_word(a).d());
        }
        let ak = NCForm::from_word(&rest[k - 1]);
        let mut br = x.mul(&ak);
        br.add_scaled(&ak.mul(&x), &Rational::from_int(-1));
        out.add_scaled(&br, &Rational::from_int(sign(k, n)));
    }
    out.mul(&NCForm::t())
}
