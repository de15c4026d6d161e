//! Truncated free products `B∗k[t]` (`deg t = 2`) and `B∗k[τ]` (`deg τ = −1`).
//!
//! A word `u₁ v u₂ v … v u_{j+1}` with `j` occurrences of the variable `v`
//! is the tuple `(u₁, …, u_{j+1})` of base basis indices; adjacent variables
//! are separated by the unit (index 0). Linear combinations are
//! [`WordSum`]s. Graded derivations are determined by their values on base
//! basis elements and on `v`, extended with Koszul signs.

mod checks;
mod extended;

pub use checks::{
    bar_vs_dtau_check, commutator_closure_check, commutator_quotient_check, delta_tau_check,
    d_dtau, delta_tau, t_derivation_check, t_suite,
};
pub use extended::{extended_complex, extended_suite, relations_check, ExtendedComplex, TBracket};

use std::collections::btree_map::Entry;
use std::collections::BTreeMap;
use std::sync::Arc;

use thiserror::Error;

use crate::algebra::FinDimAlgebra;
use crate::coinvariants::SignedOrbits;
use crate::exactlin::{LinMap, Rational, SparseVec, VecBuilder};
use crate::forms::Forms;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FreeprodError {
    #[error("word needs {needed} variable occurrences, cap is {cap}")]
    CapExceeded { needed: usize, cap: usize },
    #[error("form degree {needed} exceeds the form cap {cap}")]
    FormCapExceeded { needed: usize, cap: usize },
    #[error("map does not kill the unit")]
    UnitNotKilled,
    #[error("no commutator quotient in variable degree 0")]
    DegreeZeroQuotient,
}

/// A graded algebra with a finite basis, unit at index 0.
pub trait GradedBase {
    fn dim(&self) -> usize;
    fn degree(&self, i: usize) -> i64;
    /// `bᵢ·bⱼ`.
    fn mul(&self, i: usize, j: usize) -> Result<SparseVec, FreeprodError>;
    fn name(&self) -> String;
}

/// An ungraded algebra as a base.
#[derive(Debug, Clone)]
pub struct AlgebraBase(pub Arc<FinDimAlgebra>);

impl AlgebraBase {
    pub fn new(alg: &FinDimAlgebra) -> Self {
        Self(Arc::new(alg.clone()))
    }
}

impl GradedBase for AlgebraBase {
    fn dim(&self) -> usize {
        self.0.dim()
    }

    fn degree(&self, _: usize) -> i64 {
        0
    }

    fn mul(&self, i: usize, j: usize) -> Result<SparseVec, FreeprodError> {
        Ok(self.0.product(i, j).to_vec())
    }

    fn name(&self) -> String {
        self.0.name().to_string()
    }
}

/// `Ω⁰A ⊕ ⋯ ⊕ Ω^{cap}A`; the basis of `Ωᵖ` sits at offset `Σ_{i<p} dim Ωⁱ`.
#[derive(Debug)]
pub struct FormsBase {
    forms: Arc<Forms>,
    cap: usize,
    offsets: Vec<usize>,
}

impl FormsBase {
    pub fn new(forms: Arc<Forms>, cap: usize) -> Self {
        let mut offsets = vec![0];
        for p in 0..=cap {
            offsets.push(offsets[p] + forms.dim(p));
        }
        Self { forms, cap, offsets }
    }

    pub fn forms(&self) -> &Forms {
        &self.forms
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    pub fn offset(&self, p: usize) -> usize {
        self.offsets[p]
    }

    /// `(form degree, index inside Ωᵖ)`.
    pub fn split(&self, g: usize) -> (usize, usize) {
        let p = self.offsets.partition_point(|&o| o <= g) - 1;
        (p, g - self.offsets[p])
    }

    /// Coordinates on `Ωᵖ` lifted to global indices.
    pub fn embed(&self, p: usize, v: &[(usize, Rational)]) -> Result<SparseVec, FreeprodError> {
        if v.is_empty() {
            return Ok(Vec::new());
        }
        if p > self.cap {
            return Err(FreeprodError::FormCapExceeded {
                needed: p,
                cap: self.cap,
            });
        }
        Ok(v.iter().map(|(i, c)| (i + self.offsets[p], c.clone())).collect())
    }
}

impl GradedBase for FormsBase {
    fn dim(&self) -> usize {
        self.offsets[self.cap + 1]
    }

    fn degree(&self, i: usize) -> i64 {
        self.split(i).0 as i64
    }

    fn mul(&self, i: usize, j: usize) -> Result<SparseVec, FreeprodError> {
        let ((p, x), (q, y)) = (self.split(i), self.split(j));
        let one = Rational::one();
        let v = self.forms.wedge_vec(&[(x, one.clone())], p, &[(y, one)], q);
        self.embed(p + q, &v)
    }

    fn name(&self) -> String {
        format!("Omega<={}({})", self.cap, self.forms.algebra().name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variable {
    /// `deg t = 2`
    T,
    /// `deg τ = −1`
    Tau,
}

impl Variable {
    pub fn degree(self) -> i64 {
        match self {
            Variable::T => 2,
            Variable::Tau => -1,
        }
    }
}

/// Sparse linear combination of words.
pub type WordSum = BTreeMap<Vec<usize>, Rational>;

pub fn add_term(s: &mut WordSum, w: Vec<usize>, c: &Rational) {
    if c.is_zero() {
        return;
    }
    match s.entry(w) {
        Entry::Vacant(e) => {
            e.insert(c.clone());
        }
        Entry::Occupied(mut e) => {
            *e.get_mut() += c;
            if e.get().is_zero() {
                e.remove();
            }
        }
    }
}

pub fn add_sum(s: &mut WordSum, x: &WordSum, c: &Rational) {
    for (w, v) in x {
        add_term(s, w.clone(), &(v * c));
    }
}

pub fn single(w: Vec<usize>) -> WordSum {
    let mut s = WordSum::new();
    s.insert(w, Rational::one());
    s
}

fn sign(parity: i64) -> Rational {
    if parity.rem_euclid(2) == 0 {
        Rational::one()
    } else {
        Rational::from_int(-1)
    }
}

/// `B∗k[v]` truncated at `cap` occurrences of `v`.
pub struct FreeProduct<'a> {
    pub base: &'a dyn GradedBase,
    pub var: Variable,
    pub cap: usize,
}

impl<'a> FreeProduct<'a> {
    pub fn new(base: &'a dyn GradedBase, var: Variable, cap: usize) -> Self {
        Self { base, var, cap }
    }

    pub fn var_degree(&self, w: &[usize]) -> usize {
        w.len() - 1
    }

    pub fn base_degree(&self, w: &[usize]) -> i64 {
        w.iter().map(|&u| self.base.degree(u)).sum()
    }

    /// Total degree: base degrees plus `deg v` per occurrence.
    pub fn degree(&self, w: &[usize]) -> i64 {
        self.base_degree(w) + self.var.degree() * self.var_degree(w) as i64
    }

    fn admit(&self, w: &[usize]) -> Result<(), FreeprodError> {
        let j = self.var_degree(w);
        if j > self.cap {
            return Err(FreeprodError::CapExceeded {
                needed: j,
                cap: self.cap,
            });
        }
        Ok(())
    }

    /// The word `v`.
    pub fn var_word(&self) -> Vec<usize> {
        vec![0, 0]
    }

    /// All basis words with `j` variables and base degree at most `max_deg`.
    pub fn basis_words(&self, j: usize, max_deg: Option<i64>) -> Vec<Vec<usize>> {
        let dim = self.base.dim();
        let mut out = Vec::new();
        let mut cur = Vec::with_capacity(j + 1);
        fn rec(
            fp: &FreeProduct,
            dim: usize,
            len: usize,
            max: Option<i64>,
            acc: i64,
            cur: &mut Vec<usize>,
            out: &mut Vec<Vec<usize>>,
        ) {
            if cur.len() == len {
                out.push(cur.clone());
                return;
            }
            for u in 0..dim {
                let a = acc + fp.base.degree(u);
                if max.is_some_and(|m| a > m) {
                    continue;
                }
                cur.push(u);
                rec(fp, dim, len, max, a, cur, out);
                cur.pop();
            }
        }
        rec(self, dim, j + 1, max_deg, 0, &mut cur, &mut out);
        out
    }

    /// Word index in `B^{⊗(j+1)}`, first factor most significant.
    pub fn index(&self, w: &[usize]) -> usize {
        let dim = self.base.dim();
        w.iter().fold(0, |acc, &u| acc * dim + u)
    }

    pub fn word(&self, j: usize, mut idx: usize) -> Vec<usize> {
        let dim = self.base.dim();
        let mut w = vec![0; j + 1];
        for slot in w.iter_mut().rev() {
            *slot = idx % dim;
            idx /= dim;
        }
        w
    }

    /// Coordinates of the component with `j` variables.
    pub fn component(&self, s: &WordSum, j: usize) -> SparseVec {
        let mut b = VecBuilder::new();
        for (w, c) in s {
            if self.var_degree(w) == j {
                b.push(self.index(w), c.clone());
            }
        }
        b.finish()
    }

    /// `x·y`: concatenation, merging the last factor of `x` with the first of `y`.
    pub fn mul_words(&self, x: &[usize], y: &[usize]) -> Result<WordSum, FreeprodError> {
        let mut out = WordSum::new();
        let (xl, yf) = (x[x.len() - 1], y[0]);
        for (k, c) in self.base.mul(xl, yf)? {
            let mut w = Vec::with_capacity(x.len() + y.len() - 1);
            w.extend_from_slice(&x[..x.len() - 1]);
            w.push(k);
            w.extend_from_slice(&y[1..]);
            self.admit(&w)?;
            add_term(&mut out, w, &c);
        }
        Ok(out)
    }

    pub fn mul(&self, x: &WordSum, y: &WordSum) -> Result<WordSum, FreeprodError> {
        let mut out = WordSum::new();
        for (u, a) in x {
            for (v, b) in y {
                add_sum(&mut out, &self.mul_words(u, v)?, &(a * b));
            }
        }
        Ok(out)
    }

    /// `xy − (−1)^{|x||y|} yx` on basis words.
    pub fn graded_commutator(&self, x: &[usize], y: &[usize]) -> Result<WordSum, FreeprodError> {
        let mut out = self.mul_words(x, y)?;
        let s = -sign(self.degree(x) * self.degree(y));
        add_sum(&mut out, &self.mul_words(y, x)?, &s);
        Ok(out)
    }

    /// `x v y` for words `x`, `y`: pure concatenation.
    pub fn splice(&self, x: &[usize], y: &[usize]) -> Result<Vec<usize>, FreeprodError> {
        let mut w = x.to_vec();
        w.extend_from_slice(y);
        self.admit(&w)?;
        Ok(w)
    }

    /// Image of a word with `j ≥ 1` variables in the commutator quotient,
    /// as coordinates on `B^{⊗j}`: `(w₁, …, w_{j+1}) ↦ ±(w_{j+1}w₁, w₂, …, w_j)`.
    pub fn cyclic_merge(&self, w: &[usize]) -> Result<WordSum, FreeprodError> {
        let j = self.var_degree(w);
        if j == 0 {
            return Err(FreeprodError::DegreeZeroQuotient);
        }
        let last = w[j];
        let rest = self.degree(&w[..j]) + self.var.degree();
        let s = sign(self.base.degree(last) * rest);
        let mut out = WordSum::new();
        for (k, c) in self.base.mul(last, w[0])? {
            let mut u = vec![k];
            u.extend_from_slice(&w[1..j]);
            add_term(&mut out, u, &(&c * &s));
        }
        Ok(out)
    }
}

/// Something that acts on words, with its total degree and its shift in
/// the number of variables.
pub trait WordOperator {
    fn apply_word(&self, fp: &FreeProduct, w: &[usize]) -> Result<WordSum, FreeprodError>;
    fn degree(&self) -> i64;
    fn var_shift(&self) -> i64;

    fn apply(&self, fp: &FreeProduct, x: &WordSum) -> Result<WordSum, FreeprodError> {
        let mut out = WordSum::new();
        for (w, c) in x {
            add_sum(&mut out, &self.apply_word(fp, w)?, c);
        }
        Ok(out)
    }
}

type LetterMap<'a> = Box<dyn Fn(usize) -> Result<WordSum, FreeprodError> + 'a>;

/// Graded derivation of `B∗k[v]` from its values on base letters and on `v`.
pub struct WordDerivation<'a> {
    degree: i64,
    shift: i64,
    on_letter: LetterMap<'a>,
    on_var: WordSum,
}

impl<'a> WordDerivation<'a> {
    /// `degree` is the total degree; `shift` the change in variable count.
    pub fn new(
        degree: i64,
        shift: i64,
        on_letter: impl Fn(usize) -> Result<WordSum, FreeprodError> + 'a,
        on_var: WordSum,
    ) -> Result<Self, FreeprodError> {
        if !on_letter(0)?.is_empty() {
            return Err(FreeprodError::UnitNotKilled);
        }
        Ok(Self {
            degree,
            shift,
            on_letter: Box::new(on_letter),
            on_var,
        })
    }

    pub fn on_letter(&self, u: usize) -> Result<WordSum, FreeprodError> {
        (self.on_letter)(u)
    }
}

impl WordOperator for WordDerivation<'_> {
    fn degree(&self) -> i64 {
        self.degree
    }

    fn var_shift(&self) -> i64 {
        self.shift
    }

    fn apply_word(&self, fp: &FreeProduct, w: &[usize]) -> Result<WordSum, FreeprodError> {
        let mut out = WordSum::new();
        let vdeg = fp.var.degree();
        let mut prefix = 0i64;
        for k in 0..w.len() {
            // slot k
            let s = sign(self.degree * prefix);
            for (x, c) in self.on_letter(w[k])? {
                let mut u = Vec::with_capacity(w.len() + x.len());
                u.extend_from_slice(&w[..k]);
                u.extend_from_slice(&x);
                u.extend_from_slice(&w[k + 1..]);
                fp.admit(&u)?;
                add_term(&mut out, u, &(&c * &s));
            }
            prefix += fp.base.degree(w[k]);
            if k + 1 == w.len() || self.on_var.is_empty() {
                prefix += vdeg;
                continue;
            }
            // the variable between slots k and k+1
            let s = sign(self.degree * prefix);
            for (x, c) in &self.on_var {
                let left = fp.mul_words(&w[..=k], x)?;
                for (l, a) in left {
                    let whole = fp.mul_words(&l, &w[k + 1..])?;
                    add_sum(&mut out, &whole, &(&(&a * c) * &s));
                }
            }
            prefix += vdeg;
        }
        Ok(out)
    }
}

/// `[F, G] = FG − (−1)^{|F||G|} GF`.
pub struct Commutator<'a>(pub &'a dyn WordOperator, pub &'a dyn WordOperator);

impl WordOperator for Commutator<'_> {
    fn degree(&self) -> i64 {
        self.0.degree() + self.1.degree()
    }

    fn var_shift(&self) -> i64 {
        self.0.var_shift() + self.1.var_shift()
    }

    fn apply_word(&self, fp: &FreeProduct, w: &[usize]) -> Result<WordSum, FreeprodError> {
        let mut out = self.0.apply(fp, &self.1.apply_word(fp, w)?)?;
        let s = -sign(self.0.degree() * self.1.degree());
        add_sum(&mut out, &self.1.apply(fp, &self.0.apply_word(fp, w)?)?, &s);
        Ok(out)
    }
}

/// The t-derivation `f_t` of a linear map `f: B → B∗k[v]` with `f(1) = 0`:
/// `f` is inserted at each base slot with the Koszul sign of its
/// prefix, and `f_t(v) = 0`. `degree` is the total degree of `f`.
pub fn extend_t<'a>(
    degree: i64,
    shift: i64,
    f: impl Fn(usize) -> Result<WordSum, FreeprodError> + 'a,
) -> Result<WordDerivation<'a>, FreeprodError> {
    WordDerivation::new(degree, shift, f, WordSum::new())
}

/// `θ_t` for `θ ∈ Der(A)`, as words of one factor.
pub fn theta_t(theta: &crate::algebra::Derivation) -> WordDerivation<'_> {
    extend_t(0, 0, move |i| {
        Ok(theta.value(i).iter().map(|(k, c)| (vec![*k], c.clone())).collect())
    })
    .expect("derivations kill the unit")
}

/// `Θ_t` for `Θ ∈ Der(A, A⊗A)`: `a ↦ Θ′(a) t Θ″(a)`.
pub fn big_theta_t(theta: &crate::algebra::DoubleDerivation) -> WordDerivation<'_> {
    extend_t(2, 1, move |i| {
        Ok(theta.terms(i).into_iter().map(|(p, q, c)| (vec![p, q], c)).collect())
    })
    .expect("derivations kill the unit")
}

/// Coinvariants of `B^{⊗j}` under the rotation `T` twisted by the Koszul
/// sign of moving the last block `u_j v` to the front. With `v = t` and an
/// ungraded base this is `Id − T`; with `v = τ` it is `Id − (−1)^{j−1}T`.
#[derive(Debug, Clone)]
pub struct CyclicQuotient {
    pub j: usize,
    pub var: Variable,
    pub orbits: SignedOrbits,
    /// Base degree of each representative.
    pub rep_degrees: Vec<i64>,
}

impl CyclicQuotient {
    pub fn dim(&self) -> usize {
        self.orbits.dim()
    }

    pub fn dim_in_degree(&self, q: i64) -> usize {
        self.rep_degrees.iter().filter(|&&d| d == q).count()
    }

    /// Coordinates on `B^{⊗j}` (words of `j` factors) to quotient coordinates.
    pub fn project(&self, fp: &FreeProduct, s: &WordSum) -> SparseVec {
        self.orbits.project_vec(&fp.component(s, self.j - 1))
    }
}

pub fn cyclic_quotient(base: &dyn GradedBase, j: usize, var: Variable) -> CyclicQuotient {
    assert!(j >= 1);
    let fp = FreeProduct::new(base, var, j);
    let dim = base.dim();
    let n = dim.pow(j as u32);
    let top = dim.pow(j as u32 - 1);
    let orbits = SignedOrbits::new(n, |i| {
        let w = fp.word(j - 1, i);
        let last = w[j - 1];
        let rest = fp.base_degree(&w[..j - 1]) + var.degree() * (j as i64 - 1);
        let parity = (base.degree(last) + var.degree()) * rest;
        (last * top + i / dim, parity.rem_euclid(2) == 1)
    });
    let rep_degrees = orbits.reps().iter().map(|&r| fp.base_degree(&fp.word(j - 1, r))).collect();
    CyclicQuotient {
        j,
        var,
        orbits,
        rep_degrees,
    }
}

/// Matrix of a word operator from the words with `j` variables to those
/// with `j + shift`.
pub fn operator_matrix(
    fp: &FreeProduct,
    op: &dyn WordOperator,
    j: usize,
) -> Result<LinMap, FreeprodError> {
    let dim = fp.base.dim();
    let tj = (j as i64 + op.var_shift()) as usize;
    let cols: Result<Vec<SparseVec>, _> = (0..dim.pow(j as u32 + 1))
        .map(|i| Ok(fp.component(&op.apply_word(fp, &fp.word(j, i))?, tj)))
        .collect();
    Ok(LinMap::from_columns(dim.pow(tj as u32 + 1), cols?))
}

#[cfg(test)]
mod tests;
