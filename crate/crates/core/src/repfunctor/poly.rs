//! Commutative polynomial forms on `Rep(k⟨x₁…xₘ⟩, kᵈ) × 𝔤`: polynomials in
//! `Xₖ[i,j]` and `Y[i,j]`, exterior algebra on the `dXₖ[i,j]` only.

use std::cmp::Ordering;
use std::collections::BTreeMap;

use crate::exactlin::Rational;

/// Variable layout: `Xₖ[i,j]` is `k·d² + i·d + j`, `Y[i,j]` is `m·d² + i·d + j`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Vars {
    pub m: usize,
    pub d: usize,
}

impl Vars {
    pub fn new(m: usize, d: usize) -> Self {
        assert!(m >= 1 && d >= 1);
        Vars { m, d }
    }

    pub fn x(&self, k: usize, i: usize, j: usize) -> u32 {
        (k * self.d * self.d + i * self.d + j) as u32
    }

    pub fn y(&self, i: usize, j: usize) -> u32 {
        (self.m * self.d * self.d + i * self.d + j) as u32
    }

    pub fn count(&self) -> usize {
        (self.m + 1) * self.d * self.d
    }

    pub fn is_x(&self, v: u32) -> bool {
        (v as usize) < self.m * self.d * self.d
    }

    /// `(k, i, j)` with `k = m` for `Y`.
    pub fn decode(&self, v: u32) -> (usize, usize, usize) {
        let v = v as usize;
        let dd = self.d * self.d;
        (v / dd, (v % dd) / self.d, v % self.d)
    }

    pub fn name(&self, v: u32) -> String {
        let (k, i, j) = self.decode(v);
        if k == self.m {
            format!("Y[{i},{j}]")
        } else {
            format!("X{}[{i},{j}]", k + 1)
        }
    }
}

/// Monomial as a sorted multiset of variable ids, ordered graded-lex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Mono(pub Vec<u32>);

impl Ord for Mono {
    fn cmp(&self, o: &Self) -> Ordering {
        self.0.len().cmp(&o.0.len()).then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

impl Mono {
    pub fn times(&self, o: &Mono) -> Mono {
        let mut v = Vec::with_capacity(self.0.len() + o.0.len());
        v.extend_from_slice(&self.0);
        v.extend_from_slice(&o.0);
        v.sort_unstable();
        Mono(v)
    }
}

fn add_into<K: Ord>(map: &mut BTreeMap<K, Rational>, k: K, c: &Rational) {
    if c.is_zero() {
        return;
    }
    use std::collections::btree_map::Entry;
    match map.entry(k) {
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

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct Poly {
    pub terms: BTreeMap<Mono, Rational>,
}

impl Poly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn constant(c: Rational) -> Self {
        let mut p = Self::zero();
        add_into(&mut p.terms, Mono::default(), &c);
        p
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn var(v: u32) -> Self {
        let mut p = Self::zero();
        p.terms.insert(Mono(vec![v]), Rational::one());
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_scaled(&mut self, o: &Poly, c: &Rational) {
        for (m, a) in &o.terms {
            add_into(&mut self.terms, m.clone(), &(a * c));
        }
    }

    pub fn mul(&self, o: &Poly) -> Poly {
        let mut p = Poly::zero();
        for (m1, a) in &self.terms {
            for (m2, b) in &o.terms {
                add_into(&mut p.terms, m1.times(m2), &(a * b));
            }
        }
        p
    }

    /// `∂/∂v`.
    pub fn deriv(&self, v: u32) -> Poly {
        let mut p = Poly::zero();
        for (m, a) in &self.terms {
            let e = m.0.iter().filter(|&&w| w == v).count();
            if e == 0 {
                continue;
            }
            let mut rest = m.0.clone();
            let pos = rest.iter().position(|&w| w == v).unwrap();
            rest.remove(pos);
            add_into(&mut p.terms, Mono(rest), &(a * &Rational::from_int(e as i64)));
        }
        p
    }

    /// Variables that occur, sorted and deduplicated.
    pub fn support(&self) -> Vec<u32> {
        let mut v: Vec<u32> = self.terms.keys().flat_map(|m| m.0.iter().copied()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    /// Derivation along the vector field `v ↦ field(v)`.
    pub fn along(&self, field: &dyn Fn(u32) -> Poly) -> Poly {
        let mut p = Poly::zero();
        for v in self.support() {
            let f = field(v);
            if !f.is_zero() {
                p.add_scaled(&self.deriv(v).mul(&f), &Rational::one());
            }
        }
        p
    }

    pub fn render(&self, vars: &Vars) -> String {
        render_terms(self.terms.iter().map(|(m, c)| (m, &[][..], c)), vars)
    }
}

fn render_terms<'a>(
    it: impl Iterator<Item = (&'a Mono, &'a [u32], &'a Rational)>,
    vars: &Vars,
) -> String {
    let mut parts = Vec::new();
    for (m, s, c) in it {
        let mut f: Vec<String> = m.0.iter().map(|&v| vars.name(v)).collect();
        f.extend(s.iter().map(|&v| format!("d{}", vars.name(v))));
        let body = f.join("*");
        parts.push(match (body.is_empty(), c.is_one()) {
            (true, _) => c.to_string(),
            (false, true) => body,
            (false, false) => format!("{c}*{body}"),
        });
    }
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

/// Sign of sorting `s` and whether it has a repeat.
fn sort_sign(s: &mut [u32]) -> Option<bool> {
    let mut neg = false;
    for i in 1..s.len() {
        let mut j = i;
        while j > 0 && s[j - 1] > s[j] {
            s.swap(j - 1, j);
            neg = !neg;
            j -= 1;
        }
    }
    if s.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some(neg)
    }
}

/// Element of `Ω•(Rep) ⊗ k[𝔤]`: terms `c · monomial · dX_{s₁}∧…∧dX_{s_p}`
/// with `s₁ < … < s_p`.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct EqForm {
    pub terms: BTreeMap<(Vec<u32>, Mono), Rational>,
}

impl EqForm {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn from_poly(p: &Poly) -> Self {
        let mut f = Self::zero();
        for (m, c) in &p.terms {
            f.terms.insert((Vec::new(), m.clone()), c.clone());
        }
        f
    }

    pub fn dvar(v: u32) -> Self {
        let mut f = Self::zero();
        f.terms.insert((vec![v], Mono::default()), Rational::one());
        f
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_scaled(&mut self, o: &EqForm, c: &Rational) {
        for (k, a) in &o.terms {
            add_into(&mut self.terms, k.clone(), &(a * c));
        }
    }

    pub fn scaled(&self, c: &Rational) -> EqForm {
        let mut f = EqForm::zero();
        f.add_scaled(self, c);
        f
    }

    /// Exterior degrees that occur.
    pub fn degrees(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.terms.keys().map(|(s, _)| s.len()).collect();
        v.sort_unstable();
        v.dedup();
        v
    }

    pub fn wedge(&self, o: &EqForm) -> EqForm {
        let mut f = EqForm::zero();
        for ((s1, m1), a) in &self.terms {
            for ((s2, m2), b) in &o.terms {
                let mut s: Vec<u32> = s1.iter().chain(s2).copied().collect();
                let Some(neg) = sort_sign(&mut s) else { continue };
                let c = a * b;
                add_into(&mut f.terms, (s, m1.times(m2)), &if neg { -c } else { c });
            }
        }
        f
    }

    pub fn mul_poly(&self, p: &Poly) -> EqForm {
        self.wedge(&EqForm::from_poly(p))
    }

    /// `d` of a polynomial, differentiating only the `X` variables.
    pub fn d_poly(p: &Poly, vars: &Vars) -> EqForm {
        let mut f = EqForm::zero();
        for v in p.support() {
            if vars.is_x(v) {
                f.add_scaled(&EqForm::dvar(v).mul_poly(&p.deriv(v)), &Rational::one());
            }
        }
        f
    }

    /// The de Rham differential `d ⊗ Id` (the `Y` are constants).
    pub fn d_dr(&self, vars: &Vars) -> EqForm {
        let mut f = EqForm::zero();
        for ((s, m), c) in &self.terms {
            let coef = Poly {
                terms: [(m.clone(), c.clone())].into_iter().collect(),
            };
            let tail = EqForm {
                terms: [((s.clone(), Mono::default()), Rational::one())].into_iter().collect(),
            };
            f.add_scaled(&EqForm::d_poly(&coef, vars).wedge(&tail), &Rational::one());
        }
        f
    }

    /// Contraction with the vector field whose `dX_v` component is `field(v)`.
    pub fn contract(&self, field: &dyn Fn(u32) -> Poly) -> EqForm {
        let mut f = EqForm::zero();
        for ((s, m), c) in &self.terms {
            for l in 0..s.len() {
                let val = field(s[l]);
                if val.is_zero() {
                    continue;
                }
                let mut rest = s.clone();
                rest.remove(l);
                let base = EqForm {
                    terms: [((rest, m.clone()), c.clone())].into_iter().collect(),
                };
                let sign = Rational::from_int(if l % 2 == 0 { 1 } else { -1 });
                f.add_scaled(&base.mul_poly(&val), &sign);
            }
        }
        f
    }

    /// Lie derivative along the vector field `field` on all variables;
    /// `dX_v ↦ d(field(v))`.
    pub fn lie(&self, field: &dyn Fn(u32) -> Poly, vars: &Vars) -> EqForm {
        let mut f = EqForm::zero();
        for ((s, m), c) in &self.terms {
            let coef = Poly {
                terms: [(m.clone(), c.clone())].into_iter().collect(),
            };
            let wedge_of = |syms: &[u32]| EqForm {
                terms: [((syms.to_vec(), Mono::default()), Rational::one())].into_iter().collect(),
            };
            f.add_scaled(&wedge_of(s).mul_poly(&coef.along(field)), &Rational::one());
            for l in 0..s.len() {
                let dv = EqForm::d_poly(&field(s[l]), vars);
                let piece = wedge_of(&s[..l]).wedge(&dv).wedge(&wedge_of(&s[l + 1..]));
                f.add_scaled(&piece.mul_poly(&coef), &Rational::one());
            }
        }
        f
    }

    pub fn render(&self, vars: &Vars) -> String {
        render_terms(self.terms.iter().map(|((s, m), c)| (m, s.as_slice(), c)), vars)
    }
}

/// `d×d` matrix of polynomials.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    pub d: usize,
    pub entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn identity(d: usize) -> Self {
        let mut entries = vec![Poly::zero(); d * d];
        for i in 0..d {
            entries[i * d + i] = Poly::one();
        }
        PolyMatrix { d, entries }
    }

    /// The generic matrix whose `(i,j)` entry is the variable `var(i,j)`.
    pub fn generic(d: usize, var: impl Fn(usize, usize) -> u32) -> Self {
        let entries = (0..d * d).map(|x| Poly::var(var(x / d, x % d))).collect();
        PolyMatrix { d, entries }
    }

    pub fn get(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.d + j]
    }

    pub fn mul(&self, o: &PolyMatrix) -> PolyMatrix {
        let d = self.d;
        let mut entries = vec![Poly::zero(); d * d];
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    entries[i * d + j].add_scaled(&a.mul(o.get(k, j)), &Rational::one());
                }
            }
        }
        PolyMatrix { d, entries }
    }

    pub fn trace(&self) -> Poly {
        let mut p = Poly::zero();
        for i in 0..self.d {
            p.add_scaled(self.get(i, i), &Rational::one());
        }
        p
    }
}

/// `d×d` matrix of forms, multiplied with the exterior product.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormMatrix {
    pub d: usize,
    pub entries: Vec<EqForm>,
}

impl FormMatrix {
    pub fn zero(d: usize) -> Self {
        FormMatrix {
            d,
            entries: vec![EqForm::zero(); d * d],
        }
    }

    pub fn identity(d: usize) -> Self {
        Self::from_poly(&PolyMatrix::identity(d))
    }

    pub fn from_poly(p: &PolyMatrix) -> Self {
        FormMatrix {
            d: p.d,
            entries: p.entries.iter().map(EqForm::from_poly).collect(),
        }
    }

    /// Entrywise `d`, on `X` only.
    pub fn d_of(p: &PolyMatrix, vars: &Vars) -> Self {
        FormMatrix {
            d: p.d,
            entries: p.entries.iter().map(|e| EqForm::d_poly(e, vars)).collect(),
        }
    }

    pub fn get(&self, i: usize, j: usize) -> &EqForm {
        &self.entries[i * self.d + j]
    }

    pub fn add_scaled(&mut self, o: &FormMatrix, c: &Rational) {
        for (a, b) in self.entries.iter_mut().zip(&o.entries) {
            a.add_scaled(b, c);
        }
    }

    pub fn mul(&self, o: &FormMatrix) -> FormMatrix {
        let d = self.d;
        let mut out = FormMatrix::zero(d);
        for i in 0..d {
            for k in 0..d {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..d {
                    out.entries[i * d + j].add_scaled(&a.wedge(o.get(k, j)), &Rational::one());
                }
            }
        }
        out
    }

    pub fn trace(&self) -> EqForm {
        let mut f = EqForm::zero();
        for i in 0..self.d {
            f.add_scaled(self.get(i, i), &Rational::one());
        }
        f
    }
}
