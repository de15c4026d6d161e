//! First-order deformations of `A ⊕ (A⊗A)`: star products
//! `(u⊕U)⋆(v⊕V) = uv ⊕ (U·v + u·V + β(u,v))`, the Hochschild cochains
//! `Cⁿ(A, A⊗A)` for the outer bimodule, and the automorphism criterion for
//! `Id + Θ_t` on `A_t/(A_t⁺)²`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::algebra::{FinDimAlgebra, DoubleDerivation};
use crate::exactlin::{homology_dim, kernel, rank, LinMap, Rational, SparseVec, Subspace, VecBuilder};
use crate::report::{Check, Report};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DeformError {
    #[error("element of algebra {got} used with a product over algebra {want}")]
    ParentMismatch { want: u64, got: u64 },
}

/// `u·(p⊗q) = up⊗q`.
fn left(alg: &FinDimAlgebra, i: usize, m: &[(usize, Rational)]) -> SparseVec {
    let n = alg.dim();
    let mut b = VecBuilder::new();
    for (pq, c) in m {
        for (r, e) in alg.product(i, pq / n) {
            b.push(r * n + pq % n, c * e);
        }
    }
    b.finish()
}

/// `(p⊗q)·v = p⊗qv`.
fn right(alg: &FinDimAlgebra, m: &[(usize, Rational)], j: usize) -> SparseVec {
    let n = alg.dim();
    let mut b = VecBuilder::new();
    for (pq, c) in m {
        for (r, e) in alg.product(pq % n, j) {
            b.push(pq / n * n + r, c * e);
        }
    }
    b.finish()
}

/// `β: A×A → A⊗A`; column `u·dim + v` is `β(b_u, b_v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cochain2 {
    pub parent: u64,
    pub matrix: LinMap,
}

impl Cochain2 {
    pub fn zero(alg: &FinDimAlgebra) -> Self {
        let n2 = alg.dim() * alg.dim();
        Self {
            parent: alg.id(),
            matrix: LinMap::zero(n2, n2),
        }
    }

    pub fn from_vec(alg: &FinDimAlgebra, v: &[(usize, Rational)]) -> Self {
        let n2 = alg.dim() * alg.dim();
        let mut cols: Vec<VecBuilder> = (0..n2).map(|_| VecBuilder::new()).collect();
        for (idx, c) in v {
            cols[idx / n2].push(idx % n2, c.clone());
        }
        Self {
            parent: alg.id(),
            matrix: LinMap::from_columns(n2, cols.into_iter().map(VecBuilder::finish).collect()),
        }
    }

    /// Coordinates in `C²`, `(u·dim + v)·dim² + (p·dim + q)`.
    pub fn to_vec(&self) -> SparseVec {
        let n2 = self.matrix.rows();
        let mut out = Vec::new();
        for (col, v) in self.matrix.columns().iter().enumerate() {
            out.extend(v.iter().map(|(r, c)| (col * n2 + r, c.clone())));
        }
        out
    }

    pub fn minus(&self, other: &Cochain2) -> Cochain2 {
        Cochain2 {
            parent: self.parent,
            matrix: self.matrix.minus(&other.matrix),
        }
    }

    /// `β(1,·) = β(·,1) = 0`.
    pub fn is_normalized(&self, dim: usize) -> bool {
        (0..dim).all(|i| self.matrix.column(i).is_empty() && self.matrix.column(i * dim).is_empty())
    }
}

/// An element of `A ⊕ (A⊗A)`: coordinates `< dim` are `A`, the rest `A⊗A`
/// shifted by `dim`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StarElement {
    pub parent: u64,
    pub coords: SparseVec,
}

#[derive(Debug, Clone)]
pub struct StarAlgebra<'a> {
    pub alg: &'a FinDimAlgebra,
    pub beta: Cochain2,
}

impl<'a> StarAlgebra<'a> {
    pub fn new(alg: &'a FinDimAlgebra, beta: Cochain2) -> Result<Self, DeformError> {
        if beta.parent != alg.id() {
            return Err(DeformError::ParentMismatch {
                want: alg.id(),
                got: beta.parent,
            });
        }
        Ok(Self { alg, beta })
    }

    pub fn dim(&self) -> usize {
        let n = self.alg.dim();
        n + n * n
    }

    pub fn element(&self, a: &[(usize, Rational)], w: &[(usize, Rational)]) -> StarElement {
        let n = self.alg.dim();
        let mut coords = a.to_vec();
        coords.extend(w.iter().map(|(i, c)| (i + n, c.clone())));
        StarElement {
            parent: self.alg.id(),
            coords,
        }
    }

    pub fn basis(&self, i: usize) -> StarElement {
        StarElement {
            parent: self.alg.id(),
            coords: vec![(i, Rational::one())],
        }
    }

    fn mul_coords(&self, x: &[(usize, Rational)], y: &[(usize, Rational)]) -> SparseVec {
        let n = self.alg.dim();
        let mut b = VecBuilder::new();
        for (i, a) in x {
            for (j, c) in y {
                let ac = a * c;
                match (*i < n, *j < n) {
                    (true, true) => {
                        b.add_scaled(self.alg.product(*i, *j), &ac);
                        let beta = self.beta.matrix.column(i * n + j);
                        b.add_scaled(&shift(beta, n), &ac);
                    }
                    (false, true) => {
                        let u = right(self.alg, &[(i - n, Rational::one())], *j);
                        b.add_scaled(&shift(&u, n), &ac);
                    }
                    (true, false) => {
                        let v = left(self.alg, *i, &[(j - n, Rational::one())]);
                        b.add_scaled(&shift(&v, n), &ac);
                    }
                    (false, false) => {}
                }
            }
        }
        b.finish()
    }

    pub fn mul(&self, x: &StarElement, y: &StarElement) -> Result<StarElement, DeformError> {
        for e in [x, y] {
            if e.parent != self.alg.id() {
                return Err(DeformError::ParentMismatch {
                    want: self.alg.id(),
                    got: e.parent,
                });
            }
        }
        Ok(StarElement {
            parent: self.alg.id(),
            coords: self.mul_coords(&x.coords, &y.coords),
        })
    }

    /// First basis triple where `(x⋆y)⋆z ≠ x⋆(y⋆z)`.
    pub fn associativity_violation(&self) -> Option<(usize, usize, usize)> {
        let d = self.dim();
        let e = |i: usize| vec![(i, Rational::one())];
        for i in 0..d {
            for j in 0..d {
                let ij = self.mul_coords(&e(i), &e(j));
                for k in 0..d {
                    let jk = self.mul_coords(&e(j), &e(k));
                    if self.mul_coords(&ij, &e(k)) != self.mul_coords(&e(i), &jk) {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }
}

fn shift(v: &[(usize, Rational)], by: usize) -> SparseVec {
    v.iter().map(|(i, c)| (i + by, c.clone())).collect()
}

pub fn star_product(beta: &Cochain2, alg: &FinDimAlgebra, x: &StarElement, y: &StarElement) -> Result<StarElement, DeformError> {
    StarAlgebra::new(alg, beta.clone())?.mul(x, y)
}

pub fn is_associative(alg: &FinDimAlgebra, beta: &Cochain2) -> bool {
    StarAlgebra::new(alg, beta.clone())
        .map(|s| s.associativity_violation().is_none())
        .unwrap_or(false)
}

/// `u·β(v,w) − β(uv,w) + β(u,vw) − β(u,v)·w = 0` on all basis triples.
pub fn is_cocycle(alg: &FinDimAlgebra, beta: &Cochain2) -> bool {
    let n = alg.dim();
    let m = &beta.matrix;
    let pair = |x: &[(usize, Rational)], w: usize| -> SparseVec {
        let mut b = VecBuilder::new();
        for (k, c) in x {
            b.add_scaled(m.column(k * n + w), c);
        }
        b.finish()
    };
    for u in 0..n {
        for v in 0..n {
            for w in 0..n {
                let mut b = VecBuilder::new();
                let one = Rational::one();
                let neg = Rational::from_int(-1);
                b.add_scaled(&left(alg, u, m.column(v * n + w)), &one);
                b.add_scaled(&pair(alg.product(u, v), w), &neg);
                let vw = alg.product(v, w);
                let mut t = VecBuilder::new();
                for (k, c) in vw {
                    t.add_scaled(m.column(u * n + k), c);
                }
                b.add_scaled(&t.finish(), &one);
                b.add_scaled(&right(alg, m.column(u * n + v), w), &neg);
                if !b.finish().is_empty() {
                    return false;
                }
            }
        }
    }
    true
}

/// Hochschild coboundary `δ: Cⁿ(A, A⊗A) → Cⁿ⁺¹(A, A⊗A)`. Cochain coordinates
/// are `tuple·dim² + (p·dim + q)` with tuples in mixed radix. With
/// `normalized`, tuple entries range over `Ā` and components along the unit
/// are dropped.
pub fn coboundary(alg: &FinDimAlgebra, n: usize, normalized: bool) -> LinMap {
    let dim = alg.dim();
    let m = dim * dim;
    let lo = usize::from(normalized);
    let r = dim - lo;
    let count = |k: usize| r.pow(k as u32);
    let decode = |k: usize, mut idx: usize| {
        let mut t = vec![0; k];
        for s in t.iter_mut().rev() {
            *s = idx % r + lo;
            idx /= r;
        }
        t
    };
    let encode = |t: &[usize]| -> Option<usize> {
        t.iter().try_fold(0usize, |acc, &s| (s >= lo).then(|| acc * r + (s - lo)))
    };
    let mut triples = Vec::new();
    for s_idx in 0..count(n + 1) {
        let s = decode(n + 1, s_idx);
        let row = |x: usize| s_idx * m + x;
        // s₀·f(s₁, …)
        let t = encode(&s[1..]).expect("in range");
        for x in 0..m {
            for (y, c) in left(alg, s[0], &[(x, Rational::one())]) {
                triples.push((row(y), t * m + x, c));
            }
        }
        for i in 0..n {
            let sign = Rational::from_int(if i % 2 == 0 { -1 } else { 1 });
            for (k, c) in alg.product(s[i], s[i + 1]) {
                let mut u = s[..i].to_vec();
                u.push(*k);
                u.extend_from_slice(&s[i + 2..]);
                if let Some(t) = encode(&u) {
                    for x in 0..m {
                        triples.push((row(x), t * m + x, c * &sign));
                    }
                }
            }
        }
        let sign = Rational::from_int(if (n + 1) % 2 == 0 { 1 } else { -1 });
        let t = encode(&s[..n]).expect("in range");
        for x in 0..m {
            for (y, c) in right(alg, &[(x, Rational::one())], s[n]) {
                triples.push((row(y), t * m + x, &c * &sign));
            }
        }
    }
    LinMap::from_triples(count(n + 1) * m, count(n) * m, triples)
}

/// `dim H²(A, A⊗A)` from the normalized cochains `Hom(Ā^{⊗n}, A⊗A)`.
pub fn h2_dimension(alg: &FinDimAlgebra) -> usize {
    homology_dim(&coboundary(alg, 1, true), &coboundary(alg, 2, true)).expect("δ² = 0")
}

/// The same from the un-normalized complex.
pub fn h2_unnormalized(alg: &FinDimAlgebra) -> usize {
    homology_dim(&coboundary(alg, 1, false), &coboundary(alg, 2, false)).expect("δ² = 0")
}

/// A 1-cochain `f` with `β − γ = δf`, if any.
pub fn equivalence_witness(alg: &FinDimAlgebra, beta: &Cochain2, gamma: &Cochain2) -> Option<SparseVec> {
    let d1 = coboundary(alg, 1, false);
    let target = beta.minus(gamma).to_vec();
    crate::exactlin::solve(&d1, &target)
}

pub fn equivalence_check(alg: &FinDimAlgebra, beta: &Cochain2, gamma: &Cochain2) -> bool {
    equivalence_witness(alg, beta, gamma).is_some()
}

/// `(u, U) ↦ (u, U + f(u))` is an algebra map `⋆_β → ⋆_γ` on all basis pairs.
pub fn is_star_isomorphism(alg: &FinDimAlgebra, f: &[(usize, Rational)], beta: &Cochain2, gamma: &Cochain2) -> bool {
    let n = alg.dim();
    let m = n * n;
    let (sb, sg) = match (StarAlgebra::new(alg, beta.clone()), StarAlgebra::new(alg, gamma.clone())) {
        (Ok(a), Ok(b)) => (a, b),
        _ => return false,
    };
    let mut fcol: Vec<VecBuilder> = (0..n).map(|_| VecBuilder::new()).collect();
    for (idx, c) in f {
        fcol[idx / m].push(idx % m + n, c.clone());
    }
    let fcol: Vec<SparseVec> = fcol.into_iter().map(VecBuilder::finish).collect();
    let phi = |x: &[(usize, Rational)]| -> SparseVec {
        let mut b = VecBuilder::new();
        b.add_scaled(x, &Rational::one());
        for (i, c) in x {
            if *i < n {
                b.add_scaled(&fcol[*i], c);
            }
        }
        b.finish()
    };
    let e = |i: usize| vec![(i, Rational::one())];
    let d = sb.dim();
    (0..d).all(|i| {
        (0..d).all(|j| phi(&sb.mul_coords(&e(i), &e(j))) == sg.mul_coords(&phi(&e(i)), &phi(&e(j))))
    })
}

/// Outcome of the automorphism test for `Id + Θ_t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DelDerOutcome {
    pub automorphism: bool,
    /// First basis pair of `A` where multiplicativity fails.
    pub multiplicativity_witness: Option<(usize, usize)>,
    pub leibniz_witness: Option<(usize, usize)>,
}

/// `Θ: Ā → A⊗A` (a `dim² × (dim − 1)` matrix). `Id + Θ_t` on
/// `A_t/(A_t⁺)² = A ⊕ (A⊗A)` with `β = 0` maps `u ↦ u + Θ(u)` and fixes
/// `A⊗A`; it is bijective since `Θ_t` is nilpotent.
pub fn del_der_automorphism_check(alg: &FinDimAlgebra, theta: &LinMap) -> DelDerOutcome {
    let n = alg.dim();
    let star = StarAlgebra::new(alg, Cochain2::zero(alg)).expect("same parent");
    let value = |i: usize| -> SparseVec {
        if i == 0 {
            Vec::new()
        } else {
            shift(theta.column(i - 1), n)
        }
    };
    let phi = |x: &[(usize, Rational)]| -> SparseVec {
        let mut b = VecBuilder::new();
        b.add_scaled(x, &Rational::one());
        for (i, c) in x {
            if *i < n {
                b.add_scaled(&value(*i), c);
            }
        }
        b.finish()
    };
    let e = |i: usize| vec![(i, Rational::one())];
    let d = star.dim();
    let mut witness = None;
    let mut all = true;
    for i in 0..d {
        for j in 0..d {
            let ok = phi(&star.mul_coords(&e(i), &e(j))) == star.mul_coords(&phi(&e(i)), &phi(&e(j)));
            if !ok {
                all = false;
                if witness.is_none() && i < n && j < n {
                    witness = Some((i, j));
                }
            }
        }
    }
    let dd = DoubleDerivation {
        matrix: theta.clone(),
    };
    DelDerOutcome {
        automorphism: all,
        multiplicativity_witness: witness,
        leibniz_witness: dd.leibniz_violation(alg),
    }
}

fn random_cochain(alg: &FinDimAlgebra, rng: &mut ChaCha8Rng, density: usize) -> Cochain2 {
    let n2 = alg.dim() * alg.dim();
    let mut b = VecBuilder::new();
    for _ in 0..density {
        b.push(rng.gen_range(0..n2 * n2), Rational::from_int(rng.gen_range(-3..=3)));
    }
    Cochain2::from_vec(alg, &b.finish())
}

fn random_combination(basis: &[SparseVec], rng: &mut ChaCha8Rng) -> SparseVec {
    let mut b = VecBuilder::new();
    for v in basis {
        b.add_scaled(v, &Rational::from_int(rng.gen_range(-2..=2)));
    }
    b.finish()
}

/// Associativity against the cocycle condition, equivalence against
/// coboundaries, `H²` against the un-normalized oracle, and the
/// automorphism criterion for `Id + Θ_t`.
pub fn deform_suite(alg: &FinDimAlgebra, seed: u64) -> Report {
    let name = alg.name().to_string();
    let mut r = Report::with_seed(seed);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let d1 = coboundary(alg, 1, false);
    let d2 = coboundary(alg, 2, false);
    r.push(Check::holds("coboundary squares to zero", &name, Some(2), d2.then_after(&d1).is_zero()));
    let z2 = kernel(&d2);
    let z2_basis: Vec<SparseVec> = z2.basis().to_vec();

    let mut tested: Vec<(String, Cochain2)> = z2_basis
        .iter()
        .enumerate()
        .map(|(k, v)| (format!("Z2 basis {k}"), Cochain2::from_vec(alg, v)))
        .collect();
    for k in 0..20 {
        let beta = if k % 2 == 0 {
            random_cochain(alg, &mut rng, 6)
        } else {
            Cochain2::from_vec(alg, &random_combination(&z2_basis, &mut rng))
        };
        tested.push((format!("random {k}"), beta));
    }
    let c1 = d1.cols();
    let mut coboundaries = Vec::new();
    for _ in 0..5 {
        let f: SparseVec = (0..c1)
            .filter_map(|i| {
                let c = rng.gen_range(-2..=2);
                (c != 0 && rng.gen_bool(0.3)).then(|| (i, Rational::from_int(c)))
            })
            .collect();
        coboundaries.push((f.clone(), Cochain2::from_vec(alg, &d1.apply(&f))));
    }
    for (k, (_, b)) in coboundaries.iter().enumerate() {
        tested.push((format!("coboundary {k}"), b.clone()));
    }
    let mut disagree = 0;
    let mut assoc_count = 0;
    for (_, beta) in &tested {
        let a = is_associative(alg, beta);
        assoc_count += usize::from(a);
        if a != is_cocycle(alg, beta) {
            disagree += 1;
        }
    }
    r.push(Check::count(
        &format!("associative iff cocycle ({} cochains, {assoc_count} associative)", tested.len()),
        &name,
        Some(2),
        0,
        disagree,
    ));

    let zero = Cochain2::zero(alg);
    let mut bad = 0;
    for (f, beta) in &coboundaries {
        if !equivalence_check(alg, beta, &zero) || !is_star_isomorphism(alg, f, beta, &zero) {
            bad += 1;
        }
    }
    r.push(Check::count("coboundaries are equivalent to 0", &name, Some(2), 0, bad));

    // Over the Z² basis: equivalent iff the difference is a coboundary, and
    // every witness really is an isomorphism of star products.
    let b2 = Subspace::column_space(&d1);
    let mut bad = 0;
    let cocycles: Vec<&Cochain2> = tested.iter().take(z2_basis.len().min(12)).map(|(_, b)| b).collect();
    for a in &cocycles {
        for b in &cocycles {
            let diff = a.minus(b).to_vec();
            let in_b2 = b2.contains(&diff);
            match equivalence_witness(alg, a, b) {
                Some(f) => bad += usize::from(!in_b2 || !is_star_isomorphism(alg, &f, a, b)),
                None => bad += usize::from(in_b2),
            }
        }
    }
    r.push(Check::count("equivalent iff difference is a coboundary", &name, Some(2), 0, bad));

    let h2 = h2_dimension(alg);
    r.push(Check::count("H^2(A, A(x)A) normalized = un-normalized", &name, Some(2), h2_unnormalized(alg), h2));
    let classes = z2.dim() - rank(&d1);
    r.push(Check::count("independent classes in a Z^2 basis", &name, Some(2), h2, classes));

    // Id + Θ_t
    let delta = crate::algebra::delta(alg);
    let out = del_der_automorphism_check(alg, &delta.matrix);
    r.push(Check::holds("Id + Delta_t is an automorphism", &name, None, out.automorphism && out.leibniz_witness.is_none()));
    let zero_theta = LinMap::zero(alg.dim() * alg.dim(), alg.dim() - 1);
    let out = del_der_automorphism_check(alg, &zero_theta);
    r.push(Check::holds("Id + 0 is an automorphism", &name, None, out.automorphism));
    let mut bad = 0;
    let mut samples = 0;
    for th in crate::algebra::solve_double_derivations(alg).iter().take(4) {
        samples += 1;
        let out = del_der_automorphism_check(alg, &th.matrix);
        bad += usize::from(!out.automorphism || out.leibniz_witness.is_some());
    }
    for _ in 0..6 {
        samples += 1;
        let n = alg.dim();
        let m = LinMap::from_fn(n * n, n - 1, |_| {
            (0..n * n)
                .filter_map(|i| rng.gen_bool(0.2).then(|| (i, Rational::from_int(rng.gen_range(1..=2)))))
                .collect()
        });
        let out = del_der_automorphism_check(alg, &m);
        let agree = out.automorphism == out.leibniz_witness.is_none()
            && out.multiplicativity_witness == out.leibniz_witness;
        bad += usize::from(!agree);
    }
    r.push(Check::count(
        &format!("automorphism iff Leibniz, same witness ({samples} maps)"),
        &name,
        None,
        0,
        bad,
    ));
    r
}

#[cfg(test)]
mod tests;
