//! Noncommutative differential forms `Ωⁿ A = A ⊗ Ā^{⊗n}` and their operators.
//!
//! A basis form `b_{i₀} db_{i₁} ⋯ db_{iₙ}` (with `i₀ ∈ 0..dim`, `iⱼ ∈ 1..dim`)
//! has index `i₀·(dim−1)ⁿ + Σⱼ (iⱼ−1)·(dim−1)^{n−j}`. Appending slots is
//! therefore multiplication by a power of `dim − 1` plus an offset.

mod double;

pub use double::{BiFormMap, BiKind};

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use thiserror::Error;

use crate::algebra::FinDimAlgebra;
use crate::exactlin::{LinMap, Rational, SparseVec, VecBuilder};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormError {
    #[error("forms belong to different algebras")]
    ParentMismatch,
    #[error("expected a form of degree {expected}, got degree {got}")]
    WrongDegree { expected: usize, got: usize },
}

/// Index arithmetic for the tuple basis of `Ωⁿ`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shape {
    pub dim: usize,
}

impl Shape {
    pub fn slots_dim(&self, n: usize) -> usize {
        (self.dim - 1).pow(n as u32)
    }

    pub fn form_dim(&self, n: usize) -> usize {
        self.dim * self.slots_dim(n)
    }

    /// `Ω̄⁰ = Ā`, `Ω̄ⁿ = Ωⁿ` for `n ≥ 1`.
    pub fn reduced_dim(&self, n: usize) -> usize {
        if n == 0 {
            self.dim - 1
        } else {
            self.form_dim(n)
        }
    }

    pub fn encode(&self, i0: usize, slots: &[usize]) -> usize {
        let r = self.dim - 1;
        slots.iter().fold(i0, |acc, &s| acc * r + (s - 1))
    }

    pub fn decode(&self, n: usize, mut idx: usize) -> (usize, Vec<usize>) {
        let r = self.dim - 1;
        let mut slots = vec![0; n];
        for s in slots.iter_mut().rev() {
            *s = idx % r + 1;
            idx /= r;
        }
        (idx, slots)
    }

    /// Index of `ω ⌢ dbₛ₁…dbₛₖ` for `ω` of index `idx`.
    pub fn append(&self, idx: usize, slots: &[usize]) -> usize {
        let r = self.dim - 1;
        slots.iter().fold(idx, |acc, &s| acc * r + (s - 1))
    }

    /// Concatenation with a slot block given by its index in `Ā^{⊗k}`.
    pub fn append_block(&self, idx: usize, block: usize, k: usize) -> usize {
        idx * self.slots_dim(k) + block
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Key {
    D(usize),
    B(usize),
    Kappa(usize),
    KappaSum(usize, usize),
    RightMul(usize, usize),
    ConnesB(usize),
    IotaNb(usize),
}

/// Exact form in `Ωⁿ` of a particular algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Form {
    parent: u64,
    pub degree: usize,
    pub coeffs: SparseVec,
}

impl Form {
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }
}

/// Operator factory for the forms of one algebra. Matrices are built column
/// by column from basis forms and memoized per degree.
#[derive(Debug)]
pub struct Forms {
    alg: Arc<FinDimAlgebra>,
    shape: Shape,
    cache: Mutex<HashMap<Key, Arc<LinMap>>>,
}

fn sgn(k: usize) -> Rational {
    if k % 2 == 0 {
        Rational::one()
    } else {
        Rational::from_int(-1)
    }
}

impl Forms {
    pub fn new(alg: FinDimAlgebra) -> Self {
        Self::from_arc(Arc::new(alg))
    }

    pub fn from_arc(alg: Arc<FinDimAlgebra>) -> Self {
        let shape = Shape { dim: alg.dim() };
        Self {
            alg,
            shape,
            cache: Mutex::new(HashMap::new()),
        }
    }

    pub fn algebra(&self) -> &FinDimAlgebra {
        &self.alg
    }

    pub fn algebra_arc(&self) -> Arc<FinDimAlgebra> {
        Arc::clone(&self.alg)
    }

    pub fn shape(&self) -> Shape {
        self.shape
    }

    pub fn dim(&self, n: usize) -> usize {
        self.shape.form_dim(n)
    }

    pub fn reduced_dim(&self, n: usize) -> usize {
        self.shape.reduced_dim(n)
    }

    fn cached<F>(&self, key: Key, build: F) -> Arc<LinMap>
    where
        F: FnOnce() -> LinMap,
    {
        if let Some(m) = self.cache.lock().expect("cache lock").get(&key) {
            return Arc::clone(m);
        }
        // Built outside the lock: builders recurse into other cached maps.
        let m = Arc::new(build());
        let mut guard = self.cache.lock().expect("cache lock");
        Arc::clone(guard.entry(key).or_insert(m))
    }

    // ---- forms as values ----

    pub fn basis_form(&self, i0: usize, slots: &[usize]) -> Form {
        Form {
            parent: self.alg.id(),
            degree: slots.len(),
            coeffs: vec![(self.shape.encode(i0, slots), Rational::one())],
        }
    }

    pub fn form(&self, degree: usize, coeffs: SparseVec) -> Form {
        debug_assert!(coeffs.iter().all(|(i, _)| *i < self.dim(degree)));
        Form {
            parent: self.alg.id(),
            degree,
            coeffs,
        }
    }

    fn own(&self, f: &Form) -> Result<(), FormError> {
        if f.parent == self.alg.id() {
            Ok(())
        } else {
            Err(FormError::ParentMismatch)
        }
    }

    pub fn apply_d(&self, f: &Form) -> Result<Form, FormError> {
        self.own(f)?;
        Ok(self.form(f.degree + 1, self.d(f.degree).apply(&f.coeffs)))
    }

    pub fn apply_b(&self, f: &Form) -> Result<Form, FormError> {
        self.own(f)?;
        if f.degree == 0 {
            return Ok(self.form(0, Vec::new()));
        }
        Ok(self.form(f.degree - 1, self.b(f.degree).apply(&f.coeffs)))
    }

    pub fn apply_kappa(&self, f: &Form) -> Result<Form, FormError> {
        self.own(f)?;
        Ok(self.form(f.degree, self.kappa(f.degree).apply(&f.coeffs)))
    }

    /// `a·ω` for an algebra element given by coordinates.
    pub fn left_mul(&self, a: &[(usize, Rational)], f: &Form) -> Result<Form, FormError> {
        self.own(f)?;
        Ok(self.form(f.degree, self.left_mul_vec(a, f.degree, &f.coeffs)))
    }

    pub fn right_mul(&self, f: &Form, a: &[(usize, Rational)]) -> Result<Form, FormError> {
        self.own(f)?;
        Ok(self.form(f.degree, self.right_mul_vec(&f.coeffs, f.degree, a)))
    }

    pub fn wedge(&self, x: &Form, y: &Form) -> Result<Form, FormError> {
        self.own(x)?;
        self.own(y)?;
        Ok(self.form(
            x.degree + y.degree,
            self.wedge_vec(&x.coeffs, x.degree, &y.coeffs, y.degree),
        ))
    }

    // ---- multiplication ----

    /// `bᵢ·ω` on coordinates of `Ωⁿ`.
    pub fn left_mul_basis(&self, i: usize, n: usize, x: &[(usize, Rational)]) -> SparseVec {
        let sd = self.shape.slots_dim(n);
        let mut b = VecBuilder::new();
        for (idx, c) in x {
            let (i0, s) = (idx / sd, idx % sd);
            for (k, e) in self.alg.product(i, i0) {
                b.push(k * sd + s, c * e);
            }
        }
        b.finish()
    }

    pub fn left_mul_vec(
        &self,
        a: &[(usize, Rational)],
        n: usize,
        x: &[(usize, Rational)],
    ) -> SparseVec {
        let mut b = VecBuilder::new();
        for (i, c) in a {
            b.add_scaled(&self.left_mul_basis(*i, n, x), c);
        }
        b.finish()
    }

    /// Matrix of `ω ↦ ω·bⱼ` on `Ωⁿ`, from `(α da)·c = α d(ac) − (α a) dc`.
    pub fn right_mul_matrix(&self, j: usize, n: usize) -> Arc<LinMap> {
        self.cached(Key::RightMul(j, n), || {
            let dn = self.dim(n);
            if j == 0 {
                return LinMap::identity(dn);
            }
            if n == 0 {
                return self.alg.right_mul_matrix(&[(j, Rational::one())]);
            }
            let r = self.shape.dim - 1;
            let prev: Vec<Arc<LinMap>> = (1..self.shape.dim)
                .map(|a| self.right_mul_matrix(a, n - 1))
                .collect();
            LinMap::from_fn(dn, dn, |idx| {
                let (alpha, a) = (idx / r, idx % r + 1);
                let mut b = VecBuilder::new();
                for (k, c) in self.alg.product(a, j) {
                    if *k != 0 {
                        b.push(alpha * r + (k - 1), c.clone());
                    }
                }
                for (beta, c) in prev[a - 1].column(alpha) {
                    b.push(beta * r + (j - 1), -c.clone());
                }
                b.finish()
            })
        })
    }

    pub fn right_mul_vec(
        &self,
        x: &[(usize, Rational)],
        n: usize,
        a: &[(usize, Rational)],
    ) -> SparseVec {
        let mut b = VecBuilder::new();
        for (j, c) in a {
            b.add_scaled(&self.right_mul_matrix(*j, n).apply(x), c);
        }
        b.finish()
    }

    /// `α ∧ β` for `α ∈ Ωᵖ`, `β ∈ Ω^q`: right action of `β`'s coefficient
    /// on `α`, then concatenation of the reduced slots.
    pub fn wedge_vec(
        &self,
        x: &[(usize, Rational)],
        p: usize,
        y: &[(usize, Rational)],
        q: usize,
    ) -> SparseVec {
        let sq = self.shape.slots_dim(q);
        let mut b = VecBuilder::new();
        for (iy, cy) in y {
            let (j0, block) = (iy / sq, iy % sq);
            let xa = self.right_mul_matrix(j0, p).apply(x);
            for (ix, cx) in xa {
                b.push(self.shape.append_block(ix, block, q), &cx * cy);
            }
        }
        b.finish()
    }

    /// `α ⌢ dbₛ₁⋯dbₛₖ` on coordinates (pure slot concatenation).
    pub fn append_slots(&self, x: &[(usize, Rational)], slots: &[usize]) -> SparseVec {
        x.iter()
            .map(|(i, c)| (self.shape.append(*i, slots), c.clone()))
            .collect()
    }

    // ---- differentials ----

    /// `d: Ωⁿ → Ωⁿ⁺¹`.
    pub fn d(&self, n: usize) -> Arc<LinMap> {
        self.cached(Key::D(n), || {
            let sd = self.shape.slots_dim(n);
            LinMap::from_fn(self.dim(n + 1), self.dim(n), |idx| {
                let (i0, s) = (idx / sd, idx % sd);
                if i0 == 0 {
                    Vec::new()
                } else {
                    vec![(self.shape.append_block(i0 - 1, s, n), Rational::one())]
                }
            })
        })
    }

    /// Hochschild `b: Ωⁿ → Ωⁿ⁻¹`, `α da ↦ (−1)^{n−1}(α·a − a·α)`. For `n = 0`
    /// this is the map to the zero space.
    pub fn b(&self, n: usize) -> Arc<LinMap> {
        self.cached(Key::B(n), || {
            if n == 0 {
                return LinMap::zero(0, self.dim(0));
            }
            let r = self.shape.dim - 1;
            let sign = sgn(n - 1);
            LinMap::from_fn(self.dim(n - 1), self.dim(n), |idx| {
                let (alpha, a) = (idx / r, idx % r + 1);
                let e = vec![(alpha, Rational::one())];
                let mut b = VecBuilder::new();
                b.add_scaled(self.right_mul_matrix(a, n - 1).column(alpha), &sign);
                b.add_scaled(&self.left_mul_basis(a, n - 1, &e), &(-sign.clone()));
                b.finish()
            })
        })
    }

    /// Karoubi `κ(α da) = (−1)^{deg α} da·α`; identity on `Ω⁰`.
    pub fn kappa(&self, n: usize) -> Arc<LinMap> {
        self.cached(Key::Kappa(n), || {
            let dn = self.dim(n);
            if n == 0 {
                return LinMap::identity(dn);
            }
            let sd1 = self.shape.slots_dim(n - 1);
            let r = self.shape.dim - 1;
            let sign = sgn(n - 1);
            LinMap::from_fn(dn, dn, |idx| {
                // idx = ((i0, s_1..s_{n-1}), s_n)
                let (head, last) = (idx / r, idx % r + 1);
                let (i0, block) = (head / sd1, head % sd1);
                // da_n · a0 in Ω¹
                let da = vec![(last - 1, Rational::one())];
                let prod = self.right_mul_matrix(i0, 1).apply(&da);
                prod.into_iter()
                    .map(|(k, c)| (self.shape.append_block(k, block, n - 1), &c * &sign))
                    .collect()
            })
        })
    }

    /// `Id + κ + ⋯ + κ^{terms−1}` on `Ωⁿ`.
    pub fn kappa_sum(&self, n: usize, terms: usize) -> Arc<LinMap> {
        self.cached(Key::KappaSum(n, terms), || {
            let k = self.kappa(n);
            let dn = self.dim(n);
            let mut acc = LinMap::zero(dn, dn);
            let mut pow = LinMap::identity(dn);
            for _ in 0..terms {
                acc = acc.plus(&pow);
                pow = k.then_after(&pow);
            }
            acc
        })
    }

    /// `(Id + κ + ⋯ + κⁿ⁻¹)∘b: Ωⁿ → Ωⁿ⁻¹`.
    pub fn iota_nb(&self, n: usize) -> Arc<LinMap> {
        self.cached(Key::IotaNb(n), || {
            if n == 0 {
                return LinMap::zero(0, self.dim(0));
            }
            self.kappa_sum(n - 1, n).then_after(&self.b(n))
        })
    }

    // ---- reduced complex Ω̄ ----

    /// `Ω̄ⁿ → Ωⁿ` (for `n = 0`, `Ā ↪ A`).
    pub fn reduced_inclusion(&self, n: usize) -> LinMap {
        if n == 0 {
            let d = self.shape.dim;
            LinMap::from_fn(d, d - 1, |i| vec![(i + 1, Rational::one())])
        } else {
            LinMap::identity(self.dim(n))
        }
    }

    /// `Ωⁿ → Ω̄ⁿ` (for `n = 0`, drop the unit coordinate).
    pub fn reduced_projection(&self, n: usize) -> LinMap {
        if n == 0 {
            let d = self.shape.dim;
            LinMap::from_fn(d - 1, d, |i| {
                if i == 0 {
                    Vec::new()
                } else {
                    vec![(i - 1, Rational::one())]
                }
            })
        } else {
            LinMap::identity(self.dim(n))
        }
    }

    /// Restriction of an operator `Ωᵖ → Ω^q` to `Ω̄ᵖ → Ω̄^q`.
    pub fn reduce_op(&self, m: &LinMap, p: usize, q: usize) -> LinMap {
        if p > 0 && q > 0 {
            return m.clone();
        }
        self.reduced_projection(q)
            .then_after(&m.then_after(&self.reduced_inclusion(p)))
    }

    /// Connes `B = Σ_{i=0}^{n} κⁱ∘d: Ω̄ⁿ → Ω̄ⁿ⁺¹`.
    pub fn connes_b(&self, n: usize) -> Arc<LinMap> {
        self.cached(Key::ConnesB(n), || {
            let full = self.kappa_sum(n + 1, n + 1).then_after(&self.d(n));
            self.reduce_op(&full, n, n + 1)
        })
    }

    pub fn reduced_d(&self, n: usize) -> LinMap {
        self.reduce_op(&self.d(n), n, n + 1)
    }

    pub fn reduced_b(&self, n: usize) -> LinMap {
        assert!(n >= 1);
        self.reduce_op(&self.b(n), n, n - 1)
    }

    pub fn reduced_kappa(&self, n: usize) -> LinMap {
        self.reduce_op(&self.kappa(n), n, n)
    }

    /// `ι_Δ = N∘b` on the reduced complex.
    pub fn reduced_iota(&self, n: usize) -> LinMap {
        assert!(n >= 1);
        self.reduce_op(&self.iota_nb(n), n, n - 1)
    }
}

#[cfg(test)]
mod tests;
