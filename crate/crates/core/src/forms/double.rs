//! Operators attached to a double derivation `Θ`: the double derivations
//! `𝐋_Θ`, `𝐢_Θ` of `Ω•A` and the reduced maps obtained by cyclically merging
//! their two tensor factors.

use super::{sgn, Forms};
use crate::algebra::DoubleDerivation;
use crate::exactlin::{LinMap, Rational, SparseVec, VecBuilder};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BiKind {
    /// `𝐋_Θ: Ωⁿ → ⊕_{0≤k≤n} Ωᵏ⊗Ωⁿ⁻ᵏ`.
    Lie,
    /// `𝐢_Θ: Ωⁿ → ⊕_{1≤k≤n} Ωᵏ⁻¹⊗Ωⁿ⁻ᵏ`.
    Contraction,
}

/// A map `Ωⁿ → ⊕ Ωᵖ⊗Ω^q`, one matrix per block. Inside a block the tensor
/// `e_i⊗e_j` has index `i·dim Ω^q + j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiFormMap {
    pub degree: usize,
    pub kind: BiKind,
    /// `(p, q, Ωⁿ → Ωᵖ⊗Ω^q)`.
    pub blocks: Vec<(usize, usize, LinMap)>,
}

impl BiFormMap {
    pub fn block(&self, p: usize, q: usize) -> Option<&LinMap> {
        self.blocks
            .iter()
            .find(|(a, b, _)| *a == p && *b == q)
            .map(|(_, _, m)| m)
    }
}

impl Forms {
    fn tensor_push(
        &self,
        b: &mut VecBuilder,
        x: &[(usize, Rational)],
        q: usize,
        y: &[(usize, Rational)],
        c: &Rational,
    ) {
        let dq = self.dim(q);
        for (i, u) in x {
            for (j, v) in y {
                b.push(i * dq + j, &(c * u) * v);
            }
        }
    }

    /// `𝐋_Θ` on `Ωⁿ`.
    pub fn big_l(&self, theta: &DoubleDerivation, n: usize) -> BiFormMap {
        let sh = self.shape();
        let one = Rational::one();
        let mut builders: Vec<Vec<VecBuilder>> = (0..=n)
            .map(|_| (0..self.dim(n)).map(|_| VecBuilder::new()).collect())
            .collect();
        for idx in 0..self.dim(n) {
            let (i0, s) = sh.decode(n, idx);
            // (Θ′a₀) ⊗ (Θ″a₀) da₁…daₙ
            for (p, q, c) in theta.terms(i0) {
                let x = vec![(p, one.clone())];
                let y = vec![(sh.encode(q, &s), one.clone())];
                self.tensor_push(&mut builders[0][idx], &x, n, &y, &c);
            }
            for k in 1..=n {
                let head = sh.encode(i0, &s[..k - 1]);
                for (p, q, c) in theta.terms(s[k - 1]) {
                    // a₀da₁…da_{k−1} d(Θ′a_k) ⊗ (Θ″a_k) da_{k+1}…daₙ
                    if p != 0 {
                        let x = vec![(sh.append(head, &[p]), one.clone())];
                        let y = vec![(sh.encode(q, &s[k..]), one.clone())];
                        self.tensor_push(&mut builders[k][idx], &x, n - k, &y, &c);
                    }
                    // a₀da₁…da_{k−1}(Θ′a_k) ⊗ d(Θ″a_k) da_{k+1}…daₙ
                    if q != 0 {
                        let x = self.right_mul_matrix(p, k - 1).column(head).to_vec();
                        let mut slots = vec![q];
                        slots.extend_from_slice(&s[k..]);
                        let y = vec![(sh.encode(0, &slots), one.clone())];
                        self.tensor_push(&mut builders[k - 1][idx], &x, n - k + 1, &y, &c);
                    }
                }
            }
        }
        let blocks = builders
            .into_iter()
            .enumerate()
            .map(|(k, cols)| {
                let rows = self.dim(k) * self.dim(n - k);
                let cols: Vec<SparseVec> = cols.into_iter().map(VecBuilder::finish).collect();
                (k, n - k, LinMap::from_columns(rows, cols))
            })
            .collect();
        BiFormMap {
            degree: n,
            kind: BiKind::Lie,
            blocks,
        }
    }

    /// `𝐢_Θ` on `Ωⁿ`: block `k` holds `α₁…α_{k−1}(i′α_k) ⊗ (i″α_k)α_{k+1}…αₙ`
    /// with sign `(−1)^{k−1}`, where `α₁ = a₀da₁` and `αⱼ = daⱼ`.
    pub fn big_i(&self, theta: &DoubleDerivation, n: usize) -> BiFormMap {
        let sh = self.shape();
        let one = Rational::one();
        let mut blocks = Vec::new();
        for k in 1..=n {
            let (p_deg, q_deg) = (k - 1, n - k);
            let sign = sgn(k - 1);
            let cols: Vec<SparseVec> = (0..self.dim(n))
                .map(|idx| {
                    let (i0, s) = sh.decode(n, idx);
                    let head = sh.encode(i0, &s[..k - 1]);
                    let mut b = VecBuilder::new();
                    for (p, q, c) in theta.terms(s[k - 1]) {
                        let x = self.right_mul_matrix(p, k - 1).column(head).to_vec();
                        let y = vec![(sh.encode(q, &s[k..]), one.clone())];
                        self.tensor_push(&mut b, &x, q_deg, &y, &(&c * &sign));
                    }
                    b.finish()
                })
                .collect();
            let rows = self.dim(p_deg) * self.dim(q_deg);
            blocks.push((p_deg, q_deg, LinMap::from_columns(rows, cols)));
        }
        BiFormMap {
            degree: n,
            kind: BiKind::Contraction,
            blocks,
        }
    }

    /// Cyclic merge `α⊗β ↦ (−1)^{|α||β|} β·α` summed over all blocks.
    pub fn rotate(&self, m: &BiFormMap) -> LinMap {
        let out_deg = match m.kind {
            BiKind::Lie => m.degree,
            BiKind::Contraction => m.degree - 1,
        };
        let mut cols: Vec<VecBuilder> = (0..self.dim(m.degree)).map(|_| VecBuilder::new()).collect();
        for (p, q, blk) in &m.blocks {
            let dq = self.dim(*q);
            let sign = sgn(p * q);
            for (col, b) in cols.iter_mut().enumerate() {
                for (t, c) in blk.column(col) {
                    let x = vec![(t / dq, Rational::one())];
                    let y = vec![(t % dq, Rational::one())];
                    let w = self.wedge_vec(&y, *q, &x, *p);
                    b.add_scaled(&w, &(c * &sign));
                }
            }
        }
        LinMap::from_columns(
            self.dim(out_deg),
            cols.into_iter().map(VecBuilder::finish).collect(),
        )
    }

    /// Reduced contraction `ι_Θ: Ωⁿ → Ωⁿ⁻¹`, term by term from
    /// `Σₖ (−1)^{(k−1)(n−k+1)} (i″α_k)·α_{k+1}…αₙ·α₁…α_{k−1}·(i′α_k)`.
    pub fn reduced_contraction(&self, theta: &DoubleDerivation, n: usize) -> LinMap {
        assert!(n >= 1);
        let sh = self.shape();
        let one = Rational::one();
        LinMap::from_fn(self.dim(n - 1), self.dim(n), |idx| {
            let (i0, s) = sh.decode(n, idx);
            let mut out = VecBuilder::new();
            for k in 1..=n {
                let sign = sgn((k - 1) * (n - k + 1));
                for (p, q, c) in theta.terms(s[k - 1]) {
                    let coef = &c * &sign;
                    if k == 1 {
                        // Θ″(a₁) da₂…daₙ · a₀Θ′(a₁)
                        let x = vec![(sh.encode(q, &s[1..]), one.clone())];
                        let a = self.algebra().product(i0, p).to_vec();
                        out.add_scaled(&self.right_mul_vec(&x, n - 1, &a), &coef);
                    } else {
                        // Θ″(a_k) da_{k+1}…daₙ · a₀da₁…da_{k−1} · Θ′(a_k)
                        let x = vec![(sh.encode(q, &s[k..]), one.clone())];
                        let y = vec![(sh.encode(i0, &s[..k - 1]), one.clone())];
                        let w = self.wedge_vec(&x, n - k, &y, k - 1);
                        let r = self.right_mul_matrix(p, n - 1).apply(&w);
                        out.add_scaled(&r, &coef);
                    }
                }
            }
            out.finish()
        })
    }

    /// `ι_Δ(a₀da₁…daₙ) = Σₖ (−1)ᵏ [da_{k+1}…daₙ a₀ da₁…da_{k−1}, a_k]` with
    /// `[ω, a] = ωa − aω`.
    pub fn bidelta_contraction(&self, n: usize) -> LinMap {
        assert!(n >= 1);
        let sh = self.shape();
        let one = Rational::one();
        LinMap::from_fn(self.dim(n - 1), self.dim(n), |idx| {
            let (i0, s) = sh.decode(n, idx);
            let mut out = VecBuilder::new();
            for k in 1..=n {
                let x = vec![(sh.encode(0, &s[k..]), one.clone())];
                let y = vec![(sh.encode(i0, &s[..k - 1]), one.clone())];
                let w = self.wedge_vec(&x, n - k, &y, k - 1);
                let ak = s[k - 1];
                let sign = sgn(k);
                out.add_scaled(&self.right_mul_matrix(ak, n - 1).apply(&w), &sign);
                out.add_scaled(&self.left_mul_basis(ak, n - 1, &w), &(-sign.clone()));
            }
            out.finish()
        })
    }

    /// Reduced Lie derivative `ℒ_Θ: Ωⁿ → Ωⁿ`.
    pub fn reduced_lie(&self, theta: &DoubleDerivation, n: usize) -> LinMap {
        self.rotate(&self.big_l(theta, n))
    }

    /// Graded commutator `[α, β] = αβ − (−1)^{pq} βα` of coordinate forms.
    pub fn graded_commutator(
        &self,
        x: &[(usize, Rational)],
        p: usize,
        y: &[(usize, Rational)],
        q: usize,
    ) -> SparseVec {
        let mut b = VecBuilder::new();
        b.add_scaled(&self.wedge_vec(x, p, y, q), &Rational::one());
        b.add_scaled(&self.wedge_vec(y, q, x, p), &(-sgn(p * q)));
        b.finish()
    }
}
