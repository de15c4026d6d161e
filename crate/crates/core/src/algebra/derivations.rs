use super::FinDimAlgebra;
use crate::exactlin::{kernel, LinMap, Rational, SparseVec, Subspace, VecBuilder};

/// Derivation `A → A` with `θ(1) = 0`, stored on the reduced basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Derivation {
    /// `dim × (dim − 1)`; column `i − 1` is `θ(bᵢ)`.
    pub matrix: LinMap,
}

/// Derivation `A → A⊗A` for the outer bimodule structure
/// `b(a′⊗a″)c = ba′⊗a″c`, stored on the reduced basis. `A⊗A` coordinates
/// are indexed `p·dim + q` for `b_p⊗b_q`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DoubleDerivation {
    /// `dim² × (dim − 1)`; column `i − 1` is `Θ(bᵢ)`.
    pub matrix: LinMap,
}

impl Derivation {
    pub fn value(&self, i: usize) -> &[(usize, Rational)] {
        if i == 0 {
            &[]
        } else {
            self.matrix.column(i - 1)
        }
    }

    /// Matrix on all of `A` (unit column zero).
    pub fn full(&self) -> LinMap {
        let n = self.matrix.rows();
        LinMap::from_fn(n, n, |i| self.value(i).to_vec())
    }

    pub fn apply(&self, x: &[(usize, Rational)]) -> SparseVec {
        let mut b = VecBuilder::new();
        for (i, c) in x {
            b.add_scaled(self.value(*i), c);
        }
        b.finish()
    }
}

impl DoubleDerivation {
    pub fn value(&self, i: usize) -> &[(usize, Rational)] {
        if i == 0 {
            &[]
        } else {
            self.matrix.column(i - 1)
        }
    }

    pub fn full(&self) -> LinMap {
        let n = self.matrix.cols() + 1;
        LinMap::from_fn(n * n, n, |i| self.value(i).to_vec())
    }

    pub fn apply(&self, x: &[(usize, Rational)]) -> SparseVec {
        let mut b = VecBuilder::new();
        for (i, c) in x {
            b.add_scaled(self.value(*i), c);
        }
        b.finish()
    }

    /// Pairs `(p, q)` with coefficient, for `Θ(bᵢ) = Σ c·b_p⊗b_q`.
    pub fn terms(&self, i: usize) -> Vec<(usize, usize, Rational)> {
        let n = self.matrix.cols() + 1;
        self.value(i)
            .iter()
            .map(|(pq, c)| (pq / n, pq % n, c.clone()))
            .collect()
    }

    /// First basis pair `(i, j)` where Leibniz fails, if any.
    pub fn leibniz_violation(&self, alg: &FinDimAlgebra) -> Option<(usize, usize)> {
        leibniz_violation(alg, &self.full(), &TensorActions::new(alg))
    }
}

/// `A⊗A` with the outer actions `u·(a′⊗a″) = ua′⊗a″`, `(a′⊗a″)·v = a′⊗a″v`.
pub(crate) struct TensorActions<'a> {
    alg: &'a FinDimAlgebra,
}

pub(crate) trait Bimodule {
    fn dim(&self) -> usize;
    fn left(&self, i: usize, m: &[(usize, Rational)]) -> SparseVec;
    fn right(&self, m: &[(usize, Rational)], j: usize) -> SparseVec;
}

impl<'a> TensorActions<'a> {
    pub fn new(alg: &'a FinDimAlgebra) -> Self {
        Self { alg }
    }
}

impl Bimodule for TensorActions<'_> {
    fn dim(&self) -> usize {
        self.alg.dim() * self.alg.dim()
    }

    fn left(&self, i: usize, m: &[(usize, Rational)]) -> SparseVec {
        let n = self.alg.dim();
        let mut b = VecBuilder::new();
        for (pq, c) in m {
            let (p, q) = (pq / n, pq % n);
            for (r, e) in self.alg.product(i, p) {
                b.push(r * n + q, c * e);
            }
        }
        b.finish()
    }

    fn right(&self, m: &[(usize, Rational)], j: usize) -> SparseVec {
        let n = self.alg.dim();
        let mut b = VecBuilder::new();
        for (pq, c) in m {
            let (p, q) = (pq / n, pq % n);
            for (r, e) in self.alg.product(q, j) {
                b.push(p * n + r, c * e);
            }
        }
        b.finish()
    }
}

struct Regular<'a> {
    alg: &'a FinDimAlgebra,
}

impl Bimodule for Regular<'_> {
    fn dim(&self) -> usize {
        self.alg.dim()
    }

    fn left(&self, i: usize, m: &[(usize, Rational)]) -> SparseVec {
        self.alg.mul_basis_left(i, m)
    }

    fn right(&self, m: &[(usize, Rational)], j: usize) -> SparseVec {
        self.alg.mul_basis_right(m, j)
    }
}

/// `f(bᵢbⱼ) − f(bᵢ)bⱼ − bᵢf(bⱼ)` for a map given on all of `A`.
pub(crate) fn leibniz_defect<M: Bimodule>(
    alg: &FinDimAlgebra,
    f: &LinMap,
    module: &M,
    i: usize,
    j: usize,
) -> SparseVec {
    let mut b = VecBuilder::new();
    b.add_scaled(&f.apply(alg.product(i, j)), &Rational::one());
    let neg = Rational::from_int(-1);
    b.add_scaled(&module.right(f.column(i), j), &neg);
    b.add_scaled(&module.left(i, f.column(j)), &neg);
    b.finish()
}

pub(crate) fn leibniz_violation<M: Bimodule>(
    alg: &FinDimAlgebra,
    f: &LinMap,
    module: &M,
) -> Option<(usize, usize)> {
    let n = alg.dim();
    (0..n)
        .flat_map(|i| (0..n).map(move |j| (i, j)))
        .find(|&(i, j)| !leibniz_defect(alg, f, module, i, j).is_empty())
}

/// Solution space of the Leibniz conditions on pairs of reduced basis
/// elements, with unknowns `f(bᵢ)` for `i ≥ 1` laid out as `(i−1)·m + r`.
fn solve_leibniz<M: Bimodule>(alg: &FinDimAlgebra, module: &M) -> Subspace {
    let n = alg.dim();
    let m = module.dim();
    let unknowns = (n - 1) * m;
    let mut triples = Vec::new();
    let mut row_block = 0;
    for i in 1..n {
        for j in 1..n {
            // Condition rows for the pair (i, j) live in block row_block.
            let base = row_block * m;
            for (k, c) in alg.product(i, j) {
                if *k == 0 {
                    continue;
                }
                for r in 0..m {
                    triples.push((base + r, (k - 1) * m + r, c.clone()));
                }
            }
            for r in 0..m {
                let e = vec![(r, Rational::one())];
                for (s, c) in module.right(&e, j) {
                    triples.push((base + s, (i - 1) * m + r, -c));
                }
                for (s, c) in module.left(i, &e) {
                    triples.push((base + s, (j - 1) * m + r, -c));
                }
            }
            row_block += 1;
        }
    }
    let sys = LinMap::from_triples(row_block * m, unknowns, triples);
    kernel(&sys)
}

fn unpack(sol: &[(usize, Rational)], n: usize, m: usize) -> LinMap {
    let mut cols: Vec<VecBuilder> = (1..n).map(|_| VecBuilder::new()).collect();
    for (u, c) in sol {
        cols[u / m].push(u % m, c.clone());
    }
    LinMap::from_columns(m, cols.into_iter().map(VecBuilder::finish).collect())
}

/// Basis of `Der(A, A)`.
pub fn solve_derivations(alg: &FinDimAlgebra) -> Vec<Derivation> {
    let module = Regular { alg };
    let n = alg.dim();
    solve_leibniz(alg, &module)
        .basis()
        .iter()
        .map(|v| Derivation {
            matrix: unpack(v, n, n),
        })
        .collect()
}

/// Basis of `Der(A, A⊗A)` for the outer bimodule structure.
pub fn solve_double_derivations(alg: &FinDimAlgebra) -> Vec<DoubleDerivation> {
    let module = TensorActions::new(alg);
    let n = alg.dim();
    solve_leibniz(alg, &module)
        .basis()
        .iter()
        .map(|v| DoubleDerivation {
            matrix: unpack(v, n, n * n),
        })
        .collect()
}

/// `Δ(a) = 1⊗a − a⊗1`.
pub fn delta(alg: &FinDimAlgebra) -> DoubleDerivation {
    let n = alg.dim();
    let cols = (1..n)
        .map(|i| {
            let mut v = vec![(i, Rational::one()), (i * n, Rational::from_int(-1))];
            v.sort_by_key(|(k, _)| *k);
            v
        })
        .collect();
    DoubleDerivation {
        matrix: LinMap::from_columns(n * n, cols),
    }
}

/// `span{bᵢbⱼ − bⱼbᵢ}`.
pub fn commutator_space(alg: &FinDimAlgebra) -> Subspace {
    let n = alg.dim();
    let mut gens = Vec::new();
    for i in 0..n {
        for j in 0..i {
            let mut b = VecBuilder::new();
            b.add_scaled(alg.product(i, j), &Rational::one());
            b.add_scaled(alg.product(j, i), &Rational::from_int(-1));
            gens.push(b.finish());
        }
    }
    Subspace::span(n, gens)
}

/// `{a : ab = ba for all b}`.
pub fn center(alg: &FinDimAlgebra) -> Subspace {
    let n = alg.dim();
    let mut triples = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut b = VecBuilder::new();
            b.add_scaled(alg.product(i, j), &Rational::one());
            b.add_scaled(alg.product(j, i), &Rational::from_int(-1));
            for (k, c) in b.finish() {
                triples.push((j * n + k, i, c));
            }
        }
    }
    kernel(&LinMap::from_triples(n * n, n, triples))
}

/// The map `a ↦ (b ↦ Θ′(a)·b·Θ″(a))` into `Hom(A, A)` flattened to
/// `dim²` rows (`row = j·dim + k` for the `bₖ`-coefficient of the image of
/// `bⱼ`). For `Θ = Δ` this is `a ↦ [·, a]`, whose kernel is the center.
pub fn sandwich_map(alg: &FinDimAlgebra, theta: &DoubleDerivation) -> LinMap {
    let n = alg.dim();
    LinMap::from_fn(n * n, n, |i| {
        let mut b = VecBuilder::new();
        for (p, q, c) in theta.terms(i) {
            for j in 0..n {
                let pj = alg.product(p, j);
                for (k, e) in alg.mul_basis_right(pj, q) {
                    b.push(j * n + k, &c * &e);
                }
            }
        }
        b.finish()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::*;

    #[test]
    fn dual_numbers_double_derivations() {
        let d = dual_numbers();
        let basis = solve_double_derivations(&d);
        assert_eq!(basis.len(), 2);
        let del = delta(&d);
        let span = Subspace::span(4, basis.iter().map(|t| t.matrix.column(0).to_vec()));
        assert!(span.contains(del.matrix.column(0)));
        for t in &basis {
            assert_eq!(t.leibniz_violation(&d), None);
        }
    }

    #[test]
    fn ground_field_has_no_derivations() {
        let k = ground_field();
        assert!(solve_double_derivations(&k).is_empty());
        assert!(solve_derivations(&k).is_empty());
    }

    #[test]
    fn commutator_dims() {
        assert_eq!(commutator_space(&matrix_algebra(2)).dim(), 3);
        assert_eq!(commutator_space(&dual_numbers()).dim(), 0);
        assert_eq!(center(&matrix_algebra(2)).dim(), 1);
        assert_eq!(center(&path_algebra_a3()).dim(), 1);
    }

    #[test]
    fn delta_is_leibniz_everywhere() {
        for a in standard_algebras() {
            assert_eq!(delta(&a).leibniz_violation(&a), None, "{}", a.name());
        }
    }

    #[test]
    fn sandwich_kernel_is_center() {
        for a in standard_algebras() {
            let k = kernel(&sandwich_map(&a, &delta(&a)));
            assert_eq!(k, center(&a), "{}", a.name());
        }
    }
}
