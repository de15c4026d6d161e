//! Finite-dimensional unital associative algebras over ℚ.

mod builders;
mod derivations;

pub use builders::*;
pub use derivations::{
    center, commutator_space, delta, sandwich_map, solve_derivations, solve_double_derivations,
    Derivation, DoubleDerivation,
};

use std::sync::atomic::{AtomicU64, Ordering};

use thiserror::Error;

use crate::exactlin::{LinMap, Rational, SparseVec, VecBuilder};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("not associative on basis triple ({0}, {1}, {2})")]
    NotAssociative(usize, usize, usize),
    #[error("declared unit does not act as identity on basis element {0}")]
    NotUnital(usize),
    #[error("index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("expected {expected} basis labels, got {got}")]
    LabelCount { expected: usize, got: usize },
    #[error("algebra must have positive dimension")]
    Empty,
    #[error("elements belong to different algebras")]
    ParentMismatch,
    #[error("product of basis matrices {0} and {1} leaves their span")]
    NotClosed(usize, usize),
}

static NEXT_ID: AtomicU64 = AtomicU64::new(1);

/// Unital associative algebra given by structure constants.
///
/// Basis element 0 is always the unit, so `1..dim` spans a fixed complement
/// `Ā` of the scalars.
#[derive(Debug, Clone)]
pub struct FinDimAlgebra {
    id: u64,
    name: String,
    labels: Vec<String>,
    mult: Vec<SparseVec>,
}

impl PartialEq for FinDimAlgebra {
    /// Same labels and structure constants; the name is cosmetic.
    fn eq(&self, other: &Self) -> bool {
        self.labels == other.labels && self.mult == other.mult
    }
}

/// Validates a multiplication table and normalizes it so the unit is basis
/// element 0 (swapping it with the declared unit if necessary).
///
/// Triples are `(i, j, k, c)` meaning `bᵢ·bⱼ` has coefficient `c` on `bₖ`;
/// repeated triples add up and omitted products are zero.
pub fn make_algebra(
    name: &str,
    labels: Vec<String>,
    mult_triples: &[(usize, usize, usize, Rational)],
    unit_index: usize,
) -> Result<FinDimAlgebra, AlgebraError> {
    let dim = labels.len();
    if dim == 0 {
        return Err(AlgebraError::Empty);
    }
    if unit_index >= dim {
        return Err(AlgebraError::IndexOutOfRange {
            index: unit_index,
            dim,
        });
    }
    let mut builders: Vec<VecBuilder> = (0..dim * dim).map(|_| VecBuilder::new()).collect();
    for (i, j, k, c) in mult_triples {
        for &x in [i, j, k] {
            if x >= dim {
                return Err(AlgebraError::IndexOutOfRange { index: x, dim });
            }
        }
        builders[i * dim + j].push(*k, c.clone());
    }
    let mut mult: Vec<SparseVec> = builders.into_iter().map(VecBuilder::finish).collect();
    let mut labels = labels;

    let u = unit_index;
    for i in 0..dim {
        let e = vec![(i, Rational::one())];
        if mult[u * dim + i] != e || mult[i * dim + u] != e {
            return Err(AlgebraError::NotUnital(i));
        }
    }
    if u != 0 {
        let swap = |x: usize| {
            if x == 0 {
                u
            } else if x == u {
                0
            } else {
                x
            }
        };
        let mut new_mult = vec![Vec::new(); dim * dim];
        for i in 0..dim {
            for j in 0..dim {
                let mut v: SparseVec = mult[i * dim + j]
                    .iter()
                    .map(|(k, c)| (swap(*k), c.clone()))
                    .collect();
                v.sort_by_key(|(k, _)| *k);
                new_mult[swap(i) * dim + swap(j)] = v;
            }
        }
        mult = new_mult;
        labels.swap(0, u);
    }
    let alg = FinDimAlgebra {
        id: NEXT_ID.fetch_add(1, Ordering::Relaxed),
        name: name.to_string(),
        labels,
        mult,
    };
    alg.check_associative()?;
    Ok(alg)
}

impl FinDimAlgebra {
    pub fn id(&self) -> u64 {
        self.id
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    /// Dimension of `Ā`.
    pub fn reduced_dim(&self) -> usize {
        self.dim() - 1
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn unit_index(&self) -> usize {
        0
    }

    /// `bᵢ·bⱼ` as a coordinate vector.
    pub fn product(&self, i: usize, j: usize) -> &[(usize, Rational)] {
        &self.mult[i * self.dim() + j]
    }

    /// All `(i, j, k, c)` with `c ≠ 0`.
    pub fn triples(&self) -> Vec<(usize, usize, usize, Rational)> {
        let n = self.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                for (k, c) in self.product(i, j) {
                    out.push((i, j, *k, c.clone()));
                }
            }
        }
        out
    }

    /// Product of coordinate vectors.
    pub fn mul_vec(&self, x: &[(usize, Rational)], y: &[(usize, Rational)]) -> SparseVec {
        let mut b = VecBuilder::new();
        for (i, a) in x {
            for (j, c) in y {
                b.add_scaled(self.product(*i, *j), &(a * c));
            }
        }
        b.finish()
    }

    /// Product `bᵢ·y`.
    pub fn mul_basis_left(&self, i: usize, y: &[(usize, Rational)]) -> SparseVec {
        let mut b = VecBuilder::new();
        for (j, c) in y {
            b.add_scaled(self.product(i, *j), c);
        }
        b.finish()
    }

    /// Product `x·bⱼ`.
    pub fn mul_basis_right(&self, x: &[(usize, Rational)], j: usize) -> SparseVec {
        let mut b = VecBuilder::new();
        for (i, c) in x {
            b.add_scaled(self.product(*i, j), c);
        }
        b.finish()
    }

    /// Matrix of `y ↦ x·y`.
    pub fn left_mul_matrix(&self, x: &[(usize, Rational)]) -> LinMap {
        let n = self.dim();
        LinMap::from_fn(n, n, |j| self.mul_basis_right(x, j))
    }

    /// Matrix of `y ↦ y·x`.
    pub fn right_mul_matrix(&self, x: &[(usize, Rational)]) -> LinMap {
        let n = self.dim();
        LinMap::from_fn(n, n, |i| self.mul_basis_left(i, x))
    }

    fn check_associative(&self) -> Result<(), AlgebraError> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                let ij = self.product(i, j);
                for k in 0..n {
                    let lhs = self.mul_basis_right(ij, k);
                    let rhs = self.mul_basis_left(i, self.product(j, k));
                    if lhs != rhs {
                        return Err(AlgebraError::NotAssociative(i, j, k));
                    }
                }
            }
        }
        Ok(())
    }

    pub fn is_commutative(&self) -> bool {
        let n = self.dim();
        (0..n).all(|i| (0..i).all(|j| self.product(i, j) == self.product(j, i)))
    }

    pub fn element(&self, coeffs: Vec<Rational>) -> AlgElement {
        assert_eq!(coeffs.len(), self.dim(), "coefficient vector length");
        AlgElement {
            parent: self.id,
            coeffs,
        }
    }

    pub fn basis_element(&self, i: usize) -> AlgElement {
        let mut c = vec![Rational::zero(); self.dim()];
        c[i] = Rational::one();
        self.element(c)
    }

    pub fn one(&self) -> AlgElement {
        self.basis_element(0)
    }

    pub fn mul(&self, a: &AlgElement, b: &AlgElement) -> Result<AlgElement, AlgebraError> {
        if a.parent != self.id || b.parent != self.id {
            return Err(AlgebraError::ParentMismatch);
        }
        let p = self.mul_vec(&a.sparse(), &b.sparse());
        Ok(self.element(crate::exactlin::sparse::to_dense(&p, self.dim())))
    }
}

/// Element of a specific algebra, as a dense coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgElement {
    parent: u64,
    coeffs: Vec<Rational>,
}

impl AlgElement {
    pub fn parent_id(&self) -> u64 {
        self.parent
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn sparse(&self) -> SparseVec {
        crate::exactlin::sparse::from_dense(&self.coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Rational::is_zero)
    }

    pub fn add(&self, other: &AlgElement) -> Result<AlgElement, AlgebraError> {
        if self.parent != other.parent {
            return Err(AlgebraError::ParentMismatch);
        }
        Ok(AlgElement {
            parent: self.parent,
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a + b)
                .collect(),
        })
    }

    pub fn scale(&self, c: &Rational) -> AlgElement {
        AlgElement {
            parent: self.parent,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn names(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn dual_numbers_by_hand() {
        let d = make_algebra(
            "D",
            names(&["1", "x"]),
            &[(0, 0, 0, q(1)), (0, 1, 1, q(1)), (1, 0, 1, q(1))],
            0,
        )
        .unwrap();
        assert_eq!(d.dim(), 2);
        let x = d.basis_element(1);
        assert!(d.mul(&x, &x).unwrap().is_zero());
    }

    #[test]
    fn rebases_declared_unit() {
        // basis {x, 1} with the unit declared second
        let d = make_algebra(
            "D",
            names(&["x", "1"]),
            &[(1, 1, 1, q(1)), (0, 1, 0, q(1)), (1, 0, 0, q(1))],
            1,
        )
        .unwrap();
        assert_eq!(d.labels(), &names(&["1", "x"])[..]);
        assert_eq!(d, crate::algebra::dual_numbers());
    }

    #[test]
    fn rejects_bad_unit() {
        let e = make_algebra("bad", names(&["1", "x"]), &[(0, 0, 0, q(1)), (1, 1, 0, q(1))], 0);
        assert_eq!(e.unwrap_err(), AlgebraError::NotUnital(1));
    }

    #[test]
    fn rejects_nonassociative() {
        // x·x = x + 1 with y·x = y, x·y = 0 breaks (xx)y = x(xy)
        let t = [
            (0, 0, 0, q(1)),
            (0, 1, 1, q(1)),
            (1, 0, 1, q(1)),
            (0, 2, 2, q(1)),
            (2, 0, 2, q(1)),
            (1, 1, 0, q(1)),
            (2, 1, 2, q(1)),
        ];
        let e = make_algebra("bad", names(&["1", "x", "y"]), &t, 0);
        assert!(matches!(e, Err(AlgebraError::NotAssociative(..))));
    }

    #[test]
    fn builder_dims() {
        let dims: Vec<usize> = standard_algebras().iter().map(FinDimAlgebra::dim).collect();
        assert_eq!(dims, vec![1, 2, 3, 2, 4, 6]);
        assert_eq!(matrix_algebra(3).dim(), 9);
        assert_eq!(algebra_by_name("k[x]/(x^3)"), Some(truncated_poly(3)));
        assert_eq!(algebra_by_name("M2"), Some(matrix_algebra(2)));
    }

    #[test]
    fn parent_mismatch() {
        let a = dual_numbers();
        let b = dual_numbers();
        let e = a.mul(&a.one(), &b.one());
        assert_eq!(e.unwrap_err(), AlgebraError::ParentMismatch);
    }
}
