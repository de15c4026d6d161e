use super::echelon::Echelon;
use super::sparse::{SparseVec, VecBuilder};
use super::{LinAlgError, LinMap, Rational};

/// Subspace of ℚⁿ held by its reduced row echelon basis.
///
/// The basis is canonical (pivots increasing, leading coefficients 1, pivots
/// cleared in every other vector), so derived equality is equality of spaces.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient_dim: usize,
    basis: Vec<SparseVec>,
}

impl Subspace {
    pub fn zero(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: Vec::new(),
        }
    }

    pub fn full(ambient_dim: usize) -> Self {
        Self {
            ambient_dim,
            basis: (0..ambient_dim).map(|i| vec![(i, Rational::one())]).collect(),
        }
    }

    pub fn span<I>(ambient_dim: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = SparseVec>,
    {
        let mut vs: Vec<SparseVec> = vectors.into_iter().filter(|v| !v.is_empty()).collect();
        vs.sort_by_key(Vec::len);
        let mut ech = Echelon::new(ambient_dim);
        for v in vs {
            debug_assert!(v.iter().all(|(i, _)| *i < ambient_dim));
            ech.insert(v);
        }
        Self {
            ambient_dim,
            basis: ech.into_rref(),
        }
    }

    pub fn column_space(m: &LinMap) -> Self {
        Self::span(m.rows(), m.columns().iter().cloned())
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient_dim
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SparseVec] {
        &self.basis
    }

    pub fn pivots(&self) -> Vec<usize> {
        self.basis.iter().map(|v| v[0].0).collect()
    }

    /// Indices that are not pivots: the coordinates of a canonical complement.
    pub fn free_indices(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient_dim];
        for v in &self.basis {
            is_pivot[v[0].0] = true;
        }
        (0..self.ambient_dim).filter(|&i| !is_pivot[i]).collect()
    }

    /// Normal form of `v` modulo the subspace; zero exactly on members. The
    /// result is supported on [`Self::free_indices`] and is linear in `v`.
    pub fn reduce(&self, v: &[(usize, Rational)]) -> SparseVec {
        let mut b = VecBuilder::new();
        for (i, c) in v {
            b.push(*i, c.clone());
        }
        let mut bi = 0;
        let neg_one = Rational::from_int(-1);
        for (i, c) in v {
            while bi < self.basis.len() && self.basis[bi][0].0 < *i {
                bi += 1;
            }
            if bi < self.basis.len() && self.basis[bi][0].0 == *i {
                b.add_scaled(&self.basis[bi], &(c * &neg_one));
            }
        }
        b.finish()
    }

    pub fn contains(&self, v: &[(usize, Rational)]) -> bool {
        self.reduce(v).is_empty()
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        Subspace::span(
            self.ambient_dim,
            self.basis.iter().chain(&other.basis).cloned(),
        )
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient_dim, other.ambient_dim);
        // Σ aᵢuᵢ ∈ W exactly when Σ aᵢ·reduce_W(uᵢ) = 0.
        let residues: Vec<SparseVec> = self.basis.iter().map(|u| other.reduce(u)).collect();
        let r = LinMap::from_columns(self.ambient_dim, residues);
        let k = super::kernel(&r);
        let gens = LinMap::from_columns(self.ambient_dim, self.basis.clone());
        Subspace::span(self.ambient_dim, k.basis.iter().map(|a| gens.apply(a)))
    }

    /// Image of the subspace under `m`.
    pub fn image_under(&self, m: &LinMap) -> Subspace {
        Subspace::span(m.rows(), self.basis.iter().map(|v| m.apply(v)))
    }

    /// Matrix whose columns are the basis vectors: the inclusion map.
    pub fn inclusion(&self) -> LinMap {
        LinMap::from_columns(self.ambient_dim, self.basis.clone())
    }

    pub fn check_contains(&self, sub: &Subspace) -> Result<(), LinAlgError> {
        for (i, v) in sub.basis.iter().enumerate() {
            if !self.contains(v) {
                return Err(LinAlgError::NotContained { index: i });
            }
        }
        Ok(())
    }
}
