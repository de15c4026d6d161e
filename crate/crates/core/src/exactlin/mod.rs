//! Exact rational linear algebra: scalars, sparse matrices, echelon forms.

mod echelon;
mod linmap;
mod rational;
pub mod sparse;
mod subspace;

pub use echelon::{Echelon, TrackedEchelon};
pub use linmap::LinMap;
pub use rational::{ParseRationalError, Rational};
pub use sparse::{SparseVec, VecBuilder};
pub use subspace::Subspace;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("basis vector {index} of the subspace is not contained in the total space")]
    NotContained { index: usize },
    #[error("not a complex: outgoing map composed with incoming map is nonzero ({nonzeros} nonzero entries)")]
    NotAComplex { nonzeros: usize },
    #[error("{op}: incompatible shapes {left:?} and {right:?}")]
    DimensionMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
}

/// Dimension of the column space.
pub fn rank(m: &LinMap) -> usize {
    // Eliminate over whichever side has fewer vectors; sparse ones first.
    let mut vs: Vec<SparseVec> = if m.cols() <= m.rows() {
        m.columns().to_vec()
    } else {
        m.transpose().columns().to_vec()
    };
    let dim = if m.cols() <= m.rows() { m.rows() } else { m.cols() };
    vs.retain(|v| !v.is_empty());
    vs.sort_by_key(Vec::len);
    let mut ech = Echelon::new(dim);
    for v in vs {
        ech.insert(v);
    }
    ech.rank()
}

/// Null space of `m` as a subspace of the source.
pub fn kernel(m: &LinMap) -> Subspace {
    let n = m.cols();
    let rows = Subspace::span(n, m.transpose().columns().iter().cloned());
    let free = rows.free_indices();
    let pivots = rows.pivots();
    // Row r of the RREF reads x_{pivot r} + Σ_free c_f x_f = 0.
    let mut gens: Vec<VecBuilder> = free.iter().map(|_| VecBuilder::new()).collect();
    let mut free_pos = vec![usize::MAX; n];
    for (k, &f) in free.iter().enumerate() {
        free_pos[f] = k;
        gens[k].push(f, Rational::one());
    }
    for (row, &p) in rows.basis().iter().zip(&pivots) {
        for (j, c) in row.iter().skip(1) {
            gens[free_pos[*j]].push(p, -c.clone());
        }
    }
    Subspace::span(n, gens.into_iter().map(VecBuilder::finish))
}

/// `dim total − dim sub`, after checking `sub ⊆ total`.
pub fn quotient_dim(total: &Subspace, sub: &Subspace) -> Result<usize, LinAlgError> {
    total.check_contains(sub)?;
    Ok(total.dim() - sub.dim())
}

/// Homology at the middle space of `· --d_in--> V --d_out--> ·`.
pub fn homology_dim(d_in: &LinMap, d_out: &LinMap) -> Result<usize, LinAlgError> {
    let comp = d_out.compose(d_in)?;
    if !comp.is_zero() {
        return Err(LinAlgError::NotAComplex {
            nonzeros: comp.nnz(),
        });
    }
    Ok(d_out.cols() - rank(d_out) - rank(d_in))
}

/// Some `x` with `m·x = rhs`, if the system is solvable.
pub fn solve(m: &LinMap, rhs: &[(usize, Rational)]) -> Option<SparseVec> {
    let mut t = TrackedEchelon::new(m.rows());
    for c in m.columns() {
        t.insert(c.clone());
    }
    t.express(rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_int(n)
    }

    fn e(n: usize, i: usize) -> SparseVec {
        assert!(i < n);
        vec![(i, q(1))]
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&LinMap::zero(3, 3)), 0);
        assert_eq!(rank(&LinMap::identity(4)), 4);
        assert_eq!(rank(&LinMap::from_int_rows(&[&[1, 2], &[2, 4]])), 1);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(kernel(&LinMap::identity(3)).dim(), 0);
        assert_eq!(kernel(&LinMap::zero(2, 5)), Subspace::full(5));
        let k = kernel(&LinMap::from_int_rows(&[&[1, 1]]));
        assert_eq!(k, Subspace::span(2, [vec![(0, q(1)), (1, q(-1))]]));
    }

    #[test]
    fn quotient_examples() {
        assert_eq!(quotient_dim(&Subspace::full(3), &Subspace::zero(3)), Ok(3));
        assert_eq!(quotient_dim(&Subspace::full(3), &Subspace::full(3)), Ok(0));
        let total = Subspace::span(3, [e(3, 0), e(3, 1)]);
        let sub = Subspace::span(3, [vec![(0, q(1)), (1, q(1))]]);
        assert_eq!(quotient_dim(&total, &sub), Ok(1));
        let bad = Subspace::span(3, [e(3, 2)]);
        assert_eq!(
            quotient_dim(&total, &bad),
            Err(LinAlgError::NotContained { index: 0 })
        );
    }

    #[test]
    fn homology_examples() {
        assert_eq!(homology_dim(&LinMap::zero(5, 0), &LinMap::zero(0, 5)), Ok(5));
        assert_eq!(homology_dim(&LinMap::identity(3), &LinMap::zero(2, 3)), Ok(0));
        // image span{e1}, kernel everything
        let d_in = LinMap::from_int_rows(&[&[1], &[0]]);
        let d_out = LinMap::zero(1, 2);
        assert_eq!(homology_dim(&d_in, &d_out), Ok(1));
        let not = homology_dim(&LinMap::identity(2), &LinMap::identity(2));
        assert!(matches!(not, Err(LinAlgError::NotAComplex { .. })));
    }

    #[test]
    fn intersection_and_sum() {
        let u = Subspace::span(3, [e(3, 0), e(3, 1)]);
        let w = Subspace::span(3, [e(3, 1), e(3, 2)]);
        assert_eq!(u.intersection(&w), Subspace::span(3, [e(3, 1)]));
        assert_eq!(u.sum(&w), Subspace::full(3));
    }

    #[test]
    fn solve_finds_preimage() {
        let m = LinMap::from_int_rows(&[&[1, 2], &[3, 4], &[5, 6]]);
        let rhs = vec![(0, q(3)), (1, q(7)), (2, q(11))];
        let x = solve(&m, &rhs).unwrap();
        assert_eq!(m.apply(&x), rhs);
        assert!(solve(&m, &[(0, q(1))]).is_none());
    }

    #[test]
    fn rref_is_canonical() {
        let a = Subspace::span(3, [vec![(0, q(2)), (1, q(4))], vec![(1, q(1)), (2, q(1))]]);
        let b = Subspace::span(
            3,
            [vec![(0, q(1)), (1, q(3)), (2, q(1))], vec![(0, q(1)), (1, q(2))]],
        );
        assert_eq!(a, b);
        for (k, v) in a.basis().iter().enumerate() {
            assert!(v[0].1.is_one());
            for (j, w) in a.basis().iter().enumerate() {
                if j != k {
                    assert!(sparse::get(w, v[0].0).is_zero());
                }
            }
        }
    }
}

#[cfg(test)]
mod props {
    use proptest::prelude::*;

    use super::*;

    fn sparse_matrix(max: usize) -> impl Strategy<Value = LinMap> {
        (1..=max, 1..=max).prop_flat_map(|(r, c)| {
            proptest::collection::vec((0..r, 0..c, -3i64..=3, 1i64..=3), 0..=(r * c).min(120))
                .prop_map(move |t| {
                    LinMap::from_triples(r, c, t.into_iter().map(|(i, j, n, d)| (i, j, Rational::new(n, d))))
                })
        })
    }

    /// Qᵀ·Q·B with Q of height at most 6, so kernels are large.
    fn low_rank(max: usize) -> impl Strategy<Value = LinMap> {
        (sparse_matrix(max), 1..=6usize).prop_flat_map(|(b, k)| {
            let rows = b.rows();
            proptest::collection::vec((0..k, 0..rows, -2i64..=2), 0..=3 * rows).prop_map(move |t| {
                let q = LinMap::from_triples(k, rows, t.into_iter().map(|(i, j, n)| (i, j, Rational::from_int(n))));
                q.transpose().then_after(&q.then_after(&b))
            })
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn rank_of_transpose(m in sparse_matrix(50)) {
            prop_assert_eq!(rank(&m), rank(&m.transpose()));
        }

        #[test]
        fn rank_nullity(m in prop_oneof![sparse_matrix(50), low_rank(30)]) {
            let ker = kernel(&m);
            prop_assert_eq!(rank(&m) + ker.dim(), m.cols());
            for v in ker.basis() {
                prop_assert!(m.apply(v).is_empty());
            }
            prop_assert_eq!(Subspace::column_space(&m).dim(), rank(&m));
        }

        #[test]
        fn solve_on_image(m in low_rank(30), j in 0usize..30) {
            let rhs = m.column(j % m.cols()).to_vec();
            let x = solve(&m, &rhs).expect("a column lies in the image");
            prop_assert_eq!(m.apply(&x), rhs);
        }
    }
}
