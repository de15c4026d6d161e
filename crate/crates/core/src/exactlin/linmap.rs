use std::fmt;

use super::sparse::{self, SparseVec, VecBuilder};
use super::{LinAlgError, Rational};

/// Exact sparse rational matrix, stored column by column.
///
/// Column `j` is the image of the `j`-th source basis vector. Every column is
/// sorted by row index and carries no explicit zeros, so structural equality
/// is matrix equality.
#[derive(Clone, PartialEq, Eq)]
pub struct LinMap {
    rows: usize,
    cols: usize,
    columns: Vec<SparseVec>,
}

impl LinMap {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self {
            rows,
            cols,
            columns: vec![Vec::new(); cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        Self {
            rows: n,
            cols: n,
            columns: (0..n).map(|i| vec![(i, Rational::one())]).collect(),
        }
    }

    pub fn scalar(n: usize, c: &Rational) -> Self {
        Self::identity(n).scale(c)
    }

    /// Duplicate coordinates are summed; zero results are dropped.
    pub fn from_triples<I>(rows: usize, cols: usize, triples: I) -> Self
    where
        I: IntoIterator<Item = (usize, usize, Rational)>,
    {
        let mut builders: Vec<VecBuilder> = (0..cols).map(|_| VecBuilder::new()).collect();
        for (r, c, v) in triples {
            assert!(r < rows && c < cols, "triple ({r},{c}) out of range {rows}x{cols}");
            builders[c].push(r, v);
        }
        Self {
            rows,
            cols,
            columns: builders.into_iter().map(VecBuilder::finish).collect(),
        }
    }

    /// Columns must already be sorted and zero-free.
    pub fn from_columns(rows: usize, columns: Vec<SparseVec>) -> Self {
        debug_assert!(columns.iter().all(|c| {
            c.windows(2).all(|w| w[0].0 < w[1].0)
                && c.iter().all(|(r, v)| *r < rows && !v.is_zero())
        }));
        Self {
            rows,
            cols: columns.len(),
            columns,
        }
    }

    pub fn from_fn<F>(rows: usize, cols: usize, mut f: F) -> Self
    where
        F: FnMut(usize) -> SparseVec,
    {
        Self::from_columns(rows, (0..cols).map(&mut f).collect())
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn column(&self, j: usize) -> &[(usize, Rational)] {
        &self.columns[j]
    }

    pub fn columns(&self) -> &[SparseVec] {
        &self.columns
    }

    pub fn nnz(&self) -> usize {
        self.columns.iter().map(Vec::len).sum()
    }

    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, &Rational)> + '_ {
        self.columns
            .iter()
            .enumerate()
            .flat_map(|(c, col)| col.iter().map(move |(r, v)| (*r, c, v)))
    }

    pub fn get(&self, r: usize, c: usize) -> Rational {
        sparse::get(&self.columns[c], r)
    }

    pub fn is_zero(&self) -> bool {
        self.columns.iter().all(Vec::is_empty)
    }

    pub fn apply(&self, x: &[(usize, Rational)]) -> SparseVec {
        let mut b = VecBuilder::new();
        for (j, v) in x {
            b.add_scaled(&self.columns[*j], v);
        }
        b.finish()
    }

    /// `self ∘ rhs`.
    pub fn compose(&self, rhs: &LinMap) -> Result<LinMap, LinAlgError> {
        if self.cols != rhs.rows {
            return Err(LinAlgError::DimensionMismatch {
                op: "compose",
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        Ok(LinMap {
            rows: self.rows,
            cols: rhs.cols,
            columns: rhs.columns.iter().map(|c| self.apply(c)).collect(),
        })
    }

    /// Panicking composition for callers that construct both sides.
    pub fn then_after(&self, rhs: &LinMap) -> LinMap {
        self.compose(rhs).expect("composable maps")
    }

    fn check_same_shape(&self, rhs: &LinMap, op: &'static str) -> Result<(), LinAlgError> {
        if self.rows != rhs.rows || self.cols != rhs.cols {
            Err(LinAlgError::DimensionMismatch {
                op,
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            })
        } else {
            Ok(())
        }
    }

    pub fn add(&self, rhs: &LinMap) -> Result<LinMap, LinAlgError> {
        self.lin_comb(&Rational::one(), rhs, "add")
    }

    pub fn sub(&self, rhs: &LinMap) -> Result<LinMap, LinAlgError> {
        self.lin_comb(&Rational::from_int(-1), rhs, "sub")
    }

    /// `self + c * rhs`.
    pub fn lin_comb(
        &self,
        c: &Rational,
        rhs: &LinMap,
        op: &'static str,
    ) -> Result<LinMap, LinAlgError> {
        self.check_same_shape(rhs, op)?;
        Ok(LinMap {
            rows: self.rows,
            cols: self.cols,
            columns: self
                .columns
                .iter()
                .zip(&rhs.columns)
                .map(|(a, b)| sparse::axpy(a, c, b))
                .collect(),
        })
    }

    pub fn plus(&self, rhs: &LinMap) -> LinMap {
        self.add(rhs).expect("same shape")
    }

    pub fn minus(&self, rhs: &LinMap) -> LinMap {
        self.sub(rhs).expect("same shape")
    }

    pub fn scale(&self, c: &Rational) -> LinMap {
        LinMap {
            rows: self.rows,
            cols: self.cols,
            columns: self.columns.iter().map(|col| sparse::scale(col, c)).collect(),
        }
    }

    pub fn neg(&self) -> LinMap {
        self.scale(&Rational::from_int(-1))
    }

    pub fn transpose(&self) -> LinMap {
        let mut cols: Vec<SparseVec> = vec![Vec::new(); self.rows];
        for (c, col) in self.columns.iter().enumerate() {
            for (r, v) in col {
                cols[*r].push((c, v.clone()));
            }
        }
        LinMap {
            rows: self.cols,
            cols: self.rows,
            columns: cols,
        }
    }

    /// `[self | rhs]`.
    pub fn hstack(&self, rhs: &LinMap) -> Result<LinMap, LinAlgError> {
        if self.rows != rhs.rows {
            return Err(LinAlgError::DimensionMismatch {
                op: "hstack",
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let mut columns = self.columns.clone();
        columns.extend(rhs.columns.iter().cloned());
        Ok(LinMap {
            rows: self.rows,
            cols: columns.len(),
            columns,
        })
    }

    /// Stacks `self` above `rhs`.
    pub fn vstack(&self, rhs: &LinMap) -> Result<LinMap, LinAlgError> {
        if self.cols != rhs.cols {
            return Err(LinAlgError::DimensionMismatch {
                op: "vstack",
                left: (self.rows, self.cols),
                right: (rhs.rows, rhs.cols),
            });
        }
        let off = self.rows;
        let columns = self
            .columns
            .iter()
            .zip(&rhs.columns)
            .map(|(a, b)| {
                let mut c = a.clone();
                c.extend(b.iter().map(|(r, v)| (r + off, v.clone())));
                c
            })
            .collect();
        Ok(LinMap {
            rows: self.rows + rhs.rows,
            cols: self.cols,
            columns,
        })
    }

    /// Restriction to the span of the given source vectors: column `i` of the
    /// result is `self(basis[i])`.
    pub fn on_vectors(&self, basis: &[SparseVec]) -> LinMap {
        LinMap {
            rows: self.rows,
            cols: basis.len(),
            columns: basis.iter().map(|v| self.apply(v)).collect(),
        }
    }

    pub fn select_columns(&self, idx: &[usize]) -> LinMap {
        LinMap {
            rows: self.rows,
            cols: idx.len(),
            columns: idx.iter().map(|&j| self.columns[j].clone()).collect(),
        }
    }

    /// Keeps the listed target rows, renumbered in order.
    pub fn select_rows(&self, idx: &[usize]) -> LinMap {
        let mut pos = vec![usize::MAX; self.rows];
        for (new, &old) in idx.iter().enumerate() {
            pos[old] = new;
        }
        let columns = self
            .columns
            .iter()
            .map(|c| {
                c.iter()
                    .filter(|(r, _)| pos[*r] != usize::MAX)
                    .map(|(r, v)| (pos[*r], v.clone()))
                    .collect()
            })
            .collect();
        LinMap {
            rows: idx.len(),
            cols: self.cols,
            columns,
        }
    }

    /// `self^k` for a square map.
    pub fn power(&self, k: usize) -> LinMap {
        assert_eq!(self.rows, self.cols, "power of a non-square map");
        let mut acc = LinMap::identity(self.rows);
        for _ in 0..k {
            acc = self.then_after(&acc);
        }
        acc
    }

    pub fn to_dense(&self) -> Vec<Vec<Rational>> {
        let mut out = vec![vec![Rational::zero(); self.cols]; self.rows];
        for (r, c, v) in self.entries() {
            out[r][c] = v.clone();
        }
        out
    }

    pub fn from_dense(rows: &[Vec<Rational>]) -> LinMap {
        let nrows = rows.len();
        let ncols = rows.first().map_or(0, Vec::len);
        LinMap::from_triples(
            nrows,
            ncols,
            rows.iter().enumerate().flat_map(|(r, row)| {
                row.iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .map(move |(c, v)| (r, c, v.clone()))
            }),
        )
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> LinMap {
        let dense: Vec<Vec<Rational>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| Rational::from_int(v)).collect())
            .collect();
        LinMap::from_dense(&dense)
    }
}

impl fmt::Debug for LinMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LinMap {}x{} [", self.rows, self.cols)?;
        for (i, (r, c, v)) in self.entries().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            if i >= 24 {
                write!(f, "... ({} nonzeros)", self.nnz())?;
                break;
            }
            write!(f, "({r},{c})={v}")?;
        }
        write!(f, "]")
    }
}
