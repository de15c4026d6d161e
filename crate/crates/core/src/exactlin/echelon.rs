use super::sparse::{self, SparseVec};
use super::Rational;

const NONE: u32 = u32::MAX;

/// Incremental row echelon form. Every stored vector has a distinct leading
/// index; a vector lies in the span iff eliminating leading entries reduces it
/// to zero.
#[derive(Debug, Clone)]
pub struct Echelon {
    dim: usize,
    rows: Vec<SparseVec>,
    pivot_row: Vec<u32>,
}

impl Echelon {
    pub fn new(dim: usize) -> Self {
        Self {
            dim,
            rows: Vec::new(),
            pivot_row: vec![NONE; dim],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVec] {
        &self.rows
    }

    fn row_for(&self, idx: usize) -> Option<&SparseVec> {
        match self.pivot_row[idx] {
            NONE => None,
            r => Some(&self.rows[r as usize]),
        }
    }

    /// Eliminates leading entries until the leading index is not a pivot.
    pub fn reduce(&self, mut v: SparseVec) -> SparseVec {
        while let Some((lead, c)) = v.first() {
            match self.row_for(*lead) {
                Some(row) => {
                    let c = -c.clone() / row[0].1.clone();
                    v = sparse::axpy(&v, &c, row);
                }
                None => break,
            }
        }
        v
    }

    /// Inserts `v`; returns `false` if it was already in the span.
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let r = self.reduce(v);
        match r.first() {
            None => false,
            Some((lead, c)) => {
                let inv = c.recip();
                let r = sparse::scale(&r, &inv);
                self.pivot_row[*lead] = self.rows.len() as u32;
                self.rows.push(r);
                true
            }
        }
    }

    pub fn contains(&self, v: &[(usize, Rational)]) -> bool {
        self.reduce(v.to_vec()).is_empty()
    }

    /// Back-substitutes into reduced row echelon form, rows sorted by pivot.
    pub fn into_rref(self) -> Vec<SparseVec> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by_key(|&r| self.rows[r][0].0);
        let mut done: Vec<SparseVec> = vec![Vec::new(); self.rows.len()];
        let mut pivot_done = vec![NONE; self.dim];
        // Process from the largest pivot down, so every row used for
        // elimination is already fully reduced.
        for &r in order.iter().rev() {
            let mut v = self.rows[r].clone();
            let lead = v[0].0;
            let mut pos = 1;
            while pos < v.len() {
                let (idx, c) = (v[pos].0, v[pos].1.clone());
                match pivot_done[idx] {
                    NONE => pos += 1,
                    p => {
                        v = sparse::axpy(&v, &(-c), &done[p as usize]);
                    }
                }
            }
            debug_assert_eq!(v[0].0, lead);
            pivot_done[lead] = r as u32;
            done[r] = v;
        }
        order.into_iter().map(|r| std::mem::take(&mut done[r])).collect()
    }
}

/// Echelon form that remembers how each stored row was built from the
/// inserted generators, so membership queries can return coordinates.
#[derive(Debug, Clone)]
pub struct TrackedEchelon {
    inner: Echelon,
    combos: Vec<SparseVec>,
    inserted: usize,
}

impl TrackedEchelon {
    pub fn new(dim: usize) -> Self {
        Self {
            inner: Echelon::new(dim),
            combos: Vec::new(),
            inserted: 0,
        }
    }

    pub fn rank(&self) -> usize {
        self.inner.rank()
    }

    fn reduce_tracked(&self, mut v: SparseVec, mut combo: SparseVec) -> (SparseVec, SparseVec) {
        while let Some((lead, c)) = v.first() {
            match self.inner.pivot_row[*lead] {
                NONE => break,
                r => {
                    let row = &self.inner.rows[r as usize];
                    let c = -c.clone() / row[0].1.clone();
                    v = sparse::axpy(&v, &c, row);
                    combo = sparse::axpy(&combo, &c, &self.combos[r as usize]);
                }
            }
        }
        (v, combo)
    }

    /// Inserts the next generator (numbered in insertion order).
    pub fn insert(&mut self, v: SparseVec) -> bool {
        let id = self.inserted;
        self.inserted += 1;
        let (r, combo) = self.reduce_tracked(v, vec![(id, Rational::one())]);
        match r.first() {
            None => false,
            Some((lead, c)) => {
                let inv = c.recip();
                self.inner.pivot_row[*lead] = self.inner.rows.len() as u32;
                self.inner.rows.push(sparse::scale(&r, &inv));
                self.combos.push(sparse::scale(&combo, &inv));
                true
            }
        }
    }

    /// Coefficients `x` over the generators with `Σ xᵢ gᵢ = v`, if any.
    pub fn express(&self, v: &[(usize, Rational)]) -> Option<SparseVec> {
        let (r, combo) = self.reduce_tracked(v.to_vec(), Vec::new());
        if r.is_empty() {
            Some(sparse::scale(&combo, &Rational::from_int(-1)))
        } else {
            None
        }
    }
}
