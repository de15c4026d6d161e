//! Quotients `V / (Id − ρ)V` for a signed permutation `ρ` of a basis, such as
//! the sign-twisted cyclic rotation of tensor words.

use crate::exactlin::{LinMap, Rational, SparseVec};

/// Orbit decomposition of a signed permutation. In the quotient every basis
/// vector is `±` the class of its orbit representative, or zero when the
/// orbit carries sign `−1` around the cycle.
#[derive(Debug, Clone)]
pub struct SignedOrbits {
    /// `(class, sign)` per basis vector, `None` for vectors that vanish.
    class_of: Vec<Option<(usize, bool)>>,
    reps: Vec<usize>,
}

impl SignedOrbits {
    /// `rho(i) = (j, negative)` means `ρ(eᵢ) = ±e_j`. The relation is
    /// `eᵢ ≡ ρ(eᵢ)`.
    pub fn new<F>(n: usize, mut rho: F) -> Self
    where
        F: FnMut(usize) -> (usize, bool),
    {
        let mut class_of: Vec<Option<(usize, bool)>> = vec![None; n];
        let mut seen = vec![false; n];
        let mut reps = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            // Walk the cycle; e_{next} ≡ s·e_cur, so track the sign relative
            // to `start` (which is the smallest index of its orbit).
            let mut members = vec![(start, false)];
            seen[start] = true;
            let (mut cur, mut neg) = (start, false);
            let zero = loop {
                let (next, s) = rho(cur);
                let nneg = neg ^ s;
                if next == start {
                    break nneg;
                }
                seen[next] = true;
                members.push((next, nneg));
                cur = next;
                neg = nneg;
            };
            if zero {
                continue;
            }
            let class = reps.len();
            reps.push(start);
            for (m, s) in members {
                class_of[m] = Some((class, s));
            }
        }
        Self { class_of, reps }
    }

    pub fn ambient_dim(&self) -> usize {
        self.class_of.len()
    }

    pub fn dim(&self) -> usize {
        self.reps.len()
    }

    pub fn reps(&self) -> &[usize] {
        &self.reps
    }

    pub fn class(&self, i: usize) -> Option<(usize, Rational)> {
        self.class_of[i].map(|(c, neg)| {
            (
                c,
                if neg {
                    Rational::from_int(-1)
                } else {
                    Rational::one()
                },
            )
        })
    }

    pub fn project_vec(&self, v: &[(usize, Rational)]) -> SparseVec {
        let mut b = crate::exactlin::VecBuilder::new();
        for (i, c) in v {
            if let Some((k, s)) = self.class(*i) {
                b.push(k, c * &s);
            }
        }
        b.finish()
    }

    /// `ambient → quotient`.
    pub fn projection(&self) -> LinMap {
        LinMap::from_fn(self.dim(), self.ambient_dim(), |i| {
            self.class(i).map(|(k, s)| vec![(k, s)]).unwrap_or_default()
        })
    }

    /// `quotient → ambient`, class ↦ representative.
    pub fn lifting(&self) -> LinMap {
        LinMap::from_fn(self.ambient_dim(), self.dim(), |k| {
            vec![(self.reps[k], Rational::one())]
        })
    }

    /// Matrix of `Id − ρ` on the ambient space.
    pub fn relation_map<F>(n: usize, mut rho: F) -> LinMap
    where
        F: FnMut(usize) -> (usize, bool),
    {
        LinMap::from_triples(
            n,
            n,
            (0..n).flat_map(|i| {
                let (j, neg) = rho(i);
                let c = if neg { Rational::one() } else { Rational::from_int(-1) };
                [(i, i, Rational::one()), (j, i, c)]
            }),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactlin::rank;

    fn rotate(len: usize, base: usize, sign_flip: bool) -> impl Fn(usize) -> (usize, bool) {
        move |i| {
            // (a₀,…,a_{L−1}) ↦ (a_{L−1}, a₀, …)
            let last = i % base;
            let rest = i / base;
            let j = last * base.pow(len as u32 - 1) + rest;
            (j, sign_flip)
        }
    }

    #[test]
    fn dims_match_rank_of_relations() {
        for len in 1..5 {
            for flip in [false, true] {
                let n = 3usize.pow(len as u32);
                let o = SignedOrbits::new(n, rotate(len, 3, flip));
                let rel = SignedOrbits::relation_map(n, rotate(len, 3, flip));
                assert_eq!(o.dim(), n - rank(&rel), "len {len} flip {flip}");
                assert!(o.projection().then_after(&rel).is_zero());
            }
        }
    }
}
