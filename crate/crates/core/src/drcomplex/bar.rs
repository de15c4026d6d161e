//! Hochschild chain complexes built directly from the multiplication table,
//! used as an oracle that shares no code with the forms operators.

use crate::algebra::FinDimAlgebra;
use crate::exactlin::{homology_dim, LinMap, Rational, VecBuilder};

/// Tuples `(i₀, …, iₙ)` in mixed radix; slot `j ≥ 1` ranges over `lo..dim`.
struct Tuples {
    dim: usize,
    lo: usize,
}

impl Tuples {
    fn radix(&self) -> usize {
        self.dim - self.lo
    }

    fn count(&self, n: usize) -> usize {
        self.dim * self.radix().pow(n as u32)
    }

    fn decode(&self, n: usize, mut idx: usize) -> Vec<usize> {
        let r = self.radix();
        let mut t = vec![0; n + 1];
        for j in (1..=n).rev() {
            t[j] = idx % r + self.lo;
            idx /= r;
        }
        t[0] = idx;
        t
    }

    /// `None` if a slot holds a value the complex does not allow.
    fn encode(&self, t: &[usize]) -> Option<usize> {
        let r = self.radix();
        let mut acc = t[0];
        for &s in &t[1..] {
            if s < self.lo {
                return None;
            }
            acc = acc * r + (s - self.lo);
        }
        Some(acc)
    }
}

/// `b(a₀⊗⋯⊗aₙ) = Σ_{i<n} (−1)ⁱ a₀⊗⋯⊗aᵢaᵢ₊₁⊗⋯ + (−1)ⁿ aₙa₀⊗a₁⊗⋯⊗aₙ₋₁`.
/// With `normalized`, slots `1..n` live in `Ā` and unit components are
/// dropped.
fn boundary(alg: &FinDimAlgebra, n: usize, normalized: bool) -> LinMap {
    let tu = Tuples {
        dim: alg.dim(),
        lo: usize::from(normalized),
    };
    if n == 0 {
        return LinMap::zero(0, tu.count(0));
    }
    LinMap::from_fn(tu.count(n - 1), tu.count(n), |idx| {
        let t = tu.decode(n, idx);
        let mut b = VecBuilder::new();
        let mut push_term = |sign: i64, head: Vec<usize>, prod: &[(usize, Rational)], at: usize| {
            for (k, c) in prod {
                let mut u = head.clone();
                u[at] = *k;
                if let Some(j) = tu.encode(&u) {
                    b.push(j, c * &Rational::from_int(sign));
                }
            }
        };
        for i in 0..n {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            let mut head: Vec<usize> = Vec::with_capacity(n);
            head.extend_from_slice(&t[..i]);
            head.push(0);
            head.extend_from_slice(&t[i + 2..]);
            push_term(sign, head, alg.product(t[i], t[i + 1]), i);
        }
        let sign = if n % 2 == 0 { 1 } else { -1 };
        let mut head = vec![0];
        head.extend_from_slice(&t[1..n]);
        push_term(sign, head, alg.product(t[n], t[0]), 0);
        b.finish()
    })
}

/// Normalized Hochschild boundary `A⊗Ā^{⊗n} → A⊗Ā^{⊗(n−1)}`.
pub fn normalized_boundary(alg: &FinDimAlgebra, n: usize) -> LinMap {
    boundary(alg, n, true)
}

/// Un-normalized Hochschild boundary `A^{⊗(n+1)} → A^{⊗n}`.
pub fn standard_boundary(alg: &FinDimAlgebra, n: usize) -> LinMap {
    boundary(alg, n, false)
}

/// `dim HHₙ(A)` from the normalized complex.
pub fn bar_hochschild(alg: &FinDimAlgebra, n: usize) -> usize {
    homology_dim(&normalized_boundary(alg, n + 1), &normalized_boundary(alg, n))
        .expect("Hochschild boundary squares to zero")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::*;

    #[test]
    fn dual_numbers_hh() {
        let d = dual_numbers();
        let got: Vec<usize> = (0..5).map(|n| bar_hochschild(&d, n)).collect();
        assert_eq!(got, vec![2, 1, 1, 1, 1]);
    }

    #[test]
    fn matrix_hh() {
        let m = matrix_algebra(2);
        let got: Vec<usize> = (0..4).map(|n| bar_hochschild(&m, n)).collect();
        assert_eq!(got, vec![1, 0, 0, 0]);
    }

    #[test]
    fn normalized_matches_standard() {
        for a in [dual_numbers(), group_algebra_cyclic(2), truncated_poly(3)] {
            for n in 0..3 {
                let std = homology_dim(&standard_boundary(&a, n + 1), &standard_boundary(&a, n))
                    .unwrap();
                assert_eq!(std, bar_hochschild(&a, n), "{} n={n}", a.name());
            }
        }
    }
}

/// Bar differential `b′(a₁⊗⋯⊗aₙ) = Σ_{i<n} (−1)^{i−1} a₁⊗⋯⊗aᵢaᵢ₊₁⊗⋯⊗aₙ`,
/// `A^{⊗n} → A^{⊗(n−1)}`, with no wraparound term.
pub fn bar_prime_boundary(alg: &FinDimAlgebra, n: usize) -> LinMap {
    assert!(n >= 1);
    let dim = alg.dim();
    let tu = Tuples { dim, lo: 0 };
    if n == 1 {
        return LinMap::zero(0, dim);
    }
    LinMap::from_fn(tu.count(n - 2), tu.count(n - 1), |idx| {
        let t = tu.decode(n - 1, idx);
        let mut b = VecBuilder::new();
        for i in 0..n - 1 {
            let sign = Rational::from_int(if i % 2 == 0 { 1 } else { -1 });
            for (k, c) in alg.product(t[i], t[i + 1]) {
                let mut u: Vec<usize> = Vec::with_capacity(n - 1);
                u.extend_from_slice(&t[..i]);
                u.push(*k);
                u.extend_from_slice(&t[i + 2..]);
                b.push(tu.encode(&u).expect("unrestricted slots"), c * &sign);
            }
        }
        b.finish()
    })
}
