use super::{make_algebra, AlgebraError, FinDimAlgebra};
use crate::exactlin::{sparse, Rational, TrackedEchelon};

type Matrix = Vec<Vec<Rational>>;

fn q(n: i64) -> Rational {
    Rational::from_int(n)
}

fn labels(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn mat_mul(a: &Matrix, b: &Matrix) -> Matrix {
    let n = a.len();
    let m = b[0].len();
    let mut out = vec![vec![Rational::zero(); m]; n];
    for i in 0..n {
        for (k, bk) in b.iter().enumerate() {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..m {
                if !bk[j].is_zero() {
                    out[i][j] = out[i][j].add_mul(&a[i][k], &bk[j]);
                }
            }
        }
    }
    out
}

fn flatten(m: &Matrix) -> sparse::SparseVec {
    let flat: Vec<Rational> = m.iter().flatten().cloned().collect();
    sparse::from_dense(&flat)
}

/// Subalgebra of a matrix algebra spanned by the given matrices; the first
/// one must be the identity. Structure constants are solved for exactly.
pub fn from_matrices(
    name: &str,
    names: &[&str],
    mats: &[Matrix],
) -> Result<FinDimAlgebra, AlgebraError> {
    let size = mats[0].len();
    let mut ech = TrackedEchelon::new(size * size);
    for m in mats {
        ech.insert(flatten(m));
    }
    assert_eq!(ech.rank(), mats.len(), "basis matrices must be independent");
    let mut triples = Vec::new();
    for (i, a) in mats.iter().enumerate() {
        for (j, b) in mats.iter().enumerate() {
            let prod = flatten(&mat_mul(a, b));
            let coords = ech.express(&prod).ok_or(AlgebraError::NotClosed(i, j))?;
            for (k, c) in coords {
                triples.push((i, j, k, c));
            }
        }
    }
    make_algebra(name, labels(names), &triples, 0)
}

fn unit_matrix(n: usize, i: usize, j: usize) -> Matrix {
    let mut m = vec![vec![Rational::zero(); n]; n];
    m[i][j] = q(1);
    m
}

fn identity_matrix(n: usize) -> Matrix {
    let mut m = vec![vec![Rational::zero(); n]; n];
    for (i, row) in m.iter_mut().enumerate() {
        row[i] = q(1);
    }
    m
}

/// The ground field `k`, of dimension 1.
pub fn ground_field() -> FinDimAlgebra {
    make_algebra("k", labels(&["1"]), &[(0, 0, 0, q(1))], 0).expect("valid")
}

/// `k[x]/(x^n)` with monomial basis `1, x, …, x^{n−1}`.
pub fn truncated_poly(n: usize) -> FinDimAlgebra {
    assert!(n >= 2, "truncated_poly needs n >= 2");
    let names: Vec<String> = (0..n)
        .map(|i| match i {
            0 => "1".to_string(),
            1 => "x".to_string(),
            _ => format!("x^{i}"),
        })
        .collect();
    let mut triples = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i + j < n {
                triples.push((i, j, i + j, q(1)));
            }
        }
    }
    let name = format!("k[x]/(x^{n})");
    make_algebra(&name, names, &triples, 0).expect("valid")
}

/// Dual numbers `k[x]/(x²)`.
pub fn dual_numbers() -> FinDimAlgebra {
    let mut a = truncated_poly(2);
    a.name = "D".to_string();
    a
}

/// Group algebra of `ℤ/n` with basis `g⁰, …, g^{n−1}`.
pub fn group_algebra_cyclic(n: usize) -> FinDimAlgebra {
    assert!(n >= 1);
    let names: Vec<String> = (0..n)
        .map(|i| if i == 0 { "1".to_string() } else { format!("g^{i}") })
        .collect();
    let mut triples = Vec::new();
    for i in 0..n {
        for j in 0..n {
            triples.push((i, j, (i + j) % n, q(1)));
        }
    }
    make_algebra(&format!("k[Z/{n}]"), names, &triples, 0).expect("valid")
}

/// `M_n(k)` with basis `1` followed by every `E_ij` except `E_nn`.
pub fn matrix_algebra(n: usize) -> FinDimAlgebra {
    assert!(n >= 1);
    let mut mats = vec![identity_matrix(n)];
    let mut names = vec!["1".to_string()];
    // off-diagonal units first, then the diagonal ones
    for i in 0..n {
        for j in 0..n {
            if i != j {
                mats.push(unit_matrix(n, i, j));
                names.push(format!("E{}{}", i + 1, j + 1));
            }
        }
    }
    for i in 0..n.saturating_sub(1) {
        mats.push(unit_matrix(n, i, i));
        names.push(format!("E{}{}", i + 1, i + 1));
    }
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    from_matrices(&format!("M{n}"), &refs, &mats).expect("valid")
}

/// Path algebra of the quiver `1 → 2 → 3` (arrows `a`, `b`), realized as upper
/// triangular 3×3 matrices: `e1 = E11`, `e2 = E22`, `a = E12`, `b = E23`,
/// `ab = E13`.
pub fn path_algebra_a3() -> FinDimAlgebra {
    let mats = vec![
        identity_matrix(3),
        unit_matrix(3, 0, 0),
        unit_matrix(3, 1, 1),
        unit_matrix(3, 0, 1),
        unit_matrix(3, 1, 2),
        unit_matrix(3, 0, 2),
    ];
    from_matrices("A3", &["1", "e1", "e2", "a", "b", "ab"], &mats).expect("valid")
}

/// `k ⊕ V` with `V² = 0` and `dim V = m`. Not Frobenius for `m ≥ 2`, so it
/// has outer deformations that the standard algebras lack.
pub fn radical_square_zero(m: usize) -> FinDimAlgebra {
    let mut names = vec!["1".to_string()];
    names.extend((1..=m).map(|i| format!("x{i}")));
    let mut triples = vec![(0, 0, 0, q(1))];
    for i in 1..=m {
        triples.push((0, i, i, q(1)));
        triples.push((i, 0, i, q(1)));
    }
    make_algebra(&format!("k+V{m}"), names, &triples, 0).expect("valid")
}

/// The fixed list of test algebras, smallest first.
pub fn standard_algebras() -> Vec<FinDimAlgebra> {
    vec![
        ground_field(),
        dual_numbers(),
        truncated_poly(3),
        group_algebra_cyclic(2),
        matrix_algebra(2),
        path_algebra_a3(),
    ]
}

/// Looks up a builder by a short name such as `D`, `k[x]/(x^3)`, `M2`.
pub fn algebra_by_name(name: &str) -> Option<FinDimAlgebra> {
    let lower = name.to_ascii_lowercase();
    match lower.as_str() {
        "k" | "ground" | "field" => Some(ground_field()),
        "d" | "dual" | "dual_numbers" => Some(dual_numbers()),
        "a3" | "path_a3" => Some(path_algebra_a3()),
        _ => {
            if let Some(n) = lower.strip_prefix('m').and_then(|s| s.parse().ok()) {
                return Some(matrix_algebra(n));
            }
            if let Some(n) = lower
                .strip_prefix("k[x]/(x^")
                .and_then(|s| s.strip_suffix(')'))
                .and_then(|s| s.parse().ok())
            {
                return (n >= 2).then(|| truncated_poly(n));
            }
            if let Some(n) = lower
                .strip_prefix("k[z/")
                .and_then(|s| s.strip_suffix(']'))
                .and_then(|s| s.parse().ok())
            {
                return (n >= 1).then(|| group_algebra_cyclic(n));
            }
            if let Some(m) = lower.strip_prefix("k+v").and_then(|s| s.parse().ok()) {
                return Some(radical_square_zero(m));
            }
            None
        }
    }
}
