//! Reduced cyclic homology: the total complexes `(Ω̄[t], d + t·ι_Δ)` and
//! `(Ω̄[t], B + t·b)`, Connes' λ-complex as an oracle, and the harmonic
//! decomposition `Ω̄ = P ⊕ P⊥`.

mod harmonic;
mod lambda;

pub use harmonic::{
    acyclicity_checks, harmonic_identities_check, harmonic_split, harmonic_split_with,
    rescale_iso_check, HarmonicSplit, SplitRule,
};
pub use lambda::{lambda_boundary, lambda_complex_dims, lambda_quotient};

use std::fmt;

use thiserror::Error;

use crate::exactlin::{homology_dim, LinMap, SparseVec};
use crate::forms::Forms;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CyclicError {
    #[error("total differential does not square to zero at degree {0}")]
    NotSquareZero(usize),
    #[error("Ω̄^{0} is not the direct sum of P and P⊥")]
    NotDirectSum(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Variant {
    /// `B + t·b`
    DB,
    /// `d + t·ι_Δ`
    DIota,
}

impl Variant {
    /// Form-degree raising and lowering parts on `Ω̄ᵐ`.
    fn parts(self, forms: &Forms, m: usize) -> (LinMap, Option<LinMap>) {
        let lower = (m >= 1).then(|| match self {
            Variant::DB => forms.reduced_b(m),
            Variant::DIota => forms.reduced_iota(m),
        });
        let raise = match self {
            Variant::DB => (*forms.connes_b(m)).clone(),
            Variant::DIota => forms.reduced_d(m),
        };
        (raise, lower)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum CyclicMethod {
    DIota,
    DB,
    Lambda,
}

impl CyclicMethod {
    pub const ALL: [CyclicMethod; 3] = [CyclicMethod::DIota, CyclicMethod::DB, CyclicMethod::Lambda];

    pub fn name(self) -> &'static str {
        match self {
            CyclicMethod::DIota => "dtiota",
            CyclicMethod::DB => "bB",
            CyclicMethod::Lambda => "lambda",
        }
    }
}

impl fmt::Display for CyclicMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// How powers of `t` act on `Ω̄[t]`.
///
/// `Raising` multiplies by `t`: `D(tᵏω) = tᵏX(ω) + tᵏ⁺¹Y(ω)` raises total
/// degree. Filtering by powers of `t` shows this complex is acyclic whenever
/// `(Ω̄, X)` is, so with `X = d` its homology always vanishes.
///
/// `Lowering` is the same operator divided by `t`:
/// `D(tᵏω) = tᵏY(ω) + tᵏ⁻¹X(ω)` with `t⁻¹·t⁰ = 0`, lowering total degree.
/// For `B + t·b` this is the usual `(b, B)` complex of cyclic homology.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Convention {
    Raising,
    Lowering,
}

/// Total degree `n` of `Ω̄[t]` with `deg t = 2`: blocks `tᵏ Ω̄ⁿ⁻²ᵏ`.
#[derive(Debug, Clone)]
pub struct TotalSlice {
    pub degree: usize,
    /// `(k, form degree, dim)` in block order.
    pub blocks: Vec<(usize, usize, usize)>,
    /// Into slice `n + 1` (`Raising`) or `n − 1` (`Lowering`; zero map
    /// with no rows for `n = 0`).
    pub differential: LinMap,
}

impl TotalSlice {
    pub fn dim(&self) -> usize {
        self.blocks.iter().map(|b| b.2).sum()
    }

    /// Offset of block `k` inside the slice.
    pub fn offset(&self, k: usize) -> usize {
        self.blocks[..k].iter().map(|b| b.2).sum()
    }
}

fn slice_blocks(forms: &Forms, n: usize) -> Vec<(usize, usize, usize)> {
    (0..=n / 2)
        .map(|k| (k, n - 2 * k, forms.reduced_dim(n - 2 * k)))
        .collect()
}

fn offsets(blocks: &[(usize, usize, usize)]) -> Vec<usize> {
    let mut off = Vec::with_capacity(blocks.len() + 1);
    let mut acc = 0;
    off.push(0);
    for b in blocks {
        acc += b.2;
        off.push(acc);
    }
    off
}

fn shifted(v: &[(usize, crate::Rational)], by: usize) -> impl Iterator<Item = (usize, crate::Rational)> + '_ {
    v.iter().map(move |(i, c)| (i + by, c.clone()))
}

fn total_differential(forms: &Forms, variant: Variant, conv: Convention, n: usize) -> TotalSlice {
    let src = slice_blocks(forms, n);
    let so = offsets(&src);
    let tgt = match conv {
        Convention::Raising => slice_blocks(forms, n + 1),
        Convention::Lowering if n == 0 => Vec::new(),
        Convention::Lowering => slice_blocks(forms, n - 1),
    };
    let to = offsets(&tgt);
    let mut columns: Vec<SparseVec> = Vec::with_capacity(so[src.len()]);
    for &(k, m, dim) in &src {
        let (raise, lower) = variant.parts(forms, m);
        for j in 0..dim {
            let mut col: SparseVec = Vec::new();
            match conv {
                Convention::Raising => {
                    col.extend(shifted(raise.column(j), to[k]));
                    if let Some(l) = &lower {
                        col.extend(shifted(l.column(j), to[k + 1]));
                    }
                }
                Convention::Lowering => {
                    // block k−1 sits before block k
                    if k >= 1 {
                        col.extend(shifted(raise.column(j), to[k - 1]));
                    }
                    if let Some(l) = &lower {
                        col.extend(shifted(l.column(j), to[k]));
                    }
                }
            }
            columns.push(col);
        }
    }
    TotalSlice {
        degree: n,
        blocks: src,
        differential: LinMap::from_columns(to[tgt.len()], columns),
    }
}

/// Slices `0..=n_max` for `Raising` and `0..=n_max + 1` for `Lowering`,
/// enough to take homology in degrees `0..=n_max`. Square-zero is checked on
/// every composable pair.
pub fn total_complex(
    forms: &Forms,
    variant: Variant,
    conv: Convention,
    n_max: usize,
) -> Result<Vec<TotalSlice>, CyclicError> {
    let top = match conv {
        Convention::Raising => n_max,
        Convention::Lowering => n_max + 1,
    };
    let slices: Vec<TotalSlice> = (0..=top)
        .map(|n| total_differential(forms, variant, conv, n))
        .collect();
    for w in slices.windows(2) {
        let comp = match conv {
            Convention::Raising => w[1].differential.then_after(&w[0].differential),
            Convention::Lowering => w[0].differential.then_after(&w[1].differential),
        };
        if !comp.is_zero() {
            return Err(CyclicError::NotSquareZero(w[0].degree));
        }
    }
    Ok(slices)
}

/// Homology dims in degrees `0..=n_max` of slices from [`total_complex`].
pub fn total_homology_dims(slices: &[TotalSlice], conv: Convention, n_max: usize) -> Vec<usize> {
    (0..=n_max)
        .map(|n| {
            let out = &slices[n].differential;
            let (d_in, d_out) = match conv {
                Convention::Raising if n == 0 => (LinMap::zero(slices[0].dim(), 0), out.clone()),
                Convention::Raising => (slices[n - 1].differential.clone(), out.clone()),
                Convention::Lowering => (slices[n + 1].differential.clone(), out.clone()),
            };
            homology_dim(&d_in, &d_out).expect("square-zero checked")
        })
        .collect()
}

/// Reduced cyclic dims `H̄C₀ … H̄C_{n_max}` by one method, reading the total
/// complexes in the lowering convention.
pub fn reduced_cyclic_dims(forms: &Forms, method: CyclicMethod, n_max: usize) -> Vec<usize> {
    reduced_cyclic_dims_with(forms, method, Convention::Lowering, n_max)
}

pub fn reduced_cyclic_dims_with(
    forms: &Forms,
    method: CyclicMethod,
    conv: Convention,
    n_max: usize,
) -> Vec<usize> {
    let variant = match method {
        CyclicMethod::DIota => Variant::DIota,
        CyclicMethod::DB => Variant::DB,
        CyclicMethod::Lambda => {
            return lambda_complex_dims(forms.algebra(), n_max)
                .into_iter()
                .enumerate()
                .map(|(n, hc)| hc - usize::from(n % 2 == 0))
                .collect();
        }
    };
    let slices =
        total_complex(forms, variant, conv, n_max).expect("total differential squares to zero");
    total_homology_dims(&slices, conv, n_max)
}

pub fn reduced_cyclic_homology(forms: &Forms, n: usize, method: CyclicMethod) -> usize {
    reduced_cyclic_dims(forms, method, n)[n]
}

#[cfg(test)]
mod tests;
