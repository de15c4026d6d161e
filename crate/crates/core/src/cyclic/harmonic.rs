use crate::exactlin::{kernel, rank, LinMap, Rational, SparseVec, Subspace};
use crate::forms::Forms;
use crate::report::{Check, Report};

use super::{total_complex, Convention, CyclicError, Variant};

/// Which operator `M` cuts `Ω̄ⁿ` into `P = ker M` and `P⊥ = im M`.
///
/// `KappaSquared` is `M = Id − κ²`: `P` then contains the `κ = −1`
/// eigenvectors too (for `D`, `x dx` has `κ = −1` and `B(x dx) = 0 ≠ 2·d(x dx)`),
/// so the identities on `P` fail. `Unipotent` is `M = (Id − κ)²`, the
/// generalized `1`-eigenspace and its complement; all identities hold there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SplitRule {
    KappaSquared,
    Unipotent,
}

impl SplitRule {
    pub fn name(self) -> &'static str {
        match self {
            SplitRule::KappaSquared => "Id-k^2",
            SplitRule::Unipotent => "(Id-k)^2",
        }
    }

    fn operator(self, forms: &Forms, n: usize) -> LinMap {
        let k = forms.reduced_kappa(n);
        let id = LinMap::identity(k.rows());
        match self {
            SplitRule::KappaSquared => id.minus(&k.then_after(&k)),
            SplitRule::Unipotent => {
                let m = id.minus(&k);
                m.then_after(&m)
            }
        }
    }
}

/// `Ω̄ⁿ = P ⊕ P⊥` with `P = ker M` and `P⊥ = im M`.
#[derive(Debug, Clone)]
pub struct HarmonicSplit {
    pub degree: usize,
    pub rule: SplitRule,
    pub p: Subspace,
    pub pperp: Subspace,
}

/// The split with `M = Id − κ²`.
pub fn harmonic_split(forms: &Forms, n: usize) -> Result<HarmonicSplit, CyclicError> {
    harmonic_split_with(forms, n, SplitRule::KappaSquared)
}

pub fn harmonic_split_with(
    forms: &Forms,
    n: usize,
    rule: SplitRule,
) -> Result<HarmonicSplit, CyclicError> {
    let m = rule.operator(forms, n);
    let p = kernel(&m);
    let pperp = Subspace::column_space(&m);
    let dim = forms.reduced_dim(n);
    if p.dim() + pperp.dim() != dim || p.sum(&pperp).dim() != dim {
        return Err(CyclicError::NotDirectSum(n));
    }
    Ok(HarmonicSplit {
        degree: n,
        rule,
        p,
        pperp,
    })
}

fn factorial(n: usize) -> Rational {
    Rational::from_int((1..=n as i64).product())
}

fn vanishes_on(m: &LinMap, basis: &[SparseVec]) -> bool {
    basis.iter().all(|v| m.apply(v).is_empty())
}

fn label(name: &str, rule: SplitRule) -> String {
    format!("{name} [{}]", rule.name())
}

/// On `PΩ̄ⁿ`: `B = (n+1)·d` and `ι_Δ = n·b`; on `P⊥Ω̄ⁿ`: `ι_Δ = 0`. Also
/// checks that `B, d, b, ι_Δ` commute with `M` (so preserve the split) and
/// that `ker M = ker M²`.
pub fn harmonic_identities_check(forms: &Forms, n: usize, rule: SplitRule) -> Report {
    assert!(n >= 1);
    let name = forms.algebra().name().to_string();
    let l = |s: &str| label(s, rule);
    let mut r = Report::new();
    let split = match harmonic_split_with(forms, n, rule) {
        Ok(s) => s,
        Err(e) => {
            r.push(Check::text(&l("P + Pperp direct"), &name, Some(n), "direct sum".into(), e.to_string()));
            return r;
        }
    };
    r.push(Check::holds(&l("P + Pperp direct"), &name, Some(n), true));
    let m = rule.operator(forms, n);
    r.push(Check::count(&l("ker M = ker M^2"), &name, Some(n), rank(&m), rank(&m.then_after(&m))));

    let big_b = (*forms.connes_b(n)).clone();
    let d = forms.reduced_d(n);
    let b = forms.reduced_b(n);
    let iota = forms.reduced_iota(n);
    let c = |k: usize| Rational::from_int(k as i64);
    let p = split.p.basis();
    r.push(Check::holds(
        &l("B = (n+1) d on P"),
        &name,
        Some(n),
        vanishes_on(&big_b.minus(&d.scale(&c(n + 1))), p),
    ));
    r.push(Check::holds(
        &l("iota = n b on P"),
        &name,
        Some(n),
        vanishes_on(&iota.minus(&b.scale(&c(n))), p),
    ));
    r.push(Check::holds(
        &l("iota = 0 on Pperp"),
        &name,
        Some(n),
        vanishes_on(&iota, split.pperp.basis()),
    ));
    for (op, x, q) in [("B", &big_b, n + 1), ("d", &d, n + 1), ("b", &b, n - 1), ("iota", &iota, n - 1)] {
        let ok = rule.operator(forms, q).then_after(x) == x.then_after(&m);
        r.push(Check::holds(&l(&format!("{op} preserves split")), &name, Some(n), ok));
    }
    r
}

/// Homology of `(X, D)` restricted to bases `S_n` of invariant subspaces:
/// `|S_n| − rank D_n S_n − rank D_{n−1} S_{n−1}`.
fn restricted_homology(spans: &[Vec<SparseVec>], ds: &[LinMap], n: usize) -> usize {
    let images = |k: usize| rank(&ds[k].on_vectors(&spans[k]));
    let dim = spans[n].len();
    let incoming = if n == 0 { 0 } else { images(n - 1) };
    dim - images(n) - incoming
}

/// `(Ω̄, d)`, `(PΩ̄, d)`, `(P⊥Ω̄, d)` and `(P⊥Ω̄[t], B + t·b)` are acyclic in
/// degrees `0..=n_max`. The total complex is read in the lowering convention,
/// the one in which `B + t·b` computes cyclic homology.
pub fn acyclicity_checks(forms: &Forms, n_max: usize, rule: SplitRule) -> Report {
    let name = forms.algebra().name().to_string();
    let l = |s: &str| label(s, rule);
    let mut r = Report::new();
    let splits: Result<Vec<HarmonicSplit>, _> =
        (0..=n_max).map(|n| harmonic_split_with(forms, n, rule)).collect();
    let splits = match splits {
        Ok(s) => s,
        Err(e) => {
            r.push(Check::text(&l("harmonic split"), &name, None, "direct sum".into(), e.to_string()));
            return r;
        }
    };
    let ds: Vec<LinMap> = (0..=n_max).map(|n| forms.reduced_d(n)).collect();
    let full: Vec<Vec<SparseVec>> = (0..=n_max)
        .map(|n| Subspace::full(forms.reduced_dim(n)).basis().to_vec())
        .collect();
    let ps: Vec<Vec<SparseVec>> = splits.iter().map(|s| s.p.basis().to_vec()).collect();
    let qs: Vec<Vec<SparseVec>> = splits.iter().map(|s| s.pperp.basis().to_vec()).collect();
    for n in 0..=n_max {
        r.push(Check::count("H(Omega-bar, d)", &name, Some(n), 0, restricted_homology(&full, &ds, n)));
        r.push(Check::count(&l("H(P Omega-bar, d)"), &name, Some(n), 0, restricted_homology(&ps, &ds, n)));
        r.push(Check::count(&l("H(Pperp Omega-bar, d)"), &name, Some(n), 0, restricted_homology(&qs, &ds, n)));
    }
    let slices = match total_complex(forms, Variant::DB, Convention::Lowering, n_max) {
        Ok(s) => s,
        Err(e) => {
            r.push(Check::text("B+tb total complex", &name, None, "complex".into(), e.to_string()));
            return r;
        }
    };
    // P⊥Ω̄[t] in each total degree is the image of M acting blockwise.
    let spans: Vec<LinMap> = slices
        .iter()
        .map(|s| {
            let mut cols: Vec<SparseVec> = Vec::with_capacity(s.dim());
            for (i, &(_, m, _)) in s.blocks.iter().enumerate() {
                let off = s.offset(i);
                let mk = rule.operator(forms, m);
                cols.extend(mk.columns().iter().map(|v| v.iter().map(|(j, c)| (j + off, c.clone())).collect()));
            }
            LinMap::from_columns(s.dim(), cols)
        })
        .collect();
    let image_rank = |k: usize| rank(&slices[k].differential.then_after(&spans[k]));
    for n in 0..=n_max {
        let h = rank(&spans[n]) - image_rank(n) - image_rank(n + 1);
        r.push(Check::count(&l("H(Pperp Omega-bar[t], B+tb)"), &name, Some(n), 0, h));
    }
    r
}

/// `F⁽ⁿ⁾ = n!·Id` intertwines `(PΩ̄, B, b)` with `(PΩ̄, d, ι_Δ)`:
/// `B∘F⁽ⁿ⁾ = F⁽ⁿ⁺¹⁾∘d` and `b∘F⁽ⁿ⁾ = F⁽ⁿ⁻¹⁾∘ι_Δ` on `PΩ̄ⁿ`.
pub fn rescale_iso_check(forms: &Forms, n_max: usize, rule: SplitRule) -> Report {
    let name = forms.algebra().name().to_string();
    let l = |s: &str| label(s, rule);
    let mut r = Report::new();
    for n in 0..=n_max {
        let split = match harmonic_split_with(forms, n, rule) {
            Ok(s) => s,
            Err(e) => {
                r.push(Check::text(&l("harmonic split"), &name, Some(n), "direct sum".into(), e.to_string()));
                continue;
            }
        };
        let p = split.p.basis();
        let f = |k: usize| LinMap::scalar(forms.reduced_dim(k), &factorial(k));
        let lhs = forms.connes_b(n).then_after(&f(n));
        let rhs = f(n + 1).then_after(&forms.reduced_d(n));
        r.push(Check::holds(&l("B F(n) = F(n+1) d on P"), &name, Some(n), vanishes_on(&lhs.minus(&rhs), p)));
        if n >= 1 {
            let lhs = forms.reduced_b(n).then_after(&f(n));
            let rhs = f(n - 1).then_after(&forms.reduced_iota(n));
            r.push(Check::holds(
                &l("b F(n) = F(n-1) iota on P"),
                &name,
                Some(n),
                vanishes_on(&lhs.minus(&rhs), p),
            ));
        }
    }
    r
}
