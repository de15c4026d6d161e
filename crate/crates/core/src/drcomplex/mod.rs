//! Commutator quotients of forms, the Karoubi–de Rham complex and Hochschild
//! homology computed three ways.

pub mod bar;

use crate::algebra::commutator_space;
use crate::exactlin::{homology_dim, kernel, rank, LinMap, Rational, SparseVec, Subspace};
use crate::forms::Forms;
use crate::report::{Check, Report};

/// `V / R` for a subspace `R ⊆ V = ℚᵐ`, with the canonical section spanned by
/// the non-pivot coordinates of `R`.
#[derive(Debug, Clone)]
pub struct QuotientSpace {
    pub relations: Subspace,
    section: Vec<usize>,
    section_pos: Vec<usize>,
}

impl QuotientSpace {
    pub fn new(relations: Subspace) -> Self {
        let section = relations.free_indices();
        let mut section_pos = vec![usize::MAX; relations.ambient_dim()];
        for (k, &i) in section.iter().enumerate() {
            section_pos[i] = k;
        }
        Self {
            relations,
            section,
            section_pos,
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.relations.ambient_dim()
    }

    pub fn dim(&self) -> usize {
        self.section.len()
    }

    /// Quotient coordinates of a class.
    pub fn project(&self, v: &[(usize, Rational)]) -> SparseVec {
        self.relations
            .reduce(v)
            .into_iter()
            .map(|(i, c)| (self.section_pos[i], c))
            .collect()
    }

    /// Representative of a class in the section.
    pub fn lift(&self, coords: &[(usize, Rational)]) -> SparseVec {
        coords
            .iter()
            .map(|(k, c)| (self.section[*k], c.clone()))
            .collect()
    }

    /// `ambient → quotient`.
    pub fn projection(&self) -> LinMap {
        LinMap::from_fn(self.dim(), self.ambient_dim(), |i| {
            self.project(&[(i, Rational::one())])
        })
    }

    /// `quotient → ambient` along the section.
    pub fn lifting(&self) -> LinMap {
        LinMap::from_fn(self.ambient_dim(), self.dim(), |k| {
            vec![(self.section[k], Rational::one())]
        })
    }

    /// Matrix of the map induced by `m: ambient → target.ambient`, or `None`
    /// if `m` does not carry relations into the target's relations.
    pub fn induced(&self, m: &LinMap, target: &QuotientSpace) -> Option<LinMap> {
        let ok = self
            .relations
            .basis()
            .iter()
            .all(|v| target.relations.contains(&m.apply(v)));
        if !ok {
            return None;
        }
        Some(target.projection().then_after(&m.then_after(&self.lifting())))
    }

    /// Like [`Self::induced`] with an unquotiented target.
    pub fn induced_to_space(&self, m: &LinMap) -> Option<LinMap> {
        let ok = self.relations.basis().iter().all(|v| m.apply(v).is_empty());
        ok.then(|| m.then_after(&self.lifting()))
    }
}

fn id_minus_kappa(forms: &Forms, n: usize) -> LinMap {
    LinMap::identity(forms.dim(n)).minus(&forms.kappa(n))
}

/// `(Ωⁿ)_♮ = Ωⁿ / bΩⁿ⁺¹`.
pub fn natural_quotient(forms: &Forms, n: usize) -> QuotientSpace {
    QuotientSpace::new(Subspace::column_space(&forms.b(n + 1)))
}

/// `bΩⁿ⁺¹ + (Id − κ)Ωⁿ ⊆ Ωⁿ`.
pub fn dr_relations(forms: &Forms, n: usize) -> Subspace {
    let m = forms.b(n + 1).hstack(&id_minus_kappa(forms, n)).expect("same rows");
    Subspace::column_space(&m)
}

/// `DRⁿ = Ωⁿ / [Ω, Ω]ⁿ`.
pub fn dr_space(forms: &Forms, n: usize) -> QuotientSpace {
    QuotientSpace::new(dr_relations(forms, n))
}

/// `dim DRⁿ` by a rank computation only.
pub fn dr_dim(forms: &Forms, n: usize) -> usize {
    let m = forms.b(n + 1).hstack(&id_minus_kappa(forms, n)).expect("same rows");
    forms.dim(n) - rank(&m)
}

/// Span of all graded commutators of basis forms of complementary degrees.
pub fn brute_force_commutators(forms: &Forms, n: usize) -> Subspace {
    let one = Rational::one();
    let mut gens = Vec::new();
    for p in 0..=n {
        for i in 0..forms.dim(p) {
            for j in 0..forms.dim(n - p) {
                gens.push(forms.graded_commutator(&[(i, one.clone())], p, &[(j, one.clone())], n - p));
            }
        }
    }
    Subspace::span(forms.dim(n), gens)
}

/// `[A, Ωⁿ]^κ = ker(Id − κ) ∩ bΩⁿ⁺¹ ⊆ Ωⁿ`.
pub fn kappa_fixed_commutators(forms: &Forms, n: usize) -> Subspace {
    kernel(&id_minus_kappa(forms, n)).intersection(&Subspace::column_space(&forms.b(n + 1)))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HochschildMethod {
    /// Homology of `(Ω•, b)`.
    Forms,
    /// Normalized bar complex from the multiplication table.
    Bar,
    /// Kernel of the induced `ι_Δ: DRⁿ → Ωⁿ⁻¹`.
    KerIota,
}

impl HochschildMethod {
    pub const ALL: [HochschildMethod; 3] = [Self::Forms, Self::Bar, Self::KerIota];

    pub fn name(self) -> &'static str {
        match self {
            Self::Forms => "forms",
            Self::Bar => "bar",
            Self::KerIota => "ker_iota",
        }
    }
}

/// `dim ker(ι_Δ: DRⁿ → Ωⁿ⁻¹)`, with `ι_Δ = N∘b`. Checks that `ι_Δ` kills the
/// relations first (`ι∘b = 0` and `ι∘(Id−κ) = 0` as matrices).
pub fn ker_iota_dim(forms: &Forms, n: usize) -> Result<usize, String> {
    if n == 0 {
        return Ok(dr_dim(forms, 0));
    }
    let iota = forms.iota_nb(n);
    if !iota.then_after(&forms.b(n + 1)).is_zero() {
        return Err(format!("ι_Δ∘b ≠ 0 on Ω^{}", n + 1));
    }
    if !iota.then_after(&id_minus_kappa(forms, n)).is_zero() {
        return Err(format!("ι_Δ∘(Id−κ) ≠ 0 on Ω^{n}"));
    }
    // ι vanishes on the relations, so its rank on DRⁿ equals its rank on Ωⁿ.
    Ok(dr_dim(forms, n) - rank(&iota))
}

pub fn hochschild_homology(forms: &Forms, n: usize, method: HochschildMethod) -> usize {
    match method {
        HochschildMethod::Forms => homology_dim(&forms.b(n + 1), &forms.b(n))
            .expect("b squares to zero"),
        HochschildMethod::Bar => bar::bar_hochschild(forms.algebra(), n),
        HochschildMethod::KerIota => ker_iota_dim(forms, n).expect("ι_Δ descends to DR"),
    }
}

/// Inside `(Ωⁿ)_♮` the κ-invariants map isomorphically onto `DRⁿ`.
pub fn kappa_invariants_iso_check(forms: &Forms, n: usize) -> Report {
    let name = forms.algebra().name().to_string();
    let mut r = Report::new();
    let nat = natural_quotient(forms, n);
    let dr = dr_space(forms, n);
    let Some(kq) = nat.induced(&forms.kappa(n), &nat) else {
        r.push(Check::holds("kappa descends to natural quotient", &name, Some(n), false));
        return r;
    };
    let inv = kernel(&kq.minus(&LinMap::identity(nat.dim())));
    r.push(Check::count("kappa invariants vs DR", &name, Some(n), dr.dim(), inv.dim()));
    let lifted: Vec<SparseVec> = inv.basis().iter().map(|v| nat.lift(v)).collect();
    let images = LinMap::from_columns(dr.dim(), lifted.iter().map(|v| dr.project(v)).collect());
    r.push(Check::count("kappa invariants inject into DR", &name, Some(n), inv.dim(), rank(&images)));
    r
}

/// `0 → HHₙ → DRⁿ → [A, Ωⁿ⁻¹]^κ → 0`.
pub fn ses_check(forms: &Forms, n: usize) -> Report {
    assert!(n >= 1);
    let name = forms.algebra().name().to_string();
    let mut r = Report::new();
    let hh = bar::bar_hochschild(forms.algebra(), n);
    let fixed = kappa_fixed_commutators(forms, n - 1);
    let dr = dr_dim(forms, n);
    r.push(Check::count("DR = HH + [A,Omega]^kappa", &name, Some(n), dr, hh + fixed.dim()));
    let image = Subspace::column_space(&forms.iota_nb(n));
    r.push(Check::holds("image iota = [A,Omega]^kappa", &name, Some(n), image == fixed));
    r
}

/// Induced `d: DRⁿ → DRⁿ⁺¹`, after checking `d[Ω,Ω] ⊆ [Ω,Ω]`.
pub fn induced_d_on_dr(forms: &Forms, n: usize) -> Option<LinMap> {
    let src = dr_space(forms, n);
    let tgt = dr_space(forms, n + 1);
    src.induced(&forms.d(n), &tgt)
}

/// Closed and exact forms in DR¹, DR² and the commutator space, under the
/// connectivity and `HH₂ = 0` hypotheses (tested, not assumed).
pub fn ham_lemma_check(forms: &Forms) -> Report {
    let alg = forms.algebra();
    let name = alg.name().to_string();
    let mut r = Report::new();
    let maps: Option<Vec<LinMap>> = (0..3).map(|n| induced_d_on_dr(forms, n)).collect();
    let Some(maps) = maps else {
        r.push(Check::holds("d preserves commutators", &name, None, false));
        return r;
    };
    r.push(Check::holds("d preserves commutators", &name, None, true));
    let ker_dim = |m: &LinMap| m.cols() - rank(m);
    let connected = ker_dim(&maps[0]) == 1;
    let hh2 = bar::bar_hochschild(alg, 2);
    if !connected || hh2 != 0 {
        r.note(format!(
            "{name}: hypotheses not met (connected: {connected}, HH2 = {hh2})"
        ));
        return r;
    }
    let hh1 = bar::bar_hochschild(alg, 1);
    let closed1 = ker_dim(&maps[1]);
    let exact1 = rank(&maps[0]);
    r.push(Check::count("DR1 closed = HH1", &name, Some(1), hh1, closed1));
    r.push(Check::count("DR1 exact = DR1 closed", &name, Some(1), closed1, exact1));
    let closed2 = ker_dim(&maps[2]);
    r.push(Check::count(
        "DR2 closed = [A,A]",
        &name,
        Some(2),
        commutator_space(alg).dim(),
        closed2,
    ));
    r
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::*;

    #[test]
    fn dual_numbers_examples() {
        let f = Forms::new(dual_numbers());
        assert_eq!(natural_quotient(&f, 1).dim(), 1);
        assert_eq!(dr_space(&f, 1).dim(), 1);
        assert_eq!(dr_dim(&f, 0), 2);
        let hh: Vec<usize> = (0..4)
            .map(|n| hochschild_homology(&f, n, HochschildMethod::KerIota))
            .collect();
        assert_eq!(hh, vec![2, 1, 1, 1]);
        assert!(kappa_invariants_iso_check(&f, 1).all_pass());
        assert!(ses_check(&f, 1).all_pass());
        assert!(ses_check(&f, 2).all_pass());
    }

    #[test]
    fn relations_match_brute_force() {
        for a in [dual_numbers(), matrix_algebra(2), group_algebra_cyclic(2)] {
            let f = Forms::new(a);
            for n in 0..3 {
                assert_eq!(dr_relations(&f, n), brute_force_commutators(&f, n));
            }
        }
    }

    #[test]
    fn m2_ham_lemma() {
        let f = Forms::new(matrix_algebra(2));
        let r = ham_lemma_check(&f);
        assert!(r.notes.is_empty(), "{r}");
        assert!(r.all_pass(), "{r}");
        assert_eq!(r.checks.len(), 4);
    }

    #[test]
    fn dual_numbers_ham_lemma_not_applicable() {
        let r = ham_lemma_check(&Forms::new(dual_numbers()));
        assert_eq!(r.notes.len(), 1);
    }

    #[test]
    fn ground_field() {
        let f = Forms::new(crate::algebra::ground_field());
        assert_eq!(dr_dim(&f, 0), 1);
        assert_eq!(dr_dim(&f, 1), 0);
        assert!(kappa_invariants_iso_check(&f, 2).all_pass());
    }
}
