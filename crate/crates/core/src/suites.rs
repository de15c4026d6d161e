//! Named check suites over one algebra, as run by `ncdiff verify`.

use crate::algebra::{delta, FinDimAlgebra};
use crate::cyclic::{acyclicity_checks, harmonic_identities_check, reduced_cyclic_dims, rescale_iso_check, CyclicMethod, SplitRule};
use crate::deform::deform_suite;
use crate::drcomplex::{brute_force_commutators, hochschild_homology, kappa_invariants_iso_check, ses_check, HochschildMethod};
use crate::exactlin::LinMap;
use crate::forms::Forms;
use crate::freeprod::{bar_vs_dtau_check, delta_tau_check, extended_suite, t_suite};
use crate::report::{Check, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Suite {
    Identities,
    Harmonic,
    Freeprod,
    Deform,
    All,
}

impl Suite {
    pub fn name(self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Harmonic => "harmonic",
            Suite::Freeprod => "freeprod",
            Suite::Deform => "deform",
            Suite::All => "all",
        }
    }

    pub fn parse(s: &str) -> Option<Suite> {
        [Suite::Identities, Suite::Harmonic, Suite::Freeprod, Suite::Deform, Suite::All]
            .into_iter()
            .find(|x| x.name() == s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SuiteConfig {
    pub max_degree: usize,
    pub t_cap: usize,
    pub seed: u64,
    pub split: SplitRule,
}

impl Default for SuiteConfig {
    fn default() -> Self {
        SuiteConfig {
            max_degree: 3,
            t_cap: 2,
            seed: 0,
            split: SplitRule::Unipotent,
        }
    }
}

fn eq_check(r: &mut Report, name: &str, alg: &str, n: usize, a: &LinMap, b: &LinMap) {
    r.push(Check::holds(name, alg, Some(n), a == b));
}

fn zero_check(r: &mut Report, name: &str, alg: &str, n: usize, a: &LinMap) {
    r.push(Check::holds(name, alg, Some(n), a.is_zero()));
}

/// `bd + db = Id − κ`, `κⁿ − Id = bκⁿd`, `κⁿ⁺¹d = d`, `d² = b² = 0` on `Ωⁿ`
/// and `B² = 0`, `Bb + bB = 0` on `Ω̄ⁿ`.
pub fn identities_check(forms: &Forms, n: usize) -> Report {
    let alg = forms.algebra().name().to_string();
    let mut r = Report::new();
    let dn = forms.dim(n);
    let id = LinMap::identity(dn);
    let (d, b, k) = (forms.d(n), forms.b(n + 1), forms.kappa(n));
    let mut lhs = b.then_after(&d);
    if n > 0 {
        lhs = lhs.plus(&forms.d(n - 1).then_after(&forms.b(n)));
    }
    eq_check(&mut r, "bd + db = Id - k", &alg, n, &lhs, &id.minus(&k));
    let kn = k.power(n);
    let kn1 = forms.kappa(n + 1).power(n);
    eq_check(&mut r, "k^n - Id = b k^n d", &alg, n, &kn.minus(&id), &b.then_after(&kn1.then_after(&d)));
    let kd = forms.kappa(n + 1).power(n + 1).then_after(&d);
    eq_check(&mut r, "k^(n+1) d = d", &alg, n, &kd, &d);
    zero_check(&mut r, "d^2 = 0", &alg, n, &forms.d(n + 1).then_after(&d));
    if n >= 2 {
        zero_check(&mut r, "b^2 = 0", &alg, n, &forms.b(n - 1).then_after(&forms.b(n)));
    }
    let bb = forms.connes_b(n + 1).then_after(&forms.connes_b(n));
    zero_check(&mut r, "B^2 = 0", &alg, n, &bb);
    if n >= 1 {
        let anti = forms
            .connes_b(n - 1)
            .then_after(&forms.reduced_b(n))
            .plus(&forms.reduced_b(n + 1).then_after(&forms.connes_b(n)));
        zero_check(&mut r, "Bb + bB = 0", &alg, n, &anti);
    }
    r
}

/// The contraction by `Δ` on `Ωⁿ`: the term-by-term formula equals the
/// rotated `𝐢_Δ`, equals `−N∘b` with `Δ(a) = 1⊗a − a⊗1`, and kills
/// `[Ω, Ω]ⁿ`. The alternating-sign formula is compared in degrees 1 and 2.
pub fn contraction_check(forms: &Forms, n: usize) -> Report {
    assert!(n >= 1);
    let alg = forms.algebra().name().to_string();
    let mut r = Report::new();
    let del = delta(forms.algebra());
    let bi = forms.reduced_contraction(&del, n);
    eq_check(&mut r, "contraction = rotated i_Delta", &alg, n, &bi, &forms.rotate(&forms.big_i(&del, n)));
    eq_check(&mut r, "contraction = -N b", &alg, n, &bi, &forms.iota_nb(n).neg());
    let comm = brute_force_commutators(forms, n);
    let kills = comm.basis().iter().all(|v| forms.iota_nb(n).apply(v).is_empty());
    r.push(Check::holds("N b kills [Omega, Omega]", &alg, Some(n), kills));
    if n <= 2 {
        eq_check(&mut r, "alternating formula = contraction", &alg, n, &forms.bidelta_contraction(n), &bi);
    }
    r
}

/// Operator identities, the contraction, Hochschild homology by three
/// methods, and the κ-invariant and short-exact-sequence checks.
pub fn identities_suite(alg: &FinDimAlgebra, cfg: &SuiteConfig) -> Report {
    let forms = Forms::new(alg.clone());
    let name = alg.name().to_string();
    let mut r = Report::new();
    for n in 0..=cfg.max_degree {
        r.extend(identities_check(&forms, n));
    }
    for n in 1..=cfg.max_degree {
        r.extend(contraction_check(&forms, n));
    }
    for n in 0..=cfg.max_degree {
        let vals: Vec<usize> = HochschildMethod::ALL.iter().map(|&m| hochschild_homology(&forms, n, m)).collect();
        r.push(Check::text(
            "HH by forms, bar, ker iota",
            &name,
            Some(n),
            format!("{0}, {0}, {0}", vals[1]),
            format!("{}, {}, {}", vals[0], vals[1], vals[2]),
        ));
    }
    for n in 1..=cfg.max_degree {
        r.extend(kappa_invariants_iso_check(&forms, n));
        r.extend(ses_check(&forms, n));
    }
    r
}

/// Harmonic decomposition under `cfg.split`, acyclicity, rescaling, and
/// `(b, B)` against the λ-complex.
pub fn harmonic_suite(alg: &FinDimAlgebra, cfg: &SuiteConfig) -> Report {
    let forms = Forms::new(alg.clone());
    let name = alg.name().to_string();
    let mut r = Report::new();
    for n in 1..=cfg.max_degree {
        r.extend(harmonic_identities_check(&forms, n, cfg.split));
    }
    r.extend(acyclicity_checks(&forms, cfg.max_degree, cfg.split));
    r.extend(rescale_iso_check(&forms, cfg.max_degree, cfg.split));
    let bb = reduced_cyclic_dims(&forms, CyclicMethod::DB, cfg.max_degree);
    let lambda = reduced_cyclic_dims(&forms, CyclicMethod::Lambda, cfg.max_degree);
    r.push(Check::text("reduced HC by (b,B) = lambda", &name, None, format!("{lambda:?}"), format!("{bb:?}")));
    r
}

/// t-derivations, bar vs `d/dτ`, `Δ_τ`, and the extended complex with form
/// cap `min(max_degree, 3)`.
pub fn freeprod_suite(alg: &FinDimAlgebra, cfg: &SuiteConfig) -> Report {
    let mut r = Report::new();
    r.extend(t_suite(alg, cfg.t_cap, cfg.seed));
    for n in 2..=cfg.max_degree.max(2) {
        r.extend(bar_vs_dtau_check(alg, n));
    }
    for n in 1..=cfg.max_degree.max(1) {
        r.extend(delta_tau_check(alg, n));
    }
    r.extend(extended_suite(alg, cfg.t_cap, cfg.max_degree.clamp(1, 3)));
    r
}

pub fn run_suite(alg: &FinDimAlgebra, suite: Suite, cfg: &SuiteConfig) -> Report {
    let mut r = Report::with_seed(cfg.seed);
    let parts: &[Suite] = match suite {
        Suite::All => &[Suite::Identities, Suite::Harmonic, Suite::Freeprod, Suite::Deform],
        _ => std::slice::from_ref(&suite),
    };
    for s in parts {
        let rep = match s {
            Suite::Identities => identities_suite(alg, cfg),
            Suite::Harmonic => harmonic_suite(alg, cfg),
            Suite::Freeprod => freeprod_suite(alg, cfg),
            Suite::Deform => deform_suite(alg, cfg.seed),
            Suite::All => unreachable!(),
        };
        r.extend(rep);
    }
    r
}
