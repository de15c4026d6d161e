//! Checks of the evaluation map against both differentials.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{
    act_field, d_dr, d_g, ev, i_delta_contraction, i_delta_word, trace_ev, Gen, Letter, NCForm,
    NCWord, Poly, PolyMatrix, Vars,
};
use crate::exactlin::Rational;
use crate::report::{Check, Report};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RepConfig {
    pub m: usize,
    pub d: usize,
    pub max_word_len: usize,
    pub seed: u64,
}

fn label(m: usize, d: usize) -> String {
    match m {
        1 => format!("k<x1>, d={d}"),
        _ => format!("k<x1..x{m}>, d={d}"),
    }
}

/// All words of length exactly `len` over `alphabet`.
fn words_of_len(alphabet: &[Gen], len: usize) -> Vec<Vec<Gen>> {
    let mut out = vec![vec![]];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w| {
                alphabet.iter().map(move |&g| {
                    let mut v = w.clone();
                    v.push(g);
                    v
                })
            })
            .collect();
    }
    out
}

/// `(a₀, [a₁…aₙ])` with `aᵢ ≠ 1` for `i ≥ 1`, `n = n_forms`, total length
/// at most `max_len`.
fn chains(m: usize, alphabet: &[Gen], n_forms: usize, max_len: usize) -> Vec<(NCWord, Vec<NCWord>)> {
    fn rec(
        m: usize,
        alphabet: &[Gen],
        left: usize,
        budget: usize,
        acc: &mut Vec<NCWord>,
        out: &mut Vec<Vec<NCWord>>,
    ) {
        if left == 0 {
            out.push(acc.clone());
            return;
        }
        for len in 1..=budget.saturating_sub(left - 1) {
            for w in words_of_len(alphabet, len) {
                acc.push(NCWord::new(m, w));
                rec(m, alphabet, left - 1, budget - len, acc, out);
                acc.pop();
            }
        }
    }
    let mut out = Vec::new();
    if n_forms > max_len {
        return out;
    }
    for l0 in 0..=max_len - n_forms {
        for a0 in words_of_len(alphabet, l0) {
            let mut tails = Vec::new();
            rec(m, alphabet, n_forms, max_len - l0, &mut Vec::new(), &mut tails);
            for t in tails {
                out.push((NCWord::new(m, a0.clone()), t));
            }
        }
    }
    out
}

fn xs(m: usize) -> Vec<Gen> {
    (0..m).map(Gen::X).collect()
}

fn xs_t(m: usize) -> Vec<Gen> {
    let mut a = xs(m);
    a.push(Gen::T);
    a
}

/// Tallies from [`rep_thm_counts`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct RepCounts {
    pub d_total: usize,
    pub d_bad: usize,
    pub i_total: usize,
    pub i_bad: usize,
    /// Forms whose `Tr ev(ι_Δ ω)` is nonzero.
    pub i_nonzero: usize,
}

/// For every `ω = a₀da₁…daₙ` with `n ≤ 2` and total length at most
/// `max_word_len`: `Tr ev(dω) = d_DR Tr ev(ω)` with letters in
/// `{x₁…xₘ, t}`, and `Tr ev(ι_Δ ω) = d_𝔤 Tr ev(ω)` with letters in
/// `{x₁…xₘ}`.
pub fn rep_thm_counts(m: usize, d: usize, max_word_len: usize) -> RepCounts {
    let mut c = RepCounts::default();
    for n in 0..=2 {
        for (a0, rest) in chains(m, &xs_t(m), n, max_word_len) {
            let w = NCForm::chain(&a0, &rest);
            c.d_total += 1;
            if trace_ev(&w.d(), m, d) != d_dr(&trace_ev(&w, m, d), m, d) {
                c.d_bad += 1;
            }
        }
        for (a0, rest) in chains(m, &xs(m), n, max_word_len) {
            let w = NCForm::chain(&a0, &rest);
            let lhs = trace_ev(&i_delta_word(&a0, &rest), m, d);
            let rhs = d_g(&trace_ev(&w, m, d), m, d);
            c.i_total += 1;
            if !lhs.is_zero() {
                c.i_nonzero += 1;
            }
            if lhs != rhs {
                c.i_bad += 1;
            }
        }
    }
    c
}

pub fn rep_thm_check(m: usize, d: usize, max_word_len: usize) -> Report {
    let alg = label(m, d);
    let c = rep_thm_counts(m, d, max_word_len);
    let mut r = Report::new();
    r.push(Check::count(
        &format!("Tr ev(d w) = d_DR Tr ev(w) ({} forms)", c.d_total),
        &alg,
        None,
        0,
        c.d_bad,
    ));
    r.push(Check::count(
        &format!("Tr ev(i_Delta w) = d_g Tr ev(w) ({} forms, {} nonzero)", c.i_total, c.i_nonzero),
        &alg,
        None,
        0,
        c.i_bad,
    ));
    r
}

/// At `n = 3`: mismatches against `d_𝔤` of the alternating-sign word
/// formula and of the term-by-term reduced contraction, out of a total.
pub fn contraction_sign_probe(m: usize, d: usize, max_word_len: usize) -> (usize, usize, usize) {
    let (mut alt, mut red, mut total) = (0, 0, 0);
    for (a0, rest) in chains(m, &xs(m), 3, max_word_len) {
        let rhs = d_g(&trace_ev(&NCForm::chain(&a0, &rest), m, d), m, d);
        total += 1;
        if trace_ev(&i_delta_word(&a0, &rest), m, d) != rhs {
            alt += 1;
        }
        if trace_ev(&i_delta_contraction(&a0, &rest), m, d) != rhs {
            red += 1;
        }
    }
    (alt, red, total)
}

fn random_word(m: usize, rng: &mut ChaCha8Rng, max_len: usize) -> NCWord {
    let alphabet = xs_t(m);
    let len = rng.gen_range(0..=max_len);
    let w = (0..len).map(|_| alphabet[rng.gen_range(0..alphabet.len())]).collect();
    let mut nc = NCWord::new(m, w);
    nc.coeff = Rational::from_int(rng.gen_range(1..=5)) * Rational::new(1, rng.gen_range(1..=3));
    nc
}

/// `ev(w)[i,j]` as a sum over index paths `i = i₀, i₁, …, i_L = j`.
fn ev_by_paths(w: &NCWord, d: usize) -> PolyMatrix {
    let vars = Vars::new(w.m, d);
    let len = w.word.len();
    let mut entries = vec![Poly::zero(); d * d];
    let paths = (d as u64).pow(len.saturating_sub(1) as u32) as usize;
    for i in 0..d {
        for j in 0..d {
            let e = &mut entries[i * d + j];
            if len == 0 {
                if i == j {
                    e.add_scaled(&Poly::one(), &w.coeff);
                }
                continue;
            }
            for p in 0..paths {
                let mut idx = vec![i];
                let mut q = p;
                for _ in 0..len - 1 {
                    idx.push(q % d);
                    q /= d;
                }
                idx.push(j);
                let mut mono = Poly::constant(w.coeff.clone());
                for (l, g) in w.word.iter().enumerate() {
                    let v = match g {
                        Gen::X(k) => vars.x(*k, idx[l], idx[l + 1]),
                        Gen::T => vars.y(idx[l], idx[l + 1]),
                    };
                    mono = mono.mul(&Poly::var(v));
                }
                e.add_scaled(&mono, &Rational::one());
            }
        }
    }
    PolyMatrix { d, entries }
}

/// `ev(uv) = ev(u)ev(v)` on `samples` random pairs, with `ev(uv)` expanded
/// over index paths. Returns the number of failures.
pub fn ev_multiplicative_check(m: usize, d: usize, seed: u64, samples: usize) -> usize {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad = 0;
    for _ in 0..samples {
        let u = random_word(m, &mut rng, 3);
        let v = random_word(m, &mut rng, 3);
        let uv = u.times(&v);
        let prod = ev(&u, d).mul(&ev(&v, d));
        if ev_by_paths(&uv, d) != prod || ev(&uv, d) != prod {
            bad += 1;
        }
    }
    bad
}

fn random_form(m: usize, rng: &mut ChaCha8Rng, deg: usize, max_len: usize) -> NCForm {
    let mut f = NCForm::zero();
    for _ in 0..2 {
        let extra = rng.gen_range(0..=max_len.saturating_sub(deg));
        let mut w: Vec<Letter> = (0..deg).map(|_| Letter::DX(rng.gen_range(0..m))).collect();
        for _ in 0..extra {
            let l = match rng.gen_range(0..=m) {
                k if k < m => Letter::X(k),
                _ => Letter::T,
            };
            w.insert(rng.gen_range(0..=w.len()), l);
        }
        f.add_term(w, &Rational::from_int(rng.gen_range(1..=4)));
    }
    f
}

/// `Tr ev([α, β]) = 0` for random homogeneous forms with degree pairs
/// `(p, q)`, `p, q ≤ 2`. Returns `(failures, samples)`.
pub fn trace_commutator_check(m: usize, d: usize, seed: u64, per_pair: usize) -> (usize, usize) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut bad, mut total) = (0, 0);
    for p in 0..=2 {
        for q in 0..=2 {
            for _ in 0..per_pair {
                let a = random_form(m, &mut rng, p, 3);
                let b = random_form(m, &mut rng, q, 3);
                total += 1;
                if !trace_ev(&a.graded_commutator(&b), m, d).is_zero() {
                    bad += 1;
                }
            }
        }
    }
    (bad, total)
}

/// Lie derivative along `(act(E_ij), ad E_ij)` of `Tr ev(ω)` for every
/// chain of length at most `max_len`, `n ≤ 2`, letters in `{x, t}`, and
/// every `E_ij`. Returns `(failures, forms)`.
pub fn invariance_check(m: usize, d: usize, max_len: usize) -> (usize, usize) {
    let vars = Vars::new(m, d);
    let (mut bad, mut total) = (0, 0);
    for n in 0..=2 {
        for (a0, rest) in chains(m, &xs_t(m), n, max_len) {
            let w = trace_ev(&NCForm::chain(&a0, &rest), m, d);
            total += 1;
            let moved = (0..d).any(|i| (0..d).any(|j| !w.lie(&act_field(&vars, i, j, true), &vars).is_zero()));
            if moved {
                bad += 1;
            }
        }
    }
    (bad, total)
}

/// Everything above for one `(m, d)`.
pub fn rep_suite(c: &RepConfig) -> Report {
    let alg = label(c.m, c.d);
    let mut r = Report::with_seed(c.seed);
    r.push(Check::count(
        "ev(uv) = ev(u) ev(v) (50 random pairs)",
        &alg,
        None,
        0,
        ev_multiplicative_check(c.m, c.d, c.seed, 50),
    ));
    let (bad, total) = trace_commutator_check(c.m, c.d, c.seed.wrapping_add(1), 3);
    r.push(Check::count(
        &format!("Tr ev vanishes on graded commutators ({total} samples)"),
        &alg,
        None,
        0,
        bad,
    ));
    let (bad, total) = invariance_check(c.m, c.d, c.max_word_len);
    r.push(Check::count(&format!("Tr ev is g-invariant ({total} forms)"), &alg, None, 0, bad));

    let mut sq_bad = 0;
    for n in 0..=2 {
        for (a0, rest) in chains(c.m, &xs(c.m), n, c.max_word_len) {
            let w = trace_ev(&NCForm::chain(&a0, &rest), c.m, c.d);
            if !d_g(&d_g(&w, c.m, c.d), c.m, c.d).is_zero() || !d_dr(&d_dr(&w, c.m, c.d), c.m, c.d).is_zero() {
                sq_bad += 1;
            }
        }
    }
    r.push(Check::count("d_g^2 = 0 and d_DR^2 = 0 on the image", &alg, None, 0, sq_bad));
    r.extend(rep_thm_check(c.m, c.d, c.max_word_len));

    let (alt, red, total) = contraction_sign_probe(c.m, c.d, c.max_word_len.max(3));
    r.push(Check::count(
        &format!("term-by-term contraction matches d_g at n = 3 ({total} forms)"),
        &alg,
        Some(3),
        0,
        red,
    ));
    r.note(format!(
        "n = 3: alternating-sign word formula differs from d_g on {alt} of {total} forms"
    ));
    r
}
