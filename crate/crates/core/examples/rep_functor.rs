//! Evaluate forms on k⟨x₁,x₂⟩ ∗ k[t] in 2×2 matrices and compare ι_Δ with
//! the equivariant differential.

use ncdiff::repfunctor::{d_g, i_delta_word, rep_suite, trace_ev, NCForm, NCWord, RepConfig, Vars};

fn main() {
    let (m, d) = (2, 2);
    let a0 = NCWord::xs(m, &[1]);
    let a1 = NCWord::xs(m, &[2]);
    let w = NCForm::chain(&a0, std::slice::from_ref(&a1));
    println!("ω           = {}", w.render());
    println!("ι_Δ ω       = {}", i_delta_word(&a0, std::slice::from_ref(&a1)).render());
    let tr = trace_ev(&w, m, d);
    println!("d_g Tr ev ω = {}", d_g(&tr, m, d).render(&Vars::new(m, d)));
    print!("{}", rep_suite(&RepConfig { m, d, max_word_len: 3, seed: 0 }));
}
