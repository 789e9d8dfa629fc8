//! Expands Q·P, with P a right-normed word, into the alternating sum
//! Σ Q_{i-1} P_i a_i + Q_{m-1} a_m, and checks it against the rewriter.

use leibniz::rewrite::{normalize, parse, psom_expand, psom_normal_form, ProductTree};

fn main() -> leibniz::Result<()> {
    let cases = [("q", "a2*a1"), ("q", "a3*a2*a1"), ("[x!,y]", "a!*b*c!*d")];
    for (q_text, p_text) in cases {
        let q0 = parse(q_text)?;
        let p0 = parse(p_text)?.to_right_word().expect("right-normed input");
        let whole = ProductTree::node(q0.clone(), p0.to_tree());
        println!(
            "{whole}  (length {}, weight {})",
            whole.length(),
            whole.weight()
        );
        let summands = psom_expand(&q0, &p0);
        for s in &summands {
            let ok = if s.measures_consistent(&whole) {
                "ok"
            } else {
                "MISMATCH"
            };
            println!("  i = {}: {s}  [measures {ok}]", s.index);
        }
        let via_psom = psom_normal_form(&summands);
        let direct = normalize(&whole);
        println!("  normal form {direct}");
        println!("  both routes agree: {}\n", via_psom == direct);
    }
    Ok(())
}
