//! Checks the right and left Leibniz identities on structure constants given
//! in code, and prints the failing basis triples of a non-example.

use leibniz::algebra::{verify_left_leibniz, verify_right_leibniz, IdentityReport};
use leibniz::{AlgebraDef, Field};

fn show(a: &AlgebraDef, r: &IdentityReport) {
    let verdict = if r.is_valid() { "holds" } else { "fails" };
    println!(
        "{}: {} {verdict} ({} triples checked)",
        a.name(),
        r.identity,
        r.triples_checked
    );
    for f in &r.failures {
        let (i, j, k) = f.triple;
        println!("    at (e{i}, e{j}, e{k}): {} != {}", f.lhs, f.rhs);
    }
}

fn main() -> leibniz::Result<()> {
    let q = Field::Rational;
    let one = q.one();
    let algebras = [
        // [e1, e1] = e2
        AlgebraDef::new("l2", 2, q, [(1, 1, 2, one.clone())])?,
        // [e2, e1] = e2
        AlgebraDef::new("a2", 2, q, [(2, 1, 2, one.clone())])?,
        // Heisenberg: [e1, e2] = e3 = -[e2, e1]
        AlgebraDef::new(
            "h3",
            3,
            q,
            [(1, 2, 3, one.clone()), (2, 1, 3, q.from_int(-1))],
        )?,
        // [e2, e1] = e2 and [e1, e2] = e1 is not Leibniz on either side
        AlgebraDef::new("broken", 2, q, [(2, 1, 2, one.clone()), (1, 2, 1, one)])?,
    ];
    for a in &algebras {
        show(a, &verify_right_leibniz(a));
        show(a, &verify_left_leibniz(a));
        println!(
            "    Lie: {}",
            a.is_antisymmetric() && verify_right_leibniz(a).is_valid()
        );
    }

    // validation is what unlocks the series computations
    match algebras[3].clone().validate() {
        Ok(_) => println!("broken validated?"),
        Err(e) => println!("validate(broken): {e}"),
    }
    Ok(())
}
