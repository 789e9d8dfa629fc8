//! Rewrites bracket expressions into combinations of right-normed words and
//! checks the result by evaluating both sides in a concrete algebra.

use leibniz::rewrite::{normalize, parse, Assignment, Evaluate};
use leibniz::{AlgebraDef, Field};

fn main() -> leibniz::Result<()> {
    for text in [
        "a*b*c",
        "a*(b*c)",
        "a*(a*a)",
        "x*(a3*a2*a1)",
        "[[a,b],[c,d]]",
        "x*((a*b)*(c*d))",
    ] {
        let t = parse(text)?;
        let nf = normalize(&t);
        println!("{text:<18} -> {nf}  ({} words)", nf.len());
    }

    // evaluation in the Heisenberg algebra over GF(7)
    let f7 = Field::prime(7)?;
    let h3 = AlgebraDef::new(
        "h3",
        3,
        f7,
        [(1, 2, 3, f7.one()), (2, 1, 3, f7.from_int(-1))],
    )?
    .validate()?;
    let assignment = Assignment::from([
        ("x".to_string(), h3.vector(&[1, 2, 0])?),
        ("a".to_string(), h3.vector(&[0, 1, 5])?),
        ("b".to_string(), h3.vector(&[3, 0, 1])?),
        ("c".to_string(), h3.vector(&[1, 1, 1])?),
    ]);
    let t = parse("[x,[a,b]] * c")?;
    let nf = normalize(&t);
    println!("\n{t} = {nf}");
    println!("  direct:      {}", t.evaluate(&assignment, &h3)?);
    println!("  normal form: {}", nf.evaluate(&assignment, &h3)?);

    // the rewrite potential drops at every step, so normalization terminates
    let deep = parse("a*(b*(c*(d*(e*f))))")?;
    println!(
        "\n{deep}: potential {}, {} words",
        deep.rewrite_potential(),
        normalize(&deep).len()
    );
    Ok(())
}
