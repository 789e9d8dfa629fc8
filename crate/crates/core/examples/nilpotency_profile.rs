//! Right, left, general and strong nilpotency series of a few small algebras,
//! with the Es(B) data and the bound on the strong index.

use leibniz::series::{nilpotency_profile, SeriesTable};
use leibniz::{AlgebraDef, Field, IdealHandle};

fn dims(t: &SeriesTable) -> String {
    let mut s: Vec<String> = t.dims().iter().map(|(_, d)| d.to_string()).collect();
    if t.fixed_point && !t.terminated_zero {
        s.push("...".into());
    }
    s.join(" ")
}

fn report(label: &str, b: &IdealHandle<'_>) {
    let p = nilpotency_profile(b, 64);
    println!("{label}");
    println!(
        "  right powers    {:<20} index {}",
        dims(&p.right),
        p.right_index
    );
    println!(
        "  left powers     {:<20} index {}",
        dims(&p.left),
        p.left_index
    );
    println!(
        "  general powers  {:<20} index {}",
        dims(&p.general),
        p.general_index
    );
    println!(
        "  strong          {:<20} index {}",
        dims(&p.strong),
        p.strong_index
    );
    println!(
        "  Es right nil: {}, Es left nil: {}",
        p.es_right_nil, p.es_left_nil
    );
    match (p.bound, p.bound_satisfied) {
        (Some(v), Some(ok)) => println!(
            "  bound 4n²−2n+1 = {v}: {}",
            if ok { "satisfied" } else { "VIOLATED" }
        ),
        (Some(v), None) => println!("  bound 4n²−2n+1 = {v}: undetermined"),
        (None, _) => println!("  no bound: right index is {}", p.right_index),
    }
}

fn main() -> leibniz::Result<()> {
    let q = Field::Rational;
    let one = q.one();

    let l2 = AlgebraDef::new("l2", 2, q, [(1, 1, 2, one.clone())])?.validate()?;
    report("l2, B = L", &IdealHandle::whole(&l2));

    let a2 = AlgebraDef::new("a2", 2, q, [(2, 1, 2, one.clone())])?.validate()?;
    report("a2, B = L", &IdealHandle::whole(&a2));

    let h3 = AlgebraDef::new(
        "h3",
        3,
        q,
        [(1, 2, 3, one.clone()), (2, 1, 3, q.from_int(-1))],
    )?
    .validate()?;
    report("h3, B = L", &IdealHandle::whole(&h3));
    let center = IdealHandle::new(&h3, h3.span(&[h3.e(3)])?)?;
    report("h3, B = span{e3}", &center);

    // [e_i, e1] = e_{i+1}: the right powers lose one dimension at a time
    let fil = AlgebraDef::new(
        "filiform4",
        4,
        q,
        [
            (1, 1, 2, one.clone()),
            (2, 1, 3, one.clone()),
            (3, 1, 4, one),
        ],
    )?
    .validate()?;
    report("filiform4, B = L", &IdealHandle::whole(&fil));
    Ok(())
}
