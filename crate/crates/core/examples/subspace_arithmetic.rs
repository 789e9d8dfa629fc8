//! Exact subspace arithmetic over Q and GF(p): spans, sums, intersections
//! and membership, all through reduced row echelon bases.

use leibniz::{Field, Subspace, Vector};

fn main() -> leibniz::Result<()> {
    let q = Field::Rational;
    let u = Subspace::span(
        q,
        3,
        &[
            Vector::from_ints(q, &[1, 0, 0]),
            Vector::from_ints(q, &[0, 1, 0]),
        ],
    )?;
    let w = Subspace::span(
        q,
        3,
        &[
            Vector::from_ints(q, &[0, 1, 0]),
            Vector::from_ints(q, &[0, 0, 1]),
        ],
    )?;
    let sum = u.sum(&w)?;
    let meet = u.intersect(&w)?;
    println!("U = {u}");
    println!("W = {w}");
    println!("U + W = {sum}");
    println!("U ∩ W = {meet}");
    println!(
        "dim(U+W) + dim(U∩W) = {} = dim U + dim W",
        sum.dim() + meet.dim()
    );

    // the same span written with different generators has the same basis
    let half = q.parse("1/2")?;
    let u2 = Subspace::span(
        q,
        3,
        &[
            Vector::from_ints(q, &[2, 2, 0]),
            Vector::from_ints(q, &[1, -1, 0]).scale(&half),
        ],
    )?;
    println!("U == span{{(2, 2, 0), (1/2, -1/2, 0)}}: {}", u == u2);

    let f3 = Field::prime(3)?;
    let v = Vector::from_ints(f3, &[1, 1]);
    let line = Subspace::span(f3, 2, &[v])?;
    let other = Vector::from_ints(f3, &[2, 2]);
    println!("over {f3}: {other} in {line}: {}", line.contains(&other)?);
    println!(
        "over {f3}: (1, 2) in {line}: {}",
        line.contains(&Vector::from_ints(f3, &[1, 2]))?
    );
    Ok(())
}
