//! Membership checks relating the series of an ideal: ab + ba in Es(B), the
//! B_k chain, the strong filtration property and B^k ⊆ B^{{k}} ⊆ B^<k>.

use leibniz::series::{bk_chain, verify_inclusions, InclusionConfig};
use leibniz::{AlgebraDef, Field, IdealHandle};

fn main() -> leibniz::Result<()> {
    let f5 = Field::prime(5)?;
    let one = f5.one();
    // [e1,e1] = e2, [e2,e1] = e3
    let a = AlgebraDef::new("fil3", 3, f5, [(1, 1, 2, one.clone()), (2, 1, 3, one)])?.validate()?;
    let b = IdealHandle::whole(&a);

    let chain = bk_chain(&b, 6)?;
    for (k, s) in &chain.entries {
        println!("B_{k} = {s}");
    }

    let report = verify_inclusions(&b, InclusionConfig::new(6, 4, 42))?;
    for c in &report.checks {
        println!(
            "{:<6} {} ({})",
            if c.passed { "ok" } else { "FAILED" },
            c.name,
            c.detail
        );
    }
    println!("all passed: {}", report.all_passed());
    Ok(())
}
