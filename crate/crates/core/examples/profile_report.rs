//! Loads an algebra file, profiles one of its ideals and prints the JSON
//! report that `leibniz profile --json` writes.
//!
//! cargo run --example profile_report -- fixtures/h3.json center

use leibniz::io::AlgebraFile;
use leibniz::report::build_profile_report;
use leibniz::series::default_k_max;
use leibniz::IdealHandle;

fn main() -> leibniz::Result<()> {
    let mut args = std::env::args().skip(1);
    let path = args
        .next()
        .unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/l2.json").to_string());
    let ideal = args.next();

    let loaded = AlgebraFile::read(&path)?.load()?;
    let a = loaded.algebra.clone().validate()?;
    let (name, space) = match &ideal {
        Some(n) => (n.as_str(), loaded.ideal(n)?.into_space()),
        None => ("L", a.whole_space()),
    };
    let b = IdealHandle::new(&a, space)?;
    let (_, report) = build_profile_report(&b, name, 64, default_k_max(&a), 0)?;
    print!("{}", report.to_json());
    Ok(())
}
