//! Sweeps small structure-constant tensors over GF(3), keeps the right Leibniz
//! algebras and summarizes their nilpotency indices.
//!
//! cargo run --release --example corpus_search -- [dim] [samples] [seed]

use leibniz::search::{run_search, SearchConfig};

fn main() -> leibniz::Result<()> {
    let args: Vec<u64> = std::env::args()
        .skip(1)
        .filter_map(|a| a.parse().ok())
        .collect();
    let dim = args.first().copied().unwrap_or(2) as usize;
    let samples = args.get(1).copied().unwrap_or(0) as usize;
    let seed = args.get(2).copied().unwrap_or(0);

    let report = run_search(&SearchConfig::new(dim, 3, samples, seed))?;
    println!(
        "dim {dim} over {}: {} exhaustive + {} sampled candidates, {} right Leibniz ({} Lie)",
        report.field,
        report.exhaustive_candidates,
        report.sampled_candidates,
        report.validated,
        report.lie
    );
    println!(
        "right nilpotent {}, left nilpotent {}, left but not right {}",
        report.right_nilpotent, report.left_nilpotent, report.left_not_right
    );
    for (n, s) in &report.max_strong_by_right {
        println!(
            "  right index {n}: largest strong index {s} (bound {})",
            4 * n * n - 2 * n + 1
        );
    }
    if let Some(ex) = report.left_not_right_examples.first() {
        println!("left-not-right example: {:?}", ex.constants);
    }
    println!(
        "violations: {}, undetermined: {}",
        report.violations(),
        report.undetermined
    );
    Ok(())
}
