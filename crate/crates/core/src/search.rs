//! Corpus search over structure-constant tensors in `GF(p)`.
//!
//! Candidates come in two batches: an exhaustive sweep over all tensors with
//! at most `exhaustive_nonzeros` nonzero constants, then seeded sparse random
//! tensors. Every candidate that satisfies the right Leibniz identity is
//! profiled with `B = L`. Candidates are evaluated in parallel and merged in
//! candidate order, so the report only depends on the configuration.

use std::collections::BTreeMap;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{verify_left_leibniz, verify_right_leibniz, AlgebraDef, IdealHandle};
use crate::error::{Error, Result};
use crate::report::VerdictJson;
use crate::scalar::{Field, Scalar};
use crate::series::{filtration_violations, nilpotency_profile, strong_bound, IndexVerdict};

/// `(i, j, k, residue)`, 1-based, residues in `1..p`.
pub type Tensor = Vec<(usize, usize, usize, u64)>;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchConfig {
    pub dim: usize,
    pub p: u64,
    pub samples: usize,
    pub seed: u64,
    pub n_max: usize,
    pub exhaustive_nonzeros: usize,
    /// Upper bound on nonzero constants in a random sample.
    pub max_sample_nonzeros: usize,
    /// Filtration property checked for `i + j ≤ filtration_depth`.
    pub filtration_depth: usize,
    /// Hard cap on the number of candidates; the report is flagged partial when hit.
    pub max_candidates: usize,
    /// Keep every validated algebra in the report, not just the notable ones.
    pub record_all: bool,
}

impl SearchConfig {
    /// Defaults: complete enumeration for `dim ≤ 2`, up to two nonzero
    /// constants for `dim = 3`, sampling only beyond.
    pub fn new(dim: usize, p: u64, samples: usize, seed: u64) -> Self {
        let cells = dim.pow(3);
        let exhaustive_nonzeros = match dim {
            0..=2 => cells,
            3 => 2,
            _ => 0,
        };
        SearchConfig {
            dim,
            p,
            samples,
            seed,
            n_max: 64,
            exhaustive_nonzeros,
            max_sample_nonzeros: (2 * dim).clamp(1, cells.max(1)),
            filtration_depth: 6,
            max_candidates: 2_000_000,
            record_all: false,
        }
    }
}

/// Parses `F3`, `GF(3)`, `Fp3` or `3` as a prime field.
pub fn parse_prime_field(text: &str) -> Result<Field> {
    let t = text.trim();
    let digits = t
        .strip_prefix("GF(")
        .and_then(|r| r.strip_suffix(')'))
        .or_else(|| t.strip_prefix("Fp"))
        .or_else(|| t.strip_prefix('F'))
        .unwrap_or(t);
    let p: u64 = digits
        .parse()
        .map_err(|_| Error::Schema(format!("field {text:?}: expected F<p>, e.g. F3")))?;
    Field::prime(p)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusAlgebra {
    /// `"exhaustive"` or `"sample"`.
    pub origin: &'static str,
    pub ordinal: usize,
    pub constants: Tensor,
    pub right_index: VerdictJson,
    pub left_index: VerdictJson,
    pub general_index: VerdictJson,
    pub strong_index: VerdictJson,
    pub left_leibniz: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SearchReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub config: SearchConfig,
    pub field: String,
    pub partial: bool,
    pub exhaustive_candidates: usize,
    pub sampled_candidates: usize,
    pub validated: usize,
    pub lie: usize,
    pub right_nilpotent: usize,
    pub left_nilpotent: usize,
    pub left_not_right: usize,
    /// Right index `n` → largest strong index seen with that `n`.
    pub max_strong_by_right: BTreeMap<usize, usize>,
    /// Validated algebras on which some series stayed undetermined.
    pub undetermined: usize,
    pub bound_violations: Vec<CorpusAlgebra>,
    pub sandwich_failures: Vec<CorpusAlgebra>,
    pub filtration_failures: Vec<CorpusAlgebra>,
    pub left_not_right_examples: Vec<CorpusAlgebra>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub algebras: Vec<CorpusAlgebra>,
}

impl SearchReport {
    pub fn violations(&self) -> usize {
        self.bound_violations.len() + self.sandwich_failures.len() + self.filtration_failures.len()
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

const MAX_EXAMPLES: usize = 10;

fn binomial(n: usize, k: usize) -> u128 {
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i + 1) as u128)
}

/// Number of tensors with at most `k` nonzero cells out of `cells`.
fn exhaustive_count(cells: usize, k: usize, p: u64) -> u128 {
    (0..=k.min(cells))
        .map(|r| binomial(cells, r).saturating_mul(((p - 1) as u128).saturating_pow(r as u32)))
        .fold(0u128, u128::saturating_add)
}

/// All tensors with at most `k` nonzero cells, in a fixed order, at most `cap` of them.
fn exhaustive(dim: usize, k: usize, p: u64, cap: usize) -> Vec<Tensor> {
    let cells: Vec<_> = (1..=dim)
        .flat_map(|i| (1..=dim).flat_map(move |j| (1..=dim).map(move |l| (i, j, l))))
        .collect();
    let mut out = Vec::new();
    let mut current = Tensor::new();
    fn rec(
        cells: &[(usize, usize, usize)],
        start: usize,
        left: usize,
        p: u64,
        cap: usize,
        current: &mut Tensor,
        out: &mut Vec<Tensor>,
    ) {
        if out.len() >= cap {
            return;
        }
        out.push(current.clone());
        if left == 0 {
            return;
        }
        for idx in start..cells.len() {
            let (i, j, l) = cells[idx];
            for c in 1..p {
                current.push((i, j, l, c));
                rec(cells, idx + 1, left - 1, p, cap, current, out);
                current.pop();
                if out.len() >= cap {
                    return;
                }
            }
        }
    }
    rec(&cells, 0, k, p, cap, &mut current, &mut out);
    out
}

fn random_tensor(dim: usize, p: u64, max_nonzeros: usize, rng: &mut ChaCha8Rng) -> Tensor {
    let cells = dim.pow(3);
    let r = rng.random_range(1..=max_nonzeros.min(cells));
    let mut picked = sample(rng, cells, r).into_vec();
    picked.sort_unstable();
    picked
        .into_iter()
        .map(|c| {
            let v = rng.random_range(1..p);
            (c / (dim * dim) + 1, (c / dim) % dim + 1, c % dim + 1, v)
        })
        .collect()
}

struct Outcome {
    summary: CorpusAlgebra,
    lie: bool,
    strong: Option<usize>,
    bound_violated: bool,
    undetermined: bool,
    sandwich_ok: bool,
    filtration_ok: bool,
}

fn evaluate(
    config: &SearchConfig,
    field: Field,
    origin: &'static str,
    ordinal: usize,
    t: &Tensor,
) -> Option<Outcome> {
    let constants = t.iter().map(|&(i, j, k, c)| {
        (
            i,
            j,
            k,
            Scalar::ModP {
                residue: c,
                p: config.p,
            },
        )
    });
    let a = AlgebraDef::new(format!("{origin}-{ordinal}"), config.dim, field, constants).ok()?;
    if !verify_right_leibniz(&a).is_valid() {
        return None;
    }
    let a = a.validate().ok()?;
    let b = IdealHandle::whole(&a);
    let profile = nilpotency_profile(&b, config.n_max);
    let undetermined = [
        profile.right_index,
        profile.left_index,
        profile.general_index,
        profile.strong_index,
    ]
    .iter()
    .any(|v| matches!(v, IndexVerdict::Undetermined { .. }));
    let bound_violated = match profile.right() {
        Some(n) => match profile.strong() {
            Some(s) => s as u64 > strong_bound(n),
            // strong never vanishing while right does would falsify the bound
            None => profile.strong_index.is_never(),
        },
        None => false,
    };
    let filtration_ok =
        filtration_violations(&a, &profile.strong, config.filtration_depth).is_empty();
    Some(Outcome {
        lie: a.is_antisymmetric(),
        strong: profile.strong(),
        bound_violated,
        undetermined,
        sandwich_ok: profile.sandwich_holds(),
        filtration_ok,
        summary: CorpusAlgebra {
            origin,
            ordinal,
            constants: t.clone(),
            right_index: profile.right_index.into(),
            left_index: profile.left_index.into(),
            general_index: profile.general_index.into(),
            strong_index: profile.strong_index.into(),
            left_leibniz: verify_left_leibniz(&a).is_valid(),
        },
    })
}

pub fn run_search(config: &SearchConfig) -> Result<SearchReport> {
    let field = Field::prime(config.p)?;
    if config.dim == 0 {
        return Err(Error::EmptyAlgebra);
    }
    let cells = config.dim.pow(3);
    let k = config.exhaustive_nonzeros.min(cells);
    let wanted = exhaustive_count(cells, k, config.p);
    let cap = config.max_candidates;
    let mut partial = wanted > cap as u128;
    let sweep = exhaustive(config.dim, k, config.p, cap);

    let room = cap - sweep.len();
    partial |= config.samples > room;
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let samples: Vec<Tensor> = (0..config.samples.min(room))
        .map(|_| random_tensor(config.dim, config.p, config.max_sample_nonzeros, &mut rng))
        .collect();

    let jobs: Vec<(&'static str, usize, &Tensor)> = sweep
        .iter()
        .enumerate()
        .map(|(i, t)| ("exhaustive", i, t))
        .chain(samples.iter().enumerate().map(|(i, t)| ("sample", i, t)))
        .collect();
    let outcomes: Vec<Option<Outcome>> = jobs
        .par_iter()
        .map(|&(origin, i, t)| evaluate(config, field, origin, i, t))
        .collect();

    let mut report = SearchReport {
        tool: crate::report::TOOL_NAME,
        version: crate::report::TOOL_VERSION,
        config: config.clone(),
        field: field.to_string(),
        partial,
        exhaustive_candidates: sweep.len(),
        sampled_candidates: samples.len(),
        validated: 0,
        lie: 0,
        right_nilpotent: 0,
        left_nilpotent: 0,
        left_not_right: 0,
        max_strong_by_right: BTreeMap::new(),
        undetermined: 0,
        bound_violations: Vec::new(),
        sandwich_failures: Vec::new(),
        filtration_failures: Vec::new(),
        left_not_right_examples: Vec::new(),
        algebras: Vec::new(),
    };
    for o in outcomes.into_iter().flatten() {
        let s = &o.summary;
        report.validated += 1;
        report.lie += usize::from(o.lie);
        report.undetermined += usize::from(o.undetermined);
        let right = matches!(s.right_index, VerdictJson::Index { .. });
        let left = matches!(s.left_index, VerdictJson::Index { .. });
        report.right_nilpotent += usize::from(right);
        report.left_nilpotent += usize::from(left);
        if let (VerdictJson::Index { value: n }, Some(strong)) = (&s.right_index, o.strong) {
            let slot = report.max_strong_by_right.entry(*n).or_insert(0);
            *slot = (*slot).max(strong);
        }
        if left && matches!(s.right_index, VerdictJson::Never { .. }) {
            report.left_not_right += 1;
            if report.left_not_right_examples.len() < MAX_EXAMPLES {
                report.left_not_right_examples.push(s.clone());
            }
        }
        if o.bound_violated {
            report.bound_violations.push(s.clone());
        }
        if !o.sandwich_ok {
            report.sandwich_failures.push(s.clone());
        }
        if !o.filtration_ok {
            report.filtration_failures.push(s.clone());
        }
        if config.record_all {
            report.algebras.push(o.summary);
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_syntax() {
        assert_eq!(parse_prime_field("F3").unwrap(), Field::Prime(3));
        assert_eq!(parse_prime_field("GF(5)").unwrap(), Field::Prime(5));
        assert_eq!(parse_prime_field("7").unwrap(), Field::Prime(7));
        assert_eq!(parse_prime_field("F2"), Err(Error::InvalidModulus(2)));
        assert!(parse_prime_field("Q").is_err());
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(exhaustive_count(8, 8, 3), 6561);
        assert_eq!(exhaustive(2, 8, 3, usize::MAX).len(), 6561);
        assert_eq!(
            exhaustive(3, 2, 3, usize::MAX).len() as u128,
            exhaustive_count(27, 2, 3)
        );
        let capped = exhaustive(2, 8, 3, 100);
        assert_eq!(capped.len(), 100);
        assert!(capped[0].is_empty());
    }

    #[test]
    fn random_tensors_are_sparse_and_in_range() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..200 {
            let t = random_tensor(3, 5, 6, &mut rng);
            assert!((1..=6).contains(&t.len()));
            for &(i, j, k, c) in &t {
                assert!((1..=3).contains(&i) && (1..=3).contains(&j) && (1..=3).contains(&k));
                assert!((1..5).contains(&c));
            }
        }
    }

    #[test]
    fn dimension_one_has_only_the_abelian_algebra() {
        let mut config = SearchConfig::new(1, 5, 0, 0);
        config.record_all = true;
        let r = run_search(&config).unwrap();
        assert_eq!(r.exhaustive_candidates, 5);
        assert_eq!(r.validated, 1);
        assert!(r.algebras[0].constants.is_empty());
    }

    #[test]
    fn caps_flag_partial_reports() {
        let mut config = SearchConfig::new(2, 3, 10, 0);
        config.max_candidates = 50;
        let r = run_search(&config).unwrap();
        assert!(r.partial);
        assert_eq!(r.exhaustive_candidates + r.sampled_candidates, 50);
    }
}
