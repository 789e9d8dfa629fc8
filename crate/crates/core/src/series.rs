//! Nilpotency series of an ideal `B` in a Leibniz algebra `L`.
//!
//! Every "never reaches zero" verdict produced here comes from a detected
//! fixed point of the defining recurrence, never from a cutoff. Cutoffs
//! produce [`IndexVerdict::Undetermined`].

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{AlgebraDef, IdealHandle};
use crate::error::{Error, Result};
use crate::linear::{Subspace, Vector};
use crate::scalar::Field;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SeriesKind {
    /// `B^1 = B`, `B^{n+1} = B^n·B`
    RightPowers,
    /// `^1B = B`, `^{n+1}B = B·(^nB)`
    LeftPowers,
    /// `B^{{n}}`: all length-n products of elements of `B`
    GeneralPowers,
    /// `B^<n>`: all products with at least n factors from `B`
    StrongFiltration,
    /// `B_k = B^k + Es(B)`
    BkChain,
    /// `D_(L,k) = D·L·…·L`
    RightTranslates,
    /// `_(L,k)D = L·(…·(L·D))`
    LeftTranslates,
}

impl fmt::Display for SeriesKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            SeriesKind::RightPowers => "right powers",
            SeriesKind::LeftPowers => "left powers",
            SeriesKind::GeneralPowers => "general powers",
            SeriesKind::StrongFiltration => "strong filtration",
            SeriesKind::BkChain => "B_k chain",
            SeriesKind::RightTranslates => "right translates",
            SeriesKind::LeftTranslates => "left translates",
        };
        f.write_str(s)
    }
}

/// A computed prefix of a series.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesTable {
    pub kind: SeriesKind,
    /// `(index, space)` with consecutive indices.
    pub entries: Vec<(usize, Subspace)>,
    /// The last two entries are equal.
    pub stabilized: bool,
    /// The last entry is the zero space.
    pub terminated_zero: bool,
    /// The last entry repeats forever (proved by the recurrence, not assumed).
    pub fixed_point: bool,
}

impl SeriesTable {
    fn new(kind: SeriesKind, entries: Vec<(usize, Subspace)>, fixed_point: bool) -> Self {
        let n = entries.len();
        let stabilized = n >= 2 && entries[n - 1].1 == entries[n - 2].1;
        let terminated_zero = entries.last().is_some_and(|(_, s)| s.is_zero());
        SeriesTable {
            kind,
            entries,
            stabilized,
            terminated_zero,
            fixed_point: fixed_point || terminated_zero,
        }
    }

    pub fn first_index(&self) -> usize {
        self.entries[0].0
    }

    pub fn last_index(&self) -> usize {
        self.entries.last().expect("tables are nonempty").0
    }

    pub fn last(&self) -> &Subspace {
        &self.entries.last().expect("tables are nonempty").1
    }

    /// Entry `k`, extended past the computed prefix when the tail is known.
    pub fn at(&self, k: usize) -> Option<&Subspace> {
        let first = self.first_index();
        if k < first {
            return None;
        }
        match self.entries.get(k - first) {
            Some((_, s)) => Some(s),
            None if self.fixed_point => Some(self.last()),
            None => None,
        }
    }

    /// Least index `k ≥ 1` whose entry is zero.
    pub fn zero_index(&self) -> Option<usize> {
        self.entries
            .iter()
            .find(|(k, s)| *k >= 1 && s.is_zero())
            .map(|(k, _)| *k)
    }

    pub fn dims(&self) -> Vec<(usize, usize)> {
        self.entries.iter().map(|(k, s)| (*k, s.dim())).collect()
    }

    /// Index verdict for a series whose vanishing defines nilpotency.
    pub fn verdict(&self) -> IndexVerdict {
        if let Some(k) = self.zero_index() {
            return IndexVerdict::Index(k);
        }
        if self.fixed_point {
            let last = self.last();
            let stable_from = self
                .entries
                .iter()
                .rev()
                .take_while(|(_, s)| s == last)
                .last()
                .map(|(k, _)| *k)
                .expect("nonempty");
            return IndexVerdict::Never {
                stable_from,
                dim: last.dim(),
            };
        }
        IndexVerdict::Undetermined {
            computed_to: self.last_index(),
        }
    }

    /// Entry `k+1 ⊆` entry `k` across the whole prefix.
    pub fn is_decreasing(&self) -> bool {
        self.entries.windows(2).all(|w| w[1].1.included_in(&w[0].1))
    }
}

/// Outcome of looking for the least index at which a series vanishes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IndexVerdict {
    Index(usize),
    /// Definitively never zero: the series is constant and nonzero from `stable_from` on.
    Never {
        stable_from: usize,
        dim: usize,
    },
    /// Definitively never zero because a smaller series never vanishes.
    Implied {
        by: SeriesKind,
    },
    /// The computation limit was reached first.
    Undetermined {
        computed_to: usize,
    },
}

impl IndexVerdict {
    pub fn index(&self) -> Option<usize> {
        match self {
            IndexVerdict::Index(n) => Some(*n),
            _ => None,
        }
    }

    pub fn is_never(&self) -> bool {
        matches!(
            self,
            IndexVerdict::Never { .. } | IndexVerdict::Implied { .. }
        )
    }
}

impl fmt::Display for IndexVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            IndexVerdict::Index(n) => write!(f, "{n}"),
            IndexVerdict::Never { stable_from, dim } => {
                write!(
                    f,
                    "never (fixed point at dim {dim} from index {stable_from})"
                )
            }
            IndexVerdict::Implied { by } => {
                write!(f, "never (contains the {by}, which never vanish)")
            }
            IndexVerdict::Undetermined { computed_to } => {
                write!(f, "undetermined (computed to index {computed_to})")
            }
        }
    }
}

/// Whether `Es(B)` is killed by `k` one-sided translates by `L`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EsNilVerdict {
    /// Least `k ≥ 1` with the translate equal to zero.
    Nil(usize),
    /// The translates reach a nonzero fixed point.
    Never {
        dim: usize,
    },
    Undetermined {
        computed_to: usize,
    },
}

impl EsNilVerdict {
    pub fn k(&self) -> Option<usize> {
        match self {
            EsNilVerdict::Nil(k) => Some(*k),
            _ => None,
        }
    }
}

impl fmt::Display for EsNilVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            EsNilVerdict::Nil(k) => write!(f, "k = {k}"),
            EsNilVerdict::Never { dim } => {
                write!(f, "never (translates fixed at dim {dim})")
            }
            EsNilVerdict::Undetermined { computed_to } => {
                write!(f, "undetermined (computed to k = {computed_to})")
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Side {
    Right,
    Left,
}

/// Iterates `next = step(prev)` from `entries`, stopping at zero, at a repeat
/// (which is then a fixed point of `step`) or at index `limit`.
fn iterate_series(
    kind: SeriesKind,
    mut entries: Vec<(usize, Subspace)>,
    limit: usize,
    step: impl Fn(&Subspace) -> Subspace,
) -> SeriesTable {
    let mut fixed = false;
    loop {
        let (k, last) = entries.last().expect("seeded");
        if last.is_zero() || *k >= limit {
            break;
        }
        let next = step(last);
        let repeat = &next == last;
        entries.push((k + 1, next));
        if repeat {
            fixed = true;
            break;
        }
    }
    SeriesTable::new(kind, entries, fixed)
}

/// `B^0 = L, B^1 = B, …, B^{n_max}`, stopping early at zero or a fixed point.
pub fn right_powers(b: &IdealHandle<'_>, n_max: usize) -> SeriesTable {
    let a = b.algebra();
    let seed = vec![(0, a.whole_space()), (1, b.space().clone())];
    iterate_series(SeriesKind::RightPowers, seed, n_max.max(1), |prev| {
        a.product_of(prev, b.space())
    })
}

/// `^0B = L, ^1B = B, …, ^{n_max}B`.
pub fn left_powers(b: &IdealHandle<'_>, n_max: usize) -> SeriesTable {
    let a = b.algebra();
    let seed = vec![(0, a.whole_space()), (1, b.space().clone())];
    iterate_series(SeriesKind::LeftPowers, seed, n_max.max(1), |prev| {
        a.product_of(b.space(), prev)
    })
}

/// Tracks a run of equal entries for recurrences of the shape
/// `W_m = F(Σ_{i=1}^{m-1} W_i·W_{m-i})`.
///
/// If the levels decrease and `W_k = … = W_{2k}`, every later level equals
/// `W_k`. By induction on `m > 2k`: for a generator `W_i·W_{2k-i}` of
/// `W_{2k}` with `i ≤ k`, `W_{2k-i} = W_{m-i} = W_k`, so it is the generator
/// `W_i·W_{m-i}` of `W_m`; the case `i > k` is symmetric. Hence
/// `W_{2k} ⊆ W_m ⊆ W_{m-1} = W_k`.
fn run_is_fixed(levels: &[Subspace]) -> bool {
    // levels[0] is W_1
    let m = levels.len();
    let last = &levels[m - 1];
    if last.is_zero() {
        return false;
    }
    let mut start = m;
    while start > 1 && &levels[start - 2] == last {
        start -= 1;
    }
    m >= 2 * start && m > start
}

fn split_products(a: &AlgebraDef, levels: &[Subspace]) -> Subspace {
    let m = levels.len() + 1;
    let mut acc = a.zero_space();
    for i in 1..m {
        acc = acc.sum_of(&a.product_of(&levels[i - 1], &levels[m - i - 1]));
    }
    acc
}

fn split_recurrence(
    kind: SeriesKind,
    b: &IdealHandle<'_>,
    limit: usize,
    close: impl Fn(Subspace) -> Subspace,
) -> SeriesTable {
    let a = b.algebra();
    let mut levels = vec![b.space().clone()];
    let mut fixed = false;
    while levels.len() < limit.max(1) {
        let last = levels.last().expect("seeded");
        if last.is_zero() {
            break;
        }
        let next = close(split_products(a, &levels));
        levels.push(next);
        if run_is_fixed(&levels) {
            fixed = true;
            break;
        }
    }
    let entries = levels
        .into_iter()
        .enumerate()
        .map(|(i, s)| (i + 1, s))
        .collect();
    SeriesTable::new(kind, entries, fixed)
}

/// `B^{{1}} = B`, `B^{{n}} = Σ_{i+j=n} B^{{i}}·B^{{j}}`: a product of length
/// `n` splits uniquely at its outermost bracket.
pub fn general_powers(b: &IdealHandle<'_>, n_max: usize) -> SeriesTable {
    split_recurrence(SeriesKind::GeneralPowers, b, n_max, |s| s)
}

/// `B^<m>` for `m = 1..=n_max`.
///
/// A product of weight at least `m ≥ 2` either has both halves carrying some
/// weight `i, m-i ≥ 1`, or is `x·P` / `P·x` with `P` of weight `≥ m`. So
/// `B^<m>` is the ideal generated by `Σ_{i=1}^{m-1} B^<i>·B^<m-i>`: the
/// per-level least fixpoint of `W ← W + L·W + W·L + Σ W_i·W_{m-i}`.
pub fn strong_filtration(b: &IdealHandle<'_>, n_max: usize) -> SeriesTable {
    let a = b.algebra();
    split_recurrence(SeriesKind::StrongFiltration, b, n_max, |s| a.closure_of(&s))
}

fn translates(
    kind: SeriesKind,
    a: &AlgebraDef,
    d: &Subspace,
    k_max: usize,
    side: Side,
) -> Result<SeriesTable> {
    a.check_subspace(d)?;
    let whole = a.whole_space();
    let seed = vec![(0, d.clone())];
    Ok(iterate_series(kind, seed, k_max, |prev| match side {
        Side::Right => a.product_of(prev, &whole),
        Side::Left => a.product_of(&whole, prev),
    }))
}

/// `D_(L,0) = D`, `D_(L,k) = D_(L,k-1)·L`.
pub fn right_translates(d: &Subspace, k_max: usize, a: &AlgebraDef) -> Result<SeriesTable> {
    translates(SeriesKind::RightTranslates, a, d, k_max, Side::Right)
}

/// `_(L,0)D = D`, `_(L,k)D = L·(_(L,k-1)D)`.
pub fn left_translates(d: &Subspace, k_max: usize, a: &AlgebraDef) -> Result<SeriesTable> {
    translates(SeriesKind::LeftTranslates, a, d, k_max, Side::Left)
}

/// Least `k ≥ 1` with `Es(B)_(L,k) = 0` (right) or `_(L,k)Es(B) = 0` (left).
pub fn es_nil_index(b: &IdealHandle<'_>, side: Side, k_max: usize) -> EsNilVerdict {
    let a = b.algebra();
    let es = a.es_of(b);
    let table = translates(
        match side {
            Side::Right => SeriesKind::RightTranslates,
            Side::Left => SeriesKind::LeftTranslates,
        },
        a,
        &es,
        k_max.max(1),
        side,
    )
    .expect("Es(B) lives in the algebra");
    if let Some(k) = table
        .entries
        .iter()
        .find(|(_, s)| s.is_zero())
        .map(|(k, _)| *k)
    {
        return EsNilVerdict::Nil(k.max(1));
    }
    if table.fixed_point {
        EsNilVerdict::Never {
            dim: table.last().dim(),
        }
    } else {
        EsNilVerdict::Undetermined {
            computed_to: table.last_index(),
        }
    }
}

/// Default translate bound: a one-sided translate chain of a subspace of an
/// ideal is decreasing, so it is constant after at most `dim(L)` strict drops.
pub fn default_k_max(a: &AlgebraDef) -> usize {
    a.dim() + 1
}

/// `B_0 = L`, `B_1 = B`, `B_k = B^k + Es(B)`, each checked to be a two-sided
/// ideal with `B_k ⊇ B_{k+1}`.
pub fn bk_chain(b: &IdealHandle<'_>, k_max: usize) -> Result<SeriesTable> {
    let a = b.algebra();
    let es = a.es_of(b);
    let powers = right_powers(b, k_max.max(2));
    let mut entries = vec![(0, a.whole_space()), (1, b.space().clone())];
    for (k, p) in powers.entries.iter().filter(|(k, _)| *k >= 2) {
        entries.push((*k, p.sum_of(&es)));
    }
    for (k, s) in &entries {
        if !a.is_two_sided(s) {
            return Err(Error::ChainVerification(format!(
                "B_{k} = {s} is not a two-sided ideal"
            )));
        }
    }
    for w in entries.windows(2) {
        if !w[1].1.included_in(&w[0].1) {
            return Err(Error::ChainVerification(format!(
                "B_{} is not contained in B_{}",
                w[1].0, w[0].0
            )));
        }
    }
    // B^k + Es(B) inherits the fixed point of the right powers.
    Ok(SeriesTable::new(
        SeriesKind::BkChain,
        entries,
        powers.fixed_point,
    ))
}

/// `W_i·W_j ⊆ W_{i+j}` for all `i, j ≥ 1` with `i + j ≤ max_sum`, where the
/// levels are available.
pub fn filtration_violations(
    a: &AlgebraDef,
    strong: &SeriesTable,
    max_sum: usize,
) -> Vec<(usize, usize)> {
    let mut bad = Vec::new();
    for total in 2..=max_sum {
        let Some(target) = strong.at(total) else {
            continue;
        };
        for i in 1..total {
            let (Some(wi), Some(wj)) = (strong.at(i), strong.at(total - i)) else {
                continue;
            };
            if !a.product_of(wi, wj).included_in(target) {
                bad.push((i, total - i));
            }
        }
    }
    bad
}

/// `4n² − 2n + 1`.
pub fn strong_bound(n: usize) -> u64 {
    let n = n as u64;
    4 * n * n - 2 * n + 1
}

/// All indices and verdicts for one ideal.
#[derive(Clone, Debug)]
pub struct NilpotencyProfile {
    pub right_index: IndexVerdict,
    pub left_index: IndexVerdict,
    pub general_index: IndexVerdict,
    pub strong_index: IndexVerdict,
    pub es_right_nil: EsNilVerdict,
    pub es_left_nil: EsNilVerdict,
    /// `4n² − 2n + 1` for the right index `n`.
    pub bound: Option<u64>,
    pub bound_satisfied: Option<bool>,
    /// `4k² − 2k + 1` with `k = max(k', n)`, `k'` the Es-right-nil index.
    pub max_variant_bound: Option<u64>,
    pub max_variant_satisfied: Option<bool>,
    pub right: SeriesTable,
    pub left: SeriesTable,
    pub general: SeriesTable,
    pub strong: SeriesTable,
}

impl NilpotencyProfile {
    pub fn right(&self) -> Option<usize> {
        self.right_index.index()
    }
    pub fn left(&self) -> Option<usize> {
        self.left_index.index()
    }
    pub fn general(&self) -> Option<usize> {
        self.general_index.index()
    }
    pub fn strong(&self) -> Option<usize> {
        self.strong_index.index()
    }

    /// `right ≤ general ≤ strong` wherever both sides are defined.
    pub fn sandwich_holds(&self) -> bool {
        let le = |a: Option<usize>, b: Option<usize>| match (a, b) {
            (Some(x), Some(y)) => x <= y,
            _ => true,
        };
        le(self.right(), self.general())
            && le(self.general(), self.strong())
            && le(self.right(), self.strong())
    }
}

fn bound_verdict(strong: &IndexVerdict, bound: u64) -> Option<bool> {
    match strong {
        IndexVerdict::Index(s) => Some(*s as u64 <= bound),
        IndexVerdict::Never { .. } | IndexVerdict::Implied { .. } => Some(false),
        IndexVerdict::Undetermined { .. } => None,
    }
}

/// Computes all four series and the Es-nil data for `b`.
///
/// When the right index `n` is found the strong filtration is followed at
/// least to `4n² − 2n + 1`, so the bound verdict never depends on `n_max`.
pub fn nilpotency_profile(b: &IdealHandle<'_>, n_max: usize) -> NilpotencyProfile {
    nilpotency_profile_with(b, n_max, default_k_max(b.algebra()))
}

/// [`nilpotency_profile`] with an explicit bound on the Es translates.
pub fn nilpotency_profile_with(
    b: &IdealHandle<'_>,
    n_max: usize,
    k_max: usize,
) -> NilpotencyProfile {
    let n_max = n_max.max(2);
    let right = right_powers(b, n_max);
    let left = left_powers(b, n_max);
    let right_index = right.verdict();
    let left_index = left.verdict();

    let es_right_nil = es_nil_index(b, Side::Right, k_max);
    let es_left_nil = es_nil_index(b, Side::Left, k_max);

    let bound = right_index.index().map(strong_bound);
    let max_variant_bound = match (right_index.index(), es_right_nil.k()) {
        (Some(n), Some(k)) => Some(strong_bound(n.max(k))),
        _ => None,
    };
    let strong_limit = bound
        .into_iter()
        .chain(max_variant_bound)
        .map(|v| v as usize)
        .fold(n_max, usize::max);

    let general = general_powers(b, n_max);
    let strong = strong_filtration(b, strong_limit);

    // B^k ⊆ B^{{k}} ⊆ B^<k>: a never-vanishing smaller series settles the larger.
    let mut general_index = general.verdict();
    if matches!(general_index, IndexVerdict::Undetermined { .. }) && right_index.is_never() {
        general_index = IndexVerdict::Implied {
            by: SeriesKind::RightPowers,
        };
    }
    let mut strong_index = strong.verdict();
    if matches!(strong_index, IndexVerdict::Undetermined { .. }) {
        if right_index.is_never() {
            strong_index = IndexVerdict::Implied {
                by: SeriesKind::RightPowers,
            };
        } else if left_index.is_never() {
            strong_index = IndexVerdict::Implied {
                by: SeriesKind::LeftPowers,
            };
        }
    }

    NilpotencyProfile {
        bound_satisfied: bound.and_then(|v| bound_verdict(&strong_index, v)),
        max_variant_satisfied: max_variant_bound.and_then(|v| bound_verdict(&strong_index, v)),
        bound,
        max_variant_bound,
        right_index,
        left_index,
        general_index,
        strong_index,
        es_right_nil,
        es_left_nil,
        right,
        left,
        general,
        strong,
    }
}

/// Settings for [`verify_inclusions`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct InclusionConfig {
    pub n_max: usize,
    pub k_max: usize,
    pub seed: u64,
    /// Random products drawn per sampled weight.
    pub samples: usize,
    /// Largest weight used for sampled right products.
    pub max_sample_weight: usize,
}

impl InclusionConfig {
    pub fn new(n_max: usize, k_max: usize, seed: u64) -> Self {
        InclusionConfig {
            n_max,
            k_max,
            seed,
            samples: 32,
            max_sample_weight: 6,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InclusionCheck {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct InclusionReport {
    pub config: InclusionConfig,
    pub checks: Vec<InclusionCheck>,
}

impl InclusionReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> impl Iterator<Item = &InclusionCheck> {
        self.checks.iter().filter(|c| !c.passed)
    }
}

/// Random coefficients: small integers over ℚ, uniform residues over GF(p).
fn random_scalar(field: Field, rng: &mut ChaCha8Rng) -> crate::scalar::Scalar {
    match field {
        Field::Rational => field.from_int(rng.random_range(-3..=3)),
        Field::Prime(p) => field.from_int(rng.random_range(0..p) as i64),
    }
}

/// A random element of `s`.
pub(crate) fn random_element(s: &Subspace, rng: &mut ChaCha8Rng) -> Vector {
    let mut v = Vector::zero(s.field(), s.ambient_dim());
    for b in s.basis() {
        let c = random_scalar(s.field(), rng);
        v.add_scaled(&c, b);
    }
    v
}

/// Right product `(((s_m s_{m-1}) …) s_1)` of `factors = [s_m, …, s_1]`.
fn right_product(a: &AlgebraDef, factors: &[Vector]) -> Vector {
    let mut acc = factors[0].clone();
    for f in &factors[1..] {
        acc = a.bracket_of(&acc, f);
    }
    acc
}

/// Random right-product factors of length `length` with at least `weight`
/// of them drawn from `b`.
fn sample_factors(
    a: &AlgebraDef,
    b: &Subspace,
    length: usize,
    weight: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<Vector> {
    let whole = a.whole_space();
    let mut in_b = vec![false; length];
    let mut placed = 0;
    while placed < weight {
        let pos = rng.random_range(0..length);
        if !in_b[pos] {
            in_b[pos] = true;
            placed += 1;
        }
    }
    in_b.into_iter()
        .map(|tag| random_element(if tag { b } else { &whole }, rng))
        .collect()
}

/// Machine-checks the containments that the nilpotency argument rests on:
///
/// * `ab + ba ∈ Es(B)` for sampled `a ∈ L`, `b ∈ B`
/// * `B^n ⊆ ^nB + Es(B)`
/// * sampled right products of weight `n` lie in `B_n`
/// * when `B` is Es_k-right nil, sampled right products of weight `≥ 2ℓ`
///   (`k ≤ ℓ`) lie in `(B^ℓ)_(L,k)`
/// * `B^<i>·B^<j> ⊆ B^<i+j>`
/// * `B^k ⊆ B^{{k}} ⊆ B^<k>`
pub fn verify_inclusions(b: &IdealHandle<'_>, config: InclusionConfig) -> Result<InclusionReport> {
    let a = b.algebra();
    let mut rng = ChaCha8Rng::seed_from_u64(config.seed);
    let mut checks = Vec::new();
    let es = a.es_of(b);
    let n_max = config.n_max.max(1);

    let whole = a.whole_space();
    let sym_in_es = (0..config.samples).all(|_| {
        let x = random_element(&whole, &mut rng);
        let y = random_element(b.space(), &mut rng);
        let sym = &a.bracket_of(&x, &y) + &a.bracket_of(&y, &x);
        es.contains_vector(&sym)
    });
    checks.push(InclusionCheck {
        name: "ab + ba in Es(B)".into(),
        passed: sym_in_es,
        detail: format!("{} samples", config.samples),
    });

    let right = right_powers(b, n_max);
    let left = left_powers(b, n_max);
    for n in 1..=n_max {
        let (Some(rn), Some(ln)) = (right.at(n), left.at(n)) else {
            continue;
        };
        checks.push(InclusionCheck {
            name: format!("B^{n} in ^{n}B + Es(B)"),
            passed: rn.included_in(&ln.sum_of(&es)),
            detail: format!("dim B^{n} = {}, dim ^{n}B = {}", rn.dim(), ln.dim()),
        });
    }

    let chain = bk_chain(b, n_max.max(2))?;
    checks.push(InclusionCheck {
        name: "B_k two-sided ideals, B_k contains B_(k+1)".into(),
        passed: true,
        detail: format!("checked to k = {}", chain.last_index()),
    });
    let weights = config.max_sample_weight.min(n_max);
    for n in 1..=weights {
        let Some(target) = chain.at(n) else { continue };
        let mut ok = true;
        for _ in 0..config.samples {
            let length = n + rng.random_range(0..=2);
            let factors = sample_factors(a, b.space(), length, n, &mut rng);
            ok &= target.contains_vector(&right_product(a, &factors));
        }
        checks.push(InclusionCheck {
            name: format!("right products of weight {n} in B_{n}"),
            passed: ok,
            detail: format!("{} samples", config.samples),
        });
    }

    if let EsNilVerdict::Nil(k) = es_nil_index(b, Side::Right, config.k_max) {
        for ell in k..=k.max(weights / 2) {
            let Some(power) = right.at(ell) else { continue };
            let target = right_translates(power, k, a)?;
            let Some(target) = target.at(k) else { continue };
            let mut ok = true;
            for _ in 0..config.samples {
                let weight = 2 * ell + rng.random_range(0..=1);
                let length = weight + rng.random_range(0..=k);
                let factors = sample_factors(a, b.space(), length, weight, &mut rng);
                ok &= target.contains_vector(&right_product(a, &factors));
            }
            checks.push(InclusionCheck {
                name: format!(
                    "right products of weight >= {} in (B^{ell})_(L,{k})",
                    2 * ell
                ),
                passed: ok,
                detail: format!("{} samples", config.samples),
            });
        }
    }

    let general = general_powers(b, n_max);
    let strong = strong_filtration(b, n_max);
    let bad = filtration_violations(a, &strong, n_max);
    checks.push(InclusionCheck {
        name: "B<i>B<j> in B<i+j>".into(),
        passed: bad.is_empty(),
        detail: if bad.is_empty() {
            format!("all i + j <= {n_max}")
        } else {
            format!("fails for (i, j) in {bad:?}")
        },
    });

    for k in 1..=n_max {
        let (Some(r), Some(g), Some(s)) = (right.at(k), general.at(k), strong.at(k)) else {
            continue;
        };
        checks.push(InclusionCheck {
            name: format!("B^{k} in B{{{k}}} in B<{k}>"),
            passed: r.included_in(g) && g.included_in(s),
            detail: format!("dims {}, {}, {}", r.dim(), g.dim(), s.dim()),
        });
    }

    Ok(InclusionReport { config, checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Field;

    const Q: Field = Field::Rational;

    fn alg(name: &str, dim: usize, consts: &[(usize, usize, usize, i64)]) -> AlgebraDef {
        AlgebraDef::new(
            name,
            dim,
            Q,
            consts.iter().map(|&(i, j, k, c)| (i, j, k, Q.from_int(c))),
        )
        .unwrap()
        .validate()
        .unwrap()
    }

    fn a2() -> AlgebraDef {
        alg("A2", 2, &[(2, 1, 2, 1)])
    }
    fn l2() -> AlgebraDef {
        alg("L2", 2, &[(1, 1, 2, 1)])
    }
    fn h3() -> AlgebraDef {
        alg("H3", 3, &[(1, 2, 3, 1), (2, 1, 3, -1)])
    }

    #[test]
    fn right_powers_examples() {
        let ab = AlgebraDef::abelian(2, Q).unwrap();
        let t = right_powers(&IdealHandle::whole(&ab), 10);
        assert_eq!(t.verdict(), IndexVerdict::Index(2));
        assert_eq!(t.at(0), Some(&ab.whole_space()));

        let a = a2();
        let t = right_powers(&IdealHandle::whole(&a), 10);
        let e2 = a.span(&[a.e(2)]).unwrap();
        assert_eq!(t.at(2), Some(&e2));
        assert_eq!(t.at(3), Some(&e2));
        assert!(t.fixed_point && t.stabilized && !t.terminated_zero);
        assert_eq!(t.at(50), Some(&e2));
        assert_eq!(
            t.verdict(),
            IndexVerdict::Never {
                stable_from: 2,
                dim: 1
            }
        );

        let l = l2();
        let t = right_powers(&IdealHandle::whole(&l), 10);
        assert_eq!(t.at(2), Some(&l.span(&[l.e(2)]).unwrap()));
        assert_eq!(t.verdict(), IndexVerdict::Index(3));
    }

    #[test]
    fn right_powers_report_cutoff_as_undetermined() {
        let a = a2();
        let t = right_powers(&IdealHandle::whole(&a), 2);
        assert_eq!(t.verdict(), IndexVerdict::Undetermined { computed_to: 2 });
        assert_eq!(t.at(3), None);
    }

    #[test]
    fn left_powers_examples() {
        let ab = AlgebraDef::abelian(2, Q).unwrap();
        assert_eq!(
            left_powers(&IdealHandle::whole(&ab), 8).verdict(),
            IndexVerdict::Index(2)
        );
        let a = a2();
        let t = left_powers(&IdealHandle::whole(&a), 8);
        assert_eq!(t.at(2), Some(&a.span(&[a.e(2)]).unwrap()));
        assert_eq!(t.verdict(), IndexVerdict::Index(3));
        let h = h3();
        let t = left_powers(&IdealHandle::whole(&h), 8);
        assert_eq!(t.at(2), Some(&h.span(&[h.e(3)]).unwrap()));
        assert_eq!(t.verdict(), IndexVerdict::Index(3));
    }

    #[test]
    fn general_powers_examples() {
        let h = h3();
        let b = IdealHandle::whole(&h);
        let g = general_powers(&b, 8);
        assert_eq!(g.at(1), Some(b.space()));
        assert_eq!(g.at(2), right_powers(&b, 8).at(2));
        assert_eq!(g.at(2), left_powers(&b, 8).at(2));
        assert_eq!(g.verdict(), IndexVerdict::Index(3));

        let a = a2();
        let g = general_powers(&IdealHandle::whole(&a), 64);
        assert!(g.fixed_point);
        assert!(g.verdict().is_never());
        // run starts at 2, so the fixed point is certified at level 4
        assert_eq!(g.last_index(), 4);
    }

    #[test]
    fn strong_filtration_examples() {
        let h = h3();
        let b = IdealHandle::whole(&h);
        let s = strong_filtration(&b, 10);
        assert_eq!(s.at(1), Some(b.space()));
        assert_eq!(s.verdict(), IndexVerdict::Index(3));
        assert!(s.is_decreasing());

        let l = l2();
        let s = strong_filtration(&IdealHandle::whole(&l), 10);
        assert_eq!(s.verdict(), IndexVerdict::Index(3));
        assert!(3 <= strong_bound(3));
        assert_eq!(strong_bound(3), 31);

        // an ideal that is not all of L: B^<1> = B
        let center = IdealHandle::new(&h, h.span(&[h.e(3)]).unwrap()).unwrap();
        let s = strong_filtration(&center, 10);
        assert_eq!(s.at(1), Some(center.space()));
        assert_eq!(s.verdict(), IndexVerdict::Index(2));
    }

    #[test]
    fn translates_examples() {
        let a = a2();
        let zero = a.zero_space();
        let t = right_translates(&zero, 5, &a).unwrap();
        assert!(t.entries.iter().all(|(_, s)| s.is_zero()));
        assert!(left_translates(&zero, 5, &a).unwrap().terminated_zero);

        let e2 = a.span(&[a.e(2)]).unwrap();
        let t = right_translates(&e2, 5, &a).unwrap();
        assert!(t.fixed_point);
        for k in 0..10 {
            assert_eq!(t.at(k), Some(&e2));
        }
        let t = left_translates(&e2, 5, &a).unwrap();
        assert!(t.at(1).unwrap().is_zero());

        let l = l2();
        let t = right_translates(&l.span(&[l.e(2)]).unwrap(), 5, &l).unwrap();
        assert!(t.at(1).unwrap().is_zero());

        let h = h3();
        let t = left_translates(&h.span(&[h.e(3)]).unwrap(), 5, &h).unwrap();
        assert!(t.at(1).unwrap().is_zero());
        assert!(right_translates(&Subspace::zero(Q, 4), 2, &h).is_err());
    }

    #[test]
    fn es_nil_examples() {
        let h = h3();
        let b = IdealHandle::whole(&h);
        assert_eq!(es_nil_index(&b, Side::Right, 4), EsNilVerdict::Nil(1));
        assert_eq!(es_nil_index(&b, Side::Left, 4), EsNilVerdict::Nil(1));

        let a = a2();
        let b = IdealHandle::whole(&a);
        assert_eq!(
            es_nil_index(&b, Side::Right, 3),
            EsNilVerdict::Never { dim: 1 }
        );
        assert_eq!(es_nil_index(&b, Side::Left, 3), EsNilVerdict::Nil(1));

        let l = l2();
        assert_eq!(
            es_nil_index(&IdealHandle::whole(&l), Side::Right, 3),
            EsNilVerdict::Nil(1)
        );
    }

    #[test]
    fn bk_chain_examples() {
        let h = h3();
        let b = IdealHandle::whole(&h);
        let chain = bk_chain(&b, 5).unwrap();
        let powers = right_powers(&b, 5);
        for k in 0..=5 {
            assert_eq!(chain.at(k), powers.at(k), "k = {k}");
        }

        let l = l2();
        let chain = bk_chain(&IdealHandle::whole(&l), 5).unwrap();
        let e2 = l.span(&[l.e(2)]).unwrap();
        assert_eq!(chain.at(2), Some(&e2));
        assert_eq!(chain.at(3), Some(&e2));
        assert!(chain.is_decreasing());

        let a = a2();
        let chain = bk_chain(&IdealHandle::whole(&a), 5).unwrap();
        let e2 = a.span(&[a.e(2)]).unwrap();
        for k in 2..=8 {
            assert_eq!(chain.at(k), Some(&e2));
        }
    }

    #[test]
    fn profile_examples() {
        let ab = AlgebraDef::abelian(2, Q).unwrap();
        let p = nilpotency_profile(&IdealHandle::whole(&ab), 64);
        assert_eq!(
            (p.right(), p.left(), p.general(), p.strong()),
            (Some(2), Some(2), Some(2), Some(2))
        );
        assert_eq!(p.bound, Some(13));
        assert_eq!(p.bound_satisfied, Some(true));

        let l = l2();
        let p = nilpotency_profile(&IdealHandle::whole(&l), 64);
        assert_eq!(
            (p.right(), p.left(), p.general(), p.strong()),
            (Some(3), Some(3), Some(3), Some(3))
        );
        assert_eq!(p.bound, Some(31));
        assert_eq!(p.bound_satisfied, Some(true));

        let a = a2();
        let p = nilpotency_profile(&IdealHandle::whole(&a), 64);
        assert!(p.right_index.is_never());
        assert_eq!(p.left(), Some(3));
        assert!(p.strong_index.is_never());
        assert_eq!(p.bound, None);
        assert_eq!(p.bound_satisfied, None);
        assert_eq!(p.es_right_nil, EsNilVerdict::Never { dim: 1 });
        assert_eq!(p.es_left_nil, EsNilVerdict::Nil(1));
        assert!(p.sandwich_holds());
    }

    #[test]
    fn inclusions_hold_on_small_algebras() {
        for a in [AlgebraDef::abelian(2, Q).unwrap(), l2(), h3(), a2()] {
            let b = IdealHandle::whole(&a);
            let r = verify_inclusions(&b, InclusionConfig::new(6, 4, 7)).unwrap();
            assert!(
                r.all_passed(),
                "{}: {:?}",
                a.name(),
                r.failures().collect::<Vec<_>>()
            );
        }
        let h = h3();
        let b = IdealHandle::whole(&h);
        let r = verify_inclusions(&b, InclusionConfig::new(6, 4, 7)).unwrap();
        let line = r
            .checks
            .iter()
            .find(|c| c.name == "B^3 in ^3B + Es(B)")
            .unwrap();
        assert!(line.passed);
    }

    #[test]
    fn inclusion_reports_are_deterministic() {
        let l = l2();
        let b = IdealHandle::whole(&l);
        let c = InclusionConfig::new(5, 3, 42);
        assert_eq!(
            verify_inclusions(&b, c).unwrap(),
            verify_inclusions(&b, c).unwrap()
        );
    }

    #[test]
    fn fixed_run_detection() {
        let q = |d: usize| Subspace::full(Q, d);
        // W_1 = 3-dim, W_2 = W_3 = W_4 = 2-dim: run starts at 2, certified at 4
        assert!(!run_is_fixed(&[q(3), q(2)]));
        assert!(!run_is_fixed(&[q(3), q(2), q(2)]));
        assert!(run_is_fixed(&[q(3), q(2), q(2), q(2)]));
        assert!(run_is_fixed(&[q(2), q(2)]));
        assert!(!run_is_fixed(&[Subspace::zero(Q, 2), Subspace::zero(Q, 2)]));
    }
}
