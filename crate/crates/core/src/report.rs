//! Machine-readable profile reports.
//!
//! A [`ProfileReport`] is a pure function of the algebra, the chosen ideal,
//! the bounds and the seed: maps are ordered and nothing time-dependent is
//! recorded, so the JSON is byte-identical across runs.

use serde::Serialize;

use crate::algebra::IdealHandle;
use crate::error::Result;
use crate::series::{
    bk_chain, es_nil_index, left_translates, nilpotency_profile_with, right_translates,
    verify_inclusions, EsNilVerdict, InclusionConfig, InclusionReport, IndexVerdict,
    NilpotencyProfile, SeriesKind, SeriesTable, Side,
};

pub const TOOL_NAME: &str = "leibniz";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum VerdictJson {
    Index { value: usize },
    Never { stable_from: usize, dim: usize },
    Implied { by: SeriesKind },
    Undetermined { computed_to: usize },
}

impl From<IndexVerdict> for VerdictJson {
    fn from(v: IndexVerdict) -> Self {
        match v {
            IndexVerdict::Index(value) => VerdictJson::Index { value },
            IndexVerdict::Never { stable_from, dim } => VerdictJson::Never { stable_from, dim },
            IndexVerdict::Implied { by } => VerdictJson::Implied { by },
            IndexVerdict::Undetermined { computed_to } => VerdictJson::Undetermined { computed_to },
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum EsNilJson {
    Nil { k: usize },
    Never { dim: usize },
    Undetermined { computed_to: usize },
}

impl From<EsNilVerdict> for EsNilJson {
    fn from(v: EsNilVerdict) -> Self {
        match v {
            EsNilVerdict::Nil(k) => EsNilJson::Nil { k },
            EsNilVerdict::Never { dim } => EsNilJson::Never { dim },
            EsNilVerdict::Undetermined { computed_to } => EsNilJson::Undetermined { computed_to },
        }
    }
}

/// `SATISFIED`, `VIOLATED` or `UNDETERMINED`.
pub fn bound_word(satisfied: Option<bool>) -> &'static str {
    match satisfied {
        Some(true) => "SATISFIED",
        Some(false) => "VIOLATED",
        None => "UNDETERMINED",
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundJson {
    /// The index the bound is evaluated at.
    pub at: usize,
    pub value: u64,
    pub verdict: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeriesJson {
    pub kind: SeriesKind,
    /// `[index, dimension]` pairs.
    pub dims: Vec<(usize, usize)>,
    pub fixed_point: bool,
    pub terminated_zero: bool,
}

impl From<&SeriesTable> for SeriesJson {
    fn from(t: &SeriesTable) -> Self {
        SeriesJson {
            kind: t.kind,
            dims: t.dims(),
            fixed_point: t.fixed_point,
            terminated_zero: t.terminated_zero,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileReport {
    pub tool: &'static str,
    pub version: &'static str,
    pub algebra: String,
    pub field: String,
    pub dim: usize,
    /// `"L"` for the whole algebra, otherwise the ideal's name in the file.
    pub ideal: String,
    pub ideal_dim: usize,
    pub es_dim: usize,
    pub n_max: usize,
    pub k_max: usize,
    pub seed: u64,
    pub right_index: VerdictJson,
    pub left_index: VerdictJson,
    pub general_index: VerdictJson,
    pub strong_index: VerdictJson,
    pub es_right_nil: EsNilJson,
    pub es_left_nil: EsNilJson,
    /// `4n² − 2n + 1` at the right index `n`.
    pub bound: Option<BoundJson>,
    /// `4k² − 2k + 1` at `k = max(k', n)`.
    pub max_variant_bound: Option<BoundJson>,
    pub sandwich_holds: bool,
    pub series: Vec<SeriesJson>,
    pub inclusions: InclusionReport,
}

impl ProfileReport {
    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }

    /// Everything checked passed: bounds not violated, chain and inclusions verified.
    pub fn all_passed(&self) -> bool {
        let ok = |b: &Option<BoundJson>| b.as_ref().is_none_or(|b| b.verdict != "VIOLATED");
        ok(&self.bound)
            && ok(&self.max_variant_bound)
            && self.sandwich_holds
            && self.inclusions.all_passed()
    }
}

/// Profile, Es translates, `B_k` chain and inclusion checks for `b`.
///
/// A failure of the `B_k` chain verification is returned as an error.
pub fn build_profile_report(
    b: &IdealHandle<'_>,
    ideal_name: &str,
    n_max: usize,
    k_max: usize,
    seed: u64,
) -> Result<(NilpotencyProfile, ProfileReport)> {
    let a = b.algebra();
    let profile = nilpotency_profile_with(b, n_max, k_max);
    let es = a.es_of(b);
    let chain = bk_chain(b, n_max)?;
    let es_right = right_translates(&es, k_max, a)?;
    let es_left = left_translates(&es, k_max, a)?;
    debug_assert_eq!(es_nil_index(b, Side::Right, k_max), profile.es_right_nil);
    let inclusions = verify_inclusions(b, InclusionConfig::new(n_max.min(16), k_max, seed))?;

    let bound = |at: Option<usize>, value: Option<u64>, sat: Option<bool>| {
        Some(BoundJson {
            at: at?,
            value: value?,
            verdict: bound_word(sat),
        })
    };
    let max_k = match (profile.right(), profile.es_right_nil.k()) {
        (Some(n), Some(k)) => Some(n.max(k)),
        _ => None,
    };
    let report = ProfileReport {
        tool: TOOL_NAME,
        version: TOOL_VERSION,
        algebra: a.name().to_string(),
        field: a.field().to_string(),
        dim: a.dim(),
        ideal: ideal_name.to_string(),
        ideal_dim: b.space().dim(),
        es_dim: es.dim(),
        n_max,
        k_max,
        seed,
        right_index: profile.right_index.into(),
        left_index: profile.left_index.into(),
        general_index: profile.general_index.into(),
        strong_index: profile.strong_index.into(),
        es_right_nil: profile.es_right_nil.into(),
        es_left_nil: profile.es_left_nil.into(),
        bound: bound(profile.right(), profile.bound, profile.bound_satisfied),
        max_variant_bound: bound(
            max_k,
            profile.max_variant_bound,
            profile.max_variant_satisfied,
        ),
        sandwich_holds: profile.sandwich_holds(),
        series: [
            &profile.right,
            &profile.left,
            &profile.general,
            &profile.strong,
            &chain,
            &es_right,
            &es_left,
        ]
        .into_iter()
        .map(SeriesJson::from)
        .collect(),
        inclusions,
    };
    Ok((profile, report))
}
