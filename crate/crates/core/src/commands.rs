//! The four command-line operations, as library functions.
//!
//! Each returns the text to print and an exit status: 0 when every check
//! passed, 1 when a mathematical check failed. Errors (bad input, unknown
//! ideal, unparsable expression) map to status 2 via [`exit_code`].

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use crate::algebra::{verify_left_leibniz, verify_right_leibniz, IdealHandle, IdentityReport};
use crate::error::{Error, Result};
use crate::io::{parse_vector, AlgebraFile};
use crate::report::build_profile_report;
use crate::rewrite::{check_tags, normalize, parse, Assignment, Evaluate};
use crate::search::{parse_prime_field, run_search, SearchConfig};
use crate::series::{default_k_max, EsNilVerdict, IndexVerdict};

pub const EXIT_OK: u8 = 0;
pub const EXIT_CHECK_FAILED: u8 = 1;
pub const EXIT_INPUT: u8 = 2;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub stdout: String,
    pub code: u8,
}

impl Outcome {
    fn new(stdout: String, passed: bool) -> Self {
        Outcome {
            stdout,
            code: if passed { EXIT_OK } else { EXIT_CHECK_FAILED },
        }
    }
}

/// Exit status for an error: a failed chain verification is a mathematical
/// failure, everything else is bad input.
pub fn exit_code(e: &Error) -> u8 {
    match e {
        Error::ChainVerification(_) => EXIT_CHECK_FAILED,
        _ => EXIT_INPUT,
    }
}

fn write_identity_failures(out: &mut String, r: &IdentityReport) {
    for f in &r.failures {
        let (i, j, k) = f.triple;
        let _ = writeln!(
            out,
            "  {} fails at (e{i}, e{j}, e{k}): lhs = {}, rhs = {}",
            r.identity, f.lhs, f.rhs
        );
    }
    for f in &r.derived_failures {
        let (i, j, k) = f.indices;
        let _ = writeln!(
            out,
            "  {} fails at (e{i}, e{j}, e{k}): value {}",
            f.identity, f.value
        );
    }
}

pub fn cmd_check(path: &Path) -> Result<Outcome> {
    let loaded = AlgebraFile::read(path)?.load()?;
    let a = &loaded.algebra;
    let right = verify_right_leibniz(a);
    let left = verify_left_leibniz(a);
    let word = |r: &IdentityReport| {
        if r.is_valid() {
            "OK".to_string()
        } else {
            format!(
                "FAILED ({} of {} triples)",
                r.failures.len(),
                r.triples_checked
            )
        }
    };
    let mut out = format!(
        "right Leibniz: {}, left Leibniz: {}",
        word(&right),
        word(&left)
    );
    if right.is_valid() && left.is_valid() && a.is_antisymmetric() {
        out.push_str(" (Lie)");
    }
    out.push('\n');
    write_identity_failures(&mut out, &right);
    write_identity_failures(&mut out, &left);
    Ok(Outcome::new(out, right.is_valid()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProfileArgs {
    pub path: PathBuf,
    /// `None` profiles the whole algebra.
    pub ideal: Option<String>,
    pub n_max: usize,
    /// Defaults to `dim + 1`.
    pub k_max: Option<usize>,
    pub seed: u64,
    pub json: Option<PathBuf>,
}

impl ProfileArgs {
    pub fn new(path: impl Into<PathBuf>) -> Self {
        ProfileArgs {
            path: path.into(),
            ideal: None,
            n_max: 64,
            k_max: None,
            seed: 0,
            json: None,
        }
    }
}

fn describe_index(side: &str, v: &IndexVerdict) -> String {
    match v {
        IndexVerdict::Index(n) => format!("{side} index {n}"),
        IndexVerdict::Never { stable_from, dim } => {
            format!("not {side} nilpotent (fixed point at dim {dim} from index {stable_from})")
        }
        IndexVerdict::Implied { by } => format!("not {side} nilpotent (the {by} never vanish)"),
        IndexVerdict::Undetermined { computed_to } => {
            format!("{side} index undetermined (computed to {computed_to})")
        }
    }
}

fn describe_es(side: &str, v: &EsNilVerdict) -> String {
    match v {
        EsNilVerdict::Nil(k) => format!("Es_{k}-{side} nil"),
        EsNilVerdict::Never { dim } => {
            format!("not Es_k-{side} nil (translates fixed at dim {dim})")
        }
        EsNilVerdict::Undetermined { computed_to } => {
            format!("Es_k-{side} nil undetermined (computed to k = {computed_to})")
        }
    }
}

pub fn cmd_profile(args: &ProfileArgs) -> Result<Outcome> {
    let loaded = AlgebraFile::read(&args.path)?.load()?;
    let a = loaded.algebra.clone().validate()?;
    let (name, space) = match &args.ideal {
        Some(n) => (n.as_str(), loaded.ideal(n)?.into_space()),
        None => ("L", a.whole_space()),
    };
    let b = IdealHandle::new(&a, space)?;
    let k_max = args.k_max.unwrap_or_else(|| default_k_max(&a));
    let (profile, report) = build_profile_report(&b, name, args.n_max, k_max, args.seed)?;

    let mut out = String::new();
    let _ = writeln!(
        out,
        "algebra {} (dim {} over {}), ideal {} (dim {}), Es(B) dim {}",
        a.name(),
        a.dim(),
        a.field(),
        name,
        report.ideal_dim,
        report.es_dim
    );
    let _ = writeln!(out, "{}", describe_index("right", &profile.right_index));
    let _ = writeln!(out, "{}", describe_index("left", &profile.left_index));
    let _ = writeln!(out, "{}", describe_index("general", &profile.general_index));
    let _ = writeln!(out, "{}", describe_index("strong", &profile.strong_index));
    let _ = writeln!(out, "{}", describe_es("right", &profile.es_right_nil));
    let _ = writeln!(out, "{}", describe_es("left", &profile.es_left_nil));
    match &report.bound {
        Some(b) => {
            let _ = writeln!(out, "bound 4n²−2n+1 = {}: {}", b.value, b.verdict);
        }
        None if profile.right_index.is_never() => {
            let _ = writeln!(out, "bound 4n²−2n+1: not applicable (not right nilpotent)");
        }
        None => {
            let _ = writeln!(out, "bound 4n²−2n+1: undetermined");
        }
    }
    if let Some(b) = &report.max_variant_bound {
        let _ = writeln!(
            out,
            "bound with k = max(k', n) = {}: {}: {}",
            b.at, b.value, b.verdict
        );
    }
    if !report.sandwich_holds {
        let _ = writeln!(out, "index sandwich right <= general <= strong: VIOLATED");
    }
    let passed = report.inclusions.checks.iter().filter(|c| c.passed).count();
    let _ = writeln!(
        out,
        "inclusion checks: {passed}/{} passed",
        report.inclusions.checks.len()
    );
    for c in report.inclusions.failures() {
        let _ = writeln!(out, "  FAILED {}: {}", c.name, c.detail);
    }
    if let Some(path) = &args.json {
        std::fs::write(path, report.to_json())
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(Outcome::new(out, report.all_passed()))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalizeArgs {
    pub expression: String,
    pub algebra: Option<PathBuf>,
    /// `name=vector`, vector as `1,0,-1/2` or `e2`.
    pub assign: Vec<String>,
    /// Ideal that `!`-tagged generators must lie in.
    pub ideal: Option<String>,
    pub max_term_length: usize,
}

impl NormalizeArgs {
    pub fn new(expression: impl Into<String>) -> Self {
        NormalizeArgs {
            expression: expression.into(),
            algebra: None,
            assign: Vec::new(),
            ideal: None,
            max_term_length: 10,
        }
    }
}

pub fn cmd_normalize(args: &NormalizeArgs) -> Result<Outcome> {
    let tree = parse(&args.expression)?;
    if tree.length() > args.max_term_length {
        return Err(Error::TermTooLong {
            length: tree.length(),
            cap: args.max_term_length,
        });
    }
    let nf = normalize(&tree);
    let mut out = format!("{nf}\n");
    let Some(path) = &args.algebra else {
        return Ok(Outcome::new(out, true));
    };
    let loaded = AlgebraFile::read(path)?.load()?;
    let a = &loaded.algebra;
    let mut assignment = Assignment::new();
    for item in &args.assign {
        let (name, vector) = item
            .split_once('=')
            .ok_or_else(|| Error::Schema(format!("assignment {item:?}: expected name=vector")))?;
        assignment.insert(name.trim().to_string(), parse_vector(vector, a)?);
    }
    if let Some(name) = &args.ideal {
        check_tags(&tree, &assignment, &loaded.ideal(name)?)?;
    }
    let direct = tree.evaluate(&assignment, a)?;
    let via_nf = nf.evaluate(&assignment, a)?;
    let _ = writeln!(out, "evaluate(tree) = {direct}");
    let _ = writeln!(out, "evaluate(normal form) = {via_nf}");
    let matched = direct == via_nf;
    out.push_str(if matched { "MATCH\n" } else { "MISMATCH\n" });
    Ok(Outcome::new(out, matched))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SearchArgs {
    pub dim: usize,
    pub field: String,
    pub samples: usize,
    pub seed: u64,
    pub n_max: usize,
    pub json: Option<PathBuf>,
    pub list: bool,
}

pub fn cmd_search(args: &SearchArgs) -> Result<Outcome> {
    let field = parse_prime_field(&args.field)?;
    let p = field.characteristic();
    let mut config = SearchConfig::new(args.dim, p, args.samples, args.seed);
    config.n_max = args.n_max;
    config.record_all = args.list;
    let r = run_search(&config)?;

    let mut out = String::new();
    let _ = writeln!(
        out,
        "dim {} over {}: {} exhaustive (<= {} nonzero constants) + {} sampled candidates",
        args.dim,
        r.field,
        r.exhaustive_candidates,
        config.exhaustive_nonzeros,
        r.sampled_candidates
    );
    if r.partial {
        let _ = writeln!(
            out,
            "PARTIAL: candidate cap of {} reached",
            config.max_candidates
        );
    }
    let _ = writeln!(out, "right Leibniz: {} ({} Lie)", r.validated, r.lie);
    let _ = writeln!(
        out,
        "right nilpotent: {}, left nilpotent: {}, left but not right nilpotent: {}",
        r.right_nilpotent, r.left_nilpotent, r.left_not_right
    );
    for (n, s) in &r.max_strong_by_right {
        let _ = writeln!(out, "  right index {n}: max strong index {s}");
    }
    for ex in &r.left_not_right_examples {
        let _ = writeln!(out, "  left-not-right: {:?}", ex.constants);
    }
    if r.undetermined > 0 {
        let _ = writeln!(out, "undetermined: {}", r.undetermined);
    }
    let _ = writeln!(
        out,
        "bound violations: {}, sandwich failures: {}, filtration failures: {}",
        r.bound_violations.len(),
        r.sandwich_failures.len(),
        r.filtration_failures.len()
    );
    if let Some(path) = &args.json {
        std::fs::write(path, r.to_json())
            .map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
    }
    Ok(Outcome::new(out, r.violations() == 0))
}
