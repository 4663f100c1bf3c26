//! The `tautcoh` command line: exact cohomology tables of tautological
//! bundles on permutohedral toric varieties, fan and fiber combinatorics,
//! the two-chart P¹ model, wonderful-compactification checks, matroid
//! generating functions, corpus generation, and the verification suites.
//!
//! Every command prints a JSON value on stdout.  Exit codes: 0 success,
//! 1 a verification found a genuine disagreement, 2 input error or size cap,
//! 3 internal invariant violation.

mod cache;
mod input;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use tautcoh_core::bundle::parse_expr;
use tautcoh_core::cech::Engine;
use tautcoh_core::corpus::{default_corpus, Corpus, CorpusEntry, Provenance};
use tautcoh_core::error::{CoreError, Result};
use tautcoh_core::fan::{enumerate_partitions, nonconstant_components};
use tautcoh_core::gf::{ext_q_gf, ext_s_gf, sym_q_gf, ExtQRoute, GfRoute};
use tautcoh_core::matrix::PowerKind;
use tautcoh_core::p1::{p1_report, p1_summary, splitting_report, P1Bundle};
use tautcoh_core::scalar::Field;
use tautcoh_core::suites::run_suite;
use tautcoh_core::wonderful::{
    ideal_sheaf_check, immaculate_check, log_canonical_cohomology, speyer_chi,
};

use crate::cache::DimCache;
use crate::input::{load_integer_rows, load_realization};

#[derive(Parser)]
#[command(
    name = "tautcoh",
    version,
    about = "Exact cohomology of tautological bundles of matroid realizations"
)]
struct Cli {
    /// Field to compute over (a file's own field label takes precedence).
    #[arg(long, global = true, default_value = "Q")]
    field: String,

    /// Worker threads for the verification suites.
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Directory for the dimension-vector cache (safe to delete).
    #[arg(long, global = true)]
    cache: Option<PathBuf>,

    /// Also write the JSON result to this path.
    #[arg(long, global = true)]
    json_out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generating functions of the input's matroid, all routes.
    Gf {
        /// Realization JSON file.
        #[arg(long)]
        input: PathBuf,
        /// Which family of coefficients.
        #[arg(long, value_enum)]
        which: GfWhich,
        /// Truncation degree for the symmetric-power series.
        #[arg(long, default_value_t = 4)]
        degree: usize,
        /// Route selection; only "all" is meaningful, every route is cheap.
        #[arg(long, default_value = "all")]
        route: String,
    },
    /// Cohomology table of a bundle expression on the input realization.
    Cohomology {
        /// Realization JSON file.
        #[arg(long)]
        input: PathBuf,
        /// Bundle expression, e.g. "wedge(2, Q)" or "sym(2, S) * det(Q)".
        #[arg(long)]
        expr: String,
        /// Include the per-weight table in the output.
        #[arg(long)]
        per_weight: bool,
    },
    /// Enumerate the permutohedral fan.
    Fan {
        /// Ground-set size.
        #[arg(long)]
        n: usize,
        /// List every cone's ordered set partition.
        #[arg(long)]
        list_cones: bool,
    },
    /// Check the one-component dichotomy over all ordered set partitions.
    FiberCheck {
        /// Realization JSON file.
        #[arg(long)]
        input: PathBuf,
    },
    /// The two-chart model over P¹: splittings and functor powers.
    P1 {
        /// Realization JSON file.
        #[arg(long)]
        input: PathBuf,
        /// Expected ground-set size (validated against the file).
        #[arg(long)]
        n: Option<usize>,
        /// Functor: wedge or sym.
        #[arg(long)]
        functor: String,
        /// Functor degree.
        #[arg(long)]
        p: usize,
        /// One bundle (S, Q, line-s, line-q); all four when omitted.
        #[arg(long)]
        which: Option<String>,
    },
    /// Wonderful-compactification checks on the input realization.
    Wonderful {
        /// Realization JSON file.
        #[arg(long)]
        input: PathBuf,
        /// Which check to run.
        #[arg(long, value_enum)]
        check: WonderfulCheck,
        /// The codimension-one subspace file for the immaculate check.
        #[arg(long)]
        flag: Option<PathBuf>,
    },
    /// Run one verification suite; exit 0 exactly when every case passes.
    Verify {
        /// Suite name.
        suite: String,
        /// "default" or a corpus JSON path.
        #[arg(long)]
        corpus: Option<String>,
        /// Run the suite on a single realization file instead of a corpus.
        #[arg(long)]
        input: Option<PathBuf>,
    },
    /// Corpus generation.
    Corpus {
        #[command(subcommand)]
        action: CorpusAction,
    },
}

#[derive(Subcommand)]
enum CorpusAction {
    /// Generate the default corpus as JSON.
    Make {
        /// Write to this path instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GfWhich {
    /// Exterior powers of the subbundle.
    ExtS,
    /// Exterior powers of the quotient bundle.
    ExtQ,
    /// Symmetric powers of the quotient bundle.
    SymQ,
}

#[derive(Clone, Copy, ValueEnum)]
enum WonderfulCheck {
    /// Sections of the log-canonical bundle against the counting formula.
    LogCanonical,
    /// Immaculateness of the comparison line bundle of a flag.
    Immaculate,
    /// Structure-sheaf vanishing and determinant-twist surjectivity.
    IdealSheaf,
    /// Signed Euler characteristic of the anti-log-canonical bundle.
    Speyer,
}

/// A command's JSON result plus the process exit code.
struct Outcome {
    value: Value,
    code: u8,
}

impl Outcome {
    fn pass(value: Value) -> Outcome {
        Outcome { value, code: 0 }
    }

    fn verdict(value: Value, ok: bool) -> Outcome {
        Outcome {
            value,
            code: u8::from(!ok),
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(jobs) = cli.jobs {
        let _ = rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.max(1))
            .build_global();
    }
    match run(&cli) {
        Ok(outcome) => {
            let text = serde_json::to_string_pretty(&outcome.value)
                .unwrap_or_else(|e| format!("{{\"error\": \"serialization: {e}\"}}"));
            println!("{text}");
            if let Some(path) = &cli.json_out {
                if let Err(e) = fs::write(path, &text) {
                    eprintln!("error: cannot write {}: {e}", path.display());
                    return ExitCode::from(2);
                }
            }
            ExitCode::from(outcome.code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

fn run(cli: &Cli) -> Result<Outcome> {
    let field = Field::parse_label(&cli.field)?;
    match &cli.command {
        Command::Gf {
            input,
            which,
            degree,
            route,
        } => gf_command(input, *which, *degree, route, field),
        Command::Cohomology {
            input,
            expr,
            per_weight,
        } => cohomology_command(cli, input, expr, *per_weight, field),
        Command::Fan { n, list_cones } => fan_command(*n, *list_cones),
        Command::FiberCheck { input } => fiber_check_command(input, field),
        Command::P1 {
            input,
            n,
            functor,
            p,
            which,
        } => p1_command(input, *n, functor, *p, which.as_deref(), field),
        Command::Wonderful { input, check, flag } => {
            wonderful_command(input, *check, flag.as_deref(), field)
        }
        Command::Verify {
            suite,
            corpus,
            input,
        } => verify_command(suite, corpus.as_deref(), input.as_deref(), field),
        Command::Corpus { action } => match action {
            CorpusAction::Make { out } => corpus_make_command(out.as_deref()),
        },
    }
}

fn big_strings(coeffs: &[num_bigint::BigInt]) -> Vec<String> {
    coeffs.iter().map(|c| c.to_string()).collect()
}

fn gf_command(
    input: &PathBuf,
    which: GfWhich,
    degree: usize,
    route: &str,
    field: Field,
) -> Result<Outcome> {
    if route != "all" {
        return Err(CoreError::Input(format!(
            "unknown route {route:?}; every route is computed, pass \"all\""
        )));
    }
    let real = load_realization(input, field)?;
    let m = real.matroid();
    let (label, routes): (&str, Vec<(String, Vec<String>)>) = match which {
        GfWhich::ExtS => (
            "ext-s",
            vec![
                (
                    "closed".into(),
                    big_strings(&ext_s_gf(&m, GfRoute::Closed).dense()),
                ),
                (
                    "recursion".into(),
                    big_strings(&ext_s_gf(&m, GfRoute::Recursion).dense()),
                ),
            ],
        ),
        GfWhich::ExtQ => (
            "ext-q",
            vec![
                (
                    "spanning-enum".into(),
                    big_strings(&ext_q_gf(&m, ExtQRoute::SpanningEnum)?.dense()),
                ),
                (
                    "recursion".into(),
                    big_strings(&ext_q_gf(&m, ExtQRoute::Recursion)?.dense()),
                ),
                (
                    "tutte".into(),
                    big_strings(&ext_q_gf(&m, ExtQRoute::Tutte)?.dense()),
                ),
            ],
        ),
        GfWhich::SymQ => (
            "sym-q",
            vec![(
                "series".into(),
                big_strings(sym_q_gf(&m, degree + 1).coeffs()),
            )],
        ),
    };
    let agree = routes.windows(2).all(|w| w[0].1 == w[1].1);
    let value = json!({
        "which": label,
        "field": real.field().to_string(),
        "ground": real.n(),
        "routes": routes.iter().cloned().collect::<std::collections::BTreeMap<_, _>>(),
        "agree": agree,
    });
    Ok(Outcome::verdict(value, agree))
}

fn cohomology_command(
    cli: &Cli,
    input: &PathBuf,
    expr_text: &str,
    per_weight: bool,
    field: Field,
) -> Result<Outcome> {
    let real = load_realization(input, field)?;
    let expr = parse_expr(expr_text)?;
    let cache = cli.cache.as_deref().map(DimCache::new);
    let key = DimCache::key(&real, &expr.to_string());

    if let Some(h) = cache.as_ref().and_then(|c| c.get(&key)) {
        let value = json!({
            "expr": expr.to_string(),
            "field": real.field().to_string(),
            "n": real.n(),
            "h": h,
            "cached": true,
        });
        return Ok(Outcome::pass(value));
    }

    let mut engine = Engine::new(&real, None)?;
    let report = engine.report(&expr)?;
    if let Some(c) = &cache {
        c.put(&key, &report.h);
    }
    let mut value = serde_json::to_value(&report)
        .map_err(|e| CoreError::Internal(format!("report serialization: {e}")))?;
    if let Value::Object(map) = &mut value {
        if !per_weight {
            map.remove("by_weight");
        }
        map.insert("cached".into(), Value::Bool(false));
    }
    Ok(Outcome::pass(value))
}

fn fan_command(n: usize, list_cones: bool) -> Result<Outcome> {
    let partitions = enumerate_partitions(n)?;
    let mut by_dim: std::collections::BTreeMap<usize, usize> = std::collections::BTreeMap::new();
    for f in &partitions {
        *by_dim.entry(f.dim()).or_default() += 1;
    }
    let mut value = json!({
        "n": n,
        "cones": partitions.len(),
        "by_dimension": by_dim,
        "maximal": partitions.iter().filter(|f| f.dim() + 1 == n.max(1)).count(),
    });
    if list_cones {
        let listed: Vec<Vec<Vec<usize>>> = partitions.iter().map(|f| f.blocks().to_vec()).collect();
        if let Value::Object(map) = &mut value {
            map.insert(
                "partitions".into(),
                serde_json::to_value(listed)
                    .map_err(|e| CoreError::Internal(format!("fan serialization: {e}")))?,
            );
        }
    }
    Ok(Outcome::pass(value))
}

fn fiber_check_command(input: &PathBuf, field: Field) -> Result<Outcome> {
    let real = load_realization(input, field)?;
    if real.n() == 0 {
        return Err(CoreError::Input("the fiber check needs a nonempty ground set".into()));
    }
    let m = real.matroid();
    let last = real.n() - 1;
    let expected = usize::from(!m.is_loop(last) && !m.is_coloop(last));
    let partitions = enumerate_partitions(real.n() - 1)?;
    let mut failures = Vec::new();
    for f in &partitions {
        let comps = nonconstant_components(&real, f)?;
        if comps.len() != expected {
            failures.push(json!({
                "partition": f.blocks(),
                "nonconstant_blocks": comps,
            }));
        }
    }
    let ok = failures.is_empty();
    let value = json!({
        "ground": real.n(),
        "last_element_case": if m.is_loop(last) { "loop" } else if m.is_coloop(last) { "coloop" } else { "neither" },
        "expected_nonconstant_blocks": expected,
        "partitions_checked": partitions.len(),
        "failures": failures,
        "ok": ok,
    });
    Ok(Outcome::verdict(value, ok))
}

fn parse_functor(text: &str) -> Result<PowerKind> {
    match text.to_ascii_lowercase().as_str() {
        "wedge" | "ext" => Ok(PowerKind::Wedge),
        "sym" => Ok(PowerKind::Sym),
        other => Err(CoreError::Input(format!(
            "unknown functor {other:?}; use wedge or sym"
        ))),
    }
}

fn parse_bundle(text: &str) -> Result<P1Bundle> {
    match text.to_ascii_lowercase().as_str() {
        "s" | "sub" => Ok(P1Bundle::Sub),
        "q" | "quot" => Ok(P1Bundle::Quot),
        "line-s" | "line-sub" => Ok(P1Bundle::LineSub),
        "line-q" | "line-quot" => Ok(P1Bundle::LineQuot),
        other => Err(CoreError::Input(format!(
            "unknown bundle {other:?}; use S, Q, line-s, or line-q"
        ))),
    }
}

fn p1_command(
    input: &PathBuf,
    n: Option<usize>,
    functor: &str,
    p: usize,
    which: Option<&str>,
    field: Field,
) -> Result<Outcome> {
    let real = load_realization(input, field)?;
    if let Some(n) = n {
        if n != real.n() {
            return Err(CoreError::Input(format!(
                "--n {n} does not match the input's ground set of {}",
                real.n()
            )));
        }
    }
    let functor = parse_functor(functor)?;
    match which {
        Some(text) => {
            let bundle = parse_bundle(text)?;
            let splitting = splitting_report(&real, bundle)?;
            let split_ok = splitting.degrees == splitting.expected;
            let (cohomology, coh_ok) = if matches!(bundle, P1Bundle::Sub | P1Bundle::Quot) {
                let rep = p1_report(&real, functor, p, bundle)?;
                let ok = rep.matches;
                (Some(rep), ok)
            } else {
                (None, true)
            };
            let ok = split_ok && coh_ok;
            let value = json!({
                "splitting": splitting,
                "cohomology": cohomology,
                "ok": ok,
            });
            Ok(Outcome::verdict(value, ok))
        }
        None => {
            let summary = p1_summary(&real, functor, p)?;
            let ok = summary
                .splittings
                .iter()
                .all(|s| s.degrees == s.expected)
                && summary.cohomology.iter().all(|c| c.matches);
            let value = json!({
                "summary": summary,
                "ok": ok,
            });
            Ok(Outcome::verdict(value, ok))
        }
    }
}

fn wonderful_command(
    input: &PathBuf,
    check: WonderfulCheck,
    flag: Option<&std::path::Path>,
    field: Field,
) -> Result<Outcome> {
    let real = load_realization(input, field)?;
    match check {
        WonderfulCheck::LogCanonical => {
            let rep = log_canonical_cohomology(&real)?;
            let ok = rep.matches;
            Ok(Outcome::verdict(to_json(&rep)?, ok))
        }
        WonderfulCheck::Immaculate => {
            let flag_path = flag.ok_or_else(|| {
                CoreError::Input(
                    "the immaculate check needs --flag with the codimension-one subspace".into(),
                )
            })?;
            let small = load_realization(flag_path, real.field())?;
            let rep = immaculate_check(&small, &real)?;
            let ok = rep.matches;
            Ok(Outcome::verdict(to_json(&rep)?, ok))
        }
        WonderfulCheck::IdealSheaf => {
            let rep = ideal_sheaf_check(&real)?;
            let ok = rep.matches;
            Ok(Outcome::verdict(to_json(&rep)?, ok))
        }
        WonderfulCheck::Speyer => {
            // Report-only: the sign is logged, never enforced.
            let rep = speyer_chi(&real)?;
            Ok(Outcome::pass(to_json(&rep)?))
        }
    }
}

fn to_json<T: serde::Serialize>(value: &T) -> Result<Value> {
    serde_json::to_value(value).map_err(|e| CoreError::Internal(format!("serialization: {e}")))
}

fn verify_command(
    suite: &str,
    corpus_arg: Option<&str>,
    input: Option<&std::path::Path>,
    field: Field,
) -> Result<Outcome> {
    let (corpus, run_field) = match (corpus_arg, input) {
        (Some(_), Some(_)) => {
            return Err(CoreError::Input(
                "pass either --corpus or --input, not both".into(),
            ))
        }
        (None, None) | (Some("default"), None) => (default_corpus(), field),
        (Some(path), None) => {
            let text = fs::read_to_string(path)
                .map_err(|e| CoreError::Input(format!("cannot read {path}: {e}")))?;
            (Corpus::from_json(&text)?, field)
        }
        (None, Some(file)) => {
            let (file_field, ground, rows) = load_integer_rows(file)?;
            let run_field = match file_field {
                Some(label) => Field::parse_label(&label)?,
                None => field,
            };
            let name = file
                .file_stem()
                .map(|s| s.to_string_lossy().into_owned())
                .unwrap_or_else(|| "input".to_string());
            let entry =
                CorpusEntry::new(&name, Provenance::External, run_field, rows, ground, None)?;
            (
                Corpus {
                    entries: vec![entry],
                },
                run_field,
            )
        }
    };

    let report = run_suite(suite, &corpus, run_field)?;
    for (i, case) in report.failures().enumerate() {
        if let Some(cx) = &case.counterexample {
            let path = format!("repro-{suite}-{i}.json");
            let payload = json!({
                "case": case.case,
                "detail": case.detail,
                "counterexample": cx,
            });
            if let Ok(text) = serde_json::to_string_pretty(&payload) {
                if fs::write(&path, text).is_ok() {
                    eprintln!("wrote {path}");
                }
            }
        }
    }
    let ok = report.ok;
    Ok(Outcome::verdict(to_json(&report)?, ok))
}

fn corpus_make_command(out: Option<&std::path::Path>) -> Result<Outcome> {
    let corpus = default_corpus();
    if let Some(path) = out {
        fs::write(path, corpus.to_json())
            .map_err(|e| CoreError::Input(format!("cannot write {}: {e}", path.display())))?;
        Ok(Outcome::pass(json!({
            "written": path.display().to_string(),
            "entries": corpus.entries.len(),
        })))
    } else {
        Ok(Outcome::pass(to_json(&corpus)?))
    }
}
