//! Named verification suites over the corpus.
//!
//! Each suite sweeps one family of checks — closed-form cohomology tables,
//! pushforward recursions, fan/fiber combinatorics, the two-chart model over
//! P¹, wonderful-compactification section counts, or the generating-function
//! identities — and returns a [`VerificationReport`] with one verdict per
//! case.  Entries that do not meet a suite's hypotheses (too large, loops
//! where looplessness is needed, matroid changed by reduction into the
//! requested field) are filtered out rather than failed; a failing verdict
//! always means the mathematics disagreed.
//!
//! Suites fan out entry by entry on the rayon pool; case order in the report
//! is corpus order regardless of scheduling.

use std::time::Instant;

use num_traits::ToPrimitive;
use rayon::prelude::*;

use crate::bundle::BundleExpr;
use crate::cech::{pushforward_check, CohomologyReport, Engine, PushFunctor};
use crate::corpus::{Corpus, CorpusEntry};
use crate::error::{CoreError, Result};
use crate::fan::{enumerate_partitions, nonconstant_components};
use crate::gf::{
    ext_q_gf, ext_s_gf, log_canonical_number, nbc_count, nbc_count_with_order, sym_q_gf, tutte,
    ExtQRoute, GfRoute, TutteRoute,
};
use crate::matrix::{PowerKind, Subspace};
use crate::matroid::Realization;
use crate::p1::{p1_report, splitting_report, P1Bundle};
use crate::report::{CaseReport, Counterexample, VerificationReport};
use crate::scalar::{Field, K};
use crate::wonderful::{ideal_sheaf_check, immaculate_check, log_canonical_cohomology};

/// The suite names `run_suite` accepts.
pub const SUITE_NAMES: &[&str] = &[
    "thm12",
    "thm13",
    "thm15",
    "thm16",
    "prop-one-component",
    "p1",
    "cor14",
    "cor51",
    "cor53",
    "gf-identities",
];

/// Run one named suite over a corpus in the given field.
pub fn run_suite(name: &str, corpus: &Corpus, field: Field) -> Result<VerificationReport> {
    let start = Instant::now();
    let cases = match name {
        "thm12" => entry_cases(corpus, 4, |e| exterior_closed_forms(e, field)),
        "thm13" => entry_cases(corpus, 4, |e| symmetric_closed_forms(e, field)),
        "thm15" => entry_cases(corpus, 4, |e| {
            pushforward_cases(e, field, &[PushFunctor::WedgeS, PushFunctor::WedgeQ])
        }),
        "thm16" => entry_cases(corpus, 4, |e| {
            pushforward_cases(e, field, &[PushFunctor::SymQ, PushFunctor::SymS])
        }),
        "prop-one-component" => entry_cases(corpus, 5, |e| one_component_cases(e, field)),
        "p1" => entry_cases(corpus, 5, |e| p1_cases(e, field)),
        "cor14" => entry_cases(corpus, 4, |e| log_canonical_cases(e, field)),
        "cor51" => entry_cases(corpus, 4, |e| immaculate_cases(e, field)),
        "cor53" => entry_cases(corpus, 4, |e| ideal_sheaf_cases(e, field)),
        "gf-identities" => entry_cases(corpus, 8, gf_cases),
        other => {
            return Err(CoreError::Input(format!(
                "unknown suite {other}; known suites: {}",
                SUITE_NAMES.join(", ")
            )))
        }
    }?;
    Ok(VerificationReport::from_cases(
        name,
        &field.to_string(),
        cases,
        start.elapsed().as_millis() as u64,
    ))
}

/// Map entries up to a ground-set bound through a per-entry case builder in
/// parallel, flattening in corpus order.
fn entry_cases<F>(corpus: &Corpus, max_ground: usize, per_entry: F) -> Result<Vec<CaseReport>>
where
    F: Fn(&CorpusEntry) -> Result<Vec<CaseReport>> + Sync,
{
    let entries: Vec<&CorpusEntry> = corpus.up_to(max_ground).collect();
    let nested: Vec<Vec<CaseReport>> = entries
        .par_iter()
        .map(|e| per_entry(e))
        .collect::<Result<_>>()?;
    Ok(nested.into_iter().flatten().collect())
}

/// Realize an entry over `field`, treating a matroid change as "not part of
/// this sweep" rather than a failure.
fn realize_filtered(entry: &CorpusEntry, field: Field) -> Result<Option<Realization>> {
    match entry.realization_over(field) {
        Ok(real) => Ok(Some(real)),
        Err(CoreError::Unrealizable(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

fn counterexample(
    entry: &CorpusEntry,
    field: Field,
    expression: &str,
    weight: Option<Vec<i64>>,
) -> Counterexample {
    Counterexample {
        rows: entry.rows.clone(),
        ground: entry.ground,
        field: field.to_string(),
        expression: expression.to_string(),
        weight,
    }
}

#[allow(clippy::too_many_arguments)]
fn finish_case(
    entry: &CorpusEntry,
    field: Field,
    label: String,
    expression: &str,
    ok: bool,
    dims: Vec<usize>,
    detail: String,
    weight: Option<Vec<i64>>,
    start: Instant,
) -> CaseReport {
    CaseReport {
        case: label,
        ok,
        dims,
        detail,
        millis: start.elapsed().as_millis() as u64,
        counterexample: if ok {
            None
        } else {
            Some(counterexample(entry, field, expression, weight))
        },
    }
}

/// The first weight carrying higher cohomology in a report, if any.
fn higher_weight(rep: &CohomologyReport) -> Option<Vec<i64>> {
    rep.by_weight
        .iter()
        .find(|line| line.h.iter().skip(1).any(|&h| h > 0))
        .map(|line| line.mu.clone())
}

/// Exterior powers of both tautological bundles against their closed forms:
/// h^{>0} = 0 everywhere, Σ_p h⁰(∧^pS) u^p = (u+1)^{#coloops}, and
/// Σ_p h⁰(∧^pQ) u^p = the spanning-set polynomial.
fn exterior_closed_forms(entry: &CorpusEntry, field: Field) -> Result<Vec<CaseReport>> {
    let mut cases = Vec::new();
    let Some(real) = realize_filtered(entry, field)? else {
        return Ok(cases);
    };
    let m = real.matroid();
    let s_poly = ext_s_gf(&m, GfRoute::Closed);
    let q_poly = ext_q_gf(&m, ExtQRoute::SpanningEnum)?;
    let mut engine = Engine::new(&real, None)?;
    for p in 0..=real.n() {
        for (base, poly) in [(BundleExpr::S, &s_poly), (BundleExpr::Q, &q_poly)] {
            let start = Instant::now();
            let expr = BundleExpr::wedge(p, base);
            let rep = engine.report(&expr)?;
            let expected = poly
                .coeff(p)
                .to_usize()
                .ok_or_else(|| CoreError::Internal("closed-form coefficient overflow".into()))?;
            let vanish = rep.higher_vanish();
            let ok = vanish && rep.h[0] == expected;
            let detail = format!(
                "h⁰ = {}, closed form {}, higher cohomology {}",
                rep.h[0],
                expected,
                if vanish { "vanishes" } else { "PRESENT" }
            );
            let weight = higher_weight(&rep);
            cases.push(finish_case(
                entry,
                field,
                format!("{} / {expr}", entry.name),
                &expr.to_string(),
                ok,
                rep.h.clone(),
                detail,
                weight,
                start,
            ));
        }
    }
    Ok(cases)
}

/// Symmetric powers of the quotient bundle against the closed generating
/// series (1 − u)^{−(n − #coloops)}, degrees up to four.
fn symmetric_closed_forms(entry: &CorpusEntry, field: Field) -> Result<Vec<CaseReport>> {
    let mut cases = Vec::new();
    let Some(real) = realize_filtered(entry, field)? else {
        return Ok(cases);
    };
    let m = real.matroid();
    let series = sym_q_gf(&m, 5);
    let mut engine = Engine::new(&real, None)?;
    for p in 0..=4 {
        let start = Instant::now();
        let expr = BundleExpr::sym(p, BundleExpr::Q);
        let rep = engine.report(&expr)?;
        let expected = series.coeffs()[p]
            .to_usize()
            .ok_or_else(|| CoreError::Internal("series coefficient overflow".into()))?;
        let vanish = rep.higher_vanish();
        let ok = vanish && rep.h[0] == expected;
        let detail = format!(
            "h⁰ = {}, series coefficient {}, higher cohomology {}",
            rep.h[0],
            expected,
            if vanish { "vanishes" } else { "PRESENT" }
        );
        let weight = higher_weight(&rep);
        cases.push(finish_case(
            entry,
            field,
            format!("{} / {expr}", entry.name),
            &expr.to_string(),
            ok,
            rep.h.clone(),
            detail,
            weight,
            start,
        ));
    }
    Ok(cases)
}

/// Deletion–contraction pushforward identities for the given functor
/// families, degrees up to three, on every entry with at least two elements.
fn pushforward_cases(
    entry: &CorpusEntry,
    field: Field,
    functors: &[PushFunctor],
) -> Result<Vec<CaseReport>> {
    let mut cases = Vec::new();
    if entry.ground < 2 {
        return Ok(cases);
    }
    let Some(real) = realize_filtered(entry, field)? else {
        return Ok(cases);
    };
    for &functor in functors {
        for p in 0..=3 {
            let start = Instant::now();
            let rep = pushforward_check(&real, functor, p)?;
            let label = format!("{} / pushforward {} p={p}", entry.name, rep.functor);
            let detail = format!(
                "case {}: total {:?} vs minors {:?}{}",
                rep.case,
                rep.h_total,
                rep.h_minors,
                if rep.h0_only { " (h⁰ only)" } else { "" }
            );
            let expression = format!("pushforward {} p={p}", rep.functor);
            let dims = rep.h_total.clone();
            cases.push(finish_case(
                entry, field, label, &expression, rep.ok, dims, detail, None, start,
            ));
        }
    }
    Ok(cases)
}

/// The one-component dichotomy: over every ordered set partition of the
/// first n−1 elements, merging the last element into a block makes it
/// neither loop nor coloop for exactly one block when it is neither in the
/// matroid itself, and for no block otherwise.
fn one_component_cases(entry: &CorpusEntry, field: Field) -> Result<Vec<CaseReport>> {
    let mut cases = Vec::new();
    let Some(real) = realize_filtered(entry, field)? else {
        return Ok(cases);
    };
    let start = Instant::now();
    let m = real.matroid();
    let last = real.n() - 1;
    let expected = usize::from(!m.is_loop(last) && !m.is_coloop(last));
    let partitions = enumerate_partitions(real.n() - 1)?;
    let mut ok = true;
    let mut bad = None;
    for f in &partitions {
        let comps = nonconstant_components(&real, f)?;
        if comps.len() != expected {
            ok = false;
            bad = Some(format!(
                "partition {:?} gave {} nonconstant blocks, expected {expected}",
                f.blocks(),
                comps.len()
            ));
            break;
        }
    }
    let detail = bad.unwrap_or_else(|| {
        format!(
            "{} partitions, {expected} nonconstant block(s) each",
            partitions.len()
        )
    });
    cases.push(finish_case(
        entry,
        field,
        format!("{} / one-component", entry.name),
        "nonconstant_components",
        ok,
        vec![expected],
        detail,
        None,
        start,
    ));
    Ok(cases)
}

/// The two-chart fiber model: computed cohomology equals the case-formula
/// prediction for both bundles and both functors up to degree four, and the
/// splitting types match the case table.
fn p1_cases(entry: &CorpusEntry, field: Field) -> Result<Vec<CaseReport>> {
    let mut cases = Vec::new();
    if entry.ground < 2 {
        return Ok(cases);
    }
    let Some(real) = realize_filtered(entry, field)? else {
        return Ok(cases);
    };
    if real.dim() > 3 {
        return Ok(cases);
    }
    for bundle in [
        P1Bundle::Sub,
        P1Bundle::Quot,
        P1Bundle::LineSub,
        P1Bundle::LineQuot,
    ] {
        let start = Instant::now();
        let rep = splitting_report(&real, bundle)?;
        let ok = rep.degrees == rep.expected;
        let detail = format!("degrees {:?}, case table {:?}", rep.degrees, rep.expected);
        cases.push(finish_case(
            entry,
            field,
            format!("{} / splitting {:?}", entry.name, bundle),
            &format!("splitting {bundle:?}"),
            ok,
            vec![],
            detail,
            None,
            start,
        ));
    }
    for functor in [PowerKind::Wedge, PowerKind::Sym] {
        for bundle in [P1Bundle::Sub, P1Bundle::Quot] {
            for p in 0..=4 {
                let start = Instant::now();
                let rep = p1_report(&real, functor, p, bundle)?;
                let detail = format!(
                    "computed (h⁰, h¹) = {:?}, predicted {:?}",
                    rep.computed, rep.predicted
                );
                let label = format!(
                    "{} / p1 {} {:?} p={p}",
                    entry.name, rep.functor, rep.bundle
                );
                let expression = format!("p1 {} {:?} p={p}", rep.functor, rep.bundle);
                cases.push(finish_case(
                    entry,
                    field,
                    label,
                    &expression,
                    rep.matches,
                    vec![rep.computed.0, rep.computed.1],
                    detail,
                    None,
                    start,
                ));
            }
        }
    }
    Ok(cases)
}

/// Log-canonical section counts on the wonderful compactification against
/// the broken-circuit-free basis count, for loopless entries.
fn log_canonical_cases(entry: &CorpusEntry, field: Field) -> Result<Vec<CaseReport>> {
    let mut cases = Vec::new();
    let Some(real) = realize_filtered(entry, field)? else {
        return Ok(cases);
    };
    if real.dim() == 0 || !real.matroid().loops().is_empty() {
        return Ok(cases);
    }
    let start = Instant::now();
    let rep = log_canonical_cohomology(&real)?;
    let detail = format!(
        "h⁰ = {}, broken-circuit-free count {}, exact below top: {}",
        rep.h0, rep.expected, rep.exact_below_top
    );
    cases.push(finish_case(
        entry,
        field,
        format!("{} / log-canonical", entry.name),
        "log-canonical sections",
        rep.matches,
        rep.h.clone(),
        detail,
        None,
        start,
    ));
    Ok(cases)
}

/// Codimension-one subspaces of an entry used as the smaller half of a flag:
/// the span of all but the last basis row, and the first coordinate
/// hyperplane section that drops the dimension by exactly one.
fn codim_one_flags(real: &Realization) -> Vec<(String, Realization)> {
    let field = real.field();
    let n = real.n();
    let r = real.dim();
    let mut flags = Vec::new();
    if r == 0 {
        return flags;
    }

    let rows: Vec<Vec<K>> = (0..r - 1)
        .map(|i| real.basis_matrix().row(i).to_vec())
        .collect();
    let span = Subspace::from_rows(field, n, rows);
    if span.dim() == r - 1 {
        flags.push(("dropped-row".to_string(), Realization::new(span)));
    }

    for e in 0..n {
        let hyper_rows: Vec<Vec<K>> = (0..n)
            .filter(|&j| j != e)
            .map(|j| {
                let mut row = vec![field.zero(); n];
                row[j] = field.one();
                row
            })
            .collect();
        let hyper = Subspace::from_rows(field, n, hyper_rows);
        let cut = real
            .space()
            .intersect(&hyper)
            .expect("coordinate hyperplane lives in the same ambient space");
        if cut.dim() == r - 1 {
            flags.push((format!("hyperplane-{e}"), Realization::new(cut)));
            break;
        }
    }
    flags
}

/// Immaculateness of the comparison line bundle over codimension-one flags
/// built inside each loopless entry.
fn immaculate_cases(entry: &CorpusEntry, field: Field) -> Result<Vec<CaseReport>> {
    let mut cases = Vec::new();
    let Some(real) = realize_filtered(entry, field)? else {
        return Ok(cases);
    };
    if real.dim() == 0 || !real.matroid().loops().is_empty() {
        return Ok(cases);
    }
    for (kind, small) in codim_one_flags(&real) {
        let start = Instant::now();
        let rep = immaculate_check(&small, &real)?;
        let detail = format!(
            "smaller matroid has {} loop(s); immaculate: {} (expected {}), h⁰ = {} (expected {})",
            rep.small_loops, rep.immaculate, rep.expected_immaculate, rep.h0, rep.expected_h0
        );
        let dims = rep.terms.iter().map(|t| t.h0).collect();
        cases.push(finish_case(
            entry,
            field,
            format!("{} / immaculate {kind}", entry.name),
            &format!("immaculate {kind}"),
            rep.matches,
            dims,
            detail,
            None,
            start,
        ));
    }
    Ok(cases)
}

/// Structure-sheaf and determinant-twist checks for connected loopless
/// entries: h^{>0} vanishes for both, and restriction of determinant
/// sections is onto the broken-circuit-free count.
fn ideal_sheaf_cases(entry: &CorpusEntry, field: Field) -> Result<Vec<CaseReport>> {
    let mut cases = Vec::new();
    let Some(real) = realize_filtered(entry, field)? else {
        return Ok(cases);
    };
    let m = real.matroid();
    if real.dim() == 0 || !m.loops().is_empty() || !m.is_connected() {
        return Ok(cases);
    }
    let start = Instant::now();
    let rep = ideal_sheaf_check(&real)?;
    let detail = format!(
        "structure h = {:?}; twisted sections {} of expected {}, ambient determinant sections {} \
         over {} bases",
        rep.structure_h, rep.twist_h[0], rep.expected_twist_sections, rep.det_sections, rep.bases
    );
    cases.push(finish_case(
        entry,
        field,
        format!("{} / ideal-sheaf", entry.name),
        "ideal-sheaf restriction",
        rep.matches,
        rep.twist_h.clone(),
        detail,
        None,
        start,
    ));
    Ok(cases)
}

/// Generating-function identities on every matroid up to eight elements:
/// both Tutte routes agree, all exterior-power routes agree, and the
/// broken-circuit-free count equals T(1,0) equals the log-canonical number
/// for every element order.
fn gf_cases(entry: &CorpusEntry) -> Result<Vec<CaseReport>> {
    let real = entry.realization()?;
    let m = real.matroid();
    let field = real.field();
    let start = Instant::now();

    let t_rec = tutte(&m, TutteRoute::Recursion);
    let t_cn = tutte(&m, TutteRoute::CorankNullity);
    let tutte_ok = t_rec == t_cn;

    let s_ok = ext_s_gf(&m, GfRoute::Closed) == ext_s_gf(&m, GfRoute::Recursion);
    let q_span = ext_q_gf(&m, ExtQRoute::SpanningEnum)?;
    let q_ok = q_span == ext_q_gf(&m, ExtQRoute::Recursion)?
        && q_span == ext_q_gf(&m, ExtQRoute::Tutte)?;

    let nbc = nbc_count(&m);
    let t10 = t_rec.eval(&1.into(), &0.into());
    let log = log_canonical_number(&m);
    let order: Vec<usize> = (0..m.n()).rev().collect();
    let nbc_ok = nbc == t10 && nbc == log && nbc == nbc_count_with_order(&m, &order);

    let ok = tutte_ok && s_ok && q_ok && nbc_ok;
    let detail = format!(
        "tutte routes agree: {tutte_ok}; exterior routes agree: S {s_ok}, Q {q_ok}; \
         broken-circuit-free {nbc} = T(1,0) {t10} = log-canonical {log}: {nbc_ok}"
    );
    Ok(vec![finish_case(
        entry,
        field,
        format!("{} / gf-identities", entry.name),
        "generating-function identities",
        ok,
        vec![],
        detail,
        None,
        start,
    )])
}
