//! The acceptance gate.
//!
//! Twelve numbered criteria cover the library end to end: closed-form
//! cohomology of exterior and symmetric powers of the tautological bundles,
//! characteristic independence, the pushforward recursion, fiber
//! combinatorics of the forgetful map, the P¹ model, the global-section
//! complex on the wonderful compactification, immaculate flags, ideal-sheaf
//! vanishing, generating-function identities, and the signed
//! Euler-characteristic report.  Each test prints exactly one
//! `acceptance NN [PASS|FAIL]` line straight to the real stderr so the
//! verdicts survive the harness's output capture, then fails the build on
//! any violated criterion.  Criterion 12 is report-only by design: its
//! sign findings are logged, never enforced.

use std::collections::BTreeSet;
use std::io::Write as _;
use std::sync::OnceLock;
use std::time::Instant;

use num_bigint::BigInt;

use tautcoh_core::bundle::parse_expr;
use tautcoh_core::cech::{pushforward_check, CohomologyReport, Engine, PushFunctor};
use tautcoh_core::corpus::{default_corpus, realize_rows, Corpus};
use tautcoh_core::fan::{enumerate_partitions, nonconstant_components};
use tautcoh_core::gf::{
    ext_q_gf, ext_s_gf, log_canonical_number, nbc_count, nbc_count_with_order, sym_q_gf, tutte,
    ExtQRoute, GfRoute, TutteRoute,
};
use tautcoh_core::matrix::{PowerKind, Subspace};
use tautcoh_core::matroid::Realization;
use tautcoh_core::p1::{p1_report, splitting_report, P1Bundle};
use tautcoh_core::scalar::{Field, K};
use tautcoh_core::wonderful::{
    ideal_sheaf_check, immaculate_check, log_canonical_cohomology, speyer_chi,
};

/// Write a line to the real stderr, bypassing the harness capture.
fn announce(line: &str) {
    let stderr = std::io::stderr();
    let mut lock = stderr.lock();
    let _ = writeln!(lock, "{line}");
}

/// Print the one verdict line for a criterion and fail the test on FAIL.
fn verdict(idx: usize, failures: &[String], detail: &str) {
    if failures.is_empty() {
        announce(&format!("acceptance {idx:02} [PASS] {detail}"));
    } else {
        let summary = failures.join("; ");
        announce(&format!("acceptance {idx:02} [FAIL] {summary}"));
        panic!("acceptance criterion {idx} failed:\n{}", failures.join("\n"));
    }
}

fn binom(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    let mut v: usize = 1;
    for i in 0..k {
        v = v * (n - i) / (i + 1);
    }
    v
}

fn corpus() -> &'static Corpus {
    static CORPUS: OnceLock<Corpus> = OnceLock::new();
    CORPUS.get_or_init(default_corpus)
}

/// The closed-form table pass shared by criteria 1–4: for every corpus
/// realization on at most four elements, the full cohomology tables of
/// ∧^pS, ∧^pQ (p ≤ n) and Sym^pQ (p ≤ 4) over the entry's home field,
/// with per-bundle wall times for the exterior-S timing bounds.
struct EntryTables {
    name: String,
    n: usize,
    coloops: usize,
    /// Dense coefficients of the spanning-set polynomial.
    spanning: Vec<BigInt>,
    /// First five coefficients of the symmetric-power section series.
    sym_expected: Vec<BigInt>,
    ext_s: Vec<CohomologyReport>,
    ext_s_secs: Vec<f64>,
    ext_q: Vec<CohomologyReport>,
    sym_q: Vec<CohomologyReport>,
}

fn tables() -> &'static [EntryTables] {
    static TABLES: OnceLock<Vec<EntryTables>> = OnceLock::new();
    TABLES.get_or_init(|| {
        let mut out = Vec::new();
        for entry in corpus().up_to(4) {
            let started = Instant::now();
            let real = entry
                .realization()
                .unwrap_or_else(|e| panic!("corpus entry {}: {e}", entry.name));
            let m = real.matroid();
            let n = real.n();
            let mut engine = Engine::new(&real, None)
                .unwrap_or_else(|e| panic!("engine for {}: {e}", entry.name));
            let mut ext_s = Vec::new();
            let mut ext_s_secs = Vec::new();
            let mut ext_q = Vec::new();
            let mut sym_q = Vec::new();
            for p in 0..=n {
                let expr = parse_expr(&format!("wedge({p}, S)")).expect("exterior-S expression");
                let t = Instant::now();
                let rep = engine
                    .report(&expr)
                    .unwrap_or_else(|e| panic!("∧^{p}S on {}: {e}", entry.name));
                ext_s_secs.push(t.elapsed().as_secs_f64());
                ext_s.push(rep);
                let expr = parse_expr(&format!("wedge({p}, Q)")).expect("exterior-Q expression");
                let rep = engine
                    .report(&expr)
                    .unwrap_or_else(|e| panic!("∧^{p}Q on {}: {e}", entry.name));
                ext_q.push(rep);
            }
            for p in 0..=4usize {
                let expr = parse_expr(&format!("sym({p}, Q)")).expect("symmetric-Q expression");
                let rep = engine
                    .report(&expr)
                    .unwrap_or_else(|e| panic!("Sym^{p}Q on {}: {e}", entry.name));
                sym_q.push(rep);
            }
            announce(&format!(
                "acceptance tables: {} ({} bundles) in {:.1}s",
                entry.name,
                2 * (n + 1) + 5,
                started.elapsed().as_secs_f64()
            ));
            out.push(EntryTables {
                name: entry.name.clone(),
                n,
                coloops: m.coloops().len(),
                spanning: ext_q_gf(&m, ExtQRoute::SpanningEnum)
                    .expect("spanning polynomial")
                    .dense(),
                sym_expected: sym_q_gf(&m, 5).coeffs().to_vec(),
                ext_s,
                ext_s_secs,
                ext_q,
                sym_q,
            });
        }
        out
    })
}

#[test]
fn criterion_01_exterior_sub_vanishing_and_coloop_polynomial() {
    let mut failures = Vec::new();
    let mut bundles = 0usize;
    let mut slow3 = 0.0f64;
    let mut slow4 = 0.0f64;
    for t in tables() {
        for p in 0..=t.n {
            bundles += 1;
            let rep = &t.ext_s[p];
            if !rep.higher_vanish() {
                failures.push(format!("{}: ∧^{p}S has higher cohomology {:?}", t.name, rep.h));
            }
            let expected = binom(t.coloops, p);
            if rep.h[0] != expected {
                failures.push(format!(
                    "{}: h⁰(∧^{p}S) = {} but the coloop polynomial needs {expected}",
                    t.name, rep.h[0]
                ));
            }
            let secs = t.ext_s_secs[p];
            match t.n {
                3 => {
                    slow3 = slow3.max(secs);
                    if secs >= 1.0 {
                        failures.push(format!(
                            "{}: ∧^{p}S took {secs:.2}s; the three-element bound is 1s",
                            t.name
                        ));
                    }
                }
                4 => {
                    slow4 = slow4.max(secs);
                    if secs >= 300.0 {
                        failures.push(format!(
                            "{}: ∧^{p}S took {secs:.1}s; the four-element bound is 300s",
                            t.name
                        ));
                    }
                }
                _ => {}
            }
        }
    }
    verdict(
        1,
        &failures,
        &format!(
            "∧^pS has no higher cohomology and Σ h⁰uᵖ = (u+1)^#coloops on {bundles} bundles \
             ({} realizations); slowest bundle {slow3:.2}s at n=3, {slow4:.1}s at n=4",
            tables().len()
        ),
    );
}

#[test]
fn criterion_02_exterior_quot_spanning_polynomial() {
    let mut failures = Vec::new();
    let mut bundles = 0usize;
    for t in tables() {
        for p in 0..=t.n {
            bundles += 1;
            let rep = &t.ext_q[p];
            if !rep.higher_vanish() {
                failures.push(format!("{}: ∧^{p}Q has higher cohomology {:?}", t.name, rep.h));
            }
            let expected = t.spanning.get(p).cloned().unwrap_or_default();
            if BigInt::from(rep.h[0]) != expected {
                failures.push(format!(
                    "{}: h⁰(∧^{p}Q) = {} but the spanning-set polynomial needs {expected}",
                    t.name, rep.h[0]
                ));
            }
        }
    }
    // The pinned value: the rank-2 uniform matroid on four elements has
    // spanning polynomial 6u² + 4u + 1.
    let u24 = tables().iter().find(|t| t.name == "u_2_4").expect("u_2_4 in corpus");
    if u24.spanning != vec![BigInt::from(1), BigInt::from(4), BigInt::from(6)] {
        failures.push(format!("u_2_4 spanning polynomial is {:?}", u24.spanning));
    }
    let h: Vec<usize> = (0..=2).map(|p| u24.ext_q[p].h[0]).collect();
    if h != vec![1, 4, 6] {
        failures.push(format!("u_2_4 exterior-Q sections are {h:?}, not [1, 4, 6]"));
    }
    verdict(
        2,
        &failures,
        &format!(
            "∧^pQ has no higher cohomology and Σ h⁰uᵖ is the spanning-set polynomial on \
             {bundles} bundles; u_2_4 gives 6u²+4u+1"
        ),
    );
}

#[test]
fn criterion_03_symmetric_quot_geometric_series() {
    let mut failures = Vec::new();
    let mut bundles = 0usize;
    for t in tables() {
        for p in 0..=4usize {
            bundles += 1;
            let rep = &t.sym_q[p];
            if !rep.higher_vanish() {
                failures.push(format!(
                    "{}: Sym^{p}Q has higher cohomology {:?}",
                    t.name, rep.h
                ));
            }
            if BigInt::from(rep.h[0]) != t.sym_expected[p] {
                failures.push(format!(
                    "{}: h⁰(Sym^{p}Q) = {} but (1−u)^(−(n−#coloops)) needs {}",
                    t.name, rep.h[0], t.sym_expected[p]
                ));
            }
        }
    }
    let u12 = tables().iter().find(|t| t.name == "u_1_2").expect("u_1_2 in corpus");
    let h: Vec<usize> = (0..=2).map(|p| u12.sym_q[p].h[0]).collect();
    if h != vec![1, 2, 3] {
        failures.push(format!("u_1_2 symmetric sections are {h:?}, not [1, 2, 3]"));
    }
    verdict(
        3,
        &failures,
        &format!(
            "Sym^pQ (p ≤ 4) has no higher cohomology and h⁰ follows \
             (1−u)^(−(n−#coloops)) on {bundles} bundles; u_1_2 gives [1, 2, 3]"
        ),
    );
}

/// The three h-vector families of one realization, for cross-characteristic
/// comparison.
fn dim_tables(real: &Realization) -> tautcoh_core::error::Result<Vec<Vec<usize>>> {
    let mut engine = Engine::new(real, None)?;
    let mut out = Vec::new();
    for p in 0..=real.n() {
        out.push(engine.report(&parse_expr(&format!("wedge({p}, S)"))?)?.h);
        out.push(engine.report(&parse_expr(&format!("wedge({p}, Q)"))?)?.h);
    }
    for p in 0..=4usize {
        out.push(engine.report(&parse_expr(&format!("sym({p}, Q)"))?)?.h);
    }
    Ok(out)
}

#[test]
fn criterion_04_characteristic_independence() {
    let mut failures = Vec::new();
    let mut compared = 0usize;
    let mut skipped = 0usize;
    let shared: std::collections::BTreeMap<&str, &EntryTables> =
        tables().iter().map(|t| (t.name.as_str(), t)).collect();
    for entry in corpus().up_to(4) {
        let base = match realize_rows(Field::Q, &entry.rows, entry.ground) {
            Ok(r) => r,
            Err(e) => {
                failures.push(format!("{}: rational realization failed: {e}", entry.name));
                continue;
            }
        };
        let base_matroid = base.matroid();
        let mut base_tables: Option<Vec<Vec<usize>>> = None;
        for p in [2u64, 3u64] {
            let modular = match realize_rows(Field::Fp(p), &entry.rows, entry.ground) {
                Ok(r) => r,
                Err(e) => {
                    failures.push(format!("{}: mod-{p} realization failed: {e}", entry.name));
                    continue;
                }
            };
            if modular.matroid() != base_matroid {
                skipped += 1;
                continue;
            }
            if base_tables.is_none() {
                // Reuse the shared pass when the entry's home field is ℚ.
                let fresh = if entry.field == "Q" {
                    let t = shared[entry.name.as_str()];
                    let mut v = Vec::new();
                    for p in 0..=t.n {
                        v.push(t.ext_s[p].h.clone());
                        v.push(t.ext_q[p].h.clone());
                    }
                    for p in 0..=4usize {
                        v.push(t.sym_q[p].h.clone());
                    }
                    v
                } else {
                    match dim_tables(&base) {
                        Ok(v) => v,
                        Err(e) => {
                            failures.push(format!("{}: rational tables: {e}", entry.name));
                            continue;
                        }
                    }
                };
                base_tables = Some(fresh);
            }
            let base_ref = base_tables.as_ref().expect("base tables just filled");
            match dim_tables(&modular) {
                Ok(modular_tables) => {
                    compared += 1;
                    if &modular_tables != base_ref {
                        failures.push(format!(
                            "{}: dimension tables differ between ℚ and 𝔽_{p}",
                            entry.name
                        ));
                    }
                }
                Err(e) => failures.push(format!("{}: mod-{p} tables: {e}", entry.name)),
            }
        }
    }
    verdict(
        4,
        &failures,
        &format!(
            "identical dimension tables over ℚ, 𝔽₂, 𝔽₃ whenever the matroid survives \
             reduction: {compared} field comparisons, {skipped} reductions skipped \
             for a changed matroid"
        ),
    );
}

#[test]
fn criterion_05_pushforward_recursion() {
    let mut failures = Vec::new();
    let mut checks = 0usize;
    let mut branches: BTreeSet<&'static str> = BTreeSet::new();
    for entry in corpus().up_to(4) {
        if entry.ground < 2 {
            continue;
        }
        let real = entry
            .realization()
            .unwrap_or_else(|e| panic!("corpus entry {}: {e}", entry.name));
        let m = real.matroid();
        let last = real.n() - 1;
        branches.insert(if m.is_loop(last) {
            "loop"
        } else if m.is_coloop(last) {
            "coloop"
        } else {
            "neither"
        });
        for functor in [
            PushFunctor::WedgeS,
            PushFunctor::WedgeQ,
            PushFunctor::SymQ,
            PushFunctor::SymS,
        ] {
            for p in 0..=3usize {
                match pushforward_check(&real, functor, p) {
                    Ok(rep) => {
                        checks += 1;
                        if !rep.ok {
                            failures.push(format!(
                                "{}: {} at p={p}: parent {:?} vs minors {:?}",
                                entry.name, rep.functor, rep.h_total, rep.h_minors
                            ));
                        }
                    }
                    Err(e) => failures.push(format!("{}: {functor:?} p={p}: {e}", entry.name)),
                }
            }
        }
    }
    if branches.len() != 3 {
        failures.push(format!("only saw branches {branches:?}"));
    }
    verdict(
        5,
        &failures,
        &format!(
            "deletion–contraction pushforward identities hold in {checks} checks across \
             loop, coloop, and generic branches (exterior and symmetric, p ≤ 3)"
        ),
    );
}

#[test]
fn criterion_06_fiber_one_component() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut realizations = 0usize;
    let mut partitions = 0usize;
    for entry in corpus().up_to(5) {
        let real = entry
            .realization()
            .unwrap_or_else(|e| panic!("corpus entry {}: {e}", entry.name));
        let m = real.matroid();
        let last = real.n() - 1;
        let expected = usize::from(!m.is_loop(last) && !m.is_coloop(last));
        let fans = enumerate_partitions(real.n() - 1).expect("fan enumeration");
        for f in &fans {
            match nonconstant_components(&real, f) {
                Ok(comps) => {
                    partitions += 1;
                    if comps.len() != expected {
                        failures.push(format!(
                            "{}: partition {:?} has {} nonconstant blocks, expected {expected}",
                            entry.name,
                            f.blocks(),
                            comps.len()
                        ));
                    }
                }
                Err(e) => failures.push(format!("{}: {e}", entry.name)),
            }
        }
        realizations += 1;
    }
    let secs = started.elapsed().as_secs_f64();
    if secs >= 10.0 {
        failures.push(format!("took {secs:.1}s; the bound is 10s"));
    }
    verdict(
        6,
        &failures,
        &format!(
            "exactly one nonconstant fiber block iff the distinguished element is neither \
             loop nor coloop: {realizations} realizations, {partitions} ordered set \
             partitions, {secs:.2}s"
        ),
    );
}

#[test]
fn criterion_07_p1_model() {
    let mut failures = Vec::new();
    let mut checks = 0usize;
    let mut cases: BTreeSet<&'static str> = BTreeSet::new();
    for entry in corpus().up_to(5) {
        if entry.ground < 2 {
            continue;
        }
        let real = entry
            .realization()
            .unwrap_or_else(|e| panic!("corpus entry {}: {e}", entry.name));
        if real.dim() > 3 {
            continue;
        }
        let m = real.matroid();
        let last = real.n() - 1;
        cases.insert(if m.is_loop(last) {
            "loop"
        } else if m.is_coloop(last) {
            "coloop"
        } else {
            "neither"
        });
        for bundle in [
            P1Bundle::Sub,
            P1Bundle::Quot,
            P1Bundle::LineSub,
            P1Bundle::LineQuot,
        ] {
            match splitting_report(&real, bundle) {
                Ok(rep) => {
                    checks += 1;
                    if rep.degrees != rep.expected {
                        failures.push(format!(
                            "{}: {bundle:?} splits as {:?}, case table says {:?}",
                            entry.name, rep.degrees, rep.expected
                        ));
                    }
                }
                Err(e) => failures.push(format!("{}: {bundle:?} splitting: {e}", entry.name)),
            }
        }
        for functor in [PowerKind::Wedge, PowerKind::Sym] {
            for bundle in [P1Bundle::Sub, P1Bundle::Quot] {
                for p in 0..=4usize {
                    match p1_report(&real, functor, p, bundle) {
                        Ok(rep) => {
                            checks += 1;
                            if !rep.matches {
                                failures.push(format!(
                                    "{}: {} of {bundle:?} at p={p}: computed {:?}, \
                                     predicted {:?}",
                                    entry.name, rep.functor, rep.computed, rep.predicted
                                ));
                            }
                        }
                        Err(e) => failures.push(format!(
                            "{}: {functor:?} {bundle:?} p={p}: {e}",
                            entry.name
                        )),
                    }
                }
            }
        }
    }
    if cases.len() != 3 {
        failures.push(format!("only saw cases {cases:?}"));
    }
    verdict(
        7,
        &failures,
        &format!(
            "two-chart model: splitting types match the loop/coloop case table and functor \
             powers match predictions in {checks} checks (p ≤ 4, dim ≤ 3)"
        ),
    );
}

#[test]
fn criterion_08_global_section_complex() {
    let mut failures = Vec::new();
    let mut checked = 0usize;
    for entry in corpus().up_to(4) {
        let real = entry
            .realization()
            .unwrap_or_else(|e| panic!("corpus entry {}: {e}", entry.name));
        let m = real.matroid();
        if !m.loops().is_empty() {
            continue;
        }
        match log_canonical_cohomology(&real) {
            Ok(rep) => {
                checked += 1;
                if !rep.exact_below_top {
                    failures.push(format!(
                        "{}: section complex not exact below its top",
                        entry.name
                    ));
                }
                if !rep.matches {
                    failures.push(format!(
                        "{}: h⁰ = {} but the broken-circuit count is {}",
                        entry.name, rep.h0, rep.expected
                    ));
                }
                // Independent count: the alternating sum over spanning sets.
                let r = m.rank();
                let mut alternating: i64 = 0;
                for mask in 0u32..(1 << real.n()) {
                    if m.rank_of(mask) == r {
                        let size = mask.count_ones() as usize;
                        alternating += if (size - r) % 2 == 0 { 1 } else { -1 };
                    }
                }
                if rep.h0 as i64 != alternating {
                    failures.push(format!(
                        "{}: h⁰ = {} but Σ over spanning sets of (−1)^(|S|−r) is {alternating}",
                        entry.name, rep.h0
                    ));
                }
                if entry.name == "k3" && rep.h0 != 2 {
                    failures.push(format!("k3 log-canonical sections = {}, not 2", rep.h0));
                }
            }
            Err(e) => failures.push(format!("{}: {e}", entry.name)),
        }
    }
    verdict(
        8,
        &failures,
        &format!(
            "global-section complex exact in middle degrees with top cokernel equal to the \
             alternating spanning-set sum (= broken-circuit-free count) on {checked} loopless \
             realizations; k3 gives 2"
        ),
    );
}

/// The two deterministic codimension-one flags inside a realization: the
/// span of all basis rows but the last, and the first coordinate-hyperplane
/// section that drops the dimension by exactly one.
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
            .expect("coordinate hyperplane intersection");
        if cut.dim() == r - 1 {
            flags.push((format!("hyperplane-{e}"), Realization::new(cut)));
            break;
        }
    }
    flags
}

#[test]
fn criterion_09_immaculate_flags() {
    let mut failures = Vec::new();
    let mut immaculate_flags = 0usize;
    let mut loop_flags = 0usize;
    for entry in corpus().up_to(4) {
        let real = match realize_rows(Field::Q, &entry.rows, entry.ground) {
            Ok(r) => r,
            Err(e) => {
                failures.push(format!("{}: rational realization failed: {e}", entry.name));
                continue;
            }
        };
        if !real.matroid().loops().is_empty() {
            continue;
        }
        for (label, small) in codim_one_flags(&real) {
            match immaculate_check(&small, &real) {
                Ok(rep) => {
                    if !rep.matches {
                        failures.push(format!(
                            "{} {label}: verdict immaculate={} h⁰={} disagrees with the \
                             prediction immaculate={} h⁰={}",
                            entry.name,
                            rep.immaculate,
                            rep.h0,
                            rep.expected_immaculate,
                            rep.expected_h0
                        ));
                        continue;
                    }
                    if rep.small_loops == 0 {
                        immaculate_flags += 1;
                        if !rep.immaculate {
                            failures.push(format!(
                                "{} {label}: loopless flag is not immaculate: h = {:?}",
                                entry.name, rep.restricted_h
                            ));
                        }
                    } else {
                        loop_flags += 1;
                        if rep.h0 != 1 {
                            failures.push(format!(
                                "{} {label}: flag with loops has h⁰ = {}, not 1",
                                entry.name, rep.h0
                            ));
                        }
                    }
                }
                Err(e) => failures.push(format!("{} {label}: {e}", entry.name)),
            }
        }
    }
    if immaculate_flags == 0 || loop_flags == 0 {
        failures.push(format!(
            "degenerate coverage: {immaculate_flags} loopless flags, {loop_flags} loop flags"
        ));
    }
    verdict(
        9,
        &failures,
        &format!(
            "comparison line bundle of a codimension-one flag: immaculate on {immaculate_flags} \
             loopless flags, h⁰ = 1 on {loop_flags} flags with loops"
        ),
    );
}

#[test]
fn criterion_10_structure_sheaf_and_twist() {
    let mut failures = Vec::new();
    let mut checked = 0usize;
    for entry in corpus().up_to(4) {
        let real = entry
            .realization()
            .unwrap_or_else(|e| panic!("corpus entry {}: {e}", entry.name));
        let m = real.matroid();
        if real.dim() == 0 || !m.loops().is_empty() || !m.is_connected() {
            continue;
        }
        match ideal_sheaf_check(&real) {
            Ok(rep) => {
                checked += 1;
                if !rep.structure_matches {
                    failures.push(format!(
                        "{}: structure sheaf has h = {:?}",
                        entry.name, rep.structure_h
                    ));
                }
                if rep.twist_h.iter().skip(1).any(|&h| h != 0) {
                    failures.push(format!(
                        "{}: determinant twist has higher cohomology {:?}",
                        entry.name, rep.twist_h
                    ));
                }
                if !rep.restriction_surjective {
                    failures.push(format!(
                        "{}: restriction of twist sections is not surjective \
                         ({} ambient sections, {} restricted, {} expected)",
                        entry.name, rep.det_sections, rep.twist_h[0], rep.expected_twist_sections
                    ));
                }
                if !rep.matches {
                    failures.push(format!("{}: ideal-sheaf check failed", entry.name));
                }
            }
            Err(e) => failures.push(format!("{}: {e}", entry.name)),
        }
    }
    verdict(
        10,
        &failures,
        &format!(
            "structure sheaf and its determinant twist have no higher cohomology and twist \
             sections restrict onto the compactification on {checked} connected loopless \
             realizations"
        ),
    );
}

#[test]
fn criterion_11_generating_function_identities() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let mut matroids = 0usize;
    for entry in corpus().up_to(8) {
        let m = match entry.realization() {
            Ok(r) => r.matroid(),
            Err(e) => {
                failures.push(format!("{}: {e}", entry.name));
                continue;
            }
        };
        matroids += 1;
        let by_recursion = tutte(&m, TutteRoute::Recursion);
        let by_corank = tutte(&m, TutteRoute::CorankNullity);
        if by_recursion != by_corank {
            failures.push(format!("{}: Tutte routes disagree", entry.name));
        }
        if ext_s_gf(&m, GfRoute::Closed) != ext_s_gf(&m, GfRoute::Recursion) {
            failures.push(format!("{}: exterior-S routes disagree", entry.name));
        }
        let spanning = match ext_q_gf(&m, ExtQRoute::SpanningEnum) {
            Ok(p) => p,
            Err(e) => {
                failures.push(format!("{}: {e}", entry.name));
                continue;
            }
        };
        for route in [ExtQRoute::Recursion, ExtQRoute::Tutte] {
            match ext_q_gf(&m, route) {
                Ok(p) => {
                    if p != spanning {
                        failures.push(format!("{}: exterior-Q routes disagree", entry.name));
                    }
                }
                Err(e) => failures.push(format!("{}: {e}", entry.name)),
            }
        }
        let nbc = nbc_count(&m);
        let at_one_zero = by_recursion.eval(&BigInt::from(1), &BigInt::from(0));
        if nbc != at_one_zero {
            failures.push(format!(
                "{}: broken-circuit count {nbc} vs Tutte(1,0) = {at_one_zero}",
                entry.name
            ));
        }
        if nbc != log_canonical_number(&m) {
            failures.push(format!("{}: broken-circuit count differs from the \
                 log-canonical number", entry.name));
        }
        let reversed: Vec<usize> = (0..m.n()).rev().collect();
        if nbc != nbc_count_with_order(&m, &reversed) {
            failures.push(format!(
                "{}: broken-circuit count depends on the element order",
                entry.name
            ));
        }
    }
    let secs = started.elapsed().as_secs_f64();
    if secs >= 10.0 {
        failures.push(format!("took {secs:.1}s; the bound is 10s"));
    }
    verdict(
        11,
        &failures,
        &format!(
            "Tutte, exterior, broken-circuit, and log-canonical generating-function \
             identities agree on {matroids} matroids in {secs:.2}s"
        ),
    );
}

#[test]
fn criterion_12_signed_euler_characteristic_report() {
    let mut failures = Vec::new();
    let mut findings = Vec::new();
    let mut values = Vec::new();
    for entry in corpus().up_to(4) {
        let real = entry
            .realization()
            .unwrap_or_else(|e| panic!("corpus entry {}: {e}", entry.name));
        let m = real.matroid();
        if real.dim() == 0 || !m.loops().is_empty() || !m.is_connected() {
            continue;
        }
        match speyer_chi(&real) {
            Ok(rep) => {
                values.push(format!("{}:{}", entry.name, rep.signed));
                if !rep.nonnegative {
                    findings.push(format!(
                        "{} over {}: signed Euler characteristic {} is negative",
                        entry.name, entry.field, rep.signed
                    ));
                }
            }
            // The computation itself must succeed; only the sign is free.
            Err(e) => failures.push(format!("{}: {e}", entry.name)),
        }
    }
    for finding in &findings {
        announce(&format!("acceptance 12 FINDING: {finding}"));
    }
    verdict(
        12,
        &failures,
        &format!(
            "report-only: signed Euler characteristic of the boundary-twisted canonical \
             bundle on connected loopless realizations — {} ({} negative)",
            values.join(", "),
            findings.len()
        ),
    );
}
