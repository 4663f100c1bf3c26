//! The rank-one fiber model: tautological bundles on the projective line.
//!
//! A realization L ⊆ k^E with a distinguished last coordinate determines a
//! one-parameter subgroup of the diagonal torus that scales only that
//! coordinate. Spreading the short exact sequence 0 → L → k^E → k^E/L → 0
//! along the closure of its orbit yields equivariant bundles on the
//! projective line: a subbundle and a quotient bundle of the trivial bundle
//! with fiber k^E, together with two line bundles — the quotient of the
//! subbundle by its constant part, and the kernel of the collapse of the
//! quotient bundle onto its constant part.
//!
//! The projective line is covered by two invariant affine charts. Sections
//! over each chart form a graded module presented by a two-step chain of
//! subspaces of k^E: the chart at one fixed point sees the intersection
//! with the deleted coordinate subspace at degree 0 and the whole fiber at
//! degree 1; the chart at the other fixed point sees the intersection with
//! the distinguished axis at degree 1 and the whole fiber at degree 0.
//! Weights are encoded as (m, −m) in the two-element weight lattice so the
//! existing generator-list, subquotient, and block-complex machinery applies
//! unchanged. Exterior and symmetric powers go through induced generator
//! lists; splitting types are recovered by finite differencing of the
//! function t ↦ h⁰(V ⊗ O(t)).

use serde::Serialize;

use crate::cech::complex::BlockComplex;
use crate::cech::context::PermContext;
use crate::cech::value::{power_genlists, restriction_matrix, GenList, Subquotient};
use crate::combinat::{binomial, multiset_count};
use crate::error::{CoreError, Result};
use crate::matrix::{PowerKind, Subspace};
use crate::matroid::Realization;
use crate::scalar::Field;

use std::rc::Rc;

/// Status of the distinguished (last) element in the matroid of L.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum P1Case {
    /// The last coordinate vanishes on L.
    Loop,
    /// The last coordinate axis lies inside L.
    Coloop,
    /// Neither of the degenerate cases.
    Neither,
}

/// The four bundles of the fiber model.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum P1Bundle {
    /// The subbundle with generic fiber L.
    Sub,
    /// The quotient bundle with generic fiber k^E/L.
    Quot,
    /// The line bundle: subbundle modulo its constant part.
    LineSub,
    /// The line bundle: kernel of the quotient bundle onto its constant part.
    LineQuot,
}

impl P1Bundle {
    fn label(self) -> &'static str {
        match self {
            P1Bundle::Sub => "sub",
            P1Bundle::Quot => "quot",
            P1Bundle::LineSub => "line-sub",
            P1Bundle::LineQuot => "line-quot",
        }
    }
}

/// Splitting data of one bundle of the model.
#[derive(Debug, Clone, Serialize)]
pub struct SplittingReport {
    /// Which bundle.
    pub bundle: P1Bundle,
    /// Status of the distinguished element.
    pub case: P1Case,
    /// Rank of the bundle.
    pub rank: usize,
    /// Line-bundle degrees of the splitting, descending.
    pub degrees: Vec<i64>,
    /// Degree of the determinant (sum of the splitting degrees).
    pub det_degree: i64,
    /// Degrees expected from the case analysis.
    pub expected: Vec<i64>,
}

/// Computed versus predicted cohomology of one functor power.
#[derive(Debug, Clone, Serialize)]
pub struct P1CohomologyReport {
    /// Which bundle (only the sub or quotient bundle admits powers here).
    pub bundle: P1Bundle,
    /// "wedge" or "sym".
    pub functor: String,
    /// Functor exponent.
    pub p: usize,
    /// Status of the distinguished element.
    pub case: P1Case,
    /// Čech dimensions (h⁰, h¹) on the two-chart cover.
    pub computed: (usize, usize),
    /// Dimensions from the deletion–contraction case formulas.
    pub predicted: (usize, usize),
    /// Whether the two agree.
    pub matches: bool,
}

/// Caps keeping the model at desk scale.
const MAX_GROUND: usize = 10;
const MAX_POWER: usize = 10;

fn check_caps(real: &Realization, p: usize) -> Result<()> {
    if real.n() > MAX_GROUND {
        return Err(CoreError::SizeCap {
            what: "fiber-model ground set",
            limit: MAX_GROUND,
            got: real.n(),
        });
    }
    if p > MAX_POWER {
        return Err(CoreError::SizeCap {
            what: "fiber-model functor power",
            limit: MAX_POWER,
            got: p,
        });
    }
    Ok(())
}

/// Status of the last element of the ground set in the matroid of L.
pub fn p1_case(real: &Realization) -> P1Case {
    let last = real.n() - 1;
    let m = real.matroid();
    if m.is_loop(last) {
        P1Case::Loop
    } else if m.is_coloop(last) {
        P1Case::Coloop
    } else {
        P1Case::Neither
    }
}

/// The two invariant affine charts of the projective line.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Chart {
    /// Sections survive at degrees at or above their generator weight.
    Plus,
    /// Sections survive at degrees at or below their generator weight.
    Minus,
}

fn deg_weight(m: i64) -> Vec<i64> {
    vec![m, -m]
}

/// Two-step chain generators for the sections of the constant-fiber
/// subbundle attached to `space` over one chart. Each generator carries the
/// degree at which it first becomes regular on that chart.
fn chart_chain(field: Field, space: &Subspace, chart: Chart) -> GenList {
    let n = space.ambient();
    let last = n - 1;
    let (low_support, low_deg, high_deg) = match chart {
        // Regular at the fixed point where the distinguished axis degenerates
        // last: vectors inside the deleted hyperplane extend at degree 0,
        // the rest only from degree 1 on.
        Chart::Plus => {
            let mut s = vec![true; n];
            s[last] = false;
            (s, 0i64, 1i64)
        }
        // The opposite fixed point: the distinguished axis extends up to
        // degree 1, everything else only up to degree 0.
        Chart::Minus => {
            let mut s = vec![false; n];
            s[last] = true;
            (s, 1i64, 0i64)
        }
    };
    let mut gens = Vec::new();
    let mut acc = space.restrict_support(&low_support);
    for r in 0..acc.dim() {
        gens.push((deg_weight(low_deg), acc.basis().row(r).to_vec()));
    }
    for r in 0..space.dim() {
        let row = space.basis().row(r);
        if !acc.contains(row) {
            gens.push((deg_weight(high_deg), row.to_vec()));
            let add = Subspace::from_rows(field, n, vec![row.to_vec()]);
            acc = acc.sum(&add).expect("chain accumulation in one ambient space");
        }
    }
    debug_assert_eq!(acc.dim(), space.dim());
    GenList::new(field, n, gens)
}

/// Generators of the trivial bundle with fiber k^E: coordinate vectors, the
/// distinguished one at degree 1. The same list serves both charts.
fn ambient_chain(field: Field, n: usize) -> GenList {
    let gens = (0..n)
        .map(|i| {
            let mut v = vec![field.zero(); n];
            v[i] = field.one();
            let d = if i == n - 1 { 1 } else { 0 };
            (deg_weight(d), v)
        })
        .collect();
    GenList::new(field, n, gens)
}

/// The same generator list with every degree shifted by `t` (tensoring by
/// the degree-`t` line bundle trivialized on the other chart).
fn shift_degrees(list: &GenList, t: i64) -> GenList {
    let gens = (0..list.len())
        .map(|g| {
            let w = &list.weights()[g];
            (vec![w[0] + t, w[1] - t], list.column(g))
        })
        .collect();
    GenList::new(list.mat().field(), list.ambient(), gens)
}

/// The subspace (image of L under deleting the last coordinate) ⊕ (image of
/// L under restricting to it), inside k^E.
fn deleted_plus_restricted(real: &Realization) -> Subspace {
    let field = real.field();
    let n = real.n();
    let space = real.space();
    let mut rows = Vec::new();
    let mut last_seen = false;
    for r in 0..space.dim() {
        let mut row = space.basis().row(r).to_vec();
        if !row[n - 1].is_zero() {
            last_seen = true;
        }
        row[n - 1] = field.zero();
        rows.push(row);
    }
    if last_seen {
        let mut axis = vec![field.zero(); n];
        axis[n - 1] = field.one();
        rows.push(axis);
    }
    Subspace::from_rows(field, n, rows)
}

/// Generator pair (ambient, relations) presenting one bundle over one chart.
fn bundle_pair(real: &Realization, bundle: P1Bundle, chart: Chart) -> (GenList, GenList) {
    let field = real.field();
    let n = real.n();
    let empty = GenList::new(field, n, Vec::new());
    match bundle {
        P1Bundle::Sub => (chart_chain(field, real.space(), chart), empty),
        P1Bundle::Quot => (ambient_chain(field, n), chart_chain(field, real.space(), chart)),
        P1Bundle::LineSub => {
            let mut hyper = vec![true; n];
            hyper[n - 1] = false;
            let constant = real.space().restrict_support(&hyper);
            (
                chart_chain(field, real.space(), chart),
                chart_chain(field, &constant, chart),
            )
        }
        P1Bundle::LineQuot => {
            let split = deleted_plus_restricted(real);
            (
                chart_chain(field, &split, chart),
                chart_chain(field, real.space(), chart),
            )
        }
    }
}

/// Čech cohomology (h⁰, h¹) of the bundle presented by per-chart generator
/// pairs on the two-chart cover of the projective line.
fn pair_cohomology(
    field: Field,
    plus: &(GenList, GenList),
    minus: &(GenList, GenList),
) -> Result<(usize, usize)> {
    let ctx = PermContext::new(2)?;
    let mut plus_id = ctx.charts()[0];
    let mut minus_id = ctx.charts()[1];
    // The chart whose partition leads with {0} pairs positively with
    // (1, −1): generators survive at degrees at or above their weight.
    if ctx.partition(plus_id).blocks()[0] != vec![0] {
        std::mem::swap(&mut plus_id, &mut minus_id);
    }
    debug_assert_eq!(ctx.partition(plus_id).blocks()[0], vec![0]);
    let zero_id = ctx.zero();

    let window: Vec<i64> = [plus, minus]
        .iter()
        .flat_map(|pair| [&pair.0, &pair.1])
        .flat_map(|list| list.weights().iter().map(|w| w[0]))
        .collect();
    let Some(&lo) = window.iter().min() else {
        return Ok((0, 0));
    };
    let hi = *window.iter().max().expect("nonempty window");

    let value = |pair: &(GenList, GenList), mu: &[i64], cone| -> Result<Subquotient> {
        let part = ctx.partition(cone);
        let am = pair.0.survivor_mask(mu, part);
        let sm = pair.1.survivor_mask(mu, part);
        Subquotient::new(
            field,
            pair.0.ambient(),
            pair.0.selected_rows(&am),
            pair.1.selected_rows(&sm),
        )
    };

    let (mut h0, mut h1) = (0usize, 0usize);
    for m in lo..=hi {
        let mu = deg_weight(m);
        let v_plus = value(plus, &mu, plus_id)?;
        let v_minus = value(minus, &mu, minus_id)?;
        // Over the torus every generator survives; either chart presentation
        // spans the full module there, so the plus-chart one serves.
        let v_zero = value(plus, &mu, zero_id)?;
        if v_plus.dim() == 0 && v_minus.dim() == 0 && v_zero.dim() == 0 {
            continue;
        }
        let mut cx = BlockComplex::new(field, 2);
        let cell_p = cx.add_cell(0, v_plus.dim());
        let cell_m = cx.add_cell(0, v_minus.dim());
        let cell_z = cx.add_cell(1, v_zero.dim());
        cx.add_component(cell_p, cell_z, false, Rc::new(restriction_matrix(&v_plus, &v_zero)?));
        cx.add_component(cell_m, cell_z, true, Rc::new(restriction_matrix(&v_minus, &v_zero)?));
        cx.check_d2()?;
        let h = cx.homology();
        h0 += h[0];
        h1 += h[1];
    }
    Ok((h0, h1))
}

/// Čech cohomology (h⁰, h¹) of a functor power of the sub or quotient
/// bundle, twisted by the degree-`t` line bundle.
fn power_cohomology(
    real: &Realization,
    functor: PowerKind,
    p: usize,
    bundle: P1Bundle,
    t: i64,
) -> Result<(usize, usize)> {
    let field = real.field();
    let build = |chart: Chart| -> (GenList, GenList) {
        let base = bundle_pair(real, bundle, chart);
        let pair = power_genlists(&base.0, &base.1, p, functor);
        if matches!(chart, Chart::Minus) && t != 0 {
            (shift_degrees(&pair.0, t), shift_degrees(&pair.1, t))
        } else {
            pair
        }
    };
    let plus = build(Chart::Plus);
    let minus = build(Chart::Minus);
    pair_cohomology(field, &plus, &minus)
}

/// Čech cohomology (h⁰, h¹) of a functor power of the sub or quotient
/// bundle of the fiber model.
pub fn p1_cohomology(
    real: &Realization,
    functor: PowerKind,
    p: usize,
    bundle: P1Bundle,
) -> Result<(usize, usize)> {
    check_caps(real, p)?;
    if !matches!(bundle, P1Bundle::Sub | P1Bundle::Quot) {
        return Err(CoreError::Input(
            "functor powers apply to the sub or quotient bundle only".into(),
        ));
    }
    power_cohomology(real, functor, p, bundle, 0)
}

/// Dimensions predicted by the deletion–contraction case formulas.
pub fn p1_predicted(
    real: &Realization,
    functor: PowerKind,
    p: usize,
    bundle: P1Bundle,
) -> Result<(usize, usize)> {
    check_caps(real, p)?;
    if !matches!(bundle, P1Bundle::Sub | P1Bundle::Quot) {
        return Err(CoreError::Input(
            "functor powers apply to the sub or quotient bundle only".into(),
        ));
    }
    let n = real.n();
    let r = real.dim();
    let case = p1_case(real);
    // dim of the contraction L/n and the deletion L∖n.
    let contraction = match case {
        P1Case::Loop => r,
        _ => r - 1,
    };
    let deletion = match case {
        P1Case::Coloop => r - 1,
        _ => r,
    };
    let hyper = n - 1; // dim of the deleted coordinate space
    Ok(match (functor, bundle) {
        (PowerKind::Wedge, P1Bundle::Sub) => {
            let fiber = match case {
                P1Case::Coloop => contraction + 1,
                _ => contraction,
            };
            (binomial(fiber, p), 0)
        }
        (PowerKind::Wedge, P1Bundle::Quot) => {
            let h0 = match case {
                P1Case::Loop => binomial(n - contraction, p),
                P1Case::Coloop => binomial(n - contraction - 1, p),
                P1Case::Neither => {
                    let second = if p >= 1 {
                        binomial(hyper - deletion, p - 1)
                    } else {
                        0
                    };
                    binomial(hyper - contraction, p) + second
                }
            };
            (h0, 0)
        }
        (PowerKind::Sym, P1Bundle::Sub) => {
            let fiber = match case {
                P1Case::Coloop => contraction + 1,
                _ => contraction,
            };
            let h1 = match case {
                P1Case::Neither if p >= 2 => (0..=p - 2)
                    .map(|i| (p - 1 - i) * multiset_count(contraction, i))
                    .sum(),
                _ => 0,
            };
            (multiset_count(fiber, p), h1)
        }
        (PowerKind::Sym, P1Bundle::Quot) => {
            let fiber = match case {
                P1Case::Coloop => hyper - contraction,
                _ => hyper - contraction + 1,
            };
            (multiset_count(fiber, p), 0)
        }
        _ => unreachable!("line bundles are rejected above"),
    })
}

/// Compute and compare one functor power of the fiber model.
pub fn p1_report(
    real: &Realization,
    functor: PowerKind,
    p: usize,
    bundle: P1Bundle,
) -> Result<P1CohomologyReport> {
    let computed = p1_cohomology(real, functor, p, bundle)?;
    let predicted = p1_predicted(real, functor, p, bundle)?;
    Ok(P1CohomologyReport {
        bundle,
        functor: match functor {
            PowerKind::Wedge => "wedge".to_string(),
            PowerKind::Sym => "sym".to_string(),
        },
        p,
        case: p1_case(real),
        computed,
        predicted,
        matches: computed == predicted,
    })
}

/// Rank of one bundle of the model (dimension of its generic fiber).
fn bundle_rank(real: &Realization, bundle: P1Bundle) -> usize {
    let r = real.dim();
    let n = real.n();
    match bundle {
        P1Bundle::Sub => r,
        P1Bundle::Quot => n - r,
        P1Bundle::LineSub => {
            let mut hyper = vec![true; n];
            hyper[n - 1] = false;
            r - real.space().restrict_support(&hyper).dim()
        }
        P1Bundle::LineQuot => deleted_plus_restricted(real).dim() - r,
    }
}

/// Multiset of line-bundle degrees in the splitting of one bundle of the
/// model, descending. Degrees are recovered from t ↦ h⁰(V ⊗ O(t)) by finite
/// differencing over a window wide enough for every possible summand.
pub fn splitting_type(real: &Realization, bundle: P1Bundle) -> Result<Vec<i64>> {
    check_caps(real, 1)?;
    let rank = bundle_rank(real, bundle);
    if rank == 0 {
        return Ok(Vec::new());
    }
    let field = real.field();
    let plus = bundle_pair(real, bundle, Chart::Plus);
    let minus = bundle_pair(real, bundle, Chart::Minus);
    let spread = [&plus, &minus]
        .iter()
        .flat_map(|pair| [pair.0.max_weight_norm(), pair.1.max_weight_norm()])
        .max()
        .unwrap_or(0);
    // Any line summand's degree is bounded by the spread of chart weights on
    // either side; the consistency checks below certify the window.
    let bound = 2 * spread + 1;
    let mut h0 = Vec::new();
    for t in -bound - 2..=bound + 1 {
        let shifted = (shift_degrees(&minus.0, t), shift_degrees(&minus.1, t));
        let (h, _) = pair_cohomology(field, &plus, &shifted)?;
        h0.push(h);
    }
    let at = |t: i64| h0[(t + bound + 2) as usize];
    let jump = |t: i64| at(t) as i64 - at(t - 1) as i64;
    let mut degrees = Vec::new();
    for d in (-bound - 1..=bound).rev() {
        let count = jump(-d) - jump(-d - 1);
        if count < 0 {
            return Err(CoreError::Internal(
                "splitting extraction produced a negative multiplicity".into(),
            ));
        }
        for _ in 0..count {
            degrees.push(d);
        }
    }
    if degrees.len() != rank {
        return Err(CoreError::Internal(
            "splitting degrees do not account for the full rank".into(),
        ));
    }
    Ok(degrees)
}

/// Degrees expected from the case analysis of the distinguished element.
pub fn predicted_splitting(real: &Realization, bundle: P1Bundle) -> Vec<i64> {
    let case = p1_case(real);
    let rank = bundle_rank(real, bundle);
    let mut degrees = vec![0i64; rank];
    if case == P1Case::Neither {
        match bundle {
            P1Bundle::Sub => degrees[rank - 1] = -1,
            P1Bundle::Quot => degrees[0] = 1,
            P1Bundle::LineSub => degrees[0] = -1,
            P1Bundle::LineQuot => degrees[0] = 1,
        }
    }
    degrees
}

/// Compute the splitting of one bundle of the model.
pub fn splitting_report(real: &Realization, bundle: P1Bundle) -> Result<SplittingReport> {
    let degrees = splitting_type(real, bundle)?;
    Ok(SplittingReport {
        bundle,
        case: p1_case(real),
        rank: degrees.len(),
        det_degree: degrees.iter().sum(),
        expected: predicted_splitting(real, bundle),
        degrees,
    })
}

/// Run the model over every bundle for the CLI: splittings plus the
/// computed-versus-predicted table for one functor power.
#[derive(Debug, Clone, Serialize)]
pub struct P1Summary {
    /// Status of the distinguished element.
    pub case: P1Case,
    /// Splitting data of all four bundles.
    pub splittings: Vec<SplittingReport>,
    /// Cohomology comparison for the requested functor power.
    pub cohomology: Vec<P1CohomologyReport>,
}

/// Splittings of all four bundles plus the cohomology comparison of one
/// functor power of the sub and quotient bundles.
pub fn p1_summary(real: &Realization, functor: PowerKind, p: usize) -> Result<P1Summary> {
    let splittings = [
        P1Bundle::Sub,
        P1Bundle::Quot,
        P1Bundle::LineSub,
        P1Bundle::LineQuot,
    ]
    .into_iter()
    .map(|b| splitting_report(real, b))
    .collect::<Result<Vec<_>>>()?;
    let cohomology = [P1Bundle::Sub, P1Bundle::Quot]
        .into_iter()
        .map(|b| p1_report(real, functor, p, b))
        .collect::<Result<Vec<_>>>()?;
    Ok(P1Summary {
        case: p1_case(real),
        splittings,
        cohomology,
    })
}

impl std::fmt::Display for P1Bundle {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::Realization;
    use crate::scalar::Field;

    fn diagonal_line() -> Realization {
        // span{(1,1)} in k²: the distinguished element is neither a loop
        // nor a coloop.
        Realization::from_i64(Field::Q, &[&[1, 1]])
    }

    fn loop_line() -> Realization {
        Realization::from_i64(Field::Q, &[&[1, 0]])
    }

    fn coloop_line() -> Realization {
        Realization::from_i64(Field::Q, &[&[0, 1]])
    }

    #[test]
    fn splitting_types_follow_the_case_table() {
        for real in [diagonal_line(), loop_line(), coloop_line()] {
            for bundle in [
                P1Bundle::Sub,
                P1Bundle::Quot,
                P1Bundle::LineSub,
                P1Bundle::LineQuot,
            ] {
                let got = splitting_type(&real, bundle).unwrap();
                assert_eq!(
                    got,
                    predicted_splitting(&real, bundle),
                    "bundle {bundle} on {:?}",
                    p1_case(&real)
                );
            }
        }
        assert_eq!(splitting_type(&diagonal_line(), P1Bundle::Sub).unwrap(), vec![-1]);
        assert_eq!(splitting_type(&diagonal_line(), P1Bundle::Quot).unwrap(), vec![1]);
        assert_eq!(splitting_type(&coloop_line(), P1Bundle::LineSub).unwrap(), vec![0]);
        assert!(splitting_type(&coloop_line(), P1Bundle::LineQuot).unwrap().is_empty());
        assert!(splitting_type(&loop_line(), P1Bundle::LineSub).unwrap().is_empty());
    }

    #[test]
    fn frozen_cohomology_examples() {
        let real = diagonal_line();
        assert_eq!(
            p1_cohomology(&real, PowerKind::Wedge, 1, P1Bundle::Quot).unwrap(),
            (2, 0)
        );
        assert_eq!(
            p1_cohomology(&real, PowerKind::Sym, 2, P1Bundle::Sub).unwrap(),
            (0, 1)
        );
        assert_eq!(
            p1_predicted(&real, PowerKind::Wedge, 1, P1Bundle::Quot).unwrap(),
            (2, 0)
        );
        assert_eq!(
            p1_predicted(&real, PowerKind::Sym, 2, P1Bundle::Sub).unwrap(),
            (0, 1)
        );
    }

    #[test]
    fn loop_powers_are_trivial() {
        let real = loop_line();
        for p in 0..=3 {
            for functor in [PowerKind::Wedge, PowerKind::Sym] {
                for bundle in [P1Bundle::Sub, P1Bundle::Quot] {
                    let (h0, h1) = p1_cohomology(&real, functor, p, bundle).unwrap();
                    assert_eq!(h1, 0, "trivial bundles have no higher cohomology");
                    let fiber = bundle_rank(&real, bundle);
                    let expect = match functor {
                        PowerKind::Wedge => binomial(fiber, p),
                        PowerKind::Sym => multiset_count(fiber, p),
                    };
                    assert_eq!(h0, expect);
                }
            }
        }
    }

    #[test]
    fn computed_matches_predicted_across_cases() {
        let plane = Realization::from_i64(Field::Q, &[&[1, 0, 1, 1], &[0, 1, 1, 2]]);
        let coloop_plane = Realization::from_i64(Field::Q, &[&[1, 1, 1, 0], &[0, 0, 0, 1]]);
        let loop_plane = Realization::from_i64(Field::Q, &[&[1, 0, 1, 0], &[0, 1, 1, 0]]);
        for real in [plane, coloop_plane, loop_plane] {
            for functor in [PowerKind::Wedge, PowerKind::Sym] {
                for bundle in [P1Bundle::Sub, P1Bundle::Quot] {
                    for p in 0..=4 {
                        let rep = p1_report(&real, functor, p, bundle).unwrap();
                        assert!(
                            rep.matches,
                            "{} {}^{p} on {:?}: computed {:?} predicted {:?}",
                            rep.bundle, rep.functor, rep.case, rep.computed, rep.predicted
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn euler_characteristics_are_additive() {
        for real in [diagonal_line(), loop_line(), coloop_line()] {
            let (s0, s1) = p1_cohomology(&real, PowerKind::Wedge, 1, P1Bundle::Sub).unwrap();
            let (q0, q1) = p1_cohomology(&real, PowerKind::Wedge, 1, P1Bundle::Quot).unwrap();
            let chi = (s0 as i64 - s1 as i64) + (q0 as i64 - q1 as i64);
            assert_eq!(chi, real.n() as i64, "sub and quotient fill the trivial bundle");
            let det_sum: i64 = splitting_type(&real, P1Bundle::Sub)
                .unwrap()
                .iter()
                .chain(splitting_type(&real, P1Bundle::Quot).unwrap().iter())
                .sum();
            assert_eq!(det_sum, 0, "determinants of sub and quotient cancel");
        }
    }

    #[test]
    fn finite_field_model_agrees() {
        let real = Realization::from_i64(Field::Fp(3), &[&[1, 1, 1]]);
        for functor in [PowerKind::Wedge, PowerKind::Sym] {
            for p in 0..=3 {
                for bundle in [P1Bundle::Sub, P1Bundle::Quot] {
                    let rep = p1_report(&real, functor, p, bundle).unwrap();
                    assert!(rep.matches, "{rep:?}");
                }
            }
        }
    }

    #[test]
    fn caps_are_enforced() {
        let real = diagonal_line();
        let err = p1_cohomology(&real, PowerKind::Sym, 11, P1Bundle::Sub).unwrap_err();
        assert_eq!(err.exit_code(), 2);
        let err = p1_cohomology(&real, PowerKind::Sym, 2, P1Bundle::LineSub).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }
}
