//! An independent cohomology route for line bundles.
//!
//! A rank-one expression trivializes over every chart with a single local
//! generator weight. Those chart weights form a piecewise-linear support
//! function on the fan (checked ray by ray), and the cohomology of the line
//! bundle splits weight by weight into reduced simplicial cohomology of the
//! *negative-ray complex*: the order complex of the rays whose pairing with
//! the recentered weight falls below the support function. This route shares
//! only the presentation layer with the Čech engine — the actual cohomology
//! is read off from fan combinatorics, not from a Čech complex — so agreement
//! between the two is a meaningful cross-check.

use std::collections::BTreeMap;

use crate::bundle::{normalize, BundleExpr};
use crate::error::{CoreError, Result};
use crate::fan::{dual_cone_membership, prefix_pairing};
use crate::matrix::Matrix;
use crate::matroid::Realization;
use crate::scalar::Field;

use super::context::PermContext;
use super::engine::{CohomologyReport, Engine, WBox, WeightLine};

/// Cohomology table of a line bundle from fan combinatorics.
///
/// Fails with an input error when the expression does not have rank one, and
/// with an internal error when the chart weights do not assemble into a
/// consistent support function (which would indicate a presentation bug).
pub fn line_bundle_report(real: &Realization, expr: &BundleExpr) -> Result<CohomologyReport> {
    let mut eng = Engine::new(real, None)?;
    let nx = normalize(expr, eng.rank_data(), eng.field())?;
    if nx.rank(eng.rank_data()) != 1 {
        return Err(CoreError::Input(format!(
            "the line-bundle route needs a rank-one expression, but {nx} has rank {}",
            nx.rank(eng.rank_data())
        )));
    }
    let n = real.n();
    let field = real.field();
    let ctx = PermContext::new(n)?;
    let p = nx.signed_degree();

    // One local generator weight per chart.
    let mut chart_weights: Vec<(u16, Vec<i64>)> = Vec::new();
    for &sigma in ctx.charts() {
        let part = ctx.partition(sigma);
        let gl = eng.genlists_at(&nx, sigma)?;
        let mut cands: Vec<Vec<i64>> = Vec::new();
        for g in 0..gl.0.len() {
            let w = gl.0.weights()[g].clone();
            if cands.contains(&w) {
                continue;
            }
            let d = eng.value_dim_at(&nx, &w, sigma)?;
            if d > 1 {
                return Err(CoreError::Internal(format!(
                    "{nx} has a {d}-dimensional weight space over a chart, \
                     contradicting rank one"
                )));
            }
            if d == 1 {
                cands.push(w);
            }
        }
        let mins: Vec<&Vec<i64>> = cands
            .iter()
            .filter(|c| {
                cands.iter().all(|o| {
                    let diff: Vec<i64> = o.iter().zip(c.iter()).map(|(a, b)| a - b).collect();
                    dual_cone_membership(&diff, part)
                })
            })
            .collect();
        if mins.len() != 1 {
            return Err(CoreError::Internal(format!(
                "chart generator weight of {nx} is not unique ({} minimal candidates \
                 out of {})",
                mins.len(),
                cands.len()
            )));
        }
        let w = mins[0].clone();
        if w.iter().sum::<i64>() != p {
            return Err(CoreError::Internal(format!(
                "chart generator weight {w:?} of {nx} has coordinate sum {} ≠ signed \
                 degree {p}",
                w.iter().sum::<i64>()
            )));
        }
        chart_weights.push((sigma, w));
    }

    // The support function, ray by ray: every chart containing a ray has to
    // assign it the same pairing.
    let mut ray_target: BTreeMap<u32, i64> = BTreeMap::new();
    for (sigma, w) in &chart_weights {
        for s in ctx.partition(*sigma).prefix_masks() {
            let val = prefix_pairing(w, s);
            match ray_target.get(&s) {
                Some(&prev) if prev != val => {
                    return Err(CoreError::Internal(format!(
                        "support function of {nx} is inconsistent on ray {s:#b}: \
                         {prev} vs {val}"
                    )));
                }
                Some(_) => {}
                None => {
                    ray_target.insert(s, val);
                }
            }
        }
    }
    let expected_rays = (1usize << n) - 2;
    if ray_target.len() != expected_rays {
        return Err(CoreError::Internal(format!(
            "support function of {nx} covers {} rays, expected {expected_rays}",
            ray_target.len()
        )));
    }
    let rays: Vec<(u32, i64)> = ray_target.into_iter().collect();

    // Support box from the spread of the chart weights.
    let nn = n as i64;
    let mut radius_num = 0i64;
    for (_, w) in &chart_weights {
        for &x in w {
            radius_num = radius_num.max((nn * x - p).abs());
        }
    }
    let mut b = num_integer::Integer::div_ceil(&radius_num, &nn) + 1;

    for _attempt in 0..3 {
        let wbox = WBox::new(n, p, b);
        let mut total = vec![0usize; n];
        let mut lines: Vec<WeightLine> = Vec::new();
        let mut leak = false;
        for mu in wbox.weights() {
            let neg: Vec<u32> = rays
                .iter()
                .filter(|&&(s, t)| prefix_pairing(&mu, s) < t)
                .map(|&(s, _)| s)
                .collect();
            let hred = negative_complex_cohomology(field, &neg, n);
            if hred.iter().any(|&v| v > 0) {
                if wbox.in_shell(&mu, 1) {
                    leak = true;
                    break;
                }
                for (t, v) in total.iter_mut().zip(&hred) {
                    *t += v;
                }
                lines.push(WeightLine { mu, h: hred });
            }
        }
        if leak {
            b *= 2;
            continue;
        }
        lines.sort_by(|x, y| x.mu.cmp(&y.mu));
        let euler = total
            .iter()
            .enumerate()
            .map(|(i, &v)| if i % 2 == 0 { v as i64 } else { -(v as i64) })
            .sum();
        return Ok(CohomologyReport {
            expr: expr.to_string(),
            field: field.to_string(),
            n,
            h: total,
            euler,
            box_radius: b,
            by_weight: lines,
        });
    }
    Err(CoreError::Internal(format!(
        "line-bundle support of {nx} kept leaking into the shell after doubling the \
         weight box twice (final radius {b})"
    )))
}

/// h⁰ … h^{n−1} contributed by one weight: h^p is the reduced simplicial
/// cohomology H̃^{p−1} of the order complex of the negative rays (chains of
/// nested subsets), with H̃^{−1} of the empty complex contributing to h⁰.
fn negative_complex_cohomology(field: Field, neg: &[u32], n: usize) -> Vec<usize> {
    // Vertices sorted by size then value; chains are sets of pairwise nested
    // masks, enumerated by extending along strict inclusions.
    let mut verts: Vec<u32> = neg.to_vec();
    verts.sort_by_key(|&s| (s.count_ones(), s));
    let nested = |a: u32, b: u32| a & b == a && a != b;

    let mut simplices: Vec<Vec<Vec<usize>>> = vec![Vec::new()];
    simplices[0] = (0..verts.len()).map(|i| vec![i]).collect();
    loop {
        let last = simplices.last().unwrap();
        let mut next: Vec<Vec<usize>> = Vec::new();
        for chain in last {
            let &tail = chain.last().unwrap();
            for j in tail + 1..verts.len() {
                if nested(verts[tail], verts[j]) {
                    let mut ext = chain.clone();
                    ext.push(j);
                    next.push(ext);
                }
            }
        }
        if next.is_empty() {
            break;
        }
        simplices.push(next);
    }

    // Reduced cochain complex: C^{−1} = k, C^j = k^{#j-simplices}.
    let mut dims = vec![1usize];
    for s in &simplices {
        dims.push(s.len());
    }
    // Coboundary ranks: δ^{−1} is the all-ones augmentation column, δ^j maps
    // chains to their one-longer extensions with alternating signs.
    let mut ranks = Vec::new();
    ranks.push(if verts.is_empty() { 0 } else { 1 });
    for j in 0..simplices.len().saturating_sub(1) {
        let lower = &simplices[j];
        let upper = &simplices[j + 1];
        let index: BTreeMap<&[usize], usize> = lower
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_slice(), i))
            .collect();
        let minus_one = &field.zero() - &field.one();
        let mut m = Matrix::zero(field, upper.len(), lower.len());
        for (r, tau) in upper.iter().enumerate() {
            for drop in 0..tau.len() {
                let mut face = tau.clone();
                face.remove(drop);
                let c = index[face.as_slice()];
                let sign = if drop % 2 == 0 {
                    field.one()
                } else {
                    minus_one.clone()
                };
                let prev = m.get(r, c).clone();
                m.set(r, c, &prev + &sign);
            }
        }
        ranks.push(m.rank());
    }
    while ranks.len() < dims.len() {
        ranks.push(0);
    }

    // H̃^{j} = dim C^j − rank δ^j − rank δ^{j−1}; shift into h^p = H̃^{p−1}.
    let mut h = vec![0usize; n];
    for (p, slot) in h.iter_mut().enumerate() {
        // degree j = p − 1 sits at dims[p] with outgoing rank ranks[p] and
        // incoming rank ranks[p − 1] (none for the augmentation).
        let dim = dims.get(p).copied().unwrap_or(0);
        let out = ranks.get(p).copied().unwrap_or(0);
        let inc = if p == 0 {
            0
        } else {
            ranks.get(p - 1).copied().unwrap_or(0)
        };
        *slot = dim - out - inc;
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::matroid::uniform_realization;

    fn compare(real: &Realization, expr: BundleExpr) {
        let oracle = line_bundle_report(real, &expr).unwrap();
        let mut eng = Engine::new(real, None).unwrap();
        let direct = eng.report(&expr).unwrap();
        assert_eq!(oracle.h, direct.h, "h of {expr}");
        assert_eq!(oracle.by_weight, direct.by_weight, "weight table of {expr}");
    }

    #[test]
    fn p1_line_bundles_agree_with_engine() {
        let real = uniform_realization(Field::Q, 1, 2).unwrap();
        for expr in [
            BundleExpr::Triv(1),
            BundleExpr::Q,
            BundleExpr::S,
            BundleExpr::sym(2, BundleExpr::S),
            BundleExpr::sym(3, BundleExpr::Q),
            BundleExpr::crem(BundleExpr::Q),
        ] {
            compare(&real, expr);
        }
    }

    #[test]
    fn permutohedral_surface_line_bundles_agree_with_engine() {
        let real = uniform_realization(Field::Q, 2, 3).unwrap();
        for expr in [
            BundleExpr::Triv(1),
            BundleExpr::det(BundleExpr::Q),
            BundleExpr::det(BundleExpr::S),
            BundleExpr::crem(BundleExpr::det(BundleExpr::Q)),
            BundleExpr::tensor(vec![
                BundleExpr::det(BundleExpr::Q),
                BundleExpr::det(BundleExpr::Q),
            ]),
        ] {
            compare(&real, expr);
        }
        let rank1 = uniform_realization(Field::Q, 1, 3).unwrap();
        for expr in [BundleExpr::S, BundleExpr::det(BundleExpr::Q)] {
            compare(&rank1, expr);
        }
    }

    #[test]
    fn finite_field_line_bundles_agree_with_engine() {
        let real = uniform_realization(Field::Fp(3), 2, 3).unwrap();
        compare(&real, BundleExpr::det(BundleExpr::Q));
        compare(&real, BundleExpr::det(BundleExpr::S));
    }

    #[test]
    fn higher_rank_is_rejected() {
        let real = uniform_realization(Field::Q, 2, 3).unwrap();
        let err = line_bundle_report(&real, &BundleExpr::S).unwrap_err();
        assert_eq!(err.exit_code(), 2);
    }
}
