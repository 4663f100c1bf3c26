//! The permutohedral fan as a finite combinatorial context: all cones with
//! stable identifiers, the intersection and reversal tables, the maximal
//! charts, and the Čech tuples of charts with their intersection cones.

use std::collections::HashMap;

use crate::error::{CoreError, Result};
use crate::fan::{enumerate_partitions, prefix_pairing, OrderedSetPartition};
use crate::matrix::Subspace;

use super::value::{chain_genlist, GenList};

/// Identifier of a cone within a context.
pub type ConeId = u16;

/// Fan combinatorics for a fixed ground set size.
pub struct PermContext {
    n: usize,
    partitions: Vec<OrderedSetPartition>,
    zero_id: ConeId,
    charts: Vec<ConeId>,
    intersect: Vec<Vec<ConeId>>,
    reverse: Vec<ConeId>,
    prefixes: Vec<Vec<u32>>,
    prefix_sizes: Vec<Vec<i64>>,
    /// Per Čech level k = 0..n: tuples as chart-index bitmasks with their
    /// intersection cone, sorted by bitmask.
    tuples: Vec<Vec<(u32, ConeId)>>,
}

impl PermContext {
    /// Build the context for ground sets of size 1..=4.
    pub fn new(n: usize) -> Result<PermContext> {
        if n == 0 {
            return Err(CoreError::Input("ground set must be nonempty".into()));
        }
        if n > 4 {
            return Err(CoreError::SizeCap {
                what: "cohomology ground set".into(),
                limit: 4,
                got: n,
            });
        }
        let partitions = enumerate_partitions(n)?;
        let id_of: HashMap<&OrderedSetPartition, ConeId> = partitions
            .iter()
            .enumerate()
            .map(|(i, p)| (p, i as ConeId))
            .collect();
        let zero_id = id_of[&OrderedSetPartition::single_block(n)];
        let charts: Vec<ConeId> = partitions
            .iter()
            .enumerate()
            .filter(|(_, p)| p.len() == n)
            .map(|(i, _)| i as ConeId)
            .collect();
        let mut intersect = vec![vec![0; partitions.len()]; partitions.len()];
        for (i, a) in partitions.iter().enumerate() {
            for (j, b) in partitions.iter().enumerate() {
                intersect[i][j] = id_of[&a.intersect(b)];
            }
        }
        let reverse: Vec<ConeId> = partitions.iter().map(|p| id_of[&p.reverse()]).collect();
        let prefixes: Vec<Vec<u32>> = partitions.iter().map(|p| p.prefix_masks()).collect();
        let prefix_sizes: Vec<Vec<i64>> = prefixes
            .iter()
            .map(|masks| masks.iter().map(|m| m.count_ones() as i64).collect())
            .collect();

        // Čech tuples: subsets of charts of size 1..=n+1 with intersection cones.
        use itertools::Itertools;
        let mut tuples: Vec<Vec<(u32, ConeId)>> = Vec::new();
        let nc = charts.len();
        for level in 0..=n {
            let size = level + 1;
            let mut list = Vec::new();
            for combo in (0..nc).combinations(size) {
                let mask = combo.iter().fold(0u32, |m, &i| m | (1 << i));
                let cone = combo
                    .iter()
                    .map(|&i| charts[i])
                    .reduce(|a, b| intersect[a as usize][b as usize])
                    .expect("nonempty tuple");
                list.push((mask, cone));
            }
            list.sort_unstable_by_key(|&(m, _)| m);
            tuples.push(list);
        }

        Ok(PermContext {
            n,
            partitions,
            zero_id,
            charts,
            intersect,
            reverse,
            prefixes,
            prefix_sizes,
            tuples,
        })
    }

    /// Ground set size.
    pub fn n(&self) -> usize {
        self.n
    }

    /// All cones.
    pub fn cones(&self) -> usize {
        self.partitions.len()
    }

    /// The partition of a cone id.
    pub fn partition(&self, id: ConeId) -> &OrderedSetPartition {
        &self.partitions[id as usize]
    }

    /// The id of the zero cone (single block).
    pub fn zero(&self) -> ConeId {
        self.zero_id
    }

    /// The ids of the maximal cones, the Čech charts.
    pub fn charts(&self) -> &[ConeId] {
        &self.charts
    }

    /// Intersection of two cones.
    pub fn meet(&self, a: ConeId, b: ConeId) -> ConeId {
        self.intersect[a as usize][b as usize]
    }

    /// The reversed (Cremona-image) cone.
    pub fn rev(&self, id: ConeId) -> ConeId {
        self.reverse[id as usize]
    }

    /// Čech tuples at a level: chart-set bitmask and intersection cone.
    pub fn tuples(&self, level: usize) -> &[(u32, ConeId)] {
        &self.tuples[level]
    }

    /// Index of a tuple bitmask within its level.
    pub fn tuple_pos(&self, level: usize, mask: u32) -> usize {
        self.tuples[level]
            .binary_search_by_key(&mask, |&(m, _)| m)
            .expect("tuple exists at its level")
    }

    /// The start block index (0-based) of the suffix weight set of a cone at
    /// a weight, or None when the set is empty.
    ///
    /// The coordinates e with mu − u_e in the dual cone form a union of
    /// final blocks: with c_i = prefix_pairing(mu, P_i) + |P_i|, membership
    /// of the elements of block j requires c_i ≥ 0 for prefixes before j and
    /// c_i ≥ n from j on, so the set is empty when some c_i is negative and
    /// otherwise starts right after the last prefix with c_i < n.
    pub fn suffix_start(&self, id: ConeId, mu: &[i64]) -> Option<usize> {
        let n = self.n as i64;
        let masks = &self.prefixes[id as usize];
        let sizes = &self.prefix_sizes[id as usize];
        let mut start = 0usize;
        for (i, (&mask, &sz)) in masks.iter().zip(sizes).enumerate() {
            let c = prefix_pairing(mu, mask) + sz;
            if c < 0 {
                return None;
            }
            if c < n {
                start = i + 1;
            }
        }
        Some(start)
    }

    /// Candidate chart order for star-contraction at a weight: charts whose
    /// cone the recentered weight sits deepest inside come first.
    pub fn chart_order(&self, mu: &[i64]) -> Vec<ConeId> {
        let mut scored: Vec<(i64, ConeId)> = self
            .charts
            .iter()
            .map(|&c| {
                let score = self.prefixes[c as usize]
                    .iter()
                    .map(|&m| prefix_pairing(mu, m))
                    .min()
                    .unwrap_or(0);
                (score, c)
            })
            .collect();
        scored.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
        scored.into_iter().map(|(_, c)| c).collect()
    }
}

/// Per-cone chain data of one coordinate subspace: suffix dimensions and
/// sizes for closed-form leaf values, and the chain generator list.
pub struct LeafTables {
    /// Per cone: generator list of the chain (non-negated weights).
    pub gen: Vec<GenList>,
    /// Per cone: dim(space ∩ k^{suffix_j}) for j = 0..ℓ, then 0.
    pub suffix_dims: Vec<Vec<usize>>,
    /// Per cone: |suffix_j| for j = 0..ℓ, then 0.
    pub suffix_sizes: Vec<Vec<usize>>,
}

impl LeafTables {
    /// Build the chain tables of a subspace over every cone of the context.
    pub fn new(ctx: &PermContext, space: &Subspace) -> LeafTables {
        let n = ctx.n();
        let mut gen = Vec::with_capacity(ctx.cones());
        let mut suffix_dims = Vec::with_capacity(ctx.cones());
        let mut suffix_sizes = Vec::with_capacity(ctx.cones());
        for id in 0..ctx.cones() {
            let cone = ctx.partition(id as ConeId);
            gen.push(chain_genlist(space, cone, false));
            let blocks = cone.blocks();
            let mut dims = Vec::with_capacity(blocks.len() + 1);
            let mut sizes = Vec::with_capacity(blocks.len() + 1);
            for j in 0..blocks.len() {
                let mut support = vec![false; n];
                let mut count = 0usize;
                for b in &blocks[j..] {
                    for &e in b {
                        support[e] = true;
                        count += 1;
                    }
                }
                dims.push(space.restrict_support(&support).dim());
                sizes.push(count);
            }
            dims.push(0);
            sizes.push(0);
            suffix_dims.push(dims);
            suffix_sizes.push(sizes);
        }
        LeafTables {
            gen,
            suffix_dims,
            suffix_sizes,
        }
    }
}
