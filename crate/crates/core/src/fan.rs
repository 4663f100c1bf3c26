//! The permutohedral fan: ordered set partitions, their cones, dual-cone
//! membership, intersections, and the fiber structure over one fewer element.
//!
//! Cones of the permutohedral fan of E live in R^E / R·1 and correspond
//! bijectively to ordered set partitions F = (B₁, …, B_ℓ) of E: the rays of
//! σ_F are the images of the indicator vectors of the proper prefix unions
//! B₁ ∪ … ∪ B_i (i < ℓ). Maximal cones correspond to the all-singleton
//! partitions, i.e. to permutations of E.
//!
//! Ray representatives are normalized to have last coordinate zero, making
//! them honest lattice points of Z^E / Z·1. The pairing of a weight μ ∈ Z^E
//! with a ray is taken after subtracting the mean of μ and scaling by n, so
//! it is integral and independent of shifting μ by multiples of the all-ones
//! vector.

use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::matrix::{det, Matrix};
use crate::matroid::Realization;
use crate::scalar::Field;

/// An ordered set partition of {0, …, ground−1} into nonempty blocks.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct OrderedSetPartition {
    ground: usize,
    blocks: Vec<Vec<usize>>,
}

impl OrderedSetPartition {
    /// Validated construction; blocks are sorted internally, block order is
    /// significant.
    pub fn new(ground: usize, blocks: Vec<Vec<usize>>) -> Result<OrderedSetPartition> {
        let mut seen = vec![false; ground];
        let mut sorted_blocks = Vec::with_capacity(blocks.len());
        for b in blocks {
            if b.is_empty() {
                return Err(CoreError::Input("empty block in ordered set partition".into()));
            }
            let mut b = b;
            b.sort_unstable();
            for &e in &b {
                if e >= ground {
                    return Err(CoreError::Input(format!(
                        "element {e} outside ground set of size {ground}"
                    )));
                }
                if seen[e] {
                    return Err(CoreError::Input(format!("element {e} repeated")));
                }
                seen[e] = true;
            }
            sorted_blocks.push(b);
        }
        if seen.iter().any(|&s| !s) {
            return Err(CoreError::Input("blocks do not cover the ground set".into()));
        }
        Ok(OrderedSetPartition {
            ground,
            blocks: sorted_blocks,
        })
    }

    /// The one-block partition (the zero cone).
    pub fn single_block(ground: usize) -> OrderedSetPartition {
        assert!(ground > 0, "single block needs a nonempty ground set");
        OrderedSetPartition {
            ground,
            blocks: vec![(0..ground).collect()],
        }
    }

    /// All-singleton partition in the order of a permutation.
    pub fn from_permutation(perm: &[usize]) -> OrderedSetPartition {
        OrderedSetPartition::new(perm.len(), perm.iter().map(|&e| vec![e]).collect())
            .expect("permutation gives a valid partition")
    }

    /// Ground set size.
    pub fn ground(&self) -> usize {
        self.ground
    }

    /// The blocks, in order; each is sorted ascending.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Number of blocks ℓ.
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    /// True when there is a single block (the zero cone).
    pub fn is_empty(&self) -> bool {
        self.blocks.len() <= 1
    }

    /// Dimension of the cone σ_F, i.e. ℓ − 1.
    pub fn dim(&self) -> usize {
        self.blocks.len().saturating_sub(1)
    }

    /// Masks of the proper prefix unions B₁, B₁∪B₂, …, in order (ℓ−1 masks).
    pub fn prefix_masks(&self) -> Vec<u32> {
        let mut out = Vec::with_capacity(self.blocks.len().saturating_sub(1));
        let mut acc = 0u32;
        for b in &self.blocks[..self.blocks.len().saturating_sub(1)] {
            for &e in b {
                acc |= 1 << e;
            }
            out.push(acc);
        }
        out
    }

    /// Ray representatives in Z^E with last coordinate normalized to zero:
    /// the prefix indicator χ_P, minus the all-ones vector when the last
    /// element lies in P.
    pub fn ray_lifts(&self) -> Vec<Vec<i64>> {
        let n = self.ground;
        self.prefix_masks()
            .iter()
            .map(|&p| {
                let last_in = p >> (n - 1) & 1 == 1;
                (0..n)
                    .map(|e| {
                        let ind = (p >> e & 1) as i64;
                        if last_in {
                            ind - 1
                        } else {
                            ind
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Face order of the fan: σ_self is a face of σ_other exactly when the
    /// prefix chain of self is a subchain of the prefix chain of other.
    pub fn is_face_of(&self, other: &OrderedSetPartition) -> bool {
        let mine = self.prefix_masks();
        let theirs = other.prefix_masks();
        mine.iter().all(|p| theirs.contains(p))
    }

    /// The partition of the intersected cone σ_self ∩ σ_other: its prefix
    /// chain is the set of common prefix unions.
    pub fn intersect(&self, other: &OrderedSetPartition) -> OrderedSetPartition {
        assert_eq!(self.ground, other.ground, "internal invariant: same ground");
        let theirs = other.prefix_masks();
        let mut common: Vec<u32> = self
            .prefix_masks()
            .into_iter()
            .filter(|p| theirs.contains(p))
            .collect();
        common.sort_by_key(|p| p.count_ones());
        partition_from_chain(self.ground, &common)
    }

    /// The reversed partition (block order flipped); its cone is the image of
    /// σ_self under negation, matching the Cremona involution of the fan.
    pub fn reverse(&self) -> OrderedSetPartition {
        OrderedSetPartition {
            ground: self.ground,
            blocks: self.blocks.iter().rev().cloned().collect(),
        }
    }

    /// Extend the ground set by one new element (labelled `ground`) inserted
    /// as a singleton block before position `pos` (0 ≤ pos ≤ ℓ).
    pub fn insert_singleton(&self, pos: usize) -> OrderedSetPartition {
        assert!(pos <= self.blocks.len());
        let mut blocks = self.blocks.clone();
        blocks.insert(pos, vec![self.ground]);
        OrderedSetPartition {
            ground: self.ground + 1,
            blocks,
        }
    }

    /// Extend the ground set by one new element merged into block `pos`.
    pub fn merge_new_element(&self, pos: usize) -> OrderedSetPartition {
        assert!(pos < self.blocks.len());
        let mut blocks = self.blocks.clone();
        blocks[pos].push(self.ground);
        OrderedSetPartition {
            ground: self.ground + 1,
            blocks,
        }
    }
}

/// Rebuild a partition from a strictly increasing chain of prefix masks.
fn partition_from_chain(ground: usize, chain: &[u32]) -> OrderedSetPartition {
    let full: u32 = if ground == 32 { u32::MAX } else { (1 << ground) - 1 };
    let mut blocks = Vec::new();
    let mut prev = 0u32;
    for &p in chain.iter().chain(std::iter::once(&full)) {
        let diff = p & !prev;
        blocks.push((0..ground).filter(|&e| diff >> e & 1 == 1).collect());
        prev = p;
    }
    OrderedSetPartition { ground, blocks }
}

/// A cone of the permutohedral fan: a partition together with its ray
/// representatives.
#[derive(Clone, PartialEq, Eq, Debug, Serialize)]
pub struct Cone {
    partition: OrderedSetPartition,
    rays: Vec<Vec<i64>>,
}

impl Cone {
    /// The cone of an ordered set partition.
    pub fn of(partition: &OrderedSetPartition) -> Cone {
        Cone {
            rays: partition.ray_lifts(),
            partition: partition.clone(),
        }
    }

    /// Defining partition.
    pub fn partition(&self) -> &OrderedSetPartition {
        &self.partition
    }

    /// Normalized ray representatives.
    pub fn rays(&self) -> &[Vec<i64>] {
        &self.rays
    }

    /// Cone dimension.
    pub fn dim(&self) -> usize {
        self.partition.dim()
    }

    /// Smoothness check: the rays extend by the all-ones vector to an
    /// integral basis (determinant ±1 after completing with unit vectors).
    pub fn is_unimodular(&self) -> bool {
        let n = self.partition.ground();
        // Rays + all-ones span a saturated sublattice iff the matrix made of
        // the rays, the all-ones row, and enough unit rows has determinant ±1
        // for some completion; for prefix chains the standard completion with
        // the unit vectors of the non-minimal elements of each block works.
        let mut rows: Vec<Vec<i64>> = self.rays.to_vec();
        rows.push(vec![1; n]);
        for b in self.partition.blocks() {
            for &e in &b[1..] {
                let mut u = vec![0; n];
                u[e] = 1;
                rows.push(u);
            }
        }
        if rows.len() != n {
            return false;
        }
        let m = Matrix::from_rows(
            Field::Q,
            rows.iter()
                .map(|r| r.iter().map(|&v| Field::Q.scalar_i64(v)).collect())
                .collect(),
        );
        let d = det(&m);
        d == Field::Q.scalar_i64(1) || d == Field::Q.scalar_i64(-1)
    }
}

/// Integral pairing of a weight μ ∈ Z^E with the ray of prefix mask `p`,
/// normalized to be independent of 1-shifts of μ: n·Σ_{e∈P} μ_e − |P|·Σ μ.
pub fn prefix_pairing(mu: &[i64], p: u32) -> i64 {
    let n = mu.len() as i64;
    let total: i64 = mu.iter().sum();
    let part: i64 = (0..mu.len()).filter(|&e| p >> e & 1 == 1).map(|e| mu[e]).sum();
    let size = p.count_ones() as i64;
    n * part - size * total
}

/// Is μ in the dual cone σ_F^∨, i.e. does it pair nonnegatively with every
/// ray of σ_F?
pub fn dual_cone_membership(mu: &[i64], f: &OrderedSetPartition) -> bool {
    assert_eq!(mu.len(), f.ground(), "internal invariant: weight length");
    f.prefix_masks().iter().all(|&p| prefix_pairing(mu, p) >= 0)
}

/// All ordered set partitions of {0, …, n−1}; capped at n ≤ 6 (4683 entries).
pub fn enumerate_partitions(n: usize) -> Result<Vec<OrderedSetPartition>> {
    if n > 6 {
        return Err(CoreError::SizeCap {
            what: "ordered set partition enumeration",
            limit: 6,
            got: n,
        });
    }
    let full: u32 = if n == 0 { 0 } else { (1 << n) - 1 };
    let mut out = Vec::new();
    let mut current: Vec<Vec<usize>> = Vec::new();
    fn rec(
        n: usize,
        remaining: u32,
        current: &mut Vec<Vec<usize>>,
        out: &mut Vec<OrderedSetPartition>,
    ) {
        if remaining == 0 {
            out.push(OrderedSetPartition {
                ground: n,
                blocks: current.clone(),
            });
            return;
        }
        // Every nonempty subset of the remaining elements can be the next
        // block; iterate submasks descending for a deterministic order.
        let mut s = remaining;
        loop {
            current.push((0..n).filter(|&e| s >> e & 1 == 1).collect());
            rec(n, remaining & !s, current, out);
            current.pop();
            if s == 0 {
                break;
            }
            s = (s - 1) & remaining;
            if s == 0 {
                break;
            }
        }
    }
    rec(n, full, &mut current, &mut out);
    Ok(out)
}

/// The maximal cones: all-singleton partitions, one per permutation of E,
/// in lexicographic order of the permutation.
pub fn maximal_partitions(n: usize) -> Vec<OrderedSetPartition> {
    use itertools::Itertools;
    (0..n)
        .permutations(n)
        .map(|p| OrderedSetPartition::from_permutation(&p))
        .collect()
}

/// The fiber of the forgetful map to the fan of E∖{n}: for a partition F of
/// the smaller ground set, the cones over σ_F are the ℓ+1 singleton
/// insertions (maximal in the fiber) and the ℓ merges (their pairwise
/// intersections).
#[derive(Clone, Debug)]
pub struct FiberPartitions {
    /// F with the new element inserted as a singleton before block i (i = 0..ℓ).
    pub inserted: Vec<OrderedSetPartition>,
    /// F with the new element merged into block i (i = 0..ℓ−1).
    pub merged: Vec<OrderedSetPartition>,
}

impl FiberPartitions {
    /// Total number of fiber cones, always 2ℓ + 1.
    pub fn len(&self) -> usize {
        self.inserted.len() + self.merged.len()
    }

    /// Never empty.
    pub fn is_empty(&self) -> bool {
        false
    }
}

/// Compute the fiber partitions of F (see [`FiberPartitions`]).
pub fn fiber_partitions(f: &OrderedSetPartition) -> FiberPartitions {
    let l = f.len();
    FiberPartitions {
        inserted: (0..=l).map(|i| f.insert_singleton(i)).collect(),
        merged: (0..l).map(|i| f.merge_new_element(i)).collect(),
    }
}

/// Block order reversal, the combinatorial Cremona involution.
pub fn crem_partition(f: &OrderedSetPartition) -> OrderedSetPartition {
    f.reverse()
}

/// For a realization L ⊆ k^E with last element n−1 and a partition F of the
/// first n−1 elements: the block indices k such that the last element is
/// neither a loop nor a coloop of the graded realization at the merge of the
/// last element into block k.
///
/// At most one block ever qualifies, and one does exactly when the last
/// element is neither a loop nor a coloop of M(L) itself.
pub fn nonconstant_components(real: &Realization, f: &OrderedSetPartition) -> Result<Vec<usize>> {
    if f.ground() + 1 != real.n() {
        return Err(CoreError::AmbientMismatch {
            left: f.ground() + 1,
            right: real.n(),
        });
    }
    let last = real.n() - 1;
    let mut out = Vec::new();
    for k in 0..f.len() {
        let merged = f.merge_new_element(k);
        let m = real.partition_minor(&merged)?.matroid();
        if !m.is_loop(last) && !m.is_coloop(last) {
            out.push(k);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn osp(ground: usize, blocks: &[&[usize]]) -> OrderedSetPartition {
        OrderedSetPartition::new(ground, blocks.iter().map(|b| b.to_vec()).collect()).unwrap()
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(enumerate_partitions(0).unwrap().len(), 1);
        assert_eq!(enumerate_partitions(1).unwrap().len(), 1);
        assert_eq!(enumerate_partitions(2).unwrap().len(), 3);
        assert_eq!(enumerate_partitions(3).unwrap().len(), 13);
        assert_eq!(enumerate_partitions(4).unwrap().len(), 75);
        assert!(enumerate_partitions(7).is_err());
        assert_eq!(maximal_partitions(4).len(), 24);
    }

    #[test]
    fn validation_rejects_bad_partitions() {
        assert!(OrderedSetPartition::new(2, vec![vec![0]]).is_err()); // not covering
        assert!(OrderedSetPartition::new(2, vec![vec![0], vec![0, 1]]).is_err()); // repeat
        assert!(OrderedSetPartition::new(2, vec![vec![0], vec![], vec![1]]).is_err()); // empty
        assert!(OrderedSetPartition::new(2, vec![vec![0], vec![2]]).is_err()); // out of range
    }

    #[test]
    fn rays_and_normalization() {
        // ({0},{1},{2}): prefixes {0}, {0,1}; neither contains the last
        // element, so lifts are plain indicators.
        let f = osp(3, &[&[0], &[1], &[2]]);
        assert_eq!(f.ray_lifts(), vec![vec![1, 0, 0], vec![1, 1, 0]]);
        // ({2},{1},{0}): prefixes {2}, {1,2} contain the last element; the
        // normalized lifts subtract the all-ones vector.
        let f = osp(3, &[&[2], &[1], &[0]]);
        assert_eq!(f.ray_lifts(), vec![vec![-1, -1, 0], vec![-1, 0, 0]]);
        assert_eq!(f.dim(), 2);
        assert_eq!(OrderedSetPartition::single_block(3).dim(), 0);
    }

    #[test]
    fn intersection_examples() {
        let f = osp(3, &[&[0], &[1], &[2]]);
        assert_eq!(f.intersect(&f), f);
        let g = osp(3, &[&[0], &[2], &[1]]);
        assert_eq!(f.intersect(&g), osp(3, &[&[0], &[1, 2]]));
        // Opposite orders share no prefix: the zero cone.
        let f2 = osp(2, &[&[0], &[1]]);
        let g2 = osp(2, &[&[1], &[0]]);
        assert_eq!(f2.intersect(&g2), OrderedSetPartition::single_block(2));
    }

    #[test]
    fn intersection_is_largest_common_face() {
        let all = enumerate_partitions(3).unwrap();
        for f in &all {
            for g in &all {
                let i = f.intersect(g);
                assert!(i.is_face_of(f) && i.is_face_of(g));
                for h in &all {
                    if h.is_face_of(f) && h.is_face_of(g) {
                        assert!(h.is_face_of(&i), "{h:?} vs {i:?}");
                    }
                }
            }
        }
    }

    #[test]
    fn maximal_cones_are_unimodular() {
        for n in 1..=4usize {
            for f in maximal_partitions(n) {
                assert!(Cone::of(&f).is_unimodular(), "{f:?}");
            }
        }
        // And so are the lower-dimensional ones, by the same completion.
        for f in enumerate_partitions(4).unwrap() {
            assert!(Cone::of(&f).is_unimodular(), "{f:?}");
        }
    }

    #[test]
    fn dual_membership() {
        let f = osp(3, &[&[0], &[1], &[2]]);
        assert!(dual_cone_membership(&[1, 0, 0], &f));
        assert!(dual_cone_membership(&[2, 1, 0], &f));
        assert!(!dual_cone_membership(&[0, 0, 1], &f));
        // Shifting by the all-ones vector never changes membership.
        assert!(dual_cone_membership(&[2, 1, 1], &f));
        // Everything is in the dual of the zero cone.
        let z = OrderedSetPartition::single_block(3);
        assert!(dual_cone_membership(&[-5, 3, 1], &z));
    }

    #[test]
    fn fiber_structure() {
        // F = ({0}) over ground {0}: fiber in the fan of {0,1}.
        let f = osp(1, &[&[0]]);
        let fib = fiber_partitions(&f);
        assert_eq!(fib.len(), 3);
        assert_eq!(fib.inserted[0], osp(2, &[&[1], &[0]]));
        assert_eq!(fib.inserted[1], osp(2, &[&[0], &[1]]));
        assert_eq!(fib.merged[0], osp(2, &[&[0, 1]]));
        // Adjacent inserted cones intersect in the merged cone, for every
        // partition of up to three elements.
        for n in 1..=3usize {
            for f in enumerate_partitions(n).unwrap() {
                let fib = fiber_partitions(&f);
                assert_eq!(fib.len(), 2 * f.len() + 1);
                for i in 0..f.len() {
                    assert_eq!(
                        fib.inserted[i].intersect(&fib.inserted[i + 1]),
                        fib.merged[i]
                    );
                }
            }
        }
    }

    #[test]
    fn cremona_is_an_involution() {
        for f in enumerate_partitions(4).unwrap() {
            assert_eq!(crem_partition(&crem_partition(&f)), f);
        }
    }

    #[test]
    fn nonconstant_components_example() {
        // L = rowspace [[1,0,1],[0,1,1]], last element 2, F = ({0},{1}):
        // merging 2 into block 0 leaves it a coloop of the graded matroid,
        // merging into block 1 leaves it neither — so exactly block 1.
        let real = Realization::from_i64(Field::Q, &[&[1, 0, 1], &[0, 1, 1]]);
        let f = osp(2, &[&[0], &[1]]);
        assert_eq!(nonconstant_components(&real, &f).unwrap(), vec![1]);
        // A loop is constant on every component.
        let looped = real.with_loop();
        let f3 = osp(3, &[&[0, 1], &[2]]);
        assert_eq!(nonconstant_components(&looped, &f3).unwrap(), Vec::<usize>::new());
    }
}
