//! Matroid realizations L ⊆ k^E, their minors and duals, and the abstract
//! matroids they define.
//!
//! A realization is a subspace of k^E; element e of the matroid corresponds to
//! the e-th coordinate, and a subset S ⊆ E is independent when the coordinate
//! projection L → k^S restricted to S has rank |S| (equivalently the columns
//! indexed by S of any basis matrix of L are independent).
//!
//! Conventions for minors (the ones that make M(L∖e) = M(L)∖e and
//! M(L/e) = M(L)/e):
//!
//! * deletion L∖e: project L onto the coordinates E∖e;
//! * contraction L/e: intersect L with {v_e = 0}, then project onto E∖e.
//!
//! Abstract matroids are stored as their set of bases (bitmasks over a ground
//! set of at most 32 elements) and are validated against the basis-exchange
//! axiom on construction.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::combinat::subsets_colex;
use crate::error::{CoreError, Result};
use crate::fan::OrderedSetPartition;
use crate::matrix::{Matrix, Subspace};
use crate::scalar::{Field, K};

/// A realized matroid: a subspace of k^E together with its field.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Realization {
    space: Subspace,
}

impl Realization {
    /// Wrap a subspace as a realization.
    pub fn new(space: Subspace) -> Realization {
        Realization { space }
    }

    /// Row span of a matrix.
    pub fn from_matrix(m: Matrix) -> Realization {
        Realization {
            space: Subspace::from_matrix(m),
        }
    }

    /// Row span of integer data, mostly for tests and fixed corpus entries.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Realization {
        Realization::from_matrix(Matrix::from_i64(field, rows))
    }

    /// Ground set size |E|.
    pub fn n(&self) -> usize {
        self.space.ambient()
    }

    /// Field of definition.
    pub fn field(&self) -> Field {
        self.space.field()
    }

    /// dim L, the rank of the realized matroid.
    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    /// The subspace itself.
    pub fn space(&self) -> &Subspace {
        &self.space
    }

    /// Canonical basis matrix (dim × n, reduced echelon).
    pub fn basis_matrix(&self) -> &Matrix {
        self.space.basis()
    }

    /// Rank of a set of elements: the rank of the corresponding columns of a
    /// basis matrix.
    pub fn rank_of(&self, elements: &[usize]) -> usize {
        self.basis_matrix().select_columns(elements).rank()
    }

    /// The abstract matroid of this realization.
    pub fn matroid(&self) -> Matroid {
        let n = self.n();
        let r = self.dim();
        let mut bases = BTreeSet::new();
        for s in subsets_colex(n, r) {
            if self.rank_of(&s) == r {
                bases.insert(mask_of(&s));
            }
        }
        Matroid::from_bases(n, bases).expect("realization matroid satisfies exchange")
    }

    /// Deletion of a single element (ambient shrinks by one; labels after `e`
    /// shift down).
    pub fn delete(&self, e: usize) -> Realization {
        self.delete_set(&[e])
    }

    /// Contraction of a single element.
    pub fn contract(&self, e: usize) -> Realization {
        self.contract_set(&[e])
    }

    /// Deletion of a set of elements: project onto the remaining coordinates
    /// (kept in increasing order).
    pub fn delete_set(&self, set: &[usize]) -> Realization {
        let kill: BTreeSet<usize> = set.iter().copied().collect();
        let keep: Vec<usize> = (0..self.n()).filter(|e| !kill.contains(e)).collect();
        Realization {
            space: self.space.project(&keep),
        }
    }

    /// Contraction of a set of elements: intersect with the coordinate
    /// subspace vanishing on `set`, then project onto the remaining
    /// coordinates.
    pub fn contract_set(&self, set: &[usize]) -> Realization {
        let kill: BTreeSet<usize> = set.iter().copied().collect();
        let support: Vec<bool> = (0..self.n()).map(|e| !kill.contains(&e)).collect();
        let keep: Vec<usize> = (0..self.n()).filter(|e| !kill.contains(e)).collect();
        Realization {
            space: self.space.restrict_support(&support).project(&keep),
        }
    }

    /// The dual realization L^⊥ (orthogonal complement under the standard
    /// dot product); realizes the dual matroid.
    pub fn dual(&self) -> Realization {
        Realization {
            space: self.space.perp(),
        }
    }

    /// Append one new element realized by the zero vector (a loop).
    pub fn with_loop(&self) -> Realization {
        let n = self.n();
        let f = self.field();
        let rows: Vec<Vec<K>> = self
            .basis_matrix()
            .rows_vec()
            .into_iter()
            .map(|mut r| {
                r.push(f.zero());
                r
            })
            .collect();
        Realization {
            space: Subspace::from_rows(f, n + 1, rows),
        }
    }

    /// Append one new coordinate contained in L (a coloop).
    pub fn with_coloop(&self) -> Realization {
        let n = self.n();
        let f = self.field();
        let mut rows: Vec<Vec<K>> = self
            .basis_matrix()
            .rows_vec()
            .into_iter()
            .map(|mut r| {
                r.push(f.zero());
                r
            })
            .collect();
        let mut unit = vec![f.zero(); n + 1];
        unit[n] = f.one();
        rows.push(unit);
        Realization {
            space: Subspace::from_rows(f, n + 1, rows),
        }
    }

    /// The associated-graded realization of an ordered set partition
    /// F = (B₁, …, B_ℓ): the direct sum over i of the projection onto k^{Bᵢ}
    /// of L ∩ k^{Bᵢ ∪ … ∪ B_ℓ}, embedded back at the original coordinates.
    ///
    /// Its dimension always equals dim L, and its matroid has exactly the
    /// maximum-weight bases of M(L) for any weighting that is constant on
    /// blocks and strictly decreasing along them.
    pub fn partition_minor(&self, f: &OrderedSetPartition) -> Result<Realization> {
        if f.ground() != self.n() {
            return Err(CoreError::AmbientMismatch {
                left: f.ground(),
                right: self.n(),
            });
        }
        let n = self.n();
        let field = self.field();
        let mut acc = Subspace::zero(field, n);
        let mut suffix = vec![false; n];
        // Walk blocks from the last to the first so `suffix` grows.
        let blocks = f.blocks();
        for b in blocks.iter().rev() {
            for &e in b {
                suffix[e] = true;
            }
            let w = self.space.restrict_support(&suffix);
            let piece = w.project_in_ambient(b);
            acc = acc.sum(&piece)?;
        }
        debug_assert_eq!(acc.dim(), self.dim(), "graded pieces preserve dimension");
        Ok(Realization { space: acc })
    }
}

/// Serialized shape of a realization: field label plus the canonical basis
/// matrix with entries rendered as exact strings ("a", "a/b", or a residue).
#[derive(Serialize, Deserialize)]
struct RealizationRepr {
    field: String,
    n: usize,
    matrix: Vec<Vec<String>>,
}

impl Serialize for Realization {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let repr = RealizationRepr {
            field: self.field().to_string(),
            n: self.n(),
            matrix: self
                .basis_matrix()
                .rows_vec()
                .iter()
                .map(|r| r.iter().map(|k| k.to_string()).collect())
                .collect(),
        };
        repr.serialize(s)
    }
}

impl<'de> Deserialize<'de> for Realization {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let repr = RealizationRepr::deserialize(d)?;
        let field = Field::parse_label(&repr.field).map_err(serde::de::Error::custom)?;
        let mut rows = Vec::new();
        for row in &repr.matrix {
            if row.len() != repr.n {
                return Err(serde::de::Error::custom("matrix row length differs from n"));
            }
            let mut out = Vec::new();
            for s in row {
                out.push(field.scalar_from_str(s).map_err(serde::de::Error::custom)?);
            }
            rows.push(out);
        }
        Ok(Realization {
            space: Subspace::from_rows(field, repr.n, rows),
        })
    }
}

/// Bitmask of an element subset.
pub fn mask_of(elements: &[usize]) -> u32 {
    elements.iter().fold(0u32, |m, &e| m | (1 << e))
}

/// Elements of a bitmask, ascending.
pub fn mask_elements(mask: u32) -> Vec<usize> {
    (0..32).filter(|e| mask >> e & 1 == 1).collect()
}

/// Remove bit position `e` from a mask, shifting higher bits down.
fn drop_bit(mask: u32, e: usize) -> u32 {
    let low = mask & ((1 << e) - 1);
    let high = mask >> (e + 1);
    low | (high << e)
}

/// An abstract matroid given by its bases (bitmasks over 0..n).
#[derive(Clone, PartialEq, Eq, Debug, Serialize, Deserialize)]
pub struct Matroid {
    n: usize,
    bases: BTreeSet<u32>,
}

impl Matroid {
    /// Construct from an explicit basis list, checking the exchange axiom.
    pub fn from_bases(n: usize, bases: BTreeSet<u32>) -> Result<Matroid> {
        if n > 32 {
            return Err(CoreError::SizeCap {
                what: "matroid ground set",
                limit: 32,
                got: n,
            });
        }
        if bases.is_empty() {
            return Err(CoreError::Input("a matroid needs at least one basis".into()));
        }
        let full = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
        let rank = bases.iter().next().unwrap().count_ones();
        for &b in &bases {
            if b & !full != 0 {
                return Err(CoreError::Input("basis outside the ground set".into()));
            }
            if b.count_ones() != rank {
                return Err(CoreError::Input("bases of unequal size".into()));
            }
        }
        // Basis exchange: for B₁, B₂ and e ∈ B₁∖B₂ there is f ∈ B₂∖B₁ with
        // B₁ − e + f a basis.
        for &b1 in &bases {
            for &b2 in &bases {
                let only1 = b1 & !b2;
                for e in mask_elements(only1) {
                    let found = mask_elements(b2 & !b1)
                        .into_iter()
                        .any(|f| bases.contains(&((b1 & !(1 << e)) | (1 << f))));
                    if !found {
                        return Err(CoreError::Input(format!(
                            "basis exchange fails for {b1:#b}, {b2:#b} at element {e}"
                        )));
                    }
                }
            }
        }
        Ok(Matroid { n, bases })
    }

    /// The uniform matroid U_{r,n}.
    pub fn uniform(r: usize, n: usize) -> Matroid {
        let bases = subsets_colex(n, r).iter().map(|s| mask_of(s)).collect();
        Matroid::from_bases(n, bases).expect("uniform matroid is a matroid")
    }

    /// The boolean matroid (free matroid) on n elements.
    pub fn boolean(n: usize) -> Matroid {
        Matroid::uniform(n, n)
    }

    /// Ground set size.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Rank (common size of all bases).
    pub fn rank(&self) -> usize {
        self.bases.iter().next().unwrap().count_ones() as usize
    }

    /// The basis masks.
    pub fn bases(&self) -> &BTreeSet<u32> {
        &self.bases
    }

    /// Is the given mask a basis?
    pub fn is_basis(&self, mask: u32) -> bool {
        self.bases.contains(&mask)
    }

    /// Rank of a subset: max over bases of |B ∩ S|.
    pub fn rank_of(&self, mask: u32) -> usize {
        self.bases
            .iter()
            .map(|b| (b & mask).count_ones() as usize)
            .max()
            .unwrap()
    }

    /// Independence of a subset.
    pub fn is_independent(&self, mask: u32) -> bool {
        self.rank_of(mask) == mask.count_ones() as usize
    }

    /// An element in no basis.
    pub fn is_loop(&self, e: usize) -> bool {
        self.bases.iter().all(|b| b >> e & 1 == 0)
    }

    /// An element in every basis.
    pub fn is_coloop(&self, e: usize) -> bool {
        self.bases.iter().all(|b| b >> e & 1 == 1)
    }

    /// All loops, ascending.
    pub fn loops(&self) -> Vec<usize> {
        (0..self.n).filter(|&e| self.is_loop(e)).collect()
    }

    /// All coloops, ascending.
    pub fn coloops(&self) -> Vec<usize> {
        (0..self.n).filter(|&e| self.is_coloop(e)).collect()
    }

    /// Deletion M∖e on a compacted ground set (labels above `e` shift down).
    pub fn delete(&self, e: usize) -> Matroid {
        assert!(self.n >= 1, "cannot delete from an empty ground set");
        let bit = 1u32 << e;
        let bases: BTreeSet<u32> = if self.is_coloop(e) {
            self.bases.iter().map(|&b| drop_bit(b & !bit, e)).collect()
        } else {
            self.bases
                .iter()
                .filter(|&&b| b & bit == 0)
                .map(|&b| drop_bit(b, e))
                .collect()
        };
        Matroid {
            n: self.n - 1,
            bases,
        }
    }

    /// Contraction M/e on a compacted ground set.
    pub fn contract(&self, e: usize) -> Matroid {
        assert!(self.n >= 1, "cannot contract in an empty ground set");
        let bit = 1u32 << e;
        let bases: BTreeSet<u32> = if self.is_loop(e) {
            self.bases.iter().map(|&b| drop_bit(b, e)).collect()
        } else {
            self.bases
                .iter()
                .filter(|&&b| b & bit != 0)
                .map(|&b| drop_bit(b & !bit, e))
                .collect()
        };
        Matroid {
            n: self.n - 1,
            bases,
        }
    }

    /// The dual matroid (bases are complements of bases).
    pub fn dual(&self) -> Matroid {
        let full = if self.n == 32 {
            u32::MAX
        } else {
            (1u32 << self.n) - 1
        };
        Matroid {
            n: self.n,
            bases: self.bases.iter().map(|b| full & !b).collect(),
        }
    }

    /// All circuits (minimal dependent sets) as masks.
    pub fn circuits(&self) -> Vec<u32> {
        let mut out = Vec::new();
        for size in 1..=self.n {
            for s in subsets_colex(self.n, size) {
                let m = mask_of(&s);
                if self.is_independent(m) {
                    continue;
                }
                let minimal = s.iter().all(|&e| self.is_independent(m & !(1 << e)));
                if minimal {
                    out.push(m);
                }
            }
        }
        out
    }

    /// Connectivity: no proper nonempty S with rank(S) + rank(E∖S) = rank(E).
    ///
    /// Ground sets of size ≤ 1 count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        let full = (1u32 << self.n) - 1;
        let r = self.rank();
        // Scan half of the proper bipartitions (complement symmetry).
        for s in 1..(1u32 << (self.n - 1)) {
            if self.rank_of(s) + self.rank_of(full & !s) == r {
                return false;
            }
        }
        true
    }

    /// The set of maximum-weight bases for an integer weighting of E.
    pub fn max_weight_bases(&self, weights: &[i64]) -> BTreeSet<u32> {
        assert_eq!(weights.len(), self.n);
        let weight = |b: &u32| -> i64 {
            mask_elements(*b).iter().map(|&e| weights[e]).sum()
        };
        let best = self.bases.iter().map(weight).max().unwrap();
        self.bases
            .iter()
            .copied()
            .filter(|b| weight(b) == best)
            .collect()
    }
}

/// Post-verified construction of a uniform realization over the given field.
///
/// Tries a ladder of classical constructions (trivial cases, identity plus
/// all-ones for corank one, all-ones for rank one, a Vandermonde matrix, and
/// for rank two the points of the projective line) and returns the first whose
/// matroid really is U_{r,n}; if none works the matroid is not realizable over
/// this field and `Unrealizable` is returned.
pub fn uniform_realization(field: Field, r: usize, n: usize) -> Result<Realization> {
    if r > n {
        return Err(CoreError::Input(format!("uniform rank {r} exceeds size {n}")));
    }
    let expected = Matroid::uniform(r, n);
    let mut candidates: Vec<Matrix> = Vec::new();
    if r == 0 {
        candidates.push(Matrix::zero(field, 0, n));
    } else if r == n {
        candidates.push(Matrix::identity(field, n));
    } else {
        if n == r + 1 {
            // [I | all-ones] realizes U_{r,r+1} over every field.
            let mut m = Matrix::zero(field, r, n);
            for i in 0..r {
                m.set(i, i, field.one());
                m.set(i, n - 1, field.one());
            }
            candidates.push(m);
        }
        if r == 1 {
            let mut m = Matrix::zero(field, 1, n);
            for j in 0..n {
                m.set(0, j, field.one());
            }
            candidates.push(m);
        }
        // Vandermonde rows (j^i) on values 0..n-1.
        let mut v = Matrix::zero(field, r, n);
        for j in 0..n {
            let x = field.scalar_i64(j as i64);
            let mut pow = field.one();
            for i in 0..r {
                v.set(i, j, pow.clone());
                pow = &pow * &x;
            }
        }
        candidates.push(v);
        if r == 2 {
            // Points of the projective line: (1, x) for x = 0.., then (0, 1).
            let mut m = Matrix::zero(field, 2, n);
            for j in 0..n {
                if j + 1 < n {
                    m.set(0, j, field.one());
                    m.set(1, j, field.scalar_i64(j as i64));
                } else {
                    m.set(1, j, field.one());
                }
            }
            candidates.push(m);
        }
    }
    for c in candidates {
        let real = Realization::from_matrix(c);
        if real.matroid() == expected {
            return Ok(real);
        }
    }
    Err(CoreError::Unrealizable(format!(
        "U_{{{r},{n}}} admits no realization here over {field}"
    )))
}

/// The boolean realization k^n ⊆ k^n.
pub fn boolean_realization(field: Field, n: usize) -> Realization {
    Realization::from_matrix(Matrix::identity(field, n))
}

/// Graphic realization of the complete graph K_k: columns are signed edge
/// vectors e_u − e_v over the vertex space, edges ordered lexicographically.
pub fn graphic_complete(field: Field, k: usize) -> Realization {
    let edges: Vec<(usize, usize)> = (0..k)
        .flat_map(|u| ((u + 1)..k).map(move |v| (u, v)))
        .collect();
    graphic_from_edges(field, k, &edges)
}

/// Graphic realization of the path on k vertices (k − 1 edges, all coloops).
pub fn graphic_path(field: Field, k: usize) -> Realization {
    let edges: Vec<(usize, usize)> = (0..k.saturating_sub(1)).map(|i| (i, i + 1)).collect();
    graphic_from_edges(field, k, &edges)
}

/// Row space of the signed incidence matrix of a graph.
fn graphic_from_edges(field: Field, vertices: usize, edges: &[(usize, usize)]) -> Realization {
    let mut m = Matrix::zero(field, vertices, edges.len());
    for (j, &(u, v)) in edges.iter().enumerate() {
        m.set(u, j, field.one());
        m.set(v, j, -&field.one());
    }
    Realization::from_matrix(m)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn u23() -> Realization {
        Realization::from_i64(Field::Q, &[&[1, 0, 1], &[0, 1, 1]])
    }

    fn u24() -> Realization {
        Realization::from_i64(Field::Q, &[&[1, 0, 1, 1], &[0, 1, 1, 2]])
    }

    #[test]
    fn matroid_of_standard_examples() {
        let m = u23().matroid();
        assert_eq!(m.bases(), &BTreeSet::from([0b011, 0b101, 0b110]));
        assert_eq!(u24().matroid(), Matroid::uniform(2, 4));
        let zero = Realization::from_matrix(Matrix::zero(Field::Q, 0, 3));
        assert_eq!(zero.matroid(), Matroid::uniform(0, 3));
    }

    #[test]
    fn loops_and_coloops() {
        let with_loop = u23().with_loop();
        let m = with_loop.matroid();
        assert_eq!(m.loops(), vec![3]);
        assert!(m.coloops().is_empty());
        let with_coloop = u23().with_coloop();
        let m = with_coloop.matroid();
        assert_eq!(m.coloops(), vec![3]);
        assert!(m.loops().is_empty());
        assert_eq!(Matroid::boolean(3).coloops(), vec![0, 1, 2]);
        assert_eq!(Matroid::uniform(0, 2).loops(), vec![0, 1]);
    }

    #[test]
    fn minors_commute_with_matroid_extraction() {
        for real in [u23(), u24(), u24().with_loop(), u23().with_coloop()] {
            let m = real.matroid();
            for e in 0..real.n() {
                assert_eq!(real.delete(e).matroid(), m.delete(e), "delete {e}");
                assert_eq!(real.contract(e).matroid(), m.contract(e), "contract {e}");
            }
        }
    }

    #[test]
    fn duality() {
        assert_eq!(u23().dual().matroid(), Matroid::uniform(1, 3));
        for real in [u23(), u24(), u24().with_loop()] {
            assert_eq!(real.dual().matroid(), real.matroid().dual());
            assert_eq!(real.dual().dual(), real);
        }
    }

    #[test]
    fn graphic_examples() {
        // K₃ has cycle matroid U_{2,3}.
        assert_eq!(graphic_complete(Field::Q, 3).matroid(), Matroid::uniform(2, 3));
        // Paths are free.
        assert_eq!(graphic_path(Field::Q, 4).matroid(), Matroid::boolean(3));
    }

    #[test]
    fn uniform_realizations_over_small_fields() {
        // U_{2,4} needs four projective points: fine over F3, impossible over F2.
        let f3 = uniform_realization(Field::Fp(3), 2, 4).unwrap();
        assert_eq!(f3.matroid(), Matroid::uniform(2, 4));
        assert!(matches!(
            uniform_realization(Field::Fp(2), 2, 4),
            Err(CoreError::Unrealizable(_))
        ));
        // U_{3,4} over F2 via [I | all-ones].
        let f2 = uniform_realization(Field::Fp(2), 3, 4).unwrap();
        assert_eq!(f2.matroid(), Matroid::uniform(3, 4));
        for r in 0..=4usize {
            for n in r..=4usize {
                let u = uniform_realization(Field::Q, r, n).unwrap();
                assert_eq!(u.matroid(), Matroid::uniform(r, n));
            }
        }
    }

    #[test]
    fn partition_minor_examples() {
        // All-singleton partition of U_{2,3}: graded pieces span{e0}, span{e1}, 0.
        let f = OrderedSetPartition::new(3, vec![vec![0], vec![1], vec![2]]).unwrap();
        let g = u23().partition_minor(&f).unwrap();
        assert_eq!(
            g.space().basis(),
            &Matrix::from_i64(Field::Q, &[&[1, 0, 0], &[0, 1, 0]])
        );
        // Merging the last element into block 2: span{e0, e1+e2}.
        let f = OrderedSetPartition::new(3, vec![vec![0], vec![1, 2]]).unwrap();
        let g = u23().partition_minor(&f).unwrap();
        assert_eq!(
            g.space().basis(),
            &Matrix::from_i64(Field::Q, &[&[1, 0, 0], &[0, 1, 1]])
        );
        // Putting {0,2} first makes the graded space full on {0,2}: the top
        // weight class projects L onto those coordinates, and nothing of L is
        // supported on {1} alone.
        let f = OrderedSetPartition::new(3, vec![vec![0, 2], vec![1]]).unwrap();
        let g = u23().partition_minor(&f).unwrap();
        assert_eq!(
            g.space().basis(),
            &Matrix::from_i64(Field::Q, &[&[1, 0, 0], &[0, 0, 1]])
        );
    }

    #[test]
    fn partition_minor_matches_max_weight_bases() {
        let real = u24();
        let m = real.matroid();
        // Weights decreasing along blocks ({0,2},{1},{3}).
        let f = OrderedSetPartition::new(4, vec![vec![0, 2], vec![1], vec![3]]).unwrap();
        let graded = real.partition_minor(&f).unwrap().matroid();
        let expected = m.max_weight_bases(&[3, 2, 3, 1]);
        assert_eq!(graded.bases(), &expected);
    }

    #[test]
    fn connectivity() {
        assert!(Matroid::uniform(2, 3).is_connected());
        assert!(Matroid::uniform(1, 2).is_connected());
        assert!(Matroid::uniform(1, 1).is_connected());
        assert!(!Matroid::boolean(2).is_connected());
        assert!(!u23().with_loop().matroid().is_connected());
        assert!(!u23().with_coloop().matroid().is_connected());
        // Circuit route agrees: elements of a connected matroid are joined by
        // circuits.
        let m = Matroid::uniform(2, 4);
        let circuits = m.circuits();
        assert!(circuits.iter().all(|c| c.count_ones() == 3));
        assert_eq!(circuits.len(), 4);
    }

    #[test]
    fn exchange_axiom_rejects_non_matroid() {
        // {{0,1},{2,3}} fails exchange.
        let bad = BTreeSet::from([0b0011u32, 0b1100]);
        assert!(Matroid::from_bases(4, bad).is_err());
    }

    #[test]
    fn json_roundtrip_is_canonical() {
        let real = u24();
        let s = serde_json::to_string(&real).unwrap();
        let back: Realization = serde_json::from_str(&s).unwrap();
        assert_eq!(real, back);
        // Different spanning sets of the same subspace serialize identically.
        let other = Realization::from_i64(Field::Q, &[&[1, 1, 2, 3], &[1, -1, 0, -1]]);
        assert_eq!(serde_json::to_string(&other).unwrap(), s);
    }
}
