//! Per-weight value spaces of equivariant bundles.
//!
//! Over each cone, the sections of a normalized bundle expression form a
//! graded module presented by a finite *generator list*: pairs of a torus
//! weight and a vector in a fixed ambient coordinate space. The value of the
//! bundle at a weight over a cone is the span of the generators surviving the
//! dual-cone test, modulo the span of the surviving relation generators.
//! Values over nested cones are then nested subquotients of the same ambient
//! space, so restriction maps are canonical and computable.

use std::collections::HashMap;

use crate::combinat::{multiset_colex_rank, multisets_colex, subset_colex_rank, subsets_colex};
use crate::error::{CoreError, Result};
use crate::fan::{dual_cone_membership, OrderedSetPartition};
use crate::matrix::{induced_power_matrix, reduce_vector, Matrix, PowerKind, Subspace};
use crate::scalar::{Field, K};

/// A growable bitmask identifying which generators of a list survive at a
/// weight; doubles as a memoization key for value spaces.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct BitMask(Vec<u64>);

impl BitMask {
    /// All-zero mask for `len` bits.
    pub fn new(len: usize) -> BitMask {
        BitMask(vec![0; len.div_ceil(64)])
    }

    /// Set bit `i`.
    pub fn set(&mut self, i: usize) {
        self.0[i / 64] |= 1 << (i % 64);
    }

    /// Read bit `i`.
    pub fn get(&self, i: usize) -> bool {
        (self.0[i / 64] >> (i % 64)) & 1 == 1
    }

    /// Number of set bits.
    pub fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }
}

/// A weighted generator list in a fixed ambient coordinate space.
///
/// Generators with identical weights share a survivor test, so weights are
/// interned into classes; zero vectors and scalar-multiple duplicates of an
/// earlier generator at the same weight are dropped outright (they never
/// change a span).
#[derive(Clone, Debug)]
pub struct GenList {
    field: Field,
    ambient: usize,
    weights: Vec<Vec<i64>>,
    class_of: Vec<u32>,
    distinct: Vec<Vec<i64>>,
    /// ambient × generators; columns are the generator vectors.
    mat: Matrix,
}

impl GenList {
    /// Build a generator list, pruning zero and duplicated generators.
    pub fn new(field: Field, ambient: usize, gens: Vec<(Vec<i64>, Vec<K>)>) -> GenList {
        let mut weights = Vec::new();
        let mut cols: Vec<Vec<K>> = Vec::new();
        let mut seen: HashMap<(Vec<i64>, Vec<K>), ()> = HashMap::new();
        for (w, v) in gens {
            debug_assert_eq!(v.len(), ambient);
            let Some(lead) = v.iter().position(|x| !x.is_zero()) else {
                continue; // zero vector spans nothing
            };
            let inv = v[lead].inv().expect("leading coefficient is nonzero");
            let scaled: Vec<K> = v.iter().map(|x| x * &inv).collect();
            if seen.insert((w.clone(), scaled), ()).is_some() {
                continue; // same line at the same weight
            }
            weights.push(w);
            cols.push(v);
        }
        let mut distinct: Vec<Vec<i64>> = Vec::new();
        let mut class_of = Vec::with_capacity(weights.len());
        for w in &weights {
            let c = match distinct.iter().position(|d| d == w) {
                Some(c) => c,
                None => {
                    distinct.push(w.clone());
                    distinct.len() - 1
                }
            };
            class_of.push(c as u32);
        }
        let mut mat = Matrix::zero(field, ambient, cols.len());
        for (j, col) in cols.iter().enumerate() {
            for (i, v) in col.iter().enumerate() {
                if !v.is_zero() {
                    mat.set(i, j, v.clone());
                }
            }
        }
        GenList {
            field,
            ambient,
            weights,
            class_of,
            distinct,
            mat,
        }
    }

    /// Number of generators.
    pub fn len(&self) -> usize {
        self.weights.len()
    }

    /// Whether the list is empty.
    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    /// Ambient coordinate dimension.
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Generator weights.
    pub fn weights(&self) -> &[Vec<i64>] {
        &self.weights
    }

    /// The generator matrix (ambient × generators).
    pub fn mat(&self) -> &Matrix {
        &self.mat
    }

    /// One generator vector as a dense column.
    pub fn column(&self, g: usize) -> Vec<K> {
        (0..self.ambient).map(|i| self.mat.get(i, g).clone()).collect()
    }

    /// Largest coordinate magnitude over all generator weights.
    pub fn max_weight_norm(&self) -> i64 {
        self.weights
            .iter()
            .flat_map(|w| w.iter().map(|x| x.abs()))
            .max()
            .unwrap_or(0)
    }

    /// Which generators survive at weight `mu` over the given cone: generator
    /// `g` survives when `mu - weight(g)` pairs nonnegatively with every ray.
    pub fn survivor_mask(&self, mu: &[i64], cone: &OrderedSetPartition) -> BitMask {
        let ok: Vec<bool> = self
            .distinct
            .iter()
            .map(|w| {
                let diff: Vec<i64> = mu.iter().zip(w).map(|(a, b)| a - b).collect();
                dual_cone_membership(&diff, cone)
            })
            .collect();
        let mut mask = BitMask::new(self.len());
        for (g, &c) in self.class_of.iter().enumerate() {
            if ok[c as usize] {
                mask.set(g);
            }
        }
        mask
    }

    /// The surviving generator vectors as matrix rows.
    pub fn selected_rows(&self, mask: &BitMask) -> Matrix {
        let sel: Vec<usize> = (0..self.len()).filter(|&g| mask.get(g)).collect();
        let mut m = Matrix::zero(self.field, sel.len(), self.ambient);
        for (r, &g) in sel.iter().enumerate() {
            for i in 0..self.ambient {
                let v = self.mat.get(i, g);
                if !v.is_zero() {
                    m.set(r, i, v.clone());
                }
            }
        }
        m
    }
}

/// A canonical subquotient A/B of a coordinate space, with B ⊆ A enforced.
///
/// The basis is the set of reduced-echelon rows of A whose pivot column is
/// not a pivot of B; coordinates of a vector are read off those pivots after
/// reducing by B. Both membership checks are hard errors when violated: they
/// certify the nesting invariants the Čech machinery relies on.
#[derive(Debug)]
pub struct Subquotient {
    field: Field,
    ambient: usize,
    a: Matrix,
    a_piv: Vec<usize>,
    b: Matrix,
    b_piv: Vec<usize>,
    free: Vec<usize>,
}

impl Subquotient {
    /// Build from spanning rows of A and B.
    pub fn new(field: Field, ambient: usize, amb_rows: Matrix, sub_rows: Matrix) -> Result<Subquotient> {
        let (a_full, a_piv) = amb_rows.rref();
        let a = a_full.select_rows(&(0..a_piv.len()).collect::<Vec<_>>());
        let (b_full, b_piv) = sub_rows.rref();
        let b = b_full.select_rows(&(0..b_piv.len()).collect::<Vec<_>>());
        for r in 0..b.nrows() {
            let (_, rem) = reduce_vector(&a, &a_piv, b.row(r));
            if rem.iter().any(|x| !x.is_zero()) {
                return Err(CoreError::Internal(
                    "subquotient invariant violated: relations not contained in the ambient span"
                        .into(),
                ));
            }
        }
        if !b_piv.iter().all(|p| a_piv.contains(p)) {
            return Err(CoreError::Internal(
                "subquotient invariant violated: pivot monotonicity".into(),
            ));
        }
        let free: Vec<usize> = (0..a_piv.len()).filter(|&i| !b_piv.contains(&a_piv[i])).collect();
        Ok(Subquotient {
            field,
            ambient,
            a,
            a_piv,
            b,
            b_piv,
            free,
        })
    }

    /// Dimension of A/B.
    pub fn dim(&self) -> usize {
        self.free.len()
    }

    /// Ambient coordinate dimension.
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// A canonical representative of the i-th basis vector.
    pub fn rep(&self, i: usize) -> &[K] {
        self.a.row(self.free[i])
    }

    /// Coordinates of `[v]` in the canonical basis; errors when `v` does not
    /// lie in the ambient span A.
    pub fn coords(&self, v: &[K]) -> Result<Vec<K>> {
        debug_assert_eq!(v.len(), self.ambient);
        let (_, rem_b) = reduce_vector(&self.b, &self.b_piv, v);
        let (coeffs, rem_a) = reduce_vector(&self.a, &self.a_piv, &rem_b);
        if rem_a.iter().any(|x| !x.is_zero()) {
            return Err(CoreError::Internal(
                "restriction invariant violated: vector outside the target ambient span".into(),
            ));
        }
        for (i, c) in coeffs.iter().enumerate() {
            if !self.free.contains(&i) && !c.is_zero() {
                return Err(CoreError::Internal(
                    "subquotient coordinate readout inconsistent".into(),
                ));
            }
        }
        Ok(self.free.iter().map(|&i| coeffs[i].clone()).collect())
    }

    /// Field of coefficients.
    pub fn field(&self) -> Field {
        self.field
    }
}

/// The matrix of the canonical map src → dst induced by the identity of the
/// shared ambient space (dst.dim × src.dim). Fails when the source is not
/// contained in the destination, which would violate cone nesting.
pub fn restriction_matrix(src: &Subquotient, dst: &Subquotient) -> Result<Matrix> {
    debug_assert_eq!(src.ambient, dst.ambient);
    let mut m = Matrix::zero(src.field, dst.dim(), src.dim());
    for j in 0..src.dim() {
        let col = dst.coords(src.rep(j))?;
        for (i, v) in col.into_iter().enumerate() {
            if !v.is_zero() {
                m.set(i, j, v);
            }
        }
    }
    Ok(m)
}

/// The generator chain of a subspace over a cone: walking the blocks from
/// last to first, each step contributes completions of the previous suffix
/// piece `space ∩ k^{suffix}` inside the next, weighted by the coordinate
/// character of the block (any member gives the same survivor test; the
/// minimum is used). Over a maximal cone this is the chart trivialization of
/// the subbundle attached to `space`.
pub fn chain_genlist(space: &Subspace, cone: &OrderedSetPartition, negate: bool) -> GenList {
    let field = space.field();
    let n = space.ambient();
    let blocks = cone.blocks();
    let mut gens: Vec<(Vec<i64>, Vec<K>)> = Vec::new();
    let mut acc = Subspace::zero(field, n);
    for j in (0..blocks.len()).rev() {
        let mut support = vec![false; n];
        for b in &blocks[j..] {
            for &e in b {
                support[e] = true;
            }
        }
        let w = space.restrict_support(&support);
        let min_e = blocks[j][0];
        let mut weight = vec![0i64; n];
        weight[min_e] = if negate { -1 } else { 1 };
        for r in 0..w.dim() {
            let row = w.basis().row(r);
            // The accumulator grows per added row, so rows dependent modulo
            // earlier additions within the same block are skipped too.
            if !acc.contains(row) {
                gens.push((weight.clone(), row.to_vec()));
                let add = Subspace::from_rows(field, n, vec![row.to_vec()]);
                acc = acc.sum(&add).expect("chain accumulation in one ambient space");
            }
        }
    }
    // The gens were collected last block first; their joint span is the whole
    // space by construction.
    debug_assert_eq!(acc.dim(), space.dim());
    GenList::new(field, n, gens)
}

/// The coordinate generator list of the free sheaf O^E: generator e with
/// weight ±u_e.
pub fn coordinate_genlist(field: Field, n: usize, negate: bool) -> GenList {
    let gens = (0..n)
        .map(|e| {
            let mut w = vec![0i64; n];
            w[e] = if negate { -1 } else { 1 };
            let mut v = vec![field.zero(); n];
            v[e] = field.one();
            (w, v)
        })
        .collect();
    GenList::new(field, n, gens)
}

/// Generator lists of a trivial summand O^k over a ground set of size n: the
/// k unit vectors, each at the zero weight.
pub fn trivial_genlists(field: Field, n: usize, k: usize) -> (GenList, GenList) {
    let gens = (0..k)
        .map(|i| {
            let mut v = vec![field.zero(); k];
            v[i] = field.one();
            (vec![0i64; n], v)
        })
        .collect::<Vec<_>>();
    (
        GenList::new(field, k, gens),
        GenList::new(field, k, Vec::new()),
    )
}

/// Presentation of a tensor product from presentations of the factors:
/// ambient generators are products of ambient generators, relation
/// generators are a relation generator in one slot times ambient generators
/// in the other.
pub fn tensor_pair(
    left: &(GenList, GenList),
    right: &(GenList, GenList),
) -> (GenList, GenList) {
    let field = left.0.field;
    let (da, db) = (left.0.ambient, right.0.ambient);
    let ambient = da * db;
    let kron = |x: &GenList, gx: usize, y: &GenList, gy: usize| -> (Vec<i64>, Vec<K>) {
        let w: Vec<i64> = x.weights[gx]
            .iter()
            .zip(&y.weights[gy])
            .map(|(a, b)| a + b)
            .collect();
        let mut v = vec![field.zero(); ambient];
        for i in 0..da {
            let xi = x.mat.get(i, gx);
            if xi.is_zero() {
                continue;
            }
            for j in 0..db {
                let yj = y.mat.get(j, gy);
                if !yj.is_zero() {
                    v[i + da * j] = xi * yj;
                }
            }
        }
        (w, v)
    };
    let mut amb = Vec::new();
    for gx in 0..left.0.len() {
        for gy in 0..right.0.len() {
            amb.push(kron(&left.0, gx, &right.0, gy));
        }
    }
    let mut sub = Vec::new();
    for bx in 0..left.1.len() {
        for gy in 0..right.0.len() {
            sub.push(kron(&left.1, bx, &right.0, gy));
        }
    }
    for gx in 0..left.0.len() {
        for by in 0..right.1.len() {
            sub.push(kron(&left.0, gx, &right.1, by));
        }
    }
    (
        GenList::new(field, ambient, amb),
        GenList::new(field, ambient, sub),
    )
}

/// Presentation of a wedge or symmetric power from a presentation of the
/// base: ambient generators are p-fold products of ambient generators,
/// relation generators are one relation generator times (p−1)-fold products
/// of ambient generators.
pub fn power_genlists(
    amb: &GenList,
    sub: &GenList,
    p: usize,
    kind: PowerKind,
) -> (GenList, GenList) {
    let field = amb.field;
    let d = amb.ambient;
    let g = amb.len();
    let target = match kind {
        PowerKind::Wedge => crate::combinat::binomial(d, p.min(d)),
        PowerKind::Sym => crate::combinat::multiset_count(d, p),
    };
    let target = if matches!(kind, PowerKind::Wedge) && p > d { 0 } else { target };

    let weight_sum = |lists: &GenList, members: &[usize]| -> Vec<i64> {
        let wlen = lists.weights.first().map_or(0, |w| w.len());
        let mut w = vec![0i64; wlen];
        for &m in members {
            for (i, x) in lists.weights[m].iter().enumerate() {
                w[i] += x;
            }
        }
        w
    };

    // Ambient part: induced power of the generator matrix.
    let ind = induced_power_matrix(&amb.mat, p, kind);
    let subsets: Vec<Vec<usize>> = match kind {
        PowerKind::Wedge => subsets_colex(g, p),
        PowerKind::Sym => multisets_colex(g, p),
    };
    let mut amb_gens = Vec::new();
    for (j, members) in subsets.iter().enumerate() {
        let col: Vec<K> = (0..ind.nrows()).map(|i| ind.get(i, j).clone()).collect();
        amb_gens.push((weight_sum(amb, members), col));
    }

    // Relation part: for each relation generator b, the induced power of
    // [b | ambient generators], keeping the columns that involve b.
    let mut sub_gens = Vec::new();
    for bidx in 0..sub.len() {
        let mut m = Matrix::zero(field, d, g + 1);
        for i in 0..d {
            let v = sub.mat.get(i, bidx);
            if !v.is_zero() {
                m.set(i, 0, v.clone());
            }
            for c in 0..g {
                let v = amb.mat.get(i, c);
                if !v.is_zero() {
                    m.set(i, c + 1, v.clone());
                }
            }
        }
        let ind_b = induced_power_matrix(&m, p, kind);
        let subsets_b: Vec<Vec<usize>> = match kind {
            PowerKind::Wedge => subsets_colex(g + 1, p),
            PowerKind::Sym => multisets_colex(g + 1, p),
        };
        for (j, members) in subsets_b.iter().enumerate() {
            if !members.contains(&0) {
                continue;
            }
            let col: Vec<K> = (0..ind_b.nrows()).map(|i| ind_b.get(i, j).clone()).collect();
            let wlen = sub.weights[bidx].len();
            let mut w = vec![0i64; wlen];
            for &mem in members {
                let part = if mem == 0 {
                    &sub.weights[bidx]
                } else {
                    &amb.weights[mem - 1]
                };
                for (i, x) in part.iter().enumerate() {
                    w[i] += x;
                }
            }
            sub_gens.push((w, col));
        }
    }

    (
        GenList::new(field, target, amb_gens),
        GenList::new(field, target, sub_gens),
    )
}

/// Coordinates of e_e ∧ v: ∧^p k^d → ∧^{p+1} k^d in colex subset bases.
pub fn wedge_insert_coords(d: usize, p: usize, e: usize, coeffs: &[K], field: Field) -> Vec<K> {
    let out_len = crate::combinat::binomial(d, p + 1);
    let mut out = vec![field.zero(); out_len];
    for (j, t) in subsets_colex(d, p).iter().enumerate() {
        if coeffs[j].is_zero() || t.contains(&e) {
            continue;
        }
        let pos = t.iter().filter(|&&x| x < e).count();
        let mut t2 = t.clone();
        t2.insert(pos, e);
        let sign_neg = pos % 2 == 1;
        let val = if sign_neg { -&coeffs[j] } else { coeffs[j].clone() };
        let r = subset_colex_rank(&t2);
        let cur = &out[r] + &val;
        out[r] = cur;
    }
    out
}

/// Coordinates of the contraction ι_{e^*} v: ∧^p k^d → ∧^{p−1} k^d in colex
/// subset bases.
pub fn contract_coords(d: usize, p: usize, e: usize, coeffs: &[K], field: Field) -> Vec<K> {
    let out_len = crate::combinat::binomial(d, p - 1);
    let mut out = vec![field.zero(); out_len];
    for (j, t) in subsets_colex(d, p).iter().enumerate() {
        if coeffs[j].is_zero() || !t.contains(&e) {
            continue;
        }
        let pos = t.iter().position(|&x| x == e).unwrap();
        let t2: Vec<usize> = t.iter().copied().filter(|&x| x != e).collect();
        let sign_neg = pos % 2 == 1;
        let val = if sign_neg { -&coeffs[j] } else { coeffs[j].clone() };
        let r = subset_colex_rank(&t2);
        let cur = &out[r] + &val;
        out[r] = cur;
    }
    out
}

/// Colex rank of a multiset extension: Sym-basis bookkeeping for products.
pub fn sym_insert_rank(multiset: &[usize], e: usize) -> usize {
    let mut m = multiset.to_vec();
    let pos = m.partition_point(|&x| x <= e);
    m.insert(pos, e);
    multiset_colex_rank(&m)
}
