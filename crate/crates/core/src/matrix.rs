//! Dense exact matrices, reduced row echelon form, kernels, subspace
//! arithmetic, and induced matrices on wedge / symmetric powers.
//!
//! Conventions fixed here and relied on everywhere else:
//!
//! * Subspaces of k^n are *row spaces*; the canonical representative of a
//!   subspace is its reduced row echelon basis with zero rows dropped.
//!   Canonicity makes subspace equality a plain comparison.
//! * A `rows × cols` matrix acts on column vectors, i.e. it is a linear map
//!   k^cols → k^rows; induced power matrices are functorial for products in
//!   that convention.
//! * Induced bases of ∧^p and Sym^p are ordered colexicographically (see
//!   [`crate::combinat`]).

use crate::combinat::{multiset_colex_rank, multisets_colex, subsets_colex};
use crate::error::{CoreError, Result};
use crate::scalar::{Field, K};

/// A dense matrix over one of the supported exact fields.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

/// Which multilinear functor an induced matrix is taken in.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum PowerKind {
    /// Exterior power ∧^p: bases are p-subsets in colex order.
    Wedge,
    /// Symmetric power Sym^p: bases are p-multisets in colex order.
    Sym,
}

impl Matrix {
    /// The all-zeros matrix of the given shape.
    pub fn zero(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    /// The identity matrix.
    pub fn identity(field: Field, n: usize) -> Matrix {
        let mut m = Matrix::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    /// Build from explicit rows; all rows must have equal length.
    pub fn from_rows(field: Field, rows: Vec<Vec<K>>) -> Matrix {
        let cols = rows.first().map_or(0, |r| r.len());
        assert!(
            rows.iter().all(|r| r.len() == cols),
            "internal invariant: ragged rows"
        );
        let nrows = rows.len();
        Matrix {
            field,
            rows: nrows,
            cols,
            data: rows.into_iter().flatten().collect(),
        }
    }

    /// Build from machine integers, mostly for tests and fixed data.
    pub fn from_i64(field: Field, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(
            field,
            rows.iter()
                .map(|r| r.iter().map(|&v| field.scalar_i64(v)).collect())
                .collect(),
        )
    }

    /// Field of the entries.
    pub fn field(&self) -> Field {
        self.field
    }

    /// Number of rows.
    pub fn nrows(&self) -> usize {
        self.rows
    }

    /// Number of columns.
    pub fn ncols(&self) -> usize {
        self.cols
    }

    /// Entry accessor.
    pub fn get(&self, r: usize, c: usize) -> &K {
        &self.data[r * self.cols + c]
    }

    /// Entry mutator.
    pub fn set(&mut self, r: usize, c: usize, v: K) {
        self.data[r * self.cols + c] = v;
    }

    /// A row as a slice.
    pub fn row(&self, r: usize) -> &[K] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// All rows as owned vectors.
    pub fn rows_vec(&self) -> Vec<Vec<K>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    /// The entrywise negation.
    pub fn scaled_neg(&self) -> Matrix {
        let mut out = self.clone();
        for v in &mut out.data {
            if !v.is_zero() {
                *v = -&*v;
            }
        }
        out
    }

    /// Add another matrix of the same shape in place.
    pub fn add_in_place(&mut self, other: &Matrix) {
        debug_assert_eq!((self.rows, self.cols), (other.rows, other.cols));
        for (a, b) in self.data.iter_mut().zip(&other.data) {
            if !b.is_zero() {
                *a = &*a + b;
            }
        }
    }

    /// Whether every entry is zero.
    pub fn is_zero_matrix(&self) -> bool {
        self.data.iter().all(|v| v.is_zero())
    }

    /// Matrix transpose.
    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zero(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    /// Matrix product `self * rhs`.
    pub fn mul(&self, rhs: &Matrix) -> Result<Matrix> {
        if self.cols != rhs.rows {
            return Err(CoreError::AmbientMismatch {
                left: self.cols,
                right: rhs.rows,
            });
        }
        let mut out = Matrix::zero(self.field, self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let v = &(a * b) + out.get(r, c);
                    out.set(r, c, v);
                }
            }
        }
        Ok(out)
    }

    /// Vertical stack `[self; below]`.
    pub fn stack(&self, below: &Matrix) -> Result<Matrix> {
        if self.cols != below.cols {
            return Err(CoreError::AmbientMismatch {
                left: self.cols,
                right: below.cols,
            });
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&below.data);
        Ok(Matrix {
            field: self.field,
            rows: self.rows + below.rows,
            cols: self.cols,
            data,
        })
    }

    /// Submatrix on the given column indices (in the given order).
    pub fn select_columns(&self, cols: &[usize]) -> Matrix {
        let mut out = Matrix::zero(self.field, self.rows, cols.len());
        for r in 0..self.rows {
            for (j, &c) in cols.iter().enumerate() {
                out.set(r, j, self.get(r, c).clone());
            }
        }
        out
    }

    /// Submatrix on the given row indices (in the given order).
    pub fn select_rows(&self, rows: &[usize]) -> Matrix {
        let mut out = Matrix::zero(self.field, rows.len(), self.cols);
        for (i, &r) in rows.iter().enumerate() {
            for c in 0..self.cols {
                out.set(i, c, self.get(r, c).clone());
            }
        }
        out
    }

    /// Apply `v ↦ self · v` to a column vector given as a slice.
    pub fn apply(&self, v: &[K]) -> Vec<K> {
        assert_eq!(v.len(), self.cols, "internal invariant: apply shape");
        (0..self.rows)
            .map(|r| {
                let mut acc = self.field.zero();
                for c in 0..self.cols {
                    let a = self.get(r, c);
                    if !a.is_zero() && !v[c].is_zero() {
                        acc = &acc + &(a * &v[c]);
                    }
                }
                acc
            })
            .collect()
    }

    /// Scale a row in place.
    fn scale_row(&mut self, r: usize, s: &K) {
        for c in 0..self.cols {
            let v = self.get(r, c) * s;
            self.set(r, c, v);
        }
    }

    /// `row[dst] += s * row[src]` in place.
    fn add_scaled_row(&mut self, dst: usize, src: usize, s: &K) {
        for c in 0..self.cols {
            let v = self.get(src, c) * s;
            if v.is_zero() {
                continue;
            }
            let w = &v + self.get(dst, c);
            self.set(dst, c, w);
        }
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form.
    ///
    /// Returns the reduced matrix (same shape; zero rows at the bottom) and
    /// the pivot column of each nonzero row. The rank is `pivots.len()`.
    pub fn rref(&self) -> (Matrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut next_row = 0usize;
        for col in 0..m.cols {
            // Find a pivot in this column at or below `next_row`; prefer the
            // smallest scalar representation to keep rational entries tame.
            let mut best: Option<usize> = None;
            for r in next_row..m.rows {
                if !m.get(r, col).is_zero() {
                    match best {
                        None => best = Some(r),
                        Some(b) => {
                            if m.get(r, col).size_hint() < m.get(b, col).size_hint() {
                                best = Some(r);
                            }
                        }
                    }
                }
            }
            let Some(pivot_row) = best else { continue };
            m.swap_rows(next_row, pivot_row);
            let inv = m
                .get(next_row, col)
                .inv()
                .expect("nonzero pivot has an inverse");
            m.scale_row(next_row, &inv);
            for r in 0..m.rows {
                if r != next_row && !m.get(r, col).is_zero() {
                    let s = -m.get(r, col);
                    m.add_scaled_row(r, next_row, &s);
                }
            }
            pivots.push(col);
            next_row += 1;
            if next_row == m.rows {
                break;
            }
        }
        (m, pivots)
    }

    /// Rank via row reduction.
    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Reduced-echelon basis of the right kernel {x : self · x = 0}, one
    /// kernel vector per row of the result.
    pub fn kernel_basis(&self) -> Matrix {
        let (r, pivots) = self.rref();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = Some(i);
            }
            v
        };
        let mut rows = Vec::new();
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut v = vec![self.field.zero(); self.cols];
            v[free] = self.field.one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r.get(i, free);
            }
            rows.push(v);
        }
        if rows.is_empty() {
            return Matrix::zero(self.field, 0, self.cols);
        }
        // Canonicalise: the construction above is echelon up to row order and
        // signs; a final reduction makes the output independent of it.
        let m = Matrix::from_rows(self.field, rows);
        let (k, piv) = m.rref();
        k.select_rows(&(0..piv.len()).collect::<Vec<_>>())
    }

    /// Largest entry-size heuristic, for tests that watch coefficient growth.
    pub fn max_entry_size(&self) -> usize {
        self.data.iter().map(|k| k.size_hint()).max().unwrap_or(0)
    }
}

/// Reduce `v` against reduced-echelon rows `rr` (with pivot columns `pivots`):
/// returns the coefficient of each row and the remainder after subtracting.
///
/// The remainder is zero exactly when `v` lies in the row space.
pub fn reduce_vector(rr: &Matrix, pivots: &[usize], v: &[K]) -> (Vec<K>, Vec<K>) {
    let mut rem = v.to_vec();
    let mut coeffs = Vec::with_capacity(pivots.len());
    for (i, &p) in pivots.iter().enumerate() {
        let c = rem[p].clone();
        if !c.is_zero() {
            for col in 0..rr.ncols() {
                let a = rr.get(i, col);
                if !a.is_zero() {
                    let t = &rem[col] - &(&c * a);
                    rem[col] = t;
                }
            }
        }
        coeffs.push(c);
    }
    (coeffs, rem)
}

/// Intersection of two row spaces as a canonical (rref) basis matrix.
///
/// Solving λ·A = μ·B amounts to the kernel of the stacked transpose
/// `[Aᵀ | −Bᵀ]`; the λ part then maps back into the ambient space.
pub fn subspace_intersect(a: &Matrix, b: &Matrix) -> Result<Matrix> {
    if a.ncols() != b.ncols() {
        return Err(CoreError::AmbientMismatch {
            left: a.ncols(),
            right: b.ncols(),
        });
    }
    if a.field() != b.field() {
        return Err(CoreError::FieldMismatch(
            a.field().to_string(),
            b.field().to_string(),
        ));
    }
    let field = a.field();
    let n = a.ncols();
    // Columns of the system are the rows of A then rows of B (negated).
    let mut sys = Matrix::zero(field, n, a.nrows() + b.nrows());
    for r in 0..a.nrows() {
        for c in 0..n {
            sys.set(c, r, a.get(r, c).clone());
        }
    }
    for r in 0..b.nrows() {
        for c in 0..n {
            sys.set(c, a.nrows() + r, -b.get(r, c));
        }
    }
    let ker = sys.kernel_basis();
    let mut rows = Vec::new();
    for i in 0..ker.nrows() {
        let lambda = &ker.row(i)[0..a.nrows()];
        let mut v = vec![field.zero(); n];
        for (j, l) in lambda.iter().enumerate() {
            if l.is_zero() {
                continue;
            }
            for c in 0..n {
                let t = &v[c] + &(l * a.get(j, c));
                v[c] = t;
            }
        }
        rows.push(v);
    }
    let m = Matrix::from_rows(field, rows);
    let (r, piv) = m.rref();
    Ok(r.select_rows(&(0..piv.len()).collect::<Vec<_>>()))
}

/// The matrix induced by `m : k^cols → k^rows` on the p-th wedge or symmetric
/// power, in colex-ordered induced bases.
pub fn induced_power_matrix(m: &Matrix, p: usize, kind: PowerKind) -> Matrix {
    let field = m.field();
    match kind {
        PowerKind::Wedge => {
            let src = subsets_colex(m.ncols(), p);
            let dst = subsets_colex(m.nrows(), p);
            let mut out = Matrix::zero(field, dst.len(), src.len());
            for (j, cols) in src.iter().enumerate() {
                for (i, rows) in dst.iter().enumerate() {
                    out.set(i, j, det(&m.select_rows(rows).select_columns(cols)));
                }
            }
            out
        }
        PowerKind::Sym => {
            let src = multisets_colex(m.ncols(), p);
            let dst_len = crate::combinat::multiset_count(m.nrows(), p);
            let mut out = Matrix::zero(field, dst_len, src.len());
            for (j, ms) in src.iter().enumerate() {
                for (rank, coeff) in sym_image(m, ms) {
                    out.set(rank, j, coeff);
                }
            }
            out
        }
    }
}

/// Expand the Sym image of a monomial basis vector: the product of the images
/// of each factor, accumulated in the monomial basis of the target.
///
/// All coefficients arise by integer accumulation in the field, so this is
/// valid in every characteristic (no divided powers are involved).
fn sym_image(m: &Matrix, multiset: &[usize]) -> Vec<(usize, K)> {
    let field = m.field();
    // Map from sorted multiset of target indices to coefficient.
    let mut acc: std::collections::BTreeMap<Vec<usize>, K> = std::collections::BTreeMap::new();
    acc.insert(Vec::new(), field.one());
    for &c in multiset {
        let mut next: std::collections::BTreeMap<Vec<usize>, K> = std::collections::BTreeMap::new();
        for (ms, coeff) in acc {
            for r in 0..m.nrows() {
                let a = m.get(r, c);
                if a.is_zero() {
                    continue;
                }
                let mut key = ms.clone();
                let pos = key.partition_point(|&x| x <= r);
                key.insert(pos, r);
                let add = &coeff * a;
                match next.get_mut(&key) {
                    Some(v) => *v = &*v + &add,
                    None => {
                        next.insert(key, add);
                    }
                }
            }
        }
        acc = next;
    }
    acc.into_iter()
        .filter(|(_, v)| !v.is_zero())
        .map(|(ms, v)| (multiset_colex_rank(&ms), v))
        .collect()
}

/// Determinant by fraction-free-ish elimination on a copy (matrices here are
/// tiny; clarity over speed).
pub fn det(m: &Matrix) -> K {
    assert_eq!(m.nrows(), m.ncols(), "internal invariant: det of non-square");
    let field = m.field();
    let n = m.nrows();
    let mut a = m.clone();
    let mut acc = field.one();
    for col in 0..n {
        let mut pivot = None;
        for r in col..n {
            if !a.get(r, col).is_zero() {
                pivot = Some(r);
                break;
            }
        }
        let Some(p) = pivot else {
            return field.zero();
        };
        if p != col {
            a.swap_rows(p, col);
            acc = -&acc;
        }
        let pv = a.get(col, col).clone();
        acc = &acc * &pv;
        let inv = pv.inv().expect("nonzero pivot");
        for r in col + 1..n {
            if !a.get(r, col).is_zero() {
                let s = -&(a.get(r, col) * &inv);
                a.add_scaled_row(r, col, &s);
            }
        }
    }
    acc
}

/// A subspace of k^n held by its canonical reduced-echelon basis.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Subspace {
    field: Field,
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    /// The zero subspace of k^n.
    pub fn zero(field: Field, ambient: usize) -> Subspace {
        Subspace {
            field,
            ambient,
            basis: Matrix::zero(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    /// The full space k^n.
    pub fn full(field: Field, ambient: usize) -> Subspace {
        Subspace::from_matrix(Matrix::identity(field, ambient))
    }

    /// Row space of an arbitrary matrix, canonicalised.
    pub fn from_matrix(m: Matrix) -> Subspace {
        let (r, pivots) = m.rref();
        let basis = r.select_rows(&(0..pivots.len()).collect::<Vec<_>>());
        Subspace {
            field: m.field(),
            ambient: m.ncols(),
            basis,
            pivots,
        }
    }

    /// Span of explicit vectors.
    pub fn from_rows(field: Field, ambient: usize, rows: Vec<Vec<K>>) -> Subspace {
        if rows.is_empty() {
            return Subspace::zero(field, ambient);
        }
        Subspace::from_matrix(Matrix::from_rows(field, rows))
    }

    /// Dimension.
    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    /// Ambient dimension.
    pub fn ambient(&self) -> usize {
        self.ambient
    }

    /// Field of definition.
    pub fn field(&self) -> Field {
        self.field
    }

    /// The canonical rref basis matrix (dim × ambient).
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    /// Pivot columns of the canonical basis.
    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Membership test.
    pub fn contains(&self, v: &[K]) -> bool {
        let (_, rem) = reduce_vector(&self.basis, &self.pivots, v);
        rem.iter().all(|k| k.is_zero())
    }

    /// Containment of another subspace.
    pub fn contains_space(&self, other: &Subspace) -> bool {
        (0..other.dim()).all(|i| self.contains(other.basis.row(i)))
    }

    /// Intersection of two subspaces of the same ambient space.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        Ok(Subspace::from_matrix(subspace_intersect(
            &self.basis,
            &other.basis,
        )?))
    }

    /// Sum (join) of two subspaces.
    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        Ok(Subspace::from_matrix(self.basis.stack(&other.basis)?))
    }

    /// The subspace of vectors supported inside `support` (true = coordinate
    /// allowed): {v ∈ self : v_e = 0 whenever support[e] is false}.
    pub fn restrict_support(&self, support: &[bool]) -> Subspace {
        assert_eq!(support.len(), self.ambient);
        let banned: Vec<usize> = (0..self.ambient).filter(|&e| !support[e]).collect();
        if banned.is_empty() || self.dim() == 0 {
            return if banned.is_empty() {
                self.clone()
            } else {
                Subspace::zero(self.field, self.ambient)
            };
        }
        let banned_cols = self.basis.select_columns(&banned);
        let lambda = banned_cols.transpose().kernel_basis();
        let new_basis = lambda.mul(&self.basis).expect("shape");
        Subspace::from_matrix(new_basis)
    }

    /// Image under the coordinate projection onto `coords` (the new ambient
    /// space is indexed by `coords` in the given order).
    pub fn project(&self, coords: &[usize]) -> Subspace {
        Subspace::from_matrix(self.basis.select_columns(coords))
    }

    /// Image under the coordinate projection onto `coords`, kept inside the
    /// original ambient space (all other coordinates zeroed).
    pub fn project_in_ambient(&self, coords: &[usize]) -> Subspace {
        let keep: std::collections::HashSet<usize> = coords.iter().copied().collect();
        let mut m = self.basis.clone();
        for r in 0..m.nrows() {
            for c in 0..m.ncols() {
                if !keep.contains(&c) {
                    m.set(r, c, self.field.zero());
                }
            }
        }
        Subspace::from_matrix(m)
    }

    /// Orthogonal complement under the standard dot product (no conjugation).
    pub fn perp(&self) -> Subspace {
        if self.dim() == 0 {
            return Subspace::full(self.field, self.ambient);
        }
        Subspace::from_matrix(self.basis.kernel_basis())
    }

    /// Express `v` in the canonical basis; `None` if `v` is not a member.
    pub fn coords_of(&self, v: &[K]) -> Option<Vec<K>> {
        let (coeffs, rem) = reduce_vector(&self.basis, &self.pivots, v);
        if rem.iter().all(|k| k.is_zero()) {
            Some(coeffs)
        } else {
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q() -> Field {
        Field::Q
    }

    #[test]
    fn rref_canonical_and_idempotent() {
        let m = Matrix::from_i64(q(), &[&[1, 1, 0], &[0, 1, 1], &[1, 2, 1]]);
        let (r, piv) = m.rref();
        assert_eq!(piv, vec![0, 1]);
        // rref of rref is itself.
        let (r2, piv2) = r.rref();
        assert_eq!(r, r2);
        assert_eq!(piv, piv2);
        // Row space preserved: each original row reduces to zero remainder.
        for i in 0..m.nrows() {
            let (_, rem) = reduce_vector(&r, &piv, m.row(i));
            assert!(rem.iter().all(|k| k.is_zero()));
        }
    }

    #[test]
    fn kernel_rank_nullity() {
        let m = Matrix::from_i64(q(), &[&[1, 0, 1, 1], &[0, 1, 1, 2]]);
        let k = m.kernel_basis();
        assert_eq!(k.nrows(), 2); // 4 columns − rank 2
        // Every kernel row is annihilated.
        for i in 0..k.nrows() {
            let img = m.apply(k.row(i));
            assert!(img.iter().all(|x| x.is_zero()));
        }
        // Kernel basis is itself in canonical form.
        let (kr, piv) = k.rref();
        assert_eq!(kr.select_rows(&[0, 1]), k);
        assert_eq!(piv.len(), 2);
    }

    #[test]
    fn intersect_examples() {
        // span{(1,0),(0,1)} ∩ span{(1,1)} = span{(1,1)}.
        let a = Matrix::from_i64(q(), &[&[1, 0], &[0, 1]]);
        let b = Matrix::from_i64(q(), &[&[1, 1]]);
        let i = subspace_intersect(&a, &b).unwrap();
        assert_eq!(i, Matrix::from_i64(q(), &[&[1, 1]]));
        // Skew lines in k^3 meet in 0.
        let a = Matrix::from_i64(q(), &[&[1, 0, 0]]);
        let b = Matrix::from_i64(q(), &[&[0, 1, 0]]);
        let i = subspace_intersect(&a, &b).unwrap();
        assert_eq!(i.nrows(), 0);
        // Ambient mismatch is an error.
        let c = Matrix::from_i64(q(), &[&[1, 0]]);
        assert!(subspace_intersect(&a, &c).is_err());
    }

    #[test]
    fn intersect_commutative_dominated() {
        let a = Matrix::from_i64(q(), &[&[1, 0, 1], &[0, 1, 1]]);
        let b = Matrix::from_i64(q(), &[&[1, 1, 2], &[1, -1, 0]]);
        let ab = subspace_intersect(&a, &b).unwrap();
        let ba = subspace_intersect(&b, &a).unwrap();
        assert_eq!(ab, ba);
        // A ∩ A = A (canonical form of A).
        let aa = subspace_intersect(&a, &a).unwrap();
        let (ar, apiv) = a.rref();
        assert_eq!(aa, ar.select_rows(&(0..apiv.len()).collect::<Vec<_>>()));
    }

    #[test]
    fn induced_wedge_is_determinant_at_top() {
        let m = Matrix::from_i64(q(), &[&[1, 2], &[3, 4]]);
        let w = induced_power_matrix(&m, 2, PowerKind::Wedge);
        assert_eq!(w.nrows(), 1);
        assert_eq!(w.get(0, 0), &q().scalar_i64(-2));
        assert_eq!(det(&m), q().scalar_i64(-2));
    }

    #[test]
    fn induced_functorial_on_products() {
        let a = Matrix::from_i64(q(), &[&[1, 1, 0], &[0, 1, 1]]);
        let b = Matrix::from_i64(q(), &[&[1, 2], &[0, 1], &[1, 0]]);
        let ab = a.mul(&b).unwrap();
        for kind in [PowerKind::Wedge, PowerKind::Sym] {
            let lhs = induced_power_matrix(&ab, 2, kind);
            let rhs = induced_power_matrix(&a, 2, kind)
                .mul(&induced_power_matrix(&b, 2, kind))
                .unwrap();
            assert_eq!(lhs, rhs, "{kind:?}");
        }
    }

    #[test]
    fn sym_induced_in_characteristic_two() {
        // Sym² of the identity is the identity even in characteristic 2,
        // because no divided powers enter the monomial-basis expansion.
        let f = Field::Fp(2);
        let id = Matrix::identity(f, 2);
        let s = induced_power_matrix(&id, 2, PowerKind::Sym);
        assert_eq!(s, Matrix::identity(f, 3));
        // And the coefficient 2 = 0 shows up where it must: for m = [[1,1],[0,1]],
        // image of y² is (x+y)² = x² + 2xy + y² = x² + y² mod 2.
        let m = Matrix::from_i64(f, &[&[1, 1], &[0, 1]]);
        let s = induced_power_matrix(&m, 2, PowerKind::Sym);
        // Basis order (colex): x², xy, y² with x = e₀, y = e₁.
        assert_eq!(s.get(0, 2), &f.scalar_i64(1));
        assert_eq!(s.get(1, 2), &f.scalar_i64(0));
        assert_eq!(s.get(2, 2), &f.scalar_i64(1));
    }

    #[test]
    fn subspace_support_restriction_and_projection() {
        // L = rowspace [[1,0,1],[0,1,1]] (a uniform rank-2 realization).
        let l = Subspace::from_matrix(Matrix::from_i64(q(), &[&[1, 0, 1], &[0, 1, 1]]));
        // Vectors with first coordinate zero: span{(0,1,1)}.
        let s = l.restrict_support(&[false, true, true]);
        assert_eq!(s.dim(), 1);
        assert!(s.contains(&[q().scalar_i64(0), q().scalar_i64(1), q().scalar_i64(1)]));
        // Projection to the last coordinate is everything.
        let p = l.project(&[2]);
        assert_eq!(p.dim(), 1);
        // perp ∘ perp = id.
        assert_eq!(l.perp().perp(), l);
    }
}
