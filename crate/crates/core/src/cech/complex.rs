//! Finite complexes of based vector spaces assembled from block components,
//! with a structural d∘d = 0 check and cohomology ranks computed by sparse
//! elimination.

use std::collections::{BTreeMap, HashMap};
use std::rc::Rc;

use crate::error::{CoreError, Result};
use crate::matrix::Matrix;
use crate::scalar::{Field, K};

/// One cell: a based block sitting at a level of the complex.
#[derive(Clone, Copy, Debug)]
pub struct Cell {
    /// Cohomological level.
    pub level: usize,
    /// Dimension of the block.
    pub dim: usize,
}

/// One differential component between two cells one level apart.
pub struct Component {
    /// Source cell index.
    pub src: usize,
    /// Destination cell index (at level src.level + 1).
    pub dst: usize,
    /// Sign applied to the matrix.
    pub neg: bool,
    /// Block matrix (dst.dim × src.dim).
    pub mat: Rc<Matrix>,
}

/// A levelwise-based complex given by cells and components.
pub struct BlockComplex {
    field: Field,
    levels: usize,
    cells: Vec<Cell>,
    comps: Vec<Component>,
}

impl BlockComplex {
    /// Create an empty complex with the given number of levels.
    pub fn new(field: Field, levels: usize) -> BlockComplex {
        BlockComplex {
            field,
            levels,
            cells: Vec::new(),
            comps: Vec::new(),
        }
    }

    /// Add a cell, returning its index. Zero-dimensional cells are legal and
    /// inert.
    pub fn add_cell(&mut self, level: usize, dim: usize) -> usize {
        debug_assert!(level < self.levels);
        self.cells.push(Cell { level, dim });
        self.cells.len() - 1
    }

    /// Add a component; shapes are checked against the cells.
    pub fn add_component(&mut self, src: usize, dst: usize, neg: bool, mat: Rc<Matrix>) {
        debug_assert_eq!(self.cells[dst].level, self.cells[src].level + 1);
        debug_assert_eq!(mat.nrows(), self.cells[dst].dim);
        debug_assert_eq!(mat.ncols(), self.cells[src].dim);
        if self.cells[src].dim == 0 || self.cells[dst].dim == 0 {
            return;
        }
        self.comps.push(Component { src, dst, neg, mat });
    }

    /// Total dimension per level.
    pub fn level_dims(&self) -> Vec<usize> {
        let mut dims = vec![0usize; self.levels];
        for c in &self.cells {
            dims[c.level] += c.dim;
        }
        dims
    }

    /// Verify d∘d = 0 over all composable component pairs.
    pub fn check_d2(&self) -> Result<()> {
        // Group components by source cell for composition.
        let mut by_src: HashMap<usize, Vec<usize>> = HashMap::new();
        for (i, c) in self.comps.iter().enumerate() {
            by_src.entry(c.src).or_default().push(i);
        }
        // For each first leg a→b, compose with each second leg b→c and
        // accumulate into (a, c) blocks.
        let mut acc: HashMap<(usize, usize), Matrix> = HashMap::new();
        for first in &self.comps {
            let Some(seconds) = by_src.get(&first.dst) else {
                continue;
            };
            for &si in seconds {
                let second = &self.comps[si];
                let mut prod = second.mat.mul(&first.mat)?;
                if first.neg != second.neg {
                    prod = prod.scaled_neg();
                }
                let entry = acc
                    .entry((first.src, second.dst))
                    .or_insert_with(|| Matrix::zero(self.field, prod.nrows(), prod.ncols()));
                entry.add_in_place(&prod);
            }
        }
        for ((a, c), m) in acc {
            if !m.is_zero_matrix() {
                return Err(CoreError::Internal(format!(
                    "differential does not square to zero between cells {a} and {c}"
                )));
            }
        }
        Ok(())
    }

    /// Cohomology dimensions per level via sparse ranks.
    pub fn homology(&self) -> Vec<usize> {
        let dims = self.level_dims();
        // Basis offsets per cell inside its level.
        let mut offset = vec![0usize; self.cells.len()];
        let mut counters = vec![0usize; self.levels];
        for (i, c) in self.cells.iter().enumerate() {
            offset[i] = counters[c.level];
            counters[c.level] += c.dim;
        }
        // Assemble the level-k differential as sparse columns.
        let mut ranks = vec![0usize; self.levels];
        for k in 0..self.levels.saturating_sub(1) {
            let cols_n = dims[k];
            if cols_n == 0 || dims[k + 1] == 0 {
                continue;
            }
            let mut cols: Vec<BTreeMap<u32, K>> = vec![BTreeMap::new(); cols_n];
            for comp in &self.comps {
                if self.cells[comp.src].level != k {
                    continue;
                }
                let co = offset[comp.src];
                let ro = offset[comp.dst];
                for c in 0..comp.mat.ncols() {
                    for r in 0..comp.mat.nrows() {
                        let v = comp.mat.get(r, c);
                        if v.is_zero() {
                            continue;
                        }
                        let v = if comp.neg { -v } else { v.clone() };
                        let slot = cols[co + c].entry((ro + r) as u32).or_insert_with(|| self.field.zero());
                        let nv = &*slot + &v;
                        *slot = nv;
                    }
                }
            }
            for col in &mut cols {
                col.retain(|_, v| !v.is_zero());
            }
            ranks[k] = sparse_rank(cols);
        }
        // h^k = dim C^k − rank d^k − rank d^{k−1}.
        (0..self.levels)
            .map(|k| {
                let below = if k == 0 { 0 } else { ranks[k - 1] };
                dims[k] - ranks[k] - below
            })
            .collect()
    }
}

/// Rank of a sparse column collection by elimination with unit-pivot
/// preference, to limit coefficient growth and fill-in.
fn sparse_rank(cols: Vec<BTreeMap<u32, K>>) -> usize {
    let mut pivots: HashMap<u32, BTreeMap<u32, K>> = HashMap::new();
    let mut rank = 0usize;
    for mut col in cols {
        loop {
            let hit = col
                .iter()
                .find(|(r, _)| pivots.contains_key(r))
                .map(|(r, v)| (*r, v.clone()));
            let Some((r, coeff)) = hit else { break };
            let pcol = pivots[&r].clone();
            for (pr, pv) in pcol {
                let delta = &coeff * &pv;
                match col.get_mut(&pr) {
                    Some(slot) => {
                        let nv = &*slot - &delta;
                        if nv.is_zero() {
                            col.remove(&pr);
                        } else {
                            *slot = nv;
                        }
                    }
                    None => {
                        col.insert(pr, -&delta);
                    }
                }
            }
            debug_assert!(!col.contains_key(&r));
        }
        if col.is_empty() {
            continue;
        }
        // Choose the pivot entry with the smallest representation.
        let (&prow, _) = col
            .iter()
            .min_by_key(|(r, v)| (v.size_hint(), **r))
            .expect("nonempty column");
        let inv = col[&prow].inv().expect("pivot entry is nonzero");
        let norm: BTreeMap<u32, K> = col.iter().map(|(r, v)| (*r, v * &inv)).collect();
        pivots.insert(prow, norm);
        rank += 1;
    }
    rank
}
