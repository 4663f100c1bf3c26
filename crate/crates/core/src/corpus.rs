//! The named corpus of realizations the verification suites run over.
//!
//! Every entry stores a raw integer row matrix, the ground-set size, a
//! provenance tag, the seed that produced it (for the random families), and
//! the basis list of its matroid over its home field.  Loading an entry —
//! from the generator or back from JSON — always rebuilds the realization
//! and recomputes its matroid; a mismatch against the recorded bases is
//! rejected, so a corpus file can never silently drift from the matroids its
//! verdicts were frozen against.
//!
//! The same integer rows can be reduced into a different field with
//! [`CorpusEntry::realization_over`]; when reduction changes the matroid
//! (U_{2,4} over 𝔽₂, say) the entry refuses with `Unrealizable`, which is
//! exactly the guard the characteristic-independence checks filter by.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{CoreError, Result};
use crate::matrix::Matrix;
use crate::matroid::{Matroid, Realization};
use crate::scalar::Field;

/// How an entry was produced.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Provenance {
    /// Uniform matroid realization U_{r,n}.
    Uniform,
    /// Full coordinate space k^n.
    Boolean,
    /// Row space of a signed graph incidence matrix.
    Graphic,
    /// A base entry with one loop appended.
    Loop,
    /// A base entry with one coloop appended.
    Coloop,
    /// Seeded random matrix, resampled until the target rank.
    RandomSeeded,
    /// Supplied from outside the generator (a user file).
    External,
}

/// One corpus realization: raw integer rows plus recorded matroid data.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CorpusEntry {
    /// Stable name, e.g. `u_2_4` or `random_f3_2`.
    pub name: String,
    /// Provenance tag.
    pub provenance: Provenance,
    /// Home field label (the field the recorded bases were computed over).
    pub field: String,
    /// Integer rows spanning the subspace (may be fewer than a basis, or
    /// linearly dependent; the span is what counts).
    pub rows: Vec<Vec<i64>>,
    /// Ground-set size (number of columns).
    pub ground: usize,
    /// Seed for the random families.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    /// Bases of the matroid over the home field, as sorted bitmasks.
    pub bases: Vec<u32>,
}

impl CorpusEntry {
    /// Build an entry, recording the matroid of the rows over `field`.
    pub fn new(
        name: &str,
        provenance: Provenance,
        field: Field,
        rows: Vec<Vec<i64>>,
        ground: usize,
        seed: Option<u64>,
    ) -> Result<CorpusEntry> {
        let real = realize_rows(field, &rows, ground)?;
        let bases: Vec<u32> = real.matroid().bases().iter().copied().collect();
        Ok(CorpusEntry {
            name: name.to_string(),
            provenance,
            field: field.to_string(),
            rows,
            ground,
            seed,
            bases,
        })
    }

    /// The home field of the entry.
    pub fn home_field(&self) -> Result<Field> {
        Field::parse_label(&self.field)
    }

    /// Rebuild the realization over the home field, re-validating the
    /// recorded bases.
    pub fn realization(&self) -> Result<Realization> {
        let field = self.home_field()?;
        let real = realize_rows(field, &self.rows, self.ground)?;
        if !self.matches_bases(&real.matroid()) {
            return Err(CoreError::Input(format!(
                "corpus entry {} failed re-validation: its matroid over {} no longer matches \
                 the recorded bases",
                self.name, self.field
            )));
        }
        Ok(real)
    }

    /// Reduce the integer rows into another field.  Refuses when the matroid
    /// differs from the recorded one, so callers comparing characteristics
    /// only ever see entries whose combinatorics survived reduction.
    pub fn realization_over(&self, field: Field) -> Result<Realization> {
        let real = realize_rows(field, &self.rows, self.ground)?;
        if !self.matches_bases(&real.matroid()) {
            return Err(CoreError::Unrealizable(format!(
                "corpus entry {} changes matroid over {field}",
                self.name
            )));
        }
        Ok(real)
    }

    fn matches_bases(&self, m: &Matroid) -> bool {
        m.bases().len() == self.bases.len() && m.bases().iter().zip(&self.bases).all(|(a, b)| a == b)
    }
}

/// Span of integer rows over a field, with the ambient dimension kept even
/// when no rows are given (the rank-zero subspace).
pub fn realize_rows(field: Field, rows: &[Vec<i64>], ground: usize) -> Result<Realization> {
    if ground > 31 {
        return Err(CoreError::SizeCap {
            what: "corpus ground set",
            limit: 31,
            got: ground,
        });
    }
    for row in rows {
        if row.len() != ground {
            return Err(CoreError::Input(format!(
                "corpus row has {} entries; the ground set has {ground}",
                row.len()
            )));
        }
    }
    if rows.is_empty() {
        return Ok(Realization::from_matrix(Matrix::zero(field, 0, ground)));
    }
    let slices: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    Ok(Realization::from_i64(field, &slices))
}

/// Size limits for corpus generation.
#[derive(Debug, Clone)]
pub struct CorpusProfile {
    /// Largest ground set for the uniform and boolean families.
    pub max_uniform: usize,
    /// Number of seeded random entries per field.
    pub random_per_field: usize,
    /// Ground-set size of the random entries.
    pub random_ground: usize,
    /// Longest path graph, counted in edges.
    pub max_path_edges: usize,
}

impl Default for CorpusProfile {
    fn default() -> CorpusProfile {
        CorpusProfile {
            max_uniform: 4,
            random_per_field: 5,
            random_ground: 4,
            max_path_edges: 8,
        }
    }
}

/// A named, re-validated list of realizations.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Corpus {
    /// Entries in generation order.
    pub entries: Vec<CorpusEntry>,
}

impl Corpus {
    /// Look up an entry by name.
    pub fn get(&self, name: &str) -> Option<&CorpusEntry> {
        self.entries.iter().find(|e| e.name == name)
    }

    /// Entries with ground set at most `max_ground`.
    pub fn up_to(&self, max_ground: usize) -> impl Iterator<Item = &CorpusEntry> {
        self.entries.iter().filter(move |e| e.ground <= max_ground)
    }

    /// Serialize to pretty JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("corpus serialization cannot fail")
    }

    /// Deserialize from JSON, re-validating every entry's matroid.
    pub fn from_json(text: &str) -> Result<Corpus> {
        let corpus: Corpus =
            serde_json::from_str(text).map_err(|e| CoreError::Input(format!("bad corpus JSON: {e}")))?;
        for entry in &corpus.entries {
            entry.realization()?;
        }
        Ok(corpus)
    }
}

/// Integer rows realizing U_{r,n} over ℚ (and over any field where the
/// matroid survives reduction): [I | 1] when n = r + 1, the all-ones row for
/// r = 1, a Vandermonde matrix otherwise.
fn uniform_rows(r: usize, n: usize) -> Vec<Vec<i64>> {
    if r == 0 {
        return Vec::new();
    }
    if r == n {
        return (0..n)
            .map(|i| (0..n).map(|j| i64::from(i == j)).collect())
            .collect();
    }
    if n == r + 1 {
        return (0..r)
            .map(|i| (0..n).map(|j| i64::from(i == j || j == n - 1)).collect())
            .collect();
    }
    if r == 1 {
        return vec![vec![1; n]];
    }
    (0..r)
        .map(|i| (0..n).map(|j| (j as i64).pow(i as u32)).collect())
        .collect()
}

/// Signed incidence rows of a graph on `vertices`, one column per edge.
fn graph_rows(vertices: usize, edges: &[(usize, usize)]) -> Vec<Vec<i64>> {
    (0..vertices)
        .map(|v| {
            edges
                .iter()
                .map(|&(a, b)| {
                    if a == v {
                        1
                    } else if b == v {
                        -1
                    } else {
                        0
                    }
                })
                .collect()
        })
        .collect()
}

/// Append one loop (a zero column) to a row matrix.
fn with_loop_rows(rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    rows.iter()
        .map(|r| {
            let mut r = r.clone();
            r.push(0);
            r
        })
        .collect()
}

/// Append one coloop (a fresh coordinate line) to a row matrix.
fn with_coloop_rows(rows: &[Vec<i64>], ground: usize) -> Vec<Vec<i64>> {
    let mut out = with_loop_rows(rows);
    let mut extra = vec![0; ground + 1];
    extra[ground] = 1;
    out.push(extra);
    out
}

/// Sample a rank-`rank` integer matrix deterministically from a seed,
/// resampling the whole matrix until the rank over `field` is exact.
fn random_rows(field: Field, seed: u64, rank: usize, ground: usize) -> Vec<Vec<i64>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let range = match field {
        Field::Q => -3..4i64,
        Field::Fp(p) => 0..p as i64,
    };
    loop {
        let rows: Vec<Vec<i64>> = (0..rank)
            .map(|_| (0..ground).map(|_| rng.gen_range(range.clone())).collect())
            .collect();
        let slices: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
        if Realization::from_i64(field, &slices).dim() == rank {
            return rows;
        }
    }
}

/// Generate a corpus under the given size profile.
pub fn make_corpus(profile: &CorpusProfile) -> Result<Corpus> {
    if profile.max_uniform > 6 {
        return Err(CoreError::SizeCap {
            what: "uniform corpus ground set",
            limit: 6,
            got: profile.max_uniform,
        });
    }
    if profile.max_path_edges > 8 {
        return Err(CoreError::SizeCap {
            what: "path corpus edge count",
            limit: 8,
            got: profile.max_path_edges,
        });
    }
    if profile.random_ground > 6 {
        return Err(CoreError::SizeCap {
            what: "random corpus ground set",
            limit: 6,
            got: profile.random_ground,
        });
    }

    let mut entries = Vec::new();

    for n in 1..=profile.max_uniform {
        for r in 0..=n {
            let entry = CorpusEntry::new(
                &format!("u_{r}_{n}"),
                Provenance::Uniform,
                Field::Q,
                uniform_rows(r, n),
                n,
                None,
            )?;
            let expected = Matroid::uniform(r, n);
            if !entry.matches_bases(&expected) {
                return Err(CoreError::Internal(format!(
                    "the integer recipe for U_{{{r},{n}}} does not realize the uniform matroid"
                )));
            }
            entries.push(entry);
        }
    }

    for n in 1..=profile.max_uniform {
        entries.push(CorpusEntry::new(
            &format!("boolean_{n}"),
            Provenance::Boolean,
            Field::Q,
            uniform_rows(n, n),
            n,
            None,
        )?);
    }

    let k3_edges = [(0, 1), (0, 2), (1, 2)];
    let k3 = graph_rows(3, &k3_edges);
    entries.push(CorpusEntry::new(
        "k3",
        Provenance::Graphic,
        Field::Q,
        k3.clone(),
        3,
        None,
    )?);
    for edges in 1..=profile.max_path_edges {
        let path: Vec<(usize, usize)> = (0..edges).map(|i| (i, i + 1)).collect();
        entries.push(CorpusEntry::new(
            &format!("path_{}", edges + 1),
            Provenance::Graphic,
            Field::Q,
            graph_rows(edges + 1, &path),
            edges,
            None,
        )?);
    }

    for (base_name, rows, ground) in [
        ("u_1_2", uniform_rows(1, 2), 2),
        ("u_2_3", uniform_rows(2, 3), 3),
        ("k3", k3, 3),
    ] {
        entries.push(CorpusEntry::new(
            &format!("{base_name}_loop"),
            Provenance::Loop,
            Field::Q,
            with_loop_rows(&rows),
            ground + 1,
            None,
        )?);
        entries.push(CorpusEntry::new(
            &format!("{base_name}_coloop"),
            Provenance::Coloop,
            Field::Q,
            with_coloop_rows(&rows, ground),
            ground + 1,
            None,
        )?);
    }

    for i in 1..=profile.random_per_field {
        let seed = 1000 + i as u64;
        entries.push(CorpusEntry::new(
            &format!("random_q_{i}"),
            Provenance::RandomSeeded,
            Field::Q,
            random_rows(Field::Q, seed, 2, profile.random_ground),
            profile.random_ground,
            Some(seed),
        )?);
    }
    for i in 1..=profile.random_per_field {
        let seed = 3000 + i as u64;
        entries.push(CorpusEntry::new(
            &format!("random_f3_{i}"),
            Provenance::RandomSeeded,
            Field::Fp(3),
            random_rows(Field::Fp(3), seed, 2, profile.random_ground),
            profile.random_ground,
            Some(seed),
        )?);
    }

    Ok(Corpus { entries })
}

/// The default corpus the suites and acceptance checks run over.
pub fn default_corpus() -> Corpus {
    make_corpus(&CorpusProfile::default()).expect("the default corpus profile is within caps")
}
