//! Loading realizations from JSON files.
//!
//! The accepted shape is an object with a `rows` array of arrays; entries
//! may be JSON integers or strings (strings go through the field's scalar
//! parser, so `"2/3"` works over ℚ).  An optional `field` label overrides
//! the command-line field, and an optional `ground` allows the empty row
//! list that spans the zero subspace.

use std::path::Path;

use serde::Deserialize;

use tautcoh_core::error::{CoreError, Result};
use tautcoh_core::matrix::Matrix;
use tautcoh_core::matroid::Realization;
use tautcoh_core::scalar::Field;

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum EntryVal {
    Int(i64),
    Str(String),
}

#[derive(Debug, Deserialize)]
struct RealizationFile {
    #[serde(default)]
    field: Option<String>,
    #[serde(default)]
    ground: Option<usize>,
    rows: Vec<Vec<EntryVal>>,
}

fn read_file(path: &Path) -> Result<RealizationFile> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CoreError::Input(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| CoreError::Input(format!("bad realization JSON in {}: {e}", path.display())))
}

fn ground_of(file: &RealizationFile, path: &Path) -> Result<usize> {
    if let Some(first) = file.rows.first() {
        if first.is_empty() {
            return Err(CoreError::Input(format!(
                "{}: rows must have at least one entry",
                path.display()
            )));
        }
        if file.rows.iter().any(|r| r.len() != first.len()) {
            return Err(CoreError::Input(format!(
                "{}: all rows must have the same length",
                path.display()
            )));
        }
        Ok(first.len())
    } else {
        file.ground.ok_or_else(|| {
            CoreError::Input(format!(
                "{}: an empty row list needs an explicit \"ground\"",
                path.display()
            ))
        })
    }
}

/// Load a realization, preferring the file's own field label over the
/// command-line default.
pub fn load_realization(path: &Path, default_field: Field) -> Result<Realization> {
    let file = read_file(path)?;
    let field = match &file.field {
        Some(label) => Field::parse_label(label)?,
        None => default_field,
    };
    let ground = ground_of(&file, path)?;
    let mut m = Matrix::zero(field, file.rows.len(), ground);
    for (i, row) in file.rows.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            let scalar = match entry {
                EntryVal::Int(v) => field.scalar_i64(*v),
                EntryVal::Str(s) => field.scalar_from_str(s)?,
            };
            m.set(i, j, scalar);
        }
    }
    Ok(Realization::from_matrix(m))
}

/// Load integer rows (for corpus-style uses that need raw integer
/// provenance), with the file's field label if present.
pub fn load_integer_rows(path: &Path) -> Result<(Option<String>, usize, Vec<Vec<i64>>)> {
    let file = read_file(path)?;
    let ground = ground_of(&file, path)?;
    let mut rows = Vec::with_capacity(file.rows.len());
    for row in &file.rows {
        let mut out = Vec::with_capacity(row.len());
        for entry in row {
            match entry {
                EntryVal::Int(v) => out.push(*v),
                EntryVal::Str(s) => out.push(s.parse::<i64>().map_err(|_| {
                    CoreError::Input(format!(
                        "{}: verification corpora need integer entries, got {s:?}",
                        path.display()
                    ))
                })?),
            }
        }
        rows.push(out);
    }
    Ok((file.field.clone(), ground, rows))
}
