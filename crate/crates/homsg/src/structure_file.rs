//! JSON structure files:
//!
//! ```json
//! {
//!   "labels": ["x", "y", "z"],
//!   "mul": [
//!     ["y", "x", "z"],
//!     ["y", "y", "z"],
//!     ["z", "z", "z"]
//!   ],
//!   "alpha": ["z", "z", "z"]
//! }
//! ```
//!
//! Table entries and `alpha` refer to elements by label.

use std::path::Path;

use homsg_core::finite::{FiniteError, FiniteHomMagma};
use serde::Deserialize;

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawStructure {
    labels: Vec<String>,
    mul: Vec<Vec<String>>,
    alpha: Vec<String>,
}

/// Errors reading a structure file.
#[derive(Debug, thiserror::Error)]
pub enum StructureFileError {
    /// The file could not be read.
    #[error("{path}: {source}")]
    Io {
        /// File path.
        path: String,
        /// Underlying error.
        source: std::io::Error,
    },
    /// Not valid JSON of the expected shape.
    #[error("invalid structure JSON: {0}")]
    Json(#[from] serde_json::Error),
    /// Wrong number of table rows.
    #[error("mul has {found} rows, expected {expected}")]
    RowCount {
        /// Rows found.
        found: usize,
        /// Rows expected (number of labels).
        expected: usize,
    },
    /// A row of the wrong length.
    #[error("mul row {row} has {found} entries, expected {expected}")]
    RaggedRow {
        /// 0-based row.
        row: usize,
        /// Entries found.
        found: usize,
        /// Entries expected.
        expected: usize,
    },
    /// A table entry that is not a label.
    #[error("mul row {row}, column {column}: unknown label {label:?}")]
    UnknownLabel {
        /// 0-based row.
        row: usize,
        /// 0-based column.
        column: usize,
        /// The entry.
        label: String,
    },
    /// An `alpha` entry that is not a label.
    #[error("alpha position {position}: unknown label {label:?}")]
    UnknownAlphaLabel {
        /// 0-based position.
        position: usize,
        /// The entry.
        label: String,
    },
    /// Rejected by structure validation (duplicate labels, wrong sizes, …).
    #[error(transparent)]
    Invalid(#[from] FiniteError),
}

/// Parses a structure from JSON text.
pub fn from_json(text: &str) -> Result<FiniteHomMagma, StructureFileError> {
    let raw: RawStructure = serde_json::from_str(text)?;
    let n = raw.labels.len();
    let index = |l: &str| raw.labels.iter().position(|x| x == l);
    if raw.mul.len() != n {
        return Err(StructureFileError::RowCount {
            found: raw.mul.len(),
            expected: n,
        });
    }
    let mut mul = Vec::with_capacity(n);
    for (row, entries) in raw.mul.iter().enumerate() {
        if entries.len() != n {
            return Err(StructureFileError::RaggedRow {
                row,
                found: entries.len(),
                expected: n,
            });
        }
        let mut r = Vec::with_capacity(n);
        for (column, label) in entries.iter().enumerate() {
            r.push(index(label).ok_or_else(|| StructureFileError::UnknownLabel {
                row,
                column,
                label: label.clone(),
            })?);
        }
        mul.push(r);
    }
    let alpha = raw
        .alpha
        .iter()
        .enumerate()
        .map(|(position, label)| {
            index(label).ok_or_else(|| StructureFileError::UnknownAlphaLabel {
                position,
                label: label.clone(),
            })
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(FiniteHomMagma::new(raw.labels, mul, alpha)?)
}

/// Reads and parses a structure file.
pub fn read(path: &Path) -> Result<FiniteHomMagma, StructureFileError> {
    let text = std::fs::read_to_string(path).map_err(|source| StructureFileError::Io {
        path: path.display().to_string(),
        source,
    })?;
    from_json(&text)
}

fn quoted(items: impl IntoIterator<Item = impl AsRef<str>>) -> String {
    let parts: Vec<String> = items
        .into_iter()
        .map(|s| serde_json::to_string(s.as_ref()).expect("strings serialize"))
        .collect();
    format!("[{}]", parts.join(", "))
}

/// Pretty JSON with one table row per line, newline-terminated.
pub fn to_json(m: &FiniteHomMagma) -> String {
    let n = m.order();
    let rows: Vec<String> = (0..n)
        .map(|a| format!("    {}", quoted((0..n).map(|b| m.label(m.mul(a, b))))))
        .collect();
    format!(
        "{{\n  \"labels\": {},\n  \"mul\": [\n{}\n  ],\n  \"alpha\": {}\n}}\n",
        quoted(m.labels()),
        rows.join(",\n"),
        quoted((0..n).map(|a| m.label(m.alpha(a)))),
    )
}

/// Single-line JSON, for streaming one structure per line.
pub fn to_json_line(m: &FiniteHomMagma) -> String {
    let n = m.order();
    let rows: Vec<String> = (0..n)
        .map(|a| quoted((0..n).map(|b| m.label(m.mul(a, b)))))
        .collect();
    format!(
        "{{\"labels\": {}, \"mul\": [{}], \"alpha\": {}}}",
        quoted(m.labels()),
        rows.join(", "),
        quoted((0..n).map(|a| m.label(m.alpha(a)))),
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use homsg_core::finite::fixture;

    #[test]
    fn round_trip_fixture() {
        for name in ["hom_not_sg", "involutive"] {
            let m = fixture(name).unwrap();
            assert_eq!(from_json(&to_json(&m)).unwrap(), m);
            assert_eq!(from_json(&to_json_line(&m)).unwrap(), m);
        }
    }

    #[test]
    fn pretty_layout() {
        let m = fixture("hom_not_sg").unwrap();
        assert_eq!(
            to_json(&m),
            "{\n  \"labels\": [\"x\", \"y\", \"z\"],\n  \"mul\": [\n    [\"y\", \"x\", \"z\"],\n    [\"y\", \"y\", \"z\"],\n    [\"z\", \"z\", \"z\"]\n  ],\n  \"alpha\": [\"z\", \"z\", \"z\"]\n}\n"
        );
    }

    #[test]
    fn positioned_errors() {
        let e = from_json(r#"{"labels":["a","b"],"mul":[["a","b"],["a","q"]],"alpha":["a","b"]}"#)
            .unwrap_err();
        assert_eq!(e.to_string(), "mul row 1, column 1: unknown label \"q\"");
        let e = from_json(r#"{"labels":["a","b"],"mul":[["a","b"],["a"]],"alpha":["a","b"]}"#)
            .unwrap_err();
        assert_eq!(e.to_string(), "mul row 1 has 1 entries, expected 2");
        let e = from_json(r#"{"labels":["a"],"mul":[["a"]],"alpha":["b"]}"#).unwrap_err();
        assert!(matches!(e, StructureFileError::UnknownAlphaLabel { position: 0, .. }));
        let e = from_json(r#"{"labels":["a","b"],"mul":[["a","b"]],"alpha":["a","b"]}"#).unwrap_err();
        assert!(matches!(e, StructureFileError::RowCount { found: 1, expected: 2 }));
        let e = from_json(r#"{"labels":["a","a"],"mul":[["a","a"],["a","a"]],"alpha":["a","a"]}"#)
            .unwrap_err();
        assert!(matches!(e, StructureFileError::Invalid(FiniteError::DuplicateLabel(_))));
        assert!(matches!(from_json("{"), Err(StructureFileError::Json(_))));
        assert!(matches!(
            from_json(r#"{"labels":[],"mul":[],"alpha":[]}"#),
            Err(StructureFileError::Invalid(FiniteError::Empty))
        ));
    }
}
