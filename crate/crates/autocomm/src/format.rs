//! Plain-text Cayley table files.
//!
//! ```text
//! # optional comment lines
//! 3
//! 0 1 2
//! 1 2 0
//! 2 0 1
//! ```
//!
//! The first non-comment line is the order `n`, followed by `n` rows of `n`
//! whitespace-separated entries in `[0, n)`. Element `0` must be the identity.

use std::fmt::Write as _;
use std::path::Path;

use autocomm_core::error::{AxiomViolation, Error as CoreError};
use autocomm_core::{Elem, GroupTable};
use thiserror::Error;

use crate::error::CliError;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: entry {value} is out of range for order {order}")]
    OutOfRange { line: usize, value: usize, order: usize },
    #[error("line {line}: expected {expected} entries, found {found}")]
    RowLength { line: usize, expected: usize, found: usize },
    #[error("expected {expected} rows, found {found}")]
    MissingRows { expected: usize, found: usize },
    #[error("not a group: {0}")]
    Axiom(AxiomViolation),
    #[error("not a group: {0}")]
    Invalid(CoreError),
}

impl FormatError {
    pub fn line(&self) -> Option<usize> {
        match *self {
            FormatError::Syntax { line, .. }
            | FormatError::OutOfRange { line, .. }
            | FormatError::RowLength { line, .. } => Some(line),
            _ => None,
        }
    }
}

/// Parses and then validates a table. Line numbers are 1-based.
pub fn parse_group_table(text: &str) -> Result<GroupTable, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, first) = lines.next().ok_or(FormatError::Syntax {
        line: 1,
        message: "missing group order".into(),
    })?;
    let order: usize = first.parse().map_err(|_| FormatError::Syntax {
        line,
        message: format!("expected the group order, found {first:?}"),
    })?;
    if order == 0 {
        return Err(FormatError::Syntax {
            line,
            message: "group order must be positive".into(),
        });
    }

    let mut rows: Vec<Vec<Elem>> = Vec::with_capacity(order);
    for (line, text) in lines {
        if rows.len() == order {
            return Err(FormatError::Syntax {
                line,
                message: "extra row after the table".into(),
            });
        }
        let mut row = Vec::with_capacity(order);
        for token in text.split_whitespace() {
            let value: usize = token.parse().map_err(|_| FormatError::Syntax {
                line,
                message: format!("expected a non-negative integer, found {token:?}"),
            })?;
            if value >= order {
                return Err(FormatError::OutOfRange { line, value, order });
            }
            row.push(value);
        }
        if row.len() != order {
            return Err(FormatError::RowLength {
                line,
                expected: order,
                found: row.len(),
            });
        }
        rows.push(row);
    }
    if rows.len() != order {
        return Err(FormatError::MissingRows {
            expected: order,
            found: rows.len(),
        });
    }
    GroupTable::from_rows(&rows).map_err(|e| match e {
        CoreError::Axiom(v) => FormatError::Axiom(v),
        other => FormatError::Invalid(other),
    })
}

pub fn write_group_table(g: &GroupTable) -> String {
    let mut out = String::new();
    if let Some(name) = g.name() {
        let _ = writeln!(out, "# {name}");
    }
    let _ = writeln!(out, "{}", g.order());
    for row in g.rows() {
        let cells: Vec<String> = row.iter().map(|x| x.to_string()).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}

pub fn read_group_file(path: &Path) -> Result<GroupTable, CliError> {
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    let g = parse_group_table(&text).map_err(|source| CliError::Format {
        path: path.to_path_buf(),
        source,
    })?;
    let name = path.file_stem().map(|s| s.to_string_lossy().into_owned());
    Ok(match name {
        Some(name) => g.with_name(name),
        None => g,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial() {
        assert_eq!(parse_group_table("1\n0").unwrap().order(), 1);
    }

    #[test]
    fn out_of_range_names_the_line() {
        let e = parse_group_table("3\n0 1 2\n1 2 7\n2 0 1\n").unwrap_err();
        assert_eq!(
            e,
            FormatError::OutOfRange {
                line: 3,
                value: 7,
                order: 3
            }
        );
    }

    #[test]
    fn comments_are_skipped() {
        let g = parse_group_table("# Z3\n\n3\n# rows\n0 1 2\n1 2 0\n2 0 1\n").unwrap();
        assert_eq!(g.order(), 3);
        assert_eq!(g.mul(2, 2), 1);
    }
}
