// SPDX-License-Identifier: Apache-2.0

//! Cayley table files: the order `n` on the first line, then `n` rows of
//! `n` whitespace-separated 0-based indices. Lines whose first non-blank
//! character is `#` are comments, blank lines are ignored.

use std::fmt::Write as _;
use std::path::Path;

use crate::error::{Error, Result};
use crate::group::Group;
use crate::limits::Limits;

pub fn read_cayley_file(path: impl AsRef<Path>, limits: &Limits) -> Result<Group> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| Error::Io { path: path.display().to_string(), message: e.to_string() })?;
    parse_cayley(&text, limits)
}

pub fn parse_cayley(text: &str, limits: &Limits) -> Result<Group> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line_no, header) = lines.next().ok_or(Error::Format { line: 1, message: "missing order line".into() })?;
    let n: usize = header
        .parse()
        .map_err(|_| Error::Format { line: line_no, message: format!("expected the group order, found '{header}'") })?;
    if n == 0 {
        return Err(Error::Format { line: line_no, message: "group order must be positive".into() });
    }
    limits.check_order(n as u128)?;

    let mut rows = Vec::with_capacity(n);
    let mut last_line = line_no;
    for (line_no, line) in lines {
        if rows.len() == n {
            return Err(Error::Format { line: line_no, message: format!("more than {n} rows") });
        }
        let row = line
            .split_whitespace()
            .map(|tok| {
                tok.parse::<usize>()
                    .map_err(|_| Error::Format { line: line_no, message: format!("'{tok}' is not an element index") })
            })
            .collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(Error::Format { line: line_no, message: format!("expected {n} entries, found {}", row.len()) });
        }
        rows.push(row);
        last_line = line_no;
    }
    if rows.len() < n {
        return Err(Error::Format { line: last_line, message: format!("expected {n} rows, found {}", rows.len()) });
    }
    Group::from_cayley_table_with(&rows, limits)
}

/// Renders `g` in the format [`parse_cayley`] reads.
pub fn write_cayley(g: &Group) -> String {
    let mut out = String::new();
    if let Some(label) = g.label() {
        let _ = writeln!(out, "# {label}");
    }
    let _ = writeln!(out, "{}", g.order());
    for row in g.rows() {
        let cells: Vec<String> = row.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{}", cells.join(" "));
    }
    out
}
