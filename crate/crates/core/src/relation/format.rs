//! The `relmat v1` text format: a line with `n`, then `n` lines of `n`
//! characters from `{0,1}`. Blank lines and whitespace are ignored.

use super::{Relation, MAX_DIM};
use crate::error::{Error, Result};

pub fn parse_relmat(text: &str) -> Result<Relation> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split_whitespace().collect::<String>()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing dimension line".into(),
    })?;
    let dim: usize = header.parse().map_err(|_| Error::Parse {
        line: header_line,
        message: format!("expected a dimension, found {header:?}"),
    })?;
    if dim == 0 || dim > MAX_DIM {
        return Err(Error::Parse {
            line: header_line,
            message: format!("dimension must be between 1 and {MAX_DIM}, found {dim}"),
        });
    }

    let mut rows = Vec::with_capacity(dim);
    let mut last_line = header_line;
    for (line, content) in lines {
        if rows.len() == dim {
            return Err(Error::Parse {
                line,
                message: format!("unexpected content after {dim} rows"),
            });
        }
        if content.chars().count() != dim {
            return Err(Error::Parse {
                line,
                message: format!("expected {dim} characters, found {}", content.chars().count()),
            });
        }
        let mut row = 0u64;
        for (j, ch) in content.chars().enumerate() {
            match ch {
                '0' => {}
                '1' => row |= 1 << j,
                other => {
                    return Err(Error::Parse {
                        line,
                        message: format!("invalid character {other:?} in column {}", j + 1),
                    })
                }
            }
        }
        rows.push(row);
        last_line = line;
    }
    if rows.len() != dim {
        return Err(Error::Parse {
            line: last_line + 1,
            message: format!("expected {dim} rows, found {}", rows.len()),
        });
    }
    Relation::from_rows(dim, rows)
}

pub fn emit_relmat(r: &Relation) -> String {
    let mut out = format!("{}\n", r.dim());
    for row in r.label().split('/') {
        out.push_str(row);
        out.push('\n');
    }
    out
}
