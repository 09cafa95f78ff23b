//! The `cayley v1` text format.
//!
//! ```text
//! e,a
//! 1,2
//! 2,1
//! identity=e
//! ```
//!
//! The header lists the labels; row `i` lists the 1-based indices of
//! `label_i · label_j`. The optional `identity=<label>` trailer is checked
//! against the table. Blank lines and whitespace around fields are ignored.

use super::FiniteSemigroup;
use crate::error::{Error, Result};

pub fn parse_cayley(text: &str) -> Result<FiniteSemigroup> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());

    let (header_line, header) = lines.next().ok_or(Error::Parse {
        line: 1,
        message: "missing label header".into(),
    })?;
    let labels: Vec<String> = header.split(',').map(|s| s.trim().to_string()).collect();
    if labels.iter().any(String::is_empty) {
        return Err(Error::Parse {
            line: header_line,
            message: "empty label in header".into(),
        });
    }
    let k = labels.len();

    let mut table = Vec::with_capacity(k);
    let mut identity_label = None;
    let mut last_line = header_line;
    for (line, content) in lines {
        last_line = line;
        if let Some(rest) = content.strip_prefix("identity=") {
            if identity_label.is_some() {
                return Err(Error::Parse {
                    line,
                    message: "repeated identity trailer".into(),
                });
            }
            identity_label = Some((line, rest.trim().to_string()));
            continue;
        }
        if identity_label.is_some() {
            return Err(Error::Parse {
                line,
                message: "table rows after identity trailer".into(),
            });
        }
        if table.len() == k {
            return Err(Error::Parse {
                line,
                message: format!("unexpected content after {k} rows"),
            });
        }
        let row = content
            .split(',')
            .map(|f| {
                let f = f.trim();
                match f.parse::<usize>() {
                    Ok(v) if (1..=k).contains(&v) => Ok(v - 1),
                    _ => Err(Error::Parse {
                        line,
                        message: format!("expected an index in 1..={k}, found {f:?}"),
                    }),
                }
            })
            .collect::<Result<Vec<usize>>>()?;
        if row.len() != k {
            return Err(Error::Parse {
                line,
                message: format!("expected {k} entries, found {}", row.len()),
            });
        }
        table.push(row);
    }
    if table.len() != k {
        return Err(Error::Parse {
            line: last_line + 1,
            message: format!("expected {k} rows, found {}", table.len()),
        });
    }
    let s = FiniteSemigroup::new(labels, table)?;
    if let Some((line, label)) = identity_label {
        let Some(idx) = s.index_of(&label) else {
            return Err(Error::Parse {
                line,
                message: format!("unknown identity label {label:?}"),
            });
        };
        if s.identity() != Some(idx) {
            return Err(Error::Parse {
                line,
                message: format!("{label:?} is not an identity element"),
            });
        }
    }
    Ok(s)
}

/// Writes the table; labels containing `,` or line breaks cannot be encoded.
pub fn emit_cayley(s: &FiniteSemigroup) -> Result<String> {
    if let Some(bad) = s
        .labels()
        .iter()
        .find(|l| l.contains([',', '\n', '\r']) || l.trim() != l.as_str() || l.starts_with("identity="))
    {
        return Err(Error::InvalidArgument(format!(
            "label {bad:?} cannot be written in cayley format"
        )));
    }
    let mut out = s.labels().join(",");
    out.push('\n');
    for x in 0..s.order() {
        let row: Vec<String> = s.row(x).map(|v| (v + 1).to_string()).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    if let Some(e) = s.identity() {
        out.push_str("identity=");
        out.push_str(s.label(e));
        out.push('\n');
    }
    Ok(out)
}
