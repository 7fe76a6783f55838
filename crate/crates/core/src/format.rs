//! Cayley table text format.
//!
//! ```text
//! # comment lines start with '#'
//! 3            <- order
//! 0 1 p        <- labels
//! 0 0 0        <- one row per left operand, entries are labels
//! 0 1 1
//! 0 1 1
//! ```
//!
//! Tokens are separated by any whitespace; blank lines and trailing
//! whitespace are ignored.

use crate::error::{Error, Result};
use crate::groupoid::FiniteGroupoid;

struct Token<'a> {
    text: &'a str,
    column: usize,
}

fn tokens(line: &str) -> Vec<Token<'_>> {
    let mut out = Vec::new();
    let mut start = None;
    for (byte, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (false, None) => start = Some(byte),
            (true, Some(s)) => {
                out.push(Token {
                    text: &line[s..byte],
                    column: line[..s].chars().count() + 1,
                });
                start = None;
            }
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push(Token {
            text: &line[s..],
            column: line[..s].chars().count() + 1,
        });
    }
    out
}

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

pub fn parse_table(text: &str) -> Result<FiniteGroupoid> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l))
        .filter(|(_, l)| {
            let t = l.trim_start();
            !t.is_empty() && !t.starts_with('#')
        });

    let (order_line, order_text) = lines
        .next()
        .ok_or_else(|| parse_error(1, 1, "missing order line"))?;
    let order_tokens = tokens(order_text);
    if order_tokens.len() != 1 {
        return Err(parse_error(order_line, 1, "order line must hold a single integer"));
    }
    let n: usize = order_tokens[0].text.parse().map_err(|_| {
        parse_error(
            order_line,
            order_tokens[0].column,
            format!("invalid order {:?}", order_tokens[0].text),
        )
    })?;
    if n == 0 {
        return Err(parse_error(order_line, order_tokens[0].column, "order must be positive"));
    }
    if n > crate::MAX_ORDER {
        return Err(Error::Size {
            order: n,
            bound: crate::MAX_ORDER,
        });
    }

    let (label_line, label_text) = lines
        .next()
        .ok_or_else(|| parse_error(order_line + 1, 1, "missing label line"))?;
    let label_tokens = tokens(label_text);
    if label_tokens.len() != n {
        return Err(parse_error(
            label_line,
            1,
            format!("expected {n} labels, found {}", label_tokens.len()),
        ));
    }
    let mut labels: Vec<String> = Vec::with_capacity(n);
    for tok in &label_tokens {
        if labels.iter().any(|l| l == tok.text) {
            return Err(parse_error(
                label_line,
                tok.column,
                format!("duplicate label {:?}", tok.text),
            ));
        }
        labels.push(tok.text.to_string());
    }

    let mut table = Vec::with_capacity(n * n);
    let mut last_line = label_line;
    for row in 0..n {
        let (line_no, row_text) = lines.next().ok_or_else(|| {
            parse_error(
                last_line + 1,
                1,
                format!("expected {n} table rows, found {row}"),
            )
        })?;
        last_line = line_no;
        let cells = tokens(row_text);
        if cells.len() != n {
            return Err(parse_error(
                line_no,
                1,
                format!("row {} has {} entries, expected {n}", row + 1, cells.len()),
            ));
        }
        for cell in cells {
            let v = labels.iter().position(|l| l == cell.text).ok_or_else(|| {
                parse_error(line_no, cell.column, format!("unknown label {:?}", cell.text))
            })?;
            table.push(v as u8);
        }
    }
    if let Some((line_no, _)) = lines.next() {
        return Err(parse_error(
            line_no,
            1,
            format!("expected {n} table rows, found more"),
        ));
    }

    FiniteGroupoid::new(n, table)?.with_labels(labels)
}

/// Serializes in normal form: single spaces, no comments, trailing newline.
/// Unlabeled groupoids use their indices as labels.
pub fn serialize_table(g: &FiniteGroupoid) -> String {
    let labels: Vec<String> = g.elements().map(|x| g.label(x)).collect();
    let mut out = format!("{}\n{}\n", g.order(), labels.join(" "));
    for row in g.rows() {
        let cells: Vec<&str> = row.iter().map(|&v| labels[v as usize].as_str()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}
