//! The line-oriented `mtl-algebra v1` text format.
//!
//! ```text
//! mtl-algebra v1
//! name: L3
//! size: 3
//! kind: chain
//! mult:
//! 0 0 0
//! 0 0 1
//! 0 1 2
//! ```
//!
//! `kind: poset` algebras carry a `leq:` section of `n` rows of `n` bits
//! before `mult:`. An optional `impl:` section is accepted as a cross-check
//! against the derived residuum and is never written. `#` starts a comment.

use thiserror::Error;

use super::{AlgebraError, Elem, FiniteAlgebra, Kind};

pub const HEADER: &str = "mtl-algebra v1";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("impl table disagrees with the derived residuum at ({x}, {y}): file has {given}, derived {derived}")]
    ImplMismatch {
        x: Elem,
        y: Elem,
        given: Elem,
        derived: Elem,
    },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

fn syntax(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Syntax {
        line,
        message: message.into(),
    }
}

/// Serializes an algebra. Output is canonical: reading it back and writing
/// again reproduces it byte for byte.
pub fn write_algebra(a: &FiniteAlgebra) -> String {
    let mut out = String::new();
    out.push_str(HEADER);
    out.push('\n');
    if let Some(name) = a.name() {
        out.push_str(&format!("name: {name}\n"));
    }
    out.push_str(&format!("size: {}\n", a.size()));
    match a.kind() {
        Kind::Chain => out.push_str("kind: chain\n"),
        Kind::Poset => {
            out.push_str("kind: poset\nleq:\n");
            for row in a.leq_rows() {
                let bits: Vec<&str> = row.iter().map(|&b| if b { "1" } else { "0" }).collect();
                out.push_str(&bits.join(" "));
                out.push('\n');
            }
        }
    }
    out.push_str("mult:\n");
    for row in a.mult_rows() {
        let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        out.push_str(&cells.join(" "));
        out.push('\n');
    }
    out
}

/// Parses and verifies (FL_ew laws) an algebra.
pub fn read_algebra(text: &str) -> Result<FiniteAlgebra, FormatError> {
    Ok(read_algebra_unverified(text)?.verified()?)
}

/// Parses an algebra without checking its laws.
pub fn read_algebra_unverified(text: &str) -> Result<FiniteAlgebra, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    match lines.next() {
        Some((_, HEADER)) => {}
        Some((no, other)) => {
            return Err(syntax(no, format!("expected `{HEADER}`, found `{other}`")))
        }
        None => return Err(syntax(1, "empty input")),
    }

    let mut name = None;
    let mut size = None;
    let mut kind = None;
    let mut leq: Option<Vec<Vec<bool>>> = None;
    let mut mult: Option<Vec<Vec<Elem>>> = None;
    let mut imp: Option<Vec<Vec<Elem>>> = None;

    while let Some((no, line)) = lines.next() {
        let (key, value) = line
            .split_once(':')
            .map(|(k, v)| (k.trim(), v.trim()))
            .ok_or_else(|| syntax(no, format!("expected `key: value`, found `{line}`")))?;
        match key {
            "name" => name = Some(value.to_string()),
            "size" => {
                let n: usize = value
                    .parse()
                    .map_err(|_| syntax(no, format!("bad size `{value}`")))?;
                if n == 0 {
                    return Err(syntax(no, "size must be positive"));
                }
                size = Some(n);
            }
            "kind" => {
                kind = Some(match value {
                    "chain" => Kind::Chain,
                    "poset" => Kind::Poset,
                    _ => return Err(syntax(no, format!("unknown kind `{value}`"))),
                })
            }
            "leq" | "mult" | "impl" => {
                if !value.is_empty() {
                    return Err(syntax(
                        no,
                        format!("`{key}:` must be followed by table rows"),
                    ));
                }
                let n = size.ok_or_else(|| syntax(no, "`size:` must precede tables"))?;
                let mut rows = Vec::with_capacity(n);
                for _ in 0..n {
                    let (row_no, row) = lines
                        .next()
                        .ok_or_else(|| syntax(no, format!("`{key}` table ends early")))?;
                    rows.push((row_no, row));
                }
                if key == "leq" {
                    let parsed = rows
                        .into_iter()
                        .map(|(row_no, row)| parse_bits(row_no, row, n))
                        .collect::<Result<_, _>>()?;
                    leq = Some(parsed);
                } else {
                    let parsed = rows
                        .into_iter()
                        .map(|(row_no, row)| parse_elems(row_no, row, n))
                        .collect::<Result<_, _>>()?;
                    if key == "mult" {
                        mult = Some(parsed);
                    } else {
                        imp = Some(parsed);
                    }
                }
            }
            _ => return Err(syntax(no, format!("unknown key `{key}`"))),
        }
    }

    let last = text.lines().count().max(1);
    let size = size.ok_or_else(|| syntax(last, "missing `size:`"))?;
    let kind = kind.ok_or_else(|| syntax(last, "missing `kind:`"))?;
    let mult = mult.ok_or_else(|| syntax(last, "missing `mult:` table"))?;
    let mut algebra = match (kind, leq) {
        (Kind::Chain, None) => FiniteAlgebra::from_chain(&mult)?,
        (Kind::Chain, Some(_)) => {
            return Err(syntax(last, "`leq:` is only allowed for `kind: poset`"))
        }
        (Kind::Poset, Some(leq)) => FiniteAlgebra::from_poset(&leq, &mult)?,
        (Kind::Poset, None) => return Err(syntax(last, "`kind: poset` requires a `leq:` table")),
    };
    debug_assert_eq!(algebra.size(), size);
    if let Some(given) = imp {
        for (x, row) in given.iter().enumerate() {
            for (y, &g) in row.iter().enumerate() {
                let derived = algebra.imp(x, y);
                if g != derived {
                    return Err(FormatError::ImplMismatch {
                        x,
                        y,
                        given: g,
                        derived,
                    });
                }
            }
        }
    }
    if let Some(name) = name {
        algebra = algebra.with_name(name);
    }
    Ok(algebra)
}

fn parse_elems(no: usize, row: &str, n: usize) -> Result<Vec<Elem>, FormatError> {
    let cells: Vec<Elem> = row
        .split_whitespace()
        .map(|c| {
            c.parse::<Elem>()
                .map_err(|_| syntax(no, format!("bad element `{c}`")))
        })
        .collect::<Result<_, _>>()?;
    if cells.len() != n {
        return Err(syntax(
            no,
            format!("expected {n} entries, found {}", cells.len()),
        ));
    }
    Ok(cells)
}

fn parse_bits(no: usize, row: &str, n: usize) -> Result<Vec<bool>, FormatError> {
    let bits: Vec<bool> = row
        .chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            '0' => Ok(false),
            '1' => Ok(true),
            _ => Err(syntax(no, format!("bad bit `{c}`"))),
        })
        .collect::<Result<_, _>>()?;
    if bits.len() != n {
        return Err(syntax(
            no,
            format!("expected {n} bits, found {}", bits.len()),
        ));
    }
    Ok(bits)
}
