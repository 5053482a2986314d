//! The `.cplx` text format.
//!
//! ```text
//! # Koszul complex on x, y
//! name koszul_xy
//! ring Fp(32003)[x, y] order grevlex
//! degrees 0..2
//! ranks 1, 2, 1
//! diff 1:
//!   [x, y]
//! diff 2:
//!   [-y]
//!   [x]
//! ```
//!
//! `diff n:` is followed by `rank F_{n-1}` bracketed rows with `rank F_n`
//! entries each; rows may continue on the header line. `#` starts a comment.
//! `order` defaults to grevlex. The empty complex is written with
//! `degrees 0..-1` and an empty `ranks` line.
//!
//! Entries are polynomials in the ring's variables:
//!
//! ```text
//! poly  := ["+"|"-"] term (("+"|"-") term)*
//! term  := coeff ["*"] mono | mono
//! coeff := int ["/" int]
//! mono  := var ["^" int] (["*"] var ["^" int])*
//! ```
//!
//! For example `x^2*y - 3*z` or `1/2 x y^3`. There are no parentheses.

use std::fmt::Write as _;

use crate::complexes::FiniteFreeComplex;
use crate::error::{Error, ParseError, Result};
use crate::matpoly::MapOfFree;
use crate::polyring::{CoefficientField, MonomialOrder, PolyRing, Polynomial};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComplexDocument {
    pub name: Option<String>,
    pub complex: FiniteFreeComplex,
}

/// Parses a document into a validated complex.
pub fn parse_input(text: &str) -> Result<FiniteFreeComplex> {
    parse_document(text).map(|d| d.complex)
}

struct DiffBlock {
    degree: i64,
    line: usize,
    rows: Vec<Vec<Polynomial>>,
}

fn err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse(ParseError::new(line, column, message))
}

/// 1-based column of byte offset `at` in `line`.
fn column_of(line: &str, at: usize) -> usize {
    line[..at].chars().count() + 1
}

pub fn parse_document(text: &str) -> Result<ComplexDocument> {
    let mut name = None;
    let mut ring: Option<PolyRing> = None;
    let mut degrees: Option<(i64, i64, usize)> = None;
    let mut ranks: Option<(Vec<usize>, usize)> = None;
    let mut blocks: Vec<DiffBlock> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        let body = line.trim_start();
        if body.trim().is_empty() {
            continue;
        }
        let indent = line.len() - body.len();
        let keyword_end = body
            .find(|c: char| c.is_whitespace() || c == '[')
            .unwrap_or(body.len());
        let keyword = &body[..keyword_end];
        let rest_at = indent + keyword_end;
        let rest = &line[rest_at..];
        match keyword {
            "name" => name = Some(rest.trim().to_string()),
            "ring" => ring = Some(parse_ring(line, rest_at, lineno)?),
            "degrees" => degrees = Some(parse_degrees(line, rest_at, lineno)?),
            "ranks" => {
                let values = rest
                    .split(',')
                    .map(str::trim)
                    .filter(|s| !s.is_empty())
                    .map(|s| {
                        s.parse::<usize>()
                            .map_err(|_| err(lineno, column_of(line, rest_at), format!("invalid rank `{s}`")))
                    })
                    .collect::<Result<Vec<_>>>()?;
                ranks = Some((values, lineno));
            }
            "diff" => {
                let Some(colon) = rest.find(':') else {
                    return Err(err(lineno, column_of(line, rest_at), "expected `diff <n>:`"));
                };
                let n = rest[..colon].trim();
                let degree = n
                    .parse::<i64>()
                    .map_err(|_| err(lineno, column_of(line, rest_at), format!("invalid degree `{n}`")))?;
                let r = ring
                    .as_ref()
                    .ok_or_else(|| err(lineno, 1, "`ring` must come before the differentials"))?;
                let mut block = DiffBlock {
                    degree,
                    line: lineno,
                    rows: Vec::new(),
                };
                scan_rows(r, line, rest_at + colon + 1, lineno, &mut block.rows)?;
                blocks.push(block);
            }
            _ if keyword.is_empty() => {
                let Some(block) = blocks.last_mut() else {
                    return Err(err(lineno, indent + 1, "matrix row outside a `diff` block"));
                };
                let r = ring.as_ref().expect("checked when the block opened");
                scan_rows(r, line, indent, lineno, &mut block.rows)?;
            }
            other => return Err(err(lineno, indent + 1, format!("unknown keyword `{other}`"))),
        }
    }

    let ring = ring.ok_or_else(|| err(1, 1, "missing `ring` line"))?;
    let (low, high, deg_line) = degrees.ok_or_else(|| err(1, 1, "missing `degrees` line"))?;
    let (ranks, rank_line) = ranks.ok_or_else(|| err(1, 1, "missing `ranks` line"))?;
    let expected = (high - low + 1) as usize;
    if ranks.len() != expected {
        return Err(err(
            rank_line,
            1,
            format!("{} ranks given for degrees {low}..{high}", ranks.len()),
        ));
    }
    if expected == 0 {
        if let Some(b) = blocks.first() {
            return Err(err(b.line, 1, "the empty complex has no differentials"));
        }
        return Ok(ComplexDocument {
            name,
            complex: FiniteFreeComplex::empty(&ring),
        });
    }
    let rank = |n: i64| ranks[(n - low) as usize];
    let mut diffs: Vec<Option<MapOfFree>> = vec![None; expected - 1];
    for b in blocks {
        if b.degree <= low || b.degree > high {
            return Err(err(
                b.line,
                1,
                format!("differential {} outside degrees {}..{high}", b.degree, low + 1),
            ));
        }
        let (rows, cols) = (rank(b.degree - 1), rank(b.degree));
        if b.rows.len() != rows {
            return Err(err(
                b.line,
                1,
                format!("diff {} needs {rows} rows, found {}", b.degree, b.rows.len()),
            ));
        }
        if let Some(bad) = b.rows.iter().position(|r| r.len() != cols) {
            return Err(err(
                b.line,
                1,
                format!("diff {} row {} needs {cols} entries, found {}", b.degree, bad + 1, b.rows[bad].len()),
            ));
        }
        let slot = &mut diffs[(b.degree - low - 1) as usize];
        if slot.is_some() {
            return Err(err(b.line, 1, format!("diff {} given twice", b.degree)));
        }
        *slot = Some(MapOfFree::from_rows(cols, b.rows)?);
    }
    let diffs = diffs
        .into_iter()
        .enumerate()
        .map(|(i, d)| {
            let n = low + i as i64 + 1;
            d.ok_or_else(|| err(deg_line, 1, format!("missing diff {n}")))
        })
        .collect::<Result<Vec<_>>>()?;
    let complex = FiniteFreeComplex::new(&ring, low, ranks, diffs)?;
    Ok(ComplexDocument { name, complex })
}

fn parse_ring(line: &str, at: usize, lineno: usize) -> Result<PolyRing> {
    let rest = &line[at..];
    let open = rest
        .find('[')
        .ok_or_else(|| err(lineno, column_of(line, at), "expected `<field>[<variables>]`"))?;
    let close = rest
        .find(']')
        .ok_or_else(|| err(lineno, column_of(line, at + open), "unclosed variable list"))?;
    let field_text = rest[..open].trim();
    let field = if field_text == "QQ" {
        CoefficientField::Rationals
    } else if let Some(p) = field_text.strip_prefix("Fp(").and_then(|s| s.strip_suffix(')')) {
        let p: u64 = p
            .trim()
            .parse()
            .map_err(|_| err(lineno, column_of(line, at), format!("invalid modulus `{p}`")))?;
        CoefficientField::prime(p).map_err(|e| err(lineno, column_of(line, at), e.to_string()))?
    } else {
        return Err(err(
            lineno,
            column_of(line, at),
            format!("unknown field `{field_text}`, expected QQ or Fp(<prime>)"),
        ));
    };
    let vars: Vec<&str> = rest[open + 1..close].split(',').map(str::trim).collect();
    let tail: Vec<&str> = rest[close + 1..].split_whitespace().collect();
    let order = match tail.as_slice() {
        [] => MonomialOrder::GrevLex,
        ["order", o] => o
            .parse()
            .map_err(|_| err(lineno, column_of(line, at + close + 1), format!("unknown order `{o}`")))?,
        _ => {
            return Err(err(
                lineno,
                column_of(line, at + close + 1),
                "expected `order <lex|grevlex>` after the variables",
            ))
        }
    };
    PolyRing::new(field, vars, order).map_err(|e| err(lineno, column_of(line, at), e.to_string()))
}

fn parse_degrees(line: &str, at: usize, lineno: usize) -> Result<(i64, i64, usize)> {
    let rest = line[at..].trim();
    let bad = || err(lineno, column_of(line, at), format!("expected `degrees <a>..<b>`, found `{rest}`"));
    let (a, b) = rest.split_once("..").ok_or_else(bad)?;
    let a: i64 = a.trim().parse().map_err(|_| bad())?;
    let b: i64 = b.trim().parse().map_err(|_| bad())?;
    if b < a - 1 {
        return Err(bad());
    }
    Ok((a, b, lineno))
}

/// Reads bracketed rows from `line[from..]`.
fn scan_rows(ring: &PolyRing, line: &str, from: usize, lineno: usize, rows: &mut Vec<Vec<Polynomial>>) -> Result<()> {
    let mut i = from;
    let bytes = line.as_bytes();
    loop {
        while i < line.len() && (bytes[i].is_ascii_whitespace() || bytes[i] == b',') {
            i += 1;
        }
        if i >= line.len() {
            return Ok(());
        }
        if bytes[i] != b'[' {
            return Err(err(lineno, column_of(line, i), "expected `[`"));
        }
        let close = line[i..]
            .find(']')
            .map(|k| i + k)
            .ok_or_else(|| err(lineno, column_of(line, i), "unclosed row"))?;
        let inner = &line[i + 1..close];
        let mut row = Vec::new();
        if !inner.trim().is_empty() {
            let mut start = i + 1;
            for entry in inner.split(',') {
                let poly = ring.parse(entry).map_err(|e| {
                    err(lineno, column_of(line, start) + e.column - 1, e.message)
                })?;
                row.push(poly);
                start += entry.len() + 1;
            }
        }
        rows.push(row);
        i = close + 1;
    }
}

/// Renders a complex in the format read by [`parse_document`].
pub fn render_document(c: &FiniteFreeComplex, name: Option<&str>) -> String {
    let ring = c.ring();
    let mut out = String::new();
    if let Some(name) = name {
        writeln!(out, "name {name}").unwrap();
    }
    writeln!(
        out,
        "ring {}[{}] order {}",
        ring.field(),
        ring.variables().join(", "),
        ring.order().name()
    )
    .unwrap();
    if c.is_empty() {
        out.push_str("degrees 0..-1\nranks\n");
        return out;
    }
    writeln!(out, "degrees {}..{}", c.low(), c.high()).unwrap();
    let ranks: Vec<String> = c.ranks().iter().map(usize::to_string).collect();
    writeln!(out, "ranks {}", ranks.join(", ")).unwrap();
    for n in c.low() + 1..=c.high() {
        writeln!(out, "diff {n}:").unwrap();
        let d = c.differential(n);
        for r in 0..d.rows() {
            let entries: Vec<String> = d.row(r).iter().map(|p| ring.render(p)).collect();
            writeln!(out, "  [{}]", entries.join(", ")).unwrap();
        }
    }
    out
}
