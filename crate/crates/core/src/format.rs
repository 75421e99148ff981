//! GEM v1 text format.
//!
//! ```text
//! gem-format 1
//! dim 4
//! vertices 2
//! color 0: 1-2
//! color 1: 1-2
//! color 2: 1-2
//! color 3: 1-2
//! color 4: 1-2
//! end
//! ```
//!
//! `#` starts a comment. Vertices are 1-based. Colors `0..D` list `N/2`
//! pairs; color `D` may list fewer, and unlisted vertices are boundary
//! vertices.

use std::fmt::Write as _;

use crate::error::{GemError, Result};
use crate::graph::ColoredGraph;

fn parse_err(line: usize, message: impl Into<String>) -> GemError {
    GemError::Parse {
        line,
        message: message.into(),
    }
}

/// Content lines with their 1-based line numbers; comments and blank lines
/// dropped.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn keyword_value(line_no: usize, line: &str, keyword: &str) -> Result<usize> {
    let mut tokens = line.split_whitespace();
    if tokens.next() != Some(keyword) {
        return Err(parse_err(line_no, format!("expected `{keyword} <n>`")));
    }
    let value = tokens
        .next()
        .ok_or_else(|| parse_err(line_no, format!("missing value after `{keyword}`")))?;
    if tokens.next().is_some() {
        return Err(parse_err(line_no, format!("trailing tokens after `{keyword}`")));
    }
    value
        .parse()
        .map_err(|_| parse_err(line_no, format!("invalid number `{value}`")))
}

fn parse_pair(line_no: usize, token: &str, vertex_count: usize) -> Result<(usize, usize)> {
    let (a, b) = token
        .split_once('-')
        .ok_or_else(|| parse_err(line_no, format!("malformed pair `{token}`")))?;
    let parse_vertex = |s: &str| -> Result<usize> {
        let v: usize = s
            .parse()
            .map_err(|_| parse_err(line_no, format!("malformed pair `{token}`")))?;
        if v == 0 || v > vertex_count {
            return Err(parse_err(
                line_no,
                format!("vertex {v} out of range 1..={vertex_count}"),
            ));
        }
        Ok(v - 1)
    };
    Ok((parse_vertex(a)?, parse_vertex(b)?))
}

pub fn parse_gem(text: &str) -> Result<ColoredGraph> {
    let mut lines = content_lines(text);
    let mut next = |what: &str| {
        lines
            .next()
            .ok_or_else(|| parse_err(0, format!("unexpected end of input, expected {what}")))
    };

    let (n, header) = next("header")?;
    if header.split_whitespace().collect::<Vec<_>>() != ["gem-format", "1"] {
        return Err(parse_err(n, "malformed header, expected `gem-format 1`"));
    }
    let (n, line) = next("`dim`")?;
    let dim = keyword_value(n, line, "dim")?;
    if dim == 0 || dim > crate::MAX_DIM {
        return Err(parse_err(n, GemError::DimensionOutOfRange(dim).to_string()));
    }
    let (n, line) = next("`vertices`")?;
    let vertex_count = keyword_value(n, line, "vertices")?;
    if vertex_count == 0 {
        return Err(parse_err(n, "vertex count must be positive"));
    }

    let mut colors = Vec::with_capacity(dim + 1);
    for expected in 0..=dim {
        let (n, line) = next("a `color` line")?;
        let (head, body) = line
            .split_once(':')
            .ok_or_else(|| parse_err(n, "expected `color C: a-b ...`"))?;
        let color = keyword_value(n, head, "color")?;
        if color != expected {
            return Err(parse_err(n, format!("expected color {expected}, found color {color}")));
        }
        let pairs = body
            .split_whitespace()
            .map(|tok| parse_pair(n, tok, vertex_count))
            .collect::<Result<Vec<_>>>()?;
        let mut seen = vec![false; vertex_count];
        for &(a, b) in &pairs {
            if a == b {
                return Err(parse_err(n, format!("color {color}: loop at vertex {}", a + 1)));
            }
            for v in [a, b] {
                if std::mem::replace(&mut seen[v], true) {
                    return Err(parse_err(
                        n,
                        format!("color {color}: duplicate pair at vertex {}", v + 1),
                    ));
                }
            }
        }
        if color < dim {
            if let Some(v) = seen.iter().position(|s| !s) {
                return Err(parse_err(
                    n,
                    format!("color {color} not a total pairing (vertex {} unmatched)", v + 1),
                ));
            }
        }
        colors.push(pairs);
    }
    let (n, line) = next("`end`")?;
    if line != "end" {
        return Err(parse_err(n, "expected `end`"));
    }
    if let Some((n, _)) = lines.next() {
        return Err(parse_err(n, "content after `end`"));
    }
    ColoredGraph::from_pairs(dim, vertex_count, &colors)
}

/// Canonical GEM v1 text: colors ascending, pairs sorted by smaller endpoint.
pub fn write_gem(graph: &ColoredGraph) -> String {
    let mut out = String::new();
    writeln!(out, "gem-format 1").unwrap();
    writeln!(out, "dim {}", graph.dim()).unwrap();
    writeln!(out, "vertices {}", graph.vertex_count()).unwrap();
    for color in 0..=graph.dim() {
        write!(out, "color {color}:").unwrap();
        for (a, b) in graph.edges(color) {
            write!(out, " {}-{}", a + 1, b + 1).unwrap();
        }
        out.push('\n');
    }
    out.push_str("end\n");
    out
}
