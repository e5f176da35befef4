//! Text formats: `.ecg` graphs, `.seq` switching sequences and group specs.
//!
//! ```text
//! # a triangle
//! m 3
//! vertices 3
//! edge 0 1 1
//! edge 0 2 3
//! edge 1 2 2
//! ```
//!
//! A sequence file has one switch per line, `<vertex> <permutation>`, with the
//! permutation in 1-based cycle notation (`0 (1 2)`, `3 ()`).

use std::fmt::{self, Write as _};

use ecswitch_core::{Colour, EdgeColouredGraph, GroupKind, PermGroup, Permutation, SwitchingSequence};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    /// 1-based line number, when the error belongs to a line.
    pub line: Option<usize>,
    pub message: String,
}

impl ParseError {
    fn at(line: usize, message: impl fmt::Display) -> Self {
        ParseError { line: Some(line), message: message.to_string() }
    }

    fn bare(message: impl fmt::Display) -> Self {
        ParseError { line: None, message: message.to_string() }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.line {
            Some(line) => write!(f, "line {line}: {}", self.message),
            None => f.write_str(&self.message),
        }
    }
}

impl std::error::Error for ParseError {}

/// Non-blank lines with comments stripped, numbered from 1.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

fn number<T: std::str::FromStr>(line: usize, token: Option<&str>, what: &str) -> Result<T, ParseError> {
    let token = token.ok_or_else(|| ParseError::at(line, format!("missing {what}")))?;
    token.parse().map_err(|_| ParseError::at(line, format!("bad {what} `{token}`")))
}

fn header<'a>(lines: &mut impl Iterator<Item = (usize, &'a str)>, key: &str) -> Result<usize, ParseError> {
    let (no, line) = lines.next().ok_or_else(|| ParseError::bare(format!("missing `{key}` line")))?;
    let mut tokens = line.split_whitespace();
    if tokens.next() != Some(key) {
        return Err(ParseError::at(no, format!("expected `{key} <int>`")));
    }
    let value = number(no, tokens.next(), key)?;
    if tokens.next().is_some() {
        return Err(ParseError::at(no, "trailing tokens"));
    }
    Ok(value)
}

pub fn parse_graph(text: &str) -> Result<EdgeColouredGraph, ParseError> {
    let mut lines = content_lines(text);
    let m = header(&mut lines, "m")?;
    if m == 0 || m > usize::from(Colour::MAX) {
        return Err(ParseError::bare(format!("m must be in 1..={}", Colour::MAX)));
    }
    let n = header(&mut lines, "vertices")?;
    let mut edges = Vec::new();
    let mut seen = std::collections::HashSet::new();
    for (no, line) in lines {
        let mut tokens = line.split_whitespace();
        if tokens.next() != Some("edge") {
            return Err(ParseError::at(no, "expected `edge <u> <v> <c>`"));
        }
        let u: usize = number(no, tokens.next(), "vertex")?;
        let v: usize = number(no, tokens.next(), "vertex")?;
        let c: Colour = number(no, tokens.next(), "colour")?;
        if tokens.next().is_some() {
            return Err(ParseError::at(no, "trailing tokens"));
        }
        EdgeColouredGraph::new(m, n, [(u, v, c)]).map_err(|e| ParseError::at(no, e))?;
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(ParseError::at(no, ecswitch_core::Error::DuplicateEdge { u, v }));
        }
        edges.push((u, v, c));
    }
    EdgeColouredGraph::new(m, n, edges).map_err(ParseError::bare)
}

/// Canonical form: sorted edges, single spaces, trailing newline.
pub fn serialize_graph(g: &EdgeColouredGraph) -> String {
    let mut out = format!("m {}\nvertices {}\n", g.colour_count(), g.vertex_count());
    for e in g.edges() {
        let _ = writeln!(out, "edge {} {} {}", e.u, e.v, e.colour);
    }
    out
}

/// Cycle notation such as `(1 2)(3 4)` or `()`; cycles must be disjoint.
pub fn parse_permutation(m: usize, text: &str) -> Result<Permutation, ParseError> {
    let text = text.trim();
    let mut cycles: Vec<Vec<Colour>> = Vec::new();
    let mut rest = text;
    while !rest.is_empty() {
        let body = rest.strip_prefix('(').ok_or_else(|| ParseError::bare(format!("expected `(` in `{text}`")))?;
        let close = body.find(')').ok_or_else(|| ParseError::bare(format!("unclosed cycle in `{text}`")))?;
        let cycle = body[..close]
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<Colour>().map_err(|_| ParseError::bare(format!("bad colour `{t}`"))))
            .collect::<Result<Vec<_>, _>>()?;
        if !cycle.is_empty() {
            cycles.push(cycle);
        }
        rest = body[close + 1..].trim_start();
    }
    Permutation::from_cycles(m, &cycles).map_err(|e| ParseError::bare(format!("`{text}`: {e}")))
}

pub fn parse_sequence(text: &str, m: usize) -> Result<SwitchingSequence, ParseError> {
    let mut seq = SwitchingSequence::new();
    for (no, line) in content_lines(text) {
        let (vertex, perm) = line.split_once(char::is_whitespace).ok_or_else(|| ParseError::at(no, "expected `<vertex> <permutation>`"))?;
        let vertex = number(no, Some(vertex), "vertex")?;
        let perm = parse_permutation(m, perm).map_err(|e| ParseError::at(no, e.message))?;
        seq.push(vertex, perm);
    }
    Ok(seq)
}

pub fn serialize_sequence(seq: &SwitchingSequence) -> String {
    let mut out = String::new();
    for step in seq {
        let _ = writeln!(out, "{} {}", step.vertex, step.perm);
    }
    out
}

/// `S<m>`, `A<m>`, `D<m>`, `Z<m>` or `gens<m>:(..)(..);(..)`.
pub fn parse_group(spec: &str) -> Result<PermGroup, ParseError> {
    let spec = spec.trim();
    let bad = |e: ecswitch_core::Error| ParseError::bare(format!("group `{spec}`: {e}"));
    if let Some(rest) = spec.strip_prefix("gens") {
        let (m, gens) = rest.split_once(':').ok_or_else(|| ParseError::bare(format!("group `{spec}`: expected `gens<m>:...`")))?;
        let m: usize = m.parse().map_err(|_| ParseError::bare(format!("group `{spec}`: bad degree `{m}`")))?;
        let generators = gens
            .split(';')
            .filter(|g| !g.trim().is_empty())
            .map(|g| parse_permutation(m, g))
            .collect::<Result<Vec<_>, _>>()?;
        return PermGroup::generate(m, generators).map_err(bad);
    }
    let kind = match spec.chars().next() {
        Some('S') => GroupKind::Symmetric,
        Some('A') => GroupKind::Alternating,
        Some('D') => GroupKind::Dihedral,
        Some('Z') => GroupKind::Cyclic,
        _ => return Err(ParseError::bare(format!("unknown group `{spec}`"))),
    };
    let m: usize = spec[1..].parse().map_err(|_| ParseError::bare(format!("group `{spec}`: bad degree")))?;
    PermGroup::named(kind, m).map_err(bad)
}
