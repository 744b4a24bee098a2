//! Line-oriented text formats.
//!
//! Instance: `c` comment lines, a header `p ecg <n> <m> <h>`, then `m` lines
//! `e <u> <v> <c>`. The vertex set is `1..=n` minus the ids listed on
//! `x <id>` lines, which lets graphs with gaps in their ids round-trip.
//! Digraph: header `p dig <n> <m>`, then `m` lines `a <u> <v>`.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use dualfvs_core::{CompactRepresentation, EdgeColoredGraph, Family, ReducedInstance, VertexId, VertexSet};
use dualfvs_core::Digraph;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: malformed header: {reason}")]
    MalformedHeader { line: usize, reason: String },
    #[error("missing header line")]
    MissingHeader,
    #[error("line {line}: malformed line: {reason}")]
    MalformedLine { line: usize, reason: String },
    #[error("line {line}: color {color} outside 1..={colors}")]
    ColorOutOfRange { line: usize, color: usize, colors: usize },
    #[error("line {line}: endpoint {vertex} is not a vertex")]
    DanglingEndpoint { line: usize, vertex: VertexId },
    #[error("header announces {expected} edge lines, found {found}")]
    EdgeCountMismatch { expected: usize, found: usize },
    #[error("vertex id 0 cannot be encoded")]
    ZeroVertexId,
    #[error("{0}")]
    Graph(#[from] dualfvs_core::Error),
}

/// Non-comment, non-blank lines with their 1-based line numbers.
fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, l)| {
        let l = l.trim();
        if l.is_empty() || l == "c" || l.starts_with("c ") || l.starts_with("c\t") {
            None
        } else {
            Some((i + 1, l.split_whitespace().collect()))
        }
    })
}

fn number<T: std::str::FromStr>(token: &str, line: usize, what: &str) -> Result<T, FormatError> {
    token
        .parse()
        .map_err(|_| FormatError::MalformedLine { line, reason: format!("{what} `{token}` is not a number") })
}

fn header_number<T: std::str::FromStr>(token: &str, line: usize, what: &str) -> Result<T, FormatError> {
    token
        .parse()
        .map_err(|_| FormatError::MalformedHeader { line, reason: format!("{what} `{token}` is not a number") })
}

pub fn decode_instance(text: &str) -> Result<EdgeColoredGraph, FormatError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    if header.len() != 5 || header[0] != "p" || header[1] != "ecg" {
        return Err(FormatError::MalformedHeader { line: hline, reason: "expected `p ecg <n> <m> <h>`".into() });
    }
    let n: VertexId = header_number(header[2], hline, "vertex count")?;
    let m: usize = header_number(header[3], hline, "edge count")?;
    let h: usize = header_number(header[4], hline, "color count")?;
    if h == 0 {
        return Err(FormatError::MalformedHeader { line: hline, reason: "color count must be at least 1".into() });
    }

    let mut vertices: BTreeSet<VertexId> = (1..=n).collect();
    let mut edges = Vec::new();
    let mut pending = Vec::new();
    for (line, tokens) in lines {
        match tokens.as_slice() {
            ["e", u, v, c] => {
                let u: VertexId = number(u, line, "endpoint")?;
                let v: VertexId = number(v, line, "endpoint")?;
                let c: usize = number(c, line, "color")?;
                if c == 0 || c > h {
                    return Err(FormatError::ColorOutOfRange { line, color: c, colors: h });
                }
                pending.push((line, u, v, c));
            }
            ["x", id] => {
                let id: VertexId = number(id, line, "vertex id")?;
                if id == 0 || id > n {
                    return Err(FormatError::MalformedLine { line, reason: format!("absent id {id} outside 1..={n}") });
                }
                vertices.remove(&id);
            }
            ["p", ..] => {
                return Err(FormatError::MalformedHeader { line, reason: "second header line".into() });
            }
            _ => {
                return Err(FormatError::MalformedLine { line, reason: format!("unexpected `{}`", tokens.join(" ")) })
            }
        }
    }
    // `x` lines may follow the edges they would invalidate
    for (line, u, v, c) in pending {
        for x in [u, v] {
            if !vertices.contains(&x) {
                return Err(FormatError::DanglingEndpoint { line, vertex: x });
            }
        }
        edges.push((u, v, c));
    }
    if edges.len() != m {
        return Err(FormatError::EdgeCountMismatch { expected: m, found: edges.len() });
    }
    Ok(EdgeColoredGraph::new(h, vertices, edges)?)
}

/// Canonical encoding: header, absent ids ascending, edges sorted.
pub fn encode_instance(g: &EdgeColoredGraph) -> Result<String, FormatError> {
    if g.contains(0) {
        return Err(FormatError::ZeroVertexId);
    }
    let n = g.max_vertex().unwrap_or(0);
    let mut out = String::new();
    writeln!(out, "p ecg {n} {} {}", g.edge_count(), g.colors()).unwrap();
    for id in (1..=n).filter(|&v| !g.contains(v)) {
        writeln!(out, "x {id}").unwrap();
    }
    for e in g.edges() {
        writeln!(out, "e {} {} {}", e.u, e.v, e.color).unwrap();
    }
    Ok(out)
}

/// Duplicate arc lines collapse into one arc.
pub fn decode_digraph(text: &str) -> Result<Digraph, FormatError> {
    let mut lines = content_lines(text);
    let (hline, header) = lines.next().ok_or(FormatError::MissingHeader)?;
    if header.len() != 4 || header[0] != "p" || header[1] != "dig" {
        return Err(FormatError::MalformedHeader { line: hline, reason: "expected `p dig <n> <m>`".into() });
    }
    let n: VertexId = header_number(header[2], hline, "vertex count")?;
    let m: usize = header_number(header[3], hline, "arc count")?;
    let mut arcs = Vec::new();
    for (line, tokens) in lines {
        match tokens.as_slice() {
            ["a", u, v] => {
                let u: VertexId = number(u, line, "endpoint")?;
                let v: VertexId = number(v, line, "endpoint")?;
                for x in [u, v] {
                    if x == 0 || x > n {
                        return Err(FormatError::DanglingEndpoint { line, vertex: x });
                    }
                }
                arcs.push((u, v));
            }
            _ => {
                return Err(FormatError::MalformedLine { line, reason: format!("unexpected `{}`", tokens.join(" ")) })
            }
        }
    }
    if arcs.len() != m {
        return Err(FormatError::EdgeCountMismatch { expected: m, found: arcs.len() });
    }
    Ok(Digraph::new(1..=n, arcs)?)
}

pub fn encode_digraph(d: &Digraph) -> String {
    let n = d.vertices().last().copied().unwrap_or(0);
    let mut out = format!("p dig {n} {}\n", d.arcs().len());
    for (u, v) in d.arcs() {
        writeln!(out, "a {u} {v}").unwrap();
    }
    out
}

/// Ids ascending and space-separated; `EMPTYSET` for the empty set.
pub fn encode_solution(s: &VertexSet) -> String {
    if s.is_empty() {
        return "EMPTYSET".to_string();
    }
    s.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ")
}

/// Accepts ids separated by spaces or commas; `EMPTYSET` or blank is the empty set.
pub fn decode_solution(text: &str) -> Result<VertexSet, FormatError> {
    let text = text.trim();
    if text == "EMPTYSET" {
        return Ok(VertexSet::new());
    }
    text.split(|c: char| c.is_whitespace() || c == ',')
        .filter(|t| !t.is_empty())
        .map(|t| number(t, 1, "vertex id"))
        .collect()
}

/// One solution per line, lines in lexicographic order of the id lists.
pub fn encode_family(f: &Family) -> String {
    let mut sorted: Vec<Vec<VertexId>> = f.iter().map(|s| s.iter().copied().collect()).collect();
    sorted.sort();
    let mut out = String::new();
    for s in sorted {
        out.push_str(&encode_solution(&s.into_iter().collect()));
        out.push('\n');
    }
    out
}

pub fn decode_family(text: &str) -> Result<Family, FormatError> {
    text.lines().filter(|l| !l.trim().is_empty()).map(decode_solution).collect()
}

/// One representation per line.
pub fn encode_reps(reps: &[CompactRepresentation]) -> String {
    reps.iter().map(|r| format!("{r}\n")).collect()
}

fn braces(s: &VertexSet) -> String {
    let inner: Vec<String> = s.iter().map(ToString::to_string).collect();
    format!("{{{}}}", inner.join(","))
}

/// `forced:` line (a group of interchangeable vertices prints in braces),
/// one `rep <live> : <orig...>` line per merged vertex, then the instance.
pub fn encode_reduced(r: &ReducedInstance) -> Result<String, FormatError> {
    let mut out = String::from("forced:");
    let mut groups: Vec<&VertexSet> = r.forced().iter().collect();
    groups.sort();
    for group in groups {
        out.push(' ');
        if group.len() == 1 {
            out.push_str(&group.first().unwrap().to_string());
        } else {
            out.push_str(&braces(group));
        }
    }
    out.push('\n');
    for &v in r.graph().vertices() {
        let rep = r.represents(v);
        if rep.len() > 1 {
            writeln!(out, "rep {v} : {}", encode_solution(&rep)).unwrap();
        }
    }
    out.push_str(&encode_instance(r.graph())?);
    Ok(out)
}
