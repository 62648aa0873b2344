//! Text formats: graph files, labeling files, graph-spec strings and DOT.
//!
//! Graph file:
//! ```text
//! # comment
//! graph <n> <m>
//! <u> <v>          (m lines)
//! ```
//! Labeling files use the same header followed by `m` lines `<u> <v> <label>`.
//! Lines starting with `#` are comments; comments of the form `# key: value`
//! are kept as metadata.

use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::graph::{build, Edge, Family, Graph, GraphError};
use crate::labeling::{EdgeLabeling, LabelingError};

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("expected {expected} edge lines, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Labeling(#[from] LabelingError),
    #[error("bad graph spec term `{term}`: {msg}")]
    Spec { term: String, msg: String },
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

fn syntax(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Syntax { line, msg: msg.into() }
}

/// `# key: value` comment lines in file order.
pub type Metadata = Vec<(String, String)>;

struct Parsed {
    vertex_count: usize,
    rows: Vec<Vec<usize>>,
    meta: Metadata,
}

fn parse_rows(text: &str, columns: usize) -> Result<Parsed, FormatError> {
    let mut header: Option<(usize, usize)> = None;
    let mut rows = Vec::new();
    let mut meta = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let lineno = i + 1;
        let line = raw.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(comment) = line.strip_prefix('#') {
            if let Some((k, v)) = comment.split_once(':') {
                meta.push((k.trim().to_string(), v.trim().to_string()));
            }
            continue;
        }
        let fields: Vec<&str> = line.split_whitespace().collect();
        match header {
            None => {
                if fields.len() != 3 || fields[0] != "graph" {
                    return Err(syntax(lineno, "expected `graph <n> <m>`"));
                }
                let n = fields[1].parse().map_err(|_| syntax(lineno, "bad vertex count"))?;
                let m = fields[2].parse().map_err(|_| syntax(lineno, "bad edge count"))?;
                header = Some((n, m));
            }
            Some(_) => {
                if fields.len() != columns {
                    return Err(syntax(lineno, format!("expected {columns} integers")));
                }
                let row = fields
                    .iter()
                    .map(|f| f.parse::<usize>().map_err(|_| syntax(lineno, format!("bad integer `{f}`"))))
                    .collect::<Result<Vec<_>, _>>()?;
                rows.push(row);
            }
        }
    }
    let (vertex_count, m) = header.ok_or_else(|| syntax(0, "missing `graph <n> <m>` header"))?;
    if rows.len() != m {
        return Err(FormatError::EdgeCount { expected: m, found: rows.len() });
    }
    Ok(Parsed { vertex_count, rows, meta })
}

pub fn parse_graph(text: &str) -> Result<Graph, FormatError> {
    let p = parse_rows(text, 2)?;
    Ok(Graph::new(p.vertex_count, p.rows.iter().map(|r| Edge(r[0], r[1])).collect())?)
}

pub fn parse_labeling(text: &str) -> Result<EdgeLabeling, FormatError> {
    parse_labeling_with_meta(text).map(|(l, _)| l)
}

pub fn parse_labeling_with_meta(text: &str) -> Result<(EdgeLabeling, Metadata), FormatError> {
    let p = parse_rows(text, 3)?;
    let g = Graph::new(p.vertex_count, p.rows.iter().map(|r| Edge(r[0], r[1])).collect())?;
    let labels = p.rows.iter().map(|r| r[2]).collect();
    Ok((EdgeLabeling::new(g, labels)?, p.meta))
}

pub fn write_graph(g: &Graph) -> String {
    let mut out = format!("graph {} {}\n", g.vertex_count(), g.edge_count());
    for e in g.edges() {
        let _ = writeln!(out, "{} {}", e.0, e.1);
    }
    out
}

pub fn write_labeling(l: &EdgeLabeling, meta: &[(String, String)]) -> String {
    let g = l.graph();
    let mut out = String::new();
    for (k, v) in meta {
        let _ = writeln!(out, "# {k}: {v}");
    }
    let _ = writeln!(out, "graph {} {}", g.vertex_count(), g.edge_count());
    for (e, label) in g.edges().iter().zip(l.labels()) {
        let _ = writeln!(out, "{} {} {}", e.0, e.1, label);
    }
    out
}

pub fn read_file(path: &Path) -> Result<String, FormatError> {
    std::fs::read_to_string(path).map_err(|source| FormatError::Io { path: path.display().to_string(), source })
}

/// Parses `term ("+" term)*` where a term is one of `cycle:N`, `path:V`,
/// `star:N`, `doublestar:A:B`, `jellyfish:K:R`, `p3x:T` or `file:PATH`.
pub fn parse_graph_spec(spec: &str) -> Result<Family, FormatError> {
    let mut parts = Vec::new();
    for term in spec.split('+') {
        let term = term.trim();
        let err = |msg: &str| FormatError::Spec { term: term.to_string(), msg: msg.to_string() };
        let (kind, rest) = term.split_once(':').ok_or_else(|| err("expected `kind:args`"))?;
        if kind == "file" {
            parts.push(Family::Explicit(parse_graph(&read_file(Path::new(rest))?)?));
            continue;
        }
        let args = rest
            .split(':')
            .map(|a| a.parse::<usize>().map_err(|_| err("arguments must be non-negative integers")))
            .collect::<Result<Vec<_>, _>>()?;
        let family = match (kind, args.as_slice()) {
            ("cycle", [n]) => Family::Cycle(*n),
            ("path", [v]) => Family::Path(*v),
            ("star", [n]) => Family::Star(*n),
            ("doublestar", [a, b]) => Family::DoubleStar(*a, *b),
            ("jellyfish", [k, r]) => Family::Jellyfish { k: *k, r: *r },
            ("p3x", [t]) => Family::Paths3(*t),
            _ => return Err(err("unknown kind or wrong number of arguments")),
        };
        parts.push(family);
    }
    Ok(if parts.len() == 1 { parts.pop().unwrap() } else { Family::Union(parts) })
}

pub fn graph_from_spec(spec: &str) -> Result<Graph, FormatError> {
    Ok(build(&parse_graph_spec(spec)?)?)
}

/// Undirected DOT with `phi=<value>` on vertices and the label on edges.
pub fn to_dot(l: &EdgeLabeling) -> String {
    let phi = l.phi_profile();
    let mut out = String::from("graph antimagic {\n");
    for (v, p) in phi.phi.iter().enumerate() {
        let _ = writeln!(out, "  v{v} [label=\"phi={p}\"];");
    }
    for (e, label) in l.graph().edges().iter().zip(l.labels()) {
        let _ = writeln!(out, "  v{} -- v{} [label=\"{}\"];", e.0, e.1, label);
    }
    out.push_str("}\n");
    out
}
