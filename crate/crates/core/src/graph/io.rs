//! Text formats.
//!
//! Graphs use an extended DIMACS layout:
//!
//! ```text
//! # comment
//! p mixed <n> <num_edges> <num_arcs>
//! e <u> <v>
//! a <u> <v>
//! ```
//!
//! Vertices are 1-based. Coloring certificates hold one `<vertex> <color>`
//! line per vertex.

use std::fmt::Write as _;

use super::{Coloring, ColoringError, GraphError, MixedGraph};

fn parse_err(line: usize, message: impl Into<String>) -> GraphError {
    GraphError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_vertex(tok: Option<&str>, line: usize, n: usize) -> Result<usize, GraphError> {
    let tok = tok.ok_or_else(|| parse_err(line, "missing vertex"))?;
    let v: usize = tok
        .parse()
        .map_err(|_| parse_err(line, format!("bad vertex '{tok}'")))?;
    if v == 0 || v > n {
        return Err(GraphError::VertexOutOfRange {
            vertex: v.wrapping_sub(1),
            n,
        });
    }
    Ok(v - 1)
}

pub fn load_graph(text: &str) -> Result<MixedGraph, GraphError> {
    let mut header: Option<(usize, usize, usize)> = None;
    let mut edges = Vec::new();
    let mut arcs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || line.starts_with("c ") || line == "c" {
            continue;
        }
        let mut toks = line.split_whitespace();
        match toks.next() {
            Some("p") => {
                if header.is_some() {
                    return Err(parse_err(line_no, "duplicate header"));
                }
                if toks.next() != Some("mixed") {
                    return Err(parse_err(line_no, "expected 'p mixed <n> <edges> <arcs>'"));
                }
                let mut nums = [0usize; 3];
                for slot in &mut nums {
                    let tok = toks
                        .next()
                        .ok_or_else(|| parse_err(line_no, "header needs three counts"))?;
                    *slot = tok
                        .parse()
                        .map_err(|_| parse_err(line_no, format!("bad count '{tok}'")))?;
                }
                header = Some((nums[0], nums[1], nums[2]));
            }
            Some(kind @ ("e" | "a")) => {
                let (n, _, _) = header.ok_or_else(|| parse_err(line_no, "relation before header"))?;
                let u = parse_vertex(toks.next(), line_no, n)?;
                let v = parse_vertex(toks.next(), line_no, n)?;
                if kind == "e" {
                    edges.push((u, v));
                } else {
                    arcs.push((u, v));
                }
            }
            Some(other) => return Err(parse_err(line_no, format!("unknown line kind '{other}'"))),
            None => unreachable!("blank lines skipped"),
        }
        if toks.next().is_some() {
            return Err(parse_err(line_no, "trailing tokens"));
        }
    }
    let (n, ne, na) = header.ok_or_else(|| parse_err(0, "missing 'p mixed' header"))?;
    if edges.len() != ne || arcs.len() != na {
        return Err(parse_err(
            0,
            format!(
                "header announces {ne} edges and {na} arcs, found {} and {}",
                edges.len(),
                arcs.len()
            ),
        ));
    }
    MixedGraph::new(n, edges, arcs)
}

pub fn save_graph(g: &MixedGraph) -> String {
    let mut out = format!("p mixed {} {} {}\n", g.n(), g.edges().len(), g.arcs().len());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "e {} {}", u + 1, v + 1);
    }
    for &(u, v) in g.arcs() {
        let _ = writeln!(out, "a {} {}", u + 1, v + 1);
    }
    out
}

#[derive(Debug, thiserror::Error, Clone, PartialEq, Eq)]
pub enum CertificateError {
    #[error("certificate line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Coloring(#[from] ColoringError),
}

pub fn load_coloring(text: &str, n: usize) -> Result<Coloring, CertificateError> {
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let err = |message: &str| CertificateError::Parse {
            line: idx + 1,
            message: message.to_string(),
        };
        let mut toks = line.split_whitespace();
        let v: usize = toks
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| err("bad vertex"))?;
        let c: u32 = toks
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| err("bad color"))?;
        if toks.next().is_some() {
            return Err(err("trailing tokens"));
        }
        if v == 0 {
            return Err(err("vertices are 1-based"));
        }
        pairs.push((v - 1, c));
    }
    Ok(Coloring::from_assignments(n, pairs)?)
}

pub fn save_coloring(c: &Coloring) -> String {
    let mut out = String::new();
    for (v, color) in c.colors().iter().enumerate() {
        let _ = writeln!(out, "{} {}", v + 1, color);
    }
    out
}
