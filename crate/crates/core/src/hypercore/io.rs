//! Text formats.
//!
//! `.hyg` (hypergraph): `#` starts a comment line and blank lines are
//! ignored. The first remaining line is `hypergraph <n> <m>`, optionally
//! followed by the flag `multi`; then come `m` lines, one edge each, as
//! space-separated 0-based vertex indices. Plain files list each edge in
//! strictly ascending order; `multi` files allow repeats (non-decreasing).
//!
//! `.elg` (graph): header `graph <n> <m>`, then `m` lines `u v` with `u < v`.

use std::fmt::Write;

use crate::hypercore::{Graph, Hypergraph, MultiHypergraph};
use crate::{Error, Result};

/// Contents of a `.hyg` file.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum HygFile {
    Simple(Hypergraph),
    Multi(MultiHypergraph),
}

impl HygFile {
    /// The simple hypergraph, or a parse error for `multi` files.
    pub fn into_simple(self) -> Result<Hypergraph> {
        match self {
            HygFile::Simple(h) => Ok(h),
            HygFile::Multi(m) => m
                .to_hypergraph()
                .map_err(|e| Error::parse(0, format!("multi file is not simple: {e}"))),
        }
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn parse_usize(line: usize, tok: &str) -> Result<usize> {
    tok.parse().map_err(|_| Error::parse(line, format!("expected a non-negative integer, got `{tok}`")))
}

fn parse_header<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
    keyword: &str,
) -> Result<(usize, usize, usize, Vec<&'a str>)> {
    let (line, header) = lines.next().ok_or_else(|| Error::parse(0, "missing header"))?;
    let toks: Vec<&str> = header.split_whitespace().collect();
    if toks.len() < 3 || toks[0] != keyword {
        return Err(Error::parse(line, format!("expected `{keyword} <n> <m>`")));
    }
    let n = parse_usize(line, toks[1])?;
    let m = parse_usize(line, toks[2])?;
    Ok((line, n, m, toks[3..].to_vec()))
}

pub fn parse_hyg(text: &str) -> Result<HygFile> {
    let mut lines = content_lines(text);
    let (hline, n, m, flags) = parse_header(&mut lines, "hypergraph")?;
    let multi = match flags.as_slice() {
        [] => false,
        ["multi"] => true,
        _ => return Err(Error::parse(hline, format!("unknown header flags {flags:?}"))),
    };
    let mut edges = Vec::with_capacity(m);
    let mut last_line = hline;
    for _ in 0..m {
        let (line, l) = lines
            .next()
            .ok_or_else(|| Error::parse(last_line, format!("expected {m} edges, found {}", edges.len())))?;
        last_line = line;
        let edge = l.split_whitespace().map(|t| parse_usize(line, t)).collect::<Result<Vec<_>>>()?;
        let ordered = if multi {
            edge.windows(2).all(|w| w[0] <= w[1])
        } else {
            edge.windows(2).all(|w| w[0] < w[1])
        };
        if !ordered {
            return Err(Error::parse(line, "edge vertices must be listed in ascending order"));
        }
        if let Some(&v) = edge.iter().find(|&&v| v >= n) {
            return Err(Error::parse(line, format!("vertex {v} out of range for {n} vertices")));
        }
        edges.push((line, edge));
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::parse(line, "trailing content after the last edge"));
    }
    let line_of = |idx: usize| edges.get(idx).map_or(hline, |(l, _)| *l);
    let raw: Vec<Vec<usize>> = edges.iter().map(|(_, e)| e.clone()).collect();
    if multi {
        MultiHypergraph::new(n, raw).map(HygFile::Multi).map_err(|e| Error::parse(hline, e.to_string()))
    } else {
        Hypergraph::new(n, raw).map(HygFile::Simple).map_err(|e| {
            let line = match &e {
                Error::DuplicateEdge { edge, .. } | Error::EmptyEdge { edge } => line_of(*edge),
                _ => hline,
            };
            Error::parse(line, e.to_string())
        })
    }
}

fn push_edge(out: &mut String, edge: &[usize]) {
    for (i, v) in edge.iter().enumerate() {
        if i > 0 {
            out.push(' ');
        }
        write!(out, "{v}").unwrap();
    }
    out.push('\n');
}

pub fn write_hyg(h: &Hypergraph) -> String {
    let mut out = format!("hypergraph {} {}\n", h.n(), h.m());
    for edge in h.edges() {
        push_edge(&mut out, edge);
    }
    out
}

pub fn write_multi_hyg(h: &MultiHypergraph) -> String {
    let mut out = format!("hypergraph {} {} multi\n", h.n(), h.m());
    for edge in h.edges() {
        push_edge(&mut out, edge);
    }
    out
}

pub fn parse_elg(text: &str) -> Result<Graph> {
    let mut lines = content_lines(text);
    let (hline, n, m, flags) = parse_header(&mut lines, "graph")?;
    if !flags.is_empty() {
        return Err(Error::parse(hline, "unexpected tokens after `graph <n> <m>`"));
    }
    let mut edges = Vec::with_capacity(m);
    let mut last_line = hline;
    for _ in 0..m {
        let (line, l) = lines
            .next()
            .ok_or_else(|| Error::parse(last_line, format!("expected {m} edges, found {}", edges.len())))?;
        last_line = line;
        let toks: Vec<&str> = l.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::parse(line, "expected `u v`"));
        }
        let (u, v) = (parse_usize(line, toks[0])?, parse_usize(line, toks[1])?);
        if u >= v {
            return Err(Error::parse(line, "expected u < v"));
        }
        edges.push((u, v));
    }
    if let Some((line, _)) = lines.next() {
        return Err(Error::parse(line, "trailing content after the last edge"));
    }
    Graph::new(n, edges).map_err(|e| Error::parse(hline, e.to_string()))
}

pub fn write_elg(g: &Graph) -> String {
    let mut out = format!("graph {} {}\n", g.n(), g.m());
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}
