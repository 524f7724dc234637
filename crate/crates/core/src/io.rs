//! Plain-text formats.
//!
//! Graphs: a header `graph N` or `digraph N`, then one `u v` pair per line.
//! Trees: a header `tree N root R`, then one arc per line. Colorings: one
//! `vertex color` pair per line, optionally an `order c1 c2 ...` line listing
//! the colors from smallest to largest. `#` starts a comment.

use std::collections::HashSet;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::graph::{Coloring, GraphView, OrientedGraph, RootedOrientedTree, UndirectedGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ParsedGraph {
    Graph(UndirectedGraph),
    Digraph(OrientedGraph),
}

impl ParsedGraph {
    pub fn vertex_count(&self) -> usize {
        match self {
            ParsedGraph::Graph(g) => g.vertex_count(),
            ParsedGraph::Digraph(d) => d.vertex_count(),
        }
    }

    pub fn view(&self) -> &dyn GraphView {
        match self {
            ParsedGraph::Graph(g) => g,
            ParsedGraph::Digraph(d) => d,
        }
    }
}

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

/// Non-empty lines with comments stripped, paired with 1-based line numbers.
fn lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn number(line: usize, tok: &str) -> Result<usize> {
    tok.parse().map_err(|_| {
        parse_err(
            line,
            format!("expected a non-negative integer, got {tok:?}"),
        )
    })
}

fn pair(line: usize, tokens: &[&str], n: usize) -> Result<(usize, usize)> {
    if tokens.len() != 2 {
        return Err(parse_err(
            line,
            format!("expected two indices, got {} tokens", tokens.len()),
        ));
    }
    let u = number(line, tokens[0])?;
    let v = number(line, tokens[1])?;
    for x in [u, v] {
        if x >= n {
            return Err(parse_err(
                line,
                Error::VertexOutOfRange {
                    vertex: x,
                    count: n,
                }
                .to_string(),
            ));
        }
    }
    if u == v {
        return Err(parse_err(line, Error::SelfLoop(u).to_string()));
    }
    Ok((u, v))
}

pub fn parse_graph(text: &str) -> Result<ParsedGraph> {
    let mut it = lines(text);
    let (hl, header) = it.next().ok_or_else(|| parse_err(1, "missing header"))?;
    if header.len() != 2 {
        return Err(parse_err(hl, "header must be `graph N` or `digraph N`"));
    }
    let directed = match header[0] {
        "graph" => false,
        "digraph" => true,
        other => return Err(parse_err(hl, format!("unknown header {other:?}"))),
    };
    let n = number(hl, header[1])?;
    let mut seen = HashSet::new();
    let mut pairs = Vec::new();
    for (line, tokens) in it {
        let (u, v) = pair(line, &tokens, n)?;
        if seen.contains(&(u, v)) || (!directed && seen.contains(&(v, u))) {
            return Err(parse_err(line, Error::DuplicateEdge(u, v).to_string()));
        }
        if directed && seen.contains(&(v, u)) {
            return Err(parse_err(line, Error::TwoCycle(u, v).to_string()));
        }
        seen.insert((u, v));
        pairs.push((u, v));
    }
    Ok(if directed {
        ParsedGraph::Digraph(OrientedGraph::from_arcs(n, pairs)?)
    } else {
        ParsedGraph::Graph(UndirectedGraph::from_edges(n, pairs)?)
    })
}

pub fn parse_undirected(text: &str) -> Result<UndirectedGraph> {
    match parse_graph(text)? {
        ParsedGraph::Graph(g) => Ok(g),
        ParsedGraph::Digraph(_) => Err(parse_err(1, "expected `graph`, found `digraph`")),
    }
}

pub fn parse_digraph(text: &str) -> Result<OrientedGraph> {
    match parse_graph(text)? {
        ParsedGraph::Digraph(d) => Ok(d),
        ParsedGraph::Graph(_) => Err(parse_err(1, "expected `digraph`, found `graph`")),
    }
}

pub fn serialize_graph(g: &UndirectedGraph) -> String {
    let mut out = format!("graph {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn serialize_digraph(d: &OrientedGraph) -> String {
    let mut out = format!("digraph {}\n", d.vertex_count());
    for (u, v) in d.arcs() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn serialize_parsed(g: &ParsedGraph) -> String {
    match g {
        ParsedGraph::Graph(g) => serialize_graph(g),
        ParsedGraph::Digraph(d) => serialize_digraph(d),
    }
}

/// Coloring of a graph on `n` vertices; every vertex must be listed once.
pub fn parse_coloring(text: &str, n: usize) -> Result<Coloring> {
    let mut colors: Vec<Option<u32>> = vec![None; n];
    let mut order: Option<Vec<u32>> = None;
    let mut last = 0;
    for (line, tokens) in lines(text) {
        last = line;
        if tokens[0] == "order" {
            if order.is_some() {
                return Err(parse_err(line, "second order line"));
            }
            let list = tokens[1..]
                .iter()
                .map(|t| number(line, t).map(|c| c as u32))
                .collect::<Result<Vec<_>>>()?;
            order = Some(list);
            continue;
        }
        if tokens.len() != 2 {
            return Err(parse_err(line, "expected `vertex color`"));
        }
        let v = number(line, tokens[0])?;
        let c = number(line, tokens[1])?;
        if v >= n {
            return Err(parse_err(
                line,
                Error::VertexOutOfRange {
                    vertex: v,
                    count: n,
                }
                .to_string(),
            ));
        }
        if c == 0 {
            return Err(parse_err(line, Error::ZeroColor(v).to_string()));
        }
        if colors[v].replace(c as u32).is_some() {
            return Err(parse_err(line, format!("vertex {v} colored twice")));
        }
    }
    if let Some(v) = colors.iter().position(Option::is_none) {
        return Err(parse_err(last.max(1), format!("vertex {v} has no color")));
    }
    let colors: Vec<u32> = colors.into_iter().map(Option::unwrap).collect();
    match order {
        Some(order) => Coloring::with_order(colors, order),
        None => Coloring::new(colors),
    }
}

/// Writes an `order` line only when the order differs from the numeric one.
pub fn serialize_coloring(c: &Coloring) -> String {
    let mut out = String::new();
    let numeric = c.order().windows(2).all(|w| w[0] < w[1]);
    if !numeric {
        let list: Vec<String> = c.order().iter().map(u32::to_string).collect();
        writeln!(out, "order {}", list.join(" ")).unwrap();
    }
    for (v, &col) in c.colors().iter().enumerate() {
        writeln!(out, "{v} {col}").unwrap();
    }
    out
}

pub fn parse_tree(text: &str) -> Result<RootedOrientedTree> {
    let mut it = lines(text);
    let (hl, header) = it.next().ok_or_else(|| parse_err(1, "missing header"))?;
    if header.len() != 4 || header[0] != "tree" || header[2] != "root" {
        return Err(parse_err(hl, "header must be `tree N root R`"));
    }
    let n = number(hl, header[1])?;
    let root = number(hl, header[3])?;
    if root >= n {
        return Err(parse_err(
            hl,
            format!("root {root} is not among {n} vertices"),
        ));
    }
    let mut arcs = Vec::new();
    for (line, tokens) in it {
        arcs.push(pair(line, &tokens, n)?);
    }
    RootedOrientedTree::new(n, arcs, root)
}

pub fn serialize_tree(t: &RootedOrientedTree) -> String {
    let mut out = format!("tree {} root {}\n", t.vertex_count(), t.root());
    for &(u, v) in t.arcs() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Comma- or space-separated vertex list.
pub fn parse_vertex_list(text: &str) -> Result<Vec<usize>> {
    text.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| number(1, t))
        .collect()
}
