//! Edge-list text and JSON graph formats.
//!
//! Text: first line `n m`, then `m` lines `i j` with 0-based node ids. Blank lines and
//! lines starting with `#` are ignored. JSON: `{"n": ..., "edges": [[i, j], ...]}`.

use serde::{Deserialize, Serialize};

use super::Graph;
use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GraphJson {
    pub n: usize,
    pub edges: Vec<[usize; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            n: g.node_count(),
            edges: g.edges().iter().map(|&(a, b)| [a, b]).collect(),
        }
    }
}

impl Graph {
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("{} {}\n", self.node_count(), self.edge_count());
        for &(a, b) in self.edges() {
            out.push_str(&format!("{a} {b}\n"));
        }
        out
    }
}

fn parse_usize(tok: &str, line: usize) -> Result<usize> {
    tok.parse()
        .map_err(|_| Error::Parse(format!("line {line}: expected a non-negative integer, got `{tok}`")))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(k, l)| (k + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (hl, header) = lines
        .next()
        .ok_or_else(|| Error::Parse("empty graph file".into()))?;
    let head: Vec<&str> = header.split_whitespace().collect();
    if head.len() != 2 {
        return Err(Error::Parse(format!("line {hl}: header must be `n m`")));
    }
    let n = parse_usize(head[0], hl)?;
    let m = parse_usize(head[1], hl)?;
    if n == 0 {
        return Err(Error::Parse("graph must have at least one node".into()));
    }
    let mut edges = Vec::with_capacity(m);
    for (ln, line) in lines {
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.len() != 2 {
            return Err(Error::Parse(format!("line {ln}: expected `i j`")));
        }
        edges.push((parse_usize(toks[0], ln)?, parse_usize(toks[1], ln)?));
    }
    if edges.len() != m {
        return Err(Error::Parse(format!(
            "header announces {m} edges but {} were listed",
            edges.len()
        )));
    }
    Graph::new(n, edges)
}

pub fn parse_graph_json(text: &str) -> Result<Graph> {
    let raw: GraphJson = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    if raw.n == 0 {
        return Err(Error::Parse("graph must have at least one node".into()));
    }
    Graph::new(raw.n, raw.edges.into_iter().map(|[a, b]| (a, b)))
}

/// Parses either format, picking JSON when the first non-blank character is `{`.
pub fn parse_graph(text: &str) -> Result<Graph> {
    if text.trim_start().starts_with('{') {
        parse_graph_json(text)
    } else {
        parse_edge_list(text)
    }
}
