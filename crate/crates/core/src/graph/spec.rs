use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{generate, parse_graph6, Graph};
use crate::error::{Error, Result};

/// A textual description of a graph: `g6:<string>`, `file:<path>`, or
/// `<generator>[:arg[:arg]]`, optionally prefixed by one or more
/// `complement:` combinators.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub enum GraphSpec {
    Graph6(String),
    File(String),
    Named { name: String, args: Vec<usize> },
    Complement(Box<GraphSpec>),
}

impl GraphSpec {
    pub fn parse(text: &str) -> Result<GraphSpec> {
        let text = text.trim();
        let bad = |reason: &str| Error::GraphSpec { spec: text.to_string(), reason: reason.to_string() };
        if text.is_empty() {
            return Err(bad("empty spec"));
        }
        if let Some(rest) = text.strip_prefix("complement:") {
            return Ok(GraphSpec::Complement(Box::new(GraphSpec::parse(rest)?)));
        }
        if let Some(rest) = text.strip_prefix("g6:") {
            return Ok(GraphSpec::Graph6(rest.to_string()));
        }
        if let Some(rest) = text.strip_prefix("file:") {
            if rest.is_empty() {
                return Err(bad("missing file path"));
            }
            return Ok(GraphSpec::File(rest.to_string()));
        }
        let mut parts = text.split(':');
        let name = parts.next().unwrap().to_string();
        let args = parts
            .map(|a| a.parse::<usize>().map_err(|_| bad(&format!("argument `{a}` is not a non-negative integer"))))
            .collect::<Result<Vec<_>>>()?;
        if !super::GENERATORS.iter().any(|(g, _)| *g == name) {
            return Err(Error::UnknownGenerator(name));
        }
        Ok(GraphSpec::Named { name, args })
    }

    /// Materialises the graph.
    pub fn build(&self) -> Result<Graph> {
        match self {
            GraphSpec::Graph6(s) => parse_graph6(s),
            GraphSpec::File(path) => {
                let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{path}: {e}")))?;
                parse_graph_text(&text)
            }
            GraphSpec::Named { name, args } => generate(name, args),
            GraphSpec::Complement(inner) => Ok(inner.build()?.complement()),
        }
    }
}

/// Parses file contents: a graph6 line, or adjacency-list text with one
/// `u: v1 v2 ...` line per vertex (`#` starts a comment). The vertex count
/// is one more than the largest index mentioned.
pub fn parse_graph_text(text: &str) -> Result<Graph> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    if lines.len() == 1 && !lines[0].1.contains(':') {
        return parse_graph6(lines[0].1);
    }
    let mut edges = Vec::new();
    let mut max_vertex = None::<usize>;
    let bad = |line: usize, reason: String| Error::Corpus { line, source: Box::new(Error::InvalidGraph(reason)) };
    for (lineno, line) in lines {
        let (head, tail) = line
            .split_once(':')
            .ok_or_else(|| bad(lineno, "expected `u: v1 v2 ...`".into()))?;
        let u: usize = head.trim().parse().map_err(|_| bad(lineno, format!("bad vertex `{}`", head.trim())))?;
        max_vertex = max_vertex.max(Some(u));
        for tok in tail.split_whitespace() {
            let v: usize = tok.parse().map_err(|_| bad(lineno, format!("bad vertex `{tok}`")))?;
            max_vertex = max_vertex.max(Some(v));
            edges.push((u, v));
        }
    }
    let n = max_vertex.map_or(0, |m| m + 1);
    Graph::from_edges(n, &edges)
}

impl FromStr for GraphSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<GraphSpec> {
        GraphSpec::parse(s)
    }
}

impl fmt::Display for GraphSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GraphSpec::Graph6(s) => write!(f, "g6:{s}"),
            GraphSpec::File(p) => write!(f, "file:{p}"),
            GraphSpec::Named { name, args } => {
                write!(f, "{name}")?;
                for a in args {
                    write!(f, ":{a}")?;
                }
                Ok(())
            }
            GraphSpec::Complement(inner) => write!(f, "complement:{inner}"),
        }
    }
}

impl TryFrom<String> for GraphSpec {
    type Error = Error;
    fn try_from(s: String) -> Result<GraphSpec> {
        GraphSpec::parse(&s)
    }
}

impl From<GraphSpec> for String {
    fn from(s: GraphSpec) -> String {
        s.to_string()
    }
}
