//! Simple undirected graphs and their text format.
//!
//! The format is line based: the first non-comment line is `n m`, followed by
//! exactly `m` lines `u v` with `0 <= u < v < n`. Lines starting with `#` and
//! blank lines are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use crate::Vertex;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("line {line}: {reason}")]
    Malformed { line: usize, reason: String },
    #[error("line {line}: vertex {vertex} out of range for n = {n}")]
    VertexOutOfRange {
        line: usize,
        vertex: usize,
        n: usize,
    },
    #[error("line {line}: self-loop at vertex {vertex}")]
    SelfLoop { line: usize, vertex: Vertex },
    #[error("line {line}: duplicate edge {u} {v}")]
    DuplicateEdge { line: usize, u: Vertex, v: Vertex },
    #[error("line {line}: edge {u} {v} must be written with u < v")]
    UnorderedEdge { line: usize, u: Vertex, v: Vertex },
    #[error("expected {expected} edges, found {found}")]
    EdgeCount { expected: usize, found: usize },
    #[error("graph must have at least one vertex")]
    Empty,
    #[error("missing header line \"n m\"")]
    MissingHeader,
}

/// Simple undirected graph on vertices `0..n` with sorted adjacency lists.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    adjacency: Vec<Vec<Vertex>>,
    m: usize,
}

impl Graph {
    pub fn empty(n: usize) -> Self {
        Self {
            adjacency: vec![Vec::new(); n],
            m: 0,
        }
    }

    /// Builds a graph from an edge list, rejecting loops, duplicates and
    /// out-of-range endpoints. Edges may be given in either orientation.
    pub fn from_edges(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Self, GraphError> {
        let mut g = Self::empty(n);
        for (i, &(u, v)) in edges.iter().enumerate() {
            g.insert_edge(i + 1, u, v)?;
        }
        g.finish();
        Ok(g)
    }

    fn insert_edge(&mut self, line: usize, u: Vertex, v: Vertex) -> Result<(), GraphError> {
        let n = self.n();
        for x in [u, v] {
            if x >= n {
                return Err(GraphError::VertexOutOfRange { line, vertex: x, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop { line, vertex: u });
        }
        if self.adjacency[u].contains(&v) {
            return Err(GraphError::DuplicateEdge {
                line,
                u: u.min(v),
                v: u.max(v),
            });
        }
        self.adjacency[u].push(v);
        self.adjacency[v].push(u);
        self.m += 1;
        Ok(())
    }

    fn finish(&mut self) {
        for list in &mut self.adjacency {
            list.sort_unstable();
        }
    }

    pub fn n(&self) -> usize {
        self.adjacency.len()
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.adjacency[v]
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adjacency[v].len()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.adjacency[u].binary_search(&v).is_ok()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.n()
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    /// Subgraph induced by `keep`, relabelled to `0..keep.len()` in the given
    /// order. Returns the subgraph and the map from new ids to old ids.
    pub fn induced(&self, keep: &[Vertex]) -> (Graph, Vec<Vertex>) {
        let mut new_id = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let mut sub = Graph::empty(keep.len());
        for (i, &v) in keep.iter().enumerate() {
            for &w in self.neighbors(v) {
                let j = new_id[w];
                if j != usize::MAX && i < j {
                    sub.adjacency[i].push(j);
                    sub.adjacency[j].push(i);
                    sub.m += 1;
                }
            }
        }
        sub.finish();
        (sub, keep.to_vec())
    }

    pub fn is_independent(&self, set: &[Vertex]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| !self.has_edge(u, v)))
    }

    /// Serializes into the text format accepted by [`parse_graph`].
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.n(), self.m());
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{u} {v}");
        }
        out
    }
}

fn parse_usize(token: &str, line: usize) -> Result<usize, GraphError> {
    token.parse().map_err(|_| GraphError::Malformed {
        line,
        reason: format!("expected a non-negative integer, found {token:?}"),
    })
}

fn parse_pair(text: &str, line: usize) -> Result<(usize, usize), GraphError> {
    let mut tokens = text.split_whitespace();
    match (tokens.next(), tokens.next(), tokens.next()) {
        (Some(a), Some(b), None) => Ok((parse_usize(a, line)?, parse_usize(b, line)?)),
        _ => Err(GraphError::Malformed {
            line,
            reason: format!("expected two integers, found {:?}", text.trim()),
        }),
    }
}

/// Parses the graph text format. Line numbers in errors are 1-based.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_line, header) = lines.next().ok_or(GraphError::MissingHeader)?;
    let (n, m) = parse_pair(header, header_line)?;
    if n == 0 {
        return Err(GraphError::Empty);
    }

    let mut g = Graph::empty(n);
    let mut found = 0;
    for (line, content) in lines {
        if found == m {
            return Err(GraphError::Malformed {
                line,
                reason: format!("more than the declared {m} edges"),
            });
        }
        let (u, v) = parse_pair(content, line)?;
        if u < n && v < n && u > v {
            return Err(GraphError::UnorderedEdge { line, u, v });
        }
        g.insert_edge(line, u, v)?;
        found += 1;
    }
    if found != m {
        return Err(GraphError::EdgeCount { expected: m, found });
    }
    g.finish();
    Ok(g)
}
