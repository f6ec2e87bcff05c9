use std::fmt::{self, Write as _};

use thiserror::Error;

use crate::graph::Graph;
use crate::Vertex;

/// Ordered layers `V_1..V_t` with degree parameter `s`.
///
/// Valid for a graph when the layers partition its vertex set and every
/// vertex of `V_i` is isolated from `V_i` and has at most `s` neighbors in
/// `V_i ∪ … ∪ V_t`. Layer indices in this API are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreePartition {
    s: usize,
    layers: Vec<Vec<Vertex>>,
}

impl DegreePartition {
    /// Sorts each layer; validity against a graph is checked separately by
    /// [`validate_partition`].
    pub fn new(s: usize, mut layers: Vec<Vec<Vertex>>) -> Self {
        for layer in &mut layers {
            layer.sort_unstable();
        }
        Self { s, layers }
    }

    pub fn s(&self) -> usize {
        self.s
    }

    pub fn t(&self) -> usize {
        self.layers.len()
    }

    pub fn layers(&self) -> &[Vec<Vertex>] {
        &self.layers
    }

    pub fn layer(&self, i: usize) -> &[Vertex] {
        &self.layers[i]
    }

    pub fn vertex_count(&self) -> usize {
        self.layers.iter().map(Vec::len).sum()
    }

    /// `layer_of[v]` for a partition of `0..n`.
    pub fn layer_of(&self, n: usize) -> Vec<usize> {
        let mut layer_of = vec![usize::MAX; n];
        for (i, layer) in self.layers.iter().enumerate() {
            for &v in layer {
                layer_of[v] = i;
            }
        }
        layer_of
    }

    /// Line 1 `s t`, then one line of ascending ids per layer.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.s, self.t());
        for layer in &self.layers {
            let ids: Vec<String> = layer.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "{}", ids.join(" "));
        }
        out
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("partition text, line {line}: {reason}")]
pub struct ParsePartitionError {
    pub line: usize,
    pub reason: String,
}

pub fn parse_partition(text: &str) -> Result<DegreePartition, ParsePartitionError> {
    let err = |line: usize, reason: &str| ParsePartitionError {
        line,
        reason: reason.to_string(),
    };
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l.trim()));
    let (_, header) = lines
        .next()
        .ok_or_else(|| err(1, "missing \"s t\" header"))?;
    let header: Vec<usize> = header
        .split_whitespace()
        .map(str::parse)
        .collect::<Result<_, _>>()
        .map_err(|_| err(1, "header must be two integers"))?;
    let [s, t] = header[..] else {
        return Err(err(1, "header must be two integers"));
    };
    let mut layers = Vec::with_capacity(t);
    for (line, content) in lines {
        if layers.len() == t {
            if content.is_empty() {
                continue;
            }
            return Err(err(line, "more layers than declared"));
        }
        let layer = content
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<Vec<Vertex>, _>>()
            .map_err(|_| err(line, "layer must be vertex ids"))?;
        layers.push(layer);
    }
    if layers.len() != t {
        return Err(err(t + 1, "fewer layers than declared"));
    }
    Ok(DegreePartition::new(s, layers))
}

/// First defect found by [`validate_partition`].
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PartitionViolation {
    #[error("layer {layer} is empty")]
    EmptyLayer { layer: usize },
    #[error("layer {layer} contains vertex {vertex}, which is not in the graph")]
    VertexOutOfRange { layer: usize, vertex: Vertex },
    #[error("vertex {vertex} appears again in layer {layer}")]
    RepeatedVertex { layer: usize, vertex: Vertex },
    #[error("vertex {vertex} is not covered by any layer")]
    Uncovered { vertex: Vertex },
    #[error("layer {layer} is not independent: edge {u} {v}")]
    NotIndependent { layer: usize, u: Vertex, v: Vertex },
    #[error("vertex {vertex} of layer {layer} has residual degree {degree} > s = {s}")]
    DegreeTooHigh {
        layer: usize,
        vertex: Vertex,
        degree: usize,
        s: usize,
    },
}

/// Checks that `p` is an `s`-degree partition of `g`: disjoint non-empty
/// layers covering `V(g)`, each independent with residual degrees at most `s`
/// once the earlier layers are removed.
pub fn validate_partition(g: &Graph, p: &DegreePartition) -> Result<(), PartitionViolation> {
    let n = g.n();
    let mut layer_of = vec![usize::MAX; n];
    for (layer, vertices) in p.layers().iter().enumerate() {
        if vertices.is_empty() {
            return Err(PartitionViolation::EmptyLayer { layer });
        }
        for &vertex in vertices {
            if vertex >= n {
                return Err(PartitionViolation::VertexOutOfRange { layer, vertex });
            }
            if layer_of[vertex] != usize::MAX {
                return Err(PartitionViolation::RepeatedVertex { layer, vertex });
            }
            layer_of[vertex] = layer;
        }
    }
    if let Some(vertex) = layer_of.iter().position(|&l| l == usize::MAX) {
        return Err(PartitionViolation::Uncovered { vertex });
    }
    for (layer, vertices) in p.layers().iter().enumerate() {
        for &u in vertices {
            if let Some(&v) = g.neighbors(u).iter().find(|&&v| layer_of[v] == layer) {
                return Err(PartitionViolation::NotIndependent {
                    layer,
                    u: u.min(v),
                    v: u.max(v),
                });
            }
            let degree = g
                .neighbors(u)
                .iter()
                .filter(|&&v| layer_of[v] >= layer)
                .count();
            if degree > p.s() {
                return Err(PartitionViolation::DegreeTooHigh {
                    layer,
                    vertex: u,
                    degree,
                    s: p.s(),
                });
            }
        }
    }
    Ok(())
}

/// Number of neighbors of `v` in layers strictly after the layer of `v`.
pub fn later_layer_degree(g: &Graph, p: &DegreePartition, v: Vertex) -> usize {
    let layer_of = p.layer_of(g.n());
    g.neighbors(v)
        .iter()
        .filter(|&&w| layer_of[w] != usize::MAX && layer_of[w] > layer_of[v])
        .count()
}

/// A vertex order that lists layer `V_1` first, then `V_2`, and so on.
///
/// Positions are 0-based. Vertices at later positions are "earlier in the
/// ordering" in the sense of orderings written `v_n, …, v_1`: greedy passes
/// run from the last position back to the first.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EmbeddedOrdering {
    order: Vec<Vertex>,
    position: Vec<usize>,
    layer_of: Vec<usize>,
}

impl EmbeddedOrdering {
    pub fn order(&self) -> &[Vertex] {
        &self.order
    }

    pub fn position(&self, v: Vertex) -> usize {
        self.position[v]
    }

    pub fn layer_of(&self, v: Vertex) -> usize {
        self.layer_of[v]
    }

    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }

    /// Neighbors of `v` at strictly later positions.
    pub fn later_neighbors<'a>(
        &'a self,
        g: &'a Graph,
        v: Vertex,
    ) -> impl Iterator<Item = Vertex> + 'a {
        let pos = self.position[v];
        g.neighbors(v)
            .iter()
            .copied()
            .filter(move |&w| self.position[w] > pos)
    }

    /// Largest number of later-position neighbors over all vertices.
    pub fn max_later_degree(&self, g: &Graph) -> usize {
        g.vertices()
            .map(|v| self.later_neighbors(g, v).count())
            .max()
            .unwrap_or(0)
    }

    /// Layer indices never decrease along the order.
    pub fn is_layer_monotone(&self) -> bool {
        self.order
            .windows(2)
            .all(|w| self.layer_of[w[0]] <= self.layer_of[w[1]])
    }
}

/// Concatenates `V_1, …, V_t`, ascending ids within each layer.
///
/// # Panics
/// If `p` is not a partition of `0..p.vertex_count()`.
pub fn embedded_ordering(p: &DegreePartition) -> EmbeddedOrdering {
    let n = p.vertex_count();
    let order: Vec<Vertex> = p.layers().iter().flatten().copied().collect();
    let mut position = vec![usize::MAX; n];
    for (i, &v) in order.iter().enumerate() {
        assert!(
            v < n && position[v] == usize::MAX,
            "layers must partition 0..{n}"
        );
        position[v] = i;
    }
    EmbeddedOrdering {
        order,
        position,
        layer_of: p.layer_of(n),
    }
}

/// The union of the first `boundary` layers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct LayeredSubgraphRef {
    boundary: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("boundary {boundary} outside 1..={t}")]
pub struct BoundaryError {
    pub boundary: usize,
    pub t: usize,
}

impl LayeredSubgraphRef {
    pub fn new(boundary: usize, t: usize) -> Result<Self, BoundaryError> {
        if boundary == 0 || boundary > t {
            return Err(BoundaryError { boundary, t });
        }
        Ok(Self { boundary })
    }

    pub fn whole(p: &DegreePartition) -> Self {
        Self {
            boundary: p.t().max(1),
        }
    }

    pub fn boundary(&self) -> usize {
        self.boundary
    }

    /// Whether the 0-based layer index lies inside.
    pub fn contains_layer(&self, layer: usize) -> bool {
        layer < self.boundary
    }

    pub fn vertices(&self, p: &DegreePartition) -> Vec<Vertex> {
        let mut vs: Vec<Vertex> = p.layers()[..self.boundary.min(p.t())]
            .iter()
            .flatten()
            .copied()
            .collect();
        vs.sort_unstable();
        vs
    }
}

impl fmt::Display for LayeredSubgraphRef {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "V_1..V_{}", self.boundary)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).unwrap()
    }

    #[test]
    fn validate_examples() {
        let p3 = path(3);
        assert_eq!(
            validate_partition(&p3, &DegreePartition::new(1, vec![vec![0, 1], vec![2]])),
            Err(PartitionViolation::NotIndependent {
                layer: 0,
                u: 0,
                v: 1
            })
        );
        assert_eq!(
            validate_partition(&p3, &DegreePartition::new(1, vec![vec![0], vec![2]])),
            Err(PartitionViolation::Uncovered { vertex: 1 })
        );
        assert_eq!(
            validate_partition(&p3, &DegreePartition::new(1, vec![vec![0, 2], vec![1]])),
            Ok(())
        );
        // Middle vertex first has residual degree 2.
        assert_eq!(
            validate_partition(&p3, &DegreePartition::new(1, vec![vec![1], vec![0, 2]])),
            Err(PartitionViolation::DegreeTooHigh {
                layer: 0,
                vertex: 1,
                degree: 2,
                s: 1
            })
        );
        assert!(matches!(
            validate_partition(
                &p3,
                &DegreePartition::new(1, vec![vec![0, 2], vec![], vec![1]])
            ),
            Err(PartitionViolation::EmptyLayer { layer: 1 })
        ));
        assert!(matches!(
            validate_partition(&p3, &DegreePartition::new(1, vec![vec![0, 2], vec![1, 2]])),
            Err(PartitionViolation::RepeatedVertex {
                layer: 1,
                vertex: 2
            })
        ));
        assert!(matches!(
            validate_partition(&p3, &DegreePartition::new(1, vec![vec![0, 2], vec![1, 7]])),
            Err(PartitionViolation::VertexOutOfRange {
                layer: 1,
                vertex: 7
            })
        ));
    }

    #[test]
    fn embedded_order_concatenates() {
        let p = DegreePartition::new(1, vec![vec![2, 0], vec![3, 1]]);
        let ord = embedded_ordering(&p);
        assert_eq!(ord.order(), &[0, 2, 1, 3]);
        assert!(ord.is_layer_monotone());
        assert_eq!(ord.position(1), 2);
        let single = embedded_ordering(&DegreePartition::new(0, vec![vec![0, 1, 2]]));
        assert_eq!(single.order(), &[0, 1, 2]);
    }

    #[test]
    fn later_layer_degree_examples() {
        let p4 = path(4);
        let p = DegreePartition::new(1, vec![vec![0, 2], vec![1, 3]]);
        assert_eq!(later_layer_degree(&p4, &p, 0), 1);
        assert_eq!(later_layer_degree(&p4, &p, 2), 2);
        assert_eq!(later_layer_degree(&p4, &p, 3), 0);
        let isolated = Graph::empty(2);
        let q = DegreePartition::new(0, vec![vec![0, 1]]);
        assert_eq!(later_layer_degree(&isolated, &q, 1), 0);
        let p3 = path(3);
        let singles = DegreePartition::new(1, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(later_layer_degree(&p3, &singles, 2), 0);
    }

    #[test]
    fn partition_text() {
        let p = DegreePartition::new(1, vec![vec![0, 3], vec![1], vec![2]]);
        assert_eq!(p.to_text(), "1 3\n0 3\n1\n2\n");
        assert_eq!(parse_partition(&p.to_text()).unwrap(), p);
        assert!(parse_partition("1 2\n0 1\n").is_err());
        assert!(parse_partition("1 1\n0 1\n2\n").is_err());
        assert!(parse_partition("x\n").is_err());
    }

    #[test]
    fn boundaries() {
        let p = DegreePartition::new(1, vec![vec![0, 3], vec![1], vec![2]]);
        assert!(LayeredSubgraphRef::new(0, 3).is_err());
        assert!(LayeredSubgraphRef::new(4, 3).is_err());
        let f = LayeredSubgraphRef::new(2, 3).unwrap();
        assert_eq!(f.vertices(&p), vec![0, 1, 3]);
        assert!(f.contains_layer(1) && !f.contains_layer(2));
        assert_eq!(LayeredSubgraphRef::whole(&p).boundary(), 3);
    }
}
