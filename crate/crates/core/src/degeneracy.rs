use std::collections::BTreeSet;

use crate::graph::Graph;
use crate::Vertex;

/// Result of min-degree peeling.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DegeneracyOrdering {
    /// `v_1..v_n`: each vertex has at most `degeneracy` neighbors before it.
    pub ordering: Vec<Vertex>,
    pub degeneracy: usize,
}

impl DegeneracyOrdering {
    /// Vertices in the order they were peeled (reverse of `ordering`).
    pub fn removal_order(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.ordering.iter().rev().copied()
    }
}

/// Repeatedly removes a vertex of minimum residual degree, lowest id first.
pub fn degeneracy_ordering(g: &Graph) -> DegeneracyOrdering {
    let n = g.n();
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut queue: BTreeSet<(usize, Vertex)> = g.vertices().map(|v| (degree[v], v)).collect();
    let mut removed = vec![false; n];
    let mut removal = Vec::with_capacity(n);
    let mut degeneracy = 0;

    while let Some((d, v)) = queue.pop_first() {
        degeneracy = degeneracy.max(d);
        removed[v] = true;
        removal.push(v);
        for &w in g.neighbors(v) {
            if !removed[w] {
                queue.remove(&(degree[w], w));
                degree[w] -= 1;
                queue.insert((degree[w], w));
            }
        }
    }

    removal.reverse();
    DegeneracyOrdering {
        ordering: removal,
        degeneracy,
    }
}
