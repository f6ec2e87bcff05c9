//! Seeded random graph families and colorings shared by the test targets.
#![allow(dead_code)]

use rand::seq::SliceRandom;
use rand::Rng;
use recolor_core::{degeneracy_ordering, mad_exact, Color, Coloring, Graph, Rational, Vertex};

fn relabel<R: Rng>(rng: &mut R, n: usize, edges: &[(Vertex, Vertex)]) -> Graph {
    let mut perm: Vec<Vertex> = (0..n).collect();
    perm.shuffle(rng);
    let edges: Vec<_> = edges
        .iter()
        .map(|&(u, v)| {
            let (a, b) = (perm[u], perm[v]);
            (a.min(b), a.max(b))
        })
        .collect();
    Graph::from_edges(n, &edges).unwrap()
}

/// Uniform random recursive tree, relabeled.
pub fn random_tree<R: Rng>(rng: &mut R, n: usize) -> Graph {
    let edges: Vec<_> = (1..n).map(|i| (rng.gen_range(0..i), i)).collect();
    relabel(rng, n, &edges)
}

/// Disjoint random trees of at most `max_component` vertices each.
pub fn random_small_forest<R: Rng>(rng: &mut R, n: usize, max_component: usize) -> Graph {
    let mut edges = Vec::new();
    let mut start = 0;
    while start < n {
        let size = rng.gen_range(1..=max_component).min(n - start);
        for i in 1..size {
            edges.push((start + rng.gen_range(0..i), start + i));
        }
        start += size;
    }
    relabel(rng, n, &edges)
}

/// Random graph with about `m` edges, each kept only if the maximum average
/// degree stays at most `limit`.
pub fn random_mad_bounded<R: Rng>(rng: &mut R, n: usize, m: usize, limit: Rational) -> Graph {
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    if n < 2 {
        return Graph::empty(n);
    }
    for _ in 0..m * 3 {
        if edges.len() >= m {
            break;
        }
        let u = rng.gen_range(0..n);
        let v = rng.gen_range(0..n);
        let e = (u.min(v), u.max(v));
        if u == v || edges.contains(&e) {
            continue;
        }
        edges.push(e);
        if mad_exact(&Graph::from_edges(n, &edges).unwrap()) > limit {
            edges.pop();
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Erdős–Rényi style graph with edge probability `p`.
pub fn random_gnp<R: Rng>(rng: &mut R, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Uniformly chosen available color along a degeneracy ordering; needs
/// `k` above the degeneracy.
pub fn random_coloring<R: Rng>(rng: &mut R, g: &Graph, k: Color) -> Coloring {
    let order = degeneracy_ordering(g).ordering;
    let mut colors = vec![0 as Color; g.n()];
    for v in order {
        let free: Vec<Color> = (1..=k)
            .filter(|&c| g.neighbors(v).iter().all(|&w| colors[w] != c))
            .collect();
        colors[v] = *free.choose(rng).expect("k exceeds the degeneracy");
    }
    Coloring::new(colors, k).unwrap()
}
