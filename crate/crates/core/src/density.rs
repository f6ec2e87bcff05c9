//! Exact maximum average degree.
//!
//! `mad(G) = max { 2|E(H)| / |V(H)| : H ⊆ G }`, always as an exact fraction.
//! [`mad_exact`] is polynomial (densest subgraph via parametric max-flow);
//! [`mad_brute`] enumerates vertex subsets and serves as its oracle.

use num_rational::Ratio;
use thiserror::Error;

use crate::flow::FlowNetwork;
use crate::graph::Graph;
use crate::scalar::Scalar;
use crate::{Rational, Vertex};

/// Largest graph accepted by [`mad_brute`].
pub const BRUTE_MAX_VERTICES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DensityError {
    #[error("brute-force enumeration limited to {max} vertices, graph has {n}")]
    TooManyVertices { n: usize, max: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("expected an exact rational \"p/q\" or integer, found {0:?}")]
pub struct ParseRationalError(pub String);

/// Parses `p/q` or `p`. Decimal and exponent notation are rejected.
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError(text.to_string());
    let int = |s: &str| -> Result<i64, ParseRationalError> {
        let s = s.trim();
        let digits = s.strip_prefix('-').unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(err());
        }
        s.parse().map_err(|_| err())
    };
    match text.trim().split_once('/') {
        Some((p, q)) => {
            let q = int(q)?;
            if q == 0 {
                return Err(err());
            }
            Ok(Rational::new(int(p)?, q))
        }
        None => Ok(Rational::from_integer(int(text)?)),
    }
}

/// Lowest-terms `p/q`, always with an explicit denominator (`2/1`).
pub fn format_rational<T: Scalar>(r: &Ratio<T>) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

/// Exact maximum average degree with the default `i64` scalar.
pub fn mad_exact(g: &Graph) -> Rational {
    mad_exact_in::<i64>(g)
}

/// Exact maximum average degree computed in scalar type `S`.
///
/// Binary search on the edge density `g`, where feasibility ("some `H` has
/// `|E(H)| > g |V(H)|`") is a minimum cut in Goldberg's network. Densities of
/// subgraphs are fractions with denominator at most `n`, so two distinct ones
/// differ by more than `1/n²`; once the search interval is narrower than that,
/// the last subgraph found feasible is a densest one.
pub fn mad_exact_in<S: Scalar>(g: &Graph) -> Ratio<S> {
    let n = g.n();
    if g.m() == 0 {
        return Ratio::from_integer(S::zero());
    }
    let max_degree = g.vertices().map(|v| g.degree(v)).max().unwrap_or(0);
    let mut lo = Ratio::from_integer(S::zero());
    let mut hi = Ratio::new(S::of(max_degree), S::of(2));
    let gap = Ratio::new(S::one(), S::of(n * n));
    // Any single edge beats density 0.
    let (u, v) = g.edges().next().expect("m > 0");
    let mut best = vec![u, v];
    while hi - lo >= gap {
        let mid = (lo + hi) / S::of(2);
        match denser_subgraph(g, &mid) {
            Some(h) => {
                lo = mid;
                best = h;
            }
            None => hi = mid,
        }
    }
    let edges = edges_within(g, &best);
    Ratio::new(S::of(2 * edges), S::of(best.len()))
}

fn edges_within(g: &Graph, set: &[Vertex]) -> usize {
    let mut member = vec![false; g.n()];
    for &v in set {
        member[v] = true;
    }
    set.iter()
        .map(|&v| g.neighbors(v).iter().filter(|&&w| member[w]).count())
        .sum::<usize>()
        / 2
}

/// A vertex set `H` with `|E(H)| > density * |H|`, if one exists.
fn denser_subgraph<S: Scalar>(g: &Graph, density: &Ratio<S>) -> Option<Vec<Vertex>> {
    let n = g.n();
    let (p, q) = (*density.numer(), *density.denom());
    let m = S::of(g.m());
    let source = n;
    let sink = n + 1;
    let mut net = FlowNetwork::new(n + 2);
    for v in g.vertices() {
        net.add_edge(source, v, m * q);
        net.add_edge(v, sink, m * q + S::of(2) * p - S::of(g.degree(v)) * q);
    }
    for (u, v) in g.edges() {
        net.add_edge(u, v, q);
        net.add_edge(v, u, q);
    }
    let cut = net.max_flow(source, sink);
    if cut >= m * S::of(n) * q {
        return None;
    }
    let side = net.source_side(source);
    Some(g.vertices().filter(|&v| side[v]).collect())
}

/// Maximum average degree by enumerating every non-empty vertex subset.
pub fn mad_brute(g: &Graph) -> Result<Rational, DensityError> {
    mad_brute_in::<i64>(g)
}

pub fn mad_brute_in<S: Scalar>(g: &Graph) -> Result<Ratio<S>, DensityError> {
    let n = g.n();
    if n > BRUTE_MAX_VERTICES {
        return Err(DensityError::TooManyVertices {
            n,
            max: BRUTE_MAX_VERTICES,
        });
    }
    let adjacency: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | 1 << w))
        .collect();
    let mut best = Ratio::from_integer(S::zero());
    for mask in 1u32..(1u32 << n) {
        let degree_sum: u32 = (0..n)
            .filter(|&v| mask >> v & 1 == 1)
            .map(|v| (adjacency[v] & mask).count_ones())
            .sum();
        let density = Ratio::new(
            S::of(degree_sum as usize),
            S::of(mask.count_ones() as usize),
        );
        if density > best {
            best = density;
        }
    }
    Ok(best)
}
