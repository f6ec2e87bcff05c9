use num_bigint::BigUint;
use thiserror::Error;

use super::partition::DegreePartition;
use crate::degeneracy::degeneracy_ordering;
use crate::graph::Graph;
use crate::{Rational, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LayeringError {
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error(
        "round {round}: special independent set of size {achieved} on {residual} vertices, \
         need at least {required} (maximum average degree exceeds d - epsilon?)"
    )]
    SizeGuaranteeViolated {
        round: usize,
        residual: usize,
        achieved: usize,
        required: usize,
    },
}

/// Degree bound `d` and slack `epsilon` for graphs with maximum average degree
/// at most `d - epsilon`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpecialISParams {
    d: usize,
    epsilon: Rational,
}

impl SpecialISParams {
    pub fn new(d: usize, epsilon: Rational) -> Result<Self, LayeringError> {
        if d == 0 {
            return Err(LayeringError::InvalidParams("d must be positive".into()));
        }
        if epsilon <= Rational::from_integer(0) || epsilon >= Rational::from_integer(d as i64) {
            return Err(LayeringError::InvalidParams(format!(
                "epsilon must lie strictly between 0 and d = {d}"
            )));
        }
        Ok(Self { d, epsilon })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn epsilon(&self) -> Rational {
        self.epsilon
    }

    /// `ceil(epsilon * h / d²)`.
    pub fn threshold(&self, h: usize) -> usize {
        let x = self.epsilon * Rational::from_integer(h as i64)
            / Rational::from_integer((self.d * self.d) as i64);
        x.ceil().to_integer() as usize
    }

    /// `ceil(log n / log(1 / (1 - epsilon/d²))) + 1`, the most rounds a peeling
    /// can take when every round removes at least `threshold(h)` vertices.
    /// Evaluated exactly as the least `L` with `n (1 - epsilon/d²)^L <= 1`.
    pub fn layer_count_bound(&self, n: usize) -> usize {
        if n == 0 {
            return 0;
        }
        let d2 = (self.d * self.d) as u64;
        let (p, q) = (*self.epsilon.numer() as u64, *self.epsilon.denom() as u64);
        // 1 - p / (q d²) = keep / whole
        let whole = BigUint::from(q * d2);
        let keep = BigUint::from(q * d2 - p);
        let n = BigUint::from(n);
        let mut lhs = n;
        let mut rhs = BigUint::from(1u32);
        let mut rounds = 0;
        while lhs > rhs {
            lhs *= &keep;
            rhs *= &whole;
            rounds += 1;
        }
        rounds + 1
    }
}

/// Greedy special independent set over the vertices with `alive[v]`.
/// `degree[v]` is the degree of `v` among alive vertices.
fn special_is_within(
    g: &Graph,
    alive: &[bool],
    degree: &[usize],
    params: &SpecialISParams,
) -> Vec<Vertex> {
    let mut blocked = vec![false; g.n()];
    let mut chosen = Vec::new();
    for v in g.vertices() {
        if alive[v] && degree[v] < params.d() && !blocked[v] {
            chosen.push(v);
            for &w in g.neighbors(v) {
                blocked[w] = true;
            }
        }
    }
    chosen
}

/// An independent set of vertices of degree at most `d - 1`, with at least
/// `ceil(epsilon h / d²)` members on an `h`-vertex graph.
///
/// Low-degree vertices are taken greedily in ascending id order, skipping any
/// neighbor of one already taken. When the maximum average degree is at most
/// `d - epsilon`, at least `epsilon h / d` vertices have degree below `d`, and
/// each pick rules out at most `d` of them, so the bound holds; a shortfall
/// therefore means the density precondition failed.
pub fn special_independent_set(
    g: &Graph,
    params: &SpecialISParams,
) -> Result<Vec<Vertex>, LayeringError> {
    let alive = vec![true; g.n()];
    let degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let set = special_is_within(g, &alive, &degree, params);
    let required = params.threshold(g.n());
    if set.len() < required {
        return Err(LayeringError::SizeGuaranteeViolated {
            round: 1,
            residual: g.n(),
            achieved: set.len(),
            required,
        });
    }
    Ok(set)
}

/// Peels special independent sets until the graph is exhausted, giving a
/// `(d - 1)`-degree partition whose layer count is logarithmic in `n`.
pub fn build_degree_partition(
    g: &Graph,
    params: &SpecialISParams,
) -> Result<DegreePartition, LayeringError> {
    let mut alive = vec![true; g.n()];
    let mut degree: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut residual = g.n();
    let mut layers = Vec::new();
    while residual > 0 {
        let layer = special_is_within(g, &alive, &degree, params);
        let required = params.threshold(residual);
        if layer.len() < required {
            return Err(LayeringError::SizeGuaranteeViolated {
                round: layers.len() + 1,
                residual,
                achieved: layer.len(),
                required,
            });
        }
        for &v in &layer {
            alive[v] = false;
            for &w in g.neighbors(v) {
                degree[w] -= 1;
            }
        }
        residual -= layer.len();
        layers.push(layer);
    }
    Ok(DegreePartition::new(params.d() - 1, layers))
}

/// Singleton layers in min-degree peeling order, with `s` the degeneracy.
pub fn degree_partition_from_degeneracy(g: &Graph) -> DegreePartition {
    let ordering = degeneracy_ordering(g);
    let layers = ordering.removal_order().map(|v| vec![v]).collect();
    DegreePartition::new(ordering.degeneracy, layers)
}
