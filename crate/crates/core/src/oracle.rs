//! Exhaustive ground truth for tiny instances.
//!
//! Colorings are encoded as integers in base `k` (vertex 0 least significant,
//! digit `c − 1` for color `c`) and the reconfiguration graph is searched
//! implicitly, with a visited bitmap over all `k^n` codes. The size of that
//! space is checked against a cap before any work is done.

use std::collections::VecDeque;

use thiserror::Error;

use crate::graph::Graph;
use crate::{Color, Vertex};

pub const DEFAULT_STATE_CAP: u64 = 10_000_000;

/// Largest graph accepted by [`enumerate_special_is`].
pub const ENUMERATION_MAX_VERTICES: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("{k}^{n} colorings exceed the state cap of {cap}")]
    StateSpaceTooLarge { k: Color, n: usize, cap: u64 },
    #[error("{0}")]
    ImproperInput(String),
    #[error("enumeration limited to {max} vertices, graph has {n}")]
    TooManyVertices { n: usize, max: usize },
}

/// A coloring as a base-`k` integer.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ColoringCode(pub u64);

impl ColoringCode {
    pub fn encode(colors: &[Color], k: Color) -> Self {
        let code = colors
            .iter()
            .rev()
            .fold(0u64, |acc, &c| acc * k as u64 + (c - 1) as u64);
        Self(code)
    }

    pub fn decode(self, n: usize, k: Color) -> Vec<Color> {
        let mut code = self.0;
        (0..n)
            .map(|_| {
                let digit = code % k as u64;
                code /= k as u64;
                digit as Color + 1
            })
            .collect()
    }
}

/// Shortest walk length, or `None` when the target is unreachable.
pub type Distance = Option<usize>;

/// The reconfiguration graph of the `k`-colorings of `g`, searched lazily.
#[derive(Debug, Clone)]
pub struct StateSpace<'g> {
    g: &'g Graph,
    k: Color,
    size: u64,
    powers: Vec<u64>,
}

impl<'g> StateSpace<'g> {
    pub fn new(g: &'g Graph, k: Color, cap: u64) -> Result<Self, OracleError> {
        let too_large = OracleError::StateSpaceTooLarge { k, n: g.n(), cap };
        let n = u32::try_from(g.n()).map_err(|_| too_large.clone())?;
        let size = (k as u64).checked_pow(n).ok_or(too_large.clone())?;
        if size > cap || k == 0 {
            return Err(too_large);
        }
        let powers = (0..g.n()).map(|i| (k as u64).pow(i as u32)).collect();
        Ok(Self { g, k, size, powers })
    }

    fn digit(&self, code: u64, v: Vertex) -> u64 {
        code / self.powers[v] % self.k as u64
    }

    fn is_proper_code(&self, code: u64) -> bool {
        self.g
            .edges()
            .all(|(u, v)| self.digit(code, u) != self.digit(code, v))
    }

    /// Adjacent proper colorings, ascending vertex then ascending color.
    fn for_each_neighbor(&self, code: u64, mut visit: impl FnMut(u64)) {
        for v in self.g.vertices() {
            let current = self.digit(code, v);
            for c in 0..self.k as u64 {
                if c != current
                    && self
                        .g
                        .neighbors(v)
                        .iter()
                        .all(|&w| self.digit(code, w) != c)
                {
                    visit(code - current * self.powers[v] + c * self.powers[v]);
                }
            }
        }
    }

    fn encode_checked(&self, colors: &[Color], name: &str) -> Result<u64, OracleError> {
        if colors.len() != self.g.n() || colors.iter().any(|&c| c == 0 || c > self.k) {
            return Err(OracleError::ImproperInput(format!(
                "{name} is not a {}-coloring of {} vertices",
                self.k,
                self.g.n()
            )));
        }
        let code = ColoringCode::encode(colors, self.k).0;
        if !self.is_proper_code(code) {
            return Err(OracleError::ImproperInput(format!("{name} is not proper")));
        }
        Ok(code)
    }

    pub fn count_proper(&self) -> u64 {
        (0..self.size).filter(|&c| self.is_proper_code(c)).count() as u64
    }

    /// Breadth-first distances from `start`; returns the farthest distance,
    /// the number of states reached, and the distance to `goal` if given.
    fn search(&self, start: u64, goal: Option<u64>) -> (usize, u64, Distance) {
        let mut visited = vec![0u64; (self.size as usize).div_ceil(64)];
        let mark = |visited: &mut Vec<u64>, c: u64| {
            let (word, bit) = ((c / 64) as usize, c % 64);
            let fresh = visited[word] >> bit & 1 == 0;
            visited[word] |= 1 << bit;
            fresh
        };
        mark(&mut visited, start);
        let mut queue = VecDeque::from([(start, 0usize)]);
        let mut farthest = 0;
        let mut reached = 1;
        while let Some((code, dist)) = queue.pop_front() {
            if Some(code) == goal {
                return (dist, reached, Some(dist));
            }
            farthest = dist;
            self.for_each_neighbor(code, |next| {
                if mark(&mut visited, next) {
                    reached += 1;
                    queue.push_back((next, dist + 1));
                }
            });
        }
        (farthest, reached, None)
    }

    pub fn bfs_distance(&self, alpha: &[Color], beta: &[Color]) -> Result<Distance, OracleError> {
        let start = self.encode_checked(alpha, "start coloring")?;
        let goal = self.encode_checked(beta, "end coloring")?;
        Ok(self.search(start, Some(goal)).2)
    }

    /// Largest distance between two proper colorings, or `None` when the
    /// reconfiguration graph is disconnected. An empty space has diameter 0.
    pub fn exact_diameter(&self) -> Distance {
        let proper: Vec<u64> = (0..self.size).filter(|&c| self.is_proper_code(c)).collect();
        let Some(&first) = proper.first() else {
            return Some(0);
        };
        let (mut diameter, reached, _) = self.search(first, None);
        if reached < proper.len() as u64 {
            return None;
        }
        for &code in &proper[1..] {
            diameter = diameter.max(self.search(code, None).0);
        }
        Some(diameter)
    }
}

pub fn count_proper_colorings(g: &Graph, k: Color) -> Result<u64, OracleError> {
    Ok(StateSpace::new(g, k, DEFAULT_STATE_CAP)?.count_proper())
}

pub fn bfs_distance(
    g: &Graph,
    k: Color,
    alpha: &[Color],
    beta: &[Color],
) -> Result<Distance, OracleError> {
    StateSpace::new(g, k, DEFAULT_STATE_CAP)?.bfs_distance(alpha, beta)
}

pub fn exact_diameter(g: &Graph, k: Color) -> Result<Distance, OracleError> {
    Ok(StateSpace::new(g, k, DEFAULT_STATE_CAP)?.exact_diameter())
}

/// Every independent set whose members have degree at most `d − 1`, in
/// increasing bitmask order (the empty set first).
pub fn enumerate_special_is(g: &Graph, d: usize) -> Result<Vec<Vec<Vertex>>, OracleError> {
    let n = g.n();
    if n > ENUMERATION_MAX_VERTICES {
        return Err(OracleError::TooManyVertices {
            n,
            max: ENUMERATION_MAX_VERTICES,
        });
    }
    let low: u32 = g
        .vertices()
        .filter(|&v| g.degree(v) < d)
        .fold(0, |acc, v| acc | 1 << v);
    let adjacency: Vec<u32> = g
        .vertices()
        .map(|v| g.neighbors(v).iter().fold(0u32, |acc, &w| acc | 1 << w))
        .collect();
    Ok((0u32..1 << n)
        .filter(|&mask| mask & !low == 0)
        .filter(|&mask| (0..n).all(|v| mask >> v & 1 == 0 || adjacency[v] & mask == 0))
        .map(|mask| (0..n).filter(|&v| mask >> v & 1 == 1).collect())
        .collect())
}
