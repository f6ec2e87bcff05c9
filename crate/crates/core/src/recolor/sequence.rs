use std::fmt::Write as _;

use serde::Serialize;
use thiserror::Error;

use crate::coloring::Coloring;
use crate::graph::Graph;
use crate::{Color, Vertex};

/// Recolor `vertex` to `new_color`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RecoloringStep {
    pub vertex: Vertex,
    pub new_color: Color,
}

impl RecoloringStep {
    pub fn new(vertex: Vertex, new_color: Color) -> Self {
        Self { vertex, new_color }
    }
}

/// A walk in the reconfiguration graph: a start coloring and the steps taken
/// from it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RecoloringSequence {
    pub initial: Coloring,
    pub steps: Vec<RecoloringStep>,
}

impl RecoloringSequence {
    pub fn empty(initial: Coloring) -> Self {
        Self {
            initial,
            steps: Vec::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Applies every step without checking; see [`verify_sequence`] for the
    /// checked replay.
    pub fn final_colors(&self) -> Vec<Color> {
        let mut colors = self.initial.colors().to_vec();
        for step in &self.steps {
            colors[step.vertex] = step.new_color;
        }
        colors
    }

    /// One `vertex new_color` line per step.
    pub fn to_text(&self) -> String {
        steps_to_text(&self.steps)
    }
}

pub fn steps_to_text(steps: &[RecoloringStep]) -> String {
    let mut out = String::with_capacity(steps.len() * 6);
    for step in steps {
        let _ = writeln!(out, "{} {}", step.vertex, step.new_color);
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("sequence line {line}: {reason}")]
pub struct ParseSequenceError {
    pub line: usize,
    pub reason: String,
}

/// Reads the sequence format. Blank lines and `#` comments are skipped.
pub fn parse_steps(text: &str) -> Result<Vec<RecoloringStep>, ParseSequenceError> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
        .map(|(line, l)| {
            let mut tokens = l.split_whitespace();
            let parsed = match (tokens.next(), tokens.next(), tokens.next()) {
                (Some(v), Some(c), None) => v.parse().ok().zip(c.parse().ok()),
                _ => None,
            };
            parsed
                .map(|(vertex, new_color)| RecoloringStep { vertex, new_color })
                .ok_or_else(|| ParseSequenceError {
                    line,
                    reason: format!("expected \"vertex new_color\", found {l:?}"),
                })
        })
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum StepFault {
    #[error("vertex {vertex} is not in the graph")]
    VertexOutOfRange { vertex: Vertex },
    #[error("color {color} outside 1..={k}")]
    ColorOutOfRange { color: Color, k: Color },
    #[error("vertex {vertex} already has color {color}")]
    Unchanged { vertex: Vertex, color: Color },
    #[error("vertex {vertex} takes color {color}, held by neighbor {neighbor}")]
    Conflict {
        vertex: Vertex,
        neighbor: Vertex,
        color: Color,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("start coloring has {found} entries for {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("start coloring is not a proper {k}-coloring: vertex {vertex}")]
    ImproperStart { vertex: Vertex, k: Color },
    #[error("step {index}: {fault}")]
    Step { index: usize, fault: StepFault },
}

/// Replays `steps` from `alpha`, checking that each step changes exactly one
/// vertex to a different color in `1..=k` and keeps the coloring proper.
/// Returns the final coloring. Step indices in errors are 0-based.
pub fn verify_sequence(
    g: &Graph,
    alpha: &Coloring,
    steps: &[RecoloringStep],
    k: Color,
) -> Result<Coloring, VerifyError> {
    if alpha.len() != g.n() {
        return Err(VerifyError::LengthMismatch {
            expected: g.n(),
            found: alpha.len(),
        });
    }
    let mut colors = alpha.colors().to_vec();
    if let Some(vertex) = g.vertices().find(|&v| {
        colors[v] == 0 || colors[v] > k || g.neighbors(v).iter().any(|&w| colors[w] == colors[v])
    }) {
        return Err(VerifyError::ImproperStart { vertex, k });
    }
    for (index, step) in steps.iter().enumerate() {
        let fail = |fault| VerifyError::Step { index, fault };
        let (v, c) = (step.vertex, step.new_color);
        if v >= g.n() {
            return Err(fail(StepFault::VertexOutOfRange { vertex: v }));
        }
        if c == 0 || c > k {
            return Err(fail(StepFault::ColorOutOfRange { color: c, k }));
        }
        if colors[v] == c {
            return Err(fail(StepFault::Unchanged {
                vertex: v,
                color: c,
            }));
        }
        if let Some(&neighbor) = g.neighbors(v).iter().find(|&&w| colors[w] == c) {
            return Err(fail(StepFault::Conflict {
                vertex: v,
                neighbor,
                color: c,
            }));
        }
        colors[v] = c;
    }
    Ok(Coloring::new(colors, k).expect("colors checked in range"))
}

/// Per-vertex recoloring counts of a sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RecolorStats {
    pub total: usize,
    pub max_per_vertex: usize,
    pub per_vertex: Vec<usize>,
}

pub fn sequence_stats(seq: &RecoloringSequence) -> RecolorStats {
    stats_for(seq.initial.len(), &seq.steps)
}

pub(crate) fn stats_for(n: usize, steps: &[RecoloringStep]) -> RecolorStats {
    let mut per_vertex = vec![0; n];
    for step in steps {
        per_vertex[step.vertex] += 1;
    }
    RecolorStats {
        total: steps.len(),
        max_per_vertex: per_vertex.iter().copied().max().unwrap_or(0),
        per_vertex,
    }
}

/// The stats file: counts plus the partition shape they were produced with.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StatsReport {
    pub total: usize,
    pub max_per_vertex: usize,
    pub per_vertex: Vec<usize>,
    pub s: usize,
    pub t: usize,
    pub n: usize,
}

impl StatsReport {
    pub fn new(stats: &RecolorStats, s: usize, t: usize) -> Self {
        Self {
            total: stats.total,
            max_per_vertex: stats.max_per_vertex,
            per_vertex: stats.per_vertex.clone(),
            s,
            t,
            n: stats.per_vertex.len(),
        }
    }
}
