//! Recoloring walks built from a degree-depth partition.
//!
//! The building blocks, bottom up:
//!
//! * [`greedy_promote`]: one pass from the last ordering position to the
//!   first, moving each vertex to a target color whenever no neighbor holds it.
//! * [`clear_layer_color`]: for the first layer `V_h` that still holds the
//!   target, moves the vertices of `W_a` to color `a` while the prefix
//!   `U = V_1 ∪ … ∪ V_{h−1}` is purged of the target by two greedy passes and
//!   two recursive eliminations one level shallower.
//! * [`eliminate_color`]: repeats the above over every layer of a layered
//!   subgraph until the target color is gone from it.
//! * [`recolor_between`]: eliminates the top color on both endpoints, promotes
//!   the same independent set to it on both sides, and recurses on the rest
//!   with one color fewer. The walk is the first side's steps followed by the
//!   second side's steps reversed.
//!
//! Orderings are stored first layer first and every greedy pass runs from
//! the last position backwards, so "later position" throughout this module
//! means "processed earlier".

mod bound;
mod engine;
mod sequence;
mod sets;

use thiserror::Error;

pub use bound::{EliminationBound, TREE_LENGTH_CONSTANT};
pub use engine::{Audit, ClearCallRecord, SubclaimRecord};
pub use sequence::{
    parse_steps, sequence_stats, steps_to_text, verify_sequence, ParseSequenceError, RecolorStats,
    RecoloringSequence, RecoloringStep, StatsReport, StepFault, VerifyError,
};
pub use sets::{Palette, VertexMask};

use crate::coloring::{Coloring, ColoringError};
use crate::graph::Graph;
use crate::layering::{
    build_degree_partition, degree_partition_from_degeneracy, embedded_ordering,
    validate_partition, DegreePartition, EmbeddedOrdering, LayeredSubgraphRef, LayeringError,
    PartitionViolation, SpecialISParams,
};
use crate::{Color, Vertex};
use engine::{converge, Engine};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecolorError {
    #[error("{which} coloring is not usable: {reason}")]
    ImproperInput { which: String, reason: String },
    #[error("palette of {palette} colors is too small, need at least {required}")]
    PaletteTooSmall { palette: usize, required: usize },
    #[error("partition is not valid for this graph: {0}")]
    InvalidPartition(#[from] PartitionViolation),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
    #[error(transparent)]
    Layering(#[from] LayeringError),
    #[error("internal invariant broken: {0}")]
    Internal(String),
}

fn improper(which: &str, reason: impl ToString) -> RecolorError {
    RecolorError::ImproperInput {
        which: which.to_string(),
        reason: reason.to_string(),
    }
}

/// Checks that `c` is a proper coloring of `g` with colors in `1..=k`.
fn check_coloring(g: &Graph, c: &Coloring, k: Color, which: &str) -> Result<(), RecolorError> {
    if c.len() != g.n() {
        return Err(improper(
            which,
            ColoringError::LengthMismatch {
                expected: g.n(),
                found: c.len(),
            },
        ));
    }
    if let Some((vertex, &color)) = c
        .colors()
        .iter()
        .enumerate()
        .find(|(_, &x)| x == 0 || x > k)
    {
        return Err(improper(
            which,
            ColoringError::ColorOutOfRange { vertex, color, k },
        ));
    }
    if let Some((u, v)) = crate::coloring::first_conflict(g, c.colors()) {
        return Err(improper(which, format!("edge {u} {v} is monochromatic")));
    }
    Ok(())
}

/// Palette and mask preconditions shared by the public entry points: masked
/// vertices use palette colors, their unmasked neighbors do not.
fn check_mask(
    g: &Graph,
    c: &Coloring,
    palette: &Palette,
    mask: &VertexMask,
) -> Result<(), RecolorError> {
    if mask.universe() != g.n() {
        return Err(RecolorError::PreconditionViolated(format!(
            "mask covers {} vertices, graph has {}",
            mask.universe(),
            g.n()
        )));
    }
    if let Some(bad) = palette.iter().find(|&x| x == 0 || x > c.k()) {
        return Err(RecolorError::PreconditionViolated(format!(
            "palette color {bad} outside 1..={}",
            c.k()
        )));
    }
    for v in mask.iter() {
        if !palette.contains(c.color(v)) {
            return Err(RecolorError::PreconditionViolated(format!(
                "masked vertex {v} has color {} outside the palette",
                c.color(v)
            )));
        }
        if let Some(&w) = g
            .neighbors(v)
            .iter()
            .find(|&&w| !mask.contains(w) && palette.contains(c.color(w)))
        {
            return Err(RecolorError::PreconditionViolated(format!(
                "unmasked neighbor {w} of {v} uses palette color {}",
                c.color(w)
            )));
        }
    }
    Ok(())
}

/// Output of an instrumented run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Run {
    pub sequence: RecoloringSequence,
    /// Empty unless the [`Recolorer`] was built with [`Recolorer::audited`].
    pub audit: Audit,
}

/// A graph with a validated degree-depth partition and its embedded
/// ordering, ready to produce recoloring sequences.
#[derive(Debug, Clone)]
pub struct Recolorer<'g> {
    g: &'g Graph,
    partition: DegreePartition,
    ordering: EmbeddedOrdering,
    audit: bool,
}

impl<'g> Recolorer<'g> {
    pub fn new(g: &'g Graph, partition: &DegreePartition) -> Result<Self, RecolorError> {
        validate_partition(g, partition)?;
        Ok(Self {
            g,
            partition: partition.clone(),
            ordering: embedded_ordering(partition),
            audit: false,
        })
    }

    /// Record per-call instrumentation in [`Run::audit`].
    pub fn audited(mut self) -> Self {
        self.audit = true;
        self
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    pub fn partition(&self) -> &DegreePartition {
        &self.partition
    }

    pub fn ordering(&self) -> &EmbeddedOrdering {
        &self.ordering
    }

    fn engine(&self, c: &Coloring) -> Engine<'_> {
        Engine::new(
            self.g,
            &self.ordering,
            self.partition.layers(),
            c.colors().to_vec(),
            c.k(),
            self.audit,
        )
    }

    fn finish(initial: &Coloring, mut engine: Engine<'_>) -> Run {
        Run {
            sequence: RecoloringSequence {
                initial: initial.clone(),
                steps: engine.steps().to_vec(),
            },
            audit: engine.take_audit(),
        }
    }

    /// Removes `target` from the masked part of the layered subgraph `f`.
    /// Nothing outside `f ∩ mask` is recolored and only palette colors are
    /// introduced.
    pub fn eliminate_color(
        &self,
        c: &Coloring,
        f: LayeredSubgraphRef,
        target: Color,
        palette: &Palette,
        mask: &VertexMask,
    ) -> Result<Run, RecolorError> {
        check_coloring(self.g, c, c.k(), "input")?;
        if !palette.contains(target) {
            return Err(RecolorError::PreconditionViolated(format!(
                "target {target} is not in the palette"
            )));
        }
        if f.boundary() > self.partition.t() {
            return Err(RecolorError::PreconditionViolated(format!(
                "boundary {} exceeds the {} layers",
                f.boundary(),
                self.partition.t()
            )));
        }
        check_mask(self.g, c, palette, mask)?;
        let mut engine = self.engine(c);
        engine.eliminate(mask, f.boundary(), target, palette)?;
        Ok(Self::finish(c, engine))
    }

    /// One layer-clearing pass: `w_a` all hold `target` in a single layer
    /// `V_h`, none has a later-position neighbor colored `a`, and `u` is the
    /// set of masked vertices of `V_1..V_{h−1}` (none holding `target`).
    /// Ends with `w_a` colored `a`, no `target` on `u ∪ w_a`, and nothing else
    /// recolored. `depth` 0 requests the direct case, valid only when
    /// `u ∪ w_a` spans no edge.
    #[allow(clippy::too_many_arguments)]
    pub fn clear_layer_color(
        &self,
        c: &Coloring,
        target: Color,
        a: Color,
        palette: &Palette,
        mask: &VertexMask,
        u: &[Vertex],
        w_a: &[Vertex],
        depth: usize,
    ) -> Result<Run, RecolorError> {
        check_coloring(self.g, c, c.k(), "input")?;
        let pre = |msg: String| Err(RecolorError::PreconditionViolated(msg));
        if target == a || !palette.contains(target) || !palette.contains(a) {
            return pre(format!(
                "colors {target} and {a} must be distinct palette colors"
            ));
        }
        check_mask(self.g, c, palette, mask)?;
        if w_a.is_empty() {
            return Ok(Self::finish(c, self.engine(c)));
        }
        let layer = self.ordering.layer_of(w_a[0]);
        for &v in w_a {
            if !mask.contains(v) || self.ordering.layer_of(v) != layer || c.color(v) != target {
                return pre(format!(
                    "W_a vertex {v} must be masked, in layer {layer} and colored {target}"
                ));
            }
            if let Some(w) = self
                .ordering
                .later_neighbors(self.g, v)
                .find(|&w| c.color(w) == a)
            {
                return pre(format!("W_a vertex {v} has later neighbor {w} colored {a}"));
            }
        }
        let expected: Vec<Vertex> = mask
            .iter()
            .filter(|&v| self.ordering.layer_of(v) < layer)
            .collect();
        let mut given = u.to_vec();
        given.sort_unstable();
        given.dedup();
        if given != expected {
            return pre(format!(
                "U must be the masked vertices of layers before layer {layer}"
            ));
        }
        if let Some(&v) = given.iter().find(|&&v| c.color(v) == target) {
            return pre(format!("U vertex {v} already holds color {target}"));
        }
        let prefix = VertexMask::from_vertices(self.g.n(), &given);
        let mut engine = self.engine(c);
        if depth == 0 {
            let mut region = given.clone();
            region.extend_from_slice(w_a);
            if !self.g.is_independent(&region) {
                return pre("depth 0 requires U ∪ W_a to be independent".into());
            }
        } else {
            let actual = engine.depth_of(given.iter().chain(w_a).copied(), mask);
            if palette.len() < actual + 2 {
                return Err(RecolorError::PaletteTooSmall {
                    palette: palette.len(),
                    required: actual + 2,
                });
            }
        }
        engine.clear(mask, layer, &prefix, w_a, target, a, palette, depth)?;
        Ok(Self::finish(c, engine))
    }

    /// Drops colors `k, k − 1, …, target_size + 1` one at a time.
    pub fn reduce_palette(
        &self,
        c: &Coloring,
        k: Color,
        target_size: Color,
    ) -> Result<Run, RecolorError> {
        check_coloring(self.g, c, k, "input")?;
        let required = self.partition.s() + 2;
        if (target_size as usize) < required {
            return Err(RecolorError::PaletteTooSmall {
                palette: target_size as usize,
                required,
            });
        }
        let c = c.with_k(k).map_err(|e| improper("input", e))?;
        let mut engine = self.engine(&c);
        self.reduce_engine(&mut engine, k, target_size)?;
        Ok(Self::finish(&c, engine))
    }

    fn reduce_engine(
        &self,
        engine: &mut Engine<'_>,
        k: Color,
        target_size: Color,
    ) -> Result<(), RecolorError> {
        let all = VertexMask::full(self.g.n());
        let t = self.partition.t();
        for j in (target_size + 1..=k).rev() {
            engine.eliminate(&all, t, j, &Palette::range(j))?;
        }
        Ok(())
    }

    /// A walk from `alpha` to `beta` through proper `k`-colorings.
    pub fn recolor_between(
        &self,
        alpha: &Coloring,
        beta: &Coloring,
        k: Color,
    ) -> Result<Run, RecolorError> {
        check_coloring(self.g, alpha, k, "start")?;
        check_coloring(self.g, beta, k, "end")?;
        let s = self.partition.s();
        let base = s as Color + 2;
        if k < base {
            return Err(RecolorError::PaletteTooSmall {
                palette: k as usize,
                required: s + 2,
            });
        }
        let alpha = alpha.with_k(k).map_err(|e| improper("start", e))?;
        if alpha.colors() == beta.colors() {
            return Ok(Run {
                sequence: RecoloringSequence::empty(alpha),
                audit: Audit::default(),
            });
        }
        let beta = beta.with_k(k).map_err(|e| improper("end", e))?;
        let mut forward = self.engine(&alpha);
        let mut backward = self.engine(&beta);
        self.reduce_engine(&mut forward, k, base)?;
        self.reduce_engine(&mut backward, k, base)?;
        converge(
            &mut forward,
            &mut backward,
            VertexMask::full(self.g.n()),
            Palette::range(base),
        )?;

        let mut steps = forward.steps().to_vec();
        steps.extend(backward.reversed_steps());
        let mut audit = forward.take_audit();
        audit.merge(backward.take_audit());
        Ok(Run {
            sequence: RecoloringSequence {
                initial: alpha,
                steps,
            },
            audit,
        })
    }

    /// Greedy promotion of the masked vertices toward `target`; returns the
    /// steps and the masked vertices holding `target` afterwards.
    pub fn greedy_promote(
        &self,
        c: &Coloring,
        target: Color,
        mask: &VertexMask,
    ) -> Result<(RecoloringSequence, Vec<Vertex>), RecolorError> {
        greedy_promote(self.g, &self.ordering, c, target, mask)
    }
}

/// Greedy pass from the last position of `ord` to the first over the masked
/// vertices, recoloring each to `target` when no neighbor holds it. When no
/// masked vertex starts with `target`, the returned set is the greedy maximal
/// independent set of the masked subgraph in that order.
pub fn greedy_promote(
    g: &Graph,
    ord: &EmbeddedOrdering,
    c: &Coloring,
    target: Color,
    mask: &VertexMask,
) -> Result<(RecoloringSequence, Vec<Vertex>), RecolorError> {
    check_coloring(g, c, c.k(), "input")?;
    if target == 0 || target > c.k() {
        return Err(RecolorError::PreconditionViolated(format!(
            "target {target} outside 1..={}",
            c.k()
        )));
    }
    if ord.len() != g.n() || mask.universe() != g.n() {
        return Err(RecolorError::PreconditionViolated(
            "ordering and mask must cover the graph".into(),
        ));
    }
    let mut engine = Engine::new(g, ord, &[], c.colors().to_vec(), c.k(), false);
    let promoted = engine.promote(mask, target)?;
    let sequence = RecoloringSequence {
        initial: c.clone(),
        steps: engine.steps().to_vec(),
    };
    Ok((sequence, promoted))
}

pub fn eliminate_color(
    g: &Graph,
    p: &DegreePartition,
    f: LayeredSubgraphRef,
    c: &Coloring,
    target: Color,
    palette: &Palette,
    mask: &VertexMask,
) -> Result<RecoloringSequence, RecolorError> {
    Ok(Recolorer::new(g, p)?
        .eliminate_color(c, f, target, palette, mask)?
        .sequence)
}

#[allow(clippy::too_many_arguments)]
pub fn clear_layer_color(
    g: &Graph,
    p: &DegreePartition,
    c: &Coloring,
    target: Color,
    a: Color,
    palette: &Palette,
    mask: &VertexMask,
    u: &[Vertex],
    w_a: &[Vertex],
    depth: usize,
) -> Result<RecoloringSequence, RecolorError> {
    Ok(Recolorer::new(g, p)?
        .clear_layer_color(c, target, a, palette, mask, u, w_a, depth)?
        .sequence)
}

pub fn reduce_palette(
    g: &Graph,
    p: &DegreePartition,
    c: &Coloring,
    k: Color,
    target_size: Color,
) -> Result<RecoloringSequence, RecolorError> {
    Ok(Recolorer::new(g, p)?
        .reduce_palette(c, k, target_size)?
        .sequence)
}

pub fn recolor_between(
    g: &Graph,
    p: &DegreePartition,
    alpha: &Coloring,
    beta: &Coloring,
    k: Color,
) -> Result<RecoloringSequence, RecolorError> {
    Ok(Recolorer::new(g, p)?
        .recolor_between(alpha, beta, k)?
        .sequence)
}

/// A full run: the partition used, the walk, and its counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PipelineOutput {
    pub sequence: RecoloringSequence,
    pub stats: RecolorStats,
    pub partition: DegreePartition,
}

impl PipelineOutput {
    pub fn stats_report(&self) -> StatsReport {
        StatsReport::new(&self.stats, self.partition.s(), self.partition.t())
    }

    /// Per-vertex bound for this run, see [`EliminationBound::pipeline`].
    pub fn bound(&self, k: Color) -> u128 {
        EliminationBound::new(self.partition.t()).pipeline(self.partition.s(), k as usize)
    }
}

fn run_with_partition(
    g: &Graph,
    partition: DegreePartition,
    alpha: &Coloring,
    beta: &Coloring,
    k: Color,
) -> Result<PipelineOutput, RecolorError> {
    let sequence = recolor_between(g, &partition, alpha, beta, k)?;
    let stats = sequence_stats(&sequence);
    Ok(PipelineOutput {
        sequence,
        stats,
        partition,
    })
}

/// Walk between two `k`-colorings of a graph with maximum average degree at
/// most `d − epsilon`, `k >= d + 1`, over a peeled `(d − 1)`-degree partition.
pub fn recolor_theorem_pipeline(
    g: &Graph,
    params: &SpecialISParams,
    alpha: &Coloring,
    beta: &Coloring,
    k: Color,
) -> Result<PipelineOutput, RecolorError> {
    check_coloring(g, alpha, k, "start")?;
    check_coloring(g, beta, k, "end")?;
    if (k as usize) < params.d() + 1 {
        return Err(RecolorError::PaletteTooSmall {
            palette: k as usize,
            required: params.d() + 1,
        });
    }
    let partition = build_degree_partition(g, params)?;
    run_with_partition(g, partition, alpha, beta, k)
}

/// Walk between two `k`-colorings of a `s`-degenerate graph, `k >= s + 2`,
/// over singleton layers in peeling order.
pub fn recolor_degenerate_pipeline(
    g: &Graph,
    alpha: &Coloring,
    beta: &Coloring,
    k: Color,
) -> Result<PipelineOutput, RecolorError> {
    check_coloring(g, alpha, k, "start")?;
    check_coloring(g, beta, k, "end")?;
    let partition = degree_partition_from_degeneracy(g);
    if (k as usize) < partition.s() + 2 {
        return Err(RecolorError::PaletteTooSmall {
            palette: k as usize,
            required: partition.s() + 2,
        });
    }
    run_with_partition(g, partition, alpha, beta, k)
}
