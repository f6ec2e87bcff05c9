//! Mutable recoloring state shared by the elimination and walk routines.
//!
//! All routines work on vertex masks over one global partition. The active
//! mask (the "ambient" vertices) always satisfies: every masked vertex holds a
//! color of the active palette, and every unmasked neighbor of a masked vertex
//! holds a color outside it. Recursive calls shrink the mask by removing the
//! vertices of one color and drop that color from the palette, which keeps the
//! invariant. Every recoloring is checked against the whole graph.

use super::sequence::RecoloringStep;
use super::sets::{Palette, VertexMask};
use super::RecolorError;
use crate::graph::Graph;
use crate::layering::EmbeddedOrdering;
use crate::{Color, Vertex};

/// Instrumentation gathered when a run is audited.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Audit {
    pub clear_calls: Vec<ClearCallRecord>,
    pub subclaims: Vec<SubclaimRecord>,
    /// Number of times both endpoints of a walk promoted the same set.
    pub shared_promotions: usize,
}

impl Audit {
    pub fn merge(&mut self, other: Audit) {
        self.clear_calls.extend(other.clear_calls);
        self.subclaims.extend(other.subclaims);
        self.shared_promotions += other.shared_promotions;
    }
}

/// One layer-clearing call: the color-`a` pass over `W_a` with prefix `U`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClearCallRecord {
    /// 0-based layer of `W_a`.
    pub layer: usize,
    pub target: Color,
    pub color: Color,
    /// Most later-position neighbors, within the active mask, of a vertex of
    /// `U ∪ W_a`.
    pub depth: usize,
    pub w_a: Vec<Vertex>,
    pub prefix_size: usize,
    /// Largest number of recolorings of a single `W_a` vertex in this call.
    pub max_w_a_recolors: usize,
    /// Recolorings of vertices outside `U ∪ W_a` in this call.
    pub outside_recolors: usize,
}

impl ClearCallRecord {
    pub fn holds(&self) -> bool {
        self.max_w_a_recolors <= 1 && self.outside_recolors == 0
    }
}

/// Depth drop observed right before a recursive call.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SubclaimRecord {
    /// Depth of the enclosing call.
    pub depth: usize,
    /// Most later-position neighbors of a remaining vertex inside the reduced
    /// mask.
    pub observed: usize,
    pub remaining: usize,
}

impl SubclaimRecord {
    pub fn holds(&self) -> bool {
        self.remaining == 0 || self.observed < self.depth
    }
}

pub(crate) struct Engine<'a> {
    g: &'a Graph,
    ord: &'a EmbeddedOrdering,
    layers: &'a [Vec<Vertex>],
    k: Color,
    colors: Vec<Color>,
    steps: Vec<RecoloringStep>,
    /// Color held before each step, for reversal.
    previous: Vec<Color>,
    audit: Option<Audit>,
}

impl<'a> Engine<'a> {
    pub(crate) fn new(
        g: &'a Graph,
        ord: &'a EmbeddedOrdering,
        layers: &'a [Vec<Vertex>],
        colors: Vec<Color>,
        k: Color,
        audit: bool,
    ) -> Self {
        Self {
            g,
            ord,
            layers,
            k,
            colors,
            steps: Vec::new(),
            previous: Vec::new(),
            audit: audit.then(Audit::default),
        }
    }

    pub(crate) fn steps(&self) -> &[RecoloringStep] {
        &self.steps
    }

    /// Steps that undo this engine's walk, last step first.
    pub(crate) fn reversed_steps(&self) -> impl Iterator<Item = RecoloringStep> + '_ {
        self.steps
            .iter()
            .zip(&self.previous)
            .rev()
            .map(|(step, &old)| RecoloringStep::new(step.vertex, old))
    }

    pub(crate) fn take_audit(&mut self) -> Audit {
        self.audit.take().unwrap_or_default()
    }

    fn recolor(&mut self, v: Vertex, c: Color) -> Result<(), RecolorError> {
        let old = self.colors[v];
        if c == 0 || c > self.k || c == old {
            return Err(RecolorError::Internal(format!(
                "invalid step: vertex {v} from {old} to {c} with k = {}",
                self.k
            )));
        }
        if let Some(&w) = self.g.neighbors(v).iter().find(|&&w| self.colors[w] == c) {
            return Err(RecolorError::Internal(format!(
                "step would make edge {v} {w} monochromatic in color {c}"
            )));
        }
        self.colors[v] = c;
        self.steps.push(RecoloringStep::new(v, c));
        self.previous.push(old);
        Ok(())
    }

    fn later_degree_within(&self, v: Vertex, mask: &VertexMask) -> usize {
        self.ord
            .later_neighbors(self.g, v)
            .filter(|&w| mask.contains(w))
            .count()
    }

    /// Most later-position neighbors inside `ambient` over `members`.
    pub(crate) fn depth_of(
        &self,
        members: impl IntoIterator<Item = Vertex>,
        ambient: &VertexMask,
    ) -> usize {
        members
            .into_iter()
            .map(|v| self.later_degree_within(v, ambient))
            .max()
            .unwrap_or(0)
    }

    /// Greedy pass from the last position to the first: each masked vertex
    /// takes `target` when no neighbor holds it. Returns the masked vertices
    /// holding `target` afterwards, ascending.
    pub(crate) fn promote(
        &mut self,
        mask: &VertexMask,
        target: Color,
    ) -> Result<Vec<Vertex>, RecolorError> {
        let ord = self.ord;
        for &v in ord.order().iter().rev() {
            if mask.contains(v)
                && self.colors[v] != target
                && self
                    .g
                    .neighbors(v)
                    .iter()
                    .all(|&w| self.colors[w] != target)
            {
                self.recolor(v, target)?;
            }
        }
        Ok(mask.iter().filter(|&v| self.colors[v] == target).collect())
    }

    /// Removes `target` from the masked vertices of the first `boundary`
    /// layers, recoloring nothing else and using only `palette` colors.
    pub(crate) fn eliminate(
        &mut self,
        ambient: &VertexMask,
        boundary: usize,
        target: Color,
        palette: &Palette,
    ) -> Result<(), RecolorError> {
        let layers = self.layers;
        let boundary = boundary.min(layers.len());
        let in_scope = || {
            layers[..boundary]
                .iter()
                .flatten()
                .copied()
                .filter(|&v| ambient.contains(v))
        };
        if !in_scope().any(|v| self.colors[v] == target) {
            return Ok(());
        }
        let depth = self.depth_of(in_scope(), ambient);
        if palette.len() < depth + 2 {
            return Err(RecolorError::PaletteTooSmall {
                palette: palette.len(),
                required: depth + 2,
            });
        }

        let mut prefix = VertexMask::none(self.g.n());
        for (h, layer) in layers[..boundary].iter().enumerate() {
            let w: Vec<Vertex> = layer
                .iter()
                .copied()
                .filter(|&v| ambient.contains(v) && self.colors[v] == target)
                .collect();
            if !w.is_empty() {
                for a in palette.iter().filter(|&a| a != target) {
                    let w_a: Vec<Vertex> = w
                        .iter()
                        .copied()
                        .filter(|&v| {
                            self.colors[v] == target
                                && self
                                    .ord
                                    .later_neighbors(self.g, v)
                                    .all(|x| self.colors[x] != a)
                        })
                        .collect();
                    if w_a.is_empty() {
                        continue;
                    }
                    let depth = self.depth_of(prefix.iter().chain(w_a.iter().copied()), ambient);
                    self.clear(ambient, h, &prefix, &w_a, target, a, palette, depth)?;
                }
                if let Some(v) = w.iter().find(|&&v| self.colors[v] == target) {
                    return Err(RecolorError::Internal(format!(
                        "vertex {v} of layer {h} still holds color {target} after all passes"
                    )));
                }
            }
            for &v in layer {
                if ambient.contains(v) {
                    prefix.insert(v);
                }
            }
        }
        Ok(())
    }

    /// Moves every `W_a` vertex to color `a` and leaves no `target` on
    /// `U ∪ W_a`, touching nothing else. `prefix` is `U`: the active vertices
    /// of layers before `layer`, none of which holds `target`.
    #[allow(clippy::too_many_arguments)]
    pub(crate) fn clear(
        &mut self,
        ambient: &VertexMask,
        layer: usize,
        prefix: &VertexMask,
        w_a: &[Vertex],
        target: Color,
        a: Color,
        palette: &Palette,
        depth: usize,
    ) -> Result<(), RecolorError> {
        if w_a.is_empty() {
            return Ok(());
        }
        let start = self.steps.len();
        let independent = depth == 0 || {
            let mut region = prefix.clone();
            w_a.iter().for_each(|&v| region.insert(v));
            self.depth_of(region.iter(), &region) == 0
        };
        if independent {
            for &v in w_a {
                self.recolor(v, a)?;
            }
        } else {
            self.purge(ambient, layer, prefix, target, a, palette, depth)?;
            for &v in w_a {
                self.recolor(v, a)?;
            }
            self.purge(ambient, layer, prefix, a, target, palette, depth)?;
        }

        if let Some(v) = prefix
            .iter()
            .chain(w_a.iter().copied())
            .find(|&v| self.colors[v] == target)
        {
            return Err(RecolorError::Internal(format!(
                "vertex {v} holds color {target} after clearing layer {layer}"
            )));
        }
        if self.audit.is_some() {
            let mut counts = vec![0usize; self.g.n()];
            for step in &self.steps[start..] {
                counts[step.vertex] += 1;
            }
            let max_w_a_recolors = w_a.iter().map(|&v| counts[v]).max().unwrap_or(0);
            let outside_recolors = self.steps[start..]
                .iter()
                .filter(|s| !prefix.contains(s.vertex) && !w_a.contains(&s.vertex))
                .count();
            let record = ClearCallRecord {
                layer,
                target,
                color: a,
                depth,
                w_a: w_a.to_vec(),
                prefix_size: prefix.count(),
                max_w_a_recolors,
                outside_recolors,
            };
            if let Some(audit) = &mut self.audit {
                audit.clear_calls.push(record);
            }
        }
        Ok(())
    }

    /// Greedily moves the prefix to `promote_to`, then eliminates `remove`
    /// from the prefix vertices that did not move, inside the mask without
    /// the `promote_to` vertices and with `promote_to` dropped from the
    /// palette.
    #[allow(clippy::too_many_arguments)]
    fn purge(
        &mut self,
        ambient: &VertexMask,
        layer: usize,
        prefix: &VertexMask,
        promote_to: Color,
        remove: Color,
        palette: &Palette,
        depth: usize,
    ) -> Result<(), RecolorError> {
        self.promote(prefix, promote_to)?;
        let mut reduced = ambient.clone();
        for v in ambient.iter() {
            if self.colors[v] == promote_to {
                reduced.remove(v);
            }
        }
        if self.audit.is_some() {
            let remaining: Vec<Vertex> = prefix.iter().filter(|&v| reduced.contains(v)).collect();
            let record = SubclaimRecord {
                depth,
                observed: self.depth_of(remaining.iter().copied(), &reduced),
                remaining: remaining.len(),
            };
            if let Some(audit) = &mut self.audit {
                audit.subclaims.push(record);
            }
        }
        self.eliminate(&reduced, layer, remove, &palette.without(promote_to))
    }
}

/// Recolors the `alpha` and `beta` engines toward a common coloring. The
/// walk from alpha to beta is then alpha's steps followed by beta's steps
/// reversed.
pub(crate) fn converge(
    alpha: &mut Engine<'_>,
    beta: &mut Engine<'_>,
    mut ambient: VertexMask,
    mut palette: Palette,
) -> Result<(), RecolorError> {
    let t = alpha.layers.len();
    loop {
        if ambient.is_empty() {
            break;
        }
        let depth = alpha.depth_of(ambient.iter(), &ambient);
        if depth == 0 {
            for v in ambient.iter() {
                let c = beta.colors[v];
                if alpha.colors[v] != c {
                    alpha.recolor(v, c)?;
                }
            }
            break;
        }
        if palette.len() < depth + 2 {
            return Err(RecolorError::PaletteTooSmall {
                palette: palette.len(),
                required: depth + 2,
            });
        }
        let top = palette.max().expect("palette has at least two colors");
        alpha.eliminate(&ambient, t, top, &palette)?;
        beta.eliminate(&ambient, t, top, &palette)?;
        let promoted = alpha.promote(&ambient, top)?;
        if beta.promote(&ambient, top)? != promoted {
            return Err(RecolorError::Internal(
                "the two endpoints promoted different sets".into(),
            ));
        }
        for &v in &promoted {
            ambient.remove(v);
        }
        if alpha.audit.is_some() {
            let record = SubclaimRecord {
                depth,
                observed: alpha.depth_of(ambient.iter(), &ambient),
                remaining: ambient.count(),
            };
            if let Some(audit) = &mut alpha.audit {
                audit.shared_promotions += 1;
                audit.subclaims.push(record);
            }
        }
        palette = palette.without(top);
    }
    if alpha.colors != beta.colors {
        return Err(RecolorError::Internal(
            "endpoints differ after the walk converged".into(),
        ));
    }
    Ok(())
}
