/// Explicit per-vertex recoloring bounds for the engine in this crate.
///
/// The constants come from counting what the engine does, not from any
/// asymptotic statement:
///
/// * `elim(0, p) = 1`: with no later neighbors, a vertex is only ever
///   recolored once, as a member of the layer being cleared.
/// * `elim(σ, p) = (t − 1)(p − 1) · 2 · (1 + elim(σ − 1, p − 1)) + 1`: a vertex
///   is cleared once in its own layer; in each of the at most `t − 1` later
///   layer rounds it lies in the prefix `U`, where each of the `p − 1` color
///   passes runs two purge phases of one greedy visit plus one recursive
///   elimination with a palette one smaller and depth one lower.
/// * `walk(0, p) = 1`: an independent remainder is recolored directly.
/// * `walk(σ, p) = 2 (elim(σ, p) + 1) + walk(σ − 1, p − 1)`: both endpoints
///   eliminate their top color and run one greedy promotion before the
///   remainder recurses.
///
/// `σ` is the degree depth, `p` the palette size and `t` the layer count.
/// Arithmetic saturates at `u128::MAX`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EliminationBound {
    t: usize,
}

impl EliminationBound {
    pub fn new(t: usize) -> Self {
        Self { t }
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Recolorings of one vertex while a color is eliminated from a layered
    /// subgraph of depth `depth` over a palette of `palette` colors.
    pub fn elim(&self, depth: usize, palette: usize) -> u128 {
        if depth == 0 {
            return 1;
        }
        let rounds = self.t.saturating_sub(1) as u128;
        let colors = palette.saturating_sub(1) as u128;
        let inner = self.elim(depth - 1, palette.saturating_sub(1));
        rounds
            .saturating_mul(colors)
            .saturating_mul(2)
            .saturating_mul(inner.saturating_add(1))
            .saturating_add(1)
    }

    /// Recolorings of one vertex along a walk between two colorings over a
    /// palette of `palette` colors, counting both halves of the walk.
    pub fn walk(&self, depth: usize, palette: usize) -> u128 {
        if depth == 0 {
            return 1;
        }
        self.elim(depth, palette)
            .saturating_add(1)
            .saturating_mul(2)
            .saturating_add(self.walk(depth - 1, palette.saturating_sub(1)))
    }

    /// Bound for a full run with `k` colors on an `s`-degree partition: both
    /// sides first drop colors `k, k − 1, …, s + 3`, then walk over `s + 2`
    /// colors.
    pub fn pipeline(&self, s: usize, k: usize) -> u128 {
        let reduction = (s + 3..=k)
            .map(|palette| self.elim(s, palette).saturating_mul(2))
            .fold(0u128, u128::saturating_add);
        reduction.saturating_add(self.walk(s, s + 2))
    }
}

/// For forests with `s = 1` and three colors the walk bound is `16t − 11`
/// per vertex, so a whole sequence has at most `TREE_LENGTH_CONSTANT · n · t`
/// steps.
pub const TREE_LENGTH_CONSTANT: usize = 16;
