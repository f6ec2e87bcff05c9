use crate::{Color, Vertex};

/// A set of colors, kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Palette(Vec<Color>);

impl Palette {
    /// `{1, …, k}`.
    pub fn range(k: Color) -> Self {
        Self((1..=k).collect())
    }

    pub fn from_colors(colors: impl IntoIterator<Item = Color>) -> Self {
        let mut colors: Vec<Color> = colors.into_iter().collect();
        colors.sort_unstable();
        colors.dedup();
        Self(colors)
    }

    pub fn contains(&self, c: Color) -> bool {
        self.0.binary_search(&c).is_ok()
    }

    pub fn without(&self, c: Color) -> Self {
        Self(self.0.iter().copied().filter(|&x| x != c).collect())
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn max(&self) -> Option<Color> {
        self.0.last().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = Color> + '_ {
        self.0.iter().copied()
    }
}

/// A subset of `0..n` as a membership table.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct VertexMask(Vec<bool>);

impl VertexMask {
    pub fn full(n: usize) -> Self {
        Self(vec![true; n])
    }

    pub fn none(n: usize) -> Self {
        Self(vec![false; n])
    }

    pub fn from_vertices(n: usize, vertices: &[Vertex]) -> Self {
        let mut mask = Self::none(n);
        for &v in vertices {
            mask.0[v] = true;
        }
        mask
    }

    pub fn universe(&self) -> usize {
        self.0.len()
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.0[v]
    }

    pub fn insert(&mut self, v: Vertex) {
        self.0[v] = true;
    }

    pub fn remove(&mut self, v: Vertex) {
        self.0[v] = false;
    }

    /// Members in ascending id order.
    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &b)| b)
            .map(|(v, _)| v)
    }

    pub fn to_vec(&self) -> Vec<Vertex> {
        self.iter().collect()
    }

    pub fn count(&self) -> usize {
        self.0.iter().filter(|&&b| b).count()
    }

    pub fn is_empty(&self) -> bool {
        !self.0.iter().any(|&b| b)
    }
}
