use std::fmt;

use thiserror::Error;

use crate::graph::Graph;
use crate::{Color, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColoringError {
    #[error("coloring has {found} entries but the graph has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("vertex {vertex} has color {color}, outside 1..={k}")]
    ColorOutOfRange {
        vertex: Vertex,
        color: Color,
        k: Color,
    },
    #[error("entry {index}: expected a positive integer color, found {token:?}")]
    Malformed { index: usize, token: String },
}

/// A total map from vertices to colors in `1..=k`. Properness is a property
/// checked against a graph, not an invariant of the type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Coloring {
    colors: Vec<Color>,
    k: Color,
}

impl Coloring {
    pub fn new(colors: Vec<Color>, k: Color) -> Result<Self, ColoringError> {
        if let Some((vertex, &color)) = colors.iter().enumerate().find(|(_, &c)| c == 0 || c > k) {
            return Err(ColoringError::ColorOutOfRange { vertex, color, k });
        }
        Ok(Self { colors, k })
    }

    pub fn k(&self) -> Color {
        self.k
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn color(&self, v: Vertex) -> Color {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn into_colors(self) -> Vec<Color> {
        self.colors
    }

    /// Same colors over a different palette size.
    pub fn with_k(&self, k: Color) -> Result<Self, ColoringError> {
        Self::new(self.colors.clone(), k)
    }

    /// The restriction to `subset`, in the order given.
    pub fn restrict(&self, subset: &[Vertex]) -> Vec<Color> {
        subset.iter().map(|&v| self.colors[v]).collect()
    }

    pub fn to_text(&self) -> String {
        let mut out = self.to_string();
        out.push('\n');
        out
    }
}

impl fmt::Display for Coloring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.colors.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

/// Reads whitespace-separated positive colors, vertex order `0..n`.
pub fn parse_colors(text: &str) -> Result<Vec<Color>, ColoringError> {
    text.split_whitespace()
        .enumerate()
        .map(|(index, token)| match token.parse::<Color>() {
            Ok(c) if c > 0 => Ok(c),
            _ => Err(ColoringError::Malformed {
                index,
                token: token.to_string(),
            }),
        })
        .collect()
}

/// True iff no edge of `g` is monochromatic under `c`.
pub fn is_proper(g: &Graph, c: &Coloring) -> Result<bool, ColoringError> {
    if c.len() != g.n() {
        return Err(ColoringError::LengthMismatch {
            expected: g.n(),
            found: c.len(),
        });
    }
    Ok(first_conflict(g, c.colors()).is_none())
}

/// The lexicographically first monochromatic edge, if any.
pub fn first_conflict(g: &Graph, colors: &[Color]) -> Option<(Vertex, Vertex)> {
    g.edges().find(|&(u, v)| colors[u] == colors[v])
}
