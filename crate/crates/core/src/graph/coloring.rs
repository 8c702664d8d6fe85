use serde::Serialize;
use thiserror::Error;

use super::MixedGraph;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ColoringError {
    #[error("coloring covers {got} vertices but the graph has {expected}")]
    IncompleteColoring { expected: usize, got: usize },
    #[error("vertex {} has no color", .0 + 1)]
    Uncolored(usize),
    #[error("vertex {} is colored more than once", .0 + 1)]
    Recolored(usize),
    #[error("vertex {} has color 0; colors start at 1", .0 + 1)]
    ZeroColor(usize),
}

/// A total map from vertices to positive colors.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Coloring {
    colors: Vec<u32>,
}

impl Coloring {
    pub fn new(colors: Vec<u32>) -> Result<Self, ColoringError> {
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(ColoringError::ZeroColor(v));
        }
        Ok(Coloring { colors })
    }

    /// Builds a coloring of `n` vertices from `(vertex, color)` pairs. Every
    /// vertex must appear exactly once.
    pub fn from_assignments(
        n: usize,
        pairs: impl IntoIterator<Item = (usize, u32)>,
    ) -> Result<Self, ColoringError> {
        let mut colors = vec![0u32; n];
        for (v, c) in pairs {
            if v >= n {
                return Err(ColoringError::IncompleteColoring {
                    expected: n,
                    got: v + 1,
                });
            }
            if c == 0 {
                return Err(ColoringError::ZeroColor(v));
            }
            if colors[v] != 0 {
                return Err(ColoringError::Recolored(v));
            }
            colors[v] = c;
        }
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(ColoringError::Uncolored(v));
        }
        Ok(Coloring { colors })
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn colors(&self) -> &[u32] {
        &self.colors
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    /// Largest color in use; a k-coloring has `max_color() <= k`.
    pub fn max_color(&self) -> u32 {
        self.colors.iter().copied().max().unwrap_or(0)
    }

    /// Number of distinct colors in use.
    pub fn distinct_colors(&self) -> usize {
        let mut c = self.colors.clone();
        c.sort_unstable();
        c.dedup();
        c.len()
    }
}

/// The first violated relation found by [`check_proper`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Violation {
    /// Edge `{u, v}` (u < v) with equal colors.
    Edge(usize, usize),
    /// Arc `(u, v)` with `c(u) >= c(v)`.
    Arc(usize, usize),
}

impl Violation {
    fn key(&self) -> (usize, usize) {
        match *self {
            Violation::Edge(u, v) | Violation::Arc(u, v) => (u, v),
        }
    }
}

/// Checks `c(u) != c(v)` on every edge and `c(u) < c(v)` on every arc.
///
/// Returns `Ok(None)` for a proper coloring and `Ok(Some(v))` with the
/// lexicographically smallest violated relation otherwise.
pub fn check_proper(g: &MixedGraph, c: &Coloring) -> Result<Option<Violation>, ColoringError> {
    if c.len() != g.n() {
        return Err(ColoringError::IncompleteColoring {
            expected: g.n(),
            got: c.len(),
        });
    }
    let edge = g
        .edges()
        .iter()
        .find(|&&(u, v)| c.color(u) == c.color(v))
        .map(|&(u, v)| Violation::Edge(u, v));
    let arc = g
        .arcs()
        .iter()
        .find(|&&(u, v)| c.color(u) >= c.color(v))
        .map(|&(u, v)| Violation::Arc(u, v));
    Ok(match (edge, arc) {
        (Some(e), Some(a)) => Some(if e.key() <= a.key() { e } else { a }),
        (e, a) => e.or(a),
    })
}
