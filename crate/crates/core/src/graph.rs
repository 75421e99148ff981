//! The colored multigraph model.
//!
//! A [`ColoredGraph`] of dimension `d` carries one partial matching per color
//! `0..=d`. Colors `0..d` are perfect matchings; color `d` may leave vertices
//! unmatched, and those vertices are the boundary vertices. Vertices are
//! dense indices `0..n`.

use serde::Serialize;

use crate::colors::ColorSet;
use crate::error::{GemError, Result};

/// Largest supported dimension. Color sets are bitmasks, and censuses visit
/// every subset of the `d + 1` colors.
pub const MAX_DIM: usize = 9;

const UNMATCHED: usize = usize::MAX;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ColoredGraph {
    dim: usize,
    mates: Vec<Vec<usize>>,
}

/// Counts of total, boundary and internal vertices (`2p`, `2p̄`, `2ṗ`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct VertexTally {
    pub total: usize,
    pub boundary: usize,
    pub internal: usize,
}

impl VertexTally {
    /// `p`, half the vertex count.
    pub fn half_total(&self) -> usize {
        self.total / 2
    }

    /// `p̄`.
    pub fn half_boundary(&self) -> usize {
        self.boundary / 2
    }

    /// `ṗ`.
    pub fn half_internal(&self) -> usize {
        self.internal / 2
    }

    pub fn is_even(&self) -> bool {
        self.boundary.is_multiple_of(2) && self.internal.is_multiple_of(2)
    }
}

impl ColoredGraph {
    /// Builds a graph from 0-based vertex pairs, one list per color.
    pub fn from_pairs(dim: usize, vertex_count: usize, colors: &[Vec<(usize, usize)>]) -> Result<Self> {
        if dim == 0 || dim > MAX_DIM {
            return Err(GemError::DimensionOutOfRange(dim));
        }
        if colors.len() != dim + 1 {
            return Err(GemError::ColorCount {
                expected: dim + 1,
                found: colors.len(),
            });
        }
        let mut mates = vec![vec![UNMATCHED; vertex_count]; dim + 1];
        for (color, pairs) in colors.iter().enumerate() {
            let row = &mut mates[color];
            for &(a, b) in pairs {
                for v in [a, b] {
                    if v >= vertex_count {
                        return Err(GemError::VertexOutOfRange {
                            color,
                            vertex: v + 1,
                            vertex_count,
                        });
                    }
                }
                if a == b {
                    return Err(GemError::Loop { color, vertex: a + 1 });
                }
                for v in [a, b] {
                    if row[v] != UNMATCHED {
                        return Err(GemError::DuplicatePair { color, vertex: v + 1 });
                    }
                }
                row[a] = b;
                row[b] = a;
            }
        }
        Self::from_mates(dim, mates)
    }

    fn from_mates(dim: usize, mates: Vec<Vec<usize>>) -> Result<Self> {
        let n = mates.first().map_or(0, Vec::len);
        for (color, row) in mates.iter().enumerate() {
            for (v, &w) in row.iter().enumerate() {
                if w == UNMATCHED {
                    if color < dim {
                        return Err(GemError::NotTotal { color, vertex: v + 1 });
                    }
                    continue;
                }
                if w >= n {
                    return Err(GemError::VertexOutOfRange {
                        color,
                        vertex: w + 1,
                        vertex_count: n,
                    });
                }
                if w == v {
                    return Err(GemError::Loop { color, vertex: v + 1 });
                }
                if row[w] != v {
                    return Err(GemError::DuplicatePair { color, vertex: w + 1 });
                }
            }
        }
        Ok(ColoredGraph { dim, mates })
    }

    /// Builds a graph from per-color mate tables (`None` = unmatched).
    pub fn from_mate_table(dim: usize, mates: Vec<Vec<Option<usize>>>) -> Result<Self> {
        if dim == 0 || dim > MAX_DIM {
            return Err(GemError::DimensionOutOfRange(dim));
        }
        if mates.len() != dim + 1 {
            return Err(GemError::ColorCount {
                expected: dim + 1,
                found: mates.len(),
            });
        }
        let n = mates[0].len();
        if mates.iter().any(|row| row.len() != n) {
            return Err(GemError::ColorCount {
                expected: n,
                found: mates.iter().map(Vec::len).find(|&l| l != n).unwrap_or(0),
            });
        }
        let raw = mates
            .into_iter()
            .map(|row| row.into_iter().map(|m| m.unwrap_or(UNMATCHED)).collect())
            .collect();
        Self::from_mates(dim, raw)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn vertex_count(&self) -> usize {
        self.mates[0].len()
    }

    /// The color set `{0..=d}`.
    pub fn all_colors(&self) -> ColorSet {
        ColorSet::full(self.dim)
    }

    /// Neighbor of `v` along color `color`, if any.
    #[inline]
    pub fn mate(&self, color: usize, v: usize) -> Option<usize> {
        let w = self.mates[color][v];
        (w != UNMATCHED).then_some(w)
    }

    #[inline]
    pub fn is_boundary(&self, v: usize) -> bool {
        self.mates[self.dim][v] == UNMATCHED
    }

    pub fn is_closed(&self) -> bool {
        (0..self.vertex_count()).all(|v| !self.is_boundary(v))
    }

    pub fn boundary_vertices(&self) -> Vec<usize> {
        (0..self.vertex_count()).filter(|&v| self.is_boundary(v)).collect()
    }

    /// Colors present at `v`.
    pub fn incidence(&self, v: usize) -> ColorSet {
        (0..=self.dim).filter(|&c| self.mate(c, v).is_some()).collect()
    }

    /// Edges of one color as `(u, v)` with `u < v`, sorted by `u`.
    pub fn edges(&self, color: usize) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.mates[color]
            .iter()
            .enumerate()
            .filter(|&(u, &w)| w != UNMATCHED && u < w)
            .map(|(u, &w)| (u, w))
    }

    /// Per-color pair lists, usable with [`ColoredGraph::from_pairs`].
    pub fn pairs(&self) -> Vec<Vec<(usize, usize)>> {
        (0..=self.dim).map(|c| self.edges(c).collect()).collect()
    }

    pub fn tally(&self) -> VertexTally {
        let boundary = self.boundary_vertices().len();
        VertexTally {
            total: self.vertex_count(),
            boundary,
            internal: self.vertex_count() - boundary,
        }
    }

    /// The same graph with color `d` partially deleted: every listed pair
    /// must currently be a `d`-edge.
    pub fn without_last_color_edges(&self, pairs: &[(usize, usize)]) -> Result<Self> {
        let mut all = self.pairs();
        let last = &mut all[self.dim];
        for &(a, b) in pairs {
            let key = (a.min(b), a.max(b));
            let pos = last.iter().position(|&e| e == key).ok_or(GemError::ConstructionCheck(format!(
                "{}-{} is not an edge of color {}",
                a + 1,
                b + 1,
                self.dim
            )))?;
            last.remove(pos);
        }
        ColoredGraph::from_pairs(self.dim, self.vertex_count(), &all)
    }

    /// Relabels vertices: vertex `v` becomes `order.iter().position(v)`.
    /// `order` must be a permutation of the vertices.
    pub fn permute_vertices(&self, order: &[usize]) -> Result<Self> {
        let n = self.vertex_count();
        let mut position = vec![UNMATCHED; n];
        for (new, &old) in order.iter().enumerate() {
            if old >= n || position[old] != UNMATCHED {
                return Err(GemError::ConstructionCheck("vertex order is not a permutation".into()));
            }
            position[old] = new;
        }
        if order.len() != n {
            return Err(GemError::ConstructionCheck("vertex order is not a permutation".into()));
        }
        let pairs: Vec<Vec<_>> = self
            .pairs()
            .into_iter()
            .map(|ps| ps.into_iter().map(|(a, b)| (position[a], position[b])).collect())
            .collect();
        ColoredGraph::from_pairs(self.dim, n, &pairs)
    }
}
