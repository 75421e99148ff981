use serde::Serialize;

use crate::boundary::BoundaryGraph;
use crate::census::{census, ResidueCensus};
use crate::error::{GemError, Result};
use crate::faces::FaceVector;
use crate::graph::ColoredGraph;
use crate::validate::crystallization_of;

/// Manifold facts used by the bounds. `h` and `chi` are normally derived
/// from the graph; the rest are supplied by the caller.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ManifoldMeta {
    pub h: usize,
    pub chi: i64,
    /// Rank of the fundamental group, `m`.
    pub rank: Option<usize>,
    /// Regular genus of the boundary, `G(∂M)`.
    pub boundary_genus: Option<usize>,
    /// Rank of the fundamental group of the double, `m̄`.
    pub double_rank: Option<usize>,
    /// Gem-complexity of the boundary, `k(∂M)`.
    pub boundary_complexity: Option<usize>,
}

impl ManifoldMeta {
    pub fn new(h: usize, chi: i64) -> Self {
        ManifoldMeta {
            h,
            chi,
            ..Default::default()
        }
    }

    pub fn with_rank(mut self, rank: usize) -> Self {
        self.rank = Some(rank);
        self
    }

    pub fn with_boundary_genus(mut self, genus: usize) -> Self {
        self.boundary_genus = Some(genus);
        self
    }

    pub fn with_double_rank(mut self, rank: usize) -> Self {
        self.double_rank = Some(rank);
        self
    }

    pub fn with_boundary_complexity(mut self, k: usize) -> Self {
        self.boundary_complexity = Some(k);
        self
    }

    /// `h` from the boundary component count and `χ` from the face vector.
    pub fn derive(g: &ColoredGraph) -> Result<Self> {
        let c = census(g)?;
        Ok(Self::new(c.boundary_components(), FaceVector::from_census(&c).chi()))
    }

    fn with_boundary(&self) -> Result<(i64, i64, i64)> {
        if self.h == 0 {
            return Err(GemError::NoBoundary);
        }
        let m = self.rank.ok_or(GemError::MissingMeta("rank"))? as i64;
        Ok((self.chi, m, self.h as i64))
    }
}

/// Gem-complexity lower bounds `3χ + 7m + 7h - 10` and, given `k(∂M)`,
/// `k(∂M) + 3χ + 4m + 6h - 9`.
pub fn complexity_lower_bounds(meta: &ManifoldMeta) -> Result<(i64, Option<i64>)> {
    let (chi, m, h) = meta.with_boundary()?;
    let first = 3 * chi + 7 * m + 7 * h - 10;
    let second = meta
        .boundary_complexity
        .map(|k| k as i64 + 3 * chi + 4 * m + 6 * h - 9);
    Ok((first, second))
}

/// Lower bounds on `2p`, `2p + 2p̄` and `2p - 2p̄`.
pub fn vertex_lower_bounds(meta: &ManifoldMeta) -> Result<(i64, i64, i64)> {
    let (chi, m, h) = meta.with_boundary()?;
    Ok((
        6 * chi + 14 * m + 14 * h - 18,
        6 * chi + 20 * m + 16 * h - 18,
        6 * chi + 8 * m + 12 * h - 18,
    ))
}

/// Regular-genus lower bounds: `2χ + 2m̄ - 2` given `m̄`, `2χ + 3m + 2h - 4`,
/// and `G(∂M) + 2χ + 2m + 2h - 4` given `G(∂M)`.
pub fn genus_lower_bounds(meta: &ManifoldMeta) -> Result<(Option<i64>, i64, Option<i64>)> {
    let (chi, m, h) = meta.with_boundary()?;
    Ok((
        meta.double_rank.map(|mb| 2 * chi + 2 * mb as i64 - 2),
        2 * chi + 3 * m + 2 * h - 4,
        meta.boundary_genus.map(|gb| gb as i64 + 2 * chi + 2 * m + 2 * h - 4),
    ))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct BoundSet {
    pub kb1: i64,
    pub kb2: Option<i64>,
    pub gb1: Option<i64>,
    pub gb2: i64,
    pub gb3: Option<i64>,
    pub vb1: i64,
    pub vb2: i64,
    pub vb3: i64,
}

impl BoundSet {
    pub fn compute(meta: &ManifoldMeta) -> Result<Self> {
        let (kb1, kb2) = complexity_lower_bounds(meta)?;
        let (gb1, gb2, gb3) = genus_lower_bounds(meta)?;
        let (vb1, vb2, vb3) = vertex_lower_bounds(meta)?;
        Ok(BoundSet {
            kb1,
            kb2,
            gb1,
            gb2,
            gb3,
            vb1,
            vb2,
            vb3,
        })
    }
}

/// `min_{a,b} g_{Δ∖{a,b}} - (g_{Δ∖{a}} + g_{Δ∖{b}} - 1)`, an upper bound for
/// the rank of the fundamental group.
pub fn rank_upper_bound_from(census: &ResidueCensus) -> i64 {
    let d = census.dim();
    let mut best = i64::MAX;
    for a in 0..=d {
        for b in a + 1..=d {
            let pair = census.g_hat([a, b]) as i64;
            let singles = census.g_hat([a]) as i64 + census.g_hat([b]) as i64 - 1;
            best = best.min(pair - singles);
        }
    }
    best
}

pub fn rank_upper_bound(g: &ColoredGraph) -> i64 {
    rank_upper_bound_from(&ResidueCensus::local(g))
}

/// `min_{i<j} ∂g_{ij} - h` over the boundary colors, an upper bound for the
/// boundary genus.
pub fn boundary_genus_cap(bg: &BoundaryGraph) -> Result<i64> {
    let graph = bg.as_graph().ok_or(GemError::ClosedInput)?;
    let c = ResidueCensus::local(graph);
    let h = bg.component_count() as i64;
    let colors = graph.dim() + 1;
    let mut best = i64::MAX;
    for i in 0..colors {
        for j in i + 1..colors {
            best = best.min(c.g([i, j]) as i64 - h);
        }
    }
    Ok(best)
}

/// `p - 1` for a crystallization with `2p` vertices.
pub fn gem_complexity(g: &ColoredGraph) -> Result<usize> {
    let c = census(g)?;
    if !crystallization_of(&c).holds() {
        return Err(GemError::NotCrystallization(
            "crystallization counts do not hold".into(),
        ));
    }
    Ok(g.vertex_count() / 2 - 1)
}
