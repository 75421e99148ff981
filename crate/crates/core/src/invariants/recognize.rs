use itertools::Itertools;
use serde::Serialize;

use super::bounds::{complexity_lower_bounds, gem_complexity, genus_lower_bounds, vertex_lower_bounds, ManifoldMeta};
use super::genus::regular_genus;
use super::serialize_ratio;
use crate::census::census;
use crate::error::{GemError, Result};
use crate::graph::ColoredGraph;
use crate::validate::{crystallization_of, Crystallization};
use crate::Ratio;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Relabeling {
    /// `pi[i]` is the input color playing the role of color `i`.
    pub pi: [usize; 4],
    /// `g_{π0π1π2} = g_{π1π2π3} = m + h` and `ġ_{π2π3 4} = ġ_{π0π3 4} = h - 1`.
    pub common: bool,
    /// `common` and `g_{π0π1 4} = G(∂M) + 2h - 1`; `None` without `G(∂M)`.
    pub type_i: Option<bool>,
    /// `common` and `g_{π0π1 4} = m + 2h - 1`.
    pub type_ii: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct WeakSemiSimpleReport {
    pub relabelings: Vec<Relabeling>,
    /// `None` when `G(∂M)` was not supplied.
    pub type_i: Option<bool>,
    pub type_ii: bool,
    pub first_type_i: Option<[usize; 4]>,
    pub first_type_ii: Option<[usize; 4]>,
}

/// Checks the weak semi-simple equalities under every relabeling of colors
/// `0..=3`, color 4 fixed.
pub fn weak_semi_simple(g: &ColoredGraph, meta: &ManifoldMeta) -> Result<WeakSemiSimpleReport> {
    if g.dim() != 4 {
        return Err(GemError::DimensionMismatch {
            required: 4,
            found: g.dim(),
        });
    }
    let c = census(g)?;
    let h = match crystallization_of(&c) {
        Crystallization::WithBoundary { h } => h,
        Crystallization::Closed => return Err(GemError::NoBoundary),
        Crystallization::No => {
            return Err(GemError::NotCrystallization("crystallization counts do not hold".into()))
        }
    };
    let m = meta.rank.ok_or(GemError::MissingMeta("rank"))?;
    let relabelings: Vec<Relabeling> = (0..4)
        .permutations(4)
        .map(|p| {
            let pi = [p[0], p[1], p[2], p[3]];
            let common = c.g([pi[0], pi[1], pi[2]]) == m + h
                && c.g([pi[1], pi[2], pi[3]]) == m + h
                && c.regular([pi[2], pi[3], 4]) + 1 == h
                && c.regular([pi[0], pi[3], 4]) + 1 == h;
            let g014 = c.g([pi[0], pi[1], 4]);
            Relabeling {
                pi,
                common,
                type_i: meta.boundary_genus.map(|gb| common && g014 == gb + 2 * h - 1),
                type_ii: common && g014 == m + 2 * h - 1,
            }
        })
        .collect();
    let first_type_i = relabelings.iter().find(|r| r.type_i == Some(true)).map(|r| r.pi);
    let first_type_ii = relabelings.iter().find(|r| r.type_ii).map(|r| r.pi);
    Ok(WeakSemiSimpleReport {
        type_i: meta.boundary_genus.map(|_| first_type_i.is_some()),
        type_ii: first_type_ii.is_some(),
        first_type_i,
        first_type_ii,
        relabelings,
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalityReport {
    pub vertex_count: usize,
    pub gem_complexity: usize,
    pub complexity_bounds: (i64, Option<i64>),
    pub vertex_bounds: (i64, i64, i64),
    pub boundary_vertices: usize,
    /// `k` equals one of the complexity bounds.
    pub certified_minimal: bool,
    #[serde(serialize_with = "serialize_ratio")]
    pub regular_genus: Ratio,
    pub genus_bounds: (Option<i64>, i64, Option<i64>),
    /// `ρ(Γ)` equals one of the genus bounds, so it is the regular genus of
    /// the manifold.
    pub genus_attained: bool,
}

pub fn certify_minimal(g: &ColoredGraph, meta: &ManifoldMeta) -> Result<MinimalityReport> {
    let k = gem_complexity(g)?;
    let kb = complexity_lower_bounds(meta)?;
    let vb = vertex_lower_bounds(meta)?;
    let gb = genus_lower_bounds(meta)?;
    let rho = regular_genus(g)?.rho;
    let k_i = k as i64;
    let genus_hits = [gb.0, Some(gb.1), gb.2]
        .into_iter()
        .flatten()
        .any(|b| Ratio::from_integer(b) == rho);
    Ok(MinimalityReport {
        vertex_count: g.vertex_count(),
        gem_complexity: k,
        complexity_bounds: kb,
        vertex_bounds: vb,
        boundary_vertices: g.tally().boundary,
        certified_minimal: kb.0 == k_i || kb.1 == Some(k_i) || vb.0 == g.vertex_count() as i64,
        regular_genus: rho,
        genus_bounds: gb,
        genus_attained: genus_hits,
    })
}
