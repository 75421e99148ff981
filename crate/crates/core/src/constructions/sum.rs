use serde::Serialize;

use crate::census::residue_components;
use crate::colors::ColorSet;
use crate::error::{GemError, Result};
use crate::graph::ColoredGraph;
use crate::validate::{crystallization_of, Crystallization};

/// Which representation condition a connected sum enforces.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SumPolicy {
    /// Both summing vertices must be internal.
    #[default]
    InternalVertices,
    /// For every color `i`, the `i`-labelled vertex of at least one deleted
    /// simplex must be an interior vertex of its complex.
    PerColorCondition,
}

/// Whether the `i`-labelled vertex of the simplex of `v` lies on the
/// boundary of the complex, per color `i`. That vertex is the component of
/// `Γ_î` through `v`; it is a boundary vertex iff the component contains a
/// boundary vertex of the graph.
pub fn simplex_vertex_on_boundary(g: &ColoredGraph, v: usize) -> Vec<bool> {
    (0..=g.dim())
        .map(|i| {
            let rest = ColorSet::single(i).complement(g.dim());
            if rest.is_empty() {
                return g.is_boundary(v);
            }
            residue_components(g, rest)
                .expect("valid color set")
                .into_iter()
                .find(|r| r.vertices.contains(&v))
                .is_some_and(|r| r.vertices.iter().any(|&w| g.is_boundary(w)))
        })
        .collect()
}

/// The per-color condition under which `g1 #_{v1 v2} g2` represents the
/// connected sum of the two manifolds.
pub fn represents_connected_sum(g1: &ColoredGraph, v1: usize, g2: &ColoredGraph, v2: usize) -> bool {
    let a = simplex_vertex_on_boundary(g1, v1);
    let b = simplex_vertex_on_boundary(g2, v2);
    a.iter().zip(&b).all(|(&x, &y)| !(x && y))
}

fn check_vertex(g: &ColoredGraph, v: usize) -> Result<()> {
    if v >= g.vertex_count() {
        return Err(GemError::NoSuchVertex {
            vertex: v + 1,
            vertex_count: g.vertex_count(),
        });
    }
    Ok(())
}

/// Graph connected sum with the default [`SumPolicy`].
pub fn connected_sum(g1: &ColoredGraph, v1: usize, g2: &ColoredGraph, v2: usize) -> Result<ColoredGraph> {
    connected_sum_with(g1, v1, g2, v2, SumPolicy::default())
}

/// Deletes `v1` and `v2` and pastes their free edges color by color. The
/// result lists the vertices of `g1` other than `v1`, then those of `g2`
/// other than `v2`, each in their original order.
pub fn connected_sum_with(
    g1: &ColoredGraph,
    v1: usize,
    g2: &ColoredGraph,
    v2: usize,
    policy: SumPolicy,
) -> Result<ColoredGraph> {
    if g1.dim() != g2.dim() {
        return Err(GemError::DimensionMismatch {
            required: g1.dim(),
            found: g2.dim(),
        });
    }
    check_vertex(g1, v1)?;
    check_vertex(g2, v2)?;
    let d = g1.dim();
    for c in 0..=d {
        if g1.mate(c, v1).is_some() != g2.mate(c, v2).is_some() {
            return Err(GemError::DegreeMismatch {
                color: c,
                first: v1 + 1,
                second: v2 + 1,
            });
        }
    }
    match policy {
        SumPolicy::InternalVertices => {
            if g1.is_boundary(v1) || g2.is_boundary(v2) {
                return Err(GemError::SumPrecondition(format!(
                    "summing vertices must be internal (vertex {} of the first graph, vertex {} of the second)",
                    v1 + 1,
                    v2 + 1
                )));
            }
        }
        SumPolicy::PerColorCondition => {
            if !represents_connected_sum(g1, v1, g2, v2) {
                return Err(GemError::SumPrecondition(
                    "for some color both deleted simplices have that vertex on the boundary".into(),
                ));
            }
        }
    }
    let n1 = g1.vertex_count();
    let first = |x: usize| x - usize::from(x > v1);
    let second = |x: usize| n1 - 1 + x - usize::from(x > v2);
    let mut colors = Vec::with_capacity(d + 1);
    for c in 0..=d {
        let mut pairs: Vec<(usize, usize)> = g1
            .edges(c)
            .filter(|&(a, b)| a != v1 && b != v1)
            .map(|(a, b)| (first(a), first(b)))
            .chain(
                g2.edges(c)
                    .filter(|&(a, b)| a != v2 && b != v2)
                    .map(|(a, b)| (second(a), second(b))),
            )
            .collect();
        if let (Some(a), Some(b)) = (g1.mate(c, v1), g2.mate(c, v2)) {
            pairs.push((first(a), second(b)));
        }
        colors.push(pairs);
    }
    ColoredGraph::from_pairs(d, n1 + g2.vertex_count() - 2, &colors)
}

/// `g1 #_{u, s_1} S #_{s_2', v} g2` through the 10-vertex S^4
/// crystallization `S` with connector vertices `s_1, s_2` (`s_2'` is the
/// image of `s_2` in the first sum). Adds 6 vertices to `|g1| + |g2|`.
pub fn sphere_connector_sum(g1: &ColoredGraph, u: usize, g2: &ColoredGraph, v: usize) -> Result<ColoredGraph> {
    for g in [g1, g2] {
        if g.dim() != 4 {
            return Err(GemError::DimensionMismatch {
                required: 4,
                found: g.dim(),
            });
        }
        if crystallization_of(&crate::census::census(g)?) == Crystallization::No {
            return Err(GemError::SumPrecondition(
                "connector sums take crystallizations".into(),
            ));
        }
    }
    let (sphere, (s1, s2)) = crate::catalog::connector_sphere();
    let first = connected_sum(g1, u, &sphere, s1)?;
    let s2_image = g1.vertex_count() - 1 + s2 - usize::from(s2 > s1);
    connected_sum(&first, s2_image, g2, v)
}
