use serde::Serialize;

use crate::error::{GemError, Result};
use crate::graph::ColoredGraph;

/// For each vertex of the double, the copy (1 or 2) and the original
/// vertex. Vertex `v` of copy 1 is `v`; of copy 2, `n + v`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct DoubleProvenance {
    pub origin: Vec<(u8, usize)>,
}

/// Two copies of `g` with a last-color edge joining the two copies of each
/// boundary vertex. The result is closed.
pub fn double(g: &ColoredGraph) -> Result<(ColoredGraph, DoubleProvenance)> {
    if g.is_closed() {
        return Err(GemError::ClosedInput);
    }
    let n = g.vertex_count();
    let d = g.dim();
    let mut colors: Vec<Vec<(usize, usize)>> = (0..=d)
        .map(|c| g.edges(c).flat_map(|(a, b)| [(a, b), (n + a, n + b)]).collect())
        .collect();
    colors[d].extend(g.boundary_vertices().into_iter().map(|v| (v, n + v)));
    let doubled = ColoredGraph::from_pairs(d, 2 * n, &colors)?;
    let origin = (0..n).map(|v| (1, v)).chain((0..n).map(|v| (2, v))).collect();
    Ok((doubled, DoubleProvenance { origin }))
}
