use crate::census::residue_components;
use crate::error::{GemError, Result};
use crate::graph::ColoredGraph;

/// The `d`-colored graph on the boundary vertices of a parent gem.
///
/// Vertex `i` of [`BoundaryGraph::graph`] is parent vertex
/// `parent_vertices()[i]`; parent boundary vertices are taken in increasing
/// order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundaryGraph {
    graph: Option<ColoredGraph>,
    parent_vertices: Vec<usize>,
    components: Vec<Vec<usize>>,
}

impl BoundaryGraph {
    /// Panics when the parent is closed; see [`BoundaryGraph::as_graph`].
    pub fn graph(&self) -> &ColoredGraph {
        self.graph.as_ref().expect("boundary graph of a closed gem")
    }

    pub fn as_graph(&self) -> Option<&ColoredGraph> {
        self.graph.as_ref()
    }

    pub fn is_empty(&self) -> bool {
        self.graph.is_none()
    }

    pub fn parent_vertices(&self) -> &[usize] {
        &self.parent_vertices
    }

    pub fn component_count(&self) -> usize {
        self.components.len()
    }

    /// Boundary-graph vertices of each component, ordered by smallest vertex.
    pub fn components(&self) -> &[Vec<usize>] {
        &self.components
    }

    /// Component `q` as a standalone closed gem, vertices renumbered in
    /// increasing order.
    pub fn component_graph(&self, q: usize) -> ColoredGraph {
        let g = self.graph();
        let members = &self.components[q];
        let mut local = vec![usize::MAX; g.vertex_count()];
        for (i, &v) in members.iter().enumerate() {
            local[v] = i;
        }
        let pairs: Vec<Vec<_>> = (0..=g.dim())
            .map(|c| {
                g.edges(c)
                    .filter(|&(a, _)| local[a] != usize::MAX)
                    .map(|(a, b)| (local[a], local[b]))
                    .collect()
            })
            .collect();
        ColoredGraph::from_pairs(g.dim(), members.len(), &pairs).expect("component of a valid gem")
    }
}

/// Endpoint of the alternating `(color, d)`-path leaving boundary vertex
/// `start` along `color`.
fn path_end(g: &ColoredGraph, color: usize, start: usize) -> Result<usize> {
    let d = g.dim();
    let broken = || GemError::BrokenBoundaryPath {
        color,
        last: d,
        vertex: start + 1,
    };
    let mut x = g.mate(color, start).ok_or_else(broken)?;
    for _ in 0..g.vertex_count() {
        match g.mate(d, x) {
            None => return if x == start { Err(broken()) } else { Ok(x) },
            Some(y) => x = g.mate(color, y).ok_or_else(broken)?,
        }
    }
    Err(broken())
}

pub fn boundary_graph(g: &ColoredGraph) -> Result<BoundaryGraph> {
    let parent_vertices = g.boundary_vertices();
    if parent_vertices.is_empty() {
        return Ok(BoundaryGraph {
            graph: None,
            parent_vertices,
            components: Vec::new(),
        });
    }
    if g.dim() < 2 {
        return Err(GemError::DimensionOutOfRange(g.dim() - 1));
    }
    let mut index = vec![usize::MAX; g.vertex_count()];
    for (i, &v) in parent_vertices.iter().enumerate() {
        index[v] = i;
    }
    let mut colors = Vec::with_capacity(g.dim());
    for c in 0..g.dim() {
        let mut pairs = Vec::new();
        for &v in &parent_vertices {
            let w = path_end(g, c, v)?;
            if v < w {
                pairs.push((index[v], index[w]));
            }
        }
        colors.push(pairs);
    }
    let graph = ColoredGraph::from_pairs(g.dim() - 1, parent_vertices.len(), &colors)?;
    let components = residue_components(&graph, graph.all_colors())?
        .into_iter()
        .map(|r| r.vertices)
        .collect();
    Ok(BoundaryGraph {
        graph: Some(graph),
        parent_vertices,
        components,
    })
}
