use petgraph::unionfind::UnionFind;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::boundary::{boundary_graph, BoundaryGraph};
use crate::colors::ColorSet;
use crate::error::{GemError, Result};
use crate::graph::{ColoredGraph, VertexTally};

/// One connected component of the residue `Γ_B`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Residue {
    pub vertices: Vec<usize>,
    /// Every vertex meets an edge of every color of `B`.
    pub regular: bool,
}

fn check_colors(g: &ColoredGraph, colors: ColorSet) -> Result<()> {
    if colors.is_empty() {
        return Err(GemError::EmptyColorSet);
    }
    if let Some(c) = colors.max().filter(|&c| c > g.dim()) {
        return Err(GemError::ColorOutOfRange { color: c, dim: g.dim() });
    }
    Ok(())
}

fn union_residue(g: &ColoredGraph, colors: ColorSet) -> UnionFind<usize> {
    let mut uf = UnionFind::new(g.vertex_count());
    for c in colors.iter() {
        for (a, b) in g.edges(c) {
            uf.union(a, b);
        }
    }
    uf
}

/// Components of `Γ_B`, ordered by their smallest vertex.
pub fn residue_components(g: &ColoredGraph, colors: ColorSet) -> Result<Vec<Residue>> {
    check_colors(g, colors)?;
    let labels = union_residue(g, colors).into_labeling();
    let mut slot = vec![usize::MAX; g.vertex_count()];
    let mut out: Vec<Residue> = Vec::new();
    for (v, &root) in labels.iter().enumerate() {
        if slot[root] == usize::MAX {
            slot[root] = out.len();
            out.push(Residue {
                vertices: Vec::new(),
                regular: true,
            });
        }
        let r = &mut out[slot[root]];
        r.vertices.push(v);
        r.regular &= colors.is_subset(g.incidence(v));
    }
    Ok(out)
}

/// Component counts `g_B` and regular-component counts `ġ_B` for every
/// subset of the colors, with the boundary census when the graph has
/// boundary vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ResidueCensus {
    dim: usize,
    components: Vec<usize>,
    regular: Vec<usize>,
    tally: VertexTally,
    boundary: Option<Box<BoundaryCensus>>,
}

/// Census of the boundary graph as a whole and of each of its components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundaryCensus {
    pub whole: ResidueCensus,
    pub per_component: Vec<ResidueCensus>,
}

impl ResidueCensus {
    /// Census of the graph itself, without looking at the boundary.
    pub fn local(g: &ColoredGraph) -> Self {
        let size = 1usize << (g.dim() + 1);
        let mut components = vec![0; size];
        let mut regular = vec![0; size];
        let incidence: Vec<ColorSet> = (0..g.vertex_count()).map(|v| g.incidence(v)).collect();
        components[0] = g.vertex_count();
        regular[0] = g.vertex_count();
        for bits in 1..size {
            let colors = ColorSet::from_bits(bits as u16);
            let mut uf = union_residue(g, colors);
            let mut is_root_regular = vec![true; g.vertex_count()];
            for (v, inc) in incidence.iter().enumerate() {
                if !colors.is_subset(*inc) {
                    let root = uf.find_mut(v);
                    is_root_regular[root] = false;
                }
            }
            for (v, &root_regular) in is_root_regular.iter().enumerate() {
                if uf.find_mut(v) == v {
                    components[bits] += 1;
                    regular[bits] += usize::from(root_regular);
                }
            }
        }
        ResidueCensus {
            dim: g.dim(),
            components,
            regular,
            tally: g.tally(),
            boundary: None,
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn tally(&self) -> VertexTally {
        self.tally
    }

    /// `g_B`. `g_∅` is the vertex count.
    pub fn g(&self, colors: impl Into<ColorSet>) -> usize {
        self.components[self.index(colors.into())]
    }

    /// `ġ_B`.
    pub fn regular(&self, colors: impl Into<ColorSet>) -> usize {
        self.regular[self.index(colors.into())]
    }

    /// `g` of the complement of `colors` in `{0..=d}`.
    pub fn g_hat(&self, colors: impl Into<ColorSet>) -> usize {
        self.g(colors.into().complement(self.dim))
    }

    pub fn boundary(&self) -> Option<&BoundaryCensus> {
        self.boundary.as_deref()
    }

    /// `∂g_B`, zero when the graph is closed.
    pub fn boundary_g(&self, colors: impl Into<ColorSet>) -> usize {
        self.boundary.as_ref().map_or(0, |b| b.whole.g(colors))
    }

    /// Number of boundary components.
    pub fn boundary_components(&self) -> usize {
        self.boundary.as_ref().map_or(0, |b| b.per_component.len())
    }

    fn index(&self, colors: ColorSet) -> usize {
        let bits = colors.bits() as usize;
        assert!(
            colors.is_subset(ColorSet::full(self.dim)),
            "color set {colors:?} outside 0..={}",
            self.dim
        );
        bits
    }
}

/// Full census: residues of the graph plus the census of its boundary graph
/// and of every boundary component.
pub fn census(g: &ColoredGraph) -> Result<ResidueCensus> {
    let mut c = ResidueCensus::local(g);
    if !g.is_closed() {
        c.boundary = Some(Box::new(BoundaryCensus::of(&boundary_graph(g)?)));
    }
    Ok(c)
}

impl BoundaryCensus {
    pub fn of(bg: &BoundaryGraph) -> Self {
        BoundaryCensus {
            whole: ResidueCensus::local(bg.graph()),
            per_component: (0..bg.component_count())
                .map(|q| ResidueCensus::local(&bg.component_graph(q)))
                .collect(),
        }
    }
}

/// Serialized as `{ "dim", "tally", "g": {"01": .., ...}, "regular": {..},
/// "boundary" }`, subsets ordered by size then bitmask.
impl Serialize for ResidueCensus {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        struct Counts<'a>(&'a ResidueCensus, &'a [usize]);
        impl Serialize for Counts<'_> {
            fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
                let mut map = serializer.serialize_map(None)?;
                for size in 1..=self.0.dim + 1 {
                    for set in ColorSet::subsets_of_size(self.0.dim, size) {
                        map.serialize_entry(&set.to_string(), &self.1[set.bits() as usize])?;
                    }
                }
                map.end()
            }
        }
        let mut map = serializer.serialize_map(None)?;
        map.serialize_entry("dim", &self.dim)?;
        map.serialize_entry("tally", &self.tally)?;
        map.serialize_entry("g", &Counts(self, &self.components))?;
        map.serialize_entry("regular", &Counts(self, &self.regular))?;
        if let Some(b) = &self.boundary {
            map.serialize_entry("boundary", b)?;
        }
        map.end()
    }
}
