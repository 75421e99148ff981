use serde::Serialize;

use crate::census::{census, residue_components, ResidueCensus};
use crate::colors::ColorSet;
use crate::constructions::double;
use crate::error::{GemError, Result};
use crate::graph::ColoredGraph;
use crate::validate::{crystallization_of, Crystallization};

/// A 1-dipole: a `color`-edge `u - v` (`u < v`) whose endpoints lie in
/// different components of `Γ_ĉ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Dipole {
    pub color: usize,
    pub u: usize,
    pub v: usize,
    /// Indices of the `Γ_ĉ` components of `u` and `v`, components ordered by
    /// smallest vertex.
    pub separated: (usize, usize),
}

impl Dipole {
    /// Re-derives the certificate from `g`.
    pub fn verify(&self, g: &ColoredGraph) -> Result<()> {
        let stale = GemError::StaleDipole {
            color: self.color,
            first: self.u + 1,
            second: self.v + 1,
        };
        if self.color > g.dim()
            || self.u >= g.vertex_count()
            || self.v >= g.vertex_count()
            || g.mate(self.color, self.u) != Some(self.v)
        {
            return Err(stale);
        }
        let labels = component_labels(g, self.color);
        if labels[self.u] == labels[self.v] || (labels[self.u], labels[self.v]) != self.separated {
            return Err(stale);
        }
        Ok(())
    }
}

fn component_labels(g: &ColoredGraph, color: usize) -> Vec<usize> {
    let rest = ColorSet::single(color).complement(g.dim());
    let mut labels = vec![0; g.vertex_count()];
    if rest.is_empty() {
        return (0..g.vertex_count()).collect();
    }
    let comps = residue_components(g, rest).expect("nonempty color set within range");
    for (i, comp) in comps.iter().enumerate() {
        for &v in &comp.vertices {
            labels[v] = i;
        }
    }
    labels
}

/// All 1-dipoles of `color`, ordered by smaller endpoint.
pub fn find_one_dipoles(g: &ColoredGraph, color: usize) -> Vec<Dipole> {
    if color > g.dim() {
        return Vec::new();
    }
    let labels = component_labels(g, color);
    g.edges(color)
        .filter(|&(u, v)| labels[u] != labels[v])
        .map(|(u, v)| Dipole {
            color,
            u,
            v,
            separated: (labels[u], labels[v]),
        })
        .collect()
}

/// Deletes the dipole's endpoints and welds, for every other color, the two
/// edges leaving them. Where only one endpoint has a last-color edge, its
/// neighbor becomes a boundary vertex. Remaining vertices keep their order.
pub fn remove_one_dipole(g: &ColoredGraph, dp: &Dipole) -> Result<ColoredGraph> {
    dp.verify(g)?;
    let n = g.vertex_count();
    let (u, v) = (dp.u, dp.v);
    let new_index = |x: usize| x - usize::from(x > u) - usize::from(x > v);
    let mut colors = Vec::with_capacity(g.dim() + 1);
    for c in 0..=g.dim() {
        let mut pairs: Vec<(usize, usize)> = g
            .edges(c)
            .filter(|&(a, b)| a != u && a != v && b != u && b != v)
            .map(|(a, b)| (new_index(a), new_index(b)))
            .collect();
        if c != dp.color {
            if let (Some(a), Some(b)) = (g.mate(c, u), g.mate(c, v)) {
                pairs.push((new_index(a), new_index(b)));
            }
        }
        colors.push(pairs);
    }
    ColoredGraph::from_pairs(g.dim(), n - 2, &colors)
}

/// A removal performed by [`crystallize_double`], in the numbering of the
/// graph it was removed from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct Removal {
    pub stage: usize,
    pub dipole: Dipole,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrystallizedDouble {
    #[serde(skip)]
    pub graph: ColoredGraph,
    pub removals: Vec<Removal>,
}

/// Crystallization of the double of a 4-dimensional crystallization with
/// `h >= 1` boundary components: removes `h - 1` 1-dipoles of each color
/// `0..=3`, then one of color 4, always taking the first available one.
/// The result is checked against `ḡ_{ijk} = g'_{ijk} - h` and
/// `ḡ_{ij4} = g'_{ij4} - 2(h - 1)`.
pub fn crystallize_double(g: &ColoredGraph) -> Result<CrystallizedDouble> {
    if g.dim() != 4 {
        return Err(GemError::DimensionMismatch {
            required: 4,
            found: g.dim(),
        });
    }
    let h = match crystallization_of(&census(g)?) {
        Crystallization::WithBoundary { h } => h,
        Crystallization::Closed => return Err(GemError::ClosedInput),
        Crystallization::No => {
            return Err(GemError::NotCrystallization("crystallization counts do not hold".into()))
        }
    };
    let (doubled, _) = double(g)?;
    let before = ResidueCensus::local(&doubled);
    let plan = (0..4).flat_map(|c| std::iter::repeat_n(c, h - 1)).chain([4]);
    let mut current = doubled;
    let mut removals = Vec::new();
    for (i, color) in plan.enumerate() {
        let stage = i + 1;
        let dp = *find_one_dipoles(&current, color)
            .first()
            .ok_or(GemError::DipoleNotFound { color, stage })?;
        current = remove_one_dipole(&current, &dp)?;
        removals.push(Removal { stage, dipole: dp });
    }
    let after = ResidueCensus::local(&current);
    for set in ColorSet::subsets_of_size(4, 3) {
        let expected = if set.contains(4) {
            before.g(set) as i64 - 2 * (h as i64 - 1)
        } else {
            before.g(set) as i64 - h as i64
        };
        if after.g(set) as i64 != expected {
            return Err(GemError::ConstructionCheck(format!(
                "g_{set} of the crystallized double is {}, expected {expected}",
                after.g(set)
            )));
        }
    }
    if crystallization_of(&after) != Crystallization::Closed {
        return Err(GemError::ConstructionCheck(
            "crystallized double is not a closed crystallization".into(),
        ));
    }
    Ok(CrystallizedDouble {
        graph: current,
        removals,
    })
}
