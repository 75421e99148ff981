use std::collections::VecDeque;

use serde::Serialize;

use crate::census::ResidueCensus;
use crate::colors::ColorSet;
use crate::error::Result;
use crate::faces::FaceVector;
use crate::graph::ColoredGraph;

/// Outcome of the crystallization test.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Crystallization {
    Closed,
    WithBoundary { h: usize },
    No,
}

impl Crystallization {
    pub fn holds(self) -> bool {
        !matches!(self, Crystallization::No)
    }

    /// Boundary component count for a crystallization, `0` when closed.
    pub fn h(self) -> Option<usize> {
        match self {
            Crystallization::Closed => Some(0),
            Crystallization::WithBoundary { h } => Some(h),
            Crystallization::No => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub dim: usize,
    pub vertex_count: usize,
    /// Pairings are fixed-point-free involutions; guaranteed by
    /// [`ColoredGraph`] construction and reported for completeness.
    pub involutions: bool,
    /// Colors `0..d` are total pairings.
    pub regular_wrt_last_color: bool,
    pub proper_coloring: bool,
    pub connected: bool,
    pub bipartite: bool,
    /// `g(Γ_ĉ) == 1`, per color `c`.
    pub contracted_per_color: Vec<bool>,
    pub contracted: bool,
    pub closed: bool,
    pub boundary_vertices: usize,
    pub boundary_components: usize,
    pub crystallization: Crystallization,
    pub warnings: Vec<String>,
}

pub fn is_connected(g: &ColoredGraph) -> bool {
    ResidueCensus::local(g).g(g.all_colors()) == 1
}

/// Two-coloring by breadth-first search over edges of every color.
pub fn is_bipartite(g: &ColoredGraph) -> bool {
    let n = g.vertex_count();
    let mut side = vec![None; n];
    for start in 0..n {
        if side[start].is_some() {
            continue;
        }
        side[start] = Some(false);
        let mut queue = VecDeque::from([start]);
        while let Some(v) = queue.pop_front() {
            let s = side[v].unwrap();
            for c in 0..=g.dim() {
                if let Some(w) = g.mate(c, v) {
                    match side[w] {
                        None => {
                            side[w] = Some(!s);
                            queue.push_back(w);
                        }
                        Some(t) if t == s => return false,
                        Some(_) => {}
                    }
                }
            }
        }
    }
    true
}

pub fn is_contracted(g: &ColoredGraph) -> bool {
    let census = ResidueCensus::local(g);
    (0..=g.dim()).all(|c| census.g_hat(ColorSet::single(c)) == 1)
}

/// Crystallization test from a census: closed with every `Γ_ĉ` connected,
/// or with boundary where `g(Γ_d̂) = 1`, `g(Γ_ĉ) = h` for `c < d` and
/// `f_0 = dh + 1`.
pub fn crystallization_of(census: &ResidueCensus) -> Crystallization {
    let d = census.dim();
    let all = ColorSet::full(d);
    if census.g(all) != 1 {
        return Crystallization::No;
    }
    let hat = |c: usize| census.g_hat(ColorSet::single(c));
    let f0 = FaceVector::from_census(census).f[0];
    if census.tally().boundary == 0 {
        return if (0..=d).all(|c| hat(c) == 1) && f0 == d + 1 {
            Crystallization::Closed
        } else {
            Crystallization::No
        };
    }
    let h = census.boundary_components();
    if h >= 1 && hat(d) == 1 && (0..d).all(|c| hat(c) == h) && f0 == d * h + 1 {
        Crystallization::WithBoundary { h }
    } else {
        Crystallization::No
    }
}

pub fn validate(g: &ColoredGraph) -> Result<ValidationReport> {
    let census = crate::census::census(g)?;
    let d = g.dim();
    let contracted_per_color: Vec<bool> =
        (0..=d).map(|c| census.g_hat(ColorSet::single(c)) == 1).collect();
    let tally = census.tally();
    let mut warnings = Vec::new();
    if !tally.is_even() {
        warnings.push(format!(
            "odd vertex tally: {} boundary, {} internal",
            tally.boundary, tally.internal
        ));
    }
    let connected = census.g(g.all_colors()) == 1;
    if !connected {
        warnings.push(format!("graph has {} connected components", census.g(g.all_colors())));
    }
    Ok(ValidationReport {
        dim: d,
        vertex_count: g.vertex_count(),
        involutions: true,
        regular_wrt_last_color: true,
        proper_coloring: true,
        connected,
        bipartite: is_bipartite(g),
        contracted: contracted_per_color.iter().all(|&b| b),
        contracted_per_color,
        closed: tally.boundary == 0,
        boundary_vertices: tally.boundary,
        boundary_components: census.boundary_components(),
        crystallization: crystallization_of(&census),
        warnings,
    })
}
