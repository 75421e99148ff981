//! Identity harness: every census identity and bound evaluated on one gem,
//! with exact arithmetic and a pass/fail verdict per instance.
//!
//! Checks are rows of two static tables, [`IDENTITY_CHECKS`] and
//! [`BOUND_CHECKS`]. Boundary counts always come from the extracted boundary
//! graph and the double's counts from the constructed double, so each
//! equation compares independently computed integers.

use serde::Serialize;

use crate::census::{census, ResidueCensus};
use crate::colors::ColorSet;
use crate::constructions::double;
use crate::error::Result;
use crate::faces::FaceVector;
use crate::graph::ColoredGraph;
use crate::invariants::{
    boundary_genus_cap, complexity_lower_bounds, enumerate_schemes, genus_lower_bounds, rank_upper_bound_from,
    regular_genus, rho_epsilon_census_from, rho_epsilon_from_census, rho_epsilon_via_double_from,
    vertex_lower_bounds, ManifoldMeta,
};
use crate::validate::{crystallization_of, Crystallization};
use crate::Ratio;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Relation {
    #[serde(rename = "=")]
    Eq,
    #[serde(rename = ">=")]
    Ge,
    #[serde(rename = "<=")]
    Le,
}

impl Relation {
    fn holds(self, left: Ratio, right: Ratio) -> bool {
        match self {
            Relation::Eq => left == right,
            Relation::Ge => left >= right,
            Relation::Le => left <= right,
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Eq => "=",
            Relation::Ge => ">=",
            Relation::Le => "<=",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckResult {
    pub family: &'static str,
    /// The identity being checked, as a formula.
    pub anchor: &'static str,
    /// The instance, e.g. `ġ_014 >= h-1`.
    pub name: String,
    #[serde(serialize_with = "crate::invariants::serialize_ratio")]
    pub left: Ratio,
    pub relation: Relation,
    #[serde(serialize_with = "crate::invariants::serialize_ratio")]
    pub right: Ratio,
    pub pass: bool,
    /// For inequalities: whether equality holds on this gem.
    pub sharp: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Skipped {
    pub family: &'static str,
    pub reason: &'static str,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IdentityReport {
    pub crystallization: Crystallization,
    pub checks: Vec<CheckResult>,
    pub skipped: Vec<Skipped>,
    /// Every evaluated check passed, and a gem with boundary is also a
    /// crystallization. Closed gems need not be contracted.
    pub pass: bool,
}

impl IdentityReport {
    pub fn families(&self) -> Vec<&'static str> {
        let mut out: Vec<&'static str> = Vec::new();
        for c in &self.checks {
            if !out.contains(&c.family) {
                out.push(c.family);
            }
        }
        out
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.pass)
    }

    pub fn family_passes(&self, family: &str) -> bool {
        let mut rows = self.checks.iter().filter(|c| c.family == family).peekable();
        rows.peek().is_some() && rows.all(|c| c.pass)
    }
}

struct Context<'a> {
    g: &'a ColoredGraph,
    meta: &'a ManifoldMeta,
    census: ResidueCensus,
    chi: i64,
    h: usize,
    kind: Crystallization,
    double: Option<(ResidueCensus, i64)>,
}

struct Rows<'a> {
    family: &'static str,
    anchor: &'static str,
    out: &'a mut Vec<CheckResult>,
}

impl Rows<'_> {
    fn push(&mut self, name: String, left: impl Into<Ratio>, relation: Relation, right: impl Into<Ratio>) {
        let (left, right) = (left.into(), right.into());
        self.out.push(CheckResult {
            family: self.family,
            anchor: self.anchor,
            name,
            left,
            relation,
            right,
            pass: relation.holds(left, right),
            sharp: (relation != Relation::Eq).then_some(left == right),
        });
    }

    fn eq(&mut self, name: String, left: i64, right: i64) {
        self.push(name, left, Relation::Eq, right);
    }
}

type Applies = fn(&Context) -> std::result::Result<(), &'static str>;
type Eval = fn(&Context, &mut Rows);

/// One row of a check table.
pub struct Check {
    pub family: &'static str,
    pub anchor: &'static str,
    applies: Applies,
    eval: Eval,
}

fn int(n: usize) -> i64 {
    n as i64
}

fn triples(dim: usize) -> impl Iterator<Item = ColorSet> {
    ColorSet::subsets_of_size(dim, 3)
}

fn pairs_below(dim: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..dim).flat_map(move |i| (i + 1..dim).map(move |j| (i, j)))
}

fn with_boundary(ctx: &Context) -> std::result::Result<(), &'static str> {
    if ctx.g.dim() != 4 {
        return Err("needs dimension 4");
    }
    if ctx.h == 0 {
        return Err("needs a nonempty boundary");
    }
    Ok(())
}

fn closed_dim_at_least_3(ctx: &Context) -> std::result::Result<(), &'static str> {
    if ctx.h != 0 {
        return Err("closed inputs only");
    }
    if ctx.g.dim() < 3 {
        return Err("needs dimension at least 3");
    }
    Ok(())
}

fn closed(ctx: &Context) -> std::result::Result<(), &'static str> {
    if ctx.h != 0 {
        return Err("closed inputs only");
    }
    Ok(())
}

fn closed_dim_3(ctx: &Context) -> std::result::Result<(), &'static str> {
    closed(ctx)?;
    if ctx.g.dim() != 3 {
        return Err("needs dimension 3");
    }
    Ok(())
}

fn double_census<'a>(ctx: &'a Context) -> (&'a ResidueCensus, i64) {
    let (c, chi) = ctx.double.as_ref().expect("double built for gems with boundary");
    (c, *chi)
}

pub static IDENTITY_CHECKS: &[Check] = &[
    Check {
        family: "regular_last_color_triples",
        anchor: "ġ_ab4 >= h - 1",
        applies: with_boundary,
        eval: |ctx, rows| {
            for (a, b) in pairs_below(4) {
                let set = ColorSet::from([a, b, 4]);
                rows.push(
                    format!("ġ_{set} >= h-1"),
                    int(ctx.census.regular(set)),
                    Relation::Ge,
                    int(ctx.h) - 1,
                );
            }
        },
    },
    Check {
        family: "boundary_split",
        anchor: "g_ij4 = ġ_ij4 + ∂g_ij; g_i4 = ġ_i4 + p̄",
        applies: with_boundary,
        eval: |ctx, rows| {
            let c = &ctx.census;
            for (i, j) in pairs_below(4) {
                let set = ColorSet::from([i, j, 4]);
                rows.eq(
                    format!("g_{set} = ġ_{set} + ∂g_{i}{j}"),
                    int(c.g(set)),
                    int(c.regular(set) + c.boundary_g([i, j])),
                );
            }
            for i in 0..4 {
                rows.eq(
                    format!("g_{i}4 = ġ_{i}4 + p̄"),
                    int(c.g([i, 4])),
                    int(c.regular([i, 4]) + c.tally().half_boundary()),
                );
            }
        },
    },
    Check {
        family: "double_census",
        anchor: "g'_ijk = 2g_ijk; g'_ij4 = g_ij4 + ġ_ij4; g'_ij = 2g_ij; g'_i4 = g_i4 + ġ_i4; χ(2M) = 2χ(M)",
        applies: with_boundary,
        eval: |ctx, rows| {
            let c = &ctx.census;
            let (dc, dchi) = double_census(ctx);
            for size in [2, 3] {
                for set in ColorSet::subsets_of_size(4, size) {
                    let right = if set.contains(4) {
                        c.g(set) + c.regular(set)
                    } else {
                        2 * c.g(set)
                    };
                    let rhs = if set.contains(4) {
                        format!("g_{set} + ġ_{set}")
                    } else {
                        format!("2g_{set}")
                    };
                    rows.eq(format!("g'_{set} = {rhs}"), int(dc.g(set)), int(right));
                }
            }
            rows.eq("χ(double) = 2χ".into(), dchi, 2 * ctx.chi);
        },
    },
    Check {
        family: "double_vertex_count",
        anchor: "2p = 6χ + Σ g'_ijk - 12h - 6",
        applies: with_boundary,
        eval: |ctx, rows| {
            let (dc, _) = double_census(ctx);
            let sum: i64 = triples(4).map(|t| int(dc.g(t))).sum();
            rows.eq(
                "2p = 6χ + Σg'_ijk - 12h - 6".into(),
                int(ctx.g.vertex_count()),
                6 * ctx.chi + sum - 12 * int(ctx.h) - 6,
            );
        },
    },
    Check {
        family: "vertex_census",
        anchor: "2p + 2p̄ = 6χ + 2Σ g_ijk - 16h - 6",
        applies: with_boundary,
        eval: |ctx, rows| {
            let sum: i64 = triples(4).map(|t| int(ctx.census.g(t))).sum();
            let t = ctx.census.tally();
            rows.eq(
                "2p + 2p̄ = 6χ + 2Σg_ijk - 16h - 6".into(),
                int(t.total + t.boundary),
                6 * ctx.chi + 2 * sum - 16 * int(ctx.h) - 6,
            );
        },
    },
    Check {
        family: "boundary_pair_sum",
        anchor: "Σ ∂g_ij = 4h + 2p̄",
        applies: with_boundary,
        eval: |ctx, rows| {
            let sum: i64 = pairs_below(4).map(|(i, j)| int(ctx.census.boundary_g([i, j]))).sum();
            rows.eq(
                "Σ∂g_ij = 4h + 2p̄".into(),
                sum,
                4 * int(ctx.h) + int(ctx.census.tally().boundary),
            );
        },
    },
    Check {
        family: "boundary_components",
        anchor: "∂^q g_ij + ∂^q g_ik + ∂^q g_jk = 2 + |V(∂^q Γ)|/2",
        applies: with_boundary,
        eval: |ctx, rows| {
            let b = ctx.census.boundary().expect("boundary census present");
            for (q, comp) in b.per_component.iter().enumerate() {
                for t in triples(3) {
                    let c: Vec<usize> = t.iter().collect();
                    let (i, j, k) = (c[0], c[1], c[2]);
                    rows.eq(
                        format!("component {}: ∂g_{i}{j} + ∂g_{i}{k} + ∂g_{j}{k} = 2 + n/2", q + 1),
                        int(comp.g([i, j]) + comp.g([i, k]) + comp.g([j, k])),
                        2 + int(comp.tally().total / 2),
                    );
                }
            }
        },
    },
    Check {
        family: "double_triple_relation",
        anchor: "2g'_ijk = g'_ij + g'_ik + g'_jk - #V(Γ')/2",
        applies: with_boundary,
        eval: |ctx, rows| triple_relation(double_census(ctx).0, rows, "'"),
    },
    Check {
        family: "genus_formulas",
        anchor: "ρ_ε by embedding = ρ_ε via the double = ρ_ε from the census",
        applies: with_boundary,
        eval: |ctx, rows| {
            let (dc, _) = double_census(ctx);
            for scheme in enumerate_schemes(4) {
                let Ok(embedded) = rho_epsilon_from_census(&ctx.census, &scheme) else {
                    continue;
                };
                if let Ok(r) = rho_epsilon_via_double_from(&ctx.census, dc, &scheme) {
                    rows.push(format!("ρ_ε{scheme}: embedding = double"), embedded.rho, Relation::Eq, r);
                }
                if let Ok(r) = rho_epsilon_census_from(&ctx.census, &scheme) {
                    rows.push(format!("ρ_ε{scheme}: embedding = census"), embedded.rho, Relation::Eq, r);
                }
            }
        },
    },
    Check {
        family: "closed_triple_relation",
        anchor: "2g_ijk = g_ij + g_ik + g_jk - #V(Γ)/2",
        applies: closed_dim_at_least_3,
        eval: |ctx, rows| triple_relation(&ctx.census, rows, ""),
    },
    Check {
        family: "closed_embedding_reduction",
        anchor: "χ_ε = Σ g_{ε_i ε_i+1} + (1 - d)p, λ_ε = 0 when closed",
        applies: closed,
        eval: |ctx, rows| {
            let d = int(ctx.g.dim());
            let p = int(ctx.g.vertex_count() / 2);
            for scheme in enumerate_schemes(ctx.g.dim()) {
                let Ok(e) = rho_epsilon_from_census(&ctx.census, &scheme) else {
                    continue;
                };
                let cycles: i64 = (0..=ctx.g.dim())
                    .map(|i| int(ctx.census.g([scheme.at(i), scheme.at(i + 1)])))
                    .sum();
                rows.eq(format!("χ_ε{scheme}"), e.chi, cycles + (1 - d) * p);
                rows.eq(format!("λ_ε{scheme}"), int(e.lambda), 0);
            }
        },
    },
    Check {
        family: "three_manifold_criterion",
        anchor: "g_ij = g_kl; g_01 + g_02 + g_03 = 2 + n/2",
        applies: closed_dim_3,
        eval: |ctx, rows| {
            let c = &ctx.census;
            for (a, b) in [((0, 1), (2, 3)), ((0, 2), (1, 3)), ((0, 3), (1, 2))] {
                rows.eq(
                    format!("g_{}{} = g_{}{}", a.0, a.1, b.0, b.1),
                    int(c.g([a.0, a.1])),
                    int(c.g([b.0, b.1])),
                );
            }
            rows.eq(
                "g_01 + g_02 + g_03 = 2 + n/2".into(),
                int(c.g([0, 1]) + c.g([0, 2]) + c.g([0, 3])),
                2 + int(ctx.g.vertex_count() / 2),
            );
        },
    },
];

fn triple_relation(c: &ResidueCensus, rows: &mut Rows, prime: &str) {
    let half = int(c.tally().total / 2);
    for t in triples(c.dim()) {
        let v: Vec<usize> = t.iter().collect();
        let (i, j, k) = (v[0], v[1], v[2]);
        rows.eq(
            format!("2g{prime}_{t} = g{prime}_{i}{j} + g{prime}_{i}{k} + g{prime}_{j}{k} - n/2"),
            2 * int(c.g(t)),
            int(c.g([i, j]) + c.g([i, k]) + c.g([j, k])) - half,
        );
    }
}

fn needs_rank(ctx: &Context) -> std::result::Result<(), &'static str> {
    with_boundary(ctx)?;
    if ctx.kind.h().is_none() {
        return Err("needs a crystallization");
    }
    if ctx.meta.rank.is_none() {
        return Err("needs the rank m");
    }
    Ok(())
}

fn needs_crystallization(ctx: &Context) -> std::result::Result<(), &'static str> {
    if ctx.g.dim() != 4 {
        return Err("needs dimension 4");
    }
    if ctx.kind.h().is_none() {
        return Err("needs a crystallization");
    }
    Ok(())
}

pub static BOUND_CHECKS: &[Check] = &[
    Check {
        family: "meta_consistency",
        anchor: "h and χ supplied = h and χ of the graph",
        applies: needs_crystallization,
        eval: |ctx, rows| {
            rows.eq("h".into(), int(ctx.meta.h), int(ctx.h));
            rows.eq("χ".into(), ctx.meta.chi, ctx.chi);
        },
    },
    Check {
        family: "vertex_bounds",
        anchor: "2p >= 6χ+14m+14h-18; 2p+2p̄ >= 6χ+20m+16h-18; 2p-2p̄ >= 6χ+8m+12h-18",
        applies: needs_rank,
        eval: |ctx, rows| {
            let Ok((a, b, c)) = vertex_lower_bounds(ctx.meta) else { return };
            let t = ctx.census.tally();
            rows.push("2p".into(), int(t.total), Relation::Ge, a);
            rows.push("2p + 2p̄".into(), int(t.total + t.boundary), Relation::Ge, b);
            rows.push("2p - 2p̄".into(), int(t.total) - int(t.boundary), Relation::Ge, c);
        },
    },
    Check {
        family: "complexity_bounds",
        anchor: "k >= 3χ+7m+7h-10; k >= k(∂M)+3χ+4m+6h-9",
        applies: needs_rank,
        eval: |ctx, rows| {
            let Ok((a, b)) = complexity_lower_bounds(ctx.meta) else { return };
            let k = int(ctx.g.vertex_count() / 2) - 1;
            rows.push("k >= 3χ+7m+7h-10".into(), k, Relation::Ge, a);
            if let Some(b) = b {
                rows.push("k >= k(∂M)+3χ+4m+6h-9".into(), k, Relation::Ge, b);
            }
        },
    },
    Check {
        family: "genus_bounds",
        anchor: "ρ >= 2χ+2m̄-2; ρ >= 2χ+3m+2h-4; ρ >= G(∂M)+2χ+2m+2h-4",
        applies: needs_rank,
        eval: |ctx, rows| {
            let Ok((a, b, c)) = genus_lower_bounds(ctx.meta) else { return };
            let Ok(profile) = regular_genus(ctx.g) else { return };
            if let Some(a) = a {
                rows.push("ρ >= 2χ+2m̄-2".into(), profile.rho, Relation::Ge, a);
            }
            rows.push("ρ >= 2χ+3m+2h-4".into(), profile.rho, Relation::Ge, b);
            if let Some(c) = c {
                rows.push("ρ >= G(∂M)+2χ+2m+2h-4".into(), profile.rho, Relation::Ge, c);
            }
        },
    },
    Check {
        family: "rank_bound",
        anchor: "m <= g_{Δ∖{a,b}} - (g_{Δ∖{a}} + g_{Δ∖{b}} - 1)",
        applies: |ctx| {
            needs_crystallization(ctx)?;
            if ctx.meta.rank.is_none() {
                return Err("needs the rank m");
            }
            Ok(())
        },
        eval: |ctx, rows| {
            let m = int(ctx.meta.rank.unwrap_or(0));
            rows.push("m".into(), m, Relation::Le, rank_upper_bound_from(&ctx.census));
        },
    },
    Check {
        family: "boundary_genus_cap",
        anchor: "G(∂M) <= min ∂g_ij - h",
        applies: |ctx| {
            with_boundary(ctx)?;
            if ctx.meta.boundary_genus.is_none() {
                return Err("needs the boundary genus");
            }
            Ok(())
        },
        eval: |ctx, rows| {
            let Ok(bg) = crate::boundary::boundary_graph(ctx.g) else { return };
            let Ok(cap) = boundary_genus_cap(&bg) else { return };
            let gb = int(ctx.meta.boundary_genus.unwrap_or(0));
            rows.push("G(∂M)".into(), gb, Relation::Le, cap);
        },
    },
];

fn context<'a>(g: &'a ColoredGraph, meta: &'a ManifoldMeta) -> Result<Context<'a>> {
    let census = census(g)?;
    let chi = FaceVector::from_census(&census).chi();
    let h = census.boundary_components();
    let double = if h > 0 {
        let (dg, _) = double(g)?;
        let dc = ResidueCensus::local(&dg);
        let dchi = FaceVector::from_census(&dc).chi();
        Some((dc, dchi))
    } else {
        None
    };
    Ok(Context {
        g,
        meta,
        kind: crystallization_of(&census),
        census,
        chi,
        h,
        double,
    })
}

fn run(table: &[Check], ctx: &Context) -> IdentityReport {
    let mut checks = Vec::new();
    let mut skipped = Vec::new();
    for check in table {
        match (check.applies)(ctx) {
            Ok(()) => {
                let mut rows = Rows {
                    family: check.family,
                    anchor: check.anchor,
                    out: &mut checks,
                };
                (check.eval)(ctx, &mut rows);
            }
            Err(reason) => skipped.push(Skipped {
                family: check.family,
                reason,
            }),
        }
    }
    IdentityReport {
        crystallization: ctx.kind,
        pass: (ctx.kind.holds() || ctx.g.is_closed()) && checks.iter().all(|c| c.pass),
        checks,
        skipped,
    }
}

/// Evaluates every applicable identity. Gems with boundary run the
/// boundary families; closed gems run the closed ones.
pub fn verify_identities(g: &ColoredGraph, meta: &ManifoldMeta) -> Result<IdentityReport> {
    Ok(run(IDENTITY_CHECKS, &context(g, meta)?))
}

/// Evaluates the lower and upper bounds against the values attained by `g`.
pub fn verify_bounds(g: &ColoredGraph, meta: &ManifoldMeta) -> Result<IdentityReport> {
    Ok(run(BOUND_CHECKS, &context(g, meta)?))
}
