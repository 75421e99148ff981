use serde::Serialize;

use super::scheme::{enumerate_schemes, PermutationScheme};
use super::{serialize_opt_ratio, serialize_ratio};
use crate::census::{census, ResidueCensus};
use crate::constructions::double;
use crate::error::{GemError, Result};
use crate::faces::FaceVector;
use crate::graph::ColoredGraph;
use crate::validate::{crystallization_of, Crystallization};
use crate::Ratio;

/// `(χ_ε, λ_ε, ρ_ε)` for one scheme.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SchemeGenus {
    pub scheme: PermutationScheme,
    pub chi: i64,
    pub lambda: usize,
    #[serde(serialize_with = "serialize_ratio")]
    pub rho: Ratio,
}

fn check_dim(census: &ResidueCensus, scheme: &PermutationScheme) -> Result<()> {
    if scheme.dim() != census.dim() {
        return Err(GemError::DimensionMismatch {
            required: scheme.dim(),
            found: census.dim(),
        });
    }
    Ok(())
}

fn require_dim4(census: &ResidueCensus) -> Result<()> {
    if census.dim() != 4 {
        return Err(GemError::DimensionMismatch {
            required: 4,
            found: census.dim(),
        });
    }
    Ok(())
}

/// Euler characteristic of the regular embedding surface:
/// `χ_ε = Σ ġ_{ε_i ε_{i+1}} + (1 - d)ṗ + (2 - d)p̄`, with
/// `λ_ε = ∂g_{ε_0 ε_{d-1}}` holes and `ρ_ε = 1 - χ_ε/2 - λ_ε/2`.
pub fn rho_epsilon_from_census(census: &ResidueCensus, scheme: &PermutationScheme) -> Result<SchemeGenus> {
    check_dim(census, scheme)?;
    let d = census.dim() as i64;
    let tally = census.tally();
    let cycles: i64 = (0..=census.dim())
        .map(|i| census.regular([scheme.at(i), scheme.at(i + 1)]) as i64)
        .sum();
    // Internal and boundary vertex counts are both even, so the halves are
    // exact.
    let chi = cycles + (1 - d) * (tally.internal as i64 / 2) + (2 - d) * (tally.boundary as i64 / 2);
    let lambda = if census.dim() >= 2 {
        census.boundary_g([scheme.at(0), scheme.at(census.dim() - 1)])
    } else {
        0
    };
    let rho = Ratio::from_integer(1) - Ratio::new(chi, 2) - Ratio::new(lambda as i64, 2);
    Ok(SchemeGenus {
        scheme: scheme.clone(),
        chi,
        lambda,
        rho,
    })
}

pub fn rho_epsilon(g: &ColoredGraph, scheme: &PermutationScheme) -> Result<SchemeGenus> {
    rho_epsilon_from_census(&census(g)?, scheme)
}

fn boundary_count(census: &ResidueCensus) -> Result<i64> {
    match census.boundary_components() {
        0 => Err(GemError::ClosedInput),
        h => Ok(h as i64),
    }
}

/// `ρ_ε` through the double:
/// `-1 - 4h + 2χ + ½ Σ_{i ∈ Z_5} g'_{ε_i ε_{i+2} ε_{i+4}} - ½ ∂g_{ε_0 ε_3}`.
pub fn rho_epsilon_via_double_from(
    census: &ResidueCensus,
    double_census: &ResidueCensus,
    scheme: &PermutationScheme,
) -> Result<Ratio> {
    require_dim4(census)?;
    check_dim(census, scheme)?;
    let h = boundary_count(census)?;
    let chi = FaceVector::from_census(census).chi();
    let triples: i64 = (0..5)
        .map(|i| double_census.g([scheme.at(i), scheme.at(i + 2), scheme.at(i + 4)]) as i64)
        .sum();
    let hole = census.boundary_g([scheme.at(0), scheme.at(3)]) as i64;
    Ok(Ratio::from_integer(-1 - 4 * h + 2 * chi) + Ratio::new(triples, 2) - Ratio::new(hole, 2))
}

pub fn rho_epsilon_via_double(g: &ColoredGraph, scheme: &PermutationScheme) -> Result<Ratio> {
    if g.is_closed() {
        return Err(GemError::ClosedInput);
    }
    let (doubled, _) = double(g)?;
    rho_epsilon_via_double_from(&census(g)?, &ResidueCensus::local(&doubled), scheme)
}

/// `ρ_ε` from the census alone:
/// `-1 - 4h + 2χ + g_{ε0ε1ε3} + g_{ε0ε2ε3} + g_{ε1ε3 4} + ġ_{ε0ε2 4} + ġ_{ε1ε2 4}`.
pub fn rho_epsilon_census_from(census: &ResidueCensus, scheme: &PermutationScheme) -> Result<Ratio> {
    require_dim4(census)?;
    check_dim(census, scheme)?;
    let h = boundary_count(census)?;
    let chi = FaceVector::from_census(census).chi();
    let e = |i| scheme.at(i);
    let g = |b: [usize; 3]| census.g(b) as i64;
    let r = |b: [usize; 3]| census.regular(b) as i64;
    let total = -1 - 4 * h
        + 2 * chi
        + g([e(0), e(1), e(3)])
        + g([e(0), e(2), e(3)])
        + g([e(1), e(3), 4])
        + r([e(0), e(2), 4])
        + r([e(1), e(2), 4]);
    Ok(Ratio::from_integer(total))
}

pub fn rho_epsilon_census(g: &ColoredGraph, scheme: &PermutationScheme) -> Result<Ratio> {
    rho_epsilon_census_from(&census(g)?, scheme)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenusEntry {
    #[serde(flatten)]
    pub genus: SchemeGenus,
    #[serde(serialize_with = "serialize_opt_ratio")]
    pub via_double: Option<Ratio>,
    #[serde(serialize_with = "serialize_opt_ratio")]
    pub via_census: Option<Ratio>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GenusProfile {
    pub dim: usize,
    pub schemes: Vec<GenusEntry>,
    #[serde(serialize_with = "serialize_ratio")]
    pub rho: Ratio,
    /// First scheme, in enumeration order, attaining the minimum.
    pub argmin: PermutationScheme,
    /// Whether the two alternative formulas were evaluated.
    pub cross_checked: bool,
    pub diagnostics: Vec<String>,
}

impl GenusProfile {
    pub fn entry(&self, scheme: &PermutationScheme) -> Option<&GenusEntry> {
        let c = scheme.canonical();
        self.schemes.iter().find(|e| e.genus.scheme == c)
    }
}

/// `ρ(Γ)`: the minimum of `ρ_ε` over all schemes. For 4-dimensional
/// crystallizations with boundary, the double-based and census-based
/// formulas are evaluated too and must agree with the embedding formula.
pub fn regular_genus(g: &ColoredGraph) -> Result<GenusProfile> {
    let census = census(g)?;
    let cross = census.dim() == 4
        && matches!(crystallization_of(&census), Crystallization::WithBoundary { .. });
    let double_census = if cross {
        Some(ResidueCensus::local(&double(g)?.0))
    } else {
        None
    };
    let mut schemes = Vec::new();
    let mut diagnostics = Vec::new();
    for scheme in enumerate_schemes(g.dim()) {
        let genus = rho_epsilon_from_census(&census, &scheme)?;
        if !genus.rho.is_integer() {
            diagnostics.push(format!("rho_epsilon for {scheme} is not an integer: {}", genus.rho));
        }
        let (via_double, via_census) = match &double_census {
            Some(dc) => {
                let a = rho_epsilon_via_double_from(&census, dc, &scheme)?;
                let b = rho_epsilon_census_from(&census, &scheme)?;
                if a != genus.rho || b != genus.rho {
                    return Err(GemError::FormulaDisagreement {
                        scheme: scheme.to_string(),
                        detail: format!("embedding {}, double {a}, census {b}", genus.rho),
                    });
                }
                (Some(a), Some(b))
            }
            None => (None, None),
        };
        schemes.push(GenusEntry {
            genus,
            via_double,
            via_census,
        });
    }
    let best = schemes
        .iter()
        .reduce(|best, e| if e.genus.rho < best.genus.rho { e } else { best })
        .expect("at least one scheme");
    Ok(GenusProfile {
        dim: g.dim(),
        rho: best.genus.rho,
        argmin: best.genus.scheme.clone(),
        schemes,
        cross_checked: cross,
        diagnostics,
    })
}
