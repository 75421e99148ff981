//! Regular genus, complexity bounds and recognition of special
//! crystallizations.

mod bounds;
mod genus;
mod recognize;
mod scheme;

use serde::Serializer;

pub use bounds::{
    boundary_genus_cap, complexity_lower_bounds, gem_complexity, genus_lower_bounds, rank_upper_bound,
    rank_upper_bound_from, vertex_lower_bounds, BoundSet, ManifoldMeta,
};
pub use genus::{
    regular_genus, rho_epsilon, rho_epsilon_census, rho_epsilon_census_from, rho_epsilon_from_census,
    rho_epsilon_via_double, rho_epsilon_via_double_from, GenusEntry, GenusProfile, SchemeGenus,
};
pub use recognize::{certify_minimal, weak_semi_simple, MinimalityReport, Relabeling, WeakSemiSimpleReport};
pub use scheme::{all_orderings, enumerate_schemes, PermutationScheme};

use crate::Ratio;

/// Ratios serialize as strings such as `"3"` or `"7/2"`.
pub fn serialize_ratio<S: Serializer>(r: &Ratio, s: S) -> Result<S::Ok, S::Error> {
    s.collect_str(r)
}

pub fn serialize_opt_ratio<S: Serializer>(r: &Option<Ratio>, s: S) -> Result<S::Ok, S::Error> {
    match r {
        Some(r) => s.collect_str(r),
        None => s.serialize_none(),
    }
}
