//! Graph-level constructions: the double, 1-dipole moves, connected sums
//! and the interval product.

mod dipole;
mod double;
mod product;
mod sum;

pub use dipole::{crystallize_double, find_one_dipoles, remove_one_dipole, CrystallizedDouble, Dipole, Removal};
pub use double::{double, DoubleProvenance};
pub use product::{interval_product, is_closed_3_manifold_crystallization, product_scheme};
pub use sum::{
    connected_sum, connected_sum_with, represents_connected_sum, simplex_vertex_on_boundary,
    sphere_connector_sum, SumPolicy,
};
