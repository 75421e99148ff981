use crate::census::{census, ResidueCensus};
use crate::error::{GemError, Result};
use crate::graph::ColoredGraph;
use crate::invariants::{rho_epsilon_from_census, PermutationScheme};
use crate::validate::{crystallization_of, Crystallization};
use crate::Ratio;

/// New color of each old color `0..=3` in copy `k`; `None` drops the color.
const COPY_COLORS: [[Option<usize>; 4]; 5] = [
    [Some(1), Some(2), Some(3), None],
    [None, Some(2), Some(3), Some(4)],
    [Some(0), None, Some(3), Some(4)],
    [Some(0), Some(1), None, Some(4)],
    [Some(0), Some(1), Some(2), None],
];

/// The contracted-gem characterization of closed 3-manifold
/// crystallizations: `Γ` contracted, `g_ij = g_kl` for complementary pairs
/// and `g_01 + g_02 + g_03 = 2 + n/2`.
pub fn is_closed_3_manifold_crystallization(c: &ResidueCensus) -> bool {
    c.dim() == 3
        && c.tally().boundary == 0
        && crystallization_of(c) == Crystallization::Closed
        && c.g([0, 1]) == c.g([2, 3])
        && c.g([0, 2]) == c.g([1, 3])
        && c.g([0, 3]) == c.g([1, 2])
        && 2 * (c.g([0, 1]) + c.g([0, 2]) + c.g([0, 3])) == 4 + c.tally().total
}

/// The scheme `(2,0,3,1,4)` at which the product attains `2(g_01 + g_03) - 4`.
pub fn product_scheme() -> PermutationScheme {
    PermutationScheme::new(vec![2, 0, 3, 1]).expect("valid scheme")
}

/// Five-copy crystallization of `M × [0,1]` from a crystallization of a
/// closed 3-manifold: copies `G_0..G_4` with relabelled colors, and for
/// `c` in `0..=3` a `c`-edge between vertex `r` of copies `c` and `c + 1`.
/// Vertex `r` of copy `k` is `k·n + r`.
pub fn interval_product(g3: &ColoredGraph) -> Result<ColoredGraph> {
    if g3.dim() != 3 {
        return Err(GemError::DimensionMismatch {
            required: 3,
            found: g3.dim(),
        });
    }
    let input = census(g3)?;
    if !is_closed_3_manifold_crystallization(&input) {
        return Err(GemError::NotCrystallization(
            "input is not a crystallization of a closed 3-manifold".into(),
        ));
    }
    let n = g3.vertex_count();
    let mut colors: Vec<Vec<(usize, usize)>> = vec![Vec::new(); 5];
    for (k, map) in COPY_COLORS.iter().enumerate() {
        for (old, new) in map.iter().enumerate() {
            if let Some(new) = *new {
                colors[new].extend(g3.edges(old).map(|(a, b)| (k * n + a, k * n + b)));
            }
        }
    }
    for (c, pairs) in colors.iter_mut().enumerate().take(4) {
        pairs.extend((0..n).map(|r| (c * n + r, (c + 1) * n + r)));
    }
    let product = ColoredGraph::from_pairs(4, 5 * n, &colors)?;

    let out = census(&product)?;
    if crystallization_of(&out) != (Crystallization::WithBoundary { h: 2 }) {
        return Err(GemError::ConstructionCheck(
            "product is not a crystallization with two boundary components".into(),
        ));
    }
    let rho = rho_epsilon_from_census(&out, &product_scheme())?.rho;
    let expected = Ratio::from_integer(2 * (input.g([0, 1]) + input.g([0, 3])) as i64 - 4);
    if rho != expected {
        return Err(GemError::ConstructionCheck(format!(
            "rho at {} is {rho}, expected {expected}",
            product_scheme()
        )));
    }
    Ok(product)
}
