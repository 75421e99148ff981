use serde::Serialize;

use crate::census::ResidueCensus;
use crate::colors::ColorSet;
use crate::graph::ColoredGraph;

/// Face counts of the induced complex `K(Γ)` and its Euler characteristic.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FaceVector {
    /// `f[k]` counts the `k`-simplices, `0 <= k <= d`.
    pub f: Vec<usize>,
    pub euler_characteristic: i64,
}

impl FaceVector {
    /// A `k`-simplex labelled by the `(k+1)`-set `B` exists for each
    /// component of `Γ` restricted to the complementary colors.
    pub fn from_census(census: &ResidueCensus) -> Self {
        let d = census.dim();
        let f: Vec<usize> = (0..=d)
            .map(|k| {
                ColorSet::subsets_of_size(d, k + 1)
                    .map(|b| census.g_hat(b))
                    .sum()
            })
            .collect();
        let euler_characteristic = f
            .iter()
            .enumerate()
            .map(|(k, &fk)| if k % 2 == 0 { fk as i64 } else { -(fk as i64) })
            .sum();
        FaceVector {
            f,
            euler_characteristic,
        }
    }

    pub fn chi(&self) -> i64 {
        self.euler_characteristic
    }
}

pub fn face_vector(g: &ColoredGraph) -> FaceVector {
    FaceVector::from_census(&ResidueCensus::local(g))
}
