use std::fmt;

use itertools::Itertools;
use serde::{Serialize, Serializer};

use crate::error::{GemError, Result};

/// A cyclic permutation `ε = (ε_0, ..., ε_{d-1}, d)` of the colors, stored
/// as the ordering of the first `d` entries.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PermutationScheme {
    order: Vec<usize>,
}

impl PermutationScheme {
    /// `order` must be a permutation of `0..d`; `d` is implied.
    pub fn new(order: Vec<usize>) -> Result<Self> {
        let d = order.len();
        if d == 0 {
            return Err(GemError::InvalidScheme("empty ordering".into()));
        }
        let mut seen = vec![false; d];
        for &c in &order {
            if c >= d || std::mem::replace(&mut seen[c], true) {
                return Err(GemError::InvalidScheme(format!(
                    "{order:?} is not a permutation of 0..{d}"
                )));
            }
        }
        Ok(PermutationScheme { order })
    }

    /// Parses `2,0,3,1,4` or `(2,0,3,1,4)`; the trailing `d` is optional.
    pub fn parse(text: &str, dim: usize) -> Result<Self> {
        let inner = text.trim().trim_start_matches('(').trim_end_matches(')');
        let mut entries = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|_| GemError::InvalidScheme(format!("bad entry `{}` in `{text}`", t.trim())))
            })
            .collect::<Result<Vec<_>>>()?;
        if entries.len() == dim + 1 {
            if entries.last() != Some(&dim) {
                return Err(GemError::InvalidScheme(format!("`{text}` must end with {dim}")));
            }
            entries.pop();
        }
        if entries.len() != dim {
            return Err(GemError::InvalidScheme(format!(
                "`{text}` has {} entries, dimension {dim} needs {dim}",
                entries.len()
            )));
        }
        Self::new(entries)
    }

    pub fn dim(&self) -> usize {
        self.order.len()
    }

    /// `ε_0..ε_{d-1}`.
    pub fn order(&self) -> &[usize] {
        &self.order
    }

    /// `ε_i` for `i` in `0..=d`, indices taken mod `d + 1`.
    pub fn at(&self, i: usize) -> usize {
        let i = i % (self.dim() + 1);
        if i == self.dim() {
            self.dim()
        } else {
            self.order[i]
        }
    }

    pub fn reversed(&self) -> Self {
        PermutationScheme {
            order: self.order.iter().rev().copied().collect(),
        }
    }

    /// The lexicographically smaller of the scheme and its reversal.
    pub fn canonical(&self) -> Self {
        let r = self.reversed();
        if r.order < self.order {
            r
        } else {
            self.clone()
        }
    }

    pub fn is_canonical(&self) -> bool {
        self.order <= self.reversed().order
    }
}

impl fmt::Display for PermutationScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.order.iter().join(","), self.dim())
    }
}

impl fmt::Debug for PermutationScheme {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl Serialize for PermutationScheme {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Every ordering of `0..d`, in lexicographic order.
pub fn all_orderings(dim: usize) -> Vec<PermutationScheme> {
    (0..dim)
        .permutations(dim)
        .map(|order| PermutationScheme { order })
        .collect()
}

/// Orderings of `0..d` up to reversal, lexicographic; `d!/2` of them for
/// `d >= 2`.
pub fn enumerate_schemes(dim: usize) -> Vec<PermutationScheme> {
    all_orderings(dim).into_iter().filter(PermutationScheme::is_canonical).collect()
}
