use std::fmt;

use serde::{Serialize, Serializer};

/// A set of colors drawn from `0..=MAX_DIM`, stored as a bitmask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct ColorSet(u16);

impl ColorSet {
    pub const EMPTY: ColorSet = ColorSet(0);

    /// `{0, 1, ..., dim}`.
    pub fn full(dim: usize) -> Self {
        ColorSet(((1u32 << (dim + 1)) - 1) as u16)
    }

    pub fn single(color: usize) -> Self {
        ColorSet(1 << color)
    }

    pub fn from_bits(bits: u16) -> Self {
        ColorSet(bits)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn contains(self, color: usize) -> bool {
        color < 16 && self.0 & (1 << color) != 0
    }

    pub fn with(self, color: usize) -> Self {
        ColorSet(self.0 | (1 << color))
    }

    pub fn without(self, color: usize) -> Self {
        ColorSet(self.0 & !(1 << color))
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: ColorSet) -> bool {
        self.0 & !other.0 == 0
    }

    /// Complement inside `{0..=dim}`.
    pub fn complement(self, dim: usize) -> Self {
        ColorSet(Self::full(dim).0 & !self.0)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 15 - self.0.leading_zeros() as usize)
    }

    pub fn iter(self) -> impl Iterator<Item = usize> {
        (0..16).filter(move |&c| self.contains(c))
    }

    /// All subsets of `{0..=dim}` with exactly `size` colors, in increasing
    /// bitmask order.
    pub fn subsets_of_size(dim: usize, size: usize) -> impl Iterator<Item = ColorSet> {
        (0..=Self::full(dim).0)
            .map(ColorSet)
            .filter(move |s| s.len() == size)
    }
}

impl<const N: usize> From<[usize; N]> for ColorSet {
    fn from(colors: [usize; N]) -> Self {
        colors.into_iter().collect()
    }
}

impl From<&[usize]> for ColorSet {
    fn from(colors: &[usize]) -> Self {
        colors.iter().copied().collect()
    }
}

impl FromIterator<usize> for ColorSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(ColorSet::EMPTY, ColorSet::with)
    }
}

/// Concatenated digits, e.g. `014`.
impl fmt::Display for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in self.iter() {
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ColorSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for ColorSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}
