use std::cmp::Ordering;
use std::fmt;

use fixedbitset::FixedBitSet;

use super::SgpError;

/// A subset of the element universe `[0, m)` of a finite semigroup.
///
/// Ordering compares the ascending index sequences lexicographically, which is
/// the tie-break used for every reported witness.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct ElementSet {
    bits: FixedBitSet,
}

impl ElementSet {
    pub fn empty(universe: usize) -> Self {
        ElementSet {
            bits: FixedBitSet::with_capacity(universe),
        }
    }

    pub fn full(universe: usize) -> Self {
        let mut bits = FixedBitSet::with_capacity(universe);
        bits.insert_range(..);
        ElementSet { bits }
    }

    pub fn from_indices<I>(universe: usize, indices: I) -> Result<Self, SgpError>
    where
        I: IntoIterator<Item = usize>,
    {
        let mut set = ElementSet::empty(universe);
        for i in indices {
            if i >= universe {
                return Err(SgpError::InvalidElement { index: i, size: universe });
            }
            set.bits.insert(i);
        }
        Ok(set)
    }

    pub(crate) fn from_bits(bits: FixedBitSet) -> Self {
        ElementSet { bits }
    }

    pub(crate) fn bits(&self) -> &FixedBitSet {
        &self.bits
    }

    /// Size of the owning semigroup.
    pub fn universe(&self) -> usize {
        self.bits.len()
    }

    pub fn len(&self) -> usize {
        self.bits.count_ones(..)
    }

    pub fn is_empty(&self) -> bool {
        self.bits.is_clear()
    }

    pub fn contains(&self, i: usize) -> bool {
        self.bits.contains(i)
    }

    /// Panics if `i` is outside the universe.
    pub fn insert(&mut self, i: usize) -> bool {
        !self.bits.put(i)
    }

    pub fn remove(&mut self, i: usize) {
        self.bits.set(i, false);
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.bits.ones()
    }

    pub fn to_vec(&self) -> Vec<usize> {
        self.iter().collect()
    }

    pub fn first(&self) -> Option<usize> {
        self.iter().next()
    }

    pub fn complement(&self) -> ElementSet {
        let mut bits = self.bits.clone();
        bits.toggle_range(..);
        ElementSet { bits }
    }

    pub fn union(&self, other: &ElementSet) -> ElementSet {
        let mut bits = self.bits.clone();
        bits.union_with(&other.bits);
        ElementSet { bits }
    }

    pub fn difference(&self, other: &ElementSet) -> ElementSet {
        let mut bits = self.bits.clone();
        bits.difference_with(&other.bits);
        ElementSet { bits }
    }

    pub fn is_subset(&self, other: &ElementSet) -> bool {
        self.bits.is_subset(&other.bits)
    }

    pub fn is_disjoint(&self, other: &ElementSet) -> bool {
        self.bits.is_disjoint(&other.bits)
    }

    pub fn without(&self, i: usize) -> ElementSet {
        let mut out = self.clone();
        out.remove(i);
        out
    }
}

impl Ord for ElementSet {
    fn cmp(&self, other: &Self) -> Ordering {
        self.iter().cmp(other.iter())
    }
}

impl PartialOrd for ElementSet {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Debug for ElementSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lexicographic_order_on_sorted_indices() {
        let a = ElementSet::from_indices(10, [1, 5]).unwrap();
        let b = ElementSet::from_indices(10, [1, 2, 9]).unwrap();
        let c = ElementSet::from_indices(10, [1]).unwrap();
        assert!(b < a);
        assert!(c < b);
    }

    #[test]
    fn out_of_range_index_is_rejected() {
        assert_eq!(
            ElementSet::from_indices(3, [0, 3]),
            Err(SgpError::InvalidElement { index: 3, size: 3 })
        );
    }

    #[test]
    fn complement_stays_inside_universe() {
        let s = ElementSet::from_indices(70, [0, 65]).unwrap();
        let c = s.complement();
        assert_eq!(c.len(), 68);
        assert!(!c.contains(65));
        assert_eq!(c.universe(), 70);
    }
}
