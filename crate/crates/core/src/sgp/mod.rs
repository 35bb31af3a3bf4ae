//! Generic finite-semigroup engine.
//!
//! A [`FiniteSemigroup`] is an indexed element universe `[0, m)` together with
//! its full Cayley table. Everything else in the crate (rank searches, the
//! theorem checklist) is phrased in terms of the predicates defined here.

mod cache;
mod set;

pub use cache::{read_cache, write_cache, CACHE_MAGIC};
pub use set::ElementSet;

use fixedbitset::FixedBitSet;
use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SgpError {
    #[error("element index {index} out of range for semigroup of size {size}")]
    InvalidElement { index: usize, size: usize },
    #[error("table has {entries} entries, expected {expected}")]
    TableShape { entries: usize, expected: usize },
    #[error("{labels} labels supplied for {size} elements")]
    LabelCount { labels: usize, size: usize },
    #[error("table is not associative: ({a}*{b})*{c} != {a}*({b}*{c})")]
    NotAssociative { a: usize, b: usize, c: usize },
    #[error("semigroup must have at least one element")]
    Empty,
    #[error("primality is only defined for nonempty subsets")]
    EmptySubset,
    #[error("subset belongs to a universe of size {found}, expected {expected}")]
    UniverseMismatch { found: usize, expected: usize },
    #[error("subset is not closed under multiplication")]
    NotClosed,
    #[error("cache: {0}")]
    Cache(String),
}

/// Whether to run the O(m³) associativity check when building from a table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AssociativityCheck {
    Verify,
    Skip,
}

/// Finite semigroup given by its Cayley table. Row is the left factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteSemigroup {
    size: usize,
    table: Vec<u32>,
    labels: Vec<String>,
}

impl FiniteSemigroup {
    /// Builds a semigroup from a row-major table, verifying associativity.
    pub fn new(table: Vec<u32>, labels: Vec<String>) -> Result<Self, SgpError> {
        Self::from_table(table, labels, AssociativityCheck::Verify)
    }

    pub fn from_table(
        table: Vec<u32>,
        labels: Vec<String>,
        check: AssociativityCheck,
    ) -> Result<Self, SgpError> {
        let size = labels.len();
        if size == 0 {
            return Err(SgpError::Empty);
        }
        if table.len() != size * size {
            return Err(SgpError::TableShape {
                entries: table.len(),
                expected: size * size,
            });
        }
        if let Some(&bad) = table.iter().find(|&&e| e as usize >= size) {
            return Err(SgpError::InvalidElement {
                index: bad as usize,
                size,
            });
        }
        let s = FiniteSemigroup { size, table, labels };
        if check == AssociativityCheck::Verify {
            s.check_associativity()?;
        }
        Ok(s)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of_label(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    pub fn table(&self) -> &[u32] {
        &self.table
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.size + b] as usize
    }

    pub fn check_associativity(&self) -> Result<(), SgpError> {
        let m = self.size;
        for a in 0..m {
            for b in 0..m {
                let ab = self.mul(a, b);
                for c in 0..m {
                    if self.mul(ab, c) != self.mul(a, self.mul(b, c)) {
                        return Err(SgpError::NotAssociative { a, b, c });
                    }
                }
            }
        }
        Ok(())
    }

    pub fn element_set<I: IntoIterator<Item = usize>>(&self, indices: I) -> Result<ElementSet, SgpError> {
        ElementSet::from_indices(self.size, indices)
    }

    pub fn empty_set(&self) -> ElementSet {
        ElementSet::empty(self.size)
    }

    pub fn full_set(&self) -> ElementSet {
        ElementSet::full(self.size)
    }

    fn check_set(&self, u: &ElementSet) -> Result<(), SgpError> {
        if u.universe() != self.size {
            return Err(SgpError::UniverseMismatch {
                found: u.universe(),
                expected: self.size,
            });
        }
        Ok(())
    }

    /// The subsemigroup generated by `u`. `⟨∅⟩ = ∅`.
    pub fn closure(&self, u: &ElementSet) -> Result<ElementSet, SgpError> {
        self.check_set(u)?;
        let mut state = Closure::new(self.size);
        state.extend(self, u.iter());
        Ok(state.into_set())
    }

    pub fn is_generating(&self, u: &ElementSet) -> Result<bool, SgpError> {
        Ok(self.closure(u)?.len() == self.size)
    }

    pub fn is_independent(&self, u: &ElementSet) -> Result<bool, SgpError> {
        self.check_set(u)?;
        Ok(self.dependent_member(u).is_none())
    }

    /// Some member of `u` lying in the subsemigroup generated by the others.
    pub fn dependent_member(&self, u: &ElementSet) -> Option<usize> {
        u.iter().find(|&a| {
            let mut state = Closure::new(self.size);
            state.extend(self, u.iter().filter(|&b| b != a));
            state.contains(a)
        })
    }

    pub fn is_idempotent(&self, a: usize) -> bool {
        self.mul(a, a) == a
    }

    pub fn idempotents(&self) -> ElementSet {
        let mut out = self.empty_set();
        for a in (0..self.size).filter(|&a| self.is_idempotent(a)) {
            out.insert(a);
        }
        out
    }

    pub fn is_band(&self) -> bool {
        (0..self.size).all(|a| self.is_idempotent(a))
    }

    /// `u` is prime when `ab ∈ u` forces `a ∈ u` or `b ∈ u`, i.e. the
    /// complement is closed under the product.
    pub fn is_prime_subset(&self, u: &ElementSet) -> Result<bool, SgpError> {
        self.check_set(u)?;
        if u.is_empty() {
            return Err(SgpError::EmptySubset);
        }
        let rest = u.complement();
        Ok(self.is_closed(&rest))
    }

    pub fn is_closed(&self, u: &ElementSet) -> bool {
        u.iter()
            .all(|a| u.iter().all(|b| u.contains(self.mul(a, b))))
    }

    pub fn is_decomposable(&self, a: usize) -> Result<bool, SgpError> {
        if a >= self.size {
            return Err(SgpError::InvalidElement { index: a, size: self.size });
        }
        Ok((0..self.size)
            .filter(|&b| b != a)
            .any(|b| (0..self.size).any(|c| c != a && self.mul(b, c) == a)))
    }

    /// All ordered pairs `(a, b)` with `ab = target`.
    pub fn factorizations(&self, target: usize) -> Vec<(usize, usize)> {
        let m = self.size;
        (0..m)
            .flat_map(|a| (0..m).map(move |b| (a, b)))
            .filter(|&(a, b)| self.mul(a, b) == target)
            .collect()
    }

    /// Factorizations of every element, indexed by product.
    pub fn factorization_index(&self) -> Vec<Vec<(u32, u32)>> {
        let m = self.size;
        let mut out = vec![Vec::new(); m];
        for a in 0..m {
            for b in 0..m {
                out[self.mul(a, b)].push((a as u32, b as u32));
            }
        }
        out
    }

    /// Restricts the table to a closed subset. Returns the subsemigroup and,
    /// for each of its elements, the index in `self`.
    pub fn restrict(&self, u: &ElementSet) -> Result<(FiniteSemigroup, Vec<usize>), SgpError> {
        self.check_set(u)?;
        if u.is_empty() {
            return Err(SgpError::Empty);
        }
        if !self.is_closed(u) {
            return Err(SgpError::NotClosed);
        }
        let members = u.to_vec();
        let mut position = vec![u32::MAX; self.size];
        for (k, &i) in members.iter().enumerate() {
            position[i] = k as u32;
        }
        let table = members
            .iter()
            .flat_map(|&a| members.iter().map(move |&b| (a, b)))
            .map(|(a, b)| position[self.mul(a, b)])
            .collect();
        let labels = members.iter().map(|&i| self.labels[i].clone()).collect();
        let sub = FiniteSemigroup {
            size: members.len(),
            table,
            labels,
        };
        Ok((sub, members))
    }

    /// Copy of `self` with a single table entry overwritten, no checks.
    pub fn with_entry(&self, a: usize, b: usize, value: usize) -> FiniteSemigroup {
        let mut out = self.clone();
        out.table[a * self.size + b] = value as u32;
        out
    }
}

/// Incrementally saturated subsemigroup.
///
/// `members[..]` lists the elements in insertion order; every pair among
/// them has its products inside the set once [`Closure::extend`] returns.
#[derive(Debug, Clone)]
pub struct Closure {
    set: FixedBitSet,
    members: Vec<u32>,
}

impl Closure {
    pub fn new(universe: usize) -> Self {
        Closure {
            set: FixedBitSet::with_capacity(universe),
            members: Vec::new(),
        }
    }

    pub fn contains(&self, a: usize) -> bool {
        self.set.contains(a)
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn bits(&self) -> &FixedBitSet {
        &self.set
    }

    pub fn into_set(self) -> ElementSet {
        ElementSet::from_bits(self.set)
    }

    pub fn to_set(&self) -> ElementSet {
        ElementSet::from_bits(self.set.clone())
    }

    /// Adds `new` and re-saturates.
    pub fn extend<I: IntoIterator<Item = usize>>(&mut self, s: &FiniteSemigroup, new: I) {
        let start = self.members.len();
        for x in new {
            if !self.set.put(x) {
                self.members.push(x as u32);
            }
        }
        self.saturate(s, start);
    }

    pub fn insert(&mut self, s: &FiniteSemigroup, x: usize) {
        self.extend(s, std::iter::once(x));
    }

    fn saturate(&mut self, s: &FiniteSemigroup, start: usize) {
        let m = s.size;
        let mut i = start;
        while i < self.members.len() {
            let x = self.members[i] as usize;
            let row = &s.table[x * m..(x + 1) * m];
            let mut j = 0;
            while j <= i {
                let y = self.members[j] as usize;
                let xy = row[y];
                if !self.set.put(xy as usize) {
                    self.members.push(xy);
                }
                let yx = s.table[y * m + x];
                if !self.set.put(yx as usize) {
                    self.members.push(yx);
                }
                j += 1;
            }
            i += 1;
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum WitnessKind {
    GeneratingSet,
    IndependentSet,
    IndependentGeneratingSet,
    PrimeSubset,
    ProperSubsemigroup,
    /// A subset that is not independent; certifies an upper bound on r₁.
    DependentSet,
}

/// A subset together with the property it is claimed to have.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub kind: WitnessKind,
    pub elements: ElementSet,
}

impl Witness {
    pub fn new(kind: WitnessKind, elements: ElementSet) -> Self {
        Witness { kind, elements }
    }

    /// Re-checks the claimed property against `s`.
    pub fn holds(&self, s: &FiniteSemigroup) -> Result<bool, SgpError> {
        let u = &self.elements;
        Ok(match self.kind {
            WitnessKind::GeneratingSet => s.is_generating(u)?,
            WitnessKind::IndependentSet => s.is_independent(u)?,
            WitnessKind::IndependentGeneratingSet => s.is_independent(u)? && s.is_generating(u)?,
            WitnessKind::PrimeSubset => s.is_prime_subset(u)?,
            WitnessKind::ProperSubsemigroup => {
                s.check_set(u)?;
                u.len() < s.size() && s.is_closed(u)
            }
            WitnessKind::DependentSet => !s.is_independent(u)?,
        })
    }

    pub fn labels(&self, s: &FiniteSemigroup) -> Vec<String> {
        self.elements.iter().map(|i| s.label(i).to_string()).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Right-zero semigroup on `m` elements: `xy = y`.
    fn right_zero(m: usize) -> FiniteSemigroup {
        let table = (0..m).flat_map(|_| 0..m as u32).collect();
        let labels = (0..m).map(|i| format!("r{i}")).collect();
        FiniteSemigroup::new(table, labels).unwrap()
    }

    /// Cyclic group Z_m written multiplicatively.
    fn cyclic(m: usize) -> FiniteSemigroup {
        let table = (0..m)
            .flat_map(|a| (0..m).map(move |b| ((a + b) % m) as u32))
            .collect();
        let labels = (0..m).map(|i| format!("c{i}")).collect();
        FiniteSemigroup::new(table, labels).unwrap()
    }

    #[test]
    fn closure_of_empty_set_is_empty() {
        let s = cyclic(5);
        assert!(s.closure(&s.empty_set()).unwrap().is_empty());
    }

    #[test]
    fn generator_of_cyclic_group_generates() {
        let s = cyclic(6);
        let u = s.element_set([1]).unwrap();
        assert!(s.is_generating(&u).unwrap());
        let u = s.element_set([2]).unwrap();
        assert_eq!(s.closure(&u).unwrap().to_vec(), vec![0, 2, 4]);
    }

    #[test]
    fn element_and_its_square_are_dependent() {
        let s = cyclic(5);
        let u = s.element_set([1, 2]).unwrap();
        assert!(!s.is_independent(&u).unwrap());
        assert!(s.is_independent(&s.element_set([3]).unwrap()).unwrap());
        assert!(s.is_independent(&s.empty_set()).unwrap());
    }

    #[test]
    fn right_zero_semigroup_is_a_band() {
        let s = right_zero(2);
        assert!(s.is_band());
        assert_eq!(s.idempotents().len(), 2);
        assert!(!cyclic(3).is_band());
    }

    #[test]
    fn non_associative_table_is_rejected() {
        // a*b = a + 1 on Z_3 is not associative
        let table = (0..3)
            .flat_map(|a| (0..3).map(move |_| ((a + 1) % 3) as u32))
            .collect();
        let labels = (0..3).map(|i| i.to_string()).collect();
        assert!(matches!(
            FiniteSemigroup::new(table, labels),
            Err(SgpError::NotAssociative { .. })
        ));
    }

    #[test]
    fn out_of_range_entries_are_rejected() {
        let err = FiniteSemigroup::from_table(vec![0, 1, 2, 0], vec!["a".into(), "b".into()], AssociativityCheck::Skip);
        assert_eq!(err, Err(SgpError::InvalidElement { index: 2, size: 2 }));
    }

    #[test]
    fn prime_subset_requires_nonempty_input() {
        let s = cyclic(3);
        assert_eq!(s.is_prime_subset(&s.empty_set()), Err(SgpError::EmptySubset));
    }

    #[test]
    fn identity_of_group_is_decomposable_but_not_of_trivial_group() {
        assert!(cyclic(3).is_decomposable(0).unwrap());
        assert!(!cyclic(1).is_decomposable(0).unwrap());
        assert!(cyclic(1).is_decomposable(1).is_err());
    }

    #[test]
    fn restriction_keeps_products() {
        let s = cyclic(6);
        let u = s.element_set([0, 2, 4]).unwrap();
        let (sub, map) = s.restrict(&u).unwrap();
        assert_eq!(sub.size(), 3);
        assert_eq!(map, vec![0, 2, 4]);
        assert_eq!(map[sub.mul(1, 2)], s.mul(2, 4));
        assert_eq!(s.restrict(&s.element_set([1]).unwrap()).unwrap_err(), SgpError::NotClosed);
    }

    #[test]
    fn incremental_closure_matches_batch_closure() {
        let s = cyclic(12);
        let mut c = Closure::new(12);
        c.insert(&s, 4);
        assert_eq!(c.len(), 3);
        c.insert(&s, 6);
        let batch = s.closure(&s.element_set([4, 6]).unwrap()).unwrap();
        assert_eq!(c.to_set(), batch);
    }
}
