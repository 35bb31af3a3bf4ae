use std::sync::atomic::{AtomicUsize, Ordering};

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::sgp::{ElementSet, FiniteSemigroup, Witness, WitnessKind};

use super::{Exhausted, Meter, Method, RankId, RankReport, SearchBudget, Status};

/// Branch-and-bound over prime subsets.
///
/// A node is a pair `(U, X)`: elements forced into the prime subset and
/// elements forbidden from it. A violation is a product `ab ∈ U` with
/// `a, b ∉ U`; one of `a`, `b` must join `U`. Violations with one factor in
/// `X` force the other; otherwise the search branches on "add `a`" versus
/// "forbid `a`, add `b`".
struct PrimeSearch<'a> {
    s: &'a FiniteSemigroup,
    fac: Vec<Vec<(u32, u32)>>,
    meter: &'a Meter,
}

enum Scan {
    Prime,
    Dead,
    Forced(Vec<usize>),
    Branch { a: usize, b: usize, matching: usize },
}

impl PrimeSearch<'_> {
    fn scan(&self, inside: &FixedBitSet, forbidden: &FixedBitSet) -> Scan {
        let mut forced = Vec::new();
        let mut branch = None;
        let mut used = FixedBitSet::with_capacity(self.s.size());
        let mut matching = 0;
        for u in inside.ones() {
            for &(a, b) in &self.fac[u] {
                let (a, b) = (a as usize, b as usize);
                if inside.contains(a) || inside.contains(b) {
                    continue;
                }
                let (fa, fb) = (forbidden.contains(a), forbidden.contains(b));
                if a == b || fb {
                    if fa {
                        return Scan::Dead;
                    }
                    forced.push(a);
                } else if fa {
                    forced.push(b);
                } else if forced.is_empty() {
                    branch.get_or_insert((a, b));
                    if !used.contains(a) && !used.contains(b) {
                        used.insert(a);
                        used.insert(b);
                        matching += 1;
                    }
                }
            }
        }
        if !forced.is_empty() {
            Scan::Forced(forced)
        } else if let Some((a, b)) = branch {
            Scan::Branch { a, b, matching }
        } else {
            Scan::Prime
        }
    }

    /// Smallest prime `U ⊇ inside` avoiding `forbidden` with `|U| ≤ limit`.
    ///
    /// `limit` tightens as sets are found; with `first_only` the search stops
    /// at the first hit.
    fn solve(
        &self,
        mut inside: FixedBitSet,
        mut forbidden: FixedBitSet,
        limit: &mut usize,
        shared: Option<&AtomicUsize>,
        first_only: bool,
        found: &mut Option<FixedBitSet>,
    ) -> Result<(), Exhausted> {
        self.meter.tick()?;
        if let Some(g) = shared {
            *limit = (*limit).min(g.load(Ordering::Relaxed).saturating_sub(1));
        }
        loop {
            let size = inside.count_ones(..);
            if size > *limit {
                return Ok(());
            }
            match self.scan(&inside, &forbidden) {
                Scan::Dead => return Ok(()),
                Scan::Forced(xs) => {
                    for x in xs {
                        inside.insert(x);
                    }
                }
                Scan::Prime => {
                    *limit = size - 1;
                    if let Some(g) = shared {
                        g.fetch_min(size, Ordering::Relaxed);
                    }
                    *found = Some(inside);
                    return Ok(());
                }
                Scan::Branch { a, b, matching } => {
                    if size + matching > *limit {
                        return Ok(());
                    }
                    let mut left = inside.clone();
                    left.insert(a);
                    self.solve(left, forbidden.clone(), limit, shared, first_only, found)?;
                    if first_only && found.is_some() {
                        return Ok(());
                    }
                    forbidden.insert(a);
                    inside.insert(b);
                    return self.solve(inside, forbidden, limit, shared, first_only, found);
                }
            }
        }
    }

    fn seeded(&self, prefix: &[usize], next: usize) -> (FixedBitSet, FixedBitSet) {
        let m = self.s.size();
        let mut inside = FixedBitSet::with_capacity(m);
        let mut forbidden = FixedBitSet::with_capacity(m);
        forbidden.insert_range(..next);
        for &p in prefix {
            inside.insert(p);
            forbidden.set(p, false);
        }
        inside.insert(next);
        (inside, forbidden)
    }

    /// Size of a smallest prime subset, partitioned by the smallest member.
    /// The flag is false when the budget ran out; the set is then only the
    /// best found.
    fn minimum(&self) -> (FixedBitSet, bool) {
        let m = self.s.size();
        // the complement of a single idempotent is prime
        let e = (0..m)
            .find(|&e| self.s.is_idempotent(e))
            .expect("finite semigroups have idempotents");
        let mut best = FixedBitSet::with_capacity(m);
        best.insert_range(..);
        best.set(e, false);
        let global = AtomicUsize::new(m - 1);
        let results: Vec<(Option<FixedBitSet>, bool)> = self.meter.install(|| {
            (0..m)
                .into_par_iter()
                .map(|x| {
                    let (inside, forbidden) = self.seeded(&[], x);
                    let mut limit = global.load(Ordering::Relaxed);
                    let mut found = None;
                    let done = self
                        .solve(inside, forbidden, &mut limit, Some(&global), false, &mut found)
                        .is_ok();
                    (found, done)
                })
                .collect()
        });
        let mut complete = true;
        for (found, done) in results {
            complete &= done;
            if let Some(set) = found {
                if set.count_ones(..) < best.count_ones(..) {
                    best = set;
                }
            }
        }
        (best, complete)
    }

    /// Lexicographically smallest prime subset of the given size, built one
    /// member at a time.
    fn lex_min(&self, size: usize, start: FixedBitSet) -> Result<Vec<usize>, Exhausted> {
        let m = self.s.size();
        let mut prefix: Vec<usize> = Vec::new();
        let mut known: Vec<usize> = start.ones().collect();
        loop {
            if prefix.len() == size {
                return Ok(prefix);
            }
            let lo = prefix.last().map_or(0, |&x| x + 1);
            // `known` extends `prefix`, so its next member is feasible
            let hi = known[prefix.len()];
            let mut chosen = hi;
            for y in lo..hi.min(m) {
                let (inside, forbidden) = self.seeded(&prefix, y);
                let mut limit = size;
                let mut found = None;
                self.solve(inside, forbidden, &mut limit, None, true, &mut found)?;
                if let Some(set) = found {
                    chosen = y;
                    known = set.ones().collect();
                    break;
                }
            }
            prefix.push(chosen);
        }
    }
}

fn search_prime(s: &FiniteSemigroup, meter: &Meter) -> (ElementSet, bool) {
    let search = PrimeSearch {
        s,
        fac: s.factorization_index(),
        meter,
    };
    let (best, complete) = search.minimum();
    if !complete {
        return (ElementSet::from_bits(best), false);
    }
    let size = best.count_ones(..);
    match search.lex_min(size, best.clone()) {
        Ok(v) => (s.element_set(v).expect("valid"), true),
        // the size is settled; only the tie-break is missing
        Err(Exhausted) => (ElementSet::from_bits(best), true),
    }
}

/// Smallest prime subset by violation branching.
///
/// Reports `value = |U|` with the lexicographically smallest optimal `U`.
pub fn smallest_prime_subset(s: &FiniteSemigroup, budget: SearchBudget) -> RankReport {
    let meter = Meter::new(budget);
    let m = s.size();
    let (set, exact) = if m < 2 {
        (s.full_set(), true)
    } else {
        search_prime(s, &meter)
    };
    let status = if exact { Status::Exact } else { Status::UpperBound };
    RankReport {
        rank: RankId::PrimeSubset,
        value: set.len(),
        status,
        witness: Some(Witness::new(WitnessKind::PrimeSubset, set)),
        method: Method::Search,
        elapsed: meter.elapsed(),
        certified_lower: None,
        note: (!exact).then(|| "budget exhausted".to_string()),
    }
}

/// r₅ = `|V| + 1` for a largest proper subsemigroup `V`, the complement of a
/// smallest prime subset.
pub fn large_rank(s: &FiniteSemigroup, budget: SearchBudget) -> RankReport {
    let m = s.size();
    if m == 1 {
        return RankReport {
            rank: RankId::Large,
            value: 1,
            status: Status::Exact,
            witness: None,
            method: Method::Formula,
            elapsed: Default::default(),
            certified_lower: None,
            note: Some("trivial semigroup: r5 = 1 by convention".into()),
        };
    }
    let prime = smallest_prime_subset(s, budget);
    let witness = prime
        .witness
        .as_ref()
        .map(|w| Witness::new(WitnessKind::ProperSubsemigroup, w.elements.complement()));
    RankReport {
        rank: RankId::Large,
        value: m - prime.value + 1,
        status: match prime.status {
            Status::Exact => Status::Exact,
            _ => Status::LowerBound,
        },
        witness,
        method: Method::Search,
        elapsed: prime.elapsed,
        certified_lower: None,
        note: prime.note,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic(m: usize) -> FiniteSemigroup {
        let table = (0..m)
            .flat_map(|a| (0..m).map(move |b| ((a + b) % m) as u32))
            .collect();
        FiniteSemigroup::new(table, (0..m).map(|i| format!("c{i}")).collect()).unwrap()
    }

    fn brute_force_smallest_prime(s: &FiniteSemigroup) -> usize {
        let m = s.size();
        (1u32..(1 << m))
            .map(|mask| s.element_set((0..m).filter(|i| mask >> i & 1 == 1)).unwrap())
            .filter(|u| s.is_prime_subset(u).unwrap())
            .map(|u| u.len())
            .min()
            .unwrap()
    }

    #[test]
    fn cyclic_groups_against_brute_force() {
        for m in 2..=8 {
            let s = cyclic(m);
            let r = smallest_prime_subset(&s, SearchBudget::default());
            assert_eq!(r.value, brute_force_smallest_prime(&s), "Z_{m}");
            assert!(r.witness.unwrap().holds(&s).unwrap());
        }
    }

    #[test]
    fn z6_largest_subsemigroup_is_index_two() {
        // the largest proper subgroup of Z_6 is {0,2,4}
        let r = large_rank(&cyclic(6), SearchBudget::default());
        assert_eq!((r.value, r.status), (4, Status::Exact));
    }

    #[test]
    fn trivial_semigroup() {
        assert_eq!(large_rank(&cyclic(1), SearchBudget::default()).value, 1);
    }
}
