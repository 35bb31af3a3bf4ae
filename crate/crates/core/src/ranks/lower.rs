use std::sync::atomic::{AtomicUsize, Ordering};

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::affine::{build_cayley, AffMap, SupportKind, Universe};
use crate::brandt::{build_brandt, symmetric_group};
use crate::sgp::{Closure, ElementSet, FiniteSemigroup, Witness, WitnessKind};

use super::{Exhausted, Meter, Method, RankError, RankId, RankReport, SearchBudget, Status};

/// A family of prime subsets, one grown greedily around each element and
/// reduced to the inclusion-minimal ones.
///
/// Every generating set meets every prime subset, since the complement of a
/// prime subset is a proper subsemigroup.
pub fn prime_cover(s: &FiniteSemigroup) -> Vec<ElementSet> {
    let fac = s.factorization_index();
    let mut primes: Vec<ElementSet> = (0..s.size()).map(|x| grow_prime(s, &fac, x)).collect();
    primes.sort_by_key(|p| (p.len(), p.clone()));
    primes.dedup();
    let mut minimal: Vec<ElementSet> = Vec::new();
    for p in primes {
        if !minimal.iter().any(|q| q.is_subset(&p)) {
            minimal.push(p);
        }
    }
    minimal
}

fn grow_prime(s: &FiniteSemigroup, fac: &[Vec<(u32, u32)>], seed: usize) -> ElementSet {
    let mut set = s.empty_set();
    let mut queue = vec![seed];
    set.insert(seed);
    while let Some(u) = queue.pop() {
        for &(a, b) in &fac[u] {
            let (a, b) = (a as usize, b as usize);
            if !set.contains(a) && !set.contains(b) {
                // evict the factor with fewer factorizations of its own
                let pick = if fac[a].len() <= fac[b].len() { a } else { b };
                set.insert(pick);
                queue.push(pick);
            }
        }
    }
    set
}

/// A generating set found greedily by largest closure gain, then pruned of
/// redundant members.
fn greedy_generating(s: &FiniteSemigroup) -> ElementSet {
    let m = s.size();
    let mut closure = Closure::new(m);
    let mut chosen = Vec::new();
    while closure.len() < m {
        let best = (0..m)
            .filter(|&x| !closure.contains(x))
            .max_by_key(|&x| {
                let mut c = closure.clone();
                c.insert(s, x);
                (c.len(), std::cmp::Reverse(x))
            })
            .expect("closure incomplete");
        closure.insert(s, best);
        chosen.push(best);
    }
    let mut set = s.element_set(chosen.iter().copied()).expect("valid");
    for x in chosen {
        let without = set.without(x);
        if s.is_generating(&without).expect("same universe") {
            set = without;
        }
    }
    set
}

struct LowerSearch<'a> {
    s: &'a FiniteSemigroup,
    primes: Vec<FixedBitSet>,
    meter: &'a Meter,
}

impl LowerSearch<'_> {
    /// Lexicographically first generating set of size `k` whose members are
    /// each outside the closure of the smaller ones.
    fn level(&self, k: usize) -> Result<Option<ElementSet>, Exhausted> {
        let m = self.s.size();
        let found_first = AtomicUsize::new(usize::MAX);
        let results: Vec<Result<Option<Vec<usize>>, Exhausted>> = self.meter.install(|| {
            (0..m)
                .into_par_iter()
                .map(|x| {
                    if x > found_first.load(Ordering::Relaxed) {
                        return Ok(None);
                    }
                    let mut closure = Closure::new(m);
                    closure.insert(self.s, x);
                    let mut chosen = vec![x];
                    let hit = self.dfs(&mut chosen, &closure, k)?;
                    if hit {
                        found_first.fetch_min(x, Ordering::Relaxed);
                        Ok(Some(chosen))
                    } else {
                        Ok(None)
                    }
                })
                .collect()
        });
        // A branch may have been cut short after a smaller branch succeeded;
        // only the smallest successful branch matters.
        for r in results {
            match r {
                Ok(Some(set)) => return Ok(Some(self.s.element_set(set).expect("valid"))),
                Ok(None) => {}
                Err(Exhausted) => return Err(Exhausted),
            }
        }
        Ok(None)
    }

    fn dfs(&self, chosen: &mut Vec<usize>, closure: &Closure, k: usize) -> Result<bool, Exhausted> {
        self.meter.tick()?;
        let m = self.s.size();
        if chosen.len() == k {
            return Ok(closure.len() == m);
        }
        let remaining = k - chosen.len();
        let next = chosen.last().map_or(0, |&x| x + 1);
        let mut available = FixedBitSet::with_capacity(m);
        available.insert_range(next..);
        available.difference_with(closure.bits());
        if available.count_ones(..) < remaining {
            return Ok(false);
        }
        let mut candidates = available.clone();
        let mut packed = FixedBitSet::with_capacity(m);
        let mut packing = 0;
        for p in &self.primes {
            if chosen.iter().any(|&c| p.contains(c)) {
                continue;
            }
            let mut reach = p.clone();
            reach.intersect_with(&available);
            if reach.is_clear() {
                return Ok(false);
            }
            if remaining == 1 {
                candidates.intersect_with(&reach);
            } else if reach.is_disjoint(&packed) {
                packed.union_with(&reach);
                packing += 1;
                if packing > remaining {
                    return Ok(false);
                }
            }
        }
        for y in candidates.ones() {
            // not enough candidates left after y to fill the set
            if m - y < remaining {
                break;
            }
            let mut child = closure.clone();
            child.insert(self.s, y);
            chosen.push(y);
            if self.dfs(chosen, &child, k)? {
                return Ok(true);
            }
            chosen.pop();
        }
        Ok(false)
    }
}

/// r₂ by iterative deepening over subset size.
///
/// Minimum generating sets are independent, so only subsets whose members
/// lie outside the closure of the preceding ones are enumerated; subsets
/// that cannot meet every set of [`prime_cover`] are pruned. When the budget
/// runs out the report carries the best generating set found as an upper
/// bound together with the largest size already refuted.
pub fn lower_rank(s: &FiniteSemigroup, budget: SearchBudget, seed: Option<&ElementSet>) -> RankReport {
    let meter = Meter::new(budget);
    let mut upper = greedy_generating(s);
    if let Some(seed) = seed {
        if seed.len() < upper.len() && s.is_generating(seed).unwrap_or(false) {
            upper = seed.clone();
        }
    }
    let search = LowerSearch {
        s,
        primes: prime_cover(s).iter().map(|p| p.bits().clone()).collect(),
        meter: &meter,
    };
    for k in 1..=upper.len() {
        match search.level(k) {
            Ok(Some(set)) => {
                return RankReport {
                    rank: RankId::Lower,
                    value: k,
                    status: Status::Exact,
                    witness: Some(Witness::new(WitnessKind::GeneratingSet, set)),
                    method: Method::Search,
                    elapsed: meter.elapsed(),
                    certified_lower: None,
                    note: None,
                };
            }
            Ok(None) => {}
            Err(Exhausted) => {
                return RankReport {
                    rank: RankId::Lower,
                    value: upper.len(),
                    status: Status::UpperBound,
                    witness: Some(Witness::new(WitnessKind::GeneratingSet, upper)),
                    method: Method::Search,
                    elapsed: meter.elapsed(),
                    certified_lower: Some(k),
                    note: Some("budget exhausted".to_string()),
                };
            }
        }
    }
    unreachable!("a generating set of size {} exists", upper.len())
}

/// r₂(A⁺(Bₙ)) by replaying the structural argument on the actual table:
///
/// 1. a product of nonzero maps is an `n`-support map only if every factor is,
///    so a generating set must contain a generating set of the
///    `n`-support-plus-zero part;
/// 2. removing all singleton-support maps, or all constants, leaves a
///    non-generating set;
/// 3. the `n`-support-plus-zero part is isomorphic to `B(Sₙ, n)`, whose
///    lower rank is found by exhaustive search;
/// 4. the explicit witness `Q` generates and has size `r₂(B(Sₙ, n)) + 2`.
///
/// For `n ≥ 4` the tables are out of reach and the closed formula `n + 3`
/// is reported with [`Method::Formula`].
pub fn certified_lower_rank_aplus(n: usize, budget: SearchBudget) -> Result<RankReport, RankError> {
    let meter = Meter::new(budget);
    if n < 2 {
        return Err(RankError::Domain("certified lower rank needs n ≥ 2".into()));
    }
    if n > crate::affine::DEFAULT_MAX_DEGREE {
        return Ok(RankReport {
            rank: RankId::Lower,
            value: n + 3,
            status: Status::Exact,
            witness: None,
            method: Method::Formula,
            elapsed: meter.elapsed(),
            certified_lower: None,
            note: Some("closed formula; table not materialized".into()),
        });
    }
    let fail = |what: String| Err(RankError::CertificationFailure(what));
    let a = build_cayley(n, Universe::Aplus)?;
    let s = a.semigroup();
    let m = s.size();
    let is_ns = |i: usize| a.element(i).kind() == SupportKind::NSupport;

    // (1)
    for f in 1..m {
        for g in 1..m {
            let h = s.mul(f, g);
            if h != a.zero() && is_ns(h) != (is_ns(f) && is_ns(g)) {
                return fail(format!("n-support propagation fails at {} ∘ {}", s.label(f), s.label(g)));
            }
        }
    }
    // (2)
    for kind in [SupportKind::Singleton, SupportKind::Full] {
        let rest = a.of_kind(kind).complement();
        if s.is_generating(&rest)? {
            return fail(format!("elements without {kind:?} maps still generate"));
        }
    }
    // (3)
    let sym = symmetric_group(n)?;
    let brandt = build_brandt(sym.table(), n)?;
    for f in a.elements().iter().filter(|f| matches!(f, AffMap::Zero | AffMap::NSupport { .. })) {
        for g in a.elements().iter().filter(|f| matches!(f, AffMap::Zero | AffMap::NSupport { .. })) {
            let lhs = crate::affine::to_brandt(&f.compose(g)?, &sym)?;
            let rhs = crate::brandt::brandt_product(
                n,
                sym.table(),
                crate::affine::to_brandt(f, &sym)?,
                crate::affine::to_brandt(g, &sym)?,
            )?;
            if lhs != rhs {
                return fail(format!("isomorphism onto B(S_{n}, {n}) fails at {f} ∘ {g}"));
            }
        }
    }
    let inner = lower_rank(brandt.semigroup(), budget, None);
    if !inner.is_exact() {
        return fail(format!("r₂(B(S_{n}, {n})) not exhausted within budget"));
    }
    // (4)
    let q = crate::verify::witness_q(n)?;
    let q_set = a
        .set_of(q.iter())
        .ok_or_else(|| RankError::CertificationFailure("witness Q outside A⁺(Bₙ)".into()))?;
    if !s.is_generating(&q_set)? {
        return fail("witness Q does not generate".into());
    }
    let value = inner.value + 2;
    if q_set.len() != value {
        return fail(format!("|Q| = {} but the lower bound is {value}", q_set.len()));
    }
    Ok(RankReport {
        rank: RankId::Lower,
        value,
        status: Status::Exact,
        witness: Some(Witness::new(WitnessKind::GeneratingSet, q_set)),
        method: Method::TheoremCertified,
        elapsed: meter.elapsed(),
        certified_lower: None,
        note: Some(format!("r2(B(S_{n},{n})) = {} by exhaustive search", inner.value)),
    })
}
