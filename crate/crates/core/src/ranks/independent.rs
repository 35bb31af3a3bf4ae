use std::sync::atomic::{AtomicUsize, Ordering};

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::sgp::{Closure, ElementSet, FiniteSemigroup, Witness, WitnessKind};

use super::{Exhausted, Meter, Method, RankId, RankReport, SearchBudget, Status};

/// Current independent set together with the closures needed to extend it:
/// `all = ⟨U⟩` and `without[i] = ⟨U \ {uᵢ}⟩`.
#[derive(Clone)]
struct Node {
    members: Vec<usize>,
    all: Closure,
    without: Vec<Closure>,
}

impl Node {
    fn root(m: usize) -> Self {
        Node {
            members: Vec::new(),
            all: Closure::new(m),
            without: Vec::new(),
        }
    }

    /// `U ∪ {y}` if it is still independent.
    fn extend(&self, s: &FiniteSemigroup, y: usize) -> Option<Node> {
        if self.all.contains(y) {
            return None;
        }
        let mut without = Vec::with_capacity(self.members.len() + 1);
        for (a, c) in self.members.iter().zip(&self.without) {
            let mut c = c.clone();
            c.insert(s, y);
            if c.contains(*a) {
                return None;
            }
            without.push(c);
        }
        without.push(self.all.clone());
        let mut all = self.all.clone();
        all.insert(s, y);
        let mut members = self.members.clone();
        members.push(y);
        Some(Node { members, all, without })
    }
}

struct Best {
    size: usize,
    set: Option<Vec<usize>>,
}

struct IndependentSearch<'a> {
    s: &'a FiniteSemigroup,
    require_generating: bool,
    meter: &'a Meter,
    /// Largest size recorded by any branch; branches only prune when they
    /// cannot reach it, so ties are still found and merged deterministically.
    global: AtomicUsize,
}

impl IndependentSearch<'_> {
    fn accepts(&self, node: &Node) -> bool {
        !self.require_generating || node.all.len() == self.s.size()
    }

    fn dfs(&self, node: &Node, best: &mut Best) -> Result<(), Exhausted> {
        self.meter.tick()?;
        let m = self.s.size();
        if node.members.len() > best.size && self.accepts(node) {
            best.size = node.members.len();
            best.set = Some(node.members.clone());
            self.global.fetch_max(best.size, Ordering::Relaxed);
        }
        let next = node.members.last().map_or(0, |&x| x + 1);
        let mut candidates = FixedBitSet::with_capacity(m);
        candidates.insert_range(next..);
        candidates.difference_with(node.all.bits());
        let mut count = candidates.count_ones(..);
        if self.require_generating && count > 0 {
            let mut reach = node.all.clone();
            reach.extend(self.s, candidates.ones());
            if reach.len() < m {
                return Ok(());
            }
        }
        for y in candidates.ones() {
            let bound = node.members.len() + count;
            if bound <= best.size || bound < self.global.load(Ordering::Relaxed) {
                return Ok(());
            }
            count -= 1;
            if let Some(child) = node.extend(self.s, y) {
                self.dfs(&child, best)?;
            }
        }
        Ok(())
    }
}

/// r₄ (or r₃ when `require_generating`) by depth-first search over
/// independent sets in canonical order.
///
/// Independence is inherited by subsets, so every independent set is reached
/// through its ascending prefixes. Children outside `⟨U⟩` are the only
/// candidates, and a branch is cut when it cannot grow past the best size.
/// A `seed` that satisfies the requirement gives an immediate bound if the
/// budget runs out.
/// Prunes the whole semigroup to an independent generating set: dropping a member
/// generated by the others never changes the closure.
fn irredundant_generating(s: &FiniteSemigroup) -> ElementSet {
    let mut u = s.full_set();
    for x in (0..s.size()).rev() {
        let rest = u.without(x);
        if s.closure(&rest).expect("same universe").contains(x) {
            u = rest;
        }
    }
    u
}

pub fn independent_set_search(
    s: &FiniteSemigroup,
    require_generating: bool,
    budget: SearchBudget,
    seed: Option<&ElementSet>,
) -> RankReport {
    let meter = Meter::new(budget);
    let m = s.size();
    let (rank, kind) = if require_generating {
        (RankId::Intermediate, WitnessKind::IndependentGeneratingSet)
    } else {
        (RankId::Upper, WitnessKind::IndependentSet)
    };
    let seed = seed
        .filter(|u| Witness::new(kind, (*u).clone()).holds(s).unwrap_or(false))
        .cloned();
    let search = IndependentSearch {
        s,
        require_generating,
        meter: &meter,
        global: AtomicUsize::new(0),
    };
    let root = Node::root(m);
    let branches: Vec<(Option<Vec<usize>>, bool)> = meter.install(|| {
        (0..m)
            .into_par_iter()
            .map(|x| {
                let mut best = Best { size: 0, set: None };
                let child = root.extend(s, x).expect("singletons are independent");
                let done = search.dfs(&child, &mut best).is_ok();
                (best.set, done)
            })
            .collect()
    });
    let exhausted = branches.iter().all(|(_, done)| *done);
    let fallback = (!exhausted).then(|| irredundant_generating(s));
    let mut best: Option<ElementSet> = None;
    let candidates = branches
        .into_iter()
        .filter_map(|(set, _)| set)
        .map(|v| s.element_set(v).expect("valid"))
        .chain(seed)
        .chain(fallback);
    for set in candidates {
        let better = match &best {
            None => true,
            Some(b) => set.len() > b.len() || (set.len() == b.len() && set < *b),
        };
        if better {
            best = Some(set);
        }
    }
    let (value, witness) = match best {
        Some(set) => (set.len(), Some(Witness::new(kind, set))),
        None => (0, None),
    };
    RankReport {
        rank,
        value,
        status: if exhausted { Status::Exact } else { Status::LowerBound },
        witness,
        method: Method::Search,
        elapsed: meter.elapsed(),
        certified_lower: None,
        note: (!exhausted).then(|| "budget exhausted".to_string()),
    }
}
