use std::sync::OnceLock;

use proptest::prelude::*;
use semigroup_ranks::affine::{build_cayley, Universe};
use semigroup_ranks::brandt::{build_brandt, symmetric_group, GroupTable};
use semigroup_ranks::sgp::{ElementSet, FiniteSemigroup};

fn pool() -> &'static [FiniteSemigroup] {
    static POOL: OnceLock<Vec<FiniteSemigroup>> = OnceLock::new();
    POOL.get_or_init(|| {
        let s3 = symmetric_group(3).unwrap();
        vec![
            build_cayley(2, Universe::Aplus).unwrap().semigroup().clone(),
            build_cayley(2, Universe::Aff).unwrap().semigroup().clone(),
            build_cayley(3, Universe::Aff).unwrap().semigroup().clone(),
            build_brandt(s3.table(), 2).unwrap().semigroup().clone(),
            build_brandt(&GroupTable::trivial(), 5).unwrap().semigroup().clone(),
        ]
    })
}

/// The members of `s` whose bit is set in both masks.
fn subset(mask: u64, keep: u64, s: &FiniteSemigroup) -> ElementSet {
    let bits = mask & keep;
    s.element_set((0..s.size()).filter(|&i| bits >> i & 1 == 1)).unwrap()
}

fn sparse() -> impl Strategy<Value = u64> {
    (any::<u64>(), any::<u64>(), any::<u64>()).prop_map(|(a, b, c)| a & b & c)
}

fn make_independent(s: &FiniteSemigroup, mut u: ElementSet) -> ElementSet {
    while let Some(x) = s.dependent_member(&u) {
        u.remove(x);
    }
    u
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]

    #[test]
    fn closure_is_extensive_and_idempotent(k in 0..5usize, mask in any::<u64>(), keep in sparse()) {
        let s = &pool()[k];
        let u = subset(mask, keep, s);
        let c = s.closure(&u).unwrap();
        prop_assert!(u.is_subset(&c));
        prop_assert_eq!(s.closure(&c).unwrap(), c.clone());
        prop_assert!(s.is_closed(&c));
    }

    #[test]
    fn closure_is_monotone(k in 0..5usize, a in sparse(), b in any::<u64>()) {
        let s = &pool()[k];
        let small = subset(a, u64::MAX, s);
        let large = small.union(&subset(b, u64::MAX, s));
        prop_assert!(s.closure(&small).unwrap().is_subset(&s.closure(&large).unwrap()));
    }

    #[test]
    fn independence_is_hereditary(k in 0..5usize, mask in any::<u64>(), drop in any::<u64>()) {
        let s = &pool()[k];
        let u = make_independent(s, subset(mask, u64::MAX, s));
        prop_assert!(s.is_independent(&u).unwrap());
        let sub = subset(!drop, u64::MAX, s);
        let part = s.element_set(u.iter().filter(|&i| sub.contains(i))).unwrap();
        prop_assert!(s.is_independent(&part).unwrap());
        for x in u.iter() {
            prop_assert!(s.is_independent(&u.without(x)).unwrap());
        }
    }

    #[test]
    fn prime_subsets_are_complements_of_subsemigroups(k in 0..5usize, mask in any::<u64>(), keep in any::<u64>()) {
        let s = &pool()[k];
        let u = subset(mask, keep, s);
        if !u.is_empty() {
            prop_assert_eq!(s.is_prime_subset(&u).unwrap(), s.is_closed(&u.complement()));
        }
        let closed = s.closure(&u).unwrap();
        let rest = closed.complement();
        if !rest.is_empty() {
            prop_assert!(s.is_prime_subset(&rest).unwrap());
        }
    }
}

#[test]
fn decomposable_iff_singleton_not_prime() {
    for s in pool() {
        for a in 0..s.size() {
            let single = s.element_set([a]).unwrap();
            assert_eq!(s.is_decomposable(a).unwrap(), !s.is_prime_subset(&single).unwrap());
        }
    }
}

#[test]
fn every_element_of_aplus_is_decomposable_from_degree_two() {
    for n in [2, 3] {
        let a = build_cayley(n, Universe::Aplus).unwrap();
        let s = a.semigroup();
        for x in 0..s.size() {
            assert!(s.is_decomposable(x).unwrap(), "{} at n = {n}", s.label(x));
        }
    }
    let one = build_cayley(1, Universe::Aplus).unwrap();
    assert!((0..3).all(|x| !one.semigroup().is_decomposable(x).unwrap()));
}
