use std::time::Duration;

use semigroup_ranks::affine::{build_cayley, AffMap, Universe};
use semigroup_ranks::brandt::{build_brandt, symmetric_group, Permutation};
use semigroup_ranks::ranks::{
    certified_lower_rank_aplus, independent_set_search, large_rank, lower_rank, small_rank,
    smallest_prime_subset, Method, RankId, RankReport, ReportRecord, SearchBudget, Status,
};
use semigroup_ranks::sgp::{FiniteSemigroup, WitnessKind};
use serde::Deserialize;

#[derive(Deserialize)]
struct Golden {
    value: usize,
    witness: Vec<String>,
}

#[derive(Deserialize)]
struct Goldens {
    n: usize,
    universe: String,
    r3: Golden,
    r4: Golden,
}

fn budget(width: usize) -> SearchBudget {
    SearchBudget::default().with_parallelism(width)
}

fn assert_revalidates(s: &FiniteSemigroup, r: &RankReport) {
    let w = r.witness.as_ref().expect("witness");
    assert!(w.holds(s).unwrap(), "{:?} witness fails its predicate", r.rank);
    if matches!(w.kind, WitnessKind::GeneratingSet | WitnessKind::IndependentGeneratingSet) && r.rank == RankId::Lower {
        for x in w.elements.iter() {
            assert!(!s.is_generating(&w.elements.without(x)).unwrap());
        }
    }
}

#[test]
fn intermediate_and_upper_ranks_of_degree_two_match_goldens() {
    let goldens: Goldens =
        serde_json::from_str(include_str!("data/aplus_b2_intermediate_upper.json")).unwrap();
    assert_eq!((goldens.n, goldens.universe.as_str()), (2, "aplus"));
    let a = build_cayley(2, Universe::Aplus).unwrap();
    let s = a.semigroup();
    for (require_generating, golden) in [(true, &goldens.r3), (false, &goldens.r4)] {
        let r = independent_set_search(s, require_generating, budget(4), None);
        assert_eq!(r.status, Status::Exact);
        assert_eq!(r.value, golden.value);
        assert_eq!(r.witness.as_ref().unwrap().labels(s), golden.witness);
        assert_revalidates(s, &r);
    }
    assert!(4 <= goldens.r3.value && goldens.r3.value <= goldens.r4.value && goldens.r4.value >= 6);
}

#[test]
fn reports_do_not_depend_on_parallelism() {
    let a = build_cayley(2, Universe::Aplus).unwrap();
    let s = a.semigroup();
    let all = |w: usize| {
        vec![
            small_rank(s, budget(w)).outcome(),
            lower_rank(s, budget(w), None).outcome(),
            independent_set_search(s, true, budget(w), None).outcome(),
            independent_set_search(s, false, budget(w), None).outcome(),
            large_rank(s, budget(w)).outcome(),
        ]
    };
    assert_eq!(all(1), all(4));
    let b = build_cayley(3, Universe::Aplus).unwrap();
    assert_eq!(large_rank(b.semigroup(), budget(1)).outcome(), large_rank(b.semigroup(), budget(4)).outcome());
}

#[test]
fn all_exact_witnesses_revalidate() {
    for (n, u) in [(1, Universe::Aplus), (2, Universe::Aplus), (2, Universe::Aff), (3, Universe::Aff)] {
        let a = build_cayley(n, u).unwrap();
        let s = a.semigroup();
        let mut reports = vec![small_rank(s, budget(4)), lower_rank(s, budget(4), None), smallest_prime_subset(s, budget(4))];
        if s.size() <= 29 {
            reports.push(independent_set_search(s, true, budget(4), None));
            reports.push(independent_set_search(s, false, budget(4), None));
        }
        for r in &reports {
            assert!(r.is_exact(), "{n} {u} {:?}", r.rank);
            assert_revalidates(s, r);
        }
    }
}

#[test]
fn smallest_prime_subsets() {
    let labels = |n: usize, u: Universe| {
        let a = build_cayley(n, u).unwrap();
        let r = smallest_prime_subset(a.semigroup(), budget(4));
        assert!(r.is_exact());
        r.witness.unwrap().labels(a.semigroup())
    };
    assert_eq!(labels(2, Universe::Aplus), ["ns:1,2;[1,2]", "ns:1,2;[2,1]"]);
    assert_eq!(labels(2, Universe::Aff), ["ns:1,2;[1,2]", "ns:1,2;[2,1]"]);
    let constants: Vec<String> = (1..=3).flat_map(|p| (1..=3).map(move |q| format!("const:{p},{q}"))).collect();
    assert_eq!(labels(3, Universe::Aplus), constants);
    assert_eq!(labels(3, Universe::Aff), constants);
    // every element of the degree-one reduct is indecomposable; the tie-break picks zero
    assert_eq!(labels(1, Universe::Aplus), ["zero"]);
}

#[test]
fn large_and_lower_ranks_of_aff() {
    for (n, r2, r5) in [(2, 3, 12), (3, 5, 56)] {
        let a = build_cayley(n, Universe::Aff).unwrap();
        let s = a.semigroup();
        assert_eq!(lower_rank(s, budget(4), None).value, r2);
        assert_eq!(large_rank(s, budget(4)).value, r5);
        assert_eq!(small_rank(s, budget(4)).value, 1);
    }
}

#[test]
fn certified_lower_rank() {
    let r = certified_lower_rank_aplus(3, budget(4)).unwrap();
    assert_eq!((r.value, r.status, r.method), (6, Status::Exact, Method::TheoremCertified));
    assert_revalidates(build_cayley(3, Universe::Aplus).unwrap().semigroup(), &r);
    let f = certified_lower_rank_aplus(5, budget(1)).unwrap();
    assert_eq!((f.value, f.method), (8, Method::Formula));
    assert!(certified_lower_rank_aplus(1, budget(1)).is_err());
}

#[test]
fn symmetric_group_intermediate_rank_up_to_degree_four() {
    for n in 2..=4 {
        let sym = symmetric_group(n).unwrap();
        let g = sym.table().as_semigroup();
        let r = independent_set_search(&g, true, budget(4), None);
        assert_eq!((r.value, r.status), (n - 1, Status::Exact), "S_{n}");
    }
}

#[test]
fn brandt_lower_ranks() {
    for (n, want) in [(2, 3), (3, 4), (4, 5)] {
        let sym = symmetric_group(3).unwrap();
        let b = build_brandt(sym.table(), n).unwrap();
        let r = lower_rank(b.semigroup(), budget(4), None);
        assert_eq!((r.value, r.status), (want, Status::Exact), "B(S_3,{n})");
    }
}

#[test]
fn exhausted_budget_reports_bounds() {
    let a = build_cayley(3, Universe::Aplus).unwrap();
    let s = a.semigroup();
    let tight = SearchBudget::default().with_max_nodes(50);
    let r2 = lower_rank(s, tight, None);
    assert_eq!(r2.status, Status::UpperBound);
    assert!(r2.value >= 6 && r2.witness.as_ref().unwrap().holds(s).unwrap());
    let r3 = independent_set_search(s, true, tight, None);
    assert_eq!(r3.status, Status::LowerBound);
    assert!(r3.witness.as_ref().unwrap().holds(s).unwrap());
    let timed = SearchBudget::default().with_max_time(Duration::from_millis(1));
    let r4 = independent_set_search(s, false, timed, None);
    assert!(r4.status == Status::LowerBound && r4.value >= 1);
}

#[test]
fn seeded_upper_search_never_reports_less_than_its_seed() {
    let a = build_cayley(3, Universe::Aplus).unwrap();
    let s = a.semigroup();
    let id = Permutation::identity(3);
    let seed = a.set_of([AffMap::nsupport(0, 0, id.clone()), AffMap::nsupport(1, 1, id)].iter()).unwrap();
    let r = independent_set_search(s, false, SearchBudget::default().with_max_nodes(1), Some(&seed));
    assert!(r.value >= 2);
}

#[test]
fn report_records_round_trip_through_json() {
    let a = build_cayley(2, Universe::Aplus).unwrap();
    let r = large_rank(a.semigroup(), budget(1));
    let record = r.record(a.semigroup());
    let text = serde_json::to_string(&record).unwrap();
    assert!(text.contains("\"rank\":\"r5\"") && text.contains("\"status\":\"exact\""));
    let back: ReportRecord = serde_json::from_str(&text).unwrap();
    assert_eq!(back, record);
}
