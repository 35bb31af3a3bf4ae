//! Acceptance suite: one PASS/FAIL line per criterion.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::Instant;

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use semigroup_ranks::affine::{build_cayley, to_brandt, AffMap, AffineSemigroup, Universe};
use semigroup_ranks::brandt::{brandt_product, build_brandt, symmetric_group};
use semigroup_ranks::ranks::{
    certified_lower_rank_aplus, independent_set_search, large_rank, lower_rank, small_rank,
    smallest_prime_subset, RankReport, SearchBudget, Status,
};
use semigroup_ranks::sgp::ElementSet;
use semigroup_ranks::verify::{witness_upper_family, witness_x};
use serde::Deserialize;

type Outcome = Result<String, String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl Into<String>) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn budget(width: usize) -> SearchBudget {
    SearchBudget::default().with_parallelism(width)
}

fn aplus(n: usize) -> AffineSemigroup {
    build_cayley(n, Universe::Aplus).expect("buildable")
}

fn exact(r: &RankReport, want: usize, what: &str) -> Result<(), String> {
    ensure(
        r.status == Status::Exact && r.value == want,
        format!("{what}: got {} ({:?}), want {want}", r.value, r.status),
    )
}

fn cardinalities() -> Outcome {
    for (n, u, want) in [
        (1, Universe::Aplus, 3),
        (2, Universe::Aplus, 29),
        (3, Universe::Aplus, 145),
        (2, Universe::Aff, 13),
        (3, Universe::Aff, 64),
    ] {
        let got = build_cayley(n, u).map_err(|e| e.to_string())?.semigroup().size();
        ensure(got == want, format!("|{u}(B_{n})| = {got}, want {want}"))?;
    }
    Ok("3, 29, 145, 13, 64".into())
}

fn oracle_equivalence() -> Outcome {
    let mut pairs = 0;
    for n in 1..=3 {
        let a = aplus(n);
        let maps: Vec<_> = a.elements().iter().map(|f| f.point_map(n)).collect();
        for (i, f) in a.elements().iter().enumerate() {
            for (j, g) in a.elements().iter().enumerate() {
                let closed = f.compose(g).map_err(|e| e.to_string())?;
                let pointwise = maps[i].then(&maps[j]).classify();
                ensure(pointwise.as_ref() == Some(&closed), format!("{f} . {g} at n = {n}"))?;
                ensure(a.index_of(&closed) == Some(a.semigroup().mul(i, j)), "table entry")?;
                pairs += 1;
            }
        }
    }
    Ok(format!("{pairs} pairs, 0 mismatches"))
}

fn isomorphism() -> Outcome {
    for n in 2..=3 {
        let a = aplus(n);
        let sym = symmetric_group(n).map_err(|e| e.to_string())?;
        let brandt = build_brandt(sym.table(), n).map_err(|e| e.to_string())?;
        let part: Vec<&AffMap> =
            a.elements().iter().filter(|f| matches!(f, AffMap::Zero | AffMap::NSupport { .. })).collect();
        let image = |f: &AffMap| to_brandt(f, &sym).map_err(|e| e.to_string());
        let mut seen = vec![false; brandt.semigroup().size()];
        for f in &part {
            let i = brandt.index_of(image(f)?).map_err(|e| e.to_string())?;
            ensure(!seen[i], "not injective")?;
            seen[i] = true;
            for g in &part {
                let lhs = image(&f.compose(g).map_err(|e| e.to_string())?)?;
                let rhs = brandt_product(n, sym.table(), image(f)?, image(g)?).map_err(|e| e.to_string())?;
                ensure(lhs == rhs, format!("{f} . {g}"))?;
            }
        }
        ensure(seen.iter().all(|&b| b), "not surjective")?;
    }
    Ok("onto B(S_2,2) and B(S_3,3)".into())
}

fn small_ranks() -> Outcome {
    for n in 2..=3 {
        exact(&small_rank(aplus(n).semigroup(), budget(4)), 1, &format!("r1 at n = {n}"))?;
    }
    let one = aplus(1);
    let s = one.semigroup();
    let all = [
        small_rank(s, budget(1)),
        lower_rank(s, budget(1), None),
        independent_set_search(s, true, budget(1), None),
        independent_set_search(s, false, budget(1), None),
        large_rank(s, budget(1)),
    ];
    for r in &all {
        exact(r, 3, &format!("{} at n = 1", r.rank.tag()))?;
    }
    Ok("r1 = 1 (n = 2, 3); r1..r5 = 3 (n = 1)".into())
}

fn lower_ranks() -> Outcome {
    let t = Instant::now();
    exact(&lower_rank(aplus(2).semigroup(), budget(4), None), 4, "r2(A+(B_2))")?;
    let two = t.elapsed();
    let t = Instant::now();
    exact(&certified_lower_rank_aplus(3, budget(4)).map_err(|e| e.to_string())?, 6, "r2(A+(B_3))")?;
    Ok(format!("4 in {two:.2?}, 6 certified in {:.2?}", t.elapsed()))
}

fn large_ranks() -> Outcome {
    let t = Instant::now();
    let two = aplus(2);
    exact(&large_rank(two.semigroup(), budget(4)), 28, "r5(A+(B_2))")?;
    let p2 = smallest_prime_subset(two.semigroup(), budget(4)).witness.ok_or("no witness")?;
    ensure(p2.labels(two.semigroup()) == ["ns:1,2;[1,2]", "ns:1,2;[2,1]"], "prime witness at n = 2")?;
    let three = aplus(3);
    let formula = |n: usize| (1..=n).product::<usize>() * n * n + n.pow(4) + 2;
    exact(&large_rank(three.semigroup(), budget(4)), 137, "r5(A+(B_3))")?;
    ensure(formula(3) == 137, "formula")?;
    let p3 = smallest_prime_subset(three.semigroup(), budget(4)).witness.ok_or("no witness")?;
    let constants: Vec<String> = (1..=3).flat_map(|p| (1..=3).map(move |q| format!("const:{p},{q}"))).collect();
    ensure(p3.labels(three.semigroup()) == constants, "prime witness at n = 3")?;
    Ok(format!("28 and 137, witnesses of sizes 2 and 9, {:.2?}", t.elapsed()))
}

fn aff_ranks() -> Outcome {
    for (n, r2, r5) in [(2, 3, 12), (3, 5, 56)] {
        let a = build_cayley(n, Universe::Aff).map_err(|e| e.to_string())?;
        exact(&lower_rank(a.semigroup(), budget(4), None), r2, &format!("r2(Aff(B_{n}))"))?;
        exact(&large_rank(a.semigroup(), budget(4)), r5, &format!("r5(Aff(B_{n}))"))?;
    }
    Ok("r2 = 3, 5; r5 = 12, 56".into())
}

fn bound_witnesses() -> Outcome {
    for n in 2..=3 {
        let a = aplus(n);
        let s = a.semigroup();
        let x = a.set_of(witness_x(n).map_err(|e| e.to_string())?.iter()).ok_or("X outside")?;
        ensure(x.len() == 2 * n, "size of X")?;
        ensure(s.is_independent(&x).unwrap() && s.is_generating(&x).unwrap(), format!("X at n = {n}"))?;
        let fam = a.set_of(witness_upper_family(n).map_err(|e| e.to_string())?.iter()).ok_or("family outside")?;
        ensure(fam.len() == [6, 17][n - 2], "family size")?;
        ensure(s.is_independent(&fam).unwrap(), format!("family at n = {n}"))?;
    }
    Ok("X: 4, 6; upper family: 6, 17".into())
}

#[derive(Deserialize)]
struct Golden {
    value: usize,
    witness: Vec<String>,
}

#[derive(Deserialize)]
struct Goldens {
    r3: Golden,
    r4: Golden,
}

fn exact_intermediate_upper() -> Outcome {
    let goldens: Goldens = serde_json::from_str(include_str!("data/aplus_b2_intermediate_upper.json"))
        .map_err(|e| e.to_string())?;
    let a = aplus(2);
    let s = a.semigroup();
    let r3 = independent_set_search(s, true, budget(4), None);
    let r4 = independent_set_search(s, false, budget(4), None);
    for (r, g) in [(&r3, &goldens.r3), (&r4, &goldens.r4)] {
        exact(r, g.value, r.rank.tag())?;
        ensure(r.witness.as_ref().map(|w| w.labels(s)) == Some(g.witness.clone()), "golden witness")?;
    }
    let chain = [
        small_rank(s, budget(4)).value,
        lower_rank(s, budget(4), None).value,
        r3.value,
        r4.value,
        large_rank(s, budget(4)).value,
    ];
    ensure(4 <= r3.value && r3.value <= r4.value && r4.value >= 6, "bounds")?;
    ensure(chain.windows(2).all(|w| w[0] <= w[1]) && chain[4] == 28, format!("chain {chain:?}"))?;
    Ok(format!("r3 = {}, r4 = {}, chain {chain:?}", r3.value, r4.value))
}

fn properties() -> Outcome {
    let pool: Vec<AffineSemigroup> =
        vec![aplus(2), build_cayley(2, Universe::Aff).unwrap(), build_cayley(3, Universe::Aff).unwrap()];
    let mut runner = TestRunner::new(Config { cases: 256, failure_persistence: None, ..Config::default() });
    let strategy = (0..pool.len(), any::<u64>(), any::<u64>(), any::<u64>());
    runner
        .run(&strategy, |(k, a, b, c)| {
            let s = pool[k].semigroup();
            let pick = |mask: u64| ElementSet::from_indices(s.size(), (0..s.size()).filter(|i| mask >> i & 1 == 1)).unwrap();
            let small = pick(a & b);
            let large = small.union(&pick(c));
            let cs = s.closure(&small).unwrap();
            prop_assert!(small.is_subset(&cs) && s.closure(&cs).unwrap() == cs);
            prop_assert!(cs.is_subset(&s.closure(&large).unwrap()));
            let mut ind = large.clone();
            while let Some(x) = s.dependent_member(&ind) {
                ind.remove(x);
            }
            for x in ind.iter() {
                prop_assert!(s.is_independent(&ind.without(x)).unwrap());
            }
            if !small.is_empty() {
                prop_assert_eq!(s.is_prime_subset(&small).unwrap(), s.is_closed(&small.complement()));
            }
            Ok(())
        })
        .map_err(|e| e.to_string())?;
    for n in 2..=3 {
        let a = aplus(n);
        let s = a.semigroup();
        for x in 0..s.size() {
            ensure(s.is_decomposable(x).unwrap(), format!("{} indecomposable", s.label(x)))?;
            ensure(!s.is_prime_subset(&s.element_set([x]).unwrap()).unwrap(), "singleton prime")?;
        }
    }
    let s = aplus(2);
    let s = s.semigroup();
    let reports = |w: usize| {
        vec![
            small_rank(s, budget(w)).outcome(),
            lower_rank(s, budget(w), None).outcome(),
            independent_set_search(s, true, budget(w), None).outcome(),
            independent_set_search(s, false, budget(w), None).outcome(),
            large_rank(s, budget(w)).outcome(),
        ]
    };
    ensure(reports(1) == reports(4), "reports differ between widths 1 and 4")?;
    let three = aplus(3);
    ensure(
        large_rank(three.semigroup(), budget(1)).outcome() == large_rank(three.semigroup(), budget(4)).outcome(),
        "r5 at n = 3 differs between widths",
    )?;
    Ok("256 random cases; decomposability n = 2, 3; widths 1 and 4 agree".into())
}

fn main() {
    let criteria: [Criterion; 10] = [
        ("cardinalities", cardinalities),
        ("closed-form composition matches pointwise", oracle_equivalence),
        ("isomorphism onto B(S_n, n)", isomorphism),
        ("small ranks", small_ranks),
        ("lower ranks", lower_ranks),
        ("large ranks", large_ranks),
        ("Aff(B_n) ranks", aff_ranks),
        ("bound witnesses", bound_witnesses),
        ("exact r3, r4 at n = 2", exact_intermediate_upper),
        ("property suites", properties),
    ];
    let start = Instant::now();
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|_| Err("panicked".into()));
        match outcome {
            Ok(detail) => println!("PASS {:>2}. {name}: {detail}", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL {:>2}. {name}: {why}", i + 1);
            }
        }
    }
    println!("{} of {} criteria passed in {:.1?}", criteria.len() - failed, criteria.len(), start.elapsed());
    if failed > 0 {
        std::process::exit(1);
    }
}
