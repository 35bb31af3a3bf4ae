use itertools::Itertools;

use crate::sgp::{FiniteSemigroup, Witness, WitnessKind};

use super::{Exhausted, Meter, Method, RankId, RankReport, SearchBudget, Status};

/// r₁: one less than the size of a smallest dependent subset, or `|S|` if
/// every subset is independent.
///
/// A finite semigroup with at least two elements that is not a band has
/// r₁ = 1, witnessed by `{a, a²}` for the first non-idempotent `a`. Bands
/// are searched level by level.
pub fn small_rank(s: &FiniteSemigroup, budget: SearchBudget) -> RankReport {
    let meter = Meter::new(budget);
    let m = s.size();
    let report = |value, status, witness, method, note: Option<&str>| RankReport {
        rank: RankId::Small,
        value,
        status,
        witness,
        method,
        elapsed: meter.elapsed(),
        certified_lower: None,
        note: note.map(str::to_string),
    };
    if m == 1 {
        let w = Witness::new(WitnessKind::IndependentSet, s.full_set());
        return report(1, Status::Exact, Some(w), Method::Search, None);
    }
    if let Some(a) = (0..m).find(|&a| !s.is_idempotent(a)) {
        let set = s.element_set([a, s.mul(a, a)]).expect("valid indices");
        let w = Witness::new(WitnessKind::DependentSet, set);
        return report(1, Status::Exact, Some(w), Method::TheoremCertified, Some("not a band"));
    }
    // In a band ⟨a⟩ = {a}, so every pair is independent; start at triples.
    for k in 3..=m {
        match first_dependent(s, k, &meter) {
            Ok(Some(set)) => {
                let w = Witness::new(WitnessKind::DependentSet, set);
                return report(k - 1, Status::Exact, Some(w), Method::Search, None);
            }
            Ok(None) => {}
            Err(Exhausted) => {
                return report(k - 1, Status::LowerBound, None, Method::Search, Some("budget exhausted"));
            }
        }
    }
    let w = Witness::new(WitnessKind::IndependentSet, s.full_set());
    report(m, Status::Exact, Some(w), Method::Search, None)
}

fn first_dependent(
    s: &FiniteSemigroup,
    k: usize,
    meter: &Meter,
) -> Result<Option<crate::sgp::ElementSet>, Exhausted> {
    for combo in (0..s.size()).combinations(k) {
        meter.tick()?;
        let set = s.element_set(combo).expect("valid indices");
        if s.dependent_member(&set).is_some() {
            return Ok(Some(set));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// 2×2 rectangular band: (i,j)(k,l) = (i,l).
    fn rectangular_band() -> FiniteSemigroup {
        let idx = |i: usize, j: usize| (2 * i + j) as u32;
        let table = (0..4)
            .flat_map(|a| (0..4).map(move |b| idx(a / 2, b % 2)))
            .collect();
        FiniteSemigroup::new(table, ["11", "12", "21", "22"].map(String::from).to_vec()).unwrap()
    }

    fn semilattice_chain(m: usize) -> FiniteSemigroup {
        let table = (0..m)
            .flat_map(|a| (0..m).map(move |b| a.min(b) as u32))
            .collect();
        FiniteSemigroup::new(table, (0..m).map(|i| i.to_string()).collect()).unwrap()
    }

    fn right_zero(m: usize) -> FiniteSemigroup {
        let table = (0..m).flat_map(|_| 0..m as u32).collect();
        FiniteSemigroup::new(table, (0..m).map(|i| i.to_string()).collect()).unwrap()
    }

    #[test]
    fn right_zero_semigroup_is_fully_independent() {
        let r = small_rank(&right_zero(4), SearchBudget::default());
        assert_eq!((r.value, r.status), (4, Status::Exact));
    }

    #[test]
    fn chains_are_fully_independent() {
        // xy ∈ {x, y}, so every subset is closed
        let r = small_rank(&semilattice_chain(4), SearchBudget::default());
        assert_eq!((r.value, r.status), (4, Status::Exact));
    }

    #[test]
    fn rectangular_band_has_dependent_triples() {
        let s = rectangular_band();
        let r = small_rank(&s, SearchBudget::default());
        assert_eq!((r.value, r.status), (2, Status::Exact));
        let w = r.witness.unwrap();
        assert_eq!(w.elements.to_vec(), vec![0, 1, 2]);
        assert!(w.holds(&s).unwrap());
    }

    #[test]
    fn non_band_shortcut() {
        let table = vec![1, 0, 0, 1]; // Z_2 with 0 ↔ non-identity
        let s = FiniteSemigroup::new(table, vec!["t".into(), "e".into()]).unwrap();
        let r = small_rank(&s, SearchBudget::default());
        assert_eq!(r.value, 1);
        assert_eq!(r.method, Method::TheoremCertified);
        assert!(r.witness.unwrap().holds(&s).unwrap());
    }

    #[test]
    fn tight_budget_yields_lower_bound() {
        let r = small_rank(&right_zero(6), SearchBudget::default().with_max_nodes(5));
        assert_eq!(r.status, Status::LowerBound);
        assert_eq!(r.value, 2);
    }
}
