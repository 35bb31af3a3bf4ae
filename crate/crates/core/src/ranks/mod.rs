//! The five ranks of a finite semigroup.
//!
//! | rank | meaning                                               |
//! |------|-------------------------------------------------------|
//! | r₁   | largest k such that every k-subset is independent     |
//! | r₂   | smallest generating set                               |
//! | r₃   | largest independent generating set                    |
//! | r₄   | largest independent set                               |
//! | r₅   | smallest k such that every k-subset generates         |
//!
//! Every search is exact when it runs to completion and otherwise degrades
//! to an honest bound ([`Status`]). Witnesses are tie-broken to the
//! lexicographically smallest index sequence so reports do not depend on the
//! number of worker threads.

mod independent;
mod lower;
mod prime;
mod small;

pub use independent::independent_set_search;
pub use lower::{certified_lower_rank_aplus, lower_rank, prime_cover};
pub use prime::{large_rank, smallest_prime_subset};
pub use small::small_rank;

use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::sgp::{FiniteSemigroup, SgpError, Witness};

#[derive(Debug, Error)]
pub enum RankError {
    #[error("certification failed: {0}")]
    CertificationFailure(String),
    #[error("{0}")]
    Domain(String),
    #[error(transparent)]
    Semigroup(#[from] SgpError),
    #[error(transparent)]
    Affine(#[from] crate::affine::AffineError),
    #[error(transparent)]
    Brandt(#[from] crate::brandt::BrandtError),
    #[error(transparent)]
    Verify(#[from] crate::verify::VerifyError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RankId {
    #[serde(rename = "r1")]
    Small,
    #[serde(rename = "r2")]
    Lower,
    #[serde(rename = "r3")]
    Intermediate,
    #[serde(rename = "r4")]
    Upper,
    #[serde(rename = "r5")]
    Large,
    /// Size of a smallest prime subset.
    #[serde(rename = "prime")]
    PrimeSubset,
}

impl RankId {
    pub fn tag(self) -> &'static str {
        match self {
            RankId::Small => "r1",
            RankId::Lower => "r2",
            RankId::Intermediate => "r3",
            RankId::Upper => "r4",
            RankId::Large => "r5",
            RankId::PrimeSubset => "prime",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Exact,
    LowerBound,
    UpperBound,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Search,
    TheoremCertified,
    Formula,
}

#[derive(Debug, Clone)]
pub struct RankReport {
    pub rank: RankId,
    pub value: usize,
    pub status: Status,
    pub witness: Option<Witness>,
    pub method: Method,
    pub elapsed: Duration,
    /// For an upper-bound report, the largest value proven impossible to beat from below.
    pub certified_lower: Option<usize>,
    pub note: Option<String>,
}

impl RankReport {
    pub fn is_exact(&self) -> bool {
        self.status == Status::Exact
    }

    /// Everything except timing, for determinism comparisons.
    pub fn outcome(&self) -> (RankId, usize, Status, Option<Witness>, Method, Option<usize>) {
        (
            self.rank,
            self.value,
            self.status,
            self.witness.clone(),
            self.method,
            self.certified_lower,
        )
    }

    pub fn record(&self, s: &FiniteSemigroup) -> ReportRecord {
        ReportRecord {
            rank: self.rank,
            value: self.value,
            status: self.status,
            witness: self.witness.as_ref().map(|w| w.labels(s)).unwrap_or_default(),
            method: self.method,
            elapsed_ms: self.elapsed.as_millis() as u64,
            certified_lower: self.certified_lower,
            note: self.note.clone(),
        }
    }
}

/// Serialized form of a [`RankReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRecord {
    pub rank: RankId,
    pub value: usize,
    pub status: Status,
    pub witness: Vec<String>,
    pub method: Method,
    pub elapsed_ms: u64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub certified_lower: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

/// Limits for an anytime search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_time: Duration,
    pub max_nodes: u64,
    /// Worker threads.
    pub parallelism: usize,
}

impl Default for SearchBudget {
    fn default() -> Self {
        SearchBudget {
            max_time: Duration::from_secs(3600),
            max_nodes: u64::MAX,
            parallelism: 1,
        }
    }
}

impl SearchBudget {
    pub fn with_parallelism(self, parallelism: usize) -> Self {
        SearchBudget { parallelism, ..self }
    }

    pub fn with_max_time(self, max_time: Duration) -> Self {
        SearchBudget { max_time, ..self }
    }

    pub fn with_max_nodes(self, max_nodes: u64) -> Self {
        SearchBudget { max_nodes, ..self }
    }
}

/// Marker returned when a budget runs out mid-search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub(crate) struct Exhausted;

/// Shared node and time accounting for one search.
pub(crate) struct Meter {
    start: Instant,
    budget: SearchBudget,
    nodes: AtomicU64,
    stopped: AtomicBool,
}

impl Meter {
    pub(crate) fn new(budget: SearchBudget) -> Self {
        Meter {
            start: Instant::now(),
            budget,
            nodes: AtomicU64::new(0),
            stopped: AtomicBool::new(false),
        }
    }

    /// Counts one node. `Err` once the budget is spent.
    pub(crate) fn tick(&self) -> Result<(), Exhausted> {
        if self.stopped.load(Ordering::Relaxed) {
            return Err(Exhausted);
        }
        let k = self.nodes.fetch_add(1, Ordering::Relaxed);
        if k >= self.budget.max_nodes
            || (k.is_multiple_of(512) && self.start.elapsed() > self.budget.max_time)
        {
            self.stopped.store(true, Ordering::Relaxed);
            return Err(Exhausted);
        }
        Ok(())
    }

    pub(crate) fn elapsed(&self) -> Duration {
        self.start.elapsed()
    }

    /// Runs `f` on a pool with the budgeted number of threads.
    pub(crate) fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(self.budget.parallelism.max(1))
            .build()
            .expect("thread pool");
        pool.install(f)
    }
}
