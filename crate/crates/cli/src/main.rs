mod output;
mod universe;

use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::str::FromStr;
use std::time::Duration;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand};
use semigroup_ranks::affine::{parse_expression, Universe};
use semigroup_ranks::ranks::{
    certified_lower_rank_aplus, independent_set_search, large_rank, lower_rank, small_rank,
    smallest_prime_subset, RankError, RankId, RankReport, SearchBudget,
};
use semigroup_ranks::sgp::{write_cache, FiniteSemigroup};
use semigroup_ranks::verify::{verify_degree, Outcome, VerifyOptions};
use serde::Serialize;
use sha2::{Digest, Sha256};

use output::{write_checks, write_reports, Format, RankOutput};
use universe::{default_cache_path, resolve, UniverseSpec};

const EXIT_VERIFY_FAILED: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_INTERNAL: u8 = 3;

/// Ranks of finite semigroups, with affine maps over Brandt semigroups built in.
#[derive(Parser)]
#[command(name = "sgrank", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a Cayley table and write it as an SGP1 cache file.
    Build(BuildArgs),
    /// Compute selected ranks.
    Ranks(RanksArgs),
    /// Run the theorem checklist for one degree.
    Verify(VerifyArgs),
    /// Run one of the underlying searches directly.
    Search(SearchArgs),
    /// Evaluate a composition expression such as "const:1,1 . ns:1,2;[2,1]".
    Element(ElementArgs),
}

#[derive(Args)]
struct TableArgs {
    /// Degree n (number of Brandt indices).
    #[arg(long)]
    n: usize,
    /// aplus | aff | brandt:sym:k | brandt:trivial
    #[arg(long, default_value = "aplus")]
    universe: UniverseSpec,
    /// Allow degree 4 for the affine universes (still capped by table size).
    #[arg(long)]
    extended: bool,
    /// Directory holding cache files.
    #[arg(long, env = "SGP_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
}

#[derive(Args)]
struct BudgetArgs {
    /// Wall-clock budget per search, e.g. 60s, 5m, 500ms.
    #[arg(long, default_value = "60s", value_parser = humantime::parse_duration)]
    budget: Duration,
    /// Node budget per search.
    #[arg(long)]
    max_nodes: Option<u64>,
    /// Worker threads; defaults to the available cores.
    #[arg(long)]
    parallelism: Option<usize>,
}

impl BudgetArgs {
    fn budget(&self) -> anyhow::Result<SearchBudget> {
        let width = match self.parallelism {
            Some(0) => return Err(anyhow!("--parallelism must be positive")),
            Some(p) => p,
            None => std::thread::available_parallelism().map_or(1, |p| p.get()),
        };
        if self.budget.is_zero() || self.max_nodes == Some(0) {
            return Err(anyhow!("budgets must be positive"));
        }
        let mut b = SearchBudget::default().with_max_time(self.budget).with_parallelism(width);
        if let Some(nodes) = self.max_nodes {
            b = b.with_max_nodes(nodes);
        }
        Ok(b)
    }
}

#[derive(Args)]
struct BuildArgs {
    #[command(flatten)]
    table: TableArgs,
    /// Output file; defaults to a name derived from the universe inside the cache directory.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Args)]
struct RanksArgs {
    #[command(flatten)]
    table: TableArgs,
    /// Comma-separated subset of r1,r2,r3,r4,r5,prime.
    #[arg(long, default_value = "r1,r2,r3,r4,r5", value_delimiter = ',')]
    ranks: Vec<RankArg>,
    /// Read the table from this cache file instead of building it.
    #[arg(long)]
    cache: Option<PathBuf>,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    n: usize,
    /// Corrupt one table entry first; the run is then expected to fail.
    #[arg(long)]
    perturb_table: bool,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Args)]
struct SearchArgs {
    #[command(subcommand)]
    kind: SearchKind,
}

#[derive(Subcommand)]
enum SearchKind {
    /// Smallest prime subset (its complement is a largest proper subsemigroup).
    Prime(SearchCommon),
    /// Largest independent set.
    Independent {
        #[command(flatten)]
        common: SearchCommon,
        /// Only count independent sets that also generate.
        #[arg(long)]
        generating: bool,
    },
}

#[derive(Args)]
struct SearchCommon {
    #[command(flatten)]
    table: TableArgs,
    #[arg(long)]
    cache: Option<PathBuf>,
    #[command(flatten)]
    budget: BudgetArgs,
    #[arg(long, value_enum, default_value = "table")]
    format: Format,
}

#[derive(Args)]
struct ElementArgs {
    #[arg(long)]
    n: usize,
    /// Factors separated by " . ", applied left to right.
    expression: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
struct RankArg(RankId);

impl FromStr for RankArg {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        serde_json::from_value(serde_json::Value::String(s.trim().to_string()))
            .map(RankArg)
            .map_err(|_| format!("unknown rank `{s}` (r1..r5, prime)"))
    }
}

struct Failure {
    code: u8,
    error: anyhow::Error,
}

fn usage(error: impl Into<anyhow::Error>) -> Failure {
    Failure { code: EXIT_USAGE, error: error.into() }
}

fn internal(error: impl Into<anyhow::Error>) -> Failure {
    Failure { code: EXIT_INTERNAL, error: error.into() }
}

type Run = Result<ExitCode, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Build(a) => build(a),
        Command::Ranks(a) => ranks(a),
        Command::Verify(a) => verify(a),
        Command::Search(a) => search(a),
        Command::Element(a) => element(a),
    };
    match result {
        Ok(code) => code,
        Err(f) => {
            eprintln!("error: {:#}", f.error);
            ExitCode::from(f.code)
        }
    }
}

#[derive(Serialize)]
struct BuildOutput {
    universe: String,
    n: usize,
    size: usize,
    sha256: String,
    path: PathBuf,
}

fn build(a: BuildArgs) -> Run {
    let t = &a.table;
    let s = t.universe.build(t.n, t.extended).map_err(usage)?;
    let path = match (&a.out, &t.cache_dir) {
        (Some(p), _) => p.clone(),
        (None, dir) => default_cache_path(dir.as_deref().unwrap_or(".".as_ref()), t.universe, t.n),
    };
    if let Some(parent) = path.parent().filter(|p| !p.as_os_str().is_empty()) {
        fs::create_dir_all(parent).with_context(|| format!("creating {}", parent.display())).map_err(internal)?;
    }
    let mut bytes = Vec::new();
    write_cache(&s, &mut bytes).map_err(internal)?;
    fs::write(&path, &bytes).with_context(|| format!("writing {}", path.display())).map_err(internal)?;
    let out = BuildOutput {
        universe: t.universe.to_string(),
        n: t.n,
        size: s.size(),
        sha256: Sha256::digest(&bytes).iter().map(|b| format!("{b:02x}")).collect(),
        path,
    };
    let mut stdout = io::stdout().lock();
    match a.format {
        Format::Json => writeln!(stdout, "{}", serde_json::to_string_pretty(&out).map_err(internal)?),
        _ => writeln!(stdout, "size {}\nsha256 {}\npath {}", out.size, out.sha256, out.path.display()),
    }
    .map_err(internal)?;
    Ok(ExitCode::SUCCESS)
}

fn load(t: &TableArgs, cache: Option<&PathBuf>) -> Result<FiniteSemigroup, Failure> {
    resolve(t.universe, t.n, t.extended, cache.map(PathBuf::as_path), t.cache_dir.as_deref()).map_err(usage)
}

fn compute(rank: RankId, t: &TableArgs, s: &FiniteSemigroup, budget: SearchBudget) -> Result<RankReport, Failure> {
    Ok(match rank {
        RankId::Small => small_rank(s, budget),
        RankId::Lower if t.universe == UniverseSpec::Affine(Universe::Aplus) && t.n >= 3 => {
            certified_lower_rank_aplus(t.n, budget).map_err(|e| match e {
                RankError::CertificationFailure(_) => internal(e),
                other => usage(other),
            })?
        }
        RankId::Lower => lower_rank(s, budget, None),
        RankId::Intermediate => independent_set_search(s, true, budget, None),
        RankId::Upper => independent_set_search(s, false, budget, None),
        RankId::Large => large_rank(s, budget),
        RankId::PrimeSubset => smallest_prime_subset(s, budget),
    })
}

fn emit(t: &TableArgs, s: &FiniteSemigroup, reports: &[RankReport], format: Format) -> Run {
    let data = RankOutput {
        universe: t.universe.to_string(),
        n: t.n,
        size: s.size(),
        reports: reports.iter().map(|r| r.record(s)).collect(),
    };
    write_reports(&mut io::stdout().lock(), format, &data).map_err(internal)?;
    Ok(ExitCode::SUCCESS)
}

fn ranks(a: RanksArgs) -> Run {
    let budget = a.budget.budget().map_err(usage)?;
    let s = load(&a.table, a.cache.as_ref())?;
    let reports = a
        .ranks
        .iter()
        .map(|r| compute(r.0, &a.table, &s, budget))
        .collect::<Result<Vec<_>, _>>()?;
    emit(&a.table, &s, &reports, a.format)
}

fn search(a: SearchArgs) -> Run {
    let (common, rank) = match &a.kind {
        SearchKind::Prime(c) => (c, RankId::PrimeSubset),
        SearchKind::Independent { common, generating: true } => (common, RankId::Intermediate),
        SearchKind::Independent { common, generating: false } => (common, RankId::Upper),
    };
    let budget = common.budget.budget().map_err(usage)?;
    let s = load(&common.table, common.cache.as_ref())?;
    let report = compute(rank, &common.table, &s, budget)?;
    emit(&common.table, &s, &[report], common.format)
}

fn verify(a: VerifyArgs) -> Run {
    let options = VerifyOptions { budget: a.budget.budget().map_err(usage)?, perturb_table: a.perturb_table };
    let checks = verify_degree(a.n, &options).map_err(usage)?;
    write_checks(&mut io::stdout().lock(), a.format, &checks).map_err(internal)?;
    let failed = checks.iter().filter(|c| c.outcome == Outcome::Fail).count();
    if failed > 0 {
        eprintln!("{failed} check(s) failed");
        return Ok(ExitCode::from(EXIT_VERIFY_FAILED));
    }
    Ok(ExitCode::SUCCESS)
}

fn element(a: ElementArgs) -> Run {
    if a.n == 0 {
        return Err(usage(anyhow!("n must be at least 1")));
    }
    match parse_expression(&a.expression, a.n) {
        Ok(f) => {
            println!("{f}");
            Ok(ExitCode::SUCCESS)
        }
        Err(e) => {
            eprintln!("{}\n{}^", a.expression, " ".repeat(a.expression[..e.position].chars().count()));
            Err(usage(anyhow!("at position {}: {}", e.position, e.message)))
        }
    }
}
