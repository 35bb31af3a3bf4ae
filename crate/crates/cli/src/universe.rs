use std::fmt;
use std::fs::File;
use std::io::BufReader;
use std::path::{Path, PathBuf};
use std::str::FromStr;

use anyhow::{anyhow, bail, Context};
use semigroup_ranks::affine::{build_cayley_capped, SizeCap, Universe};
use semigroup_ranks::brandt::{build_brandt, symmetric_group, GroupTable};
use semigroup_ranks::sgp::{read_cache, AssociativityCheck, FiniteSemigroup};

/// `aplus`, `aff`, `brandt:sym:k` or `brandt:trivial`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum UniverseSpec {
    Affine(Universe),
    BrandtSym(usize),
    BrandtTrivial,
}

impl FromStr for UniverseSpec {
    type Err = anyhow::Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "brandt:trivial" => Ok(UniverseSpec::BrandtTrivial),
            _ => match s.strip_prefix("brandt:sym:") {
                Some(k) => Ok(UniverseSpec::BrandtSym(
                    k.parse().map_err(|_| anyhow!("bad symmetric degree `{k}`"))?,
                )),
                None => s
                    .parse::<Universe>()
                    .map(UniverseSpec::Affine)
                    .map_err(|_| anyhow!("unknown universe `{s}` (aplus, aff, brandt:sym:k, brandt:trivial)")),
            },
        }
    }
}

impl fmt::Display for UniverseSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            UniverseSpec::Affine(u) => write!(f, "{u}"),
            UniverseSpec::BrandtSym(k) => write!(f, "brandt:sym:{k}"),
            UniverseSpec::BrandtTrivial => f.write_str("brandt:trivial"),
        }
    }
}

impl UniverseSpec {
    pub fn cache_name(&self, n: usize) -> String {
        format!("{}-n{n}.sgp1", self.to_string().replace(':', "-"))
    }

    /// Builds the Cayley table in memory. Errors here are caller mistakes
    /// (unsupported sizes, bad degrees).
    pub fn build(&self, n: usize, extended: bool) -> anyhow::Result<FiniteSemigroup> {
        let cap = if extended { SizeCap::Extended } else { SizeCap::Default };
        Ok(match *self {
            UniverseSpec::Affine(u) => build_cayley_capped(n, u, cap)?.semigroup().clone(),
            UniverseSpec::BrandtSym(k) => build_brandt(symmetric_group(k)?.table(), n)?.semigroup().clone(),
            UniverseSpec::BrandtTrivial => build_brandt(&GroupTable::trivial(), n)?.semigroup().clone(),
        })
    }
}

pub fn default_cache_path(dir: &Path, spec: UniverseSpec, n: usize) -> PathBuf {
    dir.join(spec.cache_name(n))
}

pub fn load_cache(path: &Path) -> anyhow::Result<FiniteSemigroup> {
    let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
    read_cache(BufReader::new(file), AssociativityCheck::Verify)
        .with_context(|| format!("reading {}", path.display()))
}

/// An explicit cache file wins; otherwise a cache in `dir` is used when present,
/// and the table is built in memory as a last resort.
pub fn resolve(
    spec: UniverseSpec,
    n: usize,
    extended: bool,
    cache: Option<&Path>,
    dir: Option<&Path>,
) -> anyhow::Result<FiniteSemigroup> {
    if let Some(path) = cache {
        return load_cache(path);
    }
    if let Some(path) = dir.map(|d| default_cache_path(d, spec, n)).filter(|p| p.is_file()) {
        let s = load_cache(&path)?;
        let fresh_size = spec.build(n, extended).map(|t| t.size()).ok();
        if fresh_size.is_some_and(|m| m != s.size()) {
            bail!("cache {} does not match {spec} at n = {n}", path.display());
        }
        return Ok(s);
    }
    spec.build(n, extended)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_universes() {
        assert_eq!("aplus".parse::<UniverseSpec>().unwrap(), UniverseSpec::Affine(Universe::Aplus));
        assert_eq!("brandt:sym:3".parse::<UniverseSpec>().unwrap(), UniverseSpec::BrandtSym(3));
        assert_eq!("brandt:trivial".parse::<UniverseSpec>().unwrap().to_string(), "brandt:trivial");
        assert!("brandt:sym:x".parse::<UniverseSpec>().is_err());
        assert!("free".parse::<UniverseSpec>().is_err());
        assert_eq!(UniverseSpec::BrandtSym(2).cache_name(2), "brandt-sym-2-n2.sgp1");
    }
}
