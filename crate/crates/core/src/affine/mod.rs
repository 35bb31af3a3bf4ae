//! Symbolic elements of `A⁺(Bₙ)` under composition.
//!
//! Maps act on the right (`x(f ∘ g) = (xf)g`). The element universe is taken
//! from the classification of `A⁺(Bₙ)` into the zero map, the `n²` constants,
//! the `n⁴` singleton-support maps (absent for `n = 1`) and the `n!·n²`
//! `n`-support maps; [`build_cayley`] confirms it is closed under composition.

mod map;
mod parse;

pub use map::{AffMap, BnPoint, PointMap, SupportClass, SupportKind};
pub use parse::{parse_expression, ParseError};

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use thiserror::Error;

use crate::brandt::{BrandtElement, Permutation, SymmetricGroup};
use crate::sgp::{ElementSet, FiniteSemigroup, SgpError};

/// Largest table [`build_cayley`] materializes.
pub const MAX_TABLE_SIZE: usize = 600;
/// Largest `n` built without [`SizeCap::Extended`].
pub const DEFAULT_MAX_DEGREE: usize = 3;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum AffineError {
    #[error("degree mismatch between composed maps")]
    DegreeMismatch,
    #[error("index {index} outside 1..={n}")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("{universe} for n = {n} has {size} elements, over the cap")]
    TooLarge { universe: Universe, n: usize, size: usize },
    #[error("n must be at least 1")]
    ZeroDegree,
    #[error("{product} = {left} ∘ {right} is outside the element catalog")]
    ClassificationViolation { left: String, right: String, product: String },
    #[error("{0} is not an n-support map or the zero map")]
    NotInBrandtPart(String),
    #[error(transparent)]
    Semigroup(#[from] SgpError),
    #[error(transparent)]
    Brandt(#[from] crate::brandt::BrandtError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Universe {
    /// `A⁺(Bₙ)`.
    Aplus,
    /// `Aff(Bₙ)`: `A⁺(Bₙ)` without the singleton-support maps.
    Aff,
}

impl fmt::Display for Universe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Universe::Aplus => "aplus",
            Universe::Aff => "aff",
        })
    }
}

impl FromStr for Universe {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "aplus" => Ok(Universe::Aplus),
            "aff" => Ok(Universe::Aff),
            _ => Err(format!("unknown universe {s:?}")),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SizeCap {
    /// `n ≤ 3`.
    Default,
    /// `n ≤ 4`, still subject to [`MAX_TABLE_SIZE`].
    Extended,
}

fn factorial(n: usize) -> usize {
    (1..=n).product()
}

/// `|A⁺(Bₙ)|` or `|Aff(Bₙ)|` from the classification.
pub fn expected_size(n: usize, universe: Universe) -> usize {
    if n == 1 {
        return 3;
    }
    let base = (factorial(n) + 1) * n * n + 1;
    match universe {
        Universe::Aplus => base + n.pow(4),
        Universe::Aff => base,
    }
}

pub fn enumerate(n: usize, universe: Universe) -> Result<Vec<AffMap>, AffineError> {
    if n == 0 {
        return Err(AffineError::ZeroDegree);
    }
    if n > crate::brandt::MAX_SYMMETRIC_DEGREE || expected_size(n, universe) > MAX_TABLE_SIZE {
        return Err(AffineError::TooLarge {
            universe,
            n,
            size: expected_size(n, universe),
        });
    }
    let mut out = vec![AffMap::Zero];
    for p in 0..n {
        for q in 0..n {
            out.push(AffMap::Constant { p, q });
        }
    }
    if universe == Universe::Aplus && n >= 2 {
        for k in 0..n {
            for l in 0..n {
                for p in 0..n {
                    for q in 0..n {
                        out.push(AffMap::Singleton { k, l, p, q });
                    }
                }
            }
        }
    }
    let perms = Permutation::all(n);
    for p in 0..n {
        for q in 0..n {
            for sigma in &perms {
                out.push(AffMap::NSupport { p, q, sigma: sigma.clone() });
            }
        }
    }
    Ok(out)
}

/// Elements of `A⁺(Bₙ)` in canonical order: zero, constants, singleton-support
/// maps, then `n`-support maps, each block lexicographic.
pub fn enumerate_aplus(n: usize) -> Result<Vec<AffMap>, AffineError> {
    enumerate(n, Universe::Aplus)
}

pub fn enumerate_aff(n: usize) -> Result<Vec<AffMap>, AffineError> {
    enumerate(n, Universe::Aff)
}

/// `A⁺(Bₙ)` or `Aff(Bₙ)` with its composition table.
#[derive(Debug, Clone)]
pub struct AffineSemigroup {
    n: usize,
    universe: Universe,
    elements: Vec<AffMap>,
    index: HashMap<AffMap, usize>,
    semigroup: FiniteSemigroup,
}

pub fn build_cayley(n: usize, universe: Universe) -> Result<AffineSemigroup, AffineError> {
    build_cayley_capped(n, universe, SizeCap::Default)
}

pub fn build_cayley_capped(
    n: usize,
    universe: Universe,
    cap: SizeCap,
) -> Result<AffineSemigroup, AffineError> {
    let max_degree = match cap {
        SizeCap::Default => DEFAULT_MAX_DEGREE,
        SizeCap::Extended => DEFAULT_MAX_DEGREE + 1,
    };
    if n > max_degree {
        return Err(AffineError::TooLarge {
            universe,
            n,
            size: expected_size(n, universe),
        });
    }
    let elements = enumerate(n, universe)?;
    let index: HashMap<AffMap, usize> = elements
        .iter()
        .enumerate()
        .map(|(i, f)| (f.clone(), i))
        .collect();
    let rows = elements
        .par_iter()
        .map(|f| {
            elements
                .iter()
                .map(|g| {
                    let h = f.compose(g)?;
                    index.get(&h).map(|&i| i as u32).ok_or_else(|| {
                        AffineError::ClassificationViolation {
                            left: f.to_string(),
                            right: g.to_string(),
                            product: h.to_string(),
                        }
                    })
                })
                .collect::<Result<Vec<u32>, AffineError>>()
        })
        .collect::<Result<Vec<_>, _>>()?;
    let labels = elements.iter().map(ToString::to_string).collect();
    let semigroup = FiniteSemigroup::new(rows.concat(), labels)?;
    Ok(AffineSemigroup {
        n,
        universe,
        elements,
        index,
        semigroup,
    })
}

impl AffineSemigroup {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn universe(&self) -> Universe {
        self.universe
    }

    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.semigroup
    }

    pub fn elements(&self) -> &[AffMap] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &AffMap {
        &self.elements[i]
    }

    pub fn index_of(&self, f: &AffMap) -> Option<usize> {
        self.index.get(f).copied()
    }

    /// Index set of `maps`; `None` if some map is not in this universe.
    pub fn set_of<'a, I>(&self, maps: I) -> Option<ElementSet>
    where
        I: IntoIterator<Item = &'a AffMap>,
    {
        let idx = maps
            .into_iter()
            .map(|f| self.index_of(f))
            .collect::<Option<Vec<_>>>()?;
        self.semigroup.element_set(idx).ok()
    }

    /// All elements of the given support kind.
    pub fn of_kind(&self, kind: SupportKind) -> ElementSet {
        let mut out = self.semigroup.empty_set();
        for (i, f) in self.elements.iter().enumerate() {
            if f.kind() == kind {
                out.insert(i);
            }
        }
        out
    }

    pub fn zero(&self) -> usize {
        0
    }
}

/// The map `(i, j; σ) ↦ (i, σ, j)`, `ξ_θ ↦ θ` onto `B(Sₙ, n)`.
pub fn to_brandt(f: &AffMap, sym: &SymmetricGroup) -> Result<BrandtElement, AffineError> {
    match f {
        AffMap::Zero => Ok(BrandtElement::Zero),
        AffMap::NSupport { p, q, sigma } => {
            let g = sym.index_of(sigma).ok_or(AffineError::DegreeMismatch)?;
            Ok(BrandtElement::Triple { i: *p, g, j: *q })
        }
        other => Err(AffineError::NotInBrandtPart(other.to_string())),
    }
}
