//! Permutations, symmetric groups and Brandt semigroups `B(G, n)`.
//!
//! `B(G, n) = ([n] × G × [n]) ∪ {θ}` with `(i, a, j)(k, b, l) = (i, ab, l)`
//! when `j = k` and `θ` otherwise. Indices are stored 0-based and printed
//! 1-based.

mod group;
mod perm;

pub use group::{symmetric_group, GroupTable, SymmetricGroup, MAX_SYMMETRIC_DEGREE};
pub use perm::Permutation;

use std::fmt;

use thiserror::Error;

use crate::sgp::{ElementSet, FiniteSemigroup, SgpError};

/// Largest Brandt semigroup [`build_brandt`] will materialize (`|B(S₄, 4)| = 385`).
pub const MAX_BRANDT_SIZE: usize = 400;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum BrandtError {
    #[error("degree mismatch: {0} vs {1}")]
    DegreeMismatch(usize, usize),
    #[error("degree {0} too large for a permutation")]
    DegreeTooLarge(usize),
    #[error("not a bijection: {0:?}")]
    NotBijection(Vec<usize>),
    #[error("point {point} outside 1..={degree}")]
    PointOutOfRange { point: usize, degree: usize },
    #[error("cannot parse permutation {0:?}")]
    Syntax(String),
    #[error("symmetric group of degree {0} not supported (1..=5)")]
    UnsupportedDegree(usize),
    #[error("not a group: {0}")]
    NotAGroup(String),
    #[error("malformed Brandt element {0:?} for n = {1}")]
    MalformedElement(BrandtElement, usize),
    #[error("B(G, {n}) with |G| = {order} exceeds the size cap")]
    TooLarge { n: usize, order: usize },
    #[error("n must be at least {0}")]
    IndexTooSmall(usize),
    #[error("group generators do not generate the group")]
    NotGenerating,
    #[error(transparent)]
    Semigroup(#[from] SgpError),
}

/// An element of `B(G, n)`: θ or a triple with 0-based row/column indices
/// and a group element index.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BrandtElement {
    Zero,
    Triple { i: usize, g: usize, j: usize },
}

impl BrandtElement {
    fn check(&self, n: usize, group: &GroupTable) -> Result<(), BrandtError> {
        match *self {
            BrandtElement::Triple { i, g, j } if i >= n || j >= n || g >= group.order() => {
                Err(BrandtError::MalformedElement(*self, n))
            }
            _ => Ok(()),
        }
    }
}

pub fn brandt_product(
    n: usize,
    group: &GroupTable,
    x: BrandtElement,
    y: BrandtElement,
) -> Result<BrandtElement, BrandtError> {
    x.check(n, group)?;
    y.check(n, group)?;
    Ok(match (x, y) {
        (BrandtElement::Triple { i, g: a, j }, BrandtElement::Triple { i: k, g: b, j: l }) if j == k => {
            BrandtElement::Triple {
                i,
                g: group.mul(a, b),
                j: l,
            }
        }
        _ => BrandtElement::Zero,
    })
}

/// `B(G, n)` materialized as a [`FiniteSemigroup`].
///
/// Element order: θ first, then triples lexicographic by `(i, g, j)`.
#[derive(Debug, Clone)]
pub struct BrandtSemigroup {
    n: usize,
    group: GroupTable,
    elements: Vec<BrandtElement>,
    semigroup: FiniteSemigroup,
}

pub fn build_brandt(group: &GroupTable, n: usize) -> Result<BrandtSemigroup, BrandtError> {
    if n == 0 {
        return Err(BrandtError::IndexTooSmall(1));
    }
    let order = group.order();
    let size = n
        .checked_mul(n)
        .and_then(|s| s.checked_mul(order))
        .and_then(|s| s.checked_add(1))
        .filter(|&s| s <= MAX_BRANDT_SIZE)
        .ok_or(BrandtError::TooLarge { n, order })?;
    let mut elements = Vec::with_capacity(size);
    elements.push(BrandtElement::Zero);
    for i in 0..n {
        for g in 0..order {
            for j in 0..n {
                elements.push(BrandtElement::Triple { i, g, j });
            }
        }
    }
    let index = |e: BrandtElement| match e {
        BrandtElement::Zero => 0,
        BrandtElement::Triple { i, g, j } => 1 + (i * order + g) * n + j,
    };
    let mut table = Vec::with_capacity(size * size);
    for &x in &elements {
        for &y in &elements {
            table.push(index(brandt_product(n, group, x, y)?) as u32);
        }
    }
    let labels = elements.iter().map(|e| label(group, *e)).collect();
    let semigroup = FiniteSemigroup::new(table, labels)?;
    Ok(BrandtSemigroup {
        n,
        group: group.clone(),
        elements,
        semigroup,
    })
}

fn label(group: &GroupTable, e: BrandtElement) -> String {
    match e {
        BrandtElement::Zero => "theta".to_string(),
        BrandtElement::Triple { i, g, j } => format!("({},{},{})", i + 1, group.label(g), j + 1),
    }
}

impl BrandtSemigroup {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn group(&self) -> &GroupTable {
        &self.group
    }

    pub fn semigroup(&self) -> &FiniteSemigroup {
        &self.semigroup
    }

    pub fn elements(&self) -> &[BrandtElement] {
        &self.elements
    }

    pub fn index_of(&self, e: BrandtElement) -> Result<usize, BrandtError> {
        e.check(self.n, &self.group)?;
        Ok(match e {
            BrandtElement::Zero => 0,
            BrandtElement::Triple { i, g, j } => 1 + (i * self.group.order() + g) * self.n + j,
        })
    }

    pub fn element_set(&self, elems: &[BrandtElement]) -> Result<ElementSet, BrandtError> {
        let idx = elems
            .iter()
            .map(|&e| self.index_of(e))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(self.semigroup.element_set(idx)?)
    }

    pub fn display(&self, e: BrandtElement) -> String {
        label(&self.group, e)
    }
}

impl fmt::Display for BrandtElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BrandtElement::Zero => write!(f, "theta"),
            BrandtElement::Triple { i, g, j } => write!(f, "({},g{},{})", i + 1, g, j + 1),
        }
    }
}

/// The generating set `{(1,g₁,1), …, (1,g_{r−1},1), (1,g_r,2), (2,e,3), …,
/// (n−1,e,n), (n,e,1)}` of `B(G, n)` built from generators `g₁ … g_r` of `G`.
///
/// The result is checked to generate before it is returned.
pub fn garba_generating_set(
    group: &GroupTable,
    group_gens: &[usize],
    n: usize,
) -> Result<Vec<BrandtElement>, BrandtError> {
    if n < 2 {
        return Err(BrandtError::IndexTooSmall(2));
    }
    if group_gens.is_empty() || !group.is_generated_by(group_gens) {
        return Err(BrandtError::NotGenerating);
    }
    let (last, rest) = group_gens.split_last().expect("nonempty");
    let e = group.identity();
    let mut out: Vec<BrandtElement> = rest
        .iter()
        .map(|&g| BrandtElement::Triple { i: 0, g, j: 0 })
        .collect();
    out.push(BrandtElement::Triple { i: 0, g: *last, j: 1 });
    for i in 1..n {
        out.push(BrandtElement::Triple { i, g: e, j: (i + 1) % n });
    }
    let b = build_brandt(group, n)?;
    if !b.semigroup.is_generating(&b.element_set(&out)?)? {
        return Err(BrandtError::NotGenerating);
    }
    Ok(out)
}
