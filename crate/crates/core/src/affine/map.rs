use std::fmt;

use crate::brandt::Permutation;

use super::AffineError;

/// A point of the aperiodic Brandt semigroup `Bₙ`: θ or `(i, j)`, 0-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BnPoint {
    Theta,
    Pair(usize, usize),
}

impl BnPoint {
    /// All `n² + 1` points: θ first, then pairs lexicographically.
    pub fn all(n: usize) -> impl Iterator<Item = BnPoint> {
        std::iter::once(BnPoint::Theta)
            .chain((0..n).flat_map(move |i| (0..n).map(move |j| BnPoint::Pair(i, j))))
    }

    pub fn index(self, n: usize) -> usize {
        match self {
            BnPoint::Theta => 0,
            BnPoint::Pair(i, j) => 1 + i * n + j,
        }
    }
}

impl fmt::Display for BnPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BnPoint::Theta => write!(f, "theta"),
            BnPoint::Pair(i, j) => write!(f, "({},{})", i + 1, j + 1),
        }
    }
}

/// A symbolic element of `A⁺(Bₙ)`. All indices are 0-based.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum AffMap {
    /// The constant map at θ.
    Zero,
    /// The constant map at `(p, q)`.
    Constant { p: usize, q: usize },
    /// Sends `(k, l)` to `(p, q)` and everything else to θ.
    Singleton { k: usize, l: usize, p: usize, q: usize },
    /// Sends `(i, p)` to `(iσ, q)` for every `i`, everything else to θ.
    NSupport { p: usize, q: usize, sigma: Permutation },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SupportKind {
    Zero,
    Full,
    Singleton,
    NSupport,
}

/// Support tag and size. A constant at a nonzero point also sends θ
/// somewhere nonzero, so full support has `n² + 1` points.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SupportClass {
    pub kind: SupportKind,
    pub size: usize,
}

impl AffMap {
    pub fn constant(p: usize, q: usize) -> Self {
        AffMap::Constant { p, q }
    }

    pub fn singleton(k: usize, l: usize, p: usize, q: usize) -> Self {
        AffMap::Singleton { k, l, p, q }
    }

    pub fn nsupport(p: usize, q: usize, sigma: Permutation) -> Self {
        AffMap::NSupport { p, q, sigma }
    }

    pub fn apply(&self, x: BnPoint) -> BnPoint {
        match (self, x) {
            (AffMap::Zero, _) => BnPoint::Theta,
            (AffMap::Constant { p, q }, _) => BnPoint::Pair(*p, *q),
            (_, BnPoint::Theta) => BnPoint::Theta,
            (AffMap::Singleton { k, l, p, q }, BnPoint::Pair(i, j)) => {
                if (i, j) == (*k, *l) {
                    BnPoint::Pair(*p, *q)
                } else {
                    BnPoint::Theta
                }
            }
            (AffMap::NSupport { p, q, sigma }, BnPoint::Pair(i, j)) => {
                if j == *p {
                    BnPoint::Pair(sigma.apply(i), *q)
                } else {
                    BnPoint::Theta
                }
            }
        }
    }

    /// `self ∘ other`, acting as `x(f ∘ g) = (xf)g`.
    pub fn compose(&self, other: &AffMap) -> Result<AffMap, AffineError> {
        use AffMap::*;
        Ok(match (self, other) {
            (_, Constant { .. }) | (_, Zero) => other.clone(),
            (Zero, _) => Zero,
            (Constant { p, q }, g) => {
                if let NSupport { sigma, .. } = g {
                    check_index(*p, sigma)?;
                }
                match g.apply(BnPoint::Pair(*p, *q)) {
                    BnPoint::Theta => Zero,
                    BnPoint::Pair(u, v) => Constant { p: u, q: v },
                }
            }
            (NSupport { p, q, sigma }, NSupport { p: p2, q: q2, sigma: s2 }) => {
                let product = sigma.then(s2).map_err(|_| AffineError::DegreeMismatch)?;
                if q == p2 {
                    NSupport { p: *p, q: *q2, sigma: product }
                } else {
                    Zero
                }
            }
            (Singleton { k, l, p, q }, Singleton { k: s, l: t, p: u, q: v }) => {
                if (p, q) == (s, t) {
                    Singleton { k: *k, l: *l, p: *u, q: *v }
                } else {
                    Zero
                }
            }
            (Singleton { k, l, p, q }, NSupport { p: p2, q: q2, sigma }) => {
                check_index(*p, sigma)?;
                if q == p2 {
                    Singleton { k: *k, l: *l, p: sigma.apply(*p), q: *q2 }
                } else {
                    Zero
                }
            }
            (NSupport { p, q, sigma }, Singleton { k: s, l: t, p: u, q: v }) => {
                check_index(*s, sigma)?;
                if q == t {
                    Singleton { k: sigma.inverse().apply(*s), l: *p, p: *u, q: *v }
                } else {
                    Zero
                }
            }
        })
    }

    pub fn support(&self, n: usize) -> SupportClass {
        match self {
            AffMap::Zero => SupportClass { kind: SupportKind::Zero, size: 0 },
            AffMap::Constant { .. } => SupportClass { kind: SupportKind::Full, size: n * n + 1 },
            AffMap::Singleton { .. } => SupportClass { kind: SupportKind::Singleton, size: 1 },
            AffMap::NSupport { .. } => SupportClass { kind: SupportKind::NSupport, size: n },
        }
    }

    pub fn kind(&self) -> SupportKind {
        self.support(0).kind
    }

    /// Checks every index against degree `n`, and rewrites the one
    /// representation clash: for `n = 1` the singleton-support map
    /// `(1,1) ↦ (1,1)` is the identity `(1, 1; id)`.
    pub fn canonical(self, n: usize) -> Result<AffMap, AffineError> {
        let ok = |i: usize| if i < n { Ok(()) } else { Err(AffineError::IndexOutOfRange { index: i + 1, n }) };
        match &self {
            AffMap::Zero => {}
            AffMap::Constant { p, q } => {
                ok(*p)?;
                ok(*q)?;
            }
            AffMap::Singleton { k, l, p, q } => {
                for i in [*k, *l, *p, *q] {
                    ok(i)?;
                }
                if n == 1 {
                    return Ok(AffMap::NSupport { p: 0, q: 0, sigma: Permutation::identity(1) });
                }
            }
            AffMap::NSupport { p, q, sigma } => {
                ok(*p)?;
                ok(*q)?;
                if sigma.degree() != n {
                    return Err(AffineError::DegreeMismatch);
                }
            }
        }
        Ok(self)
    }

    pub fn point_map(&self, n: usize) -> PointMap {
        PointMap {
            n,
            values: BnPoint::all(n).map(|x| self.apply(x)).collect(),
        }
    }
}

fn check_index(i: usize, sigma: &Permutation) -> Result<(), AffineError> {
    if i < sigma.degree() {
        Ok(())
    } else {
        Err(AffineError::DegreeMismatch)
    }
}

impl fmt::Display for AffMap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            AffMap::Zero => write!(f, "zero"),
            AffMap::Constant { p, q } => write!(f, "const:{},{}", p + 1, q + 1),
            AffMap::Singleton { k, l, p, q } => {
                write!(f, "ss:({},{})->({},{})", k + 1, l + 1, p + 1, q + 1)
            }
            AffMap::NSupport { p, q, sigma } => write!(f, "ns:{},{};{}", p + 1, q + 1, sigma),
        }
    }
}

/// A map on `Bₙ` given by its value at every point, in [`BnPoint::all`] order.
///
/// This is the ground-truth representation the closed-form composition
/// rules are checked against.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointMap {
    n: usize,
    values: Vec<BnPoint>,
}

impl PointMap {
    pub fn value(&self, x: BnPoint) -> BnPoint {
        self.values[x.index(self.n)]
    }

    /// Pointwise composition: apply `self`, then `other`.
    pub fn then(&self, other: &PointMap) -> PointMap {
        PointMap {
            n: self.n,
            values: self.values.iter().map(|&x| other.value(x)).collect(),
        }
    }

    pub fn support_size(&self) -> usize {
        self.values.iter().filter(|&&v| v != BnPoint::Theta).count()
    }

    /// Recognizes the map as one of the four symbolic shapes, if it is one.
    pub fn classify(&self) -> Option<AffMap> {
        let n = self.n;
        let at_theta = self.values[0];
        if let BnPoint::Pair(p, q) = at_theta {
            return self
                .values
                .iter()
                .all(|&v| v == at_theta)
                .then_some(AffMap::Constant { p, q });
        }
        let support: Vec<(usize, usize, BnPoint)> = BnPoint::all(n)
            .zip(&self.values)
            .filter(|(_, &v)| v != BnPoint::Theta)
            .map(|(x, &v)| match x {
                BnPoint::Pair(i, j) => (i, j, v),
                BnPoint::Theta => unreachable!("θ maps to θ here"),
            })
            .collect();
        if support.is_empty() {
            return Some(AffMap::Zero);
        }
        if support.len() == n {
            let p = support[0].1;
            let q = match support[0].2 {
                BnPoint::Pair(_, q) => q,
                BnPoint::Theta => unreachable!(),
            };
            let mut images = vec![usize::MAX; n];
            for &(i, j, v) in &support {
                match v {
                    BnPoint::Pair(a, b) if j == p && b == q => images[i] = a,
                    _ => return None,
                }
            }
            if let Ok(sigma) = Permutation::from_images(images) {
                return Some(AffMap::NSupport { p, q, sigma });
            }
        }
        if support.len() == 1 {
            if let (k, l, BnPoint::Pair(p, q)) = support[0] {
                return Some(AffMap::Singleton { k, l, p, q });
            }
        }
        None
    }
}
