use std::fmt;

use super::BrandtError;

/// A bijection on `{1, …, n}`, stored 0-based.
///
/// Points are written on the left: `apply(i)` is `iσ`, and `a.then(b)` is the
/// permutation `i ↦ (ia)b`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u8>,
}

impl Permutation {
    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u8).collect(),
        }
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self, BrandtError> {
        let n = images.len();
        if n > u8::MAX as usize {
            return Err(BrandtError::DegreeTooLarge(n));
        }
        let mut seen = vec![false; n];
        for &i in &images {
            if i >= n || std::mem::replace(&mut seen[i], true) {
                return Err(BrandtError::NotBijection(
                    images.iter().map(|i| i + 1).collect(),
                ));
            }
        }
        Ok(Permutation {
            images: images.into_iter().map(|i| i as u8).collect(),
        })
    }

    /// From 1-based images, as printed in image-list form.
    pub fn from_one_based(images: &[usize]) -> Result<Self, BrandtError> {
        if images.contains(&0) {
            return Err(BrandtError::NotBijection(images.to_vec()));
        }
        Self::from_images(images.iter().map(|i| i - 1).collect())
    }

    /// From disjoint cycles over 1-based points, e.g. `&[&[1, 2, 3]]` is `(1 2 3)`.
    pub fn from_cycles(degree: usize, cycles: &[&[usize]]) -> Result<Self, BrandtError> {
        let mut images: Vec<usize> = (0..degree).collect();
        let mut touched = vec![false; degree];
        for cycle in cycles {
            for (k, &p) in cycle.iter().enumerate() {
                let q = cycle[(k + 1) % cycle.len()];
                if p == 0 || p > degree || q == 0 || q > degree {
                    return Err(BrandtError::PointOutOfRange { point: p.max(q), degree });
                }
                if std::mem::replace(&mut touched[p - 1], true) {
                    return Err(BrandtError::NotBijection(cycle.to_vec()));
                }
                images[p - 1] = q - 1;
            }
        }
        Self::from_images(images)
    }

    /// The cycle `(1 2 … n)`.
    pub fn long_cycle(degree: usize) -> Self {
        Permutation {
            images: (0..degree).map(|i| ((i + 1) % degree) as u8).collect(),
        }
    }

    /// The transposition `(a b)` on 1-based points.
    pub fn transposition(degree: usize, a: usize, b: usize) -> Result<Self, BrandtError> {
        Self::from_cycles(degree, &[&[a, b]])
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    #[inline]
    pub fn apply(&self, i: usize) -> usize {
        self.images[i] as usize
    }

    pub fn images(&self) -> impl Iterator<Item = usize> + '_ {
        self.images.iter().map(|&i| i as usize)
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// Left-to-right composition: first `self`, then `other`.
    pub fn then(&self, other: &Permutation) -> Result<Permutation, BrandtError> {
        if self.degree() != other.degree() {
            return Err(BrandtError::DegreeMismatch(self.degree(), other.degree()));
        }
        Ok(Permutation {
            images: self.images.iter().map(|&i| other.images[i as usize]).collect(),
        })
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0u8; self.degree()];
        for (i, &j) in self.images.iter().enumerate() {
            images[j as usize] = i as u8;
        }
        Permutation { images }
    }

    /// Parses image-list form `[2,3,1]` or cycle form `(1 2 3)(4 5)`.
    ///
    /// Cycle form needs `degree`; image-list form checks it when given.
    pub fn parse(text: &str, degree: Option<usize>) -> Result<Self, BrandtError> {
        let text = text.trim();
        let bad = || BrandtError::Syntax(text.to_string());
        if let Some(body) = text.strip_prefix('[') {
            let body = body.strip_suffix(']').ok_or_else(bad)?;
            let images = body
                .split(',')
                .filter(|s| !s.trim().is_empty())
                .map(|s| s.trim().parse::<usize>().map_err(|_| bad()))
                .collect::<Result<Vec<_>, _>>()?;
            let p = Self::from_one_based(&images)?;
            if let Some(d) = degree {
                if d != p.degree() {
                    return Err(BrandtError::DegreeMismatch(d, p.degree()));
                }
            }
            Ok(p)
        } else if text.starts_with('(') {
            let degree = degree.ok_or_else(bad)?;
            let mut cycles: Vec<Vec<usize>> = Vec::new();
            let mut rest = text;
            while !rest.is_empty() {
                let body = rest.strip_prefix('(').ok_or_else(bad)?;
                let close = body.find(')').ok_or_else(bad)?;
                let points = body[..close]
                    .split(|c: char| c.is_whitespace() || c == ',')
                    .filter(|s| !s.is_empty())
                    .map(|s| s.parse::<usize>().map_err(|_| bad()))
                    .collect::<Result<Vec<_>, _>>()?;
                if !points.is_empty() {
                    cycles.push(points);
                }
                rest = body[close + 1..].trim_start();
            }
            let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
            Self::from_cycles(degree, &refs)
        } else {
            Err(bad())
        }
    }

    /// All permutations of the given degree in lexicographic order of image lists.
    pub fn all(degree: usize) -> Vec<Permutation> {
        let mut out = Vec::new();
        let mut current: Vec<u8> = (0..degree as u8).collect();
        loop {
            out.push(Permutation {
                images: current.clone(),
            });
            if !next_permutation(&mut current) {
                return out;
            }
        }
    }
}

fn next_permutation(v: &mut [u8]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let Some(i) = (0..v.len() - 1).rev().find(|&i| v[i] < v[i + 1]) else {
        return false;
    };
    let j = (i + 1..v.len()).rev().find(|&j| v[j] > v[i]).unwrap();
    v.swap(i, j);
    v[i + 1..].reverse();
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, i) in self.images.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", i + 1)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}
